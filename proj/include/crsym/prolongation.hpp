#ifndef CRSYM_PROLONGATION_HPP
#define CRSYM_PROLONGATION_HPP

#include <optional>

#include "crsym/reduced.hpp"
#include "crsym/symbol.hpp"

namespace crsym {

/// Graded components: g_{-2} = C z, g_{-1} = C^{2n-2} with bracket W,
/// g_0 a list of csp matrices acting by matrix multiplication on g_{-1} and by
/// conformal weight on g_{-2}, and positive components stored in coordinates:
/// an element of g_k (k >= 1) is a pair (F, u) where column a of F holds the
/// g_{k-1}-coordinates of phi(e_a) and u holds the g_{k-2}-coordinates of
/// phi(z).
struct GradedState {
    HeisenbergSpace gm;
    std::vector<ExactMatrix> g0;
    std::vector<GaussianRational> g0_weights;

    struct Positive {
        ExactMatrix f;  // dim g_{k-1} x (2n-2)
        ExactMatrix u;  // dim g_{k-2} x 1
    };
    std::vector<std::vector<Positive>> positive;

    size_t dim(int k) const;  // k >= -2
    size_t computed_up_to() const { return positive.size(); }
};

/// Build a state; throws SpecError if some g0 element is not conformal
/// symplectic for gm.w.
GradedState make_graded_state(const HeisenbergSpace& gm, const std::vector<ExactMatrix>& g0);

/// Compute the next component (degree computed_up_to()+1) as the kernel of the
/// Leibniz system and append it to the state. Returns its dimension.
size_t prolong_step(GradedState& state);

/// Re-evaluate the Leibniz identities for the basis of component k (k >= 1);
/// exactness check used by the property suite.
bool leibniz_holds(const GradedState& state, size_t k);

struct ProlongationReport {
    size_t g_minus_dim = 0;            // 2n-1
    std::vector<size_t> dims;          // dim g_k for k = 0..k_stop
    std::optional<size_t> first_zero;  // minimal k with dim g_k = 0
    std::optional<size_t> universal_dim;  // finite iff first_zero reached
};

/// Iterate prolong_step until a component vanishes or k_max is exhausted.
/// After the first vanishing component one more step is computed and asserted
/// zero (vanishing persistence).
ProlongationReport universal(const HeisenbergSpace& gm, const std::vector<ExactMatrix>& g0,
                             size_t k_max);

/// Builds g_0^red for the datum, runs one prolongation step, tests dim g_1 == 0.
bool first_prolongation_vanishes(const ExactMatrix& h, const ExactMatrix& a,
                                 const ReducedDatum& datum);

}  // namespace crsym

#endif
