#ifndef CRSYM_INTERSECTION_HPP
#define CRSYM_INTERSECTION_HPP

#include "crsym/canonical.hpp"
#include "crsym/linalg.hpp"

namespace crsym {

/// The intersection algebra A = A^o + A^s of matrices alpha with
///   alpha A H^{-1} + A H^{-1} alpha^T = eta  A H^{-1}
///   alpha^T H conj(A) + H conj(A) alpha = eta' H conj(A).
struct IntersectionAlgebra {
    MatrixSubspace full;  // all of A
    MatrixSubspace orth;  // the eta = eta' = 0 slice A^o
    MatrixSubspace scal;  // canonical complement A^s ({I} or {I, sum D_m})
    struct EtaPair {
        GaussianRational eta, eta_prime;
    };
    std::vector<EtaPair> eta_table;  // per basis element of `full`
};

/// Solver route. Throws SpecError when A = 0.
IntersectionAlgebra compute_A(const ExactMatrix& h, const ExactMatrix& a);

/// eta (resp. eta') of one member of A; nullopt if alpha is not in the
/// corresponding conformal algebra.
std::optional<GaussianRational> eta_of(const ExactMatrix& h, const ExactMatrix& a,
                                       const ExactMatrix& alpha);
std::optional<GaussianRational> eta_prime_of(const ExactMatrix& h, const ExactMatrix& a,
                                             const ExactMatrix& alpha);

/// Closed-form basis of A^o assembled block pair by block pair from the
/// canonical-form data; deterministic parameter order (pair (i,j)
/// lexicographic, then Toeplitz degree).
MatrixSubspace closed_form_A_orth(const SymbolSpec& spec);

/// span{I} for non-nilpotent A, span{I, sum_i D_{m_i}} for nilpotent A.
MatrixSubspace scaling_component(const SymbolSpec& spec);

/// For non-nilpotent A: true iff every basis element of `alg.full` has
/// eta = eta'. For nilpotent A the check is vacuous and reports true.
bool check_eta_coupling(const IntersectionAlgebra& alg, const ExactMatrix& a);

}  // namespace crsym

#endif
