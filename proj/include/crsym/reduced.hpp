#ifndef CRSYM_REDUCED_HPP
#define CRSYM_REDUCED_HPP

#include "crsym/intersection.hpp"
#include "crsym/symbol.hpp"

namespace crsym {

/// Candidate datum (Omega, A0, {eta_alpha}, mu) for a reduced modified symbol.
struct ReducedDatum {
    ExactMatrix omega;
    MatrixSubspace a0;
    std::vector<GaussianRational> eta;  // one per a0 basis element
    GaussianRational mu;
};

/// sigma-tilde: alpha -> conj(H)^{-1} alpha^* conj(H).
ExactMatrix sigma_tilde(const ExactMatrix& h, const ExactMatrix& alpha);

/// Datum invariants: a0 inside the intersection algebra, commutator-closed,
/// invariant under sigma_tilde, eta table consistent with item (i).
bool validate_datum(const ExactMatrix& h, const ExactMatrix& a, const ReducedDatum& datum);

struct SystemReport {
    bool i = false, ii = false, iii = false, iv = false;
    bool all() const { return i && ii && iii && iv; }
};

/// Exact check of the four-relation system.
SystemReport verify_system(const ExactMatrix& h, const ExactMatrix& a, const ReducedDatum& datum);

/// Solution space of relation (iii) in the unknowns (Omega, mu).
AugmentedSolution solve_omega(const ExactMatrix& h, const ExactMatrix& a);

struct ReducedSymbol {
    ExactMatrix h, a;
    HeisenbergSpace space;
    ReducedDatum datum;
    CspElement x_plus, x_minus;          // the Xzero2 generators for Omega
    std::vector<ExactMatrix> generators;  // x_plus, x_minus, I, then the A0 part
    MatrixSubspace g0red;
};

/// Matrix model of g_0^red; throws SpecError when verify_system fails.
ReducedSymbol build_g0_red(const ExactMatrix& h, const ExactMatrix& a, const ReducedDatum& datum);

/// The five properties of the splitting, each as an exact subspace assertion.
struct SplittingReport {
    bool red00_in_g00 = false;    // (1)
    bool conj_pair = false;       // (2) X_- = involution(X_+)
    bool projection_iso = false;  // (3)
    bool sigma_invariant = false; // (4)
    bool subalgebra = false;      // (5)
    bool all() const {
        return red00_in_g00 && conj_pair && projection_iso && sigma_invariant && subalgebra;
    }
};
SplittingReport splitting_report(const ReducedSymbol& rs);

struct SearchOptions {
    size_t limit = 20000;     // max candidate data evaluated
    size_t max_found = 3;     // stop after this many verified data
    bool try_full = true;     // include A0 = A (the full intersection algebra)
    std::vector<MatrixSubspace> user_a0;  // extra user-supplied candidates
};

/// Bounded search: Omega over a finite sub-lattice of the joint solution
/// space of (iii) and the linearized (ii), A0 over {A^o, A, user-supplied}.
/// Exhaustiveness is not claimed; an empty result is a legitimate outcome.
std::vector<ReducedDatum> search(const SymbolSpec& spec, const SearchOptions& options);

}  // namespace crsym

#endif
