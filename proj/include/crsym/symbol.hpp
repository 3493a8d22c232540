#ifndef CRSYM_SYMBOL_HPP
#define CRSYM_SYMBOL_HPP

#include "crsym/canonical.hpp"
#include "crsym/linalg.hpp"

namespace crsym {

/// The Heisenberg algebra g_- in the basis e_1..e_{2n-2}: the first n-1 span
/// g_{-1,1}, the last n-1 span g_{-1,-1}, and [e_a, e_b] = W_{ab} z for the
/// fixed generator z of g_{-2}.
struct HeisenbergSpace {
    size_t n = 0;   // ambient CR dimension; dim g_{-1} = 2(n-1)
    ExactMatrix w;  // antisymmetric nondegenerate (2n-2)x(2n-2)

    size_t half() const { return n - 1; }
    /// Heisenberg bracket coefficient: [u, v] = (u^T W v) z.
    GaussianRational bracket(const ExactMatrix& u, const ExactMatrix& v) const;
};

/// Element of the conformal symplectic algebra: M^T W + W M = weight * W.
struct CspElement {
    ExactMatrix matrix;
    GaussianRational weight;
};

/// Conformal weight of m with respect to w, if m is in csp.
std::optional<GaussianRational> csp_weight(const ExactMatrix& m, const ExactMatrix& w);

/// Build g_- from a validated H. The sign/transpose convention of W is pinned
/// by the requirement that the X_plus / X_minus matrices are conformal
/// symplectic of weight 0; a convention bug aborts via std::logic_error.
HeisenbergSpace build_g_minus(const ExactMatrix& h, const ExactMatrix& a);

/// X_plus = [[0, A], [0, 0]] as a weight-0 csp element.
CspElement build_x_plus(const HeisenbergSpace& gm, const ExactMatrix& a);

/// Involution on matrices of csp(g_{-1}): Sigma * conj(M) * Sigma with the
/// block swap Sigma = [[0, I], [I, 0]].
ExactMatrix involution(const ExactMatrix& m);
CspElement involution(const HeisenbergSpace& gm, const CspElement& e);

/// g_{0,0}: block-diagonal csp elements v with [v, X_pm] in span{X_pm}.
MatrixSubspace compute_g00(const ExactMatrix& h, const ExactMatrix& a);

struct CRSymbol {
    SymbolSpec spec;
    ExactMatrix h, a;
    HeisenbergSpace space;
    CspElement x_plus, x_minus;
    MatrixSubspace g00;
};

CRSymbol assemble_symbol(const SymbolSpec& spec);

/// True iff [X_plus, X_minus] is a member of g00 (the symbol closes into a
/// Lie algebra); equivalent to regularity of (H, A).
bool is_lie_algebra(const CRSymbol& sym);

}  // namespace crsym

#endif
