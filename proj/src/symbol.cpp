#include "crsym/symbol.hpp"

#include <stdexcept>

namespace crsym {

GaussianRational HeisenbergSpace::bracket(const ExactMatrix& u, const ExactMatrix& v) const {
    ExactMatrix r = u.transpose() * w * v;
    return r.at(0, 0);
}

std::optional<GaussianRational> csp_weight(const ExactMatrix& m, const ExactMatrix& w) {
    ExactMatrix e = m.transpose() * w + w * m;
    return proportionality_ratio(w, e);
}

namespace {

ExactMatrix make_w(const ExactMatrix& h, bool transpose_choice) {
    size_t n1 = h.rows();
    ExactMatrix w(2 * n1, 2 * n1);
    GaussianRational i = GaussianRational::i();
    ExactMatrix upper = transpose_choice ? h.transpose() : h;
    w.set_block(0, n1, i * upper);
    w.set_block(n1, 0, -(i * upper).transpose());
    return w;
}

ExactMatrix embed_x_plus(const ExactMatrix& a) {
    size_t n1 = a.rows();
    ExactMatrix x(2 * n1, 2 * n1);
    x.set_block(0, n1, a);
    return x;
}

bool weight_zero(const ExactMatrix& m, const ExactMatrix& w) {
    auto wt = csp_weight(m, w);
    return wt && wt->is_zero();
}

}  // namespace

HeisenbergSpace build_g_minus(const ExactMatrix& h, const ExactMatrix& a) {
    PairDiagnostic d = validate_pair(h, a);
    if (!d.ok) throw SpecError("build_g_minus: invalid pair: " + d.message);
    size_t n1 = h.rows();
    ExactMatrix xp = embed_x_plus(a);
    ExactMatrix xm = involution(xp);
    for (bool choice : {false, true}) {
        ExactMatrix w = make_w(h, choice);
        if (weight_zero(xp, w) && weight_zero(xm, w)) {
            HeisenbergSpace gm;
            gm.n = n1 + 1;
            gm.w = std::move(w);
            return gm;
        }
    }
    throw std::logic_error("build_g_minus: W convention pinning failed; neither "
                           "transpose choice makes the X_pm matrices weight-0");
}

CspElement build_x_plus(const HeisenbergSpace& gm, const ExactMatrix& a) {
    ExactMatrix x = embed_x_plus(a);
    auto wt = csp_weight(x, gm.w);
    if (!wt) throw std::logic_error("build_x_plus: X_plus is not conformal symplectic");
    return {std::move(x), *wt};
}

ExactMatrix involution(const ExactMatrix& m) {
    if (!m.is_square() || m.rows() % 2 != 0)
        throw std::invalid_argument("involution: need even-dimensional square matrix");
    size_t n1 = m.rows() / 2;
    ExactMatrix sigma(2 * n1, 2 * n1);
    sigma.set_block(0, n1, ExactMatrix::identity(n1));
    sigma.set_block(n1, 0, ExactMatrix::identity(n1));
    return sigma * m.conj() * sigma;
}

CspElement involution(const HeisenbergSpace& gm, const CspElement& e) {
    ExactMatrix m = involution(e.matrix);
    auto wt = csp_weight(m, gm.w);
    if (!wt) throw std::logic_error("involution: image left csp");
    // weight conjugates under the involution
    return {std::move(m), *wt};
}

MatrixSubspace compute_g00(const ExactMatrix& h, const ExactMatrix& a) {
    HeisenbergSpace gm = build_g_minus(h, a);
    size_t n1 = h.rows();
    size_t nn = 2 * n1;
    ExactMatrix w = gm.w;
    ExactMatrix xp = embed_x_plus(a);
    ExactMatrix xm = involution(xp);

    std::vector<LinearCondition> conds;
    // conformal symplectic with scalar weight
    conds.push_back({[w](const ExactMatrix& v) { return v.transpose() * w + w * v; }, w});
    // normalize the lines g_{0,+-2}
    conds.push_back({[xp](const ExactMatrix& v) { return commutator(v, xp); }, xp});
    conds.push_back({[xm](const ExactMatrix& v) { return commutator(v, xm); }, xm});
    // bigrading: v preserves g_{-1,1} and g_{-1,-1}
    conds.push_back({[n1, nn](const ExactMatrix& v) {
                         ExactMatrix off(nn, nn);
                         off.set_block(0, n1, v.block(0, n1, n1, n1));
                         off.set_block(n1, 0, v.block(n1, 0, n1, n1));
                         return off;
                     },
                     std::nullopt});
    AugmentedSolution sol = solve_with_scalars(nn, nn, conds);
    return sol.projected();
}

CRSymbol assemble_symbol(const SymbolSpec& spec) {
    auto [h, a] = build_pair(spec);
    CRSymbol sym;
    sym.spec = spec;
    sym.space = build_g_minus(h, a);
    sym.x_plus = build_x_plus(sym.space, a);
    sym.x_minus = involution(sym.space, sym.x_plus);
    sym.g00 = compute_g00(h, a);
    sym.h = std::move(h);
    sym.a = std::move(a);
    return sym;
}

bool is_lie_algebra(const CRSymbol& sym) {
    ExactMatrix c = commutator(sym.x_plus.matrix, sym.x_minus.matrix);
    return sym.g00.contains(c);
}

}  // namespace crsym
