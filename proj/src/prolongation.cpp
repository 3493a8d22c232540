#include "crsym/prolongation.hpp"

#include <stdexcept>

namespace crsym {

size_t GradedState::dim(int k) const {
    if (k == -2) return 1;
    if (k == -1) return gm.w.rows();
    if (k == 0) return g0.size();
    size_t kk = static_cast<size_t>(k);
    if (kk <= positive.size()) return positive[kk - 1].size();
    throw std::logic_error("GradedState::dim: component not computed yet");
}

GradedState make_graded_state(const HeisenbergSpace& gm, const std::vector<ExactMatrix>& g0) {
    GradedState st;
    st.gm = gm;
    st.g0 = g0;
    st.g0_weights.reserve(g0.size());
    for (const auto& m : g0) {
        auto wt = csp_weight(m, gm.w);
        if (!wt) throw SpecError("make_graded_state: g0 element is not conformal symplectic");
        st.g0_weights.push_back(*wt);
    }
    return st;
}

namespace {

/// Coordinates of [x, e_a] for x the t-th basis element of g_j (j >= 0),
/// as a column of g_{j-1}-coordinates.
ExactMatrix action_column(const GradedState& st, size_t j, size_t t, size_t a) {
    size_t n2 = st.gm.w.rows();
    if (j == 0) {
        ExactMatrix col(n2, 1);
        const ExactMatrix& m = st.g0[t];
        for (size_t r = 0; r < n2; ++r) col.at(r, 0) = m.at(r, a);
        return col;
    }
    const auto& f = st.positive[j - 1][t].f;
    ExactMatrix col(f.rows(), 1);
    for (size_t r = 0; r < f.rows(); ++r) col.at(r, 0) = f.at(r, a);
    return col;
}

/// Coordinates of [x, z] for x the t-th basis element of g_j (j >= 0), as a
/// column of g_{j-2}-coordinates.
ExactMatrix z_column(const GradedState& st, size_t j, size_t t) {
    if (j == 0) {
        ExactMatrix col(1, 1);
        col.at(0, 0) = st.g0_weights[t];
        return col;
    }
    return st.positive[j - 1][t].u;
}

}  // namespace

size_t prolong_step(GradedState& state) {
    const size_t k = state.computed_up_to() + 1;
    const size_t n2 = state.gm.w.rows();
    const size_t dkm1 = state.dim(static_cast<int>(k) - 1);
    const size_t dkm2 = state.dim(static_cast<int>(k) - 2);
    const size_t dkm3 = (k == 1) ? 1 : state.dim(static_cast<int>(k) - 3);
    const size_t nunk = n2 * dkm1 + dkm2;
    const ExactMatrix& w = state.gm.w;

    // unknown layout: F[r, a] at a*dkm1 + r, then u[q] at n2*dkm1 + q
    auto fpos = [&](size_t r, size_t a) { return a * dkm1 + r; };
    auto upos = [&](size_t q) { return n2 * dkm1 + q; };

    size_t pair_rows = (n2 * (n2 - 1) / 2) * dkm2;
    size_t z_rows = n2 * dkm3;
    ExactMatrix sys(pair_rows + z_rows, nunk);
    size_t row = 0;

    // (a) pairs of g_{-1} basis vectors:
    //     W_ab * phi(z) = [phi(e_a), e_b] - [phi(e_b), e_a]  in g_{k-2}
    for (size_t a = 0; a < n2; ++a) {
        for (size_t b = a + 1; b < n2; ++b) {
            std::vector<ExactMatrix> act_b(dkm1), act_a(dkm1);
            for (size_t r = 0; r < dkm1; ++r) {
                act_b[r] = action_column(state, k - 1, r, b);
                act_a[r] = action_column(state, k - 1, r, a);
            }
            for (size_t q = 0; q < dkm2; ++q) {
                if (!w.at(a, b).is_zero()) sys.at(row, upos(q)) = w.at(a, b);
                for (size_t r = 0; r < dkm1; ++r) {
                    sys.at(row, fpos(r, a)) -= act_b[r].at(q, 0);
                    sys.at(row, fpos(r, b)) += act_a[r].at(q, 0);
                }
                ++row;
            }
        }
    }

    // (b) mixed pairs (e_a, z): 0 = [phi(e_a), z] - [phi(z), e_a]  in g_{k-3}
    for (size_t a = 0; a < n2; ++a) {
        if (k == 1) {
            // [phi(e_a), z] = weight(phi(e_a)) z ; [phi(z), e_a] = (u^T W e_a) z
            for (size_t r = 0; r < dkm1; ++r)
                sys.at(row, fpos(r, a)) = state.g0_weights[r];
            for (size_t q = 0; q < dkm2; ++q) sys.at(row, upos(q)) -= w.at(q, a);
            ++row;
        } else {
            std::vector<ExactMatrix> zc(dkm1);
            for (size_t r = 0; r < dkm1; ++r) zc[r] = z_column(state, k - 1, r);
            std::vector<ExactMatrix> act_u(dkm2);
            for (size_t q = 0; q < dkm2; ++q) act_u[q] = action_column(state, k - 2, q, a);
            for (size_t p = 0; p < dkm3; ++p) {
                for (size_t r = 0; r < dkm1; ++r) sys.at(row, fpos(r, a)) += zc[r].at(p, 0);
                for (size_t q = 0; q < dkm2; ++q) sys.at(row, upos(q)) -= act_u[q].at(p, 0);
                ++row;
            }
        }
    }

    MatrixSubspace ker = kernel(sys);
    std::vector<GradedState::Positive> basis;
    basis.reserve(ker.dim());
    for (const auto& v : ker.basis()) {
        GradedState::Positive el{ExactMatrix(dkm1, n2), ExactMatrix(dkm2, 1)};
        for (size_t a = 0; a < n2; ++a)
            for (size_t r = 0; r < dkm1; ++r) el.f.at(r, a) = v.at(fpos(r, a), 0);
        for (size_t q = 0; q < dkm2; ++q) el.u.at(q, 0) = v.at(upos(q), 0);
        basis.push_back(std::move(el));
    }
    state.positive.push_back(std::move(basis));
    return state.positive.back().size();
}

bool leibniz_holds(const GradedState& state, size_t k) {
    if (k < 1 || k > state.computed_up_to()) return false;
    const size_t n2 = state.gm.w.rows();
    const size_t dkm1 = state.dim(static_cast<int>(k) - 1);
    const size_t dkm2 = state.dim(static_cast<int>(k) - 2);
    const ExactMatrix& w = state.gm.w;

    auto eval_action = [&](const ExactMatrix& coeff, size_t j, size_t a) {
        size_t dj1 = state.dim(static_cast<int>(j) - 1);
        ExactMatrix out(dj1, 1);
        for (size_t t = 0; t < coeff.rows(); ++t) {
            if (coeff.at(t, 0).is_zero()) continue;
            out += coeff.at(t, 0) * action_column(state, j, t, a);
        }
        return out;
    };
    auto eval_z = [&](const ExactMatrix& coeff, size_t j) {
        size_t dj2 = state.dim(static_cast<int>(j) - 2);
        ExactMatrix out(dj2, 1);
        for (size_t t = 0; t < coeff.rows(); ++t) {
            if (coeff.at(t, 0).is_zero()) continue;
            out += coeff.at(t, 0) * z_column(state, j, t);
        }
        return out;
    };

    for (const auto& el : state.positive[k - 1]) {
        for (size_t a = 0; a < n2; ++a) {
            ExactMatrix fa = el.f.block(0, a, dkm1, 1);
            for (size_t b = a + 1; b < n2; ++b) {
                ExactMatrix fb = el.f.block(0, b, dkm1, 1);
                ExactMatrix lhs = w.at(a, b) * el.u;
                ExactMatrix rhs = eval_action(fa, k - 1, b) - eval_action(fb, k - 1, a);
                if (lhs != rhs) return false;
            }
            // mixed pair with z
            if (k == 1) {
                GaussianRational wt;
                for (size_t r = 0; r < dkm1; ++r) wt += fa.at(r, 0) * state.g0_weights[r];
                GaussianRational uz;
                for (size_t q = 0; q < dkm2; ++q) uz += el.u.at(q, 0) * w.at(q, a);
                if (wt != uz) return false;
            } else {
                ExactMatrix lhs = eval_z(fa, k - 1);
                ExactMatrix rhs = eval_action(el.u, k - 2, a);
                if (lhs != rhs) return false;
            }
        }
    }
    return true;
}

ProlongationReport universal(const HeisenbergSpace& gm, const std::vector<ExactMatrix>& g0,
                             size_t k_max) {
    if (k_max < 1) throw std::invalid_argument("universal: k_max must be >= 1");
    GradedState st = make_graded_state(gm, g0);
    ProlongationReport rep;
    rep.g_minus_dim = gm.w.rows() + 1;
    rep.dims.push_back(st.dim(0));
    if (st.dim(0) == 0) rep.first_zero = 0;
    for (size_t k = 1; k <= k_max && !rep.first_zero; ++k) {
        size_t d = prolong_step(st);
        rep.dims.push_back(d);
        if (d == 0) rep.first_zero = k;
    }
    if (rep.first_zero) {
        // vanishing persistence: one more component, asserted zero
        size_t next = prolong_step(st);
        if (next != 0)
            throw std::logic_error("universal: component after the first zero is nonzero");
        size_t total = rep.g_minus_dim;
        for (size_t d : rep.dims) total += d;
        rep.universal_dim = total;
    }
    return rep;
}

bool first_prolongation_vanishes(const ExactMatrix& h, const ExactMatrix& a,
                                 const ReducedDatum& datum) {
    ReducedSymbol rs = build_g0_red(h, a, datum);
    GradedState st = make_graded_state(rs.space, rs.generators);
    return prolong_step(st) == 0;
}

}  // namespace crsym
