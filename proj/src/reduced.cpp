#include "crsym/reduced.hpp"

#include <stdexcept>

namespace crsym {

ExactMatrix sigma_tilde(const ExactMatrix& h, const ExactMatrix& alpha) {
    ExactMatrix hb = h.conj();
    return hb.inverse() * alpha.conj_transpose() * hb;
}

bool validate_datum(const ExactMatrix& h, const ExactMatrix& a, const ReducedDatum& datum) {
    if (datum.eta.size() != datum.a0.dim()) return false;
    const auto& basis = datum.a0.basis();
    for (size_t k = 0; k < basis.size(); ++k) {
        auto e = eta_of(h, a, basis[k]);
        auto ep = eta_prime_of(h, a, basis[k]);
        if (!e || !ep) return false;  // not even in the intersection algebra
        if (*e != datum.eta[k]) return false;
        if (!datum.a0.contains(sigma_tilde(h, basis[k]))) return false;
        for (const auto& other : basis)
            if (!datum.a0.contains(commutator(basis[k], other))) return false;
    }
    return true;
}

SystemReport verify_system(const ExactMatrix& h, const ExactMatrix& a, const ReducedDatum& datum) {
    if (datum.omega.rows() != h.rows() || datum.omega.cols() != h.cols())
        throw std::invalid_argument("verify_system: Omega shape mismatch");
    SystemReport rep;
    ExactMatrix ah = a * h.inverse();
    ExactMatrix ha = h * a.conj();
    const auto& basis = datum.a0.basis();

    rep.i = true;
    rep.ii = true;
    for (size_t k = 0; k < basis.size(); ++k) {
        const ExactMatrix& al = basis[k];
        if (al * ah + ah * al.transpose() != datum.eta[k] * ah) rep.i = false;
        ExactMatrix lhs = commutator(al, datum.omega) - datum.eta[k] * datum.omega;
        if (!datum.a0.contains(lhs)) rep.ii = false;
    }

    rep.iii = (datum.omega.transpose() * ha + ha * datum.omega == datum.mu * ha);

    ExactMatrix st = sigma_tilde(h, datum.omega);
    ExactMatrix expr = commutator(st, datum.omega) + a * a.conj() -
                       datum.mu.conj() * datum.omega - datum.mu * st;
    rep.iv = datum.a0.contains(expr);
    return rep;
}

AugmentedSolution solve_omega(const ExactMatrix& h, const ExactMatrix& a) {
    size_t n1 = h.rows();
    ExactMatrix ha = h * a.conj();
    std::vector<LinearCondition> conds;
    conds.push_back(
        {[ha](const ExactMatrix& om) { return om.transpose() * ha + ha * om; }, ha});
    return solve_with_scalars(n1, n1, conds);
}

ReducedSymbol build_g0_red(const ExactMatrix& h, const ExactMatrix& a, const ReducedDatum& datum) {
    SystemReport rep = verify_system(h, a, datum);
    if (!rep.all())
        throw SpecError("build_g0_red: datum fails the system of relations");
    size_t n1 = h.rows();
    ReducedSymbol rs;
    rs.h = h;
    rs.a = a;
    rs.datum = datum;
    rs.space = build_g_minus(h, a);

    ExactMatrix hinv = h.inverse();
    ExactMatrix xp(2 * n1, 2 * n1);
    xp.set_block(0, 0, datum.omega);
    xp.set_block(0, n1, a);
    xp.set_block(n1, n1, -(hinv * datum.omega.transpose() * h));
    auto wt = csp_weight(xp, rs.space.w);
    if (!wt || !wt->is_zero())
        throw std::logic_error("build_g0_red: X_plus^Omega is not weight-0 conformal symplectic");
    rs.x_plus = {xp, *wt};
    rs.x_minus = involution(rs.space, rs.x_plus);

    rs.generators = {rs.x_plus.matrix, rs.x_minus.matrix, ExactMatrix::identity(2 * n1)};
    for (const auto& al : datum.a0.basis()) {
        ExactMatrix g(2 * n1, 2 * n1);
        g.set_block(0, 0, al);
        g.set_block(n1, n1, -(hinv * al.transpose() * h));
        rs.generators.push_back(std::move(g));
    }
    rs.g0red = MatrixSubspace::span(2 * n1, 2 * n1, rs.generators);
    if (rs.g0red.dim() != datum.a0.dim() + 3)
        throw std::logic_error("build_g0_red: generators are dependent; expected dim A0 + 3");
    return rs;
}

SplittingReport splitting_report(const ReducedSymbol& rs) {
    SplittingReport rep;
    size_t n1 = rs.h.rows();

    MatrixSubspace g00 = compute_g00(rs.h, rs.a);
    rep.red00_in_g00 = true;
    for (size_t k = 2; k < rs.generators.size(); ++k)  // I and the A0 part
        if (!g00.contains(rs.generators[k])) rep.red00_in_g00 = false;

    rep.conj_pair = (involution(rs.x_plus.matrix) == rs.x_minus.matrix);

    // the weight-(0,2) projection of X_+^Omega spans g_{0,2} = C * [[0,A],[0,0]]
    ExactMatrix ur = rs.x_plus.matrix.block(0, n1, n1, n1);
    rep.projection_iso = (ur == rs.a) && !rs.a.is_zero();

    rep.sigma_invariant = true;
    for (const auto& g : rs.generators)
        if (!rs.g0red.contains(involution(g))) rep.sigma_invariant = false;

    rep.subalgebra = true;
    for (const auto& x : rs.generators)
        for (const auto& y : rs.generators)
            if (!rs.g0red.contains(commutator(x, y))) rep.subalgebra = false;
    return rep;
}

namespace {

/// Joint solution space of (iii) and the linearized (ii) for a fixed A0.
AugmentedSolution omega_candidate_space(const ExactMatrix& h, const ExactMatrix& a,
                                        const MatrixSubspace& a0,
                                        const std::vector<GaussianRational>& eta) {
    size_t n1 = h.rows();
    ExactMatrix ha = h * a.conj();
    std::vector<LinearCondition> conds;
    conds.push_back(
        {[ha](const ExactMatrix& om) { return om.transpose() * ha + ha * om; }, ha});
    const auto& basis = a0.basis();
    for (size_t k = 0; k < basis.size(); ++k) {
        ExactMatrix al = basis[k];
        GaussianRational e = eta[k];
        MatrixSubspace space = a0;
        conds.push_back({[al, e, space](const ExactMatrix& om) {
                             return space.reduce(commutator(al, om) - e * om);
                         },
                         std::nullopt});
    }
    return solve_with_scalars(n1, n1, conds);
}

const std::vector<GaussianRational>& lattice_values() {
    static const std::vector<GaussianRational> vals = [] {
        std::vector<GaussianRational> v;
        const long pairs[][2] = {{1, 1},  {-1, 1}, {1, 2},  {-1, 2}, {3, 2},
                                 {-3, 2}, {2, 1},  {-2, 1}, {3, 1},  {-3, 1}};
        for (const auto& p : pairs) {
            Rational r(p[0], p[1]);
            r.canonicalize();
            v.emplace_back(r, Rational(0));
        }
        const long ipairs[][2] = {{1, 1}, {-1, 1}, {1, 2}, {-1, 2}};
        for (const auto& p : ipairs) {
            Rational r(p[0], p[1]);
            r.canonicalize();
            v.emplace_back(Rational(0), r);
        }
        return v;
    }();
    return vals;
}

}  // namespace

std::vector<ReducedDatum> search(const SymbolSpec& spec, const SearchOptions& options) {
    auto [h, a] = build_pair(spec);
    IntersectionAlgebra alg = compute_A(h, a);

    std::vector<MatrixSubspace> a0_candidates{alg.orth};
    if (options.try_full) a0_candidates.push_back(alg.full);
    for (const auto& u : options.user_a0) a0_candidates.push_back(u);

    std::vector<ReducedDatum> found;
    size_t tried = 0;
    for (const auto& a0 : a0_candidates) {
        if (found.size() >= options.max_found || tried >= options.limit) break;
        // eta per basis element, from relation (i)
        std::vector<GaussianRational> eta;
        bool ok = true;
        for (const auto& al : a0.basis()) {
            auto e = eta_of(h, a, al);
            auto ep = eta_prime_of(h, a, al);
            if (!e || !ep) {
                ok = false;
                break;
            }
            eta.push_back(*e);
        }
        if (!ok) continue;
        {
            ReducedDatum probe{ExactMatrix::zero(h.rows(), h.cols()), a0, eta, 0};
            if (!validate_datum(h, a, probe)) continue;  // A0 not closed or not invariant
        }
        AugmentedSolution space = omega_candidate_space(h, a, a0, eta);
        size_t dim = space.dim();

        auto try_candidate = [&](const ExactMatrix& omega, const GaussianRational& mu) {
            if (found.size() >= options.max_found || tried >= options.limit) return;
            ++tried;
            ReducedDatum datum{omega, a0, eta, mu};
            if (!verify_system(h, a, datum).all()) return;
            for (const auto& f : found)
                if (f.omega == datum.omega && f.a0 == datum.a0 && f.mu == datum.mu) return;
            found.push_back(std::move(datum));
        };

        // the zero point, single basis directions, then pairs
        try_candidate(ExactMatrix::zero(h.rows(), h.cols()), 0);
        const auto& vals = lattice_values();
        for (size_t t = 0; t < dim; ++t) {
            for (const auto& v : vals) {
                ExactMatrix om = v * space.matrix_part(t);
                GaussianRational mu = v * space.scalar_part(t)[0];
                try_candidate(om, mu);
            }
        }
        for (size_t t1 = 0; t1 < dim; ++t1) {
            for (size_t t2 = t1 + 1; t2 < dim; ++t2) {
                for (const auto& v1 : vals) {
                    for (const auto& v2 : vals) {
                        if (found.size() >= options.max_found || tried >= options.limit) break;
                        ExactMatrix om = v1 * space.matrix_part(t1) + v2 * space.matrix_part(t2);
                        GaussianRational mu =
                            v1 * space.scalar_part(t1)[0] + v2 * space.scalar_part(t2)[0];
                        try_candidate(om, mu);
                    }
                }
            }
        }
    }
    return found;
}

}  // namespace crsym
