#include "crsym/intersection.hpp"

#include <stdexcept>

namespace crsym {

namespace {

ExactMatrix toeplitz_power(size_t m, size_t k) {  // T_m^k
    ExactMatrix t(m, m);
    for (size_t i = 0; i + k < m; ++i) t.at(i, i + k) = 1;
    return t;
}

bool lambda_sq_negative(const GaussianRational& l) {
    GaussianRational l2 = l * l;
    return l2.is_real() && l2.re() < 0;
}

}  // namespace

std::optional<GaussianRational> eta_of(const ExactMatrix& h, const ExactMatrix& a,
                                       const ExactMatrix& alpha) {
    ExactMatrix ah = a * h.inverse();
    ExactMatrix e = alpha * ah + ah * alpha.transpose();
    return proportionality_ratio(ah, e);
}

std::optional<GaussianRational> eta_prime_of(const ExactMatrix& h, const ExactMatrix& a,
                                             const ExactMatrix& alpha) {
    ExactMatrix ha = h * a.conj();
    ExactMatrix e = alpha.transpose() * ha + ha * alpha;
    return proportionality_ratio(ha, e);
}

namespace {

/// For a canonical nilpotent A (a direct sum of T_m blocks) read the block
/// sizes off the superdiagonal and build the direct sum of D_m matrices.
std::optional<ExactMatrix> canonical_d_matrix(const ExactMatrix& a) {
    size_t n1 = a.rows();
    for (size_t i = 0; i < n1; ++i)
        for (size_t j = 0; j < n1; ++j) {
            const GaussianRational& v = a.at(i, j);
            if (j == i + 1) {
                if (!(v.is_zero() || v == GaussianRational(1))) return std::nullopt;
            } else if (!v.is_zero()) {
                return std::nullopt;
            }
        }
    std::vector<ExactMatrix> ds;
    size_t start = 0;
    for (size_t i = 0; i < n1; ++i) {
        bool block_ends = (i + 1 == n1) || a.at(i, i + 1).is_zero();
        if (block_ends) {
            ds.push_back(build_primitive(Primitive::D, 0, i - start + 1));
            start = i + 1;
        }
    }
    return block_diag(ds);
}

}  // namespace

IntersectionAlgebra compute_A(const ExactMatrix& h, const ExactMatrix& a) {
    if (a.is_zero()) throw SpecError("compute_A: A must be nonzero");
    PairDiagnostic d = validate_pair(h, a);
    if (!d.ok) throw SpecError("compute_A: invalid pair: " + d.message);
    size_t n1 = h.rows();
    ExactMatrix ah = a * h.inverse();
    ExactMatrix ha = h * a.conj();

    std::vector<LinearCondition> with_scalars;
    with_scalars.push_back(
        {[ah](const ExactMatrix& x) { return x * ah + ah * x.transpose(); }, ah});
    with_scalars.push_back(
        {[ha](const ExactMatrix& x) { return x.transpose() * ha + ha * x; }, ha});
    AugmentedSolution full_sol = solve_with_scalars(n1, n1, with_scalars);

    std::vector<LinearCondition> orth_conds;
    orth_conds.push_back(
        {[ah](const ExactMatrix& x) { return x * ah + ah * x.transpose(); }, std::nullopt});
    orth_conds.push_back(
        {[ha](const ExactMatrix& x) { return x.transpose() * ha + ha * x; }, std::nullopt});
    AugmentedSolution orth_sol = solve_with_scalars(n1, n1, orth_conds);

    IntersectionAlgebra alg;
    alg.full = full_sol.projected();
    alg.orth = orth_sol.projected();

    std::vector<ExactMatrix> scal_gens{ExactMatrix::identity(n1)};
    if (is_nilpotent(a)) {
        auto dm = canonical_d_matrix(a);
        if (!dm)
            throw SpecError("compute_A: nilpotent A is not in canonical block form; "
                            "cannot assemble the canonical scaling complement");
        scal_gens.push_back(std::move(*dm));
    }
    alg.scal = MatrixSubspace::span(n1, n1, scal_gens);

    // A = A^o (+) A^s must hold exactly
    if (!alg.full.contains_subspace(alg.scal) ||
        alg.orth.dim() + alg.scal.dim() != alg.full.dim() ||
        alg.orth.sum(alg.scal) != alg.full)
        throw std::logic_error("compute_A: scaling complement failed the decomposition check");

    for (const auto& b : alg.full.basis()) {
        auto e = eta_of(h, a, b);
        auto ep = eta_prime_of(h, a, b);
        if (!e || !ep) throw std::logic_error("compute_A: basis element lost its eta");
        alg.eta_table.push_back({*e, *ep});
    }
    return alg;
}

MatrixSubspace scaling_component(const SymbolSpec& spec) {
    size_t n1 = spec.dim();
    std::vector<ExactMatrix> gens{ExactMatrix::identity(n1)};
    if (spec.nilpotent()) {
        std::vector<ExactMatrix> ds;
        ds.reserve(spec.blocks.size());
        for (const auto& b : spec.blocks)
            ds.push_back(build_primitive(Primitive::D, b.lambda, b.m));
        gens.push_back(block_diag(ds));
    }
    return MatrixSubspace::span(n1, n1, gens);
}

MatrixSubspace closed_form_A_orth(const SymbolSpec& spec) {
    spec.validate();
    size_t gamma = spec.blocks.size();
    size_t n1 = spec.dim();
    std::vector<size_t> offs(gamma, 0);
    for (size_t i = 1; i < gamma; ++i) offs[i] = offs[i - 1] + spec.blocks[i - 1].size();

    std::vector<ExactMatrix> gens;
    auto emit = [&](size_t bi, const ExactMatrix& mij, size_t bj, const ExactMatrix& mji) {
        ExactMatrix m(n1, n1);
        m.set_block(offs[bi], offs[bj], mij);
        if (bi != bj) m.set_block(offs[bj], offs[bi], mji);
        gens.push_back(std::move(m));
    };

    // diagonal blocks, Corollary-style families
    for (size_t i = 0; i < gamma; ++i) {
        const auto& blk = spec.blocks[i];
        size_t m = blk.m;
        if (blk.lambda.is_zero()) {
            ExactMatrix ialt = build_primitive(Primitive::IAlt, 0, m);
            for (size_t k = 1; k <= (m + 1) / 2; ++k) {
                ExactMatrix g = toeplitz_power(m, m - 2 * k + 1) * ialt;
                emit(i, g, i, g);
            }
        } else if (lambda_sq_negative(blk.lambda)) {
            // upper-right and lower-left blocks are coupled through
            // J = J_{lambda^2, m}: the pair (Q, R) = (-J T^k, T^k)
            ExactMatrix j = build_primitive(Primitive::J, blk.lambda * blk.lambda, m);
            for (size_t k = 0; k < m; ++k) {
                ExactMatrix g(2 * m, 2 * m);
                g.set_block(0, m, -(j * toeplitz_power(m, k)));
                g.set_block(m, 0, toeplitz_power(m, k));
                emit(i, g, i, g);
            }
        }
        // otherwise the diagonal block vanishes
    }

    // off-diagonal block pairs
    for (size_t bi = 0; bi < gamma; ++bi) {
        for (size_t bj = bi + 1; bj < gamma; ++bj) {
            const auto& bli = spec.blocks[bi];
            const auto& blj = spec.blocks[bj];
            if (bli.lambda != blj.lambda) continue;
            const GaussianRational& lam = bli.lambda;
            GaussianRational sgn(-bli.epsilon * blj.epsilon);
            // formulas assume the first index has the smaller m
            size_t pi = bi, pj = bj;
            if (bli.m > blj.m) std::swap(pi, pj);
            size_t mi = spec.blocks[pi].m, mj = spec.blocks[pj].m;

            if (lam.is_real() && lam.re() > 0) {
                for (size_t k = 0; k < mi; ++k) {
                    ExactMatrix p = toeplitz_power(mi, k);
                    ExactMatrix bij(mi, mj), bji(mj, mi);
                    bij.set_block(0, mj - mi, p);
                    bji.set_block(0, 0, p);
                    emit(pi, bij, pj, sgn * bji);
                }
            } else if (lam.is_zero()) {
                // parameters c^1_1..c^1_mi then c^0_1..c^0_mi; the entry at
                // (r, c) of the reference square carries c^{[r]_2}_{c-r+1} in
                // B_(i,j) and -eps_i eps_j c^{[mi+c]_2}_{c-r+1} in B_(j,i)
                for (int sup = 1; sup >= 0; --sup) {
                    for (size_t t = 1; t <= mi; ++t) {
                        ExactMatrix bij(mi, mj), bji(mj, mi);
                        bool nonzero = false;
                        for (size_t r = 1; r <= mi; ++r) {
                            for (size_t c = r; c <= mi; ++c) {
                                if (c - r + 1 != t) continue;
                                if (r % 2 == static_cast<size_t>(sup)) {
                                    bij.at(r - 1, mj - mi + c - 1) = 1;
                                    nonzero = true;
                                }
                                if ((mi + c) % 2 == static_cast<size_t>(sup)) {
                                    bji.at(r - 1, c - 1) = sgn;
                                    nonzero = true;
                                }
                            }
                        }
                        if (nonzero) emit(pi, bij, pj, bji);
                    }
                }
            } else if (lambda_sq_negative(lam)) {
                // four Toeplitz families per degree; the Q/R families couple
                // through J = J_{lambda^2, m_i} and its inverse
                ExactMatrix j = build_primitive(Primitive::J, lam * lam, mi);
                ExactMatrix jinv = j.inverse();
                for (size_t k = 0; k < mi; ++k) {  // upper-left pair
                    ExactMatrix p = toeplitz_power(mi, k);
                    ExactMatrix bij(2 * mi, 2 * mj), bji(2 * mj, 2 * mi);
                    bij.set_block(0, mj - mi, p);
                    bji.set_block(0, 0, sgn * p);
                    emit(pi, bij, pj, bji);
                }
                for (size_t k = 0; k < mi; ++k) {  // upper-right of B_(i,j)
                    ExactMatrix p = toeplitz_power(mi, k);
                    ExactMatrix bij(2 * mi, 2 * mj), bji(2 * mj, 2 * mi);
                    bij.set_block(0, 2 * mj - mi, p);
                    bji.set_block(mj, 0, sgn * (p * jinv));
                    emit(pi, bij, pj, bji);
                }
                for (size_t k = 0; k < mi; ++k) {  // lower-left of B_(i,j)
                    ExactMatrix p = toeplitz_power(mi, k);
                    ExactMatrix bij(2 * mi, 2 * mj), bji(2 * mj, 2 * mi);
                    bij.set_block(mi, mj - mi, p);
                    bji.set_block(0, mi, sgn * (p * j));
                    emit(pi, bij, pj, bji);
                }
                for (size_t k = 0; k < mi; ++k) {  // lower-right pair
                    ExactMatrix p = toeplitz_power(mi, k);
                    ExactMatrix bij(2 * mi, 2 * mj), bji(2 * mj, 2 * mi);
                    bij.set_block(mi, 2 * mj - mi, p);
                    bji.set_block(mj, mi, sgn * p);
                    emit(pi, bij, pj, bji);
                }
            } else {  // lambda^2 not real
                for (size_t k = 0; k < mi; ++k) {  // a_k
                    ExactMatrix p = toeplitz_power(mi, k);
                    ExactMatrix bij(2 * mi, 2 * mj), bji(2 * mj, 2 * mi);
                    bij.set_block(0, mj - mi, p);
                    bji.set_block(0, 0, sgn * p);
                    emit(pi, bij, pj, bji);
                }
                for (size_t k = 0; k < mi; ++k) {  // b_k
                    ExactMatrix p = toeplitz_power(mi, k);
                    ExactMatrix bij(2 * mi, 2 * mj), bji(2 * mj, 2 * mi);
                    bij.set_block(mi, 2 * mj - mi, p);
                    bji.set_block(mj, mi, sgn * p);
                    emit(pi, bij, pj, bji);
                }
            }
        }
    }
    return MatrixSubspace::span(n1, n1, gens);
}

bool check_eta_coupling(const IntersectionAlgebra& alg, const ExactMatrix& a) {
    if (is_nilpotent(a)) return true;  // vacuous; callers report "nilpotent"
    for (const auto& e : alg.eta_table)
        if (e.eta != e.eta_prime) return false;
    return true;
}

}  // namespace crsym
