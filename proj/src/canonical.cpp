#include "crsym/canonical.hpp"

#include <stdexcept>

namespace crsym {

namespace {

ExactMatrix jordan(const GaussianRational& lambda, size_t m) {
    ExactMatrix j(m, m);
    for (size_t k = 0; k < m; ++k) {
        j.at(k, k) = lambda;
        if (k + 1 < m) j.at(k, k + 1) = 1;
    }
    return j;
}

ExactMatrix antidiag_ones(size_t m) {
    ExactMatrix s(m, m);
    for (size_t k = 0; k < m; ++k) s.at(k, m - 1 - k) = 1;
    return s;
}

void check_quadrant(const GaussianRational& lambda) {
    if (lambda.re() < 0 || lambda.im() < 0)
        throw SpecError("lambda = " + to_string(lambda) +
                        " violates the quadrant convention Re >= 0, Im >= 0");
}

}  // namespace

ExactMatrix build_primitive(Primitive kind, const GaussianRational& lambda, size_t m) {
    if (m < 1) throw SpecError("block size m must be >= 1");
    switch (kind) {
        case Primitive::J:
            return jordan(lambda, m);
        case Primitive::S:
            return antidiag_ones(m);
        case Primitive::T:
            return jordan(GaussianRational(0), m);
        case Primitive::M: {
            check_quadrant(lambda);
            if (lambda.is_real()) return jordan(lambda, m);
            ExactMatrix out(2 * m, 2 * m);
            out.set_block(0, m, jordan(lambda * lambda, m));
            out.set_block(m, 0, ExactMatrix::identity(m));
            return out;
        }
        case Primitive::N:
            return antidiag_ones(lambda.is_real() ? m : 2 * m);
        case Primitive::IAlt: {
            ExactMatrix out(m, m);
            for (size_t k = 0; k < m; ++k) out.at(k, k) = (k % 2 == 0) ? 1 : -1;
            return out;
        }
        case Primitive::D: {
            ExactMatrix out(m, m);
            Rational half_m(mpz_class(static_cast<long>(m)), mpz_class(2));
            half_m.canonicalize();
            for (size_t k = 0; k < m; ++k)
                out.at(k, k) = GaussianRational(half_m - static_cast<long>(k));
            return out;
        }
    }
    throw std::logic_error("build_primitive: unknown kind");
}

void SymbolSpec::validate() const {
    if (blocks.empty())
        throw SpecError("spec has no blocks: the antilinear operator A must be nonzero");
    bool a_nonzero = false;
    for (const auto& b : blocks) {
        if (b.m < 1) throw SpecError("block size m must be >= 1");
        if (b.epsilon != 1 && b.epsilon != -1) throw SpecError("epsilon must be +1 or -1");
        check_quadrant(b.lambda);
        if (!b.lambda.is_zero() || b.m > 1) a_nonzero = true;
    }
    if (!a_nonzero)
        throw SpecError("A = 0: every block is (0,1); 2-nondegeneracy requires A != 0");
}

std::pair<ExactMatrix, ExactMatrix> build_pair(const SymbolSpec& spec) {
    spec.validate();
    std::vector<ExactMatrix> hs, as;
    hs.reserve(spec.blocks.size());
    as.reserve(spec.blocks.size());
    for (const auto& b : spec.blocks) {
        ExactMatrix n = build_primitive(Primitive::N, b.lambda, b.m);
        if (b.epsilon < 0) n *= GaussianRational(-1);
        hs.push_back(std::move(n));
        as.push_back(build_primitive(Primitive::M, b.lambda, b.m));
    }
    return {block_diag(hs), block_diag(as)};
}

PairDiagnostic validate_pair(const ExactMatrix& h, const ExactMatrix& a) {
    PairDiagnostic d;
    if (!h.is_square() || h.rows() != a.rows() || !a.is_square()) {
        return {false, "H and A must be square of the same size"};
    }
    if (!h.is_hermitian()) return {false, "H is not Hermitian"};
    ExactMatrix hinv;
    try {
        hinv = h.inverse();
    } catch (const std::domain_error&) {
        return {false, "H is degenerate"};
    }
    ExactMatrix ha = h * a.conj();
    if (!ha.is_symmetric()) return {false, "H*conj(A) is not symmetric"};
    ExactMatrix ah = a * hinv;
    if (!ah.is_symmetric()) return {false, "A*H^{-1} is not symmetric"};
    return d;
}

bool is_regular(const ExactMatrix& h, const ExactMatrix& a) {
    (void)h;
    ExactMatrix cube = a * a.conj() * a;
    return proportionality_ratio(a, cube).has_value();
}

size_t d_pair(const SymbolSpec& spec, size_t i, size_t j) {
    if (i > j || j >= spec.blocks.size())
        throw std::invalid_argument("d_pair: need 0 <= i <= j < gamma");
    const GaussianRational& li = spec.blocks[i].lambda;
    const GaussianRational& lj = spec.blocks[j].lambda;
    size_t mi = spec.blocks[i].m, mj = spec.blocks[j].m;
    if (li != lj) return 0;
    GaussianRational l2 = li * li;
    bool l2_neg = l2.is_real() && l2.re() < 0;  // lambda purely imaginary, nonzero
    if (i == j) {
        if (li.is_zero()) return (mi + 1) / 2;  // ceil(m/2)
        if (l2_neg) return mi;
        return 0;
    }
    size_t mn = std::min(mi, mj);
    if (li.is_real() && li.re() > 0) return mn;
    if (l2_neg) return 4 * mn;
    return 2 * mn;  // lambda^2 not real, or lambda = 0
}

size_t d_total(const SymbolSpec& spec) {
    size_t total = 0;
    for (size_t i = 0; i < spec.blocks.size(); ++i)
        for (size_t j = i; j < spec.blocks.size(); ++j) total += d_pair(spec, i, j);
    return total;
}

}  // namespace crsym
