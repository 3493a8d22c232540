#include <doctest.h>

#include "crsym/intersection.hpp"

using namespace crsym;

namespace {
GaussianRational gi() { return GaussianRational::i(); }
}

TEST_SUITE_BEGIN("intersection_algebra");

TEST_CASE("dimensions for the n=4 maximal spec") {
    SymbolSpec spec{{{0, 2, 1}, {0, 1, 1}}};
    auto [h, a] = build_pair(spec);
    IntersectionAlgebra alg = compute_A(h, a);
    CHECK(alg.full.dim() == 6);
    CHECK(alg.orth.dim() == 4);
    CHECK(alg.scal.dim() == 2);
    CHECK(d_total(spec) == 4);
}

TEST_CASE("scalar spec has only the scaling line") {
    SymbolSpec spec{{{1, 1, 1}}};
    auto [h, a] = build_pair(spec);
    IntersectionAlgebra alg = compute_A(h, a);
    CHECK(alg.full.dim() == 1);
    CHECK(alg.orth.dim() == 0);
    CHECK(alg.scal.dim() == 1);
    CHECK(check_eta_coupling(alg, a));
}

TEST_CASE("purely imaginary eigenvalue block") {
    SymbolSpec spec{{{gi(), 1, 1}}};
    auto [h, a] = build_pair(spec);
    IntersectionAlgebra alg = compute_A(h, a);
    CHECK(alg.orth.dim() == 1);
    CHECK(alg.orth.dim() == d_pair(spec, 0, 0));
    CHECK(alg.scal.dim() == 1);  // A is not nilpotent: A*conj(A) = -I
    CHECK(check_eta_coupling(alg, a));
}

TEST_CASE("compute_A rejects A = 0") {
    CHECK_THROWS_AS(compute_A(ExactMatrix::identity(2), ExactMatrix::zero(2, 2)), SpecError);
}

TEST_CASE("closed form for twin positive blocks") {
    SymbolSpec spec{{{2, 1, 1}, {2, 1, 1}}};
    MatrixSubspace orth = closed_form_A_orth(spec);
    CHECK(orth.dim() == 1);
    CHECK(orth.contains(ExactMatrix{{0, 1}, {-1, 0}}));
}

TEST_CASE("closed form for a single zero block of size 3") {
    SymbolSpec spec{{{0, 3, 1}}};
    MatrixSubspace orth = closed_form_A_orth(spec);
    CHECK(orth.dim() == 2);
    CHECK(orth.contains(ExactMatrix{{0, 0, 1}, {0, 0, 0}, {0, 0, 0}}));
    CHECK(orth.contains(ExactMatrix{{1, 0, 0}, {0, -1, 0}, {0, 0, 1}}));
}

TEST_CASE("distinct eigenvalues force zero off-diagonal blocks") {
    SymbolSpec spec{{{1, 1, 1}, {2, 1, 1}}};
    CHECK(closed_form_A_orth(spec).dim() == 0);
}

TEST_CASE("imaginary eigenvalues away from i couple through J") {
    // for lambda = 2i the pair (Q, R) in the diagonal block is (-J T^k, T^k),
    // so the off-diagonal entries differ by a factor lambda^2 = -4
    SymbolSpec spec{{{GaussianRational(2) * gi(), 1, 1}}};
    MatrixSubspace orth = closed_form_A_orth(spec);
    REQUIRE(orth.dim() == 1);
    CHECK(orth.contains(ExactMatrix{{0, 4}, {1, 0}}));
    auto [h, a] = build_pair(spec);
    CHECK(orth == compute_A(h, a).orth);
}

TEST_CASE("closed form matches the solver on mixed specs") {
    std::vector<SymbolSpec> specs = {
        {{{0, 2, 1}, {0, 1, 1}}},
        {{{0, 3, 1}, {0, 2, -1}}},
        {{{gi(), 2, 1}}},
        {{{gi(), 1, 1}, {gi(), 1, -1}}},
        {{{GaussianRational(1) + gi(), 1, 1}, {GaussianRational(1) + gi(), 2, 1}}},
        {{{2, 2, 1}, {2, 3, 1}}},
        {{{0, 1, 1}, {0, 2, 1}}},
        {{{gi(), 2, 1}, {gi(), 1, -1}}},
        {{{0, 2, 1}, {2, 1, 1}, {0, 1, -1}}},
        {{{GaussianRational(2) * gi(), 1, 1}, {GaussianRational(2) * gi(), 1, 1}}},
        {{{GaussianRational(2) * gi(), 2, 1}, {GaussianRational(2) * gi(), 1, -1}}},
        {{{GaussianRational(2) * gi(), 2, -1}}},
    };
    for (const auto& spec : specs) {
        auto [h, a] = build_pair(spec);
        IntersectionAlgebra alg = compute_A(h, a);
        CHECK(closed_form_A_orth(spec) == alg.orth);
        CHECK(alg.orth.dim() == d_total(spec));
        bool nilp = spec.nilpotent();
        CHECK(alg.scal.dim() == (nilp ? 2 : 1));
    }
}

TEST_CASE("scaling component of the nilpotent maximal spec") {
    SymbolSpec spec{{{0, 2, 1}, {0, 1, 1}}};
    MatrixSubspace scal = scaling_component(spec);
    CHECK(scal.dim() == 2);
    CHECK(scal.contains(ExactMatrix::identity(3)));
    ExactMatrix d(3, 3);
    d.at(0, 0) = 1;
    d.at(2, 2) = GaussianRational(Rational(1, 2));
    CHECK(scal.contains(d));
}

TEST_CASE("the diagonal scaling element solves the two conformal equations") {
    // for nilpotent canonical A the element X = direct sum of D_m satisfies
    // X(AH^-1) + (AH^-1)X^T = 2 AH^-1 and X^T(H conj A) + (H conj A)X = 0
    SymbolSpec spec{{{0, 3, 1}, {0, 2, -1}}};
    auto [h, a] = build_pair(spec);
    ExactMatrix x = block_diag({build_primitive(Primitive::D, 0, 3),
                                build_primitive(Primitive::D, 0, 2)});
    ExactMatrix ah = a * h.inverse();
    ExactMatrix ha = h * a.conj();
    CHECK(x * ah + ah * x.transpose() == GaussianRational(2) * ah);
    CHECK((x.transpose() * ha + ha * x).is_zero());
    CHECK(eta_of(h, a, x) == GaussianRational(2));
    CHECK(eta_prime_of(h, a, x) == GaussianRational(0));
}

TEST_CASE("eta table and commutator closure") {
    SymbolSpec spec{{{0, 2, 1}, {2, 1, 1}}};
    auto [h, a] = build_pair(spec);
    IntersectionAlgebra alg = compute_A(h, a);
    REQUIRE(alg.eta_table.size() == alg.full.dim());
    for (size_t k = 0; k < alg.full.dim(); ++k) {
        const ExactMatrix& b = alg.full.basis()[k];
        ExactMatrix ah = a * h.inverse();
        CHECK(b * ah + ah * b.transpose() == alg.eta_table[k].eta * ah);
    }
    for (const auto& x : alg.full.basis())
        for (const auto& y : alg.full.basis()) CHECK(alg.full.contains(commutator(x, y)));
}

TEST_SUITE_END();
