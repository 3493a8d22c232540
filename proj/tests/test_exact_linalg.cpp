#include <doctest.h>

#include <random>

#include "crsym/float_check.hpp"
#include "crsym/linalg.hpp"

using namespace crsym;

namespace {

GaussianRational gi() { return GaussianRational::i(); }

ExactMatrix random_matrix(std::mt19937_64& rng, size_t rows, size_t cols, long span = 9) {
    ExactMatrix m(rows, cols);
    for (size_t i = 0; i < rows; ++i)
        for (size_t j = 0; j < cols; ++j) {
            long re = static_cast<long>(rng() % (2 * span + 1)) - span;
            long im = static_cast<long>(rng() % (2 * span + 1)) - span;
            m.at(i, j) = GaussianRational(Rational(re), Rational(im));
        }
    return m;
}

}  // namespace

TEST_SUITE_BEGIN("exact_linalg");

TEST_CASE("rational parsing and canonical form") {
    CHECK(parse_rational("4/6") == Rational(2, 3));
    CHECK(parse_rational("-10/5") == Rational(-2));
    CHECK(rational_str(parse_rational("3")) == "3");
    CHECK_THROWS_AS(parse_rational("0.5"), SpecError);
    CHECK_THROWS_AS(parse_rational("sqrt(2)"), SpecError);
    CHECK_THROWS_AS(parse_rational("1/0"), SpecError);
}

TEST_CASE("gaussian rational arithmetic") {
    GaussianRational z(Rational(1), Rational(2));
    CHECK(z * z.conj() == GaussianRational(Rational(5)));
    CHECK(gi() * gi() == GaussianRational(-1));
    CHECK((z / z) == GaussianRational(1));
    CHECK_THROWS_AS(z / GaussianRational(0), std::domain_error);
    CHECK(to_string(GaussianRational(Rational(1), Rational(-2))) == "1-2i");
}

TEST_CASE("rref on proportional rows") {
    ExactMatrix m{{1, 2}, {2, 4}};
    auto rr = rref(m);
    CHECK(rr.rank == 1);
    CHECK(rr.pivots == std::vector<size_t>{0});
}

TEST_CASE("rref identity fixed point") {
    ExactMatrix id = ExactMatrix::identity(3);
    auto rr = rref(id);
    CHECK(rr.rank == 3);
    CHECK(rr.reduced == id);
}

TEST_CASE("rref of a rank-1 complex matrix") {
    // second row is -i times the first
    ExactMatrix m{{1, gi()}, {-gi(), 1}};
    CHECK(rref(m).rank == 1);
}

TEST_CASE("kernel examples") {
    ExactMatrix m{{1, gi()}, {-gi(), 1}};
    MatrixSubspace ker = kernel(m);
    REQUIRE(ker.dim() == 1);
    ExactMatrix v(2, 1);
    v.at(0, 0) = -gi();
    v.at(1, 0) = 1;
    CHECK(ker.contains(v));
    CHECK((m * ker.basis()[0]).is_zero());

    CHECK(kernel(ExactMatrix::identity(4)).dim() == 0);
    CHECK(kernel(ExactMatrix::zero(2, 3)).dim() == 3);
}

TEST_CASE("rank-nullity and rref idempotence on random matrices") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 40; ++trial) {
        size_t rows = 1 + rng() % 6, cols = 1 + rng() % 6;
        ExactMatrix m = random_matrix(rng, rows, cols);
        auto rr = rref(m);
        CHECK(rr.rank + kernel(m).dim() == cols);
        CHECK(rref(rr.reduced).reduced == rr.reduced);
    }
}

TEST_CASE("exact rank agrees with floating-point elimination") {
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 60; ++trial) {
        size_t rows = 2 + rng() % 5, cols = 2 + rng() % 5;
        ExactMatrix m = random_matrix(rng, rows, cols, 4);
        if (trial % 3 == 0 && rows >= 2)
            for (size_t j = 0; j < cols; ++j)
                m.at(rows - 1, j) = m.at(0, j) * GaussianRational(3) - m.at(rows / 2, j);
        CHECK(rref(m).rank == float_rank(m, 1e-9));
    }
}

TEST_CASE("subspace canonical basis is span-invariant") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<ExactMatrix> gens;
        for (int g = 0; g < 4; ++g) gens.push_back(random_matrix(rng, 3, 3, 3));
        MatrixSubspace s1 = MatrixSubspace::span(3, 3, gens);
        // shuffle and rescale the generating set, plus throw in a sum
        std::vector<ExactMatrix> mixed{gens[2] * GaussianRational(Rational(5, 3)), gens[0],
                                       gens[3] + gens[1], gens[1] * (-gi()), gens[3]};
        MatrixSubspace s2 = MatrixSubspace::span(3, 3, mixed);
        CHECK(s1 == s2);
    }
}

TEST_CASE("membership coefficients") {
    ExactMatrix d1{{1, 0}, {0, 0}};
    ExactMatrix d2{{0, 0}, {0, 1}};
    MatrixSubspace s = MatrixSubspace::span(2, 2, {d1, d2});
    auto zero = s.membership(ExactMatrix::zero(2, 2));
    REQUIRE(zero.has_value());
    for (const auto& c : *zero) CHECK(c.is_zero());

    auto unit = s.membership(s.basis()[0]);
    REQUIRE(unit.has_value());
    CHECK((*unit)[0] == GaussianRational(1));
    CHECK((*unit)[1] == GaussianRational(0));

    auto both = s.membership(ExactMatrix::identity(2));
    REQUIRE(both.has_value());
    CHECK((*both)[0] == GaussianRational(1));
    CHECK((*both)[1] == GaussianRational(1));

    CHECK(!s.membership(ExactMatrix{{0, 1}, {0, 0}}).has_value());
}

TEST_CASE("solve_with_scalars scalar toy system") {
    // x = eta over 1x1 matrices
    std::vector<LinearCondition> conds;
    conds.push_back({[](const ExactMatrix& x) { return x; }, ExactMatrix::identity(1)});
    AugmentedSolution sol = solve_with_scalars(1, 1, conds);
    CHECK(sol.dim() == 1);
    CHECK(sol.matrix_part(0).at(0, 0) == sol.scalar_part(0)[0]);
}

TEST_CASE("solve_with_scalars on the scalar intersection system") {
    // A = (1), H = (1): alpha*A*H^-1 + A*H^-1*alpha^T = 2*alpha must equal
    // eta resp. eta'; the joint solution is the line (alpha, 2alpha, 2alpha)
    ExactMatrix one = ExactMatrix::identity(1);
    std::vector<LinearCondition> conds;
    conds.push_back({[](const ExactMatrix& x) { return x + x.transpose(); }, one});
    conds.push_back({[](const ExactMatrix& x) { return x.transpose() + x; }, one});
    AugmentedSolution sol = solve_with_scalars(1, 1, conds);
    REQUIRE(sol.dim() == 1);
    GaussianRational alpha = sol.matrix_part(0).at(0, 0);
    CHECK(sol.scalar_part(0)[0] == GaussianRational(2) * alpha);
    CHECK(sol.scalar_part(0)[1] == GaussianRational(2) * alpha);
}

TEST_CASE("solve_with_scalars shape mismatch is rejected") {
    std::vector<LinearCondition> conds;
    conds.push_back({[](const ExactMatrix& x) { return x; }, ExactMatrix::identity(2)});
    CHECK_THROWS_AS(solve_with_scalars(1, 1, conds), std::invalid_argument);
}

TEST_SUITE_END();
