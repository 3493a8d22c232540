#include <doctest.h>

#include "crsym/canonical.hpp"

using namespace crsym;

namespace {
GaussianRational gi() { return GaussianRational::i(); }
}

TEST_SUITE_BEGIN("canonical_forms");

TEST_CASE("primitive matrices") {
    CHECK(build_primitive(Primitive::J, 2, 2) == ExactMatrix{{2, 1}, {0, 2}});
    CHECK(build_primitive(Primitive::M, gi(), 1) == ExactMatrix{{0, -1}, {1, 0}});
    CHECK(build_primitive(Primitive::D, 0, 2) == ExactMatrix{{1, 0}, {0, 0}});
    ExactMatrix ialt = build_primitive(Primitive::IAlt, 0, 3);
    CHECK(ialt == ExactMatrix{{1, 0, 0}, {0, -1, 0}, {0, 0, 1}});
    CHECK(build_primitive(Primitive::S, 0, 2) == ExactMatrix{{0, 1}, {1, 0}});
    CHECK(build_primitive(Primitive::N, gi(), 1) == build_primitive(Primitive::S, 0, 2));
    CHECK(build_primitive(Primitive::T, 0, 3) == build_primitive(Primitive::J, 0, 3));
    // D entries are half-integers for odd m
    CHECK(build_primitive(Primitive::D, 0, 1).at(0, 0) == GaussianRational(Rational(1, 2)));
    CHECK_THROWS_AS(build_primitive(Primitive::M, GaussianRational(-1), 1), SpecError);
}

TEST_CASE("canonical pair for [(0,2,+1),(0,1,+1)]") {
    SymbolSpec spec{{{0, 2, 1}, {0, 1, 1}}};
    auto [h, a] = build_pair(spec);
    CHECK(h == ExactMatrix{{0, 1, 0}, {1, 0, 0}, {0, 0, 1}});
    CHECK(a == ExactMatrix{{0, 1, 0}, {0, 0, 0}, {0, 0, 0}});
    CHECK(validate_pair(h, a).ok);
}

TEST_CASE("canonical pair for scalar and imaginary blocks") {
    auto [h1, a1] = build_pair(SymbolSpec{{{1, 1, 1}}});
    CHECK(h1 == ExactMatrix::identity(1));
    CHECK(a1 == ExactMatrix::identity(1));

    auto [h2, a2] = build_pair(SymbolSpec{{{gi(), 1, -1}}});
    CHECK(h2 == ExactMatrix{{0, -1}, {-1, 0}});
    CHECK(a2 == ExactMatrix{{0, -1}, {1, 0}});
    CHECK(validate_pair(h2, a2).ok);
}

TEST_CASE("pair validation diagnoses broken pairs") {
    CHECK_FALSE(validate_pair(ExactMatrix::identity(2), ExactMatrix{{0, 1}, {0, 0}}).ok);
    CHECK(validate_pair(ExactMatrix{{0, 1}, {1, 0}}, ExactMatrix{{0, 1}, {0, 0}}).ok);
}

TEST_CASE("every built pair validates") {
    std::vector<SymbolSpec> specs = {
        {{{0, 2, 1}, {0, 1, 1}}},
        {{{gi(), 2, 1}}},
        {{{GaussianRational(1) + gi(), 1, 1}, {3, 2, -1}}},
        {{{2, 3, -1}, {0, 1, 1}}},
    };
    for (const auto& spec : specs) {
        auto [h, a] = build_pair(spec);
        CHECK(validate_pair(h, a).ok);
        CHECK(h.rows() == spec.dim());
    }
}

TEST_CASE("regularity criterion") {
    auto [h1, a1] = build_pair(SymbolSpec{{{0, 2, 1}, {0, 1, 1}}});
    CHECK(is_regular(h1, a1));

    ExactMatrix h = ExactMatrix::identity(2);
    CHECK_FALSE(is_regular(h, ExactMatrix{{1, 0}, {0, 2}}));
    CHECK(is_regular(h, ExactMatrix::identity(2)));
    // single nilpotent block of size 4: T^3 is nonzero and not proportional to T
    auto [h4, a4] = build_pair(SymbolSpec{{{0, 4, 1}}});
    CHECK_FALSE(is_regular(h4, a4));
}

TEST_CASE("d(i,j) case table") {
    SymbolSpec zero3{{{0, 3, 1}}};
    CHECK(d_pair(zero3, 0, 0) == 2);

    SymbolSpec two_blocks{{{0, 2, 1}, {0, 1, 1}}};
    CHECK(d_pair(two_blocks, 0, 1) == 2);
    CHECK(d_total(two_blocks) == 4);

    SymbolSpec im{{{gi(), 2, 1}, {gi(), 1, -1}}};
    CHECK(d_pair(im, 0, 0) == 2);   // lambda^2 < 0, diagonal
    CHECK(d_pair(im, 0, 1) == 4);   // lambda^2 < 0, off-diagonal
    SymbolSpec pos{{{2, 2, 1}, {2, 3, 1}}};
    CHECK(d_pair(pos, 0, 0) == 0);
    CHECK(d_pair(pos, 0, 1) == 2);
    SymbolSpec mixed{{{1, 1, 1}, {2, 1, 1}}};
    CHECK(d_pair(mixed, 0, 1) == 0);
}

TEST_CASE("d_pair depends only on the combinatorial data") {
    SymbolSpec a{{{0, 2, 1}, {0, 1, 1}}};
    SymbolSpec b{{{0, 2, -1}, {0, 1, 1}}};
    SymbolSpec c{{{0, 1, 1}, {0, 2, -1}}};
    CHECK(d_pair(a, 0, 1) == d_pair(b, 0, 1));
    CHECK(d_pair(b, 0, 1) == d_pair(c, 0, 1));
    CHECK(d_total(a) == d_total(c));
}

TEST_CASE("spec validation errors") {
    SymbolSpec empty;
    CHECK_THROWS_AS(empty.validate(), SpecError);
    SymbolSpec azero{{{0, 1, 1}, {0, 1, -1}}};
    CHECK_THROWS_AS(azero.validate(), SpecError);
    SymbolSpec neg{{{GaussianRational(-1), 1, 1}}};
    CHECK_THROWS_AS(neg.validate(), SpecError);
    SymbolSpec badeps{{{1, 1, 2}}};
    CHECK_THROWS_AS(badeps.validate(), SpecError);
}

TEST_SUITE_END();
