#include <doctest.h>

#include <fstream>

#include "crsym/report.hpp"

using namespace crsym;

TEST_SUITE_BEGIN("json_report");

TEST_CASE("spec JSON round-trip") {
    Json j = Json::parse(R"({"blocks":[
        {"lambda":{"re":"0","im":"1"},"m":2,"epsilon":1},
        {"lambda":{"re":"3","im":"0"},"m":1,"epsilon":-1}]})");
    SymbolSpec spec = spec_from_json(j);
    REQUIRE(spec.blocks.size() == 2);
    CHECK(spec.blocks[0].lambda == GaussianRational::i());
    CHECK(spec.blocks[0].m == 2);
    CHECK(spec.blocks[1].epsilon == -1);
    CHECK(spec_from_json(to_json(spec)).blocks.size() == 2);
    CHECK(to_json(spec_from_json(to_json(spec))) == to_json(spec));
}

TEST_CASE("inexact literals are rejected at parse time") {
    Json bad = Json::parse(R"({"blocks":[{"lambda":{"re":"1.41","im":"0"},"m":1,"epsilon":1}]})");
    CHECK_THROWS_WITH_AS(static_cast<void>(spec_from_json(bad)),
                         doctest::Contains("exact"), SpecError);
    Json neg = Json::parse(R"({"blocks":[{"lambda":{"re":"-1","im":"0"},"m":1,"epsilon":1}]})");
    CHECK_THROWS_AS(static_cast<void>(spec_from_json(neg)), SpecError);
}

TEST_CASE("matrix and datum JSON round-trip") {
    ExactMatrix m{{1, GaussianRational(Rational(1, 2), Rational(-3))}, {0, 7}};
    CHECK(matrix_from_json(to_json(m)) == m);

    SymbolSpec spec{{{0, 2, 1}, {2, 1, 1}}};
    SearchOptions opt;
    opt.max_found = 1;
    auto data = search(spec, opt);
    REQUIRE(!data.empty());
    Json j = to_json(data[0]);
    ReducedDatum back = datum_from_json(j);
    CHECK(back.omega == data[0].omega);
    CHECK(back.a0 == data[0].a0);
    CHECK(back.mu == data[0].mu);
    CHECK(to_json(back) == j);
}

TEST_CASE("reports validate against the shipped schema and are deterministic") {
    SymbolSpec spec{{{0, 2, 1}, {2, 1, 1}}};
    ReportOptions opt;
    opt.k_max = 2;
    Json r1 = build_report(spec, opt);
    Json r2 = build_report(spec, opt);
    CHECK(r1.dump(2) == r2.dump(2));
    std::string err;
    CHECK_MESSAGE(validate_schema(r1, report_schema(), &err), err);
    CHECK(r1.at("regular").get<bool>() == false);
    CHECK(r1.at("intersection").at("dims").at("orth").get<size_t>() == d_total(spec));
    CHECK(r1.at("reduced_search").at("found_count").get<size_t>() >= 1);
}

TEST_CASE("data-free specs report an empty prolongation section") {
    // the diagonal family admits no Gaussian-rational reduced datum; the
    // report must say so rather than invent one
    SymbolSpec spec{{{1, 1, 1}, {2, 1, 1}}};
    ReportOptions opt;
    opt.k_max = 1;
    Json r = build_report(spec, opt);
    CHECK(r.at("reduced_search").at("found_count").get<size_t>() == 0);
    CHECK(r.at("prolongation").empty());
    CHECK(r.at("bounds").at("dim_red_lt_nm1_sq_7").at("pass") == Json("n/a"));
}

TEST_CASE("shipped schema file matches the built-in schema") {
#ifdef CRSYM_SOURCE_DIR
    std::ifstream in(std::string(CRSYM_SOURCE_DIR) + "/data/report.schema.json");
    REQUIRE(in.good());
    Json shipped;
    in >> shipped;
    CHECK(shipped == report_schema());
#endif
}

TEST_CASE("schema validator flags structural violations") {
    Json schema = Json::parse(R"({"type":"object","required":["a"],
        "properties":{"a":{"type":"integer"}}})");
    CHECK(validate_schema(Json::parse(R"({"a":3})"), schema));
    CHECK_FALSE(validate_schema(Json::parse(R"({"a":"x"})"), schema));
    CHECK_FALSE(validate_schema(Json::parse(R"({})"), schema));
}

TEST_SUITE_END();
