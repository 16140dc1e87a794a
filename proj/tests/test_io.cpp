#include <ddfkit/io.hpp>

#include <catch_amalgamated.hpp>

using namespace ddfkit;
using namespace ddfkit::io;

TEST_CASE("technology JSON round trip", "[io]") {
    const auto j = json::parse(R"({"kind":"quadratic_separable","b":[1,1],"a":[1,1],"B":[[1,0],[0,1]]})");
    const auto t = technology_from_json(j);
    CHECK(t.is_quadratic());
    CHECK(t.m() == 2);
    CHECK(to_json(t) == j);
    for (const char* k : {"staircase", "polyhedral_a", "polyhedral_b"}) {
        const json s{{"kind", k}};
        CHECK(to_json(technology_from_json(s)) == s);
    }
}

TEST_CASE("technology JSON errors", "[io]") {
    CHECK_THROWS_AS(technology_from_json(json::parse(R"({"kind":"translog"})")), SchemaError);
    CHECK_THROWS_AS(technology_from_json(json::parse(R"({"kind":"staircase","b":[1]})")), SchemaError);
    CHECK_THROWS_AS(technology_from_json(json::parse(R"({"kind":"quadratic_separable","b":[1]})")), SchemaError);
    CHECK_THROWS_AS(technology_from_json(json::parse(R"({"kind":"quadratic_separable","b":["x"],"a":[1],"B":[[1]]})")),
                    SchemaError);
    CHECK_THROWS_AS(technology_from_json(json::parse(R"([1,2])")), SchemaError);
    CHECK_THROWS_AS(
        technology_from_json(json::parse(R"({"kind":"quadratic_separable","b":[1,1],"a":[1,1],"B":[[1,2],[2,1]]})")),
        InvalidParameters);
    CHECK_THROWS_AS(read_technology("/nonexistent/tech.json"), SchemaError);
}

TEST_CASE("extended values in JSON", "[io]") {
    CHECK(to_json(ExtendedValue::neg_infinity()) == "-inf");
    CHECK(to_json(ExtendedValue::finite(0.5)) == 0.5);
    CHECK(extended_from_json("-inf").is_neg_infinity());
    CHECK(extended_from_json(1.25).value() == 1.25);
    CHECK_THROWS_AS(extended_from_json("inf"), SchemaError);
}

TEST_CASE("vector parsing", "[io]") {
    CHECK(parse_vector("0.5,0.5") == Vec{0.5, 0.5});
    CHECK(parse_vector("1e-3") == Vec{1e-3});
    CHECK(parse_vector(" 1, 2 ") == Vec{1, 2});
    CHECK_THROWS_AS(parse_vector("1,,2"), SchemaError);
    CHECK_THROWS_AS(parse_vector("1,a"), SchemaError);
    CHECK_THROWS_AS(parse_vector(""), SchemaError);
}
