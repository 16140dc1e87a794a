#include <ddfkit/core.hpp>
#include <ddfkit/sampling.hpp>

#include <catch_amalgamated.hpp>

using namespace ddfkit;

TEST_CASE("vector orders on the documented cases", "[core]") {
    const Vec a{1, 2}, b{1, 2};
    CHECK(compare(a, b, Relation::geqq));
    CHECK_FALSE(compare(a, b, Relation::geq));

    const Vec c{2, 0}, d{1, 0};
    CHECK(compare(c, d, Relation::star_gt));
    CHECK_FALSE(compare(c, d, Relation::gt));
}

TEST_CASE("compare rejects mismatched lengths", "[core]") {
    const Vec a{1, 2}, b{1, 2, 3};
    CHECK_THROWS_AS(compare(a, b, Relation::geqq), DimensionError);
}

TEST_CASE("star_gt of a vector with itself holds only at the origin", "[core]") {
    const Vec zero{0, 0, 0}, mixed{0, 1, 0};
    CHECK(star_gt(zero, zero));
    CHECK_FALSE(star_gt(mixed, mixed));
}

TEST_CASE("order chain gt => star_gt => geq => geqq on sampled pairs", "[core][property]") {
    // Small integer lattice so ties and zeros occur often.
    Rng rng(2024);
    int strict_seen = 0;
    for (int s = 0; s < 5000; ++s) {
        const std::size_t len = 1 + rng.index(4);
        Vec u(len), v(len);
        for (std::size_t i = 0; i < len; ++i) {
            u[i] = static_cast<double>(rng.index(3));
            v[i] = static_cast<double>(rng.index(3));
        }
        if (u == v) continue;
        if (gt(u, v)) {
            ++strict_seen;
            REQUIRE(star_gt(u, v));
        }
        if (star_gt(u, v)) REQUIRE(geq(u, v));
        if (geq(u, v)) REQUIRE(geqq(u, v));
    }
    CHECK(strict_seen > 0);
}

TEST_CASE("bundle and direction enforce their invariants", "[core]") {
    CHECK_THROWS_AS(Bundle({-1.0}, {1.0}), DomainError);
    CHECK_THROWS_AS(Bundle({}, {1.0}), DimensionError);
    CHECK_THROWS_AS(Bundle({1.0}, {std::numeric_limits<double>::infinity()}), DomainError);
    CHECK_THROWS_AS(Direction({0.0, 0.0}, {0.0}), DomainError);
    CHECK_THROWS_AS(Direction({0.5}, {-0.1}), DomainError);
    CHECK_NOTHROW(Direction({0.0}, {1.0}));

    const Direction d({1.0, 0.0}, {2.0});
    const auto s = d.scaled(0.5);
    CHECK(s.g_y() == Vec{0.5, 0.0});
    CHECK(s.g_x() == Vec{1.0});
    CHECK_THROWS_AS(d.scaled(0.0), DomainError);
}

TEST_CASE("shifting a bundle along a direction", "[core]") {
    const Bundle b({0.5, 0.5}, {1.0, 1.0});
    const Direction d({0.5, 0.5}, {0.0, 1.0});
    const auto s = b.shifted(d, -1.0);
    CHECK(s.y() == Vec{0.0, 0.0});
    CHECK(s.x() == Vec{1.0, 2.0});
}

TEST_CASE("extended values", "[core]") {
    const auto ninf = ExtendedValue::neg_infinity();
    CHECK(ninf.is_neg_infinity());
    CHECK(to_string(ninf) == "-inf");
    CHECK_THROWS(ninf.value());
    CHECK((ninf + 3.0).is_neg_infinity());

    const auto v = ExtendedValue::finite(-0.0);
    CHECK_FALSE(std::signbit(v.value()));
    CHECK((ExtendedValue::finite(1.5) + 0.5).value() == 2.0);
    CHECK_THROWS_AS(ExtendedValue::finite(std::nan("")), DomainError);
}
