#include <ddfkit/quad_translation.hpp>

#include <catch_amalgamated.hpp>

using namespace ddfkit;
using namespace ddfkit::quad;
using Catch::Approx;

namespace {

FreeQuadraticParams one_by_one(double alpha0, double beta1, double gamma) {
    FreeQuadraticParams f;
    f.alpha0 = alpha0;
    f.beta = {beta1};
    f.gamma = {{gamma}};
    return f;
}

const Bundle unit22({1, 1}, {1, 1});
const Direction unit_dir22({1, 1}, {1, 1});

} // namespace

TEST_CASE("single output single input substitution", "[quad]") {
    const auto r = restrict_parameters(one_by_one(0, 1, 0), Direction({1}, {1}));
    REQUIRE(r.alpha.size() == 1);
    CHECK(r.alpha[0] == 2.0);

    // Hand-solved: alpha1 = (beta1 g_y + 1)/g_x, alpha11 = gamma g_y/g_x, beta11 = gamma g_x/g_y.
    const double gy = 0.5, gx = 2.0, a0 = 0.3, b1 = -0.7, g = 0.4;
    const auto p = restrict_parameters(one_by_one(a0, b1, g), Direction({gy}, {gx}));
    const double a1 = (b1 * gy + 1) / gx, a11 = g * gy / gx, b11 = g * gx / gy;
    CHECK(p.alpha[0] == Approx(a1).epsilon(1e-15));
    CHECK(p.alpha_mat[0][0] == Approx(a11).epsilon(1e-15));
    CHECK(p.beta_mat[0][0] == Approx(b11).epsilon(1e-15));
    const double y = 1.3, x = 0.9;
    const double q = a0 + a1 * x + b1 * y + 0.5 * a11 * x * x + 0.5 * b11 * y * y + g * x * y;
    const Vec yv{y}, xv{x};
    CHECK(eval_Q(p, yv, xv) == Approx(q).epsilon(1e-14));
    CHECK(eval_Q_direction_form(p.free, Direction({gy}, {gx}), yv, xv) == Approx(q).epsilon(1e-12));
}

TEST_CASE("unit scaling leaves the substitution unchanged", "[quad]") {
    const auto f = random_free_params(3, 2, 3);
    const Direction d({0.2, 0.9}, {0.4, 0.1, 0.7});
    const auto a = restrict_parameters(f, d), b = restrict_parameters(f, d.scaled(1.0));
    CHECK(a.alpha == b.alpha);
    CHECK(a.alpha_mat == b.alpha_mat);
    CHECK(a.beta_mat == b.beta_mat);
}

TEST_CASE("restriction residuals vanish", "[quad]") {
    const auto p = restrict_parameters(random_free_params(42, 2, 2), unit_dir22);
    CHECK(restriction_residuals(p).max_abs() <= 1e-12);

    Rng rng(100);
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        const std::size_t m = 1 + rng.index(3), n = 1 + rng.index(3);
        Vec gy = uniform_vec(rng, m, 0.0, 1.0), gx = uniform_vec(rng, n, 0.0, 1.0);
        gy[m - 1] += 0.1;
        gx[n - 1] += 0.1;
        const auto q = restrict_parameters(random_free_params(seed, m, n), Direction(gy, gx));
        REQUIRE(restriction_residuals(q).max_abs() <= 1e-12);
    }
}

TEST_CASE("pivot components must be positive", "[quad]") {
    const auto f = random_free_params(1, 2, 2);
    CHECK_THROWS_WITH(restrict_parameters(f, Direction({1, 1}, {1, 0})), Catch::Matchers::ContainsSubstring("g_x[1]"));
    CHECK_THROWS_WITH(restrict_parameters(f, Direction({1, 0}, {1, 1})), Catch::Matchers::ContainsSubstring("g_y[1]"));
    CHECK_THROWS_AS(restrict_parameters(f, Direction({1, 1, 1}, {1, 1})), DimensionError);
}

TEST_CASE("asymmetric free blocks are rejected", "[quad]") {
    auto f = random_free_params(1, 3, 2);
    f.beta_mat[0][1] += 0.5;
    CHECK_THROWS_AS(restrict_parameters(f, Direction({1, 1, 1}, {1, 1})), DomainError);
}

TEST_CASE("zero bundle evaluates to alpha0", "[quad]") {
    auto f = one_by_one(0, 0, 0);
    const auto p = restrict_parameters(f, Direction({1}, {1}));
    CHECK(eval_Q(p, Bundle({0}, {0})) == 0.0);
    f.alpha0 = 0.25;
    CHECK(eval_Q(restrict_parameters(f, Direction({1}, {1})), Bundle({0}, {0})) == 0.25);
}

TEST_CASE("translation is exact", "[quad][property]") {
    const auto p = restrict_parameters(random_free_params(42, 2, 2), unit_dir22);
    CHECK(translation_residual(p, unit22, 0.3) <= 1e-10);

    Rng rng(5);
    for (std::uint64_t seed = 0; seed < 300; ++seed) {
        const std::size_t m = 1 + rng.index(3), n = 1 + rng.index(3);
        Vec gy = uniform_vec(rng, m, 0.0, 1.0), gx = uniform_vec(rng, n, 0.0, 1.0);
        gy[m - 1] += 0.1;
        gx[n - 1] += 0.1;
        const auto q = restrict_parameters(random_free_params(seed, m, n), Direction(gy, gx));
        const Bundle b = sample_bundle(rng, m, n);
        REQUIRE(translation_residual(q, b, rng.uniform(-2.0, 2.0)) <= 1e-10);
    }
}

TEST_CASE("coefficient path and direction form agree", "[quad][property]") {
    Rng rng(6);
    double worst = 0.0;
    for (std::uint64_t seed = 0; seed < 500; ++seed) {
        const std::size_t m = 1 + rng.index(3), n = 1 + rng.index(3);
        Vec gy = uniform_vec(rng, m, 0.0, 1.0), gx = uniform_vec(rng, n, 0.0, 1.0);
        gy[m - 1] += 0.1;
        gx[n - 1] += 0.1;
        const Direction d(gy, gx);
        const auto f = random_free_params(seed, m, n);
        const auto q = restrict_parameters(f, d);
        const Bundle b = sample_bundle(rng, m, n);
        worst = std::max(worst, std::abs(eval_Q(q, b) - eval_Q_direction_form(f, d, b.y(), b.x())));
    }
    CHECK(worst <= 1e-10);
}

TEST_CASE("homogeneity deviation examples", "[quad]") {
    const auto f = random_free_params(7, 2, 2);
    CHECK(homogeneity_deviation(f, unit22, unit_dir22, 1.0) == 0.0);
    CHECK(homogeneity_deviation(f, unit22, unit_dir22, 2.0) > 1e-3);

    // Linear slice alpha0 = 0, beta1 = 0, m = n = 1: Q = x / g_x scales exactly.
    const auto lin = one_by_one(0, 0, 0);
    for (double psi : {0.5, 2.0, 10.0}) CHECK(homogeneity_deviation(lin, Bundle({0.7}, {1.3}), Direction({0.4}, {0.8}), psi) <= 1e-15);
}

TEST_CASE("homogeneity deviation matches the hand-derived formula", "[quad][property]") {
    // Only alpha_n depends on the scale of the direction, so
    // psi Q_{psi g} - Q_g = (psi - 1) (Q_g - x_n / g_xn).
    Rng rng(12);
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        const std::size_t m = 1 + rng.index(3), n = 1 + rng.index(3);
        Vec gy = uniform_vec(rng, m, 0.0, 1.0), gx = uniform_vec(rng, n, 0.0, 1.0);
        gy[m - 1] += 0.1;
        gx[n - 1] += 0.1;
        const Direction d(gy, gx);
        const auto f = random_free_params(seed, m, n);
        const Bundle b = sample_bundle(rng, m, n);
        const double qg = eval_Q(restrict_parameters(f, d), b);
        for (double psi : {0.5, 2.0, 10.0}) {
            const double expected = std::abs(psi - 1.0) * std::abs(qg - b.x()[n - 1] / gx[n - 1]);
            REQUIRE(homogeneity_deviation(f, b, d, psi) == Approx(expected).margin(1e-10).epsilon(1e-10));
        }
    }
}

TEST_CASE("max homogeneity witness", "[quad]") {
    const auto f = random_free_params(7, 2, 2);
    const auto w = max_homogeneity_deviation(f, unit22, unit_dir22);
    CHECK(w.deviation > 1e-3);
    // |psi - 1| is largest at psi = 10 on the fixed grid
    CHECK(w.psi == 10.0);
    CHECK_THROWS_AS(homogeneity_deviation(f, unit22, unit_dir22, 0.0), DomainError);
}
