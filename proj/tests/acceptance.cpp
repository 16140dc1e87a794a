// One PASS/FAIL line per acceptance criterion. Exit status is the number of failures.

#include <ddfkit/ddfkit.hpp>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>

using namespace ddfkit;

namespace {

struct Outcome {
    bool pass;
    std::string detail;
};

int failures = 0;

void criterion(int id, const char* title, double limit_s, const std::function<Outcome()>& body) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
        o = body();
    } catch (const std::exception& e) {
        o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = secs < limit_s;
    const bool ok = o.pass && in_time;
    if (!ok) ++failures;
    std::printf("%s %d %s: %s [%.3f s, limit %.0f s%s]\n", ok ? "PASS" : "FAIL", id, title, o.detail.c_str(), secs,
                limit_s, in_time ? "" : ", too slow");
    std::fflush(stdout);
}

std::string g(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3g", v);
    return buf;
}

Technology fig4() { return Technology::quadratic_separable({{1, 1}, {1, 1}, {{1, 0}, {0, 1}}}); }

// Largest v >= 0 with output i at v feasible, from each technology's own formula.
ExtendedValue analytic_t(const Technology& t, std::size_t i, const Bundle& b) {
    const auto& y = b.y();
    const auto& x = b.x();
    auto fin = [](double v) { return v >= 0.0 ? ExtendedValue::finite(v) : ExtendedValue::neg_infinity(); };
    switch (t.m() == 1 ? 0 : t.n() == 1 ? 1 : t.is_quadratic() ? 3 : 2) {
    case 0: return ExtendedValue::finite(kinds::Staircase::h(x[0]));
    case 1: // y2 <= x, y1 + y2 <= 2x
        if (i == 0) return y[1] <= x[0] ? fin(2 * x[0] - y[1]) : ExtendedValue::neg_infinity();
        return fin(std::min(x[0], 2 * x[0] - y[0]));
    case 2: // y2 <= x2, y1 + y2 <= x1 + x2
        if (i == 0) return y[1] <= x[1] ? fin(x[0] + x[1] - y[1]) : ExtendedValue::neg_infinity();
        return fin(std::min(x[1], x[0] + x[1] - y[0]));
    default: {
        const auto& p = t.quadratic_params();
        Vec yh = y;
        yh[i] = 0.0;
        const double c0 = eval_F_raw(t, yh, x);
        if (c0 > 0.0) return ExtendedValue::neg_infinity();
        double lin = p.b[i];
        for (std::size_t l = 0; l < y.size(); ++l)
            if (l != i) lin += p.B[i][l] * y[l];
        const double a = p.B[i][i];
        return ExtendedValue::finite(a == 0.0 ? -c0 / lin : -2.0 * c0 / (lin + std::sqrt(lin * lin - 2.0 * a * c0)));
    }
    }
}

} // namespace

int main() {
    criterion(1, "figure 4 value", 1.0, [] {
        const double exact = 2.0 * std::sqrt(3.0) - 3.0;
        const Bundle b({0.5, 0.5}, {1, 1});
        const Direction d({0.5, 0.5}, {0, 0});
        const double c = eval_ddf(fig4(), b, d, Method::closed).value();
        const double s = eval_ddf(fig4(), b, d, Method::bisect).value();
        const double gr = oracle::grid_ddf(fig4(), b, d, 1e-4).value();
        const double ec = std::abs(c - exact), es = std::abs(s - exact), eg = std::abs(gr - exact);
        return Outcome{ec <= 1e-12 && es <= 1e-8 && eg <= 1e-4,
                       "closed err " + g(ec) + ", bisect err " + g(es) + ", grid err " + g(eg)};
    });

    criterion(2, "restricted quadratic violates D2 but translates", 5.0, [] {
        const Bundle b({1, 1}, {1, 1});
        const Direction d({1, 1}, {1, 1});
        int violated = 0;
        double worst_residual = 0.0, smallest_dev = 1e300;
        for (std::uint64_t seed = 1; seed <= 100; ++seed) {
            const auto free = quad::random_free_params(seed, 2, 2);
            const auto w = quad::max_homogeneity_deviation(free, b, d);
            if (w.deviation > 1e-3) ++violated;
            smallest_dev = std::min(smallest_dev, w.deviation);
            const auto p = quad::restrict_parameters(free, d);
            for (double alpha : {-0.5, 0.3, 1.0})
                worst_residual = std::max(worst_residual, quad::translation_residual(p, b, alpha));
        }
        return Outcome{violated >= 95 && worst_residual <= 1e-10,
                       std::to_string(violated) + "/100 seeds above 1e-3 (smallest " + g(smallest_dev) +
                           "), worst translation residual " + g(worst_residual)};
    });

    criterion(3, "D1-D6 on the figure 4 technology", 10.0, [] {
        bool ok = true;
        std::string detail;
        for (auto p : all_d_properties) {
            const auto r = check_property(fig4(), p, {200, 1});
            ok = ok && r.pass;
            detail += std::string(detail.empty() ? "" : ", ") + std::string(to_string(p)) + " " + g(r.worst_violation) +
                      "/" + std::to_string(r.checked);
        }
        return Outcome{ok, detail};
    });

    criterion(4, "frontier facts of the worked technologies", 5.0, [] {
        const auto s = Technology::staircase(), a = Technology::polyhedral_a(), b = Technology::polyhedral_b();
        const Vec one{1}, two{2}, half_one{0.5, 1}, x11{1, 1};
        const bool f1 = frontier_member(s, Side::output, two, one, FrontierKind::isoq);
        const bool f2 = !frontier_member(s, Side::input, one, two, FrontierKind::isoq);
        const bool f3 = !frontier_member(a, Side::output, one, half_one, FrontierKind::eff);
        const bool f4 = frontier_member(a, Side::input, half_one, one, FrontierKind::eff);
        const auto grid3 = oracle::GridSpec::uniform(0.25, 0.0, 2.0, 3);
        const auto iso = oracle::jpf_existence_check(a, grid3, oracle::JpfKind::isoquant);
        const auto eff = oracle::jpf_existence_check(a, grid3, oracle::JpfKind::efficient);
        bool pair = false;
        for (const auto& v : eff.violations) pair = pair || (v.first == half_one && v.second == one);
        const bool f5 = iso.holds_on_grid && !eff.holds_on_grid && pair;
        const auto stair = oracle::jpf_existence_check(s, oracle::GridSpec::uniform(0.25, 0.0, 3.0, 2),
                                                       oracle::JpfKind::isoquant);
        bool stair_pair = false;
        for (const auto& v : stair.violations) stair_pair = stair_pair || (v.first == one && v.second == two);
        const bool f6 = !stair.holds_on_grid && stair_pair;
        const auto t2 = unsymmetric_t(b, 1, Bundle(half_one, x11));
        const bool f7 = t2.is_finite() && std::abs(t2.value() - 1.0) <= 1e-9 &&
                        frontier_member(b, Side::output, x11, half_one, FrontierKind::weff) &&
                        !frontier_member(b, Side::output, x11, half_one, FrontierKind::eff);
        bool witnessed = false;
        for (const auto& w : oracle::weak_not_efficient_witnesses(b, x11, oracle::GridSpec::uniform(0.25, 0.0, 2.0, 2)))
            witnessed = witnessed || (w.y == half_one && w.output == 1);
        auto tf = [](bool v) { return v ? "ok" : "BAD"; };
        return Outcome{f1 && f2 && f3 && f4 && f5 && f6 && f7 && witnessed,
                       std::string("staircase isoq ") + tf(f1 && f2) + ", A eff/L " + tf(f3 && f4) + ", A JPF " +
                           tf(f5) + ", staircase JPF " + tf(f6) + ", B witness " + tf(f7 && witnessed)};
    });

    criterion(5, "grid oracle agrees with the solver", 30.0, [] {
        const double step = 1e-3;
        const Technology techs[] = {fig4(), Technology::staircase(), Technology::polyhedral_a(), Technology::polyhedral_b()};
        int neg = 0, gy0 = 0, gx0 = 0;
        double worst = 0.0;
        bool ok = true;
        Rng rng(2025);
        for (int s = 0; s < 100; ++s) {
            const auto& t = techs[s % 4];
            const Bundle b = sample_bundle(rng, t.m(), t.n());
            const Direction d = sample_direction(rng, t.m(), t.n(), true);
            gy0 += detail::is_zero(d.g_y());
            gx0 += detail::is_zero(d.g_x());
            const auto e = eval_ddf(t, b, d), o = oracle::grid_ddf(t, b, d, step);
            if (e.is_finite() != o.is_finite()) {
                ok = false;
                continue;
            }
            if (!e.is_finite()) {
                ++neg;
                continue;
            }
            worst = std::max(worst, std::abs(e.value() - o.value()));
        }
        ok = ok && worst <= 2 * step && gy0 > 0 && gx0 > 0;
        return Outcome{ok, "worst gap " + g(worst) + ", " + std::to_string(neg) + " -inf matched, " +
                               std::to_string(gy0) + " with g_y=0, " + std::to_string(gx0) + " with g_x=0"};
    });

    criterion(6, "unsymmetric t equals the shifted distance along (e_i, 0)", 10.0, [] {
        const Technology techs[] = {fig4(), Technology::polyhedral_a(), Technology::polyhedral_b(),
                                    Technology::staircase()};
        double worst = 0.0;
        int finite = 0;
        bool ok = true;
        Rng rng(6);
        for (int s = 0; s < 100; ++s) {
            const auto& t = techs[s % 4];
            const Bundle b = sample_bundle(rng, t.m(), t.n());
            const std::size_t i = rng.index(t.m());
            const auto tv = unsymmetric_t(t, i, b);
            const auto shifted = eval_ddf(t, b, Direction::output_axis(i, t.m(), t.n())) + b.y()[i];
            const auto ref = analytic_t(t, i, b);
            if (tv.is_finite() != shifted.is_finite() || tv.is_finite() != ref.is_finite()) {
                ok = false;
                continue;
            }
            if (!tv.is_finite()) continue;
            ++finite;
            worst = std::max({worst, std::abs(tv.value() - shifted.value()), std::abs(tv.value() - ref.value())});
        }
        return Outcome{ok && worst <= 1e-9, "worst gap " + g(worst) + " over " + std::to_string(finite) + " finite cases"};
    });

    return failures;
}
