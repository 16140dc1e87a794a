#pragma once

#include <ddfkit/ddf.hpp>
#include <ddfkit/sampling.hpp>
#include <ddfkit/technology.hpp>

#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>

/// Sampled verification of the distance-function properties D1-D6 and of the transformation
/// function properties behind them (F1, F3, F4 and the induced T4, T5).
namespace ddfkit {

enum class Property { D1, D2, D3, D4, D5, D6, F1, F3, F4, T4, T5 };

inline constexpr Property all_d_properties[] = {Property::D1, Property::D2, Property::D3,
                                                Property::D4, Property::D5, Property::D6};
inline constexpr Property all_f_properties[] = {Property::F1, Property::F3, Property::F4, Property::T4,
                                                Property::T5};

inline std::string_view to_string(Property p) {
    switch (p) {
    case Property::D1: return "D1";
    case Property::D2: return "D2";
    case Property::D3: return "D3";
    case Property::D4: return "D4";
    case Property::D5: return "D5";
    case Property::D6: return "D6";
    case Property::F1: return "F1";
    case Property::F3: return "F3";
    case Property::F4: return "F4";
    case Property::T4: return "T4";
    case Property::T5: return "T5";
    }
    return "?";
}

inline std::optional<Property> parse_property(std::string_view s) {
    for (auto p : all_d_properties)
        if (to_string(p) == s) return p;
    for (auto p : all_f_properties)
        if (to_string(p) == s) return p;
    return std::nullopt;
}

/// Tolerances pinned per property.
namespace tolerance {
inline constexpr double translation = 1e-8;      // D1, absolute
inline constexpr double homogeneity = 1e-9;      // D2, relative to max(1, |D|)
inline constexpr double sign_guard = 1e-9;       // D4 skips |F| <= guard
inline constexpr double monotonicity = 1e-9;     // D5, relative to max(1, |D|)
inline constexpr double concavity = 1e-10;       // D6, absolute
inline constexpr double boundedness_factor = 1.01; // T5 probe beyond the axis root
} // namespace tolerance

inline constexpr double homogeneity_scales[] = {0.5, 2.0, 10.0};

struct CheckConfig {
    std::size_t samples = 200;
    std::uint64_t seed = 1;
    Method method = Method::automatic;
};

struct PropertyReport {
    Property property = Property::D1;
    bool pass = true;
    std::size_t samples = 0;  // draws requested
    std::size_t checked = 0;  // comparisons actually evaluated
    double worst_violation = 0.0;
    double tolerance = 0.0;
    std::string witness;      // instance attaining the worst violation
    std::uint64_t seed = 0;
};

namespace detail {

inline std::string fmt_vec(const Vec& v) {
    std::ostringstream os;
    os.precision(17);
    os << '(';
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
    os << ')';
    return os.str();
}

inline std::string fmt_num(double v) {
    std::ostringstream os;
    os.precision(17);
    os << v;
    return os.str();
}

inline std::string describe(const Bundle& b) { return "y=" + fmt_vec(b.y()) + " x=" + fmt_vec(b.x()); }
inline std::string describe(const Bundle& b, const Direction& d) {
    return describe(b) + " g_y=" + fmt_vec(d.g_y()) + " g_x=" + fmt_vec(d.g_x());
}

class Tracker {
public:
    Tracker(Property p, const CheckConfig& cfg, double tol) {
        r_.property = p;
        r_.samples = cfg.samples;
        r_.seed = cfg.seed;
        r_.tolerance = tol;
    }
    void record(double violation, const std::string& witness) {
        ++r_.checked;
        if (std::isnan(violation)) violation = std::numeric_limits<double>::infinity();
        if (violation > r_.worst_violation || (r_.witness.empty() && violation >= r_.worst_violation)) {
            r_.worst_violation = violation;
            r_.witness = witness;
        }
    }
    PropertyReport finish() {
        r_.pass = r_.worst_violation <= r_.tolerance;
        return r_;
    }

private:
    PropertyReport r_;
};

// Strictly positive perturbation in one coordinate, nonnegative elsewhere.
inline Vec bump(Rng& rng, std::size_t len) {
    Vec d = uniform_vec(rng, len, 0.0, 0.5);
    d[rng.index(len)] += 0.01 + rng.uniform(0.0, 0.5);
    return d;
}

// D(a) - D(b) with the extended-real conventions: finite minus -inf is +inf.
inline double excess(const ExtendedValue& a, const ExtendedValue& b) {
    if (a.is_neg_infinity()) return b.is_neg_infinity() ? 0.0 : -std::numeric_limits<double>::infinity();
    if (b.is_neg_infinity()) return std::numeric_limits<double>::infinity();
    return a.value() - b.value();
}

} // namespace detail

/// Run one sampled property check. Requires a quadratic-separable technology, on which every
/// property is a theorem.
inline PropertyReport check_property(const Technology& tech, Property prop, const CheckConfig& cfg = {}) {
    if (!tech.is_quadratic())
        throw std::invalid_argument("property checks require a quadratic_separable technology");
    const std::size_t m = tech.m(), n = tech.n();
    const auto& params = tech.quadratic_params();
    Rng rng(cfg.seed);
    auto D = [&](const Bundle& b, const Direction& d) { return eval_ddf(tech, b, d, cfg.method); };
    const double inf = std::numeric_limits<double>::infinity();

    switch (prop) {
    case Property::D1: {
        detail::Tracker t(prop, cfg, tolerance::translation);
        for (std::size_t s = 0; s < cfg.samples; ++s) {
            const Bundle b = sample_bundle(rng, m, n);
            const Direction d = sample_direction(rng, m, n);
            const auto g = gamma_interval(b, d);
            const double lo = std::max(g.lower.value_or(-3.0), -3.0), hi = std::min(g.upper.value_or(3.0), 3.0);
            const double alpha = rng.uniform(lo, hi);
            const auto base = D(b, d), moved = D(b.shifted(d, alpha), d);
            double v;
            if (base.is_neg_infinity() || moved.is_neg_infinity())
                v = base.is_neg_infinity() == moved.is_neg_infinity() ? 0.0 : inf;
            else
                v = std::abs(moved.value() - (base.value() - alpha));
            t.record(v, detail::describe(b, d) + " alpha=" + detail::fmt_num(alpha));
        }
        return t.finish();
    }
    case Property::D2: {
        detail::Tracker t(prop, cfg, tolerance::homogeneity);
        for (std::size_t s = 0; s < cfg.samples; ++s) {
            const Bundle b = sample_bundle(rng, m, n);
            const Direction d = sample_direction(rng, m, n);
            const auto base = D(b, d);
            for (double psi : homogeneity_scales) {
                const auto scaled = D(b, d.scaled(psi));
                double v;
                if (base.is_neg_infinity() || scaled.is_neg_infinity())
                    v = base.is_neg_infinity() == scaled.is_neg_infinity() ? 0.0 : inf;
                else
                    v = std::abs(psi * scaled.value() - base.value()) / std::max(1.0, std::abs(base.value()));
                t.record(v, detail::describe(b, d) + " psi=" + detail::fmt_num(psi));
            }
        }
        return t.finish();
    }
    case Property::D3: {
        detail::Tracker t(prop, cfg, 0.0);
        const Bundle origin(Vec(m, 0.0), Vec(n, 0.0));
        for (std::size_t s = 0; s < cfg.samples; ++s) {
            const Direction d = sample_direction(rng, m, n);
            const auto v = D(origin, d);
            t.record(v.is_finite() ? std::abs(v.value()) : inf, detail::describe(origin, d));
        }
        return t.finish();
    }
    case Property::D4: {
        detail::Tracker t(prop, cfg, 0.0);
        for (std::size_t s = 0; s < cfg.samples; ++s) {
            const Bundle b = sample_bundle(rng, m, n);
            const Direction d = sample_direction(rng, m, n);
            const double f = eval_F(tech, b);
            if (std::abs(f) <= tolerance::sign_guard) continue;
            const auto v = D(b, d);
            const bool nonneg = v.is_finite() && v.value() >= 0.0;
            t.record(nonneg == (f <= 0.0) ? 0.0 : 1.0, detail::describe(b, d) + " F=" + detail::fmt_num(f));
        }
        return t.finish();
    }
    case Property::D5: {
        detail::Tracker t(prop, cfg, tolerance::monotonicity);
        for (std::size_t s = 0; s < cfg.samples; ++s) {
            const Bundle b = sample_bundle(rng, m, n);
            const Direction d = sample_direction(rng, m, n);
            const auto base = D(b, d);
            const double scale = base.is_finite() ? std::max(1.0, std::abs(base.value())) : 1.0;

            Vec x_more = b.x();
            const Vec dx = detail::bump(rng, n);
            for (std::size_t i = 0; i < n; ++i) x_more[i] += dx[i];
            const Bundle more_input(b.y(), x_more);
            t.record(std::max(0.0, detail::excess(base, D(more_input, d))) / scale,
                     detail::describe(b, d) + " vs x'=" + detail::fmt_vec(x_more));

            Vec y_less = b.y();
            const Vec dy = detail::bump(rng, m);
            for (std::size_t k = 0; k < m; ++k) y_less[k] = std::max(0.0, y_less[k] - dy[k]);
            const Bundle less_output(y_less, b.x());
            const auto lowered = D(less_output, d);
            if (lowered.is_finite())
                t.record(std::max(0.0, detail::excess(base, lowered)) / scale,
                         detail::describe(b, d) + " vs y'=" + detail::fmt_vec(y_less));
        }
        return t.finish();
    }
    case Property::D6: {
        detail::Tracker t(prop, cfg, tolerance::concavity);
        for (std::size_t s = 0; s < cfg.samples; ++s) {
            const Bundle z1 = sample_bundle(rng, m, n), z2 = sample_bundle(rng, m, n);
            const Direction d = sample_direction(rng, m, n);
            Vec ym(m), xm(n);
            for (std::size_t k = 0; k < m; ++k) ym[k] = 0.5 * (z1.y()[k] + z2.y()[k]);
            for (std::size_t i = 0; i < n; ++i) xm[i] = 0.5 * (z1.x()[i] + z2.x()[i]);
            const Bundle mid(ym, xm);
            const auto d1 = D(z1, d), d2 = D(z2, d), dm = D(mid, d);
            if (!d1.is_finite() || !d2.is_finite()) continue;
            const double v = dm.is_finite() ? std::max(0.0, 0.5 * d1.value() + 0.5 * d2.value() - dm.value()) : inf;
            t.record(v, detail::describe(z1) + " | " + detail::describe(z2) + " g_y=" +
                            detail::fmt_vec(d.g_y()) + " g_x=" + detail::fmt_vec(d.g_x()));
        }
        return t.finish();
    }
    case Property::F1: {
        detail::Tracker t(prop, cfg, 0.0);
        const Bundle origin(Vec(m, 0.0), Vec(n, 0.0));
        t.record(std::abs(eval_F(tech, origin)), detail::describe(origin));
        return t.finish();
    }
    case Property::F3: {
        // Violation 1 whenever the strict inequality fails.
        detail::Tracker t(prop, cfg, 0.0);
        for (std::size_t s = 0; s < cfg.samples; ++s) {
            const Bundle b = sample_bundle(rng, m, n);
            const double f = eval_F(tech, b);
            Vec y = b.y(), x = b.x();
            const Vec dy = detail::bump(rng, m), dx = detail::bump(rng, n);
            for (std::size_t k = 0; k < m; ++k) y[k] += dy[k];
            for (std::size_t i = 0; i < n; ++i) x[i] += dx[i];
            t.record(eval_F(tech, Bundle(y, b.x())) > f ? 0.0 : 1.0, detail::describe(b) + " y'=" + detail::fmt_vec(y));
            t.record(eval_F(tech, Bundle(b.y(), x)) < f ? 0.0 : 1.0, detail::describe(b) + " x'=" + detail::fmt_vec(x));
        }
        return t.finish();
    }
    case Property::F4: {
        detail::Tracker t(prop, cfg, conv_tol);
        for (std::size_t s = 0; s < cfg.samples; ++s) {
            const Bundle z1 = sample_bundle(rng, m, n), z2 = sample_bundle(rng, m, n);
            Vec ym(m), xm(n);
            for (std::size_t k = 0; k < m; ++k) ym[k] = 0.5 * (z1.y()[k] + z2.y()[k]);
            for (std::size_t i = 0; i < n; ++i) xm[i] = 0.5 * (z1.x()[i] + z2.x()[i]);
            const double v = eval_F(tech, Bundle(ym, xm)) - 0.5 * eval_F(tech, z1) - 0.5 * eval_F(tech, z2);
            t.record(std::max(0.0, v), detail::describe(z1) + " | " + detail::describe(z2));
        }
        return t.finish();
    }
    case Property::T4: {
        detail::Tracker t(prop, cfg, 0.0);
        for (std::size_t s = 0; s < cfg.samples; ++s) {
            const Bundle b = sample_bundle(rng, m, n);
            Vec y = b.y(), x = b.x();
            for (auto& c : y) c *= rng.uniform();
            for (auto& c : x) c += rng.uniform(0.0, 1.0);
            if (!contains(tech, b)) continue;
            t.record(contains(tech, Bundle(y, x)) ? 0.0 : 1.0, detail::describe(b) + " -> " + detail::describe(Bundle(y, x)));
        }
        return t.finish();
    }
    case Property::T5: {
        // Axis roots mu_i of F(mu e_i, x) = 0 bound P(x): beyond 1.01 mu_i is infeasible and no
        // sampled feasible y exceeds them.
        detail::Tracker t(prop, cfg, 0.0);
        for (std::size_t s = 0; s < cfg.samples; ++s) {
            const Vec x = uniform_vec(rng, n, 0.0, 3.0);
            const double ax = detail::dot(params.a, x);
            if (ax <= 0.0) continue;
            Vec mu(m);
            for (std::size_t k = 0; k < m; ++k) {
                const double bk = params.b[k], bkk = params.B[k][k];
                mu[k] = 2.0 * ax / (bk + std::sqrt(bk * bk + 2.0 * bkk * ax));
                Vec probe(m, 0.0);
                probe[k] = tolerance::boundedness_factor * mu[k];
                t.record(contains(tech, Bundle(probe, x)) ? 1.0 : 0.0,
                         "x=" + detail::fmt_vec(x) + " probe=" + detail::fmt_vec(probe));
            }
            const Vec y = uniform_vec(rng, m, 0.0, 3.0);
            if (contains(tech, Bundle(y, x))) {
                bool inside = true;
                for (std::size_t k = 0; k < m; ++k) inside = inside && y[k] <= mu[k] * (1.0 + 1e-12);
                t.record(inside ? 0.0 : 1.0, "x=" + detail::fmt_vec(x) + " y=" + detail::fmt_vec(y));
            }
        }
        return t.finish();
    }
    }
    throw std::invalid_argument("unknown property");
}

} // namespace ddfkit
