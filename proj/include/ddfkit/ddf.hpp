#pragma once

#include <ddfkit/core.hpp>
#include <ddfkit/technology.hpp>

#include <cmath>
#include <optional>
#include <string_view>
#include <vector>

/// Directional technology distance function
///   D(y, x; g_y, g_x) = sup{beta : (y + beta g_y, x - beta g_x) in T}
/// solved on the admissible interval Gamma after dropping the redundant nonnegativity constraints.
namespace ddfkit {

/// Admissible beta range [sup_{J+} -y_j/g_yj, inf_{I+} x_i/g_xi]; an empty optional is an
/// unbounded end.
struct GammaInterval {
    std::optional<double> lower;
    std::optional<double> upper;
    std::vector<std::size_t> i_plus; // inputs with g_xi > 0
    std::vector<std::size_t> j_plus; // outputs with g_yj > 0
};

inline GammaInterval gamma_interval(const Bundle& bundle, const Direction& dir) {
    require_compatible(bundle, dir);
    GammaInterval g;
    for (std::size_t j = 0; j < dir.m(); ++j) {
        if (dir.g_y()[j] > 0.0) {
            g.j_plus.push_back(j);
            const double b = -bundle.y()[j] / dir.g_y()[j];
            if (!g.lower || b > *g.lower) g.lower = b;
        }
    }
    for (std::size_t i = 0; i < dir.n(); ++i) {
        if (dir.g_x()[i] > 0.0) {
            g.i_plus.push_back(i);
            const double b = bundle.x()[i] / dir.g_x()[i];
            if (!g.upper || b < *g.upper) g.upper = b; // ties keep the smallest index
        }
    }
    if (g.lower) *g.lower += 0.0; // -0.0 -> 0.0
    return g;
}

enum class LambdaKind { empty, proper_subset, full };
enum class Method { automatic, closed, bisect };

inline std::string_view to_string(LambdaKind k) {
    switch (k) {
    case LambdaKind::empty: return "empty";
    case LambdaKind::proper_subset: return "proper_subset";
    case LambdaKind::full: return "full";
    }
    return "?";
}

inline std::string_view to_string(Method m) {
    switch (m) {
    case Method::automatic: return "auto";
    case Method::closed: return "closed";
    case Method::bisect: return "bisect";
    }
    return "?";
}

struct DdfResult {
    ExtendedValue value = ExtendedValue::neg_infinity();
    LambdaKind lambda = LambdaKind::empty;
    Method method = Method::automatic; // method actually used
    int iterations = 0;                // bisection steps, 0 for the closed form
    bool bracket_exhausted = false;    // downward expansion gave up before finding a feasible beta
};

/// F restricted to the search line: F(y + beta g_y, x - beta g_x).
inline double restricted_F(const Technology& tech, const Bundle& bundle, const Direction& dir, double beta) {
    thread_local Vec y, x;
    y.resize(bundle.m());
    x.resize(bundle.n());
    for (std::size_t k = 0; k < y.size(); ++k) y[k] = bundle.y()[k] + beta * dir.g_y()[k];
    for (std::size_t i = 0; i < x.size(); ++i) x[i] = bundle.x()[i] - beta * dir.g_x()[i];
    return eval_F_raw(tech, y, x);
}

inline constexpr int max_bracket_doublings = 64;
inline constexpr int max_bisection_iterations = 200;
inline constexpr double bisection_rel_width = 1e-12;
inline constexpr double degenerate_curvature = 1e-14;
inline constexpr double discriminant_floor = -1e-12;
/// Rounding slack on F at the lower end of Gamma before the line counts as infeasible.
inline constexpr double empty_slack = 1e-12;

struct BisectionResult {
    double last_true;
    int iterations;
};

/// Largest point of a monotone predicate, given pred(lo) true and pred(hi) false. Returns the
/// feasible end of the final bracket.
template <class Pred>
BisectionResult bisect_boundary(Pred&& pred, double lo, double hi) {
    int it = 0;
    while (it < max_bisection_iterations && hi - lo > bisection_rel_width * std::max(1.0, std::abs(lo))) {
        const double mid = lo + 0.5 * (hi - lo);
        if (mid <= lo || mid >= hi) break;
        if (pred(mid)) lo = mid;
        else hi = mid;
        ++it;
    }
    return {lo, it};
}

namespace detail {

/// Zero of the quadratic-separable F on the line. F_S(beta) = 1/2 A beta^2 + L beta + F(y, x)
/// with A = g_y'Bg_y and L = b'g_y + y'Bg_y + a'g_x > 0.
inline std::optional<double> quadratic_line_root(const QuadraticSeparableParams& p, const Bundle& bundle,
                                                 const Direction& dir) {
    const auto& gy = dir.g_y();
    const std::size_t m = gy.size();
    double curv = 0.0, cross = 0.0;
    for (std::size_t k = 0; k < m; ++k) {
        double bg = 0.0;
        for (std::size_t l = 0; l < m; ++l) bg += p.B[k][l] * gy[l];
        curv += gy[k] * bg;
        cross += bundle.y()[k] * bg;
    }
    const double f0 = quadratic_F(p, bundle.y(), bundle.x());
    const double lin_direct = dot(p.b, gy) + dot(p.a, dir.g_x());
    if (curv <= degenerate_curvature) return -f0 / lin_direct + 0.0;

    const double lin = lin_direct + cross;
    double disc = lin * lin - 2.0 * curv * f0;
    if (disc < discriminant_floor) return std::nullopt;
    disc = std::max(disc, 0.0);
    // Larger root, rationalised: (-L + sqrt(D)) / A == -2 F(y,x) / (L + sqrt(D)).
    return -2.0 * f0 / (lin + std::sqrt(disc)) + 0.0;
}

} // namespace detail

/// Evaluate the distance function with diagnostics. Method::closed requires a quadratic-separable
/// technology; Method::automatic picks closed when available and bisection otherwise.
inline DdfResult eval_ddf_detailed(const Technology& tech, const Bundle& bundle, const Direction& dir,
                                   Method method = Method::automatic) {
    tech.require_dims(bundle.m(), bundle.n());
    require_compatible(bundle, dir);
    if (method == Method::automatic) method = tech.is_quadratic() ? Method::closed : Method::bisect;
    if (method == Method::closed && !tech.is_quadratic())
        throw std::invalid_argument("closed-form root is only available for quadratic_separable technologies");

    DdfResult r;
    r.method = method;
    const GammaInterval gamma = gamma_interval(bundle, dir);
    auto line = [&](double beta) { return restricted_F(tech, bundle, dir, beta); };

    if (gamma.lower && line(*gamma.lower) > empty_slack) return r; // nothing on the segment is feasible
    if (gamma.upper && line(*gamma.upper) <= 0.0) {
        r.lambda = LambdaKind::full;
        r.value = ExtendedValue::finite(*gamma.upper);
        return r;
    }

    if (method == Method::closed) {
        const auto root = detail::quadratic_line_root(tech.quadratic_params(), bundle, dir);
        if (!root) return r;
        r.lambda = LambdaKind::proper_subset;
        r.value = ExtendedValue::finite(gamma.lower ? std::max(*root, *gamma.lower) : *root);
        return r;
    }

    double lo = 0.0;
    if (gamma.lower) {
        lo = *gamma.lower;
    } else {
        bool found = false;
        double beta = -1.0;
        for (int d = 0; d < max_bracket_doublings; ++d, beta *= 2.0) {
            if (line(beta) <= 0.0) {
                lo = beta;
                found = true;
                break;
            }
        }
        if (!found) {
            r.bracket_exhausted = true;
            return r;
        }
    }

    double hi;
    if (gamma.upper) {
        hi = *gamma.upper;
    } else {
        double step = 1.0;
        hi = std::max(lo, 0.0) + step;
        int d = 0;
        while (line(hi) <= 0.0) {
            if (++d >= max_bracket_doublings)
                throw ContractViolation("F stays nonpositive along an unbounded ray; output set is unbounded");
            lo = hi;
            step *= 2.0;
            hi = lo + step;
        }
    }

    const auto b = bisect_boundary([&](double beta) { return line(beta) <= 0.0; }, lo, hi);
    r.lambda = LambdaKind::proper_subset;
    r.iterations = b.iterations;
    r.value = ExtendedValue::finite(b.last_true);
    return r;
}

inline ExtendedValue eval_ddf(const Technology& tech, const Bundle& bundle, const Direction& dir,
                              Method method = Method::automatic) {
    return eval_ddf_detailed(tech, bundle, dir, method).value;
}

/// Largest feasible quantity of output `i` given the other outputs and the inputs, or -inf when
/// no nonnegative quantity is feasible. The entry y_i of `bundle` is ignored.
inline ExtendedValue unsymmetric_t(const Technology& tech, std::size_t i, const Bundle& bundle,
                                   Method method = Method::automatic) {
    tech.require_dims(bundle.m(), bundle.n());
    if (i >= bundle.m()) throw std::out_of_range("output index out of range");
    Vec y = bundle.y();
    y[i] = 0.0;
    const Bundle base(std::move(y), bundle.x());
    return eval_ddf(tech, base, Direction::output_axis(i, bundle.m(), bundle.n()), method);
}

} // namespace ddfkit
