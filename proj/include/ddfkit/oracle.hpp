#pragma once

#include <ddfkit/core.hpp>
#include <ddfkit/ddf.hpp>
#include <ddfkit/technology.hpp>

#include <cmath>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

/// Brute-force references on grids. Independent of the solver in ddf.hpp: they only evaluate F
/// at enumerated points. Results hold "on the grid" and nothing more.
namespace ddfkit::oracle {

/// Comparison slack for grid floats.
inline constexpr double dom_eps = 1e-9;
/// Scan bound for unbounded ends of Gamma.
inline constexpr double truncation = 1e4;

/// Axis-aligned grid: points lower_a + k * step on every axis a.
class GridSpec {
public:
    GridSpec(double step, std::vector<std::pair<double, double>> bounds) : step_(step), bounds_(std::move(bounds)) {
        if (!(step_ > 0.0) || !std::isfinite(step_)) throw DomainError("grid step must be positive");
        if (bounds_.empty()) throw DimensionError("grid needs at least one axis");
        for (const auto& [lo, hi] : bounds_)
            if (!(lo <= hi)) throw DomainError("grid bounds need lower <= upper");
    }

    /// Same interval on every axis.
    static GridSpec uniform(double step, double lo, double hi, std::size_t axes) {
        return GridSpec(step, std::vector<std::pair<double, double>>(axes, {lo, hi}));
    }

    double step() const noexcept { return step_; }
    std::size_t axes() const noexcept { return bounds_.size(); }

    std::size_t count(std::size_t axis) const {
        const auto [lo, hi] = bounds_[axis];
        return static_cast<std::size_t>(std::floor((hi - lo) / step_ + 1e-9)) + 1;
    }
    double coordinate(std::size_t axis, std::size_t k) const {
        return std::min(bounds_[axis].first + static_cast<double>(k) * step_, bounds_[axis].second);
    }

    /// All points in lexicographic order, first axis slowest.
    std::vector<Vec> points() const {
        std::vector<Vec> out;
        std::vector<std::size_t> idx(axes(), 0);
        for (;;) {
            Vec p(axes());
            for (std::size_t a = 0; a < axes(); ++a) p[a] = coordinate(a, idx[a]);
            out.push_back(std::move(p));
            std::size_t a = axes();
            while (a > 0) {
                --a;
                if (++idx[a] < count(a)) break;
                idx[a] = 0;
                if (a == 0) return out;
            }
        }
    }

private:
    double step_;
    std::vector<std::pair<double, double>> bounds_;
};

struct GridDdfResult {
    ExtendedValue value = ExtendedValue::neg_infinity();
    bool truncated = false;
    std::uint64_t evaluations = 0;
};

/// Largest beta on the grid {k * step} (plus the finite ends of Gamma) with
/// (y + beta g_y, x - beta g_x) in T. Coarse blocks of 1024 steps are scanned from the top first;
/// the feasible beta form an interval because T is convex, so the finest scan only runs inside
/// the block above the highest feasible coarse point, or everywhere when no coarse point is
/// feasible.
inline GridDdfResult grid_ddf_detailed(const Technology& tech, const Bundle& bundle, const Direction& dir,
                                       double step) {
    if (!(step > 0.0)) throw DomainError("grid step must be positive");
    tech.require_dims(bundle.m(), bundle.n());
    require_compatible(bundle, dir);

    // Gamma, recomputed here from the nonnegativity constraints.
    double lower = -std::numeric_limits<double>::infinity(), upper = std::numeric_limits<double>::infinity();
    for (std::size_t j = 0; j < dir.m(); ++j)
        if (dir.g_y()[j] > 0.0) lower = std::max(lower, -bundle.y()[j] / dir.g_y()[j]);
    for (std::size_t i = 0; i < dir.n(); ++i)
        if (dir.g_x()[i] > 0.0) upper = std::min(upper, bundle.x()[i] / dir.g_x()[i]);

    GridDdfResult r;
    r.truncated = lower < -truncation || upper > truncation;
    const double lo = std::max(lower, -truncation), hi = std::min(upper, truncation);

    Vec y(bundle.m()), x(bundle.n());
    auto feasible = [&](double beta) {
        ++r.evaluations;
        for (std::size_t k = 0; k < y.size(); ++k) y[k] = bundle.y()[k] + beta * dir.g_y()[k];
        for (std::size_t i = 0; i < x.size(); ++i) x[i] = bundle.x()[i] - beta * dir.g_x()[i];
        return eval_F_raw(tech, y, x) <= 0.0;
    };
    auto found = [&](double beta) {
        r.value = ExtendedValue::finite(beta);
        return r;
    };

    if (std::isfinite(upper) && upper == hi && feasible(upper)) return found(upper);

    const auto k_lo = static_cast<std::int64_t>(std::ceil(lo / step - 1e-9));
    const auto k_hi = static_cast<std::int64_t>(std::floor(hi / step + 1e-9));
    auto at = [&](std::int64_t k) { return std::clamp(static_cast<double>(k) * step, lo, hi); };

    constexpr std::int64_t block = 1024;
    std::optional<std::int64_t> coarse;
    for (std::int64_t k = k_hi; k >= k_lo; k -= block) {
        if (feasible(at(k))) {
            coarse = k;
            break;
        }
    }
    if (coarse) {
        for (std::int64_t k = std::min(*coarse + block - 1, k_hi); k > *coarse; --k)
            if (feasible(at(k))) return found(at(k));
        return found(at(*coarse));
    }
    for (std::int64_t k = k_hi; k >= k_lo; --k) {
        if ((k_hi - k) % block == 0) continue; // already rejected
        if (feasible(at(k))) return found(at(k));
    }
    if (std::isfinite(lower) && lower == lo && feasible(lower)) return found(lower);
    return r;
}

inline ExtendedValue grid_ddf(const Technology& tech, const Bundle& bundle, const Direction& dir, double step) {
    return grid_ddf_detailed(tech, bundle, dir, step).value;
}

/// Feasible grid points of P(fixed) (side = output) or L(fixed) (side = input) that no other
/// feasible grid point dominates:
///   eff  - no feasible point better-or-equal everywhere and different;
///   weff - no feasible point strictly better in every coordinate (zeros may stay zero);
///   isoq - no feasible radial expansion (outputs, theta > 1) or contraction (inputs, lambda < 1)
///          that is itself a grid point.
inline std::vector<Vec> grid_frontier(const Technology& tech, Side side, std::span<const double> fixed,
                                      const GridSpec& grid, FrontierKind kind) {
    const std::size_t dim = side == Side::output ? tech.m() : tech.n();
    ddfkit::detail::require_same_length(fixed.size(), side == Side::output ? tech.n() : tech.m(), "fixed vector");
    ddfkit::detail::require_same_length(grid.axes(), dim, "grid axes");
    ddfkit::detail::require_nonnegative(fixed, "fixed");

    std::vector<Vec> feasible;
    for (auto& p : grid.points()) {
        bool nonneg = true;
        for (double c : p) nonneg = nonneg && c >= 0.0;
        if (!nonneg) continue;
        const double f = side == Side::output ? eval_F_raw(tech, p, fixed) : eval_F_raw(tech, fixed, p);
        if (f <= dom_eps) feasible.push_back(std::move(p));
    }

    // "better" means larger for outputs, smaller for inputs.
    const double sgn = side == Side::output ? 1.0 : -1.0;
    auto dominates = [&](const Vec& q, const Vec& p) {
        switch (kind) {
        case FrontierKind::eff: {
            bool strict = false;
            for (std::size_t a = 0; a < dim; ++a) {
                const double d = sgn * (q[a] - p[a]);
                if (d < -dom_eps) return false;
                strict = strict || d > dom_eps;
            }
            return strict;
        }
        case FrontierKind::weff: {
            for (std::size_t a = 0; a < dim; ++a) {
                const bool both_zero = std::abs(q[a]) <= dom_eps && std::abs(p[a]) <= dom_eps;
                if (!(sgn * (q[a] - p[a]) > dom_eps || both_zero)) return false;
            }
            return true;
        }
        case FrontierKind::isoq: {
            // q = s * p with s > 1 (outputs) or 0 <= s < 1 (inputs).
            std::size_t pivot = dim;
            for (std::size_t a = 0; a < dim; ++a)
                if (std::abs(p[a]) > dom_eps && (pivot == dim || std::abs(p[a]) > std::abs(p[pivot]))) pivot = a;
            if (pivot == dim) return side == Side::output || ddfkit::detail::is_zero(q); // p = 0
            const double s = q[pivot] / p[pivot];
            for (std::size_t a = 0; a < dim; ++a)
                if (std::abs(q[a] - s * p[a]) > dom_eps) return false;
            return side == Side::output ? s > 1.0 + dom_eps : (s >= 0.0 && s < 1.0 - dom_eps);
        }
        }
        return false;
    };

    std::vector<Vec> out;
    for (const auto& p : feasible) {
        bool dominated = false;
        for (const auto& q : feasible) {
            if (dominates(q, p)) {
                dominated = true;
                break;
            }
        }
        if (!dominated) out.push_back(p);
    }
    return out;
}

enum class JpfKind { isoquant, efficient };

struct JpfReport {
    bool holds_on_grid = true;
    std::optional<std::pair<Vec, Vec>> counterexample; // first violating (y, x) in grid order
    std::vector<std::pair<Vec, Vec>> violations;
    std::size_t pairs_checked = 0; // pairs in Y1 x X1
};

/// Grid test of the existence condition for an isoquant or efficient joint production function:
/// on every (y, x) in Y1 x X1, membership of x in the frontier of L(y) must match membership of y
/// in the frontier of P(x). The grid spans (y_1..y_m, x_1..x_n).
inline JpfReport jpf_existence_check(const Technology& tech, const GridSpec& grid, JpfKind kind) {
    const std::size_t m = tech.m(), n = tech.n();
    ddfkit::detail::require_same_length(grid.axes(), m + n, "grid axes");
    const FrontierKind fk = kind == JpfKind::isoquant ? FrontierKind::isoq : FrontierKind::eff;

    JpfReport rep;
    for (const auto& p : grid.points()) {
        const Vec y(p.begin(), p.begin() + static_cast<std::ptrdiff_t>(m));
        const Vec x(p.begin() + static_cast<std::ptrdiff_t>(m), p.end());
        bool nonneg = true;
        for (double c : p) nonneg = nonneg && c >= 0.0;
        if (!nonneg) continue;
        if (classify(tech, Side::output, y) != PartitionCell::Y1) continue;
        if (classify(tech, Side::input, x) != PartitionCell::X1) continue;
        ++rep.pairs_checked;
        const bool x_on = frontier_member(tech, Side::input, y, x, fk);
        const bool y_on = frontier_member(tech, Side::output, x, y, fk);
        if (x_on != y_on) {
            rep.holds_on_grid = false;
            if (!rep.counterexample) rep.counterexample = std::make_pair(y, x);
            rep.violations.emplace_back(y, x);
        }
    }
    return rep;
}

/// A point of WEff P(x) outside Eff P(x) on which the unsymmetric transformation function for
/// output `output` reproduces the point's own coordinate.
struct UnsymmetricWitness {
    Vec y;
    std::size_t output = 0;
    double t = 0.0;
};

/// All grid points y in WEff P(x) \ Eff P(x), each paired with every output index i whose
/// unsymmetric transformation function t(y^-i, x) equals y_i (to `tol`).
inline std::vector<UnsymmetricWitness> weak_not_efficient_witnesses(const Technology& tech, std::span<const double> x,
                                                                    const GridSpec& grid, double tol = 1e-9) {
    std::vector<UnsymmetricWitness> out;
    const Vec xv(x.begin(), x.end());
    for (const auto& y : grid.points()) {
        bool nonneg = true;
        for (double c : y) nonneg = nonneg && c >= 0.0;
        if (!nonneg) continue;
        if (!frontier_member(tech, Side::output, x, y, FrontierKind::weff)) continue;
        if (frontier_member(tech, Side::output, x, y, FrontierKind::eff)) continue;
        for (std::size_t i = 0; i < y.size(); ++i) {
            const auto t = unsymmetric_t(tech, i, Bundle(y, xv));
            if (t.is_finite() && std::abs(t.value() - y[i]) <= tol) out.push_back({y, i, t.value()});
        }
    }
    return out;
}

} // namespace ddfkit::oracle
