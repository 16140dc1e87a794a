#pragma once

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstddef>
#include <limits>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

/// Vector orders, bundles, directions and the extended-real codomain.
namespace ddfkit {

using Vec = std::vector<double>;

/// Raised when vector lengths disagree with each other or with a technology.
class DimensionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Raised when a quantity violates a sign or finiteness requirement.
class DomainError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Raised when an internal guarantee of the algorithms is found broken at run time.
class ContractViolation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

namespace detail {

inline void require_same_length(std::size_t a, std::size_t b, const char* what) {
    if (a != b) {
        throw DimensionError(std::string(what) + ": length " + std::to_string(a) + " vs " +
                             std::to_string(b));
    }
}

inline void require_nonnegative(std::span<const double> v, const char* what) {
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (!std::isfinite(v[i]) || v[i] < 0.0) {
            throw DomainError(std::string(what) + "[" + std::to_string(i) +
                              "] must be finite and nonnegative");
        }
    }
}

inline bool is_zero(std::span<const double> v) {
    return std::all_of(v.begin(), v.end(), [](double c) { return c == 0.0; });
}

inline double dot(std::span<const double> u, std::span<const double> v) {
    double s = 0.0;
    for (std::size_t i = 0; i < u.size(); ++i) s += u[i] * v[i];
    return s;
}

} // namespace detail

enum class Relation { geqq, geq, star_gt, gt };

/// Componentwise vector orders. geqq: all u_i >= v_i; geq: geqq and u != v;
/// star_gt: each u_i > v_i or u_i = v_i = 0; gt: all u_i > v_i. Exact on stored values.
inline bool compare(std::span<const double> u, std::span<const double> v, Relation relation) {
    detail::require_same_length(u.size(), v.size(), "compare");
    switch (relation) {
    case Relation::geqq:
        for (std::size_t i = 0; i < u.size(); ++i)
            if (!(u[i] >= v[i])) return false;
        return true;
    case Relation::geq: {
        bool differs = false;
        for (std::size_t i = 0; i < u.size(); ++i) {
            if (!(u[i] >= v[i])) return false;
            differs = differs || u[i] != v[i];
        }
        return differs;
    }
    case Relation::star_gt:
        for (std::size_t i = 0; i < u.size(); ++i)
            if (!(u[i] > v[i] || (u[i] == 0.0 && v[i] == 0.0))) return false;
        return true;
    case Relation::gt:
        for (std::size_t i = 0; i < u.size(); ++i)
            if (!(u[i] > v[i])) return false;
        return true;
    }
    return false;
}

inline bool geqq(std::span<const double> u, std::span<const double> v) { return compare(u, v, Relation::geqq); }
inline bool geq(std::span<const double> u, std::span<const double> v) { return compare(u, v, Relation::geq); }
inline bool star_gt(std::span<const double> u, std::span<const double> v) { return compare(u, v, Relation::star_gt); }
inline bool gt(std::span<const double> u, std::span<const double> v) { return compare(u, v, Relation::gt); }

/// Nonnegative output vector y paired with nonnegative input vector x.
class Bundle {
public:
    Bundle(Vec y, Vec x) : y_(std::move(y)), x_(std::move(x)) {
        if (y_.empty() || x_.empty()) throw DimensionError("bundle needs m >= 1 outputs and n >= 1 inputs");
        detail::require_nonnegative(y_, "y");
        detail::require_nonnegative(x_, "x");
    }

    const Vec& y() const noexcept { return y_; }
    const Vec& x() const noexcept { return x_; }
    std::size_t m() const noexcept { return y_.size(); }
    std::size_t n() const noexcept { return x_.size(); }
    bool is_origin() const noexcept { return detail::is_zero(y_) && detail::is_zero(x_); }

    /// (y + beta*g_y, x - beta*g_x) with components clamped at zero; callers keep beta inside the
    /// admissible interval so the clamp only absorbs rounding.
    template <class Dir>
    Bundle shifted(const Dir& dir, double beta) const {
        detail::require_same_length(m(), dir.g_y().size(), "shift outputs");
        detail::require_same_length(n(), dir.g_x().size(), "shift inputs");
        Vec y = y_, x = x_;
        for (std::size_t k = 0; k < y.size(); ++k) y[k] = std::max(0.0, y[k] + beta * dir.g_y()[k]);
        for (std::size_t i = 0; i < x.size(); ++i) x[i] = std::max(0.0, x[i] - beta * dir.g_x()[i]);
        return Bundle(std::move(y), std::move(x));
    }

    friend bool operator==(const Bundle&, const Bundle&) = default;

private:
    Vec y_;
    Vec x_;
};

/// Nonzero, nonnegative direction (g_y, g_x).
class Direction {
public:
    Direction(Vec g_y, Vec g_x) : g_y_(std::move(g_y)), g_x_(std::move(g_x)) {
        if (g_y_.empty() || g_x_.empty()) throw DimensionError("direction needs m >= 1 and n >= 1 components");
        detail::require_nonnegative(g_y_, "g_y");
        detail::require_nonnegative(g_x_, "g_x");
        if (detail::is_zero(g_y_) && detail::is_zero(g_x_)) throw DomainError("direction must be nonzero");
    }

    const Vec& g_y() const noexcept { return g_y_; }
    const Vec& g_x() const noexcept { return g_x_; }
    std::size_t m() const noexcept { return g_y_.size(); }
    std::size_t n() const noexcept { return g_x_.size(); }

    Direction scaled(double psi) const {
        if (!(psi > 0.0) || !std::isfinite(psi)) throw DomainError("direction scale must be positive");
        Vec gy = g_y_, gx = g_x_;
        for (auto& c : gy) c *= psi;
        for (auto& c : gx) c *= psi;
        return Direction(std::move(gy), std::move(gx));
    }

    /// (e_i, 0): expand output i only.
    static Direction output_axis(std::size_t i, std::size_t m, std::size_t n) {
        if (i >= m) throw std::out_of_range("output index out of range");
        Vec gy(m, 0.0);
        gy[i] = 1.0;
        return Direction(std::move(gy), Vec(n, 0.0));
    }

    friend bool operator==(const Direction&, const Direction&) = default;

private:
    Vec g_y_;
    Vec g_x_;
};

inline void require_compatible(const Bundle& b, const Direction& d) {
    detail::require_same_length(b.m(), d.m(), "bundle/direction outputs");
    detail::require_same_length(b.n(), d.n(), "bundle/direction inputs");
}

/// Finite real or negative infinity.
class ExtendedValue {
public:
    static ExtendedValue finite(double v) {
        if (!std::isfinite(v)) throw DomainError("finite extended value must be a finite real");
        return ExtendedValue(v + 0.0);
    }
    static ExtendedValue neg_infinity() { return ExtendedValue(-std::numeric_limits<double>::infinity()); }

    bool is_finite() const noexcept { return std::isfinite(v_); }
    bool is_neg_infinity() const noexcept { return !is_finite(); }

    double value() const {
        if (!is_finite()) throw std::logic_error("value() on negative infinity");
        return v_;
    }
    /// Value as a double, -inf for the infinite branch.
    double as_double() const noexcept { return v_; }

    ExtendedValue operator+(double shift) const { return is_finite() ? finite(v_ + shift) : *this; }

    friend bool operator==(const ExtendedValue&, const ExtendedValue&) = default;

private:
    explicit ExtendedValue(double v) : v_(v) {}
    double v_;
};

inline std::string to_string(const ExtendedValue& v) {
    if (v.is_neg_infinity()) return "-inf";
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.15g", v.value());
    return buf;
}

} // namespace ddfkit
