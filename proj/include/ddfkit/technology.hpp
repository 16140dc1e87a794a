#pragma once

#include <ddfkit/core.hpp>

#include <Eigen/Dense>

#include <cmath>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace ddfkit {

/// Absolute tolerance for "F = 0" frontier tests.
inline constexpr double boundary_tol = 1e-9;
/// Eigenvalues of B must be >= -psd_tol.
inline constexpr double psd_tol = 1e-10;
/// Slack for sampled midpoint-convexity checks.
inline constexpr double conv_tol = 1e-12;

using Matrix = std::vector<Vec>;

/// F(y, x) = b'y + 1/2 y'By - a'x.
struct QuadraticSeparableParams {
    Vec b;
    Vec a;
    Matrix B;
};

/// Violated constraints of a parameter set; empty when the parameters are valid.
inline std::vector<std::string> validate_params(const QuadraticSeparableParams& p) {
    std::vector<std::string> report;
    const std::size_t m = p.b.size();
    if (m == 0) report.emplace_back("b must have at least one entry");
    if (p.a.empty()) report.emplace_back("a must have at least one entry");

    bool finite = true;
    for (double v : p.b) finite = finite && std::isfinite(v);
    for (double v : p.a) finite = finite && std::isfinite(v);
    for (const auto& row : p.B)
        for (double v : row) finite = finite && std::isfinite(v);
    if (!finite) report.emplace_back("parameters must be finite");

    for (double v : p.b) {
        if (!(v > 0.0)) {
            report.emplace_back("b not strictly positive");
            break;
        }
    }
    for (double v : p.a) {
        if (!(v > 0.0)) {
            report.emplace_back("a not strictly positive");
            break;
        }
    }

    bool square = p.B.size() == m;
    for (const auto& row : p.B) square = square && row.size() == m;
    if (!square) {
        report.emplace_back("B must be " + std::to_string(m) + "x" + std::to_string(m));
        return report;
    }
    if (m == 0 || !finite) return report;

    bool symmetric = true, nonnegative = true;
    for (std::size_t k = 0; k < m; ++k) {
        for (std::size_t l = 0; l < m; ++l) {
            symmetric = symmetric && p.B[k][l] == p.B[l][k];
            nonnegative = nonnegative && p.B[k][l] >= 0.0;
        }
    }
    if (!symmetric) report.emplace_back("B not symmetric");
    if (!nonnegative) report.emplace_back("B not entrywise nonnegative");

    Eigen::MatrixXd mat(m, m);
    for (std::size_t k = 0; k < m; ++k)
        for (std::size_t l = 0; l < m; ++l) mat(k, l) = 0.5 * (p.B[k][l] + p.B[l][k]);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(mat, Eigen::EigenvaluesOnly);
    if (eig.info() != Eigen::Success || eig.eigenvalues().minCoeff() < -psd_tol)
        report.emplace_back("B not positive semidefinite");
    return report;
}

/// Thrown when a quadratic-separable technology is built from invalid parameters.
class InvalidParameters : public std::invalid_argument {
public:
    explicit InvalidParameters(std::vector<std::string> report)
        : std::invalid_argument(join(report)), report_(std::move(report)) {}
    const std::vector<std::string>& report() const noexcept { return report_; }

private:
    static std::string join(const std::vector<std::string>& r) {
        std::string s = "invalid parameters:";
        for (const auto& v : r) s += " " + v + ";";
        return s;
    }
    std::vector<std::string> report_;
};

/// One affine constraint c_y.y <= c_x.x + c0 with c_y, c_x, c0 >= 0.
struct AffineConstraint {
    Vec c_y;
    Vec c_x;
    double c0 = 0.0;
};

namespace kinds {

struct QuadraticSeparable {
    QuadraticSeparableParams params;
};

/// P(x) = {y <= h(x)} with h(x) = x on [0,1) and 1 on [1, inf).
struct Staircase {
    static double h(double x) { return x < 1.0 ? x : 1.0; }
};

/// P(x) = {y : y2 <= x, y1 + y2 <= 2x}.
struct PolyhedralA {};

/// P(x) = {y : y2 <= x2, y1 + y2 <= x1 + x2}.
struct PolyhedralB {};

} // namespace kinds

enum class Side { input, output };
enum class FrontierKind { isoq, weff, eff };
enum class PartitionCell { X1, X2, X3, Y1, Y2, Y3 };

inline std::string_view to_string(Side s) { return s == Side::input ? "input" : "output"; }

inline std::string_view to_string(PartitionCell c) {
    switch (c) {
    case PartitionCell::X1: return "X1";
    case PartitionCell::X2: return "X2";
    case PartitionCell::X3: return "X3";
    case PartitionCell::Y1: return "Y1";
    case PartitionCell::Y2: return "Y2";
    case PartitionCell::Y3: return "Y3";
    }
    return "?";
}

inline std::string_view to_string(FrontierKind k) {
    switch (k) {
    case FrontierKind::isoq: return "isoq";
    case FrontierKind::weff: return "weff";
    case FrontierKind::eff: return "eff";
    }
    return "?";
}

/// A production technology T = {(y, x) >= 0 : F(y, x) <= 0}. Immutable once built.
class Technology {
public:
    using Kind = std::variant<kinds::QuadraticSeparable, kinds::Staircase, kinds::PolyhedralA, kinds::PolyhedralB>;

    static Technology quadratic_separable(QuadraticSeparableParams p) {
        auto report = validate_params(p);
        if (!report.empty()) throw InvalidParameters(std::move(report));
        return Technology(kinds::QuadraticSeparable{std::move(p)});
    }
    static Technology staircase() { return Technology(kinds::Staircase{}); }
    static Technology polyhedral_a() { return Technology(kinds::PolyhedralA{}); }
    static Technology polyhedral_b() { return Technology(kinds::PolyhedralB{}); }

    const Kind& kind() const noexcept { return kind_; }
    bool is_quadratic() const noexcept { return std::holds_alternative<kinds::QuadraticSeparable>(kind_); }
    const QuadraticSeparableParams& quadratic_params() const { return std::get<kinds::QuadraticSeparable>(kind_).params; }

    std::string_view name() const {
        return std::visit(
            [](const auto& k) -> std::string_view {
                using K = std::decay_t<decltype(k)>;
                if constexpr (std::is_same_v<K, kinds::QuadraticSeparable>) return "quadratic_separable";
                else if constexpr (std::is_same_v<K, kinds::Staircase>) return "staircase";
                else if constexpr (std::is_same_v<K, kinds::PolyhedralA>) return "polyhedral_a";
                else return "polyhedral_b";
            },
            kind_);
    }

    std::size_t m() const {
        return std::visit(
            [](const auto& k) -> std::size_t {
                using K = std::decay_t<decltype(k)>;
                if constexpr (std::is_same_v<K, kinds::QuadraticSeparable>) return k.params.b.size();
                else if constexpr (std::is_same_v<K, kinds::Staircase>) return 1;
                else return 2;
            },
            kind_);
    }

    std::size_t n() const {
        return std::visit(
            [](const auto& k) -> std::size_t {
                using K = std::decay_t<decltype(k)>;
                if constexpr (std::is_same_v<K, kinds::QuadraticSeparable>) return k.params.a.size();
                else if constexpr (std::is_same_v<K, kinds::PolyhedralB>) return 2;
                else return 1;
            },
            kind_);
    }

    /// Defining inequalities of the piecewise-linear kinds; empty for the quadratic.
    std::vector<AffineConstraint> affine_constraints() const {
        return std::visit(
            [](const auto& k) -> std::vector<AffineConstraint> {
                using K = std::decay_t<decltype(k)>;
                if constexpr (std::is_same_v<K, kinds::Staircase>)
                    return {{{1.0}, {1.0}, 0.0}, {{1.0}, {0.0}, 1.0}};
                else if constexpr (std::is_same_v<K, kinds::PolyhedralA>)
                    return {{{0.0, 1.0}, {1.0}, 0.0}, {{1.0, 1.0}, {2.0}, 0.0}};
                else if constexpr (std::is_same_v<K, kinds::PolyhedralB>)
                    return {{{0.0, 1.0}, {0.0, 1.0}, 0.0}, {{1.0, 1.0}, {1.0, 1.0}, 0.0}};
                else
                    return {};
            },
            kind_);
    }

    void require_dims(std::size_t m, std::size_t n) const {
        detail::require_same_length(m, this->m(), "technology outputs");
        detail::require_same_length(n, this->n(), "technology inputs");
    }

private:
    explicit Technology(Kind k) : kind_(std::move(k)) {}
    Kind kind_;
};

namespace detail {

inline double quadratic_F(const QuadraticSeparableParams& p, std::span<const double> y, std::span<const double> x) {
    double lin = dot(p.b, y) - dot(p.a, x);
    double quad = 0.0;
    for (std::size_t k = 0; k < y.size(); ++k)
        for (std::size_t l = 0; l < y.size(); ++l) quad += y[k] * p.B[k][l] * y[l];
    return lin + 0.5 * quad;
}

inline double affine_F(const std::vector<AffineConstraint>& rows, std::span<const double> y,
                       std::span<const double> x) {
    double worst = -std::numeric_limits<double>::infinity();
    for (const auto& r : rows) worst = std::max(worst, dot(r.c_y, y) - dot(r.c_x, x) - r.c0);
    return worst;
}

} // namespace detail

/// Transformation function value; unchecked fast path used in inner loops.
inline double eval_F_raw(const Technology& tech, std::span<const double> y, std::span<const double> x) {
    return std::visit(
        [&](const auto& k) -> double {
            using K = std::decay_t<decltype(k)>;
            if constexpr (std::is_same_v<K, kinds::QuadraticSeparable>) {
                return detail::quadratic_F(k.params, y, x);
            } else if constexpr (std::is_same_v<K, kinds::Staircase>) {
                return y[0] - kinds::Staircase::h(x[0]);
            } else if constexpr (std::is_same_v<K, kinds::PolyhedralA>) {
                return std::max(y[1] - x[0], y[0] + y[1] - 2.0 * x[0]);
            } else {
                return std::max(y[1] - x[1], y[0] + y[1] - x[0] - x[1]);
            }
        },
        tech.kind());
}

/// F(y, x). For the piecewise-linear kinds this is the largest constraint violation, so F <= 0
/// exactly on T.
inline double eval_F(const Technology& tech, const Bundle& bundle) {
    tech.require_dims(bundle.m(), bundle.n());
    return eval_F_raw(tech, bundle.y(), bundle.x());
}

inline bool contains(const Technology& tech, const Bundle& bundle) { return eval_F(tech, bundle) <= 0.0; }

namespace detail {

// P(x) != {0}: some single output can be raised above zero.
inline bool output_set_nontrivial(const std::vector<AffineConstraint>& rows, std::span<const double> x) {
    const std::size_t m = rows.front().c_y.size();
    for (const auto& r : rows)
        if (dot(r.c_x, x) + r.c0 < 0.0) return false;
    for (std::size_t k = 0; k < m; ++k) {
        bool room = true;
        for (const auto& r : rows)
            if (r.c_y[k] > 0.0 && !(dot(r.c_x, x) + r.c0 > 0.0)) room = false;
        if (room) return true;
    }
    return false;
}

// L(y) != {}: only rows without an input term can fail for large x.
inline bool input_set_nonempty(const std::vector<AffineConstraint>& rows, std::span<const double> y) {
    for (const auto& r : rows)
        if (is_zero(r.c_x) && dot(r.c_y, y) > r.c0) return false;
    return true;
}

} // namespace detail

/// Which cell of the {X1, X2, X3} or {Y1, Y2, Y3} partition v belongs to.
inline PartitionCell classify(const Technology& tech, Side side, std::span<const double> v) {
    detail::require_same_length(v.size(), side == Side::input ? tech.n() : tech.m(), "classify");
    detail::require_nonnegative(v, side == Side::input ? "x" : "y");
    if (detail::is_zero(v)) return side == Side::input ? PartitionCell::X3 : PartitionCell::Y3;

    if (tech.is_quadratic()) {
        if (side == Side::input) return PartitionCell::X1; // F(eps e_1, x) < 0 for small eps since a > 0
        const auto& p = tech.quadratic_params();
        Vec y(v.begin(), v.end());
        double asum = 0.0;
        for (double c : p.a) asum += c;
        const double q = detail::quadratic_F(p, y, Vec(p.a.size(), 0.0));
        Vec x(p.a.size(), std::max(0.0, q) / asum + 1.0);
        if (detail::quadratic_F(p, y, x) > 0.0) throw ContractViolation("input set of quadratic technology empty");
        return PartitionCell::Y1;
    }
    const auto rows = tech.affine_constraints();
    if (side == Side::input)
        return detail::output_set_nontrivial(rows, v) ? PartitionCell::X1 : PartitionCell::X2;
    return detail::input_set_nonempty(rows, v) ? PartitionCell::Y1 : PartitionCell::Y2;
}

namespace detail {

inline bool affine_output_frontier(const std::vector<AffineConstraint>& rows, std::span<const double> x,
                                   std::span<const double> y, FrontierKind kind) {
    const std::size_t m = y.size();
    std::vector<bool> tight(rows.size());
    for (std::size_t c = 0; c < rows.size(); ++c) {
        const double lhs = dot(rows[c].c_y, y), rhs = dot(rows[c].c_x, x) + rows[c].c0;
        if (lhs > rhs + boundary_tol) return false;
        tight[c] = std::abs(lhs - rhs) <= boundary_tol;
    }
    if (kind == FrontierKind::eff) {
        // No single output can be raised.
        for (std::size_t k = 0; k < m; ++k) {
            bool blocked = false;
            for (std::size_t c = 0; c < rows.size(); ++c) blocked = blocked || (tight[c] && rows[c].c_y[k] > 0.0);
            if (!blocked) return false;
        }
        return true;
    }
    // Isoq and WEff coincide here: some binding row involves a positive output.
    for (std::size_t c = 0; c < rows.size(); ++c)
        for (std::size_t k = 0; k < m; ++k)
            if (tight[c] && rows[c].c_y[k] > 0.0 && y[k] > 0.0) return true;
    return false;
}

inline bool affine_input_frontier(const std::vector<AffineConstraint>& rows, std::span<const double> y,
                                  std::span<const double> x, FrontierKind kind) {
    const std::size_t n = x.size();
    std::vector<bool> tight(rows.size());
    for (std::size_t c = 0; c < rows.size(); ++c) {
        const double need = dot(rows[c].c_y, y) - rows[c].c0, have = dot(rows[c].c_x, x);
        if (have < need - boundary_tol) return false;
        tight[c] = !is_zero(rows[c].c_x) && std::abs(have - need) <= boundary_tol;
    }
    if (kind == FrontierKind::eff) {
        // No single positive input can be lowered.
        for (std::size_t i = 0; i < n; ++i) {
            if (x[i] == 0.0) continue;
            bool blocked = false;
            for (std::size_t c = 0; c < rows.size(); ++c) blocked = blocked || (tight[c] && rows[c].c_x[i] > 0.0);
            if (!blocked) return false;
        }
        return true;
    }
    for (std::size_t c = 0; c < rows.size(); ++c)
        for (std::size_t i = 0; i < n; ++i)
            if (tight[c] && rows[c].c_x[i] > 0.0 && x[i] > 0.0) return true;
    return false;
}

} // namespace detail

/// Membership of `point` in Isoq/WEff/Eff of P(fixed) (side = output) or L(fixed) (side = input).
/// Degenerate sets follow the usual conventions: the subsets of P(x) for x in X2 or X3, and of
/// L(0), are {0}; for y in Y2 the input set is empty.
inline bool frontier_member(const Technology& tech, Side side, std::span<const double> fixed,
                            std::span<const double> point, FrontierKind kind) {
    const std::size_t m = tech.m(), n = tech.n();
    detail::require_same_length(fixed.size(), side == Side::output ? n : m, "frontier fixed vector");
    detail::require_same_length(point.size(), side == Side::output ? m : n, "frontier point");
    detail::require_nonnegative(fixed, "fixed");
    detail::require_nonnegative(point, "point");

    const PartitionCell cell = classify(tech, side == Side::output ? Side::input : Side::output, fixed);
    if (cell == PartitionCell::X2 || cell == PartitionCell::X3 || cell == PartitionCell::Y3)
        return detail::is_zero(point);
    if (cell == PartitionCell::Y2) return false;

    if (tech.is_quadratic()) {
        // Strictly monotone, continuous F: all three subsets are the zero level set.
        const double f = side == Side::output ? eval_F_raw(tech, point, fixed) : eval_F_raw(tech, fixed, point);
        return std::abs(f) <= boundary_tol;
    }
    const auto rows = tech.affine_constraints();
    return side == Side::output ? detail::affine_output_frontier(rows, fixed, point, kind)
                                : detail::affine_input_frontier(rows, fixed, point, kind);
}

} // namespace ddfkit
