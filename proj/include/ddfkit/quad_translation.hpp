#pragma once

#include <ddfkit/core.hpp>
#include <ddfkit/sampling.hpp>

#include <cmath>
#include <string>

/// Quadratic of outputs and inputs with the translation restrictions solved for the pivot
/// coefficients alpha_n, alpha_in, alpha_nn, beta_km, beta_mm. The result translates exactly
/// (Q(y + a g_y, x - a g_x) = Q(y, x) - a) but does not scale as psi^-1 in the direction.
namespace ddfkit::quad {

using Matrix = std::vector<Vec>;

/// Coefficients left free after the restrictions are solved.
struct FreeQuadraticParams {
    double alpha0 = 0.0;
    Vec alpha;      // alpha_1 .. alpha_{n-1}
    Vec beta;       // beta_1 .. beta_m
    Matrix alpha_mat; // alpha_ij, i,j < n, symmetric
    Matrix beta_mat;  // beta_kl, k,l < m, symmetric
    Matrix gamma;     // gamma_ik, n x m

    std::size_t m() const noexcept { return beta.size(); }
    std::size_t n() const noexcept { return alpha.size() + 1; }
};

/// Full coefficient set of Q(y, x) together with the direction it was restricted against.
struct RestrictedQuadraticParams {
    FreeQuadraticParams free;
    double alpha0 = 0.0;
    Vec alpha;       // n
    Vec beta;        // m
    Matrix alpha_mat; // n x n
    Matrix beta_mat;  // m x m
    Matrix gamma;     // n x m
    Vec g_y;
    Vec g_x;
};

namespace detail {

inline void check_shape(const FreeQuadraticParams& f) {
    const std::size_t m = f.m(), n = f.n();
    if (m == 0) throw DimensionError("free quadratic needs at least one output coefficient");
    auto square = [](const Matrix& a, std::size_t k, const char* what) {
        if (a.size() != k) throw DimensionError(std::string(what) + " has wrong row count");
        for (const auto& r : a)
            if (r.size() != k) throw DimensionError(std::string(what) + " has wrong column count");
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < i; ++j)
                if (a[i][j] != a[j][i]) throw DomainError(std::string(what) + " must be symmetric");
    };
    square(f.alpha_mat, n - 1, "alpha_mat");
    square(f.beta_mat, m - 1, "beta_mat");
    if (f.gamma.size() != n) throw DimensionError("gamma must have n rows");
    for (const auto& r : f.gamma)
        if (r.size() != m) throw DimensionError("gamma must have m columns");
}

} // namespace detail

/// Solve the translation restrictions for the pivot coefficients against `dir`.
inline RestrictedQuadraticParams restrict_parameters(const FreeQuadraticParams& free, const Direction& dir) {
    detail::check_shape(free);
    const std::size_t m = free.m(), n = free.n();
    ddfkit::detail::require_same_length(dir.m(), m, "direction outputs");
    ddfkit::detail::require_same_length(dir.n(), n, "direction inputs");
    const auto& gy = dir.g_y();
    const auto& gx = dir.g_x();
    if (!(gx[n - 1] > 0.0)) throw DomainError("g_x[" + std::to_string(n - 1) + "] must be positive");
    if (!(gy[m - 1] > 0.0)) throw DomainError("g_y[" + std::to_string(m - 1) + "] must be positive");
    const double gxn = gx[n - 1], gym = gy[m - 1];

    RestrictedQuadraticParams r;
    r.free = free;
    r.alpha0 = free.alpha0;
    r.beta = free.beta;
    r.gamma = free.gamma;
    r.g_y = gy;
    r.g_x = gx;

    // alpha_n
    r.alpha = free.alpha;
    double s = 1.0;
    for (std::size_t k = 0; k < m; ++k) s += free.beta[k] * gy[k];
    for (std::size_t i = 0; i + 1 < n; ++i) s -= free.alpha[i] * gx[i];
    r.alpha.push_back(s / gxn);

    // alpha_in = alpha_ni, then alpha_nn
    r.alpha_mat.assign(n, Vec(n, 0.0));
    for (std::size_t i = 0; i + 1 < n; ++i)
        for (std::size_t j = 0; j + 1 < n; ++j) r.alpha_mat[i][j] = free.alpha_mat[i][j];
    Vec gamma_gy(n, 0.0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < m; ++k) gamma_gy[i] += free.gamma[i][k] * gy[k];
    for (std::size_t i = 0; i + 1 < n; ++i) {
        double t = gamma_gy[i];
        for (std::size_t j = 0; j + 1 < n; ++j) t -= free.alpha_mat[i][j] * gx[j];
        r.alpha_mat[i][n - 1] = r.alpha_mat[n - 1][i] = t / gxn;
    }
    {
        double t = gamma_gy[n - 1];
        for (std::size_t j = 0; j + 1 < n; ++j) t -= r.alpha_mat[n - 1][j] * gx[j];
        r.alpha_mat[n - 1][n - 1] = t / gxn;
    }

    // beta_km = beta_mk, then beta_mm
    r.beta_mat.assign(m, Vec(m, 0.0));
    for (std::size_t k = 0; k + 1 < m; ++k)
        for (std::size_t l = 0; l + 1 < m; ++l) r.beta_mat[k][l] = free.beta_mat[k][l];
    Vec gamma_gx(m, 0.0);
    for (std::size_t k = 0; k < m; ++k)
        for (std::size_t i = 0; i < n; ++i) gamma_gx[k] += free.gamma[i][k] * gx[i];
    for (std::size_t k = 0; k + 1 < m; ++k) {
        double t = gamma_gx[k];
        for (std::size_t l = 0; l + 1 < m; ++l) t -= free.beta_mat[k][l] * gy[l];
        r.beta_mat[k][m - 1] = r.beta_mat[m - 1][k] = t / gym;
    }
    {
        double t = gamma_gx[m - 1];
        for (std::size_t l = 0; l + 1 < m; ++l) t -= r.beta_mat[m - 1][l] * gy[l];
        r.beta_mat[m - 1][m - 1] = t / gym;
    }
    return r;
}

struct RestrictionResiduals {
    Vec inputs;   // sum_k gamma_ik g_yk - sum_j alpha_ij g_xj, per i
    double linear = 0.0; // sum_k beta_k g_yk - sum_i alpha_i g_xi + 1
    Vec outputs;  // sum_l beta_kl g_yl - sum_i gamma_ik g_xi, per k

    double max_abs() const {
        double w = std::abs(linear);
        for (double v : inputs) w = std::max(w, std::abs(v));
        for (double v : outputs) w = std::max(w, std::abs(v));
        return w;
    }
};

inline RestrictionResiduals restriction_residuals(const RestrictedQuadraticParams& p) {
    const std::size_t m = p.beta.size(), n = p.alpha.size();
    RestrictionResiduals r;
    r.inputs.assign(n, 0.0);
    r.outputs.assign(m, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t k = 0; k < m; ++k) r.inputs[i] += p.gamma[i][k] * p.g_y[k];
        for (std::size_t j = 0; j < n; ++j) r.inputs[i] -= p.alpha_mat[i][j] * p.g_x[j];
    }
    r.linear = 1.0;
    for (std::size_t k = 0; k < m; ++k) r.linear += p.beta[k] * p.g_y[k];
    for (std::size_t i = 0; i < n; ++i) r.linear -= p.alpha[i] * p.g_x[i];
    for (std::size_t k = 0; k < m; ++k) {
        for (std::size_t l = 0; l < m; ++l) r.outputs[k] += p.beta_mat[k][l] * p.g_y[l];
        for (std::size_t i = 0; i < n; ++i) r.outputs[k] -= p.gamma[i][k] * p.g_x[i];
    }
    return r;
}

/// Q(y, x) from the full coefficient set. Accepts any real vectors so translated points outside
/// the orthant can be evaluated.
inline double eval_Q(const RestrictedQuadraticParams& p, std::span<const double> y, std::span<const double> x) {
    const std::size_t m = p.beta.size(), n = p.alpha.size();
    ddfkit::detail::require_same_length(y.size(), m, "Q outputs");
    ddfkit::detail::require_same_length(x.size(), n, "Q inputs");
    double q = p.alpha0;
    for (std::size_t i = 0; i < n; ++i) q += p.alpha[i] * x[i];
    for (std::size_t k = 0; k < m; ++k) q += p.beta[k] * y[k];
    double xx = 0.0, yy = 0.0, xy = 0.0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) xx += p.alpha_mat[i][j] * x[i] * x[j];
    for (std::size_t k = 0; k < m; ++k)
        for (std::size_t l = 0; l < m; ++l) yy += p.beta_mat[k][l] * y[k] * y[l];
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < m; ++k) xy += p.gamma[i][k] * x[i] * y[k];
    return q + 0.5 * xx + 0.5 * yy + xy;
}

inline double eval_Q(const RestrictedQuadraticParams& p, const Bundle& b) { return eval_Q(p, b.y(), b.x()); }

/// Q(y, x; g_y, g_x) written directly in the free coefficients and the direction, with the
/// pivot coefficients eliminated. Diagonal terms of the upper-triangle double sums carry 1/2.
inline double eval_Q_direction_form(const FreeQuadraticParams& f, const Direction& dir,
                                    std::span<const double> y, std::span<const double> x) {
    detail::check_shape(f);
    const std::size_t m = f.m(), n = f.n();
    ddfkit::detail::require_same_length(y.size(), m, "Q outputs");
    ddfkit::detail::require_same_length(x.size(), n, "Q inputs");
    const auto& gy = dir.g_y();
    const auto& gx = dir.g_x();
    const double gxn = gx[n - 1], gym = gy[m - 1];
    if (!(gxn > 0.0) || !(gym > 0.0)) throw DomainError("pivot direction components must be positive");
    const double xn = x[n - 1], ym = y[m - 1];

    auto xt = [&](std::size_t i) { return x[i] - gx[i] / gxn * xn; };
    auto yt = [&](std::size_t k) { return y[k] - gy[k] / gym * ym; };

    double q = f.alpha0 + xn / gxn;
    for (std::size_t i = 0; i + 1 < n; ++i) q += f.alpha[i] * xt(i);
    for (std::size_t k = 0; k < m; ++k) q += f.beta[k] * (y[k] + gy[k] / gxn * xn);
    for (std::size_t i = 0; i + 1 < n; ++i)
        for (std::size_t j = i; j + 1 < n; ++j) q += (i == j ? 0.5 : 1.0) * f.alpha_mat[i][j] * xt(i) * xt(j);
    for (std::size_t k = 0; k + 1 < m; ++k)
        for (std::size_t l = k; l + 1 < m; ++l) q += (k == l ? 0.5 : 1.0) * f.beta_mat[k][l] * yt(k) * yt(l);
    const double shift = xn / gxn + ym / gym;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t k = 0; k < m; ++k) {
            q += f.gamma[i][k] * (x[i] + gx[i] / gym * ym) * (y[k] + gy[k] / gxn * xn);
            q -= 0.5 * f.gamma[i][k] * gx[i] * gy[k] * shift * shift;
        }
    }
    return q;
}

/// |Q(y + a g_y, x - a g_x) - (Q(y, x) - a)|.
inline double translation_residual(const RestrictedQuadraticParams& p, const Bundle& b, double a) {
    Vec y = b.y(), x = b.x();
    for (std::size_t k = 0; k < y.size(); ++k) y[k] += a * p.g_y[k];
    for (std::size_t i = 0; i < x.size(); ++i) x[i] -= a * p.g_x[i];
    return std::abs(eval_Q(p, y, x) - (eval_Q(p, b) - a));
}

/// |psi Q_{psi g}(y, x) - Q_g(y, x)|, each Q restricted against its own direction. Zero for every
/// psi would be required of a distance function.
inline double homogeneity_deviation(const FreeQuadraticParams& free, const Bundle& b, const Direction& dir, double psi) {
    if (!(psi > 0.0)) throw DomainError("psi must be positive");
    const auto base = restrict_parameters(free, dir);
    const auto scaled = restrict_parameters(free, dir.scaled(psi));
    return std::abs(psi * eval_Q(scaled, b) - eval_Q(base, b));
}

/// Free coefficients uniform on [-1, 1]; symmetric blocks mirrored from the upper triangle.
inline FreeQuadraticParams random_free_params(std::uint64_t seed, std::size_t m, std::size_t n) {
    if (m == 0 || n == 0) throw DimensionError("need m >= 1 and n >= 1");
    Rng rng(seed);
    FreeQuadraticParams f;
    f.alpha0 = rng.uniform(-1.0, 1.0);
    f.alpha = uniform_vec(rng, n - 1, -1.0, 1.0);
    f.beta = uniform_vec(rng, m, -1.0, 1.0);
    auto sym = [&](std::size_t k) {
        Matrix a(k, Vec(k, 0.0));
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = i; j < k; ++j) a[i][j] = a[j][i] = rng.uniform(-1.0, 1.0);
        return a;
    };
    f.alpha_mat = sym(n - 1);
    f.beta_mat = sym(m - 1);
    f.gamma.assign(n, Vec(m, 0.0));
    for (auto& row : f.gamma)
        for (auto& c : row) c = rng.uniform(-1.0, 1.0);
    return f;
}

struct HomogeneityWitness {
    double psi = 1.0;
    double deviation = 0.0;
};

/// Largest deviation over the fixed scale grid {0.5, 2, 10}.
inline HomogeneityWitness max_homogeneity_deviation(const FreeQuadraticParams& free, const Bundle& b,
                                                    const Direction& dir) {
    HomogeneityWitness w;
    for (double psi : {0.5, 2.0, 10.0}) {
        const double d = homogeneity_deviation(free, b, dir, psi);
        if (d > w.deviation) w = {psi, d};
    }
    return w;
}

} // namespace ddfkit::quad
