#pragma once

#include <ddfkit/core.hpp>

#include <cstdint>
#include <random>

namespace ddfkit {

/// Seeded generator with a platform-independent mapping to doubles.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    /// Uniform on [0, 1).
    double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
    std::size_t index(std::size_t n) { return static_cast<std::size_t>(engine_() % n); }

    /// Seed for an independent stream derived from this one.
    std::uint64_t derive() { return engine_(); }

private:
    std::mt19937_64 engine_;
};

inline Vec uniform_vec(Rng& rng, std::size_t len, double lo, double hi) {
    Vec v(len);
    for (auto& c : v) c = rng.uniform(lo, hi);
    return v;
}

/// Bundle uniform on [0, 3]^(m+n).
inline Bundle sample_bundle(Rng& rng, std::size_t m, std::size_t n) {
    auto y = uniform_vec(rng, m, 0.0, 3.0);
    auto x = uniform_vec(rng, n, 0.0, 3.0);
    return Bundle(std::move(y), std::move(x));
}

/// Direction uniform on [0, 1]^(m+n), redrawn if zero. With `mixed`, one draw in four zeroes the
/// output part and one in four the input part so both pure-output and pure-input rays are covered.
inline Direction sample_direction(Rng& rng, std::size_t m, std::size_t n, bool mixed = true) {
    for (;;) {
        auto gy = uniform_vec(rng, m, 0.0, 1.0);
        auto gx = uniform_vec(rng, n, 0.0, 1.0);
        if (mixed) {
            const std::size_t pick = rng.index(4);
            if (pick == 0) gy.assign(m, 0.0);
            if (pick == 1) gx.assign(n, 0.0);
        }
        if (detail::is_zero(gy) && detail::is_zero(gx)) continue;
        return Direction(std::move(gy), std::move(gx));
    }
}

} // namespace ddfkit
