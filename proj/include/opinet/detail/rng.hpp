#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace opinet::detail {

/// mt19937_64 with fixed output mappings. std::uniform_*_distribution is
/// implementation-defined, so identical seeds would not give identical
/// results across standard libraries; these mappings do.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t next() { return eng_(); }

    /// Uniform in [0, 1) with 53-bit resolution.
    double uniform01() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }

    /// Uniform index in [0, n).
    std::size_t index(std::size_t n) { return static_cast<std::size_t>(eng_() % n); }

    /// Standard normal via Box-Muller.
    double normal() {
        double u1 = uniform01();
        while (u1 == 0.0) u1 = uniform01();
        const double u2 = uniform01();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586 * u2);
    }

private:
    std::mt19937_64 eng_;
};

} // namespace opinet::detail
