#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

namespace stylo {

// Deterministic RNG wrapper. mt19937_64 is fully specified by the standard,
// and all derived draws below avoid std::*_distribution (whose output is
// implementation-defined), so streams are bit-reproducible across platforms.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    std::uint64_t next_u64() { return gen_(); }

    // Uniform in [0, 1) with 53 bits of mantissa.
    double next_double() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * next_double(); }

    // Uniform index in [0, n). n must be > 0.
    std::size_t next_index(std::size_t n) {
        std::size_t i = static_cast<std::size_t>(next_double() * static_cast<double>(n));
        return i < n ? i : n - 1;
    }

    // Box-Muller; consumes exactly two draws per sample.
    double normal(double mean = 0.0, double stddev = 1.0) {
        double u1 = next_double();
        double u2 = next_double();
        if (u1 <= 0.0) u1 = 0x1.0p-53;
        double r = std::sqrt(-2.0 * std::log(u1));
        return mean + stddev * r * std::cos(2.0 * 3.14159265358979323846 * u2);
    }

    bool bernoulli(double p) { return next_double() < p; }

    template <typename T>
    void shuffle(std::vector<T>& v) {
        for (std::size_t i = v.size(); i > 1; --i) {
            std::size_t j = next_index(i);
            std::swap(v[i - 1], v[j]);
        }
    }

private:
    std::mt19937_64 gen_;
};

}  // namespace stylo
