#pragma once

#include <cmath>
#include <cstdint>

namespace rhythmkit {

// splitmix64 finalizer.
inline std::uint64_t mix64(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

// Counter-based generator: draw n is a pure function of (seed, n). Streams
// are reproducible bit-for-bit and never depend on thread scheduling.
class CounterRng {
public:
    explicit CounterRng(std::uint64_t seed) : key_(seed) {}

    std::uint64_t next_u64() {
        return mix64(key_ + (++counter_) * 0x9E3779B97F4A7C15ull);
    }

    // Uniform on the open interval (0, 1).
    double uniform() {
        return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1p-53;
    }

    // Uniform integer in [0, bound), bound > 0.
    std::uint64_t uniform_below(std::uint64_t bound) {
        return static_cast<std::uint64_t>(
            (static_cast<unsigned __int128>(next_u64()) * bound) >> 64);
    }

    double exponential() { return -std::log(uniform()); }

    double normal() {
        const double u = uniform();
        const double v = uniform();
        return std::sqrt(-2.0 * std::log(u)) *
               std::cos(6.28318530717958647692528676655900577 * v);
    }

    // Marsaglia-Tsang; alpha > 0. Rejection loop, so the number of draws
    // consumed varies but stays a pure function of the stream position.
    double gamma(double alpha) {
        if (alpha < 1.0) {
            const double u = uniform();
            return gamma(alpha + 1.0) * std::pow(u, 1.0 / alpha);
        }
        const double d = alpha - 1.0 / 3.0;
        const double c = 1.0 / std::sqrt(9.0 * d);
        for (;;) {
            double x;
            double v;
            do {
                x = normal();
                v = 1.0 + c * x;
            } while (v <= 0.0);
            v = v * v * v;
            const double u = uniform();
            if (u < 1.0 - 0.0331 * x * x * x * x) return d * v;
            if (std::log(u) < 0.5 * x * x + d * (1.0 - v + std::log(v))) return d * v;
        }
    }

    // Counting process via uniform products; means above 30 are split so the
    // product threshold stays representable.
    std::uint64_t poisson(double mean) {
        if (!(mean > 0.0)) return 0;
        if (mean > 30.0) {
            const double half = mean / 2.0;
            return poisson(half) + poisson(mean - half);
        }
        const double limit = std::exp(-mean);
        std::uint64_t k = 0;
        double p = 1.0;
        do {
            ++k;
            p *= uniform();
        } while (p > limit);
        return k - 1;
    }

private:
    std::uint64_t key_;
    std::uint64_t counter_ = 0;
};

// Independent child stream: tag separates uses, index separates items.
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t tag, std::uint64_t index) {
    return mix64(mix64(seed ^ (tag * 0xD1B54A32D192ED03ull)) +
                 (index + 1) * 0x9E3779B97F4A7C15ull);
}

}  // namespace rhythmkit
