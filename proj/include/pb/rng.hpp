#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace pb {

// splitmix64 finalizer, used to derive independent seed streams from one
// master seed so that e.g. batch shuffling and attack initialization never
// share draws.
inline std::uint64_t mix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) {
    return mix64(seed ^ mix64(stream));
}

inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream, std::uint64_t item) {
    return mix64(derive_seed(seed, stream) ^ mix64(item + 0x51ed2701ULL));
}

class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    // U[lo, hi)
    double uniform(double lo, double hi) {
        std::uniform_real_distribution<double> d(lo, hi);
        return d(gen_);
    }

    // standard normal via Box-Muller (one value per call, no cached state)
    double normal() {
        double u1 = uniform(0.0, 1.0);
        if (u1 < 1e-300) u1 = 1e-300;
        double u2 = uniform(0.0, 1.0);
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
    }

    // uniform in [0, n)
    std::uint64_t integer(std::uint64_t n) {
        std::uniform_int_distribution<std::uint64_t> d(0, n - 1);
        return d(gen_);
    }

    std::uint64_t raw() { return gen_(); }

    std::mt19937_64& gen() { return gen_; }

private:
    std::mt19937_64 gen_;
};

}  // namespace pb
