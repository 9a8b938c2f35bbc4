#pragma once

#include <cmath>
#include <cstdint>
#include <random>

#include "ksflow/vec.hpp"

namespace ksflow {

/// Deterministic random draws on top of std::mt19937_64. The generator's
/// output sequence is pinned by the C++ standard, and we map raw 64-bit
/// words to doubles ourselves, so a fixed seed reproduces bit-identical
/// sample streams on every toolchain (the std distributions do not
/// guarantee that).
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    /// Uniform in [0, 1) with 53 random bits.
    double uniform() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    /// Standard normal via Box-Muller (always consumes two draws).
    double normal() {
        double u1 = uniform();
        while (u1 <= 0.0) u1 = uniform();
        const double u2 = uniform();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * pi_ * u2);
    }

    Vec3 normal3() { return Vec3{{normal(), normal(), normal()}}; }
    Vec4 normal4() { return Vec4{{normal(), normal(), normal(), normal()}}; }

    Vec3 unit_sphere() {
        // rejection from the cube; dimension 3 accepts >50% of draws
        for (;;) {
            const Vec3 p{{uniform(-1.0, 1.0), uniform(-1.0, 1.0), uniform(-1.0, 1.0)}};
            const double r2 = norm_sq(p);
            if (r2 > 1e-12 && r2 <= 1.0) return p / std::sqrt(r2);
        }
    }

    Vec3 ball3(double radius) {
        for (;;) {
            const Vec3 p{{uniform(-1.0, 1.0), uniform(-1.0, 1.0), uniform(-1.0, 1.0)}};
            if (norm_sq(p) <= 1.0) return radius * p;
        }
    }

    Vec4 ball4(double radius) {
        for (;;) {
            const Vec4 p{{uniform(-1.0, 1.0), uniform(-1.0, 1.0), uniform(-1.0, 1.0),
                          uniform(-1.0, 1.0)}};
            if (norm_sq(p) <= 1.0) return radius * p;
        }
    }

    std::uint64_t raw() { return gen_(); }

    /// Decorrelated child stream, e.g. one per sample index.
    Rng spawn(std::uint64_t stream) {
        // splitmix64 of (our next word xor stream id)
        std::uint64_t x = gen_() ^ (stream * 0x9E3779B97F4A7C15ull);
        x ^= x >> 30;
        x *= 0xBF58476D1CE4E5B9ull;
        x ^= x >> 27;
        x *= 0x94D049BB133111EBull;
        x ^= x >> 31;
        return Rng(x);
    }

  private:
    std::mt19937_64 gen_;
    static constexpr double pi_ = 3.14159265358979323846;
};

} // namespace ksflow
