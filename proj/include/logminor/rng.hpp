#pragma once

#include <cstdint>
#include <random>

namespace logminor {

/// Seeded RNG with derived substreams (one per trial index), so trial k's
/// draws do not depend on how many draws earlier trials consumed.
/// Uniform doubles are produced straight from the engine's 64-bit output;
/// std::mt19937_64 is fully specified by the standard, so sequences are
/// reproducible across platforms.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(splitmix(seed)) {}

    static Rng substream(std::uint64_t seed, std::uint64_t stream) {
        return Rng(seed ^ (0x9E3779B97F4A7C15ull * (stream + 1)));
    }

    std::uint64_t next_u64() { return engine_(); }

    /// Uniform in [0, 1), 53-bit resolution.
    double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    double uniform(double a, double b) { return a + (b - a) * uniform(); }

    /// Uniform integer in [lo, hi], inclusive.
    int uniform_int(int lo, int hi) {
        return lo + static_cast<int>(next_u64() % static_cast<std::uint64_t>(hi - lo + 1));
    }

private:
    static std::uint64_t splitmix(std::uint64_t x) {
        x += 0x9E3779B97F4A7C15ull;
        x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
        x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
        return x ^ (x >> 31);
    }

    std::mt19937_64 engine_;
};

}  // namespace logminor
