#pragma once

// Deterministic randomness: every entity draws from its own stream derived
// from (run seed, entity id), so tick order and entity count never perturb
// another entity's draws.

#include <cstdint>
#include <numbers>
#include <random>

namespace amronet {

// splitmix64 finalizer; decorrelates nearby (seed, id) pairs.
inline std::uint64_t mix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

inline std::uint64_t stream_seed(std::uint64_t run_seed, std::uint64_t entity_id) {
    return mix64(run_seed ^ mix64(entity_id));
}

class RngStream {
  public:
    RngStream() : engine_(0) {}
    RngStream(std::uint64_t run_seed, std::uint64_t entity_id)
        : engine_(stream_seed(run_seed, entity_id)) {}

    // Uniform in [0, 1) with 53-bit resolution; identical on every platform
    // (std::uniform_real_distribution is not portable across libraries).
    double uniform() { return (engine_() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    double angle() { return uniform() * 2.0 * std::numbers::pi; }

    std::uint64_t bits() { return engine_(); }

  private:
    std::mt19937_64 engine_;
};

}  // namespace amronet
