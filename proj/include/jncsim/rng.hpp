// Seeded randomness. Each trial owns one stream derived from
// (base seed XOR trial index), so runs are reproducible and trials can be
// executed concurrently without shared state.
#pragma once

#include <cstdint>
#include <random>

namespace jncsim {

std::uint64_t splitmix64(std::uint64_t x);

class Rng {
public:
    explicit Rng(std::uint64_t stream_seed) : eng_(splitmix64(stream_seed)) {}

    static Rng for_trial(std::uint64_t base_seed, std::uint64_t trial_index) {
        return Rng(base_seed ^ trial_index);
    }

    std::uint64_t next() { return eng_(); }

    // Uniform in [0, 1) with 53-bit resolution.
    double uniform01() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }

    bool bernoulli(double p_success) { return uniform01() < p_success; }

private:
    std::mt19937_64 eng_;
};

}  // namespace jncsim
