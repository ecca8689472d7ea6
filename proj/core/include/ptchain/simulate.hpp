#pragma once

#include <cstdint>

#include "ptchain/transition_system.hpp"

namespace ptchain {

// splitmix64: seed expander; one 64-bit state, additive constant
// 0x9e3779b97f4a7c15, output mixed with two xor-shift-multiply rounds.
// Used to derive the four xoshiro words from a single user seed.
std::uint64_t splitmix64(std::uint64_t& state);

// xoshiro256**: public-domain 64-bit shift-register generator of
// Blackman/Vigna. Fixed algorithm, so trajectories are bit-reproducible
// across platforms and standard libraries.
class Xoshiro256ss {
  public:
    explicit Xoshiro256ss(std::uint64_t seed);
    std::uint64_t next();
    // Uniform double in [0, 1) from the top 53 bits.
    double next_unit();

  private:
    std::uint64_t s_[4];
};

// Monte Carlo run of the instantiated chain: `steps` transitions from state
// 0, recording the state after every transition and discarding the first 10%
// of the records as burn-in. The result is the exact visit-frequency
// distribution; identical (seed, steps) give identical trajectories.
Distribution simulate(const TransitionSystem& sys, const PasepParams& params, std::uint64_t seed,
                      long steps);

}  // namespace ptchain
