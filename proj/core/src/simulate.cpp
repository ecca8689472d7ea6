#include "ptchain/simulate.hpp"

#include <stdexcept>

namespace ptchain {

std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

namespace {
inline std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }
}  // namespace

Xoshiro256ss::Xoshiro256ss(std::uint64_t seed) {
    for (auto& w : s_) w = splitmix64(seed);
}

std::uint64_t Xoshiro256ss::next() {
    const std::uint64_t result = rotl(s_[1] * 5, 7) * 9;
    const std::uint64_t t = s_[1] << 17;
    s_[2] ^= s_[0];
    s_[3] ^= s_[1];
    s_[1] ^= s_[2];
    s_[0] ^= s_[3];
    s_[2] ^= t;
    s_[3] = rotl(s_[3], 45);
    return result;
}

double Xoshiro256ss::next_unit() { return (next() >> 11) * 0x1.0p-53; }

Distribution simulate(const TransitionSystem& sys, const PasepParams& params, std::uint64_t seed,
                      long steps) {
    if (steps < 1) throw std::invalid_argument("simulate: steps must be >= 1");
    if (!params.in_open_box())
        throw std::domain_error("simulate: parameters outside the valid box");
    const InstantiatedChain chain = instantiate(sys, params);

    // Per-state cumulative probabilities as doubles; the final slot (the
    // self-loop) absorbs any rounding slack.
    std::vector<std::vector<double>> cumulative(chain.size());
    for (int i = 0; i < chain.size(); ++i) {
        double acc = 0;
        for (const auto& [to, r] : chain.out[i]) {
            acc += r.get_d();
            cumulative[i].push_back(acc);
        }
    }

    Xoshiro256ss rng(seed);
    const long burn_in = steps / 10;
    std::vector<long> visits(chain.size(), 0);
    int state = 0;
    for (long step = 0; step < steps; ++step) {
        const double u = rng.next_unit();
        const auto& cum = cumulative[state];
        int chosen = state;  // self-loop unless u falls in an out-edge slot
        for (std::size_t k = 0; k < cum.size(); ++k)
            if (u < cum[k]) {
                chosen = chain.out[state][k].first;
                break;
            }
        state = chosen;
        if (step >= burn_in) ++visits[state];
    }

    const long recorded = steps - burn_in;
    Distribution dist;
    dist.weights.reserve(chain.size());
    for (long v : visits) dist.weights.push_back(make_rational(v, recorded));
    dist.validate();
    return dist;
}

}  // namespace ptchain
