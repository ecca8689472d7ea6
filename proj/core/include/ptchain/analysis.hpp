#pragma once

#include <functional>
#include <stdexcept>
#include <string>

#include "ptchain/transition_system.hpp"

namespace ptchain {

class SingularSystemError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

struct BalanceViolation {
    int state = -1;
    std::string key;
    std::string inflow;   // sum over in-edges of wt(source) * rate
    std::string outflow;  // wt(state) * sum of out-rates
};

struct BalanceReport {
    long states_checked = 0;
    std::vector<BalanceViolation> violations;
    bool ok() const { return violations.empty(); }
};

// Checks the stationarity balance at every state as an exact polynomial
// identity: sum_in wt(Q) rate(Q->T) == wt(T) sum_out rate(T->S). Violations
// are reported, never thrown.
BalanceReport verify_balance(const TransitionSystem& sys,
                             const std::function<LaurentMonomial(int)>& weight_of);

// The per-state tableau / permutation weight of a lifted chain.
std::function<LaurentMonomial(int)> state_weight_monomial(const TransitionSystem& sys);

// Unique stationary distribution of the instantiated chain, by exact rational
// Gaussian elimination (first-nonzero pivoting) on the transposed balance
// system with a normalization row. Throws SingularSystemError when the
// instantiated chain has no unique stationary law (reducible, e.g. alpha = 0).
Distribution stationary_exact(const TransitionSystem& sys, const PasepParams& params);

// Index map sending each state of `fine` to the state of `coarse` carrying
// its projection; throws if some projection is missing or the map is not
// surjective.
std::vector<int> projection_map(const TransitionSystem& fine, const TransitionSystem& coarse);

struct ProjectionReport {
    long checks = 0;
    std::vector<std::string> violations;
    bool ok() const { return violations.empty(); }
};

// Verifies that `fine` projects onto `coarse` through the state map:
// every fine edge matches the coarse edge of its image, every coarse edge
// lifts uniquely from every fiber point with the same rate (both checked
// symbolically), and the time-t occupation probabilities of the coarse walk
// equal fiber sums of the fine walk for t = 0..t_max at the given parameters.
ProjectionReport verify_projection(const TransitionSystem& fine, const TransitionSystem& coarse,
                                   const std::vector<int>& state_map, int t_max,
                                   const PasepParams& params);

// Fiber sums of a distribution on `fine` as a distribution on `coarse`.
Distribution push_forward(const Distribution& d, const std::vector<int>& state_map,
                          int coarse_size);

}  // namespace ptchain
