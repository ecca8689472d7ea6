#pragma once

#include <string>
#include <unordered_map>
#include <vector>

#include "ptchain/pasep.hpp"
#include "ptchain/permutation.hpp"
#include "ptchain/pt_chain.hpp"

namespace ptchain {

enum class ChainKind { Pasep, Pt, PermPt };

const char* chain_kind_name(ChainKind kind);
ChainKind parse_chain_kind(const std::string& name);

// Finite state set with sparse symbolic rates. Self-loops are never stored;
// they are defined as 1 minus the instantiated out-rate sum, and at any
// parameter point in the valid box every out-rate sum is at most 1.
struct TransitionSystem {
    ChainKind kind = ChainKind::Pasep;
    int n_sites = 0;

    std::vector<std::string> keys;         // canonical state keys, index-aligned
    std::vector<PasepState> projections;   // image of each state under the projection
    std::vector<std::vector<MoveKind>> out_kinds;
    std::vector<std::vector<int>> out_to;
    std::vector<std::vector<LaurentPoly>> out_rate;

    // Typed views of the state list; exactly one is populated.
    std::vector<PasepState> pasep_states;
    std::vector<PermutationTableau> tableau_states;
    std::vector<Permutation> perm_states;

    std::unordered_map<std::string, int> index;

    int size() const { return static_cast<int>(keys.size()); }
    int find(const std::string& key) const;
    const LaurentPoly* edge(int from, int to) const;
    LaurentPoly out_rate_sum(int from) const;
    long edge_count() const;

    // Symbolic stationary weight of a state: the tableau (or permutation)
    // weight for the lifted chains, the shape generating function for the
    // plain exclusion process.
    LaurentPoly state_weight(int i) const;
};

// Complete state set and symbolic edge set for one of the three chains on N
// sites (states of the lifted chains have half-perimeter / size N+1).
TransitionSystem build_system(ChainKind kind, int n_sites);

// Exact stochastic matrix at a parameter point, kept sparse.
struct InstantiatedChain {
    std::vector<std::vector<std::pair<int, Rational>>> out;  // off-diagonal row entries
    std::vector<Rational> self_loop;

    int size() const { return static_cast<int>(self_loop.size()); }
    // One step of the row-vector/matrix product u <- u P.
    std::vector<Rational> step(const std::vector<Rational>& u) const;
};

// Validates that params lie in the closed box and that every row is
// stochastic; throws std::domain_error otherwise.
InstantiatedChain instantiate(const TransitionSystem& sys, const PasepParams& params);

// Probability vector over the states of a system.
struct Distribution {
    std::vector<Rational> weights;

    int size() const { return static_cast<int>(weights.size()); }
    void validate() const;  // nonnegative, sums to one
};

Rational total_variation(const Distribution& x, const Distribution& y);

}  // namespace ptchain
