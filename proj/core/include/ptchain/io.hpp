#pragma once

#include <string>

#include "ptchain/suites.hpp"
#include "ptchain/transition_system.hpp"

namespace ptchain {

// {"shape":[4,4,4,3],"rows":[[1,1,0,0],[0,0,1,0],[1,1,1,1],[0,0,1]]}
std::string tableau_to_json(const PermutationTableau& t);
PermutationTableau tableau_from_json(const std::string& text);

// One line per state: "state,probability_num,probability_den" after a header.
std::string distribution_to_csv(const TransitionSystem& sys, const Distribution& d);
std::string distribution_to_json(const TransitionSystem& sys, const Distribution& d);

// Graphviz digraph. Nodes are labeled with the projected occupation word
// plus the state key; edges carry the exact rate strings "1/4", "q/4",
// "a/4", "b/4" (denominator N+1).
std::string system_to_dot(const TransitionSystem& sys);

// Move lists with kind, site, row (tableau chain only) and target per state.
std::string system_to_json(const TransitionSystem& sys);
// Edge list: from,to,rate
std::string system_to_csv(const TransitionSystem& sys);
// Human-oriented adjacency summary.
std::string system_to_text(const TransitionSystem& sys);

// Moves out of one tableau, same schema as system_to_json.
std::string moves_to_json(const PermutationTableau& t);

std::string report_to_json(const SuiteReport& report);

}  // namespace ptchain
