#pragma once

#include <optional>
#include <vector>

#include "ptchain/pasep.hpp"
#include "ptchain/tableau.hpp"

namespace ptchain {

struct PtMove {
    MoveKind kind;
    int site = 0;  // PASEP site realized: the (site, site+1) pair for hops, boundary otherwise
    int row = 0;   // tableau row acted on (corner row; 1 for enter-left, last row for exit-right)
    PermutationTableau target;
    LaurentMonomial rate;  // element of {1, q, a, b} scaled by 1/(N+1)
};

// The occupation word of the tableau's shape; a tableau of half-perimeter
// N+1 projects to a state on N sites.
PasepState project(const PermutationTableau& t);

// Present iff the rightmost column has length 1: delete it and re-insert an
// all-zero row of length one less, as far south as possible. Rate a/(N+1).
std::optional<PtMove> enter_left(const PermutationTableau& s);

// Requires an outer corner at row j >= 2. Dispatches on the corner entry:
// an all-zero row is deleted and re-inserted one shorter (case 1), a
// superfluous corner one is erased (case 2), the column of a necessary corner
// one is deleted and re-inserted one shorter with a single bottom one, as far
// east as possible (case 3). Rate 1/(N+1).
PtMove hop_right(const PermutationTableau& s, int j);

// Present iff the last row has length 0: delete it and insert a column of
// height t-1 (zeros over a bottom one) as far east as possible. Rate b/(N+1).
std::optional<PtMove> exit_right(const PermutationTableau& s);

// Requires lambda_j > lambda_{j+1} with row j+1 present: row j+1 grows by one
// cell filled with a one. Rate q/(N+1).
PtMove hop_left(const PermutationTableau& s, int j);

// The complete move list, ordered by site. Projecting every move reproduces
// exactly the PASEP transition list of project(s) with identical rates.
std::vector<PtMove> pt_transitions(const PermutationTableau& s);

// Block-alternation class of an occupation word, writing B for a maximal run
// of occupied sites and W for a maximal run of empty ones:
//   1: BW...BW   2: BW...B   3: WB...W   4: WB...B
// n counts the B blocks for classes 1, 3, 4 and the W blocks for class 2.
struct StateClass {
    int cls = 0;
    int n = 0;
    friend bool operator==(const StateClass&, const StateClass&) = default;
};
StateClass state_class(const PasepState& x);  // rejects the empty word

// Total symbolic out-rate of any state in the given class:
//   1: (n + q(n-1))/(N+1)        2: (n + qn + b)/(N+1)
//   3: (n + qn + a)/(N+1)        4: ((n-1) + qn + a + b)/(N+1)
LaurentPoly class_out_rate(const StateClass& c, int n_sites);

// Rows j with an outer corner (lambda_j > lambda_{j+1}), resp. with an inner
// corner between rows j and j+1.
std::vector<int> outer_corner_rows(const Shape& shape);
std::vector<int> inner_corner_rows(const Shape& shape);

}  // namespace ptchain
