#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ptchain/pasep.hpp"
#include "ptchain/tableau.hpp"

namespace ptchain {

// Bijection on {1..n} in one-line notation.
class Permutation {
  public:
    Permutation() = default;
    explicit Permutation(std::vector<int> images);  // validates bijectivity
    static Permutation identity(int n);

    int size() const { return static_cast<int>(img_.size()); }
    int operator()(int i) const { return img_.at(i - 1); }  // 1-based
    int preimage_of(int value) const;
    const std::vector<int>& images() const { return img_; }

    friend bool operator==(const Permutation&, const Permutation&) = default;
    friend bool operator<(const Permutation& x, const Permutation& y) { return x.img_ < y.img_; }

    // Comma-separated one-line notation "7,4,8,3,6,2,1,5". parse() also
    // accepts a plain digit string for n <= 9.
    std::string to_string() const;
    static Permutation parse(const std::string& text);

  private:
    std::vector<int> img_;
};

struct PermStats {
    int crossings = 0;          // pairs i<j <= pi(i) < pi(j) or pi(i) < pi(j) < i < j
    int special_rl_minima = 0;  // right-to-left minima below pi(1); carries the alpha weight
    int special_lr_maxima = 0;  // left-to-right maxima above pi(1); carries the beta weight
    std::vector<int> weak_excedances;  // positions i with pi(i) >= i, ascending
    std::vector<int> fixed_points;     // ascending
};

PermStats perm_stats(const Permutation& p);

// q^crossings * a^-minima * b^-maxima; equals the weight of the tableau the
// permutation corresponds to.
LaurentMonomial weight(const Permutation& p);

// Zig-zag walk over the diagram of the tableau: border steps are labeled 1..n
// from the north-east corner; a label on a vertical step walks west to the
// first one of its row and then zig-zags south-east, a label on a horizontal
// step walks north to the topmost one of its column and then zig-zags
// east-south. Rows without ones become fixed points.
Permutation tableau_to_permutation(const PermutationTableau& t);

// Inverse of the above, via a lookup table built from enumerate_tableaux and
// cached per size.
PermutationTableau permutation_to_tableau(const Permutation& p);

// Occupation word read off the weak excedances at positions 2..n; matches
// project(permutation_to_tableau(p)).
PasepState project(const Permutation& p);

// Bijection on an arbitrary finite ordered label set. Labels are integers;
// the half-step insertions used by the chain moves double every label first
// so that midpoints stay integral.
struct LabeledPermutation {
    std::vector<std::int64_t> ground;  // strictly increasing
    std::vector<std::int64_t> image;   // image[k] = sigma(ground[k])

    std::int64_t apply(std::int64_t label) const;
    friend bool operator==(const LabeledPermutation&, const LabeledPermutation&) = default;
};

LabeledPermutation make_labeled(const Permutation& p);
LabeledPermutation make_labeled(std::vector<std::int64_t> ground, std::vector<std::int64_t> image);

// Removes label i, redirecting the preimage of i to the old image of i.
// Rejects fixed points and labels outside the ground set.
LabeledPermutation collapse(const LabeledPermutation& p, std::int64_t i);

// Removes a label that is a fixed point.
LabeledPermutation remove_fixed_point(const LabeledPermutation& p, std::int64_t i);

// Adds a fresh label mapped to itself.
LabeledPermutation insert_fixed_point(const LabeledPermutation& p, std::int64_t label);

// Adds a fresh label w spliced into the cycle through v: the preimage of v is
// redirected to w and w maps to v.
LabeledPermutation insert_before(const LabeledPermutation& p, std::int64_t v, std::int64_t w);

// Order-isomorphic relabeling onto {1..k}.
Permutation normalize(const LabeledPermutation& p);

struct PermMove {
    MoveKind kind;
    int site = 0;
    Permutation target;
    LaurentMonomial rate;
};

// The tableau chain transported to permutations of {1..N+1}, described by
// value surgery alone: collapses, half-step insertions and adjacent-value
// swaps. Agrees edge-for-edge with mapping pt_transitions through the
// bijection.
std::vector<PermMove> perm_transitions(const Permutation& p);

std::vector<Permutation> all_permutations(int n);  // lexicographic

}  // namespace ptchain
