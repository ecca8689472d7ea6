#pragma once

#include "ptchain/permutation.hpp"
#include "ptchain/tableau.hpp"

namespace ptchain {

// The involution extending particle-hole symmetry to the full chain:
//   invol(p)(1) = n+1 - p(1),  invol(p)(i) = n+1 - p(n+2-i)  for i >= 2.
// It preserves crossings, swaps the alpha and beta statistics, and acts on
// the state diagram as a graph automorphism exchanging the alpha and beta
// rates.
Permutation involute(const Permutation& p);

// Transpose: rows become columns. The transpose of a valid tableau is a
// filled diagram of the conjugate shape but usually not a valid tableau.
PermutationTableau conjugate(const PermutationTableau& t);

// Tableau-side involution, compatible with the permutation one through the
// bijection: tableau_to_permutation(involute(t)) ==
// involute(tableau_to_permutation(t)). For a tableau with K rows the image
// has shape (K-1, heights_1 - 1, ..., heights_c - 1); the top row records
// which rows of t are unrestricted, the remaining rows read t's columns
// shifted by one cell, complementing topmost ones and rightmost restricted
// zeros.
PermutationTableau involute(const PermutationTableau& t);

}  // namespace ptchain
