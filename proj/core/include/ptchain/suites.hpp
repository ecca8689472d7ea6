#pragma once

#include <string>
#include <vector>

namespace ptchain {

struct SuiteReport {
    std::string suite;
    int n_max = 0;
    long checks = 0;
    std::vector<std::string> violations;
    bool ok() const { return violations.empty(); }
};

// Stationarity balance of the tableau chain, as exact polynomial identities,
// for N = 1..n_max.
SuiteReport run_balance_suite(int n_max);

// Edge-level projection of the tableau chain onto the exclusion process plus
// time-t distribution agreement (t <= t_max) and the fiber-sum identity of
// the two exact stationary laws, for N = 1..n_max at a fixed rational
// parameter point (q=1/2, alpha=2/3, beta=3/4).
SuiteReport run_projection_suite(int n_max, int t_max = 12);

// Bijectivity of the tableau-to-permutation map and transport of all
// statistics (crossings, boundary statistics, weak excedances, fixed
// points), for half-perimeters 1..n_max.
SuiteReport run_bijection_suite(int n_max);

// The involution: self-inverse, projection compatibility with particle-hole,
// crossing preservation, alpha/beta statistic swap, weight swap, tableau-side
// compatibility through the bijection (sizes 2..n_max), generating-function
// symmetry, and the edge-labeled graph automorphism of both lifted chains
// (N up to min(n_max - 1, 4)).
SuiteReport run_involution_suite(int n_max);

// Move-count structure and total symbolic out-rates per block-alternation
// class, for both the exclusion process and the tableau chain, N = 1..n_max.
SuiteReport run_outrates_suite(int n_max);

// Dispatch by name: balance, projection, bijection, involution, outrates.
SuiteReport run_suite(const std::string& name, int n_max);

}  // namespace ptchain
