#pragma once

#include <vector>

#include "ptchain/laurent.hpp"
#include "ptchain/shape.hpp"

namespace ptchain {

// Chain parameters. Numeric instantiation requires 0 <= q <= 1 and
// 0 < alpha, beta <= 1, which makes every transition matrix stochastic
// (worst-case row out-rate is ((n-1) + q*n + alpha + beta)/(N+1) <= 1).
// Symbolic computations put no bounds on the parameters.
struct PasepParams {
    Rational q;
    Rational alpha;
    Rational beta;
    int n_sites = 0;

    // 0 <= q <= 1, 0 <= alpha,beta <= 1. Solvers accept the closed box and
    // surface alpha = 0 or beta = 0 as a singular system.
    bool in_closed_box() const;
    // Simulation additionally needs alpha > 0 and beta > 0.
    bool in_open_box() const;
};

enum class MoveKind {
    EnterLeft,
    HopRight,  // the tableau chain refines this into the three cases below
    HopRightCase1,
    HopRightCase2,
    HopRightCase3,
    ExitRight,
    HopLeft,
};

const char* move_kind_name(MoveKind kind);
bool is_hop_right(MoveKind kind);

struct PasepMove {
    MoveKind kind;
    int site;  // 1-based; the (site, site+1) pair for hops, boundary site otherwise
    PasepState target;
    LaurentMonomial rate;  // element of {1, q, a, b} scaled by 1/(N+1)
};

// All moves out of the state with distinct target; the self-loop is implicit
// (1 minus the instantiated sum). Order: enter-left, then hops by site
// ascending (right before left), then exit-right.
std::vector<PasepMove> pasep_transitions(const PasepState& state);

// Reverse and complement; an involution exchanging the roles of alpha and
// beta on the transition structure.
PasepState particle_hole(const PasepState& state);

}  // namespace ptchain
