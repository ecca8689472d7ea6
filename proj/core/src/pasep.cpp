#include "ptchain/pasep.hpp"

#include <algorithm>

namespace ptchain {

bool PasepParams::in_closed_box() const {
    return q >= 0 && q <= 1 && alpha >= 0 && alpha <= 1 && beta >= 0 && beta <= 1;
}

bool PasepParams::in_open_box() const { return in_closed_box() && alpha > 0 && beta > 0; }

const char* move_kind_name(MoveKind kind) {
    switch (kind) {
        case MoveKind::EnterLeft: return "enter_left";
        case MoveKind::HopRight: return "hop_right";
        case MoveKind::HopRightCase1: return "hop_right_case1";
        case MoveKind::HopRightCase2: return "hop_right_case2";
        case MoveKind::HopRightCase3: return "hop_right_case3";
        case MoveKind::ExitRight: return "exit_right";
        case MoveKind::HopLeft: return "hop_left";
    }
    return "?";
}

bool is_hop_right(MoveKind kind) {
    return kind == MoveKind::HopRight || kind == MoveKind::HopRightCase1 ||
           kind == MoveKind::HopRightCase2 || kind == MoveKind::HopRightCase3;
}

namespace {

LaurentMonomial scaled(LaurentMonomial m, int n_sites) {
    m.coeff /= (n_sites + 1);
    return m;
}

PasepState with_flip(const PasepState& s, int site) {
    auto sites = s.sites();
    sites[site - 1] ^= 1;
    return PasepState(std::move(sites));
}

PasepState with_swap(const PasepState& s, int site) {
    auto sites = s.sites();
    std::swap(sites[site - 1], sites[site]);
    return PasepState(std::move(sites));
}

}  // namespace

std::vector<PasepMove> pasep_transitions(const PasepState& state) {
    const int n = state.size();
    std::vector<PasepMove> moves;
    if (n >= 1 && !state.occupied(1))
        moves.push_back({MoveKind::EnterLeft, 1, with_flip(state, 1), scaled(mono_alpha(), n)});
    for (int i = 1; i < n; ++i) {
        if (state.occupied(i) && !state.occupied(i + 1))
            moves.push_back({MoveKind::HopRight, i, with_swap(state, i), scaled(mono_one(), n)});
        if (!state.occupied(i) && state.occupied(i + 1))
            moves.push_back({MoveKind::HopLeft, i, with_swap(state, i), scaled(mono_q(), n)});
    }
    if (n >= 1 && state.occupied(n))
        moves.push_back({MoveKind::ExitRight, n, with_flip(state, n), scaled(mono_beta(), n)});
    return moves;
}

PasepState particle_hole(const PasepState& state) {
    auto sites = state.sites();
    std::reverse(sites.begin(), sites.end());
    for (auto& s : sites) s ^= 1;
    return PasepState(std::move(sites));
}

}  // namespace ptchain
