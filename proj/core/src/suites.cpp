#include "ptchain/suites.hpp"

#include <algorithm>
#include <map>

#include "ptchain/analysis.hpp"
#include "ptchain/involution.hpp"

namespace ptchain {

SuiteReport run_balance_suite(int n_max) {
    SuiteReport report;
    report.suite = "balance";
    report.n_max = n_max;
    for (int n = 1; n <= n_max; ++n) {
        auto sys = build_system(ChainKind::Pt, n);
        auto balance = verify_balance(sys, state_weight_monomial(sys));
        report.checks += balance.states_checked;
        for (const auto& v : balance.violations)
            report.violations.push_back("N=" + std::to_string(n) + " state " + v.key +
                                        ": inflow " + v.inflow + " != outflow " + v.outflow);
    }
    return report;
}

SuiteReport run_projection_suite(int n_max, int t_max) {
    SuiteReport report;
    report.suite = "projection";
    report.n_max = n_max;
    for (int n = 1; n <= n_max; ++n) {
        PasepParams params{make_rational(1, 2), make_rational(2, 3), make_rational(3, 4), n};
        auto fine = build_system(ChainKind::Pt, n);
        auto coarse = build_system(ChainKind::Pasep, n);
        auto map = projection_map(fine, coarse);
        auto proj = verify_projection(fine, coarse, map, t_max, params);
        report.checks += proj.checks;
        for (const auto& v : proj.violations)
            report.violations.push_back("N=" + std::to_string(n) + ": " + v);

        // Fiber sums of the fine stationary law give the coarse one.
        ++report.checks;
        auto fine_dist = stationary_exact(fine, params);
        auto coarse_dist = stationary_exact(coarse, params);
        if (push_forward(fine_dist, map, coarse.size()).weights != coarse_dist.weights)
            report.violations.push_back("N=" + std::to_string(n) +
                                        ": fiber-summed stationary law differs");
    }
    return report;
}

namespace {

// Border labels of the rows of a shape, and of the rows without ones.
std::vector<int> row_labels(const Shape& shape) {
    std::vector<int> labels;
    const int cols = shape.column_count();
    for (int j = 1; j <= shape.row_count(); ++j)
        labels.push_back(j + cols - shape.rows()[j - 1]);
    return labels;
}

}  // namespace

SuiteReport run_bijection_suite(int n_max) {
    SuiteReport report;
    report.suite = "bijection";
    report.n_max = n_max;
    for (int n = 1; n <= n_max; ++n) {
        auto tableaux = enumerate_tableaux(n);
        std::map<std::string, int> seen;
        long factorial = 1;
        for (int k = 2; k <= n; ++k) factorial *= k;
        if (static_cast<long>(tableaux.size()) != factorial)
            report.violations.push_back("n=" + std::to_string(n) + ": enumerated " +
                                        std::to_string(tableaux.size()) + " tableaux");
        for (const auto& t : tableaux) {
            ++report.checks;
            auto p = tableau_to_permutation(t);
            if (++seen[p.to_string()] > 1) {
                report.violations.push_back("n=" + std::to_string(n) + ": duplicate image " +
                                            p.to_string());
                continue;
            }
            auto ts = t.stats();
            auto ps = perm_stats(p);
            if (ps.crossings != ts.rank || ps.special_rl_minima != ts.first_row_ones ||
                ps.special_lr_maxima != ts.free_rows) {
                report.violations.push_back("n=" + std::to_string(n) + ": statistics differ at " +
                                            t.key());
                continue;
            }
            auto labels = row_labels(t.shape());
            std::vector<int> expected_fixed;
            for (int j = 1; j <= t.shape().row_count(); ++j) {
                bool has_one = false;
                for (int c = 1; c <= t.shape().rows()[j - 1]; ++c)
                    if (t.cell(j, c)) has_one = true;
                if (!has_one) expected_fixed.push_back(labels[j - 1]);
            }
            std::sort(expected_fixed.begin(), expected_fixed.end());
            std::vector<int> sorted_labels = labels;
            std::sort(sorted_labels.begin(), sorted_labels.end());
            if (ps.weak_excedances != sorted_labels)
                report.violations.push_back("n=" + std::to_string(n) +
                                            ": weak excedances are not the vertical labels at " +
                                            t.key());
            else if (ps.fixed_points != expected_fixed)
                report.violations.push_back("n=" + std::to_string(n) +
                                            ": fixed points are not the empty rows at " + t.key());
        }
    }
    return report;
}

SuiteReport run_involution_suite(int n_max) {
    SuiteReport report;
    report.suite = "involution";
    report.n_max = n_max;
    for (int n = 2; n <= n_max; ++n) {
        for (const auto& p : all_permutations(n)) {
            ++report.checks;
            auto bar = involute(p);
            if (involute(bar) != p) {
                report.violations.push_back("n=" + std::to_string(n) + ": not an involution at " +
                                            p.to_string());
                continue;
            }
            if (project(p) != particle_hole(project(bar)))
                report.violations.push_back("n=" + std::to_string(n) +
                                            ": projection incompatibility at " + p.to_string());
            auto s = perm_stats(p), sb = perm_stats(bar);
            if (s.crossings != sb.crossings || s.special_lr_maxima != sb.special_rl_minima ||
                s.special_rl_minima != sb.special_lr_maxima)
                report.violations.push_back("n=" + std::to_string(n) +
                                            ": statistics do not swap at " + p.to_string());
            auto w = LaurentPoly(weight(p));
            if (w != LaurentPoly(weight(bar)).swap_alpha_beta())
                report.violations.push_back("n=" + std::to_string(n) +
                                            ": weight swap fails at " + p.to_string());
        }
        // Tableau-side involution commutes with the bijection.
        for (const auto& t : enumerate_tableaux(n)) {
            ++report.checks;
            if (tableau_to_permutation(involute(t)) != involute(tableau_to_permutation(t)))
                report.violations.push_back("n=" + std::to_string(n) +
                                            ": tableau involution incompatible at " + t.key());
        }
    }
    // Graph automorphism exchanging the boundary rates, on both lifted chains.
    for (int n = 1; n <= std::min(n_max - 1, 4); ++n) {
        for (ChainKind kind : {ChainKind::Pt, ChainKind::PermPt}) {
            auto sys = build_system(kind, n);
            for (int i = 0; i < sys.size(); ++i) {
                std::string bar_key = kind == ChainKind::Pt
                                          ? involute(sys.tableau_states[i]).key()
                                          : involute(sys.perm_states[i]).to_string();
                int ib = sys.find(bar_key);
                for (std::size_t k = 0; k < sys.out_to[i].size(); ++k) {
                    ++report.checks;
                    int j = sys.out_to[i][k];
                    std::string bar_target = kind == ChainKind::Pt
                                                 ? involute(sys.tableau_states[j]).key()
                                                 : involute(sys.perm_states[j]).to_string();
                    const LaurentPoly* r = sys.edge(ib, sys.find(bar_target));
                    if (!r || *r != sys.out_rate[i][k].swap_alpha_beta())
                        report.violations.push_back(
                            "N=" + std::to_string(n) + " " + std::string(chain_kind_name(kind)) +
                            ": automorphism fails at edge " + sys.keys[i] + " -> " + sys.keys[j]);
                }
            }
        }
        // Weight generating functions of mirrored shapes agree up to the swap.
        auto pasep = build_system(ChainKind::Pasep, n);
        for (const auto& state : pasep.pasep_states) {
            ++report.checks;
            auto f = shape_weight_polynomial(shape_of_state(state));
            auto g = shape_weight_polynomial(shape_of_state(particle_hole(state)));
            if (f != g.swap_alpha_beta())
                report.violations.push_back("N=" + std::to_string(n) +
                                            ": generating-function symmetry fails at " +
                                            state.to_string());
        }
    }
    return report;
}

SuiteReport run_outrates_suite(int n_max) {
    SuiteReport report;
    report.suite = "outrates";
    report.n_max = n_max;
    for (int n = 1; n <= n_max; ++n) {
        auto pasep = build_system(ChainKind::Pasep, n);
        for (int i = 0; i < pasep.size(); ++i) {
            ++report.checks;
            const auto& state = pasep.pasep_states[i];
            auto cls = state_class(state);
            if (pasep.out_rate_sum(i) != class_out_rate(cls, n)) {
                report.violations.push_back("N=" + std::to_string(n) + " state " +
                                            state.to_string() + ": out-rate sum differs");
                continue;
            }
            // Move counts per kind must match the block structure.
            int hop_right = 0, hop_left = 0, enter = 0, exit = 0;
            for (auto kind : pasep.out_kinds[i]) {
                if (is_hop_right(kind)) ++hop_right;
                if (kind == MoveKind::HopLeft) ++hop_left;
                if (kind == MoveKind::EnterLeft) ++enter;
                if (kind == MoveKind::ExitRight) ++exit;
            }
            int want_right = 0, want_left = 0, want_enter = 0, want_exit = 0;
            switch (cls.cls) {
                case 1: want_right = cls.n, want_left = cls.n - 1; break;
                case 2: want_right = cls.n, want_left = cls.n, want_exit = 1; break;
                case 3: want_right = cls.n, want_left = cls.n, want_enter = 1; break;
                case 4:
                    want_right = cls.n - 1, want_left = cls.n, want_enter = 1, want_exit = 1;
                    break;
            }
            if (hop_right != want_right || hop_left != want_left || enter != want_enter ||
                exit != want_exit)
                report.violations.push_back("N=" + std::to_string(n) + " state " +
                                            state.to_string() + ": move counts differ");
        }
        auto pt = build_system(ChainKind::Pt, n);
        for (int i = 0; i < pt.size(); ++i) {
            ++report.checks;
            auto cls = state_class(pt.projections[i]);
            if (pt.out_rate_sum(i) != class_out_rate(cls, n))
                report.violations.push_back("N=" + std::to_string(n) + " tableau " + pt.keys[i] +
                                            ": out-rate sum differs");
        }
    }
    return report;
}

SuiteReport run_suite(const std::string& name, int n_max) {
    if (name == "balance") return run_balance_suite(n_max);
    if (name == "projection") return run_projection_suite(n_max);
    if (name == "bijection") return run_bijection_suite(n_max);
    if (name == "involution") return run_involution_suite(n_max);
    if (name == "outrates") return run_outrates_suite(n_max);
    throw std::invalid_argument("unknown suite '" + name + "'");
}

}  // namespace ptchain
