#include "ptchain/analysis.hpp"

#include <algorithm>

namespace ptchain {

BalanceReport verify_balance(const TransitionSystem& sys,
                             const std::function<LaurentMonomial(int)>& weight_of) {
    const int s = sys.size();
    std::vector<LaurentPoly> inflow(s);
    for (int from = 0; from < s; ++from) {
        const LaurentPoly w = LaurentPoly(weight_of(from));
        for (std::size_t k = 0; k < sys.out_to[from].size(); ++k)
            inflow[sys.out_to[from][k]] += w * sys.out_rate[from][k];
    }
    BalanceReport report;
    report.states_checked = s;
    for (int i = 0; i < s; ++i) {
        LaurentPoly outflow = LaurentPoly(weight_of(i)) * sys.out_rate_sum(i);
        if (inflow[i] != outflow)
            report.violations.push_back(
                {i, sys.keys[i], inflow[i].to_string(), outflow.to_string()});
    }
    return report;
}

std::function<LaurentMonomial(int)> state_weight_monomial(const TransitionSystem& sys) {
    switch (sys.kind) {
        case ChainKind::Pt:
            return [&sys](int i) { return sys.tableau_states[i].weight(); };
        case ChainKind::PermPt:
            return [&sys](int i) { return weight(sys.perm_states[i]); };
        case ChainKind::Pasep:
            throw std::invalid_argument(
                "state_weight_monomial: the exclusion process has polynomial weights, "
                "not monomials");
    }
    throw std::logic_error("state_weight_monomial: bad kind");
}

namespace {

// Solves the dense rational system in place; matrix is s rows by s+1 columns
// (augmented). First nonzero entry of the column is the pivot; exact
// arithmetic needs no magnitude-based pivoting.
std::vector<Rational> solve_dense(std::vector<std::vector<Rational>>& m) {
    const std::size_t s = m.size();
    for (std::size_t col = 0; col < s; ++col) {
        std::size_t pivot = col;
        while (pivot < s && m[pivot][col] == 0) ++pivot;
        if (pivot == s) throw SingularSystemError("stationary system is singular");
        if (pivot != col) std::swap(m[pivot], m[col]);
        const Rational inv = 1 / m[col][col];
        for (std::size_t c = col; c <= s; ++c) m[col][c] *= inv;
        for (std::size_t r = col + 1; r < s; ++r) {
            if (m[r][col] == 0) continue;
            const Rational f = m[r][col];
            for (std::size_t c = col; c <= s; ++c) m[r][c] -= f * m[col][c];
        }
    }
    std::vector<Rational> x(s);
    for (std::size_t r = s; r-- > 0;) {
        Rational v = m[r][s];
        for (std::size_t c = r + 1; c < s; ++c) v -= m[r][c] * x[c];
        x[r] = v;
    }
    return x;
}

}  // namespace

Distribution stationary_exact(const TransitionSystem& sys, const PasepParams& params) {
    // All three chains are irreducible exactly when both boundary rates are
    // positive; at alpha = 0 or beta = 0 the chain develops absorbing states.
    if (params.alpha == 0 || params.beta == 0)
        throw SingularSystemError("chain is reducible: boundary rate is zero");
    const InstantiatedChain chain = instantiate(sys, params);
    const int s = chain.size();
    // Rows 0..s-2: column y of (P^T - I); any one balance equation is
    // redundant, so the last is replaced by the normalization sum(x) = 1.
    std::vector<std::vector<Rational>> m(s, std::vector<Rational>(s + 1, Rational(0)));
    for (int y = 0; y < s - 1; ++y) m[y][y] = chain.self_loop[y] - 1;
    for (int from = 0; from < s; ++from)
        for (const auto& [to, r] : chain.out[from])
            if (to < s - 1) m[to][from] = r;
    for (int x = 0; x < s; ++x) m[s - 1][x] = 1;
    m[s - 1][s] = 1;

    Distribution dist{solve_dense(m)};
    dist.validate();
    // Exact fixed-point residual check: the solve and the chain agree.
    auto next = chain.step(dist.weights);
    if (next != dist.weights) throw std::logic_error("stationary_exact: nonzero residual");
    return dist;
}

std::vector<int> projection_map(const TransitionSystem& fine, const TransitionSystem& coarse) {
    std::vector<int> map(fine.size());
    std::vector<char> hit(coarse.size(), 0);
    for (int i = 0; i < fine.size(); ++i) {
        int j = coarse.find(fine.projections[i].to_string());
        if (j < 0) throw std::invalid_argument("projection_map: projected state missing");
        map[i] = j;
        hit[j] = 1;
    }
    if (std::find(hit.begin(), hit.end(), 0) != hit.end())
        throw std::invalid_argument("projection_map: projection is not surjective");
    return map;
}

Distribution push_forward(const Distribution& d, const std::vector<int>& state_map,
                          int coarse_size) {
    Distribution out;
    out.weights.assign(coarse_size, Rational(0));
    for (std::size_t i = 0; i < state_map.size(); ++i) out.weights[state_map[i]] += d.weights[i];
    return out;
}

ProjectionReport verify_projection(const TransitionSystem& fine, const TransitionSystem& coarse,
                                   const std::vector<int>& state_map, int t_max,
                                   const PasepParams& params) {
    ProjectionReport report;
    auto complain = [&](const std::string& what) { report.violations.push_back(what); };

    // Every fine edge carries the rate of the coarse edge of its image.
    for (int x1 = 0; x1 < fine.size(); ++x1)
        for (std::size_t k = 0; k < fine.out_to[x1].size(); ++k) {
            ++report.checks;
            const int x2 = fine.out_to[x1][k];
            const int y1 = state_map[x1], y2 = state_map[x2];
            if (y1 == y2) {
                complain("edge " + fine.keys[x1] + " -> " + fine.keys[x2] +
                         " collapses to a self-loop");
                continue;
            }
            const LaurentPoly* rate = coarse.edge(y1, y2);
            if (!rate)
                complain("edge " + fine.keys[x1] + " -> " + fine.keys[x2] +
                         " has no image edge " + coarse.keys[y1] + " -> " + coarse.keys[y2]);
            else if (*rate != fine.out_rate[x1][k])
                complain("edge " + fine.keys[x1] + " -> " + fine.keys[x2] +
                         " rate differs from its image edge");
        }

    // Every coarse edge lifts uniquely from each fiber point, with the same
    // rate.
    std::vector<std::vector<int>> fiber(coarse.size());
    for (int i = 0; i < fine.size(); ++i) fiber[state_map[i]].push_back(i);
    for (int y1 = 0; y1 < coarse.size(); ++y1)
        for (std::size_t k = 0; k < coarse.out_to[y1].size(); ++k) {
            const int y2 = coarse.out_to[y1][k];
            for (int x1 : fiber[y1]) {
                ++report.checks;
                int lifts = 0;
                bool rate_ok = true;
                for (std::size_t e = 0; e < fine.out_to[x1].size(); ++e)
                    if (state_map[fine.out_to[x1][e]] == y2) {
                        ++lifts;
                        rate_ok = fine.out_rate[x1][e] == coarse.out_rate[y1][k];
                    }
                if (lifts != 1)
                    complain("state " + fine.keys[x1] + " lifts edge " + coarse.keys[y1] +
                             " -> " + coarse.keys[y2] + " " + std::to_string(lifts) + " times");
                else if (!rate_ok)
                    complain("state " + fine.keys[x1] + " lifts edge " + coarse.keys[y1] +
                             " -> " + coarse.keys[y2] + " with a different rate");
            }
        }

    // Time-t occupation probabilities: the coarse walk equals fiber sums of
    // the fine walk from every start state.
    const InstantiatedChain fine_chain = instantiate(fine, params);
    const InstantiatedChain coarse_chain = instantiate(coarse, params);
    for (int x0 = 0; x0 < fine.size(); ++x0) {
        std::vector<Rational> u(fine.size(), Rational(0));
        std::vector<Rational> v(coarse.size(), Rational(0));
        u[x0] = 1;
        v[state_map[x0]] = 1;
        for (int t = 0; t <= t_max; ++t) {
            ++report.checks;
            std::vector<Rational> sums(coarse.size(), Rational(0));
            for (int i = 0; i < fine.size(); ++i) sums[state_map[i]] += u[i];
            if (sums != v) {
                complain("time-" + std::to_string(t) + " distribution from " + fine.keys[x0] +
                         " does not project");
                break;
            }
            if (t < t_max) {
                u = fine_chain.step(u);
                v = coarse_chain.step(v);
            }
        }
    }
    return report;
}

}  // namespace ptchain
