#include "ptchain/transition_system.hpp"

#include <stdexcept>

namespace ptchain {

const char* chain_kind_name(ChainKind kind) {
    switch (kind) {
        case ChainKind::Pasep: return "pasep";
        case ChainKind::Pt: return "pt";
        case ChainKind::PermPt: return "perm";
    }
    return "?";
}

ChainKind parse_chain_kind(const std::string& name) {
    if (name == "pasep") return ChainKind::Pasep;
    if (name == "pt") return ChainKind::Pt;
    if (name == "perm") return ChainKind::PermPt;
    throw std::invalid_argument("unknown chain '" + name + "' (expected pasep, pt or perm)");
}

int TransitionSystem::find(const std::string& key) const {
    auto it = index.find(key);
    return it == index.end() ? -1 : it->second;
}

const LaurentPoly* TransitionSystem::edge(int from, int to) const {
    for (std::size_t k = 0; k < out_to[from].size(); ++k)
        if (out_to[from][k] == to) return &out_rate[from][k];
    return nullptr;
}

LaurentPoly TransitionSystem::out_rate_sum(int from) const {
    LaurentPoly sum;
    for (const auto& r : out_rate[from]) sum += r;
    return sum;
}

long TransitionSystem::edge_count() const {
    long total = 0;
    for (const auto& row : out_to) total += static_cast<long>(row.size());
    return total;
}

LaurentPoly TransitionSystem::state_weight(int i) const {
    switch (kind) {
        case ChainKind::Pasep: return shape_weight_polynomial(shape_of_state(pasep_states[i]));
        case ChainKind::Pt: return LaurentPoly(tableau_states[i].weight());
        case ChainKind::PermPt: return LaurentPoly(weight(perm_states[i]));
    }
    throw std::logic_error("state_weight: bad kind");
}

namespace {

void add_edge(TransitionSystem& sys, int from, MoveKind kind, const std::string& target_key,
              const LaurentMonomial& rate) {
    int to = sys.find(target_key);
    if (to < 0) throw std::logic_error("build_system: move target is not a known state");
    // Parallel edges between a pair of states do not occur in these chains;
    // summing keeps the invariant obvious.
    for (std::size_t k = 0; k < sys.out_to[from].size(); ++k)
        if (sys.out_to[from][k] == to) {
            sys.out_rate[from][k] += LaurentPoly(rate);
            return;
        }
    sys.out_kinds[from].push_back(kind);
    sys.out_to[from].push_back(to);
    sys.out_rate[from].emplace_back(LaurentPoly(rate));
}

}  // namespace

TransitionSystem build_system(ChainKind kind, int n_sites) {
    if (n_sites < 1) throw std::invalid_argument("build_system: n_sites must be >= 1");
    TransitionSystem sys;
    sys.kind = kind;
    sys.n_sites = n_sites;

    switch (kind) {
        case ChainKind::Pasep: {
            const int n = n_sites;
            for (long v = 0; v < (1L << n); ++v) {
                std::vector<unsigned char> sites(n);
                for (int i = 0; i < n; ++i) sites[i] = (v >> (n - 1 - i)) & 1;
                sys.pasep_states.emplace_back(std::move(sites));
            }
            for (const auto& s : sys.pasep_states) {
                sys.keys.push_back(s.to_string());
                sys.projections.push_back(s);
            }
            break;
        }
        case ChainKind::Pt: {
            sys.tableau_states = enumerate_tableaux(n_sites + 1);
            for (const auto& t : sys.tableau_states) {
                sys.keys.push_back(t.key());
                sys.projections.push_back(project(t));
            }
            break;
        }
        case ChainKind::PermPt: {
            sys.perm_states = all_permutations(n_sites + 1);
            for (const auto& p : sys.perm_states) {
                sys.keys.push_back(p.to_string());
                sys.projections.push_back(project(p));
            }
            break;
        }
    }

    const int s = sys.size();
    sys.out_kinds.resize(s);
    sys.out_to.resize(s);
    sys.out_rate.resize(s);
    for (int i = 0; i < s; ++i) sys.index.emplace(sys.keys[i], i);

    for (int i = 0; i < s; ++i) {
        switch (kind) {
            case ChainKind::Pasep:
                for (const auto& m : pasep_transitions(sys.pasep_states[i]))
                    add_edge(sys, i, m.kind, m.target.to_string(), m.rate);
                break;
            case ChainKind::Pt:
                for (const auto& m : pt_transitions(sys.tableau_states[i]))
                    add_edge(sys, i, m.kind, m.target.key(), m.rate);
                break;
            case ChainKind::PermPt:
                for (const auto& m : perm_transitions(sys.perm_states[i]))
                    add_edge(sys, i, m.kind, m.target.to_string(), m.rate);
                break;
        }
    }
    return sys;
}

std::vector<Rational> InstantiatedChain::step(const std::vector<Rational>& u) const {
    std::vector<Rational> next(u.size(), Rational(0));
    for (std::size_t from = 0; from < u.size(); ++from) {
        if (u[from] == 0) continue;
        next[from] += u[from] * self_loop[from];
        for (const auto& [to, r] : out[from]) next[to] += u[from] * r;
    }
    return next;
}

InstantiatedChain instantiate(const TransitionSystem& sys, const PasepParams& params) {
    if (!params.in_closed_box())
        throw std::domain_error("instantiate: parameters outside the valid box");
    InstantiatedChain chain;
    chain.out.resize(sys.size());
    chain.self_loop.resize(sys.size());
    for (int i = 0; i < sys.size(); ++i) {
        Rational total = 0;
        for (std::size_t k = 0; k < sys.out_to[i].size(); ++k) {
            Rational r = sys.out_rate[i][k].eval(params.q, params.alpha, params.beta);
            if (r < 0) throw std::domain_error("instantiate: negative transition probability");
            if (r == 0) continue;
            chain.out[i].emplace_back(sys.out_to[i][k], r);
            total += r;
        }
        if (total > 1) throw std::domain_error("instantiate: row out-rate exceeds 1");
        chain.self_loop[i] = 1 - total;
    }
    return chain;
}

void Distribution::validate() const {
    Rational total = 0;
    for (const auto& w : weights) {
        if (w < 0) throw std::logic_error("Distribution: negative weight");
        total += w;
    }
    if (total != 1) throw std::logic_error("Distribution: weights do not sum to 1");
}

Rational total_variation(const Distribution& x, const Distribution& y) {
    if (x.size() != y.size()) throw std::invalid_argument("total_variation: size mismatch");
    Rational sum = 0;
    for (int i = 0; i < x.size(); ++i) {
        Rational d = x.weights[i] - y.weights[i];
        sum += d < 0 ? -d : d;
    }
    return sum / 2;
}

}  // namespace ptchain
