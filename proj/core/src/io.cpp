#include "ptchain/io.hpp"

#include <sstream>

#include <json.hpp>

namespace ptchain {

using nlohmann::json;

std::string tableau_to_json(const PermutationTableau& t) {
    json j;
    j["shape"] = t.shape().rows();
    j["rows"] = json::array();
    for (const auto& row : t.rows()) {
        json r = json::array();
        for (auto v : row) r.push_back(static_cast<int>(v));
        j["rows"].push_back(std::move(r));
    }
    return j.dump();
}

PermutationTableau tableau_from_json(const std::string& text) {
    json j = json::parse(text);
    if (!j.contains("rows")) throw std::invalid_argument("tableau JSON: missing \"rows\"");
    std::vector<std::vector<unsigned char>> rows;
    for (const auto& r : j.at("rows")) {
        std::vector<unsigned char> row;
        for (const auto& v : r) {
            int x = v.get<int>();
            if (x != 0 && x != 1) throw std::invalid_argument("tableau JSON: entries must be 0/1");
            row.push_back(static_cast<unsigned char>(x));
        }
        rows.push_back(std::move(row));
    }
    std::vector<int> lengths;
    for (const auto& r : rows) lengths.push_back(static_cast<int>(r.size()));
    if (j.contains("shape")) {
        std::vector<int> declared = j.at("shape").get<std::vector<int>>();
        if (declared != lengths)
            throw std::invalid_argument("tableau JSON: shape does not match rows");
    }
    return PermutationTableau(Shape(lengths), std::move(rows));
}

std::string distribution_to_csv(const TransitionSystem& sys, const Distribution& d) {
    std::ostringstream out;
    out << "state,probability_num,probability_den\n";
    for (int i = 0; i < sys.size(); ++i)
        out << sys.keys[i] << "," << d.weights[i].get_num().get_str() << ","
            << d.weights[i].get_den().get_str() << "\n";
    return out.str();
}

std::string distribution_to_json(const TransitionSystem& sys, const Distribution& d) {
    json j;
    j["chain"] = chain_kind_name(sys.kind);
    j["n"] = sys.n_sites;
    j["states"] = json::array();
    for (int i = 0; i < sys.size(); ++i)
        j["states"].push_back({{"state", sys.keys[i]},
                               {"num", d.weights[i].get_num().get_str()},
                               {"den", d.weights[i].get_den().get_str()}});
    return j.dump();
}

namespace {

// "1/4", "q/4", "a/4" or "b/4" when the rate is a single such monomial;
// falls back to the generic polynomial text.
std::string rate_label(const LaurentPoly& rate, int n_sites) {
    if (rate.term_count() == 1) {
        const auto& [e, c] = *rate.terms().begin();
        if (c == make_rational(1, n_sites + 1)) {
            std::string den = std::to_string(n_sites + 1);
            if (e == ExponentTriple{0, 0, 0}) return "1/" + den;
            if (e == ExponentTriple{1, 0, 0}) return "q/" + den;
            if (e == ExponentTriple{0, 1, 0}) return "a/" + den;
            if (e == ExponentTriple{0, 0, 1}) return "b/" + den;
        }
    }
    return rate.to_string();
}

json move_json(const TransitionSystem& sys, int from, std::size_t k) {
    json j;
    j["kind"] = move_kind_name(sys.out_kinds[from][k]);
    j["target"] = sys.keys[sys.out_to[from][k]];
    j["rate"] = rate_label(sys.out_rate[from][k], sys.n_sites);
    return j;
}

}  // namespace

std::string system_to_dot(const TransitionSystem& sys) {
    std::ostringstream out;
    out << "digraph " << chain_kind_name(sys.kind) << "_n" << sys.n_sites << " {\n";
    out << "  rankdir=LR;\n  node [shape=box];\n";
    for (int i = 0; i < sys.size(); ++i) {
        std::string label = sys.projections[i].to_string();
        if (sys.kind != ChainKind::Pasep) label += "\\n" + sys.keys[i];
        out << "  s" << i << " [label=\"" << label << "\"];\n";
    }
    for (int i = 0; i < sys.size(); ++i)
        for (std::size_t k = 0; k < sys.out_to[i].size(); ++k)
            out << "  s" << i << " -> s" << sys.out_to[i][k] << " [label=\""
                << rate_label(sys.out_rate[i][k], sys.n_sites) << "\"];\n";
    out << "}\n";
    return out.str();
}

std::string system_to_json(const TransitionSystem& sys) {
    json j;
    j["chain"] = chain_kind_name(sys.kind);
    j["n"] = sys.n_sites;
    j["states"] = json::array();
    for (int i = 0; i < sys.size(); ++i) {
        json s;
        s["key"] = sys.keys[i];
        s["projection"] = sys.projections[i].to_string();
        s["moves"] = json::array();
        if (sys.kind == ChainKind::Pt) {
            for (const auto& m : pt_transitions(sys.tableau_states[i])) {
                json mv;
                mv["kind"] = move_kind_name(m.kind);
                mv["site_index"] = m.site;
                mv["row_index"] = m.row;
                mv["target"] = m.target.key();
                mv["rate"] = rate_label(LaurentPoly(m.rate), sys.n_sites);
                s["moves"].push_back(std::move(mv));
            }
        } else {
            for (std::size_t k = 0; k < sys.out_to[i].size(); ++k)
                s["moves"].push_back(move_json(sys, i, k));
        }
        j["states"].push_back(std::move(s));
    }
    return j.dump();
}

std::string system_to_csv(const TransitionSystem& sys) {
    std::ostringstream out;
    out << "from,to,rate\n";
    for (int i = 0; i < sys.size(); ++i)
        for (std::size_t k = 0; k < sys.out_to[i].size(); ++k)
            out << sys.keys[i] << "," << sys.keys[sys.out_to[i][k]] << ","
                << rate_label(sys.out_rate[i][k], sys.n_sites) << "\n";
    return out.str();
}

std::string system_to_text(const TransitionSystem& sys) {
    std::ostringstream out;
    out << chain_kind_name(sys.kind) << " chain, N=" << sys.n_sites << ": " << sys.size()
        << " states, " << sys.edge_count() << " transitions\n";
    for (int i = 0; i < sys.size(); ++i) {
        out << sys.keys[i] << " (" << sys.projections[i].to_string() << ")";
        for (std::size_t k = 0; k < sys.out_to[i].size(); ++k)
            out << "  -> " << sys.keys[sys.out_to[i][k]] << " ["
                << rate_label(sys.out_rate[i][k], sys.n_sites) << "]";
        out << "\n";
    }
    return out.str();
}

std::string moves_to_json(const PermutationTableau& t) {
    const int n = t.half_perimeter() - 1;
    json j = json::array();
    for (const auto& m : pt_transitions(t)) {
        json mv;
        mv["kind"] = move_kind_name(m.kind);
        mv["site_index"] = m.site;
        mv["row_index"] = m.row;
        mv["target"] = json::parse(tableau_to_json(m.target));
        mv["rate"] = rate_label(LaurentPoly(m.rate), n);
        j.push_back(std::move(mv));
    }
    return j.dump();
}

std::string report_to_json(const SuiteReport& report) {
    json j;
    j["suite"] = report.suite;
    j["n_max"] = report.n_max;
    j["checks"] = report.checks;
    j["violations"] = json::array();
    for (const auto& v : report.violations) j["violations"].push_back(v);
    return j.dump();
}

}  // namespace ptchain
