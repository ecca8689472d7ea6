// Command-line front end: enumeration, weight polynomials, exact stationary
// laws, Monte Carlo runs, state-diagram export and the verification suites.
//
// Exit codes: 0 success / all checks pass, 1 verification violations,
// 2 usage errors.

#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include <CLI11.hpp>

#include "ptchain/analysis.hpp"
#include "ptchain/involution.hpp"
#include "ptchain/io.hpp"
#include "ptchain/simulate.hpp"

using namespace ptchain;

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void write_output(const std::string& path, const std::string& content) {
    if (path.empty()) {
        std::cout << content;
        return;
    }
    std::ofstream out(path);
    if (!out) throw UsageError("cannot open output file '" + path + "'");
    out << content;
}

std::string read_input(const std::string& path) {
    std::ostringstream buffer;
    if (path == "-") {
        buffer << std::cin.rdbuf();
    } else {
        std::ifstream in(path);
        if (!in) throw UsageError("cannot open input file '" + path + "'");
        buffer << in.rdbuf();
    }
    return buffer.str();
}

PasepParams make_params(const std::string& q, const std::string& alpha, const std::string& beta,
                        int n) {
    PasepParams p{parse_rational(q), parse_rational(alpha), parse_rational(beta), n};
    if (!p.in_closed_box())
        throw UsageError("parameters must satisfy 0 <= q <= 1 and 0 <= alpha, beta <= 1");
    return p;
}

std::string format_poly(const LaurentPoly& poly, const std::string& format,
                        const std::string& what, int n) {
    if (format == "text") return poly.to_string() + "\n";
    if (format == "json")
        return std::string("{\"") + what + "\":\"" + poly.to_string() +
               "\",\"n\":" + std::to_string(n) + "}\n";
    throw UsageError("format must be text or json");
}

std::string enumerate_text(int n) {
    std::ostringstream out;
    auto tableaux = enumerate_tableaux(n);
    out << tableaux.size() << " tableaux of half-perimeter " << n << "\n";
    std::map<std::string, int> by_shape;
    std::vector<std::string> order;
    for (const auto& t : tableaux) {
        auto name = t.shape().to_string();
        if (!by_shape.count(name)) order.push_back(name);
        ++by_shape[name];
    }
    for (const auto& name : order) out << name << " " << by_shape[name] << "\n";
    return out.str();
}

std::string enumerate_json(int n) {
    std::ostringstream out;
    out << "[";
    bool first = true;
    for (const auto& t : enumerate_tableaux(n)) {
        if (!first) out << ",";
        first = false;
        out << tableau_to_json(t);
    }
    out << "]\n";
    return out.str();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact tools for the exclusion process and its tableau chain"};
    app.require_subcommand(1);

    std::string output, state_text, perm_text, tableau_path, chain_name = "pasep";
    std::string q = "0", alpha = "1", beta = "1", suite;
    std::string fmt_enumerate = "json", fmt_zn = "text", fmt_flambda = "text";
    std::string fmt_stationary = "csv", fmt_simulate = "csv", fmt_diagram = "dot";
    std::string fmt_verify = "json";
    int n = 1, n_max = 3;
    long steps = 1000000;
    std::uint64_t seed = 1;

    auto* cmd_enumerate = app.add_subcommand("enumerate", "List tableaux of half-perimeter n");
    cmd_enumerate->add_option("--n", n, "half-perimeter")->required();
    cmd_enumerate->add_option("--format", fmt_enumerate, "json|text");
    cmd_enumerate->add_option("--output,-o", output, "output path (default stdout)");

    auto* cmd_zn = app.add_subcommand("zn", "Partition function Z_n of the n-site process");
    cmd_zn->add_option("--n", n, "number of sites")->required();
    cmd_zn->add_option("--format", fmt_zn, "text|json");
    cmd_zn->add_option("--output,-o", output, "output path");

    auto* cmd_flambda =
        app.add_subcommand("flambda", "Weight generating function of a state's shape");
    cmd_flambda->add_option("--state", state_text, "occupation word, e.g. 0101 or .*.*")
        ->required();
    cmd_flambda->add_option("--format", fmt_flambda, "text|json");
    cmd_flambda->add_option("--output,-o", output, "output path");

    auto* cmd_stationary = app.add_subcommand("stationary", "Exact stationary distribution");
    cmd_stationary->add_option("--chain", chain_name, "pasep|pt|perm")->required();
    cmd_stationary->add_option("--n", n, "number of sites")->required();
    cmd_stationary->add_option("--q", q, "rational, e.g. 1/2")->required();
    cmd_stationary->add_option("--alpha", alpha, "rational in (0,1]")->required();
    cmd_stationary->add_option("--beta", beta, "rational in (0,1]")->required();
    cmd_stationary->add_option("--format", fmt_stationary, "csv|json");
    cmd_stationary->add_option("--output,-o", output, "output path");

    auto* cmd_simulate = app.add_subcommand("simulate", "Monte Carlo visit frequencies");
    cmd_simulate->add_option("--chain", chain_name, "pasep|pt|perm")->required();
    cmd_simulate->add_option("--n", n, "number of sites")->required();
    cmd_simulate->add_option("--q", q, "rational")->required();
    cmd_simulate->add_option("--alpha", alpha, "rational in (0,1]")->required();
    cmd_simulate->add_option("--beta", beta, "rational in (0,1]")->required();
    cmd_simulate->add_option("--steps", steps, "number of transitions")->required();
    cmd_simulate->add_option("--seed", seed, "trajectory seed (default 1)");
    cmd_simulate->add_option("--format", fmt_simulate, "csv|json");
    cmd_simulate->add_option("--output,-o", output, "output path");

    auto* cmd_diagram = app.add_subcommand("diagram", "State diagram with symbolic rates");
    cmd_diagram->add_option("--chain", chain_name, "pasep|pt|perm")->required();
    cmd_diagram->add_option("--n", n, "number of sites")->required();
    cmd_diagram->add_option("--format", fmt_diagram, "dot|json|csv|text");
    cmd_diagram->add_option("--output,-o", output, "output path");

    auto* cmd_phi = app.add_subcommand("phi", "Permutation of a tableau (JSON file or '-')");
    cmd_phi->add_option("--tableau", tableau_path, "tableau JSON path")->required();
    cmd_phi->add_option("--output,-o", output, "output path");

    auto* cmd_invol = app.add_subcommand("invol", "Involution of a permutation");
    cmd_invol->add_option("--perm", perm_text, "one-line notation, e.g. 7,4,8,3,6,2,1,5")
        ->required();
    cmd_invol->add_option("--output,-o", output, "output path");

    auto* cmd_verify = app.add_subcommand("verify", "Run a verification suite");
    cmd_verify->add_option("--suite", suite, "balance|projection|bijection|involution|outrates")
        ->required();
    cmd_verify->add_option("--n-max", n_max, "largest size checked")->required();
    cmd_verify->add_option("--format", fmt_verify, "json|text");
    cmd_verify->add_option("--output,-o", output, "output path");

    try {
        app.parse(argc, argv);

        if (*cmd_enumerate) {
            if (n < 1) throw UsageError("--n must be >= 1");
            if (fmt_enumerate == "json")
                write_output(output, enumerate_json(n));
            else if (fmt_enumerate == "text")
                write_output(output, enumerate_text(n));
            else
                throw UsageError("format must be json or text");
        } else if (*cmd_zn) {
            if (n < 1) throw UsageError("--n must be >= 1");
            write_output(output, format_poly(partition_function(n), fmt_zn, "zn", n));
        } else if (*cmd_flambda) {
            auto shape = shape_of_state(PasepState::parse(state_text));
            write_output(output, format_poly(shape_weight_polynomial(shape), fmt_flambda,
                                             "flambda", shape.half_perimeter() - 1));
        } else if (*cmd_stationary) {
            auto sys = build_system(parse_chain_kind(chain_name), n);
            auto dist = stationary_exact(sys, make_params(q, alpha, beta, n));
            if (fmt_stationary == "csv")
                write_output(output, distribution_to_csv(sys, dist));
            else if (fmt_stationary == "json")
                write_output(output, distribution_to_json(sys, dist) + "\n");
            else
                throw UsageError("format must be csv or json");
        } else if (*cmd_simulate) {
            auto params = make_params(q, alpha, beta, n);
            if (!params.in_open_box())
                throw UsageError("simulation needs alpha > 0 and beta > 0");
            auto sys = build_system(parse_chain_kind(chain_name), n);
            auto dist = simulate(sys, params, seed, steps);
            if (fmt_simulate == "csv")
                write_output(output, distribution_to_csv(sys, dist));
            else if (fmt_simulate == "json")
                write_output(output, distribution_to_json(sys, dist) + "\n");
            else
                throw UsageError("format must be csv or json");
        } else if (*cmd_diagram) {
            auto sys = build_system(parse_chain_kind(chain_name), n);
            if (fmt_diagram == "dot")
                write_output(output, system_to_dot(sys));
            else if (fmt_diagram == "json")
                write_output(output, system_to_json(sys) + "\n");
            else if (fmt_diagram == "csv")
                write_output(output, system_to_csv(sys));
            else if (fmt_diagram == "text")
                write_output(output, system_to_text(sys));
            else
                throw UsageError("format must be dot, json, csv or text");
        } else if (*cmd_phi) {
            auto t = tableau_from_json(read_input(tableau_path));
            if (!t.is_valid()) throw UsageError("input is not a valid permutation tableau");
            write_output(output, tableau_to_permutation(t).to_string() + "\n");
        } else if (*cmd_invol) {
            write_output(output, involute(Permutation::parse(perm_text)).to_string() + "\n");
        } else if (*cmd_verify) {
            if (n_max < 1) throw UsageError("--n-max must be >= 1");
            auto report = run_suite(suite, n_max);
            if (fmt_verify == "json")
                write_output(output, report_to_json(report) + "\n");
            else if (fmt_verify == "text") {
                std::ostringstream text;
                text << "suite " << report.suite << " (n-max " << report.n_max
                     << "): " << (report.ok() ? "PASS" : "FAIL") << ", " << report.checks
                     << " checks, " << report.violations.size() << " violations\n";
                for (const auto& v : report.violations) text << "  " << v << "\n";
                write_output(output, text.str());
            } else
                throw UsageError("format must be json or text");
            return report.ok() ? 0 : 1;
        }
        return 0;
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);  // prints help or the parse error
        return code == 0 ? 0 : 2;
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
}
