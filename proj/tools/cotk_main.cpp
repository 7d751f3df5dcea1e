// Command-line front end: construct the hypergraph families, analyze
// codegrees, decide containment, compute exact extremal numbers, and run the
// verification fixtures.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "cotk/cotk.hpp"
#include "cotk/fixtures.hpp"

namespace {

constexpr int kExitSuccess = 0;
constexpr int kExitNotFound = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw cotk::InputError("cannot open '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void write_output(const std::string& path, const std::string& content) {
    if (path.empty()) {
        std::cout << content;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw cotk::InputError("cannot write '" + path + "'");
    out << content;
}

struct ConstructArgs {
    std::string family;
    int k = 3;
    int ell = 0;
    long long p = -1;
    long long n = 0;
    int r = 1;
    std::string eta;
    long long max_vertices = 100'000;
    std::string out;
};

int run_construct(const ConstructArgs& args) {
    cotk::Hypergraph result = cotk::Hypergraph::edgeless(2, 0);
    if (args.family == "zycle") {
        result = cotk::make_zycle(args.k, args.ell);
    } else if (args.family == "fp") {
        result = cotk::make_fp(args.k, args.p, args.n).first;
    } else if (args.family == "host") {
        std::optional<long long> p;
        if (args.p >= 0)
            p = args.p;
        result = cotk::make_host(args.k, args.r,
                                 cotk::Rational::parse(args.eta), args.n, p)
                     .first;
    } else if (args.family == "g") {
        result = cotk::make_g(args.k, args.ell, args.r, args.max_vertices).first;
    } else {
        throw cotk::ParamError("unknown family '" + args.family + "'");
    }
    write_output(args.out, cotk::emit_edge_list(result));
    return kExitSuccess;
}

int run_analyze(const std::string& in_path, bool as_json) {
    const cotk::Hypergraph h = cotk::parse_edge_list(read_file(in_path));
    const cotk::CodegreeReport report = cotk::min_codegree_report(h);
    if (as_json) {
        std::cout << cotk::codegree_report_json(h, report).dump(2) << "\n";
        return kExitSuccess;
    }
    std::cout << "k: " << h.uniformity() << "\n"
              << "n: " << h.vertex_count() << "\n"
              << "m: " << h.edge_count() << "\n"
              << "min codegree: " << report.min_codegree << " (argmin:";
    for (cotk::Vertex v : report.argmin)
        std::cout << " " << v;
    std::cout << ")\n"
              << "max codegree: " << report.max_codegree << "\n"
              << "histogram:\n";
    for (const auto& [value, count] : report.histogram)
        std::cout << "  " << value << ": " << count << "\n";
    return kExitSuccess;
}

struct EmbedArgs {
    std::string pattern_path;
    std::string host_path;
    bool homomorphism = false;
    long long budget_nodes = -1;
    double budget_secs = -1.0;
    bool json = false;
};

int run_embed(const EmbedArgs& args) {
    const cotk::Hypergraph pattern =
        cotk::parse_edge_list(read_file(args.pattern_path));
    const cotk::Hypergraph host =
        cotk::parse_edge_list(read_file(args.host_path));
    cotk::SearchBudget budget;
    if (args.budget_nodes >= 0)
        budget.node_limit = args.budget_nodes;
    if (args.budget_secs >= 0)
        budget.time_limit_seconds = args.budget_secs;

    const cotk::SearchOutcome outcome =
        args.homomorphism ? cotk::find_homomorphism(pattern, host, budget)
                          : cotk::find_embedding(pattern, host, budget);

    if (args.json) {
        nlohmann::json j;
        j["mode"] = args.homomorphism ? "homomorphism" : "embedding";
        j["nodes_explored"] = outcome.nodes_explored;
        switch (outcome.status) {
        case cotk::SearchStatus::Found:
            j["status"] = "found";
            j["witness"] = outcome.witness->assignment;
            break;
        case cotk::SearchStatus::NotFoundExhausted:
            j["status"] = "not_found_exhausted";
            break;
        case cotk::SearchStatus::BudgetExceeded:
            j["status"] = "budget_exceeded";
            break;
        }
        std::cout << j.dump(2) << "\n";
    } else {
        switch (outcome.status) {
        case cotk::SearchStatus::Found: {
            std::cout << "found:";
            for (std::size_t u = 0; u < outcome.witness->assignment.size(); ++u)
                std::cout << " " << u << "->" << outcome.witness->assignment[u];
            std::cout << "\n";
            break;
        }
        case cotk::SearchStatus::NotFoundExhausted:
            std::cout << "not found (search space exhausted)\n";
            break;
        case cotk::SearchStatus::BudgetExceeded:
            std::cout << "budget exceeded after " << outcome.nodes_explored
                      << " nodes\n";
            break;
        }
    }
    switch (outcome.status) {
    case cotk::SearchStatus::Found:
        return kExitSuccess;
    case cotk::SearchStatus::NotFoundExhausted:
        return kExitNotFound;
    case cotk::SearchStatus::BudgetExceeded:
        return kExitBudget;
    }
    return kExitUsage;
}

struct ExcoArgs {
    int k = 2;
    int n = 0;
    std::string pattern_path;
    long long budget_nodes = -1;
    double budget_secs = -1.0;
    bool symmetry = false;
    bool json = false;
};

int run_exco(const ExcoArgs& args) {
    const cotk::Hypergraph pattern =
        cotk::parse_edge_list(read_file(args.pattern_path));
    cotk::ExCoQuery query{args.n, args.k, pattern, cotk::SearchBudget{}};
    if (args.budget_nodes >= 0)
        query.budget.node_limit = args.budget_nodes;
    if (args.budget_secs >= 0)
        query.budget.time_limit_seconds = args.budget_secs;

    const cotk::ExCoResult result = cotk::ex_co_exact(query, args.symmetry);
    if (args.json) {
        nlohmann::json j;
        j["value"] = result.value;
        j["exact"] = result.exact;
        j["nodes_explored"] = result.nodes_explored;
        j["witness"] = nlohmann::json::array();
        for (const cotk::Edge& e : result.witness.edges())
            j["witness"].push_back(e);
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << result.value << "\n";
        if (!result.exact)
            std::cerr << "warning: budget exceeded, value is a certified "
                         "lower bound only\n";
    }
    return result.exact ? kExitSuccess : kExitBudget;
}

int run_verify(const std::string& suite, bool as_json) {
    if (suite != "paper-fixtures")
        throw cotk::ParamError("unknown suite '" + suite + "'");
    const auto results = cotk::fixtures::run_paper_fixtures();
    if (as_json) {
        nlohmann::json j = nlohmann::json::array();
        for (const auto& r : results) {
            nlohmann::json item;
            item["id"] = r.id;
            item["name"] = r.name;
            item["pass"] = r.pass;
            item["detail"] = r.detail;
            j.push_back(item);
        }
        std::cout << j.dump(2) << "\n";
    } else {
        cotk::fixtures::print_results(results, std::cout);
    }
    return cotk::fixtures::all_passed(results) ? kExitSuccess : kExitNotFound;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"uniform hypergraph constructions, codegree analytics, "
                 "containment search, and exact extremal numbers"};
    app.require_subcommand(1);

    ConstructArgs construct_args;
    CLI::App* construct =
        app.add_subcommand("construct", "generate a hypergraph family");
    construct
        ->add_option("--family", construct_args.family, "zycle|fp|host|g")
        ->required();
    construct->add_option("--k", construct_args.k, "uniformity");
    construct->add_option("--ell", construct_args.ell, "zycle length");
    construct->add_option("--p", construct_args.p, "prime modulus");
    construct->add_option("--n", construct_args.n, "vertex count");
    construct->add_option("--r", construct_args.r, "layer count / level");
    construct->add_option("--eta", construct_args.eta,
                          "exact rational a/b (floats rejected)");
    construct->add_option("--max-vertices", construct_args.max_vertices,
                          "vertex budget for the recursive pattern");
    construct->add_option("--out", construct_args.out,
                          "output path (stdout when omitted)");

    std::string analyze_in;
    bool analyze_json = false;
    CLI::App* analyze =
        app.add_subcommand("analyze", "codegree report for an edge list");
    analyze->add_option("--in", analyze_in, "input edge list")->required();
    analyze->add_flag("--json", analyze_json, "emit JSON");

    EmbedArgs embed_args;
    CLI::App* embed = app.add_subcommand(
        "embed", "search for the pattern inside the host");
    embed->add_option("--pattern", embed_args.pattern_path, "pattern edge list")
        ->required();
    embed->add_option("--host", embed_args.host_path, "host edge list")
        ->required();
    embed->add_flag("--hom", embed_args.homomorphism,
                    "search for a homomorphism instead of an embedding");
    embed->add_option("--budget-nodes", embed_args.budget_nodes,
                      "search node limit");
    embed->add_option("--budget-secs", embed_args.budget_secs,
                      "search time limit in seconds");
    embed->add_flag("--json", embed_args.json, "emit JSON");

    ExcoArgs exco_args;
    CLI::App* exco = app.add_subcommand(
        "exco", "exact codegree extremal number at a host size");
    exco->add_option("--k", exco_args.k, "uniformity")->required();
    exco->add_option("--n", exco_args.n, "host vertex count")->required();
    exco->add_option("--pattern", exco_args.pattern_path, "pattern edge list")
        ->required();
    exco->add_option("--budget-nodes", exco_args.budget_nodes,
                     "search node limit per decision");
    exco->add_option("--budget-secs", exco_args.budget_secs,
                     "search time limit per decision, seconds");
    exco->add_flag("--symmetry", exco_args.symmetry,
                   "enable prefix symmetry breaking");
    exco->add_flag("--json", exco_args.json, "emit JSON");

    std::string verify_suite;
    bool verify_json = false;
    CLI::App* verify =
        app.add_subcommand("verify", "run a verification suite");
    verify->add_option("--suite", verify_suite, "suite name (paper-fixtures)")
        ->required();
    verify->add_flag("--json", verify_json, "emit JSON");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n\n" << app.help() << std::flush;
        return kExitUsage;
    }

    try {
        if (construct->parsed())
            return run_construct(construct_args);
        if (analyze->parsed())
            return run_analyze(analyze_in, analyze_json);
        if (embed->parsed())
            return run_embed(embed_args);
        if (exco->parsed())
            return run_exco(exco_args);
        if (verify->parsed())
            return run_verify(verify_suite, verify_json);
    } catch (const cotk::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
