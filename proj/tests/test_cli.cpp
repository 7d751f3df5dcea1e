#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "cotk/constructions.hpp"
#include "cotk/io.hpp"

namespace fs = std::filesystem;

namespace {

struct CommandResult {
    int exit_code = -1;
    std::string output; // stdout only
};

// Runs the CLI binary, capturing stdout; stderr goes to a scratch file so
// usage errors stay quiet in test logs.
CommandResult run_cli(const std::string& args) {
    const fs::path out_path =
        fs::temp_directory_path() / "cotk_cli_test_stdout.txt";
    const fs::path err_path =
        fs::temp_directory_path() / "cotk_cli_test_stderr.txt";
    const std::string command = std::string(COTK_CLI_PATH) + " " + args + " >" +
                                out_path.string() + " 2>" + err_path.string();
    const int raw = std::system(command.c_str());
    CommandResult result;
    result.exit_code = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
    std::ifstream in(out_path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    result.output = buffer.str();
    return result;
}

fs::path scratch_file(const std::string& name, const std::string& content) {
    const fs::path path = fs::temp_directory_path() / name;
    std::ofstream out(path, std::ios::binary);
    out << content;
    return path;
}

} // namespace

TEST_CASE("construct then analyze") {
    const fs::path fp_path =
        fs::temp_directory_path() / "cotk_cli_test_fp.kg";
    const CommandResult construct = run_cli(
        "construct --family fp --k 3 --p 3 --n 9 --out " + fp_path.string());
    REQUIRE(construct.exit_code == 0);

    std::ifstream in(fp_path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    const cotk::Hypergraph parsed = cotk::parse_edge_list(buffer.str());
    REQUIRE(parsed == cotk::make_fp(3, 3, 9).first);

    const CommandResult analyze =
        run_cli("analyze --in " + fp_path.string() + " --json");
    REQUIRE(analyze.exit_code == 0);
    const nlohmann::json report = nlohmann::json::parse(analyze.output);
    REQUIRE(report["min_codegree"] == 1);
    REQUIRE(report["m"] == 38);
}

TEST_CASE("construct writes to stdout when --out is omitted") {
    const CommandResult result =
        run_cli("construct --family zycle --k 3 --ell 3");
    REQUIRE(result.exit_code == 0);
    REQUIRE(cotk::parse_edge_list(result.output) == cotk::make_zycle(3, 3));
}

TEST_CASE("construct covers the host and recursive families") {
    const CommandResult host = run_cli(
        "construct --family host --k 3 --r 2 --eta 1/5 --n 30 --p 3");
    REQUIRE(host.exit_code == 0);
    REQUIRE(cotk::parse_edge_list(host.output) ==
            cotk::make_host(3, 2, cotk::Rational(1, 5), 30, 3).first);

    const CommandResult g = run_cli("construct --family g --k 3 --ell 3 --r 2");
    REQUIRE(g.exit_code == 0);
    const cotk::Hypergraph parsed = cotk::parse_edge_list(g.output);
    REQUIRE(parsed.vertex_count() == 48);
    REQUIRE(parsed.edge_count() == 120);
}

TEST_CASE("analyze text output") {
    const fs::path path = scratch_file(
        "cotk_cli_test_fp9.kg",
        cotk::emit_edge_list(cotk::make_fp(3, 3, 9).first));
    const CommandResult r = run_cli("analyze --in " + path.string());
    REQUIRE(r.exit_code == 0);
    REQUIRE(r.output.find("min codegree: 1") != std::string::npos);
    REQUIRE(r.output.find("m: 38") != std::string::npos);
    REQUIRE(r.output.find("histogram:") != std::string::npos);
}

TEST_CASE("embed exit codes") {
    const fs::path z_path = scratch_file(
        "cotk_cli_test_z33.kg", cotk::emit_edge_list(cotk::make_zycle(3, 3)));
    const fs::path fp18_path = scratch_file(
        "cotk_cli_test_fp18.kg",
        cotk::emit_edge_list(cotk::make_fp(3, 3, 18).first));
    const fs::path empty_path = scratch_file(
        "cotk_cli_test_empty.kg",
        cotk::emit_edge_list(cotk::Hypergraph::edgeless(3, 18)));

    SECTION("found -> 0 with a printed witness") {
        const CommandResult r = run_cli("embed --pattern " + z_path.string() +
                                        " --host " + fp18_path.string());
        REQUIRE(r.exit_code == 0);
        REQUIRE(r.output.find("found:") == 0);
        REQUIRE(r.output.find("0->") != std::string::npos);
    }

    SECTION("exhausted -> 1") {
        const CommandResult r = run_cli("embed --pattern " + z_path.string() +
                                        " --host " + empty_path.string());
        REQUIRE(r.exit_code == 1);
    }

    SECTION("budget exceeded -> 3") {
        const CommandResult r =
            run_cli("embed --pattern " + z_path.string() + " --host " +
                    fp18_path.string() + " --budget-nodes 2");
        REQUIRE(r.exit_code == 3);
    }

    SECTION("homomorphism mode") {
        const fs::path z6_path = scratch_file(
            "cotk_cli_test_z36.kg",
            cotk::emit_edge_list(cotk::make_zycle(3, 6)));
        const CommandResult r = run_cli("embed --pattern " + z6_path.string() +
                                        " --host " + z_path.string() +
                                        " --hom --json");
        REQUIRE(r.exit_code == 0);
        const nlohmann::json j = nlohmann::json::parse(r.output);
        REQUIRE(j["status"] == "found");
        REQUIRE(j["witness"].size() == 12);
    }
}

TEST_CASE("exco prints the value") {
    const fs::path k3_path = scratch_file(
        "cotk_cli_test_k3.kg",
        cotk::emit_edge_list(cotk::Hypergraph::complete(2, 3)));
    const CommandResult r =
        run_cli("exco --k 2 --n 5 --pattern " + k3_path.string());
    REQUIRE(r.exit_code == 0);
    REQUIRE(r.output == "2\n");
}

TEST_CASE("usage errors exit with 2") {
    REQUIRE(run_cli("embed --pattern missing.kg").exit_code == 2);
    REQUIRE(run_cli("nonsense").exit_code == 2);
    REQUIRE(run_cli("construct --family zycle --k 3 --ell 2").exit_code == 2);
    REQUIRE(run_cli("construct --family fp --k 3 --p 4 --n 8").exit_code == 2);
    REQUIRE(run_cli("verify --suite unknown").exit_code == 2);
    // eta must be an exact rational
    REQUIRE(
        run_cli("construct --family host --k 3 --r 2 --eta 0.2 --n 30")
            .exit_code == 2);
}
