// Drives the installed command-line binary end to end: exit codes, report
// files, schema conformance, determinism.  Paths arrive via compile
// definitions so the test works from any build directory.
#include <doctest.h>

#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "schema_subset.hpp"
#include "topology.hpp"

using nlohmann::json;

namespace {

const std::string kBin = PONTRA_CLI_BIN;
const std::string kRoot = PONTRA_REPO_ROOT;

struct RunResult {
    int exit_code;
    std::string stdout_text;
};

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void spit(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    out << text;
}

RunResult run_cli(const std::string& args) {
    std::string out_file = "cli_stdout.tmp";
    std::string cmd = kBin + " " + args + " > " + out_file + " 2> cli_stderr.tmp";
    int rc = std::system(cmd.c_str());
    RunResult r{WEXITSTATUS(rc), slurp(out_file)};
    std::remove(out_file.c_str());
    std::remove("cli_stderr.tmp");
    return r;
}

json load_schema() { return json::parse(slurp(kRoot + "/schemas/report.schema.json")); }

void check_schema(const json& report) {
    static const json schema = load_schema();
    auto err = schema_subset::validate_report(schema, report);
    INFO("schema violation: " << (err ? *err : ""));
    CHECK(!err.has_value());
}

std::string generator_file(const std::string& path) {
    auto x = pontra::topology::builtin_complex("rp2");
    pontra::topology::CohomologyGroup h1(x, 1, pontra::abelian::FiniteAbelianGroup({2}));
    auto gen = h1.rep_combination({1});
    json values = json::array();
    for (const auto& row : gen.values) values.push_back(row);
    spit(path, json({{"g", values}, {"chi_hat", values}}).dump());
    return path;
}

}  // namespace

TEST_CASE("transform jobs run end to end and honor --out") {
    spit("delta.json", R"({"values": [[1,0],[0,0]]})");
    auto r = run_cli("fourier --group 2 --input delta.json");
    CHECK(r.exit_code == 0);
    json rep = json::parse(r.stdout_text);
    CHECK(rep["result"]["values"] == json({{1.0, 0.0}, {1.0, 0.0}}));
    check_schema(rep);

    auto r2 = run_cli("fourier --group 2 --input delta.json --out report.tmp");
    CHECK(r2.exit_code == 0);
    CHECK(r2.stdout_text.empty());
    check_schema(json::parse(slurp("report.tmp")));
    std::remove("report.tmp");
    std::remove("delta.json");
}

TEST_CASE("exit codes separate I/O, validation, and usage failures") {
    CHECK(run_cli("fourier --group 2 --input no_such_file.json").exit_code == 2);

    spit("empty.json", R"({"values": []})");
    CHECK(run_cli("fourier --group 2 --input empty.json").exit_code == 3);
    std::remove("empty.json");

    spit("broken.json", "{ nope");
    CHECK(run_cli("fourier --group 2 --input broken.json").exit_code == 2);
    std::remove("broken.json");

    spit("delta.json", R"({"values": [[1,0],[0,0]]})");
    CHECK(run_cli("fourier --group 2x --input delta.json").exit_code == 3);
    std::remove("delta.json");

    CHECK(run_cli("cohomology --complex builtin:nope --group 2").exit_code == 3);
    CHECK(run_cli("frobnicate").exit_code == 3);
    CHECK(run_cli("--help").exit_code == 0);
}

TEST_CASE("complex files from the data directory match the builtins") {
    for (const std::string name : {"point", "circle", "torus7", "rp2", "s2"}) {
        auto from_file =
            run_cli("cohomology --complex " + kRoot + "/data/complexes/" + name +
                    ".json --group 2");
        auto from_builtin = run_cli("cohomology --complex builtin:" + name + " --group 2");
        CHECK(from_file.exit_code == 0);
        json a = json::parse(from_file.stdout_text);
        json b = json::parse(from_builtin.stdout_text);
        CHECK(a["result"] == b["result"]);
        check_schema(a);
    }
}

TEST_CASE("pair and classification subcommands emit schema-conforming reports") {
    generator_file("pair.json");

    auto check = run_cli(
        "triple check --complex builtin:rp2 --group 2 --order-n 2 --input pair.json");
    CHECK(check.exit_code == 0);
    json crep = json::parse(check.stdout_text);
    CHECK(crep["result"]["decision"] == "no");
    check_schema(crep);

    auto enumerate =
        run_cli("triple enumerate --complex builtin:circle --group 2 --order-n 2");
    CHECK(enumerate.exit_code == 0);
    json erep = json::parse(enumerate.stdout_text);
    CHECK(erep["result"]["class_count"] == 2);
    check_schema(erep);

    auto classify =
        run_cli("triple classify --complex builtin:circle --group 2 --order-n 2");
    CHECK(classify.exit_code == 0);
    json frep = json::parse(classify.stdout_text);
    CHECK(frep["result"]["class_count"] == 1);
    check_schema(frep);

    std::remove("pair.json");
}

TEST_CASE("cup subcommand reports the class of the product") {
    auto x = pontra::topology::builtin_complex("rp2");
    pontra::topology::CohomologyGroup h1(x, 1, pontra::abelian::FiniteAbelianGroup({2}));
    json values = json::array();
    for (const auto& row : h1.rep_combination({1}).values) values.push_back(row);
    spit("cup_in.json", json({{"left", {{"degree", 1}, {"values", values}}},
                              {"right", {{"degree", 1}, {"values", values}}}})
                            .dump());
    auto r = run_cli("cup --complex builtin:rp2 --group 2 --order-n 2 --input cup_in.json");
    CHECK(r.exit_code == 0);
    json rep = json::parse(r.stdout_text);
    CHECK(rep["result"]["is_cocycle"] == true);
    CHECK(rep["result"]["class"] == json({1}));
    check_schema(rep);
    std::remove("cup_in.json");
}

TEST_CASE("repeating a seeded job reproduces the report except its timestamp") {
    std::string args =
        "verify --complex builtin:circle --group 2 --order-n 2 --seed 42 --trials 15";
    auto r1 = run_cli(args);
    auto r2 = run_cli(args);
    REQUIRE(r1.exit_code == 0);
    REQUIRE(r2.exit_code == 0);
    json a = json::parse(r1.stdout_text);
    json b = json::parse(r2.stdout_text);
    check_schema(a);
    CHECK(a["result"]["max_deviation"].get<double>() < 1e-10);
    a.erase("generated_at");
    b.erase("generated_at");
    CHECK(a == b);
}
