#include <doctest.h>

#include <json.hpp>

#include <random>
#include <string>

#include "commands.hpp"
#include "topology.hpp"

using namespace pontra;
using nlohmann::json;
using abelian::FiniteAbelianGroup;
using abelian::i64;
using topology::builtin_complex;
using topology::CohomologyGroup;

namespace {

json run_ok(const json& req) {
    auto out = commands::run_job(req.dump());
    INFO("error: " << out.error);
    REQUIRE(out.status == 0);
    return json::parse(out.report);
}

int run_status(const json& req) { return commands::run_job(req.dump()).status; }

json cochain_values(const topology::Cochain& c) {
    json out = json::array();
    for (const auto& row : c.values) out.push_back(row);
    return out;
}

json generator_values(const std::string& name, i64 mod, const std::vector<i64>& coords) {
    auto x = builtin_complex(name);
    CohomologyGroup h1(x, 1, FiniteAbelianGroup({mod}));
    return cochain_values(h1.rep_combination(coords));
}

}  // namespace

TEST_CASE("transform jobs compute, round-trip, and reject bad input") {
    json req = {{"command", "fourier"}, {"group", {2}}, {"values", {{1, 0}, {0, 0}}}};
    json rep = run_ok(req);
    CHECK(rep["result"]["values"] == json({{1.0, 0.0}, {1.0, 0.0}}));
    CHECK(rep["command"] == "fourier");
    CHECK(rep["seed"].is_null());
    CHECK(rep["version"].is_string());
    CHECK(rep["inputs_hash"].is_string());
    CHECK(rep["inputs_hash"].get<std::string>().size() == 16);

    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> amp(-1, 1);
    json values = json::array();
    for (int i = 0; i < 12; ++i) values.push_back({amp(rng), amp(rng)});
    json rt = {{"command", "fourier"},
               {"group", {2, 2, 3}},
               {"op", "roundtrip"},
               {"values", values}};
    CHECK(run_ok(rt)["result"]["max_deviation"].get<double>() < 1e-12);

    json conv = {{"command", "fourier"},
                 {"group", {4}},
                 {"op", "convolve"},
                 {"values", {{1, 0}, {0, 0}, {0, 0}, {0, 0}}},
                 {"values2", {{0, 0}, {2, 0}, {0, 0}, {0, 0}}}};
    CHECK(run_ok(conv)["result"]["values"] == json({{0.0, 0.0}, {2.0, 0.0}, {0.0, 0.0}, {0.0, 0.0}}));

    CHECK(run_status({{"command", "fourier"}, {"group", {2}}, {"values", json::array()}}) == 3);
    CHECK(run_status({{"command", "fourier"}, {"group", {2}}, {"values", {{1, 0}}}}) == 3);
    CHECK(run_status({{"command", "fourier"}, {"group", {2}}, {"op", "nope"},
                      {"values", {{1, 0}, {0, 0}}}}) == 3);
    CHECK(run_status({{"command", "fourier"}, {"group", {2}}}) == 3);
}

TEST_CASE("the dispatcher distinguishes malformed, invalid, and unknown requests") {
    CHECK(commands::run_job("{ not json").status == 2);
    CHECK(commands::run_job("[1,2,3]").status == 3);
    CHECK(run_status({{"command", "frobnicate"}}) == 3);
    CHECK(run_status(json::object()) == 3);
    auto out = commands::run_job("{ not json");
    CHECK(out.report.empty());
    CHECK(!out.error.empty());
}

TEST_CASE("cohomology jobs accept builtin and inline complexes") {
    json req = {{"command", "cohomology"}, {"complex", {{"builtin", "rp2"}}}, {"group", {2}}};
    json degrees = run_ok(req)["result"]["degrees"];
    REQUIRE(degrees.size() == 3);
    for (int k = 0; k < 3; ++k) {
        CHECK(degrees[k]["degree"] == k);
        CHECK(degrees[k]["factors"] == json({2}));
        CHECK(degrees[k]["class_count"] == 2);
    }

    json inline_circle = {{"vertices", {0, 1, 2}},
                          {"simplices", {{0, 1}, {0, 2}, {1, 2}}}};
    json req2 = {{"command", "cohomology"},
                 {"complex", inline_circle},
                 {"group", {3}},
                 {"degree", 1}};
    json d = run_ok(req2)["result"]["degrees"];
    REQUIRE(d.size() == 1);
    CHECK(d[0]["factors"] == json({3}));

    CHECK(run_status({{"command", "cohomology"}, {"complex", {{"builtin", "nope"}}},
                      {"group", {2}}}) == 3);
    CHECK(run_status({{"command", "cohomology"}, {"complex", {{"builtin", "rp2"}}},
                      {"group", {2}}, {"degree", -1}}) == 3);
}

TEST_CASE("cup jobs report the product cochain and its class") {
    json gen = generator_values("rp2", 2, {1});
    json req = {{"command", "cup"},
                {"complex", {{"builtin", "rp2"}}},
                {"group", {2}},
                {"order_n", 2},
                {"left", {{"degree", 1}, {"values", gen}}},
                {"right", {{"degree", 1}, {"values", gen}}}};
    json result = run_ok(req)["result"];
    CHECK(result["degree"] == 2);
    CHECK(result["is_cocycle"] == true);
    CHECK(result["class"] == json({1}));
    CHECK(result["class_factors"] == json({2}));

    // ambient order must be a multiple of the group exponent
    json bad = req;
    bad["order_n"] = 3;
    CHECK(run_status(bad) == 3);
}

TEST_CASE("pair extension jobs answer yes and no with obstruction coordinates") {
    json gen2 = generator_values("rp2", 2, {1});
    json check = {{"command", "triple_check"},
                  {"complex", {{"builtin", "rp2"}}},
                  {"group", {2}},
                  {"order_n", 2},
                  {"g", gen2},
                  {"chi_hat", gen2}};
    json result = run_ok(check)["result"];
    CHECK(result["decision"] == "no");
    CHECK(result["obstruction"] == json({1}));

    json circle_gen = generator_values("circle", 2, {1});
    json yes = {{"command", "triple_check"},
                {"complex", {{"builtin", "circle"}}},
                {"group", {2}},
                {"order_n", 2},
                {"g", circle_gen},
                {"chi_hat", circle_gen}};
    CHECK(run_ok(yes)["result"]["decision"] == "yes");
}

TEST_CASE("enumeration jobs count classes or surface the obstruction") {
    json enumerate = {{"command", "triple_enumerate"},
                      {"complex", {{"builtin", "circle"}}},
                      {"group", {2}},
                      {"order_n", 2}};
    json result = run_ok(enumerate)["result"];
    CHECK(result["decision"] == "yes");
    CHECK(result["class_count"] == 2);
    CHECK(result["orbit_reps"].size() == 2);
    CHECK(result["witnesses"].size() == 2);

    json gen2 = generator_values("rp2", 2, {1});
    json blocked = {{"command", "triple_enumerate"},
                    {"complex", {{"builtin", "rp2"}}},
                    {"group", {2}},
                    {"order_n", 2},
                    {"g", gen2},
                    {"chi_hat", gen2}};
    json r2 = run_ok(blocked)["result"];
    CHECK(r2["decision"] == "no");
    CHECK(r2["class_count"] == 0);
    CHECK(r2["obstruction"] == json({1}));
}

TEST_CASE("classification jobs report the acting quotient") {
    json gen2 = generator_values("circle", 2, {1});
    json req = {{"command", "triple_classify"},
                {"complex", {{"builtin", "circle"}}},
                {"group", {2}},
                {"order_n", 2},
                {"g", gen2},
                {"chi_hat", gen2}};
    json result = run_ok(req)["result"];
    CHECK(result["class_count"] == 1);
    CHECK(result["n_factors"] == json({2}));
    CHECK(result["m_factors"] == json({2}));
    CHECK(result["quotient_factors"] == json::array());
}

TEST_CASE("randomized verification jobs are seeded and reproducible") {
    json req = {{"command", "verify"},
                {"complex", {{"builtin", "point"}}},
                {"group", {2}},
                {"seed", 7},
                {"trials", 30}};
    json rep = run_ok(req);
    CHECK(rep["seed"] == 7);
    CHECK(rep["result"]["trials"] == 30);
    CHECK(rep["result"]["max_deviation"].get<double>() < 1e-12);
    for (auto& [key, val] : rep["result"]["deviations"].items())
        CHECK(val.get<double>() < 1e-12);

    json again = run_ok(req);
    rep.erase("generated_at");
    again.erase("generated_at");
    CHECK(rep == again);

    // whitespace does not change the input hash
    auto a = commands::run_job(req.dump());
    auto b = commands::run_job(req.dump(4));
    CHECK(json::parse(a.report)["inputs_hash"] == json::parse(b.report)["inputs_hash"]);

    json noseed = req;
    noseed.erase("seed");
    CHECK(run_status(noseed) == 3);
    json badtrials = req;
    badtrials["trials"] = 0;
    CHECK(run_status(badtrials) == 3);
}
