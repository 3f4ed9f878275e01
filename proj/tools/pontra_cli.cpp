// Command-line front end.  All computation happens behind the C API; this
// file only assembles JSON requests from flags and files and routes the
// report to stdout or --out.
#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "pontra/pontra.h"

namespace {

using nlohmann::json;

constexpr int kIoError = PONTRA_ERR_IO;
constexpr int kValidationError = PONTRA_ERR_VALIDATION;

struct CommonOpts {
    std::string group;
    std::string complex_spec;
    std::string input_path;
    std::string out_path;
    std::int64_t order_n = 0;
    std::uint64_t seed = 0;
    bool has_seed = false;
    std::int64_t trials = 0;
    bool has_trials = false;
};

int fail(int code, const std::string& msg) {
    std::cerr << "error: " << msg << "\n";
    return code;
}

std::optional<std::string> read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) return std::nullopt;
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

// "2,3" -> [2,3]; returns nullopt on junk
std::optional<std::vector<std::int64_t>> parse_group(const std::string& s) {
    std::vector<std::int64_t> out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        try {
            std::size_t used = 0;
            long long v = std::stoll(tok, &used);
            if (used != tok.size()) return std::nullopt;
            out.push_back(v);
        } catch (...) {
            return std::nullopt;
        }
    }
    if (out.empty()) return std::nullopt;
    return out;
}

// 2 on unreadable file or unparseable JSON, 3 on structural problems
int fill_request(json& req, const CommonOpts& o) {
    if (!o.group.empty()) {
        auto g = parse_group(o.group);
        if (!g) return fail(kValidationError, "bad --group value: " + o.group);
        req["group"] = *g;
    }
    if (!o.complex_spec.empty()) {
        const std::string builtin_prefix = "builtin:";
        if (o.complex_spec.rfind(builtin_prefix, 0) == 0) {
            req["complex"] = {{"builtin", o.complex_spec.substr(builtin_prefix.size())}};
        } else {
            auto text = read_file(o.complex_spec);
            if (!text) return fail(kIoError, "cannot read complex file " + o.complex_spec);
            json parsed = json::parse(*text, nullptr, false);
            if (parsed.is_discarded())
                return fail(kIoError, "malformed JSON in " + o.complex_spec);
            req["complex"] = parsed;
        }
    }
    if (!o.input_path.empty()) {
        auto text = read_file(o.input_path);
        if (!text) return fail(kIoError, "cannot read input file " + o.input_path);
        json parsed = json::parse(*text, nullptr, false);
        if (parsed.is_discarded()) return fail(kIoError, "malformed JSON in " + o.input_path);
        if (!parsed.is_object())
            return fail(kValidationError, "input file must hold a JSON object");
        for (auto it = parsed.begin(); it != parsed.end(); ++it) req[it.key()] = it.value();
    }
    if (o.order_n > 0) req["order_n"] = o.order_n;
    if (o.has_seed) req["seed"] = o.seed;
    if (o.has_trials) req["trials"] = o.trials;
    return 0;
}

int run_and_emit(const json& req, const std::string& out_path) {
    pontra_session* session = pontra_open();
    if (!session) return fail(PONTRA_ERR_INTERNAL, "cannot create session");
    char* report = nullptr;
    int status = pontra_run_job(session, req.dump().c_str(), &report);
    if (status != PONTRA_OK) {
        std::string msg = pontra_last_error(session);
        pontra_close(session);
        return fail(status, msg);
    }
    std::string text = report;
    pontra_free(report);
    pontra_close(session);

    if (out_path.empty()) {
        std::cout << text;
        return 0;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out || !(out << text).flush())
        return fail(kIoError, "cannot write report to " + out_path);
    return 0;
}

void add_common(CLI::App* cmd, CommonOpts& o, bool needs_complex) {
    cmd->add_option("--group", o.group, "cyclic factor orders, e.g. 2,3")->required();
    auto* c = cmd->add_option("--complex", o.complex_spec,
                              "builtin:<name> or path to a complex JSON file");
    if (needs_complex) c->required();
    cmd->add_option("--order-n", o.order_n, "ambient root-of-unity order");
    cmd->add_option("--out", o.out_path, "report path (default: stdout)");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Finite Pontrjagin duality workbench"};
    app.require_subcommand(1);

    CommonOpts opt;
    std::string fourier_op = "ft";

    auto* fourier = app.add_subcommand("fourier", "transforms on a finite abelian group");
    add_common(fourier, opt, false);
    fourier->add_option("--op", fourier_op, "ft | ift | roundtrip | convolve");
    fourier->add_option("--input", opt.input_path, "JSON file with values")->required();

    auto* cohomology = app.add_subcommand("cohomology", "cohomology of a complex");
    add_common(cohomology, opt, true);
    std::int64_t degree = -1;
    cohomology->add_option("--degree", degree, "single degree (default: all)");

    auto* cup = app.add_subcommand("cup", "cup product of two cochains");
    add_common(cup, opt, true);
    cup->add_option("--input", opt.input_path, "JSON file with left/right cochains")
        ->required();

    auto* triple = app.add_subcommand("triple", "existence and classification");
    triple->require_subcommand(1);
    auto* tcheck = triple->add_subcommand("check", "does the pair extend to a triple");
    auto* tenum = triple->add_subcommand("enumerate", "triple classes over a pair");
    auto* tclassify = triple->add_subcommand("classify", "full-extension classes");
    for (CLI::App* sub : {tcheck, tenum, tclassify}) {
        add_common(sub, opt, true);
        sub->add_option("--input", opt.input_path, "JSON file with g/chi_hat/s values");
    }

    auto* verify = app.add_subcommand("verify", "randomized duality theorem check");
    add_common(verify, opt, true);
    verify->add_option("--input", opt.input_path, "JSON file with g/chi_hat/s values");
    verify->add_option("--seed", opt.seed, "random seed")->required();
    verify->add_option("--trials", opt.trials, "number of random trials");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kValidationError;
    }

    opt.has_seed = verify->count("--seed") > 0;
    opt.has_trials = verify->count("--trials") > 0;

    json req;
    if (fourier->parsed()) {
        req["command"] = "fourier";
        req["op"] = fourier_op;
    } else if (cohomology->parsed()) {
        req["command"] = "cohomology";
        if (cohomology->count("--degree")) req["degree"] = degree;
    } else if (cup->parsed()) {
        req["command"] = "cup";
    } else if (triple->parsed()) {
        if (tcheck->parsed()) req["command"] = "triple_check";
        if (tenum->parsed()) req["command"] = "triple_enumerate";
        if (tclassify->parsed()) req["command"] = "triple_classify";
    } else if (verify->parsed()) {
        req["command"] = "verify";
    }

    if (int rc = fill_request(req, opt); rc != 0) return rc;
    return run_and_emit(req, opt.out_path);
}
