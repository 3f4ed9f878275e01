#include "commands.hpp"

#include <json.hpp>

#include <cstdint>
#include <ctime>
#include <stdexcept>
#include <string>
#include <vector>

#include "bundles.hpp"
#include "cstar.hpp"
#include "fourier.hpp"
#include "json_io.hpp"
#include "topology.hpp"

#ifndef PONTRA_VERSION
#define PONTRA_VERSION "0.0.0"
#endif

namespace pontra::commands {

namespace {

using abelian::FiniteAbelianGroup;
using abelian::i64;
using json_io::json;
using topology::Cochain;
using topology::ComplexPtr;

[[noreturn]] void bad(const std::string& msg) { throw std::invalid_argument(msg); }

const json& field(const json& j, const char* name) {
    auto it = j.find(name);
    if (it == j.end()) bad(std::string("missing field: ") + name);
    return *it;
}

FiniteAbelianGroup group_of(const json& req) {
    const json& f = field(req, "group");
    if (!f.is_array()) bad("group must be an array of cyclic factor orders");
    std::vector<i64> factors;
    for (const json& v : f) {
        if (!v.is_number_integer()) bad("group factors must be integers");
        factors.push_back(v.get<i64>());
    }
    return FiniteAbelianGroup(factors);
}

i64 order_n_of(const json& req, const FiniteAbelianGroup& g) {
    i64 n = g.exponent();
    if (req.contains("order_n")) {
        if (!req["order_n"].is_number_integer()) bad("order_n must be an integer");
        n = req["order_n"].get<i64>();
    }
    if (n < 1 || (g.exponent() > 0 && n % g.exponent() != 0))
        bad("order_n must be a positive multiple of the group exponent");
    return n;
}

std::string fnv1a64_hex(const std::string& data) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : data) {
        h ^= c;
        h *= 1099511628211ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

std::string utc_now() {
    std::time_t t = std::time(nullptr);
    std::tm tm{};
    gmtime_r(&t, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

json run_fourier(const json& req) {
    FiniteAbelianGroup g = group_of(req);
    std::string op = req.contains("op") ? field(req, "op").get<std::string>() : "ft";
    auto values = json_io::cplx_vector_from_json(field(req, "values"));
    if (values.empty()) bad("values must be non-empty");
    fourier::GroupFunction f(g, values);

    json result;
    if (op == "ft") {
        result["values"] = json_io::cplx_vector_to_json(fourier::ft(f).v);
    } else if (op == "ift") {
        result["values"] = json_io::cplx_vector_to_json(fourier::ift(f).v);
    } else if (op == "roundtrip") {
        auto back = fourier::ift(fourier::ft(f));
        result["max_deviation"] = fourier::max_abs_diff(back, f);
    } else if (op == "convolve") {
        fourier::GroupFunction h(g, json_io::cplx_vector_from_json(field(req, "values2")));
        result["values"] = json_io::cplx_vector_to_json(fourier::convolve(f, h).v);
    } else {
        bad("unknown fourier op: " + op);
    }
    return result;
}

json run_cohomology(const json& req) {
    ComplexPtr x = json_io::complex_from_json(field(req, "complex"));
    FiniteAbelianGroup g = group_of(req);
    int lo = 0, hi = x->dim();
    if (req.contains("degree")) {
        lo = hi = field(req, "degree").get<int>();
        if (lo < 0) bad("degree must be non-negative");
    }
    json degrees = json::array();
    for (int k = lo; k <= hi; ++k) {
        topology::CohomologyGroup h(x, k, g);
        json one;
        one["degree"] = k;
        one["factors"] = h.factors();
        one["class_count"] = h.class_count();
        degrees.push_back(one);
    }
    json result;
    result["degrees"] = degrees;
    return result;
}

Cochain cochain_field(const json& req, const char* name, const ComplexPtr& x, int degree,
                      const FiniteAbelianGroup& coeff) {
    return json_io::cochain_from_json(field(req, name), x, degree, coeff);
}

json run_cup(const json& req) {
    ComplexPtr x = json_io::complex_from_json(field(req, "complex"));
    FiniteAbelianGroup g = group_of(req);
    i64 n = order_n_of(req, g);
    const json& left = field(req, "left");
    const json& right = field(req, "right");
    int dl = field(left, "degree").get<int>();
    int dr = field(right, "degree").get<int>();
    Cochain a = json_io::cochain_from_json(field(left, "values"), x, dl, g);
    Cochain b = json_io::cochain_from_json(field(right, "values"), x, dr, g);

    Cochain prod = [&] {
        if (dl == 1 && dr == 1) return topology::cup11(a, b, n);
        if (dl == 0 && dr == 1) return topology::cup01(a, b, n);
        if (dl == 1 && dr == 0) return topology::cup10(a, b, n);
        bad("cup supports bidegrees (1,1), (0,1), (1,0)");
    }();

    json result;
    result["degree"] = prod.degree;
    result["values"] = json_io::cochain_values_to_json(prod);
    bool cocycle = topology::is_cocycle(prod);
    result["is_cocycle"] = cocycle;
    if (cocycle) {
        topology::CohomologyGroup h(x, prod.degree, prod.coeff);
        result["class"] = h.reduce(prod);
        result["class_factors"] = h.factors();
    }
    return result;
}

struct TripleInputs {
    ComplexPtr x;
    FiniteAbelianGroup g;
    i64 n;
    Cochain gc;
    Cochain chi_hat;
};

TripleInputs triple_inputs(const json& req) {
    TripleInputs t{nullptr, FiniteAbelianGroup(std::vector<i64>{}), 0, {}, {}};
    t.x = json_io::complex_from_json(field(req, "complex"));
    t.g = group_of(req);
    t.n = order_n_of(req, t.g);
    FiniteAbelianGroup dual(t.g.factors());
    t.gc = req.contains("g") ? cochain_field(req, "g", t.x, 1, t.g)
                             : topology::zero_cochain(t.x, 1, t.g);
    t.chi_hat = req.contains("chi_hat") ? cochain_field(req, "chi_hat", t.x, 1, dual)
                                        : topology::zero_cochain(t.x, 1, dual);
    return t;
}

json run_triple_check(const json& req) {
    TripleInputs in = triple_inputs(req);
    auto d = bundles::triple_exists(in.gc, in.chi_hat, in.n);
    json result;
    result["decision"] = d.yes ? "yes" : "no";
    result["obstruction"] = d.obstruction;
    return result;
}

json run_triple_enumerate(const json& req) {
    TripleInputs in = triple_inputs(req);
    auto d = bundles::triple_exists(in.gc, in.chi_hat, in.n);
    if (!d.yes) {
        // nothing to enumerate; report the obstruction instead of failing
        json result;
        result["decision"] = "no";
        result["obstruction"] = d.obstruction;
        result["class_count"] = 0;
        return result;
    }
    json result = json_io::torsor_to_json(bundles::enumerate_triples(in.gc, in.chi_hat, in.n));
    result["decision"] = "yes";
    return result;
}

json run_triple_classify(const json& req) {
    TripleInputs in = triple_inputs(req);
    FiniteAbelianGroup mu({in.n});
    Cochain s = req.contains("s") ? cochain_field(req, "s", in.x, 1, mu)
                                  : topology::zero_cochain(in.x, 1, mu);
    auto t = bundles::make_triple(in.gc, in.chi_hat, s, in.n);
    return json_io::torsor_to_json(bundles::full_extension_classes(t));
}

json run_verify(const json& req, std::uint64_t seed) {
    TripleInputs in = triple_inputs(req);
    FiniteAbelianGroup mu({in.n});
    Cochain s = req.contains("s") ? cochain_field(req, "s", in.x, 1, mu)
                                  : topology::zero_cochain(in.x, 1, mu);
    auto t = bundles::make_triple(in.gc, in.chi_hat, s, in.n);
    i64 trials = req.contains("trials") ? field(req, "trials").get<i64>() : 25;
    auto rep = cstar::verify_main_theorem(t, trials, seed);
    return json_io::theorem_to_json(rep);
}

}  // namespace

std::string version() { return PONTRA_VERSION; }

JobOutcome run_job(const std::string& request_json) {
    json req = json::parse(request_json, nullptr, false);
    if (req.is_discarded()) return {kIoError, "", "malformed JSON request"};

    try {
        if (!req.is_object()) bad("request must be a JSON object");
        std::string command = field(req, "command").get<std::string>();
        std::uint64_t seed = 0;
        bool seeded = false;
        if (req.contains("seed")) {
            if (!req["seed"].is_number_unsigned() && !req["seed"].is_number_integer())
                bad("seed must be an integer");
            seed = req["seed"].get<std::uint64_t>();
            seeded = true;
        }

        json result;
        if (command == "fourier") {
            result = run_fourier(req);
        } else if (command == "cohomology") {
            result = run_cohomology(req);
        } else if (command == "cup") {
            result = run_cup(req);
        } else if (command == "triple_check") {
            result = run_triple_check(req);
        } else if (command == "triple_enumerate") {
            result = run_triple_enumerate(req);
        } else if (command == "triple_classify") {
            result = run_triple_classify(req);
        } else if (command == "verify") {
            if (!seeded) bad("verify requires a seed");
            result = run_verify(req, seed);
        } else {
            bad("unknown command: " + command);
        }

        json report;
        report["command"] = command;
        report["version"] = version();
        report["inputs_hash"] = fnv1a64_hex(req.dump());
        report["generated_at"] = utc_now();
        if (seeded)
            report["seed"] = seed;
        else
            report["seed"] = nullptr;
        report["result"] = result;
        return {kOk, report.dump(2) + "\n", ""};
    } catch (const std::invalid_argument& e) {
        return {kValidationError, "", e.what()};
    } catch (const json::exception& e) {
        return {kValidationError, "", e.what()};
    } catch (const std::exception& e) {
        return {kInternalError, "", e.what()};
    }
}

}  // namespace pontra::commands
