#include "json_io.hpp"

#include <stdexcept>

#include "snf.hpp"

namespace pontra::json_io {

namespace {

[[noreturn]] void bad(const std::string& msg) { throw std::invalid_argument(msg); }

i64 to_i64(const json& j, const char* what) {
    if (!j.is_number_integer()) bad(std::string(what) + " must be an integer");
    return j.get<i64>();
}

}  // namespace

ComplexPtr complex_from_json(const json& j) {
    if (!j.is_object()) bad("complex must be an object");
    if (j.contains("builtin")) {
        if (!j["builtin"].is_string()) bad("complex.builtin must be a string");
        return topology::builtin_complex(j["builtin"].get<std::string>());
    }
    if (!j.contains("vertices") || !j.contains("simplices"))
        bad("complex needs either builtin or vertices+simplices");
    std::vector<i64> verts;
    for (const json& v : j["vertices"]) verts.push_back(to_i64(v, "vertex"));
    std::vector<std::vector<i64>> simps;
    for (const json& s : j["simplices"]) {
        std::vector<i64> one;
        for (const json& v : s) one.push_back(to_i64(v, "simplex vertex"));
        simps.push_back(std::move(one));
    }
    return topology::SimplicialComplex::make(std::move(verts), simps);
}

std::vector<std::complex<double>> cplx_vector_from_json(const json& j) {
    if (!j.is_array()) bad("values must be an array of [re, im] pairs");
    std::vector<std::complex<double>> out;
    out.reserve(j.size());
    for (const json& e : j) {
        if (!e.is_array() || e.size() != 2 || !e[0].is_number() || !e[1].is_number())
            bad("each value must be an [re, im] number pair");
        out.emplace_back(e[0].get<double>(), e[1].get<double>());
    }
    return out;
}

json cplx_vector_to_json(const std::vector<std::complex<double>>& v) {
    json out = json::array();
    for (const auto& z : v) out.push_back({z.real(), z.imag()});
    return out;
}

Cochain cochain_from_json(const json& values, const ComplexPtr& x, int degree,
                          const FiniteAbelianGroup& coeff) {
    if (!values.is_array()) bad("cochain values must be an array");
    Cochain c = topology::zero_cochain(x, degree, coeff);
    if (values.size() != c.values.size())
        bad("cochain has " + std::to_string(values.size()) + " entries, expected " +
            std::to_string(c.values.size()));
    const auto& fac = coeff.factors();
    for (std::size_t i = 0; i < values.size(); ++i) {
        const json& row = values[i];
        if (!row.is_array() || row.size() != fac.size())
            bad("cochain entry " + std::to_string(i) + " must list " +
                std::to_string(fac.size()) + " coordinates");
        for (std::size_t k = 0; k < fac.size(); ++k)
            c.values[i][k] = snf::mod_pos(to_i64(row[k], "cochain coordinate"), fac[k]);
    }
    return c;
}

json cochain_values_to_json(const Cochain& c) {
    json out = json::array();
    for (const auto& row : c.values) out.push_back(row);
    return out;
}

json torsor_to_json(const bundles::TorsorReport& r) {
    json out;
    out["class_count"] = r.class_count;
    out["acting_factors"] = r.acting_factors;
    out["orbit_reps"] = r.orbit_reps;
    json wit = json::array();
    for (const Cochain& w : r.witnesses) wit.push_back(cochain_values_to_json(w));
    out["witnesses"] = wit;
    if (!r.n_factors.empty() || !r.m_factors.empty()) {
        out["n_factors"] = r.n_factors;
        out["m_factors"] = r.m_factors;
        out["quotient_factors"] = r.quotient_factors;
    }
    return out;
}

json theorem_to_json(const cstar::TheoremReport& r) {
    json dev;
    dev["inner_product"] = r.inner_product;
    dev["convolution"] = r.convolution;
    dev["action"] = r.action;
    dev["equivariance"] = r.equivariance;
    dev["positivity"] = r.positivity;
    dev["star_compat"] = r.star_compat;
    dev["cstar_identity"] = r.cstar_identity;
    dev["cauchy_schwarz"] = r.cauchy_schwarz;
    json out;
    out["trials"] = r.trials;
    out["seed"] = r.seed;
    out["deviations"] = dev;
    out["max_deviation"] = r.max_deviation();
    return out;
}

}  // namespace pontra::json_io
