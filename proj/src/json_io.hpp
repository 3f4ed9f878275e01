// JSON encodings for the core types: complexes, cochains, complex-valued
// vectors, and the report bodies produced by the batch commands.  All
// decoders throw std::invalid_argument on shape or range problems so the
// dispatch layer can map them to the validation exit code.
#pragma once

#include <json.hpp>

#include <complex>
#include <string>
#include <vector>

#include "bundles.hpp"
#include "cstar.hpp"
#include "topology.hpp"

namespace pontra::json_io {

using abelian::FiniteAbelianGroup;
using abelian::i64;
using nlohmann::json;
using topology::Cochain;
using topology::ComplexPtr;

// {"builtin": "rp2"} or {"vertices": [...], "simplices": [[...], ...]}
ComplexPtr complex_from_json(const json& j);

// Flat list of [re, im] pairs.
std::vector<std::complex<double>> cplx_vector_from_json(const json& j);
json cplx_vector_to_json(const std::vector<std::complex<double>>& v);

// values[simplex][factor], reduced into the coefficient group.
Cochain cochain_from_json(const json& values, const ComplexPtr& x, int degree,
                          const FiniteAbelianGroup& coeff);
json cochain_values_to_json(const Cochain& c);

json torsor_to_json(const bundles::TorsorReport& r);
json theorem_to_json(const cstar::TheoremReport& r);

}  // namespace pontra::json_io
