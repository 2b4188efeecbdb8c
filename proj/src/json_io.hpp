#pragma once

#include <json.hpp>

#include "census.hpp"
#include "charclasses.hpp"
#include "split_builder.hpp"

namespace higgslab {

// All serialization uses ordered_json so report bytes are deterministic.
using Json = nlohmann::ordered_json;

Json field_to_json(Field f);
Field field_from_json(const Json& j);

// Scalars are decimal strings ("12", "-3/4"); polynomials are ascending
// coefficient arrays; matrices are row-major nested arrays.
Json poly_to_json(const Poly& p);
Poly poly_from_json(Field f, const Json& j);
Json mat_poly_to_json(const MatPoly& m);
MatPoly mat_poly_from_json(Field f, const Json& j);
Json mat_scalar_to_json(const MatScalar& m);
MatScalar mat_scalar_from_json(Field f, const Json& j);
Json bipoly_to_json(const BiPoly& b);

Json sc_to_json(const SpectralCoeffs& sc);
SpectralCoeffs sc_from_json(Field f, const Json& j);

Json chart_to_json(const OrthHiggsChart& c);
OrthHiggsChart chart_from_json(Field f, const Json& j);

Json quadratic_bundle_to_json(const QuadraticBundle& v0);
QuadraticBundle quadratic_bundle_from_json(Field f, const Json& j);

// {"D": [roots], "i": [[entries], ...]} with D in canonical order.
Json extension_to_json(const ExtensionData& e);
ExtensionData extension_from_json(Field f, const Json& j);

// Signs keyed by the branch point rendering: {"0": "+1", "1": "-1", ...}.
Json split_signs_to_json(const SplitSpec& spec);
std::vector<int> split_signs_from_json(const SpectralCoeffs& sc, const Json& j);

Json bundle_to_json(const EquivariantBundle& m);
EquivariantBundle bundle_from_json(Field f, const Json& j);

Json checks_to_json(const CheckList& cl);

Json z2vec_to_json(const Z2Vec& v);
Z2Vec z2vec_from_json(const Json& j);

Json census_rows_to_json(const std::vector<CensusRow>& rows);
std::string census_rows_to_csv(const std::vector<CensusRow>& rows);

// Schema helpers shared by the engine: throw bad_input with a field name
// instead of leaking parse exceptions.
const Json& require_key(const Json& j, const char* key);
long long require_int(const Json& j, const char* key);

}  // namespace higgslab
