#pragma once

#include <json.hpp>

#include "fanomut/delpezzo.hpp"
#include "fanomut/laurent.hpp"
#include "fanomut/mutation.hpp"
#include "fanomut/polytope.hpp"

// Serialization of every value the command line speaks. All numbers are
// exact: integers become JSON numbers when they fit in 64 bits and decimal
// strings otherwise; rationals are always strings. Key order is fixed by
// construction, so equal values serialize to equal bytes.

namespace fanomut {

using Json = nlohmann::ordered_json;

Json int_to_json(const Int& v);
Int int_from_json(const Json& j);

std::string rat_to_string(const Rat& v);  // "p" or "p/q"
Rat rat_from_json(const Json& j);         // accepts numbers and strings

Json to_json(const IVec& v);
IVec ivec_from_json(const Json& j);

// {"dim": d, "vertices": [[...], ...]}; rational coordinates as strings.
Json to_json(const LatticePolytope& P);
Json to_json(const RationalPolytope& P);
LatticePolytope lattice_polytope_from_json(const Json& j);
RationalPolytope rational_polytope_from_json(const Json& j);

// {"dim": d, "terms": [{"exp": [...], "coeff": "..."}]}; coefficients are
// always strings.
Json to_json(const LaurentPolynomial& f);
LaurentPolynomial laurent_from_json(const Json& j);

// {"u": [...], "factor": {polytope}} and {"u": [...], "h": {polynomial}}.
Json to_json(const CombinatorialMutationData& mu);
Json to_json(const AlgebraicMutationData& mu);
bool holds_combinatorial_data(const Json& j);  // keyed on "factor" vs "h"
CombinatorialMutationData combinatorial_data_from_json(const Json& j);
AlgebraicMutationData algebraic_data_from_json(const Json& j);

Json to_json(const EdgeDecomposition& dec);

// Outcomes embed their certificates; failing outcomes carry the height.
Json to_json(const CombinatorialOutcome& out);
Json to_json(const AlgebraicOutcome& out);

std::string hex_encode(const std::string& bytes);
std::string hex_decode(const std::string& hex);

}  // namespace fanomut
