#include "fanomut/jsonio.hpp"

#include <cstdint>
#include <limits>
#include <stdexcept>

namespace fanomut {

namespace {

const Int kInt64Min(std::numeric_limits<std::int64_t>::min());
const Int kInt64Max(std::numeric_limits<std::int64_t>::max());

[[noreturn]] void bad(const std::string& what) {
  throw std::invalid_argument("json: " + what);
}

void require_object(const Json& j, const char* what) {
  if (!j.is_object()) bad(std::string(what) + " must be an object");
}

const Json& field(const Json& j, const char* key, const char* what) {
  auto it = j.find(key);
  if (it == j.end()) bad(std::string(what) + " lacks \"" + key + "\"");
  return *it;
}

}  // namespace

Json int_to_json(const Int& v) {
  if (v >= kInt64Min && v <= kInt64Max)
    return Json(v.convert_to<std::int64_t>());
  return Json(v.str());
}

Int int_from_json(const Json& j) {
  if (j.is_number_integer()) return Int(j.get<std::int64_t>());
  if (j.is_string()) {
    try {
      return Int(j.get<std::string>());
    } catch (const std::exception&) {
      bad("'" + j.get<std::string>() + "' is not an integer");
    }
  }
  bad("expected an integer or a decimal string");
}

std::string rat_to_string(const Rat& v) {
  std::string s = numerator(v).str();
  if (denominator(v) != 1) s += "/" + denominator(v).str();
  return s;
}

Rat rat_from_json(const Json& j) {
  if (j.is_number_integer()) return Rat(Int(j.get<std::int64_t>()));
  if (j.is_string()) {
    try {
      return parse_rational(j.get<std::string>());
    } catch (const std::exception&) {
      bad("'" + j.get<std::string>() + "' is not a rational");
    }
  }
  bad("expected a rational as integer or string");
}

Json to_json(const IVec& v) {
  Json a = Json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) a.push_back(int_to_json(v(i)));
  return a;
}

IVec ivec_from_json(const Json& j) {
  if (!j.is_array() || j.empty()) bad("expected a nonempty coordinate array");
  IVec v(static_cast<Eigen::Index>(j.size()));
  Eigen::Index i = 0;
  for (const auto& c : j) v(i++) = int_from_json(c);
  return v;
}

Json to_json(const LatticePolytope& P) {
  Json j;
  j["dim"] = P.dim();
  Json vs = Json::array();
  for (const IVec& v : P.vertices()) vs.push_back(to_json(v));
  j["vertices"] = std::move(vs);
  return j;
}

Json to_json(const RationalPolytope& P) {
  Json j;
  j["dim"] = P.dim();
  Json vs = Json::array();
  for (const QVec& v : P.vertices()) {
    Json row = Json::array();
    for (Eigen::Index i = 0; i < v.size(); ++i)
      row.push_back(rat_to_string(v(i)));
    vs.push_back(std::move(row));
  }
  j["vertices"] = std::move(vs);
  return j;
}

namespace {

template <class Vec, class FromJson>
std::vector<Vec> vertex_list(const Json& j, FromJson&& coord) {
  require_object(j, "polytope");
  const Json& dim = field(j, "dim", "polytope");
  if (!dim.is_number_integer() || dim.get<std::int64_t>() < 1)
    bad("polytope dim must be a positive integer");
  const auto d = dim.get<std::int64_t>();
  const Json& verts = field(j, "vertices", "polytope");
  if (!verts.is_array() || verts.empty())
    bad("polytope vertices must be a nonempty array");
  std::vector<Vec> out;
  out.reserve(verts.size());
  for (const auto& row : verts) {
    if (!row.is_array() || static_cast<std::int64_t>(row.size()) != d)
      bad("every vertex must list exactly dim coordinates");
    Vec v(static_cast<Eigen::Index>(row.size()));
    Eigen::Index i = 0;
    for (const auto& c : row) v(i++) = coord(c);
    out.push_back(std::move(v));
  }
  return out;
}

}  // namespace

LatticePolytope lattice_polytope_from_json(const Json& j) {
  return hull(vertex_list<IVec>(j, [](const Json& c) { return int_from_json(c); }));
}

RationalPolytope rational_polytope_from_json(const Json& j) {
  return hull(vertex_list<QVec>(j, [](const Json& c) { return rat_from_json(c); }));
}

Json to_json(const LaurentPolynomial& f) {
  Json j;
  j["dim"] = f.dim();
  Json terms = Json::array();
  for (const auto& [e, c] : f.terms()) {
    Json t;
    t["exp"] = to_json(e);
    t["coeff"] = rat_to_string(c);
    terms.push_back(std::move(t));
  }
  j["terms"] = std::move(terms);
  return j;
}

LaurentPolynomial laurent_from_json(const Json& j) {
  require_object(j, "polynomial");
  const Json& dim = field(j, "dim", "polynomial");
  if (!dim.is_number_integer() || dim.get<std::int64_t>() < 1)
    bad("polynomial dim must be a positive integer");
  const auto d = dim.get<std::int64_t>();
  const Json& terms = field(j, "terms", "polynomial");
  if (!terms.is_array()) bad("polynomial terms must be an array");
  LaurentPolynomial f(static_cast<int>(d));
  for (const auto& t : terms) {
    require_object(t, "term");
    IVec e = ivec_from_json(field(t, "exp", "term"));
    if (e.size() != d) bad("term exponent has the wrong dimension");
    f.add_term(e, rat_from_json(field(t, "coeff", "term")));
  }
  return f;
}

Json to_json(const CombinatorialMutationData& mu) {
  Json j;
  j["u"] = to_json(mu.u);
  j["factor"] = to_json(mu.H);
  return j;
}

Json to_json(const AlgebraicMutationData& mu) {
  Json j;
  j["u"] = to_json(mu.u);
  j["h"] = to_json(mu.h);
  return j;
}

bool holds_combinatorial_data(const Json& j) {
  require_object(j, "mutation data");
  const bool factor = j.contains("factor");
  const bool poly = j.contains("h");
  if (factor == poly)
    bad("mutation data must carry exactly one of \"factor\" or \"h\"");
  return factor;
}

CombinatorialMutationData combinatorial_data_from_json(const Json& j) {
  if (!holds_combinatorial_data(j)) bad("expected combinatorial mutation data");
  return make_combinatorial_mutation(
      ivec_from_json(field(j, "u", "mutation data")),
      lattice_polytope_from_json(j.at("factor")));
}

AlgebraicMutationData algebraic_data_from_json(const Json& j) {
  if (holds_combinatorial_data(j)) bad("expected algebraic mutation data");
  return make_algebraic_mutation(ivec_from_json(field(j, "u", "mutation data")),
                                 laurent_from_json(j.at("h")));
}

Json to_json(const EdgeDecomposition& dec) {
  Json j;
  Json edges = Json::array();
  for (const auto& e : dec.edges) {
    Json row;
    row["l"] = int_to_json(e.l);
    row["r"] = int_to_json(e.r);
    row["k"] = int_to_json(e.k);
    row["rbar"] = int_to_json(e.rbar);
    edges.push_back(std::move(row));
  }
  j["edges"] = std::move(edges);
  j["class_T"] = dec.class_T;
  j["blowup_degree"] = int_to_json(dec.blowup_degree);
  return j;
}

Json to_json(const CombinatorialOutcome& out) {
  Json j;
  j["defined"] = out.result.has_value();
  if (out.result) {
    j["result"] = to_json(out.result->base());
    Json cert = Json::array();
    for (const auto& rec : out.certificate) {
      Json row;
      row["height"] = int_to_json(rec.height);
      row["slice"] = rec.slice ? to_json(*rec.slice) : Json(nullptr);
      if (rec.cofactor) row["cofactor"] = to_json(*rec.cofactor);
      cert.push_back(std::move(row));
    }
    j["certificate"] = std::move(cert);
  } else {
    j["failing_height"] = int_to_json(*out.failing_height);
  }
  return j;
}

Json to_json(const AlgebraicOutcome& out) {
  Json j;
  j["defined"] = out.result.has_value();
  if (out.result) {
    j["result"] = to_json(*out.result);
    Json cert = Json::array();
    for (const auto& [k, part] : out.certificate) {
      Json row;
      row["height"] = int_to_json(k);
      row["image"] = to_json(part);
      cert.push_back(std::move(row));
    }
    j["certificate"] = std::move(cert);
  } else {
    j["failing_height"] = int_to_json(*out.failing_height);
  }
  return j;
}

std::string hex_encode(const std::string& bytes) {
  static const char* digits = "0123456789abcdef";
  std::string out;
  out.reserve(bytes.size() * 2);
  for (unsigned char c : bytes) {
    out.push_back(digits[c >> 4]);
    out.push_back(digits[c & 0xf]);
  }
  return out;
}

std::string hex_decode(const std::string& hex) {
  auto nibble = [](char c) -> int {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'f') return c - 'a' + 10;
    bad("invalid hex digit");
  };
  if (hex.size() % 2 != 0) bad("hex string of odd length");
  std::string out;
  out.reserve(hex.size() / 2);
  for (std::size_t i = 0; i < hex.size(); i += 2)
    out.push_back(static_cast<char>((nibble(hex[i]) << 4) | nibble(hex[i + 1])));
  return out;
}

}  // namespace fanomut
