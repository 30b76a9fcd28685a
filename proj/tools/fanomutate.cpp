#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "fanomut/atlas.hpp"

using namespace fanomut;

namespace {

// Exit codes: 0 success, 1 the operation itself fails (undefined mutation,
// no path, a false boolean answer, non-Fano input), 2 unusable invocation
// (bad flags, unreadable or malformed JSON, malformed mutation data).

struct Printer {
  bool pretty = false;
  void emit(const Json& j) const {
    std::cout << (pretty ? j.dump(2) : j.dump()) << '\n';
  }
  int fail(int code, const std::string& kind, Json detail = Json::object()) const {
    Json err;
    err["error"] = kind;
    err["detail"] = std::move(detail);
    emit(err);
    return code;
  }
};

Json read_json_arg(const std::string& arg) {
  if (!arg.empty() && (arg.front() == '{' || arg.front() == '['))
    return Json::parse(arg);
  std::ifstream in(arg, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + arg + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return Json::parse(buf.str());
}

bool looks_like_polytope(const Json& j) {
  return j.is_object() && j.contains("vertices");
}

bool looks_like_polynomial(const Json& j) {
  return j.is_object() && j.contains("terms");
}

Json imat_to_json(const IMat& M) {
  Json rows = Json::array();
  for (Eigen::Index r = 0; r < M.rows(); ++r) {
    Json row = Json::array();
    for (Eigen::Index c = 0; c < M.cols(); ++c)
      row.push_back(int_to_json(M(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Json rat_json(const Rat& v) {
  if (denominator(v) == 1) return int_to_json(numerator(v));
  return Json(rat_to_string(v));
}

struct BoundsFlags {
  long long depth = 8;
  long long nodes = 10000;
  long long coordinate = 1000000;
  long long dilation = 16;

  ExplorationBounds to_bounds() const {
    ExplorationBounds b;
    b.max_depth = static_cast<int>(depth);
    b.max_nodes = static_cast<std::size_t>(nodes);
    b.max_coordinate = Int(coordinate);
    b.max_factor_dilation = Int(dilation);
    return b;
  }
};

void add_bounds_flags(CLI::App* sub, BoundsFlags& b) {
  sub->add_option("--depth", b.depth, "maximum search depth")
      ->envname("FANOMUTATE_MAX_DEPTH");
  sub->add_option("--max-nodes", b.nodes, "maximum number of graph nodes")
      ->envname("FANOMUTATE_MAX_NODES");
  sub->add_option("--max-coordinate", b.coordinate,
                  "largest vertex coordinate magnitude kept")
      ->envname("FANOMUTATE_MAX_COORDINATE");
  sub->add_option("--max-dilation", b.dilation,
                  "largest factor segment length tried")
      ->envname("FANOMUTATE_MAX_DILATION");
}

void echo_bounds(bool verbose, const BoundsFlags& b) {
  if (!verbose) return;
  Json j;
  j["max_depth"] = b.depth;
  j["max_nodes"] = b.nodes;
  j["max_coordinate"] = b.coordinate;
  j["max_factor_dilation"] = b.dilation;
  std::cerr << "effective bounds: " << j.dump() << '\n';
}

std::optional<FanoPolytope> parse_fano(const Json& j, const Printer& out, int& code) {
  LatticePolytope P = lattice_polytope_from_json(j);
  if (!is_fano(P)) {
    code = out.fail(1, "not a Fano polytope");
    return std::nullopt;
  }
  return FanoPolytope(std::move(P));
}

int run_check(const Json& input, const Printer& out) {
  LatticePolytope P = lattice_polytope_from_json(input);
  const bool ok = is_fano(P);
  Json doc;
  doc["fano"] = ok;
  doc["dim"] = P.dim();
  doc["vertex_count"] = P.vertex_count();
  out.emit(doc);
  return ok ? 0 : 1;
}

int run_mutate(const Json& input, const Json& data, const Printer& out) {
  if (looks_like_polytope(input)) {
    if (!holds_combinatorial_data(data))
      throw std::invalid_argument(
          "a polytope mutates by combinatorial data (a \"factor\" polytope)");
    CombinatorialMutationData mu = combinatorial_data_from_json(data);
    int code = 0;
    auto P = parse_fano(input, out, code);
    if (!P) return code;
    CombinatorialOutcome res = apply_combinatorial(mu, *P);
    if (!res.result)
      return out.fail(1, "mutation undefined",
                      Json{{"failing_height", int_to_json(*res.failing_height)}});
    out.emit(to_json(res));
    return 0;
  }
  if (looks_like_polynomial(input)) {
    if (holds_combinatorial_data(data))
      throw std::invalid_argument(
          "a polynomial mutates by algebraic data (an \"h\" polynomial)");
    std::string warning;
    AlgebraicMutationData mu = make_algebraic_mutation(
        ivec_from_json(data.at("u")), laurent_from_json(data.at("h")), &warning);
    if (!warning.empty()) std::cerr << "warning: " << warning << '\n';
    LaurentPolynomial f = laurent_from_json(input);
    AlgebraicOutcome res = apply_algebraic(mu, f);
    if (!res.result)
      return out.fail(1, "not mutable",
                      Json{{"failing_height", int_to_json(*res.failing_height)}});
    out.emit(to_json(res));
    return 0;
  }
  throw std::invalid_argument("input is neither a polytope nor a polynomial");
}

int run_mutable(const Json& input, const Json& data, const Printer& out) {
  bool answer = false;
  if (looks_like_polytope(input)) {
    CombinatorialMutationData mu = combinatorial_data_from_json(data);
    LatticePolytope P = lattice_polytope_from_json(input);
    answer = mutate_lattice_polytope(mu, P).result.has_value();
  } else if (looks_like_polynomial(input)) {
    AlgebraicMutationData mu = algebraic_data_from_json(data);
    answer = is_mutable(laurent_from_json(input), mu);
  } else {
    throw std::invalid_argument("input is neither a polytope nor a polynomial");
  }
  Json doc;
  doc["mutable"] = answer;
  out.emit(doc);
  return answer ? 0 : 1;
}

int run_dual(const Json& input, const Printer& out) {
  int code = 0;
  auto P = parse_fano(input, out, code);
  if (!P) return code;
  out.emit(to_json(polar_dual(*P)));
  return 0;
}

int run_volume(const Json& input, const Printer& out) {
  RationalPolytope P = rational_polytope_from_json(input);
  if (!P.is_full_dim()) return out.fail(1, "not full-dimensional");
  Json doc;
  doc["normalized_volume"] = rat_json(normalized_volume(P));
  out.emit(doc);
  return 0;
}

int run_canonical(const Json& input, const Printer& out) {
  int code = 0;
  auto P = parse_fano(input, out, code);
  if (!P) return code;
  CanonicalForm cf = canonical_form(*P);
  Json doc;
  doc["key"] = hex_encode(cf.bytes);
  doc["representative"] = to_json(cf.representative);
  doc["witness"] = imat_to_json(cf.witness);
  out.emit(doc);
  return 0;
}

int run_analyze(const Json& input, const Printer& out) {
  int code = 0;
  auto P = parse_fano(input, out, code);
  if (!P) return code;
  if (P->dim() != 2) return out.fail(1, "not a Fano polygon");
  out.emit(to_json(edge_data(*P)));
  return 0;
}

int run_markov(long long bound, const Printer& out) {
  Json doc;
  doc["bound"] = bound;
  Json triples = Json::array();
  for (const MarkovTriple& t : markov_triples(Int(bound))) {
    Json row = Json::array();
    row.push_back(int_to_json(t.a));
    row.push_back(int_to_json(t.b));
    row.push_back(int_to_json(t.c));
    triples.push_back(std::move(row));
  }
  doc["triples"] = std::move(triples);
  out.emit(doc);
  return 0;
}

int run_wps(const std::vector<long long>& w, const Printer& out) {
  std::optional<FanoPolytope> T;
  try {
    T = wps_triangle({Int(w[0]), Int(w[1]), Int(w[2])});
  } catch (const std::invalid_argument& e) {
    // The weights parsed fine; the math says no.
    return out.fail(1, "invalid weights", Json{{"message", e.what()}});
  }
  Json doc;
  Json ws = Json::array();
  for (long long x : w) ws.push_back(x);
  doc["weights"] = std::move(ws);
  doc["polytope"] = to_json(T->base());
  out.emit(doc);
  return 0;
}

int run_explore(const Json& input, const BoundsFlags& bf, const std::string& out_file,
                const Printer& out) {
  int code = 0;
  auto P = parse_fano(input, out, code);
  if (!P) return code;
  MutationGraph G = explore(*P, bf.to_bounds());
  if (out_file.empty()) {
    out.emit(graph_to_json(G));
    return 0;
  }
  save_graph(G, out_file);
  Json doc;
  doc["file"] = out_file;
  doc["nodes"] = G.nodes.size();
  doc["edges"] = G.edges.size();
  doc["truncated"] = G.truncated;
  out.emit(doc);
  return 0;
}

int run_path(const Json& from_j, const Json& to_j, const BoundsFlags& bf,
             const Printer& out) {
  int code = 0;
  auto from = parse_fano(from_j, out, code);
  if (!from) return code;
  auto to = parse_fano(to_j, out, code);
  if (!to) return code;
  PathResult R = find_path(*from, *to, bf.to_bounds());
  if (!R.found) {
    Json detail;
    detail["truncated"] = R.truncated;
    if (R.source_degree) detail["source_degree"] = rat_json(*R.source_degree);
    if (R.target_degree) detail["target_degree"] = rat_json(*R.target_degree);
    return out.fail(1, "path not found", std::move(detail));
  }
  Json doc;
  doc["found"] = true;
  Json steps = Json::array();
  for (const auto& mv : R.steps) steps.push_back(to_json(mv));
  doc["steps"] = std::move(steps);
  doc["final_map"] = imat_to_json(R.final_map);
  out.emit(doc);
  return 0;
}

int run_seed(const Json& input, const BoundsFlags& bf, const Printer& out) {
  LaurentPolynomial f = laurent_from_json(input);
  Seed S;
  try {
    S = seed_of(f, bf.to_bounds());
  } catch (const std::invalid_argument& e) {
    return out.fail(1, "seed undefined", Json{{"message", e.what()}});
  }
  Json doc;
  Json elems = Json::array();
  for (const auto& mu : S.elements) elems.push_back(to_json(mu));
  doc["elements"] = std::move(elems);
  out.emit(doc);
  return 0;
}

int run_transport(const Json& input, const Json& path_doc, const Printer& out) {
  int code = 0;
  auto P = parse_fano(input, out, code);
  if (!P) return code;
  if (!path_doc.is_array())
    throw std::invalid_argument("the path must be an array of mutation data");
  std::vector<TransportStep> steps;
  for (const auto& item : path_doc) {
    if (holds_combinatorial_data(item))
      steps.emplace_back(combinatorial_data_from_json(item));
    else
      steps.emplace_back(algebraic_data_from_json(item));
  }
  TransportResult R = transport_polarization(*P, steps);
  if (R.failed_index)
    return out.fail(1, "transport failed",
                    Json{{"failed_index", *R.failed_index}});
  Json doc;
  Json stages = Json::array();
  for (const FanoPolytope& stage : R.stages) stages.push_back(to_json(stage.base()));
  doc["stages"] = std::move(stages);
  out.emit(doc);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact mutation calculus for Fano polytopes and Laurent polynomials"};
  app.require_subcommand(1);

  bool pretty = false;
  bool verbose = false;
  std::string format = "json";
  auto add_common = [&](CLI::App* sub) {
    sub->add_flag("--pretty", pretty, "indent the JSON output");
    sub->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"json", "pretty"}));
    sub->add_flag("--verbose", verbose, "echo effective configuration to stderr");
  };

  std::string input_arg, data_arg, from_arg, to_arg, path_arg, out_file;
  long long bound = 0;
  std::vector<long long> weights;
  BoundsFlags bf;

  CLI::App* c_check = app.add_subcommand("check", "test whether a polytope is Fano");
  c_check->add_option("input", input_arg, "polytope JSON or file")->required();
  add_common(c_check);

  CLI::App* c_mutate = app.add_subcommand("mutate", "apply a mutation");
  c_mutate->add_option("input", input_arg, "polytope or polynomial JSON or file")->required();
  c_mutate->add_option("--data", data_arg, "mutation data JSON or file")->required();
  add_common(c_mutate);

  CLI::App* c_mutable = app.add_subcommand("mutable", "test whether a mutation applies");
  c_mutable->add_option("input", input_arg, "polytope or polynomial JSON or file")->required();
  c_mutable->add_option("--data", data_arg, "mutation data JSON or file")->required();
  add_common(c_mutable);

  CLI::App* c_dual = app.add_subcommand("dual", "polar dual of a Fano polytope");
  c_dual->add_option("input", input_arg, "polytope JSON or file")->required();
  add_common(c_dual);

  CLI::App* c_volume = app.add_subcommand("volume", "normalized volume of a polytope");
  c_volume->add_option("input", input_arg, "polytope JSON or file")->required();
  add_common(c_volume);

  CLI::App* c_canonical = app.add_subcommand("canonical", "canonical form of a Fano polytope");
  c_canonical->add_option("input", input_arg, "polytope JSON or file")->required();
  add_common(c_canonical);

  CLI::App* c_analyze = app.add_subcommand("analyze", "edge decomposition of a Fano polygon");
  c_analyze->add_option("input", input_arg, "polytope JSON or file")->required();
  add_common(c_analyze);

  CLI::App* c_markov = app.add_subcommand("markov", "Markov triples up to a bound");
  c_markov->add_option("--bound", bound, "largest entry allowed")
      ->required()
      ->check(CLI::PositiveNumber);
  add_common(c_markov);

  CLI::App* c_wps = app.add_subcommand("wps", "weighted projective plane triangle");
  c_wps->add_option("--weights", weights, "three pairwise coprime weights")
      ->required()
      ->expected(3);
  add_common(c_wps);

  CLI::App* c_explore = app.add_subcommand("explore", "breadth-first mutation graph");
  c_explore->add_option("input", input_arg, "root polytope JSON or file")->required();
  c_explore->add_option("--out", out_file, "write the graph to this file");
  add_bounds_flags(c_explore, bf);
  add_common(c_explore);

  CLI::App* c_path = app.add_subcommand("path", "mutation path between two polytopes");
  c_path->add_option("--from", from_arg, "source polytope JSON or file")->required();
  c_path->add_option("--to", to_arg, "target polytope JSON or file")->required();
  add_bounds_flags(c_path, bf);
  add_common(c_path);

  CLI::App* c_seed = app.add_subcommand("seed", "mutation data acting on a polynomial");
  c_seed->add_option("input", input_arg, "polynomial JSON or file")->required();
  add_bounds_flags(c_seed, bf);
  add_common(c_seed);

  CLI::App* c_transport = app.add_subcommand("transport", "move a polytope along a path");
  c_transport->add_option("input", input_arg, "polytope JSON or file")->required();
  c_transport->add_option("--path", path_arg, "JSON array of mutation data, inline or file")
      ->required();
  add_common(c_transport);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << '\n';
    return 2;
  }

  Printer out{pretty || format == "pretty"};

  // Phase one: read every referenced document. Failures here are usage errors.
  Json input, data, from_doc, to_doc, path_doc;
  try {
    if (*c_check || *c_mutate || *c_mutable || *c_dual || *c_volume ||
        *c_canonical || *c_analyze || *c_explore || *c_seed || *c_transport)
      input = read_json_arg(input_arg);
    if (*c_mutate || *c_mutable) data = read_json_arg(data_arg);
    if (*c_path) {
      from_doc = read_json_arg(from_arg);
      to_doc = read_json_arg(to_arg);
    }
    if (*c_transport) path_doc = read_json_arg(path_arg);
  } catch (const std::exception& e) {
    return out.fail(2, "unreadable input", Json{{"message", e.what()}});
  }

  try {
    if (*c_check) return run_check(input, out);
    if (*c_mutate) return run_mutate(input, data, out);
    if (*c_mutable) return run_mutable(input, data, out);
    if (*c_dual) return run_dual(input, out);
    if (*c_volume) return run_volume(input, out);
    if (*c_canonical) return run_canonical(input, out);
    if (*c_analyze) return run_analyze(input, out);
    if (*c_markov) return run_markov(bound, out);
    if (*c_wps) return run_wps(weights, out);
    if (*c_explore) {
      echo_bounds(verbose, bf);
      return run_explore(input, bf, out_file, out);
    }
    if (*c_path) {
      echo_bounds(verbose, bf);
      return run_path(from_doc, to_doc, bf, out);
    }
    if (*c_seed) {
      echo_bounds(verbose, bf);
      return run_seed(input, bf, out);
    }
    if (*c_transport) return run_transport(input, path_doc, out);
  } catch (const std::domain_error& e) {
    return out.fail(1, e.what());
  } catch (const std::invalid_argument& e) {
    return out.fail(2, "invalid input", Json{{"message", e.what()}});
  } catch (const std::exception& e) {
    return out.fail(1, "operation failed", Json{{"message", e.what()}});
  }
  return 2;
}
