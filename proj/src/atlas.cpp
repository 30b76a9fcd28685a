#include "fanomut/atlas.hpp"

#include <deque>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

#include "fanomut/lattice.hpp"

namespace fanomut {

namespace {

void validate_bounds(const ExplorationBounds& b) {
  if (b.max_depth < 0 || b.max_nodes == 0 || b.max_coordinate < 1 ||
      b.max_factor_dilation < 1)
    throw std::invalid_argument("exploration bounds must be positive");
}

bool lex_positive(const IVec& v) {
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (v(i) > 0) return true;
    if (v(i) < 0) return false;
  }
  return false;
}

IVec segment_end(const IVec& w, const Int& d) { return IVec(d * w); }

bool within_coordinate_bound(const FanoPolytope& P, const Int& cap) {
  for (const IVec& v : P.base().vertices())
    for (Eigen::Index i = 0; i < v.size(); ++i) {
      if (v(i) > cap || v(i) < -cap) return false;
    }
  return true;
}

std::optional<WeightTriple> node_weights(const FanoPolytope& P) {
  if (P.dim() != 2 || P.base().vertex_count() != 3) return std::nullopt;
  return identify_wps(P);
}

std::string edge_signature(const std::string& from, const std::string& to,
                           const CombinatorialMutationData& data) {
  return from + '\x1f' + to + '\x1f' + to_json(data).dump();
}

// Shared breadth-first engine. visit() sees each finished node; stop() may
// end the search once a key has been discovered.
struct Discovery {
  std::string parent;  // empty for the root
  std::optional<CombinatorialMutationData> move;  // in parent-representative coordinates
  IMat witness;  // witness * mutate(move, parent-rep) = this node's rep
  int depth = 0;
};

}  // namespace

std::vector<CombinatorialMutationData> enumerate_moves(const FanoPolytope& P,
                                                       const ExplorationBounds& bounds) {
  validate_bounds(bounds);
  if (P.dim() != 2 && P.dim() != 3)
    throw std::invalid_argument("enumerate_moves: only dimensions 2 and 3 are searched");
  std::vector<CombinatorialMutationData> out;
  if (P.dim() == 2) {
    const auto& vs = P.base().vertices();
    auto fs = facets(P.base());
    for (std::size_t i = 0; i < fs.size(); ++i) {
      const IVec& n = fs[i].normal;
      Int r = -fs[i].offset;
      Int l = content(IVec(vs[(i + 1) % vs.size()] - vs[i]));
      IVec w(2);
      w << -n(1), n(0);
      w = primitive_part(w);
      if (!lex_positive(w)) w = -w;
      Int dmax = l / r;  // longer factors cannot fit the bottom slice
      if (dmax > bounds.max_factor_dilation) dmax = bounds.max_factor_dilation;
      for (Int d = 1; d <= dmax; ++d) {
        IVec origin = IVec::Zero(2);
        CombinatorialMutationData mv =
            make_combinatorial_mutation(n, hull({origin, segment_end(w, d)}));
        if (mutate_lattice_polytope(mv, P.base()).result) out.push_back(std::move(mv));
      }
    }
    return out;
  }
  // Dimension 3: segment factors a*w1 + b*w2 over a lattice basis of the
  // perpendicular plane, one representative per sign pair.
  auto fs = facets(P.base());
  for (const auto& f : fs) {
    IMat row(1, 3);
    row.row(0) = f.normal;
    IMat K = integer_kernel(row);  // 3 x 2
    const long long cap = bounds.max_factor_dilation.convert_to<long long>();
    for (long long a = 0; a <= cap; ++a)
      for (long long b = (a == 0 ? 1 : -cap); b <= cap; ++b) {
        IVec end = IVec(Int(a) * K.col(0) + Int(b) * K.col(1));
        if (!lex_positive(end)) continue;
        IVec origin = IVec::Zero(3);
        CombinatorialMutationData mv =
            make_combinatorial_mutation(f.normal, hull({origin, end}));
        if (mutate_lattice_polytope(mv, P.base()).result) out.push_back(std::move(mv));
      }
  }
  return out;
}

MutationGraph explore(const FanoPolytope& root, const ExplorationBounds& bounds) {
  validate_bounds(bounds);
  MutationGraph G;
  G.bounds = bounds;
  CanonicalForm cf = canonical_form(root);
  G.root = cf.bytes;
  FanoPolytope rep(cf.representative);
  G.nodes.emplace(cf.bytes, ChartNode{cf.bytes, rep, 0, node_weights(rep)});
  std::vector<std::string> order{cf.bytes};
  std::set<std::string> edge_seen;
  for (std::size_t qi = 0; qi < order.size(); ++qi) {
    const std::string key = order[qi];
    const ChartNode& node = G.nodes.at(key);
    if (node.depth >= bounds.max_depth) {
      G.truncated = true;  // frontier left unexpanded
      continue;
    }
    for (const auto& mv : enumerate_moves(node.representative, bounds)) {
      auto out = apply_combinatorial(mv, node.representative);
      const FanoPolytope& Q = *out.result;
      if (!within_coordinate_bound(Q, bounds.max_coordinate)) {
        G.truncated = true;
        continue;
      }
      CanonicalForm qcf = canonical_form(Q);
      auto it = G.nodes.find(qcf.bytes);
      bool fresh = false;
      if (it == G.nodes.end()) {
        if (G.nodes.size() >= bounds.max_nodes) {
          G.truncated = true;
          continue;
        }
        FanoPolytope qrep(qcf.representative);
        it = G.nodes
                 .emplace(qcf.bytes, ChartNode{qcf.bytes, qrep, node.depth + 1,
                                               node_weights(qrep)})
                 .first;
        order.push_back(qcf.bytes);
        fresh = true;
      }
      // Tree edges always; cross edges once, from the smaller key so the
      // rediscovery in the opposite direction does not duplicate them.
      if (fresh || key <= qcf.bytes) {
        if (edge_seen.insert(edge_signature(key, qcf.bytes, mv)).second) {
          if (key == qcf.bytes)
            edge_seen.insert(edge_signature(key, key, invert(mv)));
          G.edges.push_back({key, it->first, mv, qcf.witness});
        }
      }
    }
  }
  return G;
}

PathResult find_path(const FanoPolytope& from, const FanoPolytope& to,
                     const ExplorationBounds& bounds) {
  validate_bounds(bounds);
  if (from.dim() != to.dim())
    throw std::invalid_argument("find_path: dimensions differ");
  PathResult R;
  CanonicalForm cf1 = canonical_form(from);
  CanonicalForm cf2 = canonical_form(to);
  if (cf1.bytes == cf2.bytes) {
    R.found = true;
    R.final_map = IMat(unimodular_inverse(cf2.witness) * cf1.witness);
    return R;
  }
  Rat deg1 = normalized_volume(polar_dual(from));
  Rat deg2 = normalized_volume(polar_dual(to));
  if (deg1 != deg2) {  // classes provably disjoint
    R.source_degree = deg1;
    R.target_degree = deg2;
    return R;
  }
  std::map<std::string, Discovery> disc;
  disc.emplace(cf1.bytes, Discovery{"", std::nullopt, cf1.witness, 0});
  std::map<std::string, FanoPolytope> reps;
  reps.emplace(cf1.bytes, FanoPolytope(cf1.representative));
  std::vector<std::string> order{cf1.bytes};
  std::string hit;
  for (std::size_t qi = 0; qi < order.size() && hit.empty(); ++qi) {
    const std::string key = order[qi];
    const int depth = disc.at(key).depth;
    if (depth >= bounds.max_depth) {
      R.truncated = true;
      continue;
    }
    const FanoPolytope& rep = reps.at(key);
    for (const auto& mv : enumerate_moves(rep, bounds)) {
      auto out = apply_combinatorial(mv, rep);
      const FanoPolytope& Q = *out.result;
      if (!within_coordinate_bound(Q, bounds.max_coordinate)) {
        R.truncated = true;
        continue;
      }
      CanonicalForm qcf = canonical_form(Q);
      if (disc.count(qcf.bytes)) continue;
      if (disc.size() >= bounds.max_nodes) {
        R.truncated = true;
        continue;
      }
      disc.emplace(qcf.bytes, Discovery{key, mv, qcf.witness, depth + 1});
      reps.emplace(qcf.bytes, FanoPolytope(qcf.representative));
      order.push_back(qcf.bytes);
      if (qcf.bytes == cf2.bytes) {
        hit = qcf.bytes;
        break;
      }
    }
  }
  if (hit.empty()) return R;  // not found; truncated says whether the ball was cut

  // Walk back to the root, then rebase each step from representative
  // coordinates into the frame of the original polytope.
  std::vector<const Discovery*> chain;
  for (std::string k = hit; !disc.at(k).parent.empty(); k = disc.at(k).parent)
    chain.push_back(&disc.at(k));
  std::reverse(chain.begin(), chain.end());
  IMat T = cf1.witness;  // carries the current chain polytope onto its representative
  for (const Discovery* d : chain) {
    const CombinatorialMutationData& mv = *d->move;
    IVec u = IVec(T.transpose() * mv.u);
    LatticePolytope H = apply_map(unimodular_inverse(T), mv.H);
    R.steps.push_back(make_combinatorial_mutation(u, H));
    T = IMat(d->witness * T);
  }
  R.found = true;
  R.truncated = false;
  R.final_map = IMat(unimodular_inverse(cf2.witness) * T);
  return R;
}

TransportResult transport_polarization(const FanoPolytope& P0,
                                       const std::vector<TransportStep>& path) {
  TransportResult R;
  R.stages.push_back(P0);
  for (std::size_t i = 0; i < path.size(); ++i) {
    const CombinatorialMutationData mv = std::visit(
        [](const auto& step) -> CombinatorialMutationData {
          using T = std::decay_t<decltype(step)>;
          if constexpr (std::is_same_v<T, CombinatorialMutationData>) return step;
          else return {step.u, newton_polytope(step.h)};
        },
        path[i]);
    auto out = apply_combinatorial(mv, R.stages.back());
    if (!out.result) {
      R.failed_index = i;
      return R;
    }
    R.stages.push_back(*out.result);
  }
  return R;
}

Seed seed_of(const LaurentPolynomial& f, const ExplorationBounds& bounds) {
  validate_bounds(bounds);
  if (f.dim() != 2)
    throw std::invalid_argument("seed_of: only bivariate polynomials are searched");
  if (f.is_zero()) throw std::invalid_argument("seed_of: zero polynomial");
  Seed S;
  LatticePolytope N = newton_polytope(f);
  if (!N.is_full_dim()) return S;  // no edge admits a factor
  HeightDecomposition parts;
  std::set<std::string> seen;
  for (const auto& facet : facets(N)) {
    if (facet.offset >= 0) continue;  // mutation in this direction is trivial
    const IVec& n = facet.normal;
    parts = height_decomposition(f, n);
    const LaurentPolynomial& g = parts.components.at(facet.offset);
    IVec w(2);
    w << -n(1), n(0);
    w = primitive_part(w);
    if (!lex_positive(w)) w = -w;
    const int pivot = w(0) != 0 ? 0 : 1;
    // The bottom slice lives on a line parallel to w; read it as univariate.
    const IVec anchor = g.terms().begin()->first;
    LaurentPolynomial slice(1);
    for (const auto& [e, c] : g.terms()) {
      IVec t(1);
      t << (e(pivot) - anchor(pivot)) / w(pivot);
      slice.add_term(t, c);
    }
    UnivariateFactorization fac = factor_univariate(slice);
    for (const auto& [factor, multiplicity] : fac.factors) {
      LaurentPolynomial power = LaurentPolynomial::constant(1, Rat(1));
      for (int e = 1; e <= multiplicity; ++e) {
        power = power * factor;
        LaurentPolynomial h(2);
        for (const auto& [te, c] : power.terms()) h.add_term(IVec(te(0) * w), c);
        AlgebraicMutationData datum = make_algebraic_mutation(n, h);
        if (!is_mutable(f, datum)) continue;
        if (seen.insert(to_json(datum).dump()).second) S.elements.push_back(std::move(datum));
      }
    }
  }
  return S;
}

Json graph_to_json(const MutationGraph& G) {
  Json j;
  j["root"] = hex_encode(G.root);
  Json b;
  b["max_depth"] = G.bounds.max_depth;
  b["max_nodes"] = G.bounds.max_nodes;
  b["max_coordinate"] = int_to_json(G.bounds.max_coordinate);
  b["max_factor_dilation"] = int_to_json(G.bounds.max_factor_dilation);
  j["bounds"] = std::move(b);
  std::vector<const ChartNode*> order;
  order.reserve(G.nodes.size());
  for (const auto& [key, node] : G.nodes) order.push_back(&node);
  std::stable_sort(order.begin(), order.end(),
                   [](const ChartNode* a, const ChartNode* b) {
                     if (a->depth != b->depth) return a->depth < b->depth;
                     return a->key < b->key;
                   });
  Json nodes = Json::array();
  for (const ChartNode* node : order) {
    Json row;
    row["key"] = hex_encode(node->key);
    Json vs = Json::array();
    for (const IVec& v : node->representative.base().vertices())
      vs.push_back(to_json(v));
    row["vertices"] = std::move(vs);
    row["depth"] = node->depth;
    if (node->wps_weights) {
      Json ws = Json::array();
      ws.push_back(int_to_json(node->wps_weights->w0));
      ws.push_back(int_to_json(node->wps_weights->w1));
      ws.push_back(int_to_json(node->wps_weights->w2));
      row["weights"] = std::move(ws);
    }
    nodes.push_back(std::move(row));
  }
  j["nodes"] = std::move(nodes);
  Json edges = Json::array();
  for (const MutationEdge& e : G.edges) {
    Json row;
    row["from"] = hex_encode(e.from);
    row["to"] = hex_encode(e.to);
    row["u"] = to_json(e.data.u);
    row["factor"] = to_json(e.data.H);
    edges.push_back(std::move(row));
  }
  j["edges"] = std::move(edges);
  j["truncated"] = G.truncated;
  j["format_version"] = 1;
  return j;
}

MutationGraph graph_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("format_version"))
    throw std::runtime_error("graph file: not a mutation graph document");
  if (j.at("format_version") != 1)
    throw std::runtime_error("graph file: unsupported format version");
  MutationGraph G;
  const Json& b = j.at("bounds");
  G.bounds.max_depth = b.at("max_depth").get<int>();
  G.bounds.max_nodes = b.at("max_nodes").get<std::size_t>();
  G.bounds.max_coordinate = int_from_json(b.at("max_coordinate"));
  G.bounds.max_factor_dilation = int_from_json(b.at("max_factor_dilation"));
  for (const auto& row : j.at("nodes")) {
    std::string key = hex_decode(row.at("key").get<std::string>());
    std::vector<IVec> vs;
    for (const auto& v : row.at("vertices")) vs.push_back(ivec_from_json(v));
    FanoPolytope rep{hull(std::move(vs))};
    if (canonical_form(rep).bytes != key)
      throw std::runtime_error("graph file: node key does not match its vertices");
    G.nodes.emplace(key, ChartNode{key, rep, row.at("depth").get<int>(),
                                   node_weights(rep)});
  }
  G.root = hex_decode(j.at("root").get<std::string>());
  if (!G.nodes.count(G.root))
    throw std::runtime_error("graph file: root key is not a node");
  for (const auto& row : j.at("edges")) {
    std::string from = hex_decode(row.at("from").get<std::string>());
    std::string to = hex_decode(row.at("to").get<std::string>());
    auto fit = G.nodes.find(from);
    auto tit = G.nodes.find(to);
    if (fit == G.nodes.end() || tit == G.nodes.end())
      throw std::runtime_error("graph file: edge endpoint is not a node");
    CombinatorialMutationData data = make_combinatorial_mutation(
        ivec_from_json(row.at("u")), lattice_polytope_from_json(row.at("factor")));
    auto out = apply_combinatorial(data, fit->second.representative);
    if (!out.result)
      throw std::runtime_error("graph file: edge does not replay");
    CanonicalForm qcf = canonical_form(*out.result);
    if (qcf.bytes != to)
      throw std::runtime_error("graph file: edge lands on the wrong node");
    G.edges.push_back({from, to, std::move(data), qcf.witness});
  }
  G.truncated = j.at("truncated").get<bool>();
  return G;
}

void save_graph(const MutationGraph& G, const std::string& destination) {
  std::ofstream out(destination, std::ios::binary);
  if (!out) throw std::runtime_error("save_graph: cannot open " + destination);
  out << graph_to_json(G).dump() << '\n';
  if (!out) throw std::runtime_error("save_graph: write failed");
}

MutationGraph load_graph(const std::string& source) {
  std::ifstream in(source, std::ios::binary);
  if (!in) throw std::runtime_error("load_graph: cannot open " + source);
  std::ostringstream buf;
  buf << in.rdbuf();
  Json j;
  try {
    j = Json::parse(buf.str());
  } catch (const nlohmann::json::parse_error& e) {
    throw std::runtime_error("load_graph: parse error at byte " +
                             std::to_string(e.byte) + ": " + e.what());
  }
  return graph_from_json(j);
}

}  // namespace fanomut
