// Acceptance gate: eight end-to-end criteria, one PASS/FAIL line each.
// Exits nonzero if any criterion fails or overruns its time limit.

#include <algorithm>
#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "fanomut/atlas.hpp"
#include "harness.hpp"

using namespace fanomut;
using fanomut::testing::random_defined_move;
using fanomut::testing::random_fano_polygon;
using fanomut::testing::random_mutable_pair;
using fanomut::testing::random_unimodular;

namespace {

using Problems = std::vector<std::string>;

FanoPolytope p2() {
  return FanoPolytope(hull({ivec({1, 0}), ivec({0, 1}), ivec({-1, -1})}));
}

FanoPolytope p113_weights() {
  return FanoPolytope(hull({ivec({1, 0}), ivec({0, 1}), ivec({-1, -3})}));
}

std::string str(const Int& v) { return v.str(); }

// Direct equation search, no recursion: every (a,b,c) with entries up to the
// bound satisfying a^2+b^2+c^2 = 3abc.
std::set<std::array<Int, 3>> markov_by_equation(long long bound) {
  std::set<std::array<Int, 3>> out;
  for (long long a = 1; a <= bound; ++a)
    for (long long b = a; b <= bound; ++b)
      for (long long c = b; c <= bound; ++c)
        if (a * a + b * b + c * c == 3 * a * b * c) out.insert({Int(a), Int(b), Int(c)});
  return out;
}

std::set<std::array<Int, 3>> vieta_ball(int depth) {
  std::array<Int, 3> root{1, 1, 1};
  std::set<std::array<Int, 3>> seen{root};
  std::vector<std::array<Int, 3>> frontier{root};
  for (int d = 0; d < depth; ++d) {
    std::vector<std::array<Int, 3>> next;
    for (const auto& t : frontier) {
      for (int i = 0; i < 3; ++i) {
        std::array<Int, 3> n = t;
        n[i] = 3 * t[(i + 1) % 3] * t[(i + 2) % 3] - t[i];
        std::sort(n.begin(), n.end());
        if (seen.insert(n).second) next.push_back(n);
      }
    }
    frontier = std::move(next);
  }
  return seen;
}

// Exact square root of a weight triple, or nullopt if any entry is not square.
std::optional<std::array<Int, 3>> sqrt_triple(const WeightTriple& w) {
  std::array<Int, 3> in{w.w0, w.w1, w.w2};
  std::array<Int, 3> out;
  for (int i = 0; i < 3; ++i) {
    Int s = sqrt(in[i]);
    if (s * s != in[i]) return std::nullopt;
    out[i] = s;
  }
  return out;
}

std::optional<std::array<Int, 3>> node_sqrt_triple(const FanoPolytope& rep) {
  auto w = identify_wps(rep);
  if (!w.has_value()) return std::nullopt;
  return sqrt_triple(*w);
}

Problems criterion_markov() {
  Problems out;
  std::set<std::array<Int, 3>> oracle = markov_by_equation(29);
  if (oracle.size() != 5) out.push_back("equation oracle found " + std::to_string(oracle.size()) + " triples up to 29");

  ExplorationBounds b3;
  b3.max_depth = 3;
  MutationGraph G3 = explore(p2(), b3);
  if (G3.nodes.size() != 5)
    out.push_back("depth-3 graph has " + std::to_string(G3.nodes.size()) + " nodes, wanted 5");

  std::set<std::array<Int, 3>> seen;
  for (const auto& [key, node] : G3.nodes) {
    auto t = node_sqrt_triple(node.representative);
    if (!t.has_value()) {
      out.push_back("a depth-3 node is not a squared weight triangle");
      continue;
    }
    const auto& [a, b, c] = *t;
    if (a * a + b * b + c * c != 3 * a * b * c)
      out.push_back("triple (" + str(a) + "," + str(b) + "," + str(c) + ") misses the equation");
    if (!oracle.count(*t))
      out.push_back("triple (" + str(a) + "," + str(b) + "," + str(c) + ") is not in the oracle");
    seen.insert(*t);
  }
  if (seen != oracle) out.push_back("depth-3 triples differ from the oracle set");

  ExplorationBounds b6;
  b6.max_depth = 6;
  b6.max_coordinate = Int("10000000000000000");
  MutationGraph G6 = explore(p2(), b6);
  std::set<std::array<Int, 3>> deep = vieta_ball(6);
  std::set<std::array<Int, 3>> found;
  for (const auto& [key, node] : G6.nodes) {
    auto t = node_sqrt_triple(node.representative);
    if (!t.has_value()) {
      out.push_back("a depth-6 node is not a squared weight triangle");
      continue;
    }
    const auto& [a, b, c] = *t;
    if (a * a + b * b + c * c != 3 * a * b * c)
      out.push_back("depth-6 triple (" + str(a) + "," + str(b) + "," + str(c) + ") misses the equation");
    if (!found.insert(*t).second)
      out.push_back("two depth-6 nodes share one triple");
  }
  if (found != deep)
    out.push_back("depth-6 nodes (" + std::to_string(found.size()) +
                  ") are not in bijection with the Vieta ball (" + std::to_string(deep.size()) + ")");
  return out;
}

Problems criterion_newton() {
  Problems out;
  std::mt19937_64 rng(4402);
  int done = 0;
  while (done < 1000) {
    auto pair = random_mutable_pair(rng);
    if (!pair.has_value()) continue;
    if (!is_mutable(pair->f, pair->mu)) {
      out.push_back("harness produced a non-mutable pair");
      break;
    }
    AlgebraicOutcome res = apply_algebraic(pair->mu, pair->f);
    LatticePolytope lhs = newton_polytope(*res.result);
    auto move = make_combinatorial_mutation(pair->mu.u, newton_polytope(pair->mu.h));
    RawMutationOutcome img = mutate_lattice_polytope(move, newton_polytope(pair->f));
    if (!img.result.has_value()) {
      out.push_back("Newton polytope mutation undefined on a mutable pair");
      break;
    }
    if (!(lhs == *img.result)) {
      out.push_back("Newton polytope of the image differs from the mutated Newton polytope");
      break;
    }
    ++done;
  }
  return out;
}

Problems criterion_involution() {
  Problems out;
  std::mt19937_64 rng(4403);
  int done = 0;
  while (done < 1000) {
    FanoPolytope P = random_fano_polygon(rng);
    auto mv = random_defined_move(rng, P);
    if (!mv.has_value()) continue;
    CombinatorialOutcome fwd = apply_combinatorial(*mv, P);
    CombinatorialOutcome back = apply_combinatorial(invert(*mv), *fwd.result);
    if (!back.result.has_value()) {
      out.push_back("inverse combinatorial mutation undefined");
      break;
    }
    if (!(back.result->base() == P.base())) {
      out.push_back("combinatorial double mutation moved the polytope");
      break;
    }
    ++done;
  }
  done = 0;
  while (done < 1000) {
    auto pair = random_mutable_pair(rng);
    if (!pair.has_value()) continue;
    AlgebraicOutcome fwd = apply_algebraic(pair->mu, pair->f);
    AlgebraicOutcome back = apply_algebraic(invert(pair->mu), *fwd.result);
    if (!back.result.has_value()) {
      out.push_back("inverse algebraic mutation undefined");
      break;
    }
    if (!(*back.result == pair->f)) {
      out.push_back("algebraic double mutation moved the polynomial");
      break;
    }
    ++done;
  }
  return out;
}

const std::vector<MutationGraph>& shared_graphs() {
  static const std::vector<MutationGraph> graphs = [] {
    std::vector<MutationGraph> gs;
    ExplorationBounds b;
    b.max_depth = 3;
    gs.push_back(explore(p2(), b));
    gs.push_back(explore(p113_weights(), b));
    b.max_depth = 2;
    gs.push_back(explore(wps_triangle({1, 1, 4}), b));
    b.max_nodes = 60;
    gs.push_back(explore(wps_triangle({2, 3, 5}), b));
    std::mt19937_64 rng(4404);
    b.max_nodes = 40;
    for (int i = 0; i < 2; ++i) gs.push_back(explore(random_fano_polygon(rng), b));
    return gs;
  }();
  return graphs;
}

// Twice the signed area of the polygon with these vertices, by the shoelace
// sum alone.
Rat shoelace_normalized(const std::vector<std::pair<Rat, Rat>>& vs) {
  Rat twice(0);
  for (std::size_t i = 0; i < vs.size(); ++i) {
    const auto& [x0, y0] = vs[i];
    const auto& [x1, y1] = vs[(i + 1) % vs.size()];
    twice += x0 * y1 - x1 * y0;
  }
  return twice < 0 ? Rat(-twice) : twice;
}

Problems criterion_degree() {
  Problems out;
  for (const MutationGraph& G : shared_graphs()) {
    const Rat root_degree = normalized_volume(polar_dual(G.nodes.at(G.root).representative));
    for (const auto& [key, node] : G.nodes) {
      Rat d = normalized_volume(polar_dual(node.representative));
      if (d != root_degree) {
        out.push_back("node degree " + rat_to_string(d) + " differs from root degree " +
                      rat_to_string(root_degree));
        break;
      }
    }
  }
  Rat oracle = shoelace_normalized(
      {{Rat(2), Rat(-1)}, {Rat(-1), Rat(2)}, {Rat(-1), Rat(-1)}});
  if (oracle != Rat(9)) out.push_back("shoelace oracle is " + rat_to_string(oracle) + ", wanted 9");
  Rat computed = normalized_volume(polar_dual(p2()));
  if (computed != oracle)
    out.push_back("library degree " + rat_to_string(computed) + " differs from the shoelace oracle");
  return out;
}

std::multiset<std::pair<Int, Int>> residues(const FanoPolytope& P) {
  std::multiset<std::pair<Int, Int>> out;
  for (const EdgeData& e : edge_data(P).edges)
    if (e.rbar != 0) out.insert({e.r, e.rbar});
  return out;
}

Problems criterion_class_t() {
  Problems out;
  if (!edge_data(p2()).class_T) out.push_back("the anticanonical triangle is not class T");
  if (!edge_data(wps_triangle({1, 1, 4})).class_T)
    out.push_back("the (1,1,4) triangle is not class T");
  EdgeDecomposition dec = edge_data(p113_weights());
  if (dec.class_T) out.push_back("the (1,1,3)-weights triangle claims class T");
  bool witness = false;
  for (const EdgeData& e : dec.edges)
    if (e.rbar != 0 && e.r == 3 && e.rbar == 1) witness = true;
  if (!witness) out.push_back("the (1,1,3)-weights triangle misses the (r=3, rbar=1) residue");

  for (const MutationGraph& G : shared_graphs()) {
    const auto root_residues = residues(G.nodes.at(G.root).representative);
    for (const auto& [key, node] : G.nodes) {
      if (residues(node.representative) != root_residues) {
        out.push_back("residue multiset changed inside one mutation graph");
        break;
      }
    }
  }
  return out;
}

Problems criterion_seed() {
  Problems out;
  LaurentPolynomial f(2);
  f.add_term(ivec({1, 0}), Rat(1));
  f.add_term(ivec({0, 1}), Rat(1));
  f.add_term(ivec({-1, -1}), Rat(1));
  Seed S = seed_of(f);
  if (S.elements.size() != 3) {
    out.push_back("seed has " + std::to_string(S.elements.size()) + " elements, wanted 3");
    return out;
  }
  FanoPolytope start(newton_polytope(f));
  for (const AlgebraicMutationData& mu : S.elements) {
    TransportResult moved = transport_polarization(start, {TransportStep(mu)});
    if (moved.failed_index.has_value()) {
      out.push_back("transport along a seed element failed");
      continue;
    }
    const FanoPolytope& image = moved.stages.back();
    if (image.base().vertex_count() != 3) {
      out.push_back("transport image is not a triangle");
      continue;
    }
    auto w = identify_wps(image);
    if (!w.has_value() || !(w->w0 == 1 && w->w1 == 1 && w->w2 == 4))
      out.push_back("transport image does not carry weights (1,1,4)");
  }
  return out;
}

Problems criterion_path() {
  Problems out;
  FanoPolytope from = wps_triangle({1, 1, 1});
  FanoPolytope to = wps_triangle({1, 4, 25});
  PathResult path = find_path(from, to);
  if (!path.found) {
    out.push_back("no path between the (1,1,1) and (1,2,5) triangles");
    return out;
  }
  if (path.steps.size() != 2)
    out.push_back("path has " + std::to_string(path.steps.size()) + " steps, wanted 2");
  FanoPolytope cur = from;
  for (std::size_t i = 0; i < path.steps.size(); ++i) {
    CombinatorialOutcome step = apply_combinatorial(path.steps[i], cur);
    if (!step.result.has_value()) {
      out.push_back("replay step " + std::to_string(i) + " is undefined");
      return out;
    }
    LatticePolytope rebuilt = replay_certificate(path.steps[i], step.certificate);
    if (!(rebuilt == step.result->base())) {
      out.push_back("certificate replay of step " + std::to_string(i) + " disagrees");
      return out;
    }
    cur = *step.result;
  }
  if (!(apply_map(path.final_map, cur.base()) == to.base()))
    out.push_back("replayed path does not land on the target frame");

  PathResult miss = find_path(p2(), p113_weights());
  if (miss.found) {
    out.push_back("found a path between polytopes of different degree");
    return out;
  }
  if (miss.truncated) out.push_back("degree-witness miss reported as truncated");
  if (!miss.source_degree.has_value() || *miss.source_degree != Rat(9))
    out.push_back("missing or wrong source degree witness");
  if (!miss.target_degree.has_value() || *miss.target_degree != make_rat(25, 3))
    out.push_back("missing or wrong target degree witness");
  return out;
}

Problems criterion_geometry() {
  Problems out;
  std::mt19937_64 rng(4408);

  for (int i = 0; i < 100; ++i) {
    FanoPolytope P = random_fano_polygon(rng, 4);
    std::vector<IVec> pts = lattice_points(P.base());
    auto fs = facets(P.base());
    long long boundary = 0;
    for (const IVec& p : pts)
      for (const auto& f : fs)
        if (pairing(f.normal, p) == f.offset) {
          ++boundary;
          break;
        }
    long long interior = static_cast<long long>(pts.size()) - boundary;
    if (normalized_volume(P.base()) != Rat(2 * interior + boundary - 2)) {
      out.push_back("a polygon breaks the lattice point count formula");
      break;
    }
  }

  for (int i = 0; i < 50; ++i) {
    FanoPolytope P = random_fano_polygon(rng);
    const std::string expect = canonical_form(P).bytes;
    for (int j = 0; j < 20; ++j) {
      IMat W = random_unimodular(rng);
      FanoPolytope image(apply_map(W, P.base()));
      if (canonical_form(image).bytes != expect) {
        out.push_back("canonical form changed under a unimodular map");
        i = 50;
        break;
      }
    }
  }

  std::vector<LatticePolytope> reflexive_seeds = {
      hull({ivec({1, 0}), ivec({0, 1}), ivec({-1, -1})}),
      hull({ivec({1, 1}), ivec({-1, 1}), ivec({-1, -1}), ivec({1, -1})}),
      hull({ivec({1, 0}), ivec({0, 1}), ivec({-1, 0}), ivec({0, -1})}),
      hull({ivec({1, 0}), ivec({1, 1}), ivec({0, 1}), ivec({-1, 0}), ivec({-1, -1}),
            ivec({0, -1})}),
      hull({ivec({1, 0}), ivec({0, 1}), ivec({-1, -2})}),
  };
  auto to_rational = [](const LatticePolytope& P) {
    std::vector<QVec> pts;
    for (const IVec& v : P.vertices()) {
      QVec q(2);
      q << Rat(v(0)), Rat(v(1));
      pts.push_back(std::move(q));
    }
    return hull(std::move(pts));
  };
  for (const LatticePolytope& seed : reflexive_seeds) {
    RationalPolytope dual = polar_dual(seed);
    for (const QVec& v : dual.vertices())
      for (int k = 0; k < 2; ++k)
        if (denominator(v(k)) != 1) {
          out.push_back("a bi-duality seed is not reflexive");
          return out;
        }
  }
  for (int i = 0; i < 100; ++i) {
    const LatticePolytope& seed = reflexive_seeds[static_cast<std::size_t>(i) % reflexive_seeds.size()];
    LatticePolytope Q = apply_map(random_unimodular(rng), seed);
    if (!(polar_dual(polar_dual(Q)) == to_rational(Q))) {
      out.push_back("bi-duality failed on a reflexive polygon");
      break;
    }
  }
  return out;
}

struct Criterion {
  const char* name;
  double limit_seconds;  // 0 means no stated limit
  std::function<Problems()> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> gate = {
      {"Markov correspondence at depths 3 and 6", 10.0, criterion_markov},
      {"Newton compatibility on 1000 random mutable pairs", 30.0, criterion_newton},
      {"involution of combinatorial and algebraic mutation", 30.0, criterion_involution},
      {"degree invariance across explored graphs", 0.0, criterion_degree},
      {"class-T ledger and residue invariance", 0.0, criterion_class_t},
      {"seed extraction and polarization transport", 0.0, criterion_seed},
      {"path finding with degree witness", 0.0, criterion_path},
      {"exact geometry: Pick, canonical forms, bi-duality", 60.0, criterion_geometry},
  };

  int failures = 0;
  for (std::size_t i = 0; i < gate.size(); ++i) {
    const Criterion& c = gate[i];
    auto t0 = std::chrono::steady_clock::now();
    Problems problems = c.run();
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (c.limit_seconds > 0 && secs > c.limit_seconds)
      problems.push_back("overran the " + std::to_string(static_cast<int>(c.limit_seconds)) +
                         " s limit");
    if (problems.empty()) {
      std::printf("PASS  %zu/8  %s  (%.2f s)\n", i + 1, c.name, secs);
    } else {
      ++failures;
      std::printf("FAIL  %zu/8  %s  (%.2f s)\n", i + 1, c.name, secs);
      for (const std::string& p : problems) std::printf("      - %s\n", p.c_str());
    }
  }
  std::printf("%d/8 criteria pass\n", 8 - failures);
  return failures == 0 ? 0 : 1;
}
