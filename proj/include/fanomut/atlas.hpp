#pragma once

#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "fanomut/delpezzo.hpp"
#include "fanomut/jsonio.hpp"
#include "fanomut/mutation.hpp"

namespace fanomut {

// Search budget for graph exploration. max_coordinate caps the absolute
// value of any vertex coordinate a discovered polytope may have;
// max_factor_dilation caps the lattice length of candidate factor segments.
struct ExplorationBounds {
  int max_depth = 8;
  std::size_t max_nodes = 10000;
  Int max_coordinate = Int(1000000);
  Int max_factor_dilation = Int(16);
};

// One mutation class: the canonical representative of a GL(n,Z)-orbit.
struct ChartNode {
  std::string key;  // canonical-form bytes; key == canonical_form(representative).bytes
  FanoPolytope representative;
  int depth = 0;
  std::optional<WeightTriple> wps_weights;  // present for triangle nodes
};

// Undirected edge, stored once. The datum is written in the coordinates of
// the from-node's representative; conj carries its image back onto the
// to-node's representative: conj * mutate(data, from.rep) = to.rep.
struct MutationEdge {
  std::string from;
  std::string to;
  CombinatorialMutationData data;
  IMat conj;
};

struct MutationGraph {
  std::string root;
  ExplorationBounds bounds;
  std::map<std::string, ChartNode> nodes;
  std::vector<MutationEdge> edges;  // ordered by (from-depth, from, to, discovery)
  bool truncated = false;
};

// Every defined mutation datum of P up to shear equivalence: u ranges over
// the primitive inner facet normals, the factor over lattice segments in
// the perpendicular sublattice (plus segment spans in 3D) of dilation at
// most max_factor_dilation. Deterministic order. Dimension 2 or 3 only.
std::vector<CombinatorialMutationData> enumerate_moves(
    const FanoPolytope& P, const ExplorationBounds& bounds = {});

// Breadth-first closure of enumerate_moves under canonical-form
// deduplication. Truncation by any bound is flagged, never silent.
MutationGraph explore(const FanoPolytope& root, const ExplorationBounds& bounds = {});

struct PathResult {
  bool found = false;
  bool truncated = false;  // meaningful when not found: the search ball hit a bound
  // Mutations to apply in sequence starting from the `from` polytope itself.
  std::vector<CombinatorialMutationData> steps;
  // Unimodular witness carrying the end of the replayed chain onto `to`.
  IMat final_map;
  // Set when the polar-dual volumes already separate the two classes.
  std::optional<Rat> source_degree;
  std::optional<Rat> target_degree;
};

// Shortest mutation path between the classes of two Fano polytopes of equal
// dimension, searched within bounds.
PathResult find_path(const FanoPolytope& from, const FanoPolytope& to,
                     const ExplorationBounds& bounds = {});

// A polarization is moved along a path of mutations; algebraic steps act
// through their Newton polytopes.
using TransportStep = std::variant<CombinatorialMutationData, AlgebraicMutationData>;

struct TransportResult {
  std::vector<FanoPolytope> stages;  // starts with P0, one entry per completed step
  std::optional<std::size_t> failed_index;  // step that was undefined, if any
};

TransportResult transport_polarization(const FanoPolytope& P0,
                                       const std::vector<TransportStep>& path);

struct Seed {
  std::vector<AlgebraicMutationData> elements;  // deduplicated, deterministic order
};

// All algebraic mutation data (u, h) acting on f: u an inner edge normal of
// the Newton polygon with negative minimal height, h an irreducible-power
// factor of the bottom slice, kept when f is mutable by (u, h). 2D only.
Seed seed_of(const LaurentPolynomial& f, const ExplorationBounds& bounds = {});

Json graph_to_json(const MutationGraph& G);
MutationGraph graph_from_json(const Json& j);

// Byte-stable file round trip of the JSON form.
void save_graph(const MutationGraph& G, const std::string& destination);
MutationGraph load_graph(const std::string& source);

}  // namespace fanomut
