#pragma once

#include <optional>
#include <vector>

#include "fanomut/polytope.hpp"

namespace fanomut {

// Per-edge decomposition l = k*r + rbar of a Fano polygon: l the lattice
// length of the edge, r the lattice distance of its line from the origin,
// 0 <= rbar < r.
struct EdgeData {
  Int l;
  Int r;
  Int k;
  Int rbar;
};

inline bool operator==(const EdgeData& a, const EdgeData& b) {
  return a.l == b.l && a.r == b.r && a.k == b.k && a.rbar == b.rbar;
}

struct EdgeDecomposition {
  std::vector<EdgeData> edges;  // in the polygon's cyclic edge order
  bool class_T = false;
  Int blowup_degree;
};

EdgeDecomposition edge_data(const FanoPolytope& P);

// True exactly when every edge splits with zero remainder.
bool is_class_T(const FanoPolytope& P);

// Sum of the per-edge quotients k_i.
Int blowup_cycle_degree(const FanoPolytope& P);

// Solution of a^2 + b^2 + c^2 = 3abc, entries ascending.
struct MarkovTriple {
  Int a;
  Int b;
  Int c;
};

inline bool operator==(const MarkovTriple& x, const MarkovTriple& y) {
  return x.a == y.a && x.b == y.b && x.c == y.c;
}
inline bool operator<(const MarkovTriple& x, const MarkovTriple& y) {
  if (x.a != y.a) return x.a < y.a;
  if (x.b != y.b) return x.b < y.b;
  return x.c < y.c;
}

// Every sorted triple with largest entry <= bound, grown from (1,1,1) by the
// Vieta exchanges (a,b,c) -> (3bc-a,b,c) and friends, returned sorted.
std::vector<MarkovTriple> markov_triples(const Int& bound);

// Pairwise coprime positive weights.
struct WeightTriple {
  Int w0;
  Int w1;
  Int w2;
};

inline bool operator==(const WeightTriple& x, const WeightTriple& y) {
  return x.w0 == y.w0 && x.w1 == y.w1 && x.w2 == y.w2;
}

// The lattice triangle of the weighted projective plane with these weights:
// primitive vertices v0, v1, v2 with w0*v0 + w1*v1 + w2*v2 = 0. Construction
// is deterministic: v2 = (0,1), v0 = (w1, b0) with 0 <= b0 < w1.
FanoPolytope wps_triangle(const WeightTriple& w);

// Inverse dictionary: the positive primitive relation among the vertices of
// a Fano triangle, sorted ascending; nullopt when the relation is not
// pairwise coprime. Throws unless P is a triangle.
std::optional<WeightTriple> identify_wps(const FanoPolytope& P);

}  // namespace fanomut
