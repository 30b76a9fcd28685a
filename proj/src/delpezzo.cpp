#include "fanomut/delpezzo.hpp"

#include <algorithm>
#include <array>
#include <set>
#include <stdexcept>

#include "fanomut/lattice.hpp"

namespace fanomut {

namespace {

Int gcd_int(Int a, Int b) { return ext_gcd(std::move(a), std::move(b)).g; }

// Representative of a mod m in [0, m), m > 0.
Int mod_norm(const Int& a, const Int& m) {
  Int r = a % m;
  if (r < 0) r += m;
  return r;
}

}  // namespace

EdgeDecomposition edge_data(const FanoPolytope& P) {
  if (P.dim() != 2)
    throw std::invalid_argument("edge_data: expected a Fano polygon");
  const auto& vs = P.base().vertices();
  const std::size_t m = vs.size();
  EdgeDecomposition out;
  out.class_T = true;
  out.blowup_degree = 0;
  out.edges.reserve(m);
  for (std::size_t i = 0; i < m; ++i) {
    const IVec& a = vs[i];
    const IVec& b = vs[(i + 1) % m];
    Int l = content(IVec(b - a));
    IVec n(2);
    n << a(1) - b(1), b(0) - a(0);  // inward normal of the edge a -> b
    n = primitive_part(n);
    Int r = -pairing(n, a);
    if (r <= 0)
      throw std::logic_error("edge_data: edge line passes through the origin");
    Int k = l / r;
    Int rbar = l - k * r;
    if (rbar != 0) out.class_T = false;
    out.blowup_degree += k;
    out.edges.push_back({std::move(l), std::move(r), std::move(k), std::move(rbar)});
  }
  return out;
}

bool is_class_T(const FanoPolytope& P) { return edge_data(P).class_T; }

Int blowup_cycle_degree(const FanoPolytope& P) {
  return edge_data(P).blowup_degree;
}

std::vector<MarkovTriple> markov_triples(const Int& bound) {
  if (bound < 1)
    throw std::invalid_argument("markov_triples: bound must be at least 1");
  std::set<std::array<Int, 3>> seen;
  std::vector<std::array<Int, 3>> todo;
  seen.insert({Int(1), Int(1), Int(1)});
  todo.push_back({Int(1), Int(1), Int(1)});
  while (!todo.empty()) {
    std::array<Int, 3> t = todo.back();
    todo.pop_back();
    for (int i = 0; i < 3; ++i) {
      std::array<Int, 3> next = t;
      next[i] = 3 * t[(i + 1) % 3] * t[(i + 2) % 3] - t[i];
      std::sort(next.begin(), next.end());
      if (next[2] > bound) continue;
      if (seen.insert(next).second) todo.push_back(next);
    }
  }
  std::vector<MarkovTriple> out;
  out.reserve(seen.size());
  for (const auto& t : seen) out.push_back({t[0], t[1], t[2]});
  return out;
}

FanoPolytope wps_triangle(const WeightTriple& w) {
  if (w.w0 < 1 || w.w1 < 1 || w.w2 < 1)
    throw std::invalid_argument("wps_triangle: weights must be positive");
  if (gcd_int(w.w0, w.w1) != 1 || gcd_int(w.w0, w.w2) != 1 ||
      gcd_int(w.w1, w.w2) != 1)
    throw std::invalid_argument("wps_triangle: weights must be pairwise coprime");
  // v2 = (0,1), v0 = (w1, b0), v1 = (-w0, b1); the second coordinates solve
  // w0*b0 + w1*b1 = -w2, pinned down by 0 <= b0 < w1.
  Int b0 = 0;
  if (w.w1 > 1) {
    ExtGcd e = ext_gcd(w.w0, w.w1);
    b0 = mod_norm(-w.w2 * e.x, w.w1);
  }
  Int b1 = (-w.w2 - w.w0 * b0) / w.w1;
  IVec v0(2), v1(2), v2(2);
  v0 << w.w1, b0;
  v1 << -w.w0, b1;
  v2 << Int(0), Int(1);
  return FanoPolytope(hull({v0, v1, v2}));
}

std::optional<WeightTriple> identify_wps(const FanoPolytope& P) {
  if (P.dim() != 2 || P.base().vertex_count() != 3)
    throw std::invalid_argument("identify_wps: expected a lattice triangle");
  IMat M(2, 3);
  for (int j = 0; j < 3; ++j) M.col(j) = P.base().vertex(j);
  IMat K = integer_kernel(M);
  if (K.cols() != 1)
    throw std::logic_error("identify_wps: vertex matrix has deficient rank");
  IVec rel = K.col(0);
  if (rel(0) < 0 || (rel(0) == 0 && (rel(1) < 0 || (rel(1) == 0 && rel(2) < 0))))
    rel = -rel;
  if (rel(0) <= 0 || rel(1) <= 0 || rel(2) <= 0) return std::nullopt;
  if (gcd_int(rel(0), rel(1)) != 1 || gcd_int(rel(0), rel(2)) != 1 ||
      gcd_int(rel(1), rel(2)) != 1)
    return std::nullopt;
  std::array<Int, 3> ws{rel(0), rel(1), rel(2)};
  std::sort(ws.begin(), ws.end());
  return WeightTriple{ws[0], ws[1], ws[2]};
}

}  // namespace fanomut
