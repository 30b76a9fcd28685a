#pragma once

#include "fanomut/lattice.hpp"

#include <algorithm>
#include <optional>
#include <ostream>
#include <set>
#include <string>
#include <utility>
#include <vector>

// Exact convex polytopes over the integers and over the rationals: hulls with
// a deterministic vertex order, facet systems with primitive inner normals,
// membership, lattice-point enumeration, height slices, Minkowski sum and
// integral Minkowski difference, polar duals, normalized volumes, and a
// GL(n,Z) canonical form. Ambient dimensions 1..3; dimension 2 is the fully
// exercised case, dimension 3 works at desk scale (brute-force facet scans).

namespace fanomut {

template <class S>
using VecOf = Eigen::Matrix<S, Eigen::Dynamic, 1>;

namespace detail {

inline Rat to_rat(const Int& x) { return Rat(x); }
inline const Rat& to_rat(const Rat& x) { return x; }

template <class S>
S dot_in(const IVec& a, const VecOf<S>& x) {
  S acc(0);
  for (Eigen::Index i = 0; i < a.size(); ++i) acc += S(a(i)) * x(i);
  return acc;
}

// Cross product of (b - a) and (c - a); positive means a->b->c turns left.
template <class S>
S orient2(const VecOf<S>& a, const VecOf<S>& b, const VecOf<S>& c) {
  return (b(0) - a(0)) * (c(1) - a(1)) - (b(1) - a(1)) * (c(0) - a(0));
}

template <class S>
VecOf<S> cross3(const VecOf<S>& a, const VecOf<S>& b) {
  VecOf<S> c(3);
  c(0) = a(1) * b(2) - a(2) * b(1);
  c(1) = a(2) * b(0) - a(0) * b(2);
  c(2) = a(0) * b(1) - a(1) * b(0);
  return c;
}

// Primitive integer vector positively proportional to the input.
inline IVec primitive_direction(const IVec& v) { return primitive_part(v); }

inline IVec primitive_direction(const QVec& v) {
  using boost::multiprecision::denominator;
  using boost::multiprecision::lcm;
  using boost::multiprecision::numerator;
  Int scale = 1;
  for (Eigen::Index i = 0; i < v.size(); ++i) scale = lcm(scale, denominator(v(i)));
  IVec w(v.size());
  for (Eigen::Index i = 0; i < v.size(); ++i) w(i) = numerator(v(i)) * (scale / denominator(v(i)));
  return primitive_part(w);
}

inline int rank_rational(QMat A) {
  Eigen::Index pr = 0;
  for (Eigen::Index j = 0; j < A.cols() && pr < A.rows(); ++j) {
    Eigen::Index sel = -1;
    for (Eigen::Index i = pr; i < A.rows(); ++i)
      if (A(i, j) != 0) { sel = i; break; }
    if (sel < 0) continue;
    A.row(pr).swap(A.row(sel));
    for (Eigen::Index i = pr + 1; i < A.rows(); ++i) {
      if (A(i, j) == 0) continue;
      Rat f = A(i, j) / A(pr, j);
      A.row(i) -= f * A.row(pr);
    }
    ++pr;
  }
  return static_cast<int>(pr);
}

template <class S>
int affine_rank(const std::vector<VecOf<S>>& pts) {
  if (pts.size() <= 1) return 0;
  QMat D(static_cast<Eigen::Index>(pts.size()) - 1, pts[0].size());
  for (std::size_t i = 1; i < pts.size(); ++i)
    for (Eigen::Index j = 0; j < pts[0].size(); ++j) {
      S d = pts[i](j) - pts[0](j);
      D(static_cast<Eigen::Index>(i) - 1, j) = to_rat(d);
    }
  return rank_rational(D);
}

// Andrew's monotone chain on lex-sorted distinct points of affine rank 2.
// Returns the counterclockwise vertex cycle starting at the lex-min point.
template <class S>
std::vector<VecOf<S>> chain_ccw(const std::vector<VecOf<S>>& sorted_pts) {
  std::vector<VecOf<S>> lower, upper;
  for (const auto& p : sorted_pts) {
    while (lower.size() >= 2 && orient2(lower[lower.size() - 2], lower.back(), p) <= 0)
      lower.pop_back();
    lower.push_back(p);
  }
  for (auto it = sorted_pts.rbegin(); it != sorted_pts.rend(); ++it) {
    while (upper.size() >= 2 && orient2(upper[upper.size() - 2], upper.back(), *it) <= 0)
      upper.pop_back();
    upper.push_back(*it);
  }
  lower.pop_back();
  upper.pop_back();
  lower.insert(lower.end(), upper.begin(), upper.end());
  return lower;
}

}  // namespace detail

template <class S>
class Polytope;

template <class S>
Polytope<S> hull(std::vector<VecOf<S>> points);

// Vertices are exactly the extreme points. The stored order is a function of
// the vertex set alone: the counterclockwise cycle starting at the lex-min
// vertex for full-dimensional polygons, lex-sorted coordinates otherwise. In
// particular vertex(0) is always the lex-min vertex and equal vertex sets
// compare equal element by element.
template <class S>
class Polytope {
 public:
  int dim() const { return dim_; }
  int affine_dim() const { return affine_dim_; }
  bool is_full_dim() const { return affine_dim_ == dim_; }
  bool is_point() const { return affine_dim_ == 0; }
  std::size_t vertex_count() const { return verts_.size(); }
  const std::vector<VecOf<S>>& vertices() const { return verts_; }
  const VecOf<S>& vertex(std::size_t i) const { return verts_[i]; }

 private:
  friend Polytope<S> hull<S>(std::vector<VecOf<S>> points);
  Polytope(int dim, int affine_dim, std::vector<VecOf<S>> verts)
      : dim_(dim), affine_dim_(affine_dim), verts_(std::move(verts)) {}

  int dim_;
  int affine_dim_;
  std::vector<VecOf<S>> verts_;
};

using LatticePolytope = Polytope<Int>;
using RationalPolytope = Polytope<Rat>;

template <class S>
bool operator==(const Polytope<S>& a, const Polytope<S>& b) {
  if (a.dim() != b.dim() || a.vertex_count() != b.vertex_count()) return false;
  for (std::size_t i = 0; i < a.vertex_count(); ++i)
    if (!vec_eq(a.vertex(i), b.vertex(i))) return false;
  return true;
}

template <class S>
bool operator!=(const Polytope<S>& a, const Polytope<S>& b) {
  return !(a == b);
}

template <class S>
std::string to_string(const Polytope<S>& P) {
  std::string s = "{";
  for (std::size_t i = 0; i < P.vertex_count(); ++i) {
    if (i) s += " ";
    s += to_string(P.vertex(i));
  }
  return s + "}";
}

template <class S>
std::ostream& operator<<(std::ostream& os, const Polytope<S>& P) {
  return os << to_string(P);
}

namespace detail {

// All supporting hyperplanes of a full-rank point set in ambient dimension 3,
// as (primitive inner normal, offset) pairs sorted deterministically. Every
// returned plane satisfies <normal, x> >= offset on the whole set with
// equality on at least three affinely independent points.
template <class S>
std::vector<std::pair<IVec, S>> supporting_planes(const std::vector<VecOf<S>>& pts) {
  auto plane_less = [](const std::pair<IVec, S>& a, const std::pair<IVec, S>& b) {
    if (lex_less(a.first, b.first)) return true;
    if (lex_less(b.first, a.first)) return false;
    return a.second < b.second;
  };
  std::set<std::pair<IVec, S>, decltype(plane_less)> planes(plane_less);
  const std::size_t m = pts.size();
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j)
      for (std::size_t k = j + 1; k < m; ++k) {
        VecOf<S> w = cross3<S>(pts[j] - pts[i], pts[k] - pts[i]);
        if (w(0) == 0 && w(1) == 0 && w(2) == 0) continue;
        IVec a = primitive_direction(w);
        S b = dot_in(a, pts[i]);
        bool below = false, above = false;
        for (std::size_t t = 0; t < m && !(below && above); ++t) {
          S d = dot_in(a, pts[t]);
          if (d < b) below = true;
          else if (d > b) above = true;
        }
        if (below && above) continue;
        if (!below && !above) continue;  // impossible for full-rank input
        if (above) planes.insert({a, b});
        else planes.insert({-a, -b});
      }
  return {planes.begin(), planes.end()};
}

}  // namespace detail

template <class S>
Polytope<S> hull(std::vector<VecOf<S>> points) {
  if (points.empty()) throw std::invalid_argument("hull: empty point list");
  const Eigen::Index n = points[0].size();
  if (n < 1 || n > 3)
    throw std::invalid_argument("hull: supported ambient dimensions are 1, 2 and 3");
  for (const auto& p : points)
    if (p.size() != n) throw std::invalid_argument("hull: inconsistent point dimensions");

  std::sort(points.begin(), points.end(), LexLess{});
  points.erase(std::unique(points.begin(), points.end(),
                           [](const VecOf<S>& a, const VecOf<S>& b) { return vec_eq(a, b); }),
               points.end());

  const int r = detail::affine_rank(points);
  if (r == 0) return Polytope<S>(static_cast<int>(n), 0, {points[0]});

  if (r == 1) {
    // Lex order restricted to a line is monotone along it, so the extreme
    // points are the first and last of the sorted list.
    return Polytope<S>(static_cast<int>(n), 1, {points.front(), points.back()});
  }

  if (r == 2 && n == 2)
    return Polytope<S>(2, 2, detail::chain_ccw(points));

  if (r == 2 && n == 3) {
    // Project out a coordinate not spanned by the plane; the projection is
    // affinely injective there, so extremity is preserved both ways.
    VecOf<S> d1 = points[1] - points[0];
    VecOf<S> w(3);
    w(0) = S(0); w(1) = S(0); w(2) = S(0);
    for (std::size_t k = 2; k < points.size(); ++k) {
      w = detail::cross3<S>(d1, points[k] - points[0]);
      if (w(0) != 0 || w(1) != 0 || w(2) != 0) break;
    }
    Eigen::Index drop = w(0) != 0 ? 0 : (w(1) != 0 ? 1 : 2);
    std::vector<std::pair<VecOf<S>, std::size_t>> proj;
    proj.reserve(points.size());
    for (std::size_t i = 0; i < points.size(); ++i) {
      VecOf<S> q(2);
      Eigen::Index t = 0;
      for (Eigen::Index c = 0; c < 3; ++c)
        if (c != drop) q(t++) = points[i](c);
      proj.push_back({q, i});
    }
    std::sort(proj.begin(), proj.end(),
              [](const auto& a, const auto& b) { return lex_less(a.first, b.first); });
    std::vector<VecOf<S>> flat;
    flat.reserve(proj.size());
    for (const auto& pq : proj) flat.push_back(pq.first);
    std::vector<VecOf<S>> cyc = detail::chain_ccw(flat);
    std::vector<VecOf<S>> verts;
    for (const auto& c : cyc)
      for (const auto& pq : proj)
        if (vec_eq(pq.first, c)) { verts.push_back(points[pq.second]); break; }
    std::sort(verts.begin(), verts.end(), LexLess{});
    return Polytope<S>(3, 2, std::move(verts));
  }

  // r == 3: brute-force supporting-plane scan, desk scale by design.
  auto planes = detail::supporting_planes(points);
  std::vector<VecOf<S>> verts;
  for (const auto& p : points) {
    IMat inc(0, 3);
    for (const auto& [a, b] : planes) {
      if (detail::dot_in(a, p) != b) continue;
      inc.conservativeResize(inc.rows() + 1, 3);
      for (Eigen::Index c = 0; c < 3; ++c) inc(inc.rows() - 1, c) = a(c);
    }
    if (inc.rows() >= 3 && detail::rank_rational(to_rational(inc)) == 3) verts.push_back(p);
  }
  std::sort(verts.begin(), verts.end(), LexLess{});
  return Polytope<S>(3, 3, std::move(verts));
}

template <class S>
Polytope<S> hull(std::initializer_list<VecOf<S>> points) {
  return hull(std::vector<VecOf<S>>(points));
}

// One inequality <normal, x> >= offset of the facet system; the normal is
// primitive, integral and points inward, equality holds exactly on the facet.
template <class S>
struct FacetOf {
  IVec normal;
  S offset;
};

template <class S>
std::vector<FacetOf<S>> facets(const Polytope<S>& P) {
  if (!P.is_full_dim())
    throw std::invalid_argument("facets: polytope is not full-dimensional");
  std::vector<FacetOf<S>> out;
  switch (P.dim()) {
    case 1: {
      IVec plus(1), minus(1);
      plus(0) = 1; minus(0) = -1;
      out.push_back({plus, S(P.vertex(0)(0))});
      out.push_back({minus, S(-P.vertex(1)(0))});
      break;
    }
    case 2: {
      const auto& v = P.vertices();
      for (std::size_t i = 0; i < v.size(); ++i) {
        const VecOf<S>& a = v[i];
        const VecOf<S>& b = v[(i + 1) % v.size()];
        VecOf<S> e = b - a;
        VecOf<S> left(2);
        left(0) = -e(1); left(1) = e(0);
        IVec nrm = detail::primitive_direction(left);
        out.push_back({nrm, detail::dot_in(nrm, a)});
      }
      break;
    }
    default: {
      for (auto& [a, b] : detail::supporting_planes(P.vertices()))
        out.push_back({a, b});
      break;
    }
  }
  return out;
}

template <class S>
bool contains(const Polytope<S>& P, const VecOf<S>& x) {
  if (x.size() != P.dim()) throw std::invalid_argument("contains: dimension mismatch");
  if (P.is_point()) return vec_eq(x, P.vertex(0));
  if (P.is_full_dim()) {
    for (const auto& f : facets(P))
      if (detail::dot_in(f.normal, x) < f.offset) return false;
    return true;
  }
  if (P.affine_dim() == 1) {
    const VecOf<S>& v0 = P.vertex(0);
    VecOf<S> d = P.vertex(1) - v0;
    VecOf<S> r = x - v0;
    for (Eigen::Index i = 0; i < d.size(); ++i)
      for (Eigen::Index j = i + 1; j < d.size(); ++j)
        if (r(i) * d(j) != r(j) * d(i)) return false;
    Eigen::Index jj = 0;
    while (d(jj) == 0) ++jj;
    Rat t = detail::to_rat(r(jj)) / detail::to_rat(d(jj));
    return t >= 0 && t <= 1;
  }
  // Planar polytope in ambient dimension 3.
  VecOf<S> d1 = P.vertex(1) - P.vertex(0);
  VecOf<S> w(3);
  w(0) = S(0); w(1) = S(0); w(2) = S(0);
  for (std::size_t k = 2; k < P.vertex_count(); ++k) {
    w = detail::cross3<S>(d1, P.vertex(k) - P.vertex(0));
    if (w(0) != 0 || w(1) != 0 || w(2) != 0) break;
  }
  VecOf<S> r = x - P.vertex(0);
  if (w(0) * r(0) + w(1) * r(1) + w(2) * r(2) != 0) return false;
  Eigen::Index drop = w(0) != 0 ? 0 : (w(1) != 0 ? 1 : 2);
  auto project = [&](const VecOf<S>& p) {
    VecOf<S> q(2);
    Eigen::Index t = 0;
    for (Eigen::Index c = 0; c < 3; ++c)
      if (c != drop) q(t++) = p(c);
    return q;
  };
  std::vector<VecOf<S>> flat;
  flat.reserve(P.vertex_count());
  for (const auto& v : P.vertices()) flat.push_back(project(v));
  return contains(hull(std::move(flat)), project(x));
}

template <class S>
Polytope<S> minkowski_sum(const Polytope<S>& A, const Polytope<S>& B) {
  if (A.dim() != B.dim()) throw std::invalid_argument("minkowski_sum: dimension mismatch");
  std::vector<VecOf<S>> sums;
  sums.reserve(A.vertex_count() * B.vertex_count());
  for (const auto& a : A.vertices())
    for (const auto& b : B.vertices()) sums.push_back(a + b);
  return hull(std::move(sums));
}

template <class S>
Polytope<S> translate(const Polytope<S>& P, const VecOf<S>& t) {
  if (t.size() != P.dim()) throw std::invalid_argument("translate: dimension mismatch");
  std::vector<VecOf<S>> pts;
  pts.reserve(P.vertex_count());
  for (const auto& v : P.vertices()) pts.push_back(v + t);
  return hull(std::move(pts));
}

template <class S>
Polytope<S> dilate(const Polytope<S>& P, const Int& c) {
  if (c < 0) throw std::invalid_argument("dilate: negative factor");
  std::vector<VecOf<S>> pts;
  pts.reserve(P.vertex_count());
  for (const auto& v : P.vertices()) {
    VecOf<S> w(v.size());
    for (Eigen::Index i = 0; i < v.size(); ++i) w(i) = v(i) * S(c);
    pts.push_back(std::move(w));
  }
  return hull(std::move(pts));
}

// Image under a linear map with integer matrix; unimodular maps preserve the
// vertex set, anything else still yields the exact hull of the vertex images.
template <class S>
Polytope<S> apply_map(const IMat& M, const Polytope<S>& P) {
  if (M.cols() != P.dim()) throw std::invalid_argument("apply_map: dimension mismatch");
  std::vector<VecOf<S>> pts;
  pts.reserve(P.vertex_count());
  for (const auto& v : P.vertices()) {
    VecOf<S> w(M.rows());
    for (Eigen::Index i = 0; i < M.rows(); ++i) w(i) = detail::dot_in<S>(M.row(i).transpose(), v);
    pts.push_back(std::move(w));
  }
  return hull(std::move(pts));
}

namespace detail {

// Vertex cycles of all facets of a full-dimensional 3D polytope, each cycle
// ordered around its facet polygon (orientation unspecified).
template <class S>
std::vector<std::vector<std::size_t>> facet_vertex_cycles(const Polytope<S>& P) {
  auto planes = supporting_planes(P.vertices());
  std::vector<std::vector<std::size_t>> cycles;
  for (const auto& [a, b] : planes) {
    std::vector<std::size_t> inc;
    for (std::size_t i = 0; i < P.vertex_count(); ++i)
      if (dot_in(a, P.vertex(i)) == b) inc.push_back(i);
    Eigen::Index drop = a(0) != 0 ? 0 : (a(1) != 0 ? 1 : 2);
    std::vector<std::pair<VecOf<S>, std::size_t>> proj;
    for (std::size_t i : inc) {
      VecOf<S> q(2);
      Eigen::Index t = 0;
      for (Eigen::Index c = 0; c < 3; ++c)
        if (c != drop) q(t++) = P.vertex(i)(c);
      proj.push_back({q, i});
    }
    std::sort(proj.begin(), proj.end(),
              [](const auto& x, const auto& y) { return lex_less(x.first, y.first); });
    std::vector<VecOf<S>> flat;
    for (const auto& pq : proj) flat.push_back(pq.first);
    std::vector<std::size_t> cycle;
    for (const auto& c : chain_ccw(flat))
      for (const auto& pq : proj)
        if (vec_eq(pq.first, c)) { cycle.push_back(pq.second); break; }
    cycles.push_back(std::move(cycle));
  }
  return cycles;
}

}  // namespace detail

// n! times the Euclidean volume, exact.
template <class S>
Rat normalized_volume(const Polytope<S>& P) {
  if (!P.is_full_dim())
    throw std::invalid_argument("normalized_volume: input is not full-dimensional");
  switch (P.dim()) {
    case 1:
      return detail::to_rat(P.vertex(1)(0)) - detail::to_rat(P.vertex(0)(0));
    case 2: {
      S acc(0);
      const auto& v = P.vertices();
      for (std::size_t i = 0; i < v.size(); ++i) {
        const VecOf<S>& a = v[i];
        const VecOf<S>& b = v[(i + 1) % v.size()];
        acc += a(0) * b(1) - b(0) * a(1);
      }
      return detail::to_rat(acc);  // counterclockwise cycle, so already positive
    }
    default: {
      // Cone decomposition from a fixed vertex: fan-triangulate every facet
      // avoiding the apex and sum the absolute parallelepiped determinants.
      const VecOf<S>& apex = P.vertex(0);
      S acc(0);
      for (const auto& cycle : detail::facet_vertex_cycles(P)) {
        bool has_apex = false;
        for (std::size_t i : cycle)
          if (i == 0) { has_apex = true; break; }
        if (has_apex) continue;
        for (std::size_t t = 1; t + 1 < cycle.size(); ++t) {
          VecOf<S> e1 = P.vertex(cycle[0]) - apex;
          VecOf<S> e2 = P.vertex(cycle[t]) - apex;
          VecOf<S> e3 = P.vertex(cycle[t + 1]) - apex;
          VecOf<S> c = detail::cross3<S>(e1, e2);
          S det = c(0) * e3(0) + c(1) * e3(1) + c(2) * e3(2);
          acc += det < 0 ? S(-det) : det;
        }
      }
      return detail::to_rat(acc);
    }
  }
}

template <class S>
RationalPolytope polar_dual(const Polytope<S>& P) {
  if (!P.is_full_dim())
    throw std::invalid_argument("polar_dual: input is not full-dimensional");
  std::vector<QVec> duals;
  for (const auto& f : facets(P)) {
    if (f.offset >= 0)
      throw std::invalid_argument("polar_dual: origin is not strictly interior");
    Rat scale = -detail::to_rat(f.offset);
    QVec m(P.dim());
    for (Eigen::Index i = 0; i < P.dim(); ++i) m(i) = Rat(f.normal(i)) / scale;
    duals.push_back(std::move(m));
  }
  return hull(std::move(duals));
}

inline RationalPolytope to_rational(const LatticePolytope& P) {
  std::vector<QVec> pts;
  pts.reserve(P.vertex_count());
  for (const auto& v : P.vertices()) pts.push_back(to_rational(v));
  return hull(std::move(pts));
}

// Exact conversion back to a lattice polytope; nullopt if any vertex is
// non-integral.
inline std::optional<LatticePolytope> to_integral(const RationalPolytope& P) {
  std::vector<IVec> pts;
  pts.reserve(P.vertex_count());
  for (const auto& v : P.vertices()) {
    for (Eigen::Index i = 0; i < v.size(); ++i)
      if (!rat_is_integral(v(i))) return std::nullopt;
    pts.push_back(to_integral(v));
  }
  return hull(std::move(pts));
}

inline IMat vertex_matrix(const LatticePolytope& P) {
  IMat V(P.dim(), static_cast<Eigen::Index>(P.vertex_count()));
  for (std::size_t j = 0; j < P.vertex_count(); ++j) V.col(static_cast<Eigen::Index>(j)) = P.vertex(j);
  return V;
}

bool is_fano(const LatticePolytope& P);

// A full-dimensional lattice polytope with the origin strictly interior and
// every vertex primitive. Constructing one validates; failures explain which
// condition broke.
class FanoPolytope {
 public:
  explicit FanoPolytope(LatticePolytope base);
  const LatticePolytope& base() const { return base_; }
  int dim() const { return base_.dim(); }

 private:
  LatticePolytope base_;
};

inline bool operator==(const FanoPolytope& a, const FanoPolytope& b) { return a.base() == b.base(); }
inline RationalPolytope polar_dual(const FanoPolytope& P) { return polar_dual(P.base()); }

// Affine lattice chart of a (possibly lower-dimensional) lattice polytope:
// anchor + basis * c ranges over the affine sublattice spanned by the
// polytope, with the basis saturated so chart coordinates of lattice points
// are integral.
struct AffineChart {
  IVec anchor;
  IMat basis;  // ambient_dim x chart_dim

  int ambient_dim() const { return static_cast<int>(basis.rows()); }
  int chart_dim() const { return static_cast<int>(basis.cols()); }
  IVec to_ambient(const IVec& c) const;
  std::optional<IVec> point_to_chart(const IVec& x) const;
  std::optional<IVec> direction_to_chart(const IVec& v) const;
};

AffineChart affine_chart(const LatticePolytope& P);

std::vector<IVec> vertices_at_height(const LatticePolytope& P, const IVec& u, const Int& k);

// Hull of the lattice points of P at height <u,.> = k, in ambient
// coordinates; nullopt when no lattice point lies there (the rational slice
// may still be nonempty).
std::optional<LatticePolytope> height_slice(const LatticePolytope& P, const IVec& u, const Int& k);

// All lattice points of P by bounding-box scan; throws when the box holds
// more than max_candidates points.
std::vector<IVec> lattice_points(const LatticePolytope& P,
                                 const Int& max_candidates = Int(1) << 24);

// Hull of every lattice point x with x + B contained in A; nullopt if no
// such point exists.
std::optional<LatticePolytope> integral_minkowski_difference(const LatticePolytope& A,
                                                             const LatticePolytope& B);

// Deterministic GL(n,Z)-orbit data: two Fano polytopes get identical bytes
// exactly when a unimodular map fixing the origin carries one onto the
// other. The witness does so for the input: witness * P = representative.
struct CanonicalForm {
  std::string bytes;
  IMat witness;
  LatticePolytope representative;
};

CanonicalForm canonical_form(const FanoPolytope& P);

}  // namespace fanomut
