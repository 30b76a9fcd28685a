#include "fanomut/polytope.hpp"

namespace fanomut {

bool is_fano(const LatticePolytope& P) {
  if (!P.is_full_dim()) return false;
  for (const auto& f : facets(P))
    if (f.offset >= 0) return false;
  for (const auto& v : P.vertices())
    if (!is_primitive(v)) return false;  // no zero vertex possible: origin is interior
  return true;
}

FanoPolytope::FanoPolytope(LatticePolytope base) : base_(std::move(base)) {
  if (!base_.is_full_dim())
    throw std::invalid_argument("FanoPolytope: polytope is not full-dimensional");
  for (const auto& f : facets(base_))
    if (f.offset >= 0)
      throw std::invalid_argument("FanoPolytope: origin is not strictly interior");
  for (const auto& v : base_.vertices())
    if (!is_primitive(v))
      throw std::invalid_argument("FanoPolytope: vertex " + to_string(v) + " is not primitive");
}

IVec AffineChart::to_ambient(const IVec& c) const {
  if (c.size() != basis.cols()) throw std::invalid_argument("AffineChart: chart dimension mismatch");
  if (basis.cols() == 0) return anchor;
  return anchor + basis * c;
}

std::optional<IVec> AffineChart::point_to_chart(const IVec& x) const {
  return direction_to_chart(x - anchor);
}

std::optional<IVec> AffineChart::direction_to_chart(const IVec& v) const {
  if (v.size() != basis.rows()) throw std::invalid_argument("AffineChart: ambient dimension mismatch");
  if (basis.cols() == 0) {
    for (Eigen::Index i = 0; i < v.size(); ++i)
      if (v(i) != 0) return std::nullopt;
    return IVec(0);
  }
  auto sol = solve_linear(to_rational(basis), to_rational(v));
  if (!sol) return std::nullopt;
  for (Eigen::Index i = 0; i < sol->size(); ++i)
    if (!rat_is_integral((*sol)(i))) return std::nullopt;
  return to_integral(*sol);
}

AffineChart affine_chart(const LatticePolytope& P) {
  const Eigen::Index n = P.dim();
  IVec anchor = P.vertex(0);
  if (P.is_point()) return {std::move(anchor), IMat(n, 0)};
  if (P.is_full_dim()) return {std::move(anchor), IMat::Identity(n, n)};
  IMat D(static_cast<Eigen::Index>(P.vertex_count()) - 1, n);
  for (std::size_t i = 1; i < P.vertex_count(); ++i)
    D.row(static_cast<Eigen::Index>(i) - 1) = (P.vertex(i) - anchor).transpose();
  // Saturate: the double kernel recovers the direction space's full lattice.
  IMat K = integer_kernel(D);
  IMat Kt = K.transpose();
  return {std::move(anchor), integer_kernel(Kt)};
}

std::vector<IVec> vertices_at_height(const LatticePolytope& P, const IVec& u, const Int& k) {
  if (u.size() != P.dim()) throw std::invalid_argument("vertices_at_height: dimension mismatch");
  if (!is_primitive(u))
    throw std::invalid_argument("vertices_at_height: height functional must be primitive");
  std::vector<IVec> out;
  for (const auto& v : P.vertices())
    if (pairing(u, v) == k) out.push_back(v);
  return out;
}

namespace {

constexpr long long kScanLimitBits = 24;

// Full-dimensional 2D case: clip the edge cycle against the height line and
// round the rational parameter interval to lattice points on that line.
std::optional<LatticePolytope> slice_full_2d(const LatticePolytope& P, const IVec& u,
                                             const Int& k) {
  IMat F = hyperplane_frame(u);
  IVec x0 = F.col(0) * k;  // lattice anchor at height k
  IVec w = F.col(1);       // primitive direction of the height line
  const Eigen::Index j = w(0) != 0 ? 0 : 1;
  std::optional<Rat> tlo, thi;
  auto add = [&](const Rat& pj) {
    Rat t = (pj - Rat(x0(j))) / Rat(w(j));
    if (!tlo || t < *tlo) tlo = t;
    if (!thi || t > *thi) thi = t;
  };
  const auto& v = P.vertices();
  for (std::size_t i = 0; i < v.size(); ++i) {
    const IVec& a = v[i];
    const IVec& b = v[(i + 1) % v.size()];
    Int ha = pairing(u, a) - k, hb = pairing(u, b) - k;
    if (ha == 0) add(Rat(a(j)));
    if ((ha < 0 && hb > 0) || (ha > 0 && hb < 0)) {
      Rat t = Rat(-ha) / Rat(hb - ha);
      add(Rat(a(j)) + t * Rat(b(j) - a(j)));
    }
  }
  if (!tlo) return std::nullopt;
  Int t0 = rat_ceil(*tlo), t1 = rat_floor(*thi);
  if (t0 > t1) return std::nullopt;
  std::vector<IVec> pts{x0 + w * t0};
  if (t1 != t0) pts.push_back(x0 + w * t1);
  return hull(std::move(pts));
}

// Full-dimensional 3D case: intersect the edge graph with the plane, chart
// the plane, and hull the integer chart points inside the rational section.
std::optional<LatticePolytope> slice_full_3d(const LatticePolytope& P, const IVec& u,
                                             const Int& k) {
  std::set<std::pair<std::size_t, std::size_t>> edges;
  for (const auto& cycle : detail::facet_vertex_cycles(P))
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      std::size_t a = cycle[i], b = cycle[(i + 1) % cycle.size()];
      edges.insert({std::min(a, b), std::max(a, b)});
    }
  std::vector<QVec> section;
  for (const auto& v : P.vertices())
    if (pairing(u, v) == k) section.push_back(to_rational(v));
  for (const auto& [ia, ib] : edges) {
    Int ha = pairing(u, P.vertex(ia)) - k, hb = pairing(u, P.vertex(ib)) - k;
    if ((ha < 0 && hb > 0) || (ha > 0 && hb < 0)) {
      Rat t = Rat(-ha) / Rat(hb - ha);
      QVec pa = to_rational(P.vertex(ia));
      QVec pb = to_rational(P.vertex(ib));
      section.push_back(pa + (pb - pa) * t);
    }
  }
  if (section.empty()) return std::nullopt;
  IMat F = hyperplane_frame(u);
  IVec x0 = F.col(0) * k;
  IMat B(3, 2);
  B.col(0) = F.col(1);
  B.col(1) = F.col(2);
  QMat Bq = to_rational(B);
  QVec x0q = to_rational(x0);
  std::vector<QVec> chart_pts;
  for (const auto& p : section) {
    QVec rhs = p - x0q;
    auto c = solve_linear(Bq, rhs);  // consistent: p lies on the height plane
    chart_pts.push_back(*c);
  }
  RationalPolytope Q = hull(std::move(chart_pts));
  IVec lo(2), hi(2);
  for (Eigen::Index t = 0; t < 2; ++t) {
    Rat mn = Q.vertex(0)(t), mx = mn;
    for (const auto& q : Q.vertices()) {
      if (q(t) < mn) mn = q(t);
      if (q(t) > mx) mx = q(t);
    }
    lo(t) = rat_ceil(mn);
    hi(t) = rat_floor(mx);
  }
  std::vector<IVec> inside;
  for (Int x = lo(0); x <= hi(0); ++x)
    for (Int y = lo(1); y <= hi(1); ++y) {
      QVec c(2);
      c(0) = Rat(x);
      c(1) = Rat(y);
      if (!contains(Q, c)) continue;
      IVec ci(2);
      ci(0) = x;
      ci(1) = y;
      inside.push_back(x0 + B * ci);
    }
  if (inside.empty()) return std::nullopt;
  return hull(std::move(inside));
}

}  // namespace

std::optional<LatticePolytope> height_slice(const LatticePolytope& P, const IVec& u,
                                            const Int& k) {
  if (u.size() != P.dim()) throw std::invalid_argument("height_slice: dimension mismatch");
  if (!is_primitive(u))
    throw std::invalid_argument("height_slice: height functional must be primitive");
  Int hmin = pairing(u, P.vertex(0)), hmax = hmin;
  for (const auto& v : P.vertices()) {
    Int h = pairing(u, v);
    if (h < hmin) hmin = h;
    if (h > hmax) hmax = h;
  }
  if (k < hmin || k > hmax) return std::nullopt;
  if (hmin == hmax) return P;  // constant height; the bound check proved it equals k

  if (!P.is_full_dim()) {
    // Reduce to the polytope's own chart, pulling the functional back. The
    // pullback need not be primitive: heights only move in steps of its
    // content there, so k must land on the right residue.
    AffineChart ch = affine_chart(P);
    IVec uc = ch.basis.transpose() * u;
    Int g = content(uc);
    Int rem = k - pairing(u, ch.anchor);
    if (rem % g != 0) return std::nullopt;
    std::vector<IVec> cverts;
    for (const auto& v : P.vertices()) cverts.push_back(*ch.point_to_chart(v));
    auto sliced = height_slice(hull(std::move(cverts)), primitive_part(uc), rem / g);
    if (!sliced) return std::nullopt;
    std::vector<IVec> back;
    for (const auto& c : sliced->vertices()) back.push_back(ch.to_ambient(c));
    return hull(std::move(back));
  }

  switch (P.dim()) {
    case 1: {
      IVec p(1);
      p(0) = u(0) == 1 ? k : -k;
      return hull({p});
    }
    case 2:
      return slice_full_2d(P, u, k);
    default:
      return slice_full_3d(P, u, k);
  }
}

std::vector<IVec> lattice_points(const LatticePolytope& P, const Int& max_candidates) {
  const Eigen::Index n = P.dim();
  IVec lo(n), hi(n);
  for (Eigen::Index t = 0; t < n; ++t) {
    Int mn = P.vertex(0)(t), mx = mn;
    for (const auto& v : P.vertices()) {
      if (v(t) < mn) mn = v(t);
      if (v(t) > mx) mx = v(t);
    }
    lo(t) = mn;
    hi(t) = mx;
  }
  Int count = 1;
  for (Eigen::Index t = 0; t < n; ++t) count *= hi(t) - lo(t) + 1;
  if (count > max_candidates)
    throw std::runtime_error("lattice_points: bounding box holds " + to_string(count) +
                             " candidates, over the limit of " + to_string(max_candidates));
  std::vector<FacetOf<Int>> fs;
  const bool full = P.is_full_dim();
  if (full) fs = facets(P);
  auto inside = [&](const IVec& x) {
    if (!full) return contains(P, x);
    for (const auto& f : fs)
      if (detail::dot_in(f.normal, x) < f.offset) return false;
    return true;
  };
  std::vector<IVec> out;
  IVec x = lo;
  while (true) {
    if (inside(x)) out.push_back(x);
    Eigen::Index t = n - 1;
    while (t >= 0) {
      if (x(t) < hi(t)) {
        ++x(t);
        break;
      }
      x(t) = lo(t);
      --t;
    }
    if (t < 0) break;
  }
  return out;
}

std::optional<LatticePolytope> integral_minkowski_difference(const LatticePolytope& A,
                                                             const LatticePolytope& B) {
  if (A.dim() != B.dim())
    throw std::invalid_argument("integral_minkowski_difference: dimension mismatch");
  const IVec& b0 = B.vertex(0);  // lex-min vertex; shifting B to contain the origin
  AffineChart ch = affine_chart(A);

  std::vector<IVec> bc;
  bc.reserve(B.vertex_count());
  for (const auto& bv : B.vertices()) {
    auto c = ch.direction_to_chart(bv - b0);
    if (!c) return std::nullopt;  // B moves in a direction A does not span
    bc.push_back(*c);
  }
  if (ch.chart_dim() == 0) {
    IVec only = ch.anchor - b0;
    return hull({only});
  }

  std::vector<IVec> ac;
  ac.reserve(A.vertex_count());
  for (const auto& av : A.vertices()) ac.push_back(*ch.point_to_chart(av));
  LatticePolytope Ac = hull(std::move(ac));  // full-dimensional in the chart
  LatticePolytope Bc = hull(std::move(bc));  // contains the chart origin

  auto fs = facets(Ac);
  std::vector<Int> adjusted(fs.size());
  for (std::size_t i = 0; i < fs.size(); ++i) {
    Int mn = detail::dot_in(fs[i].normal, Bc.vertex(0));
    for (const auto& b : Bc.vertices()) {
      Int val = detail::dot_in(fs[i].normal, b);
      if (val < mn) mn = val;
    }
    adjusted[i] = fs[i].offset - mn;
  }

  // Every admissible chart point lies in Ac since the origin is in Bc.
  const Eigen::Index d = ch.chart_dim();
  IVec lo(d), hi(d);
  for (Eigen::Index t = 0; t < d; ++t) {
    Int mn = Ac.vertex(0)(t), mx = mn;
    for (const auto& v : Ac.vertices()) {
      if (v(t) < mn) mn = v(t);
      if (v(t) > mx) mx = v(t);
    }
    lo(t) = mn;
    hi(t) = mx;
  }
  Int count = 1;
  for (Eigen::Index t = 0; t < d; ++t) count *= hi(t) - lo(t) + 1;
  if (count > (Int(1) << kScanLimitBits))
    throw std::runtime_error("integral_minkowski_difference: scan box holds " + to_string(count) +
                             " candidates");
  std::vector<IVec> kept;
  IVec c = lo;
  while (true) {
    bool ok = true;
    for (std::size_t i = 0; i < fs.size() && ok; ++i)
      ok = detail::dot_in(fs[i].normal, c) >= adjusted[i];
    if (ok) kept.push_back(c);
    Eigen::Index t = d - 1;
    while (t >= 0) {
      if (c(t) < hi(t)) {
        ++c(t);
        break;
      }
      c(t) = lo(t);
      --t;
    }
    if (t < 0) break;
  }
  if (kept.empty()) return std::nullopt;
  std::vector<IVec> back;
  back.reserve(kept.size());
  for (const auto& cc : kept) back.push_back(ch.to_ambient(cc) - b0);
  return hull(std::move(back));
}

namespace {

// Lexicographic minimization of the vertex-facet pairing matrix, read in
// column-major order, over simultaneous row and column permutations. Rows
// sort freely once a column order is fixed, so the search runs over column
// orders with sorted-prefix pruning; all minimizing column orders are kept
// for the later tie-break.
struct PairingMinimizer {
  const std::vector<std::vector<Int>>& rows;
  int m;
  std::vector<Int> best;
  std::vector<std::vector<int>> best_orders;
  std::vector<int> order;
  std::vector<char> used;

  std::vector<Int> prefix_string() const {
    std::vector<std::vector<Int>> keys;
    keys.reserve(rows.size());
    for (const auto& r : rows) {
      std::vector<Int> key;
      key.reserve(order.size());
      for (int c : order) key.push_back(r[c]);
      keys.push_back(std::move(key));
    }
    std::sort(keys.begin(), keys.end());
    std::vector<Int> s;
    s.reserve(order.size() * keys.size());
    for (std::size_t c = 0; c < order.size(); ++c)
      for (const auto& key : keys) s.push_back(key[c]);
    return s;
  }

  void dfs() {
    if (static_cast<int>(order.size()) == m) {
      std::vector<Int> s = prefix_string();
      if (best.empty() || s < best) {
        best = s;
        best_orders.assign(1, order);
      } else if (s == best) {
        best_orders.push_back(order);
      }
      return;
    }
    for (int c = 0; c < m; ++c) {
      if (used[c]) continue;
      order.push_back(c);
      used[c] = 1;
      bool prune = false;
      if (!best.empty()) {
        std::vector<Int> bound = prefix_string();
        for (std::size_t i = 0; i < bound.size(); ++i) {
          if (bound[i] < best[i]) break;
          if (bound[i] > best[i]) {
            prune = true;
            break;
          }
        }
      }
      if (!prune) dfs();
      order.pop_back();
      used[c] = 0;
    }
  }
};

}  // namespace

CanonicalForm canonical_form(const FanoPolytope& fp) {
  const LatticePolytope& P = fp.base();
  const int n = P.dim();
  const int m = static_cast<int>(P.vertex_count());
  auto fs = facets(P);
  std::vector<std::vector<Int>> pm(fs.size(), std::vector<Int>(m));
  for (std::size_t i = 0; i < fs.size(); ++i)
    for (int j = 0; j < m; ++j) pm[i][j] = pairing(fs[i].normal, P.vertex(j));

  PairingMinimizer mini{pm, m, {}, {}, {}, std::vector<char>(m, 0)};
  mini.dfs();

  // Among the column orders realizing the minimal pairing matrix, pick the
  // one whose Hermite-reduced vertex matrix is lexicographically least; that
  // matrix is the orbit representative and its reduction witness the map.
  IMat V = vertex_matrix(P);
  auto flatten = [](const IMat& M) {
    std::vector<Int> v;
    v.reserve(static_cast<std::size_t>(M.rows() * M.cols()));
    for (Eigen::Index i = 0; i < M.rows(); ++i)
      for (Eigen::Index j = 0; j < M.cols(); ++j) v.push_back(M(i, j));
    return v;
  };
  std::optional<IMat> best_h, best_w;
  std::vector<Int> best_flat;
  for (const auto& ord : mini.best_orders) {
    IMat Vs(n, m);
    for (int j = 0; j < m; ++j) Vs.col(j) = V.col(ord[j]);
    HermiteForm hf = hermite_row_form(Vs);
    std::vector<Int> flat = flatten(hf.h);
    if (!best_h || flat < best_flat) {
      best_h = hf.h;
      best_w = hf.u;
      best_flat = std::move(flat);
    }
  }

  std::vector<IVec> rep_verts;
  rep_verts.reserve(m);
  for (int j = 0; j < m; ++j) rep_verts.push_back(best_h->col(j));

  std::string bytes = "cf1 d" + std::to_string(n) + " v" + std::to_string(m) + ":";
  for (int i = 0; i < n; ++i) {
    if (i) bytes += ";";
    for (int j = 0; j < m; ++j) {
      if (j) bytes += ",";
      bytes += to_string((*best_h)(i, j));
    }
  }
  return CanonicalForm{std::move(bytes), *best_w, hull(std::move(rep_verts))};
}

}  // namespace fanomut
