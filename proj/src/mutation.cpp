#include "fanomut/mutation.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <utility>

#include "fanomut/lattice.hpp"

namespace fanomut {

namespace {

void validate_direction(const IVec& u) {
  bool nonzero = false;
  for (Eigen::Index i = 0; i < u.size(); ++i)
    if (u(i) != 0) nonzero = true;
  if (!nonzero) throw std::invalid_argument("mutation direction must be nonzero");
  if (content(u) != 1) throw std::invalid_argument("mutation direction must be primitive");
}

void validate_combinatorial(const CombinatorialMutationData& mu) {
  validate_direction(mu.u);
  if (mu.H.dim() != static_cast<int>(mu.u.size()))
    throw std::invalid_argument("factor dimension does not match the mutation direction");
  for (const auto& v : mu.H.vertices())
    if (pairing(mu.u, v) != 0)
      throw std::invalid_argument("factor must lie in the hyperplane annihilated by u");
}

void validate_algebraic(const AlgebraicMutationData& mu) {
  validate_direction(mu.u);
  if (mu.h.dim() != static_cast<int>(mu.u.size()))
    throw std::invalid_argument("factor dimension does not match the mutation direction");
  if (mu.h.is_zero()) throw std::invalid_argument("factor must be nonzero");
  for (const auto& [e, c] : mu.h.terms())
    if (pairing(mu.u, e) != 0)
      throw std::invalid_argument("factor must lie in the hyperplane annihilated by u");
}

// Rational envelope [lo, hi] of a polygon's slice at first-coordinate value
// t, scanning consecutive vertex pairs of the stored boundary cycle.
struct Envelope {
  Rat lo;
  Rat hi;
};

Envelope slice_envelope(const std::vector<IVec>& verts, const Int& t) {
  bool seen = false;
  Rat lo, hi;
  auto take = [&](const Rat& y) {
    if (!seen || y < lo) lo = y;
    if (!seen || y > hi) hi = y;
    seen = true;
  };
  std::size_t m = verts.size();
  if (m == 1) {
    if (verts[0](0) == t) take(Rat(verts[0](1)));
  } else {
    std::size_t pairs = (m == 2) ? 1 : m;
    for (std::size_t i = 0; i < pairs; ++i) {
      const IVec& p = verts[i];
      const IVec& q = verts[(i + 1) % m];
      const Int &hp = p(0), &hq = q(0);
      if (hp == t && hq == t) {
        take(Rat(p(1)));
        take(Rat(q(1)));
      } else if ((hp <= t && t <= hq) || (hq <= t && t <= hp)) {
        take(Rat(p(1)) + Rat(q(1) - p(1)) * make_rat(t - hp, hq - hp));
      }
    }
  }
  if (!seen) throw std::logic_error("slice envelope requested off the polytope");
  return {lo, hi};
}

// Polygon engine: in a unimodular frame whose first coordinate is the height
// under u, the factor becomes a vertical segment [a, b] and every height-k
// contribution (co-factor or shifted slice alike) is the lattice interval
// [ceil(alpha_k) + k*a, floor(beta_k) + k*b], where [alpha, beta] is the
// rational slice. The result is the hull of those intervals over vertex
// heights alone; intermediate heights land inside it.
RawMutationOutcome mutate_polygon(const CombinatorialMutationData& mu, const LatticePolytope& P) {
  IMat U = hyperplane_frame(mu.u);
  IMat V = unimodular_inverse(U);
  LatticePolytope Pf = apply_map(V, P);
  LatticePolytope Hf = apply_map(V, mu.H);

  Int a = Hf.vertex(0)(1), b = a;
  for (const auto& v : Hf.vertices()) {
    a = std::min(a, v(1));
    b = std::max(b, v(1));
  }

  std::set<Int> heights;
  for (const auto& v : Pf.vertices()) heights.insert(v(0));

  RawMutationOutcome out;
  std::vector<IVec> pts;
  for (const Int& t : heights) {
    Envelope env = slice_envelope(Pf.vertices(), t);
    Int slo = rat_ceil(env.lo), shi = rat_floor(env.hi);
    Int lo = slo + t * a, hi = shi + t * b;
    if (t < 0 && lo > hi) {
      out.failing_height = t;
      out.certificate.clear();
      return out;
    }
    IVec fl(2), fh(2), sl(2), sh(2);
    fl << t, lo;
    fh << t, hi;
    sl << t, slo;
    sh << t, shi;
    pts.push_back(U * fl);
    pts.push_back(U * fh);
    HeightRecord rec;
    rec.height = t;
    rec.slice = hull({IVec(U * sl), IVec(U * sh)});
    if (t < 0) rec.cofactor = hull({IVec(U * fl), IVec(U * fh)});
    out.certificate.push_back(std::move(rec));
  }
  out.result = hull(std::move(pts));
  return out;
}

}  // namespace

AlgebraicMutationData make_algebraic_mutation(const IVec& u, const LaurentPolynomial& h,
                                              std::string* warning) {
  AlgebraicMutationData mu{u, h, IrreducibilityStatus::Unverified};
  validate_algebraic(mu);
  if (h.is_one()) {
    // The trivial datum: an empty factorization, i.e. the zeroth power.
    mu.irreducibility_status = IrreducibilityStatus::VerifiedPower;
    return mu;
  }
  if (h.is_monomial())
    throw std::invalid_argument("factor must not be a monomial other than 1");

  std::vector<IVec> exps;
  for (const auto& [e, c] : h.terms()) exps.push_back(e);
  QMat diffs(u.size(), static_cast<Eigen::Index>(exps.size()) - 1);
  for (std::size_t j = 1; j < exps.size(); ++j)
    diffs.col(static_cast<Eigen::Index>(j - 1)) = to_rational(IVec(exps[j] - exps[0]));
  int spread = detail::rank_rational(diffs);

  if (spread == 1) {
    IVec w = primitive_part(IVec(exps[1] - exps[0]));
    Eigen::Index pivot = 0;
    while (w(pivot) == 0) ++pivot;
    LaurentPolynomial line(1);
    for (const auto& [e, c] : h.terms()) {
      IVec d = e - exps[0];
      IVec step(1);
      step << d(pivot) / w(pivot);
      line.add_term(step, c);
    }
    UnivariateFactorization fz = factor_univariate(line);
    if (fz.factors.size() != 1)
      throw std::invalid_argument("factor must be irreducible or a power of an irreducible");
    mu.irreducibility_status = fz.factors[0].multiplicity == 1
                                   ? IrreducibilityStatus::VerifiedIrreducible
                                   : IrreducibilityStatus::VerifiedPower;
  } else {
    mu.irreducibility_status = IrreducibilityStatus::Unverified;
    if (warning)
      *warning = "factor support spans more than a line; irreducibility not verified";
  }
  return mu;
}

CombinatorialMutationData make_combinatorial_mutation(const IVec& u, const LatticePolytope& H) {
  CombinatorialMutationData mu{u, H};
  validate_combinatorial(mu);
  return mu;
}

AlgebraicOutcome apply_algebraic(const AlgebraicMutationData& mu, const LaurentPolynomial& f) {
  validate_algebraic(mu);
  if (f.dim() != mu.h.dim())
    throw std::invalid_argument("polynomial dimension does not match the mutation datum");

  AlgebraicOutcome out;
  HeightDecomposition hd = height_decomposition(f, mu.u);
  LaurentPolynomial acc(f.dim());
  for (const auto& [k, part] : hd.components) {
    if (k < 0) {
      auto q = divides(pow(mu.h, -k), part);
      if (!q.has_value()) {
        out.failing_height = k;
        out.certificate.clear();
        return out;
      }
      acc = acc + *q;
      out.certificate.emplace(k, std::move(*q));
    } else {
      LaurentPolynomial img = part * pow(mu.h, k);
      acc = acc + img;
      out.certificate.emplace(k, std::move(img));
    }
  }
  out.result = std::move(acc);
  return out;
}

bool is_mutable(const LaurentPolynomial& f, const AlgebraicMutationData& mu) {
  validate_algebraic(mu);
  if (f.dim() != mu.h.dim())
    throw std::invalid_argument("polynomial dimension does not match the mutation datum");
  HeightDecomposition hd = height_decomposition(f, mu.u);
  for (const auto& [k, part] : hd.components) {
    if (k >= 0) break;
    if (!divides(pow(mu.h, -k), part).has_value()) return false;
  }
  return true;
}

RawMutationOutcome mutate_lattice_polytope_by_levels(const CombinatorialMutationData& mu,
                                                     const LatticePolytope& P) {
  validate_combinatorial(mu);
  if (P.dim() != mu.H.dim())
    throw std::invalid_argument("polytope dimension does not match the mutation datum");

  Int hmin = pairing(mu.u, P.vertex(0)), hmax = hmin;
  for (const auto& v : P.vertices()) {
    Int t = pairing(mu.u, v);
    hmin = std::min(hmin, t);
    hmax = std::max(hmax, t);
  }
  if (hmax - hmin > 100000)
    throw std::runtime_error("height range too large for the level-by-level engine");

  RawMutationOutcome out;
  std::vector<IVec> pts;
  for (Int k = hmin; k <= hmax; ++k) {
    auto slice = height_slice(P, mu.u, k);
    if (k < 0) {
      std::optional<LatticePolytope> G;
      if (slice.has_value())
        G = integral_minkowski_difference(*slice, dilate(mu.H, -k));
      std::vector<IVec> verts = vertices_at_height(P, mu.u, k);
      if (!verts.empty()) {
        bool covered = G.has_value();
        if (covered) {
          LatticePolytope cover = minkowski_sum(*G, dilate(mu.H, -k));
          for (const auto& v : verts)
            if (!contains(cover, v)) covered = false;
        }
        if (!covered) {
          out.failing_height = k;
          out.certificate.clear();
          return out;
        }
      }
      if (slice.has_value()) {
        HeightRecord rec;
        rec.height = k;
        rec.slice = slice;
        rec.cofactor = G;
        out.certificate.push_back(std::move(rec));
      }
      if (G.has_value())
        for (const auto& g : G->vertices()) pts.push_back(g);
    } else if (slice.has_value()) {
      HeightRecord rec;
      rec.height = k;
      rec.slice = slice;
      out.certificate.push_back(std::move(rec));
      LatticePolytope shifted = minkowski_sum(*slice, dilate(mu.H, k));
      for (const auto& s : shifted.vertices()) pts.push_back(s);
    }
  }
  out.result = hull(std::move(pts));
  return out;
}

RawMutationOutcome mutate_lattice_polytope(const CombinatorialMutationData& mu,
                                           const LatticePolytope& P) {
  validate_combinatorial(mu);
  if (P.dim() != mu.H.dim())
    throw std::invalid_argument("polytope dimension does not match the mutation datum");
  if (P.dim() == 2) return mutate_polygon(mu, P);
  return mutate_lattice_polytope_by_levels(mu, P);
}

LatticePolytope replay_certificate(const CombinatorialMutationData& mu,
                                   const std::vector<HeightRecord>& certificate) {
  validate_combinatorial(mu);
  std::vector<IVec> pts;
  for (const auto& rec : certificate) {
    if (rec.height < 0) {
      if (rec.cofactor.has_value())
        for (const auto& v : rec.cofactor->vertices()) pts.push_back(v);
    } else if (rec.slice.has_value()) {
      LatticePolytope shifted = minkowski_sum(*rec.slice, dilate(mu.H, rec.height));
      for (const auto& v : shifted.vertices()) pts.push_back(v);
    }
  }
  if (pts.empty()) throw std::invalid_argument("certificate holds no contributions");
  return hull(std::move(pts));
}

CombinatorialOutcome apply_combinatorial(const CombinatorialMutationData& mu,
                                         const FanoPolytope& P) {
  RawMutationOutcome raw = mutate_lattice_polytope(mu, P.base());
  CombinatorialOutcome out;
  out.failing_height = raw.failing_height;
  out.certificate = std::move(raw.certificate);
  if (raw.result.has_value()) {
    if (!is_fano(*raw.result))
      throw std::logic_error("defined mutation of a Fano polytope must stay Fano");
    out.result = FanoPolytope(*raw.result);
  }
  return out;
}

bool newton_compatibility(const LaurentPolynomial& f, const AlgebraicMutationData& mu) {
  AlgebraicOutcome alg = apply_algebraic(mu, f);
  if (!alg.result.has_value())
    throw std::invalid_argument("polynomial is not mutable by the given datum");
  CombinatorialMutationData cmu{mu.u, newton_polytope(mu.h)};
  RawMutationOutcome raw = mutate_lattice_polytope(cmu, newton_polytope(f));
  return raw.result.has_value() && *raw.result == newton_polytope(*alg.result);
}

RationalPolytope dual_image(const FanoPolytope& P, const CombinatorialMutationData& mu) {
  CombinatorialOutcome out = apply_combinatorial(mu, P);
  if (!out.result.has_value()) throw std::domain_error("mutation undefined");
  return polar_dual(*out.result);
}

}  // namespace fanomut
