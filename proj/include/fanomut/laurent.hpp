#pragma once

#include <map>
#include <optional>
#include <vector>

#include "fanomut/polytope.hpp"

// Sparse exact Laurent polynomials over the rationals: ring arithmetic,
// Newton polytopes, height decompositions along a dual vector, genuine
// Laurent divisibility (division up to monomial units), and desk-scale
// univariate factorization into Q-irreducibles.

namespace fanomut {

class LaurentPolynomial {
 public:
  using TermMap = std::map<IVec, Rat, LexLess>;

  explicit LaurentPolynomial(int dim) : dim_(dim) {
    if (dim < 1) throw std::invalid_argument("LaurentPolynomial: dimension must be positive");
  }

  static LaurentPolynomial monomial(const IVec& e, const Rat& c) {
    LaurentPolynomial f(static_cast<int>(e.size()));
    f.add_term(e, c);
    return f;
  }

  static LaurentPolynomial constant(int dim, const Rat& c) {
    LaurentPolynomial f(dim);
    IVec zero = IVec::Zero(dim);
    f.add_term(zero, c);
    return f;
  }

  int dim() const { return dim_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  const TermMap& terms() const { return terms_; }

  Rat coeff(const IVec& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rat(0) : it->second;
  }

  // Accumulates c * x^e, erasing the term if the coefficient cancels to zero.
  void add_term(const IVec& e, const Rat& c) {
    if (e.size() != dim_)
      throw std::invalid_argument("LaurentPolynomial: exponent dimension mismatch");
    if (c == 0) return;
    auto [it, fresh] = terms_.emplace(e, c);
    if (!fresh) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  bool is_monomial() const { return terms_.size() == 1; }

  // True for the constant polynomial 1.
  bool is_one() const {
    if (terms_.size() != 1) return false;
    const auto& [e, c] = *terms_.begin();
    if (c != 1) return false;
    for (Eigen::Index i = 0; i < e.size(); ++i)
      if (e(i) != 0) return false;
    return true;
  }

 private:
  int dim_;
  TermMap terms_;
};

inline bool operator==(const LaurentPolynomial& a, const LaurentPolynomial& b) {
  if (a.dim() != b.dim() || a.term_count() != b.term_count()) return false;
  auto ia = a.terms().begin();
  auto ib = b.terms().begin();
  for (; ia != a.terms().end(); ++ia, ++ib)
    if (!vec_eq(ia->first, ib->first) || ia->second != ib->second) return false;
  return true;
}

inline bool operator!=(const LaurentPolynomial& a, const LaurentPolynomial& b) {
  return !(a == b);
}

inline LaurentPolynomial operator+(const LaurentPolynomial& a, const LaurentPolynomial& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("LaurentPolynomial: dimension mismatch");
  LaurentPolynomial r = a;
  for (const auto& [e, c] : b.terms()) r.add_term(e, c);
  return r;
}

inline LaurentPolynomial operator-(const LaurentPolynomial& a, const LaurentPolynomial& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("LaurentPolynomial: dimension mismatch");
  LaurentPolynomial r = a;
  for (const auto& [e, c] : b.terms()) r.add_term(e, -c);
  return r;
}

inline LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("LaurentPolynomial: dimension mismatch");
  LaurentPolynomial r(a.dim());
  for (const auto& [ea, ca] : a.terms())
    for (const auto& [eb, cb] : b.terms()) {
      IVec e = ea + eb;
      r.add_term(e, ca * cb);
    }
  return r;
}

inline LaurentPolynomial operator*(const Rat& c, const LaurentPolynomial& f) {
  LaurentPolynomial r(f.dim());
  for (const auto& [e, fc] : f.terms()) r.add_term(e, c * fc);
  return r;
}

inline LaurentPolynomial operator-(const LaurentPolynomial& f) { return Rat(-1) * f; }

// f^k for k >= 0 by repeated squaring.
LaurentPolynomial pow(const LaurentPolynomial& f, Int k);

inline std::string to_string(const LaurentPolynomial& f) {
  if (f.is_zero()) return "0";
  std::string s;
  for (const auto& [e, c] : f.terms()) {
    if (!s.empty()) s += " + ";
    s += to_string(c) + "*x^" + to_string(e);
  }
  return s;
}

inline LatticePolytope newton_polytope(const LaurentPolynomial& f) {
  if (f.is_zero()) throw std::invalid_argument("newton_polytope: zero polynomial");
  std::vector<IVec> support;
  support.reserve(f.term_count());
  for (const auto& [e, c] : f.terms()) support.push_back(e);
  return hull(std::move(support));
}

// The grading split f = sum_k f_k with every exponent of f_k pairing to k
// against u. Absent heights are absent keys; the zero polynomial decomposes
// into nothing.
struct HeightDecomposition {
  IVec anchor;
  std::map<Int, LaurentPolynomial> components;
};

inline HeightDecomposition height_decomposition(const LaurentPolynomial& f, const IVec& u) {
  if (u.size() != f.dim())
    throw std::invalid_argument("height_decomposition: dimension mismatch");
  if (!is_primitive(u))
    throw std::invalid_argument("height_decomposition: direction must be primitive");
  HeightDecomposition d;
  d.anchor = u;
  for (const auto& [e, c] : f.terms()) {
    Int k = pairing(u, e);
    auto it = d.components.find(k);
    if (it == d.components.end())
      it = d.components.emplace(k, LaurentPolynomial(f.dim())).first;
    it->second.add_term(e, c);
  }
  return d;
}

// Exact quotient g / h in the Laurent ring when it exists. Both operands are
// shifted into the ordinary polynomial ring by their per-coordinate minimum
// exponents; Newton-polytope additivity makes that shift compatible with any
// Laurent factorization, so single-divisor division there decides
// divisibility here.
std::optional<LaurentPolynomial> divides(const LaurentPolynomial& h, const LaurentPolynomial& g);

// Complete factorization of a univariate Laurent polynomial over Q:
//   p = unit_coeff * x^unit_exponent * prod factors[i] ^ multiplicity[i]
// with every factor a primitive positive-leading integer polynomial,
// irreducible over Q, sorted by (degree, coefficient list).
struct UnivariateFactor {
  LaurentPolynomial factor;
  int multiplicity;
};

struct UnivariateFactorization {
  Rat unit_coeff;
  Int unit_exponent;
  std::vector<UnivariateFactor> factors;
};

UnivariateFactorization factor_univariate(const LaurentPolynomial& p);

}  // namespace fanomut
