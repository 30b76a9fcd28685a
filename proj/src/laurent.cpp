#include "fanomut/laurent.hpp"

#include <algorithm>

namespace fanomut {

LaurentPolynomial pow(const LaurentPolynomial& f, Int k) {
  if (k < 0) throw std::invalid_argument("pow: negative exponent");
  LaurentPolynomial acc = LaurentPolynomial::constant(f.dim(), Rat(1));
  LaurentPolynomial base = f;
  while (k > 0) {
    if (k % 2 != 0) acc = acc * base;
    k /= 2;
    if (k > 0) base = base * base;
  }
  return acc;
}

namespace {

// Graded lexicographic order on nonnegative exponent vectors; the division
// loop below needs a monomial well-order, and plain lex is not one once a
// variable is inverted away, so the shift to min-zero exponents matters.
struct GrlexLess {
  bool operator()(const IVec& a, const IVec& b) const {
    Int da = 0, db = 0;
    for (Eigen::Index i = 0; i < a.size(); ++i) da += a(i);
    for (Eigen::Index i = 0; i < b.size(); ++i) db += b(i);
    if (da != db) return da < db;
    return lex_less(a, b);
  }
};

IVec min_exponents(const LaurentPolynomial& f) {
  IVec m = f.terms().begin()->first;
  for (const auto& [e, c] : f.terms())
    for (Eigen::Index i = 0; i < m.size(); ++i)
      if (e(i) < m(i)) m(i) = e(i);
  return m;
}

}  // namespace

std::optional<LaurentPolynomial> divides(const LaurentPolynomial& h, const LaurentPolynomial& g) {
  if (h.is_zero()) throw std::invalid_argument("divides: zero divisor");
  if (h.dim() != g.dim()) throw std::invalid_argument("divides: dimension mismatch");
  if (g.is_zero()) return LaurentPolynomial(g.dim());

  IVec hshift = min_exponents(h);
  IVec gshift = min_exponents(g);

  std::map<IVec, Rat, GrlexLess> divisor, rem;
  for (const auto& [e, c] : h.terms()) divisor.emplace(IVec(e - hshift), c);
  for (const auto& [e, c] : g.terms()) rem.emplace(IVec(e - gshift), c);

  const IVec& hlead = divisor.rbegin()->first;
  const Rat& hlead_c = divisor.rbegin()->second;

  LaurentPolynomial quotient(g.dim());
  IVec qshift = gshift - hshift;
  while (!rem.empty()) {
    auto lead = std::prev(rem.end());
    IVec m = lead->first - hlead;
    for (Eigen::Index i = 0; i < m.size(); ++i)
      if (m(i) < 0) return std::nullopt;
    Rat c = lead->second / hlead_c;
    quotient.add_term(IVec(m + qshift), c);
    for (const auto& [e, hc] : divisor) {
      IVec key = e + m;
      auto [it, fresh] = rem.emplace(key, -c * hc);
      if (!fresh) {
        it->second -= c * hc;
        if (it->second == 0) rem.erase(it);
      }
    }
  }
  return quotient;
}

namespace {

// Dense integer univariate polynomials, coefficients ascending, no trailing
// zeros. The factorization below runs entirely in this representation.
using Poly = std::vector<Int>;

void trim(Poly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

int degree(const Poly& p) { return static_cast<int>(p.size()) - 1; }

Poly mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, Int(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  return r;
}

Poly derivative(const Poly& p) {
  Poly r;
  for (std::size_t i = 1; i < p.size(); ++i) r.push_back(Int(i) * p[i]);
  trim(r);
  return r;
}

Int poly_content(const Poly& p) {
  Int g = 0;
  for (const Int& c : p) g = boost::multiprecision::gcd(g, c);
  return g;
}

Poly primitive_positive(Poly p) {
  trim(p);
  if (p.empty()) return p;
  Int g = poly_content(p);
  if (p.back() < 0) g = -g;
  for (Int& c : p) c /= g;
  return p;
}

// Exact division in Z[x]; nullopt when the division leaves a remainder or a
// fractional coefficient.
std::optional<Poly> exact_div(const Poly& a, const Poly& b) {
  if (b.empty()) throw std::invalid_argument("exact_div: zero divisor");
  Poly r = a, q(a.size(), Int(0));
  trim(r);
  while (!r.empty() && r.size() >= b.size()) {
    if (r.back() % b.back() != 0) return std::nullopt;
    Int c = r.back() / b.back();
    std::size_t off = r.size() - b.size();
    q[off] = c;
    for (std::size_t i = 0; i < b.size(); ++i) r[off + i] -= c * b[i];
    trim(r);
  }
  if (!r.empty()) return std::nullopt;
  trim(q);
  return q;
}

// Pseudo-remainder of a by b: lc(b)^(deg a - deg b + 1) * a reduced mod b.
Poly pseudo_rem(Poly a, const Poly& b) {
  trim(a);
  int db = degree(b);
  while (degree(a) >= db) {
    Int lead = a.back();
    std::size_t off = a.size() - b.size();
    for (Int& c : a) c *= b.back();
    for (std::size_t i = 0; i < b.size(); ++i) a[off + i] -= lead * b[i];
    trim(a);
    if (a.empty()) break;
  }
  return a;
}

Poly gcd_pp(Poly a, Poly b) {
  a = primitive_positive(std::move(a));
  b = primitive_positive(std::move(b));
  if (degree(a) < degree(b)) std::swap(a, b);
  while (!b.empty()) {
    Poly r = primitive_positive(pseudo_rem(a, b));
    a = std::move(b);
    b = std::move(r);
  }
  return primitive_positive(std::move(a));
}

Rat eval_at(const Poly& p, const Rat& x) {
  Rat v = 0;
  for (auto it = p.rbegin(); it != p.rend(); ++it) v = v * x + Rat(*it);
  return v;
}

std::vector<Int> divisors_signed(const Int& n) {
  using boost::multiprecision::abs;
  Int a = abs(n);
  std::vector<Int> small, large;
  for (Int d = 1; d * d <= a; ++d) {
    if (a % d != 0) continue;
    small.push_back(d);
    if (d * d != a) large.push_back(a / d);
  }
  std::vector<Int> out;
  for (const Int& d : small) out.push_back(d);
  for (auto it = large.rbegin(); it != large.rend(); ++it) out.push_back(*it);
  std::size_t positives = out.size();
  for (std::size_t i = 0; i < positives; ++i) out.push_back(-out[i]);
  return out;
}

// Strips every rational root of a primitive polynomial, returning the linear
// factors (q*x - p) and the remaining rootless quotient.
void extract_rational_roots(Poly& p, std::vector<Poly>& out) {
  bool progress = true;
  while (progress && degree(p) >= 1) {
    progress = false;
    for (const Int& num : divisors_signed(p.front())) {
      for (const Int& den : divisors_signed(p.back())) {
        if (den <= 0) continue;
        if (boost::multiprecision::gcd(boost::multiprecision::abs(num), den) != 1) continue;
        if (eval_at(p, Rat(num, den)) != 0) continue;
        Poly lin = {-num, den};
        auto q = exact_div(p, lin);
        // den divides the leading coefficient and num the constant term, so
        // the quotient of primitives is integral; assert by construction.
        p = primitive_positive(*q);
        out.push_back(lin);
        progress = true;
        break;
      }
      if (progress) break;
    }
    if (p.front() == 0) {
      // A zero constant term means x itself divides; callers shift that
      // monomial away beforehand, so treat it as the root 0.
      Poly lin = {Int(0), Int(1)};
      p.erase(p.begin());
      out.push_back(lin);
      progress = true;
    }
  }
}

void factor_squarefree(Poly p, std::vector<Poly>& out);

// Kronecker search for a factor of degree e; p is primitive, rootless, of
// degree >= 4. Returns true and recurses on success.
bool kronecker_split(const Poly& p, int e, std::vector<Poly>& out) {
  std::vector<Int> points;
  for (int i = 0; static_cast<int>(points.size()) < e + 1; ++i) {
    Int x = (i % 2 == 0) ? Int(i / 2) : Int(-(i / 2 + 1));
    points.push_back(x);
  }
  std::vector<std::vector<Int>> value_divisors;
  for (const Int& x : points) {
    Rat v = eval_at(p, Rat(x));
    value_divisors.push_back(divisors_signed(boost::multiprecision::numerator(v)));
  }

  std::vector<std::size_t> pick(points.size(), 0);
  while (true) {
    // Lagrange interpolation through (points[j], divisor choice j).
    std::vector<Rat> coeffs(e + 1, Rat(0));
    for (std::size_t j = 0; j < points.size(); ++j) {
      std::vector<Rat> basis = {Rat(1)};
      Rat denom = 1;
      for (std::size_t l = 0; l < points.size(); ++l) {
        if (l == j) continue;
        std::vector<Rat> next(basis.size() + 1, Rat(0));
        for (std::size_t t = 0; t < basis.size(); ++t) {
          next[t] -= basis[t] * Rat(points[l]);
          next[t + 1] += basis[t];
        }
        basis = std::move(next);
        denom *= Rat(points[j]) - Rat(points[l]);
      }
      Rat w = Rat(value_divisors[j][pick[j]]) / denom;
      for (std::size_t t = 0; t < basis.size(); ++t) coeffs[t] += w * basis[t];
    }

    bool integral = true;
    Poly cand;
    for (const Rat& c : coeffs) {
      if (!rat_is_integral(c)) {
        integral = false;
        break;
      }
      cand.push_back(boost::multiprecision::numerator(c));
    }
    if (integral) {
      trim(cand);
      if (degree(cand) == e) {
        cand = primitive_positive(std::move(cand));
        if (auto q = exact_div(p, cand)) {
          factor_squarefree(cand, out);
          factor_squarefree(primitive_positive(*q), out);
          return true;
        }
      }
    }

    std::size_t j = 0;
    while (j < pick.size() && ++pick[j] == value_divisors[j].size()) {
      pick[j] = 0;
      ++j;
    }
    if (j == pick.size()) return false;
  }
}

void factor_squarefree(Poly p, std::vector<Poly>& out) {
  p = primitive_positive(std::move(p));
  if (degree(p) <= 0) return;
  std::vector<Poly> linear;
  extract_rational_roots(p, linear);
  for (auto& l : linear) out.push_back(primitive_positive(std::move(l)));
  int d = degree(p);
  if (d <= 0) return;
  // No rational roots remain, so quadratics and cubics are irreducible and
  // anything larger either splits through Kronecker or is irreducible too.
  for (int e = 2; e <= d / 2; ++e)
    if (kronecker_split(p, e, out)) return;
  out.push_back(std::move(p));
}

bool poly_lex_less(const Poly& a, const Poly& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  for (std::size_t i = a.size(); i-- > 0;) {
    if (a[i] != b[i]) return a[i] < b[i];
  }
  return false;
}

}  // namespace

UnivariateFactorization factor_univariate(const LaurentPolynomial& p) {
  if (p.dim() != 1) throw std::invalid_argument("factor_univariate: polynomial must be univariate");
  if (p.is_zero()) throw std::invalid_argument("factor_univariate: zero polynomial");

  Int lo = p.terms().begin()->first(0);
  Int hi = p.terms().rbegin()->first(0);
  std::size_t span = static_cast<std::size_t>(hi - lo) + 1;

  Int denom = 1;
  std::vector<Rat> rat_coeffs(span, Rat(0));
  for (const auto& [e, c] : p.terms()) {
    rat_coeffs[static_cast<std::size_t>(e(0) - lo)] = c;
    denom = boost::multiprecision::lcm(denom, boost::multiprecision::denominator(c));
  }
  Poly dense(span, Int(0));
  for (std::size_t i = 0; i < span; ++i)
    dense[i] = boost::multiprecision::numerator(rat_coeffs[i] * Rat(denom));
  Int cont = poly_content(dense);
  if (dense.back() < 0) cont = -cont;
  for (Int& c : dense) c /= cont;

  UnivariateFactorization out;
  out.unit_coeff = Rat(cont, denom);
  out.unit_exponent = lo;

  // Yun square-free decomposition, then irreducible factorization per part.
  std::vector<std::pair<Poly, int>> with_mult;
  if (degree(dense) >= 1) {
    Poly g = gcd_pp(dense, derivative(dense));
    Poly b = *exact_div(dense, g);
    Poly c = *exact_div(derivative(dense), g);
    Poly d = c;
    {
      Poly bp = derivative(b);
      Poly nd(std::max(d.size(), bp.size()), Int(0));
      for (std::size_t i = 0; i < d.size(); ++i) nd[i] += d[i];
      for (std::size_t i = 0; i < bp.size(); ++i) nd[i] -= bp[i];
      trim(nd);
      d = std::move(nd);
    }
    int i = 1;
    while (degree(b) > 0) {
      Poly s = gcd_pp(b, d);
      if (degree(s) > 0) with_mult.emplace_back(s, i);
      b = *exact_div(b, s);
      Poly cnext = *exact_div(d, s);
      Poly bp = derivative(b);
      Poly nd(std::max(cnext.size(), bp.size()), Int(0));
      for (std::size_t t = 0; t < cnext.size(); ++t) nd[t] += cnext[t];
      for (std::size_t t = 0; t < bp.size(); ++t) nd[t] -= bp[t];
      trim(nd);
      d = std::move(nd);
      ++i;
    }
  }

  std::vector<std::pair<Poly, int>> factors;
  for (auto& [part, mult] : with_mult) {
    std::vector<Poly> irr;
    factor_squarefree(part, irr);
    for (auto& f : irr) factors.emplace_back(std::move(f), mult);
  }
  std::sort(factors.begin(), factors.end(),
            [](const auto& a, const auto& b) { return poly_lex_less(a.first, b.first); });

  for (auto& [f, mult] : factors) {
    LaurentPolynomial lp(1);
    for (std::size_t i = 0; i < f.size(); ++i) {
      if (f[i] == 0) continue;
      IVec e(1);
      e(0) = Int(i);
      lp.add_term(e, Rat(f[i]));
    }
    out.factors.push_back({std::move(lp), mult});
  }
  return out;
}

}  // namespace fanomut
