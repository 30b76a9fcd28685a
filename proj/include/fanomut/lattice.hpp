#pragma once

#include <optional>
#include <vector>

#include "fanomut/types.hpp"

// Exact lattice linear algebra: dual pairings, primitivity, saturated
// hyperplane bases, integer kernels, Hermite and Smith reductions, and
// unimodular inverses. Everything here is deterministic: the same input
// always produces the same basis, form, and witness.

namespace fanomut {

inline Int pairing(const IVec& u, const IVec& v) {
  if (u.size() != v.size())
    throw std::invalid_argument("pairing: dimension mismatch");
  Int s = 0;
  for (Eigen::Index i = 0; i < u.size(); ++i) s += u(i) * v(i);
  return s;
}

inline Int content(const IVec& v) {
  Int g = 0;
  for (Eigen::Index i = 0; i < v.size(); ++i) g = boost::multiprecision::gcd(g, v(i));
  return g;
}

inline bool is_primitive(const IVec& v) {
  Int g = content(v);
  if (g == 0) throw std::invalid_argument("is_primitive: zero vector");
  return g == 1;
}

inline IVec primitive_part(const IVec& v) {
  Int g = content(v);
  if (g == 0) throw std::invalid_argument("primitive_part: zero vector");
  IVec r(v.size());
  for (Eigen::Index i = 0; i < v.size(); ++i) r(i) = v(i) / g;
  return r;
}

struct ExtGcd {
  Int g, x, y;  // g = a*x + b*y, g >= 0
};

inline ExtGcd ext_gcd(Int a, Int b) {
  Int old_r = a, r = b;
  Int old_s = 1, s = 0;
  Int old_t = 0, t = 1;
  while (r != 0) {
    Int q = old_r / r;
    Int tmp = old_r - q * r; old_r = r; r = tmp;
    tmp = old_s - q * s; old_s = s; s = tmp;
    tmp = old_t - q * t; old_t = t; t = tmp;
  }
  if (old_r < 0) { old_r = -old_r; old_s = -old_s; old_t = -old_t; }
  return {old_r, old_s, old_t};
}

// Unimodular U with u^T U = (g, 0, ..., 0) where g = content(u) > 0.
// Columns 1..n-1 form a saturated basis of the annihilator of u in the
// lattice; column 0 pairs to g with u.
inline IMat hyperplane_frame(const IVec& u) {
  const Eigen::Index n = u.size();
  if (n == 0) throw std::invalid_argument("hyperplane_frame: empty vector");
  if (content(u) == 0) throw std::invalid_argument("hyperplane_frame: zero vector");
  IMat U = IMat::Identity(n, n);
  IVec a = u;
  for (Eigen::Index i = 1; i < n; ++i) {
    if (a(i) == 0) continue;
    ExtGcd e = ext_gcd(a(0), a(i));
    IVec c0 = U.col(0), ci = U.col(i);
    Int q0 = a(i) / e.g, qi = a(0) / e.g;
    U.col(0) = e.x * c0 + e.y * ci;
    U.col(i) = -q0 * c0 + qi * ci;
    a(0) = e.g;
    a(i) = 0;
  }
  if (a(0) < 0) U.col(0) = -U.col(0);
  return U;
}

struct PerpBasis {
  IVec anchor;                // the dual vector the basis annihilates
  std::vector<IVec> vectors;  // ordered saturated basis of its kernel lattice
  IMat frame;                 // unimodular; col 0 pairs to 1, cols 1.. are the basis
};

inline PerpBasis perp_basis(const IVec& u) {
  if (!is_primitive(u))
    throw std::invalid_argument("perp_basis: vector must be primitive");
  PerpBasis b;
  b.anchor = u;
  b.frame = hyperplane_frame(u);
  for (Eigen::Index j = 1; j < u.size(); ++j) b.vectors.push_back(b.frame.col(j));
  return b;
}

// Saturated basis of { x : M x = 0 } as columns of the returned matrix.
inline IMat integer_kernel(const IMat& M) {
  const Eigen::Index rows = M.rows(), n = M.cols();
  IMat U = IMat::Identity(n, n);
  IMat A = M;
  Eigen::Index pivot = 0;
  for (Eigen::Index r = 0; r < rows && pivot < n; ++r) {
    for (Eigen::Index j = pivot + 1; j < n; ++j) {
      if (A(r, j) == 0) continue;
      ExtGcd e = ext_gcd(A(r, pivot), A(r, j));
      Int q0 = A(r, j) / e.g, qj = A(r, pivot) / e.g;
      IVec a0 = A.col(pivot), aj = A.col(j);
      A.col(pivot) = e.x * a0 + e.y * aj;
      A.col(j) = -q0 * a0 + qj * aj;
      IVec u0 = U.col(pivot), uj = U.col(j);
      U.col(pivot) = e.x * u0 + e.y * uj;
      U.col(j) = -q0 * u0 + qj * uj;
    }
    if (A(r, pivot) != 0) ++pivot;
  }
  IMat K(n, n - pivot);
  for (Eigen::Index j = pivot; j < n; ++j) K.col(j - pivot) = U.col(j);
  return K;
}

// Nonzero elementary divisors d1 | d2 | ... of an integer matrix.
inline std::vector<Int> elementary_divisors(IMat A) {
  using boost::multiprecision::abs;
  std::vector<Int> divisors;
  Eigen::Index t = 0;
  const Eigen::Index rows = A.rows(), cols = A.cols();
  while (t < rows && t < cols) {
    Eigen::Index pi = -1, pj = -1;
    Int best = 0;
    for (Eigen::Index i = t; i < rows; ++i)
      for (Eigen::Index j = t; j < cols; ++j)
        if (A(i, j) != 0 && (best == 0 || abs(A(i, j)) < best)) {
          best = abs(A(i, j));
          pi = i; pj = j;
        }
    if (pi < 0) break;
    A.row(t).swap(A.row(pi));
    A.col(t).swap(A.col(pj));
    bool clean = true;
    for (Eigen::Index i = t + 1; i < rows; ++i) {
      if (A(i, t) == 0) continue;
      Int q = A(i, t) / A(t, t);
      A.row(i) -= q * A.row(t);
      if (A(i, t) != 0) clean = false;
    }
    for (Eigen::Index j = t + 1; j < cols; ++j) {
      if (A(t, j) == 0) continue;
      Int q = A(t, j) / A(t, t);
      A.col(j) -= q * A.col(t);
      if (A(t, j) != 0) clean = false;
    }
    if (!clean) continue;  // remainder left somewhere, repeat with smaller pivot
    bool divides_all = true;
    for (Eigen::Index i = t + 1; i < rows && divides_all; ++i)
      for (Eigen::Index j = t + 1; j < cols && divides_all; ++j)
        if (A(i, j) % A(t, t) != 0) {
          A.row(t) += A.row(i);
          divides_all = false;
        }
    if (!divides_all) continue;
    divisors.push_back(abs(A(t, t)));
    ++t;
  }
  return divisors;
}

struct HermiteForm {
  IMat h;  // the canonical form, h = u * input
  IMat u;  // unimodular row-operation witness
};

// Row-style Hermite normal form: pivots positive, entries below a pivot
// zero, entries above reduced into [0, pivot). Canonical for the orbit of
// the input under left multiplication by unimodular matrices.
inline HermiteForm hermite_row_form(const IMat& A) {
  const Eigen::Index n = A.rows(), m = A.cols();
  HermiteForm f{A, IMat::Identity(n, n)};
  Eigen::Index pr = 0;
  for (Eigen::Index j = 0; j < m && pr < n; ++j) {
    for (Eigen::Index i = pr + 1; i < n; ++i) {
      if (f.h(i, j) == 0) continue;
      ExtGcd e = ext_gcd(f.h(pr, j), f.h(i, j));
      Int qp = f.h(i, j) / e.g, qi = f.h(pr, j) / e.g;
      Eigen::RowVectorX<Int> hp = f.h.row(pr), hi = f.h.row(i);
      f.h.row(pr) = e.x * hp + e.y * hi;
      f.h.row(i) = -qp * hp + qi * hi;
      Eigen::RowVectorX<Int> up = f.u.row(pr), ui = f.u.row(i);
      f.u.row(pr) = e.x * up + e.y * ui;
      f.u.row(i) = -qp * up + qi * ui;
    }
    if (f.h(pr, j) == 0) continue;
    if (f.h(pr, j) < 0) {
      f.h.row(pr) = -f.h.row(pr);
      f.u.row(pr) = -f.u.row(pr);
    }
    for (Eigen::Index i = 0; i < pr; ++i) {
      Int q = floor_div(f.h(i, j), f.h(pr, j));
      if (q == 0) continue;
      f.h.row(i) -= q * f.h.row(pr);
      f.u.row(i) -= q * f.u.row(pr);
    }
    ++pr;
  }
  return f;
}

// Exact Gaussian elimination over the rationals.
inline std::optional<QVec> solve_linear(QMat A, QVec b) {
  const Eigen::Index rows = A.rows(), cols = A.cols();
  if (b.size() != rows) throw std::invalid_argument("solve_linear: dimension mismatch");
  std::vector<Eigen::Index> pivot_col;
  Eigen::Index pr = 0;
  for (Eigen::Index j = 0; j < cols && pr < rows; ++j) {
    Eigen::Index sel = -1;
    for (Eigen::Index i = pr; i < rows; ++i)
      if (A(i, j) != 0) { sel = i; break; }
    if (sel < 0) continue;
    A.row(pr).swap(A.row(sel));
    std::swap(b(pr), b(sel));
    for (Eigen::Index i = 0; i < rows; ++i) {
      if (i == pr || A(i, j) == 0) continue;
      Rat factor = A(i, j) / A(pr, j);
      A.row(i) -= factor * A.row(pr);
      b(i) -= factor * b(pr);
    }
    pivot_col.push_back(j);
    ++pr;
  }
  for (Eigen::Index i = pr; i < rows; ++i)
    if (b(i) != 0) return std::nullopt;  // inconsistent
  QVec x = QVec::Zero(cols);
  for (Eigen::Index i = 0; i < pr; ++i) x(pivot_col[i]) = b(i) / A(i, pivot_col[i]);
  return x;
}

inline Rat determinant(QMat A) {
  if (A.rows() != A.cols()) throw std::invalid_argument("determinant: square matrix required");
  const Eigen::Index n = A.rows();
  Rat det = 1;
  for (Eigen::Index j = 0; j < n; ++j) {
    Eigen::Index sel = -1;
    for (Eigen::Index i = j; i < n; ++i)
      if (A(i, j) != 0) { sel = i; break; }
    if (sel < 0) return Rat(0);
    if (sel != j) {
      A.row(j).swap(A.row(sel));
      det = -det;
    }
    det *= A(j, j);
    for (Eigen::Index i = j + 1; i < n; ++i) {
      if (A(i, j) == 0) continue;
      Rat factor = A(i, j) / A(j, j);
      A.row(i) -= factor * A.row(j);
    }
  }
  return det;
}

inline Int determinant(const IMat& A) {
  Rat d = determinant(to_rational(A));
  if (!rat_is_integral(d)) throw std::logic_error("determinant: integer matrix with fractional determinant");
  return boost::multiprecision::numerator(d);
}

inline bool is_unimodular(const IMat& A) {
  if (A.rows() != A.cols()) return false;
  Int d = determinant(A);
  return d == 1 || d == -1;
}

inline QMat rational_inverse(const QMat& A) {
  if (A.rows() != A.cols()) throw std::invalid_argument("rational_inverse: square matrix required");
  const Eigen::Index n = A.rows();
  QMat work = A, inv = QMat::Identity(n, n);
  for (Eigen::Index j = 0; j < n; ++j) {
    Eigen::Index sel = -1;
    for (Eigen::Index i = j; i < n; ++i)
      if (work(i, j) != 0) { sel = i; break; }
    if (sel < 0) throw std::invalid_argument("rational_inverse: singular matrix");
    work.row(j).swap(work.row(sel));
    inv.row(j).swap(inv.row(sel));
    Rat pivot = work(j, j);
    work.row(j) /= pivot;
    inv.row(j) /= pivot;
    for (Eigen::Index i = 0; i < n; ++i) {
      if (i == j || work(i, j) == 0) continue;
      Rat factor = work(i, j);
      work.row(i) -= factor * work.row(j);
      inv.row(i) -= factor * inv.row(j);
    }
  }
  return inv;
}

inline IMat unimodular_inverse(const IMat& A) {
  if (!is_unimodular(A)) throw std::invalid_argument("unimodular_inverse: matrix is not unimodular");
  return to_integral(rational_inverse(to_rational(A)));
}

}  // namespace fanomut
