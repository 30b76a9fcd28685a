#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/multiprecision/eigen.hpp>
#include <Eigen/Dense>

#include <initializer_list>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

// Exact scalar and dense linear-algebra types shared by every module.
// All arithmetic in the library is exact: integers are arbitrary-precision,
// rationals are normalized quotients of such integers. No floating point.

namespace fanomut {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

using IVec = Eigen::Matrix<Int, Eigen::Dynamic, 1>;
using IMat = Eigen::Matrix<Int, Eigen::Dynamic, Eigen::Dynamic>;
using QVec = Eigen::Matrix<Rat, Eigen::Dynamic, 1>;
using QMat = Eigen::Matrix<Rat, Eigen::Dynamic, Eigen::Dynamic>;

inline IVec ivec(std::initializer_list<long long> xs) {
  IVec v(static_cast<Eigen::Index>(xs.size()));
  Eigen::Index i = 0;
  for (long long x : xs) v(i++) = Int(x);
  return v;
}

inline QVec qvec(std::initializer_list<Rat> xs) {
  QVec v(static_cast<Eigen::Index>(xs.size()));
  Eigen::Index i = 0;
  for (const Rat& x : xs) v(i++) = x;
  return v;
}

inline bool vec_eq(const IVec& a, const IVec& b) {
  if (a.size() != b.size()) return false;
  for (Eigen::Index i = 0; i < a.size(); ++i)
    if (a(i) != b(i)) return false;
  return true;
}

inline bool vec_eq(const QVec& a, const QVec& b) {
  if (a.size() != b.size()) return false;
  for (Eigen::Index i = 0; i < a.size(); ++i)
    if (a(i) != b(i)) return false;
  return true;
}

inline bool lex_less(const IVec& a, const IVec& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  for (Eigen::Index i = 0; i < a.size(); ++i) {
    if (a(i) < b(i)) return true;
    if (a(i) > b(i)) return false;
  }
  return false;
}

inline bool lex_less(const QVec& a, const QVec& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  for (Eigen::Index i = 0; i < a.size(); ++i) {
    if (a(i) < b(i)) return true;
    if (a(i) > b(i)) return false;
  }
  return false;
}

struct LexLess {
  bool operator()(const IVec& a, const IVec& b) const { return lex_less(a, b); }
  bool operator()(const QVec& a, const QVec& b) const { return lex_less(a, b); }
};

// Floor/ceil divisions on exact integers. cpp_int's operator/ truncates
// toward zero, which is the wrong rounding for lattice geometry.
inline Int floor_div(const Int& a, const Int& b) {
  if (b == 0) throw std::invalid_argument("floor_div: division by zero");
  Int q = a / b;
  Int r = a - q * b;
  if (r != 0 && ((r < 0) != (b < 0))) --q;
  return q;
}

inline Int ceil_div(const Int& a, const Int& b) {
  if (b == 0) throw std::invalid_argument("ceil_div: division by zero");
  Int q = a / b;
  Int r = a - q * b;
  if (r != 0 && ((r < 0) == (b < 0))) ++q;
  return q;
}

inline Int rat_floor(const Rat& q) {
  return floor_div(boost::multiprecision::numerator(q), boost::multiprecision::denominator(q));
}

inline Int rat_ceil(const Rat& q) {
  return ceil_div(boost::multiprecision::numerator(q), boost::multiprecision::denominator(q));
}

inline bool rat_is_integral(const Rat& q) {
  return boost::multiprecision::denominator(q) == 1;
}

inline QVec to_rational(const IVec& v) {
  QVec q(v.size());
  for (Eigen::Index i = 0; i < v.size(); ++i) q(i) = Rat(v(i));
  return q;
}

inline QMat to_rational(const IMat& m) {
  QMat q(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) q(i, j) = Rat(m(i, j));
  return q;
}

// Exact conversion back to integers; throws if any entry has a denominator.
inline IVec to_integral(const QVec& v) {
  IVec r(v.size());
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (!rat_is_integral(v(i))) throw std::invalid_argument("to_integral: non-integral coordinate");
    r(i) = boost::multiprecision::numerator(v(i));
  }
  return r;
}

inline IMat to_integral(const QMat& m) {
  IMat r(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      if (!rat_is_integral(m(i, j))) throw std::invalid_argument("to_integral: non-integral entry");
      r(i, j) = boost::multiprecision::numerator(m(i, j));
    }
  return r;
}

inline std::string to_string(const Int& x) {
  return x.str();
}

// "p/q" with q > 0 reduced; plain "p" when the denominator is 1.
inline std::string to_string(const Rat& q) {
  std::ostringstream os;
  os << q;
  return os.str();
}

// Exact fraction n/d. The two-argument rational constructor refuses negative
// denominators when the integer type is unbounded, so the sign is moved to
// the numerator before construction.
inline Rat make_rat(Int num, Int den) {
  if (den == 0) throw std::invalid_argument("make_rat: zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  return Rat(num, den);
}

inline Rat parse_rational(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("parse_rational: empty string");
  std::size_t slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rat(Int(s));
    return make_rat(Int(s.substr(0, slash)), Int(s.substr(slash + 1)));
  } catch (const std::exception&) {
    throw std::invalid_argument("parse_rational: malformed rational '" + s + "'");
  }
}

inline std::string to_string(const IVec& v) {
  std::string s = "(";
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += to_string(v(i));
  }
  return s + ")";
}

inline std::string to_string(const QVec& v) {
  std::string s = "(";
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += to_string(v(i));
  }
  return s + ")";
}

}  // namespace fanomut
