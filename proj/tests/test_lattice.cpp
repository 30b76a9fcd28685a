#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "fanomut/lattice.hpp"

using namespace fanomut;

TEST_CASE("pairing evaluates the exact dot product") {
  CHECK(pairing(ivec({-1, -1}), ivec({1, 0})) == Int(-1));
  CHECK(pairing(ivec({0, 1}), ivec({-1, -1})) == Int(-1));
  CHECK(pairing(ivec({7, -3}), ivec({0, 0})) == Int(0));
  CHECK_THROWS_AS(pairing(ivec({1, 2}), ivec({1, 2, 3})), std::invalid_argument);
}

TEST_CASE("is_primitive matches the gcd criterion") {
  CHECK(is_primitive(ivec({-1, -1})));
  CHECK_FALSE(is_primitive(ivec({2, -2})));
  CHECK(is_primitive(ivec({0, 1, 0})));
  CHECK_THROWS_AS(is_primitive(ivec({0, 0})), std::invalid_argument);
}

TEST_CASE("is_primitive agrees with brute-force multiple detection") {
  // v is primitive iff it is not k*w for an integer k >= 2 and lattice w.
  for (long long a = -6; a <= 6; ++a)
    for (long long b = -6; b <= 6; ++b) {
      if (a == 0 && b == 0) continue;
      bool multiple = false;
      for (long long k = 2; k <= 12 && !multiple; ++k)
        if (a % k == 0 && b % k == 0) multiple = true;
      CHECK(is_primitive(ivec({a, b})) == !multiple);
    }
}

TEST_CASE("ext_gcd returns a valid nonnegative Bezout triple") {
  std::mt19937_64 rng(7001);
  std::uniform_int_distribution<long long> d(-50, 50);
  for (int trial = 0; trial < 500; ++trial) {
    Int a(d(rng)), b(d(rng));
    ExtGcd e = ext_gcd(a, b);
    CHECK(e.g == boost::multiprecision::gcd(a, b));
    CHECK(e.g == a * e.x + b * e.y);
    CHECK(e.g >= 0);
  }
}

TEST_CASE("perp_basis reproduces the pinned bases") {
  PerpBasis b = perp_basis(ivec({-1, -1}));
  REQUIRE(b.vectors.size() == 1);
  CHECK(vec_eq(b.vectors[0], ivec({1, -1})));

  PerpBasis b2 = perp_basis(ivec({1, 0}));
  REQUIRE(b2.vectors.size() == 1);
  CHECK(vec_eq(b2.vectors[0], ivec({0, 1})));

  PerpBasis b3 = perp_basis(ivec({1, 0, 0}));
  REQUIRE(b3.vectors.size() == 2);
  CHECK(vec_eq(b3.vectors[0], ivec({0, 1, 0})));
  CHECK(vec_eq(b3.vectors[1], ivec({0, 0, 1})));

  CHECK_THROWS_AS(perp_basis(ivec({2, 4})), std::invalid_argument);
}

TEST_CASE("perp_basis is orthogonal, saturated, and deterministic") {
  std::mt19937_64 rng(7002);
  std::uniform_int_distribution<long long> d(-9, 9);
  int done = 0;
  while (done < 200) {
    int n = 2 + (done % 2);  // dimensions 2 and 3
    IVec u(n);
    for (int i = 0; i < n; ++i) u(i) = Int(d(rng));
    if (content(u) != 1) continue;
    ++done;

    PerpBasis b = perp_basis(u);
    REQUIRE(static_cast<int>(b.vectors.size()) == n - 1);
    for (const IVec& w : b.vectors) CHECK(pairing(u, w) == Int(0));

    // Saturation: the basis matrix has all elementary divisors equal to 1,
    // so every lattice vector annihilated by u is an integer combination.
    IMat B(n, n - 1);
    for (int j = 0; j < n - 1; ++j) B.col(j) = b.vectors[j];
    std::vector<Int> divs = elementary_divisors(B);
    REQUIRE(static_cast<int>(divs.size()) == n - 1);
    for (const Int& dvr : divs) CHECK(dvr == 1);

    CHECK(is_unimodular(b.frame));
    PerpBasis again = perp_basis(u);
    for (int j = 0; j < n - 1; ++j) CHECK(vec_eq(again.vectors[j], b.vectors[j]));
  }
}

TEST_CASE("integer_kernel finds saturated kernels") {
  IMat M(1, 3);
  M << Int(2), Int(3), Int(5);
  IMat K = integer_kernel(M);
  REQUIRE(K.cols() == 2);
  for (Eigen::Index j = 0; j < K.cols(); ++j) {
    Int s = 0;
    for (Eigen::Index i = 0; i < 3; ++i) s += M(0, i) * K(i, j);
    CHECK(s == 0);
  }
  std::vector<Int> divs = elementary_divisors(K);
  REQUIRE(divs.size() == 2);
  CHECK(divs[0] == 1);
  CHECK(divs[1] == 1);

  IMat M2(2, 2);
  M2 << Int(1), Int(0), Int(0), Int(1);
  CHECK(integer_kernel(M2).cols() == 0);
}

TEST_CASE("elementary_divisors on known matrices") {
  IMat A(2, 2);
  A << Int(2), Int(4), Int(6), Int(8);
  std::vector<Int> d = elementary_divisors(A);
  REQUIRE(d.size() == 2);
  CHECK(d[0] == 2);
  CHECK(d[1] == 4);  // det 2*8-4*6 = -8, d1*d2 = 8

  IMat B(2, 3);
  B << Int(1), Int(0), Int(0), Int(0), Int(3), Int(0);
  d = elementary_divisors(B);
  REQUIRE(d.size() == 2);
  CHECK(d[0] == 1);
  CHECK(d[1] == 3);
}

TEST_CASE("hermite_row_form is canonical and witnessed") {
  std::mt19937_64 rng(7003);
  std::uniform_int_distribution<long long> d(-9, 9);
  for (int trial = 0; trial < 200; ++trial) {
    int n = 2 + (trial % 2), m = n + 1 + (trial % 3);
    IMat A(n, m);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < m; ++j) A(i, j) = Int(d(rng));

    HermiteForm f = hermite_row_form(A);
    CHECK(is_unimodular(f.u));
    IMat prod = f.u * A;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < m; ++j) CHECK(prod(i, j) == f.h(i, j));

    // Canonical: invariant under random unimodular left multiplication.
    IMat T = IMat::Identity(n, n);
    for (int s = 0; s < 6; ++s) {
      int a = static_cast<int>(rng() % n), b = static_cast<int>(rng() % n);
      if (a == b) continue;
      T.row(a) += Int((rng() % 5) - 2) * T.row(b);
    }
    HermiteForm g = hermite_row_form(T * A);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < m; ++j) CHECK(g.h(i, j) == f.h(i, j));
  }
}

TEST_CASE("rational solve, determinant, and unimodular inverse") {
  QMat A(2, 2);
  A << Rat(1), Rat(2), Rat(3), Rat(4);
  QVec b(2);
  b << Rat(5), Rat(11);
  auto x = solve_linear(A, b);
  REQUIRE(x.has_value());
  CHECK((*x)(0) == Rat(1));
  CHECK((*x)(1) == Rat(2));
  CHECK(determinant(A) == Rat(-2));

  QMat S(2, 2);
  S << Rat(1), Rat(2), Rat(2), Rat(4);
  QVec c(2);
  c << Rat(1), Rat(3);
  CHECK_FALSE(solve_linear(S, c).has_value());

  IMat U(2, 2);
  U << Int(2), Int(1), Int(1), Int(1);
  REQUIRE(is_unimodular(U));
  IMat V = unimodular_inverse(U);
  IMat I2 = U * V;
  CHECK(I2(0, 0) == 1);
  CHECK(I2(0, 1) == 0);
  CHECK(I2(1, 0) == 0);
  CHECK(I2(1, 1) == 1);

  IMat notuni(2, 2);
  notuni << Int(2), Int(0), Int(0), Int(1);
  CHECK_FALSE(is_unimodular(notuni));
  CHECK_THROWS_AS(unimodular_inverse(notuni), std::invalid_argument);
}

TEST_CASE("floor and ceil helpers on integers and rationals") {
  CHECK(floor_div(Int(7), Int(2)) == 3);
  CHECK(floor_div(Int(-7), Int(2)) == -4);
  CHECK(ceil_div(Int(7), Int(2)) == 4);
  CHECK(ceil_div(Int(-7), Int(2)) == -3);
  CHECK(rat_floor(Rat(-1, 2)) == -1);
  CHECK(rat_ceil(Rat(-1, 2)) == 0);
  CHECK(rat_floor(Rat(3)) == 3);
  CHECK(rat_ceil(Rat(3)) == 3);
  CHECK(parse_rational("-3/6") == Rat(-1, 2));
  CHECK(parse_rational("42") == Rat(42));
  CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
  CHECK(to_string(Rat(-1, 2)) == "-1/2");
  CHECK(to_string(Rat(5)) == "5");
}
