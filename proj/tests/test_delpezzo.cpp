#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <random>
#include <set>
#include <utility>

#include "fanomut/delpezzo.hpp"
#include "fanomut/mutation.hpp"
#include "harness.hpp"

using namespace fanomut;

namespace {

FanoPolytope triangle(std::initializer_list<std::pair<long long, long long>> pts) {
  std::vector<IVec> vs;
  for (auto [x, y] : pts) vs.push_back(ivec({x, y}));
  return FanoPolytope(hull(vs));
}

// Exhaustive search for a^2 + b^2 + c^2 = 3abc with a <= b <= c <= bound.
std::vector<MarkovTriple> markov_by_search(long long bound) {
  std::vector<MarkovTriple> out;
  for (long long a = 1; a <= bound; ++a)
    for (long long b = a; b <= bound; ++b)
      for (long long c = b; c <= bound; ++c)
        if (a * a + b * b + c * c == 3 * a * b * c)
          out.push_back({Int(a), Int(b), Int(c)});
  return out;
}

bool markov_equation(const MarkovTriple& t) {
  return t.a * t.a + t.b * t.b + t.c * t.c == 3 * t.a * t.b * t.c;
}

// Lattice points lying on some edge of the polygon.
long long boundary_point_count(const FanoPolytope& P) {
  auto fs = facets(P.base());
  long long n = 0;
  for (const IVec& p : lattice_points(P.base())) {
    for (const auto& f : fs) {
      if (pairing(f.normal, p) == f.offset) {
        ++n;
        break;
      }
    }
  }
  return n;
}

std::multiset<std::pair<Int, Int>> residues(const FanoPolytope& P) {
  std::multiset<std::pair<Int, Int>> out;
  for (const auto& e : edge_data(P).edges)
    if (e.rbar != 0) out.insert({e.r, e.rbar});
  return out;
}

}  // namespace

TEST_CASE("edge decomposition of the reference triangles") {
  auto p2 = edge_data(triangle({{1, 0}, {0, 1}, {-1, -1}}));
  REQUIRE(p2.edges.size() == 3);
  for (const auto& e : p2.edges) CHECK(e == EdgeData{1, 1, 1, 0});
  CHECK(p2.class_T);
  CHECK(p2.blowup_degree == 3);

  // Vertices are stored counterclockwise from the lexicographic minimum, so
  // the edge order below is pinned.
  auto q114 = edge_data(triangle({{0, 1}, {-1, -1}, {1, -3}}));
  REQUIRE(q114.edges.size() == 3);
  CHECK(q114.edges[0] == EdgeData{2, 2, 1, 0});
  CHECK(q114.edges[1] == EdgeData{1, 1, 1, 0});
  CHECK(q114.edges[2] == EdgeData{1, 1, 1, 0});
  CHECK(q114.class_T);
  CHECK(q114.blowup_degree == 3);

  auto q113 = edge_data(triangle({{1, 0}, {0, 1}, {-1, -3}}));
  REQUIRE(q113.edges.size() == 3);
  CHECK(q113.edges[0] == EdgeData{1, 3, 0, 1});
  CHECK(q113.edges[1] == EdgeData{1, 1, 1, 0});
  CHECK(q113.edges[2] == EdgeData{1, 1, 1, 0});
  CHECK_FALSE(q113.class_T);
  CHECK(q113.blowup_degree == 2);

  FanoPolytope hexagon(hull({ivec({1, 0}), ivec({0, 1}), ivec({-1, 0}),
                             ivec({0, -1}), ivec({1, 1}), ivec({-1, -1})}));
  auto hx = edge_data(hexagon);
  REQUIRE(hx.edges.size() == 6);
  for (const auto& e : hx.edges) CHECK(e == EdgeData{1, 1, 1, 0});
  CHECK(is_class_T(hexagon));
  CHECK(blowup_cycle_degree(hexagon) == 6);
}

TEST_CASE("edge invariant l = k*r + rbar and boundary point count") {
  std::mt19937_64 rng(40);
  for (int round = 0; round < 150; ++round) {
    FanoPolytope P = testing::random_fano_polygon(rng, 4);
    auto dec = edge_data(P);
    Int total = 0;
    for (const auto& e : dec.edges) {
      CHECK(e.l >= 1);
      CHECK(e.r >= 1);
      CHECK(e.rbar >= 0);
      CHECK(e.rbar < e.r);
      CHECK(e.l == e.k * e.r + e.rbar);
      total += e.l;
    }
    // Each edge of lattice length l carries l boundary points besides its
    // starting vertex, so the lengths add up to the full boundary count.
    CHECK(total == boundary_point_count(P));
  }
}

TEST_CASE("edge decomposition rejects non-polygons") {
  FanoPolytope cube(hull({ivec({1, 0, 0}), ivec({0, 1, 0}), ivec({0, 0, 1}),
                          ivec({-1, 0, 0}), ivec({0, -1, 0}), ivec({0, 0, -1})}));
  CHECK_THROWS_AS(edge_data(cube), std::invalid_argument);
}

TEST_CASE("markov triples match exhaustive search") {
  auto expected = markov_by_search(30);
  auto got = markov_triples(30);
  REQUIRE(got.size() == 5);
  CHECK(got == expected);
  CHECK(got[0] == MarkovTriple{1, 1, 1});
  CHECK(got[1] == MarkovTriple{1, 1, 2});
  CHECK(got[2] == MarkovTriple{1, 2, 5});
  CHECK(got[3] == MarkovTriple{1, 5, 13});
  CHECK(got[4] == MarkovTriple{2, 5, 29});

  CHECK(markov_triples(1) == std::vector<MarkovTriple>{{1, 1, 1}});
  CHECK(markov_triples(200) == markov_by_search(200));
  CHECK_THROWS_AS(markov_triples(0), std::invalid_argument);
}

TEST_CASE("markov triples are closed under the Vieta exchanges") {
  auto triples = markov_triples(100000);
  std::set<std::array<Int, 3>> in_list;
  for (const auto& t : triples) {
    CHECK(markov_equation(t));
    in_list.insert({t.a, t.b, t.c});
  }
  for (const auto& t : triples) {
    std::array<Int, 3> base{t.a, t.b, t.c};
    for (int i = 0; i < 3; ++i) {
      std::array<Int, 3> next = base;
      next[i] = 3 * base[(i + 1) % 3] * base[(i + 2) % 3] - base[i];
      std::sort(next.begin(), next.end());
      CHECK(markov_equation({next[0], next[1], next[2]}));
      if (next[2] <= 100000) CHECK(in_list.count(next) == 1);
    }
  }
}

TEST_CASE("weight triangles of the small projective planes") {
  FanoPolytope p2 = wps_triangle({1, 1, 1});
  CHECK(canonical_form(p2).bytes ==
        canonical_form(triangle({{1, 0}, {0, 1}, {-1, -1}})).bytes);

  FanoPolytope q114 = wps_triangle({1, 1, 4});
  CHECK(canonical_form(q114).bytes ==
        canonical_form(triangle({{0, 1}, {-1, -1}, {1, -3}})).bytes);

  FanoPolytope q123 = wps_triangle({1, 2, 3});
  CHECK(normalized_volume(polar_dual(q123)) == Rat(6));  // (1+2+3)^2 / (1*2*3)

  CHECK_THROWS_AS(wps_triangle({2, 2, 1}), std::invalid_argument);
  CHECK_THROWS_AS(wps_triangle({0, 1, 1}), std::invalid_argument);
}

TEST_CASE("weight triangle construction satisfies the defining relation") {
  std::mt19937_64 rng(41);
  std::uniform_int_distribution<long long> pick(1, 50);
  int done = 0;
  while (done < 200) {
    WeightTriple w{Int(pick(rng)), Int(pick(rng)), Int(pick(rng))};
    if (boost::multiprecision::gcd(w.w0, w.w1) != 1 ||
        boost::multiprecision::gcd(w.w0, w.w2) != 1 ||
        boost::multiprecision::gcd(w.w1, w.w2) != 1)
      continue;
    FanoPolytope T = wps_triangle(w);
    REQUIRE(T.base().vertex_count() == 3);

    // Recover the stated vertex roles: v2 = (0,1), v0 has first coord w1.
    IVec v0, v1, v2;
    for (int j = 0; j < 3; ++j) {
      const IVec& v = T.base().vertex(j);
      if (v(0) == w.w1 && v(0) != 0) v0 = v;
      else if (v(0) == -w.w0) v1 = v;
      else v2 = v;
    }
    if (w.w0 == w.w1 && w.w0 == 1) {  // (1,b0) vs (-1,b1) are unambiguous
      v0 = IVec(), v1 = IVec(), v2 = IVec();
      for (int j = 0; j < 3; ++j) {
        const IVec& v = T.base().vertex(j);
        if (v(0) == 1) v0 = v;
        else if (v(0) == -1) v1 = v;
        else v2 = v;
      }
    }
    REQUIRE(v0.size() == 2);
    REQUIRE(v1.size() == 2);
    REQUIRE(v2.size() == 2);
    CHECK(vec_eq(IVec(w.w0 * v0 + w.w1 * v1 + w.w2 * v2), ivec({0, 0})));
    CHECK(v0(1) >= 0);
    CHECK(v0(1) < w.w1);

    std::array<Int, 3> sorted{w.w0, w.w1, w.w2};
    std::sort(sorted.begin(), sorted.end());
    auto back = identify_wps(T);
    REQUIRE(back.has_value());
    CHECK(*back == WeightTriple{sorted[0], sorted[1], sorted[2]});
    ++done;
  }
}

TEST_CASE("weight recovery from reference triangles") {
  auto p2 = identify_wps(triangle({{1, 0}, {0, 1}, {-1, -1}}));
  REQUIRE(p2.has_value());
  CHECK(*p2 == WeightTriple{1, 1, 1});

  auto q114 = identify_wps(triangle({{0, 1}, {-1, -1}, {1, -3}}));
  REQUIRE(q114.has_value());
  CHECK(*q114 == WeightTriple{1, 1, 4});

  auto q113 = identify_wps(triangle({{1, 0}, {0, 1}, {-1, -3}}));
  REQUIRE(q113.has_value());
  CHECK(*q113 == WeightTriple{1, 1, 3});

  FanoPolytope square(hull({ivec({1, 1}), ivec({1, -1}), ivec({-1, 1}),
                            ivec({-1, -1})}));
  CHECK_THROWS_AS(identify_wps(square), std::invalid_argument);
}

TEST_CASE("squared markov weights give class T triangles") {
  for (const auto& t : markov_triples(30)) {
    FanoPolytope T = wps_triangle({t.a * t.a, t.b * t.b, t.c * t.c});
    CHECK(is_class_T(T));
    // Anticanonical degree of the plane with these weights.
    Int s = t.a * t.a + t.b * t.b + t.c * t.c;
    CHECK(normalized_volume(polar_dual(T)) ==
          make_rat(s * s, t.a * t.a * t.b * t.b * t.c * t.c));
  }
}

TEST_CASE("residual edge data survives mutation") {
  std::mt19937_64 rng(42);
  int done = 0;
  while (done < 200) {
    FanoPolytope P = testing::random_fano_polygon(rng);
    auto mv = testing::random_defined_move(rng, P);
    if (!mv) continue;
    auto out = apply_combinatorial(*mv, P);
    REQUIRE(out.result.has_value());
    CHECK(residues(P) == residues(*out.result));
    ++done;
  }
}
