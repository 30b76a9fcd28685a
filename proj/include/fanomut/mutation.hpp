#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "fanomut/laurent.hpp"
#include "fanomut/polytope.hpp"

namespace fanomut {

enum class IrreducibilityStatus { VerifiedIrreducible, VerifiedPower, Unverified };

// Datum (u, h) acting on Laurent polynomials by x^n -> x^n h^<u,n>.
struct AlgebraicMutationData {
  IVec u;
  LaurentPolynomial h;
  IrreducibilityStatus irreducibility_status;
};

// Validates and classifies a datum: u primitive, every exponent of h pairing
// to zero with u, h neither zero nor a monomial other than 1. When the
// support of h lies on a line the factor is factored exactly and reducible
// factors are rejected; a factor spanning more dimensions is accepted as
// Unverified, with an explanation written to *warning when given.
AlgebraicMutationData make_algebraic_mutation(const IVec& u, const LaurentPolynomial& h,
                                              std::string* warning = nullptr);

// Datum (u, H) acting on lattice polytopes level set by level set.
struct CombinatorialMutationData {
  IVec u;
  LatticePolytope H;
};

CombinatorialMutationData make_combinatorial_mutation(const IVec& u, const LatticePolytope& H);

inline AlgebraicMutationData invert(const AlgebraicMutationData& mu) {
  return AlgebraicMutationData{-mu.u, mu.h, mu.irreducibility_status};
}

inline CombinatorialMutationData invert(const CombinatorialMutationData& mu) {
  return CombinatorialMutationData{-mu.u, mu.H};
}

// Success holds the mutated polynomial plus a per-height certificate mapping
// each occupied height k to the exact image f_k * h^k of that component.
// Failure names the most negative height whose component h^|k| does not
// divide.
struct AlgebraicOutcome {
  std::optional<LaurentPolynomial> result;
  std::optional<Int> failing_height;
  std::map<Int, LaurentPolynomial> certificate;
};

AlgebraicOutcome apply_algebraic(const AlgebraicMutationData& mu, const LaurentPolynomial& f);

bool is_mutable(const LaurentPolynomial& f, const AlgebraicMutationData& mu);

// One audited height of a combinatorial mutation: the hull of the lattice
// points of P at that height, and at negative heights the co-factor G_k
// actually used.
struct HeightRecord {
  Int height;
  std::optional<LatticePolytope> slice;
  std::optional<LatticePolytope> cofactor;
};

struct RawMutationOutcome {
  std::optional<LatticePolytope> result;
  std::optional<Int> failing_height;
  std::vector<HeightRecord> certificate;
};

// Level-set mutation of an arbitrary lattice polytope: at each height k < 0
// take the largest integral co-factor G_k with G_k + |k|H inside the slice,
// require the vertices of P there to be covered by G_k + |k|H, and hull the
// G_k together with the nonnegative slices shifted by k*H. Polygons are
// mutated through a sheared-frame closed form touching only vertex heights,
// so coordinates may be astronomically large; other shapes walk every level.
RawMutationOutcome mutate_lattice_polytope(const CombinatorialMutationData& mu,
                                           const LatticePolytope& P);

// The direct level-by-level construction in any dimension. Reference engine:
// slower, but independent of the polygon closed form.
RawMutationOutcome mutate_lattice_polytope_by_levels(const CombinatorialMutationData& mu,
                                                     const LatticePolytope& P);

// Rebuilds the result polytope from a certificate alone.
LatticePolytope replay_certificate(const CombinatorialMutationData& mu,
                                   const std::vector<HeightRecord>& certificate);

struct CombinatorialOutcome {
  std::optional<FanoPolytope> result;
  std::optional<Int> failing_height;
  std::vector<HeightRecord> certificate;
};

// Fano-to-Fano wrapper around mutate_lattice_polytope; a defined mutation of
// a Fano polytope is again Fano, and this is asserted, never assumed.
CombinatorialOutcome apply_combinatorial(const CombinatorialMutationData& mu,
                                         const FanoPolytope& P);

// True when mutating the Newton polytope of f by (u, Newt h) is defined and
// lands on the Newton polytope of the mutated polynomial. Requires f mutable.
bool newton_compatibility(const LaurentPolynomial& f, const AlgebraicMutationData& mu);

// Polar dual of the mutated polytope; throws when the mutation is undefined.
RationalPolytope dual_image(const FanoPolytope& P, const CombinatorialMutationData& mu);

}  // namespace fanomut
