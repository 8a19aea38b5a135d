#pragma once

#include <array>
#include <cstdint>
#include <string>

#include "smc/exactmath.hpp"

namespace smc {

struct Weights {
  std::int64_t a = 0;
  std::int64_t b = 0;
  std::int64_t c = 0;

  std::int64_t product() const { return a * b * c; }
  std::int64_t sum() const { return a + b + c; }
  friend bool operator==(const Weights&, const Weights&) = default;
};

/// Throws NotPairwiseCoprime (or InvalidArgument for non-positive weights).
void require_pairwise_coprime(const Weights& w);

struct UnitExponents {
  std::int64_t a = 0;  // a' in T = x^a' y^b' z^c'
  std::int64_t b = 0;
  std::int64_t c = 0;
  friend bool operator==(const UnitExponents&, const UnitExponents&) = default;
};

/// Herzog data of p(a,b,c) = I_2 [[x^s2, y^t3, z^u1], [y^t1, z^u2, x^s3]].
///
/// The three minors are x^s - y^t1 z^u1, y^t - z^u2 x^s2, z^u - x^s3 y^t3.
/// When the ideal is a complete intersection only `s,t,u` and the witnesses
/// found for them are meaningful, and `complete_intersection` is set.
struct CurvePresentation {
  Weights weights;
  std::int64_t s2 = 0, s3 = 0, t1 = 0, t3 = 0, u1 = 0, u2 = 0;
  std::int64_t s = 0, t = 0, u = 0;
  UnitExponents unit;
  bool complete_intersection = false;

  friend bool operator==(const CurvePresentation&, const CurvePresentation&) = default;
};

/// An affine half-plane A*x + B*y + C >= 0 (C is scaled by the degree).
struct HalfPlane {
  std::int64_t A = 0;
  std::int64_t B = 0;
  std::int64_t C = 0;
  friend bool operator==(const HalfPlane&, const HalfPlane&) = default;
};

/// The triangle whose scaled integer points are the monomials of each degree:
/// rows are the x, y and z exponent forms, in that order.
struct Triangle {
  std::array<HalfPlane, 3> rows;
};

struct Vertex {
  Rational x;
  Rational y;
};

UnitExponents unit_exponents(const Weights& w);

CurvePresentation herzog_present(const Weights& w);

/// Same presentation with a caller-chosen unit triple (must satisfy the identity).
CurvePresentation with_unit_exponents(const CurvePresentation& pres, const UnitExponents& unit);

Triangle triangle(const CurvePresentation& pres);

std::array<Vertex, 3> triangle_vertices(const Triangle& tri);
Rational triangle_area(const Triangle& tri);

/// Smallest n >= 1 with n*a in the semigroup generated by b and c, together
/// with the witness (j, k) minimizing j. Brute force; used by tests and herzog_present.
struct SemigroupHit {
  std::int64_t n = 0;
  std::int64_t first = 0;
  std::int64_t second = 0;
};
SemigroupHit minimal_multiple_in_semigroup(std::int64_t a, std::int64_t b, std::int64_t c);

bool in_semigroup(std::int64_t value, std::int64_t b, std::int64_t c);

std::string describe(const CurvePresentation& pres);

}  // namespace smc
