#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "smc/presentation.hpp"

namespace smc {

/// Exponent pair of v^alpha w^beta.
struct LatticePoint {
  std::int64_t alpha = 0;
  std::int64_t beta = 0;

  friend bool operator==(const LatticePoint&, const LatticePoint&) = default;
  friend auto operator<=>(const LatticePoint&, const LatticePoint&) = default;
};

/// Exponents of x^i y^j z^k.
struct Monomial {
  std::uint32_t i = 0;
  std::uint32_t j = 0;
  std::uint32_t k = 0;

  friend bool operator==(const Monomial&, const Monomial&) = default;
  friend auto operator<=>(const Monomial&, const Monomial&) = default;
};

/// Integer points of d*Delta (or its interior), ordered by beta descending
/// then alpha ascending.
struct LatticeRegion {
  std::int64_t degree = 0;
  bool interior = false;
  std::vector<LatticePoint> points;

  std::size_t size() const { return points.size(); }
  /// Point counts per beta row, top to bottom.
  std::vector<std::size_t> row_profile() const;
};

LatticeRegion enumerate_points(const CurvePresentation& pres, std::int64_t degree);
LatticeRegion interior_points(const CurvePresentation& pres, std::int64_t degree);

/// Throws OutsideRegion if any exponent would be negative.
Monomial point_to_monomial(const CurvePresentation& pres, const LatticePoint& p, std::int64_t degree);

struct PointAndDegree {
  LatticePoint point;
  std::int64_t degree = 0;
};
PointAndDegree monomial_to_point(const CurvePresentation& pres, const Monomial& m);

std::int64_t weighted_degree(const Weights& w, const Monomial& m);

/// Number of (i,j,k) >= 0 with a*i + b*j + c*k = d, by direct double loop.
std::int64_t denumerant(const Weights& w, std::int64_t degree);

/// One "alpha beta i j k" line per point.
void dump_region(std::ostream& os, const CurvePresentation& pres, const LatticeRegion& region);

}  // namespace smc
