#include "smc/lattice.hpp"

#include <algorithm>
#include <ostream>

namespace smc {

std::vector<std::size_t> LatticeRegion::row_profile() const {
  std::vector<std::size_t> rows;
  for (std::size_t n = 0; n < points.size(); ++n) {
    if (n == 0 || points[n].beta != points[n - 1].beta) rows.push_back(0);
    ++rows.back();
  }
  return rows;
}

namespace {

LatticeRegion enumerate(const CurvePresentation& pres, std::int64_t degree, bool interior) {
  if (degree < 0) throw Error(ErrorCode::InvalidArgument, "degree must be nonnegative");
  Triangle tri = triangle(pres);
  LatticeRegion region;
  region.degree = degree;
  region.interior = interior;
  if (degree == 0 && interior) return region;

  // Rational vertex bounds on beta for d*Delta.
  auto vertices = triangle_vertices(tri);
  Rational lo = vertices[0].y, hi = vertices[0].y;
  for (const auto& v : vertices) {
    lo = std::min(lo, v.y);
    hi = std::max(hi, v.y);
  }
  lo *= degree;
  hi *= degree;
  BigInt beta_min, beta_max;
  mpz_cdiv_q(beta_min.get_mpz_t(), lo.get_num_mpz_t(), lo.get_den_mpz_t());
  mpz_fdiv_q(beta_max.get_mpz_t(), hi.get_num_mpz_t(), hi.get_den_mpz_t());

  const std::int64_t slack = interior ? 1 : 0;
  const std::int64_t s2 = pres.s2, s3 = pres.s3, t = pres.t, t3 = pres.t3, u = pres.u, u2 = pres.u2;
  const UnitExponents& e = pres.unit;
  for (std::int64_t beta = beta_max.get_si(); beta >= beta_min.get_si(); --beta) {
    // s2*alpha >= s3*beta - a'd + slack; u2*alpha >= -u*beta - c'd + slack;
    // t*alpha <= b'd - t3*beta - slack.
    std::int64_t alpha_lo = std::max(ceil_div(s3 * beta - e.a * degree + slack, s2),
                                     ceil_div(-u * beta - e.c * degree + slack, u2));
    std::int64_t alpha_hi = floor_div(e.b * degree - t3 * beta - slack, t);
    for (std::int64_t alpha = alpha_lo; alpha <= alpha_hi; ++alpha) {
      region.points.push_back({alpha, beta});
    }
  }
  return region;
}

}  // namespace

LatticeRegion enumerate_points(const CurvePresentation& pres, std::int64_t degree) {
  return enumerate(pres, degree, false);
}

LatticeRegion interior_points(const CurvePresentation& pres, std::int64_t degree) {
  return enumerate(pres, degree, true);
}

Monomial point_to_monomial(const CurvePresentation& pres, const LatticePoint& p, std::int64_t degree) {
  if (pres.complete_intersection) {
    throw Error(ErrorCode::CompleteIntersection, "no lattice encoding for a complete intersection");
  }
  std::int64_t i = pres.s2 * p.alpha - pres.s3 * p.beta + pres.unit.a * degree;
  std::int64_t j = -pres.t * p.alpha - pres.t3 * p.beta + pres.unit.b * degree;
  std::int64_t k = pres.u2 * p.alpha + pres.u * p.beta + pres.unit.c * degree;
  if (i < 0 || j < 0 || k < 0) {
    throw Error(ErrorCode::OutsideRegion, "(" + std::to_string(p.alpha) + "," + std::to_string(p.beta) +
                                              ") lies outside " + std::to_string(degree) + "*Delta");
  }
  return {static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(j), static_cast<std::uint32_t>(k)};
}

std::int64_t weighted_degree(const Weights& w, const Monomial& m) {
  return w.a * m.i + w.b * m.j + w.c * m.k;
}

PointAndDegree monomial_to_point(const CurvePresentation& pres, const Monomial& m) {
  if (pres.complete_intersection) {
    throw Error(ErrorCode::CompleteIntersection, "no lattice encoding for a complete intersection");
  }
  const std::int64_t d = weighted_degree(pres.weights, m);
  // s2*alpha - s3*beta = i - a'd ; -t*alpha - t3*beta = j - b'd (Cramer).
  const std::int64_t r1 = static_cast<std::int64_t>(m.i) - pres.unit.a * d;
  const std::int64_t r2 = static_cast<std::int64_t>(m.j) - pres.unit.b * d;
  const std::int64_t det = pres.s2 * (-pres.t3) - (-pres.s3) * (-pres.t);
  const std::int64_t num_alpha = r1 * (-pres.t3) - (-pres.s3) * r2;
  const std::int64_t num_beta = pres.s2 * r2 - (-pres.t) * r1;
  if (det == 0 || num_alpha % det != 0 || num_beta % det != 0) {
    throw Error(ErrorCode::InvalidArgument, "lattice system is not integrally solvable");
  }
  LatticePoint p{num_alpha / det, num_beta / det};
  if (pres.u2 * p.alpha + pres.u * p.beta + pres.unit.c * d != static_cast<std::int64_t>(m.k)) {
    throw Error(ErrorCode::InvalidArgument, "inconsistent lattice system");
  }
  return {p, d};
}

std::int64_t denumerant(const Weights& w, std::int64_t degree) {
  if (degree < 0) return 0;
  std::int64_t count = 0;
  for (std::int64_t j = 0; j * w.b <= degree; ++j) {
    for (std::int64_t k = 0; j * w.b + k * w.c <= degree; ++k) {
      if ((degree - j * w.b - k * w.c) % w.a == 0) ++count;
    }
  }
  return count;
}

void dump_region(std::ostream& os, const CurvePresentation& pres, const LatticeRegion& region) {
  for (const auto& p : region.points) {
    Monomial m = point_to_monomial(pres, p, region.degree);
    os << p.alpha << ' ' << p.beta << ' ' << m.i << ' ' << m.j << ' ' << m.k << '\n';
  }
}

}  // namespace smc
