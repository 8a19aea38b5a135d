#include "smc/presentation.hpp"

#include <cstdlib>
#include <numeric>
#include <sstream>

namespace smc {

void require_pairwise_coprime(const Weights& w) {
  if (w.a < 1 || w.b < 1 || w.c < 1) {
    throw Error(ErrorCode::InvalidArgument, "weights must be positive");
  }
  auto check = [](std::int64_t p, std::int64_t q, const char* names) {
    if (std::gcd(p, q) != 1) {
      throw Error(ErrorCode::NotPairwiseCoprime,
                  std::string("gcd") + names + " = " + std::to_string(std::gcd(p, q)));
    }
  };
  check(w.a, w.b, "(a,b)");
  check(w.a, w.c, "(a,c)");
  check(w.b, w.c, "(b,c)");
}

UnitExponents unit_exponents(const Weights& w) {
  require_pairwise_coprime(w);
  // Euclid on (a, b), then on (gcd(a,b), c), composed.
  ExtendedGcd ab = extended_gcd(w.a, w.b);
  ExtendedGcd abc = extended_gcd(ab.g, w.c);
  std::int64_t ap = ab.x * abc.x;
  std::int64_t bp = ab.y * abc.x;
  std::int64_t cp = abc.y;
  // Canonical representative: the c' = 0 slice (reachable since gcd(a,b) = 1),
  // |b'| minimal, ties to the smaller a'.
  if (cp != 0) {
    // Move along the syzygy (c*x0, c*y0, -1) with a*x0 + b*y0 = 1.
    ap += ab.x * w.c * cp;
    bp += ab.y * w.c * cp;
    cp = 0;
  }
  // Now a*ap + b*bp = 1; shift by multiples of (b, -a).
  std::int64_t k = floor_div(bp, w.a);
  UnitExponents best{ap + k * w.b, bp - k * w.a, 0};
  for (std::int64_t shift : {k - 1, k + 1, k + 2}) {
    UnitExponents cand{ap + shift * w.b, bp - shift * w.a, 0};
    bool better = std::llabs(cand.b) < std::llabs(best.b) ||
                  (std::llabs(cand.b) == std::llabs(best.b) && cand.a < best.a);
    if (better) best = cand;
  }
  return best;
}

bool in_semigroup(std::int64_t value, std::int64_t b, std::int64_t c) {
  if (value < 0) return false;
  for (std::int64_t j = 0; j * b <= value; ++j) {
    if ((value - j * b) % c == 0) return true;
  }
  return false;
}

SemigroupHit minimal_multiple_in_semigroup(std::int64_t a, std::int64_t b, std::int64_t c) {
  for (std::int64_t n = 1;; ++n) {
    std::int64_t target = n * a;
    for (std::int64_t j = 0; j * b <= target; ++j) {
      if ((target - j * b) % c == 0) return {n, j, (target - j * b) / c};
    }
  }
}

CurvePresentation herzog_present(const Weights& w) {
  require_pairwise_coprime(w);
  CurvePresentation p;
  p.weights = w;
  SemigroupHit hs = minimal_multiple_in_semigroup(w.a, w.b, w.c);
  SemigroupHit ht = minimal_multiple_in_semigroup(w.b, w.a, w.c);
  SemigroupHit hu = minimal_multiple_in_semigroup(w.c, w.a, w.b);
  p.s = hs.n;
  p.t1 = hs.first;
  p.u1 = hs.second;
  p.t = ht.n;
  p.s2 = ht.first;
  p.u2 = ht.second;
  p.u = hu.n;
  p.s3 = hu.first;
  p.t3 = hu.second;
  p.unit = unit_exponents(w);
  bool zero_exponent = p.s2 == 0 || p.s3 == 0 || p.t1 == 0 || p.t3 == 0 || p.u1 == 0 || p.u2 == 0;
  bool sums_mismatch = p.s != p.s2 + p.s3 || p.t != p.t1 + p.t3 || p.u != p.u1 + p.u2;
  p.complete_intersection = zero_exponent || sums_mismatch;
  return p;
}

CurvePresentation with_unit_exponents(const CurvePresentation& pres, const UnitExponents& unit) {
  const Weights& w = pres.weights;
  if (unit.a * w.a + unit.b * w.b + unit.c * w.c != 1) {
    throw Error(ErrorCode::InvalidArgument, "unit exponents do not satisfy a*a' + b*b' + c*c' = 1");
  }
  CurvePresentation out = pres;
  out.unit = unit;
  return out;
}

Triangle triangle(const CurvePresentation& pres) {
  if (pres.complete_intersection) {
    throw Error(ErrorCode::CompleteIntersection,
                "p(" + std::to_string(pres.weights.a) + "," + std::to_string(pres.weights.b) + "," +
                    std::to_string(pres.weights.c) + ") is generated by two elements");
  }
  Triangle tri;
  tri.rows[0] = {pres.s2, -pres.s3, pres.unit.a};
  tri.rows[1] = {-pres.t, -pres.t3, pres.unit.b};
  tri.rows[2] = {pres.u2, pres.u, pres.unit.c};
  return tri;
}

namespace {

Vertex intersect(const HalfPlane& p, const HalfPlane& q) {
  // A1 x + B1 y = -C1, A2 x + B2 y = -C2.
  BigInt det = BigInt(static_cast<long>(p.A)) * q.B - BigInt(static_cast<long>(p.B)) * q.A;
  if (det == 0) throw Error(ErrorCode::InvalidArgument, "parallel triangle edges");
  BigInt dx = BigInt(static_cast<long>(-p.C)) * q.B - BigInt(static_cast<long>(p.B)) * (-q.C);
  BigInt dy = BigInt(static_cast<long>(p.A)) * (-q.C) - BigInt(static_cast<long>(-p.C)) * q.A;
  Vertex v{Rational(dx, det), Rational(dy, det)};
  v.x.canonicalize();
  v.y.canonicalize();
  return v;
}

}  // namespace

std::array<Vertex, 3> triangle_vertices(const Triangle& tri) {
  return {intersect(tri.rows[1], tri.rows[2]), intersect(tri.rows[0], tri.rows[2]),
          intersect(tri.rows[0], tri.rows[1])};
}

Rational triangle_area(const Triangle& tri) {
  auto v = triangle_vertices(tri);
  Rational cross = (v[1].x - v[0].x) * (v[2].y - v[0].y) - (v[2].x - v[0].x) * (v[1].y - v[0].y);
  return abs(cross) / 2;
}

std::string describe(const CurvePresentation& p) {
  std::ostringstream os;
  os << "p(" << p.weights.a << "," << p.weights.b << "," << p.weights.c << ")";
  if (p.complete_intersection) {
    os << " complete intersection";
    return os.str();
  }
  os << " = I_2[[x^" << p.s2 << ", y^" << p.t3 << ", z^" << p.u1 << "], [y^" << p.t1 << ", z^" << p.u2
     << ", x^" << p.s3 << "]]";
  return os.str();
}

}  // namespace smc
