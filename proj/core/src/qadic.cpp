#include "smc/qadic.hpp"

#include <algorithm>
#include <ostream>

namespace smc {

namespace {

// binom(upper, k) for k = 0..count-1, exact.
std::vector<BigInt> binomial_column(std::int64_t upper, std::uint32_t count) {
  std::vector<BigInt> out;
  out.reserve(count);
  BigInt cur = 1;
  for (std::uint32_t k = 0; k < count; ++k) {
    if (k > 0) {
      cur *= BigInt(static_cast<long>(upper - static_cast<std::int64_t>(k) + 1));
      mpz_divexact_ui(cur.get_mpz_t(), cur.get_mpz_t(), k);
    }
    out.push_back(cur);
  }
  return out;
}

// binom(upper, k) mod p for k = 0..count-1. Uses the multiplicative
// recurrence when p > count, Lucas otherwise.
std::vector<std::uint64_t> binomial_column_mod(std::int64_t upper, std::uint32_t count, const PrimeField& f) {
  std::vector<std::uint64_t> out(count);
  const std::uint64_t p = f.characteristic();
  if (p > count) {
    std::uint64_t cur = f.one();
    for (std::uint32_t k = 0; k < count; ++k) {
      if (k > 0) cur = f.div(f.mul(cur, f.from_int(upper - static_cast<std::int64_t>(k) + 1)), f.from_int(k));
      out[k] = cur;
    }
  } else {
    for (std::uint32_t k = 0; k < count; ++k) out[k] = binom_mod_p(upper, k, p);
  }
  return out;
}

void require_order_fits(std::uint32_t order) {
  if (order > 4096) throw Error(ErrorCode::InvalidArgument, "order too large");
}

template <class Field>
typename Field::Element binom_in(const Field& f, std::int64_t upper, std::uint32_t lower);

template <>
PrimeField::Element binom_in(const PrimeField& f, std::int64_t upper, std::uint32_t lower) {
  return binom_mod_p(upper, lower, f.characteristic());
}

template <>
RationalField::Element binom_in(const RationalField&, std::int64_t upper, std::uint32_t lower) {
  return Rational(binom(upper, lower));
}

}  // namespace

std::vector<QAdicRow> qadic_rows(std::uint32_t order) {
  std::vector<QAdicRow> rows;
  rows.reserve(static_cast<std::size_t>(order) * (order + 1) / 2);
  for (std::uint32_t total = 0; total < order; ++total) {
    for (std::uint32_t pd = 0; pd <= total; ++pd) rows.push_back({pd, total - pd});
  }
  return rows;
}

QAdicSystem qadic_system(const CurvePresentation& pres, const FieldSpec& field, std::uint32_t order,
                         std::int64_t degree) {
  require_order_fits(order);
  QAdicSystem sys;
  sys.pres = pres;
  sys.region = enumerate_points(pres, degree);
  sys.order = order;
  sys.field = field;
  sys.rows = qadic_rows(order);
  return sys;
}

DenseMatrix<BigInt> integer_matrix(const QAdicSystem& sys) {
  DenseMatrix<BigInt> m(sys.row_count(), sys.col_count());
  for (std::size_t c = 0; c < sys.col_count(); ++c) {
    const auto& pt = sys.region.points[c];
    auto ba = binomial_column(pt.alpha, sys.order);
    auto bb = binomial_column(pt.beta, sys.order);
    for (std::size_t r = 0; r < sys.row_count(); ++r) m(r, c) = ba[sys.rows[r].pd] * bb[sys.rows[r].qd];
  }
  return m;
}

DenseMatrix<BigInt> derivative_matrix(const LatticeRegion& region, std::uint32_t order) {
  auto rows = qadic_rows(order);
  DenseMatrix<BigInt> m(rows.size(), region.size());
  for (std::size_t c = 0; c < region.size(); ++c) {
    const auto& pt = region.points[c];
    for (std::size_t r = 0; r < rows.size(); ++r) {
      m(r, c) = falling_factorial(pt.alpha, rows[r].pd) * falling_factorial(pt.beta, rows[r].qd);
    }
  }
  return m;
}

DenseMatrix<std::uint64_t> mod_p_matrix(const QAdicSystem& sys, std::uint64_t p) {
  PrimeField f(p);
  DenseMatrix<std::uint64_t> m(sys.row_count(), sys.col_count(), 0);
  for (std::size_t c = 0; c < sys.col_count(); ++c) {
    const auto& pt = sys.region.points[c];
    auto ba = binomial_column_mod(pt.alpha, sys.order, f);
    auto bb = binomial_column_mod(pt.beta, sys.order, f);
    for (std::size_t r = 0; r < sys.row_count(); ++r) m(r, c) = f.mul(ba[sys.rows[r].pd], bb[sys.rows[r].qd]);
  }
  return m;
}

BitMatrix gf2_matrix(const QAdicSystem& sys) {
  BitMatrix m(sys.row_count(), sys.col_count());
  std::vector<bool> ba(sys.order), bb(sys.order);
  for (std::size_t c = 0; c < sys.col_count(); ++c) {
    const auto& pt = sys.region.points[c];
    for (std::uint32_t k = 0; k < sys.order; ++k) {
      ba[k] = binom_odd(pt.alpha, k);
      bb[k] = binom_odd(pt.beta, k);
    }
    for (std::size_t r = 0; r < sys.row_count(); ++r) {
      if (ba[sys.rows[r].pd] && bb[sys.rows[r].qd]) m.set(r, c, true);
    }
  }
  return m;
}

std::size_t system_rank(const QAdicSystem& sys) {
  if (sys.row_count() == 0 || sys.col_count() == 0) return 0;
  const std::uint64_t p = sys.field.characteristic();
  if (p == 0) return integer_rank(integer_matrix(sys));
  if (p == 2) return gf2_matrix(sys).rank();
  return rank(PrimeField(p), mod_p_matrix(sys, p));
}

std::int64_t graded_dim(const CurvePresentation& pres, const FieldSpec& field, std::uint32_t order,
                        std::int64_t degree) {
  QAdicSystem sys = qadic_system(pres, field, order, degree);
  return static_cast<std::int64_t>(sys.col_count()) - static_cast<std::int64_t>(system_rank(sys));
}

const std::vector<std::uint64_t>& screening_primes() {
  static const std::vector<std::uint64_t> primes = {
      4611686018427387847ULL,  // 2^62 - 57
      4611686018427387817ULL,  // 2^62 - 87
      2305843009213693951ULL,  // 2^61 - 1
  };
  return primes;
}

std::int64_t graded_dim_screened(const CurvePresentation& pres, const FieldSpec& field, std::uint32_t order,
                                 std::int64_t degree) {
  if (!field.is_rational()) return graded_dim(pres, field, order, degree);
  QAdicSystem sys = qadic_system(pres, FieldSpec::gf(2), order, degree);
  const auto cols = static_cast<std::int64_t>(sys.col_count());
  const std::size_t full = std::min(sys.row_count(), sys.col_count());
  if (full == 0) return cols;
  if (gf2_matrix(sys).rank() == full) return cols - static_cast<std::int64_t>(full);
  const std::uint64_t p = screening_primes().front();
  sys.field = FieldSpec::gf(p);
  if (rank(PrimeField(p), mod_p_matrix(sys, p)) == full) return cols - static_cast<std::int64_t>(full);
  sys.field = FieldSpec::rationals();
  return cols - static_cast<std::int64_t>(integer_rank(integer_matrix(sys)));
}

bool zero_certified_mod_p(const CurvePresentation& pres, std::uint32_t order, std::int64_t degree,
                          std::uint64_t p) {
  QAdicSystem sys = qadic_system(pres, FieldSpec::gf(p), order, degree);
  if (sys.col_count() == 0) return true;
  if (sys.col_count() > sys.row_count()) return false;
  return rank(PrimeField(p), mod_p_matrix(sys, p)) == sys.col_count();
}

namespace {

template <class Field>
std::vector<AnyPoly> kernel_polys(const QAdicSystem& sys, const Field& field,
                                  const std::vector<std::vector<typename Field::Element>>& kernel) {
  std::vector<AnyPoly> out;
  for (const auto& vec : kernel) {
    std::vector<typename SparsePoly<Field>::Term> terms;
    for (std::size_t c = 0; c < vec.size(); ++c) {
      if (field.is_zero(vec[c])) continue;
      terms.emplace_back(point_to_monomial(sys.pres, sys.region.points[c], sys.region.degree), vec[c]);
    }
    out.emplace_back(SparsePoly<Field>::from_terms(field, std::move(terms)));
  }
  return out;
}

}  // namespace

GradedPieceBasis graded_basis(const CurvePresentation& pres, const FieldSpec& field, std::uint32_t order,
                              std::int64_t degree) {
  QAdicSystem sys = qadic_system(pres, field, order, degree);
  GradedPieceBasis out;
  out.field = field;
  out.order = order;
  out.degree = degree;
  const std::uint64_t p = field.characteristic();
  if (sys.col_count() == 0) return out;
  if (p == 0) {
    RationalField qf;
    DenseMatrix<Rational> m(sys.row_count(), sys.col_count());
    DenseMatrix<BigInt> im = integer_matrix(sys);
    for (std::size_t r = 0; r < m.rows(); ++r)
      for (std::size_t c = 0; c < m.cols(); ++c) m(r, c) = Rational(im(r, c));
    out.basis = kernel_polys(sys, qf, kernel_basis(qf, std::move(m)));
  } else if (p == 2) {
    PrimeField f2(2);
    auto bits = gf2_matrix(sys).kernel_basis();
    std::vector<std::vector<std::uint64_t>> kernel;
    for (const auto& b : bits) kernel.emplace_back(b.begin(), b.end());
    out.basis = kernel_polys(sys, f2, kernel);
  } else {
    PrimeField fp(p);
    out.basis = kernel_polys(sys, fp, kernel_basis(fp, mod_p_matrix(sys, p)));
  }
  out.dimension = out.basis.size();
  return out;
}

template <class Field>
bool membership(const CurvePresentation& pres, const SparsePoly<Field>& poly, std::uint32_t order) {
  if (poly.is_zero() || order == 0) return true;
  require_order_fits(order);
  poly.degree(pres.weights);  // throws NotHomogeneous
  const Field& field = poly.field();
  std::vector<LatticePoint> points;
  points.reserve(poly.size());
  for (const auto& t : poly.terms()) points.push_back(monomial_to_point(pres, t.first).point);

  std::vector<std::vector<typename Field::Element>> alpha_binoms, beta_binoms;
  for (const auto& pt : points) {
    std::vector<typename Field::Element> ba, bb;
    for (std::uint32_t k = 0; k < order; ++k) {
      ba.push_back(binom_in(field, pt.alpha, k));
      bb.push_back(binom_in(field, pt.beta, k));
    }
    alpha_binoms.push_back(std::move(ba));
    beta_binoms.push_back(std::move(bb));
  }
  for (const auto& row : qadic_rows(order)) {
    typename Field::Element sum = field.zero();
    for (std::size_t n = 0; n < points.size(); ++n) {
      const auto& ba = alpha_binoms[n][row.pd];
      const auto& bb = beta_binoms[n][row.qd];
      if (field.is_zero(ba) || field.is_zero(bb)) continue;
      sum = field.add(sum, field.mul(poly.terms()[n].second, field.mul(ba, bb)));
    }
    if (!field.is_zero(sum)) return false;
  }
  return true;
}

template bool membership(const CurvePresentation&, const ModPoly&, std::uint32_t);
template bool membership(const CurvePresentation&, const RationalPoly&, std::uint32_t);

bool membership(const CurvePresentation& pres, const AnyPoly& poly, std::uint32_t order) {
  return std::visit([&](const auto& p) { return membership(pres, p, order); }, poly);
}

std::int64_t h1_dim(const CurvePresentation& pres, const FieldSpec& field, std::int64_t degree,
                    std::uint32_t r, bool screened) {
  const std::int64_t rr = r;
  std::int64_t s_dim = denumerant(pres.weights, degree);
  std::int64_t h0 = 0;
  if (degree >= 0) h0 = screened ? graded_dim_screened(pres, field, r, degree) : graded_dim(pres, field, r, degree);
  std::int64_t h1 = rr * (rr + 1) / 2 - s_dim + h0;
  if (h1 < 0) {
    throw Error(ErrorCode::NegativeH1, "h1(" + std::to_string(degree) + "H-" + std::to_string(r) +
                                           "E) = " + std::to_string(h1));
  }
  return h1;
}

bool genus_check(const CurvePresentation& pres, const FieldSpec& field, std::uint32_t r0, std::int64_t d0) {
  if (r0 < 1) throw Error(ErrorCode::InvalidArgument, "r0 must be positive");
  if (d0 <= pres.weights.sum()) {
    throw Error(ErrorCode::DegreeTooSmall,
                "d0 = " + std::to_string(d0) + " must exceed a+b+c = " + std::to_string(pres.weights.sum()));
  }
  return graded_dim(pres, field, r0 - 1, d0 - pres.weights.sum()) == 0;
}

void dump_matrix(std::ostream& os, const QAdicSystem& sys) {
  const std::uint64_t p = sys.field.characteristic();
  if (p == 0) {
    auto m = integer_matrix(sys);
    for (std::size_t r = 0; r < m.rows(); ++r) {
      for (std::size_t c = 0; c < m.cols(); ++c) os << (c ? " " : "") << m(r, c).get_str();
      os << '\n';
    }
  } else if (p == 2) {
    auto m = gf2_matrix(sys);
    for (std::size_t r = 0; r < m.rows(); ++r) {
      for (std::size_t c = 0; c < m.cols(); ++c) os << (c ? " " : "") << (m.get(r, c) ? 1 : 0);
      os << '\n';
    }
  } else {
    auto m = mod_p_matrix(sys, p);
    for (std::size_t r = 0; r < m.rows(); ++r) {
      for (std::size_t c = 0; c < m.cols(); ++c) os << (c ? " " : "") << m(r, c);
      os << '\n';
    }
  }
}

}  // namespace smc
