#include <gtest/gtest.h>

#include <random>

#include "smc/qadic.hpp"

using namespace smc;

namespace {

const CurvePresentation& big() {
  static const CurvePresentation p = herzog_present({5, 103, 169});
  return p;
}
const CurvePresentation& small() {
  static const CurvePresentation p = herzog_present({5, 11, 18});
  return p;
}

const FieldSpec Q = FieldSpec::rationals();
const FieldSpec F2 = FieldSpec::gf(2);

template <class Field>
SparsePoly<Field> poly(const Field& f, std::vector<std::pair<Monomial, std::int64_t>> terms) {
  std::vector<typename SparsePoly<Field>::Term> ts;
  for (auto& [m, c] : terms) ts.emplace_back(m, f.from_int(c));
  return SparsePoly<Field>::from_terms(f, std::move(ts));
}

RationalPoly negative_curve() {
  GradedPieceBasis b = graded_basis(big(), Q, 7, 2065);
  return std::get<RationalPoly>(b.basis.at(0));
}

}  // namespace

TEST(Rows, CountAndOrder) {
  for (std::uint32_t m = 0; m <= 12; ++m) EXPECT_EQ(qadic_rows(m).size(), m * (m + 1) / 2);
  std::vector<QAdicRow> r = qadic_rows(3);
  EXPECT_EQ(r, (std::vector<QAdicRow>{{0, 0}, {0, 1}, {1, 0}, {0, 2}, {1, 1}, {2, 0}}));
}

TEST(GradedDim, KnownValues) {
  EXPECT_EQ(graded_dim(big(), Q, 7, 2065), 1);
  EXPECT_EQ(graded_dim(big(), Q, 3, 887), 0);
  EXPECT_EQ(graded_dim(big(), Q, 6, 1788), 0);
  EXPECT_EQ(graded_dim(small(), Q, 7, 220), 1);
  EXPECT_EQ(graded_dim(small(), Q, 4, 126), 1);
  EXPECT_EQ(graded_dim(big(), F2, 59, 17407), 0);
  for (std::int64_t d : {0, 5, 887, 2065}) EXPECT_EQ(graded_dim(big(), Q, 0, d), denumerant(big().weights, d));
  EXPECT_EQ(graded_dim(big(), Q, 3, 0), 0);
}

TEST(GradedDim, Gf2SystemShape) {
  QAdicSystem sys = qadic_system(big(), F2, 59, 17407);
  EXPECT_EQ(sys.row_count(), 1770u);
  EXPECT_EQ(static_cast<std::int64_t>(sys.col_count()), denumerant(big().weights, 17407));
}

TEST(GradedDim, ScreenedAgreesWithExact) {
  for (const CurvePresentation* p : {&big(), &small()}) {
    for (std::uint32_t m = 1; m <= 6; ++m) {
      for (std::int64_t d = 0; d <= 2400; d += 37) {
        ASSERT_EQ(graded_dim_screened(*p, Q, m, d), graded_dim(*p, Q, m, d)) << m << " " << d;
      }
    }
  }
}

TEST(GradedDim, ZeroCertificateModP) {
  EXPECT_TRUE(zero_certified_mod_p(big(), 3, 887, 2));
  EXPECT_FALSE(zero_certified_mod_p(big(), 7, 2065, 1000003));
}

TEST(Basis, NegativeCurveCoefficients) {
  RationalPoly f = negative_curve();
  EXPECT_EQ(f.degree(big().weights), 2065);
  EXPECT_NE(f.coefficient({413, 0, 0}), 0);
  EXPECT_NE(f.coefficient({0, 2, 11}), 0);
  EXPECT_TRUE(membership(big(), f, 7));
  EXPECT_FALSE(membership(big(), f, 8));
}

TEST(Basis, DegreeZeroIsEmpty) {
  GradedPieceBasis b = graded_basis(big(), Q, 2, 0);
  EXPECT_EQ(b.dimension, 0u);
  EXPECT_TRUE(b.basis.empty());
}

TEST(Basis, EveryBasisVectorIsMember) {
  for (auto [m, d] : std::vector<std::pair<std::uint32_t, std::int64_t>>{{1, 309}, {2, 618}, {3, 1500}}) {
    for (FieldSpec f : {Q, F2, FieldSpec::gf(3)}) {
      GradedPieceBasis b = graded_basis(big(), f, m, d);
      EXPECT_EQ(static_cast<std::int64_t>(b.dimension), graded_dim(big(), f, m, d));
      for (const AnyPoly& g : b.basis) EXPECT_TRUE(membership(big(), g, m));
    }
  }
}

TEST(Membership, HerzogGenerators) {
  PrimeField f2(2);
  ModPoly a01 = poly(f2, {{{0, 3, 0}, 1}, {{28, 0, 1}, 1}});
  EXPECT_TRUE(membership(big(), a01, 1));
  EXPECT_FALSE(membership(big(), a01, 2));
  RationalField q;
  RationalPoly a01q = poly(q, {{{0, 3, 0}, 1}, {{28, 0, 1}, -1}});
  EXPECT_TRUE(membership(big(), a01q, 1));
  RationalPoly wrong = poly(q, {{{0, 3, 0}, 1}, {{28, 0, 1}, 1}});
  EXPECT_FALSE(membership(big(), wrong, 1));
  EXPECT_TRUE(membership(big(), RationalPoly(q), 5));
  EXPECT_TRUE(membership(big(), ModPoly(f2), 5));
}

TEST(Membership, RejectsInhomogeneous) {
  RationalField q;
  RationalPoly bad = poly(q, {{{1, 0, 0}, 1}, {{0, 1, 0}, 1}});
  try {
    membership(big(), bad, 1);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotHomogeneous);
  }
}

TEST(Membership, Multiplicative) {
  RationalField q;
  RationalPoly f = negative_curve();
  RationalPoly a01 = poly(q, {{{0, 3, 0}, 1}, {{28, 0, 1}, -1}});
  RationalPoly b01 = poly(q, {{{75, 0, 0}, 1}, {{0, 2, 1}, -1}});
  EXPECT_TRUE(membership(big(), f * a01, 8));
  EXPECT_TRUE(membership(big(), a01 * b01, 2));
  EXPECT_TRUE(membership(big(), a01.pow(3) * b01, 4));
  EXPECT_FALSE(membership(big(), a01 * b01, 3));
  // Sampled basis elements of low pieces multiply into the expected order.
  GradedPieceBasis g1 = graded_basis(small(), Q, 2, 120);
  GradedPieceBasis g2 = graded_basis(small(), Q, 3, 170);
  ASSERT_FALSE(g1.basis.empty());
  ASSERT_FALSE(g2.basis.empty());
  for (const AnyPoly& x : g1.basis) {
    for (const AnyPoly& y : g2.basis) {
      EXPECT_TRUE(membership(small(), std::get<RationalPoly>(x) * std::get<RationalPoly>(y), 5));
    }
  }
}

TEST(H1, Values) {
  EXPECT_EQ(h1_dim(big(), Q, 887, 3), 0);
  EXPECT_EQ(h1_dim(big(), Q, 2065, 7), 0);
  EXPECT_EQ(h1_dim(big(), Q, 887, 3, true), 0);
  for (std::int64_t d : {0, 100, 887, 2065}) EXPECT_EQ(h1_dim(big(), Q, d, 0), 0);
}

TEST(Genus, Checks) {
  EXPECT_TRUE(genus_check(big(), Q, 7, 2065));
  EXPECT_EQ(genus_check(small(), Q, 7, 220), graded_dim(small(), Q, 6, 186) == 0);
  for (std::int64_t d0 : {278, 300, 500, 1000}) {
    EXPECT_EQ(genus_check(big(), Q, 1, d0), denumerant(big().weights, d0 - 277) == 0) << d0;
  }
  try {
    genus_check(big(), Q, 2, 277);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::DegreeTooSmall);
  }
}

TEST(Properties, MonotoneInOrder) {
  for (const CurvePresentation* p : {&big(), &small()}) {
    for (std::int64_t d = 0; d <= 2500; d += 29) {
      std::int64_t prev = graded_dim(*p, Q, 0, d);
      for (std::uint32_t m = 1; m <= 7; ++m) {
        std::int64_t cur = graded_dim_screened(*p, Q, m, d);
        ASSERT_LE(cur, prev) << m << " " << d;
        prev = cur;
      }
    }
  }
}

TEST(Properties, SemicontinuityOverSmallPrimes) {
  std::mt19937_64 rng(7);
  int nonzero = 0;
  for (int n = 0; n < 60; ++n) {
    const CurvePresentation& p = n % 2 ? big() : small();
    auto m = static_cast<std::uint32_t>(1 + rng() % 8);
    auto d = static_cast<std::int64_t>(rng() % 3001);
    std::int64_t q = graded_dim(p, Q, m, d);
    if (q > 0) ++nonzero;
    for (std::uint64_t prime : {2ULL, 3ULL, 5ULL}) {
      ASSERT_LE(q, graded_dim(p, FieldSpec::gf(prime), m, d)) << m << " " << d << " p=" << prime;
    }
  }
  EXPECT_GT(nonzero, 0);
}

TEST(Properties, UnitChoiceIndependence) {
  UnitExponents u = big().unit;
  CurvePresentation alt = with_unit_exponents(big(), {u.a + 103, u.b - 5, u.c});
  CurvePresentation alt2 = with_unit_exponents(big(), {u.a - 169, u.b, u.c + 5});
  for (auto [m, d] : std::vector<std::pair<std::uint32_t, std::int64_t>>{{7, 2065}, {3, 887}, {6, 1788}, {2, 900}}) {
    EXPECT_EQ(graded_dim(alt, Q, m, d), graded_dim(big(), Q, m, d));
    EXPECT_EQ(graded_dim(alt2, F2, m, d), graded_dim(big(), F2, m, d));
  }
  // The negative curve itself does not depend on the choice.
  EXPECT_EQ(std::get<RationalPoly>(graded_basis(alt, Q, 7, 2065).basis.at(0)).coefficient({413, 0, 0}) != 0, true);
}

TEST(Properties, DerivativeRankEqualsBinomialRank) {
  for (const CurvePresentation* p : {&small(), &big()}) {
    for (std::uint32_t m = 1; m <= 4; ++m) {
      for (std::int64_t d = 0; d <= 400; ++d) {
        QAdicSystem sys = qadic_system(*p, Q, m, d);
        if (sys.col_count() == 0) continue;
        std::size_t binomial = integer_rank(integer_matrix(sys));
        std::size_t derivative = integer_rank(derivative_matrix(sys.region, m));
        ASSERT_EQ(binomial, derivative) << m << " " << d;
      }
    }
  }
}

TEST(Properties, BareissMatchesRationalElimination) {
  for (auto [m, d] : std::vector<std::pair<std::uint32_t, std::int64_t>>{{7, 2065}, {6, 1788}, {5, 1500}, {4, 220}}) {
    QAdicSystem sys = qadic_system(big(), Q, m, d);
    DenseMatrix<BigInt> mz = integer_matrix(sys);
    DenseMatrix<Rational> mq(mz.rows(), mz.cols());
    for (std::size_t r = 0; r < mz.rows(); ++r) {
      for (std::size_t c = 0; c < mz.cols(); ++c) mq(r, c) = Rational(mz(r, c));
    }
    EXPECT_EQ(integer_rank(mz), rank(RationalField{}, mq)) << m << " " << d;
    EXPECT_EQ(integer_rank(mz), system_rank(sys));
  }
}

TEST(Properties, Gf2MatrixMatchesModPMatrix) {
  QAdicSystem sys = qadic_system(big(), F2, 9, 3000);
  BitMatrix bits = gf2_matrix(sys);
  DenseMatrix<std::uint64_t> mod = mod_p_matrix(sys, 2);
  ASSERT_EQ(bits.rows(), mod.rows());
  ASSERT_EQ(bits.cols(), mod.cols());
  for (std::size_t r = 0; r < mod.rows(); ++r) {
    for (std::size_t c = 0; c < mod.cols(); ++c) ASSERT_EQ(bits.get(r, c), mod(r, c) == 1);
  }
  EXPECT_EQ(bits.rank(), rank(PrimeField(2), mod));
}

// No nonzero piece below the slope of the negative curve.
TEST(Properties, SlopeGap) {
  for (std::uint32_t r = 1; r <= 8; ++r) {
    for (std::int64_t d = 0; 7 * d < 2065 * static_cast<std::int64_t>(r); ++d) {
      ASSERT_EQ(graded_dim_screened(big(), Q, r, d), 0) << r << " " << d;
    }
  }
}
