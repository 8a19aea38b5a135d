#include <gtest/gtest.h>

#include <algorithm>

#include "smc/peeling.hpp"
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

std::vector<std::size_t> hits(const PeelCertificate& c) {
  std::vector<std::size_t> out;
  for (const auto& s : c.steps) out.push_back(s.hits);
  return out;
}

bool all_bijective(const PeelCertificate& c) {
  return std::all_of(c.steps.begin(), c.steps.end(), [](const PeelStep& s) { return s.mode == PeelMode::Bijective; });
}

}  // namespace

TEST(Peel, SingleStepModes) {
  LatticeRegion r = enumerate_points(big(), 2065);
  // The fourth row from the top holds 7 points.
  std::int64_t beta = r.points.front().beta - 3;
  LatticeLine row = LatticeLine::through({0, beta}, 1, 0);
  PeelResult res = peel(r.points, 7, row);
  EXPECT_EQ(res.step.hits, 7u);
  EXPECT_EQ(res.step.mode, PeelMode::Bijective);
  EXPECT_EQ(res.order, 6u);
  EXPECT_EQ(res.remaining.size(), 22u);

  PeelResult inj = peel(r.points, 6, LatticeLine::through({0, beta + 1}, 1, 0));
  EXPECT_EQ(inj.step.mode, PeelMode::Injective);
  PeelResult sur = peel(r.points, 6, row);
  EXPECT_EQ(sur.step.mode, PeelMode::Surjective);

  std::vector<LatticePoint> one{{3, 4}};
  EXPECT_EQ(peel(one, 1, LatticeLine::through({3, 4}, 0, 1)).step.mode, PeelMode::Bijective);
}

TEST(Peel, EmptyLine) {
  std::vector<LatticePoint> q{{0, 0}, {1, 0}};
  try {
    peel(q, 2, LatticeLine::through({0, 5}, 1, 0));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::EmptyLine);
  }
}

TEST(Peel, LineCanonicalForm) {
  LatticeLine l = LatticeLine::through({2, 3}, -4, -6);
  EXPECT_EQ(l.dx, 2);
  EXPECT_EQ(l.dy, 3);
  EXPECT_TRUE(l.contains({4, 6}));
  EXPECT_TRUE(l.contains({0, 0}));
  EXPECT_FALSE(l.contains({1, 1}));
}

TEST(Certify, NegativeCurvePiece) {
  LatticeRegion r = enumerate_points(big(), 2065);
  PeelCertificate c = certify_dim(r.points, 7, PeelStrategy::Rows);
  ASSERT_TRUE(c.exact());
  EXPECT_EQ(c.value, 1);
  EXPECT_EQ(hits(c), (std::vector<std::size_t>{7, 6, 5, 4, 3, 2}));
  EXPECT_TRUE(all_bijective(c));
  EXPECT_EQ(c.terminal_order, 1u);
  EXPECT_EQ(c.terminal.size(), 2u);
  std::vector<Monomial> tracked;
  for (const auto& p : c.tracked_points) tracked.push_back(point_to_monomial(big(), p, 2065));
  EXPECT_NE(std::find(tracked.begin(), tracked.end(), Monomial{413, 0, 0}), tracked.end());
  EXPECT_NE(std::find(tracked.begin(), tracked.end(), Monomial{0, 2, 11}), tracked.end());

  // The basis vector is nonzero at every tracked point.
  RationalPoly f = std::get<RationalPoly>(graded_basis(big(), FieldSpec::rationals(), 7, 2065).basis.at(0));
  for (const Monomial& m : tracked) EXPECT_NE(f.coefficient(m), 0) << monomial_string(m);
}

TEST(Certify, InteriorPiece) {
  LatticeRegion in = interior_points(big(), 2065);
  PeelCertificate c = certify_dim(in.points, 6, PeelStrategy::Rows);
  ASSERT_TRUE(c.exact());
  EXPECT_EQ(c.value, 0);
  EXPECT_EQ(hits(c), (std::vector<std::size_t>{6, 5, 4, 3, 2}));
  EXPECT_TRUE(all_bijective(c));
  EXPECT_EQ(c.terminal.size(), 1u);
  EXPECT_EQ(graded_dim(big(), FieldSpec::rationals(), 6, 1788), 0);
}

TEST(Certify, Degree887) {
  LatticeRegion r = enumerate_points(big(), 887);
  PeelCertificate c = certify_dim(r.points, 3, PeelStrategy::Rows);
  ASSERT_TRUE(c.exact());
  EXPECT_EQ(c.value, 0);
  EXPECT_EQ(graded_dim(big(), FieldSpec::rationals(), 3, 887), 0);
}

TEST(Certify, RefusesPositiveCharacteristic) {
  LatticeRegion r = enumerate_points(big(), 887);
  try {
    certify_dim(r.points, 3, PeelStrategy::Rows, {}, FieldSpec::gf(2));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::InvalidField);
  }
}

TEST(Certify, TrivialTerminals) {
  std::vector<LatticePoint> q{{0, 0}, {1, 0}, {0, 1}};
  PeelCertificate c0 = certify_dim(q, 0, PeelStrategy::Rows);
  ASSERT_TRUE(c0.exact());
  EXPECT_EQ(c0.value, 3);
  PeelCertificate c1 = certify_dim(q, 1, PeelStrategy::Rows);
  ASSERT_TRUE(c1.exact());
  EXPECT_EQ(c1.value, 2);
  PeelCertificate empty = certify_dim({}, 4, PeelStrategy::Rows);
  ASSERT_TRUE(empty.exact());
  EXPECT_EQ(empty.value, 0);
}

TEST(Certify, ExplicitLines) {
  LatticeRegion r = enumerate_points(big(), 887);
  std::vector<LatticeLine> lines;
  std::vector<std::int64_t> betas;
  for (const auto& p : r.points) {
    if (betas.empty() || betas.back() != p.beta) betas.push_back(p.beta);
  }
  for (std::int64_t b : betas) lines.push_back(LatticeLine::through({0, b}, 1, 0));
  PeelCertificate c = certify_dim(r.points, 3, PeelStrategy::Explicit, lines);
  if (c.conclusion != Conclusion::Inconclusive && c.conclusion != Conclusion::LowerBound) {
    EXPECT_GE(c.value, 0);
  }
  if (c.exact()) EXPECT_EQ(c.value, 0);
}

// Every conclusion, from any strategy, is consistent with linear algebra.
TEST(Certify, SoundAgainstLinearAlgebra) {
  const FieldSpec q = FieldSpec::rationals();
  int exact = 0;
  for (PeelStrategy s : {PeelStrategy::Rows, PeelStrategy::Columns, PeelStrategy::Greedy}) {
    for (std::int64_t d = 0; d <= 600; ++d) {
      LatticeRegion r = enumerate_points(small(), d);
      for (std::uint32_t m = 0; m <= 5; ++m) {
        PeelCertificate c = certify_dim(r.points, m, s);
        if (c.conclusion == Conclusion::Inconclusive) continue;
        std::int64_t truth = graded_dim(small(), q, m, d);
        switch (c.conclusion) {
          case Conclusion::Exact:
            ASSERT_EQ(c.value, truth) << peel_strategy_name(s) << " m=" << m << " d=" << d;
            ++exact;
            break;
          case Conclusion::UpperBound:
            ASSERT_GE(c.value, truth) << peel_strategy_name(s) << " m=" << m << " d=" << d;
            break;
          case Conclusion::LowerBound:
            ASSERT_LE(c.value, truth) << peel_strategy_name(s) << " m=" << m << " d=" << d;
            break;
          default: break;
        }
      }
    }
  }
  EXPECT_GT(exact, 500);
}

TEST(Certify, BoundsOnLargerInstance) {
  const FieldSpec q = FieldSpec::rationals();
  for (std::int64_t d = 1500; d <= 4000; d += 53) {
    LatticeRegion r = enumerate_points(big(), d);
    for (std::uint32_t m = 1; m <= 7; ++m) {
      PeelCertificate c = certify_dim(r.points, m, PeelStrategy::Greedy);
      if (c.conclusion == Conclusion::Inconclusive) continue;
      std::int64_t truth = graded_dim_screened(big(), q, m, d);
      if (c.conclusion == Conclusion::Exact) ASSERT_EQ(c.value, truth) << m << " " << d;
      if (c.conclusion == Conclusion::UpperBound) ASSERT_GE(c.value, truth) << m << " " << d;
      if (c.conclusion == Conclusion::LowerBound) ASSERT_LE(c.value, truth) << m << " " << d;
    }
  }
}

TEST(Certify, Serialization) {
  LatticeRegion r = enumerate_points(big(), 2065);
  PeelCertificate c = certify_dim(r.points, 7, PeelStrategy::Rows);
  nlohmann::json j = to_json(c);
  EXPECT_EQ(j.at("steps").size(), 6u);
  EXPECT_FALSE(to_text(c).empty());
  EXPECT_EQ(parse_peel_strategy("rows"), PeelStrategy::Rows);
  EXPECT_FALSE(parse_peel_strategy("diagonal").has_value());
}
