#include "smc/curves.hpp"

#include <algorithm>
#include <numeric>
#include <tuple>

#include "smc/bivariate.hpp"
#include "smc/lattice.hpp"
#include "smc/qadic.hpp"

namespace smc {

bool below_sqrt_abc(const Weights& w, std::uint32_t r, std::int64_t d) {
  const __int128 lhs = static_cast<__int128>(d) * d;
  const __int128 rhs = static_cast<__int128>(w.product()) * r * r;
  return lhs < rhs;
}

NegativeCurveSearch negative_curve_search(const CurvePresentation& pres, const FieldSpec& field,
                                          std::uint32_t max_order) {
  if (max_order < 1) throw Error(ErrorCode::InvalidArgument, "max_order must be at least 1");
  NegativeCurveSearch out;
  for (std::uint32_t r = 1; r <= max_order; ++r) {
    for (std::int64_t d = 1; below_sqrt_abc(pres.weights, r, d); ++d) {
      if (denumerant(pres.weights, d) == 0) continue;
      ++out.systems_checked;
      if (graded_dim_screened(pres, field, r, d) == 0) continue;
      GradedPieceBasis basis = graded_basis(pres, field, r, d);
      NegativeCurveWitness w;
      w.r0 = r;
      w.d0 = d;
      w.dimension = basis.dimension;
      w.basis_poly = basis.basis.front();
      w.slope = Rational(BigInt(static_cast<long>(d)), BigInt(static_cast<long>(r)));
      w.slope.canonicalize();
      out.witness = std::move(w);
      out.searched_up_to = r;
      return out;
    }
    out.searched_up_to = r;
  }
  return out;
}

bool huneke_ratio_check(const Weights& w, DegreePair p1, DegreePair p2) {
  if (p1.r < 1 || p2.r < 1 || p1.d < 1 || p2.d < 1) {
    throw Error(ErrorCode::InvalidArgument, "Huneke pairs must be positive");
  }
  const __int128 lhs = static_cast<__int128>(p1.d) * p2.d;
  const __int128 rhs = static_cast<__int128>(w.product()) * p1.r * p2.r;
  return lhs == rhs;
}

namespace {

template <class Field>
BiPoly<Field> dehomogenize(const CurvePresentation& pres, const SparsePoly<Field>& f) {
  if (f.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "coprimality of the zero polynomial is undefined");
  f.degree(pres.weights);  // homogeneity check
  std::vector<std::tuple<std::int64_t, std::int64_t, typename Field::Element>> terms;
  std::int64_t min_a = 0, min_b = 0;
  bool first = true;
  for (const auto& [m, c] : f.terms()) {
    LatticePoint p = monomial_to_point(pres, m).point;
    if (first || p.alpha < min_a) min_a = p.alpha;
    if (first || p.beta < min_b) min_b = p.beta;
    first = false;
    terms.emplace_back(p.alpha, p.beta, c);
  }
  // Shifting by a monomial only changes a unit of the Laurent ring.
  for (auto& [a, b, c] : terms) {
    a -= min_a;
    b -= min_b;
  }
  return BiPoly<Field>::from_terms(f.field(), terms);
}

template <class Field>
bool coprime_impl(const CurvePresentation& pres, const SparsePoly<Field>& f, const SparsePoly<Field>& g) {
  if (f.field().characteristic() != g.field().characteristic()) throw Error(ErrorCode::FieldMismatch, "operands live over different fields");
  BiPoly<Field> h = gcd(dehomogenize(pres, f), dehomogenize(pres, g));
  return h.degree_w() == 0 && h.degree_v() == 0;
}

}  // namespace

bool coprimality_check(const CurvePresentation& pres, const AnyPoly& f, const AnyPoly& g) {
  if (f.index() != g.index()) throw Error(ErrorCode::FieldMismatch, "operands live over different fields");
  return std::visit(
      [&](const auto& pf) {
        using P = std::decay_t<decltype(pf)>;
        return coprime_impl(pres, pf, std::get<P>(g));
      },
      f);
}

SupportFlags support_flags(const AnyPoly& f) {
  SupportFlags flags{true, true, true};
  std::visit(
      [&](const auto& p) {
        for (const auto& [m, c] : p.terms()) {
          if (m.j == 0 && m.k == 0) flags.in_yz = false;
          if (m.i == 0 && m.k == 0) flags.in_zx = false;
          if (m.i == 0 && m.j == 0) flags.in_xy = false;
        }
      },
      f);
  return flags;
}

DegreePair huneke_candidate(const CurvePresentation& pres, DegreePair witness, SupportFlags flags) {
  const Weights& w = pres.weights;
  if (witness.r < 1 || witness.d < 1) throw Error(ErrorCode::InvalidArgument, "witness must be positive");
  const std::int64_t num = w.product() * witness.r;
  const std::int64_t step = witness.d / std::gcd(num, witness.d);
  // The divisibility pattern of d2 repeats with period dividing abc.
  for (std::int64_t k = 1; k <= w.product(); ++k) {
    const std::int64_t r2 = step * k;
    const __int128 prod = static_cast<__int128>(num) * r2;
    if (prod % witness.d != 0) continue;
    const auto d2 = static_cast<std::int64_t>(prod / witness.d);
    if (flags.in_yz && d2 % w.a != 0) continue;
    if (flags.in_zx && d2 % w.b != 0) continue;
    if (flags.in_xy && d2 % w.c != 0) continue;
    return {static_cast<std::uint32_t>(r2), d2};
  }
  throw Error(ErrorCode::NoCandidate, "no (r2, d2) meets the ratio and divisibility conditions");
}

bool h1_condition(const CurvePresentation& pres, const FieldSpec& field, DegreePair candidate, DegreePair witness,
                  std::uint32_t ell) {
  if (ell < 1) throw Error(ErrorCode::InvalidArgument, "ell must be at least 1");
  const std::int64_t rp = static_cast<std::int64_t>(candidate.r) - static_cast<std::int64_t>(ell) * witness.r;
  const std::int64_t dp = candidate.d - static_cast<std::int64_t>(ell) * witness.d;
  if (rp <= -2) return false;
  if (rp <= 0) return true;
  return h1_dim(pres, field, dp, static_cast<std::uint32_t>(rp), true) == 0;
}

HunekeOutcome huneke_analysis(const CurvePresentation& pres, const FieldSpec& field, const NegativeCurveWitness& w,
                              std::uint32_t ell_max) {
  HunekeOutcome out;
  out.weights = pres.weights;
  out.witness = w;
  out.flags = support_flags(w.basis_poly);
  const DegreePair wp{w.r0, w.d0};
  out.candidate = huneke_candidate(pres, wp, out.flags);
  out.genus_ok = genus_check(pres, field, w.r0, w.d0);
  for (std::uint32_t ell = 1; ell <= ell_max; ++ell) {
    if (h1_condition(pres, field, out.candidate, wp, ell)) {
      out.ell = ell;
      break;
    }
  }
  return out;
}

nlohmann::json to_json(const HunekeOutcome& out) {
  nlohmann::json j;
  j["a"] = out.weights.a;
  j["b"] = out.weights.b;
  j["c"] = out.weights.c;
  j["r0"] = out.witness.r0;
  j["d0"] = out.witness.d0;
  j["slope_num"] = out.witness.slope.get_num().get_si();
  j["slope_den"] = out.witness.slope.get_den().get_si();
  j["support"] = {{"in_yz", out.flags.in_yz}, {"in_zx", out.flags.in_zx}, {"in_xy", out.flags.in_xy}};
  j["genus_ok"] = out.genus_ok;
  j["candidate"] = {{"r2", out.candidate.r}, {"d2", out.candidate.d}};
  j["ell"] = out.ell ? nlohmann::json(*out.ell) : nlohmann::json(nullptr);
  j["h1_ok"] = out.ell.has_value();
  return j;
}

}  // namespace smc
