#pragma once

#include <cstdint>
#include <optional>

#include <nlohmann/json.hpp>

#include "smc/poly.hpp"
#include "smc/presentation.hpp"

namespace smc {

struct NegativeCurveWitness {
  std::uint32_t r0 = 0;
  std::int64_t d0 = 0;
  std::size_t dimension = 0;
  AnyPoly basis_poly = RationalPoly(RationalField{});
  /// d0/r0 in lowest terms.
  Rational slope;
};

struct NegativeCurveSearch {
  std::optional<NegativeCurveWitness> witness;
  /// Largest order fully swept; equals max_order when nothing was found.
  std::uint32_t searched_up_to = 0;
  std::size_t systems_checked = 0;
};

/// First (r, d) in (r ascending, d ascending) order with d^2 < abc*r^2 and a
/// nonzero graded piece. An empty witness only bounds the search.
NegativeCurveSearch negative_curve_search(const CurvePresentation& pres, const FieldSpec& field,
                                          std::uint32_t max_order);

/// d^2 < abc*r^2, by integer arithmetic.
bool below_sqrt_abc(const Weights& w, std::uint32_t r, std::int64_t d);

struct DegreePair {
  std::uint32_t r = 0;
  std::int64_t d = 0;
  friend bool operator==(const DegreePair&, const DegreePair&) = default;
};

struct HunekePair {
  DegreePair first;
  DegreePair second;
  bool coprime_checked = false;
};

bool huneke_ratio_check(const Weights& w, DegreePair p1, DegreePair p2);

/// True iff f and g share no non-monomial factor. Throws ZeroPolynomial,
/// NotHomogeneous or FieldMismatch.
bool coprimality_check(const CurvePresentation& pres, const AnyPoly& f, const AnyPoly& g);

/// Which coordinate ideals contain f: f in (y,z)S iff f has no pure power of x, and so on.
struct SupportFlags {
  bool in_yz = false;
  bool in_zx = false;
  bool in_xy = false;
};
SupportFlags support_flags(const AnyPoly& f);

/// Minimal r2 with d0*d2 = abc*r0*r2 and, for each coordinate ideal that
/// contains f, the matching weight dividing d2. Throws NoCandidate.
DegreePair huneke_candidate(const CurvePresentation& pres, DegreePair witness, SupportFlags flags);

/// Vanishing of H^1 for the class of d2*H - r2*E - ell*C, by the case split
/// on r' = r2 - ell*r0.
bool h1_condition(const CurvePresentation& pres, const FieldSpec& field, DegreePair candidate, DegreePair witness,
                  std::uint32_t ell);

struct HunekeOutcome {
  Weights weights;
  NegativeCurveWitness witness;
  SupportFlags flags;
  DegreePair candidate;
  bool genus_ok = false;
  /// First ell in 1..ell_max with h1_condition true.
  std::optional<std::uint32_t> ell;
};

HunekeOutcome huneke_analysis(const CurvePresentation& pres, const FieldSpec& field, const NegativeCurveWitness& w,
                              std::uint32_t ell_max);

nlohmann::json to_json(const HunekeOutcome& out);

}  // namespace smc
