#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "smc/lattice.hpp"
#include "smc/linalg.hpp"
#include "smc/poly.hpp"

namespace smc {

/// A vanishing condition: the coefficient of s^pd t^qd after v = 1+s, w = 1+t.
struct QAdicRow {
  std::uint32_t pd = 0;
  std::uint32_t qd = 0;
  friend bool operator==(const QAdicRow&, const QAdicRow&) = default;
};

/// Rows (pd, qd) with pd + qd < order, total degree ascending then pd ascending.
std::vector<QAdicRow> qadic_rows(std::uint32_t order);

/// The linear system whose kernel is [p^(m)]_d: entry at row (pd,qd) and
/// column (alpha,beta) is binom(alpha,pd)*binom(beta,qd).
struct QAdicSystem {
  CurvePresentation pres;
  LatticeRegion region;
  std::uint32_t order = 0;
  FieldSpec field;
  std::vector<QAdicRow> rows;

  std::size_t row_count() const { return rows.size(); }
  std::size_t col_count() const { return region.size(); }
};

QAdicSystem qadic_system(const CurvePresentation& pres, const FieldSpec& field, std::uint32_t order,
                         std::int64_t degree);

/// Exact integer matrix (the characteristic-0 system; reduce it mod p for GF(p)).
DenseMatrix<BigInt> integer_matrix(const QAdicSystem& sys);
/// Independent characteristic-0 route: derivatives d^(p+q)/dv^p dw^q at (1,1),
/// i.e. falling factorials instead of binomials.
DenseMatrix<BigInt> derivative_matrix(const LatticeRegion& region, std::uint32_t order);
DenseMatrix<std::uint64_t> mod_p_matrix(const QAdicSystem& sys, std::uint64_t p);
BitMatrix gf2_matrix(const QAdicSystem& sys);

/// Rank of the system over sys.field; exact in every characteristic.
std::size_t system_rank(const QAdicSystem& sys);

/// dim_K [p^(m)]_d.
std::int64_t graded_dim(const CurvePresentation& pres, const FieldSpec& field, std::uint32_t order,
                        std::int64_t degree);

/// True when the system has full column rank modulo the prime p, which forces
/// full column rank over Q (so the characteristic-0 piece is zero). A false
/// result proves nothing.
bool zero_certified_mod_p(const CurvePresentation& pres, std::uint32_t order, std::int64_t degree,
                          std::uint64_t p);

/// Same value as graded_dim. In characteristic 0 the rank is first tried mod 2
/// and mod a large prime; a modular rank that already equals min(rows, cols)
/// is the rational rank, otherwise the exact elimination runs.
std::int64_t graded_dim_screened(const CurvePresentation& pres, const FieldSpec& field, std::uint32_t order,
                                 std::int64_t degree);

/// Large primes used for modular pre-screening.
const std::vector<std::uint64_t>& screening_primes();

struct GradedPieceBasis {
  FieldSpec field;
  std::uint32_t order = 0;
  std::int64_t degree = 0;
  std::size_t dimension = 0;
  std::vector<AnyPoly> basis;
};

GradedPieceBasis graded_basis(const CurvePresentation& pres, const FieldSpec& field, std::uint32_t order,
                              std::int64_t degree);

template <class Field>
bool membership(const CurvePresentation& pres, const SparsePoly<Field>& poly, std::uint32_t order);
extern template bool membership(const CurvePresentation&, const ModPoly&, std::uint32_t);
extern template bool membership(const CurvePresentation&, const RationalPoly&, std::uint32_t);
bool membership(const CurvePresentation& pres, const AnyPoly& poly, std::uint32_t order);

/// r(r+1)/2 - dim S_d + dim [p^(r)]_d; throws NegativeH1 if that is negative.
/// `screened` computes the graded piece with graded_dim_screened (same value).
std::int64_t h1_dim(const CurvePresentation& pres, const FieldSpec& field, std::int64_t degree,
                    std::uint32_t r, bool screened = false);

/// [p^(r0-1)]_{d0-a-b-c} == 0.
bool genus_check(const CurvePresentation& pres, const FieldSpec& field, std::uint32_t r0, std::int64_t d0);

/// Row-major dump, one row per line: integers in characteristic 0, residues otherwise.
void dump_matrix(std::ostream& os, const QAdicSystem& sys);

}  // namespace smc
