#pragma once

#include <cstdint>
#include <string>
#include <utility>

#include <gmpxx.h>

#include "smc/error.hpp"

namespace smc {

using BigInt = mpz_class;
using Rational = mpq_class;

/// Coefficient field selector: 0 for the rationals, otherwise a prime p.
class FieldSpec {
 public:
  FieldSpec() = default;
  /// Throws InvalidField unless `characteristic` is 0 or prime.
  explicit FieldSpec(std::uint64_t characteristic);

  static FieldSpec rationals() { return FieldSpec{}; }
  static FieldSpec gf(std::uint64_t p) { return FieldSpec{p}; }

  std::uint64_t characteristic() const noexcept { return characteristic_; }
  bool is_rational() const noexcept { return characteristic_ == 0; }

  std::string name() const;

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;

 private:
  std::uint64_t characteristic_ = 0;
};

bool is_prime(std::uint64_t n);

/// Integers modulo a prime below 2^63, canonical representatives in [0, p).
class PrimeField {
 public:
  using Element = std::uint64_t;

  explicit PrimeField(std::uint64_t p);

  std::uint64_t characteristic() const noexcept { return p_; }
  FieldSpec spec() const { return FieldSpec::gf(p_); }

  Element zero() const noexcept { return 0; }
  Element one() const noexcept { return 1 % p_; }
  bool is_zero(Element a) const noexcept { return a == 0; }
  bool is_one(Element a) const noexcept { return a == 1; }

  Element add(Element a, Element b) const noexcept {
    Element s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  Element sub(Element a, Element b) const noexcept { return a >= b ? a - b : a + (p_ - b); }
  Element neg(Element a) const noexcept { return a == 0 ? 0 : p_ - a; }
  Element mul(Element a, Element b) const noexcept {
    return static_cast<Element>(static_cast<unsigned __int128>(a) * b % p_);
  }
  /// Extended Euclid; throws InvalidArgument on zero.
  Element inv(Element a) const;
  Element div(Element a, Element b) const { return mul(a, inv(b)); }

  Element from_int(std::int64_t v) const noexcept;
  Element from_bigint(const BigInt& v) const;

  std::string to_string(Element a) const { return std::to_string(a); }
  /// Bit length, used by pivot heuristics.
  static std::size_t size_of(Element) noexcept { return 1; }

 private:
  std::uint64_t p_;
};

/// The rationals, always in lowest terms with positive denominator.
class RationalField {
 public:
  using Element = Rational;

  std::uint64_t characteristic() const noexcept { return 0; }
  FieldSpec spec() const { return FieldSpec::rationals(); }

  Element zero() const { return Rational(0); }
  Element one() const { return Rational(1); }
  bool is_zero(const Element& a) const { return sgn(a) == 0; }
  bool is_one(const Element& a) const { return a == 1; }

  Element add(const Element& a, const Element& b) const { return a + b; }
  Element sub(const Element& a, const Element& b) const { return a - b; }
  Element neg(const Element& a) const { return -a; }
  Element mul(const Element& a, const Element& b) const { return a * b; }
  Element inv(const Element& a) const;
  Element div(const Element& a, const Element& b) const { return a * inv(b); }

  Element from_int(std::int64_t v) const { return Rational(BigInt(static_cast<long>(v))); }
  Element from_bigint(const BigInt& v) const { return Rational(v); }

  std::string to_string(const Element& a) const { return a.get_str(); }
  static std::size_t size_of(const Element& a) {
    return mpz_sizeinbase(a.get_num_mpz_t(), 2) + mpz_sizeinbase(a.get_den_mpz_t(), 2);
  }
};

/// Invokes `fn` with the concrete field type selected by `spec`.
template <class Fn>
decltype(auto) with_field(const FieldSpec& spec, Fn&& fn) {
  if (spec.is_rational()) {
    return fn(RationalField{});
  }
  return fn(PrimeField{spec.characteristic()});
}

/// Generalized binomial coefficient upper*(upper-1)*...*(upper-lower+1)/lower!.
BigInt binom(std::int64_t upper, std::uint32_t lower);

/// binom(upper, lower) reduced mod p, via Lucas' theorem after reducing the
/// upper index modulo the smallest power of p exceeding `lower`.
std::uint64_t binom_mod_p(std::int64_t upper, std::uint32_t lower, std::uint64_t p);

/// Parity of binom(upper, lower); the hot path of the GF(2) systems.
bool binom_odd(std::int64_t upper, std::uint32_t lower) noexcept;

/// binom(upper, lower) as an element of the field `spec`, rendered as a
/// rational (an integer in characteristic 0, a residue in [0, p) otherwise).
Rational binom_mod(std::int64_t upper, std::uint32_t lower, const FieldSpec& spec);

/// Falling factorial upper*(upper-1)*...*(upper-order+1).
BigInt falling_factorial(std::int64_t upper, std::uint32_t order);

// Integer helpers shared by the lattice and presentation code.
std::int64_t floor_div(std::int64_t num, std::int64_t den);
std::int64_t ceil_div(std::int64_t num, std::int64_t den);

struct ExtendedGcd {
  std::int64_t g;
  std::int64_t x;
  std::int64_t y;  // g == x*a + y*b, g >= 0
};
ExtendedGcd extended_gcd(std::int64_t a, std::int64_t b);

}  // namespace smc
