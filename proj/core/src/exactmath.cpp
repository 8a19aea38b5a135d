#include "smc/exactmath.hpp"

#include <array>
#include <cstdlib>

namespace smc {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::NotPairwiseCoprime: return "NotPairwiseCoprime";
    case ErrorCode::InvalidField: return "InvalidField";
    case ErrorCode::CompleteIntersection: return "CompleteIntersection";
    case ErrorCode::OutsideRegion: return "OutsideRegion";
    case ErrorCode::NotHomogeneous: return "NotHomogeneous";
    case ErrorCode::NegativeH1: return "NegativeH1";
    case ErrorCode::DegreeTooSmall: return "DegreeTooSmall";
    case ErrorCode::EmptyLine: return "EmptyLine";
    case ErrorCode::NoCandidate: return "NoCandidate";
    case ErrorCode::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorCode::FieldMismatch: return "FieldMismatch";
    case ErrorCode::NotDivisible: return "NotDivisible";
    case ErrorCode::OrderMismatch: return "OrderMismatch";
    case ErrorCode::DegreeMismatch: return "DegreeMismatch";
    case ErrorCode::ModXMismatch: return "ModXMismatch";
    case ErrorCode::LeadMismatch: return "LeadMismatch";
    case ErrorCode::MembershipFailure: return "MembershipFailure";
    case ErrorCode::InfiniteColength: return "InfiniteColength";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::DataError: return "DataError";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::CheckFailed: return "CheckFailed";
  }
  return "Unknown";
}

namespace {

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  base %= m;
  while (e) {
    if (e & 1) r = mul_mod(r, base, m);
    base = mul_mod(base, base, m);
    e >>= 1;
  }
  return r;
}

std::uint64_t reduce_signed(std::int64_t v, std::uint64_t m) {
  if (v >= 0) return static_cast<std::uint64_t>(v) % m;
  // -(v+1) avoids overflow at INT64_MIN.
  std::uint64_t r = static_cast<std::uint64_t>(-(v + 1)) % m;
  return m - 1 - r;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t q : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % q == 0) return n == q;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // Deterministic for all 64-bit n with these witnesses.
  for (std::uint64_t w : {2ULL, 325ULL, 9375ULL, 28178ULL, 450775ULL, 9780504ULL, 1795265022ULL}) {
    std::uint64_t x = pow_mod(w, d, n);
    if (x == 0 || x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < s; ++i) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

FieldSpec::FieldSpec(std::uint64_t characteristic) : characteristic_(characteristic) {
  if (characteristic != 0 && !is_prime(characteristic)) {
    throw Error(ErrorCode::InvalidField,
                "characteristic " + std::to_string(characteristic) + " is neither 0 nor prime");
  }
}

std::string FieldSpec::name() const {
  return is_rational() ? std::string("Q") : "GF(" + std::to_string(characteristic_) + ")";
}

PrimeField::PrimeField(std::uint64_t p) : p_(p) {
  if (!is_prime(p) || p >= (1ULL << 63)) {
    throw Error(ErrorCode::InvalidField, "GF(p) needs a prime p < 2^63, got " + std::to_string(p));
  }
}

PrimeField::Element PrimeField::inv(Element a) const {
  if (a == 0) throw Error(ErrorCode::InvalidArgument, "inverse of zero in GF(" + std::to_string(p_) + ")");
  // Extended Euclid on (a, p) with signed 128-bit cofactors.
  __int128 r0 = p_, r1 = a, t0 = 0, t1 = 1;
  while (r1 != 0) {
    __int128 q = r0 / r1;
    __int128 r2 = r0 - q * r1;
    r0 = r1;
    r1 = r2;
    __int128 t2 = t0 - q * t1;
    t0 = t1;
    t1 = t2;
  }
  if (t0 < 0) t0 += p_;
  return static_cast<Element>(t0);
}

PrimeField::Element PrimeField::from_int(std::int64_t v) const noexcept { return reduce_signed(v, p_); }

PrimeField::Element PrimeField::from_bigint(const BigInt& v) const {
  BigInt r;
  mpz_fdiv_r_ui(r.get_mpz_t(), v.get_mpz_t(), p_);
  return r.get_ui();
}

RationalField::Element RationalField::inv(const Element& a) const {
  if (sgn(a) == 0) throw Error(ErrorCode::InvalidArgument, "inverse of zero in Q");
  Rational r(a.get_den(), a.get_num());
  r.canonicalize();
  return r;
}

BigInt binom(std::int64_t upper, std::uint32_t lower) {
  // Each prefix value is binom(upper, i), an integer, so every division is exact.
  BigInt r = 1;
  for (std::uint32_t i = 1; i <= lower; ++i) {
    if (upper >= 0 && static_cast<std::int64_t>(i) > upper) return 0;
    r *= BigInt(static_cast<long>(upper - static_cast<std::int64_t>(i) + 1));
    mpz_divexact_ui(r.get_mpz_t(), r.get_mpz_t(), i);
  }
  return r;
}

bool binom_odd(std::int64_t upper, std::uint32_t lower) noexcept {
  if (lower == 0) return true;
  // binom(n + 2^e, k) == binom(n, k) mod 2 whenever k < 2^e.
  int e = 64 - __builtin_clzll(static_cast<unsigned long long>(lower));
  std::uint64_t mask = e >= 63 ? ~0ULL : ((1ULL << e) - 1);
  std::uint64_t n = static_cast<std::uint64_t>(upper) & mask;
  return (lower & ~n) == 0;
}

std::uint64_t binom_mod_p(std::int64_t upper, std::uint32_t lower, std::uint64_t p) {
  if (p == 2) return binom_odd(upper, lower) ? 1 : 0;
  if (lower == 0) return 1 % p;
  // Smallest p^e > lower; binom(., lower) mod p has period p^e in the upper index.
  // p^e <= p * lower < 2^64 since lower < 2^32 and p^(e-1) <= lower.
  std::uint64_t modulus = p;
  while (modulus <= lower) modulus *= p;
  std::uint64_t n = reduce_signed(upper, modulus);
  std::uint64_t k = lower;
  std::uint64_t result = 1 % p;
  while (k > 0 || n > 0) {
    std::uint64_t nd = n % p, kd = k % p;
    if (kd > nd) return 0;
    // binom(nd, kd) mod p with nd < p.
    std::uint64_t num = 1, den = 1;
    for (std::uint64_t i = 0; i < kd; ++i) {
      num = mul_mod(num, nd - i, p);
      den = mul_mod(den, i + 1, p);
    }
    result = mul_mod(result, mul_mod(num, pow_mod(den, p - 2, p), p), p);
    n /= p;
    k /= p;
  }
  return result;
}

Rational binom_mod(std::int64_t upper, std::uint32_t lower, const FieldSpec& spec) {
  if (spec.is_rational()) return Rational(binom(upper, lower));
  return Rational(BigInt(static_cast<unsigned long>(binom_mod_p(upper, lower, spec.characteristic()))));
}

BigInt falling_factorial(std::int64_t upper, std::uint32_t order) {
  BigInt r = 1;
  for (std::uint32_t i = 0; i < order; ++i) {
    r *= BigInt(static_cast<long>(upper - static_cast<std::int64_t>(i)));
  }
  return r;
}

std::int64_t floor_div(std::int64_t num, std::int64_t den) {
  std::int64_t q = num / den;
  if ((num % den != 0) && ((num < 0) != (den < 0))) --q;
  return q;
}

std::int64_t ceil_div(std::int64_t num, std::int64_t den) {
  std::int64_t q = num / den;
  if ((num % den != 0) && ((num < 0) == (den < 0))) ++q;
  return q;
}

ExtendedGcd extended_gcd(std::int64_t a, std::int64_t b) {
  std::int64_t r0 = a, r1 = b, x0 = 1, x1 = 0, y0 = 0, y1 = 1;
  while (r1 != 0) {
    std::int64_t q = floor_div(r0, r1);
    std::int64_t r2 = r0 - q * r1;
    r0 = r1;
    r1 = r2;
    std::int64_t x2 = x0 - q * x1;
    x0 = x1;
    x1 = x2;
    std::int64_t y2 = y0 - q * y1;
    y0 = y1;
    y1 = y2;
  }
  if (r0 < 0) return {-r0, -x0, -y0};
  return {r0, x0, y0};
}

}  // namespace smc
