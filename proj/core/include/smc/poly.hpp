#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <unordered_map>
#include <utility>
#include <variant>
#include <vector>

#include "smc/exactmath.hpp"
#include "smc/lattice.hpp"

namespace smc {

inline std::uint64_t pack_monomial(const Monomial& m) {
  return (static_cast<std::uint64_t>(m.i) << 42) | (static_cast<std::uint64_t>(m.j) << 21) | m.k;
}
inline Monomial unpack_monomial(std::uint64_t key) {
  constexpr std::uint64_t mask = (1ULL << 21) - 1;
  return {static_cast<std::uint32_t>(key >> 42), static_cast<std::uint32_t>((key >> 21) & mask),
          static_cast<std::uint32_t>(key & mask)};
}

std::string monomial_string(const Monomial& m);

/// Sparse polynomial in x, y, z. Terms are kept sorted by (i, j, k) with no
/// zero coefficients.
template <class Field>
class SparsePoly {
 public:
  using Element = typename Field::Element;
  using Term = std::pair<Monomial, Element>;

  explicit SparsePoly(Field field) : field_(std::move(field)) {}

  static SparsePoly term(Field field, const Monomial& m, Element coef) {
    SparsePoly p(std::move(field));
    if (!p.field_.is_zero(coef)) p.terms_.emplace_back(m, std::move(coef));
    return p;
  }
  static SparsePoly monomial(Field field, const Monomial& m) {
    Element one = field.one();
    return term(std::move(field), m, std::move(one));
  }
  static SparsePoly constant(Field field, Element c) { return term(std::move(field), Monomial{}, std::move(c)); }

  /// Builds from arbitrary (possibly repeated, unsorted) terms.
  static SparsePoly from_terms(Field field, std::vector<Term> terms) {
    SparsePoly p(std::move(field));
    std::sort(terms.begin(), terms.end(), [](const Term& l, const Term& r) { return l.first < r.first; });
    for (auto& t : terms) {
      if (!p.terms_.empty() && p.terms_.back().first == t.first) {
        p.terms_.back().second = p.field_.add(p.terms_.back().second, t.second);
        if (p.field_.is_zero(p.terms_.back().second)) p.terms_.pop_back();
      } else if (!p.field_.is_zero(t.second)) {
        p.terms_.push_back(std::move(t));
      }
    }
    return p;
  }

  const Field& field() const noexcept { return field_; }
  const std::vector<Term>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }

  Element coefficient(const Monomial& m) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                               [](const Term& t, const Monomial& key) { return t.first < key; });
    if (it != terms_.end() && it->first == m) return it->second;
    return field_.zero();
  }

  /// Common weighted degree of all terms; nullopt for the zero polynomial or
  /// when terms disagree.
  std::optional<std::int64_t> homogeneous_degree(const Weights& w) const {
    if (terms_.empty()) return std::nullopt;
    std::int64_t d = weighted_degree(w, terms_.front().first);
    for (const auto& t : terms_) {
      if (weighted_degree(w, t.first) != d) return std::nullopt;
    }
    return d;
  }

  /// Throws NotHomogeneous for inhomogeneous input; the zero polynomial has degree 0.
  std::int64_t degree(const Weights& w) const {
    if (terms_.empty()) return 0;
    auto d = homogeneous_degree(w);
    if (!d) throw Error(ErrorCode::NotHomogeneous, to_string() + " is not weighted-homogeneous");
    return *d;
  }

  SparsePoly operator+(const SparsePoly& o) const { return combine(o, false); }
  SparsePoly operator-(const SparsePoly& o) const { return combine(o, true); }
  SparsePoly operator-() const {
    SparsePoly r = *this;
    for (auto& t : r.terms_) t.second = field_.neg(t.second);
    return r;
  }

  SparsePoly operator*(const SparsePoly& o) const {
    check_field(o);
    if (is_zero() || o.is_zero()) return SparsePoly(field_);
    std::unordered_map<std::uint64_t, Element> acc;
    acc.reserve(terms_.size() * o.terms_.size());
    for (const auto& [ma, ca] : terms_) {
      for (const auto& [mb, cb] : o.terms_) {
        Monomial m{ma.i + mb.i, ma.j + mb.j, ma.k + mb.k};
        auto [it, inserted] = acc.try_emplace(pack_monomial(m), field_.zero());
        it->second = field_.add(it->second, field_.mul(ca, cb));
      }
    }
    SparsePoly r(field_);
    r.terms_.reserve(acc.size());
    std::vector<std::pair<std::uint64_t, Element>> flat(acc.begin(), acc.end());
    std::sort(flat.begin(), flat.end(), [](const auto& l, const auto& r2) { return l.first < r2.first; });
    for (auto& [key, c] : flat) {
      if (!field_.is_zero(c)) r.terms_.emplace_back(unpack_monomial(key), std::move(c));
    }
    return r;
  }

  SparsePoly pow(std::uint32_t n) const {
    SparsePoly result = constant(field_, field_.one());
    SparsePoly base = *this;
    while (n) {
      if (n & 1) result = result * base;
      n >>= 1;
      if (n) base = base * base;
    }
    return result;
  }

  SparsePoly scaled(const Element& c) const {
    SparsePoly r(field_);
    if (field_.is_zero(c)) return r;
    for (const auto& t : terms_) r.terms_.emplace_back(t.first, field_.mul(t.second, c));
    return r;
  }

  /// Divides by x^e; throws NotDivisible naming the first offending term.
  SparsePoly exact_div_x(std::uint32_t e) const {
    SparsePoly r(field_);
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) {
      if (t.first.i < e) {
        throw Error(ErrorCode::NotDivisible, "term " + monomial_string(t.first) + " is not divisible by x^" +
                                                 std::to_string(e));
      }
      r.terms_.emplace_back(Monomial{t.first.i - e, t.first.j, t.first.k}, t.second);
    }
    return r;
  }

  /// The part free of x, i.e. the image modulo (x).
  SparsePoly mod_x() const {
    SparsePoly r(field_);
    for (const auto& t : terms_) {
      if (t.first.i != 0) break;  // sorted by i first
      r.terms_.push_back(t);
    }
    return r;
  }

  bool operator==(const SparsePoly& o) const {
    return field_.characteristic() == o.field_.characteristic() && terms_ == o.terms_;
  }

  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
      std::string coef = field_.to_string(c);
      bool negative = !coef.empty() && coef.front() == '-';
      if (negative) coef.erase(0, 1);
      if (first) {
        if (negative) os << '-';
      } else {
        os << (negative ? " - " : " + ");
      }
      first = false;
      bool is_const = m == Monomial{};
      if (coef != "1" || is_const) {
        os << coef;
        if (!is_const) os << '*';
      }
      if (!is_const) os << monomial_string(m);
    }
    return os.str();
  }

 private:
  void check_field(const SparsePoly& o) const {
    if (field_.characteristic() != o.field_.characteristic()) {
      throw Error(ErrorCode::FieldMismatch, "operands live over different fields");
    }
  }

  SparsePoly combine(const SparsePoly& o, bool subtract) const {
    check_field(o);
    SparsePoly r(field_);
    r.terms_.reserve(terms_.size() + o.terms_.size());
    std::size_t a = 0, b = 0;
    while (a < terms_.size() || b < o.terms_.size()) {
      if (b == o.terms_.size() || (a < terms_.size() && terms_[a].first < o.terms_[b].first)) {
        r.terms_.push_back(terms_[a++]);
      } else if (a == terms_.size() || o.terms_[b].first < terms_[a].first) {
        const auto& t = o.terms_[b++];
        r.terms_.emplace_back(t.first, subtract ? field_.neg(t.second) : t.second);
      } else {
        Element c = subtract ? field_.sub(terms_[a].second, o.terms_[b].second)
                             : field_.add(terms_[a].second, o.terms_[b].second);
        if (!field_.is_zero(c)) r.terms_.emplace_back(terms_[a].first, std::move(c));
        ++a;
        ++b;
      }
    }
    return r;
  }

  Field field_;
  std::vector<Term> terms_;
};

using ModPoly = SparsePoly<PrimeField>;
using RationalPoly = SparsePoly<RationalField>;
/// A polynomial over a field chosen at run time.
using AnyPoly = std::variant<ModPoly, RationalPoly>;

FieldSpec field_of(const AnyPoly& p);
std::string to_string(const AnyPoly& p);

}  // namespace smc
