#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "smc/exactmath.hpp"

namespace smc {

/// Dense univariate polynomial over a field; coefficient i multiplies v^i.
/// No trailing zeros, so the zero polynomial has no coefficients.
template <class Field>
class UniPoly {
 public:
  using Element = typename Field::Element;

  explicit UniPoly(Field field) : field_(std::move(field)) {}
  UniPoly(Field field, std::vector<Element> coeffs) : field_(std::move(field)), c_(std::move(coeffs)) { trim(); }

  static UniPoly constant(Field field, Element c) { return UniPoly(field, {std::move(c)}); }

  const Field& field() const { return field_; }
  bool is_zero() const { return c_.empty(); }
  /// -1 for zero.
  std::int64_t degree() const { return static_cast<std::int64_t>(c_.size()) - 1; }
  const Element& lead() const { return c_.back(); }
  const std::vector<Element>& coeffs() const { return c_; }

  UniPoly operator+(const UniPoly& o) const {
    std::vector<Element> r(std::max(c_.size(), o.c_.size()), field_.zero());
    for (std::size_t i = 0; i < c_.size(); ++i) r[i] = c_[i];
    for (std::size_t i = 0; i < o.c_.size(); ++i) r[i] = field_.add(r[i], o.c_[i]);
    return UniPoly(field_, std::move(r));
  }
  UniPoly operator-(const UniPoly& o) const {
    std::vector<Element> r(std::max(c_.size(), o.c_.size()), field_.zero());
    for (std::size_t i = 0; i < c_.size(); ++i) r[i] = c_[i];
    for (std::size_t i = 0; i < o.c_.size(); ++i) r[i] = field_.sub(r[i], o.c_[i]);
    return UniPoly(field_, std::move(r));
  }
  UniPoly operator*(const UniPoly& o) const {
    if (is_zero() || o.is_zero()) return UniPoly(field_);
    std::vector<Element> r(c_.size() + o.c_.size() - 1, field_.zero());
    for (std::size_t i = 0; i < c_.size(); ++i) {
      if (field_.is_zero(c_[i])) continue;
      for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] = field_.add(r[i + j], field_.mul(c_[i], o.c_[j]));
    }
    return UniPoly(field_, std::move(r));
  }
  UniPoly scaled(const Element& s) const {
    std::vector<Element> r;
    r.reserve(c_.size());
    for (const auto& x : c_) r.push_back(field_.mul(x, s));
    return UniPoly(field_, std::move(r));
  }

  /// Quotient and remainder; divisor must be nonzero.
  std::pair<UniPoly, UniPoly> divmod(const UniPoly& d) const {
    if (d.is_zero()) throw Error(ErrorCode::InvalidArgument, "polynomial division by zero");
    std::vector<Element> rem = c_;
    std::vector<Element> quo(c_.size() >= d.c_.size() ? c_.size() - d.c_.size() + 1 : 0, field_.zero());
    Element inv = field_.inv(d.lead());
    for (std::int64_t k = static_cast<std::int64_t>(rem.size()) - 1; k >= d.degree(); --k) {
      if (field_.is_zero(rem[k])) continue;
      Element q = field_.mul(rem[k], inv);
      std::size_t shift = static_cast<std::size_t>(k - d.degree());
      quo[shift] = q;
      for (std::size_t j = 0; j < d.c_.size(); ++j) rem[shift + j] = field_.sub(rem[shift + j], field_.mul(q, d.c_[j]));
    }
    return {UniPoly(field_, std::move(quo)), UniPoly(field_, std::move(rem))};
  }

  UniPoly monic() const {
    if (is_zero()) return *this;
    return scaled(field_.inv(lead()));
  }

  friend bool operator==(const UniPoly& l, const UniPoly& r) { return l.c_ == r.c_; }

 private:
  void trim() {
    while (!c_.empty() && field_.is_zero(c_.back())) c_.pop_back();
  }

  Field field_;
  std::vector<Element> c_;
};

template <class Field>
UniPoly<Field> gcd(UniPoly<Field> a, UniPoly<Field> b) {
  while (!b.is_zero()) {
    auto r = a.divmod(b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

/// Polynomial in w with coefficients in K[v]; entry i multiplies w^i.
template <class Field>
class BiPoly {
 public:
  using Uni = UniPoly<Field>;

  explicit BiPoly(Field field) : field_(std::move(field)) {}
  BiPoly(Field field, std::vector<Uni> coeffs) : field_(std::move(field)), c_(std::move(coeffs)) { trim(); }

  /// From (v-exponent, w-exponent, coefficient) triples with nonnegative exponents.
  static BiPoly from_terms(Field field,
                           const std::vector<std::tuple<std::int64_t, std::int64_t, typename Field::Element>>& terms) {
    std::int64_t max_w = -1, max_v = -1;
    for (const auto& [ev, ew, c] : terms) {
      max_w = std::max(max_w, ew);
      max_v = std::max(max_v, ev);
    }
    std::vector<std::vector<typename Field::Element>> dense(
        static_cast<std::size_t>(max_w + 1),
        std::vector<typename Field::Element>(static_cast<std::size_t>(max_v + 1), field.zero()));
    for (const auto& [ev, ew, c] : terms) dense[ew][ev] = field.add(dense[ew][ev], c);
    std::vector<Uni> coeffs;
    for (auto& row : dense) coeffs.emplace_back(field, std::move(row));
    return BiPoly(std::move(field), std::move(coeffs));
  }

  const Field& field() const { return field_; }
  bool is_zero() const { return c_.empty(); }
  std::int64_t degree_w() const { return static_cast<std::int64_t>(c_.size()) - 1; }
  std::int64_t degree_v() const {
    std::int64_t d = -1;
    for (const auto& u : c_) d = std::max(d, u.degree());
    return d;
  }
  const Uni& lead() const { return c_.back(); }
  const std::vector<Uni>& coeffs() const { return c_; }

  /// gcd of the K[v] coefficients, monic.
  Uni content() const {
    Uni g(field_);
    for (const auto& u : c_) g = gcd(g, u);
    return g;
  }

  BiPoly divide_by(const Uni& d) const {
    std::vector<Uni> r;
    for (const auto& u : c_) {
      auto [q, rem] = u.divmod(d);
      if (!rem.is_zero()) throw Error(ErrorCode::InvalidArgument, "content division is not exact");
      r.push_back(std::move(q));
    }
    return BiPoly(field_, std::move(r));
  }

  BiPoly primitive_part() const {
    if (is_zero()) return *this;
    return divide_by(content());
  }

  BiPoly scaled(const Uni& s) const {
    std::vector<Uni> r;
    for (const auto& u : c_) r.push_back(u * s);
    return BiPoly(field_, std::move(r));
  }

  /// lc(d)^k * (*this) reduced modulo d in w, for a suitable k.
  BiPoly pseudo_remainder(const BiPoly& d) const {
    BiPoly r = *this;
    const Uni& ld = d.lead();
    while (!r.is_zero() && r.degree_w() >= d.degree_w()) {
      Uni lr = r.lead();
      std::size_t shift = static_cast<std::size_t>(r.degree_w() - d.degree_w());
      std::vector<Uni> next;
      for (const auto& u : r.c_) next.push_back(u * ld);
      for (std::size_t j = 0; j < d.c_.size(); ++j) next[shift + j] = next[shift + j] - d.c_[j] * lr;
      r = BiPoly(field_, std::move(next));
    }
    return r;
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }

  Field field_;
  std::vector<Uni> c_;
};

/// gcd in K[v][w] by content splitting and a primitive pseudo-remainder
/// sequence; normalized only up to a unit of K.
template <class Field>
BiPoly<Field> gcd(const BiPoly<Field>& a, const BiPoly<Field>& b) {
  if (a.is_zero()) return b.primitive_part().scaled(b.content());
  if (b.is_zero()) return a.primitive_part().scaled(a.content());
  UniPoly<Field> c = gcd(a.content(), b.content());
  BiPoly<Field> p = a.primitive_part();
  BiPoly<Field> q = b.primitive_part();
  if (p.degree_w() < q.degree_w()) std::swap(p, q);
  while (!q.is_zero()) {
    BiPoly<Field> r = p.pseudo_remainder(q);
    p = std::move(q);
    q = r.is_zero() ? r : r.primitive_part();
  }
  return p.primitive_part().scaled(c);
}

}  // namespace smc
