#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "smc/lattice.hpp"
#include "smc/poly.hpp"

namespace smc {

/// Parsed polynomial expression over named generators and x, y, z.
struct Expr {
  enum class Kind { Number, Symbol, Add, Sub, Mul, Div, Pow, Neg };
  Kind kind = Kind::Number;
  std::int64_t value = 0;  // Number literal, or the exponent of Pow
  std::string name;        // Symbol
  std::vector<Expr> args;
};

/// Grammar: sums and differences of products of powers; juxtaposition is not
/// accepted, every product needs '*'. Division is only by x or x^e.
/// Throws ParseError with the column of the problem.
Expr parse_expr(std::string_view text);

std::string to_string(const Expr& e);

/// The monomial x^i y^j z^k written as a product of powers of x, y, z.
Monomial parse_monomial(std::string_view text);

/// Factors (name, exponent) of an expression that is a plain product of
/// powers of symbols; repeated names are merged. Throws ParseError otherwise.
std::vector<std::pair<std::string, std::uint32_t>> product_factors(const Expr& e);

template <class Field>
using SymbolLookup = std::function<const SparsePoly<Field>*(const std::string&)>;

/// x, y and z are built in; other symbols come from `lookup`, which returns
/// nullptr for unknown names (reported as DataError).
template <class Field>
SparsePoly<Field> evaluate(const Expr& e, const Field& field, const SymbolLookup<Field>& lookup);

extern template SparsePoly<PrimeField> evaluate(const Expr&, const PrimeField&, const SymbolLookup<PrimeField>&);
extern template SparsePoly<RationalField> evaluate(const Expr&, const RationalField&,
                                                   const SymbolLookup<RationalField>&);

}  // namespace smc
