#include "smc/formula.hpp"

#include <cctype>
#include <charconv>
#include <map>

namespace smc {

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Expr parse() {
    Expr e = sum();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw Error(ErrorCode::ParseError,
                what + " at column " + std::to_string(pos_ + 1) + " in \"" + std::string(text_) + "\"");
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  std::int64_t integer() {
    skip_space();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected an integer");
    std::int64_t v = 0;
    auto [ptr, ec] = std::from_chars(text_.data() + start, text_.data() + pos_, v);
    if (ec != std::errc()) fail("integer out of range");
    return v;
  }

  Expr sum() {
    Expr lhs = product();
    while (true) {
      if (accept('+')) {
        lhs = Expr{Expr::Kind::Add, 0, {}, {std::move(lhs), product()}};
      } else if (accept('-')) {
        lhs = Expr{Expr::Kind::Sub, 0, {}, {std::move(lhs), product()}};
      } else {
        return lhs;
      }
    }
  }

  Expr product() {
    Expr lhs = unary();
    while (true) {
      if (accept('*')) {
        lhs = Expr{Expr::Kind::Mul, 0, {}, {std::move(lhs), unary()}};
      } else if (accept('/')) {
        Expr rhs = power();
        const Expr& base = rhs.kind == Expr::Kind::Pow ? rhs.args[0] : rhs;
        if (base.kind != Expr::Kind::Symbol || base.name != "x") fail("only division by a power of x is supported");
        lhs = Expr{Expr::Kind::Div, 0, {}, {std::move(lhs), std::move(rhs)}};
      } else {
        return lhs;
      }
    }
  }

  Expr unary() {
    if (accept('-')) return Expr{Expr::Kind::Neg, 0, {}, {unary()}};
    return power();
  }

  Expr power() {
    Expr base = primary();
    if (accept('^')) {
      std::int64_t e = integer();
      if (e > UINT32_MAX) fail("exponent too large");
      return Expr{Expr::Kind::Pow, e, {}, {std::move(base)}};
    }
    return base;
  }

  Expr primary() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Expr inner = sum();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return Expr{Expr::Kind::Number, integer(), {}, {}};
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
        ++pos_;
      }
      return Expr{Expr::Kind::Symbol, 0, std::string(text_.substr(start, pos_ - start)), {}};
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

int precedence(const Expr& e) {
  switch (e.kind) {
    case Expr::Kind::Add:
    case Expr::Kind::Sub: return 1;
    case Expr::Kind::Mul:
    case Expr::Kind::Div: return 2;
    case Expr::Kind::Neg: return 3;
    case Expr::Kind::Pow: return 4;
    default: return 5;
  }
}

std::string wrap(const Expr& e, int min_prec) {
  std::string s = to_string(e);
  return precedence(e) < min_prec ? "(" + s + ")" : s;
}

}  // namespace

Expr parse_expr(std::string_view text) { return Parser(text).parse(); }

std::string to_string(const Expr& e) {
  switch (e.kind) {
    case Expr::Kind::Number: return std::to_string(e.value);
    case Expr::Kind::Symbol: return e.name;
    case Expr::Kind::Add: return wrap(e.args[0], 1) + " + " + wrap(e.args[1], 2);
    case Expr::Kind::Sub: return wrap(e.args[0], 1) + " - " + wrap(e.args[1], 2);
    case Expr::Kind::Mul: return wrap(e.args[0], 2) + "*" + wrap(e.args[1], 3);
    case Expr::Kind::Div: return wrap(e.args[0], 2) + " / " + wrap(e.args[1], 3);
    case Expr::Kind::Neg: return "-" + wrap(e.args[0], 3);
    case Expr::Kind::Pow: return wrap(e.args[0], 5) + "^" + std::to_string(e.value);
  }
  return {};
}

std::vector<std::pair<std::string, std::uint32_t>> product_factors(const Expr& e) {
  std::map<std::string, std::uint32_t> acc;
  std::vector<std::string> order;
  auto add = [&](const std::string& name, std::uint32_t n) {
    if (!acc.count(name)) order.push_back(name);
    acc[name] += n;
  };
  std::function<void(const Expr&)> walk = [&](const Expr& node) {
    switch (node.kind) {
      case Expr::Kind::Symbol: add(node.name, 1); break;
      case Expr::Kind::Pow:
        if (node.args[0].kind != Expr::Kind::Symbol) {
          throw Error(ErrorCode::ParseError, "not a product of symbol powers: " + to_string(e));
        }
        add(node.args[0].name, static_cast<std::uint32_t>(node.value));
        break;
      case Expr::Kind::Mul:
        walk(node.args[0]);
        walk(node.args[1]);
        break;
      default: throw Error(ErrorCode::ParseError, "not a product of symbol powers: " + to_string(e));
    }
  };
  walk(e);
  std::vector<std::pair<std::string, std::uint32_t>> out;
  for (const auto& name : order) out.emplace_back(name, acc[name]);
  return out;
}

Monomial parse_monomial(std::string_view text) {
  Monomial m;
  for (const auto& [name, n] : product_factors(parse_expr(text))) {
    if (name == "x") {
      m.i += n;
    } else if (name == "y") {
      m.j += n;
    } else if (name == "z") {
      m.k += n;
    } else {
      throw Error(ErrorCode::ParseError, "unknown variable '" + name + "' in monomial \"" + std::string(text) + "\"");
    }
  }
  return m;
}

template <class Field>
SparsePoly<Field> evaluate(const Expr& e, const Field& field, const SymbolLookup<Field>& lookup) {
  using Poly = SparsePoly<Field>;
  switch (e.kind) {
    case Expr::Kind::Number: return Poly::constant(field, field.from_int(e.value));
    case Expr::Kind::Symbol: {
      if (e.name == "x") return Poly::monomial(field, {1, 0, 0});
      if (e.name == "y") return Poly::monomial(field, {0, 1, 0});
      if (e.name == "z") return Poly::monomial(field, {0, 0, 1});
      const Poly* p = lookup ? lookup(e.name) : nullptr;
      if (!p) throw Error(ErrorCode::DataError, "unknown symbol '" + e.name + "'");
      return *p;
    }
    case Expr::Kind::Add: return evaluate(e.args[0], field, lookup) + evaluate(e.args[1], field, lookup);
    case Expr::Kind::Sub: return evaluate(e.args[0], field, lookup) - evaluate(e.args[1], field, lookup);
    case Expr::Kind::Mul: return evaluate(e.args[0], field, lookup) * evaluate(e.args[1], field, lookup);
    case Expr::Kind::Neg: return -evaluate(e.args[0], field, lookup);
    case Expr::Kind::Pow: return evaluate(e.args[0], field, lookup).pow(static_cast<std::uint32_t>(e.value));
    case Expr::Kind::Div: {
      const Expr& d = e.args[1];
      auto exponent = static_cast<std::uint32_t>(d.kind == Expr::Kind::Pow ? d.value : 1);
      return evaluate(e.args[0], field, lookup).exact_div_x(exponent);
    }
  }
  throw Error(ErrorCode::ParseError, "malformed expression");
}

template SparsePoly<PrimeField> evaluate(const Expr&, const PrimeField&, const SymbolLookup<PrimeField>&);
template SparsePoly<RationalField> evaluate(const Expr&, const RationalField&, const SymbolLookup<RationalField>&);

}  // namespace smc
