#include "smc/poly.hpp"

namespace smc {

std::string monomial_string(const Monomial& m) {
  std::string out;
  auto emit = [&out](char var, std::uint32_t e) {
    if (e == 0) return;
    if (!out.empty()) out += '*';
    out += var;
    if (e > 1) out += "^" + std::to_string(e);
  };
  emit('x', m.i);
  emit('y', m.j);
  emit('z', m.k);
  return out.empty() ? std::string("1") : out;
}

FieldSpec field_of(const AnyPoly& p) {
  return std::visit([](const auto& q) { return q.field().spec(); }, p);
}

std::string to_string(const AnyPoly& p) {
  return std::visit([](const auto& q) { return q.to_string(); }, p);
}

}  // namespace smc
