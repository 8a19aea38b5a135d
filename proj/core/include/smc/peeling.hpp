#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "smc/exactmath.hpp"
#include "smc/lattice.hpp"

namespace smc {

/// A lattice line {base + t*direction}, direction primitive.
struct LatticeLine {
  std::int64_t dx = 1;
  std::int64_t dy = 0;
  LatticePoint base;

  bool contains(const LatticePoint& p) const;
  /// Canonical form: primitive direction with dx > 0 (or dx == 0, dy > 0).
  static LatticeLine through(const LatticePoint& base, std::int64_t dx, std::int64_t dy);
  /// Integer equation A*alpha + B*beta = C describing the line.
  std::string equation() const;

  friend bool operator==(const LatticeLine&, const LatticeLine&) = default;
};

enum class PeelMode { Injective, Surjective, Bijective };
std::string_view peel_mode_name(PeelMode mode);

struct PeelStep {
  LatticeLine line;
  std::size_t hits = 0;
  std::uint32_t order_before = 0;
  PeelMode mode = PeelMode::Bijective;
};

struct PeelResult {
  std::vector<LatticePoint> remaining;
  std::uint32_t order = 0;
  PeelStep step;
};

/// Removes the points of `points` on `line` and lowers the order by one.
/// Throws EmptyLine if the line misses the set; requires order >= 1.
PeelResult peel(const std::vector<LatticePoint>& points, std::uint32_t order, const LatticeLine& line);

enum class PeelStrategy { Rows, Columns, Greedy, Explicit };
std::optional<PeelStrategy> parse_peel_strategy(std::string_view name);
std::string_view peel_strategy_name(PeelStrategy s);

enum class Conclusion { Exact, UpperBound, LowerBound, Inconclusive };
std::string_view conclusion_name(Conclusion c);

/// Characteristic-0 dimension certificate for K*Q intersected with q^m.
struct PeelCertificate {
  std::vector<LatticePoint> initial;
  std::uint32_t initial_order = 0;
  std::vector<PeelStep> steps;
  std::vector<LatticePoint> terminal;
  std::uint32_t terminal_order = 0;
  std::int64_t terminal_dim = 0;
  Conclusion conclusion = Conclusion::Inconclusive;
  /// Meaningful unless conclusion is Inconclusive.
  std::int64_t value = 0;
  /// Points where the (one-dimensional) solution provably has a nonzero coefficient.
  std::vector<LatticePoint> tracked_points;

  bool exact() const { return conclusion == Conclusion::Exact; }
};

/// Runs the chosen strategy. `explicit_lines` is used only with Explicit.
/// Certificates only hold in characteristic 0; any other field is refused
/// with InvalidField.
PeelCertificate certify_dim(const std::vector<LatticePoint>& points, std::uint32_t order, PeelStrategy strategy,
                            const std::vector<LatticeLine>& explicit_lines = {},
                            const FieldSpec& field = FieldSpec::rationals());

nlohmann::json to_json(const PeelCertificate& cert);
std::string to_text(const PeelCertificate& cert);

}  // namespace smc
