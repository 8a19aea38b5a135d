#include "smc/peeling.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

namespace smc {

bool LatticeLine::contains(const LatticePoint& p) const {
  return dy * (p.alpha - base.alpha) - dx * (p.beta - base.beta) == 0;
}

LatticeLine LatticeLine::through(const LatticePoint& base, std::int64_t dx, std::int64_t dy) {
  if (dx == 0 && dy == 0) throw Error(ErrorCode::InvalidArgument, "line direction must be nonzero");
  std::int64_t g = std::gcd(dx, dy);
  dx /= g;
  dy /= g;
  if (dx < 0 || (dx == 0 && dy < 0)) {
    dx = -dx;
    dy = -dy;
  }
  return {dx, dy, base};
}

std::string LatticeLine::equation() const {
  // dy*alpha - dx*beta = const, with a positive leading coefficient.
  std::int64_t ca = dy, cb = -dx, rhs = dy * base.alpha - dx * base.beta;
  if (ca < 0 || (ca == 0 && cb < 0)) {
    ca = -ca;
    cb = -cb;
    rhs = -rhs;
  }
  std::ostringstream os;
  auto term = [&os](std::int64_t coef, const char* var, bool lead) {
    if (coef == 0) return;
    if (!lead) os << (coef < 0 ? " - " : " + ");
    else if (coef < 0) os << '-';
    std::int64_t mag = coef < 0 ? -coef : coef;
    if (mag != 1) os << mag << '*';
    os << var;
  };
  term(ca, "alpha", true);
  term(cb, "beta", ca == 0);
  os << " = " << rhs;
  return os.str();
}

std::string_view peel_mode_name(PeelMode mode) {
  switch (mode) {
    case PeelMode::Injective: return "injective";
    case PeelMode::Surjective: return "surjective";
    case PeelMode::Bijective: return "bijective";
  }
  return "?";
}

std::optional<PeelStrategy> parse_peel_strategy(std::string_view name) {
  if (name == "rows") return PeelStrategy::Rows;
  if (name == "columns") return PeelStrategy::Columns;
  if (name == "greedy") return PeelStrategy::Greedy;
  if (name == "explicit") return PeelStrategy::Explicit;
  return std::nullopt;
}

std::string_view peel_strategy_name(PeelStrategy s) {
  switch (s) {
    case PeelStrategy::Rows: return "rows";
    case PeelStrategy::Columns: return "columns";
    case PeelStrategy::Greedy: return "greedy";
    case PeelStrategy::Explicit: return "explicit";
  }
  return "?";
}

std::string_view conclusion_name(Conclusion c) {
  switch (c) {
    case Conclusion::Exact: return "exact";
    case Conclusion::UpperBound: return "upper_bound";
    case Conclusion::LowerBound: return "lower_bound";
    case Conclusion::Inconclusive: return "inconclusive";
  }
  return "?";
}

PeelResult peel(const std::vector<LatticePoint>& points, std::uint32_t order, const LatticeLine& line) {
  if (order < 1) throw Error(ErrorCode::InvalidArgument, "cannot peel at order 0");
  PeelResult out;
  std::size_t hits = 0;
  for (const auto& p : points) {
    if (line.contains(p)) {
      ++hits;
    } else {
      out.remaining.push_back(p);
    }
  }
  if (hits == 0) throw Error(ErrorCode::EmptyLine, "line " + line.equation() + " misses the point set");
  out.order = order - 1;
  out.step.line = line;
  out.step.hits = hits;
  out.step.order_before = order;
  out.step.mode = hits == order ? PeelMode::Bijective : (hits < order ? PeelMode::Injective : PeelMode::Surjective);
  return out;
}

namespace {

struct Candidate {
  LatticeLine line;
  std::size_t hits;
};

// All lines with direction (dx, dy) through at least one point, in a fixed order.
std::vector<Candidate> lines_in_direction(const std::vector<LatticePoint>& points, std::int64_t dx,
                                          std::int64_t dy) {
  // Rows are listed top to bottom, other directions by their invariant.
  std::map<std::int64_t, Candidate> groups;
  for (const auto& p : points) {
    std::int64_t key = dy * p.alpha - dx * p.beta;
    auto it = groups.find(key);
    if (it == groups.end()) {
      groups.emplace(key, Candidate{LatticeLine::through(p, dx, dy), 1});
    } else {
      ++it->second.hits;
    }
  }
  std::vector<Candidate> out;
  for (auto& [key, cand] : groups) out.push_back(cand);
  return out;
}

// Picks the line to peel, or nullopt if the strategy has nothing to offer.
std::optional<LatticeLine> choose(const std::vector<LatticePoint>& points, std::uint32_t order,
                                  PeelStrategy strategy, bool saw_injective, bool saw_surjective) {
  std::vector<std::pair<std::int64_t, std::int64_t>> directions;
  switch (strategy) {
    case PeelStrategy::Rows: directions = {{1, 0}}; break;
    case PeelStrategy::Columns: directions = {{0, 1}}; break;
    case PeelStrategy::Greedy: directions = {{1, 0}, {0, 1}, {1, 1}, {1, -1}}; break;
    case PeelStrategy::Explicit: return std::nullopt;
  }
  std::vector<Candidate> all;
  for (auto [dx, dy] : directions) {
    auto c = lines_in_direction(points, dx, dy);
    all.insert(all.end(), c.begin(), c.end());
  }
  for (const auto& c : all) {
    if (c.hits == order) return c.line;
  }
  if (strategy != PeelStrategy::Greedy) {
    // Largest line; the chain may stop being exact.
    const Candidate* best = nullptr;
    for (const auto& c : all) {
      if (!best || c.hits > best->hits) best = &c;
    }
    return best ? std::optional<LatticeLine>(best->line) : std::nullopt;
  }
  // Greedy keeps the chain pure: injective lines unless it already went surjective.
  const Candidate* inj = nullptr;
  const Candidate* sur = nullptr;
  for (const auto& c : all) {
    if (c.hits < order && (!inj || c.hits > inj->hits)) inj = &c;
    if (c.hits > order && (!sur || c.hits < sur->hits)) sur = &c;
  }
  if (!saw_surjective && inj) return inj->line;
  if (!saw_injective && sur) return sur->line;
  return std::nullopt;
}

}  // namespace

PeelCertificate certify_dim(const std::vector<LatticePoint>& points, std::uint32_t order, PeelStrategy strategy,
                            const std::vector<LatticeLine>& explicit_lines, const FieldSpec& field) {
  if (!field.is_rational()) {
    throw Error(ErrorCode::InvalidField, "peeling certificates hold only in characteristic 0, not " + field.name());
  }
  PeelCertificate cert;
  cert.initial = points;
  cert.initial_order = order;
  std::vector<LatticePoint> current = points;
  std::uint32_t m = order;
  bool saw_injective = false, saw_surjective = false;
  std::size_t next_explicit = 0;
  bool terminal_known = false;

  while (true) {
    if (current.empty()) {
      cert.terminal_dim = 0;
      terminal_known = true;
      break;
    }
    if (m == 0) {
      cert.terminal_dim = static_cast<std::int64_t>(current.size());
      terminal_known = true;
      break;
    }
    if (m == 1) {
      // One condition: coefficients sum to zero.
      cert.terminal_dim = static_cast<std::int64_t>(current.size()) - 1;
      terminal_known = true;
      break;
    }
    std::optional<LatticeLine> line;
    if (strategy == PeelStrategy::Explicit) {
      if (next_explicit < explicit_lines.size()) line = explicit_lines[next_explicit++];
    } else {
      line = choose(current, m, strategy, saw_injective, saw_surjective);
    }
    if (!line) break;
    PeelResult r = peel(current, m, *line);
    saw_injective |= r.step.mode == PeelMode::Injective;
    saw_surjective |= r.step.mode == PeelMode::Surjective;
    cert.steps.push_back(r.step);
    current = std::move(r.remaining);
    m = r.order;
  }
  cert.terminal = current;
  cert.terminal_order = m;

  if (!terminal_known || (saw_injective && saw_surjective)) {
    cert.conclusion = Conclusion::Inconclusive;
    return cert;
  }
  cert.value = cert.terminal_dim;
  if (saw_injective) {
    // An upper bound of zero pins the dimension.
    cert.conclusion = cert.value == 0 ? Conclusion::Exact : Conclusion::UpperBound;
  } else if (saw_surjective) {
    cert.conclusion = Conclusion::LowerBound;
  } else {
    cert.conclusion = Conclusion::Exact;
    if (cert.terminal_dim == 1) cert.tracked_points = cert.terminal;
  }
  return cert;
}

namespace {

nlohmann::json point_json(const LatticePoint& p) { return nlohmann::json::array({p.alpha, p.beta}); }

nlohmann::json points_json(const std::vector<LatticePoint>& pts) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& p : pts) arr.push_back(point_json(p));
  return arr;
}

}  // namespace

nlohmann::json to_json(const PeelCertificate& cert) {
  nlohmann::json j;
  j["initial_order"] = cert.initial_order;
  j["initial_points"] = points_json(cert.initial);
  nlohmann::json steps = nlohmann::json::array();
  for (const auto& s : cert.steps) {
    steps.push_back({{"direction", {s.line.dx, s.line.dy}},
                     {"base", point_json(s.line.base)},
                     {"equation", s.line.equation()},
                     {"order", s.order_before},
                     {"hits", s.hits},
                     {"mode", peel_mode_name(s.mode)}});
  }
  j["steps"] = steps;
  j["terminal"] = {{"order", cert.terminal_order}, {"points", points_json(cert.terminal)}, {"dim", cert.terminal_dim}};
  j["conclusion"] = conclusion_name(cert.conclusion);
  if (cert.conclusion != Conclusion::Inconclusive) j["value"] = cert.value;
  j["tracked_points"] = points_json(cert.tracked_points);
  return j;
}

std::string to_text(const PeelCertificate& cert) {
  std::ostringstream os;
  os << "start: " << cert.initial.size() << " points, order " << cert.initial_order << '\n';
  for (std::size_t n = 0; n < cert.steps.size(); ++n) {
    const auto& s = cert.steps[n];
    os << "step " << n + 1 << ": line " << s.line.equation() << ", hits " << s.hits << ", order " << s.order_before
       << " -> " << s.order_before - 1 << ", " << peel_mode_name(s.mode) << '\n';
  }
  os << "terminal: " << cert.terminal.size() << " points, order " << cert.terminal_order << ", dim "
     << cert.terminal_dim << '\n';
  os << "conclusion: " << conclusion_name(cert.conclusion);
  if (cert.conclusion != Conclusion::Inconclusive) os << ' ' << cert.value;
  os << '\n';
  if (!cert.tracked_points.empty()) {
    os << "tracked:";
    for (const auto& p : cert.tracked_points) os << " (" << p.alpha << "," << p.beta << ")";
    os << '\n';
  }
  return os.str();
}

}  // namespace smc
