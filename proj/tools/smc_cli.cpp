// smc: symbolic powers of space monomial curves from the command line.
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "smc/curves.hpp"
#include "smc/lattice.hpp"
#include "smc/peeling.hpp"
#include "smc/qadic.hpp"
#include "smc/verifier.hpp"

#ifndef SMC_DEFAULT_DATA_DIR
#define SMC_DEFAULT_DATA_DIR "data/p5_103_169"
#endif

namespace {

using nlohmann::json;

constexpr int kPass = 0;
constexpr int kFail = 1;
constexpr int kUsage = 2;

struct Common {
  std::int64_t a = 0, b = 0, c = 0;
  std::string format = "text";
  std::string output;
};

unsigned thread_budget() {
  if (const char* env = std::getenv("SMC_THREADS")) {
    char* end = nullptr;
    unsigned long v = std::strtoul(env, &end, 10);
    if (end && *end == '\0' && v > 0) return static_cast<unsigned>(v);
    std::cerr << "smc: ignoring SMC_THREADS=" << env << '\n';
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw ? hw : 1;
}

void emit(const Common& opt, const std::string& text) {
  if (opt.output.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(opt.output);
  if (!out) throw smc::Error(smc::ErrorCode::InvalidArgument, "--output: cannot write " + opt.output);
  out << text;
}

void emit_json(const Common& opt, json j) {
  j["schema"] = 1;
  emit(opt, j.dump(2) + "\n");
}

json rational_json(const smc::Rational& q) {
  return {{"num", q.get_num().get_si()}, {"den", q.get_den().get_si()}};
}

json weights_json(const smc::Weights& w) { return {{"a", w.a}, {"b", w.b}, {"c", w.c}}; }

smc::CurvePresentation present(const Common& opt) {
  smc::Weights w{opt.a, opt.b, opt.c};
  smc::require_pairwise_coprime(w);
  return smc::herzog_present(w);
}

void add_weights(CLI::App* cmd, Common& opt) {
  cmd->add_option("a", opt.a, "weight of x")->required();
  cmd->add_option("b", opt.b, "weight of y")->required();
  cmd->add_option("c", opt.c, "weight of z")->required();
  cmd->add_option("--format", opt.format, "output format")->check(CLI::IsMember({"text", "json"}));
  cmd->add_option("-o,--output", opt.output, "write the result to a file");
}

int run_herzog(const Common& opt) {
  smc::CurvePresentation p = present(opt);
  if (opt.format == "json") {
    json j = {{"weights", weights_json(p.weights)},
              {"s2", p.s2}, {"s3", p.s3}, {"t1", p.t1}, {"t3", p.t3}, {"u1", p.u1}, {"u2", p.u2},
              {"s", p.s}, {"t", p.t}, {"u", p.u},
              {"unit", {p.unit.a, p.unit.b, p.unit.c}},
              {"complete_intersection", p.complete_intersection}};
    if (!p.complete_intersection) {
      json rows = json::array();
      for (const auto& h : smc::triangle(p).rows) rows.push_back({h.A, h.B, h.C});
      j["triangle"] = rows;
      j["area"] = rational_json(smc::triangle_area(smc::triangle(p)));
    }
    emit_json(opt, j);
  } else {
    emit(opt, smc::describe(p) + "\n");
  }
  return kPass;
}

struct PointsOpts {
  std::int64_t degree = 0;
  bool interior = false;
  bool dump = false;
};

int run_points(const Common& opt, const PointsOpts& po) {
  smc::CurvePresentation p = present(opt);
  smc::LatticeRegion r = po.interior ? smc::interior_points(p, po.degree) : smc::enumerate_points(p, po.degree);
  std::ostringstream os;
  if (opt.format == "json") {
    json pts = json::array();
    for (const auto& q : r.points) {
      smc::Monomial m = smc::point_to_monomial(p, q, po.degree);
      pts.push_back({q.alpha, q.beta, m.i, m.j, m.k});
    }
    json j = {{"weights", weights_json(p.weights)},
              {"degree", po.degree},
              {"interior", po.interior},
              {"count", r.size()},
              {"row_profile", r.row_profile()}};
    if (po.dump) j["points"] = pts;
    emit_json(opt, j);
    return kPass;
  }
  os << r.size() << '\n';
  os << "rows:";
  for (auto n : r.row_profile()) os << ' ' << n;
  os << '\n';
  if (po.dump) smc::dump_region(os, p, r);
  emit(opt, os.str());
  return kPass;
}

struct DimOpts {
  std::uint64_t characteristic = 0;
  std::uint32_t order = 0;
  std::int64_t degree = 0;
  bool basis = false;
  bool dump_matrix = false;
  std::optional<std::int64_t> expect;
};

int run_dim(const Common& opt, const DimOpts& dopt) {
  smc::CurvePresentation p = present(opt);
  smc::FieldSpec field(dopt.characteristic);
  smc::QAdicSystem sys = smc::qadic_system(p, field, dopt.order, dopt.degree);
  std::int64_t dim = smc::graded_dim(p, field, dopt.order, dopt.degree);
  std::vector<std::string> basis;
  if (dopt.basis) {
    for (const auto& f : smc::graded_basis(p, field, dopt.order, dopt.degree).basis) basis.push_back(smc::to_string(f));
  }
  if (opt.format == "json") {
    json j = {{"weights", weights_json(p.weights)}, {"field", field.name()}, {"order", dopt.order},
              {"degree", dopt.degree}, {"rows", sys.row_count()}, {"cols", sys.col_count()}, {"dim", dim}};
    if (dopt.basis) j["basis"] = basis;
    emit_json(opt, j);
  } else {
    std::ostringstream os;
    os << dim << '\n';
    for (const auto& f : basis) os << f << '\n';
    emit(opt, os.str());
  }
  if (dopt.dump_matrix) smc::dump_matrix(std::cerr, sys);
  if (dopt.expect && *dopt.expect != dim) {
    std::cerr << "smc: dimension " << dim << " differs from the expected " << *dopt.expect << '\n';
    return kFail;
  }
  return kPass;
}

struct PeelOpts {
  std::int64_t degree = 0;
  std::uint32_t order = 0;
  std::string strategy = "rows";
  bool interior = false;
  bool check = false;
};

int run_peel(const Common& opt, const PeelOpts& po) {
  smc::CurvePresentation p = present(opt);
  auto strategy = smc::parse_peel_strategy(po.strategy);
  if (!strategy || *strategy == smc::PeelStrategy::Explicit) {
    throw smc::Error(smc::ErrorCode::InvalidArgument, "--strategy: expected rows, columns or greedy");
  }
  smc::LatticeRegion r = po.interior ? smc::interior_points(p, po.degree) : smc::enumerate_points(p, po.degree);
  smc::PeelCertificate cert = smc::certify_dim(r.points, po.order, *strategy);
  int code = cert.conclusion == smc::Conclusion::Inconclusive ? kFail : kPass;
  std::optional<std::int64_t> actual;
  if (po.check) {
    // Cross-check against linear algebra on the same point set.
    smc::QAdicSystem sys = smc::qadic_system(p, smc::FieldSpec::rationals(), po.order, po.degree);
    sys.region = r;
    actual = static_cast<std::int64_t>(sys.col_count()) - static_cast<std::int64_t>(smc::system_rank(sys));
    bool ok = true;
    switch (cert.conclusion) {
      case smc::Conclusion::Exact: ok = *actual == cert.value; break;
      case smc::Conclusion::UpperBound: ok = *actual <= cert.value; break;
      case smc::Conclusion::LowerBound: ok = *actual >= cert.value; break;
      case smc::Conclusion::Inconclusive: break;
    }
    if (!ok) {
      std::cerr << "smc: certificate disagrees with linear algebra (dim " << *actual << ")\n";
      code = kFail;
    }
  }
  if (opt.format == "json") {
    json j = smc::to_json(cert);
    j["strategy"] = po.strategy;
    j["degree"] = po.degree;
    j["interior"] = po.interior;
    if (actual) j["linear_algebra_dim"] = *actual;
    emit_json(opt, j);
  } else {
    std::string text = smc::to_text(cert);
    if (actual) text += "linear algebra: " + std::to_string(*actual) + "\n";
    emit(opt, text);
  }
  return code;
}

struct CurveOpts {
  std::uint64_t characteristic = 0;
  std::uint32_t max_order = 8;
  std::uint32_t ell_max = 12;
};

int run_negcurve(const Common& opt, const CurveOpts& co) {
  smc::CurvePresentation p = present(opt);
  smc::FieldSpec field(co.characteristic);
  smc::NegativeCurveSearch s = smc::negative_curve_search(p, field, co.max_order);
  if (opt.format == "json") {
    json j = {{"weights", weights_json(p.weights)}, {"field", field.name()}, {"max_order", co.max_order},
              {"searched_up_to", s.searched_up_to}, {"systems_checked", s.systems_checked}};
    if (s.witness) {
      j["found"] = true;
      j["r0"] = s.witness->r0;
      j["d0"] = s.witness->d0;
      j["dimension"] = s.witness->dimension;
      j["slope"] = rational_json(s.witness->slope);
      j["basis"] = smc::to_string(s.witness->basis_poly);
    } else {
      j["found"] = false;
    }
    emit_json(opt, j);
  } else {
    std::ostringstream os;
    if (s.witness) {
      os << "negative curve: r0 = " << s.witness->r0 << ", d0 = " << s.witness->d0 << ", dim "
         << s.witness->dimension << ", slope " << s.witness->slope.get_str() << '\n';
      os << smc::to_string(s.witness->basis_poly) << '\n';
    } else {
      os << "none with order <= " << co.max_order << " (not a proof that none exists)\n";
    }
    emit(opt, os.str());
  }
  return s.witness ? kPass : kFail;
}

int run_huneke(const Common& opt, const CurveOpts& co) {
  smc::CurvePresentation p = present(opt);
  smc::FieldSpec field(co.characteristic);
  smc::NegativeCurveSearch s = smc::negative_curve_search(p, field, co.max_order);
  if (!s.witness) {
    std::cerr << "smc: no negative curve with order <= " << co.max_order << '\n';
    return kFail;
  }
  smc::HunekeOutcome out = smc::huneke_analysis(p, field, *s.witness, co.ell_max);
  json j = smc::to_json(out);
  j["field"] = field.name();
  j["ell_max"] = co.ell_max;
  if (opt.format == "json") {
    emit_json(opt, j);
  } else {
    std::ostringstream os;
    os << "negative curve (" << out.witness.r0 << ", " << out.witness.d0 << "), rationality check "
       << (out.genus_ok ? "passed" : "failed") << '\n';
    os << "candidate (r2, d2) = (" << out.candidate.r << ", " << out.candidate.d << ")\n";
    if (out.ell) {
      os << "H1 vanishes first at ell = " << *out.ell << '\n';
    } else {
      os << "H1 does not vanish for ell <= " << co.ell_max << '\n';
    }
    emit(opt, os.str());
  }
  return out.genus_ok && out.ell ? kPass : kFail;
}

struct VerifyCli {
  std::string data_dir = SMC_DEFAULT_DATA_DIR;
  std::string format = "json";
  std::string output;
  bool timings = false;
  bool rational_run = false;
  std::size_t samples = 5;
  std::uint64_t seed = 59;
};

int run_verify(const VerifyCli& vc) {
  smc::VerifyOptions o;
  o.data_dir = vc.data_dir;
  o.membership_samples = vc.samples;
  o.seed = vc.seed;
  o.threads = thread_budget();
  o.rational_run = vc.rational_run;
  smc::VerificationReport report = smc::verify_main_theorem(o);
  Common out;
  out.output = vc.output;
  if (vc.format == "json") {
    emit(out, smc::to_json(report, vc.timings).dump(2) + "\n");
  } else {
    emit(out, smc::to_text(report));
  }
  return report.verdict ? kPass : kFail;
}

bool is_usage_error(smc::ErrorCode code) {
  switch (code) {
    case smc::ErrorCode::NotPairwiseCoprime:
    case smc::ErrorCode::InvalidField:
    case smc::ErrorCode::InvalidArgument:
    case smc::ErrorCode::CompleteIntersection:
    case smc::ErrorCode::ParseError:
    case smc::ErrorCode::DataError: return true;
    default: return false;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Symbolic powers of space monomial curves"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "smc 0.3.0");

  Common common;
  PointsOpts points;
  DimOpts dim;
  PeelOpts peel;
  CurveOpts curve;
  VerifyCli verify;

  auto* herzog = app.add_subcommand("herzog", "Herzog presentation and triangle");
  add_weights(herzog, common);

  auto* pts = app.add_subcommand("points", "lattice points of d*Delta");
  add_weights(pts, common);
  pts->add_option("--degree", points.degree, "degree d")->required();
  pts->add_flag("--interior", points.interior, "interior points only");
  pts->add_flag("--dump-points", points.dump, "list alpha beta i j k per point");

  auto* dimc = app.add_subcommand("dim", "dimension of [p^(m)]_d");
  add_weights(dimc, common);
  dimc->add_option("--char", dim.characteristic, "0 or a prime")->required();
  dimc->add_option("--order", dim.order, "symbolic power m")->required();
  dimc->add_option("--degree", dim.degree, "degree d")->required();
  dimc->add_flag("--basis", dim.basis, "print a basis");
  dimc->add_flag("--dump-matrix", dim.dump_matrix, "write the linear system to stderr");
  dimc->add_option("--expect", dim.expect, "exit 1 unless the dimension equals this");

  auto* peelc = app.add_subcommand("peel", "line-peeling certificate (characteristic 0)");
  add_weights(peelc, common);
  peelc->add_option("--degree", peel.degree, "degree d")->required();
  peelc->add_option("--order", peel.order, "symbolic power m")->required();
  peelc->add_option("--strategy", peel.strategy, "rows, columns or greedy")
      ->check(CLI::IsMember({"rows", "columns", "greedy"}));
  peelc->add_flag("--interior", peel.interior, "peel the interior points");
  peelc->add_flag("--check", peel.check, "compare with exact linear algebra");

  auto* neg = app.add_subcommand("negcurve", "search for a negative curve");
  add_weights(neg, common);
  neg->add_option("--char", curve.characteristic, "0 or a prime");
  neg->add_option("--max-order", curve.max_order, "largest r to try")->check(CLI::PositiveNumber);

  auto* hun = app.add_subcommand("huneke", "negative curve, candidate pair and H1 sweep");
  add_weights(hun, common);
  hun->add_option("--char", curve.characteristic, "0 or a prime");
  hun->add_option("--max-order", curve.max_order, "largest r for the curve search")->check(CLI::PositiveNumber);
  hun->add_option("--ell-max", curve.ell_max, "largest ell to try")->check(CLI::PositiveNumber);

  auto* ver = app.add_subcommand("verify-main", "re-verify that R_s(p(5,103,169)) is not Noetherian");
  ver->add_option("--data-dir", verify.data_dir, "directory with the table files");
  ver->add_option("--format", verify.format, "json or text")->check(CLI::IsMember({"text", "json"}));
  ver->add_option("-o,--output", verify.output, "write the report to a file");
  ver->add_flag("--timings", verify.timings, "include per-step seconds in the JSON report");
  ver->add_flag("--rational-run", verify.rational_run, "also evaluate the formulas over Q (informational)");
  ver->add_option("--membership-samples", verify.samples, "products checked directly for membership");
  ver->add_option("--seed", verify.seed, "seed for the sampled checks");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kUsage;
  }

  try {
    if (*herzog) return run_herzog(common);
    if (*pts) return run_points(common, points);
    if (*dimc) return run_dim(common, dim);
    if (*peelc) return run_peel(common, peel);
    if (*neg) return run_negcurve(common, curve);
    if (*hun) return run_huneke(common, curve);
    if (*ver) return run_verify(verify);
  } catch (const smc::Error& e) {
    std::cerr << "smc: " << e.what() << '\n';
    return is_usage_error(e.code()) ? kUsage : kFail;
  } catch (const std::exception& e) {
    std::cerr << "smc: " << e.what() << '\n';
    return kFail;
  }
  return kUsage;
}
