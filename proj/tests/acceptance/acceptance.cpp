// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.
#include <algorithm>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "smc/curves.hpp"
#include "smc/lattice.hpp"
#include "smc/peeling.hpp"
#include "smc/qadic.hpp"
#include "smc/verifier.hpp"

using namespace smc;

namespace {

std::filesystem::path g_data = SMC_TEST_DATA_DIR;
const FieldSpec Q = FieldSpec::rationals();
const FieldSpec F2 = FieldSpec::gf(2);

struct Failure {
  std::string what;
};

void require(bool ok, const std::string& what) {
  if (!ok) throw Failure{what};
}

const CurvePresentation& big() {
  static const CurvePresentation p = herzog_present({5, 103, 169});
  return p;
}
const CurvePresentation& small() {
  static const CurvePresentation p = herzog_present({5, 11, 18});
  return p;
}

// Independent count of x^i y^j z^k of weighted degree d.
std::int64_t count_monomials(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d) {
  std::int64_t n = 0;
  for (std::int64_t k = 0; k * c <= d; ++k) {
    for (std::int64_t j = 0; j * b + k * c <= d; ++j) {
      if ((d - j * b - k * c) % a == 0) ++n;
    }
  }
  return n;
}

std::string monomials_text(const CurvePresentation& p, const std::vector<LatticePoint>& pts, std::int64_t d) {
  std::string out;
  for (const auto& pt : pts) out += (out.empty() ? "" : ", ") + monomial_string(point_to_monomial(p, pt, d));
  return out;
}

// ---- 1 ---------------------------------------------------------------------

std::string criterion1() {
  std::int64_t dim = graded_dim(big(), Q, 7, 2065);
  require(dim == 1, "dim [p^(7)]_2065 = " + std::to_string(dim));
  GradedPieceBasis b = graded_basis(big(), Q, 7, 2065);
  require(b.basis.size() == 1, "basis size");
  const auto& f = std::get<RationalPoly>(b.basis[0]);
  Rational cx = f.coefficient({413, 0, 0}), cyz = f.coefficient({0, 2, 11});
  require(cx != 0, "coefficient of x^413 is 0");
  require(cyz != 0, "coefficient of y^2*z^11 is 0");
  return "dim 1; f has " + std::to_string(f.size()) + " terms, coeff(x^413) = " + cx.get_str() +
         ", coeff(y^2*z^11) = " + cyz.get_str();
}

// ---- 2 ---------------------------------------------------------------------

std::string criterion2() {
  require(graded_dim(big(), Q, 6, 1788) == 0, "[p^(6)]_1788 != 0");
  require(graded_dim(big(), Q, 3, 887) == 0, "[p^(3)]_887 != 0");
  std::int64_t s887 = count_monomials(5, 103, 169, 887);
  require(s887 == 6, "dim S_887 = " + std::to_string(s887));
  std::int64_t by_hand = 3 * 4 / 2 - s887 + 0;
  std::int64_t h1 = h1_dim(big(), Q, 887, 3);
  require(h1 == 0 && h1 == by_hand, "h1(887, 3) = " + std::to_string(h1));
  return "[p^(6)]_1788 = 0, [p^(3)]_887 = 0, dim S_887 = 6, h1 = 6 - 6 + 0 = 0";
}

// ---- 3 ---------------------------------------------------------------------

std::string criterion3() {
  require(graded_dim(small(), Q, 7, 220) == 1, "[p^(7)]_220 is not 1-dimensional");
  require(graded_dim(small(), Q, 4, 126) == 1, "[p^(4)]_126 is not 1-dimensional");
  AnyPoly g1 = graded_basis(small(), Q, 7, 220).basis.at(0);
  AnyPoly g2 = graded_basis(small(), Q, 4, 126).basis.at(0);
  require(coprimality_check(small(), g1, g2), "g1, g2 share a factor");
  require(!coprimality_check(small(), g1, g1), "self-coprimality of g1 reported true");
  require(220 * 126 == 990 * 28, "220*126 != 990*28");
  require(huneke_ratio_check(small().weights, {7, 220}, {4, 126}), "ratio check failed");
  return "dims 1 and 1, g1 and g2 coprime, 220*126 = 990*28 = 27720";
}

// ---- 4 ---------------------------------------------------------------------

std::string criterion4() {
  QAdicSystem sys = qadic_system(big(), F2, 59, 17407);
  require(sys.row_count() == 1770, "row count " + std::to_string(sys.row_count()));
  std::int64_t cols = count_monomials(5, 103, 169, 17407);
  require(static_cast<std::int64_t>(sys.col_count()) == cols,
          "columns " + std::to_string(sys.col_count()) + " vs denumerant " + std::to_string(cols));
  std::size_t rank = gf2_matrix(sys).rank();
  require(rank == sys.col_count(), "GF(2) rank " + std::to_string(rank));
  require(graded_dim(big(), F2, 59, 17407) == 0, "graded_dim reports a nonzero piece");
  return "1770 x " + std::to_string(cols) + " system over GF(2) has full column rank, dim 0";
}

// ---- 5 ---------------------------------------------------------------------

std::size_t count_divisions(const Expr& e) {
  std::size_t n = e.kind == Expr::Kind::Div ? 1 : 0;
  for (const auto& a : e.args) n += count_divisions(a);
  return n;
}

std::string criterion5() {
  VerifyOptions opts;
  opts.data_dir = g_data;
  VerifierData data = load_verifier_data(g_data);
  VerificationReport r = verify_main_theorem(data, opts);
  for (const auto& s : r.steps) {
    require(s.status == StepResult::Status::Passed, "step " + std::to_string(s.id) + " " + s.detail);
  }
  require(r.verdict, "verdict false");

  const std::vector<std::int64_t> degrees{309,  338,  375,   610,   890,   1183,  2065,  2678,  4429,
                                          7400, 8578, 9460,  10939, 12117, 12690, 14478, 15656, 16538};
  const std::vector<std::string> leads{"y^3",     "z^2",     "y^2*z",   "y*z^3",   "y^7*z",   "z^7",
                                       "y^2*z^11", "y^26",    "y^43",    "y^62*z^6", "y^80*z^2", "y^82*z^6",
                                       "y^98*z^5", "y^116*z", "y^115*z^5", "y^134*z^4", "y^152",  "y^154*z^4"};
  std::vector<NamedGenerator> gens = build_named_generators(big(), PrimeField(2), data.generators);
  require(gens.size() == 18, "generator count " + std::to_string(gens.size()));
  std::size_t divisions = 0;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    require(gens[i].poly.degree(big().weights) == degrees[i], gens[i].name + " degree");
    require(monomial_string(gens[i].poly.mod_x().terms().at(0).first) == leads[i], gens[i].name + " lead");
    divisions += count_divisions(data.generators[i].formula);
  }
  require(divisions == 15, "D-divisions: " + std::to_string(divisions));

  require(r.products.size() == 105, "product count");
  for (std::size_t i = 0; i < r.products.size(); ++i) {
    const auto& c = r.products[i];
    require(c.order == 59, "order of product " + std::to_string(i));
    require(c.degree == data.degrees[i], "degree of product " + std::to_string(i));
    require(c.mod_x == data.mod_x_table[i], "mod x of product " + std::to_string(i));
  }
  std::int64_t min_deg = *std::min_element(data.degrees.begin(), data.degrees.end());
  require(min_deg == 17410 && r.min_degree && r.min_degree->value == 17410, "minimum degree");

  // Staircase count of k[y,z]/L by direct enumeration of the box.
  std::int64_t outside = 0;
  for (std::uint32_t j = 0; j <= 170; ++j) {
    for (std::uint32_t k = 0; k <= 104; ++k) {
      bool in = std::any_of(data.mod_x_table.begin(), data.mod_x_table.end(),
                            [&](const Monomial& m) { return j >= m.j && k >= m.k; });
      outside += in ? 0 : 1;
    }
  }
  require(outside == 8850 && r.colength == 8850 && 8850 == 59 * 60 / 2 * 5, "colength");
  return "verdict true; 15 exact D-divisions, 18 degrees and leads, 105 products of order 59, min degree 17410, "
         "colength 8850";
}

// ---- 6 ---------------------------------------------------------------------

std::string criterion6() {
  std::ostringstream out;
  struct Case {
    LatticeRegion region;
    std::uint32_t order;
    std::int64_t degree;  // of the graded piece
    std::int64_t expected;
  };
  const std::vector<Case> cases{{enumerate_points(big(), 2065), 7, 2065, 1},
                                {interior_points(big(), 2065), 6, 1788, 0},
                                {enumerate_points(big(), 887), 3, 887, 0}};
  for (const auto& c : cases) {
    auto t0 = std::chrono::steady_clock::now();
    PeelCertificate cert = certify_dim(c.region.points, c.order, PeelStrategy::Rows);
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::string label = std::to_string(c.region.degree) + (c.region.interior ? " interior" : "") + ", m=" +
                        std::to_string(c.order);
    require(cert.exact() && cert.value == c.expected, label + ": certificate " + std::string(conclusion_name(cert.conclusion)));
    require(secs < 1.0, label + " took " + std::to_string(secs) + " s");
    require(graded_dim(big(), Q, c.order, c.degree) == cert.value, label + ": disagrees with linear algebra");
    if (c.expected == 1) {
      std::string tracked = monomials_text(big(), cert.tracked_points, 2065);
      require(tracked.find("x^413") != std::string::npos && tracked.find("y^2*z^11") != std::string::npos,
              "tracked points " + tracked);
      const auto f = std::get<RationalPoly>(graded_basis(big(), Q, 7, 2065).basis.at(0));
      for (const auto& p : cert.tracked_points) {
        require(f.coefficient(point_to_monomial(big(), p, 2065)) != 0, "zero coefficient at a tracked point");
      }
      out << "2065: dim 1 tracking " << tracked << "; ";
    }
  }
  out << "1788 interior: dim 0; 887: dim 0; all agree with linear algebra";
  return out.str();
}

// ---- 7 ---------------------------------------------------------------------

std::vector<std::string> split_lines(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  for (std::string line; std::getline(ss, line);) out.push_back(line);
  return out;
}

std::string join_lines(const std::vector<std::string>& lines) {
  std::string out;
  for (const auto& l : lines) out += l + "\n";
  return out;
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

bool is_data_line(const std::string& l) {
  auto pos = l.find_first_not_of(" \t");
  return pos != std::string::npos && l[pos] != '#';
}

std::string mutation_suite() {
  std::vector<std::string> files{slurp(g_data / kGeneratorsFile), slurp(g_data / kProductsFile),
                                 slurp(g_data / kMonomialsFile), slurp(g_data / kDegreesFile)};
  VerifyOptions opts;
  opts.membership_samples = 0;
  std::size_t mutants = 0;
  for (std::size_t file = 0; file < files.size(); ++file) {
    auto lines = split_lines(files[file]);
    std::size_t entry = 0;
    for (std::size_t li = 0; li < lines.size(); ++li) {
      if (!is_data_line(lines[li])) continue;
      std::vector<std::pair<std::string, std::string>> variants;  // (mutated line, expected locator)
      const std::string& l = lines[li];
      auto cell = [](std::size_t i) {
        return "product (" + std::to_string(i / 5 + 1) + "," + std::to_string(i % 5 + 1) + ")";
      };
      if (file == 0) {
        std::string name = l.substr(0, l.find(' '));
        std::size_t deg = l.find("degree ") + 7;
        std::size_t end = l.find(' ', deg);
        std::string mutated = l.substr(0, deg) + std::to_string(std::stoll(l.substr(deg, end - deg)) + 1) + l.substr(end);
        variants.emplace_back(mutated, name + ":");
      } else if (file == 1) {
        variants.emplace_back(l + "*A01", cell(entry));
      } else if (file == 2) {
        variants.emplace_back(l + "*z", cell(entry));
      } else {
        std::istringstream row(l);
        std::vector<std::int64_t> v(5);
        for (auto& x : v) row >> x;
        for (std::size_t c = 0; c < 5; ++c) {
          auto w = v;
          w[c] += 1;
          std::string mutated;
          for (auto x : w) mutated += std::to_string(x) + " ";
          variants.emplace_back(mutated, cell(entry * 5 + c));
        }
      }
      for (const auto& [mutated, locator] : variants) {
        auto copy = lines;
        copy[li] = mutated;
        auto texts = files;
        texts[file] = join_lines(copy);
        VerificationReport r = verify_main_theorem(parse_verifier_data(texts[0], texts[1], texts[2], texts[3]), opts);
        require(!r.verdict, "mutant passed: " + mutated);
        auto failed = std::find_if(r.steps.begin(), r.steps.end(),
                                   [](const StepResult& s) { return s.status == StepResult::Status::Failed; });
        require(failed != r.steps.end() && failed->detail.find(locator) != std::string::npos,
                "mutant not localized to " + locator + ": " + (failed == r.steps.end() ? "" : failed->detail));
        ++mutants;
      }
      ++entry;
    }
  }
  require(mutants == 18 + 105 + 105 + 105, "mutant count " + std::to_string(mutants));
  return std::to_string(mutants) + " mutants";
}

std::string criterion7() {
  std::ostringstream out;

  // (i) binomial and derivative systems have equal rank.
  std::size_t systems = 0;
  for (std::uint32_t m = 1; m <= 4; ++m) {
    for (std::int64_t d = 0; d <= 400; ++d) {
      QAdicSystem sys = qadic_system(small(), Q, m, d);
      if (sys.col_count() == 0) continue;
      require(integer_rank(integer_matrix(sys)) == integer_rank(derivative_matrix(sys.region, m)),
              "(i) rank mismatch at m=" + std::to_string(m) + " d=" + std::to_string(d));
      ++systems;
    }
  }
  out << "(i) " << systems << " systems; ";

  // (ii) semicontinuity on a seeded 50-instance sample.
  std::mt19937_64 rng(2065);
  for (int n = 0; n < 50; ++n) {
    const CurvePresentation& p = n % 2 ? big() : small();
    auto m = static_cast<std::uint32_t>(1 + rng() % 8);
    auto d = static_cast<std::int64_t>(rng() % 3001);
    require(graded_dim(p, Q, m, d) <= graded_dim(p, F2, m, d),
            "(ii) at m=" + std::to_string(m) + " d=" + std::to_string(d));
  }
  out << "(ii) 50 instances; ";

  // (iii) monotonicity in m.
  std::size_t chains = 0;
  for (const CurvePresentation* p : {&big(), &small()}) {
    for (std::int64_t d = 0; d <= 3000; d += 41) {
      std::int64_t prev = graded_dim(*p, Q, 0, d);
      for (std::uint32_t m = 1; m <= 8; ++m) {
        std::int64_t cur = graded_dim(*p, Q, m, d);
        require(cur <= prev, "(iii) at m=" + std::to_string(m) + " d=" + std::to_string(d));
        prev = cur;
      }
      ++chains;
    }
  }
  out << "(iii) " << chains << " chains; ";

  // (iv) a second unit triple changes nothing.
  const UnitExponents u = big().unit;
  for (int n = 0; n < 20; ++n) {
    std::int64_t s1 = n % 5 - 2, s2 = n / 5 - 2;
    if (s1 == 0 && s2 == 0) s1 = 3;
    CurvePresentation alt = with_unit_exponents(big(), {u.a + 103 * s1 + 169 * s2, u.b - 5 * s1, u.c - 5 * s2});
    auto m = static_cast<std::uint32_t>(1 + n % 7);
    std::int64_t d = 300 * (n + 1) + 7 * n;
    require(graded_dim(alt, Q, m, d) == graded_dim(big(), Q, m, d), "(iv) dims differ");
    require(enumerate_points(alt, d).size() == enumerate_points(big(), d).size(), "(iv) counts differ");
  }
  out << "(iv) 20 instances; ";

  // (v) monomial -> point -> monomial.
  for (int n = 0; n < 1000; ++n) {
    Monomial m{static_cast<std::uint32_t>(rng() % 2000), static_cast<std::uint32_t>(rng() % 100),
               static_cast<std::uint32_t>(rng() % 60)};
    PointAndDegree pd = monomial_to_point(big(), m);
    require(pd.degree == 5 * m.i + 103 * m.j + 169 * m.k, "(v) degree");
    require(point_to_monomial(big(), pd.point, pd.degree) == m, "(v) round trip");
  }
  out << "(v) 1000 monomials; ";

  // (vi) nothing below slope 2065/7, exact elimination throughout.
  std::size_t gap = 0;
  for (std::uint32_t r = 1; r <= 8; ++r) {
    for (std::int64_t d = 0; 7 * d < 2065 * static_cast<std::int64_t>(r); ++d) {
      require(graded_dim(big(), Q, r, d) == 0, "(vi) nonzero at r=" + std::to_string(r) + " d=" + std::to_string(d));
      ++gap;
    }
  }
  out << "(vi) " << gap << " pieces; ";

  out << "(vii) " << mutation_suite();
  return out.str();
}

// ---- 8 ---------------------------------------------------------------------

bool g_chain_ok = true;

std::string criterion8() {
  require(g_chain_ok, "the computational chain (criteria 1-7) is incomplete");
  VerifyOptions opts;
  opts.data_dir = g_data;
  VerificationReport r = verify_main_theorem(opts);
  bool cites = std::any_of(r.notes.begin(), r.notes.end(),
                           [](const std::string& n) { return n.find("Nakayama") != std::string::npos; });
  require(r.verdict && cites, "report does not state which steps are cited rather than checked");
  return "out of contract: the geometric step and Nakayama's lemma are cited in the report, not re-derived; "
         "the computational chain they consume is complete";
}

}  // namespace

int main(int argc, char** argv) {
  if (argc > 1) g_data = argv[1];
  struct Criterion {
    int id;
    double limit_seconds;
    std::function<std::string()> run;
  };
  const std::vector<Criterion> criteria{{1, 5, criterion1},   {2, 5, criterion2},   {3, 2, criterion3},
                                        {4, 60, criterion4},  {5, 300, criterion5}, {6, 3, criterion6},
                                        {7, 600, criterion7}, {8, 300, criterion8}};
  int failures = 0;
  for (const auto& c : criteria) {
    auto t0 = std::chrono::steady_clock::now();
    std::string detail;
    bool ok = true;
    try {
      detail = c.run();
    } catch (const Failure& f) {
      ok = false;
      detail = f.what;
    } catch (const std::exception& e) {
      ok = false;
      detail = std::string("exception: ") + e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (ok && secs > c.limit_seconds) {
      ok = false;
      detail += " (over the " + std::to_string(static_cast<int>(c.limit_seconds)) + " s budget)";
    }
    if (!ok) {
      ++failures;
      if (c.id <= 7) g_chain_ok = false;
    }
    std::printf("%s %d: %s [%.2f s]\n", ok ? "PASS" : "FAIL", c.id, detail.c_str(), secs);
    std::fflush(stdout);
  }
  return failures == 0 ? 0 : 1;
}
