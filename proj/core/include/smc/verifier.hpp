#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "smc/formula.hpp"
#include "smc/poly.hpp"
#include "smc/presentation.hpp"

namespace smc {

/// One line of generators.txt: NAME = FORMULA ; order N ; degree D ; lead MONOMIAL
struct GeneratorSpec {
  std::string name;
  Expr formula;
  std::uint32_t order = 0;
  std::int64_t degree = 0;
  Monomial lead;
  std::size_t line = 0;
};

/// The tables behind the reduction to the ideal I, as read from disk.
struct VerifierData {
  std::vector<GeneratorSpec> generators;
  std::vector<Expr> products;          // 105, row-major
  std::vector<Monomial> mod_x_table;   // the monomials of L, row-major
  std::vector<std::int64_t> degrees;   // row-major
  std::size_t rows = 21;
  std::size_t cols = 5;
  /// File name -> SHA-256 hex digest.
  std::map<std::string, std::string> checksums;
};

inline constexpr const char* kGeneratorsFile = "generators.txt";
inline constexpr const char* kProductsFile = "ideal_I.txt";
inline constexpr const char* kMonomialsFile = "ideal_L.txt";
inline constexpr const char* kDegreesFile = "degrees.txt";

/// Throws DataError (missing or malformed file) or ParseError.
VerifierData load_verifier_data(const std::filesystem::path& dir);
/// Same, from file contents. Checksums are computed from the given text.
VerifierData parse_verifier_data(const std::string& generators, const std::string& products,
                                 const std::string& monomials, const std::string& degrees);

std::string sha256_hex(const std::string& bytes);

template <class Field>
struct NamedGeneratorT {
  std::string name;
  std::uint32_t order = 0;
  std::int64_t degree = 0;
  SparsePoly<Field> poly;
  Monomial leading_mod_x;
};
using NamedGenerator = NamedGeneratorT<PrimeField>;

struct GeneratorOptions {
  bool membership = true;
};

/// Evaluates the formulas in order. Each generator must divide exactly, be
/// homogeneous of the listed degree with at most denumerant(degree) terms,
/// reduce mod x to the listed monomial, and (optionally) lie in p^(order).
/// A01, B01, C01 must equal the Herzog generators up to sign.
/// Failures throw with the generator name prepended.
template <class Field>
std::vector<NamedGeneratorT<Field>> build_named_generators(const CurvePresentation& pres, const Field& field,
                                                           const std::vector<GeneratorSpec>& specs,
                                                           GeneratorOptions opts = {});
extern template std::vector<NamedGeneratorT<PrimeField>> build_named_generators(const CurvePresentation&,
                                                                                const PrimeField&,
                                                                                const std::vector<GeneratorSpec>&,
                                                                                GeneratorOptions);
extern template std::vector<NamedGeneratorT<RationalField>> build_named_generators(
    const CurvePresentation&, const RationalField&, const std::vector<GeneratorSpec>&, GeneratorOptions);

struct ProductCheck {
  std::size_t row = 0;  // 1-based
  std::size_t col = 0;  // 1-based
  std::string text;
  std::uint32_t order = 0;
  std::int64_t degree = 0;
  Monomial mod_x;
  std::size_t terms = 0;
  std::optional<bool> member;  // set when membership was checked
};

struct IdealProducts {
  std::vector<ProductCheck> checks;
  std::vector<ModPoly> polys;
};

struct ProductOptions {
  std::uint32_t target_order = 59;
  /// Products whose membership in p^(target_order) is checked directly.
  std::vector<std::size_t> membership_indices;
  unsigned threads = 1;
};

/// Multiplies out every product and checks order sum, degree and mod-x
/// monomial against the tables. Throws OrderMismatch, DegreeMismatch,
/// ModXMismatch or MembershipFailure naming (row,col).
IdealProducts build_ideal_I(const CurvePresentation& pres, const std::vector<NamedGenerator>& gens,
                            const VerifierData& data, const ProductOptions& opts);

/// Monomial ideal of k[y,z], generators stored as (j,k) exponent pairs.
class MonomialIdeal2D {
 public:
  MonomialIdeal2D() = default;
  explicit MonomialIdeal2D(std::vector<std::pair<std::uint32_t, std::uint32_t>> gens);
  const std::vector<std::pair<std::uint32_t, std::uint32_t>>& generators() const { return gens_; }

 private:
  std::vector<std::pair<std::uint32_t, std::uint32_t>> gens_;  // minimal, j ascending
};

/// Number of monomials outside the ideal; throws InfiniteColength.
std::int64_t colength_2d(const MonomialIdeal2D& ideal);

struct MinDegree {
  std::int64_t value = 0;
  std::size_t row = 0;
  std::size_t col = 0;
  std::string text;
  std::vector<std::vector<std::int64_t>> matrix;
};
MinDegree min_generator_degree(const std::vector<ProductCheck>& checks, std::size_t rows, std::size_t cols);

struct StepResult {
  int id = 0;
  std::string name;
  enum class Status { Passed, Failed, Skipped } status = Status::Skipped;
  std::string detail;
  nlohmann::json data = nlohmann::json::object();
  double seconds = 0;
};
std::string_view status_name(StepResult::Status s);

struct VerifyOptions {
  std::filesystem::path data_dir;
  /// Number of products whose membership is checked directly; picked with `seed`.
  std::size_t membership_samples = 5;
  std::uint64_t seed = 59;
  unsigned threads = 1;
  /// Also evaluate the formulas over Q with their signs (informational only).
  bool rational_run = false;
};

struct VerificationReport {
  Weights weights;
  std::vector<StepResult> steps;
  std::vector<nlohmann::json> generators;
  std::vector<ProductCheck> products;
  std::optional<MinDegree> min_degree;
  std::optional<std::int64_t> colength;
  std::map<std::string, std::string> checksums;
  nlohmann::json rational_run;
  std::vector<std::string> notes;
  bool verdict = false;
};

/// Runs the whole chain on p(5,103,169) with the given tables; the first
/// failing step stops the run and the verdict is false.
VerificationReport verify_main_theorem(const VerifierData& data, const VerifyOptions& opts);
VerificationReport verify_main_theorem(const VerifyOptions& opts);

nlohmann::json to_json(const VerificationReport& report, bool timings = false);
std::string to_text(const VerificationReport& report);

}  // namespace smc
