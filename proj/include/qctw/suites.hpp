#pragma once

// Named verification checks grouped into the algebra and model suites, and the
// report / bracket-table serializations used by the command line tool.

#include "qctw/correspondence.hpp"
#include "qctw/embedding.hpp"
#include "qctw/flat_twistor.hpp"
#include "qctw/report.hpp"

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace qctw {

enum class OutputFormat { json, csv, text };

struct SuiteConfig {
  static constexpr int kMaxN = 4;

  int n = 1;
  std::uint64_t seed = 42;
  std::size_t trials = 100;
  ModelConfig model;
  OutputFormat format = OutputFormat::json;
  std::string out;  ///< empty: standard output

  /// Throws std::invalid_argument on n outside 1..kMaxN or non-positive tolerances.
  void validate() const;
};

/// Replaceable pieces, for mutation testing of the checks themselves.
struct SuiteHooks {
  PhiMap phi = qctw::phi;
};

struct SuiteResult {
  std::string suite;
  int n = 0;
  std::uint64_t seed = 0;
  std::vector<CheckReport> checks;  ///< sorted by name
  std::vector<ModelSample> samples;

  std::size_t count(CheckStatus s) const;
  bool passed() const { return count(CheckStatus::fail) == 0; }
  const CheckReport* find(const std::string& name) const;
};

namespace checks {

// graded_lie
CheckReport grading_structure(int n);
CheckReport bracket_example(int n);
CheckReport grading_laws(int n, std::size_t trials, std::uint64_t seed);

// embedding
/// Closed-form phi_{-1} against proj o phi, `per_grade` samples of each pure grade and as many mixed ones.
CheckReport phi_minus1_closed_form(int n, std::size_t per_grade, std::uint64_t seed, const PhiMap& map = phi);
CheckReport homomorphism(int n, std::size_t trials, std::uint64_t seed, const PhiMap& map = phi);
CheckReport phi_into_su(int n, std::size_t trials, std::uint64_t seed, const PhiMap& map = phi);
CheckReport filtration(int n, std::size_t trials, std::uint64_t seed, const PhiMap& map = phi);

// g0_actions
CheckReport rho_adjoint(int n, std::size_t trials, std::uint64_t seed);
CheckReport stabilizer(int n, std::size_t trials, std::uint64_t seed);
CheckReport ad_conjugation(int n, std::size_t trials, std::uint64_t seed);
CheckReport hopf_lift(std::size_t trials, std::uint64_t seed);

// correspondence
CheckReport reeb_tuples(int n, std::size_t trials, std::uint64_t seed);
CheckReport twistor_frames(std::size_t trials, std::uint64_t seed);

// flat model
CheckReport flat_definitions(int n);
/// Skipped (with a warning) for n != 1.
CheckReport duchemin(int n);
/// Exact: J^2 = -Id, chart overlap, J on D and on the Reeb directions.
CheckReport cr_structure(int n, std::size_t trials, std::uint64_t seed);
CheckReport levi(int n, const std::vector<ModelSample>& samples, const ModelConfig& cfg);
CheckReport integrability(int n, const std::vector<ModelSample>& samples, const ModelConfig& cfg);
/// J + eps E must be detected at the first `count` sample points.
CheckReport perturbation_probe(int n, std::size_t count, std::uint64_t seed, const ModelConfig& cfg,
                               double eps = 0.1, double threshold = 1e-3);

}  // namespace checks

SuiteResult run_algebra_suite(const SuiteConfig& cfg, const SuiteHooks& hooks = {});
SuiteResult run_model_suite(const SuiteConfig& cfg);
/// Both suites merged into one report.
SuiteResult run_all_suites(const SuiteConfig& cfg);

std::string to_json(const SuiteResult& r);
std::string to_csv(const SuiteResult& r);
std::string to_text(const SuiteResult& r);
std::string render(const SuiteResult& r, OutputFormat f);

// --- bracket tables ---------------------------------------------------------------

inline constexpr const char* kBracketCsvHeader = "i,j,k,coeff_re,coeff_im_i,coeff_im_j,coeff_im_k";

/// Structure constants of the real basis of sp(Q); k is the slot index of the entry.
std::string bracket_table_csv(int n);
std::string bracket_table_json(int n);
/// Throws std::runtime_error on malformed input.
std::vector<BracketRow> parse_bracket_csv(const std::string& text);
std::vector<BracketRow> parse_bracket_json(const std::string& text, int* n = nullptr);

/// Table rows rebuild every bracket [b_i, b_j] and are antisymmetric.
CheckReport verify_bracket_table(int n, const std::vector<BracketRow>& rows);

}  // namespace qctw
