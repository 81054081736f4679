#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "rorc/composition.hpp"
#include "rorc/matrix.hpp"

namespace rorc {

/// Raised for configurations that cannot be run; the CLI maps it to exit 2.
class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class Mode { exhaustive, sample };

std::string to_string(Mode mode);
/// Throws ConfigError for anything but "exhaustive" or "sample".
Mode parse_mode(const std::string& text);

struct ExperimentConfig {
  DimensionVector d{{1}};
  Mode mode = Mode::sample;
  /// Prime order of the scalar field. 0 stands for the rationals and only
  /// appears in single-matrix reports.
  std::uint32_t prime = 32003;
  long trials = 1000;
  std::uint64_t seed = 0;
  /// Largest nilradical dimension enumerated over F_2; other fields may
  /// enumerate at most 2^dim_cap matrices.
  int dim_cap = 20;
  bool record_timing = false;

  /// Throws ConfigError when the configuration cannot be run.
  void validate() const;
};

struct Violation {
  std::string detail;
  std::optional<ExactMatrix> matrix;
  /// Block sizes of the matrix when they differ from the report's d.
  std::vector<int> blocks;
};

struct CheckResult {
  std::string name;
  std::map<std::string, long> counts;
  long violation_count = 0;
  /// At most kKeptViolations examples.
  std::vector<Violation> violations;

  static constexpr std::size_t kKeptViolations = 5;

  bool passed() const { return violation_count == 0; }
  void add_violation(std::string detail, std::optional<ExactMatrix> matrix = std::nullopt);
};

struct VerificationReport {
  static constexpr const char* kSchemaVersion = "1.0";

  ExperimentConfig config;
  std::vector<CheckResult> checks;
  std::optional<double> elapsed_ms;

  bool passed() const;
  const CheckResult* find(const std::string& name) const;
};

/// Every nilradical matrix over F_q (q = cfg.prime, which must be 2 or 3):
/// defective matrices must be exactly those in some component, Richardson
/// matrices in none. Per-component cardinalities go into the counts.
VerificationReport check_theorem_exhaustive(const ExperimentConfig& cfg);

/// Uniform samples record the Richardson frequency; forced-defect samples
/// must each lie in some component.
VerificationReport check_theorem_sampled(const ExperimentConfig& cfg);

/// Pointwise containments behind the decomposition, evaluated on the
/// population of the configured mode (exhaustive enumeration or forced
/// defects plus uniform samples), together with the rank positivity and
/// tableau box-count identities that need no matrices.
VerificationReport check_lemmas(const ExperimentConfig& cfg);

/// Separating witnesses for every component when there are at least two.
VerificationReport check_witnesses(const ExperimentConfig& cfg);

/// Theorem, lemma and witness checks for cfg.d in one report.
VerificationReport run_checks(const ExperimentConfig& cfg);

/// Theorem and lemma checks on one given matrix.
VerificationReport check_matrix(const ExactMatrix& a, const DimensionVector& d);

/// Component-count bound over cfg.trials random compositions drawn from
/// cfg.seed, plus equality for monotone and pairwise distinct ones. Two
/// further checks cover compositions with d_i = d_j (j > i + 1) around an
/// unequal part: "component-count-gap" asserts at most t-2 components,
/// "component-count-gap-pairs" that the closest intermediate values above
/// and below d_i split no pair of Lambda(d).
VerificationReport check_component_count(const ExperimentConfig& cfg);

/// Exhaustive F_2 check and component counts for every composition of 5
/// with at least two parts.
VerificationReport gl5_fixture_suite();

/// Expected number of components for each composition of 5.
const std::map<std::vector<int>, int>& gl5_expected_components();

/// The intermediate index used to reduce a pair outside Gamma(d): among
/// i < l < j with min(d_i,d_j) <= d_l <= max(d_i,d_j), the one with the
/// smallest d_l, leftmost on ties. Throws std::invalid_argument if the pair
/// lies in Gamma(d).
int gamma_reduction_index(const DimensionVector& d, int i, int j);

/// (i0, j0): leftmost and rightmost indices strictly between i and j
/// attaining the largest d_l below min(d_i,d_j). Throws
/// std::invalid_argument if no such index exists.
std::pair<int, int> deepest_dips(const DimensionVector& d, int i, int j);

}  // namespace rorc
