#pragma once

// Jobs, reports and their serialisation. A report holds only printable data
// (numbers, strings, closed enums) so it round-trips through the structured form.

#include <optional>
#include <stop_token>
#include <string>
#include <vector>

#include "artinlab/criteria.hpp"
#include "artinlab/error.hpp"

namespace artinlab {

inline constexpr const char* kReportSchema = "artinlab-report/1";

enum class Mode { Analyze, Moduli, Groebner, Derivations, Split };

std::string_view to_string(Mode m);
Mode parse_mode(std::string_view text);

struct JobSpec {
  std::vector<std::string> variables;
  Mode mode = Mode::Analyze;
  /// Generator list, or the polynomial p for moduli and split.
  std::string input;
  std::string order = "degrevlex";
  int truncation_cap = kDefaultTruncationCap;

  friend bool operator==(const JobSpec&, const JobSpec&) = default;
};

/// Job file: declaration lines ("vars x, y", "order deglex:y>x", "mode analyze",
/// "cap 40"), '#' comments, then the polynomial list up to end of input.
JobSpec parse_job(std::string_view text);

/// The "job" object of a fixture document: variables, mode, order, cap, input.
JobSpec parse_fixture_job(std::string_view json_text);

struct ComponentReport {
  std::vector<std::string> point;
  Index dim = 0;
  int nilpotency_exponent = 0;
  std::vector<Index> filtration_dims;
  Index embedding_dim = 0;
  int l = 0;
  Index min_gens = 0;
  Verdict schulze = Verdict::Inconclusive;
  Extremality extremality = Extremality::Above;
  bool narrow_gr = false;
  std::vector<Index> narrow_excess;
  Index dim_der = 0;
  std::vector<Index> derived_dims;
  std::vector<Index> lower_central_dims;
  bool solvable = false;
  bool nilpotent = false;
  /// Every derivation acts nilpotently (tangent form of a unipotent Aut S).
  bool all_nilpotent = false;
  Index socle_dim = 0;
  Index lsoc_dim = 0;
  Index usoc_dim = 0;
  /// dim Der ≥ dim(m̄/m̄²)·dim Soc.
  Index socle_bound = 0;
  bool socle_bound_holds = false;
  /// Unipotent subgroup dimension and the derivations built for it.
  Index unipotent_dim = 0;
  Index unipotent_constructed = 0;
  bool unipotent_holds = false;
  bool unipotent_derivations_ok = false;
  /// dim Der ≥ 1 whenever dim > 1.
  bool positive = false;
  Verdict verdict = Verdict::Inconclusive;

  friend bool operator==(const ComponentReport&, const ComponentReport&) = default;
};

struct SplitReport {
  int rank = 0;
  int truncation = 0;
  std::vector<std::string> split_variables;
  std::vector<std::string> lambdas;
  std::vector<std::string> residual_variables;
  std::string residual;
  std::vector<std::string> change;

  friend bool operator==(const SplitReport&, const SplitReport&) = default;
};

struct SingularityReport {
  std::string p;
  Index tjurina = 0;
  /// Auxiliary: local dimension of K[x]/J(p).
  Index milnor = 0;
  bool quasi_homogeneous = false;
  std::vector<long long> weights;
  long long weighted_degree = 0;
  bool p_in_jacobian = false;
  Index jacobian_min_gens = 0;
  std::optional<SplitReport> split;
  std::optional<Index> residual_tjurina;
  std::optional<bool> yau_solvable;

  friend bool operator==(const SingularityReport&, const SingularityReport&) = default;
};

struct Report {
  std::string schema = kReportSchema;
  JobSpec job;
  std::vector<std::string> groebner_basis;
  std::vector<std::string> standard_monomials;
  Index dim = 0;
  bool local = false;
  /// Global Schulze summary over all rational zeros (analyze mode).
  std::optional<int> global_l;
  std::optional<bool> global_inequality;
  std::optional<Verdict> global_schulze;
  bool complete_intersection = false;
  std::optional<Index> dim_der;
  /// D(x_i) for a basis of Der S, over the standard monomials (derivations mode).
  std::vector<std::vector<std::string>> derivations;
  std::vector<ComponentReport> components;
  std::optional<SingularityReport> singularity;
  /// Direct decision for Der S: solvable iff every local factor is.
  std::optional<Verdict> verdict;

  friend bool operator==(const Report&, const Report&) = default;
};

Report run(const JobSpec& job, std::stop_token stop = {});

enum class Format { Text, Structured };

Format parse_format(std::string_view text);
std::string serialize(const Report& r, Format f);
/// Inverse of serialize(r, Format::Structured).
Report parse_structured(std::string_view text);

/// Process exit status for each failure class; 0 is success.
int exit_code(ErrorKind kind);
/// Stable name of a failure class, e.g. "non-isolated".
std::string_view error_name(ErrorKind kind);

}  // namespace artinlab
