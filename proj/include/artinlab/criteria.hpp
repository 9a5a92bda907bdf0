#pragma once

// One-sided solvability criteria: Schulze's inequality, narrowness of gr S,
// the global (non-local) Schulze criterion and the complete-intersection case.

#include <string_view>

#include "artinlab/artin.hpp"

namespace artinlab {

/// Criteria only ever answer Solvable or Inconclusive; NonSolvable comes from
/// a direct derived-series computation.
enum class Verdict { Solvable, Inconclusive, NonSolvable };

std::string_view to_string(Verdict v);
Verdict parse_verdict(std::string_view text);

/// Position of dim(I/mI) relative to n + l − 1.
enum class Extremality { Below, Extremal, Above };

std::string_view to_string(Extremality e);
Extremality parse_extremality(std::string_view text);

/// Largest l with I ⊆ m^l at the origin; generators must vanish there.
int ideal_order(const Ideal& ideal);

struct SchulzeResult {
  Index n = 0;
  int l = 0;
  Index min_gens = 0;
  Verdict verdict = Verdict::Inconclusive;
  Extremality extremality = Extremality::Above;

  bool extremal() const { return extremality == Extremality::Extremal; }
};

/// Schulze's inequality min_gens < n + l − 1 on given numbers.
SchulzeResult schulze_test(Index n, int l, Index min_gens);

/// Schulze's test for an ideal at the origin. Throws InvalidArgument when
/// l < 2: a generator with a linear part means a variable should be eliminated first.
SchulzeResult schulze_test(const Ideal& ideal);

/// Schulze's test on the minimal presentation of a local algebra (dim > 1).
SchulzeResult schulze_test(const ArtinAlgebra& local);

/// dim I*_k − dim (m·I*)_k ≤ k for k = 1 .. top degree + 1.
bool narrow_test(const GradedAlgebra& g);

/// Criteria for one local algebra.
struct CriteriaReport {
  /// S = K: Der S = 0 and every criterion is vacuous.
  bool trivial = false;
  SchulzeResult schulze;
  bool narrow_gr = false;
  Verdict narrow_verdict = Verdict::Inconclusive;
  /// Per-degree excess dim I*_k − dim (mI*)_k for k = 0 .. top+1.
  std::vector<Index> narrow_excess;

  /// Solvable as soon as one criterion says so.
  Verdict combined() const;
};

CriteriaReport local_criteria(const ArtinAlgebra& local);

struct GlobalSchulze {
  Verdict verdict = Verdict::Inconclusive;
  /// Generator count m of the ideal as given.
  Index generator_count = 0;
  /// Least order of I at a rational zero.
  int l = 0;
  /// m < n + l − 1 with l > 1: the global criterion applies directly.
  bool global_inequality = false;
  bool used_components = false;
  std::vector<std::vector<Rational>> points;
  std::vector<CriteriaReport> components;
};

/// Global criterion over all rational zeros; falls back to Schulze's test on
/// each local factor. Throws IrrationalPoints when the zero set is not rational.
GlobalSchulze global_schulze(const Ideal& ideal, int cap = kDefaultTruncationCap, std::stop_token stop = {});
/// Same, on an already computed decomposition of `ideal`.
GlobalSchulze global_schulze(const Ideal& ideal, const std::vector<LocalFactor>& factors);

/// n generators in n variables with a nonzero finite-dimensional quotient.
bool complete_intersection_check(const Ideal& ideal);

}  // namespace artinlab
