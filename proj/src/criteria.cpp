#include "artinlab/criteria.hpp"

#include <algorithm>

namespace artinlab {

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::Solvable: return "solvable";
    case Verdict::Inconclusive: return "inconclusive";
    case Verdict::NonSolvable: return "non-solvable";
  }
  return "inconclusive";
}

Verdict parse_verdict(std::string_view text) {
  if (text == "solvable") return Verdict::Solvable;
  if (text == "inconclusive") return Verdict::Inconclusive;
  if (text == "non-solvable") return Verdict::NonSolvable;
  fail(ErrorKind::Parse, "unknown verdict '" + std::string(text) + "'");
}

std::string_view to_string(Extremality e) {
  switch (e) {
    case Extremality::Below: return "below";
    case Extremality::Extremal: return "extremal";
    case Extremality::Above: return "above";
  }
  return "above";
}

Extremality parse_extremality(std::string_view text) {
  if (text == "below") return Extremality::Below;
  if (text == "extremal") return Extremality::Extremal;
  if (text == "above") return Extremality::Above;
  fail(ErrorKind::Parse, "unknown extremality '" + std::string(text) + "'");
}

int ideal_order(const Ideal& ideal) {
  int l = kInfiniteOrder;
  for (const auto& g : ideal.generators()) {
    require(g.order_of() >= 1, "generator " + g.to_string() + " has a nonzero constant term");
    l = std::min(l, g.order_of());
  }
  return l;
}

SchulzeResult schulze_test(Index n, int l, Index min_gens) {
  SchulzeResult r{n, l, min_gens, Verdict::Inconclusive, Extremality::Above};
  const Index bound = n + l - 1;
  r.extremality = min_gens < bound ? Extremality::Below : min_gens == bound ? Extremality::Extremal : Extremality::Above;
  if (r.extremality == Extremality::Below) r.verdict = Verdict::Solvable;
  return r;
}

SchulzeResult schulze_test(const Ideal& ideal) {
  const int l = ideal_order(ideal);
  require(l >= 2, "ideal has order l = 1 (a generator has a linear part); eliminate that variable first");
  return schulze_test(static_cast<Index>(ideal.nvars()), l, minimal_generator_count(ideal));
}

SchulzeResult schulze_test(const ArtinAlgebra& local) {
  const auto p = minimal_presentation(local);
  return schulze_test(p.embedding_dim, p.order, p.min_gens);
}

namespace {

std::vector<Index> narrow_excess(const GradedAlgebra& g) {
  std::vector<Index> out;
  for (std::size_t k = 0; k < g.kernel_dims.size(); ++k) out.push_back(g.kernel_dims[k] - g.m_kernel_dims[k]);
  return out;
}

}  // namespace

bool narrow_test(const GradedAlgebra& g) {
  const auto excess = narrow_excess(g);
  const std::size_t last = static_cast<std::size_t>(g.top_degree()) + 1;
  require(excess.size() > last, "graded presentation data does not reach the top degree");
  for (std::size_t k = 1; k <= last; ++k)
    if (excess[k] > static_cast<Index>(k)) return false;
  return true;
}

Verdict CriteriaReport::combined() const {
  if (trivial || schulze.verdict == Verdict::Solvable || narrow_verdict == Verdict::Solvable) return Verdict::Solvable;
  return Verdict::Inconclusive;
}

CriteriaReport local_criteria(const ArtinAlgebra& local) {
  require(local.is_local(), "criteria need a local algebra");
  CriteriaReport r;
  if (local.dim() <= 1) {
    r.trivial = true;
    r.schulze.verdict = Verdict::Solvable;
    r.schulze.extremality = Extremality::Below;
    r.narrow_gr = true;
    r.narrow_verdict = Verdict::Solvable;
    return r;
  }
  r.schulze = schulze_test(local);
  const auto gr = associated_graded(local);
  r.narrow_excess = narrow_excess(gr);
  r.narrow_gr = narrow_test(gr);
  r.narrow_verdict = r.narrow_gr ? Verdict::Solvable : Verdict::Inconclusive;
  return r;
}

GlobalSchulze global_schulze(const Ideal& ideal, int cap, std::stop_token stop) {
  return global_schulze(ideal, decompose_local(ideal, cap, stop));
}

GlobalSchulze global_schulze(const Ideal& ideal, const std::vector<LocalFactor>& factors) {
  GlobalSchulze out;
  out.generator_count = static_cast<Index>(ideal.size());
  out.l = kInfiniteOrder;
  for (const auto& f : factors) {
    out.points.push_back(f.point);
    const Ideal shifted = shift_to_origin(ideal, f.point);
    for (const auto& g : shifted.generators()) out.l = std::min(out.l, g.order_of());
  }
  const Index n = static_cast<Index>(ideal.nvars());
  out.global_inequality = !factors.empty() && out.l > 1 && out.generator_count < n + out.l - 1;
  if (out.global_inequality || factors.empty()) {
    out.verdict = Verdict::Solvable;
    return out;
  }
  out.used_components = true;
  bool all = true;
  for (const auto& f : factors) {
    CriteriaReport r;
    if (f.algebra.dim() <= 1) {
      r.trivial = true;
      r.schulze.verdict = Verdict::Solvable;
    } else {
      r.schulze = schulze_test(f.algebra);
    }
    all = all && (r.trivial || r.schulze.verdict == Verdict::Solvable);
    out.components.push_back(std::move(r));
  }
  out.verdict = all ? Verdict::Solvable : Verdict::Inconclusive;
  return out;
}

bool complete_intersection_check(const Ideal& ideal) {
  if (ideal.size() != ideal.nvars()) return false;
  const auto gb = buchberger(ideal, MonomialOrder::natural(OrderKind::DegRevLex, ideal.nvars()));
  return !gb.is_unit() && is_finite_dimensional(gb);
}

}  // namespace artinlab
