#pragma once

// Linear-algebra oracles that avoid Gröbner bases entirely.

#include <map>

#include "artinlab/poly.hpp"

namespace oracle {

using namespace artinlab;

/// All monomials of total degree <= d, indexed in a fixed order.
inline std::map<Monomial, Index> monomial_index(std::size_t nvars, int d) {
  std::map<Monomial, Index> idx;
  for (int k = 0; k <= d; ++k)
    for (auto& m : monomials_of_degree(nvars, k)) idx.emplace(m, static_cast<Index>(idx.size()));
  return idx;
}

/// dim Q[x] / (I + m^{d+1}), from the span of the truncated products x^a·g.
inline Index truncated_quotient_dim(const std::vector<Polynomial>& gens, std::size_t nvars, int d) {
  auto idx = monomial_index(nvars, d);
  SparseEchelon<Rational> echelon(static_cast<Index>(idx.size()));
  for (const auto& g : gens) {
    for (const auto& [shift, unused] : idx) {
      (void)unused;
      std::map<Index, Rational> row;
      for (const auto& t : g.terms()) {
        Monomial m = t.monomial * shift;
        if (m.degree() > d) continue;
        row[idx.at(m)] += t.coeff;
      }
      SparseVector<Rational> v;
      for (auto& [i, c] : row)
        if (c != 0) v.emplace_back(i, c);
      if (!v.empty()) echelon.insert(v);
    }
  }
  return static_cast<Index>(idx.size()) - echelon.rank();
}

/// Local dimension at the origin: truncated_quotient_dim once it is stable in d.
inline Index local_dim_at_origin(const std::vector<Polynomial>& gens, std::size_t nvars, int max_d = 30) {
  Index prev = -1;
  for (int d = 1; d <= max_d; ++d) {
    const Index cur = truncated_quotient_dim(gens, nvars, d);
    if (cur == prev) return cur;
    prev = cur;
  }
  return -1;
}

}  // namespace oracle
