#include "artinlab/liealg.hpp"

#include <map>
#include <unordered_map>

namespace artinlab {

namespace {

using SparseQ = SparseVector<Rational>;

SparseQ from_map(const std::map<Index, Rational>& acc) {
  SparseQ out;
  for (const auto& [i, c] : acc)
    if (!is_zero(c)) out.emplace_back(i, c);
  return out;
}

// D·L_g − L_g·D = L_{D g} for every generator g, and D(1) = 0. Since the
// generators generate S, this is equivalent to the Leibniz rule on all pairs.
bool satisfies_generator_leibniz(const ArtinAlgebra& s, const Matrix& d) {
  if (!(d * s.unit()).isZero()) return false;
  const SparseColumns<Rational> sd(d);
  for (const auto& g : s.generator_images()) {
    const SparseColumns<Rational> lg(s.multiplication_operator(g));
    const Matrix lhs = (sd * lg).dense() - (lg * sd).dense();
    if (lhs != s.multiplication_operator(sd.apply(g))) return false;
  }
  return true;
}

}  // namespace

bool is_derivation(const ArtinAlgebra& s, const Matrix& op) {
  const Index n = s.dim();
  if (op.rows() != n || op.cols() != n) return false;
  if (!(op * s.unit()).isZero()) return false;
  for (Index i = 0; i < n; ++i)
    for (Index j = i; j < n; ++j) {
      const Vector bi = Vector::Unit(n, i), bj = Vector::Unit(n, j);
      const Vector lhs = op * s.multiply(bi, bj);
      const Vector rhs = s.multiply(op.col(i), bj) + s.multiply(bi, op.col(j));
      if (lhs != rhs) return false;
    }
  return true;
}

LieAlgebraRep::LieAlgebraRep(const ArtinAlgebra& s, const std::vector<Matrix>& operators)
    : ambient_(s.dim()), generators_(s.generator_images()), encoded_(0) {
  const Index d = ambient_;
  const Index enc_len = d * static_cast<Index>(generators_.size());
  encoded_ = QSubspace(enc_len);
  for (const auto& op : operators) {
    require(op.rows() == d && op.cols() == d, "operator shape does not match the algebra");
    ensure(satisfies_generator_leibniz(s, op), "operator is not a derivation");
  }
  if (operators.empty()) return;

  // Row-reduce [encoding | vec(operator)] so the basis is echelon in the encoding.
  Matrix rows(static_cast<Index>(operators.size()), enc_len + d * d);
  for (std::size_t r = 0; r < operators.size(); ++r) {
    const auto& op = operators[r];
    rows.row(static_cast<Index>(r)).head(enc_len) = encode(op).transpose();
    for (Index c = 0; c < d; ++c) rows.row(static_cast<Index>(r)).segment(enc_len + c * d, d) = op.col(c).transpose();
  }
  const auto e = rref(rows);
  std::vector<Vector> enc_basis;
  for (Index r = 0; r < e.rank(); ++r) {
    ensure(e.pivots[static_cast<std::size_t>(r)] < enc_len,
           "generator images do not determine the operators (they do not generate S)");
    enc_basis.emplace_back(e.matrix.row(r).head(enc_len).transpose());
    Matrix op(d, d);
    for (Index c = 0; c < d; ++c) op.col(c) = e.matrix.row(r).segment(enc_len + c * d, d).transpose();
    basis_.push_back(std::move(op));
  }
  encoded_ = QSubspace::span(enc_len, enc_basis);
  for (const auto& op : basis_) sparse_basis_.emplace_back(op);

  // Structure constants, with closure verified.
  const Index m = dimension();
  const std::size_t ngen = generators_.size();
  std::vector<SparseColumns<Rational>> enc_sparse;
  for (Index k = 0; k < m; ++k) enc_sparse.emplace_back(Matrix(encoded_.basis().col(k)));
  brackets_.reserve(static_cast<std::size_t>(m * (m - 1) / 2));
  for (Index i = 0; i < m; ++i)
    for (Index j = i + 1; j < m; ++j) {
      Vector w(enc_len);
      for (std::size_t g = 0; g < ngen; ++g) {
        const Index off = static_cast<Index>(g) * d;
        const Vector di = encoded_.basis().col(i).segment(off, d);
        const Vector dj = encoded_.basis().col(j).segment(off, d);
        w.segment(off, d) = sparse_basis_[static_cast<std::size_t>(i)].apply(dj) -
                            sparse_basis_[static_cast<std::size_t>(j)].apply(di);
      }
      SparseQ coords;
      Vector residual = w;
      for (Index k = 0; k < m; ++k) {
        const Rational c = w(encoded_.pivots()[static_cast<std::size_t>(k)]);
        if (is_zero(c)) continue;
        coords.emplace_back(k, c);
        for (const auto& [r, x] : enc_sparse[static_cast<std::size_t>(k)].col(0)) residual(r) -= c * x;
      }
      ensure(residual.isZero(), "derivations are not closed under the commutator");
      brackets_.push_back(std::move(coords));
    }
}

Vector LieAlgebraRep::encode(const Matrix& op) const {
  const Index d = ambient_;
  Vector v(d * static_cast<Index>(generators_.size()));
  for (std::size_t g = 0; g < generators_.size(); ++g) v.segment(static_cast<Index>(g) * d, d) = op * generators_[g];
  return v;
}

Vector LieAlgebraRep::coordinates(const Matrix& op) const {
  const Vector enc = encode(op);
  Vector c(dimension());
  for (Index k = 0; k < dimension(); ++k) c(k) = enc(encoded_.pivots()[static_cast<std::size_t>(k)]);
  return c;
}

bool LieAlgebraRep::contains(const Matrix& op) const {
  if (op.rows() != ambient_ || op.cols() != ambient_) return false;
  const Vector c = coordinates(op);
  Matrix rebuilt = Matrix::Zero(ambient_, ambient_);
  for (Index k = 0; k < dimension(); ++k)
    if (!is_zero(c(k))) rebuilt += c(k) * basis_[static_cast<std::size_t>(k)];
  return rebuilt == op;
}

SparseVector<Rational> LieAlgebraRep::bracket(Index i, Index j) const {
  if (i == j) return {};
  const bool flip = i > j;
  if (flip) std::swap(i, j);
  const Index m = dimension();
  const Index slot = i * m - i * (i + 1) / 2 + (j - i - 1);
  SparseQ out = brackets_[static_cast<std::size_t>(slot)];
  if (flip)
    for (auto& [k, c] : out) c = -c;
  return out;
}

SparseVector<Rational> LieAlgebraRep::bracket(const SparseVector<Rational>& u, const SparseVector<Rational>& v) const {
  std::map<Index, Rational> acc;
  for (const auto& [i, a] : u)
    for (const auto& [j, b] : v) {
      if (i == j) continue;
      const Rational ab = a * b;
      for (const auto& [k, c] : bracket(i, j)) acc[k] += ab * c;
    }
  return from_map(acc);
}

LieAlgebraRep compute_derivations(const ArtinAlgebra& s, const GroebnerBasis& gb) {
  const std::vector<Monomial> basis = gb.is_unit() ? std::vector<Monomial>{} : standard_monomials(gb);
  const Index d = s.dim();
  require(static_cast<Index>(basis.size()) == d, "algebra was not built from this Groebner basis");
  const std::size_t n = gb.nvars();
  std::unordered_map<Monomial, Index, MonomialHash> index;
  for (Index i = 0; i < d; ++i) index.emplace(basis[static_cast<std::size_t>(i)], i);

  // Unknown (v, t): coefficient of b_t in D(x̄_v), column v·d + t.
  SparseEchelon<Rational> system(d * static_cast<Index>(n));
  for (const auto& g : gb.elements()) {
    std::vector<Matrix> partial_ops;
    for (std::size_t v = 0; v < n; ++v) {
      const Polynomial dg = normal_form(partial_derivative(g, v), gb);
      partial_ops.push_back(s.multiplication_operator(coordinates(dg, basis)));
    }
    for (Index k = 0; k < d; ++k) {
      SparseQ row;
      for (std::size_t v = 0; v < n; ++v)
        for (Index t = 0; t < d; ++t)
          if (!is_zero(partial_ops[v](k, t))) row.emplace_back(static_cast<Index>(v) * d + t, partial_ops[v](k, t));
      if (!row.empty()) system.insert(row);
    }
  }
  const QSubspace solutions = system.kernel();

  std::vector<Matrix> ops;
  for (Index c = 0; c < solutions.dim(); ++c) {
    std::vector<Vector> images;
    for (std::size_t v = 0; v < n; ++v)
      images.emplace_back(solutions.basis().col(c).segment(static_cast<Index>(v) * d, d));
    Matrix op = Matrix::Zero(d, d);
    for (Index j = 0; j < d; ++j) {
      const Monomial& a = basis[static_cast<std::size_t>(j)];
      for (std::size_t v = 0; v < n; ++v) {
        if (a[v] == 0) continue;
        const Index below = index.at(a / Monomial::variable(n, v));
        op.col(j) += Rational(a[v]) * s.sparse_multiplication(below).apply(images[v]);
      }
    }
    ops.push_back(std::move(op));
  }
  return LieAlgebraRep(s, ops);
}

LieAlgebraRep compute_derivations(const ArtinAlgebra& s) {
  const Index d = s.dim();
  // Unknown D(r, c) sits in column c·d + r.
  SparseEchelon<Rational> system(d * d);
  for (Index r = 0; r < d; ++r) {
    SparseQ row;
    for (Index c = 0; c < d; ++c)
      if (!is_zero(s.unit()(c))) row.emplace_back(c * d + r, s.unit()(c));
    if (!row.empty()) system.insert(row);
  }
  for (const auto& g : s.generator_images()) {
    const Matrix lg = s.multiplication_operator(g);
    for (Index j = 0; j < d; ++j) {
      const Matrix& lj = s.basis_multiplication(j);
      // D(g b_j) − D(g) b_j − g D(b_j) = 0, row by row.
      for (Index r = 0; r < d; ++r) {
        std::map<Index, Rational> acc;
        for (Index k = 0; k < d; ++k)
          if (!is_zero(lg(k, j))) acc[k * d + r] += lg(k, j);
        for (Index t = 0; t < d; ++t) {
          if (is_zero(g(t))) continue;
          for (Index q = 0; q < d; ++q)
            if (!is_zero(lj(r, q))) acc[t * d + q] -= g(t) * lj(r, q);
        }
        for (Index q = 0; q < d; ++q)
          if (!is_zero(lg(r, q))) acc[j * d + q] -= lg(r, q);
        SparseQ row = from_map(acc);
        if (!row.empty()) system.insert(row);
      }
    }
  }
  const QSubspace solutions = system.kernel();
  std::vector<Matrix> ops;
  for (Index c = 0; c < solutions.dim(); ++c) {
    Matrix op(d, d);
    for (Index col = 0; col < d; ++col) op.col(col) = solutions.basis().col(c).segment(col * d, d);
    ops.push_back(std::move(op));
  }
  return LieAlgebraRep(s, ops);
}

SeriesReport series(const LieAlgebraRep& l) {
  SeriesReport out;
  const Index m = l.dimension();
  std::vector<SparseQ> full;
  for (Index i = 0; i < m; ++i) full.push_back(SparseQ{{i, Rational(1)}});

  auto rows_of = [](const SparseEchelon<Rational>& e) {
    std::vector<SparseQ> rows;
    for (const auto& [pivot, row] : e.rows()) rows.push_back(row);
    return rows;
  };

  // Derived series: L^(k+1) = [L^(k), L^(k)].
  out.derived_dims.push_back(m);
  std::vector<SparseQ> current = full;
  while (!current.empty()) {
    SparseEchelon<Rational> next(m);
    for (std::size_t a = 0; a < current.size(); ++a)
      for (std::size_t b = a + 1; b < current.size(); ++b) {
        next.insert(l.bracket(current[a], current[b]));
        if (next.rank() == static_cast<Index>(current.size())) break;
      }
    if (next.rank() == static_cast<Index>(current.size())) break;
    out.derived_dims.push_back(next.rank());
    current = rows_of(next);
  }
  out.solvable = out.derived_dims.back() == 0;

  // Lower central series: C^(k+1) = [L, C^(k)].
  out.lower_central_dims.push_back(m);
  current = full;
  while (!current.empty()) {
    SparseEchelon<Rational> next(m);
    for (Index i = 0; i < m; ++i)
      for (const auto& c : current) next.insert(l.bracket(full[static_cast<std::size_t>(i)], c));
    if (next.rank() == static_cast<Index>(current.size())) break;
    out.lower_central_dims.push_back(next.rank());
    current = rows_of(next);
  }
  out.nilpotent = out.lower_central_dims.back() == 0;
  out.all_nilpotent_operators = all_nilpotent(l);
  return out;
}

bool all_nilpotent(const LieAlgebraRep& l) {
  const Index d = l.ambient_dim();
  if (d == 0 || l.dimension() == 0) return true;
  for (const auto& op : l.basis_operators())
    if (!is_zero(op.trace())) return false;

  // F_0 = 0, F_{j+1} = {v : D v ∈ F_j for every basis operator D}.
  QSubspace flag(d);
  while (flag.dim() < d) {
    std::vector<bool> pivot(static_cast<std::size_t>(d), false);
    for (Index p : flag.pivots()) pivot[static_cast<std::size_t>(p)] = true;
    SparseEchelon<Rational> conditions(d);
    for (const auto& op : l.basis_operators()) {
      Matrix reduced(d, d);
      for (Index c = 0; c < d; ++c) reduced.col(c) = flag.reduce(op.col(c));
      for (Index r = 0; r < d; ++r) {
        if (pivot[static_cast<std::size_t>(r)]) continue;
        SparseQ row = to_sparse(Vector(reduced.row(r).transpose()));
        if (!row.empty()) conditions.insert(row);
      }
      if (conditions.rank() == d) return false;
    }
    QSubspace next = conditions.kernel();
    if (next.dim() == flag.dim()) return false;
    flag = std::move(next);
  }
  return true;
}

SocleBound socle_bound_check(const ArtinAlgebra& s, const LieAlgebraRep& l) {
  require(s.is_local(), "socle bound needs a local algebra");
  SocleBound out;
  out.dim_der = l.dimension();
  out.embedding_dim = s.embedding_dim();
  out.socle_dim = socle_data(s).socle.dim();
  out.bound = out.embedding_dim * out.socle_dim;
  out.holds = out.dim_der >= out.bound;
  out.positive = s.dim() <= 1 || out.dim_der >= 1;
  return out;
}

UnipotentSubgroup unipotent_subgroup_dim(const ArtinAlgebra& s) {
  require(s.is_local(), "unipotent subgroup needs a local algebra");
  require(s.dim() > 1, "unipotent subgroup of K is trivial");
  const Index d = s.dim();
  const SocleData sd = socle_data(s);
  UnipotentSubgroup out;
  out.usoc_dim = sd.usoc.dim();
  out.lsoc_dim = sd.lsoc.dim();
  out.socle_dim = sd.socle.dim();
  out.embedding_dim = s.embedding_dim();
  const Index n = out.embedding_dim, u = out.usoc_dim;
  out.dim_u = u * u + n * out.lsoc_dim;
  out.constructed = n * out.lsoc_dim + u * (n - u);

  // V = USoc ⊕ (rest of a complement of m̄² in m̄); adapted basis [1 | V | m̄²].
  std::vector<Vector> v;
  QSubspace acc = s.power(2);
  for (Index c = 0; c < sd.usoc.dim(); ++c) {
    v.emplace_back(sd.usoc.basis().col(c));
    acc = sum(acc, QSubspace::span(Matrix(v.back())));
  }
  const QSubspace& m1 = s.maximal_ideal();
  for (Index c = 0; c < m1.dim() && static_cast<Index>(v.size()) < n; ++c) {
    const Vector w = m1.basis().col(c);
    if (acc.contains(w)) continue;
    v.push_back(w);
    acc = sum(acc, QSubspace::span(Matrix(w)));
  }
  ensure(static_cast<Index>(v.size()) == n, "could not complete the upper socle to a complement of m^2");
  Matrix q(d, d);
  q.col(0) = s.unit();
  for (Index i = 0; i < n; ++i) q.col(1 + i) = v[static_cast<std::size_t>(i)];
  q.rightCols(d - 1 - n) = s.power(2).basis();
  const auto qinv = inverse(q);
  ensure(qinv.has_value(), "adapted basis is singular");

  for (Index i = 0; i < n; ++i) {
    // USoc directions move into LSoc, the others into all of Soc.
    const QSubspace& targets = i < u ? sd.lsoc : sd.socle;
    for (Index c = 0; c < targets.dim(); ++c) {
      Matrix t = Matrix::Zero(d, d);
      t.col(1 + i) = targets.basis().col(c);
      Matrix op = t * *qinv;
      out.all_derivations = out.all_derivations && is_derivation(s, op);
      out.derivations.push_back(std::move(op));
    }
  }
  ensure(static_cast<Index>(out.derivations.size()) == out.constructed, "constructed derivation count mismatch");
  return out;
}

}  // namespace artinlab
