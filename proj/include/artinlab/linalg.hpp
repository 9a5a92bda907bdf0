#pragma once

// Exact dense linear algebra on Eigen containers.
//
// Every routine here is templated on the scalar type and assumes exact field
// arithmetic: a value is zero iff it compares equal to Scalar(0). No pivot
// thresholds are used, so ranks and kernels are exact for exact scalars. All
// decisions downstream (dimensions, derived series, Engel flags) are ranks,
// which do not change under field extension; computing over Q therefore gives
// the same answers as computing over its algebraic closure.

#include <algorithm>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include <Eigen/Core>
#include <boost/multiprecision/eigen.hpp>
#include <boost/multiprecision/gmp.hpp>

#include "artinlab/error.hpp"

namespace artinlab {

using Rational =
    boost::multiprecision::number<boost::multiprecision::gmp_rational, boost::multiprecision::et_off>;
using BigInt =
    boost::multiprecision::number<boost::multiprecision::gmp_int, boost::multiprecision::et_off>;

using Index = Eigen::Index;

template <typename Scalar>
using MatrixX = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using VectorX = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using Matrix = MatrixX<Rational>;
using Vector = VectorX<Rational>;

template <typename Scalar>
inline bool is_zero(const Scalar& x) {
  return x == Scalar(0);
}

template <typename Derived>
bool is_zero_matrix(const Eigen::MatrixBase<Derived>& m) {
  for (Index j = 0; j < m.cols(); ++j)
    for (Index i = 0; i < m.rows(); ++i)
      if (!is_zero(m(i, j))) return false;
  return true;
}

/// Reduced row-echelon form together with its pivot columns.
template <typename Scalar>
struct Echelon {
  MatrixX<Scalar> matrix;
  std::vector<Index> pivots;

  Index rank() const { return static_cast<Index>(pivots.size()); }
};

template <typename Derived>
Echelon<typename Derived::Scalar> rref(const Eigen::MatrixBase<Derived>& input) {
  using Scalar = typename Derived::Scalar;
  Echelon<Scalar> out{input, {}};
  auto& m = out.matrix;
  Index row = 0;
  for (Index col = 0; col < m.cols() && row < m.rows(); ++col) {
    Index pivot = -1;
    for (Index r = row; r < m.rows(); ++r) {
      if (!is_zero(m(r, col))) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) continue;
    if (pivot != row) m.row(pivot).swap(m.row(row));
    const Scalar inv = Scalar(1) / m(row, col);
    for (Index c = col; c < m.cols(); ++c)
      if (!is_zero(m(row, c))) m(row, c) *= inv;
    for (Index r = 0; r < m.rows(); ++r) {
      if (r == row || is_zero(m(r, col))) continue;
      const Scalar factor = m(r, col);
      for (Index c = col; c < m.cols(); ++c)
        if (!is_zero(m(row, c))) m(r, c) -= factor * m(row, c);
    }
    out.pivots.push_back(col);
    ++row;
  }
  return out;
}

template <typename Derived>
Index rank(const Eigen::MatrixBase<Derived>& m) {
  return rref(m).rank();
}

template <typename Derived>
typename Derived::Scalar determinant(const Eigen::MatrixBase<Derived>& input) {
  using Scalar = typename Derived::Scalar;
  require(input.rows() == input.cols(), "determinant of a non-square matrix");
  MatrixX<Scalar> m = input;
  Scalar det(1);
  const Index n = m.rows();
  for (Index col = 0; col < n; ++col) {
    Index pivot = -1;
    for (Index r = col; r < n; ++r)
      if (!is_zero(m(r, col))) {
        pivot = r;
        break;
      }
    if (pivot < 0) return Scalar(0);
    if (pivot != col) {
      m.row(pivot).swap(m.row(col));
      det = -det;
    }
    det *= m(col, col);
    for (Index r = col + 1; r < n; ++r) {
      if (is_zero(m(r, col))) continue;
      const Scalar factor = m(r, col) / m(col, col);
      for (Index c = col; c < n; ++c) m(r, c) -= factor * m(col, c);
    }
  }
  return det;
}

template <typename Derived>
std::optional<MatrixX<typename Derived::Scalar>> inverse(const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  require(m.rows() == m.cols(), "inverse of a non-square matrix");
  const Index n = m.rows();
  MatrixX<Scalar> augmented(n, 2 * n);
  augmented << m, MatrixX<Scalar>::Identity(n, n);
  auto e = rref(augmented);
  if (e.rank() < n || (n > 0 && e.pivots[n - 1] != n - 1)) return std::nullopt;
  return MatrixX<Scalar>(e.matrix.rightCols(n));
}

/// A linear subspace of Scalar^ambient, stored as an RREF basis.
///
/// basis() holds the basis vectors as columns; its transpose is in reduced
/// row-echelon form with strictly increasing pivots.
template <typename Scalar>
class Subspace {
 public:
  using Mat = MatrixX<Scalar>;
  using Vec = VectorX<Scalar>;

  explicit Subspace(Index ambient = 0) : ambient_(ambient), basis_(ambient, 0) {}

  template <typename Derived>
  static Subspace span(const Eigen::MatrixBase<Derived>& columns) {
    Subspace s(columns.rows());
    if (columns.cols() == 0) return s;
    auto e = rref(columns.transpose());
    s.basis_ = e.matrix.topRows(e.rank()).transpose();
    s.pivots_ = std::move(e.pivots);
    return s;
  }

  static Subspace span(Index ambient, const std::vector<Vec>& vectors) {
    Mat m(ambient, static_cast<Index>(vectors.size()));
    for (std::size_t i = 0; i < vectors.size(); ++i) m.col(static_cast<Index>(i)) = vectors[i];
    return span(m);
  }

  static Subspace full(Index ambient) { return span(Mat::Identity(ambient, ambient)); }

  Index ambient_dim() const { return ambient_; }
  Index dim() const { return basis_.cols(); }
  bool is_zero() const { return dim() == 0; }
  const Mat& basis() const { return basis_; }
  const std::vector<Index>& pivots() const { return pivots_; }

  /// Canonical representative of v modulo this subspace (zero at every pivot).
  Vec reduce(Vec v) const {
    require(v.size() == ambient_, "vector length does not match ambient dimension");
    for (Index i = 0; i < dim(); ++i) {
      const Scalar c = v(pivots_[static_cast<std::size_t>(i)]);
      if (artinlab::is_zero(c)) continue;
      for (Index r = 0; r < ambient_; ++r)
        if (!artinlab::is_zero(basis_(r, i))) v(r) -= c * basis_(r, i);
    }
    return v;
  }

  bool contains(const Vec& v) const { return is_zero_matrix(reduce(v)); }

  bool contains(const Subspace& other) const {
    require(other.ambient_ == ambient_, "ambient dimension mismatch");
    for (Index i = 0; i < other.dim(); ++i)
      if (!contains(Vec(other.basis_.col(i)))) return false;
    return true;
  }

  /// Coordinates of v in basis(); requires v to lie in the subspace.
  Vec coordinates(const Vec& v) const {
    Vec c(dim());
    for (Index i = 0; i < dim(); ++i) c(i) = v(pivots_[static_cast<std::size_t>(i)]);
    return c;
  }

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_ == b.ambient_ && a.pivots_ == b.pivots_ && a.basis_ == b.basis_;
  }

 private:
  Index ambient_;
  Mat basis_;
  std::vector<Index> pivots_;
};

using QSubspace = Subspace<Rational>;

template <typename Derived>
Subspace<typename Derived::Scalar> kernel_basis(const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  auto e = rref(m);
  const Index n = m.cols();
  std::vector<bool> is_pivot(static_cast<std::size_t>(n), false);
  for (Index p : e.pivots) is_pivot[static_cast<std::size_t>(p)] = true;
  MatrixX<Scalar> k(n, n - e.rank());
  k.setZero();
  Index col = 0;
  for (Index f = 0; f < n; ++f) {
    if (is_pivot[static_cast<std::size_t>(f)]) continue;
    k(f, col) = Scalar(1);
    for (Index i = 0; i < e.rank(); ++i) k(e.pivots[static_cast<std::size_t>(i)], col) = -e.matrix(i, f);
    ++col;
  }
  return Subspace<Scalar>::span(k);
}

template <typename Scalar>
Subspace<Scalar> sum(const Subspace<Scalar>& a, const Subspace<Scalar>& b) {
  require(a.ambient_dim() == b.ambient_dim(), "ambient dimension mismatch");
  MatrixX<Scalar> m(a.ambient_dim(), a.dim() + b.dim());
  m << a.basis(), b.basis();
  return Subspace<Scalar>::span(m);
}

template <typename Scalar>
Subspace<Scalar> intersection(const Subspace<Scalar>& a, const Subspace<Scalar>& b) {
  require(a.ambient_dim() == b.ambient_dim(), "ambient dimension mismatch");
  if (a.dim() == 0 || b.dim() == 0) return Subspace<Scalar>(a.ambient_dim());
  MatrixX<Scalar> m(a.ambient_dim(), a.dim() + b.dim());
  m << a.basis(), -b.basis();
  auto k = kernel_basis(m);
  return Subspace<Scalar>::span(MatrixX<Scalar>(a.basis() * k.basis().topRows(a.dim())));
}

/// A complement c of a inside super (a ⊆ super), chosen greedily from super's basis.
template <typename Scalar>
Subspace<Scalar> complement_within(const Subspace<Scalar>& a, const Subspace<Scalar>& super) {
  require(super.contains(a), "complement_within: subspace is not contained in the superspace");
  Subspace<Scalar> acc = a;
  std::vector<VectorX<Scalar>> chosen;
  for (Index i = 0; i < super.dim() && acc.dim() < super.dim(); ++i) {
    VectorX<Scalar> v = super.basis().col(i);
    if (acc.contains(v)) continue;
    chosen.push_back(v);
    acc = sum(acc, Subspace<Scalar>::span(MatrixX<Scalar>(v)));
  }
  return Subspace<Scalar>::span(a.ambient_dim(), chosen);
}

template <typename Scalar>
Subspace<Scalar> complement(const Subspace<Scalar>& a) {
  return complement_within(a, Subspace<Scalar>::full(a.ambient_dim()));
}

template <typename Derived, typename Scalar>
Subspace<Scalar> image(const Eigen::MatrixBase<Derived>& map, const Subspace<Scalar>& s) {
  return Subspace<Scalar>::span(MatrixX<Scalar>(map * s.basis()));
}

/// Sorted (index, value) pairs with no stored zeros.
template <typename Scalar>
using SparseVector = std::vector<std::pair<Index, Scalar>>;

template <typename Scalar>
SparseVector<Scalar> to_sparse(const VectorX<Scalar>& v) {
  SparseVector<Scalar> out;
  for (Index i = 0; i < v.size(); ++i)
    if (!is_zero(v(i))) out.emplace_back(i, v(i));
  return out;
}

/// Column-compressed copy of a dense matrix, for products that skip zeros.
template <typename Scalar>
class SparseColumns {
 public:
  SparseColumns() = default;
  explicit SparseColumns(const MatrixX<Scalar>& m) : rows_(m.rows()), cols_(static_cast<std::size_t>(m.cols())) {
    for (Index j = 0; j < m.cols(); ++j) cols_[static_cast<std::size_t>(j)] = to_sparse(VectorX<Scalar>(m.col(j)));
  }

  Index rows() const { return rows_; }
  Index cols() const { return static_cast<Index>(cols_.size()); }
  const SparseVector<Scalar>& col(Index j) const { return cols_[static_cast<std::size_t>(j)]; }

  VectorX<Scalar> apply(const VectorX<Scalar>& v) const {
    VectorX<Scalar> out = VectorX<Scalar>::Zero(rows_);
    for (Index j = 0; j < cols(); ++j) {
      if (is_zero(v(j))) continue;
      for (const auto& [i, x] : col(j)) out(i) += x * v(j);
    }
    return out;
  }

  VectorX<Scalar> apply(const SparseVector<Scalar>& v) const {
    VectorX<Scalar> out = VectorX<Scalar>::Zero(rows_);
    for (const auto& [j, y] : v)
      for (const auto& [i, x] : col(j)) out(i) += x * y;
    return out;
  }

  MatrixX<Scalar> dense() const {
    MatrixX<Scalar> m = MatrixX<Scalar>::Zero(rows_, cols());
    for (Index j = 0; j < cols(); ++j)
      for (const auto& [i, x] : col(j)) m(i, j) = x;
    return m;
  }

  /// this·other.
  SparseColumns operator*(const SparseColumns& other) const {
    SparseColumns out;
    out.rows_ = rows_;
    out.cols_.resize(other.cols_.size());
    for (std::size_t j = 0; j < other.cols_.size(); ++j) out.cols_[j] = to_sparse(apply(other.cols_[j]));
    return out;
  }

  SparseColumns operator-(const SparseColumns& other) const {
    return SparseColumns(MatrixX<Scalar>(dense() - other.dense()));
  }

 private:
  Index rows_ = 0;
  std::vector<SparseVector<Scalar>> cols_;
};

/// Incremental row reduction for large sparse systems.
///
/// Rows are inserted one at a time and kept fully reduced against the pivots
/// already present; kernel() back-substitutes to RREF before reading off the
/// null space.
template <typename Scalar>
class SparseEchelon {
 public:
  explicit SparseEchelon(Index cols) : cols_(cols) {}

  Index cols() const { return cols_; }
  Index rank() const { return static_cast<Index>(rows_.size()); }

  /// Echelon rows keyed by pivot column (pivot coefficient 1).
  const std::map<Index, SparseVector<Scalar>>& rows() const { return rows_; }

  SparseVector<Scalar> reduce(const SparseVector<Scalar>& v) const {
    std::map<Index, Scalar> acc(v.begin(), v.end());
    reduce_in_place(acc);
    return SparseVector<Scalar>(acc.begin(), acc.end());
  }

  /// Returns true when the row was independent of the rows seen so far.
  bool insert(const SparseVector<Scalar>& v) {
    std::map<Index, Scalar> acc(v.begin(), v.end());
    reduce_in_place(acc);
    if (acc.empty()) return false;
    const Index lead = acc.begin()->first;
    require(lead < cols_, "sparse row index out of range");
    const Scalar inv = Scalar(1) / acc.begin()->second;
    SparseVector<Scalar> row;
    row.reserve(acc.size());
    for (auto& [idx, val] : acc) row.emplace_back(idx, val * inv);
    rows_.emplace(lead, std::move(row));
    return true;
  }

  /// Null space of all inserted rows.
  Subspace<Scalar> kernel() const {
    std::map<Index, SparseVector<Scalar>> reduced;
    for (auto it = rows_.rbegin(); it != rows_.rend(); ++it) {
      std::map<Index, Scalar> acc(std::next(it->second.begin()), it->second.end());
      reduce_against(acc, reduced);
      SparseVector<Scalar> row;
      row.emplace_back(it->first, Scalar(1));
      row.insert(row.end(), acc.begin(), acc.end());
      reduced.emplace(it->first, std::move(row));
    }
    MatrixX<Scalar> k(cols_, cols_ - rank());
    k.setZero();
    std::vector<Index> free_col(static_cast<std::size_t>(cols_), -1);
    Index next = 0;
    for (Index c = 0; c < cols_; ++c)
      if (!rows_.count(c)) free_col[static_cast<std::size_t>(c)] = next++;
    for (Index c = 0; c < cols_; ++c)
      if (free_col[static_cast<std::size_t>(c)] >= 0) k(c, free_col[static_cast<std::size_t>(c)]) = Scalar(1);
    for (const auto& [pivot, row] : reduced)
      for (std::size_t i = 1; i < row.size(); ++i) {
        const Index f = free_col[static_cast<std::size_t>(row[i].first)];
        ensure(f >= 0, "sparse echelon: pivot column left in a reduced row");
        k(pivot, f) = -row[i].second;
      }
    return Subspace<Scalar>::span(k);
  }

 private:
  void reduce_in_place(std::map<Index, Scalar>& acc) const { reduce_against(acc, rows_); }

  static void reduce_against(std::map<Index, Scalar>& acc,
                             const std::map<Index, SparseVector<Scalar>>& rows) {
    auto it = acc.begin();
    while (it != acc.end()) {
      auto found = rows.find(it->first);
      if (found == rows.end()) {
        ++it;
        continue;
      }
      const Scalar c = it->second;
      // Row entries past the pivot have larger indices, so erasing them keeps `it` valid.
      for (std::size_t i = 1; i < found->second.size(); ++i) {
        const auto& [idx, val] = found->second[i];
        auto [slot, inserted] = acc.try_emplace(idx, Scalar(0));
        slot->second -= c * val;
        if (is_zero(slot->second)) acc.erase(slot);
      }
      it = acc.erase(it);
    }
  }

  Index cols_;
  std::map<Index, SparseVector<Scalar>> rows_;
};

}  // namespace artinlab
