#include "artinlab/artin.hpp"

#include <map>
#include <numeric>
#include <unordered_map>

namespace artinlab {

namespace {

Vector unit_vector(Index n, Index i) {
  Vector v = Vector::Zero(n);
  v(i) = 1;
  return v;
}

bool vec_equal(const Vector& a, const Vector& b) { return a.size() == b.size() && a == b; }

// Generators whose classes in m̄/m̄² are independent, first come first kept.
std::vector<std::size_t> choose_embedding_generators(const ArtinAlgebra& s) {
  std::vector<std::size_t> chosen;
  QSubspace acc = s.power(2);
  for (std::size_t g = 0; g < s.generator_count(); ++g) {
    const Vector& v = s.generator_images()[g];
    if (acc.contains(v)) continue;
    chosen.push_back(g);
    acc = sum(acc, QSubspace::span(Matrix(v)));
  }
  ensure(static_cast<Index>(chosen.size()) == s.embedding_dim(), "generator images do not span m/m^2");
  return chosen;
}

// Binomial coefficient as a count of monomials.
Index binomial(Index n, Index k) {
  if (k < 0 || k > n) return 0;
  Index r = 1;
  for (Index i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// Images of monomials in the chosen generators, memoised; products evaluated in `alg`.
class MonomialEvaluator {
 public:
  MonomialEvaluator(const ArtinAlgebra& alg, std::vector<Vector> gens) : alg_(alg), gens_(std::move(gens)) {}

  const Vector& operator()(const Monomial& m) {
    auto it = memo_.find(m);
    if (it != memo_.end()) return it->second;
    Vector v;
    if (m.is_one()) {
      v = alg_.unit();
    } else {
      std::size_t j = 0;
      while (m[j] == 0) ++j;
      const Vector rest = (*this)(m / Monomial::variable(m.size(), j));
      v = alg_.multiply(rest, gens_[j]);
    }
    return memo_.emplace(m, std::move(v)).first->second;
  }

 private:
  const ArtinAlgebra& alg_;
  std::vector<Vector> gens_;
  std::unordered_map<Monomial, Vector, MonomialHash> memo_;
};

}  // namespace

ArtinAlgebra::ArtinAlgebra(std::vector<std::string> labels, std::vector<Matrix> left_multiplication, Vector unit,
                           std::vector<Vector> generators, std::vector<std::string> generator_names)
    : labels_(std::move(labels)),
      left_(std::move(left_multiplication)),
      unit_(std::move(unit)),
      generators_(std::move(generators)),
      generator_names_(std::move(generator_names)) {
  if (generator_names_.empty())
    for (std::size_t g = 0; g < generators_.size(); ++g) generator_names_.push_back("g" + std::to_string(g + 1));
  require(generator_names_.size() == generators_.size(), "one name per generator required");
  sparse_left_.reserve(left_.size());
  for (const auto& m : left_) sparse_left_.emplace_back(m);
  check_axioms();
  build_filtration();
}

void ArtinAlgebra::check_axioms() const {
  const Index d = dim();
  ensure(static_cast<Index>(left_.size()) == d, "one multiplication matrix per basis element required");
  ensure(unit_.size() == d, "unit has the wrong length");
  for (const auto& m : left_) ensure(m.rows() == d && m.cols() == d, "multiplication matrix has the wrong shape");
  for (const auto& g : generators_) ensure(g.size() == d, "generator image has the wrong length");

  ensure(multiplication_operator(unit_) == Matrix::Identity(d, d), "unit does not act as the identity");
  for (Index i = 0; i < d; ++i)
    for (Index j = i + 1; j < d; ++j)
      ensure(left_[static_cast<std::size_t>(i)].col(j) == left_[static_cast<std::size_t>(j)].col(i),
             "structure constants are not commutative");
  // (b_i b_j) b_k = b_i (b_j b_k) for every triple.
  for (Index i = 0; i < d; ++i) {
    const auto& li = sparse_left_[static_cast<std::size_t>(i)];
    for (Index j = 0; j < d; ++j) {
      const auto& bij = li.col(j);
      const auto& lj = sparse_left_[static_cast<std::size_t>(j)];
      for (Index k = 0; k < d; ++k) {
        Vector lhs = Vector::Zero(d);
        for (const auto& [t, c] : bij)
          for (const auto& [r, x] : sparse_left_[static_cast<std::size_t>(k)].col(t)) lhs(r) += c * x;
        ensure(lhs == li.apply(lj.col(k)), "structure constants are not associative");
      }
    }
  }
}

void ArtinAlgebra::build_filtration() {
  const Index d = dim();
  powers_.push_back(QSubspace::full(d));
  while (true) {
    const QSubspace& cur = powers_.back();
    std::vector<Vector> products;
    for (const auto& g : generators_) {
      const Matrix mg = multiplication_operator(g);
      for (Index c = 0; c < cur.dim(); ++c) products.push_back(mg * cur.basis().col(c));
    }
    QSubspace next = QSubspace::span(d, products);
    if (powers_.size() > 1 && next.dim() == cur.dim()) break;
    const bool zero = next.is_zero();
    powers_.push_back(std::move(next));
    if (zero) break;
  }
  local_ = powers_.back().is_zero() && powers_[1].dim() == d - 1;
}

const QSubspace& ArtinAlgebra::power(int k) const {
  require(k >= 0, "negative power of the maximal ideal");
  if (static_cast<std::size_t>(k) < powers_.size()) return powers_[static_cast<std::size_t>(k)];
  return powers_.back();
}

Index ArtinAlgebra::embedding_dim() const { return power(1).dim() - power(2).dim(); }

Matrix ArtinAlgebra::multiplication_operator(const Vector& a) const {
  require(a.size() == dim(), "vector length does not match the algebra");
  Matrix m = Matrix::Zero(dim(), dim());
  for (Index i = 0; i < dim(); ++i) {
    if (is_zero(a(i))) continue;
    const auto& sp = sparse_left_[static_cast<std::size_t>(i)];
    for (Index j = 0; j < dim(); ++j)
      for (const auto& [r, x] : sp.col(j)) m(r, j) += a(i) * x;
  }
  return m;
}

Vector ArtinAlgebra::multiply(const Vector& a, const Vector& b) const {
  require(a.size() == dim() && b.size() == dim(), "vector length does not match the algebra");
  Vector out = Vector::Zero(dim());
  for (Index i = 0; i < dim(); ++i) {
    if (is_zero(a(i))) continue;
    out += a(i) * sparse_left_[static_cast<std::size_t>(i)].apply(b);
  }
  return out;
}

ArtinAlgebra ArtinAlgebra::from_groebner(const GroebnerBasis& gb) {
  const auto& vars = gb.vars();
  const std::size_t n = gb.nvars();
  std::vector<Monomial> basis;
  if (!gb.is_unit()) basis = standard_monomials(gb);
  const Index d = static_cast<Index>(basis.size());
  std::unordered_map<Monomial, Index, MonomialHash> index;
  for (Index i = 0; i < d; ++i) index.emplace(basis[static_cast<std::size_t>(i)], i);

  auto coords_of = [&](const Monomial& m) -> Vector {
    if (auto it = index.find(m); it != index.end()) return unit_vector(d, it->second);
    return coordinates(normal_form(Polynomial::monomial(vars, m).with_order(gb.order()), gb), basis);
  };

  std::vector<Matrix> left(static_cast<std::size_t>(d), Matrix::Zero(d, d));
  for (Index i = 0; i < d; ++i)
    for (Index j = i; j < d; ++j) {
      const Vector v = coords_of(basis[static_cast<std::size_t>(i)] * basis[static_cast<std::size_t>(j)]);
      left[static_cast<std::size_t>(i)].col(j) = v;
      left[static_cast<std::size_t>(j)].col(i) = v;
    }

  std::vector<std::string> labels;
  for (const auto& m : basis) labels.push_back(Polynomial::monomial(vars, m).to_string());
  Vector unit = d ? coords_of(Monomial(n)) : Vector(0);
  std::vector<Vector> gens;
  for (std::size_t v = 0; v < n; ++v) gens.push_back(d ? coords_of(Monomial::variable(n, v)) : Vector(0));
  return ArtinAlgebra(std::move(labels), std::move(left), std::move(unit), std::move(gens), vars->names());
}

QSubspace annihilator(const ArtinAlgebra& s, const QSubspace& sub) {
  require(sub.ambient_dim() == s.dim(), "subspace does not live in the algebra");
  const Index d = s.dim();
  if (sub.dim() == 0) return QSubspace::full(d);
  Matrix stacked(d * sub.dim(), d);
  for (Index c = 0; c < sub.dim(); ++c) stacked.middleRows(c * d, d) = s.multiplication_operator(sub.basis().col(c));
  return kernel_basis(stacked);
}

SocleData socle_data(const ArtinAlgebra& s) {
  require(s.is_local(), "socle data needs a local algebra");
  const Index d = s.dim();
  SocleData out{annihilator(s, s.maximal_ideal()), QSubspace(d), QSubspace(d)};
  out.lsoc = intersection(out.socle, s.power(2));

  // Coordinates carried by a generator image come first, so echelon pivots land on them.
  std::vector<Index> perm;
  std::vector<bool> preferred(static_cast<std::size_t>(d), false);
  for (const auto& g : s.generator_images())
    for (Index j = 0; j < d; ++j)
      if (vec_equal(g, unit_vector(d, j))) preferred[static_cast<std::size_t>(j)] = true;
  for (Index j = 0; j < d; ++j)
    if (preferred[static_cast<std::size_t>(j)]) perm.push_back(j);
  for (Index j = 0; j < d; ++j)
    if (!preferred[static_cast<std::size_t>(j)]) perm.push_back(j);

  Matrix permuted(d, out.socle.dim());
  for (Index r = 0; r < d; ++r) permuted.row(r) = out.socle.basis().row(perm[static_cast<std::size_t>(r)]);
  const QSubspace echelon = QSubspace::span(permuted);

  QSubspace acc = out.lsoc;
  std::vector<Vector> chosen;
  for (Index c = 0; c < echelon.dim() && acc.dim() < out.socle.dim(); ++c) {
    Vector v(d);
    for (Index r = 0; r < d; ++r) v(perm[static_cast<std::size_t>(r)]) = echelon.basis()(r, c);
    if (acc.contains(v)) continue;
    chosen.push_back(v);
    acc = sum(acc, QSubspace::span(Matrix(v)));
  }
  out.usoc = QSubspace::span(d, chosen);
  ensure(out.usoc.dim() + out.lsoc.dim() == out.socle.dim(), "upper socle is not a complement");
  return out;
}

int minimal_generator_count(const Ideal& ideal) {
  const std::size_t n = ideal.nvars();
  for (const auto& g : ideal.generators())
    require(g.order_of() >= 1, "generator " + g.to_string() + " does not vanish at the origin");
  if (ideal.size() == 0) return 0;
  const auto comp = local_component(ideal, std::vector<Rational>(n, Rational(0)));
  const int top = comp.exponent + 1;

  std::map<Monomial, Index> index;
  for (int k = 0; k <= top; ++k)
    for (auto& m : monomials_of_degree(n, k)) index.emplace(m, static_cast<Index>(index.size()));

  SparseEchelon<Rational> echelon(static_cast<Index>(index.size()));
  auto insert_shift = [&](const Polynomial& g, const Monomial& shift) {
    std::map<Index, Rational> row;
    for (const auto& t : g.terms()) {
      Monomial m = t.monomial * shift;
      if (m.degree() <= top) row[index.at(m)] += t.coeff;
    }
    SparseVector<Rational> v;
    for (auto& [i, c] : row)
      if (!is_zero(c)) v.emplace_back(i, c);
    echelon.insert(v);
  };
  for (const auto& g : ideal.generators())
    for (const auto& [shift, unused] : index)
      if (!shift.is_one()) insert_shift(g, shift);
  const Index m_part = echelon.rank();
  for (const auto& g : ideal.generators()) insert_shift(g, Monomial(n));
  return static_cast<int>(echelon.rank() - m_part);
}

GradedAlgebra associated_graded(const ArtinAlgebra& s) {
  require(s.is_local(), "associated graded algebra needs a local algebra");
  const Index d = s.dim();
  const int depth = s.nilpotency_exponent();

  // Adapted basis: the unit, then complements C_k of m̄^{k+1} in m̄^k.
  std::vector<Vector> columns{s.unit()};
  std::vector<int> degrees{0};
  std::vector<Index> component_dims{1};
  for (int k = 1; k < depth; ++k) {
    const QSubspace c = complement_within(s.power(k + 1), s.power(k));
    component_dims.push_back(c.dim());
    for (Index j = 0; j < c.dim(); ++j) {
      columns.emplace_back(c.basis().col(j));
      degrees.push_back(k);
    }
  }
  ensure(static_cast<Index>(columns.size()) == d, "filtration quotients do not add up to dim S");
  Matrix p(d, d);
  for (Index j = 0; j < d; ++j) p.col(j) = columns[static_cast<std::size_t>(j)];
  const auto pinv_opt = inverse(p);
  ensure(pinv_opt.has_value(), "adapted basis is singular");
  const Matrix& pinv = *pinv_opt;

  auto deg = [&](Index i) { return degrees[static_cast<std::size_t>(i)]; };
  std::vector<Matrix> left;
  for (Index a = 0; a < d; ++a) {
    const Matrix q = pinv * s.multiplication_operator(p.col(a)) * p;
    Matrix g = Matrix::Zero(d, d);
    for (Index b = 0; b < d; ++b)
      for (Index k = 0; k < d; ++k) {
        if (is_zero(q(k, b))) continue;
        ensure(deg(k) >= deg(a) + deg(b), "multiplication does not respect the filtration");
        if (deg(k) == deg(a) + deg(b)) g(k, b) = q(k, b);
      }
    left.push_back(std::move(g));
  }
  std::vector<Vector> gens;
  for (const auto& x : s.generator_images()) {
    Vector c = pinv * x;
    for (Index k = 0; k < d; ++k)
      if (deg(k) != 1) c(k) = 0;
    gens.push_back(std::move(c));
  }
  std::vector<std::string> labels;
  for (Index j = 0; j < d; ++j) {
    std::string label = "[" + std::to_string(j) + "]";
    for (Index i = 0; i < d; ++i)
      if (vec_equal(columns[static_cast<std::size_t>(j)], unit_vector(d, i))) label = s.basis_labels()[i];
    labels.push_back(std::move(label));
  }
  ArtinAlgebra gr(std::move(labels), std::move(left), unit_vector(d, 0), std::move(gens), s.generator_names());

  GradedAlgebra out{component_dims, degrees, gr, choose_embedding_generators(s), nullptr, {}, {}, {}, {}};
  std::vector<std::string> names;
  std::vector<Vector> chosen_images;
  for (std::size_t g : out.chosen_generators) {
    names.push_back(s.generator_names()[g]);
    chosen_images.push_back(gr.generator_images()[g]);
  }
  const std::size_t e = names.size();
  out.presentation_vars = make_varset(names);
  MonomialEvaluator eval(gr, chosen_images);

  std::vector<Matrix> kernel_cols;  // I*_k as coordinate columns over Sym^k
  for (int k = 0; k <= out.top_degree() + 1; ++k) {
    const auto monos = monomials_of_degree(e, k);
    const Index m = static_cast<Index>(monos.size());
    std::map<Monomial, Index> index;
    for (Index i = 0; i < m; ++i) index.emplace(monos[static_cast<std::size_t>(i)], i);
    Matrix images(d, m);
    for (Index i = 0; i < m; ++i) images.col(i) = eval(monos[static_cast<std::size_t>(i)]);
    const QSubspace ker = kernel_basis(images);

    std::vector<Vector> shifted;
    if (k >= 1)
      for (Index c = 0; c < kernel_cols.back().cols(); ++c) {
        const auto& prev = monomials_of_degree(e, k - 1);
        for (std::size_t j = 0; j < e; ++j) {
          Vector v = Vector::Zero(m);
          for (std::size_t t = 0; t < prev.size(); ++t) {
            const Rational& coef = kernel_cols.back()(static_cast<Index>(t), c);
            if (!is_zero(coef)) v(index.at(prev[t] * Monomial::variable(e, j))) += coef;
          }
          shifted.push_back(std::move(v));
        }
      }
    const QSubspace m_ker = QSubspace::span(m, shifted);
    ensure(ker.contains(m_ker), "m·I* escapes I*");

    std::vector<Polynomial> polys;
    for (Index c = 0; c < ker.dim(); ++c) {
      Polynomial f(out.presentation_vars);
      for (Index i = 0; i < m; ++i)
        if (!is_zero(ker.basis()(i, c)))
          f += Polynomial::monomial(out.presentation_vars, monos[static_cast<std::size_t>(i)], ker.basis()(i, c));
      polys.push_back(std::move(f));
    }
    out.sym_dims.push_back(m);
    out.kernel_dims.push_back(ker.dim());
    out.m_kernel_dims.push_back(m_ker.dim());
    out.kernels.push_back(std::move(polys));
    kernel_cols.push_back(ker.basis());
  }
  return out;
}

MinimalPresentation minimal_presentation(const ArtinAlgebra& s) {
  require(s.is_local(), "minimal presentation needs a local algebra");
  require(s.dim() > 1, "minimal presentation of K is empty");
  MinimalPresentation out;
  out.embedding_dim = s.embedding_dim();
  out.chosen_generators = choose_embedding_generators(s);
  const Index e = out.embedding_dim;
  const Index d = s.dim();

  // K[y]/m^k → S/m̄^k is onto; it is injective exactly while I' ⊆ m^k.
  int l = 2;
  while (d - s.power(l + 1).dim() == binomial(e + l, e)) ++l;
  out.order = l;

  const int top = s.nilpotency_exponent();
  std::vector<Monomial> monos;
  std::map<Monomial, Index> index;
  for (int k = 0; k <= top; ++k)
    for (auto& m : monomials_of_degree(static_cast<std::size_t>(e), k)) {
      index.emplace(m, static_cast<Index>(monos.size()));
      monos.push_back(m);
    }
  std::vector<Vector> gens;
  for (std::size_t g : out.chosen_generators) gens.push_back(s.generator_images()[g]);
  MonomialEvaluator eval(s, gens);
  const Index m = static_cast<Index>(monos.size());
  Matrix images(d, m);
  for (Index i = 0; i < m; ++i) images.col(i) = eval(monos[static_cast<std::size_t>(i)]);
  const QSubspace ker = kernel_basis(images);

  SparseEchelon<Rational> m_ker(m);
  for (Index c = 0; c < ker.dim(); ++c) {
    for (Index j = 0; j < e; ++j) {
      std::map<Index, Rational> row;
      for (Index i = 0; i < m; ++i) {
        const Rational& coef = ker.basis()(i, c);
        if (is_zero(coef)) continue;
        Monomial shifted = monos[static_cast<std::size_t>(i)] * Monomial::variable(static_cast<std::size_t>(e), static_cast<std::size_t>(j));
        if (shifted.degree() <= top) row[index.at(shifted)] += coef;
      }
      m_ker.insert(SparseVector<Rational>(row.begin(), row.end()));
    }
  }
  out.min_gens = ker.dim() - m_ker.rank();
  return out;
}

ArtinAlgebra tensor_product(const ArtinAlgebra& a, const ArtinAlgebra& b) {
  const Index da = a.dim(), db = b.dim(), d = da * db;
  auto kron = [](const Vector& u, const Vector& v) {
    Vector w(u.size() * v.size());
    for (Index i = 0; i < u.size(); ++i) w.segment(i * v.size(), v.size()) = u(i) * v;
    return w;
  };
  std::vector<Matrix> left;
  std::vector<std::string> labels;
  for (Index i = 0; i < da; ++i)
    for (Index j = 0; j < db; ++j) {
      const Matrix& la = a.basis_multiplication(i);
      const Matrix& lb = b.basis_multiplication(j);
      Matrix m = Matrix::Zero(d, d);
      for (Index r = 0; r < da; ++r)
        for (Index c = 0; c < da; ++c)
          if (!is_zero(la(r, c))) m.block(r * db, c * db, db, db) = la(r, c) * lb;
      left.push_back(std::move(m));
      labels.push_back(a.basis_labels()[static_cast<std::size_t>(i)] + "⊗" + b.basis_labels()[static_cast<std::size_t>(j)]);
    }
  std::vector<Vector> gens;
  std::vector<std::string> names;
  for (std::size_t g = 0; g < a.generator_count(); ++g) {
    gens.push_back(kron(a.generator_images()[g], b.unit()));
    names.push_back(a.generator_names()[g]);
  }
  for (std::size_t g = 0; g < b.generator_count(); ++g) {
    gens.push_back(kron(a.unit(), b.generator_images()[g]));
    names.push_back(b.generator_names()[g]);
  }
  return ArtinAlgebra(std::move(labels), std::move(left), kron(a.unit(), b.unit()), std::move(gens),
                      std::move(names));
}

ArtinAlgebra direct_product(const std::vector<ArtinAlgebra>& factors) {
  Index d = 0;
  for (const auto& f : factors) d += f.dim();
  std::vector<Matrix> left;
  std::vector<std::string> labels;
  std::vector<Vector> gens;
  std::vector<std::string> names;
  Vector unit = Vector::Zero(d);
  Index offset = 0;
  for (std::size_t f = 0; f < factors.size(); ++f) {
    const auto& a = factors[f];
    const Index k = a.dim();
    for (Index i = 0; i < k; ++i) {
      Matrix m = Matrix::Zero(d, d);
      m.block(offset, offset, k, k) = a.basis_multiplication(i);
      left.push_back(std::move(m));
      labels.push_back(a.basis_labels()[static_cast<std::size_t>(i)] + "@" + std::to_string(f + 1));
    }
    unit.segment(offset, k) = a.unit();
    for (std::size_t g = 0; g < a.generator_count(); ++g) {
      Vector v = Vector::Zero(d);
      v.segment(offset, k) = a.generator_images()[g];
      gens.push_back(std::move(v));
      names.push_back(a.generator_names()[g] + "@" + std::to_string(f + 1));
    }
    offset += k;
  }
  return ArtinAlgebra(std::move(labels), std::move(left), std::move(unit), std::move(gens), std::move(names));
}

std::vector<LocalFactor> decompose_local(const Ideal& ideal, int cap, std::stop_token stop) {
  const auto pts = rational_points(ideal);
  if (!pts.complete) {
    const std::string var = pts.offending_variable ? ideal.vars()->name(*pts.offending_variable) : "?";
    fail(ErrorKind::IrrationalPoints,
         "multiplication operator of " + var + " has a characteristic polynomial that does not split over Q");
  }
  std::vector<LocalFactor> out;
  Index total = 0;
  for (const auto& pt : pts.points) {
    auto comp = local_component(ideal, pt, cap, stop);
    auto alg = ArtinAlgebra::from_groebner(comp.basis);
    total += alg.dim();
    out.push_back(LocalFactor{pt, std::move(comp), std::move(alg)});
  }
  const auto gb = buchberger(ideal, MonomialOrder::natural(OrderKind::DegRevLex, ideal.nvars()));
  const Index global = gb.is_unit() ? 0 : static_cast<Index>(standard_monomials(gb).size());
  ensure(total == global, "local factor dimensions do not add up to dim S");
  return out;
}

}  // namespace artinlab
