#include "artinlab/poly.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace artinlab {

namespace {

bool is_identifier(const std::string& s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  return std::all_of(s.begin(), s.end(),
                     [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; });
}

std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

}  // namespace

// ---------------------------------------------------------------- VarSet

VarSet::VarSet(std::vector<std::string> names) : names_(std::move(names)) {
  std::set<std::string> seen;
  for (const auto& n : names_) {
    require(is_identifier(n), "invalid variable name '" + n + "'");
    require(seen.insert(n).second, "duplicate variable name '" + n + "'");
  }
}

std::optional<std::size_t> VarSet::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return i;
  return std::nullopt;
}

std::size_t VarSet::require_index(std::string_view name) const {
  auto i = index_of(name);
  require(i.has_value(), "unknown variable '" + std::string(name) + "'");
  return *i;
}

VarSetPtr make_varset(std::vector<std::string> names) {
  return std::make_shared<const VarSet>(std::move(names));
}

VarSetPtr parse_varset(std::string_view text) {
  std::vector<std::string> names;
  std::string cur;
  for (char c : text) {
    if (c == ',' || std::isspace(static_cast<unsigned char>(c))) {
      if (!cur.empty()) names.push_back(std::move(cur));
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  if (!cur.empty()) names.push_back(std::move(cur));
  return make_varset(std::move(names));
}

// ---------------------------------------------------------------- Monomial

Monomial::Monomial(std::vector<int> exps) : exps_(std::move(exps)) {
  for (int e : exps_) require(e >= 0, "negative exponent in monomial");
}

Monomial Monomial::variable(std::size_t nvars, std::size_t i, int power) {
  Monomial m(nvars);
  m.exps_[i] = power;
  return m;
}

int Monomial::degree() const { return std::accumulate(exps_.begin(), exps_.end(), 0); }

bool Monomial::divides(const Monomial& other) const {
  for (std::size_t i = 0; i < exps_.size(); ++i)
    if (exps_[i] > other.exps_[i]) return false;
  return true;
}

std::optional<std::size_t> Monomial::pure_power_variable() const {
  std::optional<std::size_t> var;
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] == 0) continue;
    if (var) return std::nullopt;
    var = i;
  }
  return var;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial r = a;
  for (std::size_t i = 0; i < r.exps_.size(); ++i) r.exps_[i] += b.exps_[i];
  return r;
}

Monomial operator/(const Monomial& a, const Monomial& b) {
  Monomial r = a;
  for (std::size_t i = 0; i < r.exps_.size(); ++i) {
    r.exps_[i] -= b.exps_[i];
    ensure(r.exps_[i] >= 0, "monomial division is not exact");
  }
  return r;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  Monomial r = a;
  for (std::size_t i = 0; i < r.exps_.size(); ++i) r.exps_[i] = std::max(a.exps_[i], b.exps_[i]);
  return r;
}

bool coprime(const Monomial& a, const Monomial& b) {
  for (std::size_t i = 0; i < a.exps_.size(); ++i)
    if (a.exps_[i] > 0 && b.exps_[i] > 0) return false;
  return true;
}

std::size_t MonomialHash::operator()(const Monomial& m) const noexcept {
  std::size_t h = 0xcbf29ce484222325ULL;
  for (int e : m.exponents()) h = (h ^ static_cast<std::size_t>(e)) * 0x100000001b3ULL;
  return h;
}

int weighted_degree(const Monomial& m, const std::vector<int>& weights) {
  require(weights.size() == m.size(), "weight vector length does not match variable count");
  int d = 0;
  for (std::size_t i = 0; i < weights.size(); ++i) d += weights[i] * m[i];
  return d;
}

std::vector<Monomial> monomials_of_degree(std::size_t nvars, int degree) {
  std::vector<Monomial> out;
  if (nvars == 0) {
    if (degree == 0) out.emplace_back(0);
    return out;
  }
  Monomial m(nvars);
  // Enumerate compositions of `degree` into nvars parts.
  auto rec = [&](auto&& self, std::size_t i, int left) -> void {
    if (i + 1 == nvars) {
      m[i] = left;
      out.push_back(m);
      return;
    }
    for (int e = 0; e <= left; ++e) {
      m[i] = e;
      self(self, i + 1, left - e);
    }
  };
  rec(rec, 0, degree);
  std::sort(out.begin(), out.end());
  return out;
}

// ---------------------------------------------------------------- MonomialOrder

MonomialOrder::MonomialOrder(OrderKind kind, std::vector<std::size_t> priority)
    : kind_(kind), priority_(std::move(priority)) {
  std::vector<std::size_t> sorted = priority_;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i < sorted.size(); ++i)
    require(sorted[i] == i, "variable priority must be a permutation");
}

MonomialOrder MonomialOrder::natural(OrderKind kind, std::size_t nvars) {
  std::vector<std::size_t> p(nvars);
  std::iota(p.begin(), p.end(), 0);
  return MonomialOrder(kind, std::move(p));
}

MonomialOrder MonomialOrder::parse(std::string_view text, const VarSet& vars) {
  const std::string s = trim(text);
  const auto colon = s.find(':');
  const std::string kind_text = trim(std::string_view(s).substr(0, colon));
  OrderKind kind;
  if (kind_text == "lex")
    kind = OrderKind::Lex;
  else if (kind_text == "deglex")
    kind = OrderKind::DegLex;
  else if (kind_text == "degrevlex")
    kind = OrderKind::DegRevLex;
  else
    throw ParseError("unknown monomial order '" + kind_text + "'", 0);
  if (colon == std::string::npos) return natural(kind, vars.size());

  std::vector<std::size_t> priority;
  std::string cur;
  auto flush = [&] {
    std::string name = trim(cur);
    cur.clear();
    if (name.empty()) return;
    auto idx = vars.index_of(name);
    if (!idx) throw ParseError("unknown variable '" + name + "' in order priority", colon + 1);
    priority.push_back(*idx);
  };
  for (char c : s.substr(colon + 1)) {
    if (c == ',' || c == '>' || std::isspace(static_cast<unsigned char>(c)))
      flush();
    else
      cur.push_back(c);
  }
  flush();
  // Unlisted variables keep declaration order after the listed ones.
  for (std::size_t i = 0; i < vars.size(); ++i)
    if (std::find(priority.begin(), priority.end(), i) == priority.end()) priority.push_back(i);
  if (priority.size() != vars.size()) throw ParseError("repeated variable in order priority", colon + 1);
  return MonomialOrder(kind, std::move(priority));
}

std::string MonomialOrder::to_string(const VarSet& vars) const {
  std::string out = kind_ == OrderKind::Lex ? "lex" : kind_ == OrderKind::DegLex ? "deglex" : "degrevlex";
  if (!priority_.empty()) {
    out += ':';
    for (std::size_t i = 0; i < priority_.size(); ++i) {
      if (i) out += '>';
      out += vars.name(priority_[i]);
    }
  }
  return out;
}

std::strong_ordering MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
  if (kind_ != OrderKind::Lex) {
    const int da = a.degree(), db = b.degree();
    if (da != db) return da <=> db;
  }
  if (kind_ == OrderKind::DegRevLex) {
    for (auto it = priority_.rbegin(); it != priority_.rend(); ++it)
      if (a[*it] != b[*it]) return b[*it] <=> a[*it];
    return std::strong_ordering::equal;
  }
  for (std::size_t v : priority_)
    if (a[v] != b[v]) return a[v] <=> b[v];
  return std::strong_ordering::equal;
}

// ---------------------------------------------------------------- Polynomial

Polynomial::Polynomial(VarSetPtr vars, MonomialOrder order) : vars_(std::move(vars)), order_(std::move(order)) {
  require(vars_ != nullptr, "polynomial without a variable set");
  require(order_.priority().size() == vars_->size(), "monomial order does not match variable count");
}

Polynomial::Polynomial(VarSetPtr vars)
    : Polynomial(vars, MonomialOrder::natural(OrderKind::DegRevLex, vars ? vars->size() : 0)) {}

Polynomial Polynomial::constant(VarSetPtr vars, const Rational& c) {
  Polynomial p(vars);
  if (!artinlab::is_zero(c)) p.terms_.push_back({Monomial(p.nvars()), c});
  return p;
}

Polynomial Polynomial::variable(VarSetPtr vars, std::size_t i) {
  Polynomial p(vars);
  require(i < p.nvars(), "variable index out of range");
  p.terms_.push_back({Monomial::variable(p.nvars(), i), Rational(1)});
  return p;
}

Polynomial Polynomial::monomial(VarSetPtr vars, const Monomial& m, const Rational& c) {
  Polynomial p(vars);
  require(m.size() == p.nvars(), "monomial length does not match variable count");
  if (!artinlab::is_zero(c)) p.terms_.push_back({m, c});
  return p;
}

Polynomial Polynomial::from_terms(VarSetPtr vars, MonomialOrder order, std::vector<Term> terms) {
  Polynomial p(std::move(vars), std::move(order));
  std::map<Monomial, Rational> acc;
  for (auto& t : terms) {
    require(t.monomial.size() == p.nvars(), "monomial length does not match variable count");
    acc[t.monomial] += t.coeff;
  }
  for (auto& [m, c] : acc)
    if (!artinlab::is_zero(c)) p.terms_.push_back({m, c});
  std::sort(p.terms_.begin(), p.terms_.end(),
            [&](const Term& a, const Term& b) { return p.order_.greater(a.monomial, b.monomial); });
  return p;
}

bool Polynomial::is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].monomial.is_one()); }

const Term& Polynomial::leading_term() const {
  require(!terms_.empty(), "leading term of the zero polynomial");
  return terms_.front();
}

Rational Polynomial::coeff(const Monomial& m) const {
  for (const auto& t : terms_)
    if (t.monomial == m) return t.coeff;
  return Rational(0);
}

Polynomial Polynomial::with_order(const MonomialOrder& order) const {
  if (order == order_) return *this;
  Polynomial p(vars_, order);
  p.terms_ = terms_;
  std::sort(p.terms_.begin(), p.terms_.end(),
            [&](const Term& a, const Term& b) { return order.greater(a.monomial, b.monomial); });
  return p;
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return *this;
  return *this * (Rational(1) / leading_coeff());
}

int Polynomial::total_degree() const {
  int d = -1;
  for (const auto& t : terms_) d = std::max(d, t.monomial.degree());
  return d;
}

int Polynomial::order_of() const {
  int d = kInfiniteOrder;
  for (const auto& t : terms_) d = std::min(d, t.monomial.degree());
  return d;
}

Rational Polynomial::evaluate(const std::vector<Rational>& point) const {
  require(point.size() == nvars(), "point dimension does not match variable count");
  Rational sum(0);
  for (const auto& t : terms_) {
    Rational v = t.coeff;
    for (std::size_t i = 0; i < nvars(); ++i)
      for (int k = 0; k < t.monomial[i]; ++k) v *= point[i];
    sum += v;
  }
  return sum;
}

void Polynomial::check_compatible(const Polynomial& b) const {
  require(vars_ == b.vars_ || *vars_ == *b.vars_, "polynomials over different variable sets");
}

Polynomial Polynomial::aligned(const Polynomial& b) const {
  check_compatible(b);
  return b.with_order(order_);
}

Polynomial Polynomial::operator-() const {
  Polynomial p = *this;
  for (auto& t : p.terms_) t.coeff = -t.coeff;
  return p;
}

namespace detail {

std::vector<Term> merge_terms(std::span<const Term> a, std::span<const Term> b, const Rational& scale,
                              const Monomial* shift, const MonomialOrder& order) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size()) {
      out.push_back(a[i++]);
      continue;
    }
    Monomial bm = shift ? b[j].monomial * *shift : b[j].monomial;
    if (i == a.size()) {
      out.push_back({std::move(bm), b[j].coeff * scale});
      ++j;
      continue;
    }
    const auto cmp = order.compare(a[i].monomial, bm);
    if (cmp > 0) {
      out.push_back(a[i++]);
    } else if (cmp < 0) {
      out.push_back({std::move(bm), b[j].coeff * scale});
      ++j;
    } else {
      Rational c = a[i].coeff + b[j].coeff * scale;
      if (!is_zero(c)) out.push_back({std::move(bm), std::move(c)});
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace detail

using detail::merge_terms;

Polynomial& Polynomial::operator+=(const Polynomial& b) {
  const Polynomial bb = aligned(b);
  terms_ = merge_terms(terms_, bb.terms_, Rational(1), nullptr, order_);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& b) {
  const Polynomial bb = aligned(b);
  terms_ = merge_terms(terms_, bb.terms_, Rational(-1), nullptr, order_);
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  const Polynomial bb = a.aligned(b);
  std::map<Monomial, Rational> acc;
  for (const auto& s : a.terms_)
    for (const auto& t : bb.terms_) acc[s.monomial * t.monomial] += s.coeff * t.coeff;
  std::vector<Term> terms;
  for (auto& [m, c] : acc)
    if (!is_zero(c)) terms.push_back({m, c});
  Polynomial p(a.vars_, a.order_);
  std::sort(terms.begin(), terms.end(),
            [&](const Term& x, const Term& y) { return a.order_.greater(x.monomial, y.monomial); });
  p.terms_ = std::move(terms);
  return p;
}

Polynomial& Polynomial::operator*=(const Polynomial& b) { return *this = *this * b; }

Polynomial& Polynomial::operator*=(const Rational& c) {
  if (artinlab::is_zero(c)) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.coeff *= c;
  return *this;
}

Polynomial Polynomial::mul_term(const Rational& c, const Monomial& m) const {
  Polynomial p(vars_, order_);
  if (artinlab::is_zero(c)) return p;
  p.terms_.reserve(terms_.size());
  for (const auto& t : terms_) p.terms_.push_back({t.monomial * m, t.coeff * c});
  return p;
}

Polynomial Polynomial::sub_mul_term(const Rational& c, const Monomial& m, const Polynomial& q) const {
  const Polynomial qq = aligned(q);
  Polynomial p(vars_, order_);
  p.terms_ = merge_terms(terms_, qq.terms_, -c, &m, order_);
  return p;
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  if (!(a.vars_ == b.vars_ || *a.vars_ == *b.vars_)) return false;
  if (a.order_ == b.order_) return a.terms_ == b.terms_;
  return a.terms_ == b.with_order(a.order_).terms_;
}

std::string to_string(const Rational& r) {
  std::ostringstream os;
  os << r;
  return os.str();
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : terms_) {
    Rational c = t.coeff;
    const bool negative = c < 0;
    if (negative) c = -c;
    if (first)
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    first = false;
    std::string mono;
    for (std::size_t i = 0; i < nvars(); ++i) {
      const int e = t.monomial[i];
      if (e == 0) continue;
      if (!mono.empty()) mono += '*';
      mono += vars_->name(i);
      if (e > 1) mono += '^' + std::to_string(e);
    }
    if (mono.empty()) {
      out += artinlab::to_string(c);
    } else if (c == 1) {
      out += mono;
    } else {
      out += artinlab::to_string(c) + '*' + mono;
    }
  }
  return out;
}

Polynomial pow(const Polynomial& p, int exponent) {
  require(exponent >= 0, "negative polynomial exponent");
  Polynomial result = Polynomial::constant(p.vars(), Rational(1)).with_order(p.order());
  Polynomial base = p;
  while (exponent > 0) {
    if (exponent & 1) result = result * base;
    exponent >>= 1;
    if (exponent) base = base * base;
  }
  return result;
}

Polynomial partial_derivative(const Polynomial& p, std::size_t var) {
  require(var < p.nvars(), "unknown variable in partial derivative");
  std::vector<Term> terms;
  for (const auto& t : p.terms()) {
    const int e = t.monomial[var];
    if (e == 0) continue;
    Monomial m = t.monomial;
    m[var] = e - 1;
    terms.push_back({std::move(m), t.coeff * e});
  }
  return Polynomial::from_terms(p.vars(), p.order(), std::move(terms));
}

Polynomial substitute(const Polynomial& p, const std::vector<Polynomial>& images) {
  require(images.size() == p.nvars(), "substitution needs one image per variable");
  require(!images.empty() || p.nvars() == 0, "empty substitution");
  if (p.nvars() == 0) return p;
  const VarSetPtr& target = images.front().vars();
  for (const auto& im : images) require(*im.vars() == *target, "substitution images over different variable sets");
  const MonomialOrder& order = images.front().order();
  // Cache powers of each image.
  std::vector<std::vector<Polynomial>> powers(images.size());
  Polynomial result(target, order);
  for (const auto& t : p.terms()) {
    Polynomial term = Polynomial::constant(target, t.coeff).with_order(order);
    for (std::size_t i = 0; i < images.size(); ++i) {
      const int e = t.monomial[i];
      if (e == 0) continue;
      auto& pw = powers[i];
      if (pw.empty()) pw.push_back(Polynomial::constant(target, Rational(1)).with_order(order));
      while (static_cast<int>(pw.size()) <= e) pw.push_back(pw.back() * images[i]);
      term = term * pw[static_cast<std::size_t>(e)];
    }
    result += term;
  }
  return result;
}

Polynomial truncate(const Polynomial& p, int degree) {
  std::vector<Term> kept;
  for (const auto& t : p.terms())
    if (t.monomial.degree() <= degree) kept.push_back(t);
  return Polynomial::from_terms(p.vars(), p.order(), std::move(kept));
}

Polynomial homogeneous_component(const Polynomial& p, int degree) {
  std::vector<Term> kept;
  for (const auto& t : p.terms())
    if (t.monomial.degree() == degree) kept.push_back(t);
  return Polynomial::from_terms(p.vars(), p.order(), std::move(kept));
}

Polynomial mul_truncated(const Polynomial& a, const Polynomial& b, int degree) {
  std::vector<Term> terms;
  for (const auto& s : a.terms()) {
    const int ds = s.monomial.degree();
    if (ds > degree) continue;
    for (const auto& t : b.terms())
      if (ds + t.monomial.degree() <= degree) terms.push_back({s.monomial * t.monomial, s.coeff * t.coeff});
  }
  return Polynomial::from_terms(a.vars(), a.order(), std::move(terms));
}

// ---------------------------------------------------------------- parser

namespace {

class Parser {
 public:
  Parser(std::string_view text, VarSetPtr vars, MonomialOrder order)
      : text_(text), vars_(std::move(vars)), order_(std::move(order)) {}

  Polynomial parse() {
    Polynomial p = expr();
    skip_ws();
    if (pos_ != text_.size()) throw ParseError(std::string("unexpected '") + text_[pos_] + "'", pos_);
    return p;
  }

 private:
  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool peek(char c) {
    skip_ws();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  bool accept(char c) {
    if (!peek(c)) return false;
    ++pos_;
    return true;
  }

  BigInt integer() {
    skip_ws();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) throw ParseError("expected integer", start);
    return BigInt(std::string(text_.substr(start, pos_ - start)));
  }

  Polynomial expr() {
    Polynomial p = term();
    while (true) {
      if (accept('+'))
        p += term();
      else if (accept('-'))
        p -= term();
      else
        return p;
    }
  }

  Polynomial term() {
    Polynomial p = unary();
    while (accept('*')) p = p * unary();
    skip_ws();
    if (pos_ < text_.size()) {
      const char c = text_[pos_];
      if (std::isalnum(static_cast<unsigned char>(c)) || c == '(' || c == '_')
        throw ParseError("implicit multiplication is not allowed; expected operator", pos_);
      if (c == '/') throw ParseError("division is only allowed inside a rational coefficient p/q", pos_);
    }
    return p;
  }

  Polynomial unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return power();
  }

  Polynomial power() {
    Polynomial base = atom();
    if (accept('^')) {
      const std::size_t at = pos_;
      const BigInt e = integer();
      if (e > 1000) throw ParseError("exponent too large", at);
      return pow(base, e.convert_to<int>());
    }
    return base;
  }

  Polynomial atom() {
    skip_ws();
    if (pos_ >= text_.size()) throw ParseError("unexpected end of input", pos_);
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Polynomial p = expr();
      if (!accept(')')) throw ParseError("expected ')'", pos_);
      return p;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const BigInt num = integer();
      Rational value(num);
      if (peek('/')) {
        ++pos_;
        const std::size_t at = pos_;
        const BigInt den = integer();
        if (den == 0) throw ParseError("zero denominator", at);
        value = Rational(num, den);
      }
      return Polynomial::constant(vars_, value).with_order(order_);
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
        ++pos_;
      const std::string name(text_.substr(start, pos_ - start));
      auto idx = vars_->index_of(name);
      if (!idx) throw ParseError("unknown variable '" + name + "'", start);
      return Polynomial::variable(vars_, *idx).with_order(order_);
    }
    throw ParseError(std::string("unexpected '") + c + "'", pos_);
  }

  std::string_view text_;
  VarSetPtr vars_;
  MonomialOrder order_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(std::string_view text, VarSetPtr vars, const MonomialOrder& order) {
  return Parser(text, std::move(vars), order).parse();
}

Polynomial parse_polynomial(std::string_view text, VarSetPtr vars) {
  const auto order = MonomialOrder::natural(OrderKind::DegRevLex, vars->size());
  return parse_polynomial(text, std::move(vars), order);
}

std::vector<Polynomial> parse_polynomial_list(std::string_view text, VarSetPtr vars) {
  std::vector<Polynomial> out;
  int depth = 0;
  std::size_t start = 0;
  auto flush = [&](std::size_t end) {
    const std::string piece = trim(text.substr(start, end - start));
    if (!piece.empty()) {
      try {
        out.push_back(parse_polynomial(piece, vars));
      } catch (const ParseError& e) {
        // Re-anchor the position to the whole list.
        const std::size_t lead = text.substr(start, end - start).find_first_not_of(" \t\r\n");
        throw ParseError(std::string(e.what()).substr(0, std::string(e.what()).rfind(" at position")),
                         start + lead + e.position());
      }
    }
    start = end + 1;
  };
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (depth == 0 && (c == ',' || c == ';' || c == '\n')) flush(i);
  }
  flush(text.size());
  return out;
}

}  // namespace artinlab
