#include "artinlab/report.hpp"

#include <sstream>

#include <json.hpp>

#include "artinlab/liealg.hpp"
#include "artinlab/singular.hpp"

namespace artinlab {

using json = nlohmann::ordered_json;

std::string_view to_string(Mode m) {
  switch (m) {
    case Mode::Analyze: return "analyze";
    case Mode::Moduli: return "moduli";
    case Mode::Groebner: return "groebner";
    case Mode::Derivations: return "derivations";
    case Mode::Split: return "split";
  }
  return "analyze";
}

Mode parse_mode(std::string_view text) {
  for (auto m : {Mode::Analyze, Mode::Moduli, Mode::Groebner, Mode::Derivations, Mode::Split})
    if (to_string(m) == text) return m;
  fail(ErrorKind::Parse, "unknown mode '" + std::string(text) + "'");
}

Format parse_format(std::string_view text) {
  if (text == "text") return Format::Text;
  if (text == "structured" || text == "json") return Format::Structured;
  fail(ErrorKind::Parse, "unknown format '" + std::string(text) + "'");
}

int exit_code(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Parse: return 2;
    case ErrorKind::InfiniteDimensional: return 3;
    case ErrorKind::IrrationalPoints: return 4;
    case ErrorKind::NonIsolated: return 5;
    case ErrorKind::InvariantViolation: return 6;
    case ErrorKind::InvalidArgument: return 7;
    case ErrorKind::Cancelled: return 8;
  }
  return 6;
}

std::string_view error_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Parse: return "parse";
    case ErrorKind::InfiniteDimensional: return "infinite-dimensional";
    case ErrorKind::IrrationalPoints: return "irrational-points";
    case ErrorKind::NonIsolated: return "non-isolated";
    case ErrorKind::InvariantViolation: return "invariant-violation";
    case ErrorKind::InvalidArgument: return "invalid-argument";
    case ErrorKind::Cancelled: return "cancelled";
  }
  return "invariant-violation";
}

namespace {

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

}  // namespace

JobSpec parse_job(std::string_view text) {
  JobSpec job;
  std::size_t pos = 0;
  bool have_vars = false;
  std::string body;
  while (pos < text.size()) {
    const std::size_t eol = std::min(text.find('\n', pos), text.size());
    const std::string line = trim(text.substr(pos, eol - pos));
    const std::size_t start = pos;
    pos = eol + 1;
    if (line.empty() || line[0] == '#') continue;
    const auto sp = line.find_first_of(" \t");
    const std::string key = line.substr(0, sp);
    const std::string value = sp == std::string::npos ? std::string() : trim(line.substr(sp));
    if (key == "vars") {
      const auto vs = parse_varset(value);
      job.variables.assign(vs->names().begin(), vs->names().end());
      have_vars = true;
    } else if (key == "order") {
      job.order = value;
    } else if (key == "mode") {
      job.mode = parse_mode(value);
    } else if (key == "cap") {
      try {
        job.truncation_cap = std::stoi(value);
      } catch (const std::exception&) {
        throw ParseError("cap expects an integer", start);
      }
    } else {
      body = std::string(text.substr(start));
      break;
    }
  }
  if (!have_vars) throw ParseError("job declares no variables (expected 'vars ...')", 0);
  std::string joined;
  std::istringstream in(body);
  for (std::string l; std::getline(in, l);) {
    const std::string t = trim(l);
    if (t.empty() || t[0] == '#') continue;
    if (!joined.empty()) joined += (joined.back() == ',' || joined.back() == ';') ? " " : ", ";
    joined += t;
  }
  if (joined.empty()) throw ParseError("job has no polynomial input", text.size());
  job.input = joined;
  return job;
}

namespace {

std::vector<std::string> strings_of(const std::vector<Polynomial>& ps) {
  std::vector<std::string> out;
  for (const auto& p : ps) out.push_back(p.to_string());
  return out;
}

ComponentReport component_report(const std::vector<Rational>& point, const ArtinAlgebra& s, const GroebnerBasis& gb) {
  ComponentReport c;
  for (const auto& x : point) c.point.push_back(to_string(x));
  c.dim = s.dim();
  c.nilpotency_exponent = s.nilpotency_exponent();
  for (const auto& p : s.powers()) c.filtration_dims.push_back(p.dim());
  c.embedding_dim = s.embedding_dim();

  const auto crit = local_criteria(s);
  c.l = crit.schulze.l;
  c.min_gens = crit.schulze.min_gens;
  c.schulze = crit.trivial ? Verdict::Solvable : crit.schulze.verdict;
  c.extremality = crit.schulze.extremality;
  c.narrow_gr = crit.narrow_gr;
  c.narrow_excess = crit.narrow_excess;

  const auto der = compute_derivations(s, gb);
  const auto ser = series(der);
  c.dim_der = der.dimension();
  c.derived_dims = ser.derived_dims;
  c.lower_central_dims = ser.lower_central_dims;
  c.solvable = ser.solvable;
  c.nilpotent = ser.nilpotent;
  c.all_nilpotent = ser.all_nilpotent_operators;

  const auto soc = socle_data(s);
  c.socle_dim = soc.socle.dim();
  c.lsoc_dim = soc.lsoc.dim();
  c.usoc_dim = soc.usoc.dim();
  const auto bound = socle_bound_check(s, der);
  c.socle_bound = bound.bound;
  c.socle_bound_holds = bound.holds;
  c.positive = bound.positive;
  c.unipotent_holds = true;
  c.unipotent_derivations_ok = true;
  if (s.dim() > 1) {
    const auto u = unipotent_subgroup_dim(s);
    c.unipotent_dim = u.dim_u;
    c.unipotent_constructed = u.constructed;
    c.unipotent_holds = c.dim_der >= u.dim_u;
    c.unipotent_derivations_ok = u.all_derivations;
  }
  c.verdict = c.solvable ? Verdict::Solvable : Verdict::NonSolvable;
  return c;
}

SplitReport split_report(const SplitResult& s, const VarSet& vars) {
  SplitReport r;
  r.rank = s.rank;
  r.truncation = s.truncation;
  for (auto i : s.split_vars) r.split_variables.push_back(vars.name(i));
  for (const auto& l : s.lambdas) r.lambdas.push_back(to_string(l));
  for (auto i : s.residual_vars) r.residual_variables.push_back(vars.name(i));
  r.residual = s.residual.to_string();
  r.change = strings_of(s.change);
  return r;
}

SingularityReport singularity_base(const Polynomial& p, const ModuliAlgebra& m) {
  SingularityReport r;
  r.p = p.to_string();
  r.tjurina = m.tjurina;
  r.milnor = m.milnor;
  r.quasi_homogeneous = m.weights.has_value();
  if (m.weights) {
    r.weights = m.weights->weights;
    r.weighted_degree = m.weights->degree;
  }
  r.p_in_jacobian = m.p_in_jacobian;
  return r;
}

Polynomial single_polynomial(const std::string& text, const VarSetPtr& vars) {
  const auto list = parse_polynomial_list(text, vars);
  if (list.size() != 1) throw ParseError("expected a single polynomial p, got " + std::to_string(list.size()), 0);
  return list.front();
}

}  // namespace

Report run(const JobSpec& job, std::stop_token stop) {
  if (job.variables.empty()) throw ParseError("no variables declared", 0);
  require(job.truncation_cap >= 1, "truncation cap must be positive");
  Report r;
  r.job = job;
  const auto vars = make_varset(job.variables);
  const auto order = MonomialOrder::parse(job.order, *vars);

  if (job.mode == Mode::Moduli || job.mode == Mode::Split) {
    const auto p = single_polynomial(job.input, vars);
    if (job.mode == Mode::Split) {
      const auto m = moduli_algebra(p, job.truncation_cap, stop);
      auto sing = singularity_base(p, m);
      const auto s = splitting_normal_form(p, std::max(3, m.algebra.nilpotency_exponent() + 2));
      sing.split = split_report(s, *vars);
      if (!s.residual_reduced) sing.residual_tjurina = 1;
      else sing.residual_tjurina = moduli_algebra(*s.residual_reduced, job.truncation_cap, stop).tjurina;
      r.dim = m.tjurina;
      r.local = true;
      r.singularity = std::move(sing);
      return r;
    }
    const auto y = yau_report(p, job.truncation_cap, stop);
    auto sing = singularity_base(p, y.moduli);
    if (y.split) sing.split = split_report(*y.split, *vars);
    sing.residual_tjurina = y.residual_tjurina;
    sing.jacobian_min_gens = y.jacobian_min_gens;
    sing.yau_solvable = y.solvable;
    r.groebner_basis = strings_of(y.moduli.component.basis.elements());
    for (const auto& m : standard_monomials(y.moduli.component.basis))
      r.standard_monomials.push_back(Polynomial::monomial(vars, m).to_string());
    r.dim = y.moduli.tjurina;
    r.local = true;
    r.components.push_back(
        component_report(std::vector<Rational>(vars->size(), Rational(0)), y.moduli.algebra, y.moduli.component.basis));
    r.dim_der = r.components.front().dim_der;
    r.verdict = r.components.front().verdict;
    r.singularity = std::move(sing);
    return r;
  }

  const Ideal ideal(vars, parse_polynomial_list(job.input, vars));
  const auto gb = buchberger(ideal, order);
  r.groebner_basis = strings_of(gb.elements());
  const bool finite = !gb.is_unit() && is_finite_dimensional(gb);
  if (job.mode == Mode::Groebner) {
    r.dim = gb.is_unit() ? 0 : finite ? static_cast<Index>(standard_monomials(gb).size()) : -1;
    if (finite)
      for (const auto& m : standard_monomials(gb)) r.standard_monomials.push_back(Polynomial::monomial(vars, m).to_string());
    return r;
  }
  if (!gb.is_unit() && !finite) fail(ErrorKind::InfiniteDimensional, "quotient algebra is infinite-dimensional");
  if (!gb.is_unit())
    for (const auto& m : standard_monomials(gb)) r.standard_monomials.push_back(Polynomial::monomial(vars, m).to_string());
  r.dim = static_cast<Index>(r.standard_monomials.size());

  if (job.mode == Mode::Derivations) {
    const auto s = ArtinAlgebra::from_groebner(gb);
    const auto der = compute_derivations(s, gb);
    r.local = s.is_local();
    r.dim_der = der.dimension();
    const auto basis = standard_monomials(gb);
    for (const auto& op : der.basis_operators()) {
      std::vector<std::string> images;
      for (const auto& g : s.generator_images()) {
        const Vector v = op * g;
        Polynomial img(vars, order);
        for (Index k = 0; k < v.size(); ++k)
          if (v(k) != 0) img += Polynomial::monomial(vars, basis[static_cast<std::size_t>(k)], v(k));
        images.push_back(img.to_string());
      }
      r.derivations.push_back(std::move(images));
    }
    r.verdict = series(der).solvable ? Verdict::Solvable : Verdict::NonSolvable;
    return r;
  }

  // Analyze.
  const auto factors = decompose_local(ideal, job.truncation_cap, stop);
  r.local = factors.size() == 1;
  const auto g = global_schulze(ideal, factors);
  r.global_l = g.l == kInfiniteOrder ? 0 : g.l;
  r.global_inequality = g.global_inequality;
  r.global_schulze = g.verdict;
  r.complete_intersection = complete_intersection_check(ideal);
  bool all = true;
  for (const auto& f : factors) {
    r.components.push_back(component_report(f.point, f.algebra, f.component.basis));
    all = all && r.components.back().solvable;
  }
  if (r.local) {
    r.dim_der = r.components.front().dim_der;
  } else {
    const auto s = ArtinAlgebra::from_groebner(gb);
    r.dim_der = compute_derivations(s, gb).dimension();
  }
  r.verdict = all ? Verdict::Solvable : Verdict::NonSolvable;
  return r;
}

JobSpec parse_fixture_job(std::string_view text) {
  try {
    const auto doc = json::parse(text);
    const auto& j = doc.at("job");
    JobSpec job;
    j.at("variables").get_to(job.variables);
    job.mode = parse_mode(j.value("mode", std::string("analyze")));
    job.order = j.value("order", job.order);
    job.truncation_cap = j.value("cap", job.truncation_cap);
    j.at("input").get_to(job.input);
    return job;
  } catch (const json::exception& e) {
    fail(ErrorKind::Parse, std::string("malformed fixture: ") + e.what());
  }
}

// Structured form.

namespace {

template <typename T>
json optional_json(const std::optional<T>& v) {
  return v ? json(*v) : json(nullptr);
}

template <typename T>
std::optional<T> optional_from(const json& j) {
  if (j.is_null()) return std::nullopt;
  return j.get<T>();
}

json verdict_json(const std::optional<Verdict>& v) { return v ? json(std::string(to_string(*v))) : json(nullptr); }

std::optional<Verdict> verdict_from(const json& j) {
  if (j.is_null()) return std::nullopt;
  return parse_verdict(j.get<std::string>());
}

json to_json(const ComponentReport& c) {
  return json{{"point", c.point},
              {"dim", c.dim},
              {"nilpotency_exponent", c.nilpotency_exponent},
              {"filtration_dims", c.filtration_dims},
              {"embedding_dim", c.embedding_dim},
              {"l", c.l},
              {"min_gens", c.min_gens},
              {"schulze", to_string(c.schulze)},
              {"extremality", to_string(c.extremality)},
              {"narrow_gr", c.narrow_gr},
              {"narrow_excess", c.narrow_excess},
              {"dim_der", c.dim_der},
              {"derived_dims", c.derived_dims},
              {"lower_central_dims", c.lower_central_dims},
              {"solvable", c.solvable},
              {"nilpotent", c.nilpotent},
              {"all_nilpotent", c.all_nilpotent},
              {"socle_dim", c.socle_dim},
              {"lsoc_dim", c.lsoc_dim},
              {"usoc_dim", c.usoc_dim},
              {"socle_bound", c.socle_bound},
              {"socle_bound_holds", c.socle_bound_holds},
              {"unipotent_dim", c.unipotent_dim},
              {"unipotent_constructed", c.unipotent_constructed},
              {"unipotent_holds", c.unipotent_holds},
              {"unipotent_derivations_ok", c.unipotent_derivations_ok},
              {"positive", c.positive},
              {"verdict", to_string(c.verdict)}};
}

ComponentReport component_from(const json& j) {
  ComponentReport c;
  j.at("point").get_to(c.point);
  j.at("dim").get_to(c.dim);
  j.at("nilpotency_exponent").get_to(c.nilpotency_exponent);
  j.at("filtration_dims").get_to(c.filtration_dims);
  j.at("embedding_dim").get_to(c.embedding_dim);
  j.at("l").get_to(c.l);
  j.at("min_gens").get_to(c.min_gens);
  c.schulze = parse_verdict(j.at("schulze").get<std::string>());
  c.extremality = parse_extremality(j.at("extremality").get<std::string>());
  j.at("narrow_gr").get_to(c.narrow_gr);
  j.at("narrow_excess").get_to(c.narrow_excess);
  j.at("dim_der").get_to(c.dim_der);
  j.at("derived_dims").get_to(c.derived_dims);
  j.at("lower_central_dims").get_to(c.lower_central_dims);
  j.at("solvable").get_to(c.solvable);
  j.at("nilpotent").get_to(c.nilpotent);
  j.at("all_nilpotent").get_to(c.all_nilpotent);
  j.at("socle_dim").get_to(c.socle_dim);
  j.at("lsoc_dim").get_to(c.lsoc_dim);
  j.at("usoc_dim").get_to(c.usoc_dim);
  j.at("socle_bound").get_to(c.socle_bound);
  j.at("socle_bound_holds").get_to(c.socle_bound_holds);
  j.at("unipotent_dim").get_to(c.unipotent_dim);
  j.at("unipotent_constructed").get_to(c.unipotent_constructed);
  j.at("unipotent_holds").get_to(c.unipotent_holds);
  j.at("unipotent_derivations_ok").get_to(c.unipotent_derivations_ok);
  j.at("positive").get_to(c.positive);
  c.verdict = parse_verdict(j.at("verdict").get<std::string>());
  return c;
}

json to_json(const SplitReport& s) {
  return json{{"rank", s.rank},
              {"truncation", s.truncation},
              {"split_variables", s.split_variables},
              {"lambdas", s.lambdas},
              {"residual_variables", s.residual_variables},
              {"residual", s.residual},
              {"change", s.change}};
}

SplitReport split_from(const json& j) {
  SplitReport s;
  j.at("rank").get_to(s.rank);
  j.at("truncation").get_to(s.truncation);
  j.at("split_variables").get_to(s.split_variables);
  j.at("lambdas").get_to(s.lambdas);
  j.at("residual_variables").get_to(s.residual_variables);
  j.at("residual").get_to(s.residual);
  j.at("change").get_to(s.change);
  return s;
}

json to_json(const SingularityReport& s) {
  return json{{"p", s.p},
              {"tjurina", s.tjurina},
              {"milnor", s.milnor},
              {"quasi_homogeneous", s.quasi_homogeneous},
              {"weights", s.weights},
              {"weighted_degree", s.weighted_degree},
              {"p_in_jacobian", s.p_in_jacobian},
              {"jacobian_min_gens", s.jacobian_min_gens},
              {"split", s.split ? to_json(*s.split) : json(nullptr)},
              {"residual_tjurina", optional_json(s.residual_tjurina)},
              {"yau_solvable", optional_json(s.yau_solvable)}};
}

SingularityReport singularity_from(const json& j) {
  SingularityReport s;
  j.at("p").get_to(s.p);
  j.at("tjurina").get_to(s.tjurina);
  j.at("milnor").get_to(s.milnor);
  j.at("quasi_homogeneous").get_to(s.quasi_homogeneous);
  j.at("weights").get_to(s.weights);
  j.at("weighted_degree").get_to(s.weighted_degree);
  j.at("p_in_jacobian").get_to(s.p_in_jacobian);
  j.at("jacobian_min_gens").get_to(s.jacobian_min_gens);
  if (!j.at("split").is_null()) s.split = split_from(j.at("split"));
  s.residual_tjurina = optional_from<Index>(j.at("residual_tjurina"));
  s.yau_solvable = optional_from<bool>(j.at("yau_solvable"));
  return s;
}

json to_json(const Report& r) {
  json components = json::array();
  for (const auto& c : r.components) components.push_back(to_json(c));
  return json{{"schema", r.schema},
              {"input",
               {{"variables", r.job.variables},
                {"mode", to_string(r.job.mode)},
                {"order", r.job.order},
                {"truncation_cap", r.job.truncation_cap},
                {"polynomials", r.job.input}}},
              {"groebner_basis", r.groebner_basis},
              {"standard_monomials", r.standard_monomials},
              {"dim", r.dim},
              {"local", r.local},
              {"global",
               {{"l", optional_json(r.global_l)},
                {"inequality", optional_json(r.global_inequality)},
                {"schulze", verdict_json(r.global_schulze)}}},
              {"complete_intersection", r.complete_intersection},
              {"dim_der", optional_json(r.dim_der)},
              {"derivations", r.derivations},
              {"components", components},
              {"singularity", r.singularity ? to_json(*r.singularity) : json(nullptr)},
              {"verdict", verdict_json(r.verdict)}};
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

template <typename T>
std::string join(const std::vector<T>& xs, const char* sep = ", ") {
  std::ostringstream out;
  for (std::size_t i = 0; i < xs.size(); ++i) out << (i ? sep : "") << xs[i];
  return out.str();
}

std::string to_text(const Report& r) {
  std::ostringstream out;
  out << r.schema << "\n";
  out << "mode: " << to_string(r.job.mode) << "\n";
  out << "variables: " << join(r.job.variables) << "\n";
  out << "order: " << r.job.order << "\n";
  out << "input: " << r.job.input << "\n";
  if (!r.groebner_basis.empty()) out << "groebner basis: " << join(r.groebner_basis) << "\n";
  if (!r.standard_monomials.empty()) out << "standard monomials: " << join(r.standard_monomials) << "\n";
  out << "dim S: " << (r.dim < 0 ? std::string("infinite") : std::to_string(r.dim)) << "\n";
  if (r.job.mode == Mode::Groebner) return out.str();
  out << "local: " << yes_no(r.local) << "\n";
  if (r.global_schulze) {
    out << "global schulze: " << to_string(*r.global_schulze) << " (l = " << *r.global_l
        << ", inequality " << yes_no(*r.global_inequality) << ")\n";
    out << "complete intersection: " << yes_no(r.complete_intersection) << "\n";
  }
  if (r.dim_der) out << "dim Der S: " << *r.dim_der << "\n";
  for (std::size_t i = 0; i < r.derivations.size(); ++i)
    out << "  D" << i + 1 << ": " << join(r.derivations[i], " | ") << "\n";
  for (std::size_t i = 0; i < r.components.size(); ++i) {
    const auto& c = r.components[i];
    out << "component " << i + 1 << " at (" << join(c.point) << ")\n";
    out << "  dim: " << c.dim << ", nilpotency exponent " << c.nilpotency_exponent << ", filtration "
        << join(c.filtration_dims, " ") << "\n";
    out << "  embedding dim: " << c.embedding_dim << ", l = " << c.l << ", min gens = " << c.min_gens << "\n";
    out << "  schulze: " << to_string(c.schulze) << " (" << to_string(c.extremality) << ")\n";
    out << "  narrow gr: " << yes_no(c.narrow_gr) << "\n";
    out << "  dim Der: " << c.dim_der << ", derived series " << join(c.derived_dims, " ")
        << ", lower central series " << join(c.lower_central_dims, " ") << "\n";
    out << "  solvable: " << yes_no(c.solvable) << ", nilpotent: " << yes_no(c.nilpotent)
        << ", all derivations nilpotent: " << yes_no(c.all_nilpotent) << "\n";
    out << "  socle: " << c.socle_dim << " (lower " << c.lsoc_dim << ", upper " << c.usoc_dim << ")\n";
    out << "  socle bound: " << c.socle_bound << (c.socle_bound_holds ? " holds" : " FAILS") << "\n";
    out << "  unipotent subgroup: " << c.unipotent_dim << " (" << c.unipotent_constructed << " constructed)"
        << (c.unipotent_holds && c.unipotent_derivations_ok ? " holds" : " FAILS") << "\n";
    out << "  verdict: " << to_string(c.verdict) << "\n";
  }
  if (r.singularity) {
    const auto& s = *r.singularity;
    out << "singularity p = " << s.p << "\n";
    out << "  tjurina: " << s.tjurina << ", milnor: " << s.milnor << "\n";
    if (s.quasi_homogeneous)
      out << "  quasi-homogeneous: weights (" << join(s.weights) << "), degree " << s.weighted_degree << "\n";
    else
      out << "  quasi-homogeneous: no\n";
    out << "  p in J(p): " << yes_no(s.p_in_jacobian) << "\n";
    if (s.split) {
      out << "  split: rank " << s.split->rank << ", lambdas " << join(s.split->lambdas) << ", residual "
          << s.split->residual << " in (" << join(s.split->residual_variables) << ")\n";
      out << "  change: " << join(s.split->change) << "\n";
    }
    if (s.residual_tjurina) out << "  residual tjurina: " << *s.residual_tjurina << "\n";
    if (s.yau_solvable) out << "  Der A(p) solvable: " << yes_no(*s.yau_solvable) << "\n";
  }
  if (r.verdict) out << "verdict: " << to_string(*r.verdict) << "\n";
  return out.str();
}

}  // namespace

std::string serialize(const Report& r, Format f) {
  if (f == Format::Text) return to_text(r);
  return to_json(r).dump(2) + "\n";
}

Report parse_structured(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("malformed report: ") + e.what(), e.byte);
  }
  try {
    Report r;
    j.at("schema").get_to(r.schema);
    if (r.schema != kReportSchema) fail(ErrorKind::Parse, "unsupported report schema '" + r.schema + "'");
    const auto& in = j.at("input");
    in.at("variables").get_to(r.job.variables);
    r.job.mode = parse_mode(in.at("mode").get<std::string>());
    in.at("order").get_to(r.job.order);
    in.at("truncation_cap").get_to(r.job.truncation_cap);
    in.at("polynomials").get_to(r.job.input);
    j.at("groebner_basis").get_to(r.groebner_basis);
    j.at("standard_monomials").get_to(r.standard_monomials);
    j.at("dim").get_to(r.dim);
    j.at("local").get_to(r.local);
    const auto& g = j.at("global");
    r.global_l = optional_from<int>(g.at("l"));
    r.global_inequality = optional_from<bool>(g.at("inequality"));
    r.global_schulze = verdict_from(g.at("schulze"));
    j.at("complete_intersection").get_to(r.complete_intersection);
    r.dim_der = optional_from<Index>(j.at("dim_der"));
    j.at("derivations").get_to(r.derivations);
    for (const auto& c : j.at("components")) r.components.push_back(component_from(c));
    if (!j.at("singularity").is_null()) r.singularity = singularity_from(j.at("singularity"));
    r.verdict = verdict_from(j.at("verdict"));
    return r;
  } catch (const json::exception& e) {
    fail(ErrorKind::Parse, std::string("malformed report: ") + e.what());
  }
}

}  // namespace artinlab
