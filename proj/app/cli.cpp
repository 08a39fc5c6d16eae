#include "cli.hpp"

#include <CLI11.hpp>
#include <sstream>

#include "hopflab/cocycle.hpp"
#include "hopflab/errors.hpp"
#include "hopflab/golden.hpp"
#include "hopflab/hochschild.hpp"
#include "hopflab/purity.hpp"
#include "hopflab/workspace.hpp"
#include "output.hpp"

namespace hopflab::cli {

namespace {

using nlohmann::json;

// Thrown by commands whose verification failed; carries the first counterexample.
struct VerificationFailure {
  std::string what;
};

struct Options {
  std::string instance = "a2";
  std::string format = "md";
  std::string q12;
  std::string lambda = "sym";
  std::string eta = "sym";
  bool invariant = false;
};

std::optional<int> sign_of(const std::string& s) {
  if (s.empty()) return std::nullopt;
  if (s == "1" || s == "+1") return 1;
  if (s == "-1") return -1;
  throw HopflabError(ErrorKind::Input, "--q12 must be +1 or -1, got " + s);
}

// "sym" or a comma-separated list of rationals.
std::optional<std::vector<Rational>> parse_values(const std::string& s) {
  if (s == "sym") return std::nullopt;
  std::vector<Rational> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(parse_rational(item));
  return out;
}

std::string element_text(const Algebra& a, const Element& u) {
  if (u.empty()) return "0";
  std::string out;
  for (const auto& [i, c] : u) {
    std::string coef = c.str();
    if (c.terms().size() > 1) coef = "(" + coef + ")";
    const std::string name = a.basis_names[i];
    std::string term = name == "1" ? coef : coef == "1" ? name : coef == "-1" ? "-" + name : coef + "*" + name;
    if (!out.empty()) out += term[0] == '-' ? " - " + term.substr(1) : " + " + term;
    else out = term;
  }
  return out;
}

json string_table(const std::vector<std::vector<Scalar>>& m) {
  json t = json::array();
  for (const auto& row : m) {
    json r = json::array();
    for (const auto& c : row) r.push_back(c.str());
    t.push_back(r);
  }
  return t;
}

json header(const Workspace& w, const std::string& command) {
  return {{"command", command}, {"instance", w.inst.name}, {"q12", w.inst.sign}};
}

void require_cleft(const Workspace& w) {
  if (!w.has_cleft()) throw HopflabError(ErrorKind::Input, w.inst.name + " has no cleft block");
}

bool is_a2_shaped(const Workspace& w) {
  const auto& n = w.b->basis_names;
  return w.b->theta() == 2 && std::find(n.begin(), n.end(), "x12x1") != n.end() &&
         std::find(n.begin(), n.end(), "x2x12") != n.end();
}

Functional numeric_or_symbolic(const Workspace& w, const std::string& lambda) {
  const auto values = parse_values(lambda);
  return values ? w.sigma.substitute(w.binding(*values)) : w.sigma;
}

void add_check(json& checks, bool& all, const std::string& name, const CheckResult& r) {
  checks.push_back({{"name", name}, {"ok", r.ok}, {"detail", r.detail}});
  all = all && r.ok;
}

std::string pair_name(const Algebra& b, const FunctionalDiff& d) {
  if (d.first.empty()) return "";
  std::string s = "(";
  for (std::size_t i = 0; i < d.first.size(); ++i) s += (i ? ", " : "") + b.basis_names[d.first[i]];
  return s + "): " + d.lhs.str() + " vs " + d.rhs.str();
}

// ---- subcommands ----

json cmd_check(const Workspace& w) {
  json checks = json::array();
  bool all = true;
  const auto& b = *w.b;
  add_check(checks, all, "associativity", check_associativity(b));
  add_check(checks, all, "coassociativity", check_coassociativity(b));
  add_check(checks, all, "counit", check_counit(b));
  add_check(checks, all, "delta multiplicative", check_delta_multiplicative(b));
  add_check(checks, all, "grading", check_grading(b));
  add_check(checks, all, "group-likes act by automorphisms", check_yd_automorphisms(b));
  if (w.has_cleft()) {
    const auto& c = *w.cleft;
    add_check(checks, all, "cleft associativity", check_associativity(c.e));
    add_check(checks, all, "coaction", check_coaction(c));
    add_check(checks, all, "section colinear", check_colinear(w.gamma, c));
    add_check(checks, all, "section H-linear", check_h_linear(w.gamma, c));
    add_check(checks, all, "gamma * gamma^-1", check_unit_counit(convolve_maps(w.gamma, w.gamma_inv, c), c));
    add_check(checks, all, "gamma^-1 * gamma", check_unit_counit(convolve_maps(w.gamma_inv, w.gamma, c), c));
    const auto cocycle = is_hopf_cocycle(w.sigma, w.t);
    add_check(checks, all, "cocycle identity", {cocycle.ok && cocycle.normalized, cocycle.ok ? "" : "fails"});
    const auto inv = convolution_inverse(w.sigma, w.t);
    const auto unit = Functional::counit(2, w.t.n);
    add_check(checks, all, "sigma inverse two-sided",
              {convolve(w.sigma, inv, w.t) == unit && convolve(inv, w.sigma, w.t) == unit, ""});
    const auto rebuilt = extend_from_first_row(first_row(w.sigma, b), b);
    const auto d = compare(rebuilt, w.sigma);
    add_check(checks, all, "first row determines sigma", {d.equal, pair_name(b, d)});
  }
  json r = header(w, "check");
  r["checks"] = checks;
  r["ok"] = all;
  if (!all)
    for (const auto& c : checks)
      if (!c["ok"].get<bool>()) throw VerificationFailure{c["name"].get<std::string>() + ": " + c["detail"].get<std::string>()};
  return r;
}

json cmd_section(const Workspace& w) {
  require_cleft(w);
  json r = header(w, "section");
  r["basis"] = w.b->basis_names;
  r["columns"] = {"gamma", "gamma_inv"};
  json t = json::array();
  for (std::size_t i = 0; i < w.b->dim(); ++i)
    t.push_back({element_text(w.cleft->e, w.gamma.image[i]), element_text(w.cleft->e, w.gamma_inv.image[i])});
  r["table"] = t;
  const bool colinear = check_colinear(w.gamma, *w.cleft).ok, linear = check_h_linear(w.gamma, *w.cleft).ok;
  r["colinear"] = colinear;
  r["h_linear"] = linear;
  if (!colinear || !linear) throw VerificationFailure{"section is not colinear and H-linear"};
  return r;
}

json cmd_cocycle_table(const Workspace& w, const Options& o) {
  require_cleft(w);
  json r = header(w, "cocycle-table");
  r["lambda"] = o.lambda;
  r["basis"] = w.b->basis_names;
  r["table"] = string_table(functional_matrix(numeric_or_symbolic(w, o.lambda)));
  return r;
}

json cmd_hochschild(const Workspace& w, const Options& o) {
  const auto h = hochschild_data(w.t);
  const auto z = solve_Z2(h);
  json r = header(w, "hochschild");
  r["dim_Z2"] = z.dim_z();
  r["dim_B2"] = z.dim_b();
  r["dim_H2"] = z.dim_h();
  if (!o.invariant) return r;
  if (!w.group) throw HopflabError(ErrorKind::Input, w.inst.name + " declares no realization group");
  const auto inv = invariant_subspace(z, h, *w.b, *w.group);
  r["dim_Z2_invariant"] = inv.dim_z();
  r["dim_B2_invariant"] = inv.dim_b();
  r["dim_H2_invariant"] = inv.dim_h();
  bool ok = true;
  for (const auto& c : z.cocycles) {
    const auto p = stefan_project(c, *w.b, *w.group);
    ok = ok && is_invariant(p, *w.b, *w.group) && stefan_project(p, *w.b, *w.group) == p;
  }
  r["projection_idempotent"] = ok;
  if (!ok) throw VerificationFailure{"averaging projection is not an idempotent onto invariants"};
  if (is_a2_shaped(w)) {
    const std::vector<Functional> named{xi0(w.t.n), xi(*w.b, 0, 0), xi(*w.b, 1, 1), xi121(*w.b), xi212(*w.b)};
    bool basis = independent_subset(named).size() == named.size() && named.size() == inv.dim_z();
    for (const auto& c : inv.cocycles) basis = basis && coordinates(c, named).has_value();
    r["named_basis"] = "xi0, xi^1_1, xi^2_2, xi121, xi212";
    r["change_of_basis"] = basis;
    const auto cob = cobordism_witness(*w.b, w.t);
    r["xi121_minus_xi212_coboundary"] = cob.is_coboundary && cob.matches_product;
    if (!basis) throw VerificationFailure{"invariant cocycles are not spanned by the named cocycles"};
    if (!cob.is_coboundary) throw VerificationFailure{"xi121 - xi212 is not d(-f)"};
  }
  if (w.b->dim() * w.group->order() <= 32) {
    const auto s = stefan_invariance_iso_check(*w.b, *w.group);
    r["dim_H2_smash"] = s.dim_h2_a;
    r["invariance_iso"] = s.equal();
    if (!s.equal()) throw VerificationFailure{"dim H^2(A) differs from dim H^2(B)^Gamma"};
  }
  return r;
}

json cmd_exp(const Workspace& w, const Options& o) {
  const auto values = parse_values(o.eta);
  json r = header(w, "exp");
  r["eta"] = o.eta;
  const bool a2 = is_a2_shaped(w);
  const std::size_t count = a2 ? 5 : 1 + w.b->theta();
  SpacePtr space;
  std::vector<Scalar> coeffs;
  if (values) {
    if (values->size() != count)
      throw HopflabError(ErrorKind::Input, "--eta needs " + std::to_string(count) + " values");
    for (const auto& v : *values) coeffs.emplace_back(v);
  } else {
    std::vector<std::string> names{"e0"};
    if (a2)
      names.insert(names.end(), {"e1", "e2", "e121", "e212"});
    else
      for (std::size_t i = 0; i < w.b->theta(); ++i) names.push_back("e" + std::to_string(i + 1));
    space = make_space(names);
    for (const auto& n : names) coeffs.push_back(Scalar::param(space, n));
  }
  Functional eta;
  EtaCoeffs ec;
  if (a2) {
    ec = {coeffs[0], coeffs[1], coeffs[2], coeffs[3], coeffs[4]};
    eta = eta_from_coeffs(*w.b, ec);
  } else {
    eta = xi0(w.t.n).scaled(coeffs[0]);
    for (std::size_t i = 0; i < w.b->theta(); ++i) eta = eta + xi(*w.b, i, i).scaled(coeffs[i + 1]);
  }
  const auto ex = exponential(eta, w.t);
  const auto comm = check_commutation(eta, w.t);
  r["conm1"] = comm.conm1;
  r["conm2"] = comm.conm2;
  r["basis"] = w.b->basis_names;
  r["table"] = string_table(functional_matrix(ex.value));
  std::vector<Scalar> defects;
  for (const auto& d : cocycle_defects(ex.value, w.t))
    if (!d.is_zero()) defects.push_back(d);
  if (values) {
    r["hopf_cocycle"] = defects.empty();
    if (a2) {
      const auto m = membership_C_Cbar(ec);
      r["in_C"] = m.in_c;
      r["in_Cbar"] = m.in_cbar;
      if (m.in_c != (comm.conm1 && comm.conm2)) throw VerificationFailure{"commutation disagrees with membership in C"};
      if (m.in_cbar != defects.empty()) throw VerificationFailure{"cocycle test disagrees with membership in Cbar"};
    }
  } else {
    r["hopf_cocycle"] = defects.empty() ? "always" : "on the zero set of " + std::to_string(defects.size()) + " polynomials";
    if (a2) {
      auto degree = [](const std::vector<Scalar>& a, const std::vector<Scalar>& b) {
        unsigned d = 0;
        for (const auto* v : {&a, &b})
          for (const auto& x : *v) d = std::max(d, x.total_degree());
        return d;
      };
      const auto c = c_generators(ec), cbar = cbar_generators(ec);
      const bool eq_c = same_ideal(comm.defects, c, degree(comm.defects, c));
      const bool eq_cbar = same_ideal(defects, cbar, degree(defects, cbar));
      r["commutation_ideal_is_C"] = eq_c;
      r["cocycle_ideal_is_Cbar"] = eq_cbar;
      if (!eq_c || !eq_cbar) throw VerificationFailure{"ideal certificates not found"};
    }
  }
  return r;
}

std::string eta_text(const EtaCoeffs& e) {
  return "(" + e.e1.str() + ", " + e.e2.str() + ", " + e.e121.str() + ", " + e.e212.str() + ")";
}

json cmd_purity(const Workspace& w, const Options& o) {
  require_cleft(w);
  if (!is_a2_shaped(w)) throw HopflabError(ErrorKind::Unsupported, "purity is decided for the A2 family only");
  const auto values = parse_values(o.lambda);
  if (!values || values->size() != 3) throw HopflabError(ErrorKind::Input, "purity needs --lambda a,b,c");
  const std::array<Rational, 3> l{(*values)[0], (*values)[1], (*values)[2]};
  const auto v = purity_decide(*w.b, w.t, w.sigma.substitute(w.binding(*values)), l);
  json r = header(w, "purity");
  r["lambda"] = o.lambda;
  switch (v.tag) {
    case PurityVerdict::Tag::Pure: r["verdict"] = "PURE (violates " + v.violated + ")"; break;
    case PurityVerdict::Tag::Exponential:
      r["verdict"] = "EXPONENTIAL (eta = " + eta_text(v.eta) + ", alpha(x2x12x1) = " +
                     v.alpha.at(w.b->index_of("x2x12x1")).str() + ")";
      break;
    case PurityVerdict::Tag::Trivial: r["verdict"] = "TRIVIAL"; break;
  }
  r["tag"] = tag_name(v.tag);
  r["fast_path_pure"] = v.fast_pure;
  r["solve"] = v.solve.describe();
  r["alpha_top_of_t"] = v.alpha_top.str();
  r["paths_agree"] = v.paths_agree;
  if (v.tag != PurityVerdict::Tag::Pure) r["witness_verified"] = v.witness_verified;
  if (!v.paths_agree) throw VerificationFailure{"fast path and polynomial solve disagree"};
  if (v.tag != PurityVerdict::Tag::Pure && !v.witness_verified) throw VerificationFailure{"witness does not verify"};
  return r;
}

json cmd_deform(const Workspace& w, const Options& o) {
  require_cleft(w);
  if (!w.group) throw HopflabError(ErrorKind::Input, w.inst.name + " declares no realization group");
  const SmashAlgebra a(*w.b, *w.group);
  const auto checks = check_deformed_relations(a, *w.b, numeric_or_symbolic(w, o.lambda));
  json r = header(w, "deform");
  json list = json::array();
  std::optional<std::string> failure;
  for (const auto& c : checks) {
    list.push_back({{"relation", c.name}, {"ok", c.ok}, {"value", c.lhs}});
    if (!c.ok && !failure) failure = c.name + ": got " + c.lhs + ", expected " + c.rhs;
  }
  r["relations"] = list;
  if (failure) throw VerificationFailure{*failure};
  return r;
}

json cmd_golden(const InstanceSpec& spec, const Options& o) {
  json r{{"command", "golden"}, {"instance", spec.name}};
  json runs = json::array();
  std::optional<std::string> failure;
  const auto one = sign_of(o.q12);
  for (int s : one ? std::vector<int>{*one} : spec.sign ? std::vector<int>{1, -1} : std::vector<int>{1}) {
    const auto w = load_workspace(spec, s);
    require_cleft(w);
    auto record = [&](const std::string& name, const std::vector<std::vector<Scalar>>& actual, const SpacePtr& space) {
      const auto& g = golden_table(spec.name, name);
      const auto d = compare_matrix(golden_matrix(g, space, s), actual);
      runs.push_back({{"q12", s}, {"table", name}, {"ok", d.equal}});
      if (!d.equal && !failure)
        failure = name + " (q12=" + std::to_string(s) + ") at (" + g.rows[d.row] + ", " + g.cols[d.col] +
                  "): expected " + d.expected.str() + ", got " + d.actual.str();
    };
    record("sigma", functional_matrix(w.sigma), w.inst.space);
    record("gamma", map_matrix(w.gamma, w.cleft->dim()), w.inst.space);
    record("gamma_inv", map_matrix(w.gamma_inv, w.cleft->dim()), w.inst.space);
    if (is_a2_shaped(w)) {
      const auto space = make_space({"eta1", "eta121"});
      const Scalar e1 = Scalar::param(space, "eta1"), e121 = Scalar::param(space, "eta121");
      const auto ex = exponential(eta_from_coeffs(*w.b, {Scalar(), e1, Scalar(), e121, -e121}), w.t).value;
      record("exp_cobordant", functional_matrix(ex), space);
    }
  }
  r["runs"] = runs;
  if (failure) throw VerificationFailure{*failure};
  return r;
}

}  // namespace

int run(int argc, char** argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"hopflab: Hopf cocycles of small braided Hopf algebras, exactly"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_option("--instance", o.instance, "built-in instance (a2, taft) or path to an instance file");
  app.add_option("--format", o.format, "output format")->check(CLI::IsMember({"json", "csv", "md"}));
  app.add_option("--q12", o.q12, "sign of q12 (+1 or -1); defaults to the instance's declared sign");

  auto* check = app.add_subcommand("check", "verify all structural invariants");
  auto* section = app.add_subcommand("section", "section gamma and its convolution inverse");
  auto* table = app.add_subcommand("cocycle-table", "cocycle sigma from the section");
  table->add_option("--lambda", o.lambda, "sym or comma-separated rationals");
  auto* hoch = app.add_subcommand("hochschild", "Hochschild 2-cocycles with trivial coefficients");
  hoch->add_flag("--invariant", o.invariant, "restrict to group invariants");
  auto* exp = app.add_subcommand("exp", "exponential of an invariant Hochschild cocycle");
  exp->add_option("--eta", o.eta, "sym or comma-separated coefficients (e0,e1,e2,e121,e212 for a2)");
  auto* purity = app.add_subcommand("purity", "is sigma_lambda cohomologous to an exponential?");
  purity->add_option("--lambda", o.lambda, "comma-separated rationals")->required();
  auto* deform = app.add_subcommand("deform", "relations of the deformed bosonization");
  deform->add_option("--lambda", o.lambda, "sym or comma-separated rationals");
  auto* golden = app.add_subcommand("golden", "compare computed tables with the shipped reference tables");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    const Format format = parse_format(o.format);
    const InstanceSpec spec = resolve_instance(o.instance);
    json report;
    if (golden->parsed()) {
      report = cmd_golden(spec, o);
    } else {
      const Workspace w = load_workspace(spec, sign_of(o.q12));
      if (check->parsed()) report = cmd_check(w);
      if (section->parsed()) report = cmd_section(w);
      if (table->parsed()) report = cmd_cocycle_table(w, o);
      if (hoch->parsed()) report = cmd_hochschild(w, o);
      if (exp->parsed()) report = cmd_exp(w, o);
      if (purity->parsed()) report = cmd_purity(w, o);
      if (deform->parsed()) report = cmd_deform(w, o);
    }
    emit(out, report, format);
    return 0;
  } catch (const VerificationFailure& f) {
    err << "FAIL: " << f.what << "\n";
    return 1;
  } catch (const HopflabError& e) {
    err << "error: " << e.what() << "\n";
    switch (e.kind()) {
      case ErrorKind::Input:
      case ErrorKind::Syntax:
      case ErrorKind::Semantic:
      case ErrorKind::SpaceMismatch:
      case ErrorKind::NotConstant:
      case ErrorKind::Unsupported: return 2;
      default: return 1;
    }
  }
}

}  // namespace hopflab::cli
