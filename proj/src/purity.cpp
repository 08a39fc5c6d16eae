#include "hopflab/purity.hpp"

#include "hopflab/cocycle.hpp"
#include "hopflab/errors.hpp"

namespace hopflab {

std::string tag_name(PurityVerdict::Tag tag) {
  switch (tag) {
    case PurityVerdict::Tag::Pure: return "Pure";
    case PurityVerdict::Tag::Exponential: return "Exponential";
    case PurityVerdict::Tag::Trivial: return "Trivial";
  }
  return "";
}

EtaCoeffs forced_eta(const std::array<Rational, 3>& lambda, const Rational& q12, const SpacePtr& space_t) {
  const Scalar t = Scalar::param(space_t, "t");
  EtaCoeffs e;
  e.e1 = Scalar(lambda[0]);
  e.e2 = Scalar(lambda[1]);
  e.e121 = t;
  e.e212 = Scalar(lambda[2] + 2 * q12 * lambda[0] * lambda[1]) - t;
  return e;
}

static std::size_t top_index(const BraidedBialgebra& b) {
  std::size_t top = 0;
  for (std::size_t i = 0; i < b.dim(); ++i)
    if (b.total_degree(i) > b.total_degree(top)) top = i;
  return top;
}

static EtaCoeffs at_point(const EtaCoeffs& e, const Rational& t) {
  const std::map<std::string, Rational> p{{"t", t}};
  return {e.e0.substitute(p), e.e1.substitute(p), e.e2.substitute(p), e.e121.substitute(p), e.e212.substitute(p)};
}

PurityVerdict purity_decide(const BraidedBialgebra& b, const Tables& t, const Functional& sigma_lambda,
                            const std::array<Rational, 3>& lambda, Exec exec) {
  for (std::size_t i = 0; i < sigma_lambda.size(); ++i)
    if (!sigma_lambda[i].is_constant()) throw HopflabError(ErrorKind::Input, "purity needs a numeric cocycle");
  const Rational q12 = b.q[0][1];
  PurityVerdict v;

  // Fast path: the Cbar conditions do not depend on t along the forced family.
  const Rational mixed = lambda[2] + 2 * q12 * lambda[0] * lambda[1];
  const std::array<std::pair<Rational, const char*>, 3> conditions{{
      {lambda[0] * lambda[1], "λ₁·λ₂=0"},
      {lambda[0] * mixed, "λ₁·(λ₁₂+2q₁₂λ₁λ₂)=0"},
      {lambda[1] * mixed, "λ₂·(λ₁₂+2q₁₂λ₁λ₂)=0"},
  }};
  for (const auto& [value, text] : conditions)
    if (value != 0) {
      v.fast_pure = true;
      v.violated = text;
      break;
    }

  // Verification path: alpha is H-linear, so only alpha(top) = a is free.
  const SpacePtr space_ta = make_space({"t", "a"});
  const SpacePtr space_t = make_space({"t"});
  const EtaCoeffs eta_t = forced_eta(lambda, q12, space_ta);
  const std::size_t top = top_index(b);
  Functional alpha = Functional::counit(1, t.n);
  alpha.at(top) = Scalar::param(space_ta, "a");
  const Functional diff = act_unit(alpha, sigma_lambda, t, exec) - exponential(eta_from_coeffs(b, eta_t), t, exec).value;

  // Solve a from an entry of the form c*a + r(t).
  const Monomial a1 = mono_with_exp(0, 1, 1);
  std::optional<Scalar> a_of_t;
  for (std::size_t i = 0; i < diff.size() && !a_of_t; ++i) {
    const Scalar& d = diff[i];
    if (d.degree_in(1) != 1) continue;
    bool linear = true;
    for (const auto& [m, c] : d.terms())
      if (mono_exp(m, 1) > 0 && m != a1) linear = false;
    if (!linear) continue;
    const Rational c = d.coefficient(a1);
    const Scalar rest = d - Scalar::monomial(space_ta, a1, c);
    a_of_t = rest.scaled(-1 / c);
  }
  if (!a_of_t) throw HopflabError(ErrorKind::Internal, "no entry determines the gauge alpha(top)");
  v.alpha_top = a_of_t->compose({{"t", Scalar::param(space_t, "t")}}, space_t);
  const Scalar closed = (eta_t.e212 - Scalar(lambda[2])).compose({{"t", Scalar::param(space_t, "t")}}, space_t);
  v.alpha_matches_closed_form = v.alpha_top == closed;

  std::vector<Scalar> polys;
  const std::map<std::string, Scalar> bind{{"a", v.alpha_top}, {"t", Scalar::param(space_t, "t")}};
  for (std::size_t i = 0; i < diff.size(); ++i) {
    const Scalar p = diff[i].compose(bind, space_t);
    if (!p.is_zero()) polys.push_back(p);
  }
  v.solve = solve_common_root_1var(polys);
  v.paths_agree = v.fast_pure == (v.solve.kind == CommonRoot::Kind::NoRoot);

  if (v.solve.kind == CommonRoot::Kind::NoRoot) {
    v.tag = PurityVerdict::Tag::Pure;
    if (v.violated.empty()) v.violated = "α⇀σ = e^η has no solution t";
    return v;
  }
  v.tag = PurityVerdict::Tag::Exponential;
  if (v.solve.kind == CommonRoot::Kind::AllOfK) v.t = Rational(0);
  if (v.solve.kind == CommonRoot::Kind::Roots) v.t = v.solve.roots.front();
  if (v.t) {
    const EtaCoeffs in_ta = at_point(eta_t, *v.t);
    const std::map<std::string, Rational> p{{"t", *v.t}};
    v.eta = {Scalar(), Scalar(in_ta.e1.constant_value()), Scalar(in_ta.e2.constant_value()),
             Scalar(in_ta.e121.constant_value()), Scalar(in_ta.e212.constant_value())};
    v.alpha = Functional::counit(1, t.n);
    v.alpha.at(top) = Scalar(v.alpha_top.substitute(p).constant_value());
    v.witness_verified =
        act_unit(v.alpha, sigma_lambda, t, exec) == exponential(eta_from_coeffs(b, v.eta), t, exec).value;
  }
  if (sigma_lambda == Functional::counit(2, t.n)) v.tag = PurityVerdict::Tag::Trivial;
  return v;
}

}  // namespace hopflab
