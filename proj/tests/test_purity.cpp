#include <doctest.h>

#include "fixtures.hpp"
#include "hopflab/cocycle.hpp"
#include "hopflab/purity.hpp"

using namespace hopflab;
using namespace fixtures;

namespace {

Functional section_cocycle(const A2& a) {
  const auto sol = solve_section(a.c);
  return cocycle_from_section_braided(sol.gamma, convolution_inverse_map(sol.gamma, a.c), a.c);
}

// Hand table: diagonal entries are gauge invariant, so eta1 = l1, eta2 = l2 and
// eta121 + eta212 = l12 + 2 q12 l1 l2; the exponential is a cocycle iff Cbar holds.
PurityVerdict::Tag expected_tag(const std::array<Rational, 3>& l) {
  if (l[0] == 0 && l[1] == 0 && l[2] == 0) return PurityVerdict::Tag::Trivial;
  const int nonzero = (l[0] != 0) + (l[1] != 0) + (l[2] != 0);
  return nonzero == 1 ? PurityVerdict::Tag::Exponential : PurityVerdict::Tag::Pure;
}

}  // namespace

TEST_CASE("purity verdicts on every support pattern") {
  const std::array<Rational, 3> values{Rational(2), Rational(-3), Rational(5, 2)};
  for (int s : {1, -1}) {
    const auto a = a2(s);
    const auto& b = *a.b;
    const auto t = make_tables(b);
    const auto sigma = section_cocycle(a);
    for (int mask = 0; mask < 8; ++mask) {
      std::array<Rational, 3> l{};
      for (int k = 0; k < 3; ++k) l[k] = (mask >> k & 1) ? values[k] : Rational(0);
      const auto numeric = sigma.substitute({{"l1", l[0]}, {"l2", l[1]}, {"l12", l[2]}});
      const auto v = purity_decide(b, t, numeric, l);
      INFO("s=" << s << " mask=" << mask << " tag=" << tag_name(v.tag));
      CHECK(v.tag == expected_tag(l));
      CHECK(v.paths_agree);
      CHECK(v.alpha_matches_closed_form);
      if (v.tag == PurityVerdict::Tag::Pure) {
        CHECK(v.fast_pure);
        CHECK(v.solve.kind == CommonRoot::Kind::NoRoot);
        const bool l1l2 = l[0] != 0 && l[1] != 0;
        CHECK(v.violated == (l1l2 ? "λ₁·λ₂=0" : l[0] != 0 ? "λ₁·(λ₁₂+2q₁₂λ₁λ₂)=0" : "λ₂·(λ₁₂+2q₁₂λ₁λ₂)=0"));
      } else {
        REQUIRE(v.t.has_value());
        CHECK(v.witness_verified);
        // Independent re-check of the witness.
        const auto ex = exponential(eta_from_coeffs(b, v.eta), t).value;
        CHECK(act_unit(v.alpha, numeric, t) == ex);
        CHECK(is_hopf_cocycle(ex, t).ok);
        CHECK(is_h_linear_unit(v.alpha, b, diagonal_realization(b.q, {4, 4})));
        // Gauge-invariant diagonal: eta(x, x) = sigma(x, x) on generators.
        const auto eta = eta_from_coeffs(b, v.eta);
        for (const char* x : {"x1", "x2"}) CHECK(eta.at(b.index_of(x), b.index_of(x)) == numeric.at(b.index_of(x), b.index_of(x)));
      }
    }
  }
}

TEST_CASE("the forced family") {
  const auto space = make_space({"t"});
  const auto e = forced_eta({Rational(1), Rational(2), Rational(3)}, Rational(-1), space);
  CHECK(e.e1 == Scalar(1));
  CHECK(e.e2 == Scalar(2));
  CHECK(e.e121 + e.e212 == Scalar(Rational(3 - 4)));
  CHECK(e.e121 == Scalar::param(space, "t"));
}

TEST_CASE("purity rejects symbolic input") {
  const auto a = a2(1);
  const auto t = make_tables(*a.b);
  CHECK_THROWS(purity_decide(*a.b, t, section_cocycle(a), {Rational(0), Rational(0), Rational(0)}));
}
