#include <doctest.h>

#include <random>

#include "fixtures.hpp"
#include "hopflab/bosonization.hpp"
#include "hopflab/cocycle.hpp"
#include "hopflab/errors.hpp"

using namespace hopflab;
using namespace fixtures;

namespace {

struct Bos {
  A2 base;
  GroupData group;
  Functional sigma_b;
};

Bos make_bos(int s) {
  Bos out{a2(s), {}, {}};
  out.group = diagonal_realization(out.base.b->q, {4, 4});
  const auto sol = solve_section(out.base.c);
  out.sigma_b = cocycle_from_section_braided(sol.gamma, convolution_inverse_map(sol.gamma, out.base.c), out.base.c);
  return out;
}

Element term(const SmashAlgebra& a, const std::string& b, const std::vector<int>& h, const Scalar& c = Scalar(1)) {
  return Element{{a.index(a.base().index_of(b), a.group().index(h)), c}};
}

Element plus(Element u, const Element& v) {
  add_scaled(u, v, Scalar(1));
  return u;
}

}  // namespace

TEST_CASE("diagonal realization and validation") {
  const auto b = build_from_presentation(a2_nichols(1));
  const auto g = diagonal_realization(b.q, {4, 4});
  CHECK(g.order() == 16);
  CHECK(g.element_name(g.index({2, 1})) == "g1^2g2");
  CHECK(g.inverse(g.index({1, 3})) == g.index({3, 1}));
  CHECK(g.character(0, g.index({0, 1})) == Rational(-1));  // chi1(g2) = q21 = -1
  CHECK(g.power_of_generators({1, 2}) == g.index({1, 2}));

  GroupData bad = g;
  bad.chars[0][1] = Rational(1);
  CHECK_THROWS_AS(bad.validate(b.q), HopflabError);
  GroupData wrong_order = g;
  wrong_order.orders = {3, 4};
  CHECK_THROWS_AS(wrong_order.validate(b.q), HopflabError);

  CHECK_NOTHROW(check_cleft_realization(g, a2_cleft(1), b.q));
  auto p = a2_cleft(1);
  p.relations.push_back(sub(fp_mul(gen(0), gen(1)), fp_scalar(Scalar(1))));
  CHECK_THROWS_AS(check_cleft_realization(g, p, b.q), HopflabError);
}

TEST_CASE("smash product and coproduct on basis elements") {
  const auto b = build_from_presentation(a2_nichols(1));
  const auto g = diagonal_realization(b.q, {4, 4});
  const SmashAlgebra a(b, g);
  CHECK(a.dim() == 128);
  // g1 x1 = q11 x1 g1, g1 x2 = q12 x2 g1.
  CHECK(elements_equal(a.multiply(term(a, "1", {1, 0}), term(a, "x1", {0, 0})), term(a, "x1", {1, 0}, -1)));
  CHECK(elements_equal(a.multiply(term(a, "1", {1, 0}), term(a, "x2", {0, 0})), term(a, "x2", {1, 0}, 1)));
  CHECK(elements_equal(a.multiply(term(a, "x1", {0, 0}), term(a, "1", {1, 0})), term(a, "x1", {1, 0})));
  CHECK(a.name(a.index(b.index_of("x12"), g.index({2, 1}))) == "x12#g1^2g2");

  // Delta(x1) = x1 (x) 1 + g1 (x) x1.
  PairElement expected;
  add_to(expected, a.index(1, 0), a.index(0, 0), 1);
  add_to(expected, a.index(0, g.index({1, 0})), a.index(1, 0), 1);
  CHECK(pairs_equal(smash_coproduct(a, b, term(a, "x1", {0, 0})), expected));
  CHECK(smash_counit(a, term(a, "1", {3, 2})) == Scalar(1));
  CHECK(smash_counit(a, term(a, "x1", {0, 0})).is_zero());
}

TEST_CASE("bosonization is a bialgebra") {
  const auto b = build_from_presentation(a2_nichols(-1));
  const auto g = diagonal_realization(b.q, {4, 4});
  const SmashAlgebra a(b, g);
  // Delta(uv) = Delta(u) Delta(v) on pairs with u, v in B # 1 or 1 # Gamma.
  std::vector<std::size_t> probe;
  for (std::size_t x = 0; x < b.dim(); ++x) probe.push_back(a.index(x, 0));
  for (std::size_t h = 1; h < g.order(); h += 5) probe.push_back(a.index(0, h));
  probe.push_back(a.index(b.index_of("x12"), g.index({1, 3})));
  for (std::size_t u : probe)
    for (std::size_t v : probe) {
      const auto du = smash_coproduct(a, b, basis_element(u));
      const auto dv = smash_coproduct(a, b, basis_element(v));
      PairElement prod;
      for (const auto& [l1, c1] : du)
        for (const auto& [l2, c2] : dv) {
          const auto left = a.multiply_basis(l1.first, l2.first);
          const auto right = a.multiply_basis(l1.second, l2.second);
          for (const auto& [i, ci] : left)
            for (const auto& [j, cj] : right) add_to(prod, i, j, c1 * c2 * ci * cj);
        }
      CHECK(pairs_equal(smash_coproduct(a, b, a.multiply_basis(u, v)), prod));
    }
  // Coassociativity on every basis element.
  for (std::size_t u = 0; u < a.dim(); ++u) {
    std::map<std::array<std::size_t, 3>, Scalar> l, r;
    for (const auto& [lr, c] : smash_coproduct(a, b, basis_element(u))) {
      for (const auto& [uv, d] : smash_coproduct(a, b, basis_element(lr.first))) l[{uv.first, uv.second, lr.second}] += c * d;
      for (const auto& [uv, d] : smash_coproduct(a, b, basis_element(lr.second))) r[{lr.first, uv.first, uv.second}] += c * d;
    }
    std::erase_if(l, [](const auto& kv) { return kv.second.is_zero(); });
    std::erase_if(r, [](const auto& kv) { return kv.second.is_zero(); });
    CHECK(l == r);
  }
}

TEST_CASE("cocycle computed in the bosonized cleft object is factored") {
  for (int s : {1, -1}) {
    const auto bos = make_bos(s);
    const auto& b = *bos.base.b;
    const SmashAlgebra a(b, bos.group);
    const auto sol = solve_section(bos.base.c);
    std::vector<std::array<std::size_t, 2>> pairs;
    for (std::size_t u : {a.index(1, bos.group.index({1, 0})), a.index(b.index_of("x12"), bos.group.index({0, 3}))})
      for (std::size_t v = 0; v < b.dim(); ++v) pairs.push_back({u, a.index(v, bos.group.index({2, 1}))});
    const auto result = cocycle_from_section(sol.gamma, bos.base.c, bos.group, pairs);
    CHECK(compare(result.sigma_b, bos.sigma_b).equal);
    for (std::size_t i = 0; i < pairs.size(); ++i)
      CHECK(result.extra_values[i] == factored_value(bos.sigma_b, a, pairs[i][0], pairs[i][1]));
  }
}

TEST_CASE("factored inverse is the convolution inverse on A") {
  const auto bos = make_bos(1);
  const auto& b = *bos.base.b;
  const SmashAlgebra a(b, bos.group);
  const auto t = make_tables(b);
  const auto inv = convolution_inverse(bos.sigma_b, t);
  for (std::size_t x = 0; x < a.dim(); x += 3)
    for (std::size_t y = 0; y < a.dim(); y += 5) {
      const Scalar expected = (a.part_b(x) == 0 && a.part_b(y) == 0) ? Scalar(1) : Scalar();
      CHECK(convolve_factored_at(a, b, bos.sigma_b, inv, x, y) == expected);
      CHECK(convolve_factored_at(a, b, inv, bos.sigma_b, x, y) == expected);
    }
}

TEST_CASE("deformed relations of the bosonization") {
  for (int s : {1, -1}) {
    const auto bos = make_bos(s);
    const auto& b = *bos.base.b;
    const SmashAlgebra a(b, bos.group);
    const auto t = make_tables(b);
    const auto inv = convolution_inverse(bos.sigma_b, t);
    auto dp = [&](const Element& u, const Element& v) { return deform_product(a, b, bos.sigma_b, inv, u, v); };
    const Element a1 = term(a, "x1", {0, 0}), a2e = term(a, "x2", {0, 0});

    // a_i^2 = l_i (1 - g_i^2).
    CHECK(elements_equal(dp(a1, a1), plus(term(a, "1", {0, 0}, l1()), term(a, "1", {2, 0}, -l1()))));
    CHECK(elements_equal(dp(a2e, a2e), plus(term(a, "1", {0, 0}, l2()), term(a, "1", {0, 2}, -l2()))));

    // a12 = a1 a2 - q12 a2 a1 in the deformed product.
    Element a12 = dp(a1, a2e);
    add_scaled(a12, dp(a2e, a1), Scalar(-s));
    Element expected = plus(term(a, "1", {0, 0}, l12()), term(a, "1", {2, 2}, -l12()));
    const Scalar c = (l1() * l2()).scaled(4 * s);
    expected = plus(expected, plus(term(a, "1", {0, 2}, c), term(a, "1", {2, 2}, -c)));
    CHECK(elements_equal(dp(a12, a12), expected));
    // The unit is still the unit.
    CHECK(elements_equal(dp(term(a, "1", {0, 0}), a12), a12));
  }
}

TEST_CASE("exact cocycle identity on the bosonization at rational points") {
  std::mt19937 rng(5);
  std::uniform_int_distribution<int> d(-5, 5);
  for (int s : {1, -1}) {
    const auto bos = make_bos(s);
    const auto& b = *bos.base.b;
    const SmashAlgebra a(b, bos.group);
    const std::map<std::string, Rational> point{
        {"l1", Rational(d(rng), 3)}, {"l2", Rational(d(rng))}, {"l12", Rational(d(rng), 2)}};
    auto numeric = bos.sigma_b.substitute(point);
    const auto ok = check_bosonized_cocycle(a, b, numeric);
    CHECK_MESSAGE(ok.ok, "s=" << s << " at " << a.name(ok.first[0]) << ", " << a.name(ok.first[1]) << ", "
                                  << a.name(ok.first[2]));
    CHECK(ok.triples == 128u * 128u * 128u);

    // A perturbation that keeps normalization breaks the identity.
    numeric.at(1, 2) = Scalar(1);
    CHECK_FALSE(check_bosonized_cocycle(a, b, numeric).ok);
  }
}

TEST_CASE("Taft algebra: deformations coincide, cleft objects differ") {
  auto b = std::make_shared<const BraidedBialgebra>(build_from_presentation(rank1_nichols()));
  const auto g = diagonal_realization(b->q, {2});
  const SmashAlgebra a(*b, g);
  CHECK(a.dim() == 4);
  const auto c = build_cleft(taft_cleft(), b);
  const auto sol = solve_section(c);
  const auto sigma = cocycle_from_section_braided(sol.gamma, convolution_inverse_map(sol.gamma, c), c);
  const auto t = make_tables(*b);
  const Element x{{a.index(1, 0), 1}};
  for (int lambda : {0, 1}) {
    const auto s = sigma.substitute({{"l", Rational(lambda)}});
    CHECK(check_bosonized_cocycle(a, *b, s).ok);
    CHECK(check_bosonized_cocycle_serial(a, *b, s).ok);
    const auto inv = convolution_inverse(s, t);
    // x ._sigma x = lambda (1 - g^2) = 0.
    CHECK(deform_product(a, *b, s, inv, x, x).empty());
    // x .(sigma) x = lambda in the cleft object.
    const auto cx = cleft_multiply(a, *b, s, x, x);
    if (lambda == 0)
      CHECK(cx.empty());
    else
      CHECK(elements_equal(cx, Element{{a.index(0, 0), 1}}));
  }
  // Serial and parallel checks agree on a non-cocycle.
  Functional bad = Functional::counit(2, 2);
  bad.at(1, 1) = Scalar(1);
  bad.at(0, 1) = Scalar(1);
  CHECK(check_bosonized_cocycle(a, *b, bad).ok == check_bosonized_cocycle_serial(a, *b, bad).ok);
}
