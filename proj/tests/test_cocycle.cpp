#include <doctest.h>

#include <random>

#include "fixtures.hpp"
#include "hopflab/cocycle.hpp"
#include "hopflab/errors.hpp"

using namespace hopflab;
using namespace fixtures;

namespace {

Functional golden_sigma(const Algebra& b, int s) {
  const Scalar one(1);
  return functional_from_entries(
      b, {{"1", "1", one},
          {"x1", "x1", l1()},
          {"x1", "x2x12", l12()},
          {"x2", "x2", l2()},
          {"x2", "x12x1", (l1() * l2()).scaled(2 * s)},
          {"x12", "x12", l12()},
          {"x2x1", "x2x1", (l1() * l2()).scaled(s)},
          {"x2x12", "x2x12", (l2() * l12()).scaled(-s)},
          {"x12x1", "x2", (l1() * l2()).scaled(2 * s) + l12()},
          {"x12x1", "x12x1", (l12() * l1()).scaled(s) + (l1() * l1() * l2()).scaled(4)},
          {"x2x12x1", "x2x12x1", (l2() * l12() * l1()).scaled(s)}});
}

Functional sigma_from_section(const A2& a) {
  const auto sol = solve_section(a.c);
  return cocycle_from_section_braided(sol.gamma, convolution_inverse_map(sol.gamma, a.c), a.c);
}

Scalar value(const Functional& f, const Element& u, const Element& v) {
  Scalar acc;
  for (const auto& [i, a] : u)
    for (const auto& [j, b] : v) acc += a * b * f.at(i, j);
  return acc;
}

Functional random_functional(std::size_t arity, std::size_t n, std::mt19937& rng, bool unit) {
  std::uniform_int_distribution<int> d(-3, 3);
  Functional f(arity, n);
  for (std::size_t i = 0; i < f.size(); ++i) f[i] = Scalar(d(rng));
  if (unit) f[0] = Scalar(1);
  return f;
}

}  // namespace

TEST_CASE("cocycle of the section matches the reference table") {
  for (int s : {1, -1}) {
    const auto a = a2(s);
    const auto sigma = sigma_from_section(a);
    const auto d = compare(sigma, golden_sigma(*a.b, s));
    CHECK_MESSAGE(d.equal, "first difference at (" << a.b->basis_names[d.first.empty() ? 0 : d.first[0]] << ", "
                                                    << a.b->basis_names[d.first.empty() ? 0 : d.first[1]]
                                                    << "): " << d.lhs.str() << " vs " << d.rhs.str());
  }
}

TEST_CASE("first row agrees with the primitive-row formula") {
  for (int s : {1, -1}) {
    const auto a = a2(s);
    const auto sol = solve_section(a.c);
    const auto inv = convolution_inverse_map(sol.gamma, a.c);
    const auto sigma = sigma_from_section(a);
    for (std::size_t x : {a.b->index_of("x1"), a.b->index_of("x2")})
      for (std::size_t y = 0; y < a.b->dim(); ++y) CHECK(primitive_row(sol.gamma, inv, a.c, x, y) == sigma.at(x, y));
    CHECK_THROWS_AS(primitive_row(sol.gamma, inv, a.c, a.b->index_of("x12"), 1), HopflabError);
  }
}

TEST_CASE("cocycle identity holds for the section cocycle") {
  for (int s : {1, -1}) {
    const auto a = a2(s);
    const auto t = make_tables(*a.b);
    const auto sigma = sigma_from_section(a);
    const auto par = is_hopf_cocycle(sigma, t, Exec::Parallel);
    const auto ser = is_hopf_cocycle_serial(sigma, t);
    CHECK(par.ok);
    CHECK(ser.ok);
    CHECK(par.normalized);
  }
}

TEST_CASE("cocycle identity rejects perturbed forms") {
  const auto a = a2(1);
  const auto t = make_tables(*a.b);
  auto sigma = sigma_from_section(a);
  sigma.at(a.b->index_of("x1"), a.b->index_of("x2")) = Scalar(1);
  const auto par = is_hopf_cocycle(sigma, t);
  const auto ser = is_hopf_cocycle_serial(sigma, t);
  CHECK_FALSE(par.ok);
  CHECK_FALSE(ser.ok);
  CHECK(par.normalized);

  auto unnormalized = sigma_from_section(a);
  unnormalized.at(1, 0) = Scalar(1);
  CHECK_FALSE(is_hopf_cocycle(unnormalized, t).normalized);
}

TEST_CASE("serial and parallel cocycle checks agree on random forms") {
  const auto a = a2(1);
  const auto t = make_tables(*a.b);
  std::mt19937 rng(7);
  for (int round = 0; round < 4; ++round) {
    auto f = random_functional(2, t.n, rng, true);
    CHECK(is_hopf_cocycle(f, t).ok == is_hopf_cocycle_serial(f, t).ok);
  }
  // The trivial cocycle.
  CHECK(is_hopf_cocycle(Functional::counit(2, t.n), t).ok);
}

TEST_CASE("cocycle is determined by its first row") {
  for (int s : {1, -1}) {
    const auto a = a2(s);
    const auto sigma = sigma_from_section(a);
    const auto rebuilt = extend_from_first_row(first_row(sigma, *a.b), *a.b);
    CHECK(compare(rebuilt, sigma).equal);
  }
}

TEST_CASE("degree-two and degree-three peeling formulas") {
  for (int s : {1, -1}) {
    const auto a = a2(s);
    const auto& b = *a.b;
    const auto sigma = sigma_from_section(a);
    const Element x1 = basis_element(b.index_of("x1"));
    const Element x2 = basis_element(b.index_of("x2"));
    auto sg = [&](const Element& u, const Element& v) { return value(sigma, u, v); };
    auto mul = [&](const Element& u, const Element& v) { return b.multiply(u, v); };
    auto chi = [&](const Element& u, const Element& v) {
      return Scalar(braiding_scalar(b.q, b.degree[u.begin()->first], b.degree[v.begin()->first]));
    };

    for (std::size_t y = 1; y < b.dim(); ++y) {
      const Element bb = basis_element(y);
      const PairElement rb = restricted_comult(b, bb);

      // sigma(xy, b) = sigma(x, yb) + sigma(y, b_1) sigma(x, b_2) for x = x2, y = x1.
      Scalar two = sg(x2, mul(x1, bb));
      for (const auto& [uv, c] : rb) two += c * sg(x1, basis_element(uv.first)) * sg(x2, basis_element(uv.second));
      CHECK(sg(mul(x2, x1), bb) == two);

      // x w y-words of length three: (x, y, w) = (x1, x2, x1) and (x2, x1, x2).
      for (const auto& [x, yy, w] : {std::tuple{x1, x2, x1}, std::tuple{x2, x1, x2}}) {
        Scalar three = sg(x, mul(mul(yy, w), bb)) - sg(x, yy) * sg(w, bb) + chi(w, bb) * sg(yy, bb) * sg(x, w) +
                       chi(yy, w) * chi(yy, bb) * sg(w, bb) * sg(x, yy) - chi(yy, w) * sg(x, w) * sg(yy, bb);
        for (const auto& [uv, c] : rb) {
          const Element b1 = basis_element(uv.first), b2 = basis_element(uv.second);
          three += c * (sg(mul(yy, w), b1) * sg(x, b2) + chi(w, b1) * sg(yy, b1) * sg(x, mul(w, b2)) +
                        chi(yy, w) * chi(yy, b1) * sg(w, b1) * sg(x, mul(yy, b2)));
        }
        CHECK(sg(mul(mul(x, yy), w), bb) == three);
      }
    }
  }
}

TEST_CASE("convolution: serial and parallel agree, inverse is two-sided") {
  const auto a = a2(-1);
  const auto t = make_tables(*a.b);
  std::mt19937 rng(11);
  for (std::size_t arity : {1, 2, 3}) {
    const auto f = random_functional(arity, t.n, rng, true);
    const auto g = random_functional(arity, t.n, rng, false);
    CHECK(convolve(f, g, t, Exec::Parallel) == convolve_serial(f, g, t));
    CHECK(convolve(f, g, t, Exec::Serial) == convolve_serial(f, g, t));
    const auto inv = convolution_inverse(f, t);
    CHECK(convolve(f, inv, t) == Functional::counit(arity, t.n));
    CHECK(convolve(inv, f, t) == Functional::counit(arity, t.n));
  }
  Functional zero(1, t.n);
  CHECK_THROWS_AS(convolution_inverse(zero, t), HopflabError);
  CHECK_THROWS_AS(convolution_inverse(Functional::counit(1, t.n).scaled(l1()), t), HopflabError);
}

TEST_CASE("convolution is associative on random forms") {
  const auto a = a2(1);
  const auto t = make_tables(*a.b);
  std::mt19937 rng(3);
  const auto f = random_functional(2, t.n, rng, false);
  const auto g = random_functional(2, t.n, rng, false);
  const auto h = random_functional(2, t.n, rng, false);
  CHECK(convolve(convolve(f, g, t), h, t) == convolve(f, convolve(g, h, t), t));
}

TEST_CASE("gauge action of H-linear units") {
  for (int s : {1, -1}) {
    const auto a = a2(s);
    const auto& b = *a.b;
    const auto t = make_tables(b);
    const auto group = diagonal_realization(b.q, {4, 4});
    const auto sigma = sigma_from_section(a);

    Functional alpha = Functional::counit(1, t.n);
    alpha.at(b.index_of("x2x12x1")) = Scalar(3);
    CHECK(is_h_linear_unit(alpha, b, group));
    const auto moved = act_unit(alpha, sigma, t);
    CHECK(is_hopf_cocycle(moved, t).ok);
    // The first row of the gauged cocycle from alpha, alpha^-1 and sigma alone.
    const auto inv = convolution_inverse(alpha, t);
    const auto row = first_row(moved, b);
    for (std::size_t k = 0; k < b.theta(); ++k) {
      const std::size_t x = b.generator[k].begin()->first;
      for (std::size_t y = 0; y < b.dim(); ++y) CHECK(alpha_first_row(alpha, inv, sigma, b, x, y) == row[k][y]);
    }

    Functional bad = Functional::counit(1, t.n);
    bad.at(b.index_of("x1")) = Scalar(1);
    CHECK_FALSE(is_h_linear_unit(bad, b, group));
  }
}
