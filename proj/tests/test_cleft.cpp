#include <doctest.h>

#include "fixtures.hpp"
#include "hopflab/errors.hpp"

using namespace hopflab;
using namespace fixtures;

namespace {

// gamma with gamma(x12x1) = y12y1 - 2 q21 l1 y2 and plain y-words elsewhere.
ComoduleMap golden_gamma(const CleftAlgebra& c, int s) {
  return map_from_entries(c, {{"1", {{"1", 1}}},
                              {"x1", {{"y1", 1}}},
                              {"x2", {{"y2", 1}}},
                              {"x12", {{"y12", 1}}},
                              {"x2x1", {{"y2y1", 1}}},
                              {"x2x12", {{"y2y12", 1}}},
                              {"x12x1", {{"y12y1", 1}, {"y2", l1().scaled(2 * s)}}},
                              {"x2x12x1", {{"y2y12y1", 1}}}});
}

ComoduleMap golden_gamma_inv(const CleftAlgebra& c, int s) {
  const long q21 = -s;
  return map_from_entries(c, {{"1", {{"1", 1}}},
                              {"x1", {{"y1", -1}}},
                              {"x2", {{"y2", -1}}},
                              {"x12", {{"y12", 1}, {"y2y1", 2 * s}}},
                              {"x2x1", {{"y12", q21}, {"y2y1", -1}}},
                              {"x12x1", {{"y12y1", -1}, {"y2", l1().scaled(2 * q21)}}},
                              {"x2x12", {{"y2y12", -1}}},
                              {"x2x12x1", {{"y2y12y1", 1}, {"1", -l12()}}}});
}

bool same_map(const ComoduleMap& a, const ComoduleMap& b) {
  if (a.image.size() != b.image.size()) return false;
  for (std::size_t i = 0; i < a.image.size(); ++i)
    if (!elements_equal(a.image[i], b.image[i])) return false;
  return true;
}

}  // namespace

TEST_CASE("cleft object over A2 is a comodule algebra") {
  for (int s : {1, -1}) {
    const auto a = a2(s);
    CHECK(a.c.dim() == 8);
    const auto r = check_coaction(a.c);
    CHECK_MESSAGE(r.ok, r.detail);
    // y1^2 = l1 and y2 y1 y2 y1 rewrites through y12^2 = l12.
    const auto& e = a.c.e;
    CHECK(elements_equal(e.mult[1][1], Element{{0, l1()}}));
    CHECK(elements_equal(e.mult[2][2], Element{{0, l2()}}));
    CHECK(elements_equal(e.mult[3][3], Element{{0, l12()}}));
  }
}

TEST_CASE("coaction on y12 by hand") {
  for (int s : {1, -1}) {
    const auto a = a2(s);
    const auto& e = a.c.e;
    const auto& b = *a.b;
    // delta(y12) = y12 (x) 1 + 2 y1 (x) x2 + 1 (x) x12, from the braided product rule.
    PairElement expected;
    add_to(expected, e.index_of("y12"), 0, 1);
    add_to(expected, e.index_of("y1"), b.index_of("x2"), 2);
    add_to(expected, 0, b.index_of("x12"), 1);
    CHECK(pairs_equal(a.c.coaction[e.index_of("y12")], expected));
  }
}

TEST_CASE("section solver reproduces the reference section") {
  for (int s : {1, -1}) {
    const auto a = a2(s);
    const auto sol = solve_section(a.c);
    const auto gamma = golden_gamma(a.c, s);
    CHECK(same_map(sol.gamma, gamma));
    CHECK(sol.gamma.normalized());
    CHECK(check_colinear(sol.gamma, a.c).ok);
    CHECK(check_h_linear(sol.gamma, a.c).ok);

    const auto inv = convolution_inverse_map(sol.gamma, a.c);
    CHECK(same_map(inv, golden_gamma_inv(a.c, s)));
    CHECK(check_unit_counit(convolve_maps(sol.gamma, inv, a.c), a.c).ok);
    CHECK(check_unit_counit(convolve_maps(inv, sol.gamma, a.c), a.c).ok);
  }
}

TEST_CASE("colinearity and H-linearity detect bad maps") {
  const auto a = a2(1);
  auto gamma = golden_gamma(a.c, 1);
  // Dropping the correction term breaks colinearity but not H-linearity.
  gamma.image[a.b->index_of("x12x1")] = Element{{a.c.e.index_of("y12y1"), 1}};
  CHECK_FALSE(check_colinear(gamma, a.c).ok);
  CHECK(check_h_linear(gamma, a.c).ok);
  // Sending x1 to y2 breaks both.
  auto bad = golden_gamma(a.c, 1);
  bad.image[1] = Element{{a.c.e.index_of("y2"), 1}};
  CHECK_FALSE(check_colinear(bad, a.c).ok);
  CHECK_FALSE(check_h_linear(bad, a.c).ok);
  auto unnormalized = golden_gamma(a.c, 1);
  unnormalized.image[0] = Element{};
  CHECK_THROWS_AS(convolution_inverse_map(unnormalized, a.c), HopflabError);
}

TEST_CASE("wrong dimension is an inconsistent deformation") {
  auto b = std::make_shared<const BraidedBialgebra>(build_from_presentation(a2_nichols(1)));
  auto p = a2_cleft(1);
  p.dimension = 7;
  try {
    build_cleft(p, b);
    FAIL("expected an error");
  } catch (const HopflabError& e) {
    CHECK(e.kind() == ErrorKind::PresentationInconsistency);
  }
}

TEST_CASE("Taft cleft object") {
  auto b = std::make_shared<const BraidedBialgebra>(build_from_presentation(rank1_nichols()));
  const auto c = build_cleft(taft_cleft(), b);
  CHECK(check_coaction(c).ok);
  const auto sol = solve_section(c);
  CHECK(elements_equal(sol.gamma.image[1], Element{{1, 1}}));
  const auto inv = convolution_inverse_map(sol.gamma, c);
  CHECK(elements_equal(inv.image[1], Element{{1, -1}}));
  const auto sigma = cocycle_from_section_braided(sol.gamma, inv, c);
  CHECK(sigma.at(1, 1) == Scalar::param(taft_space(), "l"));
  CHECK(primitive_row(sol.gamma, inv, c, 1, 1) == Scalar::param(taft_space(), "l"));
}
