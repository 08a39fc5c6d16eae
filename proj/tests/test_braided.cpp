#include <doctest.h>

#include "fixtures.hpp"
#include "hopflab/errors.hpp"

using namespace hopflab;
using fixtures::a2_nichols;

namespace {

const BraidedBialgebra& a2(int s) {
  static BraidedBialgebra plus = build_from_presentation(a2_nichols(1));
  static BraidedBialgebra minus = build_from_presentation(a2_nichols(-1));
  return s == 1 ? plus : minus;
}

Element el(std::initializer_list<std::pair<const char*, Scalar>> terms, const Algebra& a) {
  Element e;
  for (const auto& [n, c] : terms) add_to(e, a.index_of(n), c);
  return e;
}

PairElement pel(std::initializer_list<std::tuple<const char*, const char*, Scalar>> terms, const Algebra& a) {
  PairElement e;
  for (const auto& [x, y, c] : terms) add_to(e, a.index_of(x), a.index_of(y), c);
  return e;
}

// Independent oracle for A2: words over {1,2} reduced by 11 -> 0, 22 -> 0,
// 2121 -> -1212, written directly on strings.
using WordPoly = std::map<std::string, Rational>;

void oracle_add(WordPoly& p, const std::string& w, const Rational& c) {
  p[w] += c;
  if (p[w] == 0) p.erase(w);
}

WordPoly oracle_reduce(const WordPoly& in) {
  WordPoly out;
  std::vector<std::pair<std::string, Rational>> stack(in.begin(), in.end());
  while (!stack.empty()) {
    auto [w, c] = stack.back();
    stack.pop_back();
    if (w.find("11") != std::string::npos || w.find("22") != std::string::npos) continue;
    auto pos = w.find("2121");
    if (pos != std::string::npos) {
      stack.emplace_back(w.substr(0, pos) + "1212" + w.substr(pos + 4), -c);
      continue;
    }
    oracle_add(out, w, c);
  }
  return out;
}

WordPoly oracle_mul(const WordPoly& a, const WordPoly& b) {
  WordPoly r;
  for (const auto& [wa, ca] : a)
    for (const auto& [wb, cb] : b) oracle_add(r, wa + wb, ca * cb);
  return oracle_reduce(r);
}

// PBW elements as word polynomials: x12 = 12 - s 21, x2x12 = 212, ...
WordPoly oracle_pbw(const std::string& name, int s) {
  const WordPoly x1{{"1", 1}}, x2{{"2", 1}}, x12{{"12", 1}, {"21", -s}};
  if (name == "1") return {{"", 1}};
  if (name == "x1") return x1;
  if (name == "x2") return x2;
  if (name == "x12") return x12;
  if (name == "x2x1") return oracle_mul(x2, x1);
  if (name == "x2x12") return oracle_mul(x2, x12);
  if (name == "x12x1") return oracle_mul(x12, x1);
  return oracle_mul(oracle_mul(x2, x12), x1);
}

WordPoly oracle_of_element(const Element& e, const Algebra& a, int s) {
  WordPoly r;
  for (const auto& [i, c] : e)
    for (const auto& [w, v] : oracle_pbw(a.basis_names[i], s)) oracle_add(r, w, v * c.constant_value());
  return r;
}

}  // namespace

TEST_CASE("A2 PBW basis") {
  for (int s : {1, -1}) {
    const auto& b = a2(s);
    CHECK(b.dim() == 8);
    CHECK(b.basis_names == std::vector<std::string>{"1", "x1", "x2", "x12", "x2x1", "x2x12", "x12x1", "x2x12x1"});
    CHECK(b.degree[5] == MultiDegree{1, 2});
    CHECK(b.degree[7] == MultiDegree{2, 2});
  }
}

TEST_CASE("rank-1 presentation") {
  auto b = build_from_presentation(fixtures::rank1_nichols());
  CHECK(b.dim() == 2);
  CHECK(b.mult[1][1].empty());
}

TEST_CASE("inconsistent presentation is rejected") {
  auto p = fixtures::rank1_nichols();
  p.relations = {fp_pow(fixtures::gen(0), 3)};
  p.basis.clear();
  p.basis_names.clear();
  try {
    build_from_presentation(p);
    FAIL("expected an error");
  } catch (const HopflabError& e) {
    CHECK(e.kind() == ErrorKind::PresentationInconsistency);
  }
}

TEST_CASE("multiply examples") {
  for (int s : {1, -1}) {
    const auto& b = a2(s);
    CHECK(elements_equal(b.multiply(el({{"x1", 1}}, b), el({{"x2", 1}}, b)), el({{"x12", 1}, {"x2x1", Scalar(s)}}, b)));
    CHECK(b.multiply(el({{"x1", 1}}, b), el({{"x1", 1}}, b)).empty());
    CHECK(elements_equal(b.multiply(el({{"x2", 1}}, b), el({{"x12x1", 1}}, b)), el({{"x2x12x1", 1}}, b)));
    CHECK(elements_equal(b.mult[3][4], el({{"x2x12x1", Scalar(-s)}}, b)));
  }
}

TEST_CASE("full multiplication table agrees with the string-rewriting oracle") {
  for (int s : {1, -1}) {
    const auto& b = a2(s);
    for (std::size_t i = 0; i < 8; ++i)
      for (std::size_t j = 0; j < 8; ++j) {
        auto expected = oracle_mul(oracle_pbw(b.basis_names[i], s), oracle_pbw(b.basis_names[j], s));
        CHECK(oracle_of_element(b.mult[i][j], b, s) == expected);
      }
  }
}

TEST_CASE("comultiplication displays") {
  for (int s : {1, -1}) {
    const auto& b = a2(s);
    const int q21 = -s;
    CHECK(pairs_equal(comultiply(b, el({{"x1", 1}}, b)), pel({{"x1", "1", 1}, {"1", "x1", 1}}, b)));
    CHECK(pairs_equal(restricted_comult(b, el({{"x12x1", 1}}, b)),
                      pel({{"x1", "x12", Scalar(-q21)}, {"x12", "x1", 1}, {"x1", "x2x1", 2}}, b)));
    CHECK(pairs_equal(restricted_comult(b, el({{"x2x12x1", 1}}, b)),
                      pel({{"x2x1", "x2x1", 2},
                           {"x1", "x2x12", Scalar(-q21 * q21)},
                           {"x12", "x2x1", Scalar(-q21)},
                           {"x12x1", "x2", Scalar(-q21 * q21)},
                           {"x2", "x12x1", 1},
                           {"x2x1", "x12", Scalar(-q21)},
                           {"x2x12", "x1", 1}},
                          b)));
    CHECK(restricted_comult(b, el({{"x1", 1}}, b)).empty());
    CHECK(pairs_equal(restricted_comult(b, el({{"1", 1}}, b)), pel({{"1", "1", 1}}, b)));
    // Oracle: (x2 (x) 1 + 1 (x) x2)(x1 (x) 1 + 1 (x) x1), cross terms only.
    CHECK(pairs_equal(restricted_comult(b, el({{"x2x1", 1}}, b)), pel({{"x2", "x1", 1}, {"x1", "x2", Scalar(q21)}}, b)));
  }
}

TEST_CASE("yd action") {
  for (int s : {1, -1}) {
    const auto& b = a2(s);
    const int q21 = -s;
    CHECK(elements_equal(yd_action(b, {1, 0}, el({{"x2", 1}}, b)), el({{"x2", Scalar(s)}}, b)));
    CHECK(elements_equal(yd_action(b, {0, 1}, el({{"x12x1", 1}}, b)), el({{"x12x1", Scalar(-q21 * q21)}}, b)));
    CHECK(elements_equal(yd_action(b, {0, 0}, el({{"x2x12", 3}}, b)), el({{"x2x12", 3}}, b)));
  }
}

TEST_CASE("structural invariants") {
  std::vector<const BraidedBialgebra*> all{&a2(1), &a2(-1)};
  static auto r1 = build_from_presentation(fixtures::rank1_nichols());
  all.push_back(&r1);
  for (const auto* b : all) {
    CHECK(check_associativity(*b).ok);
    CHECK(check_associativity_serial(*b).ok);
    CHECK(check_coassociativity(*b).ok);
    CHECK(check_restricted_coassociativity(*b).ok);
    CHECK(check_counit(*b).ok);
    CHECK(check_delta_multiplicative(*b).ok);
    CHECK(check_delta_multiplicative(*b, Exec::Serial).ok);
    CHECK(check_grading(*b).ok);
    CHECK(check_yd_automorphisms(*b).ok);
  }
}

TEST_CASE("associativity check detects a corrupted table") {
  BraidedBialgebra b = a2(1);
  b.mult[1][2] = basis_element(3);
  CHECK(!check_associativity(b).ok);
  CHECK(!check_associativity_serial(b).ok);
}
