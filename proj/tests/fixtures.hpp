// Hand-built presentations used by the unit tests, independent of the DSL.
#pragma once

#include <memory>

#include "hopflab/braided.hpp"
#include "hopflab/cleft.hpp"

namespace fixtures {

using namespace hopflab;

inline FreePoly gen(int k) { return fp_word(Word{k}); }

inline FreePoly sub(FreePoly a, const FreePoly& b, const Scalar& c = Scalar(1)) {
  fp_add(a, b, -c);
  return a;
}

// x12 = x1 x2 - q12 x2 x1
inline FreePoly x12(int s) { return sub(fp_mul(gen(0), gen(1)), fp_mul(gen(1), gen(0)), Scalar(s)); }

inline Presentation a2_nichols(int s) {
  Presentation p;
  p.name = "a2";
  p.generators = {"x1", "x2"};
  p.gen_degrees = {{1, 0}, {0, 1}};
  p.q = {{Rational(-1), Rational(s)}, {Rational(-s), Rational(-1)}};
  p.relations = {fp_pow(gen(0), 2), fp_pow(gen(1), 2), fp_pow(x12(s), 2)};
  p.basis_names = {"1", "x1", "x2", "x12", "x2x1", "x2x12", "x12x1", "x2x12x1"};
  const FreePoly one = fp_scalar(Scalar(1));
  p.basis = {one,
             gen(0),
             gen(1),
             x12(s),
             fp_mul(gen(1), gen(0)),
             fp_mul(gen(1), x12(s)),
             fp_mul(x12(s), gen(0)),
             fp_mul(fp_mul(gen(1), x12(s)), gen(0))};
  p.dimension = 8;
  return p;
}

inline Presentation rank1_nichols() {
  Presentation p;
  p.name = "taft";
  p.generators = {"x"};
  p.gen_degrees = {{1}};
  p.q = {{Rational(-1)}};
  p.relations = {fp_pow(gen(0), 2)};
  p.basis_names = {"1", "x"};
  p.basis = {fp_scalar(Scalar(1)), gen(0)};
  p.dimension = 2;
  return p;
}

inline SpacePtr a2_space() {
  static const SpacePtr space = make_space({"l1", "l2", "l12"});
  return space;
}
inline Scalar l1() { return Scalar::param(a2_space(), "l1"); }
inline Scalar l2() { return Scalar::param(a2_space(), "l2"); }
inline Scalar l12() { return Scalar::param(a2_space(), "l12"); }

// y1^2 = l1, y2^2 = l2, y12^2 = l12 with y12 = y1 y2 - q12 y2 y1.
inline Presentation a2_cleft(int s) {
  Presentation p = a2_nichols(s);
  p.name = "e";
  p.generators = {"y1", "y2"};
  p.space = a2_space();
  p.relations = {sub(fp_pow(gen(0), 2), fp_scalar(l1())), sub(fp_pow(gen(1), 2), fp_scalar(l2())),
                 sub(fp_pow(x12(s), 2), fp_scalar(l12()))};
  p.basis_names = {"1", "y1", "y2", "y12", "y2y1", "y2y12", "y12y1", "y2y12y1"};
  return p;
}

inline SpacePtr taft_space() {
  static const SpacePtr space = make_space({"l"});
  return space;
}

inline Presentation taft_cleft() {
  Presentation p = rank1_nichols();
  p.name = "e";
  p.generators = {"y"};
  p.space = taft_space();
  p.relations = {sub(fp_pow(gen(0), 2), fp_scalar(Scalar::param(taft_space(), "l")))};
  p.basis_names = {"1", "y"};
  return p;
}

struct A2 {
  std::shared_ptr<const BraidedBialgebra> b;
  CleftAlgebra c;
};

inline A2 a2(int s) {
  A2 out;
  out.b = std::make_shared<const BraidedBialgebra>(build_from_presentation(a2_nichols(s)));
  out.c = build_cleft(a2_cleft(s), out.b);
  return out;
}

}  // namespace fixtures
