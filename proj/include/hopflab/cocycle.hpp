// Braided Hopf 2-cocycles on B: verification, first-row recursion, and the
// gauge action of convolution units.
#pragma once

#include <vector>

#include "hopflab/bosonization.hpp"
#include "hopflab/functional.hpp"

namespace hopflab {

struct CocycleCheck {
  bool ok = true;
  bool normalized = true;
  std::vector<std::size_t> first;  // first failing triple
  Scalar lhs, rhs;
};

// (sigma (x) eps) * sigma(m (x) id) = (eps (x) sigma) * sigma(id (x) m) on all
// basis triples, plus normalization.
CocycleCheck is_hopf_cocycle(const Functional& sigma, const Tables& t, Exec exec = Exec::Parallel);
// Reference: expands both sides of the identity term by term.
CocycleCheck is_hopf_cocycle_serial(const Functional& sigma, const Tables& t);
// Nonzero entries of lhs - rhs of the identity, e.g. as polynomial conditions.
std::vector<Scalar> cocycle_defects(const Functional& sigma, const Tables& t, Exec exec = Exec::Parallel);

// Values sigma(x_k, b) for the generators x_k, as rows [k][b].
using FirstRow = std::vector<std::vector<Scalar>>;
FirstRow first_row(const Functional& sigma, const BraidedBialgebra& b);

// Rebuilds sigma from its first row, peeling the leftmost letter of every PBW
// word: sigma(x a', b) via sigma(x, -) and values on lower-degree a'.
Functional extend_from_first_row(const FirstRow& row, const BraidedBialgebra& b);

// One step of that recursion for a = x_k a' (a' an element of B+, b in B+).
Scalar peel_step(const Functional& sigma, const BraidedBialgebra& b, std::size_t k, const Element& a_rest,
                 std::size_t y);

// (alpha -> sigma)(x, y) = alpha(x1) alpha(y1) sigma(x2, y2) alpha^-1(x3 y3).
Functional act_unit(const Functional& alpha, const Functional& sigma, const Tables& t, Exec exec = Exec::Parallel);

// (alpha -> tau)(x, b) for primitive x from alpha, alpha^-1 and tau only:
// alpha(x_(-1) . b1) tau(x_(0), b2) alpha^-1(b3) + alpha(x_(-1) . b1) alpha^-1(x_(0) b2).
Scalar alpha_first_row(const Functional& alpha, const Functional& alpha_inv, const Functional& tau,
                       const BraidedBialgebra& b, std::size_t x, std::size_t y);

// alpha(h . b) = alpha(b): alpha vanishes on basis elements whose multidegree
// carries a nontrivial character of the group.
bool is_h_linear_unit(const Functional& alpha, const BraidedBialgebra& b, const GroupData& group);

}  // namespace hopflab
