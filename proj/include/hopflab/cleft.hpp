// Braided cleft objects: a deformed algebra E with a B-coaction, sections
// gamma: B -> E, and convolution in Hom(B, E).
#pragma once

#include <memory>
#include <vector>

#include "hopflab/braided.hpp"
#include "hopflab/functional.hpp"

namespace hopflab {

struct CleftAlgebra {
  Algebra e;
  std::shared_ptr<const BraidedBialgebra> b;
  std::vector<PairElement> coaction;  // delta(e_i) in E (x) B, as (E index, B index)

  std::size_t dim() const { return e.dim(); }
};

// Builds E from an inhomogeneous presentation with the same generators as B
// and extends delta(y_i) = y_i (x) 1 + 1 (x) x_i multiplicatively. Throws
// PresentationInconsistency when dim E != dim B.
CleftAlgebra build_cleft(const Presentation& p, std::shared_ptr<const BraidedBialgebra> b, Exec exec = Exec::Parallel);

// Coaction axioms: algebra map into the braided product E (x) B,
// (delta (x) id) delta = (id (x) Delta) delta, and counitality.
CheckResult check_coaction(const CleftAlgebra& c);

// Linear map B -> E, one E-element per B basis element.
struct ComoduleMap {
  std::vector<Element> image;
  bool normalized() const;
};

struct SectionSolution {
  ComoduleMap gamma;
  // Per B basis element, the unknowns (E basis indices) left free and set to 0.
  std::vector<std::vector<std::size_t>> free;
};

// Solves the colinearity equations degree by degree with gamma(1) = 1 and
// gamma(x_i) = y_i. Throws NotCleft if some degree has no solution.
SectionSolution solve_section(const CleftAlgebra& c);

// (f * g)(b) = f(b_(1)) g(b_(2)) in Hom(B, E).
ComoduleMap convolve_maps(const ComoduleMap& f, const ComoduleMap& g, const CleftAlgebra& c);
ComoduleMap convolution_inverse_map(const ComoduleMap& f, const CleftAlgebra& c);
// f * g = unit o counit on every basis element.
CheckResult check_unit_counit(const ComoduleMap& fg, const CleftAlgebra& c);

CheckResult check_colinear(const ComoduleMap& f, const CleftAlgebra& c);
// gamma(g . b) = g . gamma(b) for the diagonal actions of the designated
// group-likes g_1..g_theta, read off multidegrees.
CheckResult check_h_linear(const ComoduleMap& f, const CleftAlgebra& c);

// sigma(a, b) = chi(a2, b1) gamma(a1) gamma(b1) gamma^-1(a2 b2), read off in
// the braided setting. Throws NotCleft if some value is not a scalar.
Functional cocycle_from_section_braided(const ComoduleMap& gamma, const ComoduleMap& gamma_inv, const CleftAlgebra& c);

// sigma(x, b) = gamma(x_(-1) . b_(1)) gamma^-1(x_(0) b_(2)) for primitive x.
Scalar primitive_row(const ComoduleMap& gamma, const ComoduleMap& gamma_inv, const CleftAlgebra& c, std::size_t x,
                     std::size_t b);

// Named-entry constructor, e.g. {{"x12x1", {{"y12y1", 1}, {"y2", c}}}}.
ComoduleMap map_from_entries(const CleftAlgebra& c,
                             const std::vector<std::pair<std::string, std::vector<std::pair<std::string, Scalar>>>>& entries);

}  // namespace hopflab
