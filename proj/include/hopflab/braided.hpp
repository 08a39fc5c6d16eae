// Finite-dimensional diagonally braided bialgebras built from presentations:
// PBW basis, multiplication by rewriting, comultiplication in the braided
// tensor square, and the multidegree-encoded Yetter-Drinfeld structure.
#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hopflab/exec.hpp"
#include "hopflab/linalg.hpp"
#include "hopflab/rewriting.hpp"
#include "hopflab/scalar.hpp"

namespace hopflab {

using MultiDegree = std::vector<int>;
using QMatrix = std::vector<std::vector<Rational>>;

// Sparse combinations of basis indices; zero coefficients are never stored.
using Element = std::map<std::size_t, Scalar>;
using PairElement = std::map<std::pair<std::size_t, std::size_t>, Scalar>;

void add_to(Element& e, std::size_t i, const Scalar& c);
void add_to(PairElement& e, std::size_t i, std::size_t j, const Scalar& c);
void add_scaled(Element& acc, const Element& e, const Scalar& c);
void add_scaled(PairElement& acc, const PairElement& e, const Scalar& c);
Element basis_element(std::size_t i);
bool elements_equal(const Element& a, const Element& b);
bool pairs_equal(const PairElement& a, const PairElement& b);

// chi-scalar(d, e) = prod_ij q_ij^(d_i e_j).
Rational braiding_scalar(const QMatrix& q, const MultiDegree& d, const MultiDegree& e);
MultiDegree degree_sum(const MultiDegree& a, const MultiDegree& b);

struct Presentation {
  std::string name;
  std::vector<std::string> generators;
  std::vector<MultiDegree> gen_degrees;
  QMatrix q;
  std::vector<FreePoly> relations;   // each read as "poly = 0"
  std::vector<std::string> basis_names;
  std::vector<FreePoly> basis;       // optional declared PBW basis
  std::size_t dimension = 0;
  SpacePtr space;
};

// Finite-dimensional algebra with a chosen basis, built by rewriting.
class Algebra {
 public:
  std::string name;
  std::vector<std::string> gen_names;
  std::vector<MultiDegree> gen_degrees;
  QMatrix q;
  SpacePtr space;
  std::vector<std::string> basis_names;
  std::vector<MultiDegree> degree;          // formal multidegree per basis element
  std::vector<std::vector<Element>> mult;   // mult[i][j] = b_i * b_j
  std::vector<Element> generator;           // generator k in basis coordinates
  RewriteSystem rewriting;
  std::vector<Word> normal_words;
  SMatrix basis_in_words;                   // [word][basis]
  SMatrix words_in_basis;                   // [basis][word]

  std::size_t dim() const { return basis_names.size(); }
  std::size_t theta() const { return gen_names.size(); }
  Element from_free(const FreePoly& p) const;
  Element multiply(const Element& u, const Element& v) const;
  int total_degree(std::size_t i) const;
  Rational chi(std::size_t i, std::size_t j) const { return braiding_scalar(q, degree[i], degree[j]); }
  // Index of the basis element named `n`, or throws.
  std::size_t index_of(const std::string& n) const;
};

Algebra build_algebra(const Presentation& p);

class BraidedBialgebra : public Algebra {
 public:
  std::vector<PairElement> delta;  // delta[i] = Delta(b_i)
  Scalar counit(std::size_t i) const { return i == 0 ? Scalar(1) : Scalar(); }
};

// Throws PresentationInconsistency / IncompleteRewriting on failure.
BraidedBialgebra build_from_presentation(const Presentation& p, Exec exec = Exec::Parallel);

Element multiply(const Algebra& a, const Element& u, const Element& v);
PairElement comultiply(const BraidedBialgebra& b, const Element& u);
PairElement restricted_comult(const BraidedBialgebra& b, const Element& u);
// g^a acting on a basis element of multidegree d multiplies by prod q_ij^(a_i d_j).
Rational action_scalar(const QMatrix& q, const std::vector<int>& g, const MultiDegree& d);
Element yd_action(const Algebra& a, const std::vector<int>& g, const Element& u);

// (a (x) b)(c (x) d) = chi(deg b, deg c) ac (x) bd.
PairElement braided_tensor_product(const Algebra& left, const Algebra& right, const PairElement& u,
                                   const PairElement& v);
// Extends generator images multiplicatively along the PBW words of `src`.
std::vector<PairElement> extend_multiplicatively(const Algebra& src, const Algebra& left, const Algebra& right,
                                                 const std::vector<PairElement>& gen_images);

struct CheckResult {
  bool ok = true;
  std::string detail;
};

CheckResult check_associativity(const Algebra& a, Exec exec = Exec::Parallel);
CheckResult check_associativity_serial(const Algebra& a);
CheckResult check_coassociativity(const BraidedBialgebra& b);
CheckResult check_restricted_coassociativity(const BraidedBialgebra& b);
CheckResult check_counit(const BraidedBialgebra& b);
CheckResult check_delta_multiplicative(const BraidedBialgebra& b, Exec exec = Exec::Parallel);
CheckResult check_grading(const BraidedBialgebra& b);
CheckResult check_yd_automorphisms(const BraidedBialgebra& b);

}  // namespace hopflab
