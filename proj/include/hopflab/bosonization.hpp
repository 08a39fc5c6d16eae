// Bosonization A = B # k Gamma for a finite abelian group Gamma with a
// principal realization, the factored cocycles sigma = sigma_B # eps, and the
// deformed products of A.
#pragma once

#include <array>
#include <string>
#include <vector>

#include "hopflab/braided.hpp"
#include "hopflab/cleft.hpp"
#include "hopflab/functional.hpp"

namespace hopflab {

// Gamma = Z/n_1 x ... x Z/n_r. Characters are given on the factor generators;
// chi_j(g_i) = q_ij is checked by validate().
struct GroupData {
  std::vector<int> orders;
  std::vector<std::vector<int>> g;           // designated g_1..g_theta, exponents per factor
  std::vector<std::vector<Rational>> chars;  // chars[j][f] = chi_j(generator of factor f)

  std::size_t order() const;
  std::vector<int> element(std::size_t index) const;
  std::size_t index(const std::vector<int>& exps) const;  // exponents reduced mod orders
  std::size_t multiply(std::size_t a, std::size_t b) const;
  std::size_t inverse(std::size_t a) const;
  // g^d = prod g_i^(d_i)
  std::size_t power_of_generators(const MultiDegree& d) const;
  Rational character(std::size_t j, std::size_t h) const;
  // h acting on an element of multidegree d: prod_j chi_j(h)^(d_j).
  Rational act(std::size_t h, const MultiDegree& d) const;
  std::string element_name(std::size_t h) const;

  // Throws Realization when chi_j(g_i) != q_ij or a character is not defined
  // on its factor.
  void validate(const QMatrix& q) const;
};

// Cyclic factors Z/n, one per generator, g_i the i-th factor generator and
// chi_j(g_i) = q_ij.
GroupData diagonal_realization(const QMatrix& q, const std::vector<int>& orders);

// Every inhomogeneous relation of a cleft presentation must be stable under
// Gamma: all its words carry the same character (e.g. chi_i^2 = eps for
// y_i^2 = lambda_i with lambda_i possibly nonzero). Throws Realization.
void check_cleft_realization(const GroupData& group, const Presentation& cleft, const QMatrix& q);

// The smash product (b # h)(c # k) = b (h . c) # hk on base (x) k Gamma.
// Basis index b * |Gamma| + h.
class SmashAlgebra {
 public:
  SmashAlgebra(const Algebra& base, const GroupData& group);
  const Algebra& base() const { return *base_; }
  const GroupData& group() const { return *group_; }
  std::size_t dim() const { return base_->dim() * group_->order(); }
  std::size_t index(std::size_t b, std::size_t h) const { return b * group_->order() + h; }
  std::size_t part_b(std::size_t i) const { return i / group_->order(); }
  std::size_t part_h(std::size_t i) const { return i % group_->order(); }
  std::string name(std::size_t i) const;

  Element multiply(const Element& u, const Element& v) const;
  Element multiply_basis(std::size_t i, std::size_t j) const;

 private:
  const Algebra* base_;
  const GroupData* group_;
};

Element smash_product(const SmashAlgebra& a, const Element& u, const Element& v);
// Delta(x # h) = x_(1) # g^deg(x_(2)) h (x) x_(2) # h; the base must be `b`.
PairElement smash_coproduct(const SmashAlgebra& a, const BraidedBialgebra& b, const Element& u);
Scalar smash_counit(const SmashAlgebra& a, const Element& u);

struct TripleTerm {
  std::size_t i, j, k;
  Scalar coef;
};
std::vector<TripleTerm> smash_coproduct3(const SmashAlgebra& a, const BraidedBialgebra& b, std::size_t x);

// sigma(a h, b k) = sigma_B(a, h . b) eps(k).
Scalar factored_value(const Functional& sigma_b, const SmashAlgebra& a, std::size_t u, std::size_t v);

// x ._sigma y = sigma(x1, y1) x2 y2 sigma^-1(x3, y3), with sigma^-1 the
// factored form of the braided inverse of sigma_B.
Element deform_product(const SmashAlgebra& a, const BraidedBialgebra& b, const Functional& sigma_b,
                       const Functional& sigma_b_inv, const Element& u, const Element& v);
// x .(sigma) y = sigma(x1, y1) x2 y2.
Element cleft_multiply(const SmashAlgebra& a, const BraidedBialgebra& b, const Functional& sigma_b, const Element& u,
                       const Element& v);

// (sigma * tau)(x, y) on A (x) A with the ordinary (unbraided) coproduct of A,
// evaluated at one basis pair.
Scalar convolve_factored_at(const SmashAlgebra& a, const BraidedBialgebra& b, const Functional& sigma_b,
                            const Functional& tau_b, std::size_t x, std::size_t y);

// Cocycle of a section computed in the bosonized cleft object C = E # k Gamma:
// sigma(u, v) = gamma_A(u1) gamma_A(v1) gamma_A^-1(u2 v2) with gamma_A = gamma # id.
// Returns the values on (a # h, b # k) for every pair of listed A-indices.
struct BosonizedCocycle {
  Functional sigma_b;  // restriction to B # 1 (x) B # 1
  std::vector<std::array<std::size_t, 2>> extra_pairs;
  std::vector<Scalar> extra_values;
};
BosonizedCocycle cocycle_from_section(const ComoduleMap& gamma, const CleftAlgebra& c, const GroupData& group,
                                      const std::vector<std::array<std::size_t, 2>>& extra_pairs = {});

// Exact check of the cocycle identity sigma(x1, y1) sigma(x2 y2, z) =
// sigma(y1, z1) sigma(x, y2 z2) on all triples of A-basis elements, for a
// rational sigma_B. Equivalent form: sigma(x .(sigma) y, z) = sigma(x, y .(sigma) z).
struct BosonizedCheck {
  bool ok = true;
  std::array<std::size_t, 3> first{};
  std::size_t triples = 0;
};
BosonizedCheck check_bosonized_cocycle(const SmashAlgebra& a, const BraidedBialgebra& b, const Functional& sigma_b,
                                       Exec exec = Exec::Parallel);
BosonizedCheck check_bosonized_cocycle_serial(const SmashAlgebra& a, const BraidedBialgebra& b,
                                              const Functional& sigma_b);

// Relations of the deformed bosonization (B # k Gamma)_sigma, read off sigma_B:
// a_i^2 = sigma(x_i, x_i)(1 - g_i^2) for every generator with x_i^2 = 0, and
// when B has a basis element x12 = x1 x2 - q12 x2 x1, with a12 = a1 a2 - q12 a2 a1,
// a12^2 = l12 (1 - g1^2 g2^2) + 4 q12 l1 l2 g2^2 (1 - g1^2).
struct RelationCheck {
  std::string name;
  bool ok = true;
  std::string lhs, rhs;
};
std::vector<RelationCheck> check_deformed_relations(const SmashAlgebra& a, const BraidedBialgebra& b,
                                                    const Functional& sigma_b);
std::string element_str(const SmashAlgebra& a, const Element& u);

}  // namespace hopflab
