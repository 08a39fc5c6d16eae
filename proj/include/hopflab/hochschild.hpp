// Hochschild 2-cocycles with trivial coefficients, their group invariants and
// integral projection, convolution exponentials and the commutation
// conditions that make e^eta a Hopf cocycle.
#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "hopflab/bosonization.hpp"
#include "hopflab/functional.hpp"
#include "hopflab/linalg.hpp"

namespace hopflab {

// Multiplication and counit of an ordinary or braided algebra, which is all
// the Hochschild complex with coefficients in k needs.
struct HochschildData {
  std::size_t n = 0;
  std::vector<SparseVec> mult;  // mult[i * n + j]
  std::vector<Rational> eps;
};
HochschildData hochschild_data(const Tables& t);
HochschildData hochschild_data(const SmashAlgebra& a);

// eps(a) eta(b, c) + eta(a, bc) - eta(ab, c) - eta(a, b) eps(c).
Scalar hochschild_defect(const Functional& eta, const HochschildData& h, std::size_t a, std::size_t b, std::size_t c);
struct HochschildCheck {
  bool ok = true;
  std::array<std::size_t, 3> first{};
};
HochschildCheck is_hochschild_cocycle(const Functional& eta, const HochschildData& h, Exec exec = Exec::Parallel);
// (d f)(a, b) = eps(a) f(b) - f(ab) + f(a) eps(b).
Functional coboundary(const Functional& f, const HochschildData& h);

// The n^3 x n^2 linear system of the cocycle condition, rows in (a, b, c)
// order with all-zero rows dropped.
LinearSystem hochschild_system(const HochschildData& h, Exec exec = Exec::Parallel);

struct HochschildSpace {
  std::vector<Functional> cocycles;     // basis of Z^2
  std::vector<Functional> coboundaries; // basis of B^2
  std::size_t dim_z() const { return cocycles.size(); }
  std::size_t dim_b() const { return coboundaries.size(); }
  std::size_t dim_h() const { return cocycles.size() - coboundaries.size(); }
};
HochschildSpace solve_Z2(const HochschildData& h, Exec exec = Exec::Parallel);

// Linearly independent subfamily (first occurrences kept) of rational forms.
std::vector<Functional> independent_subset(const std::vector<Functional>& fs);
// Coordinates of f in the span of `basis`, or nullopt.
std::optional<RVec> coordinates(const Functional& f, const std::vector<Functional>& basis);

// Group action on forms over B through multidegrees:
// (g -> f)(a, b, ...) = f(g^-1 . a, g^-1 . b, ...).
Functional group_act(const Functional& f, const BraidedBialgebra& b, const GroupData& g, std::size_t h);
bool is_invariant(const Functional& f, const BraidedBialgebra& b, const GroupData& g);
// Average over the group; lands in the invariants and fixes them.
Functional stefan_project(const Functional& f, const BraidedBialgebra& b, const GroupData& g);
// Z^Gamma = projection of Z; invariant coboundaries d((C^1)^Gamma).
HochschildSpace invariant_subspace(const HochschildSpace& z, const HochschildData& h, const BraidedBialgebra& b,
                                   const GroupData& g);

// H^2(A, k) against H^2(B, k)^Gamma for A = B # k Gamma, both by elimination.
struct InvarianceCheck {
  std::size_t dim_h2_a = 0;
  std::size_t dim_h2_b_invariant = 0;
  bool equal() const { return dim_h2_a == dim_h2_b_invariant; }
};
// Throws Unsupported when A is too large for direct elimination.
InvarianceCheck stefan_invariance_iso_check(const BraidedBialgebra& b, const GroupData& g, Exec exec = Exec::Parallel);
// eta_A(a # h, b # k) = eta(a, h . b) eps(k).
Functional extend_to_smash(const Functional& eta, const SmashAlgebra& a);

// The distinguished cocycles: xi0 = eps (x) eps and
// xi^i_j(b, b') = delta(b, x_j) delta(x_i, b') for generators (0-based i, j).
Functional xi0(std::size_t n);
Functional xi(const BraidedBialgebra& b, std::size_t i, std::size_t j);
// A2 only: the degree-(2,2) cocycles, named by the basis of the A2 example.
Functional xi121(const BraidedBialgebra& b);
Functional xi212(const BraidedBialgebra& b);

struct EtaCoeffs {
  Scalar e0, e1, e2, e121, e212;
};
// e0 xi0 + e1 xi^1_1 + e2 xi^2_2 + e121 xi121 + e212 xi212.
Functional eta_from_coeffs(const BraidedBialgebra& b, const EtaCoeffs& c);

// e^eta = sum eta'^k / k! with eta' = eta - eta(1,1) xi0. `dropped` is the
// removed eta(1,1) (the overall factor e^dropped is not applied).
struct Exponential {
  Functional value;
  Scalar dropped;
};
Exponential exponential(const Functional& eta, const Tables& t, Exec exec = Exec::Parallel);

// conm1: (eta o (id (x) m)) * (eps (x) eta) = (eps (x) eta) * (eta o (id (x) m));
// conm2: (eta o (m (x) id)) * (eta (x) eps) = (eta (x) eps) * (eta o (m (x) id)).
struct CommutationReport {
  bool conm1 = true, conm2 = true;
  FunctionalDiff first1, first2;
  std::vector<Scalar> defects;  // nonzero entries of both differences
};
CommutationReport check_commutation(const Functional& eta, const Tables& t, Exec exec = Exec::Parallel);
CommutationReport check_commutation_serial(const Functional& eta, const Tables& t);

// At fixed (y, z) both sides of conm1 are combinations of the rows
// eta(x, w): sum_w u_w eta(x, w) and sum_w d_w eta(x, w). conm1 holds at
// (., y, z) iff rows_agree; equal families are sufficient, not necessary.
struct UdFamilies {
  std::vector<Scalar> u, d;
  bool equal = true;
  bool rows_agree = true;
};
UdFamilies ud_criterion(const Functional& eta, const Tables& t, std::size_t y, std::size_t z);

// C: e1 e2 = e1 e121 = e1 e212 = e2 e121 = e2 e212 = 0.
// Cbar: e1 e2 = e1 (e121 + e212) = e2 (e121 + e212) = 0.
std::vector<Scalar> c_generators(const EtaCoeffs& c);
std::vector<Scalar> cbar_generators(const EtaCoeffs& c);
struct Membership {
  bool in_c = false, in_cbar = false;
};
// Identically vanishing generators (use rational coefficients for a point).
Membership membership_C_Cbar(const EtaCoeffs& c);

// Both ideals contain each other's generators, certified by explicit
// combinations up to the degree bound.
bool same_ideal(const std::vector<Scalar>& a, const std::vector<Scalar>& b, unsigned degree_bound);

// beta = xi121 - xi212 = d(-f) with f dual to the top basis element.
struct Cobordism {
  Functional beta;
  Functional f;
  bool is_coboundary = false;      // beta = d(-f)
  bool matches_product = false;    // beta(b, b') = f(b b') on B+ x B+
};
Cobordism cobordism_witness(const BraidedBialgebra& b, const Tables& t);

}  // namespace hopflab
