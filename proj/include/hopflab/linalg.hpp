// Exact linear algebra: rational kernels and solves, unit-pivot solves over
// Q[params], univariate common roots, and bounded-degree ideal membership.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hopflab/scalar.hpp"

namespace hopflab {

using RVec = std::vector<Rational>;

struct LinearSystem {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<RVec> a;

  LinearSystem() = default;
  LinearSystem(std::size_t r, std::size_t c) : rows(r), cols(c), a(r, RVec(c)) {}
  Rational& at(std::size_t r, std::size_t c) { return a[r][c]; }
  const Rational& at(std::size_t r, std::size_t c) const { return a[r][c]; }
  void add_row(RVec row);
};

// Kernel basis by fraction-free Gauss-Jordan elimination on integer rows.
std::vector<RVec> nullspace(const LinearSystem& sys);
std::size_t rank(const LinearSystem& sys);
// One solution of sys * x = rhs (free variables 0), or nullopt.
std::optional<RVec> solve(const LinearSystem& sys, const RVec& rhs);
RVec mat_vec(const LinearSystem& sys, const RVec& x);

using SMatrix = std::vector<std::vector<Scalar>>;

struct UnitPivotSolution {
  std::vector<Scalar> x;
  std::vector<std::size_t> free_vars;  // set to 0
};

// Solve A x = b over Q[params] using only nonzero rational pivots.
// nullopt: inconsistent. Throws NotConstant if a non-unit pivot would be needed.
std::optional<UnitPivotSolution> solve_unit_pivot(SMatrix a, std::vector<Scalar> b);
// Inverse of a square matrix over Q[params] (unit pivots only).
SMatrix invert_unit_pivot(const SMatrix& a);

// Univariate polynomials as ascending rational coefficient lists.
using UPoly = RVec;
UPoly upoly_trim(UPoly p);
UPoly upoly_gcd(UPoly a, UPoly b);
std::vector<Rational> upoly_rational_roots(const UPoly& p);
std::string upoly_str(const UPoly& p, const std::string& var);

struct CommonRoot {
  enum class Kind { NoRoot, Roots, AlgebraicRoot, AllOfK };
  Kind kind = Kind::AllOfK;
  std::vector<Rational> roots;  // Roots: all rational roots of the gcd
  UPoly gcd;                    // monic gcd (empty when every t solves)
  std::string variable;
  std::string describe() const;
};

// Common roots of univariate polynomials in one parameter.
CommonRoot solve_common_root_1var(const std::vector<Scalar>& polys);

// Certificate target = sum h_j * gens_j with deg(h_j gens_j) <= degree_bound.
std::optional<std::vector<Scalar>> ideal_membership(const std::vector<Scalar>& gens, const Scalar& target,
                                                    unsigned degree_bound);

}  // namespace hopflab
