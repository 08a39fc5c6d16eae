// Multilinear forms on a braided bialgebra and their convolution calculus.
// Forms of arity n live on B^(x)n with the braided tensor coalgebra structure:
// crossing the right leg of factor i past the left leg of factor j > i
// contributes chi(deg right_i, deg left_j).
#pragma once

#include <array>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "hopflab/braided.hpp"
#include "hopflab/exec.hpp"
#include "hopflab/scalar.hpp"

namespace hopflab {

struct CoTerm {
  std::size_t left;
  std::size_t right;
  Rational coef;
};

using SparseVec = std::vector<std::pair<std::size_t, Rational>>;

// Rational structure constants of a braided bialgebra, cached for the kernels.
struct Tables {
  std::size_t n = 0;
  std::vector<int> total_degree;
  std::vector<std::vector<CoTerm>> delta;  // Delta(b_i)
  std::vector<SparseVec> mult;             // mult[i * n + j] = b_i b_j
  std::vector<Rational> chi;               // chi[i * n + j] = chi(deg b_i, deg b_j)

  const SparseVec& product(std::size_t i, std::size_t j) const { return mult[i * n + j]; }
  const Rational& braid(std::size_t i, std::size_t j) const { return chi[i * n + j]; }
};

// Throws NotConstant if the bialgebra carries parameters in its structure.
Tables make_tables(const BraidedBialgebra& b);

class Functional {
 public:
  Functional() = default;
  Functional(std::size_t arity, std::size_t dim);
  // epsilon (x) ... (x) epsilon.
  static Functional counit(std::size_t arity, std::size_t dim);

  std::size_t arity() const { return arity_; }
  std::size_t dim() const { return dim_; }
  std::size_t size() const { return values_.size(); }

  Scalar& operator[](std::size_t flat) { return values_[flat]; }
  const Scalar& operator[](std::size_t flat) const { return values_[flat]; }
  Scalar& at(std::size_t i) { return values_[i]; }
  const Scalar& at(std::size_t i) const { return values_[i]; }
  Scalar& at(std::size_t i, std::size_t j) { return values_[i * dim_ + j]; }
  const Scalar& at(std::size_t i, std::size_t j) const { return values_[i * dim_ + j]; }
  Scalar& at(std::size_t i, std::size_t j, std::size_t k) { return values_[(i * dim_ + j) * dim_ + k]; }
  const Scalar& at(std::size_t i, std::size_t j, std::size_t k) const { return values_[(i * dim_ + j) * dim_ + k]; }

  // Flat index <-> leg indices.
  std::vector<std::size_t> legs(std::size_t flat) const;
  std::size_t flat(const std::vector<std::size_t>& legs) const;

  bool is_zero() const;
  Functional operator+(const Functional& o) const;
  Functional operator-(const Functional& o) const;
  Functional operator-() const;
  Functional scaled(const Scalar& c) const;
  Functional substitute(const std::map<std::string, Rational>& binding) const;
  Functional compose(const std::map<std::string, Scalar>& binding, const SpacePtr& target) const;
  friend bool operator==(const Functional& a, const Functional& b);
  friend bool operator!=(const Functional& a, const Functional& b) { return !(a == b); }

  const std::vector<Scalar>& values() const { return values_; }

 private:
  void require_same_shape(const Functional& o) const;
  std::size_t arity_ = 0;
  std::size_t dim_ = 0;
  std::vector<Scalar> values_;
};

// Delta of a basis tuple in the braided tensor coalgebra B^(x)n, as
// (left tuple, right tuple, coefficient) with flat indices.
struct TupleTerm {
  std::size_t left;
  std::size_t right;
  Rational coef;
};
std::vector<TupleTerm> tuple_coproduct(const Tables& t, std::size_t arity, std::size_t flat);

// (f * g)(x) = f(x_(1)) g(x_(2)) in the braided tensor coalgebra.
Functional convolve(const Functional& f, const Functional& g, const Tables& t, Exec exec = Exec::Parallel);
// Term-by-term reference implementation.
Functional convolve_serial(const Functional& f, const Functional& g, const Tables& t);
// Two-sided inverse by graded recursion; throws NotInvertible when f(1,...,1)
// is zero or not a rational constant.
Functional convolution_inverse(const Functional& f, const Tables& t);

// Pullbacks along the multiplication.
Functional compose_mult_right(const Functional& eta, const Tables& t);  // (x,y,z) -> eta(x, yz)
Functional compose_mult_left(const Functional& eta, const Tables& t);   // (x,y,z) -> eta(xy, z)
Functional compose_mult(const Functional& alpha, const Tables& t);      // (x,y) -> alpha(xy)
// (x,y,...) -> f(x) g(y,...) and friends: the exterior product of forms.
Functional tensor(const Functional& f, const Functional& g);

// Normalization: f(1,b) = f(b,1) = eps(b).
bool is_normalized(const Functional& f);

struct FunctionalDiff {
  bool equal = true;
  std::vector<std::size_t> first;  // legs of the first differing entry
  Scalar lhs, rhs;
};
FunctionalDiff compare(const Functional& a, const Functional& b);

// Named matrix form of an arity-2 functional, e.g. for golden tables.
Functional functional_from_entries(const Algebra& b,
                                   const std::vector<std::tuple<std::string, std::string, Scalar>>& entries);

}  // namespace hopflab
