// Exact multivariate polynomials over Q in a declared, ordered parameter list.
#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <vector>

namespace hopflab {

using Rational = mpq_class;

Rational parse_rational(const std::string& text);
std::string rational_str(const Rational& r);

// Ordered list of parameter names. At most 8 parameters; exponents < 128.
class ParamSpace {
 public:
  static constexpr std::size_t kMaxParams = 8;
  explicit ParamSpace(std::vector<std::string> names);
  const std::vector<std::string>& names() const { return names_; }
  std::size_t size() const { return names_.size(); }
  int index_of(const std::string& name) const;
  bool same_as(const ParamSpace& other) const { return names_ == other.names_; }

 private:
  std::vector<std::string> names_;
};

using SpacePtr = std::shared_ptr<const ParamSpace>;
SpacePtr make_space(std::vector<std::string> names);

// Packed exponent vector: parameter k occupies byte (7 - k), so integer order
// on the packed value is lexicographic order on the parameter list.
using Monomial = std::uint64_t;
unsigned mono_exp(Monomial m, std::size_t k);
Monomial mono_with_exp(Monomial m, std::size_t k, unsigned e);
unsigned mono_degree(Monomial m);

class Scalar {
 public:
  Scalar() = default;
  Scalar(long v);  // NOLINT(google-explicit-constructor)
  Scalar(const Rational& v);  // NOLINT(google-explicit-constructor)

  static Scalar param(const SpacePtr& space, const std::string& name);
  static Scalar param(const SpacePtr& space, std::size_t index);
  static Scalar monomial(const SpacePtr& space, Monomial m, const Rational& c);

  const SpacePtr& space() const { return space_; }
  const std::map<Monomial, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  // Throws if not constant.
  Rational constant_value() const;
  Rational coefficient(Monomial m) const;
  unsigned total_degree() const;
  unsigned degree_in(std::size_t k) const;
  // Indices of parameters that actually occur.
  std::vector<std::size_t> variables() const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  friend bool operator==(const Scalar& a, const Scalar& b);
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

  Scalar pow(unsigned e) const;
  Scalar scaled(const Rational& c) const;
  // Partial evaluation; unbound parameters stay symbolic.
  Scalar substitute(const std::map<std::string, Rational>& binding) const;
  // Substitute polynomials for parameters (by name); result lives in `target`.
  Scalar compose(const std::map<std::string, Scalar>& binding, const SpacePtr& target) const;
  // Re-express in a space containing every parameter that occurs.
  Scalar rebase(const SpacePtr& target) const;

  // Canonical text, highest monomial first, e.g. "4*l1^2*l2 - l1*l12".
  std::string str() const;

 private:
  static SpacePtr common_space(const Scalar& a, const Scalar& b);
  void add_term(Monomial m, const Rational& c);

  SpacePtr space_;
  std::map<Monomial, Rational> terms_;
};

}  // namespace hopflab
