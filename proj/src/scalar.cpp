#include "hopflab/scalar.hpp"

#include <algorithm>
#include <sstream>

#include "hopflab/errors.hpp"

namespace hopflab {

Rational parse_rational(const std::string& text) {
  Rational r;
  if (r.set_str(text, 10) != 0) throw HopflabError(ErrorKind::Input, "not a rational number: " + text);
  r.canonicalize();
  return r;
}

std::string rational_str(const Rational& r) { return r.get_str(); }

ParamSpace::ParamSpace(std::vector<std::string> names) : names_(std::move(names)) {
  if (names_.size() > kMaxParams) throw HopflabError(ErrorKind::Input, "too many parameters (max 8)");
  for (std::size_t i = 0; i < names_.size(); ++i)
    for (std::size_t j = i + 1; j < names_.size(); ++j)
      if (names_[i] == names_[j]) throw HopflabError(ErrorKind::Input, "duplicate parameter " + names_[i]);
}

int ParamSpace::index_of(const std::string& name) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return static_cast<int>(i);
  return -1;
}

SpacePtr make_space(std::vector<std::string> names) { return std::make_shared<const ParamSpace>(std::move(names)); }

unsigned mono_exp(Monomial m, std::size_t k) { return static_cast<unsigned>((m >> (8 * (7 - k))) & 0xffu); }

Monomial mono_with_exp(Monomial m, std::size_t k, unsigned e) {
  if (e > 127) throw HopflabError(ErrorKind::Internal, "exponent overflow");
  const int shift = 8 * (7 - static_cast<int>(k));
  m &= ~(Monomial{0xff} << shift);
  return m | (Monomial{e} << shift);
}

unsigned mono_degree(Monomial m) {
  unsigned d = 0;
  for (std::size_t k = 0; k < 8; ++k) d += mono_exp(m, k);
  return d;
}

static Monomial mono_mul(Monomial a, Monomial b) {
  constexpr Monomial kHigh = 0x8080808080808080ULL;
  const Monomial s = a + b;
  if ((a & kHigh) || (b & kHigh) || (s & kHigh)) throw HopflabError(ErrorKind::Internal, "exponent overflow");
  return s;
}

Scalar::Scalar(long v) {
  if (v != 0) terms_.emplace(0, Rational(v));
}

// GMP expects canonical rationals; values built as mpq_class(n, d) are not.
static Rational canonical(Rational r) {
  r.canonicalize();
  return r;
}

Scalar::Scalar(const Rational& v) {
  if (v != 0) terms_.emplace(0, canonical(v));
}

Scalar Scalar::param(const SpacePtr& space, const std::string& name) {
  const int k = space->index_of(name);
  if (k < 0) throw HopflabError(ErrorKind::Input, "unknown parameter " + name);
  return param(space, static_cast<std::size_t>(k));
}

Scalar Scalar::param(const SpacePtr& space, std::size_t index) {
  Scalar s;
  s.space_ = space;
  s.terms_.emplace(mono_with_exp(0, index, 1), Rational(1));
  return s;
}

Scalar Scalar::monomial(const SpacePtr& space, Monomial m, const Rational& c) {
  Scalar s;
  s.space_ = space;
  if (c != 0) s.terms_.emplace(m, canonical(c));
  return s;
}

bool Scalar::is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 0); }

Rational Scalar::constant_value() const {
  if (!is_constant()) throw HopflabError(ErrorKind::NotConstant, "expected a rational constant, got " + str());
  return coefficient(0);
}

Rational Scalar::coefficient(Monomial m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

unsigned Scalar::total_degree() const {
  unsigned d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, mono_degree(m));
  return d;
}

unsigned Scalar::degree_in(std::size_t k) const {
  unsigned d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, mono_exp(m, k));
  return d;
}

std::vector<std::size_t> Scalar::variables() const {
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k < 8; ++k)
    if (degree_in(k) > 0) out.push_back(k);
  return out;
}

// Constants are compatible with every space; two non-constant operands must
// share the parameter list.
SpacePtr Scalar::common_space(const Scalar& a, const Scalar& b) {
  if (!a.space_) return b.space_;
  if (!b.space_) return a.space_;
  if (a.space_ == b.space_ || a.space_->same_as(*b.space_)) return a.space_;
  if (a.is_constant()) return b.space_;
  if (b.is_constant()) return a.space_;
  throw HopflabError(ErrorKind::SpaceMismatch, "mismatched parameter lists");
}

void Scalar::add_term(Monomial m, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Scalar Scalar::operator-() const {
  Scalar r = *this;
  for (auto& [m, c] : r.terms_) c = -c;
  return r;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  space_ = common_space(*this, o);
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  space_ = common_space(*this, o);
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

Scalar operator*(const Scalar& a, const Scalar& b) {
  Scalar r;
  r.space_ = Scalar::common_space(a, b);
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) r.add_term(mono_mul(ma, mb), ca * cb);
  return r;
}

Scalar& Scalar::operator*=(const Scalar& o) { return *this = *this * o; }

bool operator==(const Scalar& a, const Scalar& b) {
  if (a.terms_ != b.terms_) return false;
  if (a.is_constant()) return true;
  return a.space_->same_as(*b.space_);
}

Scalar Scalar::pow(unsigned e) const {
  Scalar r(1);
  r.space_ = space_;
  for (unsigned i = 0; i < e; ++i) r *= *this;
  return r;
}

Scalar Scalar::scaled(const Rational& c) const {
  Scalar r;
  r.space_ = space_;
  const Rational cc = canonical(c);
  if (cc == 0) return r;
  for (const auto& [m, v] : terms_) r.terms_.emplace(m, v * cc);
  return r;
}

Scalar Scalar::substitute(const std::map<std::string, Rational>& binding) const {
  if (!space_) return *this;
  std::vector<std::pair<std::size_t, Rational>> bound;
  for (const auto& [name, v] : binding) {
    const int k = space_->index_of(name);
    if (k >= 0) bound.emplace_back(static_cast<std::size_t>(k), canonical(v));
  }
  Scalar r;
  r.space_ = space_;
  for (const auto& [m, c] : terms_) {
    Monomial mm = m;
    Rational cc = c;
    for (const auto& [k, v] : bound) {
      const unsigned e = mono_exp(m, k);
      if (e == 0) continue;
      Rational p(1);
      for (unsigned i = 0; i < e; ++i) p *= v;
      cc *= p;
      mm = mono_with_exp(mm, k, 0);
    }
    r.add_term(mm, cc);
  }
  return r;
}

Scalar Scalar::compose(const std::map<std::string, Scalar>& binding, const SpacePtr& target) const {
  Scalar r;
  r.space_ = target;
  for (const auto& [m, c] : terms_) {
    Scalar t(c);
    t.space_ = target;
    for (std::size_t k = 0; space_ && k < space_->size(); ++k) {
      const unsigned e = mono_exp(m, k);
      if (e == 0) continue;
      const std::string& name = space_->names()[k];
      auto it = binding.find(name);
      if (it != binding.end()) {
        t *= it->second.pow(e);
      } else {
        const int tk = target ? target->index_of(name) : -1;
        if (tk < 0) throw HopflabError(ErrorKind::SpaceMismatch, "parameter " + name + " missing from target space");
        t *= Scalar::param(target, static_cast<std::size_t>(tk)).pow(e);
      }
    }
    r += t;
  }
  return r;
}

Scalar Scalar::rebase(const SpacePtr& target) const { return compose({}, target); }

std::string Scalar::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const Monomial m = it->first;
    Rational c = it->second;
    const bool neg = c < 0;
    if (neg) c = -c;
    if (first) {
      if (neg) os << "-";
    } else {
      os << (neg ? " - " : " + ");
    }
    first = false;
    std::string mono;
    for (std::size_t k = 0; k < 8; ++k) {
      const unsigned e = mono_exp(m, k);
      if (e == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += space_->names()[k];
      if (e > 1) mono += "^" + std::to_string(e);
    }
    if (mono.empty()) {
      os << c.get_str();
    } else {
      if (c != 1) os << c.get_str() << "*";
      os << mono;
    }
  }
  return os.str();
}

}  // namespace hopflab
