#include "hopflab/functional.hpp"

#include <algorithm>
#include <array>
#include <numeric>

#include "hopflab/errors.hpp"

namespace hopflab {

Tables make_tables(const BraidedBialgebra& b) {
  Tables t;
  t.n = b.dim();
  for (std::size_t i = 0; i < t.n; ++i) t.total_degree.push_back(b.total_degree(i));
  t.delta.resize(t.n);
  for (std::size_t i = 0; i < t.n; ++i)
    for (const auto& [lr, c] : b.delta[i]) t.delta[i].push_back({lr.first, lr.second, c.constant_value()});
  t.mult.resize(t.n * t.n);
  t.chi.resize(t.n * t.n);
  for (std::size_t i = 0; i < t.n; ++i)
    for (std::size_t j = 0; j < t.n; ++j) {
      for (const auto& [k, c] : b.mult[i][j]) t.mult[i * t.n + j].emplace_back(k, c.constant_value());
      t.chi[i * t.n + j] = b.chi(i, j);
    }
  return t;
}

static std::size_t ipow(std::size_t base, std::size_t e) {
  std::size_t r = 1;
  for (std::size_t i = 0; i < e; ++i) r *= base;
  return r;
}

Functional::Functional(std::size_t arity, std::size_t dim) : arity_(arity), dim_(dim), values_(ipow(dim, arity)) {
  if (arity == 0) throw HopflabError(ErrorKind::Internal, "functional of arity 0");
}

Functional Functional::counit(std::size_t arity, std::size_t dim) {
  Functional f(arity, dim);
  f.values_[0] = Scalar(1);
  return f;
}

std::vector<std::size_t> Functional::legs(std::size_t flat) const {
  std::vector<std::size_t> out(arity_);
  for (std::size_t k = arity_; k-- > 0;) {
    out[k] = flat % dim_;
    flat /= dim_;
  }
  return out;
}

std::size_t Functional::flat(const std::vector<std::size_t>& legs) const {
  std::size_t f = 0;
  for (std::size_t l : legs) f = f * dim_ + l;
  return f;
}

bool Functional::is_zero() const {
  return std::all_of(values_.begin(), values_.end(), [](const Scalar& s) { return s.is_zero(); });
}

void Functional::require_same_shape(const Functional& o) const {
  if (arity_ != o.arity_ || dim_ != o.dim_) throw HopflabError(ErrorKind::Input, "functional arity or dimension mismatch");
}

Functional Functional::operator+(const Functional& o) const {
  require_same_shape(o);
  Functional r = *this;
  for (std::size_t i = 0; i < size(); ++i) r.values_[i] += o.values_[i];
  return r;
}

Functional Functional::operator-(const Functional& o) const {
  require_same_shape(o);
  Functional r = *this;
  for (std::size_t i = 0; i < size(); ++i) r.values_[i] -= o.values_[i];
  return r;
}

Functional Functional::operator-() const { return scaled(Scalar(-1)); }

Functional Functional::scaled(const Scalar& c) const {
  Functional r = *this;
  for (auto& v : r.values_) v = v * c;
  return r;
}

Functional Functional::substitute(const std::map<std::string, Rational>& binding) const {
  Functional r = *this;
  for (auto& v : r.values_) v = v.substitute(binding);
  return r;
}

Functional Functional::compose(const std::map<std::string, Scalar>& binding, const SpacePtr& target) const {
  Functional r = *this;
  for (auto& v : r.values_) v = v.compose(binding, target);
  return r;
}

bool operator==(const Functional& a, const Functional& b) {
  if (a.arity_ != b.arity_ || a.dim_ != b.dim_) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a.values_[i] != b.values_[i]) return false;
  return true;
}

namespace {

constexpr std::size_t kMaxArity = 8;

// Visits every term of the tuple coproduct as (left, right, chosen terms);
// coefficients are left to the caller so zero pairs cost no arithmetic.
template <class F>
void visit_tuple_coproduct(const Tables& t, std::size_t arity, std::size_t flat, F&& fn) {
  if (arity > kMaxArity) throw HopflabError(ErrorKind::Unsupported, "arity above 8");
  std::array<std::size_t, kMaxArity> legs{};
  for (std::size_t k = arity; k-- > 0;) {
    legs[k] = flat % t.n;
    flat /= t.n;
  }
  std::array<const CoTerm*, kMaxArity> chosen{};
  auto rec = [&](auto&& self, std::size_t k, std::size_t l, std::size_t r) -> void {
    if (k == arity) {
      fn(l, r, chosen);
      return;
    }
    for (const auto& term : t.delta[legs[k]]) {
      chosen[k] = &term;
      self(self, k + 1, l * t.n + term.left, r * t.n + term.right);
    }
  };
  rec(rec, 0, 0, 0);
}

// coef(l_1 r_1) ... coef(l_k r_k) times chi(r_i, l_j) over i < j.
Rational tuple_coef(const Tables& t, std::size_t arity, const std::array<const CoTerm*, kMaxArity>& chosen) {
  Rational c = chosen[0]->coef;
  for (std::size_t j = 1; j < arity; ++j) {
    c *= chosen[j]->coef;
    for (std::size_t i = 0; i < j; ++i) c *= t.braid(chosen[i]->right, chosen[j]->left);
  }
  return c;
}

}  // namespace

std::vector<TupleTerm> tuple_coproduct(const Tables& t, std::size_t arity, std::size_t flat) {
  std::vector<TupleTerm> out;
  visit_tuple_coproduct(t, arity, flat, [&](std::size_t l, std::size_t r, const auto& chosen) {
    Rational c = tuple_coef(t, arity, chosen);
    if (c != 0) out.push_back({l, r, std::move(c)});
  });
  return out;
}

static void require_convolvable(const Functional& f, const Functional& g, const Tables& t) {
  if (f.arity() != g.arity()) throw HopflabError(ErrorKind::Input, "convolution of functionals of different arity");
  if (f.dim() != t.n || g.dim() != t.n) throw HopflabError(ErrorKind::Input, "functional dimension mismatch");
}

Functional convolve(const Functional& f, const Functional& g, const Tables& t, Exec exec) {
  require_convolvable(f, g, t);
  Functional out(f.arity(), f.dim());
  const std::size_t block = out.size() / t.n;
  // One task per first leg keeps scheduling coarse.
  for_each_index(t.n, exec, [&](std::size_t lead) {
    for (std::size_t x = lead * block; x < (lead + 1) * block; ++x) {
      Scalar acc;
      visit_tuple_coproduct(t, f.arity(), x, [&](std::size_t l, std::size_t r, const auto& chosen) {
        const Scalar& a = f[l];
        if (a.is_zero()) return;
        const Scalar& b = g[r];
        if (b.is_zero()) return;
        acc += (a * b).scaled(tuple_coef(t, f.arity(), chosen));
      });
      out[x] = acc;
    }
  });
  return out;
}

Functional convolve_serial(const Functional& f, const Functional& g, const Tables& t) {
  require_convolvable(f, g, t);
  const std::size_t n = t.n;
  Functional out(f.arity(), n);
  switch (f.arity()) {
    case 1:
      for (std::size_t x = 0; x < n; ++x)
        for (const auto& dx : t.delta[x]) out.at(x) += (f.at(dx.left) * g.at(dx.right)).scaled(dx.coef);
      break;
    case 2:
      for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y)
          for (const auto& dx : t.delta[x])
            for (const auto& dy : t.delta[y]) {
              const Rational c = dx.coef * dy.coef * t.braid(dx.right, dy.left);
              out.at(x, y) += (f.at(dx.left, dy.left) * g.at(dx.right, dy.right)).scaled(c);
            }
      break;
    case 3:
      for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y)
          for (std::size_t z = 0; z < n; ++z)
            for (const auto& dx : t.delta[x])
              for (const auto& dy : t.delta[y])
                for (const auto& dz : t.delta[z]) {
                  const Rational c = dx.coef * dy.coef * dz.coef * t.braid(dx.right, dy.left) *
                                     t.braid(dx.right, dz.left) * t.braid(dy.right, dz.left);
                  out.at(x, y, z) +=
                      (f.at(dx.left, dy.left, dz.left) * g.at(dx.right, dy.right, dz.right)).scaled(c);
                }
      break;
    default:
      throw HopflabError(ErrorKind::Unsupported, "serial convolution supports arity 1 to 3");
  }
  return out;
}

Functional convolution_inverse(const Functional& f, const Tables& t) {
  if (f.dim() != t.n) throw HopflabError(ErrorKind::Input, "functional dimension mismatch");
  const Scalar& unit = f[0];
  if (unit.is_zero() || !unit.is_constant())
    throw HopflabError(ErrorKind::NotInvertible, "value at the unit is " + unit.str() + ", not an invertible constant");
  const Rational inv = Rational(1) / unit.constant_value();

  Functional g(f.arity(), f.dim());
  std::vector<std::size_t> order(g.size());
  std::iota(order.begin(), order.end(), 0);
  auto degree = [&](std::size_t flat) {
    int d = 0;
    for (std::size_t l : g.legs(flat)) d += t.total_degree[l];
    return d;
  };
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return degree(a) < degree(b); });
  for (std::size_t x : order) {
    // f(1) g(x) + sum over strictly positive left legs = eps(x).
    Scalar acc = x == 0 ? Scalar(1) : Scalar();
    visit_tuple_coproduct(t, f.arity(), x, [&](std::size_t l, std::size_t r, const auto& chosen) {
      if (l == 0) return;
      const Scalar& a = f[l];
      if (a.is_zero() || g[r].is_zero()) return;
      acc -= (a * g[r]).scaled(tuple_coef(t, f.arity(), chosen));
    });
    g[x] = acc.scaled(inv);
  }
  return g;
}

Functional compose_mult_right(const Functional& eta, const Tables& t) {
  Functional out(3, t.n);
  for (std::size_t x = 0; x < t.n; ++x)
    for (std::size_t y = 0; y < t.n; ++y)
      for (std::size_t z = 0; z < t.n; ++z) {
        Scalar acc;
        for (const auto& [k, c] : t.product(y, z)) acc += eta.at(x, k).scaled(c);
        out.at(x, y, z) = acc;
      }
  return out;
}

Functional compose_mult_left(const Functional& eta, const Tables& t) {
  Functional out(3, t.n);
  for (std::size_t x = 0; x < t.n; ++x)
    for (std::size_t y = 0; y < t.n; ++y)
      for (std::size_t z = 0; z < t.n; ++z) {
        Scalar acc;
        for (const auto& [k, c] : t.product(x, y)) acc += eta.at(k, z).scaled(c);
        out.at(x, y, z) = acc;
      }
  return out;
}

Functional compose_mult(const Functional& alpha, const Tables& t) {
  Functional out(2, t.n);
  for (std::size_t x = 0; x < t.n; ++x)
    for (std::size_t y = 0; y < t.n; ++y) {
      Scalar acc;
      for (const auto& [k, c] : t.product(x, y)) acc += alpha.at(k).scaled(c);
      out.at(x, y) = acc;
    }
  return out;
}

Functional tensor(const Functional& f, const Functional& g) {
  if (f.dim() != g.dim()) throw HopflabError(ErrorKind::Input, "functional dimension mismatch");
  Functional out(f.arity() + g.arity(), f.dim());
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (f[i].is_zero()) continue;
    for (std::size_t j = 0; j < g.size(); ++j) out[i * g.size() + j] = f[i] * g[j];
  }
  return out;
}

bool is_normalized(const Functional& f) {
  if (f.arity() != 2) throw HopflabError(ErrorKind::Input, "normalization is defined for bilinear forms");
  for (std::size_t b = 0; b < f.dim(); ++b) {
    const Scalar e = b == 0 ? Scalar(1) : Scalar();
    if (f.at(0, b) != e || f.at(b, 0) != e) return false;
  }
  return true;
}

FunctionalDiff compare(const Functional& a, const Functional& b) {
  FunctionalDiff d;
  if (a.arity() != b.arity() || a.dim() != b.dim()) throw HopflabError(ErrorKind::Input, "comparing functionals of different shape");
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != b[i]) {
      d.equal = false;
      d.first = a.legs(i);
      d.lhs = a[i];
      d.rhs = b[i];
      break;
    }
  return d;
}

Functional functional_from_entries(const Algebra& b,
                                   const std::vector<std::tuple<std::string, std::string, Scalar>>& entries) {
  Functional f(2, b.dim());
  for (const auto& [x, y, v] : entries) f.at(b.index_of(x), b.index_of(y)) += v;
  return f;
}

}  // namespace hopflab
