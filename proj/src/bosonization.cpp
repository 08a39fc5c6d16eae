#include "hopflab/bosonization.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "hopflab/cocycle.hpp"
#include "hopflab/errors.hpp"

namespace hopflab {

static Rational rational_power(const Rational& base, long e) {
  Rational r(1);
  for (long i = 0; i < e; ++i) r *= base;
  return r;
}

std::size_t GroupData::order() const {
  std::size_t n = 1;
  for (int o : orders) n *= static_cast<std::size_t>(o);
  return n;
}

std::vector<int> GroupData::element(std::size_t index) const {
  std::vector<int> e(orders.size());
  for (std::size_t f = orders.size(); f-- > 0;) {
    e[f] = static_cast<int>(index % static_cast<std::size_t>(orders[f]));
    index /= static_cast<std::size_t>(orders[f]);
  }
  return e;
}

std::size_t GroupData::index(const std::vector<int>& exps) const {
  std::size_t idx = 0;
  for (std::size_t f = 0; f < orders.size(); ++f) {
    const int o = orders[f];
    const int e = ((exps[f] % o) + o) % o;
    idx = idx * static_cast<std::size_t>(o) + static_cast<std::size_t>(e);
  }
  return idx;
}

std::size_t GroupData::multiply(std::size_t a, std::size_t b) const {
  auto ea = element(a), eb = element(b);
  for (std::size_t f = 0; f < ea.size(); ++f) ea[f] += eb[f];
  return index(ea);
}

std::size_t GroupData::inverse(std::size_t a) const {
  auto e = element(a);
  for (int& x : e) x = -x;
  return index(e);
}

std::size_t GroupData::power_of_generators(const MultiDegree& d) const {
  std::vector<int> e(orders.size(), 0);
  for (std::size_t i = 0; i < d.size(); ++i)
    for (std::size_t f = 0; f < e.size(); ++f) e[f] += d[i] * g[i][f];
  return index(e);
}

Rational GroupData::character(std::size_t j, std::size_t h) const {
  const auto e = element(h);
  Rational r(1);
  for (std::size_t f = 0; f < e.size(); ++f) r *= rational_power(chars[j][f], e[f]);
  return r;
}

Rational GroupData::act(std::size_t h, const MultiDegree& d) const {
  Rational r(1);
  for (std::size_t j = 0; j < d.size(); ++j)
    if (d[j] != 0) r *= rational_power(character(j, h), d[j]);
  return r;
}

std::string GroupData::element_name(std::size_t h) const {
  const auto e = element(h);
  std::string s;
  for (std::size_t f = 0; f < e.size(); ++f) {
    if (e[f] == 0) continue;
    s += "g" + std::to_string(f + 1);
    if (e[f] != 1) s += "^" + std::to_string(e[f]);
  }
  return s.empty() ? "1" : s;
}

void GroupData::validate(const QMatrix& q) const {
  const std::size_t theta = q.size();
  if (g.size() != theta || chars.size() != theta)
    throw HopflabError(ErrorKind::Realization, "realization needs one group-like and one character per generator");
  for (std::size_t j = 0; j < theta; ++j) {
    if (chars[j].size() != orders.size() || g[j].size() != orders.size())
      throw HopflabError(ErrorKind::Realization, "realization data does not match the group factors");
    for (std::size_t f = 0; f < orders.size(); ++f)
      if (rational_power(chars[j][f], orders[f]) != 1)
        throw HopflabError(ErrorKind::Realization, "character chi" + std::to_string(j + 1) +
                                                       " is not defined on Z/" + std::to_string(orders[f]));
  }
  for (std::size_t i = 0; i < theta; ++i)
    for (std::size_t j = 0; j < theta; ++j)
      if (character(j, index(g[i])) != q[i][j])
        throw HopflabError(ErrorKind::Realization, "chi" + std::to_string(j + 1) + "(g" + std::to_string(i + 1) +
                                                       ") differs from q" + std::to_string(i + 1) + std::to_string(j + 1));
}

GroupData diagonal_realization(const QMatrix& q, const std::vector<int>& orders) {
  GroupData gd;
  const std::size_t theta = q.size();
  if (orders.size() != theta) throw HopflabError(ErrorKind::Realization, "one cyclic factor per generator expected");
  gd.orders = orders;
  gd.g.assign(theta, std::vector<int>(theta, 0));
  gd.chars.assign(theta, std::vector<Rational>(theta));
  for (std::size_t i = 0; i < theta; ++i) {
    gd.g[i][i] = 1;
    for (std::size_t j = 0; j < theta; ++j) gd.chars[j][i] = q[i][j];
  }
  gd.validate(q);
  return gd;
}

void check_cleft_realization(const GroupData& group, const Presentation& cleft, const QMatrix& q) {
  group.validate(q);
  for (std::size_t r = 0; r < cleft.relations.size(); ++r) {
    std::vector<MultiDegree> degs;
    for (const auto& [w, c] : cleft.relations[r]) degs.push_back(word_degree(w, cleft.gen_degrees));
    for (std::size_t a = 1; a < degs.size(); ++a)
      for (std::size_t h = 0; h < group.order(); ++h)
        if (group.act(h, degs[a]) != group.act(h, degs[0]))
          throw HopflabError(ErrorKind::Realization, "relation " + std::to_string(r + 1) +
                                                         " of the cleft object is not stable under the group (" +
                                                         group.element_name(h) + " acts differently on its terms)");
  }
}

SmashAlgebra::SmashAlgebra(const Algebra& base, const GroupData& group) : base_(&base), group_(&group) {
  if (group.g.size() != base.theta())
    throw HopflabError(ErrorKind::Realization, "group realization does not match the generators of " + base.name);
}

std::string SmashAlgebra::name(std::size_t i) const {
  const std::string b = base_->basis_names[part_b(i)];
  const std::string h = group_->element_name(part_h(i));
  if (h == "1") return b;
  if (b == "1") return h;
  return b + "#" + h;
}

Element SmashAlgebra::multiply_basis(std::size_t i, std::size_t j) const {
  const std::size_t b = part_b(i), h = part_h(i), c = part_b(j), k = part_h(j);
  const Rational s = group_->act(h, base_->degree[c]);
  const std::size_t hk = group_->multiply(h, k);
  Element out;
  for (const auto& [m, v] : base_->mult[b][c]) add_to(out, index(m, hk), v.scaled(s));
  return out;
}

Element SmashAlgebra::multiply(const Element& u, const Element& v) const {
  Element out;
  for (const auto& [i, a] : u)
    for (const auto& [j, b] : v) add_scaled(out, multiply_basis(i, j), a * b);
  return out;
}

Element smash_product(const SmashAlgebra& a, const Element& u, const Element& v) { return a.multiply(u, v); }

PairElement smash_coproduct(const SmashAlgebra& a, const BraidedBialgebra& b, const Element& u) {
  if (&a.base() != static_cast<const Algebra*>(&b)) throw HopflabError(ErrorKind::Internal, "smash coproduct over a different base");
  PairElement out;
  for (const auto& [i, c] : u) {
    const std::size_t x = a.part_b(i), h = a.part_h(i);
    for (const auto& [lr, v] : b.delta[x]) {
      const std::size_t mid = a.group().multiply(a.group().power_of_generators(b.degree[lr.second]), h);
      add_to(out, a.index(lr.first, mid), a.index(lr.second, h), c * v);
    }
  }
  return out;
}

Scalar smash_counit(const SmashAlgebra& a, const Element& u) {
  Scalar s;
  for (const auto& [i, c] : u)
    if (a.part_b(i) == 0) s += c;
  return s;
}

std::vector<TripleTerm> smash_coproduct3(const SmashAlgebra& a, const BraidedBialgebra& b, std::size_t x) {
  std::vector<TripleTerm> out;
  for (const auto& [lr, c] : smash_coproduct(a, b, basis_element(x)))
    for (const auto& [uv, d] : smash_coproduct(a, b, basis_element(lr.first)))
      out.push_back({uv.first, uv.second, lr.second, c * d});
  return out;
}

Scalar factored_value(const Functional& sigma_b, const SmashAlgebra& a, std::size_t u, std::size_t v) {
  const std::size_t bv = a.part_b(v);
  return sigma_b.at(a.part_b(u), bv).scaled(a.group().act(a.part_h(u), a.base().degree[bv]));
}

Element deform_product(const SmashAlgebra& a, const BraidedBialgebra& b, const Functional& sigma_b,
                       const Functional& sigma_b_inv, const Element& u, const Element& v) {
  Element out;
  for (const auto& [x, cx] : u)
    for (const auto& [y, cy] : v) {
      const auto tx = smash_coproduct3(a, b, x);
      const auto ty = smash_coproduct3(a, b, y);
      for (const auto& s : tx)
        for (const auto& t : ty) {
          const Scalar left = factored_value(sigma_b, a, s.i, t.i);
          if (left.is_zero()) continue;
          const Scalar right = factored_value(sigma_b_inv, a, s.k, t.k);
          if (right.is_zero()) continue;
          add_scaled(out, a.multiply_basis(s.j, t.j), cx * cy * s.coef * t.coef * left * right);
        }
    }
  return out;
}

Element cleft_multiply(const SmashAlgebra& a, const BraidedBialgebra& b, const Functional& sigma_b, const Element& u,
                       const Element& v) {
  Element out;
  for (const auto& [x, cx] : u)
    for (const auto& [y, cy] : v) {
      const auto dx = smash_coproduct(a, b, basis_element(x));
      const auto dy = smash_coproduct(a, b, basis_element(y));
      for (const auto& [s, c1] : dx)
        for (const auto& [t, c2] : dy) {
          const Scalar val = factored_value(sigma_b, a, s.first, t.first);
          if (val.is_zero()) continue;
          add_scaled(out, a.multiply_basis(s.second, t.second), cx * cy * c1 * c2 * val);
        }
    }
  return out;
}

Scalar convolve_factored_at(const SmashAlgebra& a, const BraidedBialgebra& b, const Functional& sigma_b,
                            const Functional& tau_b, std::size_t x, std::size_t y) {
  Scalar acc;
  for (const auto& [s, c1] : smash_coproduct(a, b, basis_element(x)))
    for (const auto& [t, c2] : smash_coproduct(a, b, basis_element(y))) {
      const Scalar l = factored_value(sigma_b, a, s.first, t.first);
      if (l.is_zero()) continue;
      acc += c1 * c2 * l * factored_value(tau_b, a, s.second, t.second);
    }
  return acc;
}

BosonizedCocycle cocycle_from_section(const ComoduleMap& gamma, const CleftAlgebra& c, const GroupData& group,
                                      const std::vector<std::array<std::size_t, 2>>& extra_pairs) {
  const BraidedBialgebra& b = *c.b;
  const SmashAlgebra a(b, group);
  const SmashAlgebra cc(c.e, group);
  const std::size_t n = b.dim();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) { return b.total_degree(x) < b.total_degree(y); });

  auto gamma_a = [&](std::size_t u) {
    Element out;
    for (const auto& [e, v] : gamma.image[a.part_b(u)]) add_to(out, cc.index(e, a.part_h(u)), v);
    return out;
  };
  // gamma_A^-1(x # h) by recursion on the degree of x; filled lazily per h.
  std::map<std::size_t, std::vector<Element>> inverse_by_h;
  auto inverse_for = [&](std::size_t h) -> const std::vector<Element>& {
    auto it = inverse_by_h.find(h);
    if (it != inverse_by_h.end()) return it->second;
    std::vector<Element> inv(n);
    for (std::size_t x : order) {
      Element rest = x == 0 ? basis_element(cc.index(0, 0)) : Element{};
      for (const auto& [lr, v] : b.delta[x]) {
        if (lr.first == 0) continue;
        const std::size_t mid = group.multiply(group.power_of_generators(b.degree[lr.second]), h);
        add_scaled(rest, cc.multiply(gamma_a(a.index(lr.first, mid)), inv[lr.second]), -v);
      }
      const std::size_t lead = group.multiply(group.power_of_generators(b.degree[x]), h);
      inv[x] = cc.multiply(basis_element(cc.index(0, group.inverse(lead))), rest);
    }
    return inverse_by_h.emplace(h, std::move(inv)).first->second;
  };
  auto gamma_a_inv = [&](const Element& u) {
    Element out;
    for (const auto& [i, v] : u) add_scaled(out, inverse_for(a.part_h(i))[a.part_b(i)], v);
    return out;
  };
  auto sigma_at = [&](std::size_t u, std::size_t v) {
    Element acc;
    for (const auto& [s, c1] : smash_coproduct(a, b, basis_element(u)))
      for (const auto& [t, c2] : smash_coproduct(a, b, basis_element(v))) {
        const Element tail = gamma_a_inv(a.multiply_basis(s.second, t.second));
        if (tail.empty()) continue;
        add_scaled(acc, cc.multiply(cc.multiply(gamma_a(s.first), gamma_a(t.first)), tail), c1 * c2);
      }
    for (const auto& [k, w] : acc)
      if (k != cc.index(0, 0))
        throw HopflabError(ErrorKind::NotCleft, "sigma(" + a.name(u) + ", " + a.name(v) + ") is not a scalar: invalid section");
    return acc.empty() ? Scalar() : acc.begin()->second;
  };

  BosonizedCocycle out;
  out.sigma_b = Functional(2, n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) out.sigma_b.at(x, y) = sigma_at(a.index(x, 0), a.index(y, 0));
  out.extra_pairs = extra_pairs;
  for (const auto& [u, v] : extra_pairs) out.extra_values.push_back(sigma_at(u, v));
  return out;
}

namespace {

using RSparse = std::vector<std::pair<std::size_t, Rational>>;

struct NumericSmash {
  std::size_t n = 0;                       // dim A
  std::vector<Rational> sigma;             // n * n
  std::vector<RSparse> cleft;              // n * n: x .(sigma) y
};

NumericSmash numeric_smash(const SmashAlgebra& a, const BraidedBialgebra& b, const Functional& sigma_b) {
  NumericSmash ns;
  ns.n = a.dim();
  const std::size_t n = ns.n;
  ns.sigma.resize(n * n);
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = 0; v < n; ++v) ns.sigma[u * n + v] = factored_value(sigma_b, a, u, v).constant_value();
  std::vector<std::vector<std::pair<std::pair<std::size_t, std::size_t>, Rational>>> delta(n);
  for (std::size_t u = 0; u < n; ++u)
    for (const auto& [lr, c] : smash_coproduct(a, b, basis_element(u))) delta[u].push_back({lr, c.constant_value()});
  std::vector<RSparse> prod(n * n);
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = 0; v < n; ++v)
      for (const auto& [k, c] : a.multiply_basis(u, v)) prod[u * n + v].emplace_back(k, c.constant_value());
  ns.cleft.resize(n * n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      std::map<std::size_t, Rational> acc;
      for (const auto& [s, c1] : delta[x])
        for (const auto& [t, c2] : delta[y]) {
          const Rational& val = ns.sigma[s.first * n + t.first];
          if (val == 0) continue;
          const Rational coef = c1 * c2 * val;
          for (const auto& [k, c] : prod[s.second * n + t.second]) acc[k] += coef * c;
        }
      for (const auto& [k, c] : acc)
        if (c != 0) ns.cleft[x * n + y].emplace_back(k, c);
    }
  return ns;
}

}  // namespace

BosonizedCheck check_bosonized_cocycle(const SmashAlgebra& a, const BraidedBialgebra& b, const Functional& sigma_b,
                                       Exec exec) {
  const NumericSmash ns = numeric_smash(a, b, sigma_b);
  const std::size_t n = ns.n;
  // Per middle index y: L[x][z] = sigma(x .(s) y, z) and R[z][x] = sigma(x, y .(s) z).
  std::vector<std::size_t> first_bad(n, n * n * n);
  for_each_index(n, exec, [&](std::size_t y) {
    std::vector<Rational> left(n * n), right(n * n);
    for (std::size_t x = 0; x < n; ++x)
      for (const auto& [w, c] : ns.cleft[x * n + y])
        for (std::size_t z = 0; z < n; ++z) left[x * n + z] += c * ns.sigma[w * n + z];
    for (std::size_t z = 0; z < n; ++z)
      for (const auto& [w, c] : ns.cleft[y * n + z])
        for (std::size_t x = 0; x < n; ++x) right[z * n + x] += c * ns.sigma[x * n + w];
    for (std::size_t x = 0; x < n && first_bad[y] == n * n * n; ++x)
      for (std::size_t z = 0; z < n; ++z)
        if (left[x * n + z] != right[z * n + x]) {
          first_bad[y] = (x * n + y) * n + z;
          break;
        }
  });
  BosonizedCheck out;
  out.triples = n * n * n;
  std::size_t best = n * n * n;
  for (std::size_t v : first_bad) best = std::min(best, v);
  if (best < n * n * n) {
    out.ok = false;
    out.first = {best / (n * n), (best / n) % n, best % n};
  }
  return out;
}

BosonizedCheck check_bosonized_cocycle_serial(const SmashAlgebra& a, const BraidedBialgebra& b,
                                              const Functional& sigma_b) {
  const std::size_t n = a.dim();
  BosonizedCheck out;
  out.triples = n * n * n;
  auto sigma = [&](std::size_t u, std::size_t v) { return factored_value(sigma_b, a, u, v); };
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z) {
        Scalar lhs, rhs;
        const auto dx = smash_coproduct(a, b, basis_element(x));
        const auto dy = smash_coproduct(a, b, basis_element(y));
        const auto dz = smash_coproduct(a, b, basis_element(z));
        for (const auto& [s, c1] : dx)
          for (const auto& [t, c2] : dy) {
            const Scalar v = sigma(s.first, t.first);
            if (v.is_zero()) continue;
            for (const auto& [k, c] : a.multiply_basis(s.second, t.second)) lhs += c1 * c2 * c * v * sigma(k, z);
          }
        for (const auto& [s, c1] : dy)
          for (const auto& [t, c2] : dz) {
            const Scalar v = sigma(s.first, t.first);
            if (v.is_zero()) continue;
            for (const auto& [k, c] : a.multiply_basis(s.second, t.second)) rhs += c1 * c2 * c * v * sigma(x, k);
          }
        if (lhs != rhs) {
          out.ok = false;
          out.first = {x, y, z};
          return out;
        }
      }
  return out;
}

}  // namespace hopflab

namespace hopflab {

std::string element_str(const SmashAlgebra& a, const Element& u) {
  if (u.empty()) return "0";
  std::string out;
  for (const auto& [i, c] : u) {
    std::string coef = c.str();
    if (c.terms().size() > 1) coef = "(" + coef + ")";
    const std::string name = a.name(i);
    const std::string term = name == "1"      ? coef
                             : coef == "1"  ? name
                             : coef == "-1" ? "-" + name
                                            : coef + "*" + name;
    if (out.empty())
      out = term;
    else
      out += term[0] == '-' ? " - " + term.substr(1) : " + " + term;
  }
  return out;
}

std::vector<RelationCheck> check_deformed_relations(const SmashAlgebra& a, const BraidedBialgebra& b,
                                                    const Functional& sigma_b) {
  const Tables t = make_tables(b);
  const Functional inv = convolution_inverse(sigma_b, t);
  const GroupData& g = a.group();
  auto dp = [&](const Element& u, const Element& v) { return deform_product(a, b, sigma_b, inv, u, v); };
  auto grp = [&](std::vector<int> e, const Scalar& c) { return Element{{a.index(0, g.index(e)), c}}; };
  auto plus = [](Element u, const Element& v, const Scalar& c) {
    add_scaled(u, v, c);
    return u;
  };
  const std::size_t theta = b.theta();
  std::vector<RelationCheck> out;
  std::vector<Element> gens;
  for (std::size_t i = 0; i < theta; ++i) {
    Element x;
    for (const auto& [k, c] : b.generator[i]) x[a.index(k, 0)] = c;
    gens.push_back(x);
  }
  std::vector<Scalar> lambda(theta);
  for (std::size_t i = 0; i < theta; ++i) {
    const std::size_t xi = b.generator[i].begin()->first;
    if (!b.mult[xi][xi].empty()) continue;
    lambda[i] = sigma_b.at(xi, xi);
    std::vector<int> two(theta, 0), zero(theta, 0);
    two[i] = 2;
    const Element expected = plus(grp(zero, lambda[i]), grp(two, Scalar(1)), -lambda[i]);
    const Element got = dp(gens[i], gens[i]);
    out.push_back({"a" + std::to_string(i + 1) + "^2", elements_equal(got, expected), element_str(a, got),
                   element_str(a, expected)});
  }
  const auto& names = b.basis_names;
  if (theta == 2 && std::find(names.begin(), names.end(), "x12") != names.end()) {
    const Rational q12 = b.q[0][1];
    const std::size_t x12 = b.index_of("x12");
    const Scalar l12 = sigma_b.at(x12, x12);
    Element a12 = dp(gens[0], gens[1]);
    add_scaled(a12, dp(gens[1], gens[0]), Scalar(-q12));
    const Scalar c = (lambda[0] * lambda[1]).scaled(4 * q12);
    Element expected = plus(grp({0, 0}, l12), grp({2, 2}, Scalar(1)), -l12);
    expected = plus(plus(expected, grp({0, 2}, c), Scalar(1)), grp({2, 2}, c), Scalar(-1));
    const Element got = dp(a12, a12);
    out.push_back({"a12^2", elements_equal(got, expected), element_str(a, got), element_str(a, expected)});
  }
  return out;
}

}  // namespace hopflab
