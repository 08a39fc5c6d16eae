#include "hopflab/cleft.hpp"

#include <algorithm>
#include <numeric>

#include "hopflab/errors.hpp"

namespace hopflab {

CleftAlgebra build_cleft(const Presentation& p, std::shared_ptr<const BraidedBialgebra> b, Exec exec) {
  CleftAlgebra c;
  c.b = std::move(b);
  if (p.generators.size() != c.b->theta())
    throw HopflabError(ErrorKind::Semantic, "cleft object must have as many generators as " + c.b->name);
  if (p.gen_degrees != c.b->gen_degrees)
    throw HopflabError(ErrorKind::Semantic, "cleft generators must carry the degrees of the generators of " + c.b->name);
  if (p.dimension != c.b->dim())
    throw HopflabError(ErrorKind::PresentationInconsistency,
                       "inconsistent deformation: declared dimension " + std::to_string(p.dimension) + " but " +
                           c.b->name + " has dimension " + std::to_string(c.b->dim()));
  c.e = build_algebra(p);
  auto assoc = check_associativity(c.e, exec);
  if (!assoc.ok) throw HopflabError(ErrorKind::IncompleteRewriting, "cleft object: " + assoc.detail);

  std::vector<PairElement> gens;
  for (std::size_t k = 0; k < c.b->theta(); ++k) {
    PairElement d;
    for (const auto& [i, v] : c.e.generator[k]) add_to(d, i, 0, v);
    for (const auto& [i, v] : c.b->generator[k]) add_to(d, 0, i, v);
    gens.push_back(std::move(d));
  }
  c.coaction = extend_multiplicatively(c.e, c.e, *c.b, gens);
  return c;
}

using Triple = std::map<std::array<std::size_t, 3>, Scalar>;

static void add_triple(Triple& t, std::array<std::size_t, 3> k, const Scalar& v) {
  if (v.is_zero()) return;
  auto [it, inserted] = t.emplace(k, v);
  if (!inserted) {
    it->second += v;
    if (it->second.is_zero()) t.erase(it);
  }
}

static PairElement coact(const CleftAlgebra& c, const Element& u) {
  PairElement out;
  for (const auto& [i, v] : u) add_scaled(out, c.coaction[i], v);
  return out;
}

CheckResult check_coaction(const CleftAlgebra& c) {
  const std::size_t n = c.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (!pairs_equal(coact(c, c.e.mult[i][j]), braided_tensor_product(c.e, *c.b, c.coaction[i], c.coaction[j])))
        return {false, "coaction is not multiplicative at (" + c.e.basis_names[i] + ", " + c.e.basis_names[j] + ")"};
  for (std::size_t i = 0; i < n; ++i) {
    Triple l, r;
    Element counit;
    for (const auto& [eb, v] : c.coaction[i]) {
      for (const auto& [uv, w] : c.coaction[eb.first]) add_triple(l, {uv.first, uv.second, eb.second}, v * w);
      for (const auto& [uv, w] : c.b->delta[eb.second]) add_triple(r, {eb.first, uv.first, uv.second}, v * w);
      if (eb.second == 0) add_to(counit, eb.first, v);
    }
    if (l != r) return {false, "coaction is not coassociative at " + c.e.basis_names[i]};
    if (!elements_equal(counit, basis_element(i))) return {false, "coaction is not counital at " + c.e.basis_names[i]};
  }
  return {};
}

bool ComoduleMap::normalized() const {
  return !image.empty() && elements_equal(image[0], basis_element(0));
}

static std::vector<std::size_t> by_degree(const Algebra& a) {
  std::vector<std::size_t> order(a.dim());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t x, std::size_t y) { return a.total_degree(x) < a.total_degree(y); });
  return order;
}

static std::size_t generator_index(const Algebra& a, std::size_t b) {
  for (std::size_t k = 0; k < a.theta(); ++k)
    if (elements_equal(a.generator[k], basis_element(b))) return k;
  return a.theta();
}

SectionSolution solve_section(const CleftAlgebra& c) {
  const BraidedBialgebra& b = *c.b;
  const std::size_t n = b.dim();
  SectionSolution sol;
  sol.gamma.image.assign(n, Element{});
  sol.free.assign(n, {});
  std::vector<char> known(n, 0);

  // delta(e) - e (x) 1 for each E basis element: the columns of every system.
  std::vector<PairElement> column(n);
  for (std::size_t e = 0; e < n; ++e) {
    column[e] = c.coaction[e];
    add_to(column[e], e, 0, Scalar(-1));
  }

  for (std::size_t x : by_degree(b)) {
    if (x == 0) {
      sol.gamma.image[0] = basis_element(0);
      known[0] = 1;
      continue;
    }
    const std::size_t k = generator_index(b, x);
    if (k < b.theta()) {
      sol.gamma.image[x] = c.e.generator[k];
      known[x] = 1;
      continue;
    }
    // Right-hand side: gamma(x_(1)) (x) x_(2) over terms with x_(2) != 1.
    PairElement rhs;
    for (const auto& [lr, v] : b.delta[x]) {
      if (lr.second == 0) continue;
      if (!known[lr.first]) throw HopflabError(ErrorKind::Internal, "section recursion out of order");
      for (const auto& [e, w] : sol.gamma.image[lr.first]) add_to(rhs, e, lr.second, v * w);
    }
    std::map<std::pair<std::size_t, std::size_t>, std::size_t> row_of;
    for (const auto& col : column)
      for (const auto& [key, v] : col) row_of.emplace(key, 0);
    for (const auto& [key, v] : rhs) row_of.emplace(key, 0);
    std::size_t r = 0;
    for (auto& [key, idx] : row_of) idx = r++;
    SMatrix a(r, std::vector<Scalar>(n));
    std::vector<Scalar> rv(r);
    for (std::size_t e = 0; e < n; ++e)
      for (const auto& [key, v] : column[e]) a[row_of[key]][e] = v;
    for (const auto& [key, v] : rhs) rv[row_of[key]] = v;
    auto s = solve_unit_pivot(a, rv);
    if (!s) throw HopflabError(ErrorKind::NotCleft, "no colinear value for gamma(" + b.basis_names[x] + ")");
    for (std::size_t e = 0; e < n; ++e) add_to(sol.gamma.image[x], e, s->x[e]);
    sol.free[x] = s->free_vars;
    known[x] = 1;
  }
  return sol;
}

ComoduleMap convolve_maps(const ComoduleMap& f, const ComoduleMap& g, const CleftAlgebra& c) {
  ComoduleMap out;
  out.image.resize(c.b->dim());
  for (std::size_t x = 0; x < c.b->dim(); ++x)
    for (const auto& [lr, v] : c.b->delta[x])
      add_scaled(out.image[x], c.e.multiply(f.image[lr.first], g.image[lr.second]), v);
  return out;
}

ComoduleMap convolution_inverse_map(const ComoduleMap& f, const CleftAlgebra& c) {
  const BraidedBialgebra& b = *c.b;
  if (!f.normalized()) throw HopflabError(ErrorKind::NotInvertible, "map does not send 1 to 1");
  ComoduleMap g;
  g.image.assign(b.dim(), Element{});
  for (std::size_t x : by_degree(b)) {
    if (x == 0) {
      g.image[0] = basis_element(0);
      continue;
    }
    Element acc;
    for (const auto& [lr, v] : b.delta[x]) {
      if (lr.first == 0) continue;
      add_scaled(acc, c.e.multiply(f.image[lr.first], g.image[lr.second]), -v);
    }
    g.image[x] = acc;
  }
  return g;
}

CheckResult check_unit_counit(const ComoduleMap& fg, const CleftAlgebra& c) {
  for (std::size_t x = 0; x < c.b->dim(); ++x) {
    const Element expected = x == 0 ? basis_element(0) : Element{};
    if (!elements_equal(fg.image[x], expected)) return {false, "convolution is not unit o counit at " + c.b->basis_names[x]};
  }
  return {};
}

CheckResult check_colinear(const ComoduleMap& f, const CleftAlgebra& c) {
  for (std::size_t x = 0; x < c.b->dim(); ++x) {
    PairElement lhs = coact(c, f.image[x]);
    PairElement rhs;
    for (const auto& [lr, v] : c.b->delta[x])
      for (const auto& [e, w] : f.image[lr.first]) add_to(rhs, e, lr.second, v * w);
    if (!pairs_equal(lhs, rhs)) return {false, "not colinear at " + c.b->basis_names[x]};
  }
  return {};
}

CheckResult check_h_linear(const ComoduleMap& f, const CleftAlgebra& c) {
  const BraidedBialgebra& b = *c.b;
  for (std::size_t g = 0; g < b.theta(); ++g) {
    std::vector<int> e(b.theta(), 0);
    e[g] = 1;
    for (std::size_t x = 0; x < b.dim(); ++x) {
      const Rational sx = action_scalar(b.q, e, b.degree[x]);
      for (const auto& [y, v] : f.image[x])
        if (action_scalar(b.q, e, c.e.degree[y]) != sx)
          return {false, "not H-linear at " + b.basis_names[x] + " for g" + std::to_string(g + 1)};
    }
  }
  return {};
}

Functional cocycle_from_section_braided(const ComoduleMap& gamma, const ComoduleMap& gamma_inv, const CleftAlgebra& c) {
  const BraidedBialgebra& b = *c.b;
  const std::size_t n = b.dim();
  // gamma^-1 applied to every product a2 b2, cached.
  std::vector<Element> inv_of_product(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (const auto& [k, v] : b.mult[i][j]) add_scaled(inv_of_product[i * n + j], gamma_inv.image[k], v);
  Functional sigma(2, n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      Element acc;
      for (const auto& [xl, cx] : b.delta[x])
        for (const auto& [yl, cy] : b.delta[y]) {
          const Element& tail = inv_of_product[xl.second * n + yl.second];
          if (tail.empty()) continue;
          const Scalar coef = cx * cy * Scalar(b.chi(xl.second, yl.first));
          add_scaled(acc, c.e.multiply(c.e.multiply(gamma.image[xl.first], gamma.image[yl.first]), tail), coef);
        }
      for (const auto& [k, v] : acc)
        if (k != 0)
          throw HopflabError(ErrorKind::NotCleft,
                             "sigma(" + b.basis_names[x] + ", " + b.basis_names[y] + ") is not a scalar: invalid section");
      sigma.at(x, y) = acc.count(0) ? acc.at(0) : Scalar();
    }
  return sigma;
}

Scalar primitive_row(const ComoduleMap& gamma, const ComoduleMap& gamma_inv, const CleftAlgebra& c, std::size_t x,
                     std::size_t y) {
  const BraidedBialgebra& b = *c.b;
  if (x == 0 || !restricted_comult(b, basis_element(x)).empty())
    throw HopflabError(ErrorKind::Input, b.basis_names[x] + " is not primitive");
  if (y == 0) return Scalar();
  Element acc;
  for (const auto& [yl, cy] : b.delta[y]) {
    Element tail;
    for (const auto& [k, v] : b.mult[x][yl.second]) add_scaled(tail, gamma_inv.image[k], v);
    if (tail.empty()) continue;
    add_scaled(acc, c.e.multiply(gamma.image[yl.first], tail), cy * Scalar(b.chi(x, yl.first)));
  }
  for (const auto& [k, v] : acc)
    if (k != 0) throw HopflabError(ErrorKind::NotCleft, "first-row value is not a scalar: invalid section");
  return acc.count(0) ? acc.at(0) : Scalar();
}

ComoduleMap map_from_entries(const CleftAlgebra& c,
                             const std::vector<std::pair<std::string, std::vector<std::pair<std::string, Scalar>>>>& entries) {
  ComoduleMap m;
  m.image.assign(c.b->dim(), Element{});
  for (const auto& [x, terms] : entries)
    for (const auto& [y, v] : terms) add_to(m.image[c.b->index_of(x)], c.e.index_of(y), v);
  return m;
}

}  // namespace hopflab
