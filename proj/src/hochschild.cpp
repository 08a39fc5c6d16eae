#include "hopflab/hochschild.hpp"

#include <algorithm>

#include "hopflab/errors.hpp"

namespace hopflab {

HochschildData hochschild_data(const Tables& t) {
  HochschildData h;
  h.n = t.n;
  h.mult = t.mult;
  h.eps.assign(t.n, Rational(0));
  h.eps[0] = 1;
  return h;
}

HochschildData hochschild_data(const SmashAlgebra& a) {
  HochschildData h;
  h.n = a.dim();
  h.mult.resize(h.n * h.n);
  for (std::size_t i = 0; i < h.n; ++i)
    for (std::size_t j = 0; j < h.n; ++j)
      for (const auto& [k, c] : a.multiply_basis(i, j)) h.mult[i * h.n + j].emplace_back(k, c.constant_value());
  h.eps.assign(h.n, Rational(0));
  for (std::size_t i = 0; i < h.n; ++i)
    if (a.part_b(i) == 0) h.eps[i] = 1;
  return h;
}

Scalar hochschild_defect(const Functional& eta, const HochschildData& h, std::size_t a, std::size_t b, std::size_t c) {
  const std::size_t n = h.n;
  Scalar s;
  if (h.eps[a] != 0) s += eta.at(b, c).scaled(h.eps[a]);
  for (const auto& [k, v] : h.mult[b * n + c]) s += eta.at(a, k).scaled(v);
  for (const auto& [k, v] : h.mult[a * n + b]) s -= eta.at(k, c).scaled(v);
  if (h.eps[c] != 0) s -= eta.at(a, b).scaled(h.eps[c]);
  return s;
}

HochschildCheck is_hochschild_cocycle(const Functional& eta, const HochschildData& h, Exec exec) {
  const std::size_t n = h.n;
  const std::size_t none = n * n * n;
  std::vector<std::size_t> first(n, none);
  for_each_index(n, exec, [&](std::size_t a) {
    for (std::size_t b = 0; b < n && first[a] == none; ++b)
      for (std::size_t c = 0; c < n; ++c)
        if (!hochschild_defect(eta, h, a, b, c).is_zero()) {
          first[a] = (a * n + b) * n + c;
          break;
        }
  });
  HochschildCheck out;
  const std::size_t best = *std::min_element(first.begin(), first.end());
  if (best != none) {
    out.ok = false;
    out.first = {best / (n * n), (best / n) % n, best % n};
  }
  return out;
}

Functional coboundary(const Functional& f, const HochschildData& h) {
  if (f.arity() != 1) throw HopflabError(ErrorKind::Input, "coboundary expects a 1-cochain");
  const std::size_t n = h.n;
  Functional out(2, n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      Scalar s;
      if (h.eps[a] != 0) s += f.at(b).scaled(h.eps[a]);
      for (const auto& [k, v] : h.mult[a * n + b]) s -= f.at(k).scaled(v);
      if (h.eps[b] != 0) s += f.at(a).scaled(h.eps[b]);
      out.at(a, b) = s;
    }
  return out;
}

LinearSystem hochschild_system(const HochschildData& h, Exec exec) {
  const std::size_t n = h.n;
  std::vector<std::vector<RVec>> blocks(n);
  for_each_index(n, exec, [&](std::size_t a) {
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c) {
        RVec row(n * n);
        bool any = false;
        auto add = [&](std::size_t col, const Rational& v) {
          row[col] += v;
          any = true;
        };
        if (h.eps[a] != 0) add(b * n + c, h.eps[a]);
        for (const auto& [k, v] : h.mult[b * n + c]) add(a * n + k, v);
        for (const auto& [k, v] : h.mult[a * n + b]) add(k * n + c, -v);
        if (h.eps[c] != 0) add(a * n + b, -h.eps[c]);
        if (any && std::any_of(row.begin(), row.end(), [](const Rational& r) { return r != 0; }))
          blocks[a].push_back(std::move(row));
      }
  });
  LinearSystem sys;
  sys.cols = n * n;
  for (auto& block : blocks)
    for (auto& row : block) sys.add_row(std::move(row));
  return sys;
}

static Functional from_vector(std::size_t arity, std::size_t n, const RVec& v) {
  Functional f(arity, n);
  for (std::size_t i = 0; i < v.size(); ++i) f[i] = Scalar(v[i]);
  return f;
}

static RVec to_vector(const Functional& f) {
  RVec v(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) v[i] = f[i].constant_value();
  return v;
}

std::vector<Functional> independent_subset(const std::vector<Functional>& fs) {
  std::vector<Functional> out;
  if (fs.empty()) return out;
  LinearSystem sys;
  sys.cols = fs.front().size();
  std::size_t r = 0;
  for (const auto& f : fs) {
    LinearSystem trial = sys;
    trial.add_row(to_vector(f));
    const std::size_t rr = rank(trial);
    if (rr > r) {
      sys = std::move(trial);
      r = rr;
      out.push_back(f);
    }
  }
  return out;
}

std::optional<RVec> coordinates(const Functional& f, const std::vector<Functional>& basis) {
  LinearSystem sys(f.size(), basis.size());
  for (std::size_t j = 0; j < basis.size(); ++j) {
    const RVec v = to_vector(basis[j]);
    for (std::size_t i = 0; i < v.size(); ++i) sys.at(i, j) = v[i];
  }
  return solve(sys, to_vector(f));
}

HochschildSpace solve_Z2(const HochschildData& h, Exec exec) {
  HochschildSpace z;
  for (const auto& v : nullspace(hochschild_system(h, exec))) z.cocycles.push_back(from_vector(2, h.n, v));
  std::vector<Functional> images;
  for (std::size_t i = 0; i < h.n; ++i) {
    Functional e(1, h.n);
    e.at(i) = Scalar(1);
    images.push_back(coboundary(e, h));
  }
  z.coboundaries = independent_subset(images);
  return z;
}

static MultiDegree total_degree_of(const Functional& f, const BraidedBialgebra& b, std::size_t flat) {
  MultiDegree d(b.theta(), 0);
  for (std::size_t leg : f.legs(flat)) d = degree_sum(d, b.degree[leg]);
  return d;
}

Functional group_act(const Functional& f, const BraidedBialgebra& b, const GroupData& g, std::size_t h) {
  Functional out = f;
  const std::size_t inv = g.inverse(h);
  for (std::size_t i = 0; i < f.size(); ++i)
    if (!f[i].is_zero()) out[i] = f[i].scaled(g.act(inv, total_degree_of(f, b, i)));
  return out;
}

bool is_invariant(const Functional& f, const BraidedBialgebra& b, const GroupData& g) {
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (f[i].is_zero()) continue;
    const MultiDegree d = total_degree_of(f, b, i);
    for (std::size_t h = 0; h < g.order(); ++h)
      if (g.act(h, d) != 1) return false;
  }
  return true;
}

Functional stefan_project(const Functional& f, const BraidedBialgebra& b, const GroupData& g) {
  Functional out = f;
  const Rational order(static_cast<long>(g.order()));
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (f[i].is_zero()) continue;
    const MultiDegree d = total_degree_of(f, b, i);
    Rational avg(0);
    for (std::size_t h = 0; h < g.order(); ++h) avg += g.act(h, d);
    avg /= order;
    out[i] = f[i].scaled(avg);
  }
  return out;
}

HochschildSpace invariant_subspace(const HochschildSpace& z, const HochschildData& h, const BraidedBialgebra& b,
                                   const GroupData& g) {
  HochschildSpace out;
  std::vector<Functional> projected;
  for (const auto& f : z.cocycles) projected.push_back(stefan_project(f, b, g));
  out.cocycles = independent_subset(projected);
  std::vector<Functional> images;
  for (std::size_t i = 0; i < h.n; ++i) {
    Functional e(1, h.n);
    e.at(i) = Scalar(1);
    images.push_back(coboundary(stefan_project(e, b, g), h));
  }
  out.coboundaries = independent_subset(images);
  return out;
}

InvarianceCheck stefan_invariance_iso_check(const BraidedBialgebra& b, const GroupData& g, Exec exec) {
  const SmashAlgebra a(b, g);
  if (a.dim() > 32)
    throw HopflabError(ErrorKind::Unsupported, "direct elimination on the bosonization is limited to dimension 32 (got " +
                                                   std::to_string(a.dim()) + ")");
  InvarianceCheck out;
  out.dim_h2_a = solve_Z2(hochschild_data(a), exec).dim_h();
  const HochschildData hb = hochschild_data(make_tables(b));
  out.dim_h2_b_invariant = invariant_subspace(solve_Z2(hb, exec), hb, b, g).dim_h();
  return out;
}

Functional extend_to_smash(const Functional& eta, const SmashAlgebra& a) {
  Functional out(2, a.dim());
  for (std::size_t u = 0; u < a.dim(); ++u)
    for (std::size_t v = 0; v < a.dim(); ++v) out.at(u, v) = factored_value(eta, a, u, v);
  return out;
}

Functional xi0(std::size_t n) { return Functional::counit(2, n); }

Functional xi(const BraidedBialgebra& b, std::size_t i, std::size_t j) {
  if (i >= b.theta() || j >= b.theta()) throw HopflabError(ErrorKind::Input, "generator index out of range");
  Functional f(2, b.dim());
  for (const auto& [xj, cj] : b.generator[j])
    for (const auto& [xi_, ci] : b.generator[i]) f.at(xj, xi_) += cj * ci;
  return f;
}

Functional xi121(const BraidedBialgebra& b) {
  const Scalar s(b.q[0][1]);
  return functional_from_entries(b, {{"x2", "x12x1", 1},
                                     {"x2x12", "x1", 1},
                                     {"x2x1", "x2x1", 1},
                                     {"x12", "x12", 1},
                                     {"x12", "x2x1", -s},
                                     {"x2x1", "x12", -s}});
}

Functional xi212(const BraidedBialgebra& b) {
  return functional_from_entries(b, {{"x1", "x2x12", 1}, {"x12", "x12", 1}, {"x12x1", "x2", 1}});
}

Functional eta_from_coeffs(const BraidedBialgebra& b, const EtaCoeffs& c) {
  return xi0(b.dim()).scaled(c.e0) + xi(b, 0, 0).scaled(c.e1) + xi(b, 1, 1).scaled(c.e2) + xi121(b).scaled(c.e121) +
         xi212(b).scaled(c.e212);
}

Exponential exponential(const Functional& eta, const Tables& t, Exec exec) {
  if (eta.arity() != 2) throw HopflabError(ErrorKind::Input, "exponential expects a bilinear form");
  Exponential out;
  out.dropped = eta.at(0, 0);
  const Functional e = eta - xi0(t.n).scaled(out.dropped);
  for (std::size_t b = 0; b < t.n; ++b)
    if (!e.at(0, b).is_zero() || !e.at(b, 0).is_zero())
      throw HopflabError(ErrorKind::Input, "eta does not vanish on (1, b) and (b, 1) after normalization");
  out.value = Functional::counit(2, t.n);
  Functional power = out.value;
  Rational factorial(1);
  for (long k = 1;; ++k) {
    power = convolve(power, e, t, exec);
    if (power.is_zero()) break;
    factorial *= k;
    out.value = out.value + power.scaled(Scalar(Rational(1) / factorial));
  }
  return out;
}

static CommutationReport commutation(const Functional& eta, const Tables& t, bool serial, Exec exec) {
  if (eta.arity() != 2) throw HopflabError(ErrorKind::Input, "commutation expects a bilinear form");
  auto conv = [&](const Functional& f, const Functional& g) {
    return serial ? convolve_serial(f, g, t) : convolve(f, g, t, exec);
  };
  const Functional eps = Functional::counit(1, t.n);
  CommutationReport out;
  auto side = [&](const Functional& f, const Functional& g, bool& ok, FunctionalDiff& first) {
    const Functional fg = conv(f, g), gf = conv(g, f);
    first = compare(fg, gf);
    ok = first.equal;
    const Functional diff = fg - gf;
    for (std::size_t i = 0; i < diff.size(); ++i)
      if (!diff[i].is_zero()) out.defects.push_back(diff[i]);
  };
  side(compose_mult_right(eta, t), tensor(eps, eta), out.conm1, out.first1);
  side(compose_mult_left(eta, t), tensor(eta, eps), out.conm2, out.first2);
  return out;
}

CommutationReport check_commutation(const Functional& eta, const Tables& t, Exec exec) {
  return commutation(eta, t, false, exec);
}

CommutationReport check_commutation_serial(const Functional& eta, const Tables& t) {
  return commutation(eta, t, true, Exec::Serial);
}

UdFamilies ud_criterion(const Functional& eta, const Tables& t, std::size_t y, std::size_t z) {
  UdFamilies out;
  out.u.assign(t.n, Scalar());
  out.d.assign(t.n, Scalar());
  for (const auto& dy : t.delta[y])
    for (const auto& dz : t.delta[z]) {
      const Rational c = dy.coef * dz.coef * t.braid(dy.right, dz.left);
      const Scalar& right = eta.at(dy.right, dz.right);
      if (!right.is_zero())
        for (const auto& [k, v] : t.product(dy.left, dz.left)) out.u[k] += right.scaled(c * v);
      const Scalar& left = eta.at(dy.left, dz.left);
      if (!left.is_zero())
        for (const auto& [k, v] : t.product(dy.right, dz.right)) out.d[k] += left.scaled(c * v);
    }
  out.equal = out.u == out.d;
  for (std::size_t x = 0; x < t.n && out.rows_agree; ++x) {
    Scalar acc;
    for (std::size_t w = 0; w < t.n; ++w) acc += (out.u[w] - out.d[w]) * eta.at(x, w);
    out.rows_agree = acc.is_zero();
  }
  return out;
}

std::vector<Scalar> c_generators(const EtaCoeffs& c) {
  return {c.e1 * c.e2, c.e1 * c.e121, c.e1 * c.e212, c.e2 * c.e121, c.e2 * c.e212};
}

std::vector<Scalar> cbar_generators(const EtaCoeffs& c) {
  const Scalar sum = c.e121 + c.e212;
  return {c.e1 * c.e2, c.e1 * sum, c.e2 * sum};
}

Membership membership_C_Cbar(const EtaCoeffs& c) {
  auto all_zero = [](const std::vector<Scalar>& v) {
    return std::all_of(v.begin(), v.end(), [](const Scalar& s) { return s.is_zero(); });
  };
  return {all_zero(c_generators(c)), all_zero(cbar_generators(c))};
}

bool same_ideal(const std::vector<Scalar>& a, const std::vector<Scalar>& b, unsigned degree_bound) {
  for (const auto& g : a)
    if (!ideal_membership(b, g, degree_bound)) return false;
  for (const auto& g : b)
    if (!ideal_membership(a, g, degree_bound)) return false;
  return true;
}

Cobordism cobordism_witness(const BraidedBialgebra& b, const Tables& t) {
  Cobordism out;
  out.beta = xi121(b) - xi212(b);
  std::size_t top = 0;
  for (std::size_t i = 0; i < b.dim(); ++i)
    if (b.total_degree(i) > b.total_degree(top)) top = i;
  out.f = Functional(1, b.dim());
  out.f.at(top) = Scalar(1);
  const HochschildData h = hochschild_data(t);
  out.is_coboundary = out.beta == coboundary(-out.f, h);
  out.matches_product = true;
  for (std::size_t x = 1; x < b.dim(); ++x)
    for (std::size_t y = 1; y < b.dim(); ++y) {
      Scalar fxy;
      for (const auto& [k, v] : t.product(x, y)) fxy += out.f.at(k).scaled(v);
      if (fxy != out.beta.at(x, y)) out.matches_product = false;
    }
  return out;
}

}  // namespace hopflab
