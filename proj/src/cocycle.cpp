#include "hopflab/cocycle.hpp"

#include <algorithm>
#include <numeric>

#include "hopflab/errors.hpp"

namespace hopflab {

static void check_normalized(const Functional& sigma, CocycleCheck& out) {
  out.normalized = is_normalized(sigma);
  if (!out.normalized) out.ok = false;
}

static std::pair<Functional, Functional> identity_sides(const Functional& sigma, const Tables& t, Exec exec) {
  if (sigma.arity() != 2) throw HopflabError(ErrorKind::Input, "a Hopf cocycle is a bilinear form");
  const Functional eps = Functional::counit(1, t.n);
  return {convolve(tensor(sigma, eps), compose_mult_left(sigma, t), t, exec),
          convolve(tensor(eps, sigma), compose_mult_right(sigma, t), t, exec)};
}

std::vector<Scalar> cocycle_defects(const Functional& sigma, const Tables& t, Exec exec) {
  const auto [lhs, rhs] = identity_sides(sigma, t, exec);
  const Functional diff = lhs - rhs;
  std::vector<Scalar> out;
  for (std::size_t i = 0; i < diff.size(); ++i)
    if (!diff[i].is_zero()) out.push_back(diff[i]);
  return out;
}

CocycleCheck is_hopf_cocycle(const Functional& sigma, const Tables& t, Exec exec) {
  const auto [lhs, rhs] = identity_sides(sigma, t, exec);
  CocycleCheck out;
  const auto d = compare(lhs, rhs);
  if (!d.equal) {
    out.ok = false;
    out.first = d.first;
    out.lhs = d.lhs;
    out.rhs = d.rhs;
  }
  check_normalized(sigma, out);
  return out;
}

CocycleCheck is_hopf_cocycle_serial(const Functional& sigma, const Tables& t) {
  const std::size_t n = t.n;
  auto sigma_of_product = [&](std::size_t a, std::size_t b, std::size_t z, bool product_left) {
    Scalar acc;
    for (const auto& [k, c] : t.product(a, b)) acc += (product_left ? sigma.at(k, z) : sigma.at(z, k)).scaled(c);
    return acc;
  };
  CocycleCheck out;
  for (std::size_t x = 0; x < n && out.ok; ++x)
    for (std::size_t y = 0; y < n && out.ok; ++y)
      for (std::size_t z = 0; z < n && out.ok; ++z) {
        // sigma(x1, y1) sigma(x2 y2, z) with chi(x2, y1).
        Scalar lhs;
        for (const auto& dx : t.delta[x])
          for (const auto& dy : t.delta[y]) {
            const Scalar& v = sigma.at(dx.left, dy.left);
            if (v.is_zero()) continue;
            lhs += (v * sigma_of_product(dx.right, dy.right, z, true)).scaled(dx.coef * dy.coef * t.braid(dx.right, dy.left));
          }
        // sigma(y1, z1) sigma(x, y2 z2) with chi(x, y1 z1) chi(y2, z1).
        Scalar rhs;
        for (const auto& dy : t.delta[y])
          for (const auto& dz : t.delta[z]) {
            const Scalar& v = sigma.at(dy.left, dz.left);
            if (v.is_zero()) continue;
            const Rational c = dy.coef * dz.coef * t.braid(x, dy.left) * t.braid(x, dz.left) * t.braid(dy.right, dz.left);
            rhs += (v * sigma_of_product(dy.right, dz.right, x, false)).scaled(c);
          }
        if (lhs != rhs) {
          out.ok = false;
          out.first = {x, y, z};
          out.lhs = lhs;
          out.rhs = rhs;
        }
      }
  check_normalized(sigma, out);
  return out;
}

FirstRow first_row(const Functional& sigma, const BraidedBialgebra& b) {
  FirstRow row(b.theta(), std::vector<Scalar>(b.dim()));
  for (std::size_t k = 0; k < b.theta(); ++k) {
    const auto& g = b.generator[k];
    for (std::size_t y = 0; y < b.dim(); ++y)
      for (const auto& [i, c] : g) row[k][y] += c * sigma.at(i, y);
  }
  return row;
}

// sigma(u, v) for elements.
static Scalar pair_value(const Functional& sigma, const Element& u, const Element& v) {
  Scalar acc;
  for (const auto& [i, a] : u)
    for (const auto& [j, b] : v) acc += a * b * sigma.at(i, j);
  return acc;
}

Scalar peel_step(const Functional& sigma, const BraidedBialgebra& b, std::size_t k, const Element& a_rest,
                 std::size_t y) {
  const Element& x = b.generator[k];
  const Element by = basis_element(y);
  const PairElement ra = restricted_comult(b, a_rest);
  const PairElement rb = restricted_comult(b, by);
  Scalar s = pair_value(sigma, x, b.multiply(a_rest, by));
  for (const auto& [uv, c] : rb)
    s += c * pair_value(sigma, a_rest, basis_element(uv.first)) * pair_value(sigma, x, basis_element(uv.second));
  for (const auto& [uv, c] : ra) {
    s += c * Scalar(b.chi(uv.second, y)) * sigma.at(uv.first, y) * pair_value(sigma, x, basis_element(uv.second));
    s -= c * pair_value(sigma, x, basis_element(uv.first)) * sigma.at(uv.second, y);
    for (const auto& [pq, d] : rb)
      s += c * d * Scalar(b.chi(uv.second, pq.first)) * sigma.at(uv.first, pq.first) *
           pair_value(sigma, x, b.mult[uv.second][pq.second]);
  }
  return s;
}

Functional extend_from_first_row(const FirstRow& row, const BraidedBialgebra& b) {
  const std::size_t n = b.dim();
  if (row.size() != b.theta()) throw HopflabError(ErrorKind::Input, "first row needs one row per generator");
  Functional sigma(2, n);
  sigma.at(0, 0) = Scalar(1);
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) { return b.total_degree(x) < b.total_degree(y); });

  // Rows of generators come from the data (expressed in the basis).
  std::vector<char> done(n, 0);
  done[0] = 1;
  for (std::size_t k = 0; k < b.theta(); ++k) {
    const auto& g = b.generator[k];
    if (g.size() != 1 || g.begin()->second != Scalar(1))
      throw HopflabError(ErrorKind::Unsupported, "generators must be basis elements");
    const std::size_t x = g.begin()->first;
    for (std::size_t y = 1; y < n; ++y) sigma.at(x, y) = row[k][y];
    done[x] = 1;
  }
  for (std::size_t a : order) {
    if (done[a]) continue;
    if (b.total_degree(a) < 2) throw HopflabError(ErrorKind::Unsupported, "degree-one basis element that is not a generator");
    // a = sum over normal words w = x_k w' of coef * x_k w'.
    for (std::size_t y = 1; y < n; ++y) {
      Scalar acc;
      for (std::size_t wi = 0; wi < b.normal_words.size(); ++wi) {
        const Scalar& coef = b.basis_in_words[wi][a];
        if (coef.is_zero()) continue;
        const Word& w = b.normal_words[wi];
        const Word rest(w.begin() + 1, w.end());
        const Element a_rest = b.from_free(fp_word(rest));
        acc += coef * peel_step(sigma, b, static_cast<std::size_t>(w.front()), a_rest, y);
      }
      sigma.at(a, y) = acc;
    }
    done[a] = 1;
  }
  return sigma;
}

Functional act_unit(const Functional& alpha, const Functional& sigma, const Tables& t, Exec exec) {
  if (alpha.arity() != 1 || sigma.arity() != 2) throw HopflabError(ErrorKind::Input, "act_unit expects a unit of B* and a bilinear form");
  const Functional inv = convolution_inverse(alpha, t);
  return convolve(convolve(tensor(alpha, alpha), sigma, t, exec), compose_mult(inv, t), t, exec);
}

Scalar alpha_first_row(const Functional& alpha, const Functional& alpha_inv, const Functional& tau,
                       const BraidedBialgebra& b, std::size_t x, std::size_t y) {
  if (x == 0 || !restricted_comult(b, basis_element(x)).empty())
    throw HopflabError(ErrorKind::Input, b.basis_names[x] + " is not primitive");
  Scalar s;
  for (const auto& [lr, c] : b.delta[y]) {
    const Scalar head = c * Scalar(b.chi(x, lr.first)) * alpha.at(lr.first);
    if (head.is_zero()) continue;
    for (const auto& [k, v] : b.mult[x][lr.second]) s += head * v * alpha_inv.at(k);
    for (const auto& [mn, d] : b.delta[lr.second]) s += head * d * tau.at(x, mn.first) * alpha_inv.at(mn.second);
  }
  return s;
}

bool is_h_linear_unit(const Functional& alpha, const BraidedBialgebra& b, const GroupData& group) {
  for (std::size_t y = 0; y < b.dim(); ++y) {
    if (alpha.at(y).is_zero()) continue;
    for (std::size_t h = 0; h < group.order(); ++h)
      if (group.act(h, b.degree[y]) != 1) return false;
  }
  return true;
}

}  // namespace hopflab
