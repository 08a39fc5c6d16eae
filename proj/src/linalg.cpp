#include "hopflab/linalg.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "hopflab/errors.hpp"

namespace hopflab {

void LinearSystem::add_row(RVec row) {
  if (row.size() != cols) throw HopflabError(ErrorKind::Internal, "row length mismatch");
  a.push_back(std::move(row));
  ++rows;
}

namespace {

using ZRow = std::vector<mpz_class>;

ZRow integer_row(const RVec& row) {
  mpz_class l = 1;
  for (const auto& v : row) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.get_den_mpz_t());
  ZRow out(row.size());
  for (std::size_t i = 0; i < row.size(); ++i) out[i] = row[i].get_num() * (l / row[i].get_den());
  return out;
}

void divide_content(ZRow& row) {
  mpz_class g = 0;
  for (const auto& v : row) {
    if (v != 0) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    if (g == 1) return;
  }
  if (g > 1)
    for (auto& v : row) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
}

struct Reduced {
  std::vector<ZRow> rows;            // pivot rows, Gauss-Jordan form
  std::vector<std::size_t> pivots;   // pivot column per row
};

// Fraction-free Gauss-Jordan: every row op is row_r <- p*row_r - f*row_p,
// followed by division by the row content.
Reduced reduce(std::vector<ZRow> m, std::size_t cols) {
  Reduced out;
  std::size_t r0 = 0;
  for (std::size_t c = 0; c < cols && r0 < m.size(); ++c) {
    std::size_t p = r0;
    while (p < m.size() && m[p][c] == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[r0]);
    ZRow& piv = m[r0];
    if (piv[c] < 0)
      for (auto& v : piv) v = -v;
    divide_content(piv);
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == r0 || m[r][c] == 0) continue;
      const mpz_class f = m[r][c];
      const mpz_class pv = piv[c];
      for (std::size_t k = 0; k < cols; ++k) m[r][k] = pv * m[r][k] - f * piv[k];
      divide_content(m[r]);
    }
    out.pivots.push_back(c);
    ++r0;
  }
  m.resize(r0);
  out.rows = std::move(m);
  return out;
}

std::vector<ZRow> integer_rows(const LinearSystem& sys) {
  std::vector<ZRow> m;
  m.reserve(sys.rows);
  for (const auto& row : sys.a) {
    bool zero = std::all_of(row.begin(), row.end(), [](const Rational& v) { return v == 0; });
    if (!zero) m.push_back(integer_row(row));
  }
  return m;
}

}  // namespace

std::vector<RVec> nullspace(const LinearSystem& sys) {
  const Reduced red = reduce(integer_rows(sys), sys.cols);
  std::vector<bool> is_pivot(sys.cols, false);
  for (auto c : red.pivots) is_pivot[c] = true;
  std::vector<RVec> basis;
  for (std::size_t f = 0; f < sys.cols; ++f) {
    if (is_pivot[f]) continue;
    RVec v(sys.cols);
    v[f] = 1;
    for (std::size_t i = 0; i < red.rows.size(); ++i) {
      const auto c = red.pivots[i];
      v[c] = Rational(-red.rows[i][f], red.rows[i][c]);
      v[c].canonicalize();
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

std::size_t rank(const LinearSystem& sys) { return reduce(integer_rows(sys), sys.cols).pivots.size(); }

std::optional<RVec> solve(const LinearSystem& sys, const RVec& rhs) {
  LinearSystem aug(0, sys.cols + 1);
  for (std::size_t r = 0; r < sys.rows; ++r) {
    RVec row = sys.a[r];
    row.push_back(rhs[r]);
    aug.add_row(std::move(row));
  }
  const Reduced red = reduce(integer_rows(aug), aug.cols);
  RVec x(sys.cols);
  for (std::size_t i = 0; i < red.rows.size(); ++i) {
    const auto c = red.pivots[i];
    if (c == sys.cols) return std::nullopt;
    x[c] = Rational(red.rows[i][sys.cols], red.rows[i][c]);
    x[c].canonicalize();
  }
  return x;
}

RVec mat_vec(const LinearSystem& sys, const RVec& x) {
  RVec out(sys.rows);
  for (std::size_t r = 0; r < sys.rows; ++r)
    for (std::size_t c = 0; c < sys.cols; ++c)
      if (sys.a[r][c] != 0 && x[c] != 0) out[r] += sys.a[r][c] * x[c];
  return out;
}

std::optional<UnitPivotSolution> solve_unit_pivot(SMatrix a, std::vector<Scalar> b) {
  const std::size_t rows = a.size();
  const std::size_t cols = rows ? a[0].size() : 0;
  std::vector<bool> row_used(rows, false);
  std::vector<std::pair<std::size_t, std::size_t>> pivots;  // (row, col)
  std::vector<bool> col_pivot(cols, false);
  for (;;) {
    std::size_t pr = rows, pc = cols;
    for (std::size_t c = 0; c < cols && pr == rows; ++c) {
      if (col_pivot[c]) continue;
      for (std::size_t r = 0; r < rows; ++r)
        if (!row_used[r] && !a[r][c].is_zero() && a[r][c].is_constant()) {
          pr = r;
          pc = c;
          break;
        }
    }
    if (pr == rows) break;
    const Rational inv = 1 / a[pr][pc].constant_value();
    for (auto& v : a[pr]) v = v.scaled(inv);
    b[pr] = b[pr].scaled(inv);
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == pr || a[r][pc].is_zero()) continue;
      const Scalar f = a[r][pc];
      for (std::size_t k = 0; k < cols; ++k)
        if (!a[pr][k].is_zero()) a[r][k] -= f * a[pr][k];
      b[r] -= f * b[pr];
    }
    row_used[pr] = true;
    col_pivot[pc] = true;
    pivots.emplace_back(pr, pc);
  }
  for (std::size_t r = 0; r < rows; ++r) {
    if (row_used[r]) continue;
    for (std::size_t c = 0; c < cols; ++c)
      if (!a[r][c].is_zero())
        throw HopflabError(ErrorKind::NotConstant, "linear system needs a non-unit pivot: " + a[r][c].str());
    if (!b[r].is_zero()) return std::nullopt;
  }
  UnitPivotSolution sol;
  sol.x.assign(cols, Scalar());
  for (std::size_t c = 0; c < cols; ++c)
    if (!col_pivot[c]) sol.free_vars.push_back(c);
  for (auto [r, c] : pivots) sol.x[c] = b[r];
  return sol;
}

SMatrix invert_unit_pivot(const SMatrix& a) {
  const std::size_t n = a.size();
  SMatrix inv(n, std::vector<Scalar>(n));
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<Scalar> e(n);
    e[j] = Scalar(1);
    auto sol = solve_unit_pivot(a, e);
    if (!sol || !sol->free_vars.empty()) throw HopflabError(ErrorKind::NotInvertible, "matrix is singular");
    for (std::size_t i = 0; i < n; ++i) inv[i][j] = sol->x[i];
  }
  return inv;
}

UPoly upoly_trim(UPoly p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
  return p;
}

static UPoly upoly_mod(UPoly a, const UPoly& b) {
  a = upoly_trim(a);
  while (a.size() >= b.size() && !a.empty()) {
    const Rational f = a.back() / b.back();
    const std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= f * b[i];
    a = upoly_trim(a);
  }
  return a;
}

UPoly upoly_gcd(UPoly a, UPoly b) {
  a = upoly_trim(a);
  b = upoly_trim(b);
  while (!b.empty()) {
    UPoly r = upoly_mod(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    const Rational lead = a.back();
    for (auto& v : a) v /= lead;
  }
  return a;
}

static Rational upoly_eval(const UPoly& p, const Rational& x) {
  Rational acc = 0;
  for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + *it;
  return acc;
}

static std::vector<mpz_class> divisors(mpz_class n) {
  if (n < 0) n = -n;
  if (n > mpz_class("1000000000000")) throw HopflabError(ErrorKind::Unsupported, "coefficient too large for rational-root search");
  std::vector<mpz_class> out;
  for (mpz_class d = 1; d * d <= n; ++d)
    if (n % d == 0) {
      out.push_back(d);
      if (d * d != n) out.push_back(n / d);
    }
  return out;
}

std::vector<Rational> upoly_rational_roots(const UPoly& p_in) {
  UPoly p = upoly_trim(p_in);
  std::set<Rational> roots;
  if (p.size() <= 1) return {};
  std::size_t low = 0;
  while (p[low] == 0) ++low;
  if (low > 0) roots.insert(Rational(0));
  p.erase(p.begin(), p.begin() + static_cast<long>(low));
  if (p.size() > 1) {
    mpz_class l = 1;
    for (const auto& v : p) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.get_den_mpz_t());
    const mpz_class a0 = p.front().get_num() * (l / p.front().get_den());
    const mpz_class an = p.back().get_num() * (l / p.back().get_den());
    for (const auto& num : divisors(a0))
      for (const auto& den : divisors(an))
        for (int s : {1, -1}) {
          Rational x(num * s, den);
          x.canonicalize();
          if (upoly_eval(p, x) == 0) roots.insert(x);
        }
  }
  return {roots.begin(), roots.end()};
}

std::string upoly_str(const UPoly& p, const std::string& var) {
  const UPoly q = upoly_trim(p);
  if (q.empty()) return "0";
  auto space = make_space({var});
  Scalar s;
  for (std::size_t i = 0; i < q.size(); ++i)
    s += Scalar::monomial(space, mono_with_exp(0, 0, static_cast<unsigned>(i)), q[i]);
  return s.str();
}

std::string CommonRoot::describe() const {
  std::ostringstream os;
  switch (kind) {
    case Kind::NoRoot: os << "NoRoot"; break;
    case Kind::AllOfK: os << "AllOfK"; break;
    case Kind::Roots:
      os << "Roots{";
      for (std::size_t i = 0; i < roots.size(); ++i) os << (i ? "," : "") << roots[i].get_str();
      os << "}";
      break;
    case Kind::AlgebraicRoot: os << "AlgebraicRoot(" << upoly_str(gcd, variable) << ")"; break;
  }
  return os.str();
}

CommonRoot solve_common_root_1var(const std::vector<Scalar>& polys) {
  CommonRoot out;
  out.variable = "t";
  int var = -1;
  SpacePtr space;
  for (const auto& p : polys) {
    for (auto k : p.variables()) {
      const std::string& name = p.space()->names()[k];
      if (var < 0) {
        var = static_cast<int>(k);
        space = p.space();
        out.variable = name;
      } else if (name != out.variable) {
        throw HopflabError(ErrorKind::Input, "solve_common_root_1var: more than one variable");
      }
    }
  }
  UPoly g;
  for (const auto& p : polys) {
    UPoly u;
    for (const auto& [m, c] : p.terms()) {
      const unsigned e = m == 0 ? 0 : mono_exp(m, static_cast<std::size_t>(p.space()->index_of(out.variable)));
      if (u.size() <= e) u.resize(e + 1);
      u[e] += c;
    }
    g = upoly_gcd(g, u);
  }
  out.gcd = g;
  if (g.empty()) {
    out.kind = CommonRoot::Kind::AllOfK;
  } else if (g.size() == 1) {
    out.kind = CommonRoot::Kind::NoRoot;
  } else {
    out.roots = upoly_rational_roots(g);
    out.kind = out.roots.empty() ? CommonRoot::Kind::AlgebraicRoot : CommonRoot::Kind::Roots;
  }
  return out;
}

namespace {

void monomials_up_to(std::size_t nvars, const std::vector<std::size_t>& vars, unsigned deg, std::size_t pos,
                     Monomial cur, std::vector<Monomial>& out) {
  if (pos == vars.size()) {
    out.push_back(cur);
    return;
  }
  for (unsigned e = 0; e <= deg; ++e)
    monomials_up_to(nvars, vars, deg - e, pos + 1, mono_with_exp(cur, vars[pos], e), out);
}

}  // namespace

std::optional<std::vector<Scalar>> ideal_membership(const std::vector<Scalar>& gens, const Scalar& target,
                                                    unsigned degree_bound) {
  SpacePtr space = target.space();
  std::set<std::size_t> varset;
  for (auto k : target.variables()) varset.insert(k);
  for (const auto& g : gens) {
    if (!space && g.space()) space = g.space();
    for (auto k : g.variables()) varset.insert(k);
  }
  if (target.is_zero()) return std::vector<Scalar>(gens.size());
  if (target.total_degree() > degree_bound) return std::nullopt;
  const std::vector<std::size_t> vars(varset.begin(), varset.end());
  struct Column {
    std::size_t gen;
    Monomial mult;
  };
  std::vector<Column> columns;
  std::map<Monomial, std::size_t> row_of;
  std::vector<std::map<Monomial, Rational>> products;
  for (std::size_t j = 0; j < gens.size(); ++j) {
    if (gens[j].is_zero() || gens[j].total_degree() > degree_bound) continue;
    std::vector<Monomial> mults;
    monomials_up_to(vars.size(), vars, degree_bound - gens[j].total_degree(), 0, 0, mults);
    for (auto m : mults) {
      const Scalar prod = gens[j] * Scalar::monomial(space, m, 1);
      columns.push_back({j, m});
      products.push_back(prod.terms());
      for (const auto& [mm, c] : prod.terms()) row_of.emplace(mm, 0);
    }
  }
  for (const auto& [mm, c] : target.terms()) row_of.emplace(mm, 0);
  std::size_t idx = 0;
  for (auto& [mm, r] : row_of) r = idx++;
  LinearSystem sys(row_of.size(), columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c)
    for (const auto& [mm, v] : products[c]) sys.at(row_of[mm], c) = v;
  RVec rhs(row_of.size());
  for (const auto& [mm, v] : target.terms()) rhs[row_of[mm]] = v;
  auto x = solve(sys, rhs);
  if (!x) return std::nullopt;
  std::vector<Scalar> cert(gens.size());
  for (std::size_t c = 0; c < columns.size(); ++c)
    if ((*x)[c] != 0) cert[columns[c].gen] += Scalar::monomial(space, columns[c].mult, (*x)[c]);
  return cert;
}

}  // namespace hopflab
