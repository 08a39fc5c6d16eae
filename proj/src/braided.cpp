#include "hopflab/braided.hpp"

#include <algorithm>
#include <sstream>

#include "hopflab/errors.hpp"

namespace hopflab {

void add_to(Element& e, std::size_t i, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = e.emplace(i, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) e.erase(it);
  }
}

void add_to(PairElement& e, std::size_t i, std::size_t j, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = e.emplace(std::make_pair(i, j), c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) e.erase(it);
  }
}

void add_scaled(Element& acc, const Element& e, const Scalar& c) {
  if (c.is_zero()) return;
  for (const auto& [i, v] : e) add_to(acc, i, v * c);
}

void add_scaled(PairElement& acc, const PairElement& e, const Scalar& c) {
  if (c.is_zero()) return;
  for (const auto& [ij, v] : e) add_to(acc, ij.first, ij.second, v * c);
}

Element basis_element(std::size_t i) { return Element{{i, Scalar(1)}}; }

bool elements_equal(const Element& a, const Element& b) {
  if (a.size() != b.size()) return false;
  for (auto ia = a.begin(), ib = b.begin(); ia != a.end(); ++ia, ++ib)
    if (ia->first != ib->first || ia->second != ib->second) return false;
  return true;
}

bool pairs_equal(const PairElement& a, const PairElement& b) {
  if (a.size() != b.size()) return false;
  for (auto ia = a.begin(), ib = b.begin(); ia != a.end(); ++ia, ++ib)
    if (ia->first != ib->first || ia->second != ib->second) return false;
  return true;
}

static Rational rational_pow(const Rational& base, long e) {
  Rational r(1);
  const Rational b = e >= 0 ? base : Rational(1) / base;
  for (long i = 0; i < (e >= 0 ? e : -e); ++i) r *= b;
  return r;
}

Rational braiding_scalar(const QMatrix& q, const MultiDegree& d, const MultiDegree& e) {
  Rational r(1);
  for (std::size_t i = 0; i < d.size(); ++i)
    for (std::size_t j = 0; j < e.size(); ++j)
      if (d[i] != 0 && e[j] != 0) r *= rational_pow(q[i][j], static_cast<long>(d[i]) * e[j]);
  return r;
}

MultiDegree degree_sum(const MultiDegree& a, const MultiDegree& b) {
  MultiDegree r = a;
  for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
  return r;
}

Rational action_scalar(const QMatrix& q, const std::vector<int>& g, const MultiDegree& d) {
  return braiding_scalar(q, MultiDegree(g.begin(), g.end()), d);
}

Element Algebra::from_free(const FreePoly& p) const {
  Element out;
  for (const auto& [w, c] : rewriting.normal_form(p)) {
    auto it = std::lower_bound(normal_words.begin(), normal_words.end(), w, DegLex{});
    if (it == normal_words.end() || *it != w) throw HopflabError(ErrorKind::Internal, "normal form outside basis");
    const auto col = static_cast<std::size_t>(it - normal_words.begin());
    for (std::size_t b = 0; b < dim(); ++b)
      if (!words_in_basis[b][col].is_zero()) add_to(out, b, words_in_basis[b][col] * c);
  }
  return out;
}

Element Algebra::multiply(const Element& u, const Element& v) const {
  Element out;
  for (const auto& [i, a] : u)
    for (const auto& [j, b] : v) add_scaled(out, mult[i][j], a * b);
  return out;
}

int Algebra::total_degree(std::size_t i) const {
  int s = 0;
  for (int d : degree[i]) s += d;
  return s;
}

std::size_t Algebra::index_of(const std::string& n) const {
  for (std::size_t i = 0; i < basis_names.size(); ++i)
    if (basis_names[i] == n) return i;
  throw HopflabError(ErrorKind::Input, "unknown basis element " + n + " in " + name);
}

static std::string word_name(const Word& w, const std::vector<std::string>& gens) {
  if (w.empty()) return "1";
  std::string s;
  for (int l : w) s += gens[static_cast<std::size_t>(l)];
  return s;
}

Algebra build_algebra(const Presentation& p) {
  const std::size_t theta = p.generators.size();
  if (theta == 0) throw HopflabError(ErrorKind::Semantic, "no generators");
  if (p.gen_degrees.size() != theta || p.q.size() != theta)
    throw HopflabError(ErrorKind::Semantic, "braiding matrix must be " + std::to_string(theta) + "x" + std::to_string(theta));
  for (const auto& row : p.q)
    if (row.size() != theta) throw HopflabError(ErrorKind::Semantic, "braiding matrix is not square");
  if (p.dimension < 1) throw HopflabError(ErrorKind::Semantic, "dimension must be at least 1");

  Algebra a;
  a.name = p.name;
  a.gen_names = p.generators;
  a.gen_degrees = p.gen_degrees;
  a.q = p.q;
  a.space = p.space;

  std::size_t longest = 1;
  for (const auto& r : p.relations)
    for (const auto& [w, c] : r) longest = std::max(longest, w.size());
  a.rewriting = RewriteSystem::complete(p.relations, 2 * longest + p.dimension);
  a.normal_words = a.rewriting.normal_words(p.dimension, static_cast<int>(theta));
  if (a.normal_words.size() != p.dimension)
    throw HopflabError(ErrorKind::PresentationInconsistency,
                       "found " + std::to_string(a.normal_words.size()) + " normal words, declared dimension " +
                           std::to_string(p.dimension));
  const std::size_t n = p.dimension;

  std::vector<FreePoly> basis_nf;
  if (!p.basis.empty()) {
    if (p.basis.size() != n)
      throw HopflabError(ErrorKind::PresentationInconsistency, "declared basis size differs from dimension");
    for (std::size_t b = 0; b < n; ++b) {
      MultiDegree d;
      if (!fp_homogeneous(p.basis[b], p.gen_degrees, d))
        throw HopflabError(ErrorKind::Semantic, "basis element " + p.basis_names[b] + " is not homogeneous");
      a.degree.push_back(d);
      a.basis_names.push_back(p.basis_names[b]);
      basis_nf.push_back(a.rewriting.normal_form(p.basis[b]));
    }
  } else {
    for (const auto& w : a.normal_words) {
      a.degree.push_back(word_degree(w, p.gen_degrees));
      a.basis_names.push_back(word_name(w, p.generators));
      basis_nf.push_back(fp_word(w));
    }
  }
  a.basis_in_words.assign(n, std::vector<Scalar>(n));
  for (std::size_t b = 0; b < n; ++b)
    for (const auto& [w, c] : basis_nf[b]) {
      auto it = std::lower_bound(a.normal_words.begin(), a.normal_words.end(), w, DegLex{});
      a.basis_in_words[static_cast<std::size_t>(it - a.normal_words.begin())][b] = c;
    }
  try {
    a.words_in_basis = invert_unit_pivot(a.basis_in_words);
  } catch (const HopflabError&) {
    throw HopflabError(ErrorKind::PresentationInconsistency, "declared basis is not a basis of the quotient");
  }
  if (basis_nf[0].size() != 1 || !basis_nf[0].begin()->first.empty() || basis_nf[0].begin()->second != Scalar(1))
    throw HopflabError(ErrorKind::Semantic, "the first basis element must be 1");

  a.mult.assign(n, std::vector<Element>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a.mult[i][j] = a.from_free(fp_mul(basis_nf[i], basis_nf[j]));
  for (std::size_t k = 0; k < theta; ++k) a.generator.push_back(a.from_free(fp_word(Word{static_cast<int>(k)})));
  return a;
}

PairElement braided_tensor_product(const Algebra& left, const Algebra& right, const PairElement& u,
                                   const PairElement& v) {
  PairElement out;
  for (const auto& [ab, c1] : u)
    for (const auto& [cd, c2] : v) {
      const Rational s = braiding_scalar(left.q, right.degree[ab.second], left.degree[cd.first]);
      const Element& ac = left.mult[ab.first][cd.first];
      const Element& bd = right.mult[ab.second][cd.second];
      if (ac.empty() || bd.empty()) continue;
      const Scalar coef = c1 * c2 * Scalar(s);
      for (const auto& [x, cx] : ac)
        for (const auto& [y, cy] : bd) add_to(out, x, y, coef * cx * cy);
    }
  return out;
}

std::vector<PairElement> extend_multiplicatively(const Algebra& src, const Algebra& left, const Algebra& right,
                                                 const std::vector<PairElement>& gen_images) {
  std::map<Word, PairElement, DegLex> image;
  image[Word{}] = PairElement{{{0, 0}, Scalar(1)}};
  for (const auto& w : src.normal_words) {
    if (w.empty()) continue;
    const Word prefix(w.begin(), w.end() - 1);
    auto it = image.find(prefix);
    if (it == image.end()) {
      // Prefixes of normal words are normal, so this cannot happen.
      throw HopflabError(ErrorKind::Internal, "missing prefix image");
    }
    image[w] = braided_tensor_product(left, right, it->second, gen_images[static_cast<std::size_t>(w.back())]);
  }
  std::vector<PairElement> out(src.dim());
  for (std::size_t b = 0; b < src.dim(); ++b)
    for (std::size_t wi = 0; wi < src.normal_words.size(); ++wi)
      add_scaled(out[b], image[src.normal_words[wi]], src.basis_in_words[wi][b]);
  return out;
}

BraidedBialgebra build_from_presentation(const Presentation& p, Exec exec) {
  BraidedBialgebra b;
  static_cast<Algebra&>(b) = build_algebra(p);
  auto assoc = check_associativity(b, exec);
  if (!assoc.ok) throw HopflabError(ErrorKind::IncompleteRewriting, "associativity fails: " + assoc.detail);
  std::vector<PairElement> gens;
  for (std::size_t k = 0; k < b.theta(); ++k) {
    PairElement d;
    for (const auto& [i, c] : b.generator[k]) {
      add_to(d, i, 0, c);
      add_to(d, 0, i, c);
    }
    gens.push_back(std::move(d));
  }
  b.delta = extend_multiplicatively(b, b, b, gens);
  return b;
}

Element multiply(const Algebra& a, const Element& u, const Element& v) { return a.multiply(u, v); }

PairElement comultiply(const BraidedBialgebra& b, const Element& u) {
  PairElement out;
  for (const auto& [i, c] : u) add_scaled(out, b.delta[i], c);
  return out;
}

PairElement restricted_comult(const BraidedBialgebra& b, const Element& u) {
  PairElement out;
  for (const auto& [i, c] : u) {
    if (i == 0) {
      add_to(out, 0, 0, c);
      continue;
    }
    PairElement d = b.delta[i];
    add_to(d, i, 0, Scalar(-1));
    add_to(d, 0, i, Scalar(-1));
    add_scaled(out, d, c);
  }
  return out;
}

Element yd_action(const Algebra& a, const std::vector<int>& g, const Element& u) {
  Element out;
  for (const auto& [i, c] : u) add_to(out, i, c * Scalar(action_scalar(a.q, g, a.degree[i])));
  return out;
}

namespace {

std::string triple_str(const Algebra& a, std::size_t i, std::size_t j, std::size_t k) {
  return "(" + a.basis_names[i] + ", " + a.basis_names[j] + ", " + a.basis_names[k] + ")";
}

bool assoc_ok(const Algebra& a, std::size_t i, std::size_t j, std::size_t k) {
  Element left, right;
  for (const auto& [m, c] : a.mult[i][j]) add_scaled(left, a.mult[m][k], c);
  for (const auto& [m, c] : a.mult[j][k]) add_scaled(right, a.mult[i][m], c);
  return elements_equal(left, right);
}

}  // namespace

CheckResult check_associativity(const Algebra& a, Exec exec) {
  const std::size_t n = a.dim();
  std::vector<char> bad(n * n * n, 0);
  for_each_index(n, exec, [&](std::size_t i) {
    for (std::size_t t = i * n * n; t < (i + 1) * n * n; ++t) bad[t] = assoc_ok(a, i, (t / n) % n, t % n) ? 0 : 1;
  });
  for (std::size_t t = 0; t < bad.size(); ++t)
    if (bad[t]) return {false, "associativity fails at " + triple_str(a, t / (n * n), (t / n) % n, t % n)};
  return {};
}

CheckResult check_associativity_serial(const Algebra& a) {
  const std::size_t n = a.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        // (b_i b_j) b_k and b_i (b_j b_k) expanded term by term.
        Element left, right;
        for (const auto& [m, c] : a.mult[i][j]) add_scaled(left, a.mult[m][k], c);
        for (const auto& [m, c] : a.mult[j][k]) add_scaled(right, a.mult[i][m], c);
        if (!elements_equal(left, right)) return {false, "associativity fails at " + triple_str(a, i, j, k)};
      }
  return {};
}

using Triple = std::map<std::array<std::size_t, 3>, Scalar>;

static void add_triple(Triple& t, std::size_t a, std::size_t b, std::size_t c, const Scalar& v) {
  if (v.is_zero()) return;
  auto [it, inserted] = t.emplace(std::array<std::size_t, 3>{a, b, c}, v);
  if (!inserted) {
    it->second += v;
    if (it->second.is_zero()) t.erase(it);
  }
}

static bool triples_equal(const Triple& a, const Triple& b) {
  if (a.size() != b.size()) return false;
  for (auto ia = a.begin(), ib = b.begin(); ia != a.end(); ++ia, ++ib)
    if (ia->first != ib->first || ia->second != ib->second) return false;
  return true;
}

CheckResult check_coassociativity(const BraidedBialgebra& b) {
  for (std::size_t i = 0; i < b.dim(); ++i) {
    Triple l, r;
    for (const auto& [xy, c] : b.delta[i]) {
      for (const auto& [uv, d] : b.delta[xy.first]) add_triple(l, uv.first, uv.second, xy.second, c * d);
      for (const auto& [uv, d] : b.delta[xy.second]) add_triple(r, xy.first, uv.first, uv.second, c * d);
    }
    if (!triples_equal(l, r)) return {false, "coassociativity fails at " + b.basis_names[i]};
  }
  return {};
}

CheckResult check_restricted_coassociativity(const BraidedBialgebra& b) {
  for (std::size_t i = 1; i < b.dim(); ++i) {
    const PairElement d = restricted_comult(b, basis_element(i));
    Triple l, r;
    for (const auto& [xy, c] : d) {
      for (const auto& [uv, e] : restricted_comult(b, basis_element(xy.first)))
        add_triple(l, uv.first, uv.second, xy.second, c * e);
      for (const auto& [uv, e] : restricted_comult(b, basis_element(xy.second)))
        add_triple(r, xy.first, uv.first, uv.second, c * e);
    }
    if (!triples_equal(l, r)) return {false, "restricted coassociativity fails at " + b.basis_names[i]};
  }
  return {};
}

CheckResult check_counit(const BraidedBialgebra& b) {
  for (std::size_t i = 0; i < b.dim(); ++i) {
    Element l, r;
    for (const auto& [xy, c] : b.delta[i]) {
      if (xy.first == 0) add_to(l, xy.second, c);
      if (xy.second == 0) add_to(r, xy.first, c);
    }
    if (!elements_equal(l, basis_element(i)) || !elements_equal(r, basis_element(i)))
      return {false, "counit axiom fails at " + b.basis_names[i]};
  }
  return {};
}

CheckResult check_delta_multiplicative(const BraidedBialgebra& b, Exec exec) {
  const std::size_t n = b.dim();
  std::vector<char> bad(n * n, 0);
  for_each_index(n * n, exec, [&](std::size_t t) {
    const std::size_t i = t / n, j = t % n;
    bad[t] = pairs_equal(comultiply(b, b.mult[i][j]), braided_tensor_product(b, b, b.delta[i], b.delta[j])) ? 0 : 1;
  });
  for (std::size_t t = 0; t < bad.size(); ++t)
    if (bad[t]) return {false, "Delta is not multiplicative at (" + b.basis_names[t / n] + ", " + b.basis_names[t % n] + ")"};
  return {};
}

CheckResult check_grading(const BraidedBialgebra& b) {
  for (std::size_t i = 0; i < b.dim(); ++i) {
    for (std::size_t j = 0; j < b.dim(); ++j)
      for (const auto& [k, c] : b.mult[i][j])
        if (b.degree[k] != degree_sum(b.degree[i], b.degree[j]))
          return {false, "product not graded at (" + b.basis_names[i] + ", " + b.basis_names[j] + ")"};
    for (const auto& [kl, c] : b.delta[i])
      if (degree_sum(b.degree[kl.first], b.degree[kl.second]) != b.degree[i])
        return {false, "Delta not graded at " + b.basis_names[i]};
  }
  return {};
}

CheckResult check_yd_automorphisms(const BraidedBialgebra& b) {
  for (std::size_t g = 0; g < b.theta(); ++g) {
    std::vector<int> e(b.theta(), 0);
    e[g] = 1;
    auto s = [&](std::size_t i) { return Scalar(action_scalar(b.q, e, b.degree[i])); };
    for (std::size_t i = 0; i < b.dim(); ++i) {
      for (std::size_t j = 0; j < b.dim(); ++j) {
        Element acted;
        for (const auto& [k, c] : b.mult[i][j]) add_to(acted, k, c * s(k));
        Element expected;
        add_scaled(expected, b.mult[i][j], s(i) * s(j));
        if (!elements_equal(acted, expected)) return {false, "action is not multiplicative for g" + std::to_string(g + 1)};
      }
      PairElement lhs, rhs;
      add_scaled(lhs, b.delta[i], s(i));
      for (const auto& [kl, c] : b.delta[i]) add_to(rhs, kl.first, kl.second, c * s(kl.first) * s(kl.second));
      if (!pairs_equal(lhs, rhs)) return {false, "action is not comultiplicative for g" + std::to_string(g + 1)};
    }
  }
  return {};
}

}  // namespace hopflab
