#include "hopflab/rewriting.hpp"

#include <algorithm>
#include <deque>

#include "hopflab/errors.hpp"

namespace hopflab {

FreePoly fp_word(const Word& w, const Scalar& c) {
  FreePoly p;
  if (!c.is_zero()) p.emplace(w, c);
  return p;
}

FreePoly fp_scalar(const Scalar& c) { return fp_word(Word{}, c); }

void fp_add(FreePoly& acc, const FreePoly& p, const Scalar& c) {
  if (c.is_zero()) return;
  for (const auto& [w, v] : p) {
    auto [it, inserted] = acc.emplace(w, v * c);
    if (!inserted) it->second += v * c;
    if (it->second.is_zero()) acc.erase(it);
  }
}

FreePoly fp_mul(const FreePoly& a, const FreePoly& b) {
  FreePoly r;
  for (const auto& [wa, ca] : a)
    for (const auto& [wb, cb] : b) {
      Word w = wa;
      w.insert(w.end(), wb.begin(), wb.end());
      fp_add(r, fp_word(w, ca * cb));
    }
  return r;
}

FreePoly fp_pow(const FreePoly& a, unsigned e) {
  FreePoly r = fp_scalar(Scalar(1));
  for (unsigned i = 0; i < e; ++i) r = fp_mul(r, a);
  return r;
}

std::vector<int> word_degree(const Word& w, const std::vector<std::vector<int>>& gen_degrees) {
  const std::size_t theta = gen_degrees.empty() ? 0 : gen_degrees[0].size();
  std::vector<int> d(theta, 0);
  for (int l : w)
    for (std::size_t k = 0; k < theta; ++k) d[k] += gen_degrees[static_cast<std::size_t>(l)][k];
  return d;
}

bool fp_homogeneous(const FreePoly& p, const std::vector<std::vector<int>>& gen_degrees, std::vector<int>& degree) {
  bool first = true;
  for (const auto& [w, c] : p) {
    auto d = word_degree(w, gen_degrees);
    if (first) {
      degree = d;
      first = false;
    } else if (d != degree) {
      return false;
    }
  }
  if (first) degree.assign(gen_degrees.empty() ? 0 : gen_degrees[0].size(), 0);
  return true;
}

bool RewriteSystem::find_redex(const Word& w, std::size_t& rule, std::size_t& offset) const {
  for (std::size_t r = 0; r < rules_.size(); ++r) {
    const Word& l = rules_[r].lead;
    if (l.size() > w.size()) continue;
    auto it = std::search(w.begin(), w.end(), l.begin(), l.end());
    if (it != w.end() || l.empty()) {
      rule = r;
      offset = static_cast<std::size_t>(it - w.begin());
      return true;
    }
  }
  return false;
}

bool RewriteSystem::is_normal(const Word& w) const {
  std::size_t r, o;
  return !find_redex(w, r, o);
}

FreePoly RewriteSystem::normal_form(const FreePoly& p) const {
  FreePoly work = p;
  FreePoly out;
  while (!work.empty()) {
    auto it = std::prev(work.end());  // largest word
    const Word w = it->first;
    const Scalar c = it->second;
    work.erase(it);
    std::size_t r, off;
    if (!find_redex(w, r, off)) {
      fp_add(out, fp_word(w, c));
      continue;
    }
    const Rule& rule = rules_[r];
    const Word left(w.begin(), w.begin() + static_cast<long>(off));
    const Word right(w.begin() + static_cast<long>(off + rule.lead.size()), w.end());
    for (const auto& [tw, tc] : rule.tail) {
      Word nw = left;
      nw.insert(nw.end(), tw.begin(), tw.end());
      nw.insert(nw.end(), right.begin(), right.end());
      fp_add(work, fp_word(nw, c * tc));
    }
  }
  return out;
}

void RewriteSystem::add_rule(Rule r) { rules_.push_back(std::move(r)); }

namespace {

FreePoly rule_poly(const Rule& r) {
  FreePoly p = fp_word(r.lead);
  fp_add(p, r.tail, Scalar(-1));
  return p;
}

FreePoly wrap(const Word& left, const FreePoly& p, const Word& right) {
  return fp_mul(fp_mul(fp_word(left), p), fp_word(right));
}

bool contains(const Word& hay, const Word& needle) {
  return std::search(hay.begin(), hay.end(), needle.begin(), needle.end()) != hay.end();
}

// Critical pairs of (a, b): overlaps of a suffix of a.lead with a prefix of
// b.lead, and b.lead occurring inside a.lead.
void critical_pairs(const Rule& a, const Rule& b, bool same, std::deque<FreePoly>& out) {
  const Word& u = a.lead;
  const Word& v = b.lead;
  const FreePoly pu = rule_poly(a);
  const FreePoly pv = rule_poly(b);
  for (std::size_t k = 1; k < std::min(u.size(), v.size()); ++k) {
    if (!std::equal(u.end() - static_cast<long>(k), u.end(), v.begin())) continue;
    const Word left(u.begin(), u.end() - static_cast<long>(k));
    const Word right(v.begin() + static_cast<long>(k), v.end());
    FreePoly s = wrap({}, pu, right);
    fp_add(s, wrap(left, pv, {}), Scalar(-1));
    out.push_back(std::move(s));
  }
  if (!same && v.size() <= u.size()) {
    for (std::size_t off = 0; off + v.size() <= u.size(); ++off) {
      if (!std::equal(v.begin(), v.end(), u.begin() + static_cast<long>(off))) continue;
      const Word left(u.begin(), u.begin() + static_cast<long>(off));
      const Word right(u.begin() + static_cast<long>(off + v.size()), u.end());
      FreePoly s = pu;
      fp_add(s, wrap(left, pv, right), Scalar(-1));
      out.push_back(std::move(s));
    }
  }
}

}  // namespace

RewriteSystem RewriteSystem::complete(const std::vector<FreePoly>& relations, std::size_t max_len) {
  RewriteSystem rs;
  std::deque<FreePoly> pending(relations.begin(), relations.end());
  std::size_t steps = 0;
  while (!pending.empty()) {
    if (++steps > 200000) throw HopflabError(ErrorKind::IncompleteRewriting, "completion did not terminate");
    FreePoly p = rs.normal_form(pending.front());
    pending.pop_front();
    if (p.empty()) continue;
    auto lead_it = std::prev(p.end());
    const Word lead = lead_it->first;
    const Scalar lc = lead_it->second;
    if (!lc.is_constant())
      throw HopflabError(ErrorKind::NonUnitLeading, "leading coefficient " + lc.str() + " is not a rational constant");
    if (lead.size() > max_len)
      throw HopflabError(ErrorKind::IncompleteRewriting, "completion needs rules longer than the bound");
    const Rational inv = 1 / lc.constant_value();
    Rule rule{lead, {}};
    for (const auto& [w, c] : p)
      if (w != lead) fp_add(rule.tail, fp_word(w, c.scaled(-inv)));
    // Rules whose lead contains the new lead become redundant; re-queue them.
    std::vector<Rule> kept;
    for (auto& old : rs.rules_) {
      if (contains(old.lead, lead))
        pending.push_back(rule_poly(old));
      else
        kept.push_back(std::move(old));
    }
    rs.rules_ = std::move(kept);
    rs.add_rule(rule);
    const Rule& nr = rs.rules_.back();
    for (const auto& other : rs.rules_) {
      const bool same = &other == &nr;
      critical_pairs(nr, other, same, pending);
      if (!same) critical_pairs(other, nr, false, pending);
    }
  }
  return rs;
}

std::vector<Word> RewriteSystem::normal_words(std::size_t limit, int letters) const {
  std::vector<Word> out;
  std::vector<Word> level{Word{}};
  while (!level.empty()) {
    for (const auto& w : level) {
      out.push_back(w);
      if (out.size() > limit)
        throw HopflabError(ErrorKind::PresentationInconsistency,
                           "normal words exceed the declared dimension " + std::to_string(limit));
    }
    std::vector<Word> next;
    for (const auto& w : level)
      for (int l = 0; l < letters; ++l) {
        Word nw = w;
        nw.push_back(l);
        // Only suffixes can newly contain a rule lead.
        bool ok = true;
        for (const auto& r : rules_)
          if (r.lead.size() <= nw.size() && std::equal(r.lead.rbegin(), r.lead.rend(), nw.rbegin())) {
            ok = false;
            break;
          }
        if (ok) next.push_back(std::move(nw));
      }
    level = std::move(next);
  }
  std::sort(out.begin(), out.end(), DegLex{});
  return out;
}

}  // namespace hopflab
