// Free algebra polynomials and noncommutative rewriting (Knuth-Bendix /
// Buchberger-style completion) under degree-lexicographic order.
#pragma once

#include <map>
#include <vector>

#include "hopflab/scalar.hpp"

namespace hopflab {

// Letters are generator indices; a larger index is a larger letter.
using Word = std::vector<int>;

struct DegLex {
  bool operator()(const Word& a, const Word& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  }
};

using FreePoly = std::map<Word, Scalar, DegLex>;

FreePoly fp_word(const Word& w, const Scalar& c = Scalar(1));
FreePoly fp_scalar(const Scalar& c);
void fp_add(FreePoly& acc, const FreePoly& p, const Scalar& c = Scalar(1));
FreePoly fp_mul(const FreePoly& a, const FreePoly& b);
FreePoly fp_pow(const FreePoly& a, unsigned e);
// All words share this multidegree, or nullopt-like empty vector if mixed.
bool fp_homogeneous(const FreePoly& p, const std::vector<std::vector<int>>& gen_degrees, std::vector<int>& degree);
std::vector<int> word_degree(const Word& w, const std::vector<std::vector<int>>& gen_degrees);

struct Rule {
  Word lead;
  FreePoly tail;  // lead -> tail, every tail word smaller than lead
};

class RewriteSystem {
 public:
  RewriteSystem() = default;
  // Completes the relations (each read as "poly = 0"). Throws NonUnitLeading on
  // a non-rational leading coefficient and IncompleteRewriting when a rule
  // longer than max_len would be needed.
  static RewriteSystem complete(const std::vector<FreePoly>& relations, std::size_t max_len);

  FreePoly normal_form(const FreePoly& p) const;
  bool is_normal(const Word& w) const;
  // Normal words in deglex order; throws PresentationInconsistency if more
  // than `limit` exist.
  std::vector<Word> normal_words(std::size_t limit, int letters) const;
  const std::vector<Rule>& rules() const { return rules_; }

 private:
  // Position of the first rule lead inside w, as (rule index, offset).
  bool find_redex(const Word& w, std::size_t& rule, std::size_t& offset) const;
  void add_rule(Rule r);

  std::vector<Rule> rules_;
};

}  // namespace hopflab
