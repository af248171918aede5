#pragma once

#include "qcat/ncpoly.hpp"

#include <optional>
#include <compare>
#include <vector>

namespace qcat {

/// Degree first, then lexicographic with letters in generator (row-major)
/// order.
std::strong_ordering monomial_compare(const Word& a, const Word& b);

/// Non-decreasing, and no odd letter appears twice.
bool is_ordered_word(const Alphabet& alphabet, const Word& w);

/// Quadratic rewriting rules, each solving a relation for its greatest word.
class RewriteSystem {
 public:
  const Alphabet& alphabet() const { return alphabet_; }
  std::size_t rule_count() const { return rules_.size(); }
  /// Rule right-hand side for the pair xy, if xy is a left side.
  const NCPoly* rule(Letter x, Letter y) const;
  const std::vector<std::pair<Word, NCPoly>>& rules() const { return rules_; }

  /// Some ordered word is a left side, or some non-ordered degree-2 word is
  /// not; the ordered monomials then differ from the normal words already in
  /// degree 2.
  bool degree2_defect() const { return !defect_leaders_.empty() || !unreduced_words_.empty(); }
  const std::vector<Word>& defect_leaders() const { return defect_leaders_; }
  const std::vector<Word>& unreduced_words() const { return unreduced_words_; }

  friend RewriteSystem build_rewrite_system(const RelationSet& relations);

 private:
  Alphabet alphabet_;
  std::vector<std::pair<Word, NCPoly>> rules_;
  std::vector<int> table_;  // letters*letters -> rule index or -1
  std::vector<Word> defect_leaders_;
  std::vector<Word> unreduced_words_;
};

/// Reduced echelon form of the relation span with greatest words first; each
/// row becomes leader -> -(remaining terms).
RewriteSystem build_rewrite_system(const RelationSet& relations);

struct NormalFormTrace {
  std::size_t steps = 0;
  /// The rewritten words formed a strictly decreasing sequence.
  bool monotone = true;
};

/// Repeatedly rewrites the leftmost reducible pair of the greatest reducible
/// term until no left side occurs as a subword.
NCPoly normal_form(const NCPoly& p, const RewriteSystem& system, NormalFormTrace* trace = nullptr);

struct Overlap {
  Word word;  // xyz with xy and yz both left sides
  NCPoly via_left;
  NCPoly via_right;
  bool resolved = false;
};

struct ConfluenceReport {
  std::vector<Overlap> overlaps;
  std::size_t failures() const;
  bool confluent() const { return failures() == 0; }
};

/// Resolves every cubic overlap both ways and compares normal forms.
ConfluenceReport confluence_check(const RewriteSystem& system);

}  // namespace qcat
