#include "qcat/rewrite.hpp"

#include <numeric>

namespace qcat {

std::strong_ordering monomial_compare(const Word& a, const Word& b) {
  if (a.size() != b.size()) return a.size() <=> b.size();
  return a <=> b;
}

bool is_ordered_word(const Alphabet& alphabet, const Word& w) {
  for (std::size_t i = 1; i < w.size(); ++i) {
    if (w[i - 1] > w[i]) return false;
    if (w[i - 1] == w[i] && alphabet.parity(w[i]) == 1) return false;
  }
  return true;
}

const NCPoly* RewriteSystem::rule(Letter x, Letter y) const {
  const int idx = table_[x * alphabet_.size() + y];
  return idx < 0 ? nullptr : &rules_[idx].second;
}

RewriteSystem build_rewrite_system(const RelationSet& relations) {
  RewriteSystem sys;
  sys.alphabet_ = relations.alphabet;
  const std::size_t n = relations.alphabet.size();
  sys.table_.assign(n * n, -1);

  for (const auto& rel : canonical_relations(relations)) {
    Word leader = rel.leading_word();
    NCPoly rhs;
    for (const auto& [w, c] : rel.terms())
      if (w != leader) rhs.add_term(w, -c);
    sys.table_[leader[0] * n + leader[1]] = static_cast<int>(sys.rules_.size());
    if (is_ordered_word(sys.alphabet_, leader)) sys.defect_leaders_.push_back(leader);
    sys.rules_.emplace_back(std::move(leader), std::move(rhs));
  }
  for (Letter x = 0; x < n; ++x)
    for (Letter y = 0; y < n; ++y) {
      Word w{x, y};
      if (!is_ordered_word(sys.alphabet_, w) && sys.table_[x * n + y] < 0) sys.unreduced_words_.push_back(w);
    }
  return sys;
}

namespace {

// Position of the leftmost reducible pair, or npos.
std::size_t reducible_position(const Word& w, const RewriteSystem& sys) {
  for (std::size_t i = 0; i + 1 < w.size(); ++i)
    if (sys.rule(w[i], w[i + 1])) return i;
  return Word().max_size();
}

}  // namespace

NCPoly normal_form(const NCPoly& p, const RewriteSystem& system, NormalFormTrace* trace) {
  NCPoly result = p;
  std::optional<Word> last;
  const std::size_t npos = Word().max_size();
  while (true) {
    const Word* target = nullptr;
    std::size_t pos = npos;
    for (auto it = result.terms().rbegin(); it != result.terms().rend(); ++it) {
      pos = reducible_position(it->first, system);
      if (pos != npos) {
        target = &it->first;
        break;
      }
    }
    if (!target) break;

    Word w = *target;
    Scalar c = result.coefficient(w);
    const NCPoly& rhs = *system.rule(w[pos], w[pos + 1]);
    result.add_term(w, -c);
    for (const auto& [rw, rc] : rhs.terms()) {
      Word nw(w.begin(), w.begin() + pos);
      nw.insert(nw.end(), rw.begin(), rw.end());
      nw.insert(nw.end(), w.begin() + pos + 2, w.end());
      result.add_term(nw, c * rc);
    }
    if (trace) {
      ++trace->steps;
      if (last && !(monomial_compare(w, *last) < 0)) trace->monotone = false;
    }
    last = std::move(w);
  }
  return result;
}

std::size_t ConfluenceReport::failures() const {
  std::size_t n = 0;
  for (const auto& o : overlaps)
    if (!o.resolved) ++n;
  return n;
}

ConfluenceReport confluence_check(const RewriteSystem& system) {
  ConfluenceReport report;
  const Letter n = static_cast<Letter>(system.alphabet().size());
  for (Letter x = 0; x < n; ++x)
    for (Letter y = 0; y < n; ++y) {
      const NCPoly* left = system.rule(x, y);
      if (!left) continue;
      for (Letter z = 0; z < n; ++z) {
        const NCPoly* right = system.rule(y, z);
        if (!right) continue;
        Overlap o;
        o.word = {x, y, z};
        o.via_left = normal_form(*left * NCPoly::monomial({z}), system);
        o.via_right = normal_form(NCPoly::monomial({x}) * *right, system);
        o.resolved = o.via_left == o.via_right;
        report.overlaps.push_back(std::move(o));
      }
    }
  return report;
}

}  // namespace qcat
