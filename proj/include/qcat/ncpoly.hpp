#pragma once

#include "qcat/matrix.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace qcat {

struct Generator {
  std::string name;
  int parity = 0;
  std::size_t row = 0;  // source basis index A of t_A^K
  std::size_t col = 0;  // target basis index K
};

/// Generators in their fixed order; the order of this list is the letter
/// order used by every monomial comparison.
struct Alphabet {
  std::vector<Generator> letters;

  std::size_t size() const { return letters.size(); }
  int parity(std::size_t i) const { return letters[i].parity; }

  friend bool operator==(const Alphabet& a, const Alphabet& b);
};

using Letter = std::uint32_t;
using Word = std::vector<Letter>;

/// Degree first, then lexicographic in letter order.
struct WordLess {
  bool operator()(const Word& a, const Word& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  }
};

int word_parity(const Alphabet& alphabet, const Word& w);

/// Noncommutative polynomial: a finite map word -> nonzero coefficient.
class NCPoly {
 public:
  using Terms = std::map<Word, Scalar, WordLess>;

  NCPoly() = default;
  static NCPoly monomial(Word w, const Scalar& coeff = 1);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  void add_term(const Word& w, const Scalar& coeff);
  Scalar coefficient(const Word& w) const;
  /// Greatest word in the monomial order; the polynomial must be nonzero.
  const Word& leading_word() const { return terms_.rbegin()->first; }
  const Scalar& leading_coefficient() const { return terms_.rbegin()->second; }
  /// Scaled so the leading coefficient is 1.
  NCPoly monic() const;

  NCPoly& operator+=(const NCPoly& other);
  NCPoly& operator-=(const NCPoly& other);
  NCPoly& operator*=(const Scalar& s);

  friend NCPoly operator+(NCPoly a, const NCPoly& b) { return a += b; }
  friend NCPoly operator-(NCPoly a, const NCPoly& b) { return a -= b; }
  friend NCPoly operator*(const Scalar& s, NCPoly a) { return a *= s; }
  /// Concatenation product.
  friend NCPoly operator*(const NCPoly& a, const NCPoly& b);
  friend bool operator==(const NCPoly&, const NCPoly&) = default;

  /// Greatest word first by default, which reads like a solved relation.
  std::string to_string(const Alphabet& alphabet, bool greatest_first = true) const;

 private:
  Terms terms_;
};

/// Span of quadratic relations, kept both as polynomials and as a
/// coefficient matrix over the degree-2 words (column x*N + y for word xy).
struct RelationSet {
  Alphabet alphabet;
  std::vector<NCPoly> polys;
  Matrix matrix;

  std::size_t rank() const;
};

RelationSet make_relation_set(Alphabet alphabet, std::vector<NCPoly> polys);

/// Coefficient vector of a degree-2 polynomial.
Vector degree2_vector(const NCPoly& p, std::size_t letters);
NCPoly degree2_poly(std::span<const Scalar> coeffs, std::size_t letters);

/// Canonical basis of the span: reduced echelon form against the monomial
/// order with greatest words first, every relation monic.
std::vector<NCPoly> canonical_relations(const RelationSet& r);

/// Row spans coincide.  Throws Error(AlphabetMismatch) for different
/// generator alphabets.
bool spans_equal(const RelationSet& a, const RelationSet& b);

}  // namespace qcat
