#include "qcat/ncpoly.hpp"

#include "qcat/error.hpp"

#include <numeric>
#include <sstream>

namespace qcat {

bool operator==(const Alphabet& a, const Alphabet& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a.letters[i].name != b.letters[i].name || a.letters[i].parity != b.letters[i].parity) return false;
  return true;
}

int word_parity(const Alphabet& alphabet, const Word& w) {
  int p = 0;
  for (auto x : w) p ^= alphabet.parity(x);
  return p;
}

NCPoly NCPoly::monomial(Word w, const Scalar& coeff) {
  NCPoly p;
  p.add_term(w, coeff);
  return p;
}

void NCPoly::add_term(const Word& w, const Scalar& coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = terms_.try_emplace(w, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

Scalar NCPoly::coefficient(const Word& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? Scalar(0) : it->second;
}

NCPoly NCPoly::monic() const {
  if (is_zero()) return *this;
  Scalar inv = 1 / leading_coefficient();
  NCPoly out = *this;
  out *= inv;
  return out;
}

NCPoly& NCPoly::operator+=(const NCPoly& other) {
  for (const auto& [w, c] : other.terms_) add_term(w, c);
  return *this;
}

NCPoly& NCPoly::operator-=(const NCPoly& other) {
  for (const auto& [w, c] : other.terms_) add_term(w, -c);
  return *this;
}

NCPoly& NCPoly::operator*=(const Scalar& s) {
  if (s == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [w, c] : terms_) c *= s;
  return *this;
}

NCPoly operator*(const NCPoly& a, const NCPoly& b) {
  NCPoly out;
  for (const auto& [wa, ca] : a.terms_)
    for (const auto& [wb, cb] : b.terms_) {
      Word w = wa;
      w.insert(w.end(), wb.begin(), wb.end());
      out.add_term(w, ca * cb);
    }
  return out;
}

std::string NCPoly::to_string(const Alphabet& alphabet, bool greatest_first) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  auto emit = [&](const Word& w, const Scalar& c) {
    Scalar mag = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    if (mag != 1 || w.empty()) os << mag << (w.empty() ? "" : " ");
    for (std::size_t k = 0; k < w.size(); ++k) {
      const auto& name = alphabet.letters[w[k]].name;
      if (k > 0 && name.size() > 1) os << '*';
      os << name;
    }
    first = false;
  };
  if (greatest_first) {
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) emit(it->first, it->second);
  } else {
    for (const auto& [w, c] : terms_) emit(w, c);
  }
  return os.str();
}

std::size_t RelationSet::rank() const { return qcat::rank(matrix); }

Vector degree2_vector(const NCPoly& p, std::size_t letters) {
  Vector v(letters * letters);
  for (const auto& [w, c] : p.terms()) {
    if (w.size() != 2) throw Error(ErrorKind::DegreeMismatch, "relation is not homogeneous quadratic");
    v[w[0] * letters + w[1]] += c;
  }
  return v;
}

NCPoly degree2_poly(std::span<const Scalar> coeffs, std::size_t letters) {
  NCPoly p;
  for (std::size_t i = 0; i < coeffs.size(); ++i)
    if (coeffs[i] != 0) p.add_term(Word{Letter(i / letters), Letter(i % letters)}, coeffs[i]);
  return p;
}

RelationSet make_relation_set(Alphabet alphabet, std::vector<NCPoly> polys) {
  const std::size_t n = alphabet.size();
  Matrix m(0, n * n);
  std::vector<NCPoly> kept;
  for (auto& p : polys) {
    if (p.is_zero()) continue;
    m.append_row(degree2_vector(p, n));
    kept.push_back(p.monic());
  }
  return RelationSet{std::move(alphabet), std::move(kept), std::move(m)};
}

std::vector<NCPoly> canonical_relations(const RelationSet& r) {
  const std::size_t n = r.alphabet.size();
  std::vector<std::size_t> order(n * n);
  std::iota(order.rbegin(), order.rend(), std::size_t{0});
  Echelon e = rref(r.matrix, order);
  std::vector<NCPoly> out;
  for (std::size_t i = 0; i < e.reduced.rows(); ++i) out.push_back(degree2_poly(e.reduced.row(i), n));
  return out;
}

bool spans_equal(const RelationSet& a, const RelationSet& b) {
  if (!(a.alphabet == b.alphabet))
    throw Error(ErrorKind::AlphabetMismatch, "relation sets use different generator alphabets");
  return same_row_space(a.matrix, b.matrix);
}

}  // namespace qcat
