#pragma once

#include "qcat/hom_algebra.hpp"
#include "qcat/quantum_object.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <utility>

namespace qcat::test {

inline Scalar q(long num, long den = 1) {
  Scalar s(num, den);
  s.canonicalize();
  return s;
}

/// Sudbery object from its strictly-off-diagonal entries; the reciprocal
/// entries and the diagonal (-1)^{p(A)} are filled in.
inline QuantumObject sudbery(const std::vector<int>& parities,
                             const std::map<std::pair<std::size_t, std::size_t>, Scalar>& q_entries,
                             const std::map<std::pair<std::size_t, std::size_t>, Scalar>& p_entries) {
  const std::size_t n = parities.size();
  Matrix qm(n, n), pm(n, n);
  for (std::size_t a = 0; a < n; ++a) qm(a, a) = pm(a, a) = parity_sign(parities[a]);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (a != b) qm(a, b) = pm(a, b) = parity_sign(parities[a] * parities[b]);
  for (const auto& [ab, v] : q_entries) {
    qm(ab.first, ab.second) = v;
    qm(ab.second, ab.first) = 1 / v;
  }
  for (const auto& [ab, v] : p_entries) {
    pm(ab.first, ab.second) = v;
    pm(ab.second, ab.first) = 1 / v;
  }
  return make_sudbery(GradedSpace(parities), qm, pm);
}

/// Even 2-dimensional object with p^{21} = p and q^{21} = q.
inline QuantumObject even2(const Scalar& q21, const Scalar& p21) {
  return sudbery({0, 0}, {{{1, 0}, q21}}, {{{1, 0}, p21}});
}

/// Even 2-dimensional normalized object with q^{21} = q.
inline QuantumObject normalized2(const Scalar& q21, int epsilon, const Scalar& lambda) {
  Matrix qm(2, 2);
  qm(0, 0) = qm(1, 1) = 1;
  qm(1, 0) = q21;
  qm(0, 1) = 1 / q21;
  return make_normalized(GradedSpace({0, 0}), qm, epsilon, lambda);
}

inline NCPoly term(Letter x, Letter y, const Scalar& c = 1) { return NCPoly::monomial({x, y}, c); }

/// Seeded source of admissible random parameters.
class Random {
 public:
  explicit Random(unsigned seed) : rng_(seed) {}

  std::size_t index(std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng_); }
  bool coin() { return index(2) == 1; }

  Scalar rational() {
    static const long values[] = {1, 2, 3, 4, 5, 7};
    Scalar s = q(values[index(6)], values[index(6)]);
    return coin() ? Scalar(-s) : s;
  }

  /// Nonzero, not -1; may be 1.
  Scalar constant() {
    Scalar c = rational();
    while (c == -1) c = rational();
    return c;
  }

  /// c != c' and c != 1/c'.
  Scalar constant_avoiding(const Scalar& c) {
    Scalar d = constant();
    while (d == c || d == 1 / c) d = constant();
    return d;
  }

  std::vector<int> parities(std::size_t n) {
    std::vector<int> p(n);
    for (auto& x : p) x = coin();
    return p;
  }

  std::vector<std::size_t> permutation(std::size_t n) {
    std::vector<std::size_t> p(n);
    std::iota(p.begin(), p.end(), 0);
    std::shuffle(p.begin(), p.end(), rng_);
    return p;
  }

  /// Sudbery object with quantum constant c: after listing the basis in a
  /// random order, p^{AB} = q^{AB} c^{sign(B-A)}.
  QuantumObject structured(std::size_t n, const Scalar& c) {
    auto par = parities(n);
    auto order = permutation(n);
    std::vector<std::size_t> pos(n);
    for (std::size_t i = 0; i < n; ++i) pos[order[i]] = i;
    std::map<std::pair<std::size_t, std::size_t>, Scalar> qe, pe;
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = a + 1; b < n; ++b) {
        Scalar qq = rational();
        qe[{a, b}] = qq;
        pe[{a, b}] = pos[b] > pos[a] ? Scalar(qq * c) : Scalar(qq / c);
      }
    return sudbery(par, qe, pe);
  }

  /// Sudbery object with independent random q and p (q + p != 0).
  QuantumObject unstructured(std::size_t n) {
    auto par = parities(n);
    std::map<std::pair<std::size_t, std::size_t>, Scalar> qe, pe;
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = a + 1; b < n; ++b) {
        Scalar qq = rational(), pp = rational();
        while (qq + pp == 0) pp = rational();
        qe[{a, b}] = qq;
        pe[{a, b}] = pp;
      }
    return sudbery(par, qe, pe);
  }

  /// Invertible n x n matrix.
  Matrix invertible(std::size_t n) {
    for (;;) {
      Matrix m(n, n);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m(i, j) = index(3) == 0 ? Scalar(0) : rational();
      if (rank(m) == n) return m;
    }
  }

  std::mt19937& engine() { return rng_; }

 private:
  std::mt19937 rng_;
};

}  // namespace qcat::test
