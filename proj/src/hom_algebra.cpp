#include "qcat/hom_algebra.hpp"

#include "qcat/error.hpp"

#include <stdexcept>

namespace qcat {

Alphabet hom_alphabet(const GradedSpace& source, const GradedSpace& target) {
  const std::size_t n = source.dim(), m = target.dim();
  Alphabet alphabet;
  const bool letters = n * m <= 26;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t k = 0; k < m; ++k) {
      Generator g;
      g.row = a;
      g.col = k;
      g.parity = (source.parity(a) + target.parity(k)) & 1;
      if (letters) {
        g.name = std::string(1, static_cast<char>('a' + a * m + k));
      } else if (n <= 9 && m <= 9) {
        g.name = "t" + std::to_string(a + 1) + std::to_string(k + 1);
      } else {
        g.name = "t" + std::to_string(a + 1) + "_" + std::to_string(k + 1);
      }
      alphabet.letters.push_back(std::move(g));
    }
  return alphabet;
}

RelationSet derive_relations_general(const QuantumObject& source, const QuantumObject& target) {
  if (source.component_count() != target.component_count())
    throw Error(ErrorKind::ComponentCountMismatch,
                "objects have " + std::to_string(source.component_count()) + " and " +
                    std::to_string(target.component_count()) + " components");
  const GradedSpace& v = source.space();
  const GradedSpace& w = target.space();
  const std::size_t n = v.dim(), m = w.dim();
  const auto signs = pairing_signs(v);

  std::vector<NCPoly> polys;
  for (std::size_t k = 0; k < source.component_count(); ++k) {
    Matrix ann = annihilator(source.component(k), n * n, signs);
    Matrix f_basis = target.component_basis(k);
    for (std::size_t gi = 0; gi < ann.rows(); ++gi)
      for (std::size_t fi = 0; fi < f_basis.rows(); ++fi) {
        NCPoly rel;
        for (std::size_t a = 0; a < n; ++a)
          for (std::size_t b = 0; b < n; ++b) {
            const Scalar& g = ann(gi, a * n + b);
            if (g == 0) continue;
            for (std::size_t kk = 0; kk < m; ++kk)
              for (std::size_t l = 0; l < m; ++l) {
                const Scalar& f = f_basis(fi, kk * m + l);
                if (f == 0) continue;
                Scalar c = g * f * parity_sign(v.parity(b) * w.parity(kk));
                rel.add_term(Word{hom_letter(a, kk, m), hom_letter(b, l, m)}, c);
              }
          }
        polys.push_back(std::move(rel));
      }
  }
  return make_relation_set(hom_alphabet(v, w), std::move(polys));
}

RelationSet derive_relations_sudbery(const QuantumObject& source, const QuantumObject& target) {
  if (!source.sudbery() || !target.sudbery())
    throw Error(ErrorKind::BadParameters, "closed-form relations need Sudbery parameters on both objects");
  const GradedSpace& v = source.space();
  const GradedSpace& w = target.space();
  const std::size_t n = v.dim(), m = w.dim();
  const Matrix& qv = source.sudbery()->q;
  const Matrix& pv = source.sudbery()->p;
  const Matrix& qw = target.sudbery()->q;
  const Matrix& pw = target.sudbery()->p;
  auto t = [m](std::size_t row, std::size_t col) { return hom_letter(row, col, m); };

  std::vector<NCPoly> polys;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t k = 0; k < m; ++k)
        for (std::size_t l = 0; l < m; ++l) {
          const int pa = v.parity(a), pb = v.parity(b), pk = w.parity(k), pl = w.parity(l);
          NCPoly rel;
          rel.add_term(Word{t(a, k), t(b, l)}, 1);
          if (a == b) {
            // one row
            const Scalar den = pw(l, k) * (1 - parity_sign(pa)) + qw(l, k) * (1 + parity_sign(pa));
            rel.add_term(Word{t(a, l), t(a, k)}, -Scalar(2 * parity_sign(pa * (pk + pl + 1))) / den);
          } else if (k == l) {
            // one column
            const Scalar num = pv(b, a) * (1 + parity_sign(pk)) + qv(b, a) * (1 - parity_sign(pk));
            rel.add_term(Word{t(b, k), t(a, k)}, -num / (2 * parity_sign((pa + pb + 1) * pk)));
          } else {
            const Scalar den = pw(l, k) + qw(l, k);
            rel.add_term(Word{t(b, l), t(a, k)},
                         -(pv(b, a) + qv(b, a)) / den * parity_sign(pa * pl + pb * pk));
            rel.add_term(Word{t(b, k), t(a, l)},
                         -(pv(b, a) * pw(l, k) - qv(b, a) * qw(l, k)) / den * parity_sign((pa + pb) * pk));
          }
          polys.push_back(std::move(rel));
        }
  return make_relation_set(hom_alphabet(v, w), std::move(polys));
}

std::size_t expected_relation_count(const QuantumObject& source, const QuantumObject& target) {
  std::size_t total = 0;
  const std::size_t n2 = source.tensor_dim();
  for (std::size_t k = 0; k < source.component_count(); ++k)
    total += (n2 - source.component_dim(k)) * target.component_dim(k);
  return total;
}

HomAlgebra make_hom_algebra(const QuantumObject& source, const QuantumObject& target) {
  RelationSet rels = derive_relations_general(source, target);
  const std::size_t expected = expected_relation_count(source, target);
  if (rels.polys.size() != expected || rels.rank() != expected)
    throw std::logic_error("hom relations are not linearly independent");
  Alphabet alphabet = rels.alphabet;
  return HomAlgebra{source, target, std::move(alphabet), std::move(rels)};
}

RelationSet bilinear_form_relations(const QuantumObject& object) {
  RelationSet rels = derive_relations_general(object, dual_object(object));
  const std::size_t n = object.dim();
  for (auto& g : rels.alphabet.letters) {
    const std::string sep = n <= 9 ? "" : "_";
    g.name = "t" + std::to_string(g.row + 1) + sep + std::to_string(g.col + 1);
  }
  return rels;
}

}  // namespace qcat
