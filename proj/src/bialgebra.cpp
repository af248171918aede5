#include "qcat/bialgebra.hpp"

#include "qcat/error.hpp"

namespace qcat {

void add_tensor_term(TensorPoly& t, std::vector<Word> key, const Scalar& c) {
  if (c == 0) return;
  auto [it, inserted] = t.try_emplace(std::move(key), c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) t.erase(it);
  }
}

namespace {

void comultiply_word(const Word& w, const Scalar& coeff, const GradedSpace& a, const GradedSpace& b,
                     const GradedSpace& c, TensorPoly& out) {
  const std::size_t mb = b.dim(), mc = c.dim();
  const std::size_t d = w.size();
  std::vector<std::size_t> rows(d), cols(d);
  for (std::size_t i = 0; i < d; ++i) {
    rows[i] = w[i] / mc;
    cols[i] = w[i] % mc;
  }
  std::vector<std::size_t> mid(d, 0);
  while (true) {
    Word left(d), right(d);
    int sign = 0;
    for (std::size_t j = 0; j < d; ++j) {
      left[j] = hom_letter(rows[j], mid[j], mb);
      right[j] = hom_letter(mid[j], cols[j], mc);
      const int xj = a.parity(rows[j]) + b.parity(mid[j]);
      for (std::size_t i = 0; i < j; ++i) sign += (b.parity(mid[i]) + c.parity(cols[i])) * xj;
    }
    add_tensor_term(out, {std::move(left), std::move(right)}, coeff * parity_sign(sign));

    std::size_t k = 0;
    while (k < d && ++mid[k] == mb) mid[k++] = 0;
    if (k == d) break;
  }
}

// Applies f to one tensor factor of every term.
template <class F>
TensorPoly apply_to_factor(const TensorPoly& t, std::size_t factor, F&& f) {
  TensorPoly out;
  for (const auto& [key, coeff] : t) {
    TensorPoly image = f(NCPoly::monomial(key[factor], coeff));
    for (const auto& [sub, c] : image) {
      std::vector<Word> nk(key.begin(), key.begin() + factor);
      nk.insert(nk.end(), sub.begin(), sub.end());
      nk.insert(nk.end(), key.begin() + factor + 1, key.end());
      add_tensor_term(out, std::move(nk), c);
    }
  }
  return out;
}

std::vector<Word> all_words(std::size_t letters, std::size_t max_degree) {
  std::vector<Word> out{Word{}};
  std::vector<Word> layer{Word{}};
  for (std::size_t d = 1; d <= max_degree; ++d) {
    std::vector<Word> next;
    for (const auto& w : layer)
      for (Letter x = 0; x < letters; ++x) {
        Word nw = w;
        nw.push_back(x);
        next.push_back(nw);
      }
    out.insert(out.end(), next.begin(), next.end());
    layer = std::move(next);
  }
  return out;
}

// π_ab · X · π_bc^T for X the (2,2)-bidegree part of t.
bool vanishes_in_quotients(const TensorPoly& t, const Matrix& left_map, std::size_t left_letters,
                           const Matrix& right_map, std::size_t right_letters) {
  const std::size_t ql = left_map.rows(), qr = right_map.rows();
  Matrix y(ql, qr);
  for (const auto& [key, c] : t) {
    if (key.size() != 2 || key[0].size() != 2 || key[1].size() != 2)
      throw Error(ErrorKind::DegreeMismatch, "expected bidegree (2,2)");
    const std::size_t li = key[0][0] * left_letters + key[0][1];
    const std::size_t ri = key[1][0] * right_letters + key[1][1];
    for (std::size_t i = 0; i < ql; ++i) {
      const Scalar& a = left_map(i, li);
      if (a == 0) continue;
      for (std::size_t j = 0; j < qr; ++j) {
        const Scalar& b = right_map(j, ri);
        if (b != 0) y(i, j) += c * a * b;
      }
    }
  }
  return y.is_zero();
}

}  // namespace

TensorPoly comultiply(const NCPoly& p, const GradedSpace& a, const GradedSpace& b, const GradedSpace& c) {
  TensorPoly out;
  for (const auto& [w, coeff] : p.terms()) comultiply_word(w, coeff, a, b, c, out);
  return out;
}

ComposableTriple make_triple(const QuantumObject& a, const QuantumObject& b, const QuantumObject& c) {
  return ComposableTriple{make_hom_algebra(a, b), make_hom_algebra(b, c), make_hom_algebra(a, c)};
}

ComposableTriple make_triple(HomAlgebra ab, HomAlgebra bc, HomAlgebra ac) {
  if (!(ab.target.space() == bc.source.space()) || !(ab.source.space() == ac.source.space()) ||
      !(bc.target.space() == ac.target.space()))
    throw Error(ErrorKind::WrongShape, "hom algebras do not form a composable chain");
  return ComposableTriple{std::move(ab), std::move(bc), std::move(ac)};
}

Matrix quotient_map(const RelationSet& relations) {
  const std::size_t n2 = relations.alphabet.size() * relations.alphabet.size();
  if (relations.matrix.rows() == 0) return Matrix::identity(n2);
  return Matrix::from_rows(kernel_basis(relations.matrix), n2);
}

bool comultiplication_check(const ComposableTriple& t) {
  const Matrix pl = quotient_map(t.ab.relations);
  const Matrix pr = quotient_map(t.bc.relations);
  const auto& a = t.ac.source.space();
  const auto& b = t.ab.target.space();
  const auto& c = t.ac.target.space();
  for (const auto& rel : t.ac.relations.polys) {
    TensorPoly image = comultiply(rel, a, b, c);
    if (!vanishes_in_quotients(image, pl, t.ab.alphabet.size(), pr, t.bc.alphabet.size())) return false;
  }
  return true;
}

bool coassociativity_check(const QuantumObject& a, const QuantumObject& b, const QuantumObject& c,
                           const QuantumObject& d, std::size_t max_degree) {
  const auto &va = a.space(), &vb = b.space(), &vc = c.space(), &vd = d.space();
  for (const auto& w : all_words(va.dim() * vd.dim(), max_degree)) {
    const NCPoly x = NCPoly::monomial(w);
    TensorPoly left = apply_to_factor(comultiply(x, va, vc, vd), 0,
                                      [&](const NCPoly& u) { return comultiply(u, va, vb, vc); });
    TensorPoly right = apply_to_factor(comultiply(x, va, vb, vd), 1,
                                       [&](const NCPoly& u) { return comultiply(u, vb, vc, vd); });
    if (left != right) return false;
  }
  return true;
}

bool substitution_annihilates(const RelationSet& relations, const Matrix& values) {
  for (const auto& rel : relations.polys) {
    Scalar total = 0;
    for (const auto& [w, c] : rel.terms()) {
      Scalar term = c;
      for (auto x : w) term *= values(relations.alphabet.letters[x].row, relations.alphabet.letters[x].col);
      total += term;
    }
    if (total != 0) return false;
  }
  return true;
}

bool counit_check(const QuantumObject& object) {
  HomAlgebra h = make_hom_algebra(object, object);
  const std::size_t n = object.dim();
  if (!substitution_annihilates(h.relations, Matrix::identity(n))) return false;

  const auto& v = object.space();
  auto counit = [&](const Word& w) -> Scalar {
    for (auto x : w)
      if (x / n != x % n) return 0;
    return 1;
  };
  for (const auto& w : all_words(n * n, 2)) {
    TensorPoly delta = comultiply(NCPoly::monomial(w), v, v, v);
    NCPoly left_applied, right_applied;
    for (const auto& [key, c] : delta) {
      left_applied.add_term(key[1], c * counit(key[0]));
      right_applied.add_term(key[0], c * counit(key[1]));
    }
    if (!(left_applied == NCPoly::monomial(w)) || !(right_applied == NCPoly::monomial(w))) return false;
  }
  return true;
}

NCPoly determinant_2x2(const QuantumObject& source, const QuantumObject& target, const Scalar& scale_source,
                       const Scalar& scale_target) {
  for (const auto* obj : {&source, &target}) {
    if (obj->dim() != 2 || obj->space().parity(0) || obj->space().parity(1) || obj->component_count() != 2)
      throw Error(ErrorKind::WrongShape, "determinant needs purely even two-dimensional objects with s = 2");
  }
  // Functional on V'⊗V' vanishing on J, normalized on e^1 e^2.
  Matrix ann = annihilator(source.component(1), 4, pairing_signs(source.space()));
  if (ann.rows() != 1 || ann(0, 1) == 0)
    throw Error(ErrorKind::WrongShape, "degree-2 part of the ξ-algebra is not spanned by ξ^1 ξ^2");
  const Scalar norm = 1 / ann(0, 1);
  const Scalar scale = scale_target / scale_source;

  NCPoly det;
  for (std::size_t a = 0; a < 2; ++a)
    for (std::size_t b = 0; b < 2; ++b)
      det.add_term(Word{hom_letter(a, 0, 2), hom_letter(b, 1, 2)}, scale * norm * ann(0, a * 2 + b));
  return det;
}

bool determinant_multiplicativity(const ComposableTriple& t, const NCPoly& det_ac, const NCPoly& det_ab,
                                  const NCPoly& det_bc) {
  const auto& a = t.ac.source.space();
  const auto& b = t.ab.target.space();
  const auto& c = t.ac.target.space();
  TensorPoly diff = comultiply(det_ac, a, b, c);
  for (const auto& [u, cu] : det_ab.terms())
    for (const auto& [v, cv] : det_bc.terms()) add_tensor_term(diff, {u, v}, -cu * cv);
  return vanishes_in_quotients(diff, quotient_map(t.ab.relations), t.ab.alphabet.size(),
                               quotient_map(t.bc.relations), t.bc.alphabet.size());
}

bool determinant_multiplicativity(const QuantumObject& a, const QuantumObject& b, const QuantumObject& c,
                                  const Scalar& fa, const Scalar& fb, const Scalar& fc) {
  ComposableTriple t = make_triple(a, b, c);
  return determinant_multiplicativity(t, determinant_2x2(a, c, fa, fc), determinant_2x2(a, b, fa, fb),
                                      determinant_2x2(b, c, fb, fc));
}

}  // namespace qcat
