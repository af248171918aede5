#include "qcat/rmatrix.hpp"

#include "qcat/error.hpp"

namespace qcat {

BMatrix build_B(const QuantumObject& object, std::vector<Scalar> coefficients) {
  if (coefficients.size() != object.component_count())
    throw Error(ErrorKind::ComponentCountMismatch, "need one coefficient per component");
  for (std::size_t i = 0; i < coefficients.size(); ++i)
    for (std::size_t j = i + 1; j < coefficients.size(); ++j)
      if (coefficients[i] == coefficients[j])
        throw Error(ErrorKind::RepeatedCoefficient, "B-matrix coefficients must be pairwise distinct");
  auto proj = object.projectors();
  Matrix b(object.tensor_dim(), object.tensor_dim());
  for (std::size_t k = 0; k < proj.size(); ++k) b = b + coefficients[k] * proj[k];
  return BMatrix{object, std::move(coefficients), std::move(b)};
}

BMatrix normalized_B(const QuantumObject& object, const Scalar& lambda) {
  return build_B(object, {Scalar(1), Scalar(-lambda)});
}

std::vector<Matrix> eigen_projectors(const BMatrix& b) {
  const std::size_t dim = b.matrix.rows();
  const Matrix id = Matrix::identity(dim);
  std::vector<Matrix> out;
  for (std::size_t k = 0; k < b.coefficients.size(); ++k) {
    Matrix p = id;
    for (std::size_t j = 0; j < b.coefficients.size(); ++j) {
      if (j == k) continue;
      Scalar scale = 1 / (b.coefficients[k] - b.coefficients[j]);
      p = scale * (p * (b.matrix - b.coefficients[j] * id));
    }
    out.push_back(std::move(p));
  }
  return out;
}

bool yang_baxter_check(const BMatrix& b) {
  const Matrix id = Matrix::identity(b.object.dim());
  const Matrix b12 = kron(b.matrix, id);
  const Matrix b23 = kron(id, b.matrix);
  return b12 * b23 * b12 == b23 * b12 * b23;
}

std::vector<Scalar> yang_baxter_coefficients(const QuantumObject& object, const std::vector<Scalar>& candidates) {
  std::vector<Scalar> out;
  for (const auto& lambda : candidates) {
    if (lambda == -1) continue;
    if (yang_baxter_check(normalized_B(object, lambda))) out.push_back(lambda);
  }
  return out;
}

RelationSet rmatrix_relation_span(const BMatrix& source, const BMatrix& target) {
  const GradedSpace& v = source.object.space();
  const GradedSpace& w = target.object.space();
  const std::size_t n = v.dim(), m = w.dim();
  const std::size_t n2 = n * n, m2 = m * m;

  // D as a coefficient-free table: entry (row, col) is sign * word.
  struct Entry {
    Word word;
    int sign;
  };
  std::vector<Entry> d(n2 * m2);
  for (std::size_t c = 0; c < n; ++c)
    for (std::size_t dd = 0; dd < n; ++dd)
      for (std::size_t k = 0; k < m; ++k)
        for (std::size_t l = 0; l < m; ++l) {
          const int sign = parity_sign(v.parity(dd) * (v.parity(c) + w.parity(k)));
          d[(c * n + dd) * m2 + (k * m + l)] = {Word{hom_letter(c, k, m), hom_letter(dd, l, m)}, sign};
        }

  std::vector<NCPoly> polys;
  for (std::size_t r = 0; r < n2; ++r)
    for (std::size_t col = 0; col < m2; ++col) {
      NCPoly entry;
      for (std::size_t s = 0; s < n2; ++s) {
        const Scalar& bv = source.matrix(r, s);
        if (bv != 0) entry.add_term(d[s * m2 + col].word, bv * d[s * m2 + col].sign);
      }
      for (std::size_t s = 0; s < m2; ++s) {
        const Scalar& bw = target.matrix(s, col);
        if (bw != 0) entry.add_term(d[r * m2 + s].word, -bw * d[r * m2 + s].sign);
      }
      polys.push_back(std::move(entry));
    }
  return make_relation_set(hom_alphabet(v, w), std::move(polys));
}

}  // namespace qcat
