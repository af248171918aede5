#include "qcat/quantum_object.hpp"

#include "qcat/error.hpp"

namespace qcat {

const char* object_kind_name(ObjectKind kind) {
  switch (kind) {
    case ObjectKind::Classical: return "classical";
    case ObjectKind::Sudbery: return "sudbery";
    case ObjectKind::Normalized: return "normalized";
    case ObjectKind::General: return "general";
  }
  return "general";
}

QuantumObject::QuantumObject(GradedSpace space, std::vector<Matrix> components, ObjectKind kind,
                             std::optional<SudberyParams> sudbery, std::optional<NormalizedParams> normalized)
    : space_(std::move(space)),
      components_(std::move(components)),
      kind_(kind),
      sudbery_(std::move(sudbery)),
      normalized_(std::move(normalized)) {
  const std::size_t n2 = tensor_dim();
  for (auto& c : components_) {
    if (c.rows() == 0) c = Matrix(0, n2);
    if (c.cols() != n2)
      throw Error(ErrorKind::WrongShape, "component vectors must have length dim^2 = " + std::to_string(n2));
  }
  if (components_.size() < 2)
    throw Error(ErrorKind::ComponentCountMismatch, "an object needs at least two components");
  // Complementarity is part of the object's invariant.
  (void)projectors();
}

std::size_t QuantumObject::component_dim(std::size_t k) const { return rank(components_[k]); }

Matrix QuantumObject::component_basis(std::size_t k) const {
  if (components_[k].rows() == 0) return Matrix(0, tensor_dim());
  return row_basis(components_[k]);
}

std::vector<Matrix> QuantumObject::projectors() const { return qcat::projectors(components_, tensor_dim()); }

Matrix classical_parameters(const GradedSpace& space) {
  const std::size_t n = space.dim();
  Matrix m(n, n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) m(a, b) = parity_sign(space.parity(a) * space.parity(b));
  return m;
}

namespace {

// e^A e^B + coeff(A,B) e^B e^A for every ordered pair.
Matrix pair_span(std::size_t n, const Matrix& coeff, int sign) {
  Matrix span(0, n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      Vector v(n * n);
      v[a * n + b] += 1;
      v[b * n + a] += sign * coeff(a, b);
      bool zero = true;
      for (const auto& x : v) zero = zero && x == 0;
      if (!zero) span.append_row(v);
    }
  return span;
}

}  // namespace

std::string sudbery_violation(const GradedSpace& space, const Matrix& q, const Matrix& p) {
  const std::size_t n = space.dim();
  if (q.rows() != n || q.cols() != n || p.rows() != n || p.cols() != n)
    return "parameter matrices must be " + std::to_string(n) + "x" + std::to_string(n);
  for (std::size_t a = 0; a < n; ++a) {
    const int diag = parity_sign(space.parity(a));
    if (q(a, a) != diag) return "diagonal q^{AA} = (-1)^{p(A)} fails at A=" + std::to_string(a + 1);
    if (p(a, a) != diag) return "diagonal p^{AA} = (-1)^{p(A)} fails at A=" + std::to_string(a + 1);
    for (std::size_t b = 0; b < n; ++b) {
      if (q(a, b) * q(b, a) != 1)
        return "reciprocity q^{AB} q^{BA} = 1 fails at (A,B)=(" + std::to_string(a + 1) + "," +
               std::to_string(b + 1) + ")";
      if (p(a, b) * p(b, a) != 1)
        return "reciprocity p^{AB} p^{BA} = 1 fails at (A,B)=(" + std::to_string(a + 1) + "," +
               std::to_string(b + 1) + ")";
    }
  }
  return {};
}

QuantumObject make_classical(const GradedSpace& space) {
  const std::size_t n = space.dim();
  Matrix signs = classical_parameters(space);
  std::vector<Matrix> comps{pair_span(n, signs, -1), pair_span(n, signs, +1)};
  return QuantumObject(space, std::move(comps), ObjectKind::Classical, SudberyParams{signs, signs});
}

QuantumObject make_sudbery(const GradedSpace& space, const Matrix& q, const Matrix& p) {
  if (auto why = sudbery_violation(space, q, p); !why.empty()) throw Error(ErrorKind::BadParameters, why);
  const std::size_t n = space.dim();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (q(a, b) + p(a, b) == 0)
        throw Error(ErrorKind::NotComplementary, "complementarity q^{AB} + p^{AB} != 0 fails at (A,B)=(" +
                                                     std::to_string(a + 1) + "," + std::to_string(b + 1) + ")");
  std::vector<Matrix> comps{pair_span(n, q, -1), pair_span(n, p, +1)};
  return QuantumObject(space, std::move(comps), ObjectKind::Sudbery, SudberyParams{q, p});
}

QuantumObject make_normalized(const GradedSpace& space, const Matrix& q, int epsilon, const Scalar& lambda) {
  if (epsilon != 1 && epsilon != -1) throw Error(ErrorKind::BadParameters, "epsilon must be +1 or -1");
  if (lambda == 0) throw Error(ErrorKind::BadParameters, "lambda must be nonzero (lambda != 0, +-i)");
  const std::size_t n = space.dim();
  if (q.rows() != n || q.cols() != n)
    throw Error(ErrorKind::BadParameters, "parameter matrix must be " + std::to_string(n) + "x" + std::to_string(n));
  Matrix qh(n, n), ph(n, n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      const long s = a > b ? 1 : (a < b ? -1 : 0);
      qh(a, b) = q(a, b) * power(lambda, epsilon * s);
      ph(a, b) = q(a, b) * power(lambda, -epsilon * s);
    }
  QuantumObject base = make_sudbery(space, qh, ph);
  return QuantumObject(space, base.components(), ObjectKind::Normalized, base.sudbery(),
                       NormalizedParams{q, epsilon, lambda});
}

QuantumObject make_general(const GradedSpace& space, std::vector<Matrix> components) {
  return QuantumObject(space, std::move(components), ObjectKind::General);
}

QuantumObject dual_object(const QuantumObject& object) {
  if (object.component_count() != 2)
    throw Error(ErrorKind::ComponentCountMismatch, "dual object needs exactly two components");
  const auto signs = pairing_signs(object.space());
  const std::size_t n2 = object.tensor_dim();
  Matrix ann_j = annihilator(object.component(1), n2, signs);
  Matrix ann_i = annihilator(object.component(0), n2, signs);

  std::optional<SudberyParams> params;
  ObjectKind kind = ObjectKind::General;
  if (object.sudbery()) {
    params = SudberyParams{object.sudbery()->p.transpose(), object.sudbery()->q.transpose()};
    kind = object.kind() == ObjectKind::Classical ? ObjectKind::Classical : ObjectKind::Sudbery;
  }
  QuantumObject dual(object.space().dual(), {ann_j, ann_i}, kind, params);
  if (!object.name.empty()) dual.name = object.name + "'";
  return dual;
}

}  // namespace qcat
