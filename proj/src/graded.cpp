#include "qcat/graded.hpp"

#include "qcat/error.hpp"

#include <cassert>

namespace qcat {

GradedSpace::GradedSpace(std::vector<int> parities) : parities_(std::move(parities)) {
  for (auto& p : parities_) p &= 1;
}

GradedSpace GradedSpace::with_shape(std::size_t even, std::size_t odd) {
  std::vector<int> p(even, 0);
  p.insert(p.end(), odd, 1);
  return GradedSpace(std::move(p));
}

GradedSpace GradedSpace::reversed() const {
  std::vector<int> p = parities_;
  for (auto& x : p) x ^= 1;
  return GradedSpace(std::move(p));
}

int TensorWord::parity(const GradedSpace& space) const {
  int p = 0;
  for (auto f : factors) p ^= space.parity(f);
  return p;
}

std::vector<TensorWord> tensor_power_basis(const GradedSpace& space, std::size_t degree) {
  std::vector<TensorWord> out{TensorWord{}};
  for (std::size_t d = 0; d < degree; ++d) {
    std::vector<TensorWord> next;
    next.reserve(out.size() * space.dim());
    for (const auto& w : out)
      for (std::size_t i = 0; i < space.dim(); ++i) {
        TensorWord x = w;
        x.factors.push_back(i);
        next.push_back(std::move(x));
      }
    out = std::move(next);
  }
  return out;
}

std::size_t word_index(std::size_t dim, const TensorWord& word) {
  std::size_t idx = 0;
  for (auto f : word.factors) idx = idx * dim + f;
  return idx;
}

Scalar koszul_pairing(const GradedSpace& space, const TensorWord& lower, const TensorWord& upper) {
  if (lower.degree() != 2 || upper.degree() != 2)
    throw Error(ErrorKind::DegreeMismatch, "Koszul pairing is defined on degree-2 words");
  if (lower.factors != upper.factors) return 0;
  const int b = space.parity(lower.factors[1]);
  const int c = space.parity(upper.factors[0]);
  return parity_sign(b * c);
}

std::vector<int> pairing_signs(const GradedSpace& space) {
  const std::size_t n = space.dim();
  std::vector<int> signs(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) signs[a * n + b] = parity_sign(space.parity(a) * space.parity(b));
  return signs;
}

Vector pi_isomorphism(const GradedSpace& space, const Vector& tensor) {
  const std::size_t n = space.dim();
  assert(tensor.size() == n * n);
  Vector out = tensor;
  for (std::size_t a = 0; a < n; ++a)
    if (space.parity(a))
      for (std::size_t b = 0; b < n; ++b) out[a * n + b] = -out[a * n + b];
  return out;
}

Vector pi_inverse(const GradedSpace& space, const Vector& tensor) { return pi_isomorphism(space, tensor); }

}  // namespace qcat
