#pragma once

#include "qcat/matrix.hpp"

#include <cstddef>
#include <vector>

namespace qcat {

/// A Z2-graded vector space with a fixed homogeneous basis.
class GradedSpace {
 public:
  GradedSpace() = default;
  explicit GradedSpace(std::vector<int> parities);
  /// `even` even basis vectors followed by `odd` odd ones.
  static GradedSpace with_shape(std::size_t even, std::size_t odd);

  std::size_t dim() const { return parities_.size(); }
  int parity(std::size_t index) const { return parities_[index]; }
  const std::vector<int>& parities() const { return parities_; }

  /// The dual space; its basis carries the same parities.
  GradedSpace dual() const { return *this; }
  /// Parity reversion Pi.
  GradedSpace reversed() const;

  friend bool operator==(const GradedSpace&, const GradedSpace&) = default;

 private:
  std::vector<int> parities_;
};

/// An ordered tuple of basis indices, i.e. a basis tensor of a tensor power.
struct TensorWord {
  std::vector<std::size_t> factors;

  std::size_t degree() const { return factors.size(); }
  int parity(const GradedSpace& space) const;

  friend auto operator<=>(const TensorWord&, const TensorWord&) = default;
};

/// All dim^d words in lexicographic order; position i of the result is the
/// coordinate index used for tensors of degree d everywhere in the library.
std::vector<TensorWord> tensor_power_basis(const GradedSpace& space, std::size_t degree);
std::size_t word_index(std::size_t dim, const TensorWord& word);

/// <e_A e_B, e^C e^D> = (-1)^{parity(B) parity(C)} delta_A^C delta_B^D.
/// Throws Error(DegreeMismatch) unless both words have degree 2.
Scalar koszul_pairing(const GradedSpace& space, const TensorWord& lower, const TensorWord& upper);

/// Diagonal of the degree-2 Gram matrix: the sign (-1)^{p(A)p(B)} paired
/// with word (A,B).
std::vector<int> pairing_signs(const GradedSpace& space);

/// Canonical even isomorphism V'⊗V' -> ΠV'⊗ΠV',
/// e^A⊗e^B |-> (-1)^{p(A)} Πe^A⊗Πe^B, on coordinate vectors.
Vector pi_isomorphism(const GradedSpace& space, const Vector& tensor);
/// Inverse of pi_isomorphism (the map is an involution on coordinates).
Vector pi_inverse(const GradedSpace& space, const Vector& tensor);

}  // namespace qcat
