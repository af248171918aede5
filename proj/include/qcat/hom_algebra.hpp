#pragma once

#include "qcat/ncpoly.hpp"
#include "qcat/quantum_object.hpp"

namespace qcat {

/// Generators t_A^K of M_{αβ} in row-major order (index A*dim W + K), with
/// parity p(A)+p(K).  Small alphabets (at most 26 letters) use a, b, c, ...
/// so the 2x2 case reads as the matrix [[a, b], [c, d]].
Alphabet hom_alphabet(const GradedSpace& source, const GradedSpace& target);

inline Letter hom_letter(std::size_t row, std::size_t col, std::size_t target_dim) {
  return static_cast<Letter>(row * target_dim + col);
}

/// The quadratic algebra M_{αβ} of functions on morphisms α -> β.
struct HomAlgebra {
  QuantumObject source;
  QuantumObject target;
  Alphabet alphabet;
  RelationSet relations;

  std::size_t generator_count() const { return alphabet.size(); }
};

/// Relations (-1)^{p(B)p(K)} g^{AB} f_{KL} t_A^K t_B^L = 0 for g in a basis of
/// Ann I_k^V and f in a basis of I_k^W, over every component k.
/// Throws Error(ComponentCountMismatch) when the objects have different s.
RelationSet derive_relations_general(const QuantumObject& source, const QuantumObject& target);

/// The same span from the closed Sudbery formulas: the general four-index
/// relation for A != B, K != L plus the one-row and one-column reductions.
/// Throws Error(BadParameters) if either object lacks Sudbery parameters.
RelationSet derive_relations_sudbery(const QuantumObject& source, const QuantumObject& target);

/// Builds M_{αβ} from the general derivation and checks the independence
/// count sum_k dim(Ann I_k^V) dim(I_k^W).
HomAlgebra make_hom_algebra(const QuantumObject& source, const QuantumObject& target);

/// sum_k dim(Ann I_k^V) * dim(I_k^W).
std::size_t expected_relation_count(const QuantumObject& source, const QuantumObject& target);

/// Relations for the coefficients t_{AB} of even bilinear forms on α, i.e.
/// M_{α, dual(α)} with generators renamed t_{AB}.
RelationSet bilinear_form_relations(const QuantumObject& object);

}  // namespace qcat
