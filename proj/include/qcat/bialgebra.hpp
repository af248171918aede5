#pragma once

#include "qcat/hom_algebra.hpp"

#include <map>
#include <vector>

namespace qcat {

/// Element of a tensor product of free algebras: tuple of words -> coefficient.
using TensorPoly = std::map<std::vector<Word>, Scalar>;

void add_tensor_term(TensorPoly& t, std::vector<Word> key, const Scalar& c);

/// Δ(t_A^S) = sum_K t_A^K ⊗ t_K^S, extended multiplicatively with the sign
/// (x⊗y)(u⊗v) = (-1)^{p(y)p(u)} xu⊗yv.  Maps words of M_{ac} into
/// M_{ab} ⊗ M_{bc}.
TensorPoly comultiply(const NCPoly& p, const GradedSpace& a, const GradedSpace& b, const GradedSpace& c);

/// Hom algebras for a composable chain α -> β -> γ.
struct ComposableTriple {
  HomAlgebra ab;
  HomAlgebra bc;
  HomAlgebra ac;
};

ComposableTriple make_triple(const QuantumObject& a, const QuantumObject& b, const QuantumObject& c);
/// Throws Error(WrongShape) unless ab: α->β, bc: β->γ, ac: α->γ line up.
ComposableTriple make_triple(HomAlgebra ab, HomAlgebra bc, HomAlgebra ac);

/// Linear map onto the degree-2 quotient F_2 / R_2 (rows span Ann R_2).
Matrix quotient_map(const RelationSet& relations);

/// Δ maps every defining relation of M_{αγ} to zero in the degree-2
/// quotients of M_{αβ} ⊗ M_{βγ}.
bool comultiplication_check(const ComposableTriple& triple);

/// (Δ_{αβγ}⊗1)Δ_{αγδ} == (1⊗Δ_{βγδ})Δ_{αβδ} on all words of M_{αδ} up to
/// `max_degree`.
bool coassociativity_check(const QuantumObject& a, const QuantumObject& b, const QuantumObject& c,
                           const QuantumObject& d, std::size_t max_degree = 2);

/// Substituting t_A^K -> values(A, K) kills every relation.
bool substitution_annihilates(const RelationSet& relations, const Matrix& values);

/// ε(t_A^B) = δ_A^B kills the relations of M_{αα}, and
/// (ε⊗1)Δ = id = (1⊗ε)Δ on words up to degree 2.
bool counit_check(const QuantumObject& object);

/// Coefficient of the basis form ξ^1 ξ^2 in δ(ξ_β^1 ξ_β^2).  With basis
/// forms rescaled by f_α, f_β the result is multiplied by f_β / f_α.
/// Throws Error(WrongShape) unless both spaces are even of dimension 2 and
/// the source's ξ-algebra is one-dimensional in degree 2.
NCPoly determinant_2x2(const QuantumObject& source, const QuantumObject& target, const Scalar& scale_source = 1,
                       const Scalar& scale_target = 1);

/// Δ(det_ac) - det_ab ⊗ det_bc vanishes in the degree-2 quotients.
bool determinant_multiplicativity(const ComposableTriple& triple, const NCPoly& det_ac, const NCPoly& det_ab,
                                  const NCPoly& det_bc);
bool determinant_multiplicativity(const QuantumObject& a, const QuantumObject& b, const QuantumObject& c,
                                  const Scalar& fa = 1, const Scalar& fb = 1, const Scalar& fc = 1);

}  // namespace qcat
