#pragma once

#include <optional>
#include <span>
#include <vector>

#include "leibniz/algebra.hpp"

namespace leibniz {

bool is_derivation(const StructureTensor& L, const LinearMap& D);

/// Der(L) inside Q^(n*n), maps vectorized row-major.
Subspace derivation_space(const StructureTensor& L);

/// Matrix of y -> [x, y].
LinearMap left_multiplication(const StructureTensor& L, std::span<const Rational> x);

/// span{L_{e_i}} inside Q^(n*n).
Subspace inner_derivation_space(const StructureTensor& L);

/// def1: Z(L/Leib(L)) = 0 and every derivation agrees with some L_x modulo Leib(L).
/// def2: Z(L) = 0 and every derivation is inner.
enum class CompletenessDefinition { def1, def2 };

struct DerivationWitness {
  LinearMap derivation;
  /// x with Im(D - L_x) inside Leib(L); free coordinates of the solve are zero.
  Vector element;
};

struct CompletenessReport {
  CompletenessDefinition definition = CompletenessDefinition::def1;
  bool verdict = false;
  /// def1: the center of L/Leib(L), lifted to L through the quotient section.
  /// def2: Z(L).  Present only when nonzero.
  std::optional<Subspace> center_obstruction;
  /// First derivation basis element violating the derivation condition.
  std::optional<LinearMap> derivation_obstruction;
  /// def1 only: one witness per derivation basis element that admits one.
  std::vector<DerivationWitness> witnesses;
};

CompletenessReport is_complete_def1(const StructureTensor& L);
CompletenessReport is_complete_def2(const StructureTensor& L);

}  // namespace leibniz
