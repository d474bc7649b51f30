#pragma once

// Biderivations of a left Leibniz algebra.
//
// A bilinear B is a left biderivation when every B(x, -) is a derivation,
// a right biderivation when every B(-, z) is a derivation, and a
// biderivation when both hold.  The Loday-style space replaces the right
// condition by  B([x,y],z) = [x,B(y,z)] - [y,B(x,z)].
//
// Spaces of bilinear maps live in Q^(n^3) using BilinearTensor's
// vectorization; spaces of linear maps live in Q^(n^2), row-major.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "leibniz/algebra.hpp"
#include "leibniz/derivations.hpp"

namespace leibniz {

bool is_biderivation(const StructureTensor& L, const BilinearTensor& B);
bool is_left_biderivation(const StructureTensor& L, const BilinearTensor& B);
bool is_right_biderivation(const StructureTensor& L, const BilinearTensor& B);

Subspace left_biderivation_space(const StructureTensor& L);
Subspace right_biderivation_space(const StructureTensor& L);
/// Intersection of the left and right spaces.
Subspace biderivation_space(const StructureTensor& L);
/// Nullspace of the stacked left + right system, computed without the intersection.
Subspace biderivation_space_stacked(const StructureTensor& L);
Subspace loday_biderivation_space(const StructureTensor& L);

/// B+(x, y) = B(x, y) + B(y, x)
BilinearTensor symmetric_part(const BilinearTensor& B);
/// B-(x, y) = B(x, y) - B(y, x)
BilinearTensor skew_part(const BilinearTensor& B);

enum class FactorSide { left, right };

/// One equation of a factorization block after elimination against the
/// earlier equations of the same block, made monic.  Unknown m is the
/// coefficient of e_m in phi(e_i) (left) or psi(e_j) (right).
struct EliminationStep {
  std::size_t i, j, k;
  SparseRow equation;
  Rational rhs;
};

struct InfeasibilityCertificate {
  /// Basis index whose image under phi (left) or psi (right) cannot be chosen.
  std::size_t block = 0;
  /// Pivot-creating equations of that block in processing order.
  std::vector<EliminationStep> steps;
  /// The equation that reduces to 0 = defect.
  std::size_t i = 0, j = 0, k = 0;
  Rational defect;
};

struct FactorizationResult {
  FactorSide side = FactorSide::left;
  bool feasible = false;
  /// phi (left: B(x,y) - [phi(x), y] in S) or psi (right: B(x,y) - [psi(y), x] in S).
  std::optional<LinearMap> map;
  /// p (left) or q (right).
  std::optional<BilinearTensor> residual;
  Subspace residual_subspace;
  std::optional<InfeasibilityCertificate> certificate;
  /// Set when residual_subspace is Leib(L): whether p is a left biderivation
  /// (left side) or q a right biderivation (right side).
  std::optional<bool> residual_is_side_biderivation;
};

FactorizationResult factor_left_modulo(const StructureTensor& L, const BilinearTensor& B, const Subspace& S);
FactorizationResult factor_right_modulo(const StructureTensor& L, const BilinearTensor& B, const Subspace& S);

/// Polarized [g(x), x] = [x, g(x)] = 0.
Subspace commuting_map_space(const StructureTensor& L);
/// [g(x), y] = [g(y), x].
Subspace skew_commuting_map_space(const StructureTensor& L);
/// (x, y) -> [g(x), y]
BilinearTensor bider_from_map(const StructureTensor& L, const LinearMap& g);

struct PropCommutingReport {
  std::size_t commuting_dim = 0;
  std::size_t skew_commuting_dim = 0;
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};

/// Commuting g give skew-symmetric biderivations, skew-commuting g symmetric ones.
PropCommutingReport verify_prop_commuting(const StructureTensor& L);

enum class SymmetryKind { symmetric, skew };

struct SigmaThetaPart {
  SymmetryKind kind = SymmetryKind::symmetric;
  /// B+ for the symmetric part, B- for the skew part.
  BilinearTensor part;
  /// Both factorizations exist (L complete in the chosen sense).
  bool applicable = false;
  LinearMap phi;
  LinearMap psi;
  /// phi - psi (symmetric) or phi + psi (skew).
  LinearMap combined;
  bool holds = false;
  std::vector<std::pair<std::size_t, std::size_t>> violations;
};

struct SigmaThetaReport {
  CompletenessDefinition definition = CompletenessDefinition::def1;
  std::vector<SigmaThetaPart> parts;
  /// Every nonzero part is applicable and satisfies its condition.
  bool holds() const;
};

/// def1: [(phi -+ psi)(e_i), e_j] in Leib(L).  def2: (phi -+ psi)(e_i) in Z^l(L).
/// Throws std::invalid_argument when B is not a biderivation.
SigmaThetaReport verify_sigma_theta(const StructureTensor& L, const BilinearTensor& B, CompletenessDefinition def);

struct ConverseEntry {
  std::size_t basis_index = 0;
  SymmetryKind kind = SymmetryKind::symmetric;
  /// Half of B+ or B-, so the parts of a basis element sum to it.
  BilinearTensor part;
  bool factor_feasible = false;
  LinearMap g;
  bool in_expected_space = false;
  bool reproduces = false;
  bool ok() const { return factor_feasible && in_expected_space && reproduces; }
};

struct ConverseReport {
  std::size_t biderivation_dim = 0;
  std::vector<ConverseEntry> entries;
  bool ok() const;
};

/// For each biderivation basis element, factor its symmetric and skew halves
/// with S = 0 and project phi along the fixed complement of Z^l(L).
/// Throws std::invalid_argument unless L is complete in the def2 sense.
ConverseReport converse_def2_sym_skew(const StructureTensor& L);

}  // namespace leibniz
