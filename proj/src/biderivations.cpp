#include "leibniz/biderivations.hpp"

#include <algorithm>
#include <stdexcept>

namespace leibniz {

namespace {

/// Accumulates one sparse equation; the same unknown may be hit several times.
class EquationBuilder {
 public:
  explicit EquationBuilder(std::size_t cols) : acc_(cols), mark_(cols, 0) {}

  void add(std::size_t col, const Rational& v) {
    if (sgn(v) == 0) return;
    if (!mark_[col]) {
      mark_[col] = 1;
      touched_.push_back(col);
    }
    acc_[col] += v;
  }
  void sub(std::size_t col, const Rational& v) {
    if (sgn(v) == 0) return;
    add(col, -v);
  }

  SparseRow take() {
    std::sort(touched_.begin(), touched_.end());
    SparseRow row;
    for (std::size_t c : touched_) {
      if (sgn(acc_[c]) != 0) row.push_back({c, acc_[c]});
      acc_[c] = 0;
      mark_[c] = 0;
    }
    touched_.clear();
    return row;
  }

 private:
  Vector acc_;
  std::vector<char> mark_;
  std::vector<std::size_t> touched_;
};

struct Term {
  std::size_t index;
  Rational value;
};

/// Nonzero structure constants: by_pair[i*n+j] lists (k, c(i,j,k)).
std::vector<std::vector<Term>> nonzero_products(const StructureTensor& L) {
  const std::size_t n = L.dim();
  std::vector<std::vector<Term>> out(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (sgn(L(i, j, k)) != 0) out[i * n + j].push_back({k, L(i, j, k)});
  return out;
}

enum class System { left, right, loday_first };

// Unknown B(a, b, c) sits at (a * n + b) * n + c.
void add_system(Eliminator& e, const StructureTensor& L, System which) {
  const std::size_t n = L.dim();
  const auto nz = nonzero_products(L);
  auto var = [n](std::size_t a, std::size_t b, std::size_t c) { return (a * n + b) * n + c; };
  EquationBuilder eq(n * n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t l = 0; l < n; ++l)
        for (std::size_t k = 0; k < n; ++k) {
          if (which == System::left) {
            // B(x,[y,z]) - [B(x,y),z] - [y,B(x,z)],  x=e_i y=e_j z=e_l
            for (const auto& t : nz[j * n + l]) eq.add(var(i, t.index, k), t.value);
            for (std::size_t m = 0; m < n; ++m) {
              eq.sub(var(i, j, m), L(m, l, k));
              eq.sub(var(i, l, m), L(j, m, k));
            }
          } else {
            // B([x,y],z) - [x,B(y,z)] -+ [B(x,z),y] or +- [y,B(x,z)]
            for (const auto& t : nz[i * n + j]) eq.add(var(t.index, l, k), t.value);
            for (std::size_t m = 0; m < n; ++m) {
              eq.sub(var(j, l, m), L(i, m, k));
              if (which == System::right)
                eq.sub(var(i, l, m), L(m, j, k));
              else
                eq.add(var(i, l, m), L(j, m, k));
            }
          }
          e.add(eq.take());
        }
}

Subspace solve_systems(const StructureTensor& L, std::initializer_list<System> systems) {
  const std::size_t n = L.dim();
  Eliminator e(n * n * n);
  for (System s : systems) add_system(e, L, s);
  return e.kernel();
}

Vector image(const LinearMap& g, std::size_t i) { return g.image_of_basis(i); }

}  // namespace

// ---------------------------------------------------------------- membership checks

bool is_left_biderivation(const StructureTensor& L, const BilinearTensor& B) {
  const std::size_t n = L.dim();
  if (B.dim() != n) throw std::invalid_argument("bilinear map dimension does not match algebra");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t l = 0; l < n; ++l) {
        const auto x = unit_vector(n, i);
        const auto y = unit_vector(n, j);
        const auto z = unit_vector(n, l);
        Vector d = B.apply(x, L.product(j, l));
        const Vector a = bracket(L, B.value(i, j), z);
        const Vector b = bracket(L, y, B.value(i, l));
        for (std::size_t k = 0; k < n; ++k) d[k] -= a[k] + b[k];
        if (!is_zero(d)) return false;
      }
  return true;
}

bool is_right_biderivation(const StructureTensor& L, const BilinearTensor& B) {
  const std::size_t n = L.dim();
  if (B.dim() != n) throw std::invalid_argument("bilinear map dimension does not match algebra");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t l = 0; l < n; ++l) {
        const auto x = unit_vector(n, i);
        const auto y = unit_vector(n, j);
        const auto z = unit_vector(n, l);
        Vector d = B.apply(L.product(i, j), z);
        const Vector a = bracket(L, x, B.value(j, l));
        const Vector b = bracket(L, B.value(i, l), y);
        for (std::size_t k = 0; k < n; ++k) d[k] -= a[k] + b[k];
        if (!is_zero(d)) return false;
      }
  return true;
}

bool is_biderivation(const StructureTensor& L, const BilinearTensor& B) {
  return is_left_biderivation(L, B) && is_right_biderivation(L, B);
}

// ---------------------------------------------------------------- spaces

Subspace left_biderivation_space(const StructureTensor& L) { return solve_systems(L, {System::left}); }

Subspace right_biderivation_space(const StructureTensor& L) { return solve_systems(L, {System::right}); }

Subspace biderivation_space(const StructureTensor& L) {
  return subspace_intersection(left_biderivation_space(L), right_biderivation_space(L));
}

Subspace biderivation_space_stacked(const StructureTensor& L) {
  return solve_systems(L, {System::left, System::right});
}

Subspace loday_biderivation_space(const StructureTensor& L) {
  return solve_systems(L, {System::loday_first, System::left});
}

BilinearTensor symmetric_part(const BilinearTensor& B) { return B + B.swapped(); }

BilinearTensor skew_part(const BilinearTensor& B) { return B - B.swapped(); }

// ---------------------------------------------------------------- factorization

namespace {

// Solves B(e_a, e_b) - [phi(e_a), e_b] in S block by block (a fixed), where
// for the right side B is already swapped.  `right` only affects how the
// certificate reports equation indices.
FactorizationResult factor_core(const StructureTensor& L, const BilinearTensor& B, const Subspace& S, bool right) {
  const std::size_t n = L.dim();
  if (B.dim() != n) throw std::invalid_argument("bilinear map dimension does not match algebra");
  if (S.ambient_dim() != n) throw std::invalid_argument("target subspace lives in the wrong space");

  FactorizationResult result;
  result.side = right ? FactorSide::right : FactorSide::left;
  result.residual_subspace = S;

  const std::vector<std::size_t> coords = S.complement_coordinates();
  // reduced[m][b] = quotient coordinates of [e_m, e_b]
  std::vector<std::vector<Vector>> reduced(n, std::vector<Vector>(n));
  for (std::size_t m = 0; m < n; ++m)
    for (std::size_t b = 0; b < n; ++b) reduced[m][b] = S.quotient_coordinates(L.product(m, b));

  LinearMap phi(n);
  for (std::size_t a = 0; a < n; ++a) {
    Eliminator block(n);
    std::vector<EliminationStep> steps;
    for (std::size_t b = 0; b < n; ++b) {
      const Vector target = S.quotient_coordinates(B.value(a, b));
      for (std::size_t t = 0; t < coords.size(); ++t) {
        SparseRow eq;
        for (std::size_t m = 0; m < n; ++m)
          if (sgn(reduced[m][b][t]) != 0) eq.push_back({m, reduced[m][b][t]});
        const std::size_t i = right ? b : a;
        const std::size_t j = right ? a : b;
        auto red = block.reduce(eq, target[t]);
        const auto outcome = block.add(eq, target[t]);
        if (outcome == Eliminator::Outcome::new_pivot) {
          const Rational lead = red.row.front().value;
          for (auto& e : red.row) e.value /= lead;
          red.rhs /= lead;
          steps.push_back({i, j, coords[t], std::move(red.row), std::move(red.rhs)});
        } else if (outcome == Eliminator::Outcome::inconsistent) {
          result.certificate = InfeasibilityCertificate{a, std::move(steps), i, j, coords[t], red.rhs};
          return result;
        }
      }
    }
    const Vector col = *block.particular_solution();
    for (std::size_t m = 0; m < n; ++m) phi(m, a) = col[m];
  }

  BilinearTensor residual(n);
  for (std::size_t a = 0; a < n; ++a) {
    const Vector img = image(phi, a);
    for (std::size_t b = 0; b < n; ++b) {
      const Vector br = bracket(L, img, unit_vector(n, b));
      for (std::size_t k = 0; k < n; ++k) residual(a, b, k) = B(a, b, k) - br[k];
      if (!S.contains(residual.value(a, b))) throw std::logic_error("factorization residual escaped the target subspace");
    }
  }
  result.feasible = true;
  result.map = std::move(phi);
  result.residual = right ? residual.swapped() : residual;
  if (S == leibniz_kernel(L)) {
    result.residual_is_side_biderivation =
        right ? is_right_biderivation(L, *result.residual) : is_left_biderivation(L, *result.residual);
  }
  return result;
}

}  // namespace

FactorizationResult factor_left_modulo(const StructureTensor& L, const BilinearTensor& B, const Subspace& S) {
  return factor_core(L, B, S, false);
}

FactorizationResult factor_right_modulo(const StructureTensor& L, const BilinearTensor& B, const Subspace& S) {
  // B(x, y) - [psi(y), x] = B^t(y, x) - [psi(y), x]
  return factor_core(L, B.swapped(), S, true);
}

// ---------------------------------------------------------------- commuting maps

Subspace commuting_map_space(const StructureTensor& L) {
  // Unknown g(r, c) at r * n + c; g(e_i) is column i.
  const std::size_t n = L.dim();
  Eliminator e(n * n);
  EquationBuilder eq(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        // [g(e_i), e_j] + [g(e_j), e_i]
        for (std::size_t r = 0; r < n; ++r) {
          eq.add(r * n + i, L(r, j, k));
          eq.add(r * n + j, L(r, i, k));
        }
        e.add(eq.take());
        // [e_i, g(e_j)] + [e_j, g(e_i)]
        for (std::size_t r = 0; r < n; ++r) {
          eq.add(r * n + j, L(i, r, k));
          eq.add(r * n + i, L(j, r, k));
        }
        e.add(eq.take());
      }
  return e.kernel();
}

Subspace skew_commuting_map_space(const StructureTensor& L) {
  const std::size_t n = L.dim();
  Eliminator e(n * n);
  EquationBuilder eq(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        for (std::size_t r = 0; r < n; ++r) {
          eq.add(r * n + i, L(r, j, k));
          eq.sub(r * n + j, L(r, i, k));
        }
        e.add(eq.take());
      }
  return e.kernel();
}

BilinearTensor bider_from_map(const StructureTensor& L, const LinearMap& g) {
  const std::size_t n = L.dim();
  if (g.dim() != n) throw std::invalid_argument("map dimension does not match algebra");
  BilinearTensor out(n);
  for (std::size_t i = 0; i < n; ++i) {
    const Vector gi = image(g, i);
    for (std::size_t j = 0; j < n; ++j) {
      const Vector v = bracket(L, gi, unit_vector(n, j));
      std::copy(v.begin(), v.end(), out.value(i, j).begin());
    }
  }
  return out;
}

PropCommutingReport verify_prop_commuting(const StructureTensor& L) {
  const std::size_t n = L.dim();
  PropCommutingReport report;
  const Subspace comm = commuting_map_space(L);
  const Subspace skew = skew_commuting_map_space(L);
  report.commuting_dim = comm.dim();
  report.skew_commuting_dim = skew.dim();
  for (std::size_t r = 0; r < comm.dim(); ++r) {
    const BilinearTensor f = bider_from_map(L, LinearMap::from_vector(n, comm.basis().row(r)));
    if (!is_biderivation(L, f)) report.violations.push_back("commuting basis map " + std::to_string(r) + ": not a biderivation");
    if (!symmetric_part(f).is_zero()) report.violations.push_back("commuting basis map " + std::to_string(r) + ": not skew-symmetric");
  }
  for (std::size_t r = 0; r < skew.dim(); ++r) {
    const BilinearTensor f = bider_from_map(L, LinearMap::from_vector(n, skew.basis().row(r)));
    if (!is_biderivation(L, f)) report.violations.push_back("skew-commuting basis map " + std::to_string(r) + ": not a biderivation");
    if (!skew_part(f).is_zero()) report.violations.push_back("skew-commuting basis map " + std::to_string(r) + ": not symmetric");
  }
  return report;
}

// ---------------------------------------------------------------- symmetric / skew factor maps

bool SigmaThetaReport::holds() const {
  return std::all_of(parts.begin(), parts.end(), [](const SigmaThetaPart& p) { return p.applicable && p.holds; });
}

SigmaThetaReport verify_sigma_theta(const StructureTensor& L, const BilinearTensor& B, CompletenessDefinition def) {
  const std::size_t n = L.dim();
  if (!is_biderivation(L, B)) throw std::invalid_argument("input is not a biderivation");
  SigmaThetaReport report;
  report.definition = def;
  const Subspace leib = leibniz_kernel(L);
  const Subspace target = def == CompletenessDefinition::def1 ? leib : Subspace(n);
  const Subspace zl = left_center(L);

  for (SymmetryKind kind : {SymmetryKind::symmetric, SymmetryKind::skew}) {
    BilinearTensor part = kind == SymmetryKind::symmetric ? symmetric_part(B) : skew_part(B);
    if (part.is_zero()) continue;
    SigmaThetaPart p;
    p.kind = kind;
    p.part = std::move(part);
    const auto left = factor_left_modulo(L, p.part, target);
    const auto right = factor_right_modulo(L, p.part, target);
    p.applicable = left.feasible && right.feasible;
    if (p.applicable) {
      p.phi = *left.map;
      p.psi = *right.map;
      p.combined = kind == SymmetryKind::symmetric ? p.phi - p.psi : p.phi + p.psi;
      for (std::size_t i = 0; i < n; ++i) {
        const Vector ci = image(p.combined, i);
        if (def == CompletenessDefinition::def2) {
          if (!zl.contains(ci)) p.violations.emplace_back(i, i);
          continue;
        }
        for (std::size_t j = 0; j < n; ++j)
          if (!leib.contains(bracket(L, ci, unit_vector(n, j)))) p.violations.emplace_back(i, j);
      }
      p.holds = p.violations.empty();
    }
    report.parts.push_back(std::move(p));
  }
  return report;
}

// ---------------------------------------------------------------- converse for def2-complete algebras

bool ConverseReport::ok() const {
  return std::all_of(entries.begin(), entries.end(), [](const ConverseEntry& e) { return e.ok(); });
}

ConverseReport converse_def2_sym_skew(const StructureTensor& L) {
  if (!is_complete_def2(L).verdict) throw std::invalid_argument("algebra is not complete in the def2 sense");
  const std::size_t n = L.dim();
  const Subspace zero(n);
  const Subspace zl = left_center(L);
  const Subspace comm = commuting_map_space(L);
  const Subspace skew_comm = skew_commuting_map_space(L);
  const Subspace bider = biderivation_space(L);
  const Rational half(1, 2);

  ConverseReport report;
  report.biderivation_dim = bider.dim();
  for (std::size_t r = 0; r < bider.dim(); ++r) {
    const BilinearTensor B = BilinearTensor::from_vector(n, bider.basis().row(r));
    for (SymmetryKind kind : {SymmetryKind::symmetric, SymmetryKind::skew}) {
      BilinearTensor part = half * (kind == SymmetryKind::symmetric ? symmetric_part(B) : skew_part(B));
      if (part.is_zero()) continue;
      ConverseEntry entry;
      entry.basis_index = r;
      entry.kind = kind;
      const auto f = factor_left_modulo(L, part, zero);
      entry.factor_feasible = f.feasible;
      if (f.feasible) {
        // g = pi o phi, pi the projection along Z^l(L) onto the coordinate complement.
        LinearMap g(n);
        for (std::size_t i = 0; i < n; ++i) {
          const Vector gi = zl.residual(image(*f.map, i));
          for (std::size_t k = 0; k < n; ++k) g(k, i) = gi[k];
        }
        const Subspace& expected = kind == SymmetryKind::symmetric ? skew_comm : comm;
        entry.in_expected_space = expected.contains(g.vectorized());
        entry.reproduces = bider_from_map(L, g) == part;
        entry.g = std::move(g);
      }
      entry.part = std::move(part);
      report.entries.push_back(std::move(entry));
    }
  }
  return report;
}

}  // namespace leibniz
