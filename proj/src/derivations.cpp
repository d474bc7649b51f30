#include "leibniz/derivations.hpp"

#include <stdexcept>

namespace leibniz {

bool is_derivation(const StructureTensor& L, const LinearMap& D) {
  const std::size_t n = L.dim();
  if (D.dim() != n) throw std::invalid_argument("map dimension does not match algebra");
  std::vector<Vector> images;
  for (std::size_t j = 0; j < n; ++j) images.push_back(D.image_of_basis(j));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Vector lhs = D.apply(L.product(i, j));
      const Vector a = bracket(L, images[i], unit_vector(n, j));
      const Vector b = bracket(L, unit_vector(n, i), images[j]);
      for (std::size_t k = 0; k < n; ++k) lhs[k] -= a[k] + b[k];
      if (!is_zero(lhs)) return false;
    }
  return true;
}

Subspace derivation_space(const StructureTensor& L) {
  // Unknown d(r, c) sits at r * n + c.  Equation (i, j, k):
  //   sum_l c(i,j,l) d(k,l) - sum_l d(l,i) c(l,j,k) - sum_l d(l,j) c(i,l,k) = 0
  const std::size_t n = L.dim();
  Eliminator e(n * n);
  Vector row(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        for (auto& q : row) q = 0;
        for (std::size_t l = 0; l < n; ++l) {
          row[k * n + l] += L(i, j, l);
          row[l * n + i] -= L(l, j, k);
          row[l * n + j] -= L(i, l, k);
        }
        e.add_dense(row);
      }
  return e.kernel();
}

LinearMap left_multiplication(const StructureTensor& L, std::span<const Rational> x) {
  const std::size_t n = L.dim();
  if (x.size() != n) throw std::invalid_argument("element length does not match algebra dimension");
  LinearMap m(n);
  for (std::size_t j = 0; j < n; ++j) {
    const Vector col = bracket(L, x, unit_vector(n, j));
    for (std::size_t k = 0; k < n; ++k) m(k, j) = col[k];
  }
  return m;
}

Subspace inner_derivation_space(const StructureTensor& L) {
  const std::size_t n = L.dim();
  std::vector<Vector> gens;
  for (std::size_t i = 0; i < n; ++i) gens.push_back(left_multiplication(L, unit_vector(n, i)).vectorized());
  return Subspace::span(n * n, gens);
}

CompletenessReport is_complete_def1(const StructureTensor& L) {
  const std::size_t n = L.dim();
  CompletenessReport report;
  report.definition = CompletenessDefinition::def1;

  const Subspace leib = leibniz_kernel(L);
  const Quotient q = quotient(L, leib);
  const Subspace qz = center(q.algebra);
  if (!qz.is_zero()) {
    std::vector<Vector> lifted;
    for (std::size_t r = 0; r < qz.dim(); ++r) {
      Vector v(n);
      for (std::size_t a = 0; a < q.section.size(); ++a) v[q.section[a]] = qz.basis()(r, a);
      lifted.push_back(std::move(v));
    }
    report.center_obstruction = Subspace::span(n, lifted);
  }

  // pi([e_i, e_j]) for all i, j: the coefficient block of the unknown x_i.
  const std::size_t m = q.section.size();
  std::vector<std::vector<Vector>> proj_prod(n, std::vector<Vector>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) proj_prod[i][j] = leib.quotient_coordinates(L.product(i, j));

  const Subspace der = derivation_space(L);
  for (std::size_t r = 0; r < der.dim(); ++r) {
    const LinearMap D = LinearMap::from_vector(n, der.basis().row(r));
    Eliminator system(n);
    for (std::size_t j = 0; j < n; ++j) {
      const Vector target = leib.quotient_coordinates(D.image_of_basis(j));
      for (std::size_t a = 0; a < m; ++a) {
        SparseRow eq;
        for (std::size_t i = 0; i < n; ++i)
          if (sgn(proj_prod[i][j][a]) != 0) eq.push_back({i, proj_prod[i][j][a]});
        system.add(eq, target[a]);
      }
    }
    if (auto x = system.particular_solution()) {
      report.witnesses.push_back({D, std::move(*x)});
    } else if (!report.derivation_obstruction) {
      report.derivation_obstruction = D;
    }
  }
  report.verdict = !report.center_obstruction && !report.derivation_obstruction;
  return report;
}

CompletenessReport is_complete_def2(const StructureTensor& L) {
  const std::size_t n = L.dim();
  CompletenessReport report;
  report.definition = CompletenessDefinition::def2;
  Subspace z = center(L);
  if (!z.is_zero()) report.center_obstruction = std::move(z);
  const Subspace der = derivation_space(L);
  const Subspace inner = inner_derivation_space(L);
  for (std::size_t r = 0; r < der.dim(); ++r) {
    if (!inner.contains(der.basis().row(r))) {
      report.derivation_obstruction = LinearMap::from_vector(n, der.basis().row(r));
      break;
    }
  }
  report.verdict = !report.center_obstruction && !report.derivation_obstruction;
  return report;
}

}  // namespace leibniz
