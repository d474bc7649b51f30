#pragma once

// Structure-constant model of a finite-dimensional left Leibniz algebra
//
//     [x, [y, z]] = [y, [x, z]] + [[x, y], z]
//
// over Q, in a fixed basis e_0 .. e_{n-1}.  Right Leibniz tables are brought
// to left form with opposite() before they reach anything else.

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "leibniz/linalg.hpp"

namespace leibniz {

/// A bilinear map B : Q^n x Q^n -> Q^n given by B(e_i, e_j) = sum_k b(i, j, k) e_k.
///
/// Vectorization (used whenever a space of bilinear maps is a Subspace):
/// index (i * n + j) * n + k.
class BilinearTensor {
 public:
  BilinearTensor() = default;
  explicit BilinearTensor(std::size_t dim);

  std::size_t dim() const { return dim_; }

  const Rational& operator()(std::size_t i, std::size_t j, std::size_t k) const { return data_[index(i, j, k)]; }
  Rational& operator()(std::size_t i, std::size_t j, std::size_t k) { return data_[index(i, j, k)]; }

  /// Coordinates of B(e_i, e_j).
  std::span<const Rational> value(std::size_t i, std::size_t j) const { return {data_.data() + (i * dim_ + j) * dim_, dim_}; }
  std::span<Rational> value(std::size_t i, std::size_t j) { return {data_.data() + (i * dim_ + j) * dim_, dim_}; }

  Vector apply(std::span<const Rational> x, std::span<const Rational> y) const;

  /// B^t(x, y) = B(y, x).
  BilinearTensor swapped() const;
  bool is_zero() const;

  const Vector& vectorized() const { return data_; }
  static BilinearTensor from_vector(std::size_t dim, std::span<const Rational> v);

  friend BilinearTensor operator+(const BilinearTensor& a, const BilinearTensor& b);
  friend BilinearTensor operator-(const BilinearTensor& a, const BilinearTensor& b);
  friend BilinearTensor operator*(const Rational& s, const BilinearTensor& a);
  friend bool operator==(const BilinearTensor& a, const BilinearTensor& b) = default;

 private:
  std::size_t index(std::size_t i, std::size_t j, std::size_t k) const { return (i * dim_ + j) * dim_ + k; }

  std::size_t dim_ = 0;
  Vector data_;
};

/// Linear self-map in the fixed basis; column j holds the image of e_j.
/// Vectorization: row-major, index r * n + c.
class LinearMap {
 public:
  LinearMap() = default;
  explicit LinearMap(std::size_t dim) : m_(dim, dim) {}
  explicit LinearMap(Matrix m);

  static LinearMap identity(std::size_t dim) { return LinearMap(Matrix::identity(dim)); }
  static LinearMap from_vector(std::size_t dim, std::span<const Rational> v);

  std::size_t dim() const { return m_.rows(); }
  const Matrix& matrix() const { return m_; }
  Rational& operator()(std::size_t r, std::size_t c) { return m_(r, c); }
  const Rational& operator()(std::size_t r, std::size_t c) const { return m_(r, c); }

  Vector apply(std::span<const Rational> v) const { return m_.apply(v); }
  Vector image_of_basis(std::size_t j) const { return m_.column(j); }
  Vector vectorized() const;
  bool is_zero() const { return m_.is_zero(); }

  friend LinearMap operator+(const LinearMap& a, const LinearMap& b) { return LinearMap(a.m_ + b.m_); }
  friend LinearMap operator-(const LinearMap& a, const LinearMap& b) { return LinearMap(a.m_ - b.m_); }
  friend LinearMap operator*(const LinearMap& a, const LinearMap& b) { return LinearMap(a.m_ * b.m_); }
  friend bool operator==(const LinearMap& a, const LinearMap& b) = default;

 private:
  Matrix m_;
};

/// Structure constants c(i, j, k) = coefficient of e_k in [e_i, e_j].
class StructureTensor {
 public:
  StructureTensor() = default;
  explicit StructureTensor(std::size_t dim) : product_(dim) {}
  explicit StructureTensor(BilinearTensor product, std::vector<std::string> labels = {});

  std::size_t dim() const { return product_.dim(); }
  const Rational& operator()(std::size_t i, std::size_t j, std::size_t k) const { return product_(i, j, k); }
  void set(std::size_t i, std::size_t j, std::size_t k, const Rational& value) { product_(i, j, k) = value; }

  /// Coordinates of [e_i, e_j].
  std::span<const Rational> product(std::size_t i, std::size_t j) const { return product_.value(i, j); }
  /// The bracket viewed as a bilinear map.
  const BilinearTensor& bracket_tensor() const { return product_; }

  /// Cosmetic only; defaults to e1 .. en.
  /// Labels as set; empty when none were given.
  const std::vector<std::string>& labels() const { return labels_; }
  /// One label per basis element, defaults filled in.
  std::vector<std::string> all_labels() const;
  std::string label(std::size_t i) const;
  void set_labels(std::vector<std::string> labels);

  /// Tensor equality; labels are ignored.
  friend bool operator==(const StructureTensor& a, const StructureTensor& b) { return a.product_ == b.product_; }

 private:
  BilinearTensor product_;
  std::vector<std::string> labels_;
};

/// Left action of a Lie algebra on Q^module_dim: one matrix per Lie basis element.
/// Construction enforces X.(Y.v) - Y.(X.v) = [X, Y].v on basis pairs.
class ModuleAction {
 public:
  ModuleAction(const StructureTensor& lie, std::vector<Matrix> action);

  std::size_t lie_dim() const { return action_.size(); }
  std::size_t module_dim() const { return module_dim_; }
  const Matrix& action(std::size_t i) const { return action_[i]; }

  static ModuleAction trivial(const StructureTensor& lie, std::size_t module_dim);
  /// Basis pairs (i, j) where the module axiom fails; empty for a valid action.
  static std::vector<std::pair<std::size_t, std::size_t>> axiom_defects(const StructureTensor& lie,
                                                                        const std::vector<Matrix>& action);

 private:
  std::size_t module_dim_ = 0;
  std::vector<Matrix> action_;
};

struct LeibnizViolation {
  std::size_t i, j, k;
  /// [e_i,[e_j,e_k]] - [e_j,[e_i,e_k]] - [[e_i,e_j],e_k]
  Vector defect;
};

struct Quotient {
  StructureTensor algebra;
  /// (n - dim I) x n matrix of L -> L/I.
  Matrix projection;
  /// Original basis indices whose classes form the quotient basis.
  std::vector<std::size_t> section;
};

std::vector<LeibnizViolation> check_left_leibniz(const StructureTensor& L);
StructureTensor opposite(const StructureTensor& L);
Vector bracket(const StructureTensor& L, std::span<const Rational> x, std::span<const Rational> y);

/// Span of [e_i,e_i] and [e_i,e_j] + [e_j,e_i].
Subspace leibniz_kernel(const StructureTensor& L);
Subspace left_center(const StructureTensor& L);
Subspace center(const StructureTensor& L);
bool is_ideal(const StructureTensor& L, const Subspace& S);
/// Quotient on the complement spanned by the non-pivot coordinates of I.
/// Throws std::invalid_argument when I is not an ideal.
Quotient quotient(const StructureTensor& L, const Subspace& I);
bool is_lie(const StructureTensor& L);
/// L + V with [X + a, Y + b] = [X, Y] + X.b; Lie basis first, module basis after.
StructureTensor hemisemidirect(const StructureTensor& lie, const ModuleAction& V);

}  // namespace leibniz
