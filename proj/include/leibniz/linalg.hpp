#pragma once

// Exact dense linear algebra over Q plus the subspace lattice every other
// module is written against.
//
// Subspaces are always held in canonical form: the basis is the reduced row
// echelon form of any generating set, without zero rows.  Two subspaces are
// therefore equal exactly when their basis matrices are identical.
//
// Large homogeneous systems (derivations, biderivations) are assembled row by
// row into an Eliminator, which keeps a fully reduced sparse echelon form.
// Sparsity is an internal detail; everything handed back is dense.

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <vector>

#include "leibniz/rational.hpp"

namespace leibniz {

class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols);
  Matrix(std::initializer_list<std::initializer_list<Rational>> rows);

  static Matrix identity(std::size_t n);
  /// Every row must have `cols` entries; `cols` is needed when `rows` is empty.
  static Matrix from_rows(const std::vector<Vector>& rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<const Rational> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
  std::span<Rational> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  Vector row_vector(std::size_t r) const;
  Vector column(std::size_t c) const;
  std::vector<Vector> row_list() const;

  Vector apply(std::span<const Rational> v) const;
  Matrix transpose() const;
  bool is_zero() const;

  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator+(const Matrix& a, const Matrix& b);
  friend Matrix operator-(const Matrix& a, const Matrix& b);
  friend Matrix operator*(const Rational& s, const Matrix& a);
  friend bool operator==(const Matrix& a, const Matrix& b) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

struct SparseEntry {
  std::size_t col;
  Rational value;
};

/// Sorted by column, no explicit zeros.
using SparseRow = std::vector<SparseEntry>;

SparseRow to_sparse(std::span<const Rational> dense);
Vector to_dense(const SparseRow& row, std::size_t cols);

class Subspace;

/// Incremental Gauss-Jordan elimination over sparse rows with an optional
/// right-hand side.  Stored rows are monic and fully reduced: every pivot
/// column is zero in all other stored rows.
class Eliminator {
 public:
  enum class Outcome { new_pivot, redundant, inconsistent };

  struct Reduced {
    SparseRow row;
    Rational rhs;
  };

  explicit Eliminator(std::size_t cols);

  /// Adds the equation `row . v = rhs`.  An inconsistent row is not stored,
  /// but it marks the system as infeasible.
  Outcome add(const SparseRow& row, const Rational& rhs = 0);
  Outcome add_dense(std::span<const Rational> row, const Rational& rhs = 0);

  /// Residual of `row . v = rhs` after eliminating the current pivots.
  Reduced reduce(const SparseRow& row, const Rational& rhs = 0) const;

  std::size_t cols() const { return cols_; }
  std::size_t rank() const { return rows_.size(); }
  bool consistent() const { return consistent_; }
  bool is_pivot(std::size_t col) const { return row_of_col_[col] >= 0; }

  /// Stored rows ordered by pivot column.
  std::vector<std::size_t> pivot_columns() const;
  const SparseRow& pivot_row(std::size_t col) const;
  const Rational& pivot_rhs(std::size_t col) const;

  /// Nonzero rows of the RREF of everything added so far (lhs only).
  Matrix rref_rows() const;
  Subspace row_space() const;
  /// Solution space of the homogeneous system.
  Subspace kernel() const;
  /// The solution with every free variable set to zero, if the system is consistent.
  std::optional<Vector> particular_solution() const;

 private:
  std::size_t cols_;
  std::vector<SparseRow> rows_;
  std::vector<Rational> rhs_;
  std::vector<std::size_t> pivot_of_row_;
  std::vector<long> row_of_col_;
  bool consistent_ = true;
};

class Subspace {
 public:
  Subspace() = default;
  /// The zero subspace of Q^ambient.
  explicit Subspace(std::size_t ambient);

  static Subspace span(std::size_t ambient, const std::vector<Vector>& generators);
  static Subspace span(const Matrix& generators);
  static Subspace full(std::size_t ambient);
  /// Adopts rows that are already nonzero, monic, fully reduced and ordered.
  static Subspace from_rref(Matrix basis, std::vector<std::size_t> pivots);

  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return basis_.rows(); }
  bool is_zero() const { return dim() == 0; }
  const Matrix& basis() const { return basis_; }
  Vector basis_vector(std::size_t r) const { return basis_.row_vector(r); }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  /// v minus its component along the pivot coordinates; zero iff v is a member.
  /// Also the projection onto span{e_c : c non-pivot} along this subspace.
  Vector residual(std::span<const Rational> v) const;
  bool contains(std::span<const Rational> v) const;
  bool contains(const Subspace& other) const;

  /// Indices of the coordinate vectors spanning the fixed complement.
  std::vector<std::size_t> complement_coordinates() const;
  /// Coordinates of v + S in the quotient, in the basis given by complement_coordinates().
  Vector quotient_coordinates(std::span<const Rational> v) const;

  friend bool operator==(const Subspace& a, const Subspace& b) = default;

 private:
  std::size_t ambient_ = 0;
  Matrix basis_;
  std::vector<std::size_t> pivots_;
};

/// Reduced row echelon form, same shape as the input (zero rows last).
Matrix rref(const Matrix& m);
std::size_t rank(const Matrix& m);
/// {v : m v = 0} as a subspace of Q^cols(m).
Subspace nullspace(const Matrix& m);
/// One solution of m v = b with free variables zero, or nullopt when infeasible.
std::optional<Vector> solve(const Matrix& m, std::span<const Rational> b);
/// Inverse of a square matrix, or nullopt when singular.
std::optional<Matrix> inverse(const Matrix& m);

Subspace subspace_sum(const Subspace& a, const Subspace& b);
Subspace subspace_intersection(const Subspace& a, const Subspace& b);
bool subspace_contains(const Subspace& a, std::span<const Rational> v);

}  // namespace leibniz
