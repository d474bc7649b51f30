#include "leibniz/linalg.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace leibniz {

// ---------------------------------------------------------------- Matrix

Matrix::Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

Matrix::Matrix(std::initializer_list<std::initializer_list<Rational>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw std::invalid_argument("ragged matrix literal");
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::from_rows(const std::vector<Vector>& rows, std::size_t cols) {
  Matrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw std::invalid_argument("row length does not match column count");
    std::copy(rows[r].begin(), rows[r].end(), m.row(r).begin());
  }
  return m;
}

Vector Matrix::row_vector(std::size_t r) const {
  auto s = row(r);
  return {s.begin(), s.end()};
}

Vector Matrix::column(std::size_t c) const {
  Vector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

std::vector<Vector> Matrix::row_list() const {
  std::vector<Vector> out;
  out.reserve(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out.push_back(row_vector(r));
  return out;
}

Vector Matrix::apply(std::span<const Rational> v) const {
  if (v.size() != cols_) throw std::invalid_argument("matrix-vector dimension mismatch");
  Vector out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) {
      if (sgn(v[c]) != 0 && sgn((*this)(r, c)) != 0) out[r] += (*this)(r, c) * v[c];
    }
  }
  return out;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

bool Matrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Rational& q) { return sgn(q) == 0; });
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product dimension mismatch");
  Matrix out(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t l = 0; l < a.cols_; ++l) {
      if (sgn(a(i, l)) == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) += a(i, l) * b(l, j);
    }
  return out;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("matrix sum shape mismatch");
  Matrix out = a;
  for (std::size_t i = 0; i < out.data_.size(); ++i) out.data_[i] += b.data_[i];
  return out;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("matrix difference shape mismatch");
  Matrix out = a;
  for (std::size_t i = 0; i < out.data_.size(); ++i) out.data_[i] -= b.data_[i];
  return out;
}

Matrix operator*(const Rational& s, const Matrix& a) {
  Matrix out = a;
  for (auto& q : out.data_) q *= s;
  return out;
}

// ---------------------------------------------------------------- sparse rows

SparseRow to_sparse(std::span<const Rational> dense) {
  SparseRow row;
  for (std::size_t c = 0; c < dense.size(); ++c)
    if (sgn(dense[c]) != 0) row.push_back({c, dense[c]});
  return row;
}

Vector to_dense(const SparseRow& row, std::size_t cols) {
  Vector v(cols);
  for (const auto& e : row) v.at(e.col) = e.value;
  return v;
}

namespace {

// a - s * b, both sorted.
SparseRow axpy(const SparseRow& a, const Rational& s, const SparseRow& b) {
  SparseRow out;
  out.reserve(a.size() + b.size());
  auto ia = a.begin();
  auto ib = b.begin();
  while (ia != a.end() || ib != b.end()) {
    if (ib == b.end() || (ia != a.end() && ia->col < ib->col)) {
      out.push_back(*ia++);
    } else if (ia == a.end() || ib->col < ia->col) {
      out.push_back({ib->col, -s * ib->value});
      ++ib;
    } else {
      Rational v = ia->value - s * ib->value;
      if (sgn(v) != 0) out.push_back({ia->col, std::move(v)});
      ++ia;
      ++ib;
    }
  }
  return out;
}

const Rational* find_entry(const SparseRow& row, std::size_t col) {
  auto it = std::lower_bound(row.begin(), row.end(), col,
                             [](const SparseEntry& e, std::size_t c) { return e.col < c; });
  return (it != row.end() && it->col == col) ? &it->value : nullptr;
}

void check_sorted(const SparseRow& row, std::size_t cols) {
  for (std::size_t i = 0; i < row.size(); ++i) {
    if (row[i].col >= cols) throw std::out_of_range("sparse row column out of range");
    if (i > 0 && row[i - 1].col >= row[i].col) throw std::invalid_argument("sparse row not strictly sorted");
  }
}

}  // namespace

// ---------------------------------------------------------------- Eliminator

Eliminator::Eliminator(std::size_t cols) : cols_(cols), row_of_col_(cols, -1) {}

Eliminator::Reduced Eliminator::reduce(const SparseRow& row, const Rational& rhs) const {
  check_sorted(row, cols_);
  // Dense scatter/gather: stored rows are fully reduced, so only the pivot
  // columns present in the input row need eliminating.
  std::vector<Rational> acc(cols_);
  std::vector<char> mark(cols_, 0);
  std::vector<std::size_t> touched;
  auto touch = [&](std::size_t c) {
    if (!mark[c]) {
      mark[c] = 1;
      touched.push_back(c);
    }
  };
  Rational b = rhs;
  for (const auto& e : row) {
    touch(e.col);
    acc[e.col] += e.value;
  }
  for (const auto& e : row) {
    const long r = row_of_col_[e.col];
    if (r < 0) continue;
    const Rational& a = e.value;
    for (const auto& p : rows_[static_cast<std::size_t>(r)]) {
      touch(p.col);
      acc[p.col] -= a * p.value;
    }
    b -= a * rhs_[static_cast<std::size_t>(r)];
  }
  std::sort(touched.begin(), touched.end());
  Reduced out{{}, std::move(b)};
  for (std::size_t c : touched)
    if (sgn(acc[c]) != 0) out.row.push_back({c, std::move(acc[c])});
  return out;
}

Eliminator::Outcome Eliminator::add(const SparseRow& row, const Rational& rhs) {
  Reduced red = reduce(row, rhs);
  if (red.row.empty()) {
    if (sgn(red.rhs) != 0) {
      consistent_ = false;
      return Outcome::inconsistent;
    }
    return Outcome::redundant;
  }
  const std::size_t p = red.row.front().col;
  const Rational lead = red.row.front().value;
  if (lead != 1) {
    for (auto& e : red.row) e.value /= lead;
    red.rhs /= lead;
  }
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    const Rational* hit = find_entry(rows_[r], p);
    if (hit == nullptr) continue;
    const Rational s = *hit;
    rows_[r] = axpy(rows_[r], s, red.row);
    rhs_[r] -= s * red.rhs;
  }
  row_of_col_[p] = static_cast<long>(rows_.size());
  pivot_of_row_.push_back(p);
  rows_.push_back(std::move(red.row));
  rhs_.push_back(std::move(red.rhs));
  return Outcome::new_pivot;
}

Eliminator::Outcome Eliminator::add_dense(std::span<const Rational> row, const Rational& rhs) {
  if (row.size() != cols_) throw std::invalid_argument("equation length does not match unknown count");
  return add(to_sparse(row), rhs);
}

std::vector<std::size_t> Eliminator::pivot_columns() const {
  std::vector<std::size_t> cols = pivot_of_row_;
  std::sort(cols.begin(), cols.end());
  return cols;
}

const SparseRow& Eliminator::pivot_row(std::size_t col) const {
  const long r = row_of_col_.at(col);
  if (r < 0) throw std::out_of_range("not a pivot column");
  return rows_[static_cast<std::size_t>(r)];
}

const Rational& Eliminator::pivot_rhs(std::size_t col) const {
  const long r = row_of_col_.at(col);
  if (r < 0) throw std::out_of_range("not a pivot column");
  return rhs_[static_cast<std::size_t>(r)];
}

Matrix Eliminator::rref_rows() const {
  const auto pivots = pivot_columns();
  Matrix m(pivots.size(), cols_);
  for (std::size_t i = 0; i < pivots.size(); ++i)
    for (const auto& e : pivot_row(pivots[i])) m(i, e.col) = e.value;
  return m;
}

Subspace Eliminator::row_space() const { return Subspace::from_rref(rref_rows(), pivot_columns()); }

Subspace Eliminator::kernel() const {
  // Basis vector per free column f: 1 at f, minus the f-entry of each pivot row
  // at that row's pivot.  The result is re-canonicalized through span().
  std::vector<std::vector<SparseEntry>> by_free(cols_);
  for (std::size_t r = 0; r < rows_.size(); ++r)
    for (const auto& e : rows_[r])
      if (e.col != pivot_of_row_[r]) by_free[e.col].push_back({pivot_of_row_[r], -e.value});
  Eliminator basis(cols_);
  for (std::size_t f = 0; f < cols_; ++f) {
    if (is_pivot(f)) continue;
    SparseRow v = std::move(by_free[f]);
    v.push_back({f, Rational(1)});
    std::sort(v.begin(), v.end(), [](const SparseEntry& a, const SparseEntry& b) { return a.col < b.col; });
    basis.add(v);
  }
  return basis.row_space();
}

std::optional<Vector> Eliminator::particular_solution() const {
  if (!consistent_) return std::nullopt;
  Vector v(cols_);
  for (std::size_t r = 0; r < rows_.size(); ++r) v[pivot_of_row_[r]] = rhs_[r];
  return v;
}

// ---------------------------------------------------------------- Subspace

Subspace::Subspace(std::size_t ambient) : ambient_(ambient), basis_(0, ambient) {}

Subspace Subspace::span(std::size_t ambient, const std::vector<Vector>& generators) {
  Eliminator e(ambient);
  for (const auto& g : generators) e.add_dense(g);
  return e.row_space();
}

Subspace Subspace::span(const Matrix& generators) {
  Eliminator e(generators.cols());
  for (std::size_t r = 0; r < generators.rows(); ++r) e.add_dense(generators.row(r));
  return e.row_space();
}

Subspace Subspace::full(std::size_t ambient) {
  std::vector<std::size_t> pivots(ambient);
  for (std::size_t i = 0; i < ambient; ++i) pivots[i] = i;
  return from_rref(Matrix::identity(ambient), std::move(pivots));
}

Subspace Subspace::from_rref(Matrix basis, std::vector<std::size_t> pivots) {
  if (basis.rows() != pivots.size()) throw std::invalid_argument("pivot count does not match basis rows");
  Subspace s;
  s.ambient_ = basis.cols();
  s.basis_ = std::move(basis);
  s.pivots_ = std::move(pivots);
  return s;
}

Vector Subspace::residual(std::span<const Rational> v) const {
  if (v.size() != ambient_) throw std::invalid_argument("ambient dimension mismatch");
  Vector out(v.begin(), v.end());
  for (std::size_t r = 0; r < dim(); ++r) {
    const Rational a = out[pivots_[r]];
    if (sgn(a) == 0) continue;
    auto b = basis_.row(r);
    for (std::size_t c = pivots_[r]; c < ambient_; ++c)
      if (sgn(b[c]) != 0) out[c] -= a * b[c];
  }
  return out;
}

bool Subspace::contains(std::span<const Rational> v) const { return leibniz::is_zero(residual(v)); }

bool Subspace::contains(const Subspace& other) const {
  if (other.ambient_ != ambient_) throw std::invalid_argument("ambient dimension mismatch");
  for (std::size_t r = 0; r < other.dim(); ++r)
    if (!contains(other.basis_.row(r))) return false;
  return true;
}

std::vector<std::size_t> Subspace::complement_coordinates() const {
  std::vector<std::size_t> out;
  std::size_t next = 0;
  for (std::size_t c = 0; c < ambient_; ++c) {
    if (next < pivots_.size() && pivots_[next] == c) {
      ++next;
      continue;
    }
    out.push_back(c);
  }
  return out;
}

Vector Subspace::quotient_coordinates(std::span<const Rational> v) const {
  const Vector res = residual(v);
  Vector out;
  for (std::size_t c : complement_coordinates()) out.push_back(res[c]);
  return out;
}

// ---------------------------------------------------------------- free functions

Matrix rref(const Matrix& m) {
  Eliminator e(m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) e.add_dense(m.row(r));
  const Matrix reduced = e.rref_rows();
  Matrix out(m.rows(), m.cols());
  for (std::size_t r = 0; r < reduced.rows(); ++r)
    std::copy(reduced.row(r).begin(), reduced.row(r).end(), out.row(r).begin());
  return out;
}

std::size_t rank(const Matrix& m) { return Subspace::span(m).dim(); }

Subspace nullspace(const Matrix& m) {
  Eliminator e(m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) e.add_dense(m.row(r));
  return e.kernel();
}

std::optional<Vector> solve(const Matrix& m, std::span<const Rational> b) {
  if (b.size() != m.rows()) {
    throw std::invalid_argument("right-hand side has length " + std::to_string(b.size()) + ", expected " +
                                std::to_string(m.rows()));
  }
  Eliminator e(m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    if (e.add_dense(m.row(r), b[r]) == Eliminator::Outcome::inconsistent) return std::nullopt;
  return e.particular_solution();
}

std::optional<Matrix> inverse(const Matrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("inverse of a non-square matrix");
  const std::size_t n = m.rows();
  Eliminator e(2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    SparseRow row = to_sparse(m.row(r));
    row.push_back({n + r, Rational(1)});
    e.add(row);
  }
  const auto pivots = e.pivot_columns();
  if (pivots.size() < n || (n > 0 && pivots[n - 1] != n - 1)) return std::nullopt;
  Matrix inv(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (const auto& entry : e.pivot_row(r))
      if (entry.col >= n) inv(r, entry.col - n) = entry.value;
  return inv;
}

Subspace subspace_sum(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim()) throw std::invalid_argument("ambient dimension mismatch");
  Eliminator e(a.ambient_dim());
  for (std::size_t r = 0; r < a.dim(); ++r) e.add_dense(a.basis().row(r));
  for (std::size_t r = 0; r < b.dim(); ++r) e.add_dense(b.basis().row(r));
  return e.row_space();
}

Subspace subspace_intersection(const Subspace& a, const Subspace& b) {
  // Zassenhaus: eliminate [a | a] and [b | 0]; rows whose left half vanishes
  // span the intersection in their right half.
  if (a.ambient_dim() != b.ambient_dim()) throw std::invalid_argument("ambient dimension mismatch");
  const std::size_t m = a.ambient_dim();
  Eliminator e(2 * m);
  for (std::size_t r = 0; r < a.dim(); ++r) {
    SparseRow row = to_sparse(a.basis().row(r));
    const std::size_t len = row.size();
    for (std::size_t i = 0; i < len; ++i) row.push_back({row[i].col + m, row[i].value});
    e.add(row);
  }
  for (std::size_t r = 0; r < b.dim(); ++r) e.add(to_sparse(b.basis().row(r)));
  std::vector<Vector> gens;
  for (std::size_t p : e.pivot_columns()) {
    if (p < m) continue;
    Vector v(m);
    for (const auto& entry : e.pivot_row(p)) v[entry.col - m] = entry.value;
    gens.push_back(std::move(v));
  }
  return Subspace::span(m, gens);
}

bool subspace_contains(const Subspace& a, std::span<const Rational> v) { return a.contains(v); }

}  // namespace leibniz
