#include "leibniz/algebra.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace leibniz {

// ---------------------------------------------------------------- BilinearTensor

BilinearTensor::BilinearTensor(std::size_t dim) : dim_(dim), data_(dim * dim * dim) {}

Vector BilinearTensor::apply(std::span<const Rational> x, std::span<const Rational> y) const {
  if (x.size() != dim_ || y.size() != dim_) throw std::invalid_argument("bilinear argument dimension mismatch");
  Vector out(dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    if (sgn(x[i]) == 0) continue;
    for (std::size_t j = 0; j < dim_; ++j) {
      if (sgn(y[j]) == 0) continue;
      const Rational s = x[i] * y[j];
      auto v = value(i, j);
      for (std::size_t k = 0; k < dim_; ++k)
        if (sgn(v[k]) != 0) out[k] += s * v[k];
    }
  }
  return out;
}

BilinearTensor BilinearTensor::swapped() const {
  BilinearTensor t(dim_);
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = 0; j < dim_; ++j)
      for (std::size_t k = 0; k < dim_; ++k) t(j, i, k) = (*this)(i, j, k);
  return t;
}

bool BilinearTensor::is_zero() const { return leibniz::is_zero(data_); }

BilinearTensor BilinearTensor::from_vector(std::size_t dim, std::span<const Rational> v) {
  if (v.size() != dim * dim * dim) throw std::invalid_argument("vectorized bilinear map has wrong length");
  BilinearTensor t(dim);
  std::copy(v.begin(), v.end(), t.data_.begin());
  return t;
}

BilinearTensor operator+(const BilinearTensor& a, const BilinearTensor& b) {
  if (a.dim_ != b.dim_) throw std::invalid_argument("bilinear dimension mismatch");
  BilinearTensor out = a;
  for (std::size_t i = 0; i < out.data_.size(); ++i) out.data_[i] += b.data_[i];
  return out;
}

BilinearTensor operator-(const BilinearTensor& a, const BilinearTensor& b) {
  if (a.dim_ != b.dim_) throw std::invalid_argument("bilinear dimension mismatch");
  BilinearTensor out = a;
  for (std::size_t i = 0; i < out.data_.size(); ++i) out.data_[i] -= b.data_[i];
  return out;
}

BilinearTensor operator*(const Rational& s, const BilinearTensor& a) {
  BilinearTensor out = a;
  for (auto& q : out.data_) q *= s;
  return out;
}

// ---------------------------------------------------------------- LinearMap

LinearMap::LinearMap(Matrix m) : m_(std::move(m)) {
  if (m_.rows() != m_.cols()) throw std::invalid_argument("linear self-map must be square");
}

LinearMap LinearMap::from_vector(std::size_t dim, std::span<const Rational> v) {
  if (v.size() != dim * dim) throw std::invalid_argument("vectorized linear map has wrong length");
  LinearMap m(dim);
  for (std::size_t r = 0; r < dim; ++r)
    for (std::size_t c = 0; c < dim; ++c) m(r, c) = v[r * dim + c];
  return m;
}

Vector LinearMap::vectorized() const {
  Vector v;
  v.reserve(dim() * dim());
  for (std::size_t r = 0; r < dim(); ++r)
    for (std::size_t c = 0; c < dim(); ++c) v.push_back(m_(r, c));
  return v;
}

// ---------------------------------------------------------------- StructureTensor

StructureTensor::StructureTensor(BilinearTensor product, std::vector<std::string> labels) : product_(std::move(product)) {
  set_labels(std::move(labels));
}

std::string StructureTensor::label(std::size_t i) const {
  if (i < labels_.size()) return labels_[i];
  return "e" + std::to_string(i + 1);
}

std::vector<std::string> StructureTensor::all_labels() const {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < dim(); ++i) out.push_back(label(i));
  return out;
}

void StructureTensor::set_labels(std::vector<std::string> labels) {
  if (!labels.empty() && labels.size() != dim()) throw std::invalid_argument("label count does not match dimension");
  labels_ = std::move(labels);
}

// ---------------------------------------------------------------- ModuleAction

std::vector<std::pair<std::size_t, std::size_t>> ModuleAction::axiom_defects(const StructureTensor& lie,
                                                                             const std::vector<Matrix>& action) {
  if (action.size() != lie.dim()) throw std::invalid_argument("need one action matrix per Lie basis element");
  const std::size_t q = action.empty() ? 0 : action.front().rows();
  for (const auto& a : action)
    if (a.rows() != q || a.cols() != q) throw std::invalid_argument("action matrices must be square of equal size");
  std::vector<std::pair<std::size_t, std::size_t>> bad;
  for (std::size_t i = 0; i < lie.dim(); ++i)
    for (std::size_t j = 0; j < lie.dim(); ++j) {
      Matrix rhs(q, q);
      for (std::size_t k = 0; k < lie.dim(); ++k)
        if (sgn(lie(i, j, k)) != 0) rhs = rhs + lie(i, j, k) * action[k];
      if (action[i] * action[j] - action[j] * action[i] != rhs) bad.emplace_back(i, j);
    }
  return bad;
}

ModuleAction::ModuleAction(const StructureTensor& lie, std::vector<Matrix> action) {
  const auto bad = axiom_defects(lie, action);
  if (!bad.empty()) {
    throw std::invalid_argument("module axiom fails for basis pair (" + std::to_string(bad.front().first + 1) + ", " +
                                std::to_string(bad.front().second + 1) + ")");
  }
  module_dim_ = action.empty() ? 0 : action.front().rows();
  action_ = std::move(action);
}

ModuleAction ModuleAction::trivial(const StructureTensor& lie, std::size_t module_dim) {
  ModuleAction m(lie, std::vector<Matrix>(lie.dim(), Matrix(module_dim, module_dim)));
  m.module_dim_ = module_dim;
  return m;
}

// ---------------------------------------------------------------- operations

namespace {

// [e_i, v]
Vector left_bracket_basis(const StructureTensor& L, std::size_t i, std::span<const Rational> v) {
  const std::size_t n = L.dim();
  Vector out(n);
  for (std::size_t m = 0; m < n; ++m) {
    if (sgn(v[m]) == 0) continue;
    auto p = L.product(i, m);
    for (std::size_t k = 0; k < n; ++k)
      if (sgn(p[k]) != 0) out[k] += v[m] * p[k];
  }
  return out;
}

// [v, e_k]
Vector right_bracket_basis(const StructureTensor& L, std::span<const Rational> v, std::size_t k) {
  const std::size_t n = L.dim();
  Vector out(n);
  for (std::size_t m = 0; m < n; ++m) {
    if (sgn(v[m]) == 0) continue;
    auto p = L.product(m, k);
    for (std::size_t l = 0; l < n; ++l)
      if (sgn(p[l]) != 0) out[l] += v[m] * p[l];
  }
  return out;
}

}  // namespace

std::vector<LeibnizViolation> check_left_leibniz(const StructureTensor& L) {
  const std::size_t n = L.dim();
  std::vector<LeibnizViolation> out;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        Vector d = left_bracket_basis(L, i, L.product(j, k));
        const Vector b = left_bracket_basis(L, j, L.product(i, k));
        const Vector c = right_bracket_basis(L, L.product(i, j), k);
        for (std::size_t m = 0; m < n; ++m) d[m] -= b[m] + c[m];
        if (!is_zero(d)) out.push_back({i, j, k, std::move(d)});
      }
  return out;
}

StructureTensor opposite(const StructureTensor& L) {
  StructureTensor out(L.bracket_tensor().swapped(), L.labels());
  return out;
}

Vector bracket(const StructureTensor& L, std::span<const Rational> x, std::span<const Rational> y) {
  if (x.size() != L.dim() || y.size() != L.dim()) {
    throw std::invalid_argument("bracket arguments must have length " + std::to_string(L.dim()));
  }
  return L.bracket_tensor().apply(x, y);
}

Subspace leibniz_kernel(const StructureTensor& L) {
  const std::size_t n = L.dim();
  Eliminator e(n);
  for (std::size_t i = 0; i < n; ++i) {
    e.add_dense(L.product(i, i));
    for (std::size_t j = i + 1; j < n; ++j) {
      Vector s(L.product(i, j).begin(), L.product(i, j).end());
      auto t = L.product(j, i);
      for (std::size_t k = 0; k < n; ++k) s[k] += t[k];
      e.add_dense(s);
    }
  }
  return e.row_space();
}

namespace {

// Rows (j, k) of x -> [x, e_j] (and of x -> [e_j, x] when both_sides).
Subspace annihilator_kernel(const StructureTensor& L, bool both_sides) {
  const std::size_t n = L.dim();
  Eliminator e(n);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = 0; k < n; ++k) {
      SparseRow left;
      SparseRow right;
      for (std::size_t i = 0; i < n; ++i) {
        if (sgn(L(i, j, k)) != 0) left.push_back({i, L(i, j, k)});
        if (both_sides && sgn(L(j, i, k)) != 0) right.push_back({i, L(j, i, k)});
      }
      e.add(left);
      if (both_sides) e.add(right);
    }
  return e.kernel();
}

}  // namespace

Subspace left_center(const StructureTensor& L) { return annihilator_kernel(L, false); }

Subspace center(const StructureTensor& L) { return annihilator_kernel(L, true); }

bool is_ideal(const StructureTensor& L, const Subspace& S) {
  if (S.ambient_dim() != L.dim()) throw std::invalid_argument("subspace ambient dimension does not match algebra");
  for (std::size_t r = 0; r < S.dim(); ++r) {
    const auto s = S.basis().row(r);
    for (std::size_t j = 0; j < L.dim(); ++j) {
      if (!S.contains(left_bracket_basis(L, j, s))) return false;
      if (!S.contains(right_bracket_basis(L, s, j))) return false;
    }
  }
  return true;
}

Quotient quotient(const StructureTensor& L, const Subspace& I) {
  if (!is_ideal(L, I)) throw std::invalid_argument("quotient requires an ideal");
  const std::size_t n = L.dim();
  Quotient q;
  q.section = I.complement_coordinates();
  const std::size_t m = q.section.size();
  q.projection = Matrix(m, n);
  for (std::size_t j = 0; j < n; ++j) {
    const Vector c = I.quotient_coordinates(unit_vector(n, j));
    for (std::size_t a = 0; a < m; ++a) q.projection(a, j) = c[a];
  }
  BilinearTensor prod(m);
  std::vector<std::string> labels;
  for (std::size_t a = 0; a < m; ++a) {
    labels.push_back(L.label(q.section[a]));
    for (std::size_t b = 0; b < m; ++b) {
      const Vector c = I.quotient_coordinates(L.product(q.section[a], q.section[b]));
      std::copy(c.begin(), c.end(), prod.value(a, b).begin());
    }
  }
  q.algebra = StructureTensor(std::move(prod), L.labels().empty() ? std::vector<std::string>{} : labels);
  return q;
}

bool is_lie(const StructureTensor& L) {
  const std::size_t n = L.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (L(i, j, k) != -L(j, i, k)) return false;
  return true;
}

StructureTensor hemisemidirect(const StructureTensor& lie, const ModuleAction& V) {
  if (!is_lie(lie)) throw std::invalid_argument("hemisemidirect product needs a Lie first factor");
  if (V.lie_dim() != lie.dim()) throw std::invalid_argument("module is over an algebra of different dimension");
  std::vector<Matrix> action;
  for (std::size_t i = 0; i < V.lie_dim(); ++i) action.push_back(V.action(i));
  if (!ModuleAction::axiom_defects(lie, action).empty()) throw std::invalid_argument("action is not a module over this algebra");
  const std::size_t p = lie.dim();
  const std::size_t q = V.module_dim();
  StructureTensor out(p + q);
  for (std::size_t i = 0; i < p; ++i) {
    for (std::size_t j = 0; j < p; ++j)
      for (std::size_t k = 0; k < p; ++k) out.set(i, j, k, lie(i, j, k));
    for (std::size_t b = 0; b < q; ++b)
      for (std::size_t a = 0; a < q; ++a) out.set(i, p + b, p + a, V.action(i)(a, b));
  }
  if (!lie.labels().empty()) {
    std::vector<std::string> labels = lie.labels();
    for (std::size_t b = 0; b < q; ++b) labels.push_back("v" + std::to_string(b + 1));
    out.set_labels(std::move(labels));
  }
  return out;
}

}  // namespace leibniz
