#include "leibniz/catalog.hpp"

#include <random>
#include <stdexcept>

#include "leibniz/biderivations.hpp"
#include "leibniz/derivations.hpp"

namespace leibniz::catalog {

namespace {

void put(StructureTensor& L, std::size_t i, std::size_t j, std::size_t k, const Rational& v) { L.set(i, j, k, v); }

void put_antisymmetric(StructureTensor& L, std::size_t i, std::size_t j, std::size_t k, const Rational& v) {
  L.set(i, j, k, v);
  L.set(j, i, k, -v);
}

}  // namespace

StructureTensor abelian(std::size_t n) { return StructureTensor(n); }

StructureTensor sl2() {
  StructureTensor L(3);
  put_antisymmetric(L, 0, 1, 1, 2);
  put_antisymmetric(L, 0, 2, 2, -2);
  put_antisymmetric(L, 1, 2, 0, 1);
  L.set_labels({"h", "e", "f"});
  return L;
}

StructureTensor heisenberg() {
  StructureTensor L(3);
  put_antisymmetric(L, 0, 1, 2, 1);
  return L;
}

StructureTensor nonabelian2() {
  StructureTensor L(2);
  put_antisymmetric(L, 0, 1, 1, 1);
  L.set_labels({"x", "y"});
  return L;
}

StructureTensor example_solvable_right_table(std::size_t n) {
  if (n < 4) throw std::invalid_argument("example_solvable needs n >= 4");
  // 0-based: e_i -> i-1, x -> n, y -> n+1
  const std::size_t x = n;
  const std::size_t y = n + 1;
  StructureTensor L(n + 2);
  put(L, 0, 0, 2, 1);
  for (std::size_t i = 3; i <= n - 1; ++i) put(L, i - 1, 0, i, 1);
  put(L, 0, x, 0, 1);
  put(L, x, 0, 0, -1);
  put(L, 1, y, 1, 1);
  for (std::size_t i = 3; i <= n; ++i) put(L, i - 1, x, i - 1, static_cast<long>(i - 1));
  std::vector<std::string> labels;
  for (std::size_t i = 1; i <= n; ++i) labels.push_back("e" + std::to_string(i));
  labels.push_back("x");
  labels.push_back("y");
  L.set_labels(std::move(labels));
  return L;
}

StructureTensor example_solvable(std::size_t n) { return opposite(example_solvable_right_table(n)); }

StructureTensor example_sec4_one() {
  const StructureTensor lie = nonabelian2();
  ModuleAction V(lie, {Matrix{{1}}, Matrix{{0}}});
  StructureTensor L = hemisemidirect(lie, V);
  L.set_labels({"x", "y", "v"});
  return L;
}

StructureTensor example_sec4_two() {
  const StructureTensor lie = nonabelian2();
  ModuleAction V(lie, {Matrix::identity(2), Matrix(2, 2)});
  StructureTensor L = hemisemidirect(lie, V);
  L.set_labels({"x", "y", "v", "w"});
  return L;
}

// ---------------------------------------------------------------- random generator

StructureTensor lie_table(LieChoice choice) {
  switch (choice) {
    case LieChoice::abelian1: return abelian(1);
    case LieChoice::abelian2: return abelian(2);
    case LieChoice::nonabelian2: return nonabelian2();
    case LieChoice::heisenberg: return heisenberg();
    case LieChoice::sl2: return sl2();
  }
  throw std::invalid_argument("unknown Lie choice");
}

std::string_view to_string(LieChoice choice) {
  switch (choice) {
    case LieChoice::abelian1: return "abelian1";
    case LieChoice::abelian2: return "abelian2";
    case LieChoice::nonabelian2: return "nonabelian2";
    case LieChoice::heisenberg: return "heisenberg";
    case LieChoice::sl2: return "sl2";
  }
  return "?";
}

std::vector<LieChoice> all_lie_choices() {
  return {LieChoice::abelian1, LieChoice::abelian2, LieChoice::nonabelian2, LieChoice::heisenberg, LieChoice::sl2};
}

LieChoice parse_lie_choice(std::string_view name) {
  for (LieChoice c : all_lie_choices())
    if (to_string(c) == name) return c;
  throw std::invalid_argument("unknown Lie choice '" + std::string(name) + "'");
}

namespace {

class Draw {
 public:
  explicit Draw(std::uint64_t seed) : rng_(seed) {}
  // Plain modulo keeps the sequence identical across standard libraries.
  long in(long lo, long hi) { return lo + static_cast<long>(rng_() % static_cast<std::uint64_t>(hi - lo + 1)); }

  Matrix matrix(std::size_t q, long lo, long hi) {
    Matrix m(q, q);
    for (std::size_t r = 0; r < q; ++r)
      for (std::size_t c = 0; c < q; ++c) m(r, c) = in(lo, hi);
    return m;
  }

 private:
  std::mt19937_64 rng_;
};

Matrix polynomial(const Matrix& M, const std::vector<long>& coeffs) {
  const std::size_t q = M.rows();
  Matrix out(q, q);
  Matrix power = Matrix::identity(q);
  for (long c : coeffs) {
    if (c != 0) out = out + Rational(c) * power;
    power = power * M;
  }
  return out;
}

Matrix elementary(std::size_t q, std::size_t r, std::size_t c) {
  Matrix m(q, q);
  m(r, c) = 1;
  return m;
}

// Action templates in a convenient basis; conjugated afterwards.
std::vector<Matrix> template_action(LieChoice choice, std::size_t q, Draw& d) {
  switch (choice) {
    case LieChoice::abelian1:
      return {d.matrix(q, -2, 2)};
    case LieChoice::abelian2: {
      const Matrix M = d.matrix(q, -1, 1);
      return {polynomial(M, {d.in(-1, 1), d.in(-2, 2), d.in(-1, 1)}),
              polynomial(M, {d.in(-1, 1), d.in(-2, 2), d.in(-1, 1)})};
    }
    case LieChoice::nonabelian2: {
      // X diagonal with weights w, Y supported where w_a - w_b = 1: [X, Y] = Y.
      if (d.in(0, 3) == 0) return {d.matrix(q, -1, 1), Matrix(q, q)};
      std::vector<long> w(q);
      for (auto& v : w) v = d.in(-1, 2);
      Matrix X(q, q);
      Matrix Y(q, q);
      for (std::size_t a = 0; a < q; ++a) {
        X(a, a) = w[a];
        for (std::size_t b = 0; b < q; ++b)
          if (w[a] - w[b] == 1) Y(a, b) = d.in(-2, 2);
      }
      return {X, Y};
    }
    case LieChoice::heisenberg: {
      if (q < 3 || d.in(0, 2) == 0) {
        const Matrix M = d.matrix(q, -1, 1);
        return {polynomial(M, {d.in(-1, 1), d.in(-1, 1)}), polynomial(M, {d.in(-1, 1), d.in(-1, 1)}), Matrix(q, q)};
      }
      // Strictly upper 3x3 block, shifted by scalars; the rest trivial.
      const Rational s = d.in(-1, 1);
      const Rational t = d.in(-1, 1);
      const Rational u = d.in(1, 2);
      Matrix A = u * elementary(q, 0, 1);
      Matrix B = elementary(q, 1, 2);
      Matrix C = u * elementary(q, 0, 2);
      for (std::size_t a = 0; a < 3; ++a) {
        A(a, a) += s;
        B(a, a) += t;
      }
      return {A, B, C};
    }
    case LieChoice::sl2: {
      // Direct sum of irreducibles V(m): h v_k = (m-2k) v_k, f v_k = v_{k+1},
      // e v_k = k(m-k+1) v_{k-1}.
      Matrix H(q, q), E(q, q), F(q, q);
      std::size_t offset = 0;
      while (offset < q) {
        const std::size_t size = static_cast<std::size_t>(d.in(1, static_cast<long>(q - offset)));
        const long m = static_cast<long>(size) - 1;
        for (std::size_t k = 0; k < size; ++k) {
          const long kk = static_cast<long>(k);
          H(offset + k, offset + k) = m - 2 * kk;
          if (k + 1 < size) F(offset + k + 1, offset + k) = 1;
          if (k > 0) E(offset + k - 1, offset + k) = kk * (m - kk + 1);
        }
        offset += size;
      }
      return {H, E, F};
    }
  }
  throw std::invalid_argument("unknown Lie choice");
}

}  // namespace

StructureTensor random_hemisemidirect(std::uint64_t seed, LieChoice choice, std::size_t module_dim) {
  if (module_dim > 4) throw std::invalid_argument("module_dim must be at most 4");
  const StructureTensor lie = lie_table(choice);
  Draw d(seed * 0x9E3779B97F4A7C15ULL + static_cast<std::uint64_t>(choice) * 131 + module_dim);
  constexpr int budget = 64;
  for (int attempt = 0; attempt < budget; ++attempt) {
    std::vector<Matrix> action = template_action(choice, module_dim, d);
    const Matrix P = d.matrix(module_dim, -1, 1) + Matrix::identity(module_dim);
    const auto Pinv = inverse(P);
    if (!Pinv) continue;
    for (auto& a : action) a = P * a * *Pinv;
    if (!ModuleAction::axiom_defects(lie, action).empty()) continue;
    StructureTensor out = hemisemidirect(lie, ModuleAction(lie, std::move(action)));
    if (!check_left_leibniz(out).empty()) continue;
    return out;
  }
  throw std::runtime_error("random_hemisemidirect: rejection budget exhausted");
}

// ---------------------------------------------------------------- named builders

std::vector<std::string> builder_names() {
  return {"abelian", "sl2", "heisenberg", "nonabelian2", "example_solvable", "example_sec4_one", "example_sec4_two"};
}

bool builder_takes_n(std::string_view builder) { return builder == "abelian" || builder == "example_solvable"; }

StructureTensor build(std::string_view builder, std::size_t n) {
  if (builder == "abelian") return abelian(n);
  if (builder == "sl2") return sl2();
  if (builder == "heisenberg") return heisenberg();
  if (builder == "nonabelian2") return nonabelian2();
  if (builder == "example_solvable") return example_solvable(n);
  if (builder == "example_sec4_one") return example_sec4_one();
  if (builder == "example_sec4_two") return example_sec4_two();
  throw std::invalid_argument("unknown catalog builder '" + std::string(builder) + "'");
}

std::string_view to_string(Provenance p) {
  switch (p) {
    case Provenance::literature: return "literature";
    case Provenance::inspection: return "inspection";
    case Provenance::oracle: return "oracle";
  }
  return "?";
}

Provenance parse_provenance(std::string_view name) {
  if (name == "literature") return Provenance::literature;
  if (name == "inspection") return Provenance::inspection;
  if (name == "oracle") return Provenance::oracle;
  throw std::invalid_argument("unknown provenance '" + std::string(name) + "'");
}

std::vector<std::string> fact_keys() {
  return {"dim",          "is_lie",           "leibniz_kernel_dim", "left_center_dim",     "center_dim",
          "derivation_dim", "inner_derivation_dim", "left_biderivation_dim", "right_biderivation_dim",
          "biderivation_dim", "loday_biderivation_dim", "commuting_dim", "skew_commuting_dim",
          "complete_def1", "complete_def2"};
}

std::string evaluate_fact(const StructureTensor& L, std::string_view key) {
  auto num = [](std::size_t v) { return std::to_string(v); };
  auto flag = [](bool b) { return std::string(b ? "true" : "false"); };
  if (key == "dim") return num(L.dim());
  if (key == "is_lie") return flag(is_lie(L));
  if (key == "leibniz_kernel_dim") return num(leibniz_kernel(L).dim());
  if (key == "left_center_dim") return num(left_center(L).dim());
  if (key == "center_dim") return num(center(L).dim());
  if (key == "derivation_dim") return num(derivation_space(L).dim());
  if (key == "inner_derivation_dim") return num(inner_derivation_space(L).dim());
  if (key == "left_biderivation_dim") return num(left_biderivation_space(L).dim());
  if (key == "right_biderivation_dim") return num(right_biderivation_space(L).dim());
  if (key == "biderivation_dim") return num(biderivation_space(L).dim());
  if (key == "loday_biderivation_dim") return num(loday_biderivation_space(L).dim());
  if (key == "commuting_dim") return num(commuting_map_space(L).dim());
  if (key == "skew_commuting_dim") return num(skew_commuting_map_space(L).dim());
  if (key == "complete_def1") return flag(is_complete_def1(L).verdict);
  if (key == "complete_def2") return flag(is_complete_def2(L).verdict);
  throw std::invalid_argument("unknown fact key '" + std::string(key) + "'");
}

}  // namespace leibniz::catalog
