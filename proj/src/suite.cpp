#include "leibniz/suite.hpp"

#include <algorithm>
#include <sstream>

#include "leibniz/biderivations.hpp"
#include "leibniz/catalog.hpp"
#include "leibniz/derivations.hpp"
#include "leibniz/fixture_data.hpp"

namespace leibniz::suite {

namespace {

class Tally {
 public:
  explicit Tally(CheckResult& r) : r_(r) {}
  bool operator()(bool ok, const std::string& what) {
    (ok ? r_.passed : r_.failures).push_back(what);
    return ok;
  }

 private:
  CheckResult& r_;
};

CheckResult start(int id, std::string title) {
  CheckResult r;
  r.id = id;
  r.title = std::move(title);
  return r;
}

CheckResult& finish(CheckResult& r) {
  r.pass = r.failures.empty() && !r.passed.empty();
  return r;
}

std::string row_text(const SparseRow& row, const Rational& rhs, const StructureTensor& L, const std::string& var) {
  std::ostringstream out;
  bool first = true;
  for (const auto& e : row) {
    out << (first ? "" : " + ") << to_string(e.value) << "*" << var << "[" << L.label(e.col) << "]";
    first = false;
  }
  out << " = " << to_string(rhs);
  return out.str();
}

bool single_unit(const SparseRow& row, std::size_t col) {
  return row.size() == 1 && row[0].col == col && row[0].value == 1;
}

bool residual_inside(const BilinearTensor& R, const Subspace& S) {
  for (std::size_t i = 0; i < R.dim(); ++i)
    for (std::size_t j = 0; j < R.dim(); ++j)
      if (!S.contains(R.value(i, j))) return false;
  return true;
}

BilinearTensor as_tensor(const Subspace& space, std::size_t n, std::size_t r) {
  return BilinearTensor::from_vector(n, space.basis_vector(r));
}

// Solves B(e_i, e_j) = [phi(e_i), e_j] as one dense system with the unknowns
// in reverse order, so its free-variables-zero solution is chosen differently
// from the blockwise solver.
std::optional<LinearMap> reverse_order_left_solution(const StructureTensor& L, const BilinearTensor& B) {
  const std::size_t n = L.dim();
  const std::size_t u = n * n;
  Matrix A(n * n * n, u);
  Vector rhs(n * n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        const std::size_t row = (i * n + j) * n + k;
        // unknown phi(m, i) at column u - 1 - (m * n + i)
        for (std::size_t m = 0; m < n; ++m) A(row, u - 1 - (m * n + i)) = L(m, j, k);
        rhs[row] = B(i, j, k);
      }
  const auto x = solve(A, rhs);
  if (!x) return std::nullopt;
  LinearMap phi(n);
  for (std::size_t m = 0; m < n; ++m)
    for (std::size_t i = 0; i < n; ++i) phi(m, i) = (*x)[u - 1 - (m * n + i)];
  return phi;
}

}  // namespace

std::vector<io::Fixture> fixtures() {
  std::vector<io::Fixture> out;
  for (const auto& f : embedded_fixtures()) {
    try {
      out.push_back(io::parse_fixture(f.content));
    } catch (const std::exception& e) {
      throw std::runtime_error("fixture " + std::string(f.name) + ": " + e.what());
    }
  }
  return out;
}

CheckResult check_sec4_first() {
  CheckResult r = start(1, "sec4 first counterexample: symmetric biderivation without left factorization");
  Tally t(r);
  const StructureTensor L = catalog::example_sec4_one();
  const std::size_t x = 0, y = 1, v = 2;
  t(leibniz_kernel(L) == Subspace::span(3, {unit_vector(3, v)}), "Leib(L) = span{v}");

  BilinearTensor F(3);
  F(v, v, v) = 1;
  t(F == F.swapped(), "F is symmetric");
  t(is_biderivation(L, F), "F(v,v) = v is a biderivation");

  const FactorizationResult res = factor_left_modulo(L, F, Subspace(3));
  if (!t(!res.feasible && res.certificate.has_value(), "left factorization with S = 0 is infeasible")) return finish(r);
  const InfeasibilityCertificate& c = *res.certificate;
  t(c.block == v, "obstruction sits in the block of phi(v)");
  const std::string var = "phi(v)";
  if (t(c.steps.size() == 2, "two elimination steps precede the contradiction")) {
    const auto& s0 = c.steps[0];
    const auto& s1 = c.steps[1];
    t(single_unit(s0.equation, y) && s0.rhs == 0 && s0.i == v && s0.j == x,
      "step 1 from F(v,x): " + row_text(s0.equation, s0.rhs, L, var) + ", the y-coefficient B vanishes");
    t(single_unit(s1.equation, x) && s1.rhs == 0 && s1.i == v && s1.j == y,
      "step 2 from F(v,y): " + row_text(s1.equation, s1.rhs, L, var) + ", the x-coefficient A vanishes");
  }
  t(c.i == v && c.j == v && c.k == v && c.defect != 0,
    "contradiction at F(v,v), coefficient of v: 0 = " + to_string(c.defect));
  return finish(r);
}

CheckResult check_sec4_second() {
  CheckResult r = start(2, "sec4 second counterexample: skew biderivation without left factorization");
  Tally t(r);
  const StructureTensor L = catalog::example_sec4_two();
  const std::size_t v = 2, w = 3, n = 4;
  t(leibniz_kernel(L) == Subspace::span(n, {unit_vector(n, v), unit_vector(n, w)}), "Leib(L) = span{v, w}");

  BilinearTensor F(n);
  F(v, w, v) = 1;
  F(w, v, v) = -1;
  t(F.swapped() == Rational(-1) * F, "F is skew");
  t(is_biderivation(L, F), "F(v,w) = v, F(w,v) = -v is a biderivation");
  const FactorizationResult res = factor_left_modulo(L, F, Subspace(n));
  t(!res.feasible && res.certificate.has_value(), "left factorization with S = 0 is infeasible");

  std::vector<Vector> family;
  for (std::size_t a : {v, w})
    for (std::size_t b : {v, w}) {
      LinearMap d(n);
      d(a, b) = 1;
      family.push_back(d.vectorized());
    }
  const Subspace delta = Subspace::span(n * n, family);
  t(delta.dim() == 4 && derivation_space(L).contains(delta),
    "{d : d(L) = 0, d(V) in V} (dim 4) lies in Der(L)");
  return finish(r);
}

CheckResult check_example_completeness() {
  CheckResult r = start(3, "example algebra n=5: complete by def1, not by def2, Z^l = Leib");
  Tally t(r);
  const StructureTensor L = catalog::example_solvable(5);
  t(check_left_leibniz(L).empty(), "left Leibniz identity holds");
  const CompletenessReport d1 = is_complete_def1(L);
  const CompletenessReport d2 = is_complete_def2(L);
  t(d1.verdict, std::string("is_complete_def1 = true (computed ") + (d1.verdict ? "true" : "false") + ")");
  t(!d2.verdict, std::string("is_complete_def2 = false (computed ") + (d2.verdict ? "true" : "false") + ")");
  t(left_center(L) == leibniz_kernel(L), "Z^l(L) = Leib(L)");
  return finish(r);
}

CheckResult check_example_factorization() {
  CheckResult r = start(4, "example algebra n=5: biderivations factor modulo Leib on both sides");
  Tally t(r);
  const StructureTensor L = catalog::example_solvable(5);
  const std::size_t n = L.dim();
  const Subspace leib = leibniz_kernel(L);
  const Subspace bider = biderivation_space(L);
  t(bider.dim() > 0, "biderivation space is nonzero (dim " + std::to_string(bider.dim()) + ")");
  for (std::size_t b = 0; b < bider.dim(); ++b) {
    const BilinearTensor B = as_tensor(bider, n, b);
    const std::string tag = "basis element " + std::to_string(b + 1) + ": ";
    const FactorizationResult left = factor_left_modulo(L, B, leib);
    if (t(left.feasible, tag + "left factorization modulo Leib exists")) {
      t(residual_inside(*left.residual, leib), tag + "p takes values in Leib");
      t(left.residual_is_side_biderivation.value_or(false), tag + "p is a left biderivation");
      t(B - bider_from_map(L, *left.map) == *left.residual, tag + "B = [phi(x), y] + p(x, y)");
    }
    const FactorizationResult right = factor_right_modulo(L, B, leib);
    if (t(right.feasible, tag + "right factorization modulo Leib exists")) {
      t(residual_inside(*right.residual, leib), tag + "q takes values in Leib");
      t(right.residual_is_side_biderivation.value_or(false), tag + "q is a right biderivation");
      t(B - bider_from_map(L, *right.map).swapped() == *right.residual, tag + "B = [psi(y), x] + q(x, y)");
    }
  }
  return finish(r);
}

CheckResult check_sl2() {
  CheckResult r = start(5, "sl2: complete Lie algebra, biderivations are multiples of the bracket");
  Tally t(r);
  const StructureTensor L = catalog::sl2();
  const std::size_t n = L.dim();
  t(is_lie(L), "sl2 is a Lie algebra");
  t(is_complete_def1(L).verdict, "is_complete_def1 = true");
  t(is_complete_def2(L).verdict, "is_complete_def2 = true");
  const Subspace der = derivation_space(L);
  const Subspace inner = inner_derivation_space(L);
  t(der.dim() == 3 && inner.dim() == 3 && der == inner, "dim Der = dim Inner = 3");
  const Subspace bider = biderivation_space(L);
  t(bider.dim() == 1, "dim biderivation space = 1 (computed " + std::to_string(bider.dim()) + ")");
  t(bider == Subspace::span(n * n * n, {L.bracket_tensor().vectorized()}), "generator is proportional to the bracket");
  const Subspace zero(n);
  for (std::size_t b = 0; b < bider.dim(); ++b) {
    const BilinearTensor B = as_tensor(bider, n, b);
    const FactorizationResult left = factor_left_modulo(L, B, zero);
    const FactorizationResult right = factor_right_modulo(L, B, zero);
    t(left.feasible && left.residual->is_zero(), "f(x,y) = [phi(x), y] with S = 0");
    if (t(right.feasible && right.residual->is_zero(), "f(x,y) = [psi(y), x] with S = 0")) {
      bool matches = true;
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
          const Vector minus_psi = (Rational(-1) * right.map->matrix()).column(j);
          const Vector lhs = bracket(L, unit_vector(n, i), minus_psi);
          if (!std::equal(lhs.begin(), lhs.end(), B.value(i, j).begin())) matches = false;
        }
      t(matches, "f(x,y) = [x, psi'(y)] with psi' = -psi");
    }
  }
  return finish(r);
}

void property_checks(const std::string& name, const StructureTensor& L, std::vector<std::string>& passed,
                     std::vector<std::string>& failures) {
  std::size_t before = failures.size();
  auto t = [&](bool ok, const std::string& what) {
    if (!ok) failures.push_back(name + ": " + what);
    return ok;
  };
  const std::size_t n = L.dim();
  t(check_left_leibniz(L).empty(), "left Leibniz identity");

  const Subspace left = left_biderivation_space(L);
  const Subspace right = right_biderivation_space(L);
  const Subspace bider = biderivation_space(L);
  t(subspace_intersection(left, right) == bider, "biderivation space = left ∩ right");
  t(biderivation_space_stacked(L) == bider, "biderivation space = stacked nullspace");

  for (std::size_t b = 0; b < bider.dim(); ++b) {
    const BilinearTensor B = as_tensor(bider, n, b);
    const BilinearTensor P = symmetric_part(B);
    const BilinearTensor M = skew_part(B);
    t(bider.contains(P.vectorized()) && bider.contains(M.vectorized()), "closure under symmetric/skew parts");
    t(Rational(1, 2) * P + Rational(1, 2) * M == B, "B = B+/2 + B-/2");
  }

  const PropCommutingReport pc = verify_prop_commuting(L);
  for (const auto& v : pc.violations) t(false, v);

  const Subspace leib = leibniz_kernel(L);
  const Subspace zl = left_center(L);
  t(is_ideal(L, leib), "Leib is an ideal");
  bool annihilates = true;
  for (std::size_t b = 0; b < leib.dim(); ++b)
    for (std::size_t j = 0; j < n; ++j)
      if (!is_zero(bracket(L, leib.basis_vector(b), unit_vector(n, j)))) annihilates = false;
  t(annihilates, "[Leib, L] = 0");
  t(zl.contains(leib), "Leib ⊆ Z^l");
  t(is_lie(quotient(L, leib).algebra), "L/Leib is Lie");
  const Subspace der = derivation_space(L);
  for (std::size_t d = 0; d < der.dim(); ++d) {
    const LinearMap D = LinearMap::from_vector(n, der.basis_vector(d));
    bool stable = true;
    for (std::size_t b = 0; b < leib.dim(); ++b)
      if (!leib.contains(D.apply(leib.basis_vector(b)))) stable = false;
    t(stable, "D(Leib) ⊆ Leib for derivation basis element " + std::to_string(d + 1));
  }
  t(der.contains(inner_derivation_space(L)), "Inner ⊆ Der");

  // Non-uniqueness of left factorizations with S = 0.
  constexpr std::size_t cap = 12;
  const Subspace zero(n);
  for (std::size_t b = 0; b < std::min(bider.dim(), cap); ++b) {
    const BilinearTensor B = as_tensor(bider, n, b);
    const FactorizationResult f = factor_left_modulo(L, B, zero);
    if (!f.feasible) continue;
    for (std::size_t z = 0; z < zl.dim(); ++z) {
      LinearMap shift(n);
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t m = 0; m < n; ++m) shift(m, j) = Rational(static_cast<long>(j + 1)) * zl.basis_vector(z)[m];
      t(bider_from_map(L, *f.map + shift) == B, "phi + (map into Z^l) is again a factorization");
    }
    const auto other = reverse_order_left_solution(L, B);
    if (t(other.has_value(), "independent dense solve agrees on feasibility")) {
      t(bider_from_map(L, *other) == B, "independent solution factors B");
      const LinearMap diff = *f.map - *other;
      bool inside = true;
      for (std::size_t j = 0; j < n; ++j)
        if (!zl.contains(diff.image_of_basis(j))) inside = false;
      t(inside, "two solutions differ by a map into Z^l");
    }
  }
  if (failures.size() == before) passed.push_back(name + ": all properties hold");
}

std::vector<std::pair<std::string, StructureTensor>> random_algebras(const SuiteOptions& options) {
  std::vector<std::pair<std::string, StructureTensor>> out;
  const auto choices = catalog::all_lie_choices();
  for (std::size_t s = 0; s < options.random_count; ++s) {
    const catalog::LieChoice choice = choices[s % choices.size()];
    const std::size_t q = 1 + (s / choices.size()) % 4;
    const std::uint64_t seed = options.random_seed + s;
    std::string name = "random(seed=" + std::to_string(seed) + ", " + std::string(catalog::to_string(choice)) +
                       ", module_dim=" + std::to_string(q) + ")";
    out.emplace_back(std::move(name), catalog::random_hemisemidirect(seed, choice, q));
  }
  return out;
}

CheckResult check_properties(const SuiteOptions& options) {
  CheckResult r = start(6, "property suite over catalog and random hemisemidirect algebras");
  std::size_t count = 0;
  for (const auto& f : fixtures()) {
    property_checks(f.descriptor.name, f.algebra, r.passed, r.failures);
    ++count;
  }
  std::size_t randoms = 0, max_dim = 0;
  try {
    for (const auto& [name, L] : random_algebras(options)) {
      property_checks(name, L, r.passed, r.failures);
      max_dim = std::max(max_dim, L.dim());
      ++randoms;
    }
  } catch (const std::exception& e) {
    r.failures.push_back(std::string("random generator: ") + e.what());
  }
  if (randoms < 25) r.failures.push_back("fewer than 25 random algebras (" + std::to_string(randoms) + ")");
  if (max_dim > 7) r.failures.push_back("random algebra of dimension " + std::to_string(max_dim) + " exceeds 7");
  r.passed.push_back(std::to_string(count) + " catalog and " + std::to_string(randoms) +
                     " random algebras checked (max dim " + std::to_string(max_dim) + ")");
  return finish(r);
}

CheckResult check_converse() {
  CheckResult r = start(7, "def2-complete algebras: symmetric/skew halves come from (skew-)commuting maps");
  Tally t(r);
  std::size_t tested = 0;
  for (const auto& f : fixtures()) {
    if (!is_complete_def2(f.algebra).verdict) continue;
    ++tested;
    const ConverseReport rep = converse_def2_sym_skew(f.algebra);
    for (const auto& e : rep.entries) {
      const std::string tag = f.descriptor.name + " basis " + std::to_string(e.basis_index + 1) +
                              (e.kind == SymmetryKind::symmetric ? " symmetric half" : " skew half") + ": ";
      if (!t(e.factor_feasible, tag + "factors with S = 0")) continue;
      t(e.in_expected_space,
        tag + (e.kind == SymmetryKind::symmetric ? "g is skew-commuting" : "g is commuting"));
      t(e.reproduces, tag + "bider_from_map(g) reproduces the half");
    }
    t(true, f.descriptor.name + ": " + std::to_string(rep.biderivation_dim) + " biderivation basis elements processed");
  }
  t(tested > 0, std::to_string(tested) + " def2-complete catalog algebras");
  return finish(r);
}

CheckResult check_round_trip() {
  CheckResult r = start(8, "catalog -> file -> parse round trip and fixture facts");
  Tally t(r);
  for (const auto& f : fixtures()) {
    const auto& d = f.descriptor;
    const StructureTensor built = catalog::build(d.builder, d.n);
    t(built == f.algebra, d.name + ": fixture table equals the catalog builder");
    const StructureTensor back = io::parse_algebra(io::emit_algebra(built));
    t(back == built && back.all_labels() == built.all_labels(), d.name + ": emit -> parse gives an identical tensor");
    for (const auto& e : d.expected) {
      const std::string got = catalog::evaluate_fact(f.algebra, e.key);
      t(got == e.value, d.name + ": " + e.key + " = " + e.value + " [" + std::string(catalog::to_string(e.source)) +
                            "]" + (got == e.value ? "" : ", computed " + got));
    }
  }
  return finish(r);
}

std::vector<CheckResult> run_all(const SuiteOptions& options) {
  std::vector<CheckResult> out;
  auto guarded = [&out](int id, auto&& fn) {
    try {
      out.push_back(fn());
    } catch (const std::exception& e) {
      CheckResult r = start(id, "criterion " + std::to_string(id));
      r.failures.push_back(std::string("exception: ") + e.what());
      out.push_back(std::move(r));
    }
  };
  guarded(1, check_sec4_first);
  guarded(2, check_sec4_second);
  guarded(3, check_example_completeness);
  guarded(4, check_example_factorization);
  guarded(5, check_sl2);
  guarded(6, [&] { return check_properties(options); });
  guarded(7, check_converse);
  guarded(8, check_round_trip);
  return out;
}

io::json to_json(const CheckResult& r) {
  return {{"id", r.id},
          {"title", r.title},
          {"status", r.pass ? "PASS" : "FAIL"},
          {"passed", r.passed},
          {"failures", r.failures}};
}

}  // namespace leibniz::suite
