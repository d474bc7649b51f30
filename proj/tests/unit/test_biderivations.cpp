#include <doctest.h>

#include "leibniz/biderivations.hpp"
#include "leibniz/catalog.hpp"

using namespace leibniz;

namespace {

struct Dims {
  const char* builder;
  std::size_t n, left, right, bider, loday, commuting, skew;
};

// Oracle values (tests/oracles/leibniz_oracle.py).
const Dims kDims[] = {
    {"abelian", 0, 0, 0, 0, 0, 0, 0},
    {"abelian", 1, 1, 1, 1, 1, 1, 1},
    {"abelian", 3, 27, 27, 27, 27, 9, 9},
    {"sl2", 0, 9, 9, 1, 1, 1, 0},
    {"heisenberg", 0, 18, 18, 12, 12, 4, 6},
    {"nonabelian2", 0, 4, 4, 4, 4, 1, 3},
    {"example_sec4_one", 0, 9, 9, 5, 6, 0, 4},
    {"example_sec4_two", 0, 24, 24, 12, 12, 0, 9},
    {"example_solvable", 4, 18, 18, 1, 2, 0, 19},
    {"example_solvable", 5, 21, 21, 1, 2, 0, 29},
};

BilinearTensor basis_tensor(const Subspace& S, std::size_t n, std::size_t r) {
  return BilinearTensor::from_vector(n, S.basis_vector(r));
}

}  // namespace

TEST_CASE("biderivation space dimensions match the oracle") {
  for (const auto& d : kDims) {
    const StructureTensor L = catalog::build(d.builder, d.n);
    CAPTURE(d.builder);
    CAPTURE(d.n);
    CHECK(left_biderivation_space(L).dim() == d.left);
    CHECK(right_biderivation_space(L).dim() == d.right);
    CHECK(biderivation_space(L).dim() == d.bider);
    CHECK(biderivation_space_stacked(L).dim() == d.bider);
    CHECK(loday_biderivation_space(L).dim() == d.loday);
    CHECK(commuting_map_space(L).dim() == d.commuting);
    CHECK(skew_commuting_map_space(L).dim() == d.skew);
  }
}

TEST_CASE("membership tests agree with the spaces") {
  const StructureTensor L = catalog::example_sec4_two();
  const std::size_t n = L.dim();
  const Subspace bider = biderivation_space(L);
  for (std::size_t b = 0; b < bider.dim(); ++b) CHECK(is_biderivation(L, basis_tensor(bider, n, b)));
  const Subspace left = left_biderivation_space(L);
  for (std::size_t b = 0; b < left.dim(); ++b) CHECK(is_left_biderivation(L, basis_tensor(left, n, b)));
  CHECK(is_biderivation(L, L.bracket_tensor()) == bider.contains(L.bracket_tensor().vectorized()));
  BilinearTensor junk(n);
  junk(0, 0, 0) = 1;
  CHECK_FALSE(is_biderivation(L, junk));
}

TEST_CASE("on a Lie algebra the Loday space coincides with the biderivation space") {
  for (const char* name : {"sl2", "heisenberg", "nonabelian2"}) {
    const StructureTensor L = catalog::build(name);
    CHECK(loday_biderivation_space(L) == biderivation_space(L));
  }
}

TEST_CASE("sl2 biderivations are multiples of the bracket") {
  const StructureTensor L = catalog::sl2();
  CHECK(biderivation_space(L) == Subspace::span(27, {L.bracket_tensor().vectorized()}));
}

TEST_CASE("first counterexample: certificate forces B = 0, A = 0, then 0 = 1") {
  const StructureTensor L = catalog::example_sec4_one();
  BilinearTensor F(3);
  F(2, 2, 2) = 1;
  REQUIRE(is_biderivation(L, F));
  const FactorizationResult r = factor_left_modulo(L, F, Subspace(3));
  CHECK_FALSE(r.feasible);
  CHECK_FALSE(r.map);
  REQUIRE(r.certificate);
  const auto& c = *r.certificate;
  CHECK(c.block == 2);
  REQUIRE(c.steps.size() == 2);
  CHECK(c.steps[0].i == 2);
  CHECK(c.steps[0].j == 0);
  CHECK(c.steps[0].k == 1);
  REQUIRE(c.steps[0].equation.size() == 1);
  CHECK(c.steps[0].equation[0].col == 1);
  CHECK(c.steps[0].equation[0].value == 1);
  CHECK(c.steps[0].rhs == 0);
  CHECK(c.steps[1].j == 1);
  REQUIRE(c.steps[1].equation.size() == 1);
  CHECK(c.steps[1].equation[0].col == 0);
  CHECK(c.steps[1].rhs == 0);
  CHECK(c.i == 2);
  CHECK(c.j == 2);
  CHECK(c.k == 2);
  CHECK(c.defect == 1);

  // Modulo Leib the same map factors.
  const FactorizationResult m = factor_left_modulo(L, F, leibniz_kernel(L));
  CHECK(m.feasible);
  CHECK(m.residual_is_side_biderivation == std::optional<bool>(true));
}

TEST_CASE("second counterexample: skew biderivation without left factorization") {
  const StructureTensor L = catalog::example_sec4_two();
  BilinearTensor F(4);
  F(2, 3, 2) = 1;
  F(3, 2, 2) = -1;
  CHECK(is_biderivation(L, F));
  CHECK(skew_part(F) == Rational(2) * F);
  CHECK(symmetric_part(F).is_zero());
  const FactorizationResult r = factor_left_modulo(L, F, Subspace(4));
  CHECK_FALSE(r.feasible);
  REQUIRE(r.certificate);
  CHECK(r.certificate->defect != 0);
}

TEST_CASE("factorizations reproduce the input") {
  const StructureTensor L = catalog::example_solvable(4);
  const std::size_t n = L.dim();
  const Subspace leib = leibniz_kernel(L);
  const Subspace bider = biderivation_space(L);
  for (std::size_t b = 0; b < bider.dim(); ++b) {
    const BilinearTensor B = basis_tensor(bider, n, b);
    const FactorizationResult l = factor_left_modulo(L, B, leib);
    REQUIRE(l.feasible);
    CHECK(bider_from_map(L, *l.map) + *l.residual == B);
    CHECK(*l.residual_is_side_biderivation);
    const FactorizationResult r = factor_right_modulo(L, B, leib);
    REQUIRE(r.feasible);
    CHECK(bider_from_map(L, *r.map).swapped() + *r.residual == B);
    CHECK(*r.residual_is_side_biderivation);
  }
  CHECK_THROWS_AS(factor_left_modulo(L, BilinearTensor(2), leib), std::invalid_argument);
}

TEST_CASE("commuting maps give skew biderivations, skew-commuting maps symmetric ones") {
  for (const auto& d : kDims) {
    const StructureTensor L = catalog::build(d.builder, d.n);
    const PropCommutingReport r = verify_prop_commuting(L);
    CAPTURE(d.builder);
    CHECK(r.ok());
    CHECK(r.commuting_dim == d.commuting);
    CHECK(r.skew_commuting_dim == d.skew);
  }
}

TEST_CASE("converse on def2-complete algebras") {
  for (const char* name : {"sl2", "nonabelian2"}) {
    const ConverseReport r = converse_def2_sym_skew(catalog::build(name));
    CHECK(r.ok());
  }
  for (std::size_t n : {4u, 5u}) {
    const ConverseReport r = converse_def2_sym_skew(catalog::example_solvable(n));
    CHECK(r.biderivation_dim == 1);
    CHECK(r.ok());
  }
  CHECK_THROWS_AS(converse_def2_sym_skew(catalog::heisenberg()), std::invalid_argument);
}

TEST_CASE("sigma/theta conditions") {
  SUBCASE("sl2 under def2") {
    const StructureTensor L = catalog::sl2();
    const SigmaThetaReport r = verify_sigma_theta(L, L.bracket_tensor(), CompletenessDefinition::def2);
    CHECK(r.holds());
  }
  SUBCASE("rejects non-biderivations") {
    const StructureTensor L = catalog::example_sec4_one();
    BilinearTensor B(3);
    B(0, 0, 0) = 1;
    CHECK_THROWS_AS(verify_sigma_theta(L, B, CompletenessDefinition::def1), std::invalid_argument);
  }
}

TEST_CASE("random hemisemidirect algebras: space agreement and decomposition") {
  const auto choices = catalog::all_lie_choices();
  for (std::uint64_t seed = 100; seed < 115; ++seed) {
    const auto choice = choices[seed % choices.size()];
    const StructureTensor L = catalog::random_hemisemidirect(seed, choice, 1 + seed % 3);
    const std::size_t n = L.dim();
    const Subspace bider = biderivation_space(L);
    CHECK(bider == biderivation_space_stacked(L));
    CHECK(bider == subspace_intersection(left_biderivation_space(L), right_biderivation_space(L)));
    for (std::size_t b = 0; b < bider.dim(); ++b) {
      const BilinearTensor B = basis_tensor(bider, n, b);
      CHECK(bider.contains(symmetric_part(B).vectorized()));
      CHECK(bider.contains(skew_part(B).vectorized()));
      CHECK(Rational(1, 2) * (symmetric_part(B) + skew_part(B)) == B);
    }
    CHECK(verify_prop_commuting(L).ok());
  }
}
