#include <doctest.h>

#include "leibniz/algebra.hpp"
#include "leibniz/catalog.hpp"

using namespace leibniz;

namespace {

Subspace span_units(std::size_t n, std::initializer_list<std::size_t> idx) {
  std::vector<Vector> gens;
  for (std::size_t i : idx) gens.push_back(unit_vector(n, i));
  return Subspace::span(n, gens);
}

}  // namespace

TEST_CASE("bracket is bilinear in coordinates") {
  const StructureTensor L = catalog::sl2();
  const Vector h = unit_vector(3, 0), e = unit_vector(3, 1);
  CHECK(bracket(L, h, e) == Vector{Rational(0), Rational(2), Rational(0)});
  const Vector x{Rational(1), Rational(1, 2), Rational(0)};
  const Vector y{Rational(0), Rational(0), Rational(3)};
  // [h + e/2, 3f] = -6f + 3/2 h
  CHECK(bracket(L, x, y) == Vector{Rational(3, 2), Rational(0), Rational(-6)});
  CHECK_THROWS_AS(bracket(L, Vector{Rational(1)}, y), std::invalid_argument);
}

TEST_CASE("left identity on catalog tables, violations on a non-Leibniz table") {
  for (const auto& name : catalog::builder_names()) {
    const std::size_t n = catalog::builder_takes_n(name) ? 5 : 0;
    CHECK_MESSAGE(check_left_leibniz(catalog::build(name, n)).empty(), name);
  }
  // [e1,e1] = e2, [e2,e1] = e1 is neither left nor right Leibniz.
  StructureTensor bad(2);
  bad.set(0, 0, 1, 1);
  bad.set(1, 0, 0, 1);
  const auto vs = check_left_leibniz(bad);
  REQUIRE_FALSE(vs.empty());
  for (const auto& v : vs) CHECK_FALSE(is_zero(v.defect));
}

TEST_CASE("the listed solvable table is right Leibniz; opposite() makes it left") {
  for (std::size_t n : {4u, 5u, 6u}) {
    const StructureTensor R = catalog::example_solvable_right_table(n);
    CHECK_FALSE(check_left_leibniz(R).empty());
    CHECK(check_left_leibniz(opposite(R)).empty());
    CHECK(opposite(opposite(R)) == R);
  }
}

TEST_CASE("kernel and centers on small examples") {
  const StructureTensor heis = catalog::heisenberg();
  CHECK(leibniz_kernel(heis).dim() == 0);
  CHECK(center(heis) == span_units(3, {2}));
  CHECK(left_center(heis) == span_units(3, {2}));

  const StructureTensor one = catalog::example_sec4_one();
  CHECK(leibniz_kernel(one) == span_units(3, {2}));
  CHECK(left_center(one) == span_units(3, {2}));
  CHECK(center(one).dim() == 0);

  const StructureTensor two = catalog::example_sec4_two();
  CHECK(leibniz_kernel(two) == span_units(4, {2, 3}));

  CHECK(leibniz_kernel(catalog::abelian(0)).dim() == 0);
  CHECK(center(catalog::abelian(4)).dim() == 4);
}

TEST_CASE("example algebra n=5: Leib contains e3 and equals the left center") {
  const StructureTensor L = catalog::example_solvable(5);
  const Subspace leib = leibniz_kernel(L);
  CHECK(leib.contains(unit_vector(7, 2)));
  CHECK(leib == span_units(7, {1, 2, 3, 4}));
  CHECK(left_center(L) == leib);
  CHECK(center(L).dim() == 0);
}

TEST_CASE("quotient by Leib") {
  const StructureTensor L = catalog::example_sec4_two();
  const Quotient q = quotient(L, leibniz_kernel(L));
  CHECK(q.section == std::vector<std::size_t>{0, 1});
  CHECK(q.algebra == catalog::nonabelian2());
  CHECK(is_lie(q.algebra));
  CHECK_THROWS_AS(quotient(L, span_units(4, {0})), std::invalid_argument);
  CHECK(is_ideal(L, span_units(4, {1, 2, 3})));
  CHECK_FALSE(is_ideal(L, span_units(4, {0})));
}

TEST_CASE("module action axiom and hemisemidirect products") {
  const StructureTensor lie = catalog::nonabelian2();
  CHECK_THROWS_AS(ModuleAction(lie, {Matrix{{0}}, Matrix{{1}}}), std::invalid_argument);
  CHECK(ModuleAction::axiom_defects(lie, {Matrix{{0}}, Matrix{{1}}}).size() == 2);
  const ModuleAction triv = ModuleAction::trivial(lie, 2);
  const StructureTensor L = hemisemidirect(lie, triv);
  CHECK(L.dim() == 4);
  CHECK(is_lie(L));
  CHECK(L.label(2) == "v1");

  const StructureTensor one = hemisemidirect(lie, ModuleAction(lie, {Matrix{{1}}, Matrix{{0}}}));
  CHECK(one == catalog::example_sec4_one());
  CHECK_FALSE(is_lie(one));
}

TEST_CASE("bilinear tensor and linear map helpers") {
  BilinearTensor B(2);
  B(0, 1, 1) = 3;
  CHECK(B.swapped()(1, 0, 1) == 3);
  CHECK(BilinearTensor::from_vector(2, B.vectorized()) == B);
  CHECK((B - B).is_zero());
  CHECK(B.apply(Vector{Rational(1), Rational(0)}, Vector{Rational(0), Rational(2)}) == Vector{Rational(0), Rational(6)});
  LinearMap g(2);
  g(1, 0) = 5;
  CHECK(g.image_of_basis(0) == Vector{Rational(0), Rational(5)});
  CHECK(LinearMap::from_vector(2, g.vectorized()) == g);
}
