#include <doctest.h>

#include <random>

#include "leibniz/linalg.hpp"

using namespace leibniz;

namespace {

Matrix random_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c, long lo, long hi) {
  Matrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = lo + static_cast<long>(rng() % static_cast<unsigned long>(hi - lo + 1));
  return m;
}

}  // namespace

TEST_CASE("parse_rational accepts exact literals only") {
  CHECK(parse_rational("3/6") == Rational(1, 2));
  CHECK(parse_rational("-4") == Rational(-4));
  CHECK(parse_rational("+2/3") == Rational(2, 3));
  CHECK(parse_rational("0/5") == 0);
  CHECK_THROWS_AS(parse_rational("1.5"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("1e3"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational(" 1"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational(""), std::invalid_argument);
  CHECK(to_string(Rational(-6) / 4) == "-3/2");
  CHECK(to_string(Rational(7)) == "7");
}

TEST_CASE("rref and rank of a small matrix") {
  const Matrix m{{1, 2, 3}, {2, 4, 6}, {1, 0, 1}};
  const Matrix r = rref(m);
  CHECK(r == Matrix{{1, 0, 1}, {0, 1, 1}, {0, 0, 0}});
  CHECK(rank(m) == 2);
  const Subspace k = nullspace(m);
  REQUIRE(k.dim() == 1);
  CHECK(is_zero(m.apply(k.basis_vector(0))));
}

TEST_CASE("solve and inverse") {
  const Matrix m{{2, 1}, {1, 1}};
  const Vector b{Rational(3), Rational(2)};
  const auto x = solve(m, b);
  REQUIRE(x);
  CHECK(*x == Vector{Rational(1), Rational(1)});
  const auto inv = inverse(m);
  REQUIRE(inv);
  CHECK(m * *inv == Matrix::identity(2));
  CHECK_FALSE(inverse(Matrix{{1, 2}, {2, 4}}));
  CHECK_FALSE(solve(Matrix{{1, 1}, {1, 1}}, Vector{Rational(0), Rational(1)}));
}

TEST_CASE("empty shapes") {
  CHECK(nullspace(Matrix(0, 3)).dim() == 3);
  CHECK(Subspace(0).dim() == 0);
  CHECK(subspace_intersection(Subspace(0), Subspace(0)).dim() == 0);
  CHECK(rank(Matrix(0, 0)) == 0);
}

TEST_CASE("eliminator reports outcomes and keeps a reduced form") {
  Eliminator e(3);
  CHECK(e.add_dense(Vector{Rational(0), Rational(2), Rational(4)}, 2) == Eliminator::Outcome::new_pivot);
  CHECK(e.add_dense(Vector{Rational(1), Rational(1), Rational(0)}, 1) == Eliminator::Outcome::new_pivot);
  CHECK(e.add_dense(Vector{Rational(1), Rational(2), Rational(2)}, 2) == Eliminator::Outcome::redundant);
  CHECK(e.consistent());
  CHECK(e.rank() == 2);
  CHECK(e.rref_rows() == Matrix{{1, 0, -2}, {0, 1, 2}});
  const auto x = e.particular_solution();
  REQUIRE(x);
  CHECK(*x == Vector{Rational(0), Rational(1), Rational(0)});
  CHECK(e.add_dense(Vector{Rational(1), Rational(2), Rational(2)}, 3) == Eliminator::Outcome::inconsistent);
  CHECK_FALSE(e.consistent());
  CHECK_FALSE(e.particular_solution());
}

TEST_CASE("subspace canonical form, residual and quotient coordinates") {
  const Subspace a = Subspace::span(3, {Vector{Rational(2), Rational(2), Rational(0)}, Vector{Rational(1), Rational(1), Rational(0)}});
  const Subspace b = Subspace::span(3, {Vector{Rational(-1), Rational(-1), Rational(0)}});
  CHECK(a == b);
  CHECK(a.dim() == 1);
  CHECK(a.pivots() == std::vector<std::size_t>{0});
  CHECK(a.complement_coordinates() == std::vector<std::size_t>{1, 2});
  const Vector v{Rational(3), Rational(1), Rational(5)};
  CHECK(a.residual(v) == Vector{Rational(0), Rational(-2), Rational(5)});
  CHECK(a.quotient_coordinates(v) == Vector{Rational(-2), Rational(5)});
  CHECK(a.contains(Vector{Rational(7), Rational(7), Rational(0)}));
  CHECK_FALSE(a.contains(v));
}

TEST_CASE("random matrices: rank-nullity, kernel, modular lattice laws") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t r = 1 + rng() % 5, c = 1 + rng() % 6;
    const Matrix m = random_matrix(rng, r, c, -2, 2);
    const Subspace k = nullspace(m);
    CHECK(k.dim() + rank(m) == c);
    for (std::size_t i = 0; i < k.dim(); ++i) CHECK(is_zero(m.apply(k.basis_vector(i))));
    CHECK(rref(rref(m)) == rref(m));

    const Subspace a = Subspace::span(random_matrix(rng, 1 + rng() % 4, c, -1, 1));
    const Subspace b = Subspace::span(random_matrix(rng, 1 + rng() % 4, c, -1, 1));
    const Subspace s = subspace_sum(a, b);
    const Subspace x = subspace_intersection(a, b);
    CHECK(s.dim() + x.dim() == a.dim() + b.dim());
    CHECK(s.contains(a));
    CHECK(s.contains(b));
    CHECK(a.contains(x));
    CHECK(b.contains(x));
    CHECK(subspace_intersection(a, s) == a);

    Vector v(c);
    for (auto& q : v) q = static_cast<long>(rng() % 5) - 2;
    const Vector res = a.residual(v);
    CHECK(a.residual(res) == res);
    Vector diff(c);
    for (std::size_t i = 0; i < c; ++i) diff[i] = v[i] - res[i];
    CHECK(a.contains(diff));
  }
}

TEST_CASE("random square systems: inverse and solve agree") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t n = 1 + rng() % 5;
    const Matrix m = random_matrix(rng, n, n, -3, 3);
    const auto inv = inverse(m);
    CHECK(inv.has_value() == (rank(m) == n));
    if (!inv) continue;
    CHECK(*inv * m == Matrix::identity(n));
    Vector b(n);
    for (auto& q : b) q = static_cast<long>(rng() % 7) - 3;
    const auto x = solve(m, b);
    REQUIRE(x);
    CHECK(m.apply(*x) == b);
  }
}
