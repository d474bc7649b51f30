#pragma once

// Named algebras used as fixtures, plus a seeded generator of valid left
// Leibniz algebras of hemisemidirect shape.
//
// Basis orders:
//   sl2                 (h, e, f)
//   heisenberg          (e1, e2, e3)        [e1,e2] = e3
//   nonabelian2         (x, y)              [x,y] = y
//   example_solvable(n) (e1 .. en, x, y)
//   example_sec4_one    (x, y, v)
//   example_sec4_two    (x, y, v, w)

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "leibniz/algebra.hpp"

namespace leibniz::catalog {

StructureTensor abelian(std::size_t n);
StructureTensor sl2();
StructureTensor heisenberg();
StructureTensor nonabelian2();

/// The solvable family on e1..en, x, y with nonzero brackets
///   [e1,e1]=e3, [e_i,e1]=e_{i+1} (3<=i<=n-1), [e1,x]=e1, [x,e1]=-e1,
///   [e2,y]=e2, [e_i,x]=(i-1)e_i (3<=i<=n).
/// Every unlisted bracket is zero.  The table satisfies the right Leibniz
/// identity, so it is returned normalized through opposite().
/// Throws std::invalid_argument for n < 4.
StructureTensor example_solvable(std::size_t n);
/// The listed table itself, before normalization.
StructureTensor example_solvable_right_table(std::size_t n);

/// nonabelian2 + <v>, x.v = v, y.v = 0.
StructureTensor example_sec4_one();
/// nonabelian2 + <v, w>, x acting as the identity, y as zero.
StructureTensor example_sec4_two();

enum class LieChoice { abelian1, abelian2, nonabelian2, heisenberg, sl2 };

StructureTensor lie_table(LieChoice choice);
std::string_view to_string(LieChoice choice);
LieChoice parse_lie_choice(std::string_view name);
std::vector<LieChoice> all_lie_choices();

/// Deterministic in (seed, choice, module_dim).  Module actions are built
/// from small-integer templates per Lie table, conjugated by a random
/// unimodular-ish change of basis and kept only if the module axiom holds.
/// module_dim must be <= 4.  Throws std::runtime_error when the rejection
/// budget runs out.
StructureTensor random_hemisemidirect(std::uint64_t seed, LieChoice choice, std::size_t module_dim);

/// Builders addressable by name from files and the command line:
/// abelian (needs n), sl2, heisenberg, nonabelian2, example_solvable (needs n),
/// example_sec4_one, example_sec4_two.
std::vector<std::string> builder_names();
bool builder_takes_n(std::string_view builder);
StructureTensor build(std::string_view builder, std::size_t n = 0);

enum class Provenance { literature, inspection, oracle };

std::string_view to_string(Provenance p);
Provenance parse_provenance(std::string_view name);

struct ExpectedFact {
  std::string key;
  /// Decimal integer or "true"/"false".
  std::string value;
  Provenance source = Provenance::oracle;
};

struct FixtureDescriptor {
  std::string name;
  std::string builder;
  std::size_t n = 0;
  std::vector<ExpectedFact> expected;
};

/// Fact keys understood by evaluate_fact().
std::vector<std::string> fact_keys();
/// Recomputes one fact with the engine, in the same string form as ExpectedFact::value.
std::string evaluate_fact(const StructureTensor& L, std::string_view key);

}  // namespace leibniz::catalog
