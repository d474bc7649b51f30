#pragma once

// Reference checks run by `leibniz verify-paper` and the acceptance binary.
// One CheckResult per numbered criterion; `failures` lists every sub-check
// that did not hold.

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "leibniz/io.hpp"

namespace leibniz::suite {

struct CheckResult {
  int id = 0;
  std::string title;
  bool pass = false;
  std::vector<std::string> passed;
  std::vector<std::string> failures;
};

struct SuiteOptions {
  std::size_t random_count = 30;
  std::uint64_t random_seed = 20240601;
};

/// Fixtures compiled into the binary, parsed.
std::vector<io::Fixture> fixtures();

CheckResult check_sec4_first();
CheckResult check_sec4_second();
CheckResult check_example_completeness();
CheckResult check_example_factorization();
CheckResult check_sl2();
CheckResult check_properties(const SuiteOptions& options = {});
CheckResult check_converse();
/// In-process part: emit/parse round trip and fixture facts for every fixture.
CheckResult check_round_trip();

std::vector<CheckResult> run_all(const SuiteOptions& options = {});

/// Every property from the property criterion, evaluated on one algebra.
/// Failure messages are prefixed with `name`.
void property_checks(const std::string& name, const StructureTensor& L, std::vector<std::string>& passed,
                     std::vector<std::string>& failures);

/// The random algebras of the property criterion: (name, tensor).
std::vector<std::pair<std::string, StructureTensor>> random_algebras(const SuiteOptions& options = {});

io::json to_json(const CheckResult& r);

}  // namespace leibniz::suite
