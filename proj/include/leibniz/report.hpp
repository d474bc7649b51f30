#pragma once

// Structured reports behind the command-line tool.  Every report is a JSON
// object with "command" and "ok"; render_text() turns one into the human
// output.  Indices in reports are 1-based.

#include <string>

#include "leibniz/biderivations.hpp"
#include "leibniz/io.hpp"
#include "leibniz/suite.hpp"

namespace leibniz::report {

using io::json;

json validate(const StructureTensor& L);
json invariants(const StructureTensor& L);
json derivations(const StructureTensor& L);
json biderivations(const StructureTensor& L);
json completeness(const StructureTensor& L);

enum class Modulo { zero, leib };
enum class Sides { left, right, both };

json factor(const StructureTensor& L, const BilinearTensor& B, Modulo modulo, Sides sides);
json verify_paper(const suite::SuiteOptions& options = {});

json factorization_to_json(const StructureTensor& L, const FactorizationResult& r);
json completeness_to_json(const StructureTensor& L, const CompletenessReport& r);

std::string render_text(const json& report);

}  // namespace leibniz::report
