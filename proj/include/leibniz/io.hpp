#pragma once

// JSON algebra files.
//
//   {
//     "dim": 3,
//     "orientation": "left",            optional, "left" | "right"
//     "labels": ["x", "y", "v"],        optional
//     "brackets": [
//       {"i": 1, "j": 2, "terms": [{"k": 2, "coeff": "1"}]}
//     ]
//   }
//
// Indices are 1-based.  Coefficients are strings "p/q" or "p".  Bilinear maps
// use the same layout with "entries" in place of "brackets".  A fixture file
// is an algebra file with an extra "fixture" object.

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include <json.hpp>

#include "leibniz/algebra.hpp"
#include "leibniz/catalog.hpp"

namespace leibniz::io {

using json = nlohmann::ordered_json;

class ParseError : public std::runtime_error {
 public:
  /// Syntax error at a 1-based line and column.
  ParseError(const std::string& message, std::size_t line, std::size_t column);
  /// Semantic error at a JSON pointer such as /brackets/2/terms/0/coeff.
  ParseError(const std::string& message, std::string path);

  std::optional<std::size_t> line() const { return line_; }
  std::optional<std::size_t> column() const { return column_; }
  const std::string& path() const { return path_; }

 private:
  std::optional<std::size_t> line_;
  std::optional<std::size_t> column_;
  std::string path_;
};

json parse_json(std::string_view text);

StructureTensor parse_algebra(std::string_view text);
StructureTensor algebra_from_json(const json& doc);
json algebra_to_json(const StructureTensor& L);
/// Deterministic: sorted by (i, j), then k; zero terms omitted; two-space indent.
std::string emit_algebra(const StructureTensor& L);

/// `dim` is checked when given.
BilinearTensor parse_bilinear(std::string_view text, std::optional<std::size_t> dim = std::nullopt);
BilinearTensor bilinear_from_json(const json& doc, std::optional<std::size_t> dim = std::nullopt);
json bilinear_to_json(const BilinearTensor& B);
std::string emit_bilinear(const BilinearTensor& B);

struct Fixture {
  StructureTensor algebra;
  catalog::FixtureDescriptor descriptor;
};

Fixture parse_fixture(std::string_view text);
std::string emit_fixture(const Fixture& fixture);

std::string read_file(const std::string& path);

// Report helpers.
json to_json(const Rational& q);
json to_json(const Vector& v);
json to_json(const Subspace& S);
/// Columns as images of basis vectors.
json to_json(const LinearMap& D);

}  // namespace leibniz::io
