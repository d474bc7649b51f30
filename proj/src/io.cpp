#include "leibniz/io.hpp"

#include <fstream>
#include <map>
#include <sstream>
#include <utility>

namespace leibniz::io {

namespace {

std::string describe(std::string message, const std::optional<std::size_t>& line,
                     const std::optional<std::size_t>& column, const std::string& path) {
  if (line) return "line " + std::to_string(*line) + ", column " + std::to_string(*column) + ": " + message;
  return (path.empty() ? std::string("/") : path) + ": " + message;
}

[[noreturn]] void fail(const std::string& path, const std::string& message) { throw ParseError(message, path); }

std::size_t read_count(const json& node, const std::string& path) {
  if (!node.is_number_integer() || node.get<long long>() < 0) fail(path, "expected a non-negative integer");
  return node.get<std::size_t>();
}

std::size_t read_index(const json& node, std::size_t dim, const std::string& path) {
  if (!node.is_number_integer()) fail(path, "expected an integer index");
  const long long v = node.get<long long>();
  if (v < 1 || static_cast<unsigned long long>(v) > dim)
    fail(path, "index " + std::to_string(v) + " out of range 1.." + std::to_string(dim));
  return static_cast<std::size_t>(v - 1);
}

Rational read_coeff(const json& node, const std::string& path) {
  if (node.is_number_integer()) return Rational(node.get<long>());
  if (!node.is_string()) fail(path, "coefficient must be a string \"p/q\" or an integer");
  try {
    return parse_rational(node.get<std::string>());
  } catch (const std::invalid_argument&) {
    fail(path, "not a rational literal: \"" + node.get<std::string>() + "\"");
  }
}

const json& member(const json& obj, const char* key, const std::string& path) {
  if (!obj.contains(key)) fail(path, std::string("missing key \"") + key + "\"");
  return obj.at(key);
}

// Reads the list of {"i","j","terms"} records under `key` into a tensor of size dim.
BilinearTensor read_table(const json& doc, const char* key, std::size_t dim) {
  BilinearTensor T(dim);
  if (!doc.contains(key)) return T;
  const json& list = doc.at(key);
  const std::string base = std::string("/") + key;
  if (!list.is_array()) fail(base, "expected an array");
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> seen;
  for (std::size_t r = 0; r < list.size(); ++r) {
    const std::string at = base + "/" + std::to_string(r);
    const json& entry = list[r];
    if (!entry.is_object()) fail(at, "expected an object");
    const std::size_t i = read_index(member(entry, "i", at), dim, at + "/i");
    const std::size_t j = read_index(member(entry, "j", at), dim, at + "/j");
    if (auto [it, fresh] = seen.emplace(std::pair{i, j}, r); !fresh)
      fail(at, "duplicate entry (" + std::to_string(i + 1) + ", " + std::to_string(j + 1) + "), first given at " + base +
                   "/" + std::to_string(it->second));
    const json& terms = member(entry, "terms", at);
    if (!terms.is_array()) fail(at + "/terms", "expected an array");
    for (std::size_t t = 0; t < terms.size(); ++t) {
      const std::string tp = at + "/terms/" + std::to_string(t);
      if (!terms[t].is_object()) fail(tp, "expected an object");
      const std::size_t k = read_index(member(terms[t], "k", tp), dim, tp + "/k");
      T(i, j, k) += read_coeff(member(terms[t], "coeff", tp), tp + "/coeff");
    }
  }
  return T;
}

json write_table(const BilinearTensor& T) {
  json list = json::array();
  const std::size_t n = T.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      json terms = json::array();
      for (std::size_t k = 0; k < n; ++k)
        if (sgn(T(i, j, k)) != 0) terms.push_back({{"k", k + 1}, {"coeff", to_string(T(i, j, k))}});
      if (!terms.empty()) list.push_back({{"i", i + 1}, {"j", j + 1}, {"terms", std::move(terms)}});
    }
  return list;
}

std::size_t read_dim(const json& doc) {
  if (!doc.is_object()) fail("", "expected a JSON object");
  return read_count(member(doc, "dim", ""), "/dim");
}

// Compact rendering: records and term lists on one line each.
std::string render(const json& doc) {
  std::ostringstream out;
  out << "{\n";
  std::size_t field = 0;
  for (auto it = doc.begin(); it != doc.end(); ++it, ++field) {
    out << "  " << json(it.key()).dump() << ": ";
    const bool table = (it.key() == "brackets" || it.key() == "entries") && it->is_array();
    if (table && !it->empty()) {
      out << "[\n";
      for (std::size_t r = 0; r < it->size(); ++r) out << "    " << (*it)[r].dump() << (r + 1 < it->size() ? ",\n" : "\n");
      out << "  ]";
    } else if (it->is_object()) {
      std::string nested = it->dump(2);
      std::string indented;
      for (char c : nested) {
        indented += c;
        if (c == '\n') indented += "  ";
      }
      out << indented;
    } else {
      out << it->dump();
    }
    out << (field + 1 < doc.size() ? ",\n" : "\n");
  }
  out << "}\n";
  return out.str();
}

}  // namespace

ParseError::ParseError(const std::string& message, std::size_t line, std::size_t column)
    : std::runtime_error(describe(message, line, column, "")), line_(line), column_(column) {}

ParseError::ParseError(const std::string& message, std::string path)
    : std::runtime_error(describe(message, std::nullopt, std::nullopt, path)), path_(std::move(path)) {}

json parse_json(std::string_view text) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    // e.byte is 1-based and points just past the offending character.
    const std::size_t offset = e.byte == 0 ? 0 : std::min<std::size_t>(e.byte - 1, text.size());
    std::size_t line = 1, column = 1;
    for (std::size_t p = 0; p < offset; ++p) {
      if (text[p] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    std::string what = e.what();
    if (auto pos = what.find("syntax error"); pos != std::string::npos) what = what.substr(pos);
    throw ParseError(what, line, column);
  }
}

StructureTensor algebra_from_json(const json& doc) {
  const std::size_t dim = read_dim(doc);
  bool right = false;
  if (doc.contains("orientation")) {
    const json& o = doc.at("orientation");
    if (!o.is_string() || (o != "left" && o != "right")) fail("/orientation", "expected \"left\" or \"right\"");
    right = o == "right";
  }
  std::vector<std::string> labels;
  if (doc.contains("labels")) {
    const json& l = doc.at("labels");
    if (!l.is_array() || l.size() != dim) fail("/labels", "expected an array of " + std::to_string(dim) + " strings");
    for (std::size_t r = 0; r < l.size(); ++r) {
      if (!l[r].is_string()) fail("/labels/" + std::to_string(r), "expected a string");
      labels.push_back(l[r].get<std::string>());
    }
  }
  StructureTensor L(read_table(doc, "brackets", dim), std::move(labels));
  return right ? opposite(L) : L;
}

StructureTensor parse_algebra(std::string_view text) { return algebra_from_json(parse_json(text)); }

json algebra_to_json(const StructureTensor& L) {
  json doc;
  doc["dim"] = L.dim();
  doc["orientation"] = "left";
  json labels = json::array();
  for (std::size_t i = 0; i < L.dim(); ++i) labels.push_back(L.label(i));
  doc["labels"] = std::move(labels);
  doc["brackets"] = write_table(L.bracket_tensor());
  return doc;
}

std::string emit_algebra(const StructureTensor& L) { return render(algebra_to_json(L)); }

BilinearTensor bilinear_from_json(const json& doc, std::optional<std::size_t> dim) {
  const std::size_t n = read_dim(doc);
  if (dim && *dim != n)
    fail("/dim", "bilinear map has dim " + std::to_string(n) + ", algebra has dim " + std::to_string(*dim));
  return read_table(doc, "entries", n);
}

BilinearTensor parse_bilinear(std::string_view text, std::optional<std::size_t> dim) {
  return bilinear_from_json(parse_json(text), dim);
}

json bilinear_to_json(const BilinearTensor& B) {
  json doc;
  doc["dim"] = B.dim();
  doc["entries"] = write_table(B);
  return doc;
}

std::string emit_bilinear(const BilinearTensor& B) { return render(bilinear_to_json(B)); }

Fixture parse_fixture(std::string_view text) {
  const json doc = parse_json(text);
  Fixture fx{algebra_from_json(doc), {}};
  const json& f = member(doc, "fixture", "");
  if (!f.is_object()) fail("/fixture", "expected an object");
  auto text_field = [&](const char* key) {
    const json& v = member(f, key, "/fixture");
    if (!v.is_string()) fail(std::string("/fixture/") + key, "expected a string");
    return v.get<std::string>();
  };
  fx.descriptor.name = text_field("name");
  fx.descriptor.builder = text_field("builder");
  if (f.contains("n")) fx.descriptor.n = read_count(f.at("n"), "/fixture/n");
  const json& expected = member(f, "expected", "/fixture");
  if (!expected.is_object()) fail("/fixture/expected", "expected an object");
  for (auto it = expected.begin(); it != expected.end(); ++it) {
    const std::string at = "/fixture/expected/" + it.key();
    const json& v = member(*it, "value", at);
    std::string value;
    if (v.is_boolean()) value = v.get<bool>() ? "true" : "false";
    else if (v.is_number_integer()) value = std::to_string(v.get<long long>());
    else fail(at + "/value", "expected an integer or a boolean");
    const json& src = member(*it, "source", at);
    if (!src.is_string()) fail(at + "/source", "expected a string");
    try {
      fx.descriptor.expected.push_back({it.key(), value, catalog::parse_provenance(src.get<std::string>())});
    } catch (const std::invalid_argument& e) {
      fail(at + "/source", e.what());
    }
  }
  return fx;
}

std::string emit_fixture(const Fixture& fixture) {
  json doc = algebra_to_json(fixture.algebra);
  json f;
  f["name"] = fixture.descriptor.name;
  f["builder"] = fixture.descriptor.builder;
  if (catalog::builder_takes_n(fixture.descriptor.builder)) f["n"] = fixture.descriptor.n;
  json expected = json::object();
  for (const auto& e : fixture.descriptor.expected) {
    json value;
    if (e.value == "true" || e.value == "false") value = e.value == "true";
    else value = std::stoll(e.value);
    expected[e.key] = {{"value", value}, {"source", std::string(catalog::to_string(e.source))}};
  }
  f["expected"] = std::move(expected);
  doc["fixture"] = std::move(f);
  return render(doc);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

json to_json(const Rational& q) { return to_string(q); }

json to_json(const Vector& v) {
  json out = json::array();
  for (const auto& q : v) out.push_back(to_string(q));
  return out;
}

json to_json(const Subspace& S) {
  json basis = json::array();
  for (std::size_t r = 0; r < S.dim(); ++r) basis.push_back(to_json(S.basis_vector(r)));
  return {{"dim", S.dim()}, {"basis", std::move(basis)}};
}

json to_json(const LinearMap& D) {
  json cols = json::array();
  for (std::size_t j = 0; j < D.dim(); ++j) cols.push_back(to_json(D.image_of_basis(j)));
  return cols;
}

}  // namespace leibniz::io
