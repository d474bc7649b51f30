#include "leibniz/report.hpp"

#include <sstream>

#include "leibniz/derivations.hpp"

namespace leibniz::report {

namespace {

json labels_of(const StructureTensor& L) {
  json out = json::array();
  for (std::size_t i = 0; i < L.dim(); ++i) out.push_back(L.label(i));
  return out;
}

json header(const char* command, const StructureTensor& L) {
  json r;
  r["command"] = command;
  r["ok"] = true;
  r["dim"] = L.dim();
  r["labels"] = labels_of(L);
  return r;
}

json violations_to_json(const std::vector<LeibnizViolation>& vs) {
  json out = json::array();
  for (const auto& v : vs) out.push_back({{"i", v.i + 1}, {"j", v.j + 1}, {"k", v.k + 1}, {"defect", io::to_json(v.defect)}});
  return out;
}

// Non-validate commands refuse tensors that are not left Leibniz.
bool reject_invalid(json& r, const StructureTensor& L) {
  const auto vs = check_left_leibniz(L);
  if (vs.empty()) return false;
  r["ok"] = false;
  r["error"] = "not a left Leibniz algebra";
  r["violations"] = violations_to_json(vs);
  return true;
}

// ------------------------------------------------------------ text rendering

std::vector<std::string> labels_from(const json& r) {
  std::vector<std::string> out;
  if (r.contains("labels"))
    for (const auto& l : r["labels"]) out.push_back(l.get<std::string>());
  return out;
}

std::string label_at(const std::vector<std::string>& labels, std::size_t i) {
  return i < labels.size() ? labels[i] : "e" + std::to_string(i + 1);
}

std::string combo(const json& vec, const std::vector<std::string>& labels) {
  std::string out;
  for (std::size_t i = 0; i < vec.size(); ++i) {
    std::string c = vec[i].get<std::string>();
    if (c == "0") continue;
    const bool neg = c.front() == '-';
    if (neg) c.erase(0, 1);
    if (out.empty()) out += neg ? "-" : "";
    else out += neg ? " - " : " + ";
    if (c != "1") out += c + "*";
    out += label_at(labels, i);
  }
  return out.empty() ? "0" : out;
}

void put_subspace(std::ostringstream& out, const std::string& name, const json& S, const std::vector<std::string>& labels) {
  out << name << ": dim " << S["dim"].get<std::size_t>();
  if (!S["basis"].empty()) {
    out << ", basis {";
    for (std::size_t r = 0; r < S["basis"].size(); ++r) out << (r ? ", " : "") << combo(S["basis"][r], labels);
    out << "}";
  }
  out << "\n";
}

void put_map(std::ostringstream& out, const std::string& indent, const json& cols, const std::vector<std::string>& labels) {
  for (std::size_t j = 0; j < cols.size(); ++j)
    out << indent << label_at(labels, j) << " -> " << combo(cols[j], labels) << "\n";
}

void put_table(std::ostringstream& out, const std::string& indent, const json& doc, const std::vector<std::string>& labels,
               const char* key, const char* open, const char* close) {
  if (doc[key].empty()) out << indent << "(all zero)\n";
  for (const auto& b : doc[key]) {
    json vec = json::array();
    for (std::size_t k = 0; k < labels.size(); ++k) vec.push_back("0");
    for (const auto& t : b["terms"]) vec[t["k"].get<std::size_t>() - 1] = t["coeff"];
    out << indent << open << label_at(labels, b["i"].get<std::size_t>() - 1) << ", "
        << label_at(labels, b["j"].get<std::size_t>() - 1) << close << " = " << combo(vec, labels) << "\n";
  }
}

void put_violations(std::ostringstream& out, const json& vs, const std::vector<std::string>& labels) {
  for (const auto& v : vs)
    out << "  (" << label_at(labels, v["i"].get<std::size_t>() - 1) << ", " << label_at(labels, v["j"].get<std::size_t>() - 1)
        << ", " << label_at(labels, v["k"].get<std::size_t>() - 1) << "): defect " << combo(v["defect"], labels) << "\n";
}

void put_completeness(std::ostringstream& out, const json& c, const std::vector<std::string>& labels) {
  out << c["definition"].get<std::string>() << ": " << (c["verdict"].get<bool>() ? "complete" : "not complete") << "\n";
  if (c.contains("center_obstruction")) put_subspace(out, "  center obstruction", c["center_obstruction"], labels);
  if (c.contains("derivation_obstruction")) {
    out << "  derivation obstruction:\n";
    put_map(out, "    ", c["derivation_obstruction"], labels);
  }
  if (c.contains("witnesses"))
    for (const auto& w : c["witnesses"]) out << "  witness element: " << combo(w["element"], labels) << "\n";
}

void put_factorization(std::ostringstream& out, const json& f, const std::vector<std::string>& labels) {
  const std::string side = f["side"].get<std::string>();
  const std::string var = side == "left" ? "phi" : "psi";
  out << side << " factorization modulo " << f["modulo"].get<std::string>() << ": "
      << (f["feasible"].get<bool>() ? "feasible" : "infeasible") << "\n";
  if (f["feasible"].get<bool>()) {
    out << "  " << var << ":\n";
    put_map(out, "    ", f["map"], labels);
    out << "  residual " << (side == "left" ? "p" : "q") << ":\n";
    put_table(out, "    ", f["residual"], labels, "entries", "(", ")");
    if (f.contains("residual_is_side_biderivation"))
      out << "  residual is a " << side << " biderivation: " << (f["residual_is_side_biderivation"].get<bool>() ? "yes" : "no")
          << "\n";
    return;
  }
  const json& c = f["certificate"];
  const std::string block = label_at(labels, c["block"].get<std::size_t>() - 1);
  out << "  certificate for " << var << "(" << block << "):\n";
  for (const auto& s : c["steps"]) {
    std::string eq;
    for (const auto& t : s["equation"]) {
      std::string coeff = t["coeff"].get<std::string>();
      const bool neg = coeff.front() == '-';
      if (neg) coeff.erase(0, 1);
      eq += eq.empty() ? (neg ? "-" : "") : (neg ? " - " : " + ");
      eq += (coeff == "1" ? "" : coeff + "*") + "[" + t["unknown"].get<std::string>() + "]";
    }
    out << "    from B(" << label_at(labels, s["i"].get<std::size_t>() - 1) << ", "
        << label_at(labels, s["j"].get<std::size_t>() - 1) << ") at " << label_at(labels, s["k"].get<std::size_t>() - 1)
        << ": " << eq << " = " << s["rhs"].get<std::string>() << "\n";
  }
  const json& x = c["contradiction"];
  out << "    contradiction at B(" << label_at(labels, x["i"].get<std::size_t>() - 1) << ", "
      << label_at(labels, x["j"].get<std::size_t>() - 1) << ") at " << label_at(labels, x["k"].get<std::size_t>() - 1)
      << ": 0 = " << x["defect"].get<std::string>() << "\n";
  out << "  unknown [a] is the coefficient of a in " << var << "(" << block << ")\n";
}

}  // namespace

json validate(const StructureTensor& L) {
  json r = header("validate", L);
  const auto vs = check_left_leibniz(L);
  r["ok"] = vs.empty();
  r["is_lie"] = is_lie(L);
  r["violation_count"] = vs.size();
  r["violations"] = violations_to_json(vs);
  return r;
}

json invariants(const StructureTensor& L) {
  json r = header("invariants", L);
  if (reject_invalid(r, L)) return r;
  const Subspace leib = leibniz_kernel(L);
  r["is_lie"] = is_lie(L);
  r["leibniz_kernel"] = io::to_json(leib);
  r["left_center"] = io::to_json(left_center(L));
  r["center"] = io::to_json(center(L));
  const Quotient q = quotient(L, leib);
  json section = json::array();
  for (std::size_t s : q.section) section.push_back(s + 1);
  r["quotient"] = {{"section", section}, {"algebra", io::algebra_to_json(q.algebra)}};
  return r;
}

json derivations(const StructureTensor& L) {
  json r = header("derivations", L);
  if (reject_invalid(r, L)) return r;
  const std::size_t n = L.dim();
  const Subspace der = derivation_space(L);
  const Subspace inner = inner_derivation_space(L);
  r["derivation_dim"] = der.dim();
  r["inner_derivation_dim"] = inner.dim();
  r["outer_dim"] = der.dim() - inner.dim();
  json basis = json::array();
  for (std::size_t d = 0; d < der.dim(); ++d) basis.push_back(io::to_json(LinearMap::from_vector(n, der.basis_vector(d))));
  r["derivation_basis"] = std::move(basis);
  return r;
}

json biderivations(const StructureTensor& L) {
  json r = header("biderivations", L);
  if (reject_invalid(r, L)) return r;
  const std::size_t n = L.dim();
  const Subspace bider = biderivation_space(L);
  r["left_biderivation_dim"] = left_biderivation_space(L).dim();
  r["right_biderivation_dim"] = right_biderivation_space(L).dim();
  r["biderivation_dim"] = bider.dim();
  r["loday_biderivation_dim"] = loday_biderivation_space(L).dim();
  std::vector<Vector> sym, skew;
  json basis = json::array();
  for (std::size_t b = 0; b < bider.dim(); ++b) {
    const BilinearTensor B = BilinearTensor::from_vector(n, bider.basis_vector(b));
    sym.push_back(symmetric_part(B).vectorized());
    skew.push_back(skew_part(B).vectorized());
    basis.push_back(io::bilinear_to_json(B));
  }
  const std::size_t cube = n * n * n;
  r["symmetric_dim"] = Subspace::span(cube, sym).dim();
  r["skew_dim"] = Subspace::span(cube, skew).dim();
  r["commuting_dim"] = commuting_map_space(L).dim();
  r["skew_commuting_dim"] = skew_commuting_map_space(L).dim();
  r["biderivation_basis"] = std::move(basis);
  return r;
}

json completeness_to_json(const StructureTensor& L, const CompletenessReport& c) {
  json out;
  out["definition"] = c.definition == CompletenessDefinition::def1 ? "def1" : "def2";
  out["verdict"] = c.verdict;
  if (c.center_obstruction) out["center_obstruction"] = io::to_json(*c.center_obstruction);
  if (c.derivation_obstruction) out["derivation_obstruction"] = io::to_json(*c.derivation_obstruction);
  if (c.definition == CompletenessDefinition::def1) {
    json ws = json::array();
    for (const auto& w : c.witnesses)
      ws.push_back({{"derivation", io::to_json(w.derivation)}, {"element", io::to_json(w.element)}});
    out["witnesses"] = std::move(ws);
  }
  (void)L;
  return out;
}

json completeness(const StructureTensor& L) {
  json r = header("completeness", L);
  if (reject_invalid(r, L)) return r;
  r["def1"] = completeness_to_json(L, is_complete_def1(L));
  r["def2"] = completeness_to_json(L, is_complete_def2(L));
  return r;
}

json factorization_to_json(const StructureTensor& L, const FactorizationResult& f) {
  json out;
  out["side"] = f.side == FactorSide::left ? "left" : "right";
  out["modulo"] = f.residual_subspace.is_zero() ? "zero" : "leib";
  out["feasible"] = f.feasible;
  if (f.feasible) {
    out["map"] = io::to_json(*f.map);
    out["residual"] = io::bilinear_to_json(*f.residual);
    if (f.residual_is_side_biderivation) out["residual_is_side_biderivation"] = *f.residual_is_side_biderivation;
  }
  if (f.certificate) {
    const auto& c = *f.certificate;
    json steps = json::array();
    for (const auto& s : c.steps) {
      json eq = json::array();
      for (const auto& e : s.equation) eq.push_back({{"unknown", L.label(e.col)}, {"index", e.col + 1}, {"coeff", to_string(e.value)}});
      steps.push_back({{"i", s.i + 1}, {"j", s.j + 1}, {"k", s.k + 1}, {"equation", eq}, {"rhs", to_string(s.rhs)}});
    }
    out["certificate"] = {{"block", c.block + 1},
                          {"steps", std::move(steps)},
                          {"contradiction", {{"i", c.i + 1}, {"j", c.j + 1}, {"k", c.k + 1}, {"defect", to_string(c.defect)}}}};
  }
  return out;
}

json factor(const StructureTensor& L, const BilinearTensor& B, Modulo modulo, Sides sides) {
  json r = header("factor", L);
  if (reject_invalid(r, L)) return r;
  const Subspace S = modulo == Modulo::zero ? Subspace(L.dim()) : leibniz_kernel(L);
  r["modulo"] = modulo == Modulo::zero ? "zero" : "leib";
  r["input_is_biderivation"] = is_biderivation(L, B);
  json results = json::array();
  bool ok = true;
  auto run = [&](bool right) {
    const FactorizationResult f = right ? factor_right_modulo(L, B, S) : factor_left_modulo(L, B, S);
    json j = factorization_to_json(L, f);
    // A zero subspace S can coincide with Leib; report what was requested.
    j["modulo"] = r["modulo"];
    ok = ok && f.feasible;
    results.push_back(std::move(j));
  };
  if (sides != Sides::right) run(false);
  if (sides != Sides::left) run(true);
  r["results"] = std::move(results);
  r["ok"] = ok;
  return r;
}

json verify_paper(const suite::SuiteOptions& options) {
  json r;
  r["command"] = "verify-paper";
  json items = json::array();
  bool ok = true;
  for (const auto& c : suite::run_all(options)) {
    ok = ok && c.pass;
    items.push_back(suite::to_json(c));
  }
  r["ok"] = ok;
  r["items"] = std::move(items);
  return r;
}

std::string render_text(const json& r) {
  std::ostringstream out;
  const std::string cmd = r["command"].get<std::string>();
  const auto labels = labels_from(r);
  if (r.contains("error")) {
    out << "error: " << r["error"].get<std::string>() << "\n";
    if (r.contains("violations")) put_violations(out, r["violations"], labels);
    return out.str();
  }
  if (cmd == "validate") {
    if (r["ok"].get<bool>()) {
      out << "PASS: left Leibniz identity holds (dim " << r["dim"].get<std::size_t>() << ")\n";
      out << "Lie algebra: " << (r["is_lie"].get<bool>() ? "yes" : "no") << "\n";
    } else {
      out << "FAIL: " << r["violation_count"].get<std::size_t>() << " violations of [x,[y,z]] = [y,[x,z]] + [[x,y],z]\n";
      put_violations(out, r["violations"], labels);
    }
  } else if (cmd == "invariants") {
    out << "dim " << r["dim"].get<std::size_t>() << ", Lie algebra: " << (r["is_lie"].get<bool>() ? "yes" : "no") << "\n";
    put_subspace(out, "Leib(L)", r["leibniz_kernel"], labels);
    put_subspace(out, "Z^l(L)", r["left_center"], labels);
    put_subspace(out, "Z(L)", r["center"], labels);
    std::vector<std::string> qlabels;
    for (const auto& s : r["quotient"]["section"]) qlabels.push_back(label_at(labels, s.get<std::size_t>() - 1) + "+Leib");
    out << "L/Leib(L): dim " << qlabels.size() << "\n";
    put_table(out, "  ", r["quotient"]["algebra"], qlabels, "brackets", "[", "]");
  } else if (cmd == "derivations") {
    out << "dim Der = " << r["derivation_dim"].get<std::size_t>() << ", dim Inner = "
        << r["inner_derivation_dim"].get<std::size_t>() << "\n";
    std::size_t d = 0;
    for (const auto& D : r["derivation_basis"]) {
      out << "D" << ++d << ":\n";
      put_map(out, "  ", D, labels);
    }
  } else if (cmd == "biderivations") {
    for (const char* key : {"left_biderivation_dim", "right_biderivation_dim", "biderivation_dim", "loday_biderivation_dim",
                            "symmetric_dim", "skew_dim", "commuting_dim", "skew_commuting_dim"})
      out << key << " = " << r[key].get<std::size_t>() << "\n";
  } else if (cmd == "completeness") {
    put_completeness(out, r["def1"], labels);
    put_completeness(out, r["def2"], labels);
  } else if (cmd == "factor") {
    out << "input is a biderivation: " << (r["input_is_biderivation"].get<bool>() ? "yes" : "no") << "\n";
    for (const auto& f : r["results"]) put_factorization(out, f, labels);
  } else if (cmd == "verify-paper") {
    for (const auto& item : r["items"]) {
      out << item["status"].get<std::string>() << " " << item["id"].get<int>() << ": " << item["title"].get<std::string>() << "\n";
      for (const auto& f : item["failures"]) out << "    FAIL " << f.get<std::string>() << "\n";
    }
  }
  return out.str();
}

}  // namespace leibniz::report
