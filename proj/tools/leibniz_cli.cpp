// leibniz: command-line front end.
//
// Exit codes: 0 no violations or failures, 1 negative result (identity
// violations, infeasible factorization, failed verification item),
// 2 usage, file or parse errors.

#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "leibniz/catalog.hpp"
#include "leibniz/io.hpp"
#include "leibniz/report.hpp"

namespace {

using leibniz::io::json;

int emit(const json& r, bool as_json) {
  if (as_json) std::cout << r.dump(2) << "\n";
  else std::cout << leibniz::report::render_text(r);
  return r["ok"].get<bool>() ? 0 : 1;
}

leibniz::StructureTensor load_algebra(const std::string& path) {
  return leibniz::io::parse_algebra(leibniz::io::read_file(path));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations on finite-dimensional left Leibniz algebras over Q"};
  app.require_subcommand(1);
  app.fallthrough();
  bool as_json = false;
  app.add_flag("--json", as_json, "Print the structured report as JSON");

  std::string file;
  auto add_algebra_command = [&](const char* name, const char* help) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("file", file, "Algebra file")->required();
    return sub;
  };
  auto* validate = add_algebra_command("validate", "Check the left Leibniz identity on basis triples");
  auto* invariants = add_algebra_command("invariants", "Leib(L), Z^l(L), Z(L) and L/Leib(L)");
  auto* derivations = add_algebra_command("derivations", "Derivation and inner derivation spaces");
  auto* biderivations = add_algebra_command("biderivations", "Dimensions of the biderivation spaces");
  auto* completeness = add_algebra_command("completeness", "Both completeness tests with obstructions");

  auto* factor = add_algebra_command("factor", "Factor a bilinear map through the bracket");
  std::string bilinear_file, modulo = "zero", side = "left";
  factor->add_option("--bilinear", bilinear_file, "Bilinear map file")->required();
  factor->add_option("--modulo", modulo, "Target subspace S")->check(CLI::IsMember({"zero", "leib"}));
  factor->add_option("--side", side, "Which factorization")->check(CLI::IsMember({"left", "right", "both"}));

  auto* verify = app.add_subcommand("verify-paper", "Run every reference check");
  leibniz::suite::SuiteOptions suite_options;
  verify->add_option("--random", suite_options.random_count, "Number of random algebras in the property suite");
  verify->add_option("--seed", suite_options.random_seed, "First seed of the random algebras");

  auto* catalog = app.add_subcommand("catalog", "Write a named algebra as an algebra file");
  std::string name, output, lie = "sl2";
  std::size_t n = 0, module_dim = 1;
  std::uint64_t seed = 0;
  bool list = false;
  catalog->add_option("name", name, "Builder name, or 'random'");
  catalog->add_option("--n", n, "Size parameter for abelian and example_solvable");
  catalog->add_option("--seed", seed, "Seed for 'random'");
  catalog->add_option("--lie", lie, "Lie table for 'random'");
  catalog->add_option("--module-dim", module_dim, "Module dimension for 'random'");
  catalog->add_option("-o,--output", output, "Write to this file instead of standard output");
  catalog->add_flag("--list", list, "List builder names");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (validate->parsed()) return emit(leibniz::report::validate(load_algebra(file)), as_json);
    if (invariants->parsed()) return emit(leibniz::report::invariants(load_algebra(file)), as_json);
    if (derivations->parsed()) return emit(leibniz::report::derivations(load_algebra(file)), as_json);
    if (biderivations->parsed()) return emit(leibniz::report::biderivations(load_algebra(file)), as_json);
    if (completeness->parsed()) return emit(leibniz::report::completeness(load_algebra(file)), as_json);
    if (factor->parsed()) {
      const auto L = load_algebra(file);
      const auto B = leibniz::io::parse_bilinear(leibniz::io::read_file(bilinear_file), L.dim());
      const auto m = modulo == "zero" ? leibniz::report::Modulo::zero : leibniz::report::Modulo::leib;
      const auto s = side == "left"    ? leibniz::report::Sides::left
                     : side == "right" ? leibniz::report::Sides::right
                                       : leibniz::report::Sides::both;
      return emit(leibniz::report::factor(L, B, m, s), as_json);
    }
    if (verify->parsed()) return emit(leibniz::report::verify_paper(suite_options), as_json);
    if (catalog->parsed()) {
      if (list || name.empty()) {
        for (const auto& b : leibniz::catalog::builder_names())
          std::cout << b << (leibniz::catalog::builder_takes_n(b) ? " (--n)" : "") << "\n";
        std::cout << "random (--seed, --lie, --module-dim)\n";
        return 0;
      }
      const leibniz::StructureTensor L =
          name == "random"
              ? leibniz::catalog::random_hemisemidirect(seed, leibniz::catalog::parse_lie_choice(lie), module_dim)
              : leibniz::catalog::build(name, n);
      const std::string text = leibniz::io::emit_algebra(L);
      if (output.empty()) {
        std::cout << text;
      } else {
        std::ofstream out(output, std::ios::binary);
        if (!(out << text)) throw std::runtime_error("cannot write " + output);
      }
      return 0;
    }
  } catch (const leibniz::io::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
