// Command-line front end. Every subcommand prints one canonical JSON document.
// Exit status: 0 success, 1 a checked property failed, 2 bad input.
#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "tknots/commands.hpp"

using namespace tknots;

int main(int argc, char** argv) {
  CLI::App app{"Shadow and local biquandle invariants of links and surface-links"};
  app.require_subcommand(1);
  app.fallthrough();  // global options may follow the subcommand
  RunConfig o;
  bool no_classes = false;
  app.add_option("-o,--output", o.output, "Write the JSON report here instead of stdout");
  app.add_option("-j,--jobs", o.jobs, "Worker threads; output does not depend on it")->check(CLI::Range(1, 256));

  auto structure = [&](CLI::App* c) { c->add_option("structure", o.structure_path, "Structure JSON")->required(); };
  auto diagram = [&](CLI::App* c) {
    c->add_option("diagram", o.diagram_path, "PD or surface JSON")->required();
    structure(c);
  };
  auto theory = [&](CLI::App* c) { c->add_option("--theory", o.theory, "sb or lb")->capture_default_str(); };

  auto* check = app.add_subcommand("check", "Check the axioms of a structure");
  structure(check);
  auto* derive = app.add_subcommand("derive-tribracket", "Corresponding tribracket of a shadow biquandle");
  structure(derive);
  auto* hom = app.add_subcommand("homology", "Homology presentation of the sb or lb complex");
  structure(hom);
  theory(hom);
  hom->add_option("--degree", o.degree, "Homology degree")->capture_default_str();
  hom->add_option("--mod", o.modulus, "Coefficients Z_m (0 for Z)")->capture_default_str();
  auto* coc = app.add_subcommand("cocycles", "Generators of the cocycle module mod m");
  structure(coc);
  theory(coc);
  coc->add_option("--degree", o.degree, "Cochain degree")->capture_default_str();
  coc->add_option("--mod", o.modulus, "Coefficient modulus m >= 2")->required();
  auto* moch = app.add_subcommand("mochizuki", "Mochizuki cocycle tables");
  moch->add_option("--n", o.n, "Odd prime")->capture_default_str();
  moch->add_option("--degree", o.degree, "Degree in the chosen form (sb, lb: 2 or 3; n: 1 or 2)")
      ->capture_default_str();
  moch->add_option("--form", o.form, "sb, lb or n")->capture_default_str();
  moch->add_flag("--transported", o.transported, "lb only: theta o eta instead of the rescaled form");
  auto* cols = app.add_subcommand("colorings", "Enumerate colorings of a diagram");
  diagram(cols);
  theory(cols);
  auto* inv = app.add_subcommand("invariant", "Coloring count, cocycle multiset and homology classes");
  diagram(inv);
  theory(inv);
  inv->add_option("--cocycle", o.cocycle, "mochizuki:<n> or a cochain JSON file");
  inv->add_flag("--no-classes", no_classes, "Skip homology class coordinates");
  auto* cmp = app.add_subcommand("compare", "Run the sb and lb pipelines and compare them");
  diagram(cmp);
  cmp->add_option("--cocycle", o.cocycle, "mochizuki:<n> or an sb cochain JSON file");
  app.add_subcommand("verify", "Run the property battery");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cout << canonical({{"error", {{"code", "bad_arguments"}, {"message", e.what()}}}});
    return 2;
  }
  o.subcommand = app.get_subcommands().front()->get_name();
  o.classes = !no_classes;

  const Report r = execute(o);
  if (o.output.empty() || r.json.contains("error")) {
    std::cout << canonical(r.json);
  } else {
    std::ofstream out(o.output);
    if (!out) {
      std::cout << canonical({{"error", {{"code", "malformed_input"}, {"message", "cannot write " + o.output}}}});
      return 2;
    }
    out << canonical(r.json);
  }
  return r.status;
}
