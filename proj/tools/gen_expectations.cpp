// Regenerates src/catalog_expectations.inc: the per-fixture property bits,
// computed by the brute-force oracle (not the production deciders) and frozen
// as goldens.  Run from the repo root:
//
//   build/gen_expectations > src/catalog_expectations.inc
//
// Review the diff before committing; the catalog tests compare these tables
// against the deciders bit for bit.

#include <iostream>

#include "ars/catalog.hpp"
#include "ars/testkit.hpp"

int main() {
  std::cout << "// Frozen expectation tables, generated by tools/gen_expectations from\n"
               "// the brute-force oracle. Regenerate after changing a fixture and review\n"
               "// the diff before committing.\n\n";
  std::cout << "void attach_derived_expectations(const std::string& name, "
               "FiniteFixtureData& data) {\n";
  bool first = true;
  for (const auto& fixture : ars::catalog::fixtures()) {
    if (!fixture.is_finite()) continue;
    const ars::FiniteArs& system = fixture.finite().ars;
    std::cout << "  " << (first ? "" : "else ") << "if (name == \"" << fixture.name
              << "\") {\n";
    first = false;
    std::cout << "    data.elements = {\n";
    for (ars::ElementId a = 0; a < system.size(); ++a) {
      std::string bits;
      for (ars::Prop p : ars::element_props()) {
        bits += ars::testkit::brute_force_oracle(system, p, a) ? '1' : '0';
      }
      std::cout << "        {\"" << system.name(a) << "\", \"" << bits << "\", {}},\n";
    }
    std::cout << "    };\n";
    std::string global_bits;
    for (ars::Prop p : ars::all_props()) {
      global_bits += ars::testkit::brute_force_oracle(system, p) ? '1' : '0';
    }
    std::cout << "    data.derived_global_bits = \"" << global_bits << "\";\n";
    std::cout << "  }\n";
  }
  std::cout << "}\n";
  return 0;
}
