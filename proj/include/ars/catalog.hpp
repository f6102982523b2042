#ifndef ARS_CATALOG_HPP_
#define ARS_CATALOG_HPP_

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "ars/core.hpp"
#include "ars/properties.hpp"

// The counterexample catalog: small systems with frozen expected property
// matrices, plus two infinite systems with bounded-evidence specifications.
// Expectation provenance is two-tier: bits asserted from the source material
// directly, and bits generated once by the brute-force oracle, reviewed, and
// frozen as goldens.
namespace ars::catalog {

enum class Provenance { Asserted, Derived };

struct ExpectedBit {
  Prop prop;
  bool value;
  std::string note;  // what this bit demonstrates
};

struct ElementExpectation {
  std::string element;
  // One character per element property, element_props() order, '1'/'0'.
  std::string derived_bits;
  std::vector<ExpectedBit> asserted;
};

struct FiniteFixtureData {
  FiniteArs ars;
  std::vector<ElementExpectation> elements;
  std::string derived_global_bits;  // all_props() order, 22 chars
  std::vector<ExpectedBit> asserted_global;
};

// Bounded-evidence demands for an infinite fixture: reachable chains of every
// length up to chain_length (refuting SN at the bound), a normalization
// target, joins of all single-step peaks near the start, and the number of
// distinct normal forms visible within the search depth.
struct EvidenceSpec {
  std::uint64_t start;
  std::size_t chain_length;
  std::uint64_t expected_normal_form;
  std::size_t search_depth;
  std::size_t peak_range;      // peaks checked from the i-th chain element, i <= peak_range
  std::size_t peak_join_depth;
  bool expect_unique_normal_form;  // within the bounded search
};

struct EnumerableFixtureData {
  EnumerableArs<std::uint64_t> system;
  std::function<std::string(std::uint64_t)> key_name;
  EvidenceSpec evidence;
};

struct Fixture {
  std::string name;
  std::string notes;
  std::variant<FiniteFixtureData, EnumerableFixtureData> data;

  bool is_finite() const { return std::holds_alternative<FiniteFixtureData>(data); }
  const FiniteFixtureData& finite() const { return std::get<FiniteFixtureData>(data); }
  const EnumerableFixtureData& enumerable() const {
    return std::get<EnumerableFixtureData>(data);
  }
};

const std::vector<Fixture>& fixtures();
const Fixture* find_fixture(const std::string& name);

struct EvidenceOutcome {
  bool chain_ok = false;           // a reduction of length k exists for all k <= bound
  bool normalization_ok = false;   // start normalizes to the expected key
  bool peaks_join = false;         // all examined single-step peaks join
  std::size_t normal_forms_within_bound = 0;
};

EvidenceOutcome check_evidence(const EnumerableFixtureData& fixture);

struct Mismatch {
  std::string fixture;
  std::string element;  // empty for global bits
  Prop prop;
  bool expected;
  bool computed;
};

struct CatalogReport {
  std::size_t fixtures_checked = 0;
  std::vector<Mismatch> mismatches;
  std::vector<std::string> evidence_failures;
  std::vector<std::string> notes;

  bool ok() const { return mismatches.empty() && evidence_failures.empty(); }
};

// Recomputes every finite fixture's profile and compares bit-for-bit with the
// frozen expectations; runs the bounded-evidence checks for the enumerable
// fixtures.  Mismatches are report content, not exceptions.
CatalogReport verify_catalog();

}  // namespace ars::catalog

#endif  // ARS_CATALOG_HPP_
