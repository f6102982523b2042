#ifndef ARS_JSON_IO_HPP_
#define ARS_JSON_IO_HPP_

#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "ars/core.hpp"
#include "ars/properties.hpp"

namespace ars::io {

// The on-disk system format:
//   {"elements": ["a", "b"], "steps": [["a", "b"], ["b", "a"]]}
struct ArsDocument {
  std::vector<std::string> elements;
  std::vector<std::pair<std::string, std::string>> steps;

  bool operator==(const ArsDocument& other) const = default;
};

// Throws ParseError on malformed JSON or schema violations.
ArsDocument parse_document(const std::string& text);
std::string print_document(const ArsDocument& doc);

ArsDocument document_from(const FiniteArs& ars);
FiniteArs ars_from(const ArsDocument& doc);

// Plain DOT digraph: every element as a node and every step as an edge,
// exactly once, in index order.
std::string to_dot(const FiniteArs& ars);

nlohmann::json element_profile_json(const FiniteArs& ars, const ElementProfile& profile);
nlohmann::json system_profile_json(const FiniteArs& ars, const SystemProfile& profile);

}  // namespace ars::io

#endif  // ARS_JSON_IO_HPP_
