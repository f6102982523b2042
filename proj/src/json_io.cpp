#include "ars/json_io.hpp"

#include <cctype>

namespace ars::io {

using nlohmann::json;

ArsDocument parse_document(const std::string& text) {
  json parsed;
  try {
    parsed = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what(), e.byte);
  }
  if (!parsed.is_object() || !parsed.contains("elements") || !parsed.contains("steps")) {
    throw ParseError("expected an object with 'elements' and 'steps'", 0);
  }
  ArsDocument doc;
  if (!parsed["elements"].is_array()) throw ParseError("'elements' must be an array", 0);
  for (const auto& e : parsed["elements"]) {
    if (!e.is_string()) throw ParseError("'elements' entries must be strings", 0);
    doc.elements.push_back(e.get<std::string>());
  }
  if (!parsed["steps"].is_array()) throw ParseError("'steps' must be an array", 0);
  for (const auto& s : parsed["steps"]) {
    if (!s.is_array() || s.size() != 2 || !s[0].is_string() || !s[1].is_string()) {
      throw ParseError("'steps' entries must be [from, to] name pairs", 0);
    }
    doc.steps.emplace_back(s[0].get<std::string>(), s[1].get<std::string>());
  }
  return doc;
}

std::string print_document(const ArsDocument& doc) {
  json out;
  out["elements"] = doc.elements;
  json steps = json::array();
  for (const auto& [from, to] : doc.steps) steps.push_back({from, to});
  out["steps"] = steps;
  return out.dump(2) + "\n";
}

ArsDocument document_from(const FiniteArs& ars) {
  ArsDocument doc;
  doc.elements = ars.names();
  for (const auto& [a, b] : ars.steps()) doc.steps.emplace_back(ars.name(a), ars.name(b));
  return doc;
}

FiniteArs ars_from(const ArsDocument& doc) { return build_ars(doc.elements, doc.steps); }

namespace {

bool plain_dot_id(const std::string& name) {
  if (name.empty()) return false;
  if (std::isdigit(static_cast<unsigned char>(name[0]))) return false;
  for (char c : name) {
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
  }
  return true;
}

std::string dot_id(const std::string& name) {
  if (plain_dot_id(name)) return name;
  std::string quoted = "\"";
  for (char c : name) {
    if (c == '"' || c == '\\') quoted += '\\';
    quoted += c;
  }
  quoted += '"';
  return quoted;
}

}  // namespace

std::string to_dot(const FiniteArs& ars) {
  std::string out = "digraph {\n";
  for (ElementId a = 0; a < ars.size(); ++a) {
    out += "  " + dot_id(ars.name(a)) + ";\n";
  }
  for (const auto& [a, b] : ars.steps()) {
    out += "  " + dot_id(ars.name(a)) + " -> " + dot_id(ars.name(b)) + ";\n";
  }
  out += "}\n";
  return out;
}

namespace {

json path_json(const FiniteArs& ars, const PathWitness& path) {
  json nodes = json::array();
  for (ElementId v : path.nodes) nodes.push_back(ars.name(v));
  return nodes;
}

json flags_json(const FiniteArs& ars, const ElementProfile& profile) {
  json flags;
  for (Prop p : element_props()) flags[prop_name(p)] = profile.flag(p);
  json out;
  out["element"] = ars.name(profile.element);
  out["profile"] = flags;
  json witnesses = json::object();
  if (profile.wn_witness) witnesses["WN"] = path_json(ars, *profile.wn_witness);
  if (profile.cp_witness) {
    json lasso;
    json stem = json::array();
    for (ElementId v : profile.cp_witness->sequence.stem) stem.push_back(ars.name(v));
    json cycle = json::array();
    for (ElementId v : profile.cp_witness->sequence.cycle) cycle.push_back(ars.name(v));
    lasso["stem"] = stem;
    lasso["cycle"] = cycle;
    witnesses["CP"] = lasso;
  }
  out["witnesses"] = witnesses;
  return out;
}

}  // namespace

json element_profile_json(const FiniteArs& ars, const ElementProfile& profile) {
  return flags_json(ars, profile);
}

json system_profile_json(const FiniteArs& ars, const SystemProfile& profile) {
  json out;
  json global;
  for (Prop p : all_props()) global[prop_name(p)] = profile.global.flag(p);
  out["global"] = global;
  if (profile.global.inc_witness) {
    json numbering = json::object();
    for (ElementId a = 0; a < ars.size(); ++a) {
      numbering[ars.name(a)] = (*profile.global.inc_witness)[a];
    }
    out["incWitness"] = numbering;
  }
  json elements = json::array();
  for (const auto& p : profile.elements) elements.push_back(flags_json(ars, p));
  out["elements"] = elements;
  return out;
}

}  // namespace ars::io
