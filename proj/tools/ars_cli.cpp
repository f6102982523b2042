#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "ars/catalog.hpp"
#include "ars/core.hpp"
#include "ars/json_io.hpp"
#include "ars/lambda.hpp"
#include "ars/properties.hpp"
#include "ars/testkit.hpp"
#include "ars/theorems.hpp"
#include "ars/wellfounded.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitPropertyFails = 1;
constexpr int kExitUsage = 2;
constexpr int kExitPrecondition = 3;
constexpr int kExitFuel = 4;

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ars::ParseError("cannot open file '" + path + "'", 0);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

ars::FiniteArs load_ars(const std::string& path) {
  return ars::io::ars_from(ars::io::parse_document(slurp(path)));
}

ars::ElementId require_element(const ars::FiniteArs& ars, const std::string& name) {
  auto id = ars.index_of(name);
  if (!id) throw ars::UnknownNameError(name);
  return *id;
}

std::string path_text(const ars::FiniteArs& ars, const ars::PathWitness& path) {
  std::string out;
  for (std::size_t i = 0; i < path.nodes.size(); ++i) {
    if (i) out += " -> ";
    out += ars.name(path.nodes[i]);
  }
  return out;
}

void print_element_report(const ars::FiniteArs& ars, const ars::ElementProfile& profile) {
  std::cout << "element " << ars.name(profile.element) << ":";
  for (ars::Prop p : ars::element_props()) {
    std::cout << " " << ars::prop_name(p) << "=" << (profile.flag(p) ? "true" : "false");
  }
  std::cout << "\n";
  if (profile.wn_witness) {
    std::cout << "  WN witness: " << path_text(ars, *profile.wn_witness) << "\n";
  }
  if (profile.cp_witness) {
    const auto& lasso = profile.cp_witness->sequence;
    std::cout << "  CP witness lasso: stem";
    for (ars::ElementId v : lasso.stem) std::cout << " " << ars.name(v);
    std::cout << ", cycle";
    for (ars::ElementId v : lasso.cycle) std::cout << " " << ars.name(v);
    std::cout << "\n";
  }
}

int run_check(const std::string& file, const std::string& element, bool as_json) {
  ars::FiniteArs system = load_ars(file);
  if (!element.empty()) {
    ars::ElementId id = require_element(system, element);
    ars::ElementProfile profile = ars::element_profile(system, id);
    if (as_json) {
      std::cout << ars::io::element_profile_json(system, profile).dump(2) << "\n";
    } else {
      print_element_report(system, profile);
    }
    return kExitOk;
  }
  ars::SystemProfile profile = ars::profile_system(system);
  if (as_json) {
    std::cout << ars::io::system_profile_json(system, profile).dump(2) << "\n";
    return kExitOk;
  }
  std::cout << "global:";
  for (ars::Prop p : ars::all_props()) {
    std::cout << " " << ars::prop_name(p) << "=" << (profile.global.flag(p) ? "true" : "false");
  }
  std::cout << "\n";
  if (profile.global.inc_witness) {
    std::cout << "  Inc numbering:";
    for (ars::ElementId a = 0; a < system.size(); ++a) {
      std::cout << " " << system.name(a) << "=" << (*profile.global.inc_witness)[a];
    }
    std::cout << "\n";
  }
  for (const auto& ep : profile.elements) print_element_report(system, ep);
  return kExitOk;
}

int run_join(const std::string& file, const std::string& apex_name,
             const std::string& left_name, const std::string& right_name,
             const std::string& method_name, std::uint64_t fuel) {
  ars::FiniteArs system = load_ars(file);
  ars::ElementId apex = require_element(system, apex_name);
  ars::ElementId left = require_element(system, left_name);
  ars::ElementId right = require_element(system, right_name);
  auto to_left = ars::path_between(system, apex, left);
  auto to_right = ars::path_between(system, apex, right);
  if (!to_left || !to_right) {
    throw ars::PreconditionFailedError("join: '" + (to_left ? right_name : left_name) +
                                       "' is not reachable from apex '" + apex_name + "'");
  }
  ars::Peak peak{apex, *to_left, *to_right};
  if (fuel == 0) fuel = static_cast<std::uint64_t>(system.size()) * system.size() + 4;

  auto report = [&](const ars::Join& join, const char* method) {
    std::cout << "join at " << system.name(join.target) << " (method " << method << ")\n";
    std::cout << "  " << path_text(system, join.from_left) << "\n";
    std::cout << "  " << path_text(system, join.from_right) << "\n";
    return kExitOk;
  };

  if (method_name == "auto") {
    const char* tried[] = {"newman", "gnewman", "wnun", "cp"};
    for (const char* name : tried) {
      try {
        ars::JoinMethod m = *ars::join_method_from_name(name);
        switch (m) {
          case ars::JoinMethod::Newman:
            return report(ars::newman_join(system, peak, fuel), name);
          case ars::JoinMethod::GeneralizedNewman:
            return report(ars::generalized_newman_join(system, peak, fuel), name);
          case ars::JoinMethod::WnUn:
            return report(ars::wn_un_join(system, peak), name);
          case ars::JoinMethod::Cofinality: {
            auto witness = ars::cr_to_cofinality(system, apex);
            return report(ars::cofinality_join(system, witness, peak), name);
          }
          default: break;
        }
      } catch (const ars::PreconditionFailedError&) {
        continue;
      }
    }
    auto join = ars::join_pair(system, left, right);
    if (!join) {
      std::cout << "not joinable: no common reduct of '" << left_name << "' and '"
                << right_name << "'\n";
      return kExitPropertyFails;
    }
    return report(*join, "exhaustive");
  }

  auto method = ars::join_method_from_name(method_name);
  if (!method) throw ars::ParseError("unknown join method '" + method_name + "'", 0);
  switch (*method) {
    case ars::JoinMethod::Newman:
      return report(ars::newman_join(system, peak, fuel), method_name.c_str());
    case ars::JoinMethod::GeneralizedNewman:
      return report(ars::generalized_newman_join(system, peak, fuel), method_name.c_str());
    case ars::JoinMethod::WnUn:
      return report(ars::wn_un_join(system, peak), method_name.c_str());
    case ars::JoinMethod::Cofinality: {
      auto witness = ars::cr_to_cofinality(system, apex);
      return report(ars::cofinality_join(system, witness, peak), method_name.c_str());
    }
    case ars::JoinMethod::Exhaustive: {
      auto join = ars::join_pair(system, left, right);
      if (!join) {
        std::cout << "not joinable: no common reduct of '" << left_name << "' and '"
                  << right_name << "'\n";
        return kExitPropertyFails;
      }
      return report(*join, method_name.c_str());
    }
  }
  return kExitUsage;
}

int run_normalize(const std::string& file, const std::string& element, std::uint64_t fuel) {
  ars::FiniteArs system = load_ars(file);
  ars::ElementId start = require_element(system, element);
  // SN is the caller-side premise of the descent; on a finite system it is
  // checkable, so check it and name the offending cycle.
  ars::SccView scc = ars::scc_view(system);
  ars::RelMatrix reach = ars::closure(system, ars::ClosureMode::ReflTransitive);
  for (ars::ElementId x = 0; x < system.size(); ++x) {
    if (reach.at(start, x) && scc.cyclic[scc.component_of[x]]) {
      std::string cycle_names;
      for (ars::ElementId y : scc.components[scc.component_of[x]]) {
        if (!cycle_names.empty()) cycle_names += ", ";
        cycle_names += system.name(y);
      }
      throw ars::PreconditionFailedError("normalize: '" + element +
                                         "' is not SN: cycle through {" + cycle_names +
                                         "} is reachable");
    }
  }
  if (fuel == 0) fuel = system.size() + 1;
  auto result = ars::normalize_sn(ars::as_enumerable(system), start, fuel);
  ars::PathWitness path{result.path};
  std::cout << "normal form: " << system.name(result.normal_form) << "\n";
  std::cout << "  " << path_text(system, path) << "\n";
  return kExitOk;
}

int run_wf(const std::string& file, std::size_t limit) {
  ars::FiniteArs system = load_ars(file);
  ars::wf::WfReport report = ars::wf::wf_equivalence_report(system, limit);
  for (const auto& verdict : report.verdicts) {
    std::cout << ars::wf::wf_notion_name(verdict.notion) << ": "
              << (verdict.holds ? "well-founded" : "not well-founded");
    if (verdict.predicate_counterexample) {
      std::cout << " (counterexample predicate {";
      bool first = true;
      for (ars::ElementId x = 0; x < system.size(); ++x) {
        if (!verdict.predicate_counterexample->contains(x)) continue;
        if (!first) std::cout << ", ";
        std::cout << system.name(x);
        first = false;
      }
      std::cout << "})";
    }
    if (verdict.lasso_counterexample) {
      std::cout << " (decreasing lasso cycle:";
      for (ars::ElementId x : verdict.lasso_counterexample->cycle) {
        std::cout << " " << system.name(x);
      }
      std::cout << ")";
    }
    std::cout << "\n";
  }
  std::cout << "agreement: " << (report.agreement ? "yes" : "NO") << ", acyclic: "
            << (report.acyclic ? "yes" : "no") << "\n";
  ars::wf::BridgeReport bridge = ars::wf::bridge_report(system);
  std::cout << "bridge: Rdec=" << bridge.rdec << " FB=" << bridge.fb
            << " MPseq=" << bridge.mp_seq << " corDNE=" << bridge.cor_dne
            << " accDNE=" << bridge.acc_dne << " accCor=" << bridge.acc_cor << "\n";
  return report.verdicts[0].holds ? kExitOk : kExitPropertyFails;
}

int run_catalog(const std::string& name, bool verify) {
  if (verify) {
    ars::catalog::CatalogReport report = ars::catalog::verify_catalog();
    std::size_t shown = 0;
    for (const auto& m : report.mismatches) {
      if (!name.empty() && m.fixture != name) continue;
      ++shown;
      std::cout << "mismatch: " << m.fixture
                << (m.element.empty() ? " (global)" : " element " + m.element) << " "
                << ars::prop_name(m.prop) << " expected " << m.expected << " computed "
                << m.computed << "\n";
    }
    for (const auto& f : report.evidence_failures) {
      if (!name.empty() && f.rfind(name, 0) != 0) continue;
      ++shown;
      std::cout << "evidence failure: " << f << "\n";
    }
    std::cout << report.fixtures_checked << " fixtures checked, " << shown
              << " problems\n";
    return shown == 0 ? kExitOk : kExitPropertyFails;
  }
  if (name.empty()) {
    for (const auto& f : ars::catalog::fixtures()) {
      std::cout << f.name << (f.is_finite() ? "" : " (enumerable)") << "\n";
    }
    return kExitOk;
  }
  const auto* fixture = ars::catalog::find_fixture(name);
  if (!fixture) throw ars::UnknownNameError(name);
  if (fixture->is_finite()) {
    std::cout << ars::io::print_document(ars::io::document_from(fixture->finite().ars));
  } else {
    const auto& data = fixture->enumerable();
    std::cout << "enumerable fixture; first keys and successors:\n";
    for (std::uint64_t key = 0; key < 8; ++key) {
      std::cout << "  " << data.key_name(key) << " ->";
      for (std::uint64_t s : data.system.successors(key)) {
        std::cout << " " << data.key_name(s);
      }
      std::cout << "\n";
    }
  }
  if (!fixture->notes.empty()) std::cout << "note: " << fixture->notes << "\n";
  return kExitOk;
}

int run_fuzz(std::uint64_t seed, std::size_t count, std::size_t max_size,
             std::vector<double> densities) {
  ars::testkit::GenConfig config;
  config.seed = seed;
  config.count = count;
  config.max_size = max_size;
  if (!densities.empty()) config.densities = std::move(densities);
  ars::testkit::FuzzReport report = ars::testkit::fuzz_implications(config);
  std::cout << "instances: " << report.instances_run << "\n";
  std::cout << "claims: " << ars::testkit::claim_set().size() << "\n";
  for (const auto& [label, violations] : report.violation_counts) {
    std::cout << "VIOLATION " << label << ": " << violations << " instances\n";
    auto it = report.shrunk.find(label);
    if (it != report.shrunk.end()) {
      std::cout << ars::io::print_document(ars::io::document_from(it->second));
    }
  }
  for (const auto& failure : report.non_implication_failures) {
    std::cout << "NON-IMPLICATION FAILURE: " << failure << "\n";
  }
  std::cout << (report.clean() ? "clean" : "violations found") << "\n";
  return report.clean() ? kExitOk : kExitPropertyFails;
}

int run_lambda(const std::string& action, const std::string& term_text,
               const std::string& strategy_name, std::uint64_t fuel,
               std::vector<std::string> context) {
  namespace lam = ars::lambda;
  lam::Term term = lam::parse_term(term_text, context);
  if (action == "parse") {
    std::cout << lam::print_term(term, context) << "\n";
    return kExitOk;
  }
  if (action == "steps") {
    for (const auto& reduct : lam::beta_step_enum(term)) {
      std::cout << lam::print_term(reduct, context) << "\n";
    }
    return kExitOk;
  }
  if (action == "nf") {
    bool nf = lam::is_beta_nf(term);
    std::cout << (nf ? "normal form" : "reducible") << "\n";
    return nf ? kExitOk : kExitPropertyFails;
  }
  if (action == "normalize") {
    lam::Strategy strategy = strategy_name == "first" ? lam::Strategy::FirstEnumerated
                                                      : lam::Strategy::LeftmostOutermost;
    lam::NormalizeResult result = lam::normalize(term, strategy, fuel);
    if (!result.normalized) {
      std::cout << "fuel exhausted after " << result.steps << " steps at "
                << lam::print_term(result.last, context) << "\n";
      return kExitFuel;
    }
    std::cout << lam::print_term(result.last, context) << "\n";
    std::cout << "steps: " << result.steps << "\n";
    return kExitOk;
  }
  throw ars::ParseError("unknown lambda action '" + action + "'", 0);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite abstract rewriting: property deciders, witness-producing joins, "
               "counterexample catalog, fuzzing, and lambda calculus utilities"};
  app.require_subcommand(1);

  std::string file, element, apex, left, right, method = "auto", name, action, term_text;
  std::string strategy = "lo";
  bool as_json = false, verify = false;
  std::uint64_t fuel = 0, seed = 1;
  std::size_t count = 1000, max_size = 7, limit = ars::wf::kDefaultPredicateLimit;
  std::vector<double> densities;
  std::vector<std::string> context;

  auto* check = app.add_subcommand("check", "Element or global property report");
  check->add_option("FILE", file)->required();
  check->add_option("--element", element);
  check->add_flag("--json", as_json);

  auto* join = app.add_subcommand("join", "Join the peak APEX ->* LEFT, APEX ->* RIGHT");
  join->add_option("FILE", file)->required();
  join->add_option("APEX", apex)->required();
  join->add_option("LEFT", left)->required();
  join->add_option("RIGHT", right)->required();
  join->add_option("--method", method)
      ->check(CLI::IsMember({"auto", "newman", "gnewman", "wnun", "cp", "exhaustive"}));
  join->add_option("--fuel", fuel);

  auto* normalize = app.add_subcommand("normalize", "Reduce an element to its normal form");
  normalize->add_option("FILE", file)->required();
  normalize->add_option("ELEM", element)->required();
  normalize->add_option("--fuel", fuel);

  auto* wf = app.add_subcommand("wf", "Well-foundedness report (predecessor orientation)");
  wf->add_option("FILE", file)->required();
  wf->add_option("--limit", limit);

  auto* catalog = app.add_subcommand("catalog", "List, print or verify catalog fixtures");
  catalog->add_option("NAME", name);
  catalog->add_flag("--verify", verify);

  auto* fuzz = app.add_subcommand("fuzz", "Random-instance implication fuzzing");
  fuzz->add_option("--seed", seed);
  fuzz->add_option("--count", count);
  fuzz->add_option("--max-size", max_size);
  fuzz->add_option("--density", densities);

  auto* dot = app.add_subcommand("dot", "DOT digraph on standard output");
  dot->add_option("FILE", file)->required();

  auto* lambda = app.add_subcommand("lambda", "Lambda term utilities");
  lambda->add_option("ACTION", action)
      ->required()
      ->check(CLI::IsMember({"parse", "steps", "nf", "normalize"}));
  lambda->add_option("TERM", term_text)->required();
  lambda->add_option("--strategy", strategy)->check(CLI::IsMember({"lo", "first"}));
  lambda->add_option("--fuel", fuel);
  lambda->add_option("--context", context);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (check->parsed()) return run_check(file, element, as_json);
    if (join->parsed()) return run_join(file, apex, left, right, method, fuel);
    if (normalize->parsed()) return run_normalize(file, element, fuel);
    if (wf->parsed()) return run_wf(file, limit);
    if (catalog->parsed()) return run_catalog(name, verify);
    if (fuzz->parsed()) return run_fuzz(seed, count, max_size, densities);
    if (dot->parsed()) {
      std::cout << ars::io::to_dot(load_ars(file));
      return kExitOk;
    }
    if (lambda->parsed()) {
      return run_lambda(action, term_text, strategy, fuel == 0 ? 1000 : fuel, context);
    }
  } catch (const ars::FuelExhaustedError& e) {
    std::cerr << "error: fuel-exhausted: " << e.what() << "\n";
    return kExitFuel;
  } catch (const ars::PreconditionFailedError& e) {
    std::cerr << "error: precondition: " << e.what() << "\n";
    return kExitPrecondition;
  } catch (const ars::CapacityExceededError& e) {
    std::cerr << "error: capacity: " << e.what() << "\n";
    return kExitPrecondition;
  } catch (const ars::MalformedLassoError& e) {
    std::cerr << "error: precondition: " << e.what() << "\n";
    return kExitPrecondition;
  } catch (const ars::IndexOutOfRangeError& e) {
    std::cerr << "error: precondition: " << e.what() << "\n";
    return kExitPrecondition;
  } catch (const ars::ArsError& e) {
    std::cerr << "error: parse: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
