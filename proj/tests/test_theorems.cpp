#include <doctest.h>

#include "ars/catalog.hpp"
#include "ars/lambda.hpp"
#include "ars/testkit.hpp"
#include "ars/theorems.hpp"

using namespace ars;

namespace {

const FiniteArs& fixture_ars(const char* name) {
  return catalog::find_fixture(name)->finite().ars;
}

FiniteArs diamond() {
  return build_ars({"a", "b", "c", "d"}, {{"a", "b"}, {"a", "c"}, {"b", "d"}, {"c", "d"}});
}

Peak peak_between(const FiniteArs& ars, ElementId apex, ElementId left, ElementId right) {
  return Peak{apex, *path_between(ars, apex, left), *path_between(ars, apex, right)};
}

bool sn_and_wcr_global(const SystemProfile& sp) {
  return sp.global.sn && sp.global.wcr;
}

}  // namespace

TEST_CASE("newman_join on the diamond") {
  FiniteArs ars = diamond();
  Peak p = peak_between(ars, 0, 1, 2);
  Join j = newman_join(ars, p, 64);
  CHECK(j.validates(ars));
  CHECK(j.closes(p));
  CHECK(j.target == 3);
}

TEST_CASE("newman_join rejects non-terminating apexes") {
  const FiniteArs& two = fixture_ars("CE-8");
  Peak p = peak_between(two, 0, 1, 0);
  CHECK_THROWS_WITH_AS(newman_join(two, p, 64), doctest::Contains("SN fails"),
                       PreconditionFailedError);
}

TEST_CASE("newman_join joins every peak of SN ∧ WCR instances") {
  std::size_t instances = 0;
  for (std::uint64_t seed = 1; instances < 40 && seed < 4000; ++seed) {
    FiniteArs ars = testkit::random_ars(seed * 1099511628211ull, 1 + seed % 6, 0.25);
    SystemProfile sp = profile_system(ars);
    if (!sn_and_wcr_global(sp)) continue;
    ++instances;
    RelMatrix reach = closure(ars, ClosureMode::ReflTransitive);
    for (ElementId apex = 0; apex < ars.size(); ++apex) {
      for (ElementId x = 0; x < ars.size(); ++x) {
        if (!reach.at(apex, x)) continue;
        for (ElementId y = 0; y < ars.size(); ++y) {
          if (!reach.at(apex, y)) continue;
          Peak p = peak_between(ars, apex, x, y);
          Join j = newman_join(ars, p, ars.size() * ars.size() + 4);
          CHECK(j.validates(ars));
          CHECK(j.closes(p));
          // Cross-check against the exhaustive oracle.
          auto oracle = join_pair(ars, x, y);
          REQUIRE(oracle);
          CHECK(reach.at(x, j.target));
          CHECK(reach.at(y, j.target));
        }
      }
    }
  }
  CHECK(instances == 40);
}

TEST_CASE("generalized_newman_join base case on the 2-cycle") {
  const FiniteArs& two = fixture_ars("CE-8");
  // Peak a →* b (left), a →* a (right): joins at b via b ←* b and a → b.
  Peak p = peak_between(two, 0, 1, 0);
  Join j = generalized_newman_join(two, p, 16);
  CHECK(j.validates(two));
  CHECK(j.closes(p));
  CHECK(j.target == 1);
  CHECK(j.from_left.nodes == std::vector<ElementId>{1});
  CHECK(j.from_right.nodes == std::vector<ElementId>{0, 1});
}

TEST_CASE("generalized_newman_join degenerates to newman_join on SN systems") {
  FiniteArs ars = diamond();
  Peak p = peak_between(ars, 0, 1, 2);
  Join general = generalized_newman_join(ars, p, 64);
  Join classic = newman_join(ars, p, 64);
  CHECK(general.target == classic.target);
  CHECK(general.from_left == classic.from_left);
  CHECK(general.from_right == classic.from_right);
}

TEST_CASE("generalized_newman_join rejects globally non-WCR systems") {
  const FiniteArs& four = fixture_ars("CE-4");
  Peak p = peak_between(four, 0, *four.index_of("b"), *four.index_of("e"));
  CHECK_THROWS_WITH_AS(generalized_newman_join(four, p, 64),
                       doctest::Contains("WCR fails at element 'b'"),
                       PreconditionFailedError);
}

TEST_CASE("generalized_newman_join joins SM peaks under global WCR") {
  std::size_t peaks = 0;
  for (std::uint64_t seed = 1; seed <= 600; ++seed) {
    FiniteArs ars = testkit::random_ars(seed * 14695981039346656037ull, 1 + seed % 6, 0.3);
    SystemProfile sp = profile_system(ars);
    if (!sp.global.wcr) continue;
    RelMatrix reach = closure(ars, ClosureMode::ReflTransitive);
    for (ElementId apex = 0; apex < ars.size(); ++apex) {
      if (!sp.elements[apex].sm) continue;
      for (ElementId x = 0; x < ars.size(); ++x) {
        if (!reach.at(apex, x)) continue;
        for (ElementId y = 0; y < ars.size(); ++y) {
          if (!reach.at(apex, y)) continue;
          Peak p = peak_between(ars, apex, x, y);
          Join j = generalized_newman_join(ars, p, ars.size() * ars.size() + 4);
          CHECK(j.validates(ars));
          CHECK(j.closes(p));
          ++peaks;
        }
      }
    }
    if (peaks > 3000) break;
  }
  CHECK(peaks > 0);
}

TEST_CASE("wn_un_join") {
  const FiniteArs& eleven = fixture_ars("CE-11");
  ElementId a = *eleven.index_of("a");
  ElementId b = *eleven.index_of("b");
  ElementId c = *eleven.index_of("c");
  Peak p = peak_between(eleven, a, c, b);
  Join j = wn_un_join(eleven, p);
  CHECK(j.validates(eleven));
  CHECK(j.closes(p));
  CHECK(j.target == c);
  CHECK(j.from_right.nodes == std::vector<ElementId>{b, a, c});

  const FiniteArs& five = fixture_ars("CE-5");
  Peak q = peak_between(five, *five.index_of("a"), *five.index_of("b"), *five.index_of("a"));
  CHECK_THROWS_WITH_AS(wn_un_join(five, q), doctest::Contains("WN fails at element 'a'"),
                       PreconditionFailedError);

  FiniteArs one = build_ars({"x"}, {});
  Peak trivial{0, PathWitness::trivial(0), PathWitness::trivial(0)};
  Join tj = wn_un_join(one, trivial);
  CHECK(tj.target == 0);
}

TEST_CASE("cofinality_join with handcrafted witnesses") {
  const FiniteArs& two = fixture_ars("CE-8");
  CofinalityWitness w;
  w.base = 0;
  w.sequence = Lasso{{}, {0, 1}};
  w.coverage[0] = {0, PathWitness::trivial(0)};
  w.coverage[1] = {1, PathWitness::trivial(1)};
  REQUIRE(w.validates(two));
  Peak p = peak_between(two, 0, 0, 1);
  Join j = cofinality_join(two, w, p);
  CHECK(j.validates(two));
  CHECK(j.closes(p));
  CHECK(j.target == 1);

  FiniteArs d = diamond();
  CofinalityWitness wd;
  wd.base = 0;
  wd.sequence = Lasso{{0, 1}, {3}};
  wd.coverage[0] = {0, PathWitness::trivial(0)};
  wd.coverage[1] = {1, PathWitness::trivial(1)};
  wd.coverage[2] = {2, PathWitness{{2, 3}}};
  wd.coverage[3] = {2, PathWitness::trivial(3)};
  REQUIRE(wd.validates(d));
  Peak q = peak_between(d, 0, 1, 2);
  Join jd = cofinality_join(d, wd, q);
  CHECK(jd.validates(d));
  CHECK(jd.closes(q));
  CHECK(jd.target == 3);

  // Coverage missing for an endpoint: the witness no longer validates.
  CofinalityWitness incomplete = wd;
  incomplete.coverage.erase(2);
  CHECK_THROWS_AS(cofinality_join(d, incomplete, q), PreconditionFailedError);
}

TEST_CASE("cr_to_cofinality") {
  const FiniteArs& two = fixture_ars("CE-8");
  CofinalityWitness w = cr_to_cofinality(two, 0);
  CHECK(w.validates(two));
  CHECK(w.coverage.count(0) == 1);
  CHECK(w.coverage.count(1) == 1);

  const FiniteArs& four = fixture_ars("CE-4");
  CHECK_THROWS_WITH_AS(cr_to_cofinality(four, *four.index_of("a")),
                       doctest::Contains("'e' and 'c'"), PreconditionFailedError);

  FiniteArs one = build_ars({"x"}, {});
  CofinalityWitness single = cr_to_cofinality(one, 0);
  CHECK(single.sequence.stem == std::vector<ElementId>{0});
  CHECK(single.validates(one));
}

TEST_CASE("cofinality round trip joins every peak of a CR element") {
  std::size_t elements_checked = 0;
  for (std::uint64_t seed = 1; seed <= 300 && elements_checked < 60; ++seed) {
    FiniteArs ars = testkit::random_ars(seed * 0x9e3779b97f4a7c15ull, 1 + seed % 6, 0.3);
    SystemProfile sp = profile_system(ars);
    RelMatrix reach = closure(ars, ClosureMode::ReflTransitive);
    for (ElementId a = 0; a < ars.size(); ++a) {
      if (!sp.elements[a].cr) continue;
      ++elements_checked;
      CofinalityWitness w = cr_to_cofinality(ars, a);
      CHECK(w.validates(ars));
      for (ElementId x = 0; x < ars.size(); ++x) {
        if (!reach.at(a, x)) continue;
        for (ElementId y = 0; y < ars.size(); ++y) {
          if (!reach.at(a, y)) continue;
          Peak p = peak_between(ars, a, x, y);
          Join j = cofinality_join(ars, w, p);
          CHECK(j.validates(ars));
          CHECK(j.closes(p));
        }
      }
    }
  }
  CHECK(elements_checked >= 60);
}

TEST_CASE("normalize_sn on the CE-6 fixture") {
  const auto& ce6 = catalog::find_fixture("CE-6")->enumerable();
  auto result = normalize_sn(ce6.system, std::uint64_t{1}, 50);
  CHECK(result.normal_form == 0);  // n
  CHECK(result.path == std::vector<std::uint64_t>{1, 0});
}

TEST_CASE("normalize_sn on lambda terms") {
  namespace lam = ars::lambda;
  auto system = lam::as_enumerable_ars();
  lam::Term term = lam::parse_term("(\\x. \\y. y)((\\z. z)(\\z. z))");
  auto result = normalize_sn(system, term, 50);
  CHECK(result.normal_form == lam::parse_term("\\y. y"));

  lam::Term omega = lam::parse_term("(\\x. x x)(\\x. x x)");
  CHECK_THROWS_AS(normalize_sn(system, omega, 100), FuelExhaustedError);
}

TEST_CASE("normalize_sn on wrapped finite systems") {
  // SN start: always reaches a normal form with fuel >= |reach|+1.
  for (std::uint64_t seed = 1; seed <= 60; ++seed) {
    FiniteArs ars = testkit::random_ars(seed * 523, 1 + seed % 6, 0.25);
    SystemProfile sp = profile_system(ars);
    for (ElementId a = 0; a < ars.size(); ++a) {
      if (sp.elements[a].sn) {
        auto result = normalize_sn(as_enumerable(ars), a, ars.size() + 1);
        CHECK(ars.successors(result.normal_form).empty());
        CHECK(PathWitness{result.path}.validates(ars));
      } else if (!sp.elements[a].wn) {
        // No normal form is reachable at all: the descent must run forever.
        CHECK_THROWS_AS(normalize_sn(as_enumerable(ars), a, ars.size() + 1),
                        FuelExhaustedError);
      }
    }
  }
  // The converse direction is NOT a theorem: the first-successor descent can
  // reach a normal form from a non-SN element.
  FiniteArs escape = build_ars({"a", "b", "c"}, {{"a", "b"}, {"a", "c"}, {"c", "c"}});
  CHECK_FALSE(element_profile(escape, 0).sn);
  auto result = normalize_sn(as_enumerable(escape), ElementId{0}, 4);
  CHECK(result.normal_form == 1);
}

TEST_CASE("decide_conversion") {
  FiniteArs chain = build_ars({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}});
  ConversionDecision d = decide_conversion(chain, 0, 2);
  CHECK(d.convertible);
  CHECK(d.left_path.to() == 2);
  CHECK(d.right_path.to() == 2);

  FiniteArs isolated = build_ars({"x", "y"}, {});
  CHECK_FALSE(decide_conversion(isolated, 0, 1).convertible);

  CHECK_THROWS_WITH_AS(decide_conversion(fixture_ars("CE-5"), 0, 1),
                       doctest::Contains("SN fails"), PreconditionFailedError);
}

TEST_CASE("decide_conversion agrees with the conversion closure") {
  std::size_t instances = 0;
  for (std::uint64_t seed = 1; seed <= 500 && instances < 25; ++seed) {
    FiniteArs ars = testkit::random_ars(seed * 6364136223846793005ull, 1 + seed % 6, 0.2);
    SystemProfile sp = profile_system(ars);
    if (!sp.global.sn || !sp.global.cr) continue;
    ++instances;
    RelMatrix conv = closure(ars, ClosureMode::Conversion);
    for (ElementId x = 0; x < ars.size(); ++x) {
      for (ElementId y = 0; y < ars.size(); ++y) {
        CHECK(decide_conversion(ars, x, y).convertible == conv.at(x, y));
      }
    }
  }
  CHECK(instances == 25);
}

TEST_CASE("bound_from_wn_un") {
  FiniteArs sys = build_ars({"a", "b", "n"}, {{"a", "b"}, {"b", "a"}, {"a", "n"}});
  Lasso cycle{{}, {0, 1}};
  ElementId bound = bound_from_wn_un(sys, cycle);
  CHECK(sys.name(bound) == "n");
  CHECK(check_bound(sys, cycle, bound));

  CHECK_THROWS_AS(bound_from_wn_un(fixture_ars("CE-8"), Lasso{{}, {0, 1}}),
                  PreconditionFailedError);

  FiniteArs looped = build_ars({"x", "m"}, {{"x", "x"}, {"x", "m"}});
  ElementId m = bound_from_wn_un(looped, Lasso{{}, {0}});
  CHECK(looped.name(m) == "m");
}

TEST_CASE("theorem_suite holds everywhere") {
  for (const char* name : {"CE-1", "CE-2", "CE-3", "CE-4", "CE-5", "CE-8", "CE-11",
                           "terese-trs"}) {
    TheoremReport report = theorem_suite(fixture_ars(name));
    CHECK(report.all_hold());
  }
  CHECK(theorem_suite(diamond()).all_hold());
  for (std::uint64_t seed = 1; seed <= 120; ++seed) {
    FiniteArs ars = testkit::random_ars(seed * 48271, 1 + seed % 7, 0.3);
    TheoremReport report = theorem_suite(ars);
    if (!report.all_hold()) {
      for (const auto& claim : report.claims) {
        if (!claim.holds) {
          FAIL_CHECK("claim failed: ", claim.label, ": ",
                     claim.counterexample.value_or(""));
        }
      }
    }
  }
}
