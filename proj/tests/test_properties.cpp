#include <doctest.h>

#include "ars/catalog.hpp"
#include "ars/properties.hpp"
#include "ars/testkit.hpp"

using namespace ars;

namespace {

const FiniteArs& fixture_ars(const char* name) {
  return catalog::find_fixture(name)->finite().ars;
}

ElementProfile profile_of(const FiniteArs& ars, const char* element) {
  return element_profile(ars, *ars.index_of(element));
}

// The internal-consistency laws every profile must satisfy.
void check_profile_consistency(const FiniteArs& ars, const SystemProfile& sp) {
  for (const auto& p : sp.elements) {
    if (p.nf) CHECK(p.mf);
    CHECK((p.mf && p.wn) == p.nf);
    CHECK((p.mf && p.sn) == p.nf);
    if (p.nf) CHECK(p.sn);
    if (p.sn) CHECK(p.sm);
    if (p.sn) CHECK(p.wn);
    if (p.mf) CHECK(p.sm);
    if (p.sm) CHECK(p.wm);
    if (p.wn) CHECK(p.wm);
    if (p.cr) CHECK(p.mp);
    if (p.mp) CHECK(p.np_red);
    if (p.np_red) CHECK(p.un_red);
    CHECK(p.cp == p.cr);
    CHECK(p.sm == p.sm_seq);
    // WM holds at every element of a finite system.
    CHECK(p.wm);
    // Witnesses are present exactly when claimed and re-validate.
    CHECK(p.wn_witness.has_value() == p.wn);
    if (p.wn_witness) {
      CHECK(p.wn_witness->validates(ars));
      CHECK(p.wn_witness->from() == p.element);
      CHECK(ars.successors(p.wn_witness->to()).empty());
    }
    CHECK(p.cp_witness.has_value() == p.cp);
    if (p.cp_witness) CHECK(p.cp_witness->validates(ars));
  }
  CHECK(sp.global.bp);
  CHECK(sp.global.fb);
  CHECK(sp.global.dec);
  CHECK(sp.global.rp == sp.global.rp_minus);
  CHECK(sp.global.sm_seq == (sp.global.rp && sp.global.bp));
  if (sp.global.inc) CHECK(sp.global.rp);
  CHECK(sp.global.inc_witness.has_value() == sp.global.inc);
  if (sp.global.inc_witness) {
    for (const auto& [a, b] : ars.steps()) {
      CHECK((*sp.global.inc_witness)[a] < (*sp.global.inc_witness)[b]);
    }
  }
  CHECK(sp.global.wm);
}

}  // namespace

TEST_CASE("element profiles on the catalog systems") {
  const FiniteArs& four = fixture_ars("CE-4");
  ElementProfile a4 = profile_of(four, "a");
  CHECK(a4.sm);
  CHECK(a4.wn);
  CHECK_FALSE(a4.sn);
  CHECK(a4.wcr);
  CHECK_FALSE(a4.cr);
  CHECK(a4.un_red);
  CHECK_FALSE(a4.np_red);
  CHECK_FALSE(a4.mp);
  CHECK_FALSE(a4.cp);
  CHECK_FALSE(a4.mf);
  CHECK(a4.sm_seq);

  const FiniteArs& five = fixture_ars("CE-5");
  ElementProfile n5 = profile_of(five, "n");
  CHECK(n5.nf);
  CHECK(n5.un_red);
  CHECK_FALSE(n5.un_conv);

  const FiniteArs& two = fixture_ars("CE-8");
  ElementProfile a8 = profile_of(two, "a");
  CHECK_FALSE(a8.nf);
  CHECK_FALSE(a8.wn);
  CHECK_FALSE(a8.sn);
  CHECK(a8.mf);
  CHECK(a8.sm);
  CHECK(a8.wm);
  CHECK(a8.cr);
  CHECK(a8.cp);

  CHECK_THROWS_AS(element_profile(two, 7), IndexOutOfRangeError);
}

TEST_CASE("global profiles") {
  GlobalProfile two = global_profile(fixture_ars("CE-2"));
  CHECK(two.un_red);
  CHECK(two.wm);
  CHECK_FALSE(two.cr);

  GlobalProfile three = global_profile(fixture_ars("CE-3"));
  CHECK(three.np_red);
  CHECK(three.wm);
  CHECK_FALSE(three.cr);

  FiniteArs chain = build_ars({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}});
  GlobalProfile g = global_profile(chain);
  CHECK(g.inc);
  CHECK(g.rp);
  CHECK(g.sn);
  REQUIRE(g.inc_witness);
  CHECK((*g.inc_witness)[0] == 0);
  CHECK((*g.inc_witness)[1] == 1);
  CHECK((*g.inc_witness)[2] == 2);
}

TEST_CASE("check_bound") {
  FiniteArs sys = build_ars({"a", "b", "n"}, {{"a", "b"}, {"b", "a"}, {"a", "n"}});
  Lasso cycle{{}, {0, 1}};
  CHECK(check_bound(sys, cycle, *sys.index_of("n")));

  FiniteArs two = fixture_ars("CE-8");
  CHECK(check_bound(two, Lasso{{}, {0, 1}}, 0));

  FiniteArs chain = build_ars({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}});
  CHECK_THROWS_AS(check_bound(chain, Lasso{{0, 1}, {}}, 2), MalformedLassoError);
}

TEST_CASE("join_pair") {
  FiniteArs diamond =
      build_ars({"a", "b", "c", "d"}, {{"a", "b"}, {"a", "c"}, {"b", "d"}, {"c", "d"}});
  auto bc = join_pair(diamond, 1, 2);
  REQUIRE(bc);
  CHECK(bc->target == 3);
  CHECK(bc->validates(diamond));

  const FiniteArs& four = fixture_ars("CE-4");
  CHECK_FALSE(join_pair(four, *four.index_of("e"), *four.index_of("c")));

  auto trivial = join_pair(diamond, 2, 2);
  REQUIRE(trivial);
  CHECK(trivial->target == 2);
  CHECK(trivial->from_left.length() == 0);
  CHECK(trivial->from_right.length() == 0);
}

TEST_CASE("profile consistency on random systems") {
  for (std::uint64_t seed = 1; seed <= 150; ++seed) {
    FiniteArs ars = testkit::random_ars(seed * 2654435761ull, 1 + seed % 7,
                                        seed % 2 ? 0.2 : 0.45);
    SystemProfile sp = profile_system(ars);
    check_profile_consistency(ars, sp);
  }
}

TEST_CASE("profile consistency on the catalog") {
  for (const auto& fixture : catalog::fixtures()) {
    if (!fixture.is_finite()) continue;
    SystemProfile sp = profile_system(fixture.finite().ars);
    check_profile_consistency(fixture.finite().ars, sp);
  }
}

TEST_CASE("lasso bound extraction and recurrence index") {
  for (std::uint64_t seed = 1; seed <= 80; ++seed) {
    FiniteArs ars = testkit::random_ars(seed * 97, 2 + seed % 6, 0.35);
    auto lasso = testkit::sample_lasso(ars, seed);
    if (!lasso) continue;
    REQUIRE(lasso->validates(ars));
    ElementId bound = extract_lasso_bound(ars, *lasso);
    CHECK(check_bound(ars, *lasso, bound));
    GlobalProfile g = global_profile(ars);
    auto index = first_minimal_form_index(ars, *lasso);
    if (g.rp) CHECK(index.has_value());
  }
}

TEST_CASE("cofinality witness construction") {
  std::pair<ElementId, ElementId> bad{0, 0};
  const FiniteArs& four = fixture_ars("CE-4");
  auto witness = try_cofinality_witness(four, *four.index_of("a"), &bad);
  CHECK_FALSE(witness);
  CHECK(four.name(bad.first) == "e");
  CHECK(four.name(bad.second) == "c");

  const FiniteArs& two = fixture_ars("CE-8");
  auto cofinal = try_cofinality_witness(two, 0);
  REQUIRE(cofinal);
  CHECK(cofinal->validates(two));
  CHECK(cofinal->coverage.size() == 2);
}
