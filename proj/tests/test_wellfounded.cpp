#include <doctest.h>

#include "ars/properties.hpp"
#include "ars/testkit.hpp"
#include "ars/wellfounded.hpp"

using namespace ars;
using namespace ars::wf;

namespace {

FiniteArs self_loop() { return build_ars({"a"}, {{"a", "a"}}); }

// The strict order 0 < 1 < 2 as explicit pairs.
FiniteArs strict_order3() {
  return build_ars({"0", "1", "2"}, {{"0", "1"}, {"0", "2"}, {"1", "2"}});
}

FiniteArs ce8() { return build_ars({"a", "b"}, {{"a", "b"}, {"b", "a"}}); }

}  // namespace

TEST_CASE("accessible_set") {
  FiniteArs lone = build_ars({"x"}, {});
  CHECK(accessible_set(lone).is_full());

  CHECK(accessible_set(self_loop()).is_empty());

  CHECK(accessible_set(strict_order3()).is_full());
}

TEST_CASE("is_inductive") {
  FiniteArs order = strict_order3();
  CHECK(is_inductive(order, Predicate::full(3)));

  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    FiniteArs ars = testkit::random_ars(seed * 131, 1 + seed % 6, 0.3);
    CHECK(is_inductive(ars, accessible_set(ars)));
  }

  // P = {a} on a -> b: b's only predecessor a is in P but b is not.
  FiniteArs ab = build_ars({"a", "b"}, {{"a", "b"}});
  CHECK_FALSE(is_inductive(ab, Predicate{{true, false}}));
}

TEST_CASE("is_coreductive") {
  CHECK(is_coreductive(self_loop(), Predicate::full(1)));
  CHECK(is_coreductive(self_loop(), Predicate::empty(1)));
  FiniteArs lone = build_ars({"x"}, {});
  CHECK_FALSE(is_coreductive(lone, Predicate::empty(1)));
}

TEST_CASE("minimal_elements") {
  FiniteArs order = strict_order3();
  Predicate p{{false, true, true}};
  Predicate min = minimal_elements(order, p);
  CHECK(min.member == std::vector<bool>{false, true, false});

  CHECK(minimal_elements(self_loop(), Predicate::full(1)).is_empty());
  CHECK(minimal_elements(order, Predicate::empty(3)).is_empty());
}

TEST_CASE("wf_check examples") {
  WfCheckResult loop_min = wf_check(self_loop(), WfNotion::Min);
  CHECK_FALSE(loop_min.holds);
  REQUIRE(loop_min.predicate_counterexample);
  CHECK(loop_min.predicate_counterexample->contains(0));
  CHECK(minimal_elements(self_loop(), *loop_min.predicate_counterexample).is_empty());

  for (std::size_t i = 0; i < kWfNotionCount; ++i) {
    CHECK(wf_check(strict_order3(), static_cast<WfNotion>(i)).holds);
  }

  WfCheckResult acc = wf_check(ce8(), WfNotion::Acc);
  CHECK_FALSE(acc.holds);
  WfCheckResult seq = wf_check(ce8(), WfNotion::SeqLasso);
  CHECK_FALSE(seq.holds);
  REQUIRE(seq.lasso_counterexample);
  CHECK(is_decreasing_lasso(ce8(), *seq.lasso_counterexample));
}

TEST_CASE("wf_check capacity") {
  FiniteArs big = testkit::random_ars(5, 13, 0.2);
  CHECK_THROWS_AS(wf_check(big, WfNotion::Ind), CapacityExceededError);
  // acc and seqLasso do not sweep predicates and stay available.
  CHECK_NOTHROW(wf_check(big, WfNotion::Acc));
  CHECK_NOTHROW(wf_check(big, WfNotion::SeqLasso));
}

TEST_CASE("bridge_report") {
  for (std::uint64_t seed = 1; seed <= 60; ++seed) {
    FiniteArs ars = testkit::random_ars(seed * 271828183, 1 + seed % 7, 0.3);
    BridgeReport report = bridge_report(ars);
    CHECK(report.rdec);
    CHECK(report.fb);
    CHECK(report.mp_seq);
    CHECK(report.cor_dne);
    CHECK(report.acc_dne);
    CHECK(report.acc_cor);
    // The witness map certifies the coreductivity of inaccessibility.
    Predicate acc = accessible_set(ars);
    for (const auto& [x, y] : report.acc_cor_witness) {
      CHECK_FALSE(acc.contains(x));
      CHECK_FALSE(acc.contains(y));
      CHECK(ars.has_step(y, x));
    }
  }
  FiniteArs lone = build_ars({"x"}, {});
  CHECK(bridge_report(lone).acc_cor);
  CHECK(bridge_report(lone).acc_cor_witness.empty());

  // Self-loops are their own witnesses: in the looped system nothing is
  // accessible, and the looped elements point at themselves.
  FiniteArs ce3 = build_ars({"a", "b", "c", "d"}, {{"b", "a"},
                                                   {"b", "c"},
                                                   {"c", "b"},
                                                   {"c", "d"},
                                                   {"d", "d"},
                                                   {"a", "a"}});
  BridgeReport looped = bridge_report(ce3);
  CHECK(looped.acc_cor);
  CHECK(accessible_set(ce3).is_empty());
  CHECK(looped.acc_cor_witness.at(*ce3.index_of("a")) == *ce3.index_of("a"));
  CHECK(looped.acc_cor_witness.size() == 4);
}

TEST_CASE("wf_equivalence_report") {
  WfReport cycle = wf_equivalence_report(ce8());
  CHECK(cycle.agreement);
  CHECK_FALSE(cycle.acyclic);
  for (const auto& verdict : cycle.verdicts) CHECK_FALSE(verdict.holds);

  FiniteArs empty5 = build_ars_indexed(5, {});
  WfReport empty = wf_equivalence_report(empty5);
  CHECK(empty.agreement);
  CHECK(empty.acyclic);
  for (const auto& verdict : empty.verdicts) CHECK(verdict.holds);
}

TEST_CASE("wf collapse on all 3-element digraphs") {
  // 9 ordered pairs including self-loops: 512 relations.
  for (std::uint32_t mask = 0; mask < 512; ++mask) {
    std::vector<std::pair<ElementId, ElementId>> edges;
    for (std::uint32_t bit = 0; bit < 9; ++bit) {
      if (mask & (1u << bit)) edges.emplace_back(bit / 3, bit % 3);
    }
    FiniteArs ars = build_ars_indexed(3, edges);
    WfReport report = wf_equivalence_report(ars);
    CHECK(report.agreement);
    CHECK(report.verdicts[0].holds == report.acyclic);
    CHECK(bridge_report(ars).acc_cor);
  }
}

TEST_CASE("inductive and coreductive predicates versus the verdicts") {
  for (std::uint64_t seed = 1; seed <= 25; ++seed) {
    FiniteArs ars = testkit::random_ars(seed * 39916801, 1 + seed % 4, 0.35);
    const std::size_t n = ars.size();
    Predicate acc = accessible_set(ars);
    bool acc_full = acc.is_full();
    for (std::uint64_t mask = 0; mask < (1ull << n); ++mask) {
      Predicate p = Predicate::from_mask(n, mask);
      // The least fixpoint is contained in every inductive predicate.
      if (is_inductive(ars, p)) {
        for (ElementId x = 0; x < n; ++x) {
          if (acc.contains(x)) CHECK(p.contains(x));
        }
        if (acc_full) CHECK(p.is_full());
      }
      if (is_coreductive(ars, p) && acc_full) CHECK(p.is_full());
      Predicate min = minimal_elements(ars, p);
      for (ElementId x = 0; x < n; ++x) {
        if (!min.contains(x)) continue;
        CHECK(p.contains(x));
        for (const auto& [from, to] : ars.steps()) {
          if (to == x) CHECK_FALSE(p.contains(from));
        }
      }
    }
  }
}

TEST_CASE("strong normalization is accessibility of the converse") {
  for (std::uint64_t seed = 1; seed <= 60; ++seed) {
    FiniteArs ars = testkit::random_ars(seed * 16807, 1 + seed % 7, 0.3);
    Predicate acc = accessible_set(converse(ars));
    SystemProfile sp = profile_system(ars);
    for (ElementId x = 0; x < ars.size(); ++x) {
      CHECK(acc.contains(x) == sp.elements[x].sn);
    }
  }
}
