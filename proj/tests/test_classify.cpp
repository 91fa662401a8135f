#include <catch_amalgamated.hpp>

#include "mds/report.hpp"
#include "mds/symbolic.hpp"
#include "support.hpp"

using namespace mds;
using testsupport::Rng;

TEST_CASE("classify reads the verdict off components", "[classify]") {
  SECTION("eleven-variable example is a fixed point system") {
    const SystemVerdict v = classify(testsupport::load_fixture("example2.mds"));
    CHECK(v.is_fixed_point_system);
    std::map<int, int> status_counts;
    for (const ComponentVerdict& cv : v.component_verdicts)
      ++status_counts[static_cast<int>(cv.status)];
    CHECK(status_counts[static_cast<int>(ComponentStatus::ReachesZero)] == 1);
    CHECK(status_counts[static_cast<int>(ComponentStatus::LoopNumberOne)] == 2);
    CHECK(status_counts[static_cast<int>(ComponentStatus::LoopNumberZero)] == 1);
  }
  SECTION("four-variable example is not") {
    const SystemVerdict v = classify(testsupport::load_fixture("example1.mds"));
    CHECK_FALSE(v.is_fixed_point_system);
    bool obstructs = false;
    for (const ComponentVerdict& cv : v.component_verdicts)
      if (cv.status == ComponentStatus::Obstructs) {
        obstructs = true;
        CHECK(cv.loop_number == 3);
      }
    CHECK(obstructs);
  }
  SECTION("a single self-loop passes via loop number one") {
    const SystemVerdict v = classify(parse_system("n = 1\nf1 = x1\n"));
    CHECK(v.is_fixed_point_system);
    CHECK(v.component_verdicts[0].status == ComponentStatus::LoopNumberOne);
    CHECK(v.vertex_criteria[0] == VertexCriterion::TwoClosedWalksDifferByOne);
  }
}

TEST_CASE("verdict, component statuses, and vertex tags stay consistent",
          "[classify]") {
  Rng rng(301);
  for (int sample = 0; sample < 200; ++sample) {
    const int n = rng.uniform_int(1, 10);
    const MonomialSystem f =
        random_system(n, rng.uniform() * 0.6, rng.uniform() * 0.3, rng.word());
    const DependencyGraph g = build_dependency_graph(f);
    const SccDecomposition d = strongly_connected_components(g);
    const SystemVerdict v = classify(f, g, d);

    bool any_obstructs = false;
    for (std::size_t c = 0; c < d.components.size(); ++c) {
      const SccInfo& info = d.components[c];
      const ComponentVerdict& cv = v.component_verdicts[c];
      CHECK((cv.status == ComponentStatus::Obstructs) ==
            (info.loop_number >= 2 && !info.reaches_zero));
      any_obstructs = any_obstructs || cv.status == ComponentStatus::Obstructs;
    }
    bool any_fails = false;
    for (int u = 0; u < n; ++u)
      any_fails = any_fails || v.vertex_criteria[u] == VertexCriterion::Fails;
    CHECK(v.is_fixed_point_system == !any_obstructs);
    CHECK(v.is_fixed_point_system == !any_fails);
  }
}

TEST_CASE("vertex tags match independent walk searches", "[classify]") {
  Rng rng(302);
  for (int sample = 0; sample < 80; ++sample) {
    const int n = rng.uniform_int(1, 9);
    const MonomialSystem f =
        random_system(n, rng.uniform() * 0.6, rng.uniform() * 0.3, rng.word());
    const DependencyGraph g = build_dependency_graph(f);
    const SystemVerdict v = classify(f);

    for (int u = 0; u < n; ++u) {
      const auto lengths = testsupport::closed_walk_lengths(g, u, 2 * n * n);
      bool difference_one = false;
      for (std::size_t i = 1; i < lengths.size(); ++i)
        difference_one =
            difference_one || lengths[i] - lengths[i - 1] == 1;

      bool to_zero = false;
      const auto masks = testsupport::walk_length_masks(g, u, n);
      for (const auto mask : masks) to_zero = to_zero || (mask & g.zeros);

      switch (v.vertex_criteria[u]) {
        case VertexCriterion::TwoClosedWalksDifferByOne:
          CHECK(difference_one);
          break;
        case VertexCriterion::WalkToZero:
          CHECK(to_zero);
          break;
        case VertexCriterion::NoClosedWalk:
          CHECK(lengths.empty());
          break;
        case VertexCriterion::Fails:
          CHECK_FALSE(difference_one);
          CHECK_FALSE(to_zero);
          CHECK_FALSE(lengths.empty());
          break;
      }
    }
  }
}

TEST_CASE("classifier agrees with the brute-force census", "[classify]") {
  Rng rng(303);
  for (double density : {0.1, 0.3, 0.6})
    for (double zero_prob : {0.0, 0.1, 0.3})
      for (int sample = 0; sample < 25; ++sample) {
        const int n = rng.uniform_int(1, 10);
        const MonomialSystem f = random_system(n, density, zero_prob, rng.word());
        REQUIRE(classify(f).is_fixed_point_system ==
                is_fixed_point_system_bruteforce(f));
      }
  REQUIRE(classify(testsupport::load_fixture("example1.mds")).is_fixed_point_system ==
          is_fixed_point_system_bruteforce(testsupport::load_fixture("example1.mds")));
  REQUIRE(classify(testsupport::load_fixture("example2.mds")).is_fixed_point_system ==
          is_fixed_point_system_bruteforce(testsupport::load_fixture("example2.mds")));
}

TEST_CASE("an obstructing component really cycles", "[classify]") {
  Rng rng(304);
  int tested = 0;
  while (tested < 25) {
    const int n = rng.uniform_int(2, 10);
    const MonomialSystem f =
        random_system(n, rng.uniform() * 0.5, rng.uniform() * 0.2, rng.word());
    const DependencyGraph g = build_dependency_graph(f);
    const SccDecomposition d = strongly_connected_components(g);
    const SystemVerdict v = classify(f, g, d);
    for (std::size_t c = 0; c < d.components.size(); ++c) {
      if (v.component_verdicts[c].status != ComponentStatus::Obstructs) continue;
      ++tested;
      const MonomialSystem sub = component_subsystem(f, d.components[c].vertices);
      const CycleStructure cs = cycle_structure(enumerate_state_space(sub));
      bool has_long_cycle = false;
      for (const auto& [len, count] : cs.cycle_counts)
        has_long_cycle = has_long_cycle || len > 1;
      CHECK(has_long_cycle);
    }
  }
}

TEST_CASE("classify_triangular recognizes index-bounded supports", "[classify]") {
  SECTION("examples") {
    CHECK(classify_triangular(parse_system("n = 3\nf1 = x1\nf2 = x1 * x2\nf3 = x2 * x3\n")));
    CHECK_FALSE(classify_triangular(testsupport::t_gon(3)));
    CHECK(classify_triangular(parse_system("n = 3\nf1 = 1\nf2 = x1\nf3 = x1 * x2\n")));
  }
  SECTION("triangular implies fixed-point, by classifier and by census") {
    Rng rng(305);
    for (int sample = 0; sample < 120; ++sample) {
      const int n = rng.uniform_int(1, 10);
      const MonomialSystem f = testsupport::random_triangular_system(rng, n);
      REQUIRE(classify_triangular(f));
      REQUIRE(classify(f).is_fixed_point_system);
      REQUIRE(is_fixed_point_system_bruteforce(f));
    }
  }
}

TEST_CASE("classification scales to the full 64-variable representation",
          "[classify]") {
  Rng rng(306);
  for (int sample = 0; sample < 10; ++sample) {
    const MonomialSystem f = random_system(64, 0.05 + rng.uniform() * 0.1,
                                           rng.uniform() * 0.1, rng.word());
    const SystemVerdict v = classify(f);
    CHECK(v.vertex_criteria.size() == 64);
    // no census here; just the structural consistency of the verdict
    bool any_fails = false;
    for (const VertexCriterion c : v.vertex_criteria)
      any_fails = any_fails || c == VertexCriterion::Fails;
    CHECK(v.is_fixed_point_system == !any_fails);
  }
}

TEST_CASE("exit-code mapping for classifier/oracle comparison", "[classify]") {
  CHECK(check_exit_code(true, true) == 0);
  CHECK(check_exit_code(false, false) == 0);
  CHECK(check_exit_code(true, false) == 3);
  CHECK(check_exit_code(false, true) == 3);
}
