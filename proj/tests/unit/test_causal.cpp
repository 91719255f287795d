#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include "brute.hpp"
#include "doctest.h"
#include "dsorder/causal.hpp"
#include "fixtures.hpp"
#include "generators.hpp"

using namespace dsorder;

namespace {

std::set<std::pair<std::string, std::string>> named_pairs(const StrictPoset& p, const std::vector<ElementPair>& pairs) {
  std::set<std::pair<std::string, std::string>> out;
  for (const auto& [a, b] : pairs) out.emplace(p.name(a), p.name(b));
  return out;
}

std::vector<std::vector<Message>> partial_matchings(std::size_t a, std::size_t b) {
  std::vector<std::vector<Message>> out;
  std::vector<Message> cur;
  std::vector<bool> used(b, false);
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == a) {
      out.push_back(cur);
      return;
    }
    rec(i + 1);
    for (std::size_t j = 0; j < b; ++j) {
      if (used[j]) continue;
      used[j] = true;
      cur.push_back({i, j});
      rec(i + 1);
      cur.pop_back();
      used[j] = false;
    }
  };
  rec(0);
  return out;
}

}  // namespace

TEST_SUITE("core_model") {
  TEST_CASE("validate reports duplicated senders") {
    const DistributedSystem sys({ProcessChain("A", {"a"}), ProcessChain("X", {"x", "y"})},
                                {{"A", "X", {{0, 0}, {0, 1}}}});
    const auto v = validate_system(sys);
    REQUIRE(v.size() == 1);
    CHECK(v[0].kind == ViolationKind::duplicate_sender);
    CHECK(v[0].message == "sender a duplicated in A->X");
  }

  TEST_CASE("validate accepts message-free and example systems") {
    CHECK(validate_system(DistributedSystem({ProcessChain("A", 3), ProcessChain("B", 0)}, {})).empty());
    CHECK(validate_system(testkit::fixture_system("ds_ex")).empty());
  }

  TEST_CASE("validate reports every structural problem") {
    const DistributedSystem sys({ProcessChain("A", {"a", "b"}), ProcessChain("A", {"c"}), ProcessChain("B", {"d"})},
                                {{"A", "Z", {{0, 0}}}, {"B", "B", {{0, 0}}}, {"B", "A", {{0, 5}, {0, 1}}}});
    std::set<ViolationKind> kinds;
    for (const auto& v : validate_system(sys)) kinds.insert(v.kind);
    CHECK(kinds.count(ViolationKind::duplicate_process));
    CHECK(kinds.count(ViolationKind::unknown_process));
    CHECK(kinds.count(ViolationKind::self_communication));
    CHECK(kinds.count(ViolationKind::event_out_of_range));
    CHECK_FALSE(sys.references_resolved());
    CHECK_THROWS_AS(causal_closure(sys), Error);
  }

  TEST_CASE("duplicate receivers are reported") {
    const DistributedSystem sys({ProcessChain("A", {"a", "b"}), ProcessChain("X", {"x"})},
                                {{"A", "X", {{0, 0}, {1, 0}}}});
    const auto v = validate_system(sys);
    REQUIRE(v.size() == 1);
    CHECK(v[0].kind == ViolationKind::duplicate_receiver);
    CHECK(v[0].message == "receiver x duplicated in A->X");
  }

  TEST_CASE("deadlock yields the four-event cycle") {
    const auto sys = testkit::fixture_system("fcycle");
    const auto result = causal_closure(sys);
    REQUIRE(is_cycle(result));
    CHECK(describe_cycle(sys, std::get<CycleWitness>(result)) == "c,a,d,b,c");
    try {
      require_acyclic(sys);
      FAIL("expected a deadlock");
    } catch (const CycleError& e) {
      CHECK(std::string(e.what()) == "deadlock: c,a,d,b,c");
      CHECK(e.witness().cycle.size() == 5);
    }
  }

  TEST_CASE("single chain closure") {
    const DistributedSystem sys({ProcessChain("P", {"e1", "e2", "e3"})}, {});
    const auto order = require_acyclic(sys);
    CHECK(named_pairs(order, order.pairs()) ==
          std::set<std::pair<std::string, std::string>>{{"e1", "e2"}, {"e1", "e3"}, {"e2", "e3"}});
  }

  TEST_CASE("example system closure") {
    const auto order = require_acyclic(testkit::fixture_system("ds_ex"));
    const std::set<std::pair<std::string, std::string>> expected{{"a", "b"}, {"x", "y"}, {"α", "β"}, {"a", "x"},
                                                                 {"a", "y"}, {"b", "y"}, {"x", "β"}, {"a", "β"}};
    CHECK(named_pairs(order, order.pairs()) == expected);
  }

  TEST_CASE("message ordering") {
    const auto sys = testkit::fixture_system("causal_ordering");
    const auto v = check_causal_message_ordering(sys);
    REQUIRE(v.size() == 1);
    CHECK(v[0].first == Message{0, 1});
    CHECK(v[0].second == Message{1, 0});
    CHECK(describe(sys, v[0]) == "a1->b2 sent before a2->b1 but received after it");
    CHECK(check_causal_message_ordering(testkit::fixture_system("ds_ex")).empty());
    const DistributedSystem one({ProcessChain("A", 2), ProcessChain("B", 2)}, {{"A", "B", {{1, 0}}}, {"B", "A", {{1, 0}}}});
    CHECK(check_causal_message_ordering(one).empty());
  }

  TEST_CASE("concurrent pairs") {
    const auto sys = testkit::fixture_system("ds_ex");
    const auto order = require_acyclic(sys);
    std::set<std::set<std::string>> got;
    for (const auto& [a, b] : concurrent_pairs(sys)) got.insert({order.name(a), order.name(b)});
    const std::set<std::set<std::string>> expected{{"b", "x"}, {"b", "α"}, {"b", "β"}, {"x", "α"},
                                                   {"y", "α"}, {"y", "β"}, {"a", "α"}};
    CHECK(got == expected);
    CHECK(concurrent_pairs(DistributedSystem({ProcessChain("P", 4)}, {})).empty());
    CHECK(concurrent_pairs(DistributedSystem({ProcessChain("P", 1), ProcessChain("Q", 1)}, {})).size() == 1);
    CHECK_THROWS_AS(concurrent_pairs(testkit::fixture_system("fcycle")), CycleError);
  }

  TEST_CASE("analyze collects everything") {
    const auto report = analyze(testkit::fixture_system("fcycle"));
    CHECK_FALSE(report.closure);
    CHECK(report.cycle);
    CHECK_FALSE(report.clean());
    CHECK(analyze(testkit::fixture_system("ds_ex")).clean());
    CHECK_FALSE(analyze(testkit::fixture_system("causal_ordering")).clean());
  }

  TEST_CASE("same causal precedence, same communication") {
    const auto full = testkit::fixture_system("ds_ex");
    const DistributedSystem ax({full.process(0), full.process(1)}, {full.communications().front()});
    CHECK(same_causal_implies_same_comm(ax, ax).kind == CommunicationVerdictKind::equal_communications);

    const DistributedSystem d1({ProcessChain("P1", {"c", "b", "a"}), ProcessChain("P2", {"d"})}, {{"P1", "P2", {{1, 0}}}});
    const DistributedSystem d2({ProcessChain("P1", {"c", "a"}), ProcessChain("P2", {"b", "d"})},
                               {{"P1", "P2", {{0, 0}}}, {"P2", "P1", {{0, 1}}}});
    CHECK_THROWS_WITH_AS(same_causal_implies_same_comm(d1, d2), doctest::Contains("different process sets"), Error);

    // The crossed pair orders a1 < a2 < b1 < b2, as does the single message a2 -> b1.
    const auto crossed = testkit::fixture_system("causal_ordering");
    const DistributedSystem single(crossed.processes(), {{"A", "B", {{1, 0}}}});
    const auto verdict = same_causal_implies_same_comm(single, crossed);
    CHECK(verdict.kind == CommunicationVerdictKind::explained_by_violation);
    CHECK(verdict.detail.find("second system breaks causal message ordering") != std::string::npos);
    const DistributedSystem parallel(crossed.processes(), {{"A", "B", {{0, 0}, {1, 1}}}});
    CHECK(same_causal_implies_same_comm(parallel, crossed).kind == CommunicationVerdictKind::closures_differ);
  }

  TEST_CASE("two-process systems are determined by their causal precedence") {
    // Exhaustive over both directions and every pair of chain lengths up to 3.
    std::size_t compared = 0;
    for (std::size_t a = 1; a <= 3; ++a) {
      for (std::size_t b = 1; b <= 3; ++b) {
        const std::vector<ProcessChain> procs{ProcessChain("A", a), ProcessChain("B", b)};
        std::map<std::vector<ElementPair>, std::vector<DistributedSystem>> by_closure;
        for (const auto& ab : partial_matchings(a, b)) {
          for (const auto& ba : partial_matchings(b, a)) {
            DistributedSystem sys(procs, {{"A", "B", ab}, {"B", "A", ba}});
            const auto c = causal_closure(sys);
            if (is_cycle(c)) continue;
            by_closure[std::get<StrictPoset>(c).pairs()].push_back(std::move(sys));
          }
        }
        for (const auto& [_, group] : by_closure) {
          for (const auto& s1 : group) {
            for (const auto& s2 : group) {
              ++compared;
              CHECK(same_causal_implies_same_comm(s1, s2).kind != CommunicationVerdictKind::unexplained_difference);
            }
          }
        }
      }
    }
    CHECK(compared > 0);
  }

  TEST_CASE("random line systems are determined by their causal precedence") {
    testkit::Rng rng(0x11e5);
    testkit::SystemShape shape{4, 4, 0.6, false};
    for (int t = 0; t < 200; ++t) {
      const auto s1 = testkit::random_line_system(rng, shape);
      // Same processes, fresh communications: equal closures must mean equal
      // communications unless one side breaks message ordering.
      for (int u = 0; u < 20; ++u) {
        auto s2 = testkit::random_line_system(rng, shape);
        s2 = DistributedSystem(s1.processes(), s2.communications());
        if (!validate_system(s2).empty() || !s2.references_resolved()) continue;
        CHECK(same_causal_implies_same_comm(s1, s2).kind != CommunicationVerdictKind::unexplained_difference);
      }
    }
  }

  TEST_CASE("closure agrees with brute-force reachability") {
    testkit::Rng rng(20240601);
    for (int t = 0; t < 300; ++t) {
      const auto sys = testkit::random_acyclic_system(rng);
      const auto order = require_acyclic(sys);
      const auto reach = testkit::brute_reach(sys);
      for (std::size_t i = 0; i < order.size(); ++i) {
        CHECK_FALSE(order.less(i, i));
        for (std::size_t j = 0; j < order.size(); ++j) REQUIRE(order.less(i, j) == reach[i][j]);
      }
      // Restriction to a process is its chain order.
      for (std::size_t p = 0; p < sys.process_count(); ++p) {
        for (std::size_t x = 0; x < sys.process(p).size(); ++x) {
          for (std::size_t y = 0; y < sys.process(p).size(); ++y) {
            CHECK(order.less(sys.global_index({p, x}), sys.global_index({p, y})) == (x < y));
          }
        }
      }
      CHECK(width(order) <= sys.process_count());
    }
  }

  TEST_CASE("raw systems: cycles iff brute reachability is reflexive") {
    testkit::Rng rng(77);
    for (int t = 0; t < 300; ++t) {
      const auto sys = testkit::random_raw_system(rng, {4, 4, 0.5, true});
      const auto reach = testkit::brute_reach(sys);
      bool reflexive = false;
      for (std::size_t i = 0; i < reach.size(); ++i) reflexive = reflexive || reach[i][i];
      const auto c = causal_closure(sys);
      REQUIRE(is_cycle(c) == reflexive);
      if (!reflexive) continue;
      const auto& cyc = std::get<CycleWitness>(c).cycle;
      REQUIRE(cyc.size() >= 2);
      CHECK(cyc.front() == cyc.back());
      for (std::size_t k = 0; k + 1 < cyc.size(); ++k) CHECK(reach[cyc[k]][cyc[k + 1]]);
    }
  }
}
