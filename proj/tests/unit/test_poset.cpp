#include <algorithm>
#include <set>

#include "brute.hpp"
#include "doctest.h"
#include "dsorder/causal.hpp"
#include "dsorder/poset.hpp"
#include "fixtures.hpp"
#include "generators.hpp"

using namespace dsorder;

namespace {

std::set<std::pair<std::string, std::string>> named(const StrictPoset& p, const std::vector<ElementPair>& pairs) {
  std::set<std::pair<std::string, std::string>> out;
  for (const auto& [a, b] : pairs) out.emplace(p.name(a), p.name(b));
  return out;
}

StrictPoset antichain(std::size_t n) {
  std::vector<std::string> names;
  for (std::size_t k = 0; k < n; ++k) names.push_back(std::string(1, static_cast<char>('p' + k)));
  return StrictPoset(names);
}

/// The standard example S3: a_i < b_j iff i != j.
StrictPoset standard_example() {
  std::vector<ElementPair> pairs;
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) {
      if (i != j) pairs.emplace_back(i, 3 + j);
    }
  }
  return close_or_throw({"a0", "a1", "a2", "b0", "b1", "b2"}, pairs);
}

}  // namespace

TEST_SUITE("poset") {
  TEST_CASE("closure") {
    const std::vector<ElementPair> abc{{0, 1}, {1, 2}};
    const auto chain = close_or_throw({"a", "b", "c"}, abc);
    CHECK(chain.less(0, 2));
    CHECK(chain.relation_size() == 3);

    const auto e = testkit::fixture_poset("enotunique");
    CHECK(named(e, e.pairs()) == std::set<std::pair<std::string, std::string>>{
                                     {"c", "b"}, {"b", "a"}, {"b", "d"}, {"c", "a"}, {"c", "d"}});

    const std::vector<ElementPair> loop{{0, 1}, {1, 0}};
    const auto r = transitive_closure({"a", "b"}, loop);
    REQUIRE(is_cycle(r));
    CHECK(std::get<CycleWitness>(r).cycle == std::vector<std::size_t>{0, 1, 0});
    const std::vector<ElementPair> self{{1, 1}};
    CHECK(std::get<CycleWitness>(transitive_closure({"a", "b"}, self)).cycle == std::vector<std::size_t>{1, 1});
    CHECK_THROWS_AS(close_or_throw({"a", "b"}, loop), Error);
  }

  TEST_CASE("reduction") {
    CHECK(transitive_reduction(testkit::fixture_poset("chain")).size() == 2);
    const auto e = testkit::fixture_poset("enotunique");
    CHECK(named(e, transitive_reduction(e)) ==
          std::set<std::pair<std::string, std::string>>{{"c", "b"}, {"b", "a"}, {"b", "d"}});
    const auto f = testkit::fixture_poset("fquotient2");
    CHECK(named(f, transitive_reduction(f)) == std::set<std::pair<std::string, std::string>>{
                                                   {"y1", "x1"}, {"x1", "x2"}, {"y3", "x3"}, {"x3", "x2"}, {"y1", "x3"}});
  }

  TEST_CASE("width") {
    CHECK(width(testkit::fixture_poset("chain")) == 1);
    CHECK(width(antichain(2)) == 2);
    CHECK(width(StrictPoset{}) == 0);
    const auto order = require_acyclic(testkit::fixture_system("ds_ex"));
    CHECK(width(order) == 3);
    const auto anti = maximum_antichain(order);
    std::set<std::string> names;
    for (const auto x : anti) names.insert(order.name(x));
    CHECK(names.size() == 3);
    for (const auto x : anti) {
      for (const auto y : anti) CHECK_FALSE(order.less(x, y));
    }
  }

  TEST_CASE("linear extensions") {
    CHECK(linear_extensions(antichain(2)) == std::vector<std::vector<std::size_t>>{{0, 1}, {1, 0}});
    CHECK(linear_extensions(testkit::fixture_poset("chain")).size() == 1);
    const auto f = testkit::fixture_poset("fquotient2");
    CHECK(linear_extensions(f) == testkit::brute_linear_extensions(f));
    CHECK(linear_extensions(antichain(5), 3).size() == 3);
    CHECK_THROWS_AS(linear_extensions(antichain(kExhaustiveExtensionLimit + 1)), Error);
    CHECK(linear_extensions(antichain(kExhaustiveExtensionLimit + 1), 2).size() == 2);
  }

  TEST_CASE("order dimension") {
    const auto chain = order_dimension(testkit::fixture_poset("chain"));
    CHECK(chain.dimension == 1);
    CHECK(chain.realizer.extensions == std::vector<std::vector<std::size_t>>{{0, 1, 2}});

    const auto two = order_dimension(antichain(2));
    CHECK(two.dimension == 2);
    auto orders = two.realizer.extensions;
    std::sort(orders.begin(), orders.end());
    CHECK(orders == std::vector<std::vector<std::size_t>>{{0, 1}, {1, 0}});

    const auto f = testkit::fixture_poset("fquotient2");
    const auto fd = order_dimension(f);
    CHECK(fd.dimension == 2);
    CHECK(is_realizer(f, fd.realizer));
    CHECK(bijective_multiutility(fd.realizer) == testkit::quotient_rankings());
    CHECK_FALSE(testkit::brute_realizer_exists(f, 1));

    CHECK(order_dimension(standard_example()).dimension == 3);
    CHECK_THROWS_AS(order_dimension(standard_example(), 1), BudgetExceeded);
    CHECK_THROWS_AS(order_dimension(antichain(kMaxDimensionElements + 1)), Error);
  }

  TEST_CASE("critical pairs") {
    const auto a = antichain(2);
    CHECK(critical_pairs(a) == std::vector<ElementPair>{{0, 1}, {1, 0}});
    CHECK(critical_pairs(testkit::fixture_poset("chain")).empty());
  }

  TEST_CASE("greedy realizer") {
    CHECK(greedy_realizer(testkit::fixture_poset("chain")).size() == 1);
    CHECK(greedy_realizer(antichain(2)).size() == 2);
    const auto f = testkit::fixture_poset("fquotient2");
    CHECK(is_realizer(f, greedy_realizer(f)));
  }

  TEST_CASE("bijective multi-utility of a chain is its rank") {
    const auto mu = bijective_multiutility(order_dimension(testkit::fixture_poset("chain")).realizer);
    REQUIRE(mu.size() == 1);
    CHECK(mu.functions[0] == std::vector<Rational>{Rational(1), Rational(2), Rational(3)});
  }

  TEST_CASE("synthesis") {
    const auto e = testkit::fixture_poset("enotunique");
    const auto sys = synthesize_system(e);
    REQUIRE(sys.process_count() == 2);
    CHECK(sys.process(0).labels() == std::vector<std::string>{"c", "b", "a"});
    CHECK(sys.process(1).labels() == std::vector<std::string>{"d"});
    REQUIRE(sys.communications().size() == 1);
    CHECK(sys.communications()[0].pairs == std::vector<Message>{{1, 0}});

    const auto chain = synthesize_system(testkit::fixture_poset("chain"));
    CHECK(chain.process_count() == 1);
    CHECK(chain.communications().empty());

    const auto f = testkit::fixture_poset("fquotient2");
    const auto fs = synthesize_system(f);
    CHECK(validate_system(fs).empty());
    CHECK(testkit::same_order_by_name(require_acyclic(fs), f));
    CHECK(fs.process_count() == width(f));
  }

  TEST_CASE("decompositions are not unique") {
    const auto e = testkit::fixture_poset("enotunique");
    const auto all = enumerate_decompositions(e, 100);
    std::size_t two_process = 0;
    bool has_second = false;
    for (const auto& sys : all) {
      CHECK(testkit::same_order_by_name(require_acyclic(sys), e));
      if (sys.process_count() == 2) ++two_process;
      if (sys.process_count() == 2 && sys.process(0).labels() == std::vector<std::string>{"c", "a"}) has_second = true;
    }
    CHECK(two_process >= 2);
    CHECK(has_second);
    CHECK(enumerate_decompositions(e, 1).size() == 1);
  }

  TEST_CASE("system_from_chains rejects bad partitions") {
    const auto e = testkit::fixture_poset("enotunique");
    CHECK_THROWS_AS(system_from_chains(e, {{2, 1, 0}}), Error);
    CHECK_THROWS_AS(system_from_chains(e, {{0, 1}, {2}, {3}}), Error);
  }

  TEST_CASE("poset properties on random posets") {
    testkit::Rng rng(1234567);
    for (int t = 0; t < 300; ++t) {
      const std::size_t n = 1 + static_cast<std::size_t>(t % 12);
      const auto p = testkit::random_poset(rng, n, 0.15 + 0.05 * (t % 8));
      const auto red = transitive_reduction(p);
      CHECK(close_or_throw(p.names(), red) == p);
      CHECK(width(p) == testkit::brute_width(p));
      const auto cover = minimum_chain_cover(p);
      CHECK(cover.size() == width(p));
      const auto anti = maximum_antichain(p);
      CHECK(anti.size() == width(p));
      const auto greedy = greedy_realizer(p);
      CHECK(is_realizer(p, greedy));
      if (n <= 8) {
        const auto d = order_dimension(p);
        CHECK(is_realizer(p, d.realizer));
        CHECK(d.dimension <= greedy.size());
        for (const auto& ext : d.realizer.extensions) CHECK(is_linear_extension(p, ext));
        CHECK(testkit::realizes(p, d.realizer.extensions));
      }
      const auto sys = synthesize_system(p);
      CHECK(validate_system(sys).empty());
      CHECK(testkit::same_order_by_name(require_acyclic(sys), p));
    }
  }
}
