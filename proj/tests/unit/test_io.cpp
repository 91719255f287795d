#include <algorithm>
#include <string>

#include "doctest.h"
#include "dsorder/causal.hpp"
#include "dsorder/dot.hpp"
#include "dsorder/io.hpp"
#include "fixtures.hpp"

using namespace dsorder;

namespace {

std::size_t count(const std::string& text, const std::string& needle) {
  std::size_t n = 0;
  for (auto pos = text.find(needle); pos != std::string::npos; pos = text.find(needle, pos + needle.size())) ++n;
  return n;
}

}  // namespace

TEST_SUITE("cli_io") {
  TEST_CASE("system documents round trip byte for byte") {
    for (const char* name : {"ds_ex", "fcycle", "causal_ordering", "equotient2"}) {
      CAPTURE(name);
      const auto text = testkit::fixture_text(name);
      const auto sys = parse_system(text);
      CHECK(emit_system(sys) == text);
      CHECK(parse_system(emit_system(sys)) == sys);
      CHECK(detect_document_kind(text) == DocumentKind::system);
    }
  }

  TEST_CASE("poset documents round trip byte for byte") {
    for (const char* name : {"chain", "enotunique", "fquotient2"}) {
      CAPTURE(name);
      const auto text = testkit::fixture_text(name);
      const auto p = parse_poset(text);
      CHECK(emit_poset(p) == text);
      CHECK(parse_poset(emit_poset(p)) == p);
      CHECK(detect_document_kind(text) == DocumentKind::poset);
    }
  }

  TEST_CASE("parsed contents") {
    const auto sys = testkit::fixture_system("ds_ex");
    CHECK(sys.process_count() == 3);
    CHECK(sys.process(2).id() == "Λ");
    CHECK(sys.messages(1, 2) == std::vector<Message>{{0, 1}});
    const auto p = testkit::fixture_poset("enotunique");
    CHECK(p.less(2, 0));
    CHECK_FALSE(p.less(0, 3));
  }

  TEST_CASE("empty and headerless documents") {
    CHECK(parse_system("").process_count() == 0);
    CHECK(parse_system("\n\n").process_count() == 0);
    CHECK(parse_system(emit_system(DistributedSystem{})).process_count() == 0);
    const auto sys = parse_system("{\"process\":\"P\",\"events\":[\"a\"]}\n\n{\"process\":\"Q\",\"events\":[]}\n");
    CHECK(sys.process_count() == 2);
    CHECK(sys.process(1).empty());
    CHECK(parse_poset("{\"elements\":[]}").size() == 0);
    CHECK(detect_document_kind("{\"elements\":[\"a\"]}") == DocumentKind::poset);
    CHECK(detect_document_kind("") == DocumentKind::system);
  }

  TEST_CASE("parse errors") {
    CHECK_THROWS_WITH_AS(parse_system("{\"process\":\"P\",\"events\":[\"a\"]}\n{\"message\":{\"from\":\"a\",\"to\":\"zz\"}}"),
                         doctest::Contains("zz"), ParseError);
    CHECK_THROWS_WITH_AS(parse_system("{\"process\":\"P\",\"events\":[\"a\"],\"color\":1}"),
                         doctest::Contains("color"), ParseError);
    CHECK_THROWS_AS(parse_system("{\"process\":\"P\",\"events\":[\"a\"]}\n{\"process\":\"Q\",\"events\":[\"a\"]}"),
                    ParseError);
    CHECK_THROWS_AS(parse_system("{\"process\":\"P\",\"events\":[\"a\"]}\n{\"process\":\"P\",\"events\":[\"b\"]}"),
                    ParseError);
    CHECK_THROWS_AS(parse_system("{\"process\":\"P\",\"events\":[\"\"]}"), ParseError);
    CHECK_THROWS_AS(parse_system("{\"process\":\"P\",\"events\":[\"a\"]}\n{\"kind\":\"system\"}"), ParseError);
    CHECK_THROWS_AS(parse_system("[1,2]"), ParseError);
    CHECK_THROWS_AS(parse_poset("{\"elements\":[\"a\"]}\n{\"less\":[\"a\"]}"), ParseError);

    try {
      parse_system("{\"kind\":\"system\"}\n\n{\"process\":\"P\",\"events\":[\"a\"}\n");
      FAIL("expected a parse error");
    } catch (const ParseError& e) {
      CHECK(e.line() == 3);
      CHECK(e.column() >= 1);
      CHECK(std::string(e.what()).rfind("line 3, column ", 0) == 0);
    }
  }

  TEST_CASE("poset cycles") {
    const std::string text = "{\"elements\":[\"a\",\"b\"]}\n{\"less\":[\"a\",\"b\"]}\n{\"less\":[\"b\",\"a\"]}\n";
    CHECK_THROWS_WITH_AS(parse_poset(text), doctest::Contains("cycle"), CycleError);
  }

  TEST_CASE("parsing keeps structurally invalid systems for validation") {
    const auto sys = parse_system(
        "{\"process\":\"P\",\"events\":[\"a\",\"b\"]}\n{\"process\":\"Q\",\"events\":[\"x\"]}\n"
        "{\"message\":{\"from\":\"a\",\"to\":\"x\"}}\n{\"message\":{\"from\":\"b\",\"to\":\"x\"}}\n");
    const auto v = validate_system(sys);
    REQUIRE(v.size() == 1);
    CHECK(v[0].kind == ViolationKind::duplicate_receiver);
  }

  TEST_CASE("dot export") {
    const auto fcycle = export_dot(testkit::fixture_system("fcycle"), DotMode::spacetime);
    CHECK(fcycle.rfind("digraph spacetime", 0) == 0);
    CHECK(count(fcycle, "subgraph \"cluster_") == 2);
    CHECK(count(fcycle, "style=dashed") == 2);
    CHECK_THROWS_AS(export_dot(testkit::fixture_system("fcycle"), DotMode::hasse), CycleError);

    const auto chain = export_dot(testkit::fixture_poset("chain"));
    CHECK(chain.rfind("digraph hasse", 0) == 0);
    CHECK(count(chain, "->") == 2);

    const auto f = export_dot(testkit::fixture_poset("fquotient2"));
    CHECK(count(f, "->") == 5);
    CHECK(count(f, "\n  \"") - count(f, "->") == 5);

    const auto ds = export_dot(testkit::fixture_system("ds_ex"), DotMode::hasse);
    CHECK(count(ds, "->") == transitive_reduction(require_acyclic(testkit::fixture_system("ds_ex"))).size());
  }
}
