#include <doctest.h>

#include <string>

#include "hyperlap/document.hpp"
#include "hyperlap/error.hpp"
#include "hyperlap/generators.hpp"

using namespace hyperlap;

namespace {

std::string parse_message(const std::string& text) {
  try {
    to_hypergraph(parse_document(text));
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::parse_error);
    return e.what();
  }
  FAIL("expected a parse error");
  return {};
}

}  // namespace

TEST_CASE("parse a named document") {
  const HypergraphDocument doc = parse_document(R"({
    "version": 1,
    "vertices": ["water", "salt", "brine"],
    "hyperedges": [{"inputs": ["water", "salt"], "outputs": ["brine"]}]
  })");
  CHECK(doc.vertices.size() == 3);
  const Hypergraph g = to_hypergraph(doc);
  CHECK(g.edges() == std::vector<Hyperedge>{{{0, 1}, {2}}});
}

TEST_CASE("diagnostics") {
  CHECK(parse_message("{\"version\": 1,\n  \"vertices\": [\"a\"").find("line 2") != std::string::npos);
  CHECK(parse_message(R"({"version": 2, "vertices": [], "hyperedges": []})").find("version") !=
        std::string::npos);
  CHECK(parse_message(R"({"version": 1, "vertices": ["a","a"], "hyperedges": []})").find("a") !=
        std::string::npos);
  CHECK(parse_message(R"({"version": 1, "vertices": ["a","b"],
      "hyperedges": [{"inputs": ["a"], "outputs": ["zed"]}]})")
            .find("zed") != std::string::npos);
  CHECK(parse_message(R"({"version": 1, "vertices": ["a","b"],
      "hyperedges": [{"inputs": "a", "outputs": ["b"]}]})")
            .find("hyperedges[0].inputs") != std::string::npos);
}

TEST_CASE("write then parse is the identity on hypergraphs") {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    GeneratorSpec s;
    s.family = seed % 2 ? Family::random_chemical : Family::random_oriented;
    s.n = 3 + seed % 10;
    s.m = s.n + seed % 5;
    s.p_member = 0.4;
    s.p_catalyst = s.family == Family::random_chemical ? 0.2 : 0.0;
    s.seed = seed;
    const Hypergraph g = generate(s);
    HypergraphDocument doc = to_document(g);
    doc.generator = s;
    const std::string text = write_document(doc);
    const HypergraphDocument back = parse_document(text);
    CHECK(back == doc);
    CHECK(to_hypergraph(back) == g);
    CHECK(write_document(back) == text);
  }
}

TEST_CASE("generator-only document") {
  GeneratorSpec s;
  s.family = Family::complete_graph;
  s.n = 5;
  HypergraphDocument doc;
  doc.generator = s;
  const HypergraphDocument back = parse_document(write_document(doc));
  CHECK(back.generator == s);
  CHECK(to_hypergraph(back) == complete_graph(5));
}

TEST_CASE("spec json keeps every field") {
  GeneratorSpec s;
  s.family = Family::bipartite_constant;
  s.part1 = 3;
  s.part2 = 4;
  s.m = 5;
  s.c = 3;
  s.p_member = 0.125;
  s.p_input = 0.3;
  s.p_catalyst = 0.1;
  s.seed = 0xFFFFFFFFFFFFFFFFULL;
  CHECK(spec_from_json(spec_to_json(s)) == s);
}

TEST_CASE("default names") {
  const HypergraphDocument doc = to_document(figure1());
  CHECK(doc.vertices.front() == "v0");
  CHECK(doc.vertices.back() == "v5");
  CHECK(doc.hyperedges[0].inputs == std::vector<std::string>{"v0", "v1"});
}
