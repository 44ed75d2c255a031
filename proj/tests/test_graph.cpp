#include <random>
#include <string>
#include <vector>

#include <catch2/catch_amalgamated.hpp>

#include "oracles.hpp"
#include "planarch/errors.hpp"
#include "planarch/graph.hpp"
#include "planarch/graph6.hpp"

using namespace planarch;

namespace {

Graph complete(int n) {
  std::vector<VertexPair> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
  return graph_from_edges(n, std::move(edges));
}

}  // namespace

TEST_CASE("vertex pairs normalize and order") {
  VertexPair e(3, 1);
  CHECK(e.u == 1);
  CHECK(e.v == 3);
  CHECK(VertexPair(0, 2) < VertexPair(0, 3));
  CHECK(VertexPair(0, 3) < VertexPair(1, 2));
  CHECK(to_string(e) == "{1,3}");
  CHECK_THROWS_AS(VertexPair(2, 2), InvalidEdge);
}

TEST_CASE("graph construction rejects malformed edge lists") {
  CHECK_THROWS_AS(graph_from_edges(3, {{0, 3}}), IndexOutOfRange);
  CHECK_THROWS_AS(graph_from_edges(3, {{-1, 2}}), IndexOutOfRange);
  CHECK_THROWS_AS(graph_from_edges(4, {{0, 1}, {1, 0}}), DuplicateEdge);
  CHECK_THROWS_AS(graph_from_edges(-1, {}), IndexOutOfRange);
}

TEST_CASE("graph accessors") {
  Graph g = graph_from_edges(4, {{0, 1}, {2, 3}, {0, 2}});
  CHECK(g.vertex_count() == 4);
  CHECK(g.edge_count() == 3);
  CHECK(g.has_edge(1, 0));
  CHECK_FALSE(g.has_edge(1, 2));
  CHECK(g.edges() == std::vector<VertexPair>{{0, 1}, {0, 2}, {2, 3}});
  CHECK(g.edge_index({0, 2}) == 1);
  CHECK(g.non_edges() == std::vector<VertexPair>{{0, 3}, {1, 2}, {1, 3}});
  Graph h = g.with_edge({1, 2});
  CHECK(h.edge_count() == 4);
  CHECK_FALSE(g.has_edge(1, 2));  // original untouched
  CHECK(complete(5).non_edges().empty());
}

TEST_CASE("known graph6 encodings") {
  CHECK(emit_graph6(graph_from_edges(0, {})) == "?");
  CHECK(emit_graph6(graph_from_edges(1, {})) == "@");
  CHECK(emit_graph6(complete(4)) == "C~");
  CHECK(emit_graph6(complete(5)) == "D~{");
  CHECK(parse_graph6("D~{") == complete(5));
  CHECK(parse_graph6("C~") == complete(4));
}

TEST_CASE("graph6 matches an independent encoder on every small graph") {
  for (int n = 1; n <= 6; ++n)
    for (const Graph& g : oracles::nonisomorphic_graphs(n)) {
      const std::string code = emit_graph6(g);
      CHECK(code == oracles::graph6(g));
      CHECK(parse_graph6(code) == g);
    }
}

TEST_CASE("graph6 round-trips random graphs including long headers") {
  std::mt19937 rng(1811);
  for (int iter = 0; iter < 300; ++iter) {
    const int n = 1 + static_cast<int>(rng() % 80);  // crosses n = 63
    Graph g = oracles::random_graph(rng, n, 0.3);
    Graph back = parse_graph6(emit_graph6(g));
    REQUIRE(back == g);
  }
  // exact boundary of the short header
  for (int n : {62, 63, 64}) {
    Graph g = oracles::random_graph(rng, n, 0.2);
    CHECK(parse_graph6(emit_graph6(g)) == g);
  }
}

TEST_CASE("malformed graph6 reports the offending byte") {
  auto offset_of = [](const std::string& text) -> std::size_t {
    try {
      parse_graph6(text);
    } catch (const FormatError& e) {
      return e.offset;
    }
    return static_cast<std::size_t>(-1);
  };
  CHECK(offset_of("") == 0);
  CHECK(offset_of("D~") == 2);      // payload shorter than n requires
  CHECK(offset_of("C~~") == 2);     // trailing bytes
  CHECK(offset_of("Fw?!!") == 3);   // character out of range
  CHECK(offset_of("~~??????") == 1);  // 8-byte header unsupported
  CHECK_THROWS_AS(parse_graph6("C!"), FormatError);
}

TEST_CASE("graph equality is structural") {
  Graph a = graph_from_edges(3, {{0, 1}, {1, 2}});
  Graph b = graph_from_edges(3, {{1, 2}, {0, 1}});
  CHECK(a == b);
  CHECK_FALSE(a == graph_from_edges(3, {{0, 1}, {0, 2}}));
  CHECK_FALSE(a == graph_from_edges(4, {{0, 1}, {1, 2}}));
}
