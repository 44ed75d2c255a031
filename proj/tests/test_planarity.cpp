#include <random>
#include <utility>
#include <vector>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>
#include <catch2/catch_amalgamated.hpp>

#include "oracles.hpp"
#include "planarch/graph.hpp"
#include "planarch/planarity.hpp"

using namespace planarch;

namespace {

Graph complete(int n) {
  std::vector<VertexPair> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
  return graph_from_edges(n, std::move(edges));
}

Graph complete_bipartite(int a, int b) {
  std::vector<VertexPair> edges;
  for (int i = 0; i < a; ++i)
    for (int j = 0; j < b; ++j) edges.emplace_back(i, a + j);
  return graph_from_edges(a + b, std::move(edges));
}

Graph cycle(int n) {
  std::vector<VertexPair> edges;
  for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
  return graph_from_edges(n, std::move(edges));
}

Graph petersen() {
  std::vector<VertexPair> edges;
  for (int i = 0; i < 5; ++i) {
    edges.emplace_back(i, (i + 1) % 5);
    edges.emplace_back(i, i + 5);
    edges.emplace_back(5 + i, 5 + (i + 2) % 5);
  }
  return graph_from_edges(10, std::move(edges));
}

Graph grid(int rows, int cols) {
  std::vector<VertexPair> edges;
  auto id = [cols](int r, int c) { return r * cols + c; };
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) {
      if (c + 1 < cols) edges.emplace_back(id(r, c), id(r, c + 1));
      if (r + 1 < rows) edges.emplace_back(id(r, c), id(r + 1, c));
    }
  return graph_from_edges(rows * cols, std::move(edges));
}

Graph drop_edge(const Graph& g, int index) {
  std::vector<VertexPair> edges = g.edges();
  edges.erase(edges.begin() + index);
  return graph_from_edges(g.vertex_count(), std::move(edges));
}

bool boost_planar(const Graph& g) {
  using BoostGraph =
      boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS>;
  BoostGraph bg(g.vertex_count());
  for (const auto& e : g.edges()) boost::add_edge(e.u, e.v, bg);
  return boost::boyer_myrvold_planarity_test(bg);
}

}  // namespace

TEST_CASE("known planar and nonplanar graphs") {
  CHECK(is_planar(complete(4)).planar);
  CHECK(is_planar(cycle(10)).planar);
  CHECK(is_planar(grid(4, 4)).planar);
  CHECK_FALSE(is_planar(complete(5)).planar);
  CHECK_FALSE(is_planar(complete_bipartite(3, 3)).planar);
  CHECK_FALSE(is_planar(petersen()).planar);
  // one edge less than a Kuratowski graph embeds
  CHECK(is_planar(drop_edge(complete(5), 0)).planar);
  CHECK(is_planar(drop_edge(complete_bipartite(3, 3), 0)).planar);
}

TEST_CASE("rejection reasons") {
  CHECK(is_planar(complete(5)).reason == PlanarityReason::edge_bound);
  CHECK(is_planar(complete_bipartite(3, 3)).reason ==
        PlanarityReason::algorithm);  // m = 9 <= 3n - 6 = 12
  CHECK(is_planar(complete(4)).reason == PlanarityReason::algorithm);
}

TEST_CASE("agrees with the subdivision oracle on every graph up to n = 6") {
  for (int n = 1; n <= 6; ++n)
    for (const Graph& g : oracles::nonisomorphic_graphs(n))
      REQUIRE(is_planar(g).planar == oracles::planar(g));
}

TEST_CASE("agrees with boyer-myrvold on random graphs") {
  std::mt19937 rng(90125);
  for (int iter = 0; iter < 2000; ++iter) {
    const int n = 1 + static_cast<int>(rng() % 12);
    Graph g = oracles::random_graph_any_m(rng, n);
    REQUIRE(is_planar(g).planar == boost_planar(g));
  }
}

TEST_CASE("planarity is monotone under edge deletion and addition") {
  std::mt19937 rng(555);
  for (int iter = 0; iter < 300; ++iter) {
    const int n = 3 + static_cast<int>(rng() % 7);
    Graph g = oracles::random_graph_any_m(rng, n);
    if (is_planar(g).planar) {
      if (g.edge_count() > 0)
        CHECK(is_planar(drop_edge(g, static_cast<int>(rng() % g.edge_count())))
                  .planar);
    } else {
      auto gaps = g.non_edges();
      if (!gaps.empty())
        CHECK_FALSE(
            is_planar(g.with_edge(gaps[rng() % gaps.size()])).planar);
    }
  }
}

TEST_CASE("deep graphs do not overflow the stack") {
  CHECK(is_planar(cycle(50000)).planar);
  CHECK(is_planar(grid(2, 20000)).planar);
}

TEST_CASE("disconnected graphs") {
  std::vector<VertexPair> edges;
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) {
      edges.emplace_back(i, j);
      edges.emplace_back(4 + i, 4 + j);
    }
  CHECK(is_planar(graph_from_edges(8, edges)).planar);  // two K4s
  for (int i = 0; i < 5; ++i)
    for (int j = i + 1; j < 5; ++j) edges.emplace_back(8 + i, 8 + j);
  CHECK_FALSE(is_planar(graph_from_edges(13, edges)).planar);  // plus a K5
  CHECK(is_planar(graph_from_edges(6, {})).planar);  // no edges at all
}
