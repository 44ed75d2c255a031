#pragma once

#include <algorithm>
#include <compare>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"

namespace planarch {

// An undirected edge {u, v}, stored with u < v so pairs compare and
// hash consistently no matter how they were written down.
struct VertexPair {
  int u = 0;
  int v = 1;

  VertexPair() = default;
  VertexPair(int a, int b) : u(std::min(a, b)), v(std::max(a, b)) {
    if (a == b)
      throw InvalidEdge("self-loop {" + std::to_string(a) + "," +
                        std::to_string(b) + "}");
  }

  auto operator<=>(const VertexPair&) const = default;
};

inline std::string to_string(const VertexPair& e) {
  return "{" + std::to_string(e.u) + "," + std::to_string(e.v) + "}";
}

// Simple undirected graph on vertices 0..n-1. Immutable once built;
// edges are kept sorted, so lookups are binary searches and two equal
// graphs compare equal structurally. Safe to share across threads.
class Graph {
 public:
  Graph() = default;

  int vertex_count() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::vector<VertexPair>& edges() const { return edges_; }

  const std::vector<int>& neighbors(int v) const {
    check_vertex(v);
    return adj_[v];
  }

  int degree(int v) const {
    check_vertex(v);
    return static_cast<int>(adj_[v].size());
  }

  bool has_edge(int a, int b) const {
    if (a == b || a < 0 || b < 0 || a >= n_ || b >= n_) return false;
    const auto& nb = adj_[a];
    return std::binary_search(nb.begin(), nb.end(), b);
  }

  bool has_edge(const VertexPair& e) const { return has_edge(e.u, e.v); }

  // Index of e in edges(), or -1 when absent.
  int edge_index(const VertexPair& e) const {
    auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
    if (it == edges_.end() || *it != e) return -1;
    return static_cast<int>(it - edges_.begin());
  }

  // Pairs of distinct vertices that are not edges, in lexicographic order.
  std::vector<VertexPair> non_edges() const {
    std::vector<VertexPair> out;
    for (int a = 0; a < n_; ++a)
      for (int b = a + 1; b < n_; ++b)
        if (!has_edge(a, b)) out.emplace_back(a, b);
    return out;
  }

  // Copy of this graph with one extra edge.
  Graph with_edge(const VertexPair& e) const {
    std::vector<VertexPair> es = edges_;
    es.push_back(e);
    return Graph(n_, std::move(es));
  }

  bool operator==(const Graph& other) const {
    return n_ == other.n_ && edges_ == other.edges_;
  }

  friend Graph graph_from_edges(int n, std::vector<VertexPair> edges);

 private:
  Graph(int n, std::vector<VertexPair> edges) : n_(n) {
    if (n < 0) throw IndexOutOfRange("negative vertex count");
    for (const auto& e : edges) {
      if (e.u < 0 || e.v >= n)
        throw IndexOutOfRange("edge " + planarch::to_string(e) +
                              " out of range for n=" + std::to_string(n));
    }
    std::sort(edges.begin(), edges.end());
    auto dup = std::adjacent_find(edges.begin(), edges.end());
    if (dup != edges.end())
      throw DuplicateEdge("edge " + planarch::to_string(*dup) +
                          " listed more than once");
    edges_ = std::move(edges);
    adj_.assign(n_, {});
    for (const auto& e : edges_) {
      adj_[e.u].push_back(e.v);
      adj_[e.v].push_back(e.u);
    }
    for (auto& nb : adj_) std::sort(nb.begin(), nb.end());
  }

  void check_vertex(int v) const {
    if (v < 0 || v >= n_)
      throw IndexOutOfRange("vertex " + std::to_string(v) +
                            " out of range for n=" + std::to_string(n_));
  }

  int n_ = 0;
  std::vector<VertexPair> edges_;
  std::vector<std::vector<int>> adj_;
};

inline Graph graph_from_edges(int n, std::vector<VertexPair> edges) {
  return Graph(n, std::move(edges));
}

}  // namespace planarch
