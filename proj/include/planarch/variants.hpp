#pragma once

#include <algorithm>
#include <array>
#include <bit>
#include <cassert>
#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "graph.hpp"
#include "planarity.hpp"

namespace planarch {

// Classes ordered by inclusion: planar c ic c nic c one_planar.
enum class GraphClass { planar, ic_planar, nic_planar, one_planar };

inline constexpr std::array<GraphClass, 4> all_graph_classes = {
    GraphClass::planar, GraphClass::ic_planar, GraphClass::nic_planar,
    GraphClass::one_planar};

inline const char* to_string(GraphClass c) {
  switch (c) {
    case GraphClass::planar: return "planar";
    case GraphClass::ic_planar: return "ic-planar";
    case GraphClass::nic_planar: return "nic-planar";
    case GraphClass::one_planar: return "1-planar";
  }
  return "?";
}

// True iff membership in `inner` implies membership in `outer`.
inline bool class_includes(GraphClass outer, GraphClass inner) {
  return static_cast<int>(inner) <= static_cast<int>(outer);
}

// Two independent edges allowed to cross each other. Canonical form:
// e1 < e2, and the four endpoints are pairwise distinct.
struct CrossingPair {
  VertexPair e1{0, 1};
  VertexPair e2{2, 3};

  CrossingPair() = default;
  CrossingPair(VertexPair a, VertexPair b) {
    if (a == b)
      throw InvalidConfiguration("edge " + planarch::to_string(a) +
                                 " paired with itself");
    if (a.u == b.u || a.u == b.v || a.v == b.u || a.v == b.v)
      throw InvalidConfiguration("crossing edges " + planarch::to_string(a) +
                                 " and " + planarch::to_string(b) +
                                 " share an endpoint");
    if (b < a) std::swap(a, b);
    e1 = a;
    e2 = b;
  }

  std::array<int, 4> endpoints() const { return {e1.u, e1.v, e2.u, e2.v}; }

  auto operator<=>(const CrossingPair&) const = default;
};

inline int shared_endpoints(const CrossingPair& a, const CrossingPair& b) {
  int count = 0;
  for (int x : a.endpoints())
    for (int y : b.endpoints())
      if (x == y) ++count;
  return count;
}

// A set of crossing pairs claimed to realize a drawing in `cls`.
// Pairs are kept sorted so equal configurations compare equal.
struct CrossingConfiguration {
  GraphClass cls = GraphClass::planar;
  std::vector<CrossingPair> pairs;

  CrossingConfiguration() = default;
  CrossingConfiguration(GraphClass c, std::vector<CrossingPair> p)
      : cls(c), pairs(std::move(p)) {
    std::sort(pairs.begin(), pairs.end());
  }

  int crossing_count() const { return static_cast<int>(pairs.size()); }

  bool operator==(const CrossingConfiguration&) const = default;
};

// Orders configurations by size first, then lexicographically; used
// for canonical census output.
inline bool config_less(const CrossingConfiguration& a,
                        const CrossingConfiguration& b) {
  if (a.pairs.size() != b.pairs.size())
    return a.pairs.size() < b.pairs.size();
  return a.pairs < b.pairs;
}

// Certificate for a positive membership verdict. dummies[i] is the
// vertex that replaced the crossing of config.pairs[i].
struct Witness {
  CrossingConfiguration config;
  Graph planarization;
  std::vector<int> dummies;

  int crossing_count() const { return config.crossing_count(); }
};

// Wall-clock limit for one exponential-search operation. Each public
// operation that takes a budget starts its own clock on entry.
struct SearchBudget {
  std::optional<double> seconds;

  static SearchBudget none() { return {}; }
  static SearchBudget of_seconds(double s) { return {s}; }
};

namespace detail {

class Deadline {
 public:
  Deadline(const SearchBudget& budget, const char* what) : what_(what) {
    if (budget.seconds)
      at_ = std::chrono::steady_clock::now() +
            std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                std::chrono::duration<double>(*budget.seconds));
  }

  // Cheap to call in inner loops; looks at the clock every 1024 ticks.
  void tick() {
    if (!at_) return;
    if ((++count_ & 1023) == 0 && std::chrono::steady_clock::now() > *at_)
      throw BudgetExceeded(std::string(what_) + ": wall-clock budget exhausted");
  }

 private:
  const char* what_;
  std::optional<std::chrono::steady_clock::time_point> at_;
  std::uint64_t count_ = 0;
};

}  // namespace detail

// All unordered pairs of independent edges (four distinct endpoints),
// lexicographically sorted. These are the only pairs a drawing needs:
// a crossing of adjacent edges can always be rerouted away. The planar
// class allows no crossings, so its candidate list is empty.
inline std::vector<CrossingPair> candidate_pairs(const Graph& g,
                                                 GraphClass cls) {
  std::vector<CrossingPair> out;
  if (cls == GraphClass::planar) return out;
  const auto& es = g.edges();
  for (std::size_t i = 0; i < es.size(); ++i)
    for (std::size_t j = i + 1; j < es.size(); ++j) {
      const VertexPair &a = es[i], &b = es[j];
      if (a.u == b.u || a.u == b.v || a.v == b.u || a.v == b.v) continue;
      out.emplace_back(a, b);
    }
  return out;
}

// Does `config` satisfy the crossing rules of `cls` in g?
// Throws EdgeNotInGraph if a pair mentions a non-edge.
inline bool config_is_valid(const CrossingConfiguration& config,
                            const Graph& g, GraphClass cls) {
  for (const auto& p : config.pairs)
    for (const auto& e : {p.e1, p.e2})
      if (!g.has_edge(e))
        throw EdgeNotInGraph("edge " + planarch::to_string(e) +
                             " not in the graph");

  if (cls == GraphClass::planar) return config.pairs.empty();

  // every edge crossed at most once, all classes
  std::vector<VertexPair> used;
  used.reserve(config.pairs.size() * 2);
  for (const auto& p : config.pairs) {
    used.push_back(p.e1);
    used.push_back(p.e2);
  }
  std::sort(used.begin(), used.end());
  if (std::adjacent_find(used.begin(), used.end()) != used.end()) return false;

  const auto& ps = config.pairs;
  if (cls == GraphClass::ic_planar) {
    for (std::size_t i = 0; i < ps.size(); ++i)
      for (std::size_t j = i + 1; j < ps.size(); ++j)
        if (shared_endpoints(ps[i], ps[j]) > 0) return false;
  } else if (cls == GraphClass::nic_planar) {
    for (std::size_t i = 0; i < ps.size(); ++i)
      for (std::size_t j = i + 1; j < ps.size(); ++j)
        if (shared_endpoints(ps[i], ps[j]) > 1) return false;
  }
  return true;
}

// Replace each crossing by a fresh degree-4 vertex: remove both edges
// of the pair, connect the new vertex to all four endpoints. Dummies
// are numbered n, n+1, ... in sorted pair order.
inline Witness planarize(const Graph& g, const CrossingConfiguration& config) {
  if (!config_is_valid(config, g, GraphClass::one_planar))
    throw InvalidConfiguration("configuration reuses an edge");

  const int n = g.vertex_count();
  CrossingConfiguration sorted = config;
  std::sort(sorted.pairs.begin(), sorted.pairs.end());

  std::vector<VertexPair> edges;
  edges.reserve(g.edge_count() + 2 * sorted.pairs.size());
  std::vector<VertexPair> crossed;
  for (const auto& p : sorted.pairs) {
    crossed.push_back(p.e1);
    crossed.push_back(p.e2);
  }
  std::sort(crossed.begin(), crossed.end());
  for (const auto& e : g.edges())
    if (!std::binary_search(crossed.begin(), crossed.end(), e))
      edges.push_back(e);

  std::vector<int> dummies;
  for (std::size_t i = 0; i < sorted.pairs.size(); ++i) {
    int d = n + static_cast<int>(i);
    dummies.push_back(d);
    for (int v : sorted.pairs[i].endpoints()) edges.emplace_back(v, d);
  }

  Graph planarization =
      graph_from_edges(n + static_cast<int>(sorted.pairs.size()), std::move(edges));
  return Witness{std::move(sorted), std::move(planarization), std::move(dummies)};
}

// Full re-validation of a witness against its host graph: class rules,
// vertex/edge counts, planarity of the planarization, and exact
// reconstruction. Used by tests and by the CLI's --recheck.
inline bool validate_witness(const Graph& g, const Witness& w, GraphClass cls) {
  if (w.config.cls != cls) return false;
  if (!config_is_valid(w.config, g, cls)) return false;
  const int k = w.config.crossing_count();
  if (w.planarization.vertex_count() != g.vertex_count() + k) return false;
  if (w.planarization.edge_count() != g.edge_count() + 2 * k) return false;
  if (static_cast<int>(w.dummies.size()) != k) return false;
  Witness rebuilt = planarize(g, w.config);
  if (!(rebuilt.planarization == w.planarization)) return false;
  if (rebuilt.dummies != w.dummies) return false;
  for (int i = 0; i < k; ++i) {
    int d = w.dummies[i];
    if (w.planarization.degree(d) != 4) return false;
    auto ends = w.config.pairs[i].endpoints();
    std::sort(ends.begin(), ends.end());
    const auto& nb = w.planarization.neighbors(d);
    if (!std::equal(ends.begin(), ends.end(), nb.begin(), nb.end()))
      return false;
  }
  return is_planar(w.planarization).planar;
}

namespace detail {

// Largest edge count any graph of the class on n vertices can have
// (published bounds; n >= 5). Used as a rejection fast path: thresholds
// grow along the inclusion chain, so the chain property is preserved.
inline bool exceeds_class_capacity(int n, int m, GraphClass cls) {
  if (n < 5) return false;
  switch (cls) {
    case GraphClass::planar: return m > 3 * n - 6;
    case GraphClass::ic_planar: return 4 * m > 13 * n - 24;
    case GraphClass::nic_planar: return 5 * m > 18 * (n - 2);
    case GraphClass::one_planar: return m > 4 * n - 8;
  }
  return false;
}

// Depth-first search that decides the graph's edges in lexicographic
// order: each edge either stays uncrossed for good or is paired with a
// lexicographically later partner (which decides that edge too). Pairs
// therefore arrive in canonical order, and trying partners in
// ascending order before the uncrossed branch enumerates same-size
// configurations in exactly lexicographic order.
//
// Two facts carry the pruning. First, the chosen dummy stars plus all
// edges already final-uncrossed form a subgraph of every completion's
// planarization, so this partial planarization is re-tested after
// every decision and a nonplanar one kills the subtree. Second, a
// size-k configuration leaves exactly m-2k edges uncrossed, so the
// uncrossed-final count is capped by that quota, which chokes the
// uncrossed branch on dense inputs.
class ConfigSearch {
 public:
  ConfigSearch(const Graph& g, GraphClass cls, Deadline& deadline)
      : g_(g), cls_(cls), deadline_(deadline),
        m_(g.edge_count()) {
    state_.assign(m_, kUndecided);
    used_vertex_.assign(g.vertex_count(), 0);
  }

  // First valid, planar-planarizing configuration of exactly k pairs
  // in lexicographic order; empty when none exists. The optional masks
  // bar edges (crossable, by edge index) or specific partners (allowed,
  // bit f of word e) from pairs.
  std::optional<std::vector<CrossingPair>> find_exact(
      int k, const std::vector<char>* crossable = nullptr,
      const std::vector<uint64_t>* allowed = nullptr) {
    assert(chosen_.empty() && uncrossed_ == 0);
    crossable_ = crossable;
    allowed_ = allowed;
    if (2 * k > m_) return std::nullopt;
    if (crossable_ &&
        std::count(crossable_->begin(), crossable_->end(), 1) < 2 * k)
      return std::nullopt;
    if (dfs_exact(0, k)) {
      auto out = chosen_pairs();
      unwind();
      return out;
    }
    return std::nullopt;
  }

  // Every nonempty valid configuration whose planarization is planar,
  // appended as raw pair lists in no particular order.
  void census(std::vector<std::vector<CrossingPair>>& out) {
    assert(chosen_.empty() && uncrossed_ == 0);
    dfs_census(0, out);
  }

 private:
  enum : char { kUndecided = 0, kUncrossed = 1, kCrossed = 2 };

  std::vector<CrossingPair> chosen_pairs() const {
    std::vector<CrossingPair> out;
    out.reserve(chosen_.size());
    for (auto [a, b] : chosen_)
      out.emplace_back(g_.edges()[a], g_.edges()[b]);
    return out;
  }

  // After a successful search, put the state back so the searcher can
  // be reused for the next k.
  void unwind() {
    while (!chosen_.empty()) undo_pair();
    std::fill(state_.begin(), state_.end(), kUndecided);
    uncrossed_ = 0;
  }

  static bool independent(const VertexPair& a, const VertexPair& b) {
    return a.u != b.u && a.u != b.v && a.v != b.u && a.v != b.v;
  }

  bool class_allows(int a, int b) const {
    const VertexPair &ea = g_.edges()[a], &eb = g_.edges()[b];
    if (cls_ == GraphClass::ic_planar) {
      return !used_vertex_[ea.u] && !used_vertex_[ea.v] &&
             !used_vertex_[eb.u] && !used_vertex_[eb.v];
    }
    if (cls_ == GraphClass::nic_planar) {
      CrossingPair candidate(ea, eb);
      for (auto [pa, pb] : chosen_) {
        CrossingPair prev(g_.edges()[pa], g_.edges()[pb]);
        if (shared_endpoints(prev, candidate) > 1) return false;
      }
    }
    return true;
  }

  void make_pair(int a, int b) {
    state_[a] = state_[b] = kCrossed;
    if (cls_ == GraphClass::ic_planar) {
      const VertexPair &ea = g_.edges()[a], &eb = g_.edges()[b];
      used_vertex_[ea.u] = used_vertex_[ea.v] = 1;
      used_vertex_[eb.u] = used_vertex_[eb.v] = 1;
    }
    chosen_.push_back({a, b});
  }

  void undo_pair() {
    auto [a, b] = chosen_.back();
    chosen_.pop_back();
    state_[a] = state_[b] = kUndecided;
    if (cls_ == GraphClass::ic_planar) {
      const VertexPair &ea = g_.edges()[a], &eb = g_.edges()[b];
      used_vertex_[ea.u] = used_vertex_[ea.v] = 0;
      used_vertex_[eb.u] = used_vertex_[eb.v] = 0;
    }
  }

  void append_dummy_stars(std::vector<std::pair<int, int>>& edges) const {
    int n = g_.vertex_count();
    for (std::size_t j = 0; j < chosen_.size(); ++j) {
      int d = n + static_cast<int>(j);
      auto [a, b] = chosen_[j];
      edges.push_back({g_.edges()[a].u, d});
      edges.push_back({g_.edges()[a].v, d});
      edges.push_back({g_.edges()[b].u, d});
      edges.push_back({g_.edges()[b].v, d});
    }
  }

  // Dummy stars plus the final-uncrossed edges; a subgraph of every
  // completion's planarization.
  bool partial_planar() {
    scratch_.clear();
    for (int e = 0; e < m_; ++e)
      if (state_[e] == kUncrossed)
        scratch_.push_back({g_.edges()[e].u, g_.edges()[e].v});
    append_dummy_stars(scratch_);
    return is_planar_edges(g_.vertex_count() + static_cast<int>(chosen_.size()),
                           scratch_);
  }

  // The planarization as it stands if every still-undecided edge stays
  // uncrossed; this is the full planarization of the chosen pairs.
  bool completion_planar(int t) {
    scratch_.clear();
    for (int e = 0; e < m_; ++e)
      if (state_[e] == kUncrossed || (e >= t && state_[e] == kUndecided))
        scratch_.push_back({g_.edges()[e].u, g_.edges()[e].v});
    append_dummy_stars(scratch_);
    return is_planar_edges(g_.vertex_count() + static_cast<int>(chosen_.size()),
                           scratch_);
  }

  bool dfs_exact(int t, int k) {
    deadline_.tick();
    if (static_cast<int>(chosen_.size()) == k) return completion_planar(t);
    if (t == m_) return false;
    if (state_[t] == kCrossed) return dfs_exact(t + 1, k);

    if ((!crossable_ || (*crossable_)[t]) && (!allowed_ || (*allowed_)[t])) {
      const VertexPair& et = g_.edges()[t];
      for (int f = t + 1; f < m_; ++f) {
        if (state_[f] != kUndecided) continue;
        if (crossable_ && !(*crossable_)[f]) continue;
        if (allowed_ && !((*allowed_)[t] >> f & 1)) continue;
        if (!independent(et, g_.edges()[f])) continue;
        if (!class_allows(t, f)) continue;
        make_pair(t, f);
        bool found = partial_planar() && dfs_exact(t + 1, k);
        if (found) return true;
        undo_pair();
      }
    }

    if (uncrossed_ < m_ - 2 * k) {  // quota for a size-k configuration
      state_[t] = kUncrossed;
      ++uncrossed_;
      bool found = partial_planar() && dfs_exact(t + 1, k);
      if (!found) {
        state_[t] = kUndecided;
        --uncrossed_;
        return false;
      }
      return true;
    }
    return false;
  }

  void dfs_census(int t, std::vector<std::vector<CrossingPair>>& out) {
    deadline_.tick();
    if (t == m_) {
      // partial_planar() held after every decision and now covers the
      // whole planarization, so this configuration embeds.
      if (!chosen_.empty()) out.push_back(chosen_pairs());
      return;
    }
    if (state_[t] == kCrossed) {
      dfs_census(t + 1, out);
      return;
    }

    const VertexPair& et = g_.edges()[t];
    for (int f = t + 1; f < m_; ++f) {
      if (state_[f] != kUndecided) continue;
      if (!independent(et, g_.edges()[f])) continue;
      if (!class_allows(t, f)) continue;
      make_pair(t, f);
      if (partial_planar()) dfs_census(t + 1, out);
      undo_pair();
    }

    state_[t] = kUncrossed;
    if (partial_planar()) dfs_census(t + 1, out);
    state_[t] = kUndecided;
  }

  const Graph& g_;
  GraphClass cls_;
  Deadline& deadline_;
  int m_;
  int uncrossed_ = 0;
  const std::vector<char>* crossable_ = nullptr;
  const std::vector<uint64_t>* allowed_ = nullptr;
  std::vector<char> state_;
  std::vector<char> used_vertex_;
  std::vector<std::array<int, 2>> chosen_;
  std::vector<std::pair<int, int>> scratch_;
};

// Existence-only probe for one configuration size, free of the
// lexicographic contract, so it can branch on the most constrained
// undecided edge first. Runs over edge-index bitmasks and keeps three
// sound prunes: a closure that commits edges with no remaining partner
// to stay uncrossed, the m - 2k quota on uncrossed edges, and
// planarity of the partial planarization (chosen dummy stars plus all
// edges committed uncrossed), which is a subgraph of every
// completion's planarization. Limited to m <= 64; larger graphs go
// straight to the lexicographic search.
class ExistsSearch {
 public:
  ExistsSearch(const Graph& g, GraphClass cls, Deadline& deadline,
               const std::vector<uint64_t>* allowed)
      : g_(g), cls_(cls), deadline_(deadline), m_(g.edge_count()) {
    assert(m_ <= 64);
    indep_.assign(m_, 0);
    for (int a = 0; a < m_; ++a)
      for (int b = 0; b < m_; ++b)
        if (a != b && independent(g.edges()[a], g.edges()[b]))
          indep_[a] |= uint64_t{1} << b;
    if (allowed)
      for (int e = 0; e < m_; ++e) indep_[e] &= (*allowed)[e];
    vertex_edges_.assign(g.vertex_count(), 0);
    for (int e = 0; e < m_; ++e) {
      vertex_edges_[g.edges()[e].u] |= uint64_t{1} << e;
      vertex_edges_[g.edges()[e].v] |= uint64_t{1} << e;
    }
    all_ = m_ == 64 ? ~uint64_t{0} : (uint64_t{1} << m_) - 1;
    base_ = all_;
    for (int e = 0; e < m_; ++e)
      if (!indep_[e]) base_ &= ~(uint64_t{1} << e);
  }

  bool exists(int k) {
    if (2 * k > m_) return false;
    k_ = k;
    chosen_.clear();
    crossed_ = 0;
    return dfs(all_, base_);
  }

 private:
  static bool independent(const VertexPair& a, const VertexPair& b) {
    return a.u != b.u && a.u != b.v && a.v != b.u && a.v != b.v;
  }

  // Edges whose both endpoints lie among the four endpoints of the
  // pair (a, b); crossing any of them would share two vertices.
  uint64_t two_shared(int a, int b) const {
    const VertexPair &ea = g_.edges()[a], &eb = g_.edges()[b];
    uint64_t inside = 0;
    uint64_t touch[4] = {vertex_edges_[ea.u], vertex_edges_[ea.v],
                         vertex_edges_[eb.u], vertex_edges_[eb.v]};
    for (int i = 0; i < 4; ++i)
      for (int j = i + 1; j < 4; ++j) inside |= touch[i] & touch[j];
    return inside;
  }

  bool nic_ok(int a, int b) const {
    CrossingPair cand(g_.edges()[a], g_.edges()[b]);
    for (auto [pa, pb] : chosen_) {
      CrossingPair prev(g_.edges()[pa], g_.edges()[pb]);
      if (shared_endpoints(prev, cand) > 1) return false;
    }
    return true;
  }

  bool planar_with_stars(uint64_t edge_mask) {
    scratch_.clear();
    for (int e = 0; e < m_; ++e)
      if (edge_mask & (uint64_t{1} << e))
        scratch_.push_back({g_.edges()[e].u, g_.edges()[e].v});
    int n = g_.vertex_count();
    for (std::size_t j = 0; j < chosen_.size(); ++j) {
      int d = n + static_cast<int>(j);
      auto [a, b] = chosen_[j];
      scratch_.push_back({g_.edges()[a].u, d});
      scratch_.push_back({g_.edges()[a].v, d});
      scratch_.push_back({g_.edges()[b].u, d});
      scratch_.push_back({g_.edges()[b].v, d});
    }
    return is_planar_edges(n + static_cast<int>(chosen_.size()), scratch_);
  }

  // undecided: edges not yet committed either way. pairable: undecided
  // edges that may still be crossed. uncrossed: edges committed to
  // stay, tracked as all_ minus undecided minus crossed. Planarity of
  // the partial is tested once per node on entry, so branches skip
  // their own test and rely on the child's.
  bool dfs(uint64_t undecided, uint64_t pairable) {
    deadline_.tick();
    const int j = static_cast<int>(chosen_.size());
    const uint64_t uncrossed = all_ & ~undecided & ~crossed_;

    if (j == k_) return planar_with_stars(uncrossed | undecided);

    // closure: an edge with no remaining partner stays uncrossed
    for (;;) {
      uint64_t still = 0;
      for (uint64_t rest = pairable; rest;) {
        int e = std::countr_zero(rest);
        rest &= rest - 1;
        if (pairable & indep_[e]) still |= uint64_t{1} << e;
      }
      if (still == pairable) break;
      pairable = still;
    }

    if (std::popcount(pairable) < 2 * (k_ - j)) return false;
    const uint64_t forced = undecided & ~pairable;
    const int quota = m_ - 2 * k_;
    if (std::popcount(uncrossed | forced) > quota) return false;
    if (!planar_with_stars(uncrossed | forced)) return false;

    // branch on the pairable edge with the fewest partners
    int best = -1, best_count = m_ + 1;
    for (uint64_t rest = pairable; rest;) {
      int e = std::countr_zero(rest);
      rest &= rest - 1;
      int c = std::popcount(pairable & indep_[e]);
      if (c < best_count) {
        best = e;
        best_count = c;
      }
    }
    assert(best >= 0);
    const uint64_t bit = uint64_t{1} << best;

    for (uint64_t rest = pairable & indep_[best]; rest;) {
      int f = std::countr_zero(rest);
      rest &= rest - 1;
      if (cls_ == GraphClass::nic_planar && !nic_ok(best, f)) continue;
      uint64_t fbit = uint64_t{1} << f;
      uint64_t next_pairable = pairable & ~bit & ~fbit;
      if (cls_ == GraphClass::ic_planar) {
        const VertexPair &eb = g_.edges()[best], &ef = g_.edges()[f];
        next_pairable &= ~(vertex_edges_[eb.u] | vertex_edges_[eb.v] |
                           vertex_edges_[ef.u] | vertex_edges_[ef.v]);
      } else if (cls_ == GraphClass::nic_planar) {
        next_pairable &= ~two_shared(best, f);
      }
      chosen_.push_back({best, f});
      crossed_ |= bit | fbit;
      bool ok = dfs(undecided & ~bit & ~fbit, next_pairable);
      crossed_ &= ~(bit | fbit);
      chosen_.pop_back();
      if (ok) return true;
    }

    return dfs(undecided & ~bit, pairable & ~bit);
  }

  const Graph& g_;
  GraphClass cls_;
  Deadline& deadline_;
  int m_;
  int k_ = 0;
  uint64_t all_ = 0, base_ = 0, crossed_ = 0;
  std::vector<uint64_t> indep_, vertex_edges_;
  std::vector<std::array<int, 2>> chosen_;
  std::vector<std::pair<int, int>> scratch_;
};

// Feasibility screen for one configuration size. A size-k
// configuration lets one edge per pair be deleted so that the rest is
// planar (in the planarization, drop the deleted edge's two star edges
// and contract the dummy onto a surviving endpoint), so level k is
// dead unless some k-edge deletion planarizes g. The same argument
// deletes any single crossed edge plus one edge from every other pair;
// applied to both edges of one pair it shows each edge of a crossing
// must lie in some planarizing deletion set that omits its partner.
// The scan therefore records, per ordered pair (e, f), whether a
// planarizing set contains e but not f; edges and pairs that never
// occur that way are barred from the level. Enumeration is skipped
// when C(m, k) is too large.
struct LevelFilter {
  bool enumerated = false;
  bool feasible = false;
  std::vector<char> crossable;
  std::vector<uint64_t> allowed;  // partner masks, only when m <= 64
};

inline LevelFilter filter_level(const Graph& g, int k, Deadline& deadline) {
  constexpr long long kMaxSubsets = 1'500'000;
  const int n = g.vertex_count();
  const int m = g.edge_count();

  LevelFilter out;
  out.crossable.assign(m, 0);
  if (k < 0 || 2 * k > m) return out;  // not enumerated, caller searches anyway

  long long subsets = 1;
  for (int i = 0; i < k; ++i) {
    subsets = subsets * (m - i) / (i + 1);
    if (subsets > kMaxSubsets) return out;
  }

  out.enumerated = true;
  if (m - k > 3 * n - 6) return out;  // no k-edge deletion can reach planar

  const bool track_pairs = m <= 64;
  const uint64_t full = m >= 64 ? ~uint64_t{0} : (uint64_t{1} << m) - 1;
  std::vector<uint64_t> seen;  // seen[e] bit f: feasible set with e, without f
  if (track_pairs) seen.assign(m, 0);

  std::vector<int> pick(k);
  for (int i = 0; i < k; ++i) pick[i] = i;
  std::vector<char> drop(m, 0);
  std::vector<std::pair<int, int>> edges;
  edges.reserve(m);
  for (;;) {
    deadline.tick();
    uint64_t pick_mask = 0;
    for (int i : pick) {
      drop[i] = 1;
      if (track_pairs) pick_mask |= uint64_t{1} << i;
    }
    edges.clear();
    for (int e = 0; e < m; ++e)
      if (!drop[e]) edges.push_back({g.edges()[e].u, g.edges()[e].v});
    if (is_planar_edges(n, edges)) {
      out.feasible = true;
      for (int i : pick) out.crossable[i] = 1;
      if (track_pairs)
        for (int i : pick) seen[i] |= full & ~pick_mask;
    }
    for (int i : pick) drop[i] = 0;
    int i = k - 1;
    while (i >= 0 && pick[i] == m - k + i) --i;
    if (i < 0) break;
    ++pick[i];
    for (int j = i + 1; j < k; ++j) pick[j] = pick[j - 1] + 1;
  }

  if (track_pairs && out.feasible) {
    out.allowed.assign(m, 0);
    for (int e = 0; e < m; ++e)
      for (uint64_t rest = seen[e]; rest;) {
        int f = std::countr_zero(rest);
        rest &= rest - 1;
        if (seen[f] >> e & 1) out.allowed[e] |= uint64_t{1} << f;
      }
  }
  return out;
}

// Upper limit on configuration size for the class, from counting
// arguments. Every pair uses two private edges, so k <= m/2. The 4k
// dummy-star edges of a planar planarization form a simple bipartite
// planar subgraph (dummies vs. host vertices), so 4k <= 2(n+k)-4,
// i.e. k <= n-2, for every class. IC pairs use four private vertices
// (k <= n/4); NIC pairs use six private vertex 2-subsets, since two
// pairs sharing a 2-subset would share two vertices (6k <= C(n,2)).
inline int max_config_size(int n, int m, GraphClass cls) {
  int cap = std::min(m / 2, std::max(0, n - 2));
  switch (cls) {
    case GraphClass::planar: return 0;
    case GraphClass::ic_planar: return std::min(cap, n / 4);
    case GraphClass::nic_planar:
      return std::min(cap, (n * (n - 1) / 2) / 6);
    case GraphClass::one_planar: return cap;
  }
  return cap;
}

}  // namespace detail

namespace detail {

inline std::optional<Witness> find_witness_impl(const Graph& g, GraphClass cls,
                                                Deadline& deadline) {
  if (is_planar(g).planar)
    return planarize(g, CrossingConfiguration{cls, {}});
  if (cls == GraphClass::planar) return std::nullopt;

  const int n = g.vertex_count();
  const int m = g.edge_count();
  if (exceeds_class_capacity(n, m, cls)) return std::nullopt;

  ConfigSearch search(g, cls, deadline);
  const int k_lo = std::max(1, m - (3 * n - 6));
  const int k_hi = max_config_size(n, m, cls);
  for (int k = k_lo; k <= k_hi; ++k) {
    LevelFilter filter = filter_level(g, k, deadline);
    if (filter.enumerated && !filter.feasible) continue;
    const std::vector<char>* mask =
        filter.enumerated ? &filter.crossable : nullptr;
    const std::vector<uint64_t>* partners =
        filter.allowed.empty() ? nullptr : &filter.allowed;
    if (m <= 64 && !ExistsSearch(g, cls, deadline, partners).exists(k))
      continue;
    if (auto pairs = search.find_exact(k, mask, partners))
      return planarize(g, CrossingConfiguration{cls, std::move(*pairs)});
  }
  return std::nullopt;
}

inline std::vector<CrossingConfiguration> enumerate_configs_impl(
    const Graph& g, GraphClass cls, Deadline& deadline) {
  std::vector<CrossingConfiguration> out;
  if (is_planar(g).planar) out.push_back(CrossingConfiguration{cls, {}});
  if (cls == GraphClass::planar) return out;

  ConfigSearch search(g, cls, deadline);
  std::vector<std::vector<CrossingPair>> found;
  search.census(found);
  for (auto& pairs : found)
    out.push_back(CrossingConfiguration{cls, std::move(pairs)});
  std::sort(out.begin(), out.end(), config_less);
  return out;
}

}  // namespace detail

/// Smallest-k witness that g belongs to cls: iterative deepening over
// configuration size, depth-first in lexicographic order within each
// size, so the result is deterministic (minimum k, then least config).
inline std::optional<Witness> find_witness(
    const Graph& g, GraphClass cls, const SearchBudget& budget = {}) {
  detail::Deadline deadline(budget, "find_witness");
  return detail::find_witness_impl(g, cls, deadline);
}

inline bool is_member(const Graph& g, GraphClass cls,
                      const SearchBudget& budget = {}) {
  return find_witness(g, cls, budget).has_value();
}

// Complete census: every valid configuration whose planarization is
// planar, sorted by size then lexicographically. Exponential; meant
// for small graphs. No capacity fast path here: the census is the
// ground truth the fast paths are checked against.
inline std::vector<CrossingConfiguration> enumerate_configs(
    const Graph& g, GraphClass cls, const SearchBudget& budget = {}) {
  detail::Deadline deadline(budget, "enumerate_configs");
  return detail::enumerate_configs_impl(g, cls, deadline);
}

}  // namespace planarch
