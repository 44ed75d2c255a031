#pragma once

#include <algorithm>
#include <cassert>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "graph.hpp"

namespace planarch {

enum class PlanarityReason {
  algorithm,   // decided by the left-right test (or a size rule it subsumes)
  edge_bound,  // rejected because m > 3n - 6
};

struct PlanarityVerdict {
  bool planar = true;
  PlanarityReason reason = PlanarityReason::algorithm;
};

namespace detail {

// Left-right planarity test (Brandes' formulation of de Fraysseix,
// de Mendez and Rosenstiehl). Two DFS passes: the first orients the
// graph and computes lowpoints, the second maintains a stack of
// conflict pairs of back-edge intervals and fails exactly when some
// pair of return edges can be embedded on neither side.
//
// Verdict only; no embedding is extracted. Both passes are iterative,
// so deep graphs cannot overflow the call stack. The instance is
// reusable: buffers grow but are never reallocated between runs, which
// matters to the search loops that test thousands of small graphs.
class LeftRightTest {
 public:
  bool run(int n, const std::vector<std::pair<int, int>>& edge_list) {
    n_ = n;
    int m = static_cast<int>(edge_list.size());
    if (static_cast<int>(adj_.size()) < n) adj_.resize(n);
    if (static_cast<int>(out_.size()) < n) out_.resize(n);
    for (int v = 0; v < n; ++v) {
      adj_[v].clear();
      out_[v].clear();
    }
    for (int i = 0; i < m; ++i) {
      auto [a, b] = edge_list[i];
      adj_[a].push_back({b, i});
      adj_[b].push_back({a, i});
    }
    oriented_.assign(m, 0);
    efrom_.clear();
    eto_.clear();
    lowpt_.clear();
    lowpt2_.clear();
    nesting_.clear();
    height_.assign(n, -1);
    parent_edge_.assign(n, -1);
    roots_.clear();
    stack_.clear();

    idx_.assign(n, 0);
    pending_.assign(n, -1);
    for (int v = 0; v < n_; ++v)
      if (height_[v] == -1) {
        height_[v] = 0;
        roots_.push_back(v);
        orient_from(v);
      }

    for (int v = 0; v < n; ++v)
      std::stable_sort(out_[v].begin(), out_[v].end(), [&](int a, int b) {
        return nesting_[a] < nesting_[b];
      });

    int md = static_cast<int>(efrom_.size());
    ref_.assign(md, -1);
    lowpt_edge_.assign(md, -1);
    stack_bottom_.assign(md, 0);
    next_.assign(n_, 0);
    resume_.assign(n_, 0);
    for (int r : roots_) {
      assert(stack_.empty());
      if (!test_from(r)) return false;
    }
    return true;
  }

 private:
  struct Interval {
    int low = -1;
    int high = -1;
    bool empty() const { return low == -1 && high == -1; }
  };

  struct ConflictPair {
    Interval left, right;
  };

  int make_edge(int from, int to) {
    int id = static_cast<int>(efrom_.size());
    efrom_.push_back(from);
    eto_.push_back(to);
    lowpt_.push_back(0);
    lowpt2_.push_back(0);
    nesting_.push_back(0);
    out_[from].push_back(id);
    return id;
  }

  // First pass: orient each undirected edge once (tree or back edge),
  // compute lowpt / lowpt2 per oriented edge, and fold the children's
  // lowpoints into the parent edge.
  void orient_from(int root) {
    auto& todo = todo_;
    auto& idx = idx_;
    auto& pending = pending_;
    todo.clear();
    todo.push_back(root);
    while (!todo.empty()) {
      int v = todo.back();
      todo.pop_back();
      bool descended = false;
      while (idx[v] < static_cast<int>(adj_[v].size())) {
        auto [w, ue] = adj_[v][idx[v]];
        int eid;
        if (pending[v] != -1) {
          eid = pending[v];
          pending[v] = -1;
        } else {
          if (oriented_[ue]) {
            ++idx[v];
            continue;
          }
          oriented_[ue] = 1;
          eid = make_edge(v, w);
          lowpt_[eid] = lowpt2_[eid] = height_[v];
          if (height_[w] == -1) {
            parent_edge_[w] = eid;
            height_[w] = height_[v] + 1;
            pending[v] = eid;
            todo.push_back(v);
            todo.push_back(w);
            descended = true;
            break;
          }
          lowpt_[eid] = height_[w];
        }
        nesting_[eid] = 2 * lowpt_[eid];
        if (lowpt2_[eid] < height_[v]) ++nesting_[eid];  // chordal
        int pe = parent_edge_[v];
        if (pe != -1) {
          if (lowpt_[eid] < lowpt_[pe]) {
            lowpt2_[pe] = std::min(lowpt_[pe], lowpt2_[eid]);
            lowpt_[pe] = lowpt_[eid];
          } else if (lowpt_[eid] > lowpt_[pe]) {
            lowpt2_[pe] = std::min(lowpt2_[pe], lowpt_[eid]);
          } else {
            lowpt2_[pe] = std::min(lowpt2_[pe], lowpt2_[eid]);
          }
        }
        ++idx[v];
      }
      (void)descended;
    }
  }

  bool conflicting(const Interval& i, int b) const {
    return !i.empty() && lowpt_[i.high] > lowpt_[b];
  }

  int lowest(const ConflictPair& p) const {
    if (p.left.empty()) return lowpt_[p.right.low];
    if (p.right.empty()) return lowpt_[p.left.low];
    return std::min(lowpt_[p.left.low], lowpt_[p.right.low]);
  }

  void set_ref(int edge, int value) {
    if (edge != -1) ref_[edge] = value;
  }

  // Core constraint step: the return edges of ei must share a side,
  // and everything conflicting with ei must go to the other side.
  bool add_constraints(int ei, int e) {
    ConflictPair p;
    // merge return edges of ei into p.right
    while (static_cast<int>(stack_.size()) > stack_bottom_[ei]) {
      ConflictPair q = stack_.back();
      stack_.pop_back();
      if (!q.left.empty()) std::swap(q.left, q.right);
      if (!q.left.empty()) return false;
      if (lowpt_[q.right.low] > lowpt_[e]) {
        if (p.right.empty())
          p.right.high = q.right.high;
        else
          ref_[p.right.low] = q.right.high;
        p.right.low = q.right.low;
      } else {
        ref_[q.right.low] = lowpt_edge_[e];
      }
    }
    // merge conflicting return edges of ei's earlier siblings into p.left
    while (!stack_.empty() && (conflicting(stack_.back().left, ei) ||
                               conflicting(stack_.back().right, ei))) {
      ConflictPair q = stack_.back();
      stack_.pop_back();
      if (conflicting(q.right, ei)) std::swap(q.left, q.right);
      if (conflicting(q.right, ei)) return false;
      set_ref(p.right.low, q.right.high);
      if (q.right.low != -1) p.right.low = q.right.low;
      if (p.left.empty())
        p.left.high = q.left.high;
      else
        ref_[p.left.low] = q.left.high;
      p.left.low = q.left.low;
    }
    if (!p.left.empty() || !p.right.empty()) stack_.push_back(p);
    return true;
  }

  // After finishing v, forget constraints that ended at its parent u.
  void remove_back_edges(int e) {
    int u = efrom_[e];
    while (!stack_.empty() && lowest(stack_.back()) == height_[u])
      stack_.pop_back();
    if (!stack_.empty()) {
      ConflictPair p = stack_.back();
      stack_.pop_back();
      while (p.left.high != -1 && eto_[p.left.high] == u)
        p.left.high = ref_[p.left.high];
      if (p.left.high == -1 && p.left.low != -1) {
        ref_[p.left.low] = p.right.low;
        p.left.low = -1;
      }
      while (p.right.high != -1 && eto_[p.right.high] == u)
        p.right.high = ref_[p.right.high];
      if (p.right.high == -1 && p.right.low != -1) {
        ref_[p.right.low] = p.left.low;
        p.right.low = -1;
      }
      stack_.push_back(p);
    }
    if (lowpt_[e] < height_[u]) {  // e has a return edge of its own
      int hl = stack_.empty() ? -1 : stack_.back().left.high;
      int hr = stack_.empty() ? -1 : stack_.back().right.high;
      if (hl != -1 && (hr == -1 || lowpt_[hl] > lowpt_[hr]))
        ref_[e] = hl;
      else
        ref_[e] = hr;
    }
  }

  // Second pass over the nesting-ordered forest.
  bool test_from(int root) {
    auto& todo = todo_;
    todo.clear();
    todo.push_back(root);
    while (!todo.empty()) {
      int v = todo.back();
      todo.pop_back();
      int pe = parent_edge_[v];
      bool descended = false;
      while (next_[v] < static_cast<int>(out_[v].size())) {
        int eid = out_[v][next_[v]];
        int w = eto_[eid];
        if (resume_[v]) {
          resume_[v] = 0;  // tree edge eid just finished underneath
        } else {
          stack_bottom_[eid] = static_cast<int>(stack_.size());
          if (eid == parent_edge_[w]) {
            resume_[v] = 1;
            todo.push_back(v);
            todo.push_back(w);
            descended = true;
            break;
          }
          lowpt_edge_[eid] = eid;
          stack_.push_back({Interval{}, Interval{eid, eid}});
        }
        if (lowpt_[eid] < height_[v]) {
          assert(pe != -1);
          if (next_[v] == 0)
            lowpt_edge_[pe] = lowpt_edge_[eid];
          else if (!add_constraints(eid, pe))
            return false;
        }
        ++next_[v];
      }
      if (!descended && pe != -1) remove_back_edges(pe);
    }
    return true;
  }

  int n_ = 0;
  std::vector<std::vector<std::pair<int, int>>> adj_;
  std::vector<char> oriented_;
  std::vector<int> efrom_, eto_;
  std::vector<int> lowpt_, lowpt2_, nesting_, ref_, lowpt_edge_, stack_bottom_;
  std::vector<int> height_, parent_edge_, next_;
  std::vector<char> resume_;
  std::vector<std::vector<int>> out_;
  std::vector<int> roots_, todo_, pending_, idx_;
  std::vector<ConflictPair> stack_;
};

inline PlanarityVerdict check_planar_edges(
    int n, const std::vector<std::pair<int, int>>& edges) {
  int m = static_cast<int>(edges.size());
  if (n < 5 || m < 9) return {true, PlanarityReason::algorithm};
  if (m > 3 * n - 6) return {false, PlanarityReason::edge_bound};
  thread_local LeftRightTest test;
  return {test.run(n, edges), PlanarityReason::algorithm};
}

inline bool is_planar_edges(int n,
                            const std::vector<std::pair<int, int>>& edges) {
  return check_planar_edges(n, edges).planar;
}

}  // namespace detail

// Planarity of g. The verdict records whether the answer came from the
// full left-right test or from the m > 3n - 6 rejection alone.
inline PlanarityVerdict is_planar(const Graph& g) {
  std::vector<std::pair<int, int>> edges;
  edges.reserve(g.edge_count());
  for (const auto& e : g.edges()) edges.push_back({e.u, e.v});
  return detail::check_planar_edges(g.vertex_count(), edges);
}

// How many crossing pairs any drawing needs at least: each crossing
// replaced by a dummy vertex must bring the planarization under the
// Euler bound, so k >= m - (3n - 6). Never negative.
inline int min_crossing_pairs_lower_bound(int n, int m) {
  if (n < 3) throw Unsupported("Euler bound needs n >= 3");
  if (m < 0) throw Unsupported("negative edge count");
  return std::max(0, m - (3 * n - 6));
}

}  // namespace planarch
