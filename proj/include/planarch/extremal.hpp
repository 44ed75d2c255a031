#pragma once

#include <algorithm>
#include <array>
#include <string>
#include <vector>

#include "errors.hpp"
#include "graph.hpp"
#include "rational.hpp"
#include "variants.hpp"

namespace planarch {

// The dense witness family: vertices 0..n-3 form a circle, the two
// poles p = n-2 and q = n-1 are adjacent to every circle vertex and to
// each other. 3n-5 edges; G_5 is K5. The labeling (circle first, then
// p, then q) is fixed so graph6 output is byte-reproducible.
inline Graph generate_gn(int n) {
  if (n < 5) throw Unsupported("G_n needs n >= 5");
  const int c = n - 2;  // circle length
  const int p = n - 2, q = n - 1;
  std::vector<VertexPair> edges;
  edges.reserve(3 * n - 5);
  for (int i = 0; i < c; ++i) edges.emplace_back(i, (i + 1) % c);
  for (int i = 0; i < c; ++i) {
    edges.emplace_back(i, p);
    edges.emplace_back(i, q);
  }
  edges.emplace_back(p, q);
  return graph_from_edges(n, std::move(edges));
}

inline Graph generate_complete(int n) {
  if (n < 1) throw Unsupported("complete graph needs n >= 1");
  std::vector<VertexPair> edges;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) edges.emplace_back(a, b);
  return graph_from_edges(n, std::move(edges));
}

inline Graph generate_cycle(int n) {
  if (n < 3) throw Unsupported("cycle needs n >= 3");
  std::vector<VertexPair> edges;
  for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
  return graph_from_edges(n, std::move(edges));
}

// Rows of the density table. The planar class has no row; the
// outer-1-planar family is bounds-only (no decider in this library).
enum class DensityFamily {
  one_planar,
  nic_planar,
  ic_planar,
  outer_one_planar,
};

inline constexpr std::array<DensityFamily, 4> all_density_families = {
    DensityFamily::one_planar, DensityFamily::nic_planar,
    DensityFamily::ic_planar, DensityFamily::outer_one_planar};

inline const char* to_string(DensityFamily f) {
  switch (f) {
    case DensityFamily::one_planar: return "1-planar";
    case DensityFamily::nic_planar: return "nic-planar";
    case DensityFamily::ic_planar: return "ic-planar";
    case DensityFamily::outer_one_planar: return "outer-1-planar";
  }
  return "?";
}

enum class BoundKind { upper, upper_example, lower, lower_example };

inline const char* to_string(BoundKind k) {
  switch (k) {
    case BoundKind::upper: return "upper";
    case BoundKind::upper_example: return "upper_example";
    case BoundKind::lower: return "lower";
    case BoundKind::lower_example: return "lower_example";
  }
  return "?";
}

// Edge counts of maximal members: `upper` bounds every maximal graph
// of the family, `lower` is the sparsest known maximal graph, and the
// *_example kinds are the densities actually attained by published
// example families. Exact rationals; callers floor when they need an
// integer edge count.
inline Rational density_bound(DensityFamily family, BoundKind kind, int n) {
  if (n < 5) throw Unsupported("density bounds start at n = 5");
  const bool upperish =
      kind == BoundKind::upper || kind == BoundKind::upper_example;
  switch (family) {
    case DensityFamily::one_planar:
      if (upperish) return Rational(4) * n - 8;
      if (kind == BoundKind::lower) return Rational(20, 9) * n - Rational(10, 3);
      return Rational(45, 17) * n - Rational(84, 17);
    case DensityFamily::nic_planar:
      if (upperish) return Rational(18, 5) * (n - 2);
      return Rational(16, 5) * (n - 2);
    case DensityFamily::ic_planar:
      if (upperish) return Rational(13, 4) * n - 6;
      return Rational(3) * n - 5;
    case DensityFamily::outer_one_planar:
      if (upperish) return Rational(5, 2) * n - 2;
      return Rational(11, 5) * n - Rational(18, 5);
  }
  throw Unsupported("unknown density family");
}

struct BoundsRow {
  DensityFamily family;
  Rational upper, upper_example, lower, lower_example;
};

inline BoundsRow bounds_row(DensityFamily family, int n) {
  return BoundsRow{family,
                   density_bound(family, BoundKind::upper, n),
                   density_bound(family, BoundKind::upper_example, n),
                   density_bound(family, BoundKind::lower, n),
                   density_bound(family, BoundKind::lower_example, n)};
}

inline std::vector<BoundsRow> all_bounds(int n) {
  std::vector<BoundsRow> rows;
  for (DensityFamily f : all_density_families) rows.push_back(bounds_row(f, n));
  return rows;
}

struct MaximalityReport {
  bool maximal = false;
  std::vector<VertexPair> addable;  // lexicographic
};

// Is g maximal in cls, i.e. no single non-edge can be added while
// staying in the class? Requires g itself to be a member. The whole
// check shares one budget clock.
inline MaximalityReport is_maximal(const Graph& g, GraphClass cls,
                                   const SearchBudget& budget = {}) {
  detail::Deadline deadline(budget, "is_maximal");
  if (!detail::find_witness_impl(g, cls, deadline))
    throw MembershipViolated("graph is not " + std::string(to_string(cls)) +
                             "; maximality is undefined");
  MaximalityReport report;
  for (const auto& e : g.non_edges())
    if (detail::find_witness_impl(g.with_edge(e), cls, deadline))
      report.addable.push_back(e);
  report.maximal = report.addable.empty();
  return report;
}

// Pair shapes relative to G_n's labeling: both edges on the circle,
// a pole spoke against a circle edge, two spokes of opposite poles,
// or the pole edge {p,q} against a circle edge.
enum class GnPairShape {
  pq_circle,
  circle_circle,
  pole_circle,
  pole_pole,
  other,
};

inline GnPairShape classify_gn_pair(int n, const CrossingPair& pair) {
  const int p = n - 2;
  auto pole_ends = [p](const VertexPair& e) {
    return (e.u >= p ? 1 : 0) + (e.v >= p ? 1 : 0);
  };
  int a = pole_ends(pair.e1), b = pole_ends(pair.e2);
  if (a > b) std::swap(a, b);
  if (a == 0 && b == 0) return GnPairShape::circle_circle;
  if (a == 0 && b == 1) return GnPairShape::pole_circle;
  if (a == 0 && b == 2) return GnPairShape::pq_circle;
  if (a == 1 && b == 1) return GnPairShape::pole_pole;
  return GnPairShape::other;
}

// What a census of G_n's IC configurations looks like, checked against
// the predicted shape: exactly n-2 configurations, each a single pair
// crossing {p,q} with a circle edge, and none of the excluded shapes.
struct CensusSummary {
  int total = 0;
  int max_pairs = 0;
  int single_pq_circle = 0;
  int circle_circle_pairs = 0;
  int pole_circle_pairs = 0;
  int pole_pole_pairs = 0;
  int other_pairs = 0;
  bool shape_ok = false;
  std::vector<CrossingConfiguration> configs;
};

inline CensusSummary summarize_gn_census(
    int n, std::vector<CrossingConfiguration> census) {
  CensusSummary s;
  s.total = static_cast<int>(census.size());
  for (const auto& config : census) {
    s.max_pairs = std::max(s.max_pairs, config.crossing_count());
    for (const auto& pair : config.pairs) {
      switch (classify_gn_pair(n, pair)) {
        case GnPairShape::pq_circle: break;
        case GnPairShape::circle_circle: ++s.circle_circle_pairs; break;
        case GnPairShape::pole_circle: ++s.pole_circle_pairs; break;
        case GnPairShape::pole_pole: ++s.pole_pole_pairs; break;
        case GnPairShape::other: ++s.other_pairs; break;
      }
    }
    if (config.crossing_count() == 1 &&
        classify_gn_pair(n, config.pairs[0]) == GnPairShape::pq_circle)
      ++s.single_pq_circle;
  }
  s.shape_ok = s.total == n - 2 && s.max_pairs == 1 &&
               s.single_pq_circle == n - 2 && s.circle_circle_pairs == 0 &&
               s.pole_circle_pairs == 0 && s.pole_pole_pairs == 0 &&
               s.other_pairs == 0;
  s.configs = std::move(census);
  return s;
}

struct LemmaReport {
  int n = 0;
  int edge_count = 0;
  int expected_edges = 0;  // 3n - 5
  bool ic_planar = false;
  bool maximal = false;
  bool census_checked = false;  // shape check applies from n = 6 on
  CensusSummary census;
  bool passed = false;
};

// End-to-end check of the density claim on G_n for each n in range:
// the edge count is 3n-5, the graph is IC-planar and maximal, and for
// n >= 6 every IC configuration is a single {p,q}-circle crossing.
// For n = 5 the census shape is recorded but not enforced: K5 also
// admits crossings that avoid {p,q}. Budget applies per n; running
// out raises BudgetExceeded naming the offending n.
inline std::vector<LemmaReport> verify_lemma(int n_min, int n_max,
                                             const SearchBudget& budget = {}) {
  if (n_min < 5 || n_min > n_max)
    throw Unsupported("verify range needs 5 <= n_min <= n_max");
  std::vector<LemmaReport> reports;
  for (int n = n_min; n <= n_max; ++n) {
    try {
      detail::Deadline deadline(budget, "verify_lemma");
      Graph g = generate_gn(n);
      LemmaReport r;
      r.n = n;
      r.edge_count = g.edge_count();
      r.expected_edges = 3 * n - 5;
      r.ic_planar =
          detail::find_witness_impl(g, GraphClass::ic_planar, deadline)
              .has_value();
      if (r.ic_planar) {
        MaximalityReport mr;
        for (const auto& e : g.non_edges())
          if (detail::find_witness_impl(g.with_edge(e), GraphClass::ic_planar,
                                        deadline))
            mr.addable.push_back(e);
        r.maximal = mr.addable.empty();
      }
      r.census = summarize_gn_census(
          n, detail::enumerate_configs_impl(g, GraphClass::ic_planar, deadline));
      r.census_checked = n >= 6;
      r.passed = r.edge_count == r.expected_edges && r.ic_planar && r.maximal &&
                 (!r.census_checked || r.census.shape_ok);
      reports.push_back(std::move(r));
    } catch (const BudgetExceeded&) {
      throw BudgetExceeded("verify_lemma: budget exhausted at n = " +
                           std::to_string(n));
    }
  }
  return reports;
}

}  // namespace planarch
