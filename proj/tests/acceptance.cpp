// End-to-end acceptance run. Each numbered check prints one PASS/FAIL
// line; the process exits with the number of failures. Expects the
// CLI binary's path as argv[1].
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <regex>
#include <string>
#include <sys/wait.h>
#include <vector>

#include "json.hpp"
#include "oracles.hpp"
#include "planarch/extremal.hpp"
#include "planarch/graph.hpp"
#include "planarch/graph6.hpp"
#include "planarch/planarity.hpp"
#include "planarch/variants.hpp"

using json = nlohmann::json;
using namespace planarch;

namespace {

std::string cli_path;

struct RunResult {
  int status = -1;
  std::string out;
};

RunResult run_cli(const std::string& args) {
  const std::string cmd = "\"" + cli_path + "\" " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  RunResult r;
  if (!pipe) return r;
  char buf[4096];
  for (std::size_t got; (got = fread(buf, 1, sizeof buf, pipe)) > 0;)
    r.out.append(buf, got);
  const int rc = pclose(pipe);
  r.status = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
  return r;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
      .count();
}

int failures = 0;

void report(int index, const char* label, bool ok,
            const std::string& detail = "") {
  std::printf("[%s] %d. %s%s%s\n", ok ? "PASS" : "FAIL", index, label,
              detail.empty() ? "" : ": ", detail.c_str());
  std::fflush(stdout);
  if (!ok) ++failures;
}

// 1. The extremal family on 5..9 vertices: exactly 3n-5 edges, member
// of the independent-crossing class, and maximal (every non-edge of
// G_8, all nine of them, rejected), inside five minutes.
void criterion_family() {
  const auto t0 = std::chrono::steady_clock::now();
  bool ok = true;
  std::string detail;

  RunResult res = run_cli("verify 5 9 --json");
  ok = res.status == 0;
  if (ok) {
    json r = json::parse(res.out, nullptr, false);
    ok = !r.is_discarded() && r["passed"] == true && r["complete"] == true &&
         r["reports"].size() == 5;
    if (ok)
      for (const auto& rep : r["reports"]) {
        const int n = rep["n"];
        ok = ok && rep["edges"] == 3 * n - 5 && rep["ic_planar"] == true &&
             rep["maximal"] == true && rep["passed"] == true;
      }
  }
  Graph g8 = generate_gn(8);
  ok = ok && g8.non_edges().size() == 9;
  ok = ok && is_maximal(g8, GraphClass::ic_planar).addable.empty();
  const double elapsed = seconds_since(t0);
  ok = ok && elapsed < 300.0;
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.1f s", elapsed);
  report(1, "family on 5..9 vertices: 3n-5 edges, member, maximal", ok, buf);
}

// 2. The census of the family collapses to single crossings of the
// pole edge with a consecutive circle edge; the excluded shapes never
// appear.
void criterion_census() {
  bool ok = true;
  for (int n = 6; n <= 8 && ok; ++n) {
    Graph g = generate_gn(n);
    auto census = enumerate_configs(g, GraphClass::ic_planar);
    CensusSummary s = summarize_gn_census(n, census);
    ok = s.shape_ok && s.total == n - 2;
    const int circle = n - 2;
    for (const auto& config : census) {
      ok = ok && config.crossing_count() == 1;
      if (!ok) break;
      const CrossingPair& p = config.pairs[0];
      ok = ok && classify_gn_pair(n, p) == GnPairShape::pq_circle;
      // the circle edge joins consecutive circle vertices
      ok = ok && (p.e1.v - p.e1.u == 1 ||
                  (p.e1.u == 0 && p.e1.v == circle - 1));
      ok = ok && s.circle_circle_pairs == 0 && s.pole_circle_pairs == 0 &&
           s.pole_pole_pairs == 0 && s.other_pairs == 0;
    }
  }
  report(2, "family census: n-2 single pole-edge crossings, no excluded shapes",
         ok);
}

// 3. Complete-graph verdicts, each within ten seconds.
void criterion_known_graphs() {
  auto complete = [](int n) {
    std::vector<VertexPair> edges;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
    return graph_from_edges(n, std::move(edges));
  };
  bool ok = true;
  double worst = 0;
  auto timed = [&](bool expect, const Graph& g, GraphClass cls) {
    const auto t0 = std::chrono::steady_clock::now();
    const bool got = is_member(g, cls);
    const double secs = seconds_since(t0);
    worst = std::max(worst, secs);
    ok = ok && got == expect && secs < 10.0;
  };
  timed(true, complete(5), GraphClass::ic_planar);
  timed(false, complete(6), GraphClass::nic_planar);
  timed(true, complete(6), GraphClass::one_planar);
  timed(false, complete(7), GraphClass::one_planar);
  char buf[64];
  std::snprintf(buf, sizeof buf, "worst %.3f s", worst);
  report(3, "K5/K6/K7 verdicts inside 10 s each", ok, buf);
}

// 4. Density formulas reproduce independently reduced fractions at
// every n, with the four published spot values.
void criterion_density() {
  using F = DensityFamily;
  bool ok = true;
  for (int n = 5; n <= 30 && ok; ++n) {
    ok = ok &&
         density_bound(F::one_planar, BoundKind::upper, n) ==
             Rational(4 * n - 8, 1) &&
         density_bound(F::one_planar, BoundKind::lower, n) ==
             Rational(20 * n - 30, 9) &&
         density_bound(F::nic_planar, BoundKind::upper, n) ==
             Rational(18 * n - 36, 5) &&
         density_bound(F::nic_planar, BoundKind::lower, n) ==
             Rational(16 * n - 32, 5) &&
         density_bound(F::ic_planar, BoundKind::upper, n) ==
             Rational(13 * n - 24, 4) &&
         density_bound(F::ic_planar, BoundKind::lower, n) ==
             Rational(3 * n - 5, 1) &&
         density_bound(F::outer_one_planar, BoundKind::upper, n) ==
             Rational(5 * n - 4, 2) &&
         density_bound(F::outer_one_planar, BoundKind::lower, n) ==
             Rational(11 * n - 18, 5);
  }
  ok = ok && density_bound(F::ic_planar, BoundKind::upper, 8) == Rational(20);
  ok = ok && density_bound(F::ic_planar, BoundKind::lower, 8) == Rational(19);
  ok = ok && density_bound(F::nic_planar, BoundKind::upper, 12) == Rational(36);
  ok = ok && density_bound(F::one_planar, BoundKind::upper, 10) == Rational(32);
  report(4, "density formulas exact, spot values 20/19/36/32", ok);
}

// 5. Exhaustive agreement on every graph with up to six vertices:
// membership per class against the unpruned enumerator, planarity
// against the subdivision oracle.
void criterion_oracles() {
  const int expected_counts[] = {0, 1, 2, 4, 11, 34, 156};
  bool ok = true;
  long graphs = 0, checks = 0;
  for (int n = 1; n <= 6 && ok; ++n) {
    auto corpus = oracles::nonisomorphic_graphs(n);
    ok = static_cast<int>(corpus.size()) == expected_counts[n];
    for (const Graph& g : corpus) {
      if (!ok) break;
      ++graphs;
      ok = is_planar(g).planar == oracles::planar(g);
      ++checks;
      for (GraphClass cls : all_graph_classes) {
        oracles::Brute brute(g, cls);
        brute.run();
        ok = ok && is_member(g, cls) == brute.member();
        ++checks;
        if (!ok) break;
      }
    }
  }
  char buf[96];
  std::snprintf(buf, sizeof buf, "%ld graphs, %ld verdicts", graphs, checks);
  report(5, "exhaustive n<=6 agreement with reference oracles", ok, buf);
}

// 6. Randomized properties: the class chain is monotone, every
// positive verdict carries a witness that revalidates, the witness
// size never beats the counting lower bound, and graph6 round-trips.
void criterion_properties() {
  bool ok = true;
  std::mt19937 rng(271828);
  int positives = 0;
  for (int iter = 0; iter < 500 && ok; ++iter) {
    const int n = 3 + static_cast<int>(rng() % 6);
    Graph g = rng() % 2 ? oracles::random_graph_any_m(rng, n)
                        : oracles::random_graph(
                              rng, n, 0.1 + 0.8 * (rng() % 1000) / 999.0);
    bool previous = false;  // no premise ahead of the first class
    for (GraphClass cls :
         {GraphClass::planar, GraphClass::ic_planar, GraphClass::nic_planar,
          GraphClass::one_planar}) {
      auto w = find_witness(g, cls);
      if (previous && !w) ok = false;  // chain must be monotone
      previous = w.has_value();
      if (w) {
        ++positives;
        ok = ok && validate_witness(g, *w, cls);
        ok = ok && w->crossing_count() >=
                       min_crossing_pairs_lower_bound(g.vertex_count(),
                                                      g.edge_count());
      }
    }
  }
  int roundtrips = 0;
  for (int iter = 0; iter < 1000 && ok; ++iter) {
    const int n = 1 + static_cast<int>(rng() % 80);
    Graph g = oracles::random_graph(rng, n, (rng() % 1000) / 999.0);
    ok = parse_graph6(emit_graph6(g)) == g;
    ++roundtrips;
  }
  char buf[96];
  std::snprintf(buf, sizeof buf, "%d positive verdicts, %d round-trips",
                positives, roundtrips);
  report(6, "random chain, witness, prune, and round-trip properties", ok,
         buf);
}

// 7. Byte-identical machine reports across runs, timing aside.
void criterion_determinism() {
  RunResult a = run_cli("verify 5 8 --json");
  RunResult b = run_cli("verify 5 8 --json");
  static const std::regex timing("\"timing_ms\":[0-9.eE+-]+");
  const std::string sa = std::regex_replace(a.out, timing, "T");
  const std::string sb = std::regex_replace(b.out, timing, "T");
  const bool ok = a.status == 0 && b.status == 0 && !sa.empty() && sa == sb;
  report(7, "reports identical across runs once timing is masked", ok);
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::fprintf(stderr, "usage: acceptance <path-to-cli>\n");
    return 64;
  }
  cli_path = argv[1];
  criterion_family();
  criterion_census();
  criterion_known_graphs();
  criterion_density();
  criterion_oracles();
  criterion_properties();
  criterion_determinism();
  std::printf("%s: %d of 7 criteria failed\n",
              failures ? "FAILURE" : "SUCCESS", failures);
  return failures;
}
