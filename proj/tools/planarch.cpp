// planarch: generate, decide, and measure beyond-planar graphs.
//
// Exit codes: 0 positive verdict (member / maximal / all checks pass),
// 1 negative verdict, 2 error (bad arguments, malformed graph6,
// membership violated), 3 wall-clock budget exhausted with the report
// flagged incomplete. Multi-line inputs yield one report per line and
// the worst (largest) code wins.

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "planarch/errors.hpp"
#include "planarch/extremal.hpp"
#include "planarch/graph.hpp"
#include "planarch/graph6.hpp"
#include "planarch/variants.hpp"

namespace {

using ordered_json = nlohmann::ordered_json;
using namespace planarch;

class Timer {
 public:
  double ms() const {
    return std::chrono::duration<double, std::milli>(
               std::chrono::steady_clock::now() - t0_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point t0_ =
      std::chrono::steady_clock::now();
};

SearchBudget make_budget(double seconds) {
  return seconds > 0 ? SearchBudget::of_seconds(seconds)
                     : SearchBudget::none();
}

GraphClass class_from_token(const std::string& token) {
  if (token == "planar") return GraphClass::planar;
  if (token == "ic" || token == "ic-planar") return GraphClass::ic_planar;
  if (token == "nic" || token == "nic-planar") return GraphClass::nic_planar;
  if (token == "1planar" || token == "1-planar")
    return GraphClass::one_planar;
  throw Unsupported("unknown class '" + token +
                    "' (expected planar, ic, nic, or 1planar)");
}

// One graph6 code per line, from the named files or standard input.
// Blank lines and the conventional >>graph6<< prefix are tolerated.
std::vector<std::string> input_lines(const std::vector<std::string>& files) {
  std::vector<std::string> lines;
  auto drain = [&](std::istream& in) {
    std::string line;
    while (std::getline(in, line)) {
      if (!line.empty() && line.back() == '\r') line.pop_back();
      if (line.rfind(">>graph6<<", 0) == 0) line.erase(0, 10);
      if (!line.empty()) lines.push_back(line);
    }
  };
  if (files.empty()) {
    drain(std::cin);
    return lines;
  }
  for (const auto& name : files) {
    std::ifstream in(name);
    if (!in) throw Unsupported("cannot open input file '" + name + "'");
    drain(in);
  }
  return lines;
}

ordered_json edge_json(const VertexPair& e) {
  return ordered_json::array({e.u, e.v});
}

ordered_json pairs_json(const std::vector<CrossingPair>& pairs) {
  ordered_json out = ordered_json::array();
  for (const auto& p : pairs)
    out.push_back(ordered_json::array({edge_json(p.e1), edge_json(p.e2)}));
  return out;
}

std::string pairs_text(const std::vector<CrossingPair>& pairs) {
  if (pairs.empty()) return "(none)";
  std::string out;
  for (const auto& p : pairs) {
    if (!out.empty()) out += ' ';
    out += to_string(p.e1) + "x" + to_string(p.e2);
  }
  return out;
}

ordered_json bound_json(const Rational& r) {
  return ordered_json{{"exact", r.str()}, {"floor", r.floor()}};
}

std::string bound_text(const Rational& r) {
  if (r.is_integer()) return r.str();
  return r.str() + " (floor " + std::to_string(r.floor()) + ")";
}

void print_json(const ordered_json& report) {
  std::cout << report.dump() << '\n';
}

// Failures that concern the whole command, or one input line of a
// multi-line command. JSON mode mirrors the message onto stdout so
// NDJSON consumers see one object per line even for bad lines.
void report_error(bool json, const char* command, const std::string* input,
                  const std::string& message,
                  std::optional<std::size_t> offset = {}) {
  if (json) {
    ordered_json r;
    r["command"] = command;
    if (input) r["input"] = *input;
    r["error"] = message;
    if (offset) r["offset"] = *offset;
    print_json(r);
  }
  std::cerr << "planarch: " << (input ? *input + ": " : "") << message
            << '\n';
}

// Runs `handler` once per input graph, translating per-line failures
// into error reports; the aggregate exit code is the worst line.
template <typename Handler>
int for_each_graph(const std::vector<std::string>& files, bool json,
                   const char* command, Handler&& handler) {
  int rc = 0;
  for (const std::string& line : input_lines(files)) {
    int code;
    try {
      code = handler(parse_graph6(line), line);
    } catch (const FormatError& e) {
      report_error(json, command, &line, e.what(), e.offset);
      code = 2;
    } catch (const BudgetExceeded& e) {
      report_error(json, command, &line, e.what());
      code = 3;
    } catch (const Error& e) {
      report_error(json, command, &line, e.what());
      code = 2;
    }
    rc = std::max(rc, code);
  }
  return rc;
}

int cmd_gen(const std::string& family, int n, bool json) {
  Timer timer;
  Graph g = [&] {
    if (family == "gn") return generate_gn(n);
    if (family == "complete") return generate_complete(n);
    if (family == "cycle") return generate_cycle(n);
    throw Unsupported("unknown family '" + family + "'");
  }();
  const std::string code = emit_graph6(g);
  if (json) {
    ordered_json r;
    r["command"] = "gen";
    r["family"] = family;
    r["n"] = n;
    r["m"] = g.edge_count();
    r["graph6"] = code;
    r["timing_ms"] = timer.ms();
    print_json(r);
  } else {
    std::cout << code << '\n';
  }
  return 0;
}

int cmd_check(GraphClass cls, const std::vector<std::string>& files,
              bool want_witness, bool want_census, bool recheck,
              double budget_s, bool json) {
  return for_each_graph(
      files, json, "check", [&](const Graph& g, const std::string& line) {
        Timer timer;
        bool complete = true;
        std::string budget_msg;
        std::optional<Witness> w;
        try {
          w = find_witness(g, cls, make_budget(budget_s));
        } catch (const BudgetExceeded& e) {
          complete = false;
          budget_msg = e.what();
        }
        std::vector<CrossingConfiguration> census;
        bool have_census = false;
        if (complete && want_census) {
          try {
            census = enumerate_configs(g, cls, make_budget(budget_s));
            have_census = true;
          } catch (const BudgetExceeded& e) {
            complete = false;
            budget_msg = e.what();
          }
        }
        if (complete && recheck && w && !validate_witness(g, *w, cls)) {
          report_error(json, "check", &line, "witness failed revalidation");
          return 2;
        }
        if (json) {
          ordered_json r;
          r["command"] = "check";
          r["class"] = to_string(cls);
          r["input"] = line;
          r["n"] = g.vertex_count();
          r["m"] = g.edge_count();
          r["member"] =
              complete ? ordered_json(w.has_value()) : ordered_json(nullptr);
          if (complete && w) {
            r["crossings"] = w->crossing_count();
            if (want_witness)
              r["witness"] = ordered_json{
                  {"pairs", pairs_json(w->config.pairs)},
                  {"dummies", w->dummies},
                  {"planarization", emit_graph6(w->planarization)}};
            if (recheck) r["recheck"] = "ok";
          }
          if (have_census) {
            r["census_size"] = census.size();
            ordered_json all = ordered_json::array();
            for (const auto& config : census)
              all.push_back(pairs_json(config.pairs));
            r["census"] = std::move(all);
          }
          r["complete"] = complete;
          if (!complete) r["error"] = budget_msg;
          r["timing_ms"] = timer.ms();
          print_json(r);
        } else {
          std::cout << line << "  " << to_string(cls) << ": ";
          if (!complete)
            std::cout << "incomplete (" << budget_msg << ")";
          else if (w)
            std::cout << "member, crossings=" << w->crossing_count();
          else
            std::cout << "non-member";
          std::cout << "  (" << timer.ms() << " ms)\n";
          if (complete && w && want_witness) {
            std::cout << "  witness: " << pairs_text(w->config.pairs)
                      << "  planarization " << emit_graph6(w->planarization)
                      << '\n';
            if (recheck) std::cout << "  recheck: ok\n";
          }
          if (have_census) {
            std::cout << "  census: " << census.size() << " configurations\n";
            for (const auto& config : census)
              std::cout << "    k=" << config.crossing_count() << ": "
                        << pairs_text(config.pairs) << '\n';
          }
        }
        return !complete ? 3 : (w ? 0 : 1);
      });
}

int cmd_maximal(GraphClass cls, const std::vector<std::string>& files,
                double budget_s, bool json) {
  return for_each_graph(
      files, json, "maximal", [&](const Graph& g, const std::string& line) {
        Timer timer;
        bool complete = true;
        std::string budget_msg;
        MaximalityReport rep;
        try {
          rep = is_maximal(g, cls, make_budget(budget_s));
        } catch (const BudgetExceeded& e) {
          complete = false;
          budget_msg = e.what();
        }
        if (json) {
          ordered_json r;
          r["command"] = "maximal";
          r["class"] = to_string(cls);
          r["input"] = line;
          r["n"] = g.vertex_count();
          r["m"] = g.edge_count();
          r["maximal"] =
              complete ? ordered_json(rep.maximal) : ordered_json(nullptr);
          if (complete) {
            ordered_json addable = ordered_json::array();
            for (const auto& e : rep.addable) addable.push_back(edge_json(e));
            r["addable"] = std::move(addable);
          }
          r["complete"] = complete;
          if (!complete) r["error"] = budget_msg;
          r["timing_ms"] = timer.ms();
          print_json(r);
        } else {
          std::cout << line << "  " << to_string(cls) << ": ";
          if (!complete) {
            std::cout << "incomplete (" << budget_msg << ")";
          } else if (rep.maximal) {
            std::cout << "maximal";
          } else {
            std::cout << "not maximal, addable:";
            for (const auto& e : rep.addable) std::cout << ' ' << to_string(e);
          }
          std::cout << "  (" << timer.ms() << " ms)\n";
        }
        return !complete ? 3 : (rep.maximal ? 0 : 1);
      });
}

int cmd_bounds(int n_lo, int n_hi, bool json) {
  if (n_hi < n_lo) throw Unsupported("bounds range needs n_lo <= n_hi");
  for (int n = n_lo; n <= n_hi; ++n) {
    Timer timer;
    const std::vector<BoundsRow> rows = all_bounds(n);
    if (json) {
      ordered_json r;
      r["command"] = "bounds";
      r["n"] = n;
      ordered_json jrows = ordered_json::array();
      for (const auto& row : rows) {
        ordered_json jr;
        jr["family"] = to_string(row.family);
        jr["upper"] = bound_json(row.upper);
        jr["upper_example"] = bound_json(row.upper_example);
        jr["lower"] = bound_json(row.lower);
        jr["lower_example"] = bound_json(row.lower_example);
        jrows.push_back(std::move(jr));
      }
      r["rows"] = std::move(jrows);
      r["timing_ms"] = timer.ms();
      print_json(r);
    } else {
      std::cout << "n=" << n << "  (edge counts of maximal members)\n";
      std::cout << "  " << std::left << std::setw(16) << "family"
                << std::setw(20) << "upper" << std::setw(20)
                << "upper-example" << std::setw(20) << "lower"
                << "lower-example\n";
      for (const auto& row : rows)
        std::cout << "  " << std::setw(16) << to_string(row.family)
                  << std::setw(20) << bound_text(row.upper) << std::setw(20)
                  << bound_text(row.upper_example) << std::setw(20)
                  << bound_text(row.lower) << bound_text(row.lower_example)
                  << '\n';
    }
  }
  return 0;
}

int cmd_verify(int n_min, int n_max, double budget_s, bool json) {
  if (n_min < 5 || n_min > n_max)
    throw Unsupported("verify range needs 5 <= n_min <= n_max");
  Timer timer;
  std::vector<LemmaReport> reports;
  bool complete = true;
  std::string budget_msg;
  for (int n = n_min; n <= n_max && complete; ++n) {
    try {
      auto batch = verify_lemma(n, n, make_budget(budget_s));
      reports.push_back(std::move(batch.front()));
    } catch (const BudgetExceeded& e) {
      complete = false;
      budget_msg = e.what();
    }
  }
  bool all_passed = complete;
  for (const auto& rep : reports) all_passed = all_passed && rep.passed;
  if (json) {
    ordered_json r;
    r["command"] = "verify";
    r["n_min"] = n_min;
    r["n_max"] = n_max;
    ordered_json jreports = ordered_json::array();
    for (const auto& rep : reports) {
      ordered_json jr;
      jr["n"] = rep.n;
      jr["edges"] = rep.edge_count;
      jr["expected_edges"] = rep.expected_edges;
      jr["ic_planar"] = rep.ic_planar;
      jr["maximal"] = rep.maximal;
      jr["census_checked"] = rep.census_checked;
      jr["census"] = ordered_json{
          {"total", rep.census.total},
          {"max_pairs", rep.census.max_pairs},
          {"single_pq_circle", rep.census.single_pq_circle},
          {"circle_circle", rep.census.circle_circle_pairs},
          {"pole_circle", rep.census.pole_circle_pairs},
          {"pole_pole", rep.census.pole_pole_pairs},
          {"other", rep.census.other_pairs},
          {"shape_ok", rep.census.shape_ok}};
      jr["passed"] = rep.passed;
      jreports.push_back(std::move(jr));
    }
    r["reports"] = std::move(jreports);
    r["passed"] = all_passed;
    r["complete"] = complete;
    if (!complete) r["error"] = budget_msg;
    r["timing_ms"] = timer.ms();
    print_json(r);
  } else {
    for (const auto& rep : reports) {
      std::cout << "n=" << rep.n << ": edges " << rep.edge_count << "/"
                << rep.expected_edges << "  ic-planar "
                << (rep.ic_planar ? "yes" : "NO") << "  maximal "
                << (rep.maximal ? "yes" : "NO") << "  census "
                << rep.census.total << " configs";
      if (rep.census_checked)
        std::cout << (rep.census.shape_ok
                          ? ", all single {p,q}-circle crossings"
                          : ", UNEXPECTED SHAPES");
      else
        std::cout << " (shape recorded, not enforced)";
      std::cout << "  " << (rep.passed ? "PASS" : "FAIL") << '\n';
    }
    if (!complete)
      std::cout << "verify " << n_min << ".." << n_max << ": incomplete ("
                << budget_msg << ")\n";
    else
      std::cout << "verify " << n_min << ".." << n_max << ": "
                << (all_passed ? "all passed" : "FAILED") << "  ("
                << timer.ms() << " ms)\n";
  }
  return !complete ? 3 : (all_passed ? 0 : 1);
}

int cmd_convert(const std::vector<std::string>& files, bool json) {
  return for_each_graph(
      files, json, "convert", [&](const Graph& g, const std::string& line) {
        Timer timer;
        if (json) {
          ordered_json r;
          r["command"] = "convert";
          r["input"] = line;
          r["n"] = g.vertex_count();
          r["m"] = g.edge_count();
          ordered_json edges = ordered_json::array();
          for (const auto& e : g.edges()) edges.push_back(edge_json(e));
          r["edges"] = std::move(edges);
          r["timing_ms"] = timer.ms();
          print_json(r);
        } else {
          std::cout << "n=" << g.vertex_count() << " m=" << g.edge_count()
                    << ":";
          for (const auto& e : g.edges())
            std::cout << ' ' << e.u << '-' << e.v;
          std::cout << '\n';
        }
        return 0;
      });
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "planarch: membership, witnesses, and density bounds for planar, "
      "IC-planar, NIC-planar, and 1-planar graphs"};
  app.require_subcommand(1);

  bool json = false;
  double budget = 60.0;
  app.add_flag("--json", json, "one JSON object per report (NDJSON)");
  app.add_option("--budget", budget,
                 "wall-clock seconds per graph, <= 0 for unlimited")
      ->capture_default_str();

  std::string gen_family;
  int gen_n = 0;
  auto* gen = app.add_subcommand("gen", "print a generated graph as graph6");
  gen->fallthrough();
  gen->add_option("family", gen_family, "gn | complete | cycle")
      ->required()
      ->check(CLI::IsMember({"gn", "complete", "cycle"}));
  gen->add_option("n", gen_n, "vertex count")->required();

  std::string check_class;
  std::vector<std::string> check_files;
  bool witness = false, census = false, recheck = false;
  auto* check =
      app.add_subcommand("check", "decide class membership of graph6 inputs");
  check->fallthrough();
  check->add_option("class", check_class, "planar | ic | nic | 1planar")
      ->required();
  check->add_option("files", check_files,
                    "graph6 files (default: standard input)");
  check->add_flag("--witness", witness,
                  "print the minimum-size crossing configuration");
  check->add_flag("--enumerate", census,
                  "print every valid crossing configuration");
  check->add_flag("--recheck", recheck,
                  "re-validate the witness before reporting");

  std::string maximal_class;
  std::vector<std::string> maximal_files;
  auto* maximal = app.add_subcommand(
      "maximal", "is the graph edge-maximal within the class?");
  maximal->fallthrough();
  maximal->add_option("class", maximal_class, "planar | ic | nic | 1planar")
      ->required();
  maximal->add_option("files", maximal_files,
                      "graph6 files (default: standard input)");

  int bounds_lo = 0, bounds_hi = 0;
  auto* bounds = app.add_subcommand(
      "bounds", "edge-count bounds for maximal members at given n");
  bounds->fallthrough();
  bounds->add_option("n", bounds_lo, "vertex count (n >= 5)")->required();
  auto* bounds_hi_opt =
      bounds->add_option("n_hi", bounds_hi, "end of inclusive n range");

  int verify_min = 0, verify_max = 0;
  auto* verify = app.add_subcommand(
      "verify", "check the extremal family: edge count 3n-5, ic-planar, "
                "maximal, census shape");
  verify->fallthrough();
  verify->add_option("n_min", verify_min, "first n (>= 5)")->required();
  verify->add_option("n_max", verify_max, "last n")->required();

  std::vector<std::string> convert_files;
  auto* convert =
      app.add_subcommand("convert", "translate graph6 to an edge list");
  convert->fallthrough();
  convert->add_option("files", convert_files,
                      "graph6 files (default: standard input)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (*gen) return cmd_gen(gen_family, gen_n, json);
    if (*check)
      return cmd_check(class_from_token(check_class), check_files, witness,
                       census, recheck, budget, json);
    if (*maximal)
      return cmd_maximal(class_from_token(maximal_class), maximal_files,
                         budget, json);
    if (*bounds)
      return cmd_bounds(bounds_lo, *bounds_hi_opt ? bounds_hi : bounds_lo,
                        json);
    if (*verify) return cmd_verify(verify_min, verify_max, budget, json);
    if (*convert) return cmd_convert(convert_files, json);
  } catch (const BudgetExceeded& e) {
    report_error(json, "planarch", nullptr, e.what());
    return 3;
  } catch (const std::exception& e) {
    report_error(json, "planarch", nullptr, e.what());
    return 2;
  }
  return 2;
}
