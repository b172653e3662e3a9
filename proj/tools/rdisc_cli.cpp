// Command-line front end over the C API.

#include <unistd.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "rdisc.h"

namespace {

enum Exit { kOk = 0, kFail = 1, kInput = 2, kBudget = 3 };

struct GraphDeleter {
  void operator()(rd_graph* g) const { rd_graph_free(g); }
};
struct ColoringDeleter {
  void operator()(rd_coloring* c) const { rd_coloring_free(c); }
};
struct ResultDeleter {
  void operator()(rd_result* r) const { rd_result_free(r); }
};
using GraphPtr = std::unique_ptr<rd_graph, GraphDeleter>;
using ColoringPtr = std::unique_ptr<rd_coloring, ColoringDeleter>;
using ResultPtr = std::unique_ptr<rd_result, ResultDeleter>;

/// Thrown to leave a command with a given exit code after reporting.
struct ExitWith {
  int code;
};

std::string take(char* s) {
  std::string out = s ? s : "";
  rd_string_free(s);
  return out;
}

int exit_code_for(rd_status st) {
  return st == RD_ERR_BUDGET || st == RD_ERR_SIZE ? kBudget : kInput;
}

void check(rd_status st, const std::string& context, int code = -1) {
  if (st == RD_OK) return;
  std::cerr << "rdisc: " << context << ": " << rd_last_error() << '\n';
  throw ExitWith{code >= 0 ? code : exit_code_for(st)};
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    std::cerr << "rdisc: cannot open '" << path << "'\n";
    throw ExitWith{kInput};
  }
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

/// "-" reads standard input; an existing path is read as a file; anything
/// else is taken as literal graph text such as a graph6 string.
std::string read_input(const std::string& arg) {
  if (arg == "-") {
    std::ostringstream s;
    s << std::cin.rdbuf();
    return s.str();
  }
  std::error_code ec;
  if (std::filesystem::is_regular_file(arg, ec)) return read_file(arg);
  return arg;
}

GraphPtr load_graph(const std::string& arg) {
  rd_graph* g = nullptr;
  check(rd_graph_parse(read_input(arg).c_str(), &g), "input graph", kInput);
  return GraphPtr(g);
}

/// Writes through a temporary sibling so a failed run leaves no partial file.
void write_atomic(const std::string& path, const std::string& content) {
  const std::string tmp = path + ".tmp." + std::to_string(::getpid());
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    out << content;
    out.flush();
    if (!out) {
      std::remove(tmp.c_str());
      std::cerr << "rdisc: cannot write '" << path << "'\n";
      throw ExitWith{kInput};
    }
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::remove(tmp.c_str());
    std::cerr << "rdisc: cannot write '" << path << "': " << ec.message() << '\n';
    throw ExitWith{kInput};
  }
}

std::string graph6_of(const rd_graph* g) {
  char* s = nullptr;
  check(rd_graph_to_graph6(g, &s), "graph6 encoding");
  return take(s);
}

std::string coloring_text(const rd_coloring* c) {
  char* s = nullptr;
  check(rd_coloring_to_text(c, &s), "coloring output");
  return take(s);
}

std::uint64_t default_budget() {
  if (const char* env = std::getenv("RD_BUDGET")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return v;
    std::cerr << "rdisc: ignoring invalid RD_BUDGET '" << env << "'\n";
  }
  return 100'000'000;
}

// Rule that pins the window, taken from the first exact ledger line.
std::string pinning_rule(const std::string& ledger, int value) {
  std::istringstream in(ledger);
  for (std::string line; std::getline(in, line);) {
    std::istringstream words(line);
    std::string kind, rule;
    int v = 0;
    if (words >> kind >> v >> rule && kind == "exact" && v == value) {
      if (!rule.empty() && rule.back() == ':') rule.pop_back();
      return rule;
    }
  }
  return "bounds";
}

struct AnalyzeArgs {
  std::string input;
  bool exact = false;
  std::uint64_t budget = 0;
  int edge_cap = 15;
  std::string witness;
};

int cmd_analyze(const AnalyzeArgs& a) {
  GraphPtr g = load_graph(a.input);
  rd_stats st{};
  check(rd_graph_stats(g.get(), &st), "stats");
  std::cout << "n = " << st.n << '\n' << "m = " << st.m << '\n';
  if (st.n == 0) return kOk;
  std::cout << "min degree = " << st.min_degree << '\n'
            << "max degree = " << st.max_degree << '\n'
            << "connected = " << (st.connected ? "yes" : "no") << '\n';
  int lambda = 0;
  int lambda_plus = 0;
  check(rd_edge_connectivity(g.get(), &lambda), "edge connectivity");
  check(rd_upper_edge_connectivity(g.get(), &lambda_plus), "upper edge connectivity");
  std::cout << "lambda = " << lambda << '\n' << "lambda+ = " << lambda_plus << '\n';

  int chi = 0;
  int cls = 0;
  rd_status cs = rd_chromatic_index(g.get(), a.budget, &chi, &cls);
  if (cs == RD_OK) {
    std::cout << "chi' = " << chi << " (class " << cls << ")\n";
  } else if (cs == RD_ERR_BUDGET) {
    std::cout << "chi' in [" << st.max_degree << ", " << st.max_degree + 1 << "]\n";
  } else {
    check(cs, "chromatic index");
  }

  if (!st.connected || st.n < 2) {
    std::cerr << "rdisc: rd is defined for connected graphs on at least two vertices\n";
    return kInput;
  }

  int lower = 0;
  int upper = 0;
  char* text = nullptr;
  check(rd_bounds_report(g.get(), a.budget, &lower, &upper, &text), "bounds");
  const std::string ledger = take(text);
  std::istringstream lines(ledger);
  for (std::string line; std::getline(lines, line);) std::cout << "bound " << line << '\n';
  std::cout << "rd window = [" << lower << ", " << upper << "]\n";

  if (!a.exact) {
    if (lower == upper) std::cout << "rd = " << lower << " (rule: " << pinning_rule(ledger, lower) << ")\n";
    return kOk;
  }

  rd_result* raw = nullptr;
  rd_status rs = rd_exact(g.get(), a.budget, a.edge_cap, &raw);
  if (rs != RD_OK) {
    std::cerr << "rdisc: exact search: " << rd_last_error() << '\n';
    return exit_code_for(rs);
  }
  ResultPtr r(raw);
  const int rd = rd_result_value(r.get());
  std::cout << "rd = " << rd;
  if (lower == upper) std::cout << " (rule: " << pinning_rule(ledger, lower) << ")";
  std::cout << '\n'
            << "construction = " << rd_result_construction(r.get()) << '\n'
            << "search nodes = " << rd_result_nodes(r.get()) << '\n';
  if (*rd_result_note(r.get())) std::cout << "note = " << rd_result_note(r.get()) << '\n';

  if (!a.witness.empty()) {
    rd_coloring* c = nullptr;
    check(rd_result_coloring(r.get(), &c), "witness coloring");
    ColoringPtr coloring(c);
    char* certs = nullptr;
    check(rd_result_certificates(r.get(), &certs), "certificates");
    write_atomic(a.witness + ".g6", graph6_of(g.get()) + '\n');
    write_atomic(a.witness + ".col", coloring_text(coloring.get()));
    write_atomic(a.witness + ".cert", take(certs));
    std::cout << "witness = " << a.witness << ".{g6,col,cert}\n";
  }
  return kOk;
}

int cmd_color(const std::string& input, std::uint64_t budget, const std::string& out) {
  GraphPtr g = load_graph(input);
  rd_coloring* raw = nullptr;
  check(rd_construct_coloring(g.get(), budget, &raw), "coloring");
  ColoringPtr c(raw);
  int ok = 0;
  check(rd_verify(c.get(), &ok, nullptr), "verification");
  if (!ok) {
    std::cerr << "rdisc: constructed coloring failed verification\n";
    return kFail;
  }
  const std::string text = coloring_text(c.get());
  if (out.empty()) {
    std::cout << text;
  } else {
    write_atomic(out, text);
  }
  // Keep standard output clean when it carries the coloring itself.
  std::ostream& info = out.empty() ? std::cerr : std::cout;
  info << "palette = " << rd_coloring_palette(c.get()) << '\n'
       << "construction = " << rd_coloring_construction(c.get()) << '\n';
  return kOk;
}

int cmd_verify(const std::string& graph, const std::string& coloring) {
  GraphPtr g = load_graph(graph);
  rd_coloring* raw = nullptr;
  check(rd_coloring_parse(g.get(), read_file(coloring).c_str(), &raw), "coloring file", kInput);
  ColoringPtr c(raw);
  int ok = 0;
  char* report = nullptr;
  check(rd_verify(c.get(), &ok, &report), "verification");
  std::cout << (ok ? "ok" : "fail") << '\n' << take(report);
  return ok ? kOk : kFail;
}

int cmd_construct(const std::string& family, const std::vector<int>& params,
                  const std::string& prefix, std::uint64_t budget, int edge_cap) {
  if (family == "extremal") {
    if (params.size() != 2) {
      std::cerr << "rdisc: extremal takes n and k\n";
      return kInput;
    }
    const int n = params[0];
    const int k = params[1];
    rd_coloring* raw = nullptr;
    int expected = 0;
    check(rd_construct_extremal(n, k, &raw, &expected), "extremal construction", kInput);
    ColoringPtr c(raw);
    rd_graph* graw = nullptr;
    check(rd_coloring_graph(c.get(), &graw), "extremal construction");
    GraphPtr g(graw);
    const std::string g6 = graph6_of(g.get());
    std::cout << "graph6 = " << g6 << '\n'
              << "expected rd = " << expected << '\n'
              << "edges = " << rd_graph_size(g.get()) << " = (k+1)(n-1)/2 = "
              << (k + 1) * (n - 1) / 2 << '\n';
    if (!prefix.empty()) {
      write_atomic(prefix + ".g6", g6 + '\n');
      write_atomic(prefix + ".col", coloring_text(c.get()));
    }
    return kOk;
  }
  if (family == "ng-sharp") {
    if (params.size() != 1) {
      std::cerr << "rdisc: ng-sharp takes n\n";
      return kInput;
    }
    const int n = params[0];
    rd_graph* raw = nullptr;
    check(rd_construct_ng_sharp(n, &raw), "ng-sharp construction", kInput);
    GraphPtr g(raw);
    rd_graph* craw = nullptr;
    check(rd_graph_complement(g.get(), &craw), "complement");
    GraphPtr co(craw);
    const std::string g6 = graph6_of(g.get());
    const std::string co6 = graph6_of(co.get());
    std::cout << "graph6 = " << g6 << '\n' << "complement graph6 = " << co6 << '\n';
    int values[2] = {-1, -1};
    const rd_graph* pair[2] = {g.get(), co.get()};
    for (int i = 0; i < 2; ++i) {
      rd_result* r = nullptr;
      if (rd_exact(pair[i], budget, edge_cap, &r) == RD_OK) {
        values[i] = rd_result_value(r);
        rd_result_free(r);
      } else {
        std::cerr << "rdisc: rd not computed: " << rd_last_error() << '\n';
      }
    }
    auto show = [](int v) { return v < 0 ? std::string("unknown") : std::to_string(v); };
    std::cout << "rd = " << show(values[0]) << '\n' << "rd complement = " << show(values[1]) << '\n';
    if (values[0] >= 0 && values[1] >= 0) {
      std::cout << "sum = " << values[0] + values[1] << " (2n-5 = " << 2 * n - 5 << ")\n"
                << "product = " << values[0] * values[1] << " ((n-2)(n-3) = " << (n - 2) * (n - 3)
                << ")\n";
    }
    if (!prefix.empty()) {
      write_atomic(prefix + ".g6", g6 + '\n');
      write_atomic(prefix + ".complement.g6", co6 + '\n');
    }
    return kOk;
  }
  std::cerr << "rdisc: unknown family '" << family << "' (extremal | ng-sharp)\n";
  return kInput;
}

struct SurveyArgs {
  std::optional<int> n;
  std::string in;
  std::string rules;
  std::uint64_t budget = 0;
  int edge_cap = 15;
  int jobs = 1;
  std::optional<std::uint64_t> seed;
  std::string out;
};

int cmd_survey(const SurveyArgs& a) {
  rd_survey_config cfg{};
  cfg.exhaustive_n = a.n.value_or(0);
  cfg.input_path = a.in.empty() ? nullptr : a.in.c_str();
  cfg.rules = a.rules.c_str();
  cfg.budget = a.budget;
  cfg.edge_cap = a.edge_cap;
  cfg.jobs = a.jobs;
  cfg.has_seed = a.seed.has_value();
  cfg.seed = a.seed.value_or(0);
  char* report = nullptr;
  char* detail = nullptr;
  size_t violations = 0;
  check(rd_survey(&cfg, &report, &violations, &detail), "survey", kInput);
  const std::string text = take(report);
  std::cerr << take(detail);
  if (a.out.empty()) {
    std::cout << text;
  } else {
    write_atomic(a.out, text);
  }
  return violations == 0 ? kOk : kFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Rainbow disconnection numbers of small graphs"};
  app.require_subcommand(1);
  std::uint64_t budget = default_budget();
  int edge_cap = 15;

  auto add_budget = [&](CLI::App* sub) {
    sub->add_option("--budget", budget, "search node budget (default: RD_BUDGET or 1e8)")
        ->check(CLI::PositiveNumber);
  };

  AnalyzeArgs analyze;
  auto* an = app.add_subcommand("analyze", "invariants, bounds and optionally the exact rd");
  an->add_option("input", analyze.input, "graph file, '-' for stdin, or a graph6 string")->required();
  an->add_flag("--exact", analyze.exact, "run the exact search");
  an->add_option("--edge-cap", edge_cap, "largest edge count for the exact search")
      ->check(CLI::PositiveNumber);
  an->add_option("--witness", analyze.witness, "write PREFIX.g6, PREFIX.col, PREFIX.cert");
  add_budget(an);

  std::string color_input;
  std::string color_out;
  auto* co = app.add_subcommand("color", "construct and verify a rainbow disconnection coloring");
  co->add_option("input", color_input, "graph file, '-' for stdin, or a graph6 string")->required();
  co->add_option("--out", color_out, "coloring file (default: standard output)");
  add_budget(co);

  std::string verify_graph;
  std::string verify_coloring;
  auto* ve = app.add_subcommand("verify", "check a coloring and print its certificates");
  ve->add_option("graph", verify_graph, "graph file or graph6 string")->required();
  ve->add_option("coloring", verify_coloring, "coloring file")->required();

  std::string family;
  std::vector<int> params;
  std::string prefix;
  auto* cn = app.add_subcommand("construct", "build an extremal or ng-sharp graph");
  cn->add_option("family", family, "extremal | ng-sharp")->required();
  cn->add_option("params", params, "n k for extremal, n for ng-sharp")->required();
  cn->add_option("--out", prefix, "output file prefix");
  add_budget(cn);

  SurveyArgs survey;
  auto* su = app.add_subcommand("survey", "check every rule over a family of graphs");
  auto* n_opt = su->add_option("--n", survey.n, "enumerate connected graphs of this order (<= 7)");
  auto* in_opt = su->add_option("--in", survey.in, "graph6 file, one graph per line");
  n_opt->excludes(in_opt);
  su->add_option("--rules", survey.rules, "comma-separated rule ids or prefixes");
  su->add_option("--jobs", survey.jobs, "worker threads")->check(CLI::PositiveNumber);
  su->add_option("--edge-cap", edge_cap, "largest edge count for exact searches")
      ->check(CLI::PositiveNumber);
  su->add_option("--seed", survey.seed, "override the sampling seed");
  su->add_option("--out", survey.out, "report file (default: standard output)");
  add_budget(su);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kOk : kInput;
  }

  try {
    if (an->parsed()) {
      analyze.budget = budget;
      analyze.edge_cap = edge_cap;
      return cmd_analyze(analyze);
    }
    if (co->parsed()) return cmd_color(color_input, budget, color_out);
    if (ve->parsed()) return cmd_verify(verify_graph, verify_coloring);
    if (cn->parsed()) return cmd_construct(family, params, prefix, budget, edge_cap);
    if (su->parsed()) {
      if (!survey.n && survey.in.empty()) {
        std::cerr << "rdisc: survey needs --n or --in\n";
        return kInput;
      }
      survey.budget = budget;
      survey.edge_cap = edge_cap;
      return cmd_survey(survey);
    }
  } catch (const ExitWith& e) {
    return e.code;
  }
  return kInput;
}
