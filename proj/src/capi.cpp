#include "rdisc.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <sstream>
#include <string>

#include "rdisc/bounds.hpp"
#include "rdisc/connectivity.hpp"
#include "rdisc/constructions.hpp"
#include "rdisc/error.hpp"
#include "rdisc/graph_io.hpp"
#include "rdisc/harness.hpp"
#include "rdisc/rainbow.hpp"

struct rd_graph {
  rdisc::Graph g;
};

struct rd_coloring {
  rdisc::Graph g;
  rdisc::EdgeColoring c;
  std::string construction;
};

struct rd_result {
  rdisc::Graph g;
  rdisc::RdResult r;
};

namespace {

thread_local std::string last_error;

rd_status status_of(rdisc::ErrorKind kind) {
  switch (kind) {
    case rdisc::ErrorKind::Format: return RD_ERR_PARSE;
    case rdisc::ErrorKind::Parameter: return RD_ERR_PARAM;
    case rdisc::ErrorKind::Size: return RD_ERR_SIZE;
    case rdisc::ErrorKind::Structure: return RD_ERR_STRUCTURE;
    case rdisc::ErrorKind::Budget: return RD_ERR_BUDGET;
    case rdisc::ErrorKind::Io: return RD_ERR_IO;
  }
  return RD_ERR_INTERNAL;
}

// Runs f, translating exceptions into a status and the thread's last error.
template <typename F>
rd_status guard(F&& f) {
  try {
    f();
    last_error.clear();
    return RD_OK;
  } catch (const rdisc::Error& e) {
    last_error = e.what();
    return status_of(e.kind());
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
  } catch (const std::exception& e) {
    last_error = e.what();
  } catch (...) {
    last_error = "unknown error";
  }
  return RD_ERR_INTERNAL;
}

void require(const void* p, const char* name) {
  if (!p) rdisc::fail(rdisc::ErrorKind::Parameter, std::string(name) + " must not be NULL");
}

char* dup(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

std::uint64_t budget_or_default(uint64_t budget) {
  return budget == 0 ? rdisc::kDefaultBudget : budget;
}

std::string certificates_text(const rdisc::Graph& g,
                              const std::vector<rdisc::RainbowCutCertificate>& certs) {
  std::string out;
  for (const auto& c : certs) out += rdisc::format_certificate(g, c) + '\n';
  return out;
}

}  // namespace

extern "C" {

const char* rd_last_error(void) { return last_error.c_str(); }

void rd_string_free(char* s) { std::free(s); }

rd_status rd_graph_from_graph6(const char* text, rd_graph** out) {
  return guard([&] {
    require(text, "text");
    require(out, "out");
    *out = new rd_graph{rdisc::parse_graph6(text)};
  });
}

rd_status rd_graph_from_edge_list(const char* text, rd_graph** out) {
  return guard([&] {
    require(text, "text");
    require(out, "out");
    *out = new rd_graph{rdisc::read_edge_list(text)};
  });
}

rd_status rd_graph_parse(const char* text, rd_graph** out) {
  return guard([&] {
    require(text, "text");
    require(out, "out");
    *out = new rd_graph{rdisc::parse_graph_auto(text)};
  });
}

rd_status rd_graph_from_edges(int n, const int* edges, size_t m, rd_graph** out) {
  return guard([&] {
    require(out, "out");
    if (m > 0) require(edges, "edges");
    std::vector<rdisc::Edge> list;
    for (size_t i = 0; i < m; ++i) list.push_back({edges[2 * i], edges[2 * i + 1]});
    *out = new rd_graph{rdisc::Graph(n, std::move(list))};
  });
}

void rd_graph_free(rd_graph* g) { delete g; }

int rd_graph_order(const rd_graph* g) { return g ? g->g.order() : -1; }

int rd_graph_size(const rd_graph* g) { return g ? g->g.size() : -1; }

rd_status rd_graph_edge(const rd_graph* g, int i, int* u, int* v) {
  return guard([&] {
    require(g, "g");
    require(u, "u");
    require(v, "v");
    if (i < 0 || i >= g->g.size()) rdisc::fail(rdisc::ErrorKind::Parameter, "edge index out of range");
    *u = g->g.edge(i).u;
    *v = g->g.edge(i).v;
  });
}

rd_status rd_graph_to_graph6(const rd_graph* g, char** out) {
  return guard([&] {
    require(g, "g");
    require(out, "out");
    *out = dup(rdisc::encode_graph6(g->g));
  });
}

rd_status rd_graph_to_edge_list(const rd_graph* g, char** out) {
  return guard([&] {
    require(g, "g");
    require(out, "out");
    *out = dup(rdisc::write_edge_list(g->g));
  });
}

rd_status rd_graph_complement(const rd_graph* g, rd_graph** out) {
  return guard([&] {
    require(g, "g");
    require(out, "out");
    *out = new rd_graph{rdisc::gen::complement(g->g)};
  });
}

rd_status rd_graph_stats(const rd_graph* g, rd_stats* out) {
  return guard([&] {
    require(g, "g");
    require(out, "out");
    auto s = rdisc::basic_stats(g->g);
    *out = {s.n, s.m, s.min_degree, s.max_degree, s.connected, s.bipartite, s.regular};
  });
}

rd_status rd_edge_connectivity(const rd_graph* g, int* out) {
  return guard([&] {
    require(g, "g");
    require(out, "out");
    *out = rdisc::edge_connectivity(g->g);
  });
}

rd_status rd_upper_edge_connectivity(const rd_graph* g, int* out) {
  return guard([&] {
    require(g, "g");
    require(out, "out");
    *out = rdisc::upper_edge_connectivity(g->g);
  });
}

rd_status rd_local_edge_connectivity(const rd_graph* g, int u, int v, int* out) {
  return guard([&] {
    require(g, "g");
    require(out, "out");
    *out = rdisc::local_edge_connectivity(g->g, u, v).value;
  });
}

rd_status rd_chromatic_index(const rd_graph* g, uint64_t budget, int* out, int* class_out) {
  return guard([&] {
    require(g, "g");
    require(out, "out");
    auto r = rdisc::chromatic_index_exact(g->g, budget_or_default(budget));
    *out = r.verdict.chromatic_index;
    if (class_out) *class_out = r.verdict.verdict == rdisc::EdgeClass::Class1 ? 1 : 2;
  });
}

rd_status rd_bounds_report(const rd_graph* g, uint64_t budget, int* lower, int* upper,
                           char** text) {
  return guard([&] {
    require(g, "g");
    auto b = rdisc::rd_bounds(g->g, budget_or_default(budget));
    if (lower) *lower = b.lower;
    if (upper) *upper = b.upper;
    if (text) *text = dup(rdisc::format_bounds(b));
  });
}

rd_status rd_exact(const rd_graph* g, uint64_t budget, int edge_cap, rd_result** out) {
  return guard([&] {
    require(g, "g");
    require(out, "out");
    rdisc::RdOptions opts;
    opts.budget = budget_or_default(budget);
    if (edge_cap > 0) opts.edge_cap = edge_cap;
    *out = new rd_result{g->g, rdisc::rd_exact(g->g, opts)};
  });
}

void rd_result_free(rd_result* r) { delete r; }

int rd_result_value(const rd_result* r) { return r ? r->r.value : -1; }
int rd_result_lower(const rd_result* r) { return r ? r->r.lower : -1; }
int rd_result_upper(const rd_result* r) { return r ? r->r.upper : -1; }
uint64_t rd_result_nodes(const rd_result* r) { return r ? r->r.nodes : 0; }

const char* rd_result_construction(const rd_result* r) {
  return r ? r->r.construction.c_str() : "";
}

const char* rd_result_note(const rd_result* r) { return r ? r->r.infeasibility_note.c_str() : ""; }

rd_status rd_result_coloring(const rd_result* r, rd_coloring** out) {
  return guard([&] {
    require(r, "r");
    require(out, "out");
    *out = new rd_coloring{r->g, r->r.coloring, r->r.construction};
  });
}

rd_status rd_result_certificates(const rd_result* r, char** out) {
  return guard([&] {
    require(r, "r");
    require(out, "out");
    *out = dup(certificates_text(r->g, r->r.certificates));
  });
}

rd_status rd_construct_coloring(const rd_graph* g, uint64_t budget, rd_coloring** out) {
  return guard([&] {
    require(g, "g");
    require(out, "out");
    auto c = rdisc::construct_rd_coloring(g->g, budget_or_default(budget));
    *out = new rd_coloring{g->g, std::move(c.coloring), std::move(c.construction)};
  });
}

const char* rd_coloring_construction(const rd_coloring* c) {
  return c ? c->construction.c_str() : "";
}

rd_status rd_coloring_from_colors(const rd_graph* g, const int* colors, size_t m,
                                  rd_coloring** out) {
  return guard([&] {
    require(g, "g");
    require(out, "out");
    if (m > 0) require(colors, "colors");
    if (m != static_cast<size_t>(g->g.size())) {
      rdisc::fail(rdisc::ErrorKind::Parameter, "expected one color per edge");
    }
    rdisc::EdgeColoring c{std::vector<int>(colors, colors + m)};
    if (!rdisc::covers(g->g, c)) rdisc::fail(rdisc::ErrorKind::Parameter, "colors must be >= 1");
    *out = new rd_coloring{g->g, std::move(c), ""};
  });
}

rd_status rd_coloring_parse(const rd_graph* g, const char* text, rd_coloring** out) {
  return guard([&] {
    require(g, "g");
    require(text, "text");
    require(out, "out");
    *out = new rd_coloring{g->g, rdisc::read_coloring(g->g, text), ""};
  });
}

void rd_coloring_free(rd_coloring* c) { delete c; }

int rd_coloring_palette(const rd_coloring* c) { return c ? c->c.palette() : -1; }

int rd_coloring_color(const rd_coloring* c, int edge) {
  if (!c || edge < 0 || static_cast<size_t>(edge) >= c->c.colors.size()) return -1;
  return c->c.colors[static_cast<size_t>(edge)];
}

rd_status rd_coloring_to_text(const rd_coloring* c, char** out) {
  return guard([&] {
    require(c, "c");
    require(out, "out");
    *out = dup(rdisc::write_coloring(c->g, c->c));
  });
}

rd_status rd_verify(const rd_coloring* c, int* ok, char** report) {
  return guard([&] {
    require(c, "c");
    require(ok, "ok");
    auto v = rdisc::verify_rd_coloring(c->g, c->c);
    *ok = v.ok ? 1 : 0;
    if (!report) return;
    if (v.ok) {
      *report = dup(certificates_text(c->g, v.certificates));
    } else {
      std::ostringstream s;
      s << "no rainbow cut separates " << v.failing_pair->first << ' ' << v.failing_pair->second
        << '\n';
      *report = dup(s.str());
    }
  });
}

rd_status rd_construct_extremal(int n, int k, rd_coloring** out, int* expected_rd) {
  return guard([&] {
    require(out, "out");
    auto x = rdisc::construct_extremal_graph(n, k);
    if (expected_rd) *expected_rd = x.expected_rd;
    *out = new rd_coloring{std::move(x.graph), std::move(x.coloring), "extremal"};
  });
}

rd_status rd_construct_ng_sharp(int n, rd_graph** out) {
  return guard([&] {
    require(out, "out");
    *out = new rd_graph{rdisc::construct_ng_sharp_graph(n)};
  });
}

rd_status rd_coloring_graph(const rd_coloring* c, rd_graph** out) {
  return guard([&] {
    require(c, "c");
    require(out, "out");
    *out = new rd_graph{c->g};
  });
}

rd_status rd_survey(const rd_survey_config* config, char** report, size_t* violations,
                    char** skipped_detail) {
  return guard([&] {
    require(config, "config");
    require(report, "report");
    rdisc::SurveyConfig sc;
    if (config->exhaustive_n > 0) {
      sc.exhaustive_n = config->exhaustive_n;
    } else {
      require(config->input_path, "input_path");
      sc.stream_path = config->input_path;
    }
    if (config->rules) {
      std::istringstream in(config->rules);
      for (std::string tok; std::getline(in, tok, ',');) {
        if (!tok.empty()) sc.rules.push_back(tok);
      }
    }
    sc.budget = budget_or_default(config->budget);
    if (config->edge_cap > 0) sc.edge_cap = config->edge_cap;
    sc.jobs = config->jobs > 0 ? config->jobs : 1;
    if (config->has_seed) sc.seed = config->seed;

    auto r = rdisc::run_survey(sc);
    std::string text = r.render(sc.rules);
    std::string detail;
    for (const auto& [g6, rule] : r.skipped()) detail += "skipped " + g6 + ' ' + rule + '\n';
    char* report_out = dup(text);
    char* detail_out = nullptr;
    if (skipped_detail) {
      try {
        detail_out = dup(detail);
      } catch (...) {
        std::free(report_out);
        throw;
      }
      *skipped_detail = detail_out;
    }
    *report = report_out;
    if (violations) *violations = r.violations().size();
  });
}

}  // extern "C"
