#include "rdisc/harness.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <chrono>
#include <fstream>
#include <functional>
#include <mutex>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <thread>

#include "rdisc/bounds.hpp"
#include "rdisc/connectivity.hpp"
#include "rdisc/error.hpp"
#include "rdisc/graph_io.hpp"
#include "rdisc/rainbow.hpp"

namespace rdisc {

namespace {

VertexMask bit(int v) { return VertexMask{1} << v; }

int pair_bits(int n) { return n * (n - 1) / 2; }

// Smallest graph6 bit string over degree-respecting vertex orders.
class Canonizer {
 public:
  explicit Canonizer(const Graph& g) : g_(g), n_(g.order()), total_(pair_bits(g.order())) {
    std::vector<int> vertices(static_cast<size_t>(n_));
    std::iota(vertices.begin(), vertices.end(), 0);
    std::stable_sort(vertices.begin(), vertices.end(),
                     [&](int a, int b) { return g.degree(a) > g.degree(b); });
    for (int v : vertices) slot_degree_.push_back(g.degree(v));
    perm_.assign(static_cast<size_t>(n_), -1);
  }

  std::uint64_t run() {
    best_ = ~std::uint64_t{0};
    best_perm_.clear();
    place(0, 0, 0);
    return best_;
  }

  const std::vector<int>& best_order() const { return best_perm_; }

 private:
  void place(int pos, VertexMask used, std::uint64_t prefix) {
    if (pos == n_) {
      if (prefix < best_ || best_perm_.empty()) {
        best_ = prefix;
        best_perm_ = perm_;
      }
      return;
    }
    for (int v = 0; v < n_; ++v) {
      if ((used & bit(v)) || g_.degree(v) != slot_degree_[static_cast<size_t>(pos)]) continue;
      std::uint64_t code = prefix;
      for (int i = 0; i < pos; ++i) {
        code = (code << 1) | (g_.has_edge(perm_[static_cast<size_t>(i)], v) ? 1 : 0);
      }
      const int bits = pair_bits(pos + 1);
      if (!best_perm_.empty() && bits > 0 && (code > (best_ >> (total_ - bits)))) continue;
      perm_[static_cast<size_t>(pos)] = v;
      place(pos + 1, used | bit(v), code);
    }
    perm_[static_cast<size_t>(pos)] = -1;
  }

  const Graph& g_;
  int n_;
  int total_;
  std::vector<int> slot_degree_;
  std::vector<int> perm_;
  std::vector<int> best_perm_;
  std::uint64_t best_ = 0;
};

Graph graph_from_code(int n, std::uint64_t code) {
  std::vector<Edge> edges;
  int k = pair_bits(n);
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      --k;
      if ((code >> k) & 1) edges.push_back({i, j});
    }
  }
  return Graph(n, std::move(edges));
}

}  // namespace

Graph canonical_form(const Graph& g) {
  if (g.order() > 10) fail(ErrorKind::Size, "canonical form capped at 10 vertices");
  if (g.order() <= 1) return g;
  Canonizer c(g);
  return graph_from_code(g.order(), c.run());
}

std::vector<Graph> enumerate_connected_graphs(int n) {
  if (n < 1) fail(ErrorKind::Parameter, "order must be positive");
  if (n > 7) {
    fail(ErrorKind::Parameter, "exhaustive enumeration is capped at n = 7; "
                               "feed larger orders as a graph6 stream");
  }
  // Every graph on k vertices is a graph on k-1 vertices plus one vertex.
  std::set<std::uint64_t> level{0};
  for (int k = 2; k <= n; ++k) {
    std::set<std::uint64_t> next;
    for (std::uint64_t code : level) {
      const Graph base = graph_from_code(k - 1, code);
      for (VertexMask nb = 0; nb < bit(k - 1); ++nb) {
        std::vector<Edge> edges(base.edges().begin(), base.edges().end());
        for (VertexMask m = nb; m; m &= m - 1) edges.push_back({std::countr_zero(m), k - 1});
        Graph g(k, std::move(edges));
        next.insert(Canonizer(g).run());
      }
    }
    level = std::move(next);
  }
  std::vector<Graph> out;
  for (std::uint64_t code : level) {
    Graph g = graph_from_code(n, code);
    if (is_connected(g)) out.push_back(std::move(g));
  }
  return out;
}

const std::vector<std::string>& all_rules() {
  static const std::vector<std::string> rules{
      "chain",          "tree",           "cycle",           "complete",
      "mader",          "multipartite",   "monotone",        "universal",
      "avg-degree",     "critical",       "critical-degree", "index-minimal",
      "minimal-char",   "regular",        "regular-dense",   "regular-bipartite",
      "co-regular",     "block",          "two-leaves",      "few-high-degree",
      "high-degree-pair", "ng-sum",       "ng-product",      "max-size",
      "bounds",         "fournier",       "regular-class1",
  };
  return rules;
}

namespace {

std::vector<std::string> select_rules(const std::vector<std::string>& tokens) {
  if (tokens.empty()) return all_rules();
  std::vector<std::string> out;
  for (const std::string& t : tokens) {
    bool matched = false;
    for (const std::string& r : all_rules()) {
      if (r == t || r.rfind(t + "-", 0) == 0) {
        matched = true;
        if (std::find(out.begin(), out.end(), r) == out.end()) out.push_back(r);
      }
    }
    if (!matched) fail(ErrorKind::Parameter, "unknown rule '" + t + "'");
  }
  // Keep report order stable regardless of the order rules were requested in.
  std::vector<std::string> ordered;
  for (const std::string& r : all_rules()) {
    if (std::find(out.begin(), out.end(), r) != out.end()) ordered.push_back(r);
  }
  return ordered;
}

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

/// Lazily computed invariants shared by the rules of one graph. Values that
/// exceed the search caps stay empty and turn dependent rules into Skipped.
class GraphFacts {
 public:
  GraphFacts(const Graph& g, const SurveyConfig& config) : g(g), config(config) {}

  const Graph& g;
  const SurveyConfig& config;

  int lambda() { return cached(lambda_, [&] { return edge_connectivity(g); }); }
  int lambda_plus() { return cached(lambda_plus_, [&] { return upper_edge_connectivity(g); }); }
  std::optional<int> chi_index() {
    return guarded(chi_index_, [&] { return chromatic_index_exact(g, config.budget).verdict.chromatic_index; });
  }
  std::optional<int> rd() { return guarded(rd_, [&] { return rd_of(g); }); }
  bool complement_connected() {
    return cached(co_connected_, [&] { return is_connected(gen::complement(g)) ? 1 : 0; }) == 1;
  }
  std::optional<int> rd_complement() {
    return guarded(rd_co_, [&] { return rd_of(gen::complement(g)); });
  }
  std::optional<int> critical_chi() {
    return guarded(critical_, [&] {
      auto c = is_color_critical(g, config.budget);
      return c ? *c : 0;
    });
  }

  int rd_of(const Graph& h) const {
    RdOptions opts;
    opts.budget = config.budget;
    opts.edge_cap = config.edge_cap;
    return rd_exact(h, opts).value;
  }

 private:
  template <typename F>
  int cached(std::optional<int>& slot, F f) {
    if (!slot) slot = f();
    return *slot;
  }

  // Empty optional when the computation ran out of budget or over a cap.
  template <typename F>
  std::optional<int> guarded(std::optional<std::optional<int>>& slot, F f) {
    if (!slot) {
      try {
        slot = std::optional<int>(f());
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::Budget && e.kind() != ErrorKind::Size) throw;
        slot = std::optional<int>();
      }
    }
    return *slot;
  }

  std::optional<int> lambda_;
  std::optional<int> lambda_plus_;
  std::optional<int> co_connected_;
  std::optional<std::optional<int>> chi_index_;
  std::optional<std::optional<int>> rd_;
  std::optional<std::optional<int>> rd_co_;
  std::optional<std::optional<int>> critical_;
};

RuleOutcome verdict(const std::string& rule, bool ok, std::string observed) {
  return {rule, ok ? Outcome::Pass : Outcome::Fail, std::move(observed), {}};
}

RuleOutcome na(const std::string& rule) { return {rule, Outcome::NotApplicable, "", {}}; }

RuleOutcome skipped(const std::string& rule, std::string why) {
  return {rule, Outcome::Skipped, std::move(why), {}};
}

int count_degree(const Graph& g, const std::function<bool(int)>& pred) {
  int c = 0;
  for (int v = 0; v < g.order(); ++v) c += pred(g.degree(v)) ? 1 : 0;
  return c;
}

Graph sample_spanning_subgraph(const Graph& g, std::mt19937_64& rng) {
  std::vector<int> order(static_cast<size_t>(g.size()));
  std::iota(order.begin(), order.end(), 0);
  for (size_t i = order.size(); i > 1; --i) {
    std::swap(order[i - 1], order[static_cast<size_t>(rng() % i)]);
  }
  std::vector<int> parent(static_cast<size_t>(g.order()));
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) {
    while (parent[static_cast<size_t>(x)] != x) x = parent[static_cast<size_t>(x)] = parent[static_cast<size_t>(parent[static_cast<size_t>(x)])];
    return x;
  };
  std::vector<Edge> kept;
  for (int e : order) {
    int a = find(g.edge(e).u);
    int b = find(g.edge(e).v);
    bool tree_edge = a != b;
    if (tree_edge) parent[static_cast<size_t>(a)] = b;
    if (tree_edge || (rng() & 1)) kept.push_back(g.edge(e));
  }
  return Graph(g.order(), std::move(kept));
}

RuleOutcome check_rule(const std::string& rule, GraphFacts& f, const std::string& g6) {
  const Graph& g = f.g;
  const int n = g.order();
  const int m = g.size();
  const int delta = g.max_degree();
  auto rd = [&] { return f.rd(); };
  const char* rd_missing = "rd unavailable (edge cap or budget)";
  std::ostringstream obs;

  if (rule == "chain") {
    auto r = rd();
    auto chi = f.chi_index();
    if (!r || !chi) return skipped(rule, rd_missing);
    obs << "lambda=" << f.lambda() << " lambda+=" << f.lambda_plus() << " rd=" << *r
        << " chi'=" << *chi << " Delta=" << delta;
    bool ok = f.lambda() <= f.lambda_plus() && f.lambda_plus() <= *r && *r <= *chi &&
              *chi <= delta + 1;
    auto out = verdict(rule, ok, obs.str());
    if (*r == f.lambda_plus()) out.tight.emplace_back("chain:lambda+", *r);
    if (*r == *chi) out.tight.emplace_back("chain:chi'", *r);
    return out;
  }
  if (rule == "tree") {
    auto r = rd();
    if (!r) return skipped(rule, rd_missing);
    obs << "rd=" << *r << " tree=" << is_tree(g);
    return verdict(rule, (*r == 1) == is_tree(g), obs.str());
  }
  if (rule == "cycle") {
    if (!is_cycle(g)) return na(rule);
    auto r = rd();
    if (!r) return skipped(rule, rd_missing);
    obs << "rd=" << *r;
    return verdict(rule, *r == 2, obs.str());
  }
  if (rule == "complete") {
    if (!is_complete(g)) return na(rule);
    auto r = rd();
    if (!r) return skipped(rule, rd_missing);
    obs << "rd=" << *r << " n=" << n;
    return verdict(rule, *r == n - 1, obs.str());
  }
  if (rule == "mader") {
    if (n < 3) return na(rule);
    int bound = mader_lambda_plus_lower_bound(g);
    obs << "mader=" << bound << " lambda+=" << f.lambda_plus();
    auto out = verdict(rule, bound <= f.lambda_plus(), obs.str());
    if (bound == f.lambda_plus()) out.tight.emplace_back("mader", bound);
    return out;
  }
  if (rule == "multipartite") {
    auto parts = multipartite_parts(g);
    if (parts.empty()) return na(rule);
    auto r = rd();
    if (!r) return skipped(rule, rd_missing);
    int formula = multipartite_rd(parts);
    obs << "rd=" << *r << " formula=" << formula;
    return verdict(rule, *r == formula, obs.str());
  }
  if (rule == "monotone") {
    auto r = rd();
    if (!r) return skipped(rule, rd_missing);
    std::mt19937_64 rng(f.config.seed ? *f.config.seed : fnv1a(g6));
    for (int i = 0; i < 10; ++i) {
      Graph h = sample_spanning_subgraph(g, rng);
      int rh = 0;
      try {
        rh = f.rd_of(h);
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::Budget && e.kind() != ErrorKind::Size) throw;
        return skipped(rule, "subgraph rd unavailable");
      }
      if (rh > *r) {
        obs << "sub=" << encode_graph6(h) << " rd(sub)=" << rh << " rd=" << *r;
        return verdict(rule, false, obs.str());
      }
    }
    return verdict(rule, true, "");
  }
  if (rule == "universal") {
    auto r = rd();
    if (!r) return skipped(rule, rd_missing);
    int universal = count_degree(g, [&](int d) { return d == n - 1; });
    obs << "rd=" << *r << " universal=" << universal;
    return verdict(rule, (*r == n - 1) == (universal >= 2), obs.str());
  }
  if (rule == "avg-degree") {
    auto r = rd();
    if (!r) return skipped(rule, rd_missing);
    int floor_d = 2 * m / n;
    obs << "rd=" << *r << " floor(d)=" << floor_d;
    auto out = verdict(rule, *r >= floor_d, obs.str());
    if (*r == floor_d) out.tight.emplace_back("avg-degree", *r);
    return out;
  }
  if (rule == "critical" || rule == "critical-degree") {
    auto chi = f.critical_chi();
    if (!chi) return skipped(rule, "criticality search over budget");
    if (*chi < 2) return na(rule);
    const int k = *chi - 1;
    if (rule == "critical-degree") {
      obs << "delta=" << g.min_degree() << " k=" << k;
      return verdict(rule, g.min_degree() >= k, obs.str());
    }
    auto r = rd();
    if (!r) return skipped(rule, rd_missing);
    obs << "rd=" << *r << " k=" << k;
    auto out = verdict(rule, *r >= k, obs.str());
    if (*r == k) out.tight.emplace_back("critical", *r);
    return out;
  }
  if (rule == "index-minimal" || rule == "minimal-char") {
    if (m < 2) return na(rule);
    bool minimal = false;
    try {
      minimal = is_chromatic_index_minimal(g, f.config.budget);
      if (rule == "minimal-char") {
        if (delta < 2) return na(rule);
        bool by_class = chromatic_index_minimal_by_class(g, f.config.budget);
        obs << "definition=" << minimal << " characterisation=" << by_class;
        return verdict(rule, minimal == by_class, obs.str());
      }
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::Budget) throw;
      return skipped(rule, "chromatic index over budget");
    }
    if (!minimal) return na(rule);
    auto r = rd();
    if (!r) return skipped(rule, rd_missing);
    obs << "rd=" << *r << " Delta=" << delta;
    auto out = verdict(rule, *r <= delta, obs.str());
    if (*r == delta) out.tight.emplace_back("index-minimal", *r);
    return out;
  }
  if (rule == "regular" || rule == "regular-dense" || rule == "regular-bipartite" ||
      rule == "co-regular") {
    if (!is_regular(g)) return na(rule);
    const int k = delta;
    bool applies = rule == "regular" ||
                   (rule == "regular-dense" && n % 2 == 0 && 7 * k >= 6 * n) ||
                   (rule == "regular-bipartite" && is_bipartite(g)) ||
                   (rule == "co-regular" && n - k >= 1 && n - k <= 4);
    if (!applies) return na(rule);
    auto r = rd();
    if (!r) return skipped(rule, rd_missing);
    obs << "rd=" << *r << " k=" << k;
    if (rule == "regular") {
      auto out = verdict(rule, *r == k || *r == k + 1, obs.str());
      out.tight.emplace_back(*r == k ? "regular:k" : "regular:k+1", *r);
      return out;
    }
    return verdict(rule, *r == k, obs.str());
  }
  if (rule == "block") {
    auto parts = blocks(g);
    if (parts.size() < 2) return na(rule);
    auto r = rd();
    if (!r) return skipped(rule, rd_missing);
    int best = 0;
    for (const Block& b : parts) best = std::max(best, f.rd_of(b.graph));
    obs << "rd=" << *r << " max_block_rd=" << best;
    return verdict(rule, *r == best, obs.str());
  }
  if (rule == "two-leaves" || rule == "few-high-degree") {
    if (n < 4) return na(rule);
    bool applies = rule == "two-leaves" ? count_degree(g, [](int d) { return d == 1; }) >= 2
                                        : count_degree(g, [&](int d) { return d >= n - 2; }) <= 1;
    if (!applies) return na(rule);
    auto r = rd();
    if (!r) return skipped(rule, rd_missing);
    obs << "rd=" << *r << " n-3=" << n - 3;
    auto out = verdict(rule, *r <= n - 3, obs.str());
    if (*r == n - 3) out.tight.emplace_back(rule, *r);
    return out;
  }
  if (rule == "high-degree-pair") {
    if (n < 4) return na(rule);
    auto r = rd();
    if (!r) return skipped(rule, rd_missing);
    if (*r < n - 2) return na(rule);
    int high = count_degree(g, [&](int d) { return d >= n - 2; });
    obs << "rd=" << *r << " high=" << high;
    return verdict(rule, high >= 2, obs.str());
  }
  if (rule == "ng-sum" || rule == "ng-product") {
    if (n < 4 || !f.complement_connected()) return na(rule);
    auto r = rd();
    auto rc = f.rd_complement();
    if (!r || !rc) return skipped(rule, rd_missing);
    if (rule == "ng-sum") {
      int s = *r + *rc;
      obs << "rd=" << *r << " rd(co)=" << *rc << " sum=" << s;
      auto out = verdict(rule, n - 2 <= s && s <= 2 * n - 5, obs.str());
      if (s == n - 2) out.tight.emplace_back("ng-sum:lower", s);
      if (s == 2 * n - 5) out.tight.emplace_back("ng-sum:upper", s);
      return out;
    }
    int p = *r * *rc;
    obs << "rd=" << *r << " rd(co)=" << *rc << " product=" << p;
    auto out = verdict(rule, n - 3 <= p && p <= (n - 2) * (n - 3), obs.str());
    if (p == n - 3) out.tight.emplace_back("ng-product:lower", p);
    if (p == (n - 2) * (n - 3)) out.tight.emplace_back("ng-product:upper", p);
    return out;
  }
  if (rule == "max-size") {
    if (n < 5 || n % 2 == 0) return na(rule);
    auto r = rd();
    if (!r) return skipped(rule, rd_missing);
    const int limit2 = (*r + 1) * (n - 1);  // twice the size limit
    obs << "e=" << m << " rd=" << *r << " limit=" << limit2 / 2;
    auto out = verdict(rule, 2 * m <= limit2, obs.str());
    if (2 * m == limit2) out.tight.emplace_back("max-size:rd=" + std::to_string(*r), m);
    return out;
  }
  if (rule == "bounds") {
    auto r = rd();
    if (!r) return skipped(rule, rd_missing);
    RdBounds b = rd_bounds(g, f.config.budget);
    obs << "rd=" << *r << " lower=" << b.lower << " upper=" << b.upper;
    // Name the offending entries so the failure can be traced to one rule.
    for (const BoundEntry& e : b.ledger) {
      bool bad = (e.kind != BoundKind::Upper && e.value > *r) ||
                 (e.kind != BoundKind::Lower && e.value < *r);
      if (bad) obs << " bad=" << e.rule << ':' << to_string(e.kind) << '=' << e.value;
    }
    return verdict(rule, b.consistent() && b.lower <= *r && *r <= b.upper, obs.str());
  }
  if (rule == "fournier" || rule == "regular-class1") {
    auto fast = rule == "fournier" ? fournier_class1_test(g) : regular_class1_test(g);
    if (!fast) return na(rule);
    auto chi = f.chi_index();
    if (!chi) return skipped(rule, "chromatic index over budget");
    obs << "chi'=" << *chi << " Delta=" << delta;
    return verdict(rule, *chi == delta, obs.str());
  }
  fail(ErrorKind::Parameter, "unknown rule '" + rule + "'");
}

}  // namespace

TheoremReport check_theorems(const Graph& g, const SurveyConfig& config) {
  const auto start = std::chrono::steady_clock::now();
  TheoremReport report;
  report.graph6 = encode_graph6(g);
  const auto rules = select_rules(config.rules);
  const bool usable = g.order() >= 2 && is_connected(g);
  GraphFacts facts(g, config);
  for (const std::string& rule : rules) {
    report.outcomes.push_back(usable ? check_rule(rule, facts, report.graph6) : na(rule));
  }
  report.seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

void SurveyReport::add(std::size_t index, const TheoremReport& report) {
  ++graphs_;
  for (const RuleOutcome& o : report.outcomes) {
    RuleCounts& c = counts_[o.rule];
    switch (o.outcome) {
      case Outcome::Pass: ++c.pass; break;
      case Outcome::Fail:
        ++c.fail;
        violations_[{index, o.rule}] = {report.graph6, o.rule, o.observed};
        break;
      case Outcome::NotApplicable: ++c.na; break;
      case Outcome::Skipped:
        ++c.skipped;
        skipped_[{index, o.rule}] = report.graph6;
        break;
    }
    for (const auto& [id, value] : o.tight) {
      auto it = witnesses_.find(id);
      if (it == witnesses_.end() || index < it->second.index) {
        witnesses_[id] = {report.graph6, value, index};
      }
    }
  }
}

void SurveyReport::merge(const SurveyReport& other) {
  graphs_ += other.graphs_;
  for (const auto& [rule, c] : other.counts_) {
    RuleCounts& mine = counts_[rule];
    mine.pass += c.pass;
    mine.fail += c.fail;
    mine.na += c.na;
    mine.skipped += c.skipped;
  }
  violations_.insert(other.violations_.begin(), other.violations_.end());
  skipped_.insert(other.skipped_.begin(), other.skipped_.end());
  for (const auto& [id, w] : other.witnesses_) {
    auto it = witnesses_.find(id);
    if (it == witnesses_.end() || w.index < it->second.index) witnesses_[id] = w;
  }
}

std::vector<Violation> SurveyReport::violations() const {
  std::vector<Violation> out;
  for (const auto& [key, v] : violations_) out.push_back(v);
  return out;
}

std::vector<std::pair<std::string, std::string>> SurveyReport::skipped() const {
  std::vector<std::pair<std::string, std::string>> out;
  for (const auto& [key, g6] : skipped_) out.emplace_back(g6, key.second);
  return out;
}

std::string SurveyReport::render(const std::vector<std::string>& rules) const {
  std::ostringstream out;
  const auto selected = select_rules(rules);
  if (graphs_ == 0) return "";
  for (const std::string& rule : selected) {
    RuleCounts c;
    if (auto it = counts_.find(rule); it != counts_.end()) c = it->second;
    out << "RULE " << rule << " pass=" << c.pass << " fail=" << c.fail
        << " na=" << c.na + c.skipped << '\n';
  }
  for (const auto& [key, v] : violations_) {
    out << "VIOLATION " << v.graph6 << ' ' << v.rule;
    if (!v.observed.empty()) out << ' ' << v.observed;
    out << '\n';
  }
  for (const auto& [id, w] : witnesses_) {
    out << "WITNESS " << id << ' ' << w.graph6 << " value=" << w.value << '\n';
  }
  return out.str();
}

std::vector<Graph> read_graph6_stream(const std::string& text) {
  std::vector<Graph> out;
  std::istringstream in(text);
  std::string line;
  for (size_t lineno = 1; std::getline(in, line); ++lineno) {
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
    if (line.empty() || line.front() == '>') continue;
    try {
      out.push_back(parse_graph6(line));
    } catch (const Error& e) {
      fail(ErrorKind::Format, "line " + std::to_string(lineno) + ": " + e.what());
    }
  }
  return out;
}

SurveyReport survey_graphs(const std::vector<Graph>& graphs, const SurveyConfig& config) {
  if (config.budget == 0) fail(ErrorKind::Parameter, "budget must be positive");
  select_rules(config.rules);  // validate before any work
  const int jobs = std::max(1, config.jobs);
  std::vector<TheoremReport> reports(graphs.size());
  std::atomic<size_t> next{0};
  std::exception_ptr error;
  std::mutex error_lock;
  auto worker = [&] {
    for (size_t i = next++; i < graphs.size(); i = next++) {
      try {
        reports[i] = check_theorems(graphs[i], config);
      } catch (...) {
        std::lock_guard<std::mutex> guard(error_lock);
        if (!error) error = std::current_exception();
      }
    }
  };
  std::vector<std::thread> pool;
  for (int t = 1; t < jobs; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);

  SurveyReport out;
  for (size_t i = 0; i < reports.size(); ++i) out.add(i, reports[i]);
  return out;
}

SurveyReport run_survey(const SurveyConfig& config) {
  std::vector<Graph> graphs;
  if (config.exhaustive_n) {
    graphs = enumerate_connected_graphs(*config.exhaustive_n);
  } else {
    std::ifstream in(config.stream_path);
    if (!in) fail(ErrorKind::Io, "cannot open '" + config.stream_path + "'");
    std::ostringstream text;
    text << in.rdbuf();
    try {
      graphs = read_graph6_stream(text.str());
    } catch (const Error& e) {
      fail(e.kind(), config.stream_path + ": " + e.what());
    }
  }
  return survey_graphs(graphs, config);
}

}  // namespace rdisc
