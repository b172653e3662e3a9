#include "rdisc/bounds.hpp"

#include <algorithm>
#include <sstream>

#include "rdisc/connectivity.hpp"
#include "rdisc/error.hpp"

namespace rdisc {

const char* to_string(BoundKind kind) {
  switch (kind) {
    case BoundKind::Lower: return "lower";
    case BoundKind::Upper: return "upper";
    case BoundKind::Exact: return "exact";
  }
  return "?";
}

int multipartite_rd(std::vector<int> parts) {
  if (parts.size() < 2) fail(ErrorKind::Parameter, "need at least two parts");
  std::sort(parts.begin(), parts.end());
  int n = 0;
  for (int p : parts) n += p;
  return parts[0] == 1 ? n - parts[1] : n - parts[0];
}

namespace {

class Ledger {
 public:
  void add(const char* rule, BoundKind kind, int value, std::string statement) {
    entries_.push_back({rule, kind, value, std::move(statement)});
  }
  std::vector<BoundEntry> take() { return std::move(entries_); }

 private:
  std::vector<BoundEntry> entries_;
};

int count_degree_at_least(const Graph& g, int d) {
  int count = 0;
  for (int v = 0; v < g.order(); ++v) count += g.degree(v) >= d ? 1 : 0;
  return count;
}

int count_degree_equal(const Graph& g, int d) {
  int count = 0;
  for (int v = 0; v < g.order(); ++v) count += g.degree(v) == d ? 1 : 0;
  return count;
}

}  // namespace

RdBounds rd_bounds(const Graph& g, std::uint64_t budget) {
  if (g.order() < 2) fail(ErrorKind::Parameter, "rd bounds need a nontrivial graph");
  if (!is_connected(g)) fail(ErrorKind::Structure, "rd bounds need a connected graph");

  const int n = g.order();
  const int m = g.size();
  const int delta = g.max_degree();
  const bool regular = is_regular(g);
  RdBounds out;
  Ledger ledger;

  // Lower bounds.
  ledger.add("upper-edge-connectivity", BoundKind::Lower, upper_edge_connectivity(g),
             "rd(G) >= lambda+(G) >= lambda(G)");
  ledger.add("average-degree", BoundKind::Lower, (2 * m) / n, "rd(G) >= floor(2e(G)/n)");
  if (kMaderRuleEnabled && n >= 3) {
    ledger.add("mader", BoundKind::Lower, mader_lambda_plus_lower_bound(g),
               "lambda+(G) >= k+1 when 2e(G) > (k+1)(n-1) - sigma_k(G), n >= k+2");
  }
  try {
    if (auto chi = is_color_critical(g, budget); chi && *chi >= 2) {
      ledger.add("critical", BoundKind::Lower, *chi - 1,
                 "connected (k+1)-critical G has rd(G) >= k");
    }
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::Budget) throw;
    out.skipped.emplace_back("critical");
  }
  if (regular) {
    ledger.add("regular", BoundKind::Lower, delta, "k-regular G has k <= rd(G) <= k+1");
    ledger.add("regular", BoundKind::Upper, delta + 1, "k-regular G has k <= rd(G) <= k+1");
  }
  if (is_tree(g)) {
    ledger.add("tree", BoundKind::Exact, 1, "rd(G) = 1 iff G is a tree");
  } else {
    ledger.add("tree", BoundKind::Lower, 2, "rd(G) = 1 iff G is a tree");
  }
  if (count_degree_equal(g, n - 1) >= 2) {
    ledger.add("two-universal", BoundKind::Exact, n - 1,
               "rd(G) = n-1 iff G has two vertices of degree n-1");
  } else if (n >= 3) {
    ledger.add("two-universal", BoundKind::Upper, n - 2,
               "rd(G) = n-1 iff G has two vertices of degree n-1");
  }

  // Upper bounds.
  try {
    ledger.add("chromatic-index", BoundKind::Upper,
               chromatic_index_exact(g, budget).verdict.chromatic_index, "rd(G) <= chi'(G)");
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::Budget) throw;
    out.skipped.emplace_back("chromatic-index");
  }
  ledger.add("vizing", BoundKind::Upper, delta + 1, "rd(G) <= chi'(G) <= Delta(G)+1");
  ledger.add("order", BoundKind::Upper, n - 1, "rd(G) <= rd(K_n) = n-1");
  if (is_cycle(g)) ledger.add("cycle", BoundKind::Exact, 2, "rd(C_n) = 2");
  if (n >= 4 && count_degree_equal(g, 1) >= 2) {
    ledger.add("two-leaves", BoundKind::Upper, n - 3,
               "two vertices of degree 1 give rd(G) <= n-3");
  }
  if (n >= 4 && count_degree_at_least(g, n - 2) <= 1) {
    ledger.add("few-high-degree", BoundKind::Upper, n - 3,
               "at most one vertex of degree >= n-2 gives rd(G) <= n-3");
  }
  if (m >= 2) {
    try {
      if (is_chromatic_index_minimal(g, budget)) {
        ledger.add("index-minimal", BoundKind::Upper, delta,
                   "chi'-minimal connected G has rd(G) <= Delta(G)");
      }
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::Budget) throw;
      out.skipped.emplace_back("index-minimal");
    }
  }

  // Exact values.
  if (auto parts = multipartite_parts(g); !parts.empty()) {
    ledger.add("multipartite", BoundKind::Exact, multipartite_rd(parts),
               "rd(K_{n1..nk}) = n-n2 if n1 = 1, else n-n1");
  }
  if (regular && is_bipartite(g)) {
    ledger.add("regular-bipartite", BoundKind::Exact, delta, "k-regular bipartite G has rd(G) = k");
  }
  if (regular && n % 2 == 0 && 7 * delta >= 6 * n) {
    ledger.add("regular-dense", BoundKind::Exact, delta,
               "k-regular G of even order with k >= 6n/7 has rd(G) = k");
  }
  if (regular && n - delta >= 1 && n - delta <= 4) {
    ledger.add("co-regular", BoundKind::Exact, delta,
               "(n-k)-regular G with 1 <= k <= 4 has rd(G) = n-k");
  }
  auto parts = blocks(g);
  if (parts.size() > 1) {
    int lo = 0;
    int hi = 0;
    for (const Block& b : parts) {
      RdBounds inner = rd_bounds(b.graph, budget);
      lo = std::max(lo, inner.lower);
      hi = std::max(hi, inner.upper);
      for (auto& s : inner.skipped) out.skipped.push_back("block/" + s);
    }
    const char* statement = "rd(G) = max over blocks B of rd(B)";
    if (lo == hi) {
      ledger.add("block-max", BoundKind::Exact, lo, statement);
    } else {
      ledger.add("block-max", BoundKind::Lower, lo, statement);
      ledger.add("block-max", BoundKind::Upper, hi, statement);
    }
  }

  out.ledger = ledger.take();
  out.lower = 1;
  out.upper = n - 1;
  for (const BoundEntry& e : out.ledger) {
    if (e.kind != BoundKind::Upper) out.lower = std::max(out.lower, e.value);
    if (e.kind != BoundKind::Lower) out.upper = std::min(out.upper, e.value);
  }
  if (out.lower == out.upper) out.exact = out.lower;
  return out;
}

std::string format_bounds(const RdBounds& b) {
  std::ostringstream out;
  for (const BoundEntry& e : b.ledger) {
    out << to_string(e.kind) << ' ' << e.value << ' ' << e.rule << ": " << e.statement << '\n';
  }
  for (const std::string& s : b.skipped) out << "skipped " << s << '\n';
  return out.str();
}

}  // namespace rdisc
