#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <limits>
#include <queue>
#include <set>
#include <utility>
#include <vector>

#include "errors.hpp"

namespace analog {

using NodeId = std::uint32_t;

/// Plain directed graph with successor and predecessor lists. Parallel edges
/// are collapsed on insertion; self-loops are kept.
struct Digraph {
  std::vector<std::vector<NodeId>> succ;
  std::vector<std::vector<NodeId>> pred;

  explicit Digraph(std::size_t n = 0) : succ(n), pred(n) {}

  std::size_t size() const { return succ.size(); }

  NodeId add_node() {
    succ.emplace_back();
    pred.emplace_back();
    return static_cast<NodeId>(succ.size() - 1);
  }

  bool has_edge(NodeId u, NodeId v) const {
    return std::find(succ[u].begin(), succ[u].end(), v) != succ[u].end();
  }

  bool add_edge(NodeId u, NodeId v) {
    if (has_edge(u, v)) return false;
    succ[u].push_back(v);
    pred[v].push_back(u);
    return true;
  }

  std::size_t edge_count() const {
    std::size_t m = 0;
    for (const auto& s : succ) m += s.size();
    return m;
  }

  Digraph reversed() const {
    Digraph r(size());
    r.succ = pred;
    r.pred = succ;
    return r;
  }
};

/// Counts path extensions and throws once the budget is exhausted.
class PathBudget {
 public:
  explicit PathBudget(std::uint64_t limit = path_budget()) : left_(limit) {}
  void step() {
    if (left_ == 0) throw resource_error("simple-path search exceeded its budget (ANALOG_PATH_BUDGET)");
    --left_;
  }

 private:
  std::uint64_t left_;
};

/// Number of distinct simple paths from s to t (s != t).
inline std::uint64_t count_simple_paths(const Digraph& g, NodeId s, NodeId t, PathBudget budget = PathBudget()) {
  std::uint64_t n = 0;
  std::vector<char> on(g.size(), 0);
  std::function<void(NodeId)> rec = [&](NodeId u) {
    if (u == t) {
      ++n;
      return;
    }
    on[u] = 1;
    for (NodeId v : g.succ[u]) {
      if (on[v]) continue;
      budget.step();
      rec(v);
    }
    on[u] = 0;
  };
  rec(s);
  return n;
}

/// Longest simple s-t path measured in nodes; 0 when t is unreachable.
/// For s == t the longest simple cycle through s is reported (nodes, s once).
inline std::size_t longest_simple_path(const Digraph& g, NodeId s, NodeId t, PathBudget budget = PathBudget()) {
  std::size_t best = 0;
  std::vector<char> on(g.size(), 0);
  std::function<void(NodeId, std::size_t)> rec = [&](NodeId u, std::size_t len) {
    on[u] = 1;
    for (NodeId v : g.succ[u]) {
      if (v == t) {
        budget.step();
        best = std::max(best, s == t ? len : len + 1);
        continue;
      }
      if (on[v]) continue;
      budget.step();
      rec(v, len + 1);
    }
    on[u] = 0;
  };
  rec(s, 1);
  return best;
}

/// Maximum product of edge weights over simple paths from `s` to every node.
/// Edge weight is w[u]*w[v] with 0 < w <= 1, so a Dijkstra-style search over
/// products is exact: removing a cycle never lowers a product. Entry `s`
/// holds the best simple cycle through s (0 if none).
inline std::vector<double> max_product_from(const Digraph& g, NodeId s, const std::vector<double>& w) {
  std::vector<double> best(g.size(), 0.0);
  std::vector<char> done(g.size(), 0);
  double cycle = 0.0;
  using Item = std::pair<double, NodeId>;
  std::priority_queue<Item> pq;
  best[s] = 1.0;
  pq.push({1.0, s});
  while (!pq.empty()) {
    auto [d, u] = pq.top();
    pq.pop();
    if (done[u]) continue;
    done[u] = 1;
    for (NodeId v : g.succ[u]) {
      double cand = d * w[u] * w[v];
      if (v == s) {
        cycle = std::max(cycle, cand);
        continue;
      }
      if (!done[v] && cand > best[v]) {
        best[v] = cand;
        pq.push({cand, v});
      }
    }
  }
  best[s] = cycle;
  return best;
}

/// Nodes lying on a directed cycle: members of non-trivial strongly connected
/// components, plus nodes with a self-loop.
inline std::vector<char> nodes_on_cycles(const Digraph& g) {
  const std::size_t n = g.size();
  std::vector<int> index(n, -1), low(n, 0), comp(n, -1);
  std::vector<char> onstack(n, 0);
  std::vector<NodeId> stack;
  int counter = 0, ncomp = 0;
  std::vector<std::size_t> comp_size;
  std::function<void(NodeId)> strong = [&](NodeId v) {
    index[v] = low[v] = counter++;
    stack.push_back(v);
    onstack[v] = 1;
    for (NodeId u : g.succ[v]) {
      if (index[u] < 0) {
        strong(u);
        low[v] = std::min(low[v], low[u]);
      } else if (onstack[u]) {
        low[v] = std::min(low[v], index[u]);
      }
    }
    if (low[v] == index[v]) {
      std::size_t sz = 0;
      NodeId x;
      do {
        x = stack.back();
        stack.pop_back();
        onstack[x] = 0;
        comp[x] = ncomp;
        ++sz;
      } while (x != v);
      comp_size.push_back(sz);
      ++ncomp;
    }
  };
  for (NodeId v = 0; v < n; ++v)
    if (index[v] < 0) strong(v);
  std::vector<char> out(n, 0);
  for (NodeId v = 0; v < n; ++v)
    out[v] = comp_size[comp[v]] >= 2 || g.has_edge(v, v);
  return out;
}

/// Articulation points of the underlying undirected simple graph.
inline std::vector<char> cut_vertices(const Digraph& g) {
  const std::size_t n = g.size();
  std::vector<std::set<NodeId>> adj(n);
  for (NodeId u = 0; u < n; ++u)
    for (NodeId v : g.succ[u])
      if (u != v) {
        adj[u].insert(v);
        adj[v].insert(u);
      }
  std::vector<int> disc(n, -1), low(n, 0);
  std::vector<char> cut(n, 0);
  int timer = 0;
  std::function<void(NodeId, int)> dfs = [&](NodeId u, int parent) {
    disc[u] = low[u] = timer++;
    int children = 0;
    for (NodeId v : adj[u]) {
      if (disc[v] < 0) {
        ++children;
        dfs(v, static_cast<int>(u));
        low[u] = std::min(low[u], low[v]);
        if (parent >= 0 && low[v] >= disc[u]) cut[u] = 1;
      } else if (static_cast<int>(v) != parent) {
        low[u] = std::min(low[u], disc[v]);
      }
    }
    if (parent < 0 && children > 1) cut[u] = 1;
  };
  for (NodeId v = 0; v < n; ++v)
    if (disc[v] < 0) dfs(v, -1);
  return cut;
}

/// Connector nesting along simple paths from `src`. Each step into v from u
/// adds +1 when u splits and v does not join, -1 when u does not split and v
/// joins, and 0 otherwise; the running value never drops below zero. Result
/// is the per-node maximum over all simple paths (0 when unreachable).
inline std::vector<int> nesting_depth(const Digraph& g, NodeId src, const std::vector<char>& split,
                                      const std::vector<char>& join, PathBudget budget = PathBudget()) {
  std::vector<int> best(g.size(), 0);
  std::vector<char> on(g.size(), 0);
  std::function<void(NodeId, int)> rec = [&](NodeId u, int lam) {
    on[u] = 1;
    for (NodeId v : g.succ[u]) {
      if (on[v]) continue;
      budget.step();
      int delta = 0;
      if (split[u] && !join[v]) delta = 1;
      else if (!split[u] && join[v]) delta = -1;
      int next = std::max(0, lam + delta);
      best[v] = std::max(best[v], next);
      rec(v, next);
    }
    on[u] = 0;
  };
  rec(src, 0);
  return best;
}

/// max over v of min(in-depth, out-depth) with splits/joins re-derived on the
/// reversed graph for the out-direction.
inline int graph_depth(const Digraph& g, NodeId src, NodeId sink, const std::vector<char>& split,
                       const std::vector<char>& join) {
  auto in = nesting_depth(g, src, split, join);
  auto out = nesting_depth(g.reversed(), sink, join, split);
  int d = 0;
  for (std::size_t v = 0; v < g.size(); ++v) d = std::max(d, std::min(in[v], out[v]));
  return d;
}

}  // namespace analog
