#pragma once

#include <map>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "eventlog.hpp"
#include "graph.hpp"
#include "measures.hpp"

namespace analog {

/// Directly-follows graph. Node 0 is the start sentinel, node 1 the end
/// sentinel, and node 2 + id holds activity `id` of the source log.
struct Dfg {
  static constexpr NodeId start = 0;
  static constexpr NodeId end = 1;
  std::vector<std::string> labels;
  Digraph g;
  std::map<std::pair<NodeId, NodeId>, std::uint64_t> weights;

  std::size_t node_count() const { return g.size(); }
  std::size_t edge_count() const { return g.edge_count(); }
  static NodeId node_of(ActivityId a) { return static_cast<NodeId>(a + 2); }
};

inline constexpr const char* start_symbol = "\xE2\x96\xB7";  // U+25B7
inline constexpr const char* end_symbol = "\xE2\x96\xA1";    // U+25A1

inline Dfg build_dfg(const EventLog& l) {
  if (l.empty()) throw undefined_measure("cannot build a DFG for an empty log");
  Dfg d;
  d.labels = {start_symbol, end_symbol};
  for (const auto& n : l.activities()) d.labels.push_back(n);
  d.g = Digraph(d.labels.size());
  auto link = [&](NodeId u, NodeId v, std::uint64_t c) {
    d.g.add_edge(u, v);
    auto& w = d.weights[{u, v}];
    w = EventLog::checked_add(w, c);
  };
  for (const auto& v : l.variants()) {
    const auto& t = v.trace;
    if (t.empty()) {
      link(Dfg::start, Dfg::end, v.count);
      continue;
    }
    link(Dfg::start, Dfg::node_of(t.front()), v.count);
    for (std::size_t i = 0; i + 1 < t.size(); ++i) link(Dfg::node_of(t[i]), Dfg::node_of(t[i + 1]), v.count);
    link(Dfg::node_of(t.back()), Dfg::end, v.count);
  }
  return d;
}

/// The measures adapted to DFGs. Splits have more than one outgoing edge,
/// joins more than one incoming edge, sentinels included.
inline DfgReport dfg_report(const Dfg& d) {
  DfgReport r;
  const auto& g = d.g;
  const std::size_t n = g.size(), m = g.edge_count();
  std::vector<char> split(n), join(n), conn(n);
  std::uint64_t split_out = 0, join_in = 0, deg_sum = 0, deg_max = 0, nconn = 0;
  for (NodeId v = 0; v < n; ++v) {
    split[v] = g.succ[v].size() > 1;
    join[v] = g.pred[v].size() > 1;
    conn[v] = split[v] || join[v];
    if (split[v]) split_out += g.succ[v].size();
    if (join[v]) join_in += g.pred[v].size();
    if (conn[v]) {
      std::uint64_t deg = g.succ[v].size() + g.pred[v].size();
      deg_sum += deg;
      deg_max = std::max(deg_max, deg);
      ++nconn;
    }
  }
  r[dm::size] = static_cast<double>(n);
  r[dm::mismatch] = static_cast<double>(split_out > join_in ? split_out - join_in : join_in - split_out);
  r[dm::cfc] = static_cast<double>(split_out);
  if (nconn) {
    r[dm::acd] = static_cast<double>(deg_sum) / static_cast<double>(nconn);
    r[dm::mcd] = static_cast<double>(deg_max);
  }
  if (n > 1) {
    std::vector<double> w(n, 1.0);
    for (NodeId v = 0; v < n; ++v)
      if (conn[v]) w[v] = 1.0 / static_cast<double>(g.succ[v].size() + g.pred[v].size());
    double sum = 0;
    for (NodeId s = 0; s < n; ++s)
      for (double x : max_product_from(g, s, w)) sum += x;
    r[dm::cross_connectivity] = 1.0 - sum / (static_cast<double>(n) * static_cast<double>(n - 1));
    r[dm::density] = static_cast<double>(m) / static_cast<double>(n * (n - 1));
  }
  if (n > 2) {
    auto cut = cut_vertices(g);
    auto cyc = nodes_on_cycles(g);
    std::size_t nc = 0, ny = 0;
    for (NodeId v = 0; v < n; ++v) {
      nc += cut[v] != 0;
      ny += cyc[v] != 0;
    }
    r[dm::separability] = static_cast<double>(n - 2 - nc) / static_cast<double>(n - 2);
    r[dm::cyclicity] = static_cast<double>(ny) / static_cast<double>(n - 2);
  }
  if (m) {
    std::size_t plain = 0;
    for (NodeId u = 0; u < n; ++u)
      for (NodeId v : g.succ[u]) plain += !conn[u] && !conn[v];
    r[dm::sequentiality] = static_cast<double>(m - plain) / static_cast<double>(m);
  }
  if (n) r[dm::cnc] = static_cast<double>(m) / static_cast<double>(n);
  r[dm::depth] = graph_depth(g, Dfg::start, Dfg::end, split, join);
  r[dm::diameter] = static_cast<double>(longest_simple_path(g, Dfg::start, Dfg::end));
  return r;
}

inline nlohmann::ordered_json dfg_to_json(const Dfg& d) {
  nlohmann::ordered_json nodes = d.labels;
  nlohmann::ordered_json edges = nlohmann::ordered_json::array();
  for (NodeId u = 0; u < d.g.size(); ++u)
    for (NodeId v : d.g.succ[u])
      edges.push_back({{"from", d.labels[u]}, {"to", d.labels[v]}, {"count", d.weights.at({u, v})}});
  return {{"nodes", nodes}, {"edges", edges}};
}

inline std::string dfg_to_dot(const Dfg& d) {
  std::ostringstream os;
  os << "digraph dfg {\n  rankdir=LR;\n";
  for (NodeId v = 0; v < d.g.size(); ++v) {
    std::string label = d.labels[v];
    std::string esc;
    for (char c : label) {
      if (c == '"' || c == '\\') esc += '\\';
      esc += c;
    }
    os << "  n" << v << " [shape=box,label=\"" << esc << "\"];\n";
  }
  for (NodeId u = 0; u < d.g.size(); ++u)
    for (NodeId v : d.g.succ[u]) os << "  n" << u << " -> n" << v << " [label=\"" << d.weights.at({u, v}) << "\"];\n";
  os << "}\n";
  return os.str();
}

}  // namespace analog
