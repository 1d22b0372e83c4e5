#pragma once

#include <cmath>
#include <map>
#include <string>

#include "measures.hpp"
#include "petrinet.hpp"

namespace analog {

struct NetOptions {
  /// Count repeated tau labels as duplicate tasks (the flower model's stated
  /// score of 1 relies on this).
  bool count_tau_duplicates = true;
};

inline std::size_t size(const PetriNet& n) { return n.size(); }

inline std::size_t connector_mismatch(const PetriNet& n) {
  auto c = connector_sets(n);
  auto absdiff = [](std::size_t a, std::size_t b) { return a > b ? a - b : b - a; };
  std::size_t xs = 0, xj = 0, as = 0, aj = 0;
  for (NodeId v = 0; v < n.size(); ++v) {
    if (c.xor_split[v]) xs += n.out_degree(v);
    if (c.xor_join[v]) xj += n.in_degree(v);
    if (c.and_split[v]) as += n.out_degree(v);
    if (c.and_join[v]) aj += n.in_degree(v);
  }
  return absdiff(xs, xj) + absdiff(as, aj);
}

inline double connector_heterogeneity(const PetriNet& n) {
  auto c = connector_sets(n);
  std::size_t nx = 0, na = 0;
  for (NodeId v = 0; v < n.size(); ++v) {
    nx += c.is_xor(v);
    na += c.is_and(v);
  }
  if (nx + na == 0) throw undefined_measure("connector heterogeneity needs a connector");
  auto term = [&](std::size_t k) {
    double r = static_cast<double>(k) / static_cast<double>(nx + na);
    return r > 0 ? r * std::log2(r) : 0.0;
  };
  return -(term(nx) + term(na)) + 0.0;
}

/// Node weights for cross-connectivity: 1/degree for xor connectors, else 1.
inline std::vector<double> connection_weights(const PetriNet& n) {
  auto c = connector_sets(n);
  std::vector<double> w(n.size(), 1.0);
  for (NodeId v = 0; v < n.size(); ++v)
    if (c.is_xor(v)) w[v] = 1.0 / static_cast<double>(n.in_degree(v) + n.out_degree(v));
  return w;
}

inline double cross_connectivity(const PetriNet& n) {
  const std::size_t k = n.size();
  if (k < 2) throw undefined_measure("cross-connectivity needs two nodes");
  auto w = connection_weights(n);
  double sum = 0;
  for (NodeId s = 0; s < k; ++s)
    for (double x : max_product_from(n.graph(), s, w)) sum += x;
  return 1.0 - sum / (static_cast<double>(k) * static_cast<double>(k - 1));
}

inline std::size_t token_split(const PetriNet& n) {
  auto c = connector_sets(n);
  std::size_t s = 0;
  for (NodeId v = 0; v < n.size(); ++v)
    if (c.and_split[v]) s += n.out_degree(v) - 1;
  return s;
}

inline std::size_t control_flow_complexity(const PetriNet& n) {
  auto c = connector_sets(n);
  std::size_t s = 0;
  for (NodeId v = 0; v < n.size(); ++v) {
    if (c.and_split[v]) s += 1;
    if (c.xor_split[v]) s += n.out_degree(v);
  }
  return s;
}

inline double separability(const PetriNet& n) {
  if (n.size() <= 2) throw undefined_measure("separability needs more than two nodes");
  auto cut = cut_vertices(n);
  std::size_t k = 0;
  for (char x : cut) k += x != 0;
  return static_cast<double>(n.size() - 2 - k) / static_cast<double>(n.size() - 2);
}

struct ConnectorDegree {
  double avg = 0;
  std::size_t max = 0;
};

inline ConnectorDegree connector_degree(const PetriNet& n) {
  auto c = connector_sets(n);
  std::size_t sum = 0, cnt = 0, mx = 0;
  for (NodeId v = 0; v < n.size(); ++v)
    if (c.is_connector(v)) {
      std::size_t d = n.in_degree(v) + n.out_degree(v);
      sum += d;
      mx = std::max(mx, d);
      ++cnt;
    }
  if (!cnt) throw undefined_measure("connector degree needs a connector");
  return {static_cast<double>(sum) / static_cast<double>(cnt), mx};
}

inline double sequentiality(const PetriNet& n) {
  const std::size_t m = n.arc_count();
  if (!m) throw undefined_measure("sequentiality needs an arc");
  auto c = connector_sets(n);
  std::size_t plain = 0;
  for (NodeId u = 0; u < n.size(); ++u)
    for (NodeId v : n.graph().succ[u]) plain += !c.is_connector(u) && !c.is_connector(v);
  return static_cast<double>(m - plain) / static_cast<double>(m);
}

inline std::size_t diameter(const PetriNet& n) {
  if (!n.source() || !n.sink()) throw undefined_measure("diameter needs a source and a sink place");
  return longest_simple_path(n.graph(), *n.source(), *n.sink());
}

inline double cyclicity(const PetriNet& n) {
  if (n.size() <= 2) throw undefined_measure("cyclicity needs more than two nodes");
  auto cyc = nodes_on_cycles(n);
  std::size_t k = 0;
  for (char x : cyc) k += x != 0;
  return static_cast<double>(k) / static_cast<double>(n.size() - 2);
}

inline double coefficient_network_connectivity(const PetriNet& n) {
  if (!n.size()) throw undefined_measure("network connectivity of an empty net");
  return static_cast<double>(n.arc_count()) / static_cast<double>(n.size());
}

inline double density(const PetriNet& n) {
  const std::size_t t = n.transition_count(), p = n.place_count();
  if (t == 0 || p <= 1) throw undefined_measure("density needs a transition and two places");
  return static_cast<double>(n.arc_count()) / static_cast<double>(2 * t * (p - 1));
}

inline std::size_t duplicate_tasks(const PetriNet& n, const NetOptions& opt = {}) {
  std::map<std::string, std::size_t> labels;
  std::size_t taus = 0;
  for (const auto& node : n.nodes()) {
    if (node.kind != NodeKind::transition) continue;
    if (node.label) ++labels[*node.label];
    else ++taus;
  }
  std::size_t d = 0;
  for (const auto& [_, k] : labels) d += k - 1;
  if (opt.count_tau_duplicates && taus > 1) d += taus - 1;
  return d;
}

/// Places whose preset holds only and-splits and whose postset holds only
/// and-joins (vacuously true for empty sets).
inline std::size_t empty_sequence_flows(const PetriNet& n) {
  auto c = connector_sets(n);
  std::size_t k = 0;
  for (NodeId p = 0; p < n.size(); ++p) {
    if (!n.is_place(p)) continue;
    bool ok = true;
    for (NodeId t : n.graph().pred[p]) ok = ok && c.and_split[t];
    for (NodeId t : n.graph().succ[p]) ok = ok && c.and_join[t];
    k += ok;
  }
  return k;
}

inline ModelReport model_report(const PetriNet& n, const NetOptions& opt = {}) {
  ModelReport r;
  auto guard = [&](std::size_t idx, auto&& f) {
    try {
      r[idx] = static_cast<double>(f());
    } catch (const undefined_measure&) {
    }
  };
  guard(mm::size, [&] { return size(n); });
  guard(mm::mismatch, [&] { return connector_mismatch(n); });
  guard(mm::connector_heterogeneity, [&] { return connector_heterogeneity(n); });
  guard(mm::cross_connectivity, [&] { return cross_connectivity(n); });
  guard(mm::token_split, [&] { return token_split(n); });
  guard(mm::cfc, [&] { return control_flow_complexity(n); });
  guard(mm::separability, [&] { return separability(n); });
  guard(mm::acd, [&] { return connector_degree(n).avg; });
  guard(mm::mcd, [&] { return connector_degree(n).max; });
  guard(mm::sequentiality, [&] { return sequentiality(n); });
  guard(mm::depth, [&] { return depth(n); });
  guard(mm::diameter, [&] { return diameter(n); });
  guard(mm::cyclicity, [&] { return cyclicity(n); });
  guard(mm::cnc, [&] { return coefficient_network_connectivity(n); });
  guard(mm::density, [&] { return density(n); });
  guard(mm::duplicate_tasks, [&] { return duplicate_tasks(n, opt); });
  guard(mm::empty_seq_flows, [&] { return empty_sequence_flows(n); });
  return r;
}

}  // namespace analog
