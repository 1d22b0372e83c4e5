#pragma once

#include <algorithm>
#include <array>
#include <functional>
#include <optional>
#include <cstdint>
#include <string>
#include <vector>

#include "dfg.hpp"
#include "eventlog.hpp"
#include "logmetrics.hpp"
#include "petrinet.hpp"

namespace analog {

/// Flower model: p_i -tau-> p, every activity loops on p, p -tau-> p_o.
inline PetriNet flower_model(const EventLog& l) {
  if (l.variety() == 0) throw input_error("flower model needs at least one activity");
  PetriNet n;
  NodeId pi = n.add_place("p_i"), p = n.add_place("p"), po = n.add_place("p_o");
  NodeId tin = n.add_transition("tau_in", std::nullopt), tout = n.add_transition("tau_out", std::nullopt);
  n.add_arc(pi, tin);
  n.add_arc(tin, p);
  auto names = l.activities();
  std::sort(names.begin(), names.end());
  for (const auto& a : names) {
    NodeId t = n.add_transition("t:" + a, a);
    n.add_arc(p, t);
    n.add_arc(t, p);
  }
  n.add_arc(p, tout);
  n.add_arc(tout, po);
  n.set_source(pi);
  n.set_sink(po);
  return n;
}

/// One disjoint sequential branch per distinct trace, in log order.
inline PetriNet trace_net(const EventLog& l) {
  PetriNet n;
  NodeId pi = n.add_place("p_i"), po = n.add_place("p_o");
  n.set_source(pi);
  n.set_sink(po);
  std::size_t k = 0;
  for (const auto& v : l.variants()) {
    if (v.trace.empty()) throw input_error("trace net cannot represent the empty trace");
    ++k;
    NodeId prev = pi;
    for (std::size_t i = 0; i < v.trace.size(); ++i) {
      auto tag = std::to_string(k) + "." + std::to_string(i + 1);
      NodeId t = n.add_transition("t" + tag, l.name(v.trace[i]));
      n.add_arc(prev, t);
      if (i + 1 == v.trace.size()) {
        n.add_arc(t, po);
      } else {
        prev = n.add_place("p" + tag);
        n.add_arc(t, prev);
      }
    }
  }
  return n;
}

enum class Relation : char { causal = '>', inverse = '<', parallel = '|', unrelated = '#' };

/// Footprint over activities sorted by name.
struct Footprint {
  std::vector<std::string> names;
  std::vector<Relation> cells;  // row-major

  Relation at(std::size_t a, std::size_t b) const { return cells[a * names.size() + b]; }
  std::size_t index(const std::string& name) const {
    return static_cast<std::size_t>(std::lower_bound(names.begin(), names.end(), name) - names.begin());
  }
  Relation at(const std::string& a, const std::string& b) const { return at(index(a), index(b)); }
};

inline Footprint footprint(const EventLog& l) {
  Footprint f;
  f.names = l.activities();
  std::sort(f.names.begin(), f.names.end());
  const std::size_t k = f.names.size();
  std::vector<std::size_t> pos(k);
  for (ActivityId a = 0; a < k; ++a) pos[a] = f.index(l.name(a));
  std::vector<char> follows(k * k, 0);
  for (auto [a, b] : directly_follows(l)) follows[pos[a] * k + pos[b]] = 1;
  f.cells.resize(k * k);
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = 0; b < k; ++b) {
      bool ab = follows[a * k + b], ba = follows[b * k + a];
      f.cells[a * k + b] = ab && ba ? Relation::parallel
                           : ab     ? Relation::causal
                           : ba     ? Relation::inverse
                                    : Relation::unrelated;
    }
  return f;
}

inline constexpr std::size_t alpha_activity_limit = 20;

using ActivitySet = std::uint32_t;  // bitmask over footprint indices

struct AlphaTuples {
  std::vector<std::string> names;  // footprint order
  std::vector<std::pair<ActivitySet, ActivitySet>> x_l;
  std::vector<std::pair<ActivitySet, ActivitySet>> y_l;
  ActivitySet a_i = 0, a_o = 0;

  std::vector<std::string> members(ActivitySet s) const {
    std::vector<std::string> out;
    for (std::size_t i = 0; i < names.size(); ++i)
      if (s >> i & 1u) out.push_back(names[i]);
    return out;
  }
};

/// X_L (optional, exponential) and its maximal members Y_L. A pair is kept
/// in Y_L when no single activity can be added to either side.
inline AlphaTuples alpha_tuples(const EventLog& l, bool with_x_l = true) {
  auto f = footprint(l);
  const std::size_t k = f.names.size();
  if (k > alpha_activity_limit)
    throw resource_error("alpha miner limited to " + std::to_string(alpha_activity_limit) + " activities");
  AlphaTuples t;
  t.names = f.names;
  for (const auto& v : l.variants()) {
    if (v.trace.empty()) continue;
    t.a_i |= 1u << f.index(l.name(v.trace.front()));
    t.a_o |= 1u << f.index(l.name(v.trace.back()));
  }
  std::vector<ActivitySet> unrelated(k, 0), succ(k, 0);
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = 0; b < k; ++b) {
      if (f.at(a, b) == Relation::unrelated) unrelated[a] |= 1u << b;
      if (f.at(a, b) == Relation::causal) succ[a] |= 1u << b;
    }
  auto common = [&](ActivitySet s, const std::vector<ActivitySet>& rel) {
    ActivitySet c = (k == 32) ? ~0u : ((1u << k) - 1);
    for (std::size_t a = 0; a < k; ++a)
      if (s >> a & 1u) c &= rel[a];
    return c;
  };
  // Non-empty sets whose members are pairwise and self unrelated.
  std::vector<ActivitySet> cliques;
  std::function<void(ActivitySet, std::size_t, ActivitySet)> grow = [&](ActivitySet cur, std::size_t from, ActivitySet allowed) {
    for (std::size_t a = from; a < k; ++a) {
      if (!(allowed >> a & 1u)) continue;
      ActivitySet next = cur | (1u << a);
      cliques.push_back(next);
      grow(next, a + 1, allowed & unrelated[a]);
    }
  };
  ActivitySet self_unrelated = 0;
  for (std::size_t a = 0; a < k; ++a)
    if (unrelated[a] >> a & 1u) self_unrelated |= 1u << a;
  grow(0, 0, self_unrelated);
  std::sort(cliques.begin(), cliques.end());
  auto is_subset = [](ActivitySet a, ActivitySet b) { return (a & ~b) == 0; };
  auto extends = [&](std::size_t a, ActivitySet set) {
    return (self_unrelated >> a & 1u) && (set & ~unrelated[a]) == 0;
  };
  for (ActivitySet b : cliques) {
    ActivitySet cand = common(b, succ);
    if (!cand) continue;
    for (ActivitySet c : cliques) {
      if (!is_subset(c, cand)) continue;
      if (with_x_l) t.x_l.push_back({b, c});
      bool maximal = true;
      for (std::size_t a = 0; a < k && maximal; ++a) {
        ActivitySet bit = 1u << a;
        if (!(c & bit) && (cand & bit) && extends(a, c)) maximal = false;
        if (!(b & bit) && is_subset(c, succ[a]) && extends(a, b)) maximal = false;
      }
      if (maximal) t.y_l.push_back({b, c});
    }
  }
  auto key = [&](const std::pair<ActivitySet, ActivitySet>& p) { return std::make_pair(t.members(p.first), t.members(p.second)); };
  std::sort(t.y_l.begin(), t.y_l.end(), [&](const auto& p, const auto& q) { return key(p) < key(q); });
  return t;
}

inline std::string alpha_place_id(const AlphaTuples& t, ActivitySet b, ActivitySet c) {
  auto join = [](const std::vector<std::string>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + v[i];
    return s;
  };
  return "p({" + join(t.members(b)) + "},{" + join(t.members(c)) + "})";
}

inline PetriNet alpha_net(const AlphaTuples& t) {
  PetriNet n;
  NodeId pi = n.add_place("p_i"), po = n.add_place("p_o");
  n.set_source(pi);
  n.set_sink(po);
  std::vector<NodeId> tr;
  for (const auto& a : t.names) tr.push_back(n.add_transition("t:" + a, a));
  for (std::size_t a = 0; a < t.names.size(); ++a)
    if (t.a_i >> a & 1u) n.add_arc(pi, tr[a]);
  for (const auto& [b, c] : t.y_l) {
    NodeId p = n.add_place(alpha_place_id(t, b, c));
    for (std::size_t a = 0; a < t.names.size(); ++a) {
      if (b >> a & 1u) n.add_arc(tr[a], p);
      if (c >> a & 1u) n.add_arc(p, tr[a]);
    }
  }
  for (std::size_t a = 0; a < t.names.size(); ++a)
    if (t.a_o >> a & 1u) n.add_arc(tr[a], po);
  return n;
}

inline PetriNet alpha_miner(const EventLog& l) {
  if (l.empty()) throw input_error("alpha miner needs a non-empty log");
  return alpha_net(alpha_tuples(l, false));
}

/// Directly-follows miner without filtering: a place per DFG node and a
/// transition per edge (silent when the edge enters the end sentinel).
inline PetriNet dfm_miner(const EventLog& l) {
  auto d = build_dfg(l);
  const std::size_t k = d.node_count();
  // Node order: start, activities by name, end.
  std::vector<NodeId> order{Dfg::start};
  std::vector<NodeId> acts;
  for (NodeId v = 2; v < k; ++v) acts.push_back(v);
  std::sort(acts.begin(), acts.end(), [&](NodeId a, NodeId b) { return d.labels[a] < d.labels[b]; });
  order.insert(order.end(), acts.begin(), acts.end());
  order.push_back(Dfg::end);
  std::vector<std::size_t> rank(k);
  for (std::size_t i = 0; i < order.size(); ++i) rank[order[i]] = i;

  PetriNet n;
  std::vector<NodeId> place(k);
  for (NodeId v : order) {
    std::string id = v == Dfg::start ? "p_start" : v == Dfg::end ? "p_end" : "p:" + d.labels[v];
    place[v] = n.add_place(id);
  }
  n.set_source(place[Dfg::start]);
  n.set_sink(place[Dfg::end]);
  for (NodeId u : order) {
    auto succ = d.g.succ[u];
    std::sort(succ.begin(), succ.end(), [&](NodeId a, NodeId b) { return rank[a] < rank[b]; });
    for (NodeId v : succ) {
      std::string from = u == Dfg::start ? "start" : d.labels[u];
      NodeId t = v == Dfg::end ? n.add_transition("tau:" + from, std::nullopt)
                               : n.add_transition("t:" + from + ">" + d.labels[v], d.labels[v]);
      n.add_arc(place[u], t);
      n.add_arc(t, place[v]);
    }
  }
  return n;
}

enum class Miner { flower, trace_net, alpha, dfg, dfm };

inline constexpr std::array<std::pair<Miner, std::string_view>, 5> miner_names{{
    {Miner::flower, "flower"},
    {Miner::trace_net, "tracenet"},
    {Miner::alpha, "alpha"},
    {Miner::dfg, "dfg"},
    {Miner::dfm, "dfm"},
}};

inline std::string_view miner_name(Miner m) {
  for (auto [k, v] : miner_names)
    if (k == m) return v;
  return "?";
}

inline std::optional<Miner> parse_miner(std::string_view s) {
  for (auto [k, v] : miner_names)
    if (v == s) return k;
  if (s == "trace-net" || s == "trace_net") return Miner::trace_net;
  return std::nullopt;
}

/// Runs a Petri-net miner; the DFG is not a Petri net and is rejected here.
inline PetriNet discover(Miner m, const EventLog& l) {
  switch (m) {
    case Miner::flower: return flower_model(l);
    case Miner::trace_net: return trace_net(l);
    case Miner::alpha: return alpha_miner(l);
    case Miner::dfm: return dfm_miner(l);
    case Miner::dfg: break;
  }
  throw input_error("the dfg miner produces a directly-follows graph, not a Petri net");
}

}  // namespace analog
