#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "errors.hpp"
#include "graph.hpp"

namespace analog {

enum class NodeKind { place, transition };

/// Labeled Petri net. Transitions without a label are silent (tau). Source and
/// sink are optional so that alpha outputs with isolated nodes are still
/// representable.
class PetriNet {
 public:
  struct Node {
    NodeKind kind;
    std::string id;
    std::optional<std::string> label;
  };

  NodeId add_place(std::string id) { return add({NodeKind::place, std::move(id), std::nullopt}); }

  NodeId add_transition(std::string id, std::optional<std::string> label) {
    return add({NodeKind::transition, std::move(id), std::move(label)});
  }

  void add_arc(NodeId u, NodeId v) {
    if (u >= nodes_.size() || v >= nodes_.size()) throw input_error("arc endpoint out of range");
    if (nodes_[u].kind == nodes_[v].kind)
      throw input_error("arc " + nodes_[u].id + " -> " + nodes_[v].id + " joins two nodes of the same kind");
    g_.add_edge(u, v);
  }

  void set_source(NodeId p) { source_ = checked_place(p); }
  void set_sink(NodeId p) { sink_ = checked_place(p); }
  std::optional<NodeId> source() const { return source_; }
  std::optional<NodeId> sink() const { return sink_; }

  const std::vector<Node>& nodes() const { return nodes_; }
  const Node& node(NodeId v) const { return nodes_.at(v); }
  const Digraph& graph() const { return g_; }
  std::size_t size() const { return nodes_.size(); }
  std::size_t arc_count() const { return g_.edge_count(); }
  bool is_place(NodeId v) const { return nodes_[v].kind == NodeKind::place; }

  std::size_t place_count() const { return count(NodeKind::place); }
  std::size_t transition_count() const { return count(NodeKind::transition); }
  std::size_t in_degree(NodeId v) const { return g_.pred[v].size(); }
  std::size_t out_degree(NodeId v) const { return g_.succ[v].size(); }

  std::optional<NodeId> find(const std::string& id) const {
    auto it = by_id_.find(id);
    if (it == by_id_.end()) return std::nullopt;
    return it->second;
  }

 private:
  NodeId add(Node n) {
    if (n.id.empty()) throw input_error("node id must not be empty");
    if (by_id_.count(n.id)) throw input_error("duplicate node id " + n.id);
    NodeId v = g_.add_node();
    by_id_.emplace(n.id, v);
    nodes_.push_back(std::move(n));
    return v;
  }
  NodeId checked_place(NodeId p) const {
    if (p >= nodes_.size() || nodes_[p].kind != NodeKind::place)
      throw input_error("source and sink must be places");
    return p;
  }
  std::size_t count(NodeKind k) const {
    std::size_t c = 0;
    for (const auto& n : nodes_) c += n.kind == k;
    return c;
  }

  std::vector<Node> nodes_;
  std::map<std::string, NodeId> by_id_;
  Digraph g_;
  std::optional<NodeId> source_, sink_;
};

/// Degree-based connector classification; xor for places, and for transitions.
struct ConnectorSets {
  std::vector<char> xor_split, xor_join, and_split, and_join;

  bool is_xor(NodeId v) const { return xor_split[v] || xor_join[v]; }
  bool is_and(NodeId v) const { return and_split[v] || and_join[v]; }
  bool is_connector(NodeId v) const { return is_xor(v) || is_and(v); }
  bool is_split(NodeId v) const { return xor_split[v] || and_split[v]; }
  bool is_join(NodeId v) const { return xor_join[v] || and_join[v]; }
};

inline ConnectorSets connector_sets(const PetriNet& n) {
  const auto sz = n.size();
  ConnectorSets c{std::vector<char>(sz), std::vector<char>(sz), std::vector<char>(sz), std::vector<char>(sz)};
  for (NodeId v = 0; v < sz; ++v) {
    bool split = n.out_degree(v) > 1, join = n.in_degree(v) > 1;
    if (n.is_place(v)) {
      c.xor_split[v] = split;
      c.xor_join[v] = join;
    } else {
      c.and_split[v] = split;
      c.and_join[v] = join;
    }
  }
  return c;
}

inline std::vector<char> cut_vertices(const PetriNet& n) { return cut_vertices(n.graph()); }
inline std::vector<char> nodes_on_cycles(const PetriNet& n) { return nodes_on_cycles(n.graph()); }

struct PathExtrema {
  std::size_t longest = 0;
  double max_weight = 0.0;
};

/// Longest simple path (in nodes) and the maximal product weight between two
/// nodes; `weights` are per-node and combine multiplicatively along arcs.
inline PathExtrema simple_path_extrema(const PetriNet& n, NodeId from, NodeId to, const std::vector<double>& weights) {
  PathExtrema r;
  r.longest = longest_simple_path(n.graph(), from, to);
  r.max_weight = max_product_from(n.graph(), from, weights)[to];
  return r;
}

/// Maximum connector nesting; requires a designated source and sink.
inline int depth(const PetriNet& n) {
  if (!n.source() || !n.sink()) throw undefined_measure("depth needs a source and a sink place");
  auto c = connector_sets(n);
  std::vector<char> split(n.size()), join(n.size());
  for (NodeId v = 0; v < n.size(); ++v) {
    split[v] = c.is_split(v);
    join[v] = c.is_join(v);
  }
  return graph_depth(n.graph(), *n.source(), *n.sink(), split, join);
}

/// Canonical form that ignores place ids: one "{pre}->{post}" string per
/// place over transition labels ("tau" for silent ones), sorted. Two nets
/// with unique transition labels are isomorphic iff their forms and label
/// multisets agree.
inline std::vector<std::string> place_signatures(const PetriNet& n) {
  auto label = [&](NodeId v) { return n.node(v).label.value_or("tau"); };
  auto join = [&](const std::vector<NodeId>& vs) {
    std::vector<std::string> ls;
    for (NodeId v : vs) ls.push_back(label(v));
    std::sort(ls.begin(), ls.end());
    std::string s = "{";
    for (std::size_t i = 0; i < ls.size(); ++i) s += (i ? "," : "") + ls[i];
    return s + "}";
  };
  std::vector<std::string> out;
  for (NodeId v = 0; v < n.size(); ++v)
    if (n.is_place(v)) out.push_back(join(n.graph().pred[v]) + "->" + join(n.graph().succ[v]));
  std::sort(out.begin(), out.end());
  return out;
}

inline nlohmann::ordered_json net_to_json(const PetriNet& n) {
  nlohmann::ordered_json places = nlohmann::ordered_json::array();
  nlohmann::ordered_json transitions = nlohmann::ordered_json::array();
  nlohmann::ordered_json arcs = nlohmann::ordered_json::array();
  for (const auto& node : n.nodes()) {
    if (node.kind == NodeKind::place) {
      places.push_back(node.id);
    } else {
      nlohmann::ordered_json t{{"id", node.id}};
      t["label"] = node.label ? nlohmann::ordered_json(*node.label) : nlohmann::ordered_json(nullptr);
      transitions.push_back(t);
    }
  }
  for (NodeId u = 0; u < n.size(); ++u)
    for (NodeId v : n.graph().succ[u]) arcs.push_back({n.node(u).id, n.node(v).id});
  nlohmann::ordered_json j;
  j["places"] = places;
  j["transitions"] = transitions;
  j["arcs"] = arcs;
  j["source"] = n.source() ? nlohmann::ordered_json(n.node(*n.source()).id) : nlohmann::ordered_json(nullptr);
  j["sink"] = n.sink() ? nlohmann::ordered_json(n.node(*n.sink()).id) : nlohmann::ordered_json(nullptr);
  return j;
}

inline PetriNet net_from_json(const nlohmann::json& j) {
  try {
    PetriNet n;
    for (const auto& p : j.at("places")) n.add_place(p.get<std::string>());
    for (const auto& t : j.at("transitions")) {
      std::optional<std::string> label;
      if (t.contains("label") && !t["label"].is_null()) label = t["label"].get<std::string>();
      n.add_transition(t.at("id").get<std::string>(), label);
    }
    auto lookup = [&](const std::string& id) {
      auto v = n.find(id);
      if (!v) throw input_error("unknown node id " + id);
      return *v;
    };
    for (const auto& a : j.at("arcs")) {
      if (!a.is_array() || a.size() != 2) throw input_error("arcs must be [from, to] pairs");
      n.add_arc(lookup(a[0].get<std::string>()), lookup(a[1].get<std::string>()));
    }
    if (j.contains("source") && !j["source"].is_null()) n.set_source(lookup(j["source"].get<std::string>()));
    if (j.contains("sink") && !j["sink"].is_null()) n.set_sink(lookup(j["sink"].get<std::string>()));
    return n;
  } catch (const nlohmann::json::exception& e) {
    throw input_error(std::string("malformed net JSON: ") + e.what());
  }
}

namespace detail {
inline std::string dot_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}
}  // namespace detail

/// Graphviz rendering: places as circles, transitions as boxes, tau in black.
inline std::string net_to_dot(const PetriNet& n) {
  std::ostringstream os;
  os << "digraph net {\n  rankdir=LR;\n";
  for (NodeId v = 0; v < n.size(); ++v) {
    const auto& node = n.node(v);
    os << "  \"" << detail::dot_escape(node.id) << "\" [";
    if (node.kind == NodeKind::place) {
      os << "shape=circle,label=\"" << (n.source() == v ? "p_i" : n.sink() == v ? "p_o" : "") << "\"";
    } else if (node.label) {
      os << "shape=box,label=\"" << detail::dot_escape(*node.label) << "\"";
    } else {
      os << "shape=box,style=filled,fillcolor=black,label=\"\"";
    }
    os << "];\n";
  }
  for (NodeId u = 0; u < n.size(); ++u)
    for (NodeId v : n.graph().succ[u])
      os << "  \"" << detail::dot_escape(n.node(u).id) << "\" -> \"" << detail::dot_escape(n.node(v).id) << "\";\n";
  os << "}\n";
  return os.str();
}

}  // namespace analog
