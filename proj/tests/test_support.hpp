#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "analog/eventlog.hpp"
#include "analog/graph.hpp"

namespace analog::test_util {

/// Random log with single-letter activities.
inline EventLog random_log(std::mt19937_64& rng, std::size_t max_alphabet = 6, std::size_t max_length = 6,
                           std::size_t max_variants = 5, std::uint64_t max_count = 5) {
  auto uni = [&](std::uint64_t lo, std::uint64_t hi) { return std::uniform_int_distribution<std::uint64_t>(lo, hi)(rng); };
  const std::size_t k = uni(1, max_alphabet);
  EventLog l;
  const std::size_t n = uni(1, max_variants);
  for (std::size_t i = 0; i < n; ++i) {
    NamedTrace t(uni(1, max_length));
    for (auto& a : t) a = std::string(1, static_cast<char>('a' + uni(0, k - 1)));
    l.add(t, uni(1, max_count));
  }
  return l;
}

/// Random digraph on n nodes with edge probability p (self-loops allowed).
inline Digraph random_digraph(std::mt19937_64& rng, std::size_t n, double p) {
  Digraph g(n);
  std::bernoulli_distribution coin(p);
  for (NodeId u = 0; u < n; ++u)
    for (NodeId v = 0; v < n; ++v)
      if (coin(rng)) g.add_edge(u, v);
  return g;
}

/// Every simple path from s to t (s != t) by exhaustive enumeration of node
/// sequences, independent of the library's search.
inline std::vector<std::vector<NodeId>> brute_simple_paths(const Digraph& g, NodeId s, NodeId t) {
  std::vector<std::vector<NodeId>> out;
  std::vector<NodeId> path{s};
  std::vector<char> used(g.size(), 0);
  used[s] = 1;
  // Iterative enumeration over all orderings of unused nodes.
  std::vector<NodeId> next_choice{0};
  while (!path.empty()) {
    NodeId& c = next_choice.back();
    if (path.back() == t && path.size() > 1) {
      out.push_back(path);
      used[path.back()] = 0;
      path.pop_back();
      next_choice.pop_back();
      continue;
    }
    if (c >= g.size()) {
      used[path.back()] = 0;
      path.pop_back();
      next_choice.pop_back();
      continue;
    }
    NodeId v = c++;
    if (used[v] || !g.has_edge(path.back(), v)) continue;
    used[v] = 1;
    path.push_back(v);
    next_choice.push_back(0);
  }
  return out;
}

}  // namespace analog::test_util
