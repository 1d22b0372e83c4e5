#pragma once

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <utility>
#include <vector>

#include "dfg.hpp"
#include "eventlog.hpp"
#include "measures.hpp"

namespace analog {

inline std::uint64_t magnitude(const EventLog& l) {
  std::uint64_t s = 0;
  for (const auto& v : l.variants()) s = EventLog::checked_add(s, v.count * v.trace.size());
  return s;
}

inline std::size_t variety(const EventLog& l) { return l.variety(); }
inline std::uint64_t trace_count(const EventLog& l) { return l.trace_count(); }

struct LengthStats {
  std::size_t min = 0;
  double avg = 0;
  std::size_t max = 0;
};

inline LengthStats trace_length_stats(const EventLog& l) {
  if (l.empty()) throw undefined_measure("trace lengths of an empty log");
  LengthStats s{SIZE_MAX, 0, 0};
  for (const auto& v : l.variants()) {
    s.min = std::min(s.min, v.trace.size());
    s.max = std::max(s.max, v.trace.size());
  }
  s.avg = static_cast<double>(magnitude(l)) / static_cast<double>(l.trace_count());
  return s;
}

/// Distinct simple paths from the start to the end sentinel of the DFG.
inline std::uint64_t level_of_detail(const EventLog& l) {
  if (l.empty()) return 0;
  auto d = build_dfg(l);
  return count_simple_paths(d.g, Dfg::start, Dfg::end);
}

/// The directly-follows relation over activity ids.
inline std::set<std::pair<ActivityId, ActivityId>> directly_follows(const EventLog& l) {
  std::set<std::pair<ActivityId, ActivityId>> r;
  for (const auto& v : l.variants())
    for (std::size_t i = 0; i + 1 < v.trace.size(); ++i) r.insert({v.trace[i], v.trace[i + 1]});
  return r;
}

/// Pairs that follow each other in one direction only.
inline std::size_t number_of_ties(const EventLog& l) {
  auto df = directly_follows(l);
  std::size_t n = 0;
  for (auto [a, b] : df) n += !df.count({b, a});
  return n;
}

/// LZ78 parse of the log read run by run, each trace repeated by its run
/// count. A trailing phrase already in the dictionary is not counted.
inline std::vector<Trace> lz78_phrases(const EventLog& l) {
  std::map<std::pair<std::size_t, ActivityId>, std::size_t> trie;  // (node, symbol) -> node
  std::vector<Trace> phrases;
  std::size_t cur = 0;
  Trace word;
  for (const auto& [idx, count] : l.runs())
    for (std::uint64_t k = 0; k < count; ++k)
      for (ActivityId a : l.variants()[idx].trace) {
        word.push_back(a);
        auto it = trie.find({cur, a});
        if (it != trie.end()) {
          cur = it->second;
          continue;
        }
        trie.emplace(std::make_pair(cur, a), trie.size() + 1);
        phrases.push_back(word);
        word.clear();
        cur = 0;
      }
  return phrases;
}

inline std::size_t lempel_ziv(const EventLog& l) { return lz78_phrases(l).size(); }

struct DistinctTraces {
  std::size_t count = 0;
  double pct = 0;
};

inline DistinctTraces distinct_traces(const EventLog& l) {
  if (l.empty()) throw undefined_measure("distinct-trace ratio of an empty log");
  return {l.distinct(), static_cast<double>(l.distinct()) / static_cast<double>(l.trace_count())};
}

/// Average number of distinct activities per trace.
inline double structure(const EventLog& l) {
  if (l.empty()) throw undefined_measure("structure of an empty log");
  std::uint64_t s = 0;
  for (const auto& v : l.variants()) {
    std::set<ActivityId> d(v.trace.begin(), v.trace.end());
    s += v.count * d.size();
  }
  return static_cast<double>(s) / static_cast<double>(l.trace_count());
}

namespace detail {
inline std::set<std::pair<ActivityId, ActivityId>> neighbourhood(const Trace& t) {
  std::set<std::pair<ActivityId, ActivityId>> f;
  for (std::size_t i = 0; i + 1 < t.size(); ++i) f.insert({t[i], t[i + 1]});
  return f;
}

/// Mean of a symmetric pair score over ordered pairs of distinct occurrences.
template <class Score>
double occurrence_pair_mean(const EventLog& l, Score&& score) {
  const double n = static_cast<double>(l.trace_count());
  if (n < 2) throw undefined_measure("needs at least two traces");
  const auto& vs = l.variants();
  double sum = 0;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    double ci = static_cast<double>(vs[i].count);
    sum += ci * (ci - 1) * score(i, i);
    for (std::size_t j = i + 1; j < vs.size(); ++j)
      sum += 2.0 * ci * static_cast<double>(vs[j].count) * score(i, j);
  }
  return sum / (n * (n - 1));
}
}  // namespace detail

inline double affinity(const EventLog& l) {
  std::vector<std::set<std::pair<ActivityId, ActivityId>>> f;
  for (const auto& v : l.variants()) f.push_back(detail::neighbourhood(v.trace));
  return detail::occurrence_pair_mean(l, [&](std::size_t i, std::size_t j) {
    if (i == j) return 1.0;
    std::size_t both = 0;
    for (const auto& p : f[i]) both += f[j].count(p);
    std::size_t uni = f[i].size() + f[j].size() - both;
    return uni == 0 ? 0.0 : static_cast<double>(both) / static_cast<double>(uni);
  });
}

/// 1 - sqrt of the summed squared relative deviation of every A x A cell of
/// the weighted directly-follows matrix from the uniform expectation.
inline double deviation_from_random(const EventLog& l) {
  const std::size_t a = l.variety();
  std::vector<double> cell(a * a, 0.0);
  double n = 0;
  for (const auto& v : l.variants())
    for (std::size_t i = 0; i + 1 < v.trace.size(); ++i) {
      cell[v.trace[i] * a + v.trace[i + 1]] += static_cast<double>(v.count);
      n += static_cast<double>(v.count);
    }
  if (n == 0) throw undefined_measure("deviation from random needs a directly-follows pair");
  const double expect = n / static_cast<double>(a * a);
  double s = 0;
  for (double c : cell) s += ((c - expect) / n) * ((c - expect) / n);
  return 1.0 - std::sqrt(s);
}

inline std::size_t lcs_length(const Trace& a, const Trace& b) {
  std::vector<std::size_t> prev(b.size() + 1, 0), cur(b.size() + 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j)
      cur[j + 1] = a[i] == b[j] ? prev[j] + 1 : std::max(prev[j + 1], cur[j]);
    std::swap(prev, cur);
  }
  return prev[b.size()];
}

/// Insert/delete edit distance.
inline std::size_t edit_distance(const Trace& a, const Trace& b) { return a.size() + b.size() - 2 * lcs_length(a, b); }

inline double avg_edit_distance(const EventLog& l) {
  const auto& vs = l.variants();
  return detail::occurrence_pair_mean(l, [&](std::size_t i, std::size_t j) {
    return i == j ? 0.0 : static_cast<double>(edit_distance(vs[i].trace, vs[j].trace));
  });
}

/// Which child continues the incumbent block at a branching node. The
/// default keeps the child created first, as when the automaton is grown
/// trace by trace; the subtree-weight rules are alternatives.
enum class BlockRule { first_created, lightest_subtree, heaviest_subtree };

struct PrefixAutomaton {
  struct Node {
    std::uint64_t weight = 0;
    ActivityId activity = 0;
    std::size_t parent = 0;
    std::vector<std::size_t> children;
    int block = -1;
  };
  std::vector<Node> nodes{Node{}};  // nodes[0] is the root
  std::vector<std::vector<std::size_t>> blocks;
};

inline PrefixAutomaton build_prefix_automaton(const EventLog& l, BlockRule rule = BlockRule::first_created) {
  PrefixAutomaton pa;
  for (const auto& v : l.variants()) {
    std::size_t cur = 0;
    pa.nodes[0].weight += v.count;
    for (ActivityId a : v.trace) {
      std::size_t next = SIZE_MAX;
      for (std::size_t c : pa.nodes[cur].children)
        if (pa.nodes[c].activity == a) next = c;
      if (next == SIZE_MAX) {
        next = pa.nodes.size();
        pa.nodes.push_back({0, a, cur, {}, -1});
        pa.nodes[cur].children.push_back(next);
      }
      pa.nodes[next].weight += v.count;
      cur = next;
    }
  }
  // Subtree weights, children before parents (children have larger indices).
  std::vector<std::uint64_t> sub(pa.nodes.size());
  for (std::size_t i = pa.nodes.size(); i-- > 0;) {
    sub[i] += pa.nodes[i].weight;
    if (i) sub[pa.nodes[i].parent] += sub[i];
  }
  auto ordered = [&](std::size_t u) {
    auto ch = pa.nodes[u].children;
    std::sort(ch.begin(), ch.end(), [&](std::size_t x, std::size_t y) {
      return l.name(pa.nodes[x].activity) < l.name(pa.nodes[y].activity);
    });
    return ch;
  };
  std::vector<std::pair<std::size_t, int>> stack;
  for (std::size_t c : ordered(0)) stack.push_back({c, -1});
  std::reverse(stack.begin(), stack.end());
  while (!stack.empty()) {
    auto [u, b] = stack.back();
    stack.pop_back();
    if (b < 0) {
      b = static_cast<int>(pa.blocks.size());
      pa.blocks.emplace_back();
    }
    pa.nodes[u].block = b;
    pa.blocks[b].push_back(u);
    auto ch = ordered(u);
    if (ch.empty()) continue;
    std::size_t keep = rule == BlockRule::first_created ? pa.nodes[u].children.front() : ch.front();
    for (std::size_t c : ch) {
      if (rule == BlockRule::first_created) break;
      bool better = rule == BlockRule::lightest_subtree ? sub[c] < sub[keep] : sub[c] > sub[keep];
      if (better) keep = c;
    }
    for (auto it = ch.rbegin(); it != ch.rend(); ++it) stack.push_back({*it, *it == keep ? b : -1});
  }
  return pa;
}

struct Entropy {
  double raw = 0;
  std::optional<double> normalized;
};

namespace detail {
inline double xlnx(double x) { return x > 0 ? x * std::log(x) : 0.0; }

inline Entropy partition_entropy(const std::vector<double>& parts) {
  double total = 0, s = 0;
  for (double p : parts) {
    total += p;
    s += xlnx(p);
  }
  Entropy e;
  e.raw = xlnx(total) - s;
  if (total > 1) e.normalized = e.raw / xlnx(total);
  return e;
}
}  // namespace detail

inline Entropy variant_entropy(const PrefixAutomaton& pa) {
  std::vector<double> parts;
  for (const auto& b : pa.blocks) parts.push_back(static_cast<double>(b.size()));
  return detail::partition_entropy(parts);
}

inline Entropy sequence_entropy(const PrefixAutomaton& pa) {
  std::vector<double> parts;
  for (const auto& b : pa.blocks) {
    double w = 0;
    for (std::size_t u : b) w += static_cast<double>(pa.nodes[u].weight);
    parts.push_back(w);
  }
  return detail::partition_entropy(parts);
}

inline Entropy variant_entropy(const EventLog& l) { return variant_entropy(build_prefix_automaton(l)); }
inline Entropy sequence_entropy(const EventLog& l) { return sequence_entropy(build_prefix_automaton(l)); }

struct LogOptions {
  BlockRule block_rule = BlockRule::first_created;
};

/// All log measures; a measure whose precondition fails is left absent.
inline LogReport log_report(const EventLog& l, const LogOptions& opt = {}) {
  LogReport r;
  auto guard = [&](std::size_t idx, auto&& f) {
    try {
      r[idx] = static_cast<double>(f());
    } catch (const undefined_measure&) {
    }
  };
  guard(lm::magnitude, [&] { return magnitude(l); });
  guard(lm::variety, [&] { return variety(l); });
  guard(lm::trace_count, [&] { return trace_count(l); });
  if (!l.empty()) {
    auto s = trace_length_stats(l);
    r[lm::tl_min] = static_cast<double>(s.min);
    r[lm::tl_avg] = s.avg;
    r[lm::tl_max] = static_cast<double>(s.max);
    auto dt = distinct_traces(l);
    r[lm::distinct_traces] = static_cast<double>(dt.count);
    r[lm::pct_distinct_traces] = dt.pct;
  }
  guard(lm::level_of_detail, [&] { return level_of_detail(l); });
  guard(lm::ties, [&] { return number_of_ties(l); });
  guard(lm::lempel_ziv, [&] { return lempel_ziv(l); });
  guard(lm::structure, [&] { return structure(l); });
  guard(lm::affinity, [&] { return affinity(l); });
  guard(lm::deviation_from_random, [&] { return deviation_from_random(l); });
  guard(lm::avg_edit_distance, [&] { return avg_edit_distance(l); });
  auto pa = build_prefix_automaton(l, opt.block_rule);
  auto ve = variant_entropy(pa);
  auto se = sequence_entropy(pa);
  r[lm::variant_entropy] = ve.raw;
  r[lm::norm_variant_entropy] = ve.normalized;
  r[lm::sequence_entropy] = se.raw;
  r[lm::norm_sequence_entropy] = se.normalized;
  return r;
}

}  // namespace analog
