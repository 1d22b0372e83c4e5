#pragma once

#include <algorithm>
#include <array>
#include <atomic>
#include <bit>
#include <cmath>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "dfg.hpp"
#include "discovery.hpp"
#include "logmetrics.hpp"
#include "measures.hpp"
#include "netmetrics.hpp"

namespace analog {

enum class RelationClass { LT, LE, EQ, GE, GT, X };

/// A claimed table cell. `starred` marks X cells for which no equality
/// witness is known; such a witness is logged when found but never required.
struct ExpectedCell {
  RelationClass cls = RelationClass::X;
  bool starred = false;
  friend bool operator==(const ExpectedCell&, const ExpectedCell&) = default;
};

inline std::string to_string(RelationClass c) {
  switch (c) {
    case RelationClass::LT: return "<";
    case RelationClass::LE: return "<=";
    case RelationClass::EQ: return "=";
    case RelationClass::GE: return ">=";
    case RelationClass::GT: return ">";
    case RelationClass::X: return "X";
  }
  return "?";
}

inline std::string to_string(const ExpectedCell& c) { return to_string(c.cls) + (c.starred ? "*" : ""); }

inline ExpectedCell parse_cell(std::string_view s) {
  if (s == "<") return {RelationClass::LT};
  if (s == "<=") return {RelationClass::LE};
  if (s == "=") return {RelationClass::EQ};
  if (s == ">=") return {RelationClass::GE};
  if (s == ">") return {RelationClass::GT};
  if (s == "X") return {RelationClass::X};
  if (s == "X*") return {RelationClass::X, true};
  throw input_error("unknown relation cell: " + std::string(s));
}

/// Rows of the relation tables, in table order. The minimal trace length is
/// reported by log_report but has no row.
inline constexpr std::array<std::size_t, 18> relation_rows{
    lm::magnitude,          lm::variety,           lm::trace_count,
    lm::tl_avg,             lm::tl_max,            lm::level_of_detail,
    lm::ties,               lm::lempel_ziv,        lm::distinct_traces,
    lm::pct_distinct_traces, lm::structure,        lm::affinity,
    lm::deviation_from_random, lm::avg_edit_distance, lm::variant_entropy,
    lm::norm_variant_entropy, lm::sequence_entropy, lm::norm_sequence_entropy};

/// Model-layout columns of a miner's table (the DFG has 13).
inline std::vector<std::size_t> model_columns(Miner m) {
  if (m == Miner::dfg) return {dfg_to_model.begin(), dfg_to_model.end()};
  std::vector<std::size_t> c(mm::count_);
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = i;
  return c;
}

/// Claimed relation matrix: one row per entry of relation_rows, one column
/// per entry of model_columns(m).
using RelationTable = std::vector<std::vector<ExpectedCell>>;

namespace detail {
inline std::vector<ExpectedCell> parse_row(std::string_view text) {
  std::vector<ExpectedCell> row;
  std::istringstream ss{std::string(text)};
  std::string tok;
  while (ss >> tok) row.push_back(parse_cell(tok));
  return row;
}

inline RelationTable build_table(std::string_view base, const std::map<std::size_t, std::string_view>& overrides) {
  RelationTable t;
  for (std::size_t r : relation_rows) {
    auto it = overrides.find(r);
    t.push_back(parse_row(it == overrides.end() ? base : it->second));
  }
  return t;
}
}  // namespace detail

inline RelationTable expected_table(Miner m) {
  using detail::build_table;
  switch (m) {
    case Miner::flower:
      return build_table("<= = = <= = <= <= <= <= <= = = <= <= = = =",
                         {{lm::variety, "< = = < = < < < < < = = < < = = ="}});
    case Miner::trace_net: {
      constexpr std::string_view strict = "< = = X* = < = < < X = <= = X >= <= =";
      return build_table("<= = = X* = <= = <= <= X = <= = X >= <= =",
                         {{lm::variety, strict},
                          {lm::tl_max, "< = = X* = < = < < X = < = X > <= ="},
                          {lm::level_of_detail, strict},
                          {lm::ties, "< = = X* = < = < < X = <= = X > <= ="},
                          {lm::distinct_traces, strict},
                          {lm::pct_distinct_traces, strict},
                          {lm::variant_entropy, strict},
                          {lm::norm_variant_entropy, strict}});
    }
    case Miner::alpha:
      return build_table("X X X X* X X X X X X X X X X X = X", {});
    case Miner::dfg:
      return build_table("<= X X* <= X X <= X X <= X X X",
                         {{lm::variety, "< X X* < X X <= X X <= X X X"},
                          {lm::level_of_detail, "<= X X* < X X <= X X <= X X X"},
                          {lm::ties, "<= X X* < X X <= X X <= X X X"}});
    case Miner::dfm:
      return build_table("<= X = X* = <= X X <= X X <= X X >= <= =",
                         {{lm::variety, "< X = X* = < X X <= X X <= X X > < ="},
                          {lm::level_of_detail, "< X = X* = < X X <= X X <= X X >= < ="},
                          {lm::ties, "< X = X* = < X X <= X X <= X X >= < ="}});
  }
  return {};
}

/// Reference matrix for miners that are not implemented (inductive,
/// heuristics, hybrid ILP and alpha variants). Cells read "X/=" where some of
/// these miners keep the measure constant.
inline std::vector<std::vector<std::string>> other_miners_table() {
  std::vector<std::string> row(mm::count_, "X");
  row[mm::duplicate_tasks] = "X/=";
  row[mm::empty_seq_flows] = "X/=";
  return std::vector<std::vector<std::string>>(relation_rows.size(), row);
}

/// Model-side measures of the miner's output in the 17-column layout. For
/// the DFG only its 13 columns are filled.
inline ModelReport measure_model(Miner m, const EventLog& l, const NetOptions& opt = {}) {
  if (m != Miner::dfg) return model_report(discover(m, l), opt);
  auto d = dfg_report(build_dfg(l));
  ModelReport r;
  for (std::size_t i = 0; i < dm::count_; ++i) r[dfg_to_model[i]] = d[i];
  return r;
}

namespace detail {

inline double ratio(std::uint64_t a, std::uint64_t b) { return static_cast<double>(a) / static_cast<double>(b); }

/// Degree profile of a net described without building it: per node the
/// number of inputs and outputs and whether it is a place.
struct DegreeProfile {
  struct Node {
    std::uint64_t in = 0, out = 0;
    bool place = false;
  };
  std::vector<Node> nodes;

  /// Fills MM, CH, TS, CFC, ACD and MCD from degrees alone.
  void fill(ModelReport& r) const {
    std::uint64_t xs = 0, xj = 0, as = 0, aj = 0, cfc = 0, ts = 0, nx = 0, na = 0, deg = 0, mx = 0;
    for (const auto& n : nodes) {
      bool split = n.out > 1, join = n.in > 1;
      if (n.place) {
        if (split) xs += n.out, cfc += n.out;
        if (join) xj += n.in;
        nx += split || join;
      } else {
        if (split) as += n.out, cfc += 1, ts += n.out - 1;
        if (join) aj += n.in;
        na += split || join;
      }
      if (split || join) {
        deg += n.in + n.out;
        mx = std::max(mx, n.in + n.out);
      }
    }
    auto absdiff = [](std::uint64_t a, std::uint64_t b) { return a > b ? a - b : b - a; };
    r[mm::mismatch] = static_cast<double>(absdiff(xs, xj) + absdiff(as, aj));
    r[mm::token_split] = static_cast<double>(ts);
    r[mm::cfc] = static_cast<double>(cfc);
    if (nx + na) {
      auto term = [&](std::uint64_t k) {
        double q = ratio(k, nx + na);
        return q > 0 ? q * std::log2(q) : 0.0;
      };
      r[mm::connector_heterogeneity] = -(term(nx) + term(na)) + 0.0;
      r[mm::acd] = ratio(deg, nx + na);
      r[mm::mcd] = static_cast<double>(mx);
    }
  }
};

}  // namespace detail

/// Closed-form model scores computed from log statistics without running the
/// miner. Fields without a closed form are absent.
inline ModelReport closed_form_report(Miner m, const EventLog& l) {
  using detail::ratio;
  ModelReport r;
  const std::uint64_t v = l.variety();
  switch (m) {
    case Miner::flower: {
      if (v == 0) throw input_error("flower model needs at least one activity");
      const double n = static_cast<double>(v);
      r[mm::size] = static_cast<double>(5 + v);
      r[mm::mismatch] = 0;
      r[mm::connector_heterogeneity] = 0;
      r[mm::cross_connectivity] = (4 * n * n * n * n + 44 * n * n * n + 143 * n * n + 164 * n + 59) /
                                  (4 * (n + 1) * (n + 1) * (n + 4) * (n + 5));
      r[mm::token_split] = 0;
      r[mm::cfc] = static_cast<double>(v + 1);
      r[mm::separability] = ratio(v, v + 3);
      r[mm::acd] = static_cast<double>(2 * v + 2);
      r[mm::mcd] = static_cast<double>(2 * v + 2);
      r[mm::sequentiality] = ratio(v + 1, v + 2);
      r[mm::depth] = 1;
      r[mm::diameter] = 5;
      r[mm::cyclicity] = ratio(v + 1, v + 3);
      r[mm::cnc] = ratio(2 * v + 4, v + 5);
      r[mm::density] = 0.5;
      r[mm::duplicate_tasks] = 1;
      r[mm::empty_seq_flows] = 0;
      return r;
    }
    case Miner::trace_net: {
      if (l.empty()) throw input_error("trace net closed form needs a non-empty log");
      std::uint64_t big_n = 0, tl_max = 0;
      const std::uint64_t dt = l.distinct();
      std::map<ActivityId, std::uint64_t> occ;
      double sum = 0;
      for (const auto& var : l.variants()) {
        const std::uint64_t len = var.trace.size();
        if (len == 0) throw input_error("trace net cannot represent the empty trace");
        big_n += len - 1;
        tl_max = std::max(tl_max, len);
        for (auto a : var.trace) ++occ[a];
        sum += static_cast<double>(2 * len - 1) * (static_cast<double>(len - 1) + 2.0 / static_cast<double>(dt));
      }
      const std::uint64_t size = 2 + 2 * big_n + dt;
      const bool single = dt == 1;
      r[mm::size] = static_cast<double>(size);
      r[mm::mismatch] = 0;
      if (!single) r[mm::connector_heterogeneity] = 0;
      const double d = static_cast<double>(dt);
      r[mm::cross_connectivity] =
          1.0 - (1.0 / (d * d) + sum) / (static_cast<double>(size) * static_cast<double>(size - 1));
      r[mm::token_split] = 0;
      r[mm::cfc] = single ? 0.0 : d;
      r[mm::separability] = single ? 0.0 : 1.0;
      if (!single) {
        r[mm::acd] = d;
        r[mm::mcd] = d;
      }
      r[mm::sequentiality] = single ? 0.0 : ratio(dt, big_n + dt);
      r[mm::depth] = single ? 0.0 : 1.0;
      r[mm::diameter] = static_cast<double>(1 + 2 * tl_max);
      r[mm::cyclicity] = 0;
      r[mm::cnc] = ratio(2 * (big_n + dt), size);
      r[mm::density] = ratio(1, 1 + big_n);
      std::uint64_t dup = 0;
      for (auto [a, k] : occ) dup += k - 1;
      r[mm::duplicate_tasks] = static_cast<double>(dup);
      r[mm::empty_seq_flows] = 0;
      return r;
    }
    case Miner::alpha: {
      if (l.empty()) throw input_error("alpha miner needs a non-empty log");
      auto t = alpha_tuples(l, false);
      const std::uint64_t y = t.y_l.size();
      auto card = [](ActivitySet s) { return static_cast<std::uint64_t>(std::popcount(s)); };
      std::uint64_t arcs = card(t.a_i) + card(t.a_o);
      detail::DegreeProfile p;
      p.nodes.resize(2 + y + v);
      p.nodes[0] = {0, card(t.a_i), true};
      p.nodes[1] = {card(t.a_o), 0, true};
      for (std::size_t k = 0; k < y; ++k) {
        auto [b, c] = t.y_l[k];
        arcs += card(b) + card(c);
        p.nodes[2 + k] = {card(b), card(c), true};
      }
      for (std::size_t a = 0; a < v; ++a) {
        auto& n = p.nodes[2 + y + a];
        n.in = (t.a_i >> a & 1u);
        n.out = (t.a_o >> a & 1u);
        for (auto [b, c] : t.y_l) {
          n.in += c >> a & 1u;
          n.out += b >> a & 1u;
        }
      }
      p.fill(r);
      // Empty sequence flows: places fed only by and-splits and feeding only
      // and-joins, checked from the tuple structure.
      auto is_and_split = [&](std::size_t a) { return p.nodes[2 + y + a].out > 1; };
      auto is_and_join = [&](std::size_t a) { return p.nodes[2 + y + a].in > 1; };
      auto all_of = [&](ActivitySet s, auto pred) {
        for (std::size_t a = 0; a < v; ++a)
          if ((s >> a & 1u) && !pred(a)) return false;
        return true;
      };
      std::uint64_t empty = all_of(t.a_i, is_and_join) + all_of(t.a_o, is_and_split);
      for (auto [b, c] : t.y_l) empty += all_of(b, is_and_split) && all_of(c, is_and_join);
      r[mm::empty_seq_flows] = static_cast<double>(empty);
      r[mm::size] = static_cast<double>(2 + y + v);
      r[mm::cnc] = ratio(arcs, 2 + y + v);
      r[mm::density] = ratio(arcs, 2 * v * (1 + y));
      r[mm::duplicate_tasks] = 0;
      return r;
    }
    case Miner::dfg:
    case Miner::dfm: {
      if (l.empty()) throw input_error("directly-follows closed form needs a non-empty log");
      // Degrees from the directly-follows relation and start/end activities.
      const std::size_t nodes = v + 2;
      std::vector<std::uint64_t> in(nodes, 0), out(nodes, 0);
      std::set<std::pair<std::size_t, std::size_t>> edges;
      auto link = [&](std::size_t a, std::size_t b) {
        if (edges.insert({a, b}).second) ++out[a], ++in[b];
      };
      for (auto [a, b] : directly_follows(l)) link(a + 2, b + 2);
      for (const auto& var : l.variants()) {
        if (var.trace.empty()) {
          link(0, 1);
          continue;
        }
        link(0, var.trace.front() + 2);
        link(var.trace.back() + 2, 1);
      }
      const std::uint64_t e = edges.size();
      detail::DegreeProfile p;
      for (std::size_t k = 0; k < nodes; ++k) p.nodes.push_back({in[k], out[k], true});
      ModelReport g;
      p.fill(g);
      if (m == Miner::dfg) {
        r[mm::size] = static_cast<double>(nodes);
        r[mm::mismatch] = g[mm::mismatch];
        r[mm::cfc] = g[mm::cfc];
        r[mm::acd] = g[mm::acd];
        r[mm::mcd] = g[mm::mcd];
        std::uint64_t plain = 0;
        auto conn = [&](std::size_t k) { return in[k] > 1 || out[k] > 1; };
        for (auto [a, b] : edges) plain += !conn(a) && !conn(b);
        r[mm::sequentiality] = ratio(e - plain, e);
        r[mm::cnc] = ratio(e, nodes);
        r[mm::density] = ratio(e, nodes * (nodes - 1));
        return r;
      }
      const std::uint64_t diam_g = longest_simple_path(build_dfg(l).g, Dfg::start, Dfg::end);
      r[mm::size] = static_cast<double>(nodes + e);
      r[mm::mismatch] = g[mm::mismatch];
      r[mm::cfc] = g[mm::cfc];
      r[mm::acd] = g[mm::acd];
      r[mm::mcd] = g[mm::mcd];
      if (g[mm::acd]) r[mm::connector_heterogeneity] = 0;
      r[mm::token_split] = 0;
      r[mm::empty_seq_flows] = 0;
      r[mm::diameter] = static_cast<double>(2 * diam_g - 1);
      r[mm::cnc] = ratio(2 * e, nodes + e);
      r[mm::density] = ratio(1, v + 1);
      r[mm::duplicate_tasks] = static_cast<double>(e - v - 1);
      return r;
    }
  }
  return r;
}

/// Sign of a difference, with a tolerance for floating-point noise.
inline int sign_of(double delta, double eps = 1e-9) { return delta > eps ? 1 : delta < -eps ? -1 : 0; }

/// (sign of the log-measure change, sign of the model-measure change).
struct Ordering {
  int log = 0;
  int model = 0;
};

/// Observation for one cell; empty when either measure is undefined on
/// either side.
inline std::optional<Ordering> delta_observation(const LogReport& a, const LogReport& b, const ModelReport& ma,
                                                 const ModelReport& mb, std::size_t lm_idx, std::size_t mm_idx) {
  if (!a[lm_idx] || !b[lm_idx] || !ma[mm_idx] || !mb[mm_idx]) return std::nullopt;
  return Ordering{sign_of(*b[lm_idx] - *a[lm_idx]), sign_of(*mb[mm_idx] - *ma[mm_idx])};
}

inline std::optional<Ordering> delta_observation(const EventLog& l1, const EventLog& l2, Miner m, std::size_t lm_idx,
                                                 std::size_t mm_idx) {
  if (!is_proper_sublog(l1, l2)) throw input_error("delta observation needs a proper sublog pair");
  return delta_observation(log_report(l1), log_report(l2), measure_model(m, l1), measure_model(m, l2), lm_idx,
                           mm_idx);
}

/// True when a model change of the given sign contradicts the class claimed
/// for a strict log increase.
inline bool contradicts(RelationClass c, int model_sign) {
  switch (c) {
    case RelationClass::LT: return model_sign != 1;
    case RelationClass::LE: return model_sign == -1;
    case RelationClass::EQ: return model_sign != 0;
    case RelationClass::GE: return model_sign == 1;
    case RelationClass::GT: return model_sign != -1;
    case RelationClass::X: return false;
  }
  return false;
}

enum class Verdict { consistent, falsifies, inconclusive };

inline std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::consistent: return "consistent";
    case Verdict::falsifies: return "falsifies";
    case Verdict::inconclusive: return "inconclusive";
  }
  return "?";
}

/// A concrete pair behind an observation.
struct Witness {
  std::string source;  // corpus entry id or fuzz pair id
  std::string before, after;  // serialized logs
  double log_before = 0, log_after = 0, model_before = 0, model_after = 0;
};

struct EvidenceCell {
  ExpectedCell expected;
  std::array<std::uint64_t, 3> seen{};  // model decrease, equal, increase
  std::optional<Witness> counterexample;
  std::optional<Witness> equality;  // first equality witness (logged for X*)
  bool backed = false;              // targeted by a corpus entry
  Verdict verdict = Verdict::inconclusive;

  std::size_t orderings() const { return (seen[0] > 0) + (seen[1] > 0) + (seen[2] > 0); }
  std::uint64_t observations() const { return seen[0] + seen[1] + seen[2]; }

  /// The relation class these observations support, "?" without any.
  std::string observed_class() const {
    bool dn = seen[0], eq = seen[1], up = seen[2];
    if (up && dn) return "X";
    if (up) return eq ? "<=" : "<";
    if (dn) return eq ? ">=" : ">";
    return eq ? "=" : "?";
  }
};

struct Evidence {
  Miner miner = Miner::flower;
  std::vector<std::size_t> columns;          // model-layout indices
  std::vector<std::vector<EvidenceCell>> cells;  // [row][column]
  std::vector<std::string> notices;          // skipped pairs and the like
  std::uint64_t pairs = 0;

  explicit Evidence(Miner m = Miner::flower) : miner(m), columns(model_columns(m)) {
    auto table = expected_table(m);
    cells.resize(relation_rows.size());
    for (std::size_t r = 0; r < cells.size(); ++r) {
      cells[r].resize(columns.size());
      for (std::size_t c = 0; c < columns.size(); ++c) cells[r][c].expected = table[r][c];
    }
  }

  std::size_t falsifications() const {
    std::size_t k = 0;
    for (const auto& row : cells)
      for (const auto& c : row) k += c.verdict == Verdict::falsifies;
    return k;
  }

  /// Backed X cells that show fewer than two orderings.
  std::size_t unconfirmed_backed_x() const {
    std::size_t k = 0;
    for (const auto& row : cells)
      for (const auto& c : row) k += c.expected.cls == RelationClass::X && c.backed && c.orderings() < 2;
    return k;
  }

  void finalize() {
    for (auto& row : cells)
      for (auto& c : row) {
        if (c.counterexample) c.verdict = Verdict::falsifies;
        else if (c.expected.cls == RelationClass::X) c.verdict = c.orderings() >= 2 ? Verdict::consistent : Verdict::inconclusive;
        else c.verdict = c.observations() ? Verdict::consistent : Verdict::inconclusive;
      }
  }
};

/// Measured reports for one log, or the reason they are missing.
struct MeasuredLog {
  EventLog log;
  LogReport lr;
  std::optional<ModelReport> mr;
  std::string failure;
};

inline MeasuredLog measure(Miner m, EventLog l, const NetOptions& opt = {}) {
  MeasuredLog out{std::move(l), {}, std::nullopt, {}};
  out.lr = log_report(out.log);
  try {
    out.mr = measure_model(m, out.log, opt);
  } catch (const resource_error& e) {
    out.failure = e.what();
  } catch (const input_error& e) {
    out.failure = e.what();
  } catch (const undefined_measure& e) {
    out.failure = e.what();
  }
  return out;
}

/// Adds the observations of one ordered pair to every cell. When
/// `target_columns` is given, cells in those columns whose log measure
/// increased are marked as backed.
inline void observe(Evidence& ev, const std::string& source, const MeasuredLog& a, const MeasuredLog& b,
                    const std::vector<std::size_t>* target_columns = nullptr) {
  ++ev.pairs;
  if (ev.miner == Miner::trace_net && a.log.distinct() < 2) {
    // The trace-net table assumes at least two distinct traces in the smaller log.
    ev.notices.push_back(source + ": skipped (smaller log has a single distinct trace)");
    return;
  }
  if (!a.mr || !b.mr) {
    ev.notices.push_back(source + ": skipped (" + (a.mr ? b.failure : a.failure) + ")");
    return;
  }
  for (std::size_t r = 0; r < relation_rows.size(); ++r)
    for (std::size_t c = 0; c < ev.columns.size(); ++c) {
      auto o = delta_observation(a.lr, b.lr, *a.mr, *b.mr, relation_rows[r], ev.columns[c]);
      if (!o || o->log != 1) continue;
      auto& cell = ev.cells[r][c];
      ++cell.seen[o->model + 1];
      if (target_columns && std::find(target_columns->begin(), target_columns->end(), ev.columns[c]) != target_columns->end())
        cell.backed = true;
      auto witness = [&] {
        return Witness{source, serialize_log(a.log), serialize_log(b.log), *a.lr[relation_rows[r]],
                       *b.lr[relation_rows[r]], *(*a.mr)[ev.columns[c]], *(*b.mr)[ev.columns[c]]};
      };
      if (!cell.counterexample && contradicts(cell.expected.cls, o->model)) cell.counterexample = witness();
      if (!cell.equality && o->model == 0) cell.equality = witness();
    }
}

/// Runs `f(i)` for i in [0, n) on up to `jobs` threads. Results must be
/// written to per-index slots so the outcome does not depend on scheduling.
inline void parallel_for(std::size_t n, unsigned jobs, const std::function<void(std::size_t)>& f) {
  jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(std::max<std::size_t>(n, 1))));
  if (jobs == 1) {
    for (std::size_t i = 0; i < n; ++i) f(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::exception_ptr> errors(jobs);
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < jobs; ++w)
    pool.emplace_back([&, w] {
      try {
        for (std::size_t i; (i = next.fetch_add(1)) < n;) f(i);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  for (auto& t : pool) t.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

/// Random-log generator limits.
struct FuzzConfig {
  std::size_t max_alphabet = 8;
  std::size_t max_length = 8;
  std::size_t max_variants = 6;
  std::uint64_t max_count = 50;
};

/// A random proper sublog pair, reproducible from (seed, index) alone.
inline std::pair<EventLog, EventLog> random_pair(std::uint64_t seed, std::uint64_t index, const FuzzConfig& cfg = {}) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
  std::mt19937_64 rng(seq);
  auto uniform = [&](std::uint64_t lo, std::uint64_t hi) { return std::uniform_int_distribution<std::uint64_t>(lo, hi)(rng); };
  const std::size_t k1 = uniform(1, cfg.max_alphabet);
  auto trace = [&](std::size_t k) {
    NamedTrace t(uniform(1, cfg.max_length));
    for (auto& a : t) a = std::string(1, static_cast<char>('a' + uniform(0, k - 1)));
    return t;
  };
  EventLog l1, extra;
  const std::size_t n1 = uniform(1, std::max<std::size_t>(1, cfg.max_variants - 1));
  for (std::size_t i = 0; i < n1; ++i) l1.add(trace(k1), uniform(1, cfg.max_count));
  // Additions: repeats of old variants and/or fresh traces, possibly over a
  // larger alphabet, keeping the union within the variant limit.
  const std::size_t k2 = uniform(k1, cfg.max_alphabet);
  const std::size_t adds = uniform(1, 3);
  for (std::size_t i = 0; i < adds; ++i) {
    if (uniform(0, 1) == 0) {
      const auto& v = l1.variants()[uniform(0, l1.distinct() - 1)];
      extra.add(l1.named(v.trace), uniform(1, cfg.max_count));
    } else if (l1.distinct() + extra.distinct() < cfg.max_variants) {
      extra.add(trace(k2), uniform(1, cfg.max_count));
    }
  }
  if (extra.empty()) extra.add(l1.named(l1.variants().front().trace), 1);
  return {l1, l1 + extra};
}

/// Feeds `pairs` random sublog pairs into the evidence for one miner.
inline void fuzz_pairs(Evidence& ev, std::uint64_t seed, std::uint64_t pairs, const FuzzConfig& cfg = {},
                       unsigned jobs = 1, const NetOptions& opt = {}) {
  std::vector<std::pair<MeasuredLog, MeasuredLog>> slots(pairs);
  parallel_for(pairs, jobs, [&](std::size_t i) {
    auto [a, b] = random_pair(seed, i, cfg);
    slots[i] = {measure(ev.miner, std::move(a), opt), measure(ev.miner, std::move(b), opt)};
  });
  for (std::size_t i = 0; i < pairs; ++i)
    observe(ev, "fuzz seed " + std::to_string(seed) + " pair " + std::to_string(i), slots[i].first, slots[i].second);
}

}  // namespace analog
