#pragma once

#include <cstdio>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "measures.hpp"
#include "relations.hpp"
#include "reproduce.hpp"

namespace analog {

enum class Format { json, csv };

/// CSV number: integral measures as integers, the rest with four decimals.
inline std::string csv_number(const std::optional<double>& v, bool integral) {
  if (!v) return "undefined";
  char buf[64];
  if (integral) std::snprintf(buf, sizeof buf, "%.0f", *v);
  else std::snprintf(buf, sizeof buf, "%.4f", *v + 0.0);
  return buf;
}

/// JSON number at full precision, or the string "undefined".
inline nlohmann::ordered_json json_number(const std::optional<double>& v, bool integral) {
  if (!v) return "undefined";
  if (integral) return static_cast<std::int64_t>(*v);
  return *v + 0.0;
}

template <class R>
nlohmann::ordered_json report_to_json(const R& r) {
  const auto& info = measures_of<R>();
  nlohmann::ordered_json j = nlohmann::ordered_json::object();
  for (std::size_t i = 0; i < R::size; ++i) j[std::string(info[i].key)] = json_number(r[i], info[i].integral);
  return j;
}

template <class R>
std::string report_csv_header(std::string_view first = {}) {
  std::string out(first);
  for (const auto& m : measures_of<R>()) {
    if (!out.empty()) out += ',';
    out += m.key;
  }
  return out + '\n';
}

template <class R>
std::string report_csv_row(const R& r, std::string_view first = {}) {
  const auto& info = measures_of<R>();
  std::string out(first);
  for (std::size_t i = 0; i < R::size; ++i) {
    if (i || !first.empty()) out += ',';
    out += csv_number(r[i], info[i].integral);
  }
  return out + '\n';
}

/// Single report as a header line plus one value line.
template <class R>
std::string report_to_csv(const R& r) {
  return report_csv_header<R>() + report_csv_row(r);
}

inline nlohmann::ordered_json witness_to_json(const std::optional<Witness>& w) {
  if (!w) return nullptr;
  return {{"source", w->source},
          {"log_before", w->before},
          {"log_after", w->after},
          {"log_measure_before", w->log_before},
          {"log_measure_after", w->log_after},
          {"model_measure_before", w->model_before},
          {"model_measure_after", w->model_after}};
}

inline nlohmann::ordered_json evidence_to_json(const Evidence& ev) {
  nlohmann::ordered_json cols = nlohmann::ordered_json::array(), rows = nlohmann::ordered_json::array(),
                         cells = nlohmann::ordered_json::array();
  for (auto c : ev.columns) cols.push_back(model_measures[c].key);
  for (auto r : relation_rows) rows.push_back(log_measures[r].key);
  for (std::size_t r = 0; r < ev.cells.size(); ++r)
    for (std::size_t c = 0; c < ev.columns.size(); ++c) {
      const auto& cell = ev.cells[r][c];
      cells.push_back({{"log_measure", log_measures[relation_rows[r]].key},
                       {"model_measure", model_measures[ev.columns[c]].key},
                       {"expected", to_string(cell.expected)},
                       {"observed", cell.observed_class()},
                       {"verdict", to_string(cell.verdict)},
                       {"decrease", cell.seen[0]},
                       {"equal", cell.seen[1]},
                       {"increase", cell.seen[2]},
                       {"backed", cell.backed},
                       {"counterexample", witness_to_json(cell.counterexample)},
                       {"equality_witness", witness_to_json(cell.equality)}});
    }
  return {{"miner", miner_name(ev.miner)},
          {"pairs", ev.pairs},
          {"falsifications", ev.falsifications()},
          {"unconfirmed_backed_x", ev.unconfirmed_backed_x()},
          {"rows", rows},
          {"columns", cols},
          {"cells", cells},
          {"notices", ev.notices}};
}

/// Observed-class matrix: one row per log measure, one column per model
/// measure, led by a miner column.
inline std::string evidence_to_csv(const Evidence& ev) {
  std::string out = "miner,log_measure";
  for (auto c : ev.columns) out += ',' + std::string(model_measures[c].key);
  out += '\n';
  for (std::size_t r = 0; r < ev.cells.size(); ++r) {
    out += std::string(miner_name(ev.miner)) + ',' + std::string(log_measures[relation_rows[r]].key);
    for (const auto& cell : ev.cells[r]) out += ',' + cell.observed_class();
    out += '\n';
  }
  return out;
}

inline nlohmann::ordered_json mismatch_to_json(const FixtureMismatch& m) {
  return {{"entry", m.entry},
          {"measure", m.what},
          {"log", m.log},
          {"expected", m.expected},
          {"actual", m.actual ? nlohmann::ordered_json(*m.actual) : nlohmann::ordered_json("undefined")}};
}

inline std::string mismatches_to_csv(const std::vector<FixtureMismatch>& ms) {
  std::string out = "entry,measure,log,expected,actual\n";
  for (const auto& m : ms) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.4f", m.expected);
    out += m.entry + ',' + m.what + ',' + std::to_string(m.log) + ',' + buf + ',' + csv_number(m.actual, false) + '\n';
  }
  return out;
}

}  // namespace analog
