#pragma once

#include <cmath>
#include <string>
#include <vector>

#include "corpus.hpp"
#include "relations.hpp"

namespace analog {

/// A printed value that the measured one does not reproduce.
struct FixtureMismatch {
  std::string entry;
  std::string what;
  std::size_t log = 0;  // 1-based chain position
  double expected = 0;
  std::optional<double> actual;
};

inline constexpr double fixture_tolerance = 1e-3;

inline bool fixture_matches(double expected, const std::optional<double>& actual, bool integral,
                            double tolerance = fixture_tolerance) {
  if (!actual) return false;
  return integral ? *actual == expected : std::abs(*actual - expected) <= tolerance;
}

/// Measured chain of a corpus entry under one miner.
inline std::vector<MeasuredLog> measure_chain(const CorpusEntry& e, Miner m, const NetOptions& opt = {}) {
  std::vector<MeasuredLog> out;
  for (auto& l : chain(e)) out.push_back(measure(m, std::move(l), opt));
  return out;
}

/// Compares the printed values of an entry against its measured chain.
inline std::vector<FixtureMismatch> check_fixtures(const CorpusEntry& e, const std::vector<MeasuredLog>& logs,
                                                   double tolerance = fixture_tolerance) {
  std::vector<FixtureMismatch> out;
  auto model = [&](std::size_t k, std::size_t idx) -> std::optional<double> {
    return logs[k].mr ? (*logs[k].mr)[idx] : std::nullopt;
  };
  for (const auto& s : e.model_values) {
    const auto& info = model_measures[s.measure];
    if (e.pattern_only) {
      for (std::size_t k = 1; k < s.values.size(); ++k) {
        auto a = model(k - 1, s.measure), b = model(k, s.measure);
        if (!a || !b || sign_of(*b - *a) != sign_of(s.values[k] - s.values[k - 1]))
          out.push_back({std::string(e.id), std::string(info.key) + " trend", k + 1, s.values[k], b});
      }
      continue;
    }
    for (std::size_t k = 0; k < s.values.size(); ++k)
      if (!fixture_matches(s.values[k], model(k, s.measure), info.integral, tolerance))
        out.push_back({std::string(e.id), std::string(info.key), k + 1, s.values[k], model(k, s.measure)});
  }
  auto check_log = [&](std::size_t k, std::size_t idx, double expected) {
    const auto& actual = logs[k].lr[idx];
    if (!fixture_matches(expected, actual, log_measures[idx].integral, tolerance))
      out.push_back({std::string(e.id), std::string(log_measures[idx].key), k + 1, expected, actual});
  };
  for (const auto& s : e.log_values)
    for (std::size_t k = 0; k < s.values.size(); ++k) check_log(k, s.measure, s.values[k]);
  for (std::size_t k = 0; k < e.log_rows.size(); ++k)
    for (std::size_t r = 0; r < e.log_rows[k].size(); ++r) check_log(k, relation_rows[r], e.log_rows[k][r]);
  return out;
}

/// Chain members must be proper sublogs of their successors.
inline bool chain_is_ordered(const CorpusEntry& e) {
  auto c = chain(e);
  for (std::size_t i = 1; i < c.size(); ++i)
    if (!is_proper_sublog(c[i - 1], c[i])) return false;
  return true;
}

struct CorpusResult {
  Evidence evidence;
  std::vector<FixtureMismatch> mismatches;
  std::size_t entries = 0;  // entries of this miner
};

/// Evaluates every corpus chain under one miner. All chains contribute
/// observations; entries of this miner also mark their target cells as
/// backed and have their printed values checked.
inline CorpusResult evaluate_corpus(Miner m, unsigned jobs = 1, const NetOptions& opt = {},
                                    double tolerance = fixture_tolerance) {
  const auto& entries = corpus();
  std::vector<std::vector<MeasuredLog>> measured(entries.size());
  parallel_for(entries.size(), jobs, [&](std::size_t i) { measured[i] = measure_chain(entries[i], m, opt); });
  CorpusResult res{Evidence(m), {}, 0};
  for (std::size_t i = 0; i < entries.size(); ++i) {
    const auto& e = entries[i];
    const auto& logs = measured[i];
    const bool own = e.miner == m;
    if (!chain_is_ordered(e))
      res.mismatches.push_back({std::string(e.id), "chain is not a proper sublog chain", 0, 0, std::nullopt});
    for (std::size_t a = 0; a < logs.size(); ++a)
      for (std::size_t b = a + 1; b < logs.size(); ++b)
        observe(res.evidence, std::string(e.id) + " L" + std::to_string(a + 1) + "->L" + std::to_string(b + 1),
                logs[a], logs[b], own ? &e.targets : nullptr);
    if (own) {
      ++res.entries;
      auto mis = check_fixtures(e, logs, tolerance);
      res.mismatches.insert(res.mismatches.end(), mis.begin(), mis.end());
    }
  }
  res.evidence.finalize();
  return res;
}

}  // namespace analog
