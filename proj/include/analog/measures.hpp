#pragma once

#include <array>
#include <cmath>
#include <optional>
#include <string_view>
#include <type_traits>

namespace analog {

struct MeasureInfo {
  std::string_view key;    // stable machine name (JSON keys, CSV headers)
  std::string_view label;  // short table label
  bool integral;
};

/// Fixed-order bundle of optional measure values; absent means undefined.
template <class Tag, std::size_t N>
struct Report {
  static constexpr std::size_t size = N;
  std::array<std::optional<double>, N> values{};

  std::optional<double>& operator[](std::size_t i) { return values[i]; }
  const std::optional<double>& operator[](std::size_t i) const { return values[i]; }
  friend bool operator==(const Report&, const Report&) = default;
};

struct LogTag {};
struct ModelTag {};
struct DfgTag {};

namespace lm {
enum : std::size_t {
  magnitude,
  variety,
  trace_count,
  tl_min,
  tl_avg,
  tl_max,
  level_of_detail,
  ties,
  lempel_ziv,
  distinct_traces,
  pct_distinct_traces,
  structure,
  affinity,
  deviation_from_random,
  avg_edit_distance,
  variant_entropy,
  norm_variant_entropy,
  sequence_entropy,
  norm_sequence_entropy,
  count_
};
}  // namespace lm

inline constexpr std::array<MeasureInfo, lm::count_> log_measures{{
    {"magnitude", "mag", true},
    {"variety", "var", true},
    {"trace_count", "support", true},
    {"tl_min", "tlmin", true},
    {"tl_avg", "tlavg", false},
    {"tl_max", "tlmax", true},
    {"level_of_detail", "LOD", true},
    {"ties", "ties", true},
    {"lempel_ziv", "LZ", true},
    {"distinct_traces", "DT#", true},
    {"pct_distinct_traces", "DT%", false},
    {"structure", "struct", false},
    {"affinity", "aff", false},
    {"deviation_from_random", "DFR", false},
    {"avg_edit_distance", "avgd", false},
    {"variant_entropy", "vare", false},
    {"norm_variant_entropy", "nvare", false},
    {"sequence_entropy", "seqe", false},
    {"norm_sequence_entropy", "nseqe", false},
}};

namespace mm {
enum : std::size_t {
  size,
  mismatch,
  connector_heterogeneity,
  cross_connectivity,
  token_split,
  cfc,
  separability,
  acd,
  mcd,
  sequentiality,
  depth,
  diameter,
  cyclicity,
  cnc,
  density,
  duplicate_tasks,
  empty_seq_flows,
  count_
};
}  // namespace mm

inline constexpr std::array<MeasureInfo, mm::count_> model_measures{{
    {"size", "size", true},
    {"mismatch", "MM", true},
    {"connector_heterogeneity", "CH", false},
    {"cross_connectivity", "CC", false},
    {"token_split", "TS", true},
    {"cfc", "CFC", true},
    {"separability", "sep", false},
    {"acd", "ACD", false},
    {"mcd", "MCD", true},
    {"sequentiality", "seq", false},
    {"depth", "depth", true},
    {"diameter", "diam", true},
    {"cyclicity", "cyc", false},
    {"cnc", "CNC", false},
    {"density", "dens", false},
    {"duplicate_tasks", "dup", true},
    {"empty_seq_flows", "empty", true},
}};

namespace dm {
enum : std::size_t {
  size,
  mismatch,
  cross_connectivity,
  cfc,
  separability,
  acd,
  mcd,
  sequentiality,
  depth,
  diameter,
  cyclicity,
  cnc,
  density,
  count_
};
}  // namespace dm

inline constexpr std::array<MeasureInfo, dm::count_> dfg_measures{{
    {"size", "size", true},
    {"mismatch", "MM", true},
    {"cross_connectivity", "CC", false},
    {"cfc", "CFC", true},
    {"separability", "sep", false},
    {"acd", "ACD", false},
    {"mcd", "MCD", true},
    {"sequentiality", "seq", false},
    {"depth", "depth", true},
    {"diameter", "diam", true},
    {"cyclicity", "cyc", false},
    {"cnc", "CNC", false},
    {"density", "dens", false},
}};

using LogReport = Report<LogTag, lm::count_>;
using ModelReport = Report<ModelTag, mm::count_>;
using DfgReport = Report<DfgTag, dm::count_>;

template <class R>
constexpr const auto& measures_of() {
  if constexpr (std::is_same_v<R, LogReport>) return log_measures;
  else if constexpr (std::is_same_v<R, ModelReport>) return model_measures;
  else return dfg_measures;
}

/// Index of a DFG measure inside the 17-column model layout.
inline constexpr std::array<std::size_t, dm::count_> dfg_to_model{
    mm::size, mm::mismatch, mm::cross_connectivity, mm::cfc,       mm::separability,
    mm::acd,  mm::mcd,      mm::sequentiality,      mm::depth,     mm::diameter,
    mm::cyclicity, mm::cnc, mm::density};

}  // namespace analog
