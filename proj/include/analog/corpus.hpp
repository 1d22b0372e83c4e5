#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "discovery.hpp"
#include "eventlog.hpp"
#include "measures.hpp"

namespace analog {

/// Published values of one measure along a chain.
struct ValueSeries {
  std::size_t measure;  // lm:: or mm:: index, depending on the list
  std::vector<double> values;
};

/// A counterexample chain L1 ⊏ L2 (⊏ L3) with the values printed for it.
/// Logs use the compact notation of compact_log; each later step lists the
/// traces added to the previous log.
struct CorpusEntry {
  std::string_view id;
  Miner miner;
  std::vector<std::string_view> steps;
  std::vector<std::size_t> targets = {};     // model-layout columns the chain is about
  std::vector<ValueSeries> model_values = {};  // mm:: indices
  std::vector<ValueSeries> log_values = {};    // lm:: indices
  std::vector<std::vector<double>> log_rows = {};  // 18 values in relation_rows order, or empty
  /// The printed model values follow a different normalisation; only their
  /// up/down pattern is compared.
  bool pattern_only = false;
};

/// Builds the chain of logs of an entry.
inline std::vector<EventLog> chain(const CorpusEntry& e) {
  std::vector<EventLog> out;
  for (auto step : e.steps) out.push_back(out.empty() ? compact_log(step) : out.back() + compact_log(step));
  return out;
}

inline EventLog figure_log() { return compact_log("abc^50 abcd^30 acbd^20"); }
inline EventLog lempel_ziv_log() { return compact_log("abc^2 abcd acbd"); }

namespace detail {
inline std::vector<std::size_t> all_columns() {
  std::vector<std::size_t> c(mm::count_);
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = i;
  return c;
}
inline std::vector<std::size_t> dfg_columns() { return {dfg_to_model.begin(), dfg_to_model.end()}; }
}  // namespace detail

inline const std::vector<CorpusEntry>& corpus() {
  static constexpr std::string_view var_l1 = "abcd^2 abcde^2 deab^2";
  static const std::vector<double> var_row1{26, 5, 6, 4.3333, 5, 6, 5, 13, 3, 0.5,
                                            4.3333, 0.56, 0.5757, 2.6667, 6.1827, 0.3126, 16.0483, 0.1894};
  static const std::vector<double> sup_row1{25, 5, 6, 4.1667, 5, 8, 5, 11, 4, 0.6667,
                                            4.1667, 0.5856, 0.5517, 2.0667, 6.1827, 0.3126, 10.9917, 0.1366};
  static const std::vector<double> cc_row1{24, 5, 6, 4, 4, 5, 5, 12, 3, 0.5,
                                           2.6667, 0.2, 0.619, 4.2667, 10.889, 0.4729, 24.9533, 0.3272};
  static const std::vector<double> cc_row2{32, 6, 7, 4.5714, 8, 11, 7, 16, 4, 0.5714,
                                           3.1429, 0.2079, 0.6475, 4.5714, 21.474, 0.4841, 42.4367, 0.3826};
  static constexpr std::string_view mm_l1 = "abd^2 acd^2 e";
  static constexpr std::string_view mm_l2 = "abde acde abcd abcbdef abcbcbdef";

  static const std::vector<CorpusEntry> entries{
      // Flower model.
      {"flower.variety-constant", Miner::flower, {var_l1, "abcde^2 deabc cdeab ecdabc"}, detail::all_columns(), {}, {},
       {var_row1,
        {52, 5, 11, 4.7273, 6, 23, 7, 21, 6, 0.5455, 4.6364, 0.5829, 0.6039, 2.9091, 29.0428, 0.4543, 60.0209,
         0.2921}}},
      {"flower.leq", Miner::flower, {"a^2 abcd^3", "eabcd^2"},
       {mm::size, mm::cross_connectivity, mm::cfc, mm::separability, mm::acd, mm::mcd, mm::sequentiality, mm::cyclicity, mm::cnc},
       {{mm::size, {9, 10}},
        {mm::cross_connectivity, {0.9504, 0.961}},
        {mm::cfc, {5, 6}},
        {mm::separability, {0.5714, 0.625}},
        {mm::acd, {10, 12}},
        {mm::mcd, {10, 12}},
        {mm::sequentiality, {0.8333, 0.8571}},
        {mm::cyclicity, {0.7143, 0.75}},
        {mm::cnc, {1.3333, 1.4}}},
       {},
       {{14, 4, 5, 2.8, 4, 2, 3, 8, 2, 0.4, 2.8, 0.4, 0.4796, 1.8, 0, 0, 0, 0},
        {24, 5, 7, 3.4286, 5, 4, 4, 11, 3, 0.4286, 3.4286, 0.4524, 0.5169, 1.9048, 6.1827, 0.3126, 16.3006,
         0.2137}}},

      // Trace net.
      {"tracenet.support-constant", Miner::trace_net, {"abc abcd^2 abcde^2 deab", "abcde^3 deab^3"},
       detail::all_columns(), {}, {},
       {sup_row1,
        {52, 5, 12, 4.3333, 5, 8, 5, 20, 4, 0.3333, 4.3333, 0.5899, 0.5743, 2.5152, 6.1827, 0.3126, 32.0966,
         0.1562}}},
      {"tracenet.leq", Miner::trace_net, {"abc abcd^2 abcde^2 deab", "abcdef aabcdef abcdeab"},
       {mm::size, mm::cfc, mm::acd, mm::mcd, mm::diameter, mm::duplicate_tasks},
       {{mm::size, {30, 67}}, {mm::cfc, {4, 7}}, {mm::acd, {4, 7}}, {mm::mcd, {4, 7}}},
       {},
       {sup_row1,
        {45, 6, 9, 5, 7, 10, 6, 18, 7, 0.7778, 4.6667, 0.5872, 0.5861, 2.5556, 23.5941, 0.4535, 38.233, 0.2232}}},
      {"tracenet.cc", Miner::trace_net, {"abcd^2 acce^2 aaaa^2", "aabccdef", "gaabccdefaabccdef"},
       {mm::cross_connectivity},
       {{mm::cross_connectivity, {0.8476, 0.8677, 0.8544}}},
       {},
       {cc_row1, cc_row2,
        {49, 7, 8, 6.125, 17, 22, 9, 23, 5, 0.625, 3.625, 0.2219, 0.6776, 6.5357, 44.3327, 0.3842, 74.0677,
         0.3884}}},
      {"tracenet.cc-nvare", Miner::trace_net, {"a abc", "abcde xyz", "fghijklmnop"},
       {mm::cross_connectivity},
       {{mm::cross_connectivity, {0.7098, 0.857, 0.8436}}},
       {{lm::norm_variant_entropy, {0, 0.3181, 0.3258}}}},
      {"tracenet.seq", Miner::trace_net, {"abcde^3 edcab^3", "afedcb^2", "gacdebf^2 ab"},
       {mm::sequentiality},
       {{mm::sequentiality, {0.2, 0.1875, 0.2}}},
       {},
       {{30, 5, 6, 5, 5, 4, 3, 16, 2, 0.3333, 5, 0.4857, 0.659, 3.6, 6.9315, 0.301, 20.7944, 0.2038},
        {42, 6, 8, 5.25, 6, 7, 4, 21, 3, 0.375, 5.25, 0.3571, 0.7031, 4.0714, 16.4792, 0.4057, 45.1709, 0.2877},
        {58, 7, 11, 5.2727, 7, 37, 6, 28, 5, 0.4545, 5.2727, 0.2545, 0.7395, 4.5455, 30.24, 0.4447, 78.9679,
         0.3353}}},
      {"tracenet.seq-affinity", Miner::trace_net, {"abcde^3 edcab^3", "fedcab^2", "gfedcab^5 ab"},
       {mm::sequentiality},
       {{mm::sequentiality, {0.2, 0.1875, 0.2}}},
       {{lm::affinity, {0.4857, 0.4941, 0.5117}}}},
      {"tracenet.diameter-equal", Miner::trace_net, {var_l1, "abcde^2 deabc cdeab fcdab"},
       {mm::diameter},
       {{mm::diameter, {11, 11}}},
       {},
       {var_row1,
        {51, 6, 11, 4.6364, 5, 20, 7, 21, 6, 0.5455, 4.6364, 0.5626, 0.5880, 2.9818, 27.7259, 0.4628, 57.7827,
         0.2882}}},
      {"tracenet.diameter-less", Miner::trace_net, {var_l1, "abcde^2 deabc cdeab fcdabc"},
       {mm::diameter, mm::density},
       {{mm::diameter, {11, 13}}, {mm::density, {0.0909, 0.0417}}},
       {},
       {var_row1,
        {52, 6, 11, 4.7273, 6, 20, 7, 21, 6, 0.5455, 4.6364, 0.5829, 0.5887, 2.9091, 29.0428, 0.4543, 60.0209,
         0.2921}}},
      {"tracenet.cnc", Miner::trace_net, {"abcd^2 acce^2 aaaa^2", "aabccdef", "gaabccdefaabccdf"},
       {mm::cnc},
       {{mm::cnc, {1.0435, 1.0526, 1.0435}}},
       {},
       {cc_row1, cc_row2,
        {48, 7, 8, 6, 16, 26, 10, 23, 5, 0.625, 3.625, 0.2154, 0.6766, 6.2857, 43.6547, 0.3936, 72.9894,
         0.3928}}},
      {"tracenet.cnc-nvare", Miner::trace_net, {"ab abcd abce", "stuvwxyz", "bcdefghijklm"},
       {mm::cnc},
       {{mm::cnc, {1.0526, 1.0588, 1.0526}}},
       {{lm::norm_variant_entropy, {0.3109, 0.3348, 0.3538}}}},
      {"tracenet.density-equal", Miner::trace_net, {"ae^4 abcde", "abcde f"},
       {mm::density},
       {{mm::density, {0.1667, 0.1667}}},
       {},
       {{13, 5, 5, 2.6, 5, 2, 5, 8, 2, 0.4, 2.6, 0.6, 0.478, 1.2, 3.8191, 0.3552, 8.0241, 0.2406},
        {19, 6, 7, 2.7143, 5, 3, 5, 11, 3, 0.4286, 2.7143, 0.3333, 0.559, 2.2857, 6.6899, 0.4911, 16.283,
         0.2911}}},
      {"tracenet.density-equal-affinity", Miner::trace_net, {"ae abcde", "abcde f"},
       {mm::density},
       {{mm::density, {0.1667, 0.1667}}},
       {{lm::affinity, {0, 0.1667}}}},
      {"tracenet.duplicates-equal", Miner::trace_net, {"a abcd", "uvwxyz^2"},
       {mm::duplicate_tasks},
       {{mm::duplicate_tasks, {1, 1}}},
       {},
       {{5, 4, 2, 2.5, 4, 2, 3, 4, 2, 1, 2.5, 0, 0.4796, 3, 0, 0, 0, 0},
        {17, 10, 4, 4.25, 6, 3, 8, 13, 3, 0.75, 4.25, 0.1667, 0.6449, 6.1667, 6.7301, 0.2923, 10.2986,
         0.2138}}},
      {"tracenet.duplicates-equal-pct", Miner::trace_net, {"a^4 abcd", "uvwxyz^2"},
       {mm::duplicate_tasks},
       {{mm::duplicate_tasks, {1, 1}}},
       {{lm::pct_distinct_traces, {0.4, 0.4286}}}},
      {"tracenet.duplicates-less", Miner::trace_net, {"a^2 abcd^3", "eabcd^2"},
       {mm::duplicate_tasks},
       {{mm::duplicate_tasks, {1, 5}}}},

      // Alpha miner.
      {"alpha.intro", Miner::alpha, {"abcde abdce auvxyz", "abcdefgh", "d g ce abcde^2 bbcddeffgghh"},
       {mm::cnc, mm::diameter},
       {{mm::cnc, {1.0476, 1.0741, 1.0476}}, {mm::diameter, {13, 15, 13}}},
       {{lm::affinity, {0.0476, 0.1357, 0.1498}}}},
      {"alpha.size", Miner::alpha,
       {"abcde^3 e^2", "abcdbcdef^2", "abcdbcdbcde^2 abcdbcdbcdbcdde aabbccddeeffgghhii"},
       {mm::size, mm::token_split, mm::cfc, mm::acd, mm::mcd, mm::cyclicity, mm::empty_seq_flows},
       {{mm::size, {11, 13, 11}},
        {mm::token_split, {0, 2, 0}},
        {mm::cfc, {2, 6, 2}},
        {mm::acd, {2.5, 2.8571, 2.5}},
        {mm::mcd, {3, 4, 3}},
        {mm::cyclicity, {0, 0.6364, 0}},
        {mm::empty_seq_flows, {0, 1, 0}}},
       {},
       {{17, 5, 5, 3.4, 5, 2, 4, 11, 2, 0.4, 3.4, 0.4, 0.5417, 2.4, 2.7034, 0.2515, 6.1576, 0.1278}}},
      {"alpha.mismatch", Miner::alpha,
       {"abcd^3 e^2", "abcd^3 acbd abcbcd bcbcbcd abcfefe", "abcbcbcbcd^3 abcbcbcbcbcd aabbccdd eeffgg"},
       {mm::mismatch, mm::connector_heterogeneity, mm::depth},
       {{mm::mismatch, {0, 5, 0}}, {mm::connector_heterogeneity, {0, 1, 0}}, {mm::depth, {1, 2, 1}}}},
      {"alpha.cc-seq", Miner::alpha,
       {mm_l1, mm_l2, "acbd acbcbde abcbcbcd abcbcbcbcd aabbccddeeffgg"},
       {mm::cross_connectivity, mm::sequentiality},
       {{mm::cross_connectivity, {0.9237, 0.631, 0.9705}}, {mm::sequentiality, {1, 0.7059, 1}}}},
      {"alpha.sep", Miner::alpha, {"abcde^3 edcab^3", "afedcb^2", "gbcdefc^2"},
       {mm::separability},
       {{mm::separability, {1, 0.7778, 1}}}},
      {"alpha.sep-affinity", Miner::alpha, {"abcde edcab", "afedcb^2", "gbcdefc^4"},
       {mm::separability},
       {},
       {{lm::affinity, {0.1429, 0.2857, 0.3367}}}},
      {"alpha.diameter", Miner::alpha,
       {"abcd^3 e^2", "abcd^3 abcbcd^3 acbd bcbcbcd abcfefe",
        "abcbcbcbcd^3 abcbcbcbcbcd aabbccdd eeffgg hijk"},
       {mm::diameter},
       {{mm::diameter, {9, 7, 9}}}},
      {"alpha.cnc", Miner::alpha, {"acd^4 b", "acde bcde bced", "acde aced abcd aabbccddeeff c"},
       {mm::cnc},
       {{mm::cnc, {1, 1.2, 1}}}},
      {"alpha.density", Miner::alpha,
       {"abcd^3 e^2", "abcd^3 acbd abcbcd^3 bcbcbcd abcfefe",
        "abcd^3 abcbcbcbcd^3 abcbcbcbcbcd aabbccdd eeffggee aahhiijjee"},
       {mm::density},
       {{mm::density, {0.25, 0.2333, 0.25}}}},

      // Directly-follows graph.
      {"dfg.unchanged", Miner::dfg, {"abcc^2 ccde", "abcde"}, detail::dfg_columns()},
      {"dfg.unchanged-affinity", Miner::dfg, {"abcc ccde", "abcde"}, detail::dfg_columns(), {},
       {{lm::affinity, {0.2, 0.3333}}}},
      {"dfg.size-less", Miner::dfg, {var_l1, "abcde^2 deabc cdeab ecdabcf"},
       {mm::size, mm::cfc},
       {{mm::size, {7, 8}}, {mm::cfc, {8, 15}}}},
      {"dfg.mismatch", Miner::dfg, {mm_l1, mm_l2, "acbd acbcbde abcbcbcd abcbcbcbcd aabbccddeeffg"},
       {mm::mismatch},
       {{mm::mismatch, {0, 1, 0}}}},
      {"dfg.cc", Miner::dfg, {"ab^5 cd ef g", "abcd stuvwxyz", "hijklmnop"},
       {mm::cross_connectivity},
       {{mm::cross_connectivity, {0.8333, 0.8245, 0.8558}}},
       {},
       {},
       true},
      {"dfg.cc-second", Miner::dfg, {"abcd cdef efg ab cd ef g", "abcd^2 qrst uvwxyz", "abcd^3 h i j"},
       {mm::cross_connectivity},
       {{mm::cross_connectivity, {0.9086, 0.8867, 0.9108}}},
       {},
       {},
       true},
      {"dfg.sep", Miner::dfg, {"a abc", "abc ijklm", "abc^2 acd ace ijxjkyklzlm"},
       {mm::separability},
       {{mm::separability, {2.8, 3, 2.8}}},
       {},
       {},
       true},
      {"dfg.sep-pct", Miner::dfg, {"a abc^3", "ijklm", "acd ace ijxjkyklzlm"}, {mm::separability}},
      {"dfg.acd", Miner::dfg, {"ab^3 c d e", "agb", "hijk"}, {mm::acd}, {{mm::acd, {4, 3.5, 4}}}},
      {"dfg.acd-second", Miner::dfg, {"ab cx dy ez", "ab agb", "cx hi"}, {mm::acd}},
      {"dfg.mcd-diameter-equal", Miner::dfg, {"abcc c^2 ccde", "abcde abffde abfffde abffffde^2"},
       {mm::mcd, mm::diameter},
       {{mm::mcd, {6, 6}}, {mm::diameter, {7, 7}}}},
      {"dfg.mcd-diameter-less", Miner::dfg, {"abcc c^2 ccde", "abcde abffde abfffde abffffde^2 accdeg"},
       {mm::mcd, mm::diameter},
       {{mm::mcd, {6, 7}}, {mm::diameter, {7, 8}}}},
      {"dfg.seq", Miner::dfg, {"abde^2 acde^2 abcde e", "abdacd^2 abcdefg", "abdabdacd abcdefh"},
       {mm::sequentiality},
       {{mm::sequentiality, {1, 0.9286, 1}}}},
      {"dfg.seq-pct", Miner::dfg, {"abde^3 acde^2 abcde e", "abdacd^2 abcdefg", "abdabdacd abcdefh"},
       {mm::sequentiality}},
      // Printed L3 depth is 1, but its drawn graph omits the b->c edge of
      // <a,b,c,x>; with that edge the depth stays 2.
      {"dfg.depth", Miner::dfg, {"ab cx dy ez", "ab agb", "abcx hi"}, {mm::depth}, {{mm::depth, {1, 2, 2}}}},
      {"dfg.depth-second", Miner::dfg, {"ab^7 cx dy ez", "agb", "bc hi"}, {mm::depth}},
      {"dfg.cyc", Miner::dfg, {"a abccd abbcd", "aabbccdde", "abbccd aaabbbcccddd vwxxyz"},
       {mm::cyclicity},
       {{mm::cyclicity, {0.5, 0.8, 0.5}}}},
      {"dfg.cyc-pct", Miner::dfg, {"a^2 abccd abbcd", "aabbccdde", "abbccd aaabbbcccddd vwxxyz"}, {mm::cyclicity}},
      {"dfg.cnc", Miner::dfg, {"aabbccdd^2 bcd^3", "bcd aabbccddee abcde", "aaabbbcccdddeee uvxxyz"},
       {mm::cnc},
       {{mm::cnc, {1.6667, 1.8571, 1.6667}}}},
      {"dfg.cnc-affinity", Miner::dfg, {"aabbccdd bcd", "aabbccddee", "aaabbbcccdddeee^3 uvxxyz"}, {mm::cnc}},
      {"dfg.density", Miner::dfg, {"a abcd", "abbccddee", "ae abbcbcddee^2 vvxxyxyyzz"},
       {mm::density},
       {{mm::density, {0.24, 0.3333, 0.24}}},
       {},
       {},
       true},
      {"dfg.density-pct", Miner::dfg, {"a^4 abcd", "abbccddee", "ae abbcbcddee^2 vvxxyxyyzz"}, {mm::density}},

      // Directly-follows miner.
      {"dfm.size-equal", Miner::dfm, {"abcc^2 ccde", "abcde"}, {mm::size}, {{mm::size, {16, 16}}}},
      {"dfm.size-less", Miner::dfm, {var_l1, "abcde^2 deabc cdeab ecdabcf"},
       {mm::size, mm::cfc},
       {{mm::size, {17, 25}}, {mm::cfc, {8, 15}}}},
      {"dfm.mismatch", Miner::dfm, {mm_l1, mm_l2, "acbd acbcbde abcbcbcd abcbcbcbcd aabbccddeeffg"},
       {mm::mismatch},
       {{mm::mismatch, {0, 1, 0}}}},
      {"dfm.cc", Miner::dfm, {"ab^5 cd ef g", "abcd stuvwxyz", "hijklmnop"},
       {mm::cross_connectivity},
       {{mm::cross_connectivity, {0.8893, 0.8775, 0.8911}}}},
      {"dfm.cc-second", Miner::dfm, {"abcd cdef efg ab cd ef g", "abcd^2 qrst uvwxyz", "abcd^3 h i j"},
       {mm::cross_connectivity},
       {{mm::cross_connectivity, {0.9675, 0.931, 0.9496}}}},
      {"dfm.sep", Miner::dfm, {"a abc", "abc ijjk", "abcd aabbcc iijjkk"},
       {mm::separability},
       {{mm::separability, {0.75, 0.9375, 0.75}}}},
      {"dfm.sep-pct", Miner::dfm, {"a^4 abc", "abc ijjk", "abcd aabbcc iijjkk"}, {mm::separability}},
      {"dfm.acd", Miner::dfm, {"ab^3 c d e", "agb", "hijk"}, {mm::acd}, {{mm::acd, {4, 3.5, 4}}}},
      {"dfm.acd-second", Miner::dfm, {"ab cx dy ez", "ab agb", "cx hi"}, {mm::acd}},
      {"dfm.seq", Miner::dfm, {"a abc", "aabbccdd", "aabbccdd fghijklmnopq"},
       {mm::sequentiality},
       {{mm::sequentiality, {0.5, 0.9545, 0.5}}}},
      {"dfm.seq-pct", Miner::dfm, {"a abc^5", "aabbccdd", "aabbccdd fghijklmnopq"}, {mm::sequentiality}},
      {"dfm.depth", Miner::dfm, {"ab^2 cx^2 dy^2 ez", "ab agb aggb", "agggb^2 bc hi"},
       {mm::depth},
       {{mm::depth, {1, 2, 1}}}},
      {"dfm.depth-affinity", Miner::dfm, {"ab cx dy ez", "ab aggb", "agggb^3 bc hi"}, {mm::depth}},
      {"dfm.cyc", Miner::dfm, {"a abcc", "abbcde", "abbbcdde^2 vwxyz"},
       {mm::cyclicity},
       {{mm::cyclicity, {0.2222, 0.2667, 0.2222}}}},
      {"dfm.cyc-pct", Miner::dfm, {"a^3 abcc", "abbcde", "abbbcdde^2 vwxyz"}, {mm::cyclicity}},
      {"dfm.cnc", Miner::dfm, {"aabbccdd bcd^3", "bcd aabbccddee abcde", "aaabbbcccdddeee uvxxyz"},
       {mm::cnc},
       {{mm::cnc, {1.25, 1.3, 1.25}}}},
      {"dfm.cnc-affinity", Miner::dfm, {"aabbccdd bcd", "aabbccddee abcde", "aaabbbcccdddeee^3 uvxxyz"}, {mm::cnc}},
      {"dfm.duplicates", Miner::dfm, {mm_l1, mm_l2}, {mm::duplicate_tasks}, {{mm::duplicate_tasks, {2, 6}}}},
  };
  return entries;
}

/// Corpus entry by id; throws input_error when absent.
inline const CorpusEntry& find_entry(std::string_view id) {
  for (const auto& e : corpus())
    if (e.id == id) return e;
  throw input_error("no corpus entry " + std::string(id));
}

}  // namespace analog
