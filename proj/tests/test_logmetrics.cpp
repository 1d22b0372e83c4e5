#include <gtest/gtest.h>

#include <set>

#include "analog/corpus.hpp"
#include "analog/logmetrics.hpp"
#include "test_support.hpp"

using namespace analog;

namespace {

Trace ids(const EventLog& l, std::string_view s) {
  Trace t;
  for (char c : s) t.push_back(*l.id_of(std::string(1, c)));
  return t;
}

bool is_subsequence(const Trace& s, const Trace& t) {
  std::size_t k = 0;
  for (auto a : t)
    if (k < s.size() && s[k] == a) ++k;
  return k == s.size();
}

std::size_t brute_lcs(const Trace& a, const Trace& b) {
  std::size_t best = 0;
  for (std::uint32_t mask = 0; mask < (1u << a.size()); ++mask) {
    Trace s;
    for (std::size_t i = 0; i < a.size(); ++i)
      if (mask >> i & 1) s.push_back(a[i]);
    if (s.size() > best && is_subsequence(s, b)) best = s.size();
  }
  return best;
}

}  // namespace

TEST(LogMetrics, FigureLogValues) {
  auto r = log_report(figure_log());
  EXPECT_EQ(*r[lm::magnitude], 350);
  EXPECT_EQ(*r[lm::variety], 4);
  EXPECT_EQ(*r[lm::trace_count], 100);
  EXPECT_EQ(*r[lm::tl_min], 3);
  EXPECT_DOUBLE_EQ(*r[lm::tl_avg], 3.5);
  EXPECT_EQ(*r[lm::tl_max], 4);
  EXPECT_EQ(*r[lm::level_of_detail], 6);
  EXPECT_EQ(*r[lm::ties], 4);
  EXPECT_EQ(*r[lm::lempel_ziv], 70);
  EXPECT_EQ(*r[lm::distinct_traces], 3);
  EXPECT_DOUBLE_EQ(*r[lm::pct_distinct_traces], 0.03);
  EXPECT_DOUBLE_EQ(*r[lm::structure], 3.5);
  EXPECT_NEAR(*r[lm::affinity], 5700.0 / 9900.0, 1e-12);
  EXPECT_NEAR(*r[lm::deviation_from_random], 0.580596, 1e-6);
  EXPECT_NEAR(*r[lm::avg_edit_distance], 1.151515, 1e-6);
  EXPECT_NEAR(*r[lm::variant_entropy], 4.78036, 1e-5);
  EXPECT_NEAR(*r[lm::norm_variant_entropy], 0.350945, 1e-6);
  EXPECT_NEAR(*r[lm::sequence_entropy], 160.3505, 1e-4);
  EXPECT_NEAR(*r[lm::norm_sequence_entropy], 0.0782, 1e-4);
}

TEST(LogMetrics, BlockRuleOnlyAffectsEntropy) {
  auto a = log_report(figure_log(), {BlockRule::first_created});
  auto b = log_report(figure_log(), {BlockRule::lightest_subtree});
  for (std::size_t i = 0; i < lm::variant_entropy; ++i) EXPECT_EQ(a[i], b[i]) << i;
  EXPECT_NEAR(*b[lm::sequence_entropy], 241.3142, 1e-4);
  EXPECT_NEAR(*b[lm::norm_sequence_entropy], 0.1177, 1e-4);
  // Same number of blocks with the same sizes here, so variant entropy agrees.
  EXPECT_NEAR(*a[lm::variant_entropy], *b[lm::variant_entropy], 1e-12);
}

TEST(LogMetrics, PrefixAutomatonPartitionsAllNodes) {
  std::mt19937_64 rng(3);
  for (auto rule : {BlockRule::first_created, BlockRule::lightest_subtree, BlockRule::heaviest_subtree})
    for (int i = 0; i < 100; ++i) {
      auto l = test_util::random_log(rng);
      auto pa = build_prefix_automaton(l, rule);
      std::size_t covered = 0;
      for (const auto& b : pa.blocks) {
        covered += b.size();
        // Each block is a chain: every member after the first is a child of the previous.
        for (std::size_t k = 1; k < b.size(); ++k) EXPECT_EQ(pa.nodes[b[k]].parent, b[k - 1]);
      }
      EXPECT_EQ(covered, pa.nodes.size() - 1);
      std::uint64_t root_children = 0;
      for (auto c : pa.nodes[0].children) root_children += pa.nodes[c].weight;
      EXPECT_LE(root_children, l.trace_count());
    }
}

TEST(LogMetrics, LempelZivPhrases) {
  auto l = lempel_ziv_log();
  auto ph = lz78_phrases(l);
  ASSERT_EQ(ph.size(), 9u);
  std::set<Trace> got(ph.begin(), ph.end());
  std::set<Trace> want;
  for (auto s : {"a", "b", "c", "d", "ab", "ca", "bc", "ac", "bd"}) want.insert(ids(l, s));
  EXPECT_EQ(got, want);
  EXPECT_EQ(lempel_ziv(l), 9u);
}

TEST(LogMetrics, LempelZivPhrasesAreDistinctAndPrefixClosed) {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 200; ++i) {
    auto l = test_util::random_log(rng);
    auto ph = lz78_phrases(l);
    std::set<Trace> seen;
    for (const auto& p : ph) {
      EXPECT_TRUE(seen.insert(p).second);
      if (p.size() > 1) {
        EXPECT_TRUE(seen.count(Trace(p.begin(), p.end() - 1)));
      }
    }
    EXPECT_LE(ph.size(), magnitude(l));
  }
}

TEST(LogMetrics, LcsAndEditDistanceAgainstBruteForce) {
  std::mt19937_64 rng(9);
  std::uniform_int_distribution<int> len(0, 7), sym(0, 3);
  for (int i = 0; i < 500; ++i) {
    Trace a(len(rng)), b(len(rng));
    for (auto& x : a) x = sym(rng);
    for (auto& x : b) x = sym(rng);
    auto l = brute_lcs(a, b);
    EXPECT_EQ(lcs_length(a, b), l);
    EXPECT_EQ(edit_distance(a, b), a.size() + b.size() - 2 * l);
    EXPECT_EQ(edit_distance(a, b), edit_distance(b, a));
    EXPECT_EQ(edit_distance(a, a), 0u);
  }
}

TEST(LogMetrics, AffinityExamples) {
  EXPECT_DOUBLE_EQ(affinity(compact_log("abcde^3 e^2")), 0.4);
  // Two distinct variants with empty neighbourhoods share nothing.
  EXPECT_DOUBLE_EQ(affinity(compact_log("a b")), 0.0);
  // Copies of one variant are identical even without neighbours.
  EXPECT_DOUBLE_EQ(affinity(compact_log("a^2")), 1.0);
  EXPECT_DOUBLE_EQ(affinity(compact_log("abc abcd")), 2.0 / 3.0);
  EXPECT_THROW(affinity(compact_log("abc")), undefined_measure);
}

TEST(LogMetrics, UndefinedMeasuresAreAbsent) {
  auto r = log_report(compact_log("a"));
  EXPECT_FALSE(r[lm::affinity]);
  EXPECT_FALSE(r[lm::avg_edit_distance]);
  EXPECT_FALSE(r[lm::deviation_from_random]);
  EXPECT_FALSE(r[lm::norm_variant_entropy]);
  EXPECT_EQ(*r[lm::magnitude], 1);
  auto empty = log_report(EventLog{});
  EXPECT_FALSE(empty[lm::structure]);
  EXPECT_FALSE(empty[lm::tl_avg]);
}

TEST(LogMetrics, BoundsOnRandomLogs) {
  std::mt19937_64 rng(13);
  for (int i = 0; i < 300; ++i) {
    auto l = test_util::random_log(rng);
    auto r = log_report(l);
    EXPECT_LE(*r[lm::tl_min], *r[lm::tl_avg]);
    EXPECT_LE(*r[lm::tl_avg], *r[lm::tl_max]);
    EXPECT_LE(*r[lm::distinct_traces], *r[lm::trace_count]);
    EXPECT_LE(*r[lm::structure], *r[lm::tl_avg] + 1e-12);
    EXPECT_LE(*r[lm::ties], directly_follows(l).size());
    if (r[lm::affinity]) {
      EXPECT_GE(*r[lm::affinity], 0.0);
      EXPECT_LE(*r[lm::affinity], 1.0);
    }
    if (r[lm::deviation_from_random]) {
      EXPECT_LE(*r[lm::deviation_from_random], 1.0);
    }
    if (r[lm::avg_edit_distance]) {
      EXPECT_GE(*r[lm::avg_edit_distance], 0.0);
    }
    for (auto k : {lm::norm_variant_entropy, lm::norm_sequence_entropy})
      if (r[k]) {
        EXPECT_GE(*r[k], -1e-12);
        EXPECT_LE(*r[k], 1.0 + 1e-12);
      }
  }
}
