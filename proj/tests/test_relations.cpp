#include <gtest/gtest.h>

#include "analog/report_io.hpp"
#include "analog/reproduce.hpp"
#include "test_support.hpp"

using namespace analog;

namespace {
constexpr Miner all_miners[] = {Miner::flower, Miner::trace_net, Miner::alpha, Miner::dfg, Miner::dfm};

std::size_t column_of(Miner m, std::size_t mm_idx) {
  auto cols = model_columns(m);
  return static_cast<std::size_t>(std::find(cols.begin(), cols.end(), mm_idx) - cols.begin());
}

std::size_t row_of(std::size_t lm_idx) {
  return static_cast<std::size_t>(std::find(relation_rows.begin(), relation_rows.end(), lm_idx) -
                                  relation_rows.begin());
}
}  // namespace

TEST(Relations, TableShapes) {
  for (auto m : all_miners) {
    auto t = expected_table(m);
    ASSERT_EQ(t.size(), relation_rows.size());
    for (const auto& row : t) EXPECT_EQ(row.size(), model_columns(m).size()) << miner_name(m);
  }
  EXPECT_EQ(model_columns(Miner::dfg).size(), 13u);
  EXPECT_EQ(other_miners_table().size(), relation_rows.size());
}

TEST(Relations, SelectedCells) {
  auto fl = expected_table(Miner::flower);
  EXPECT_EQ(fl[row_of(lm::variety)][mm::size].cls, RelationClass::LT);
  EXPECT_EQ(fl[row_of(lm::magnitude)][mm::size].cls, RelationClass::LE);
  EXPECT_EQ(fl[row_of(lm::magnitude)][mm::mismatch].cls, RelationClass::EQ);
  auto tn = expected_table(Miner::trace_net);
  EXPECT_EQ(tn[row_of(lm::magnitude)][mm::cross_connectivity], (ExpectedCell{RelationClass::X, true}));
  EXPECT_EQ(tn[row_of(lm::tl_max)][mm::density].cls, RelationClass::GT);
  auto al = expected_table(Miner::alpha);
  EXPECT_EQ(al[0][mm::duplicate_tasks].cls, RelationClass::EQ);
  auto dfg = expected_table(Miner::dfg);
  EXPECT_EQ(dfg[row_of(lm::variety)][column_of(Miner::dfg, mm::size)].cls, RelationClass::LT);
  EXPECT_EQ(dfg[row_of(lm::ties)][column_of(Miner::dfg, mm::cfc)].cls, RelationClass::LT);
}

TEST(Relations, ParseCell) {
  for (auto s : {"<", "<=", "=", ">=", ">", "X", "X*"}) EXPECT_EQ(to_string(parse_cell(s)), s);
  EXPECT_THROW(parse_cell("~"), input_error);
}

TEST(Relations, ContradictsTruthTable) {
  using RC = RelationClass;
  // Columns: model decrease, equal, increase.
  const std::pair<RC, std::array<bool, 3>> rows[] = {
      {RC::LT, {true, true, false}},  {RC::LE, {true, false, false}}, {RC::EQ, {true, false, true}},
      {RC::GE, {false, false, true}}, {RC::GT, {false, true, true}},  {RC::X, {false, false, false}},
  };
  for (auto [c, want] : rows)
    for (int s = -1; s <= 1; ++s) EXPECT_EQ(contradicts(c, s), want[s + 1]) << to_string(c) << " " << s;
}

TEST(Relations, DeltaObservations) {
  auto l1 = compact_log("abc"), l2 = compact_log("abc abcd");
  auto o = delta_observation(l1, l2, Miner::flower, lm::variety, mm::size);
  ASSERT_TRUE(o);
  EXPECT_EQ(o->log, 1);
  EXPECT_EQ(o->model, 1);
  o = delta_observation(l1, l2, Miner::flower, lm::variety, mm::diameter);
  EXPECT_EQ(o->model, 0);
  o = delta_observation(l1, l2, Miner::trace_net, lm::tl_max, mm::density);
  EXPECT_EQ(o->log, 1);
  EXPECT_EQ(o->model, -1);
  // Affinity is undefined on a single trace.
  EXPECT_FALSE(delta_observation(l1, l2, Miner::flower, lm::affinity, mm::size));
  EXPECT_THROW(delta_observation(l2, l1, Miner::flower, lm::variety, mm::size), input_error);
  EXPECT_EQ(sign_of(1e-12), 0);
  EXPECT_EQ(sign_of(-0.5), -1);
}

TEST(Relations, ObservedClass) {
  EvidenceCell c;
  EXPECT_EQ(c.observed_class(), "?");
  c.seen = {0, 3, 0};
  EXPECT_EQ(c.observed_class(), "=");
  c.seen = {0, 3, 1};
  EXPECT_EQ(c.observed_class(), "<=");
  c.seen = {0, 0, 1};
  EXPECT_EQ(c.observed_class(), "<");
  c.seen = {2, 0, 0};
  EXPECT_EQ(c.observed_class(), ">");
  c.seen = {2, 1, 0};
  EXPECT_EQ(c.observed_class(), ">=");
  c.seen = {1, 0, 1};
  EXPECT_EQ(c.observed_class(), "X");
  EXPECT_EQ(c.orderings(), 2u);
}

TEST(Relations, CorpusChainsAreOrdered) {
  for (const auto& e : corpus()) EXPECT_TRUE(chain_is_ordered(e)) << e.id;
  EXPECT_THROW(find_entry("no.such.entry"), input_error);
}

TEST(Relations, CorpusIsConsistentForEveryMiner) {
  for (auto m : all_miners) {
    auto res = evaluate_corpus(m, 2);
    SCOPED_TRACE(std::string(miner_name(m)));
    EXPECT_GT(res.entries, 0u);
    EXPECT_EQ(res.evidence.falsifications(), 0u) << evidence_to_json(res.evidence).dump(1);
    EXPECT_EQ(res.evidence.unconfirmed_backed_x(), 0u);
    for (const auto& mis : res.mismatches)
      ADD_FAILURE() << mis.entry << " " << mis.what << " L" << mis.log << " expected " << mis.expected;
  }
}

TEST(Relations, FuzzedPairsRespectTheTables) {
  for (auto m : all_miners) {
    Evidence ev(m);
    fuzz_pairs(ev, 2024, 500, {}, 4);
    ev.finalize();
    SCOPED_TRACE(std::string(miner_name(m)));
    EXPECT_EQ(ev.pairs, 500u);
    for (std::size_t r = 0; r < ev.cells.size(); ++r)
      for (std::size_t c = 0; c < ev.columns.size(); ++c) {
        const auto& cell = ev.cells[r][c];
        if (cell.counterexample)
          ADD_FAILURE() << log_measures[relation_rows[r]].key << " vs " << model_measures[ev.columns[c]].key << ": "
                        << cell.counterexample->before << " -> " << cell.counterexample->after;
      }
  }
}

TEST(Relations, RandomPairsAreReproducible) {
  for (std::uint64_t i = 0; i < 50; ++i) {
    auto [a1, b1] = random_pair(9, i);
    auto [a2, b2] = random_pair(9, i);
    EXPECT_EQ(serialize_log(a1), serialize_log(a2));
    EXPECT_EQ(serialize_log(b1), serialize_log(b2));
    EXPECT_TRUE(is_proper_sublog(a1, b1));
  }
}

TEST(Relations, EvaluationIsIndependentOfThreadCount) {
  for (auto m : {Miner::trace_net, Miner::dfm}) {
    auto a = evaluate_corpus(m, 1), b = evaluate_corpus(m, 8);
    EXPECT_EQ(evidence_to_json(a.evidence).dump(), evidence_to_json(b.evidence).dump());
    Evidence f1(m), f8(m);
    fuzz_pairs(f1, 5, 200, {}, 1);
    fuzz_pairs(f8, 5, 200, {}, 8);
    f1.finalize();
    f8.finalize();
    EXPECT_EQ(evidence_to_json(f1).dump(), evidence_to_json(f8).dump());
  }
}

TEST(Relations, ClosedFormsTrackFuzzedChains) {
  for (std::uint64_t i = 0; i < 100; ++i) {
    auto [l1, l2] = random_pair(77, i);
    for (auto m : {Miner::flower, Miner::trace_net}) {
      for (const auto& l : {l1, l2}) {
        auto closed = closed_form_report(m, l);
        auto actual = measure_model(m, l);
        for (std::size_t k = 0; k < mm::count_; ++k)
          if (closed[k]) {
            EXPECT_NEAR(*actual[k], *closed[k], 1e-9) << model_measures[k].key;
          }
      }
    }
  }
}
