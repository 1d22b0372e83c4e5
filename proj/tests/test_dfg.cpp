#include <gtest/gtest.h>

#include "analog/corpus.hpp"
#include "analog/dfg.hpp"
#include "analog/relations.hpp"
#include "test_support.hpp"

using namespace analog;

namespace {

void expect_closed_form_holds(const ModelReport& actual, const ModelReport& closed) {
  for (std::size_t i = 0; i < mm::count_; ++i) {
    if (!closed[i]) continue;
    ASSERT_TRUE(actual[i].has_value()) << model_measures[i].key;
    EXPECT_NEAR(*actual[i], *closed[i], 1e-9) << model_measures[i].key;
  }
}

}  // namespace

TEST(Dfg, FigureLogGraph) {
  auto d = build_dfg(figure_log());
  EXPECT_EQ(d.node_count(), 6u);
  EXPECT_EQ(d.edge_count(), 9u);
  EXPECT_EQ(d.labels[Dfg::start], start_symbol);
  EXPECT_EQ(d.labels[Dfg::end], end_symbol);
  auto a = Dfg::node_of(0), b = Dfg::node_of(1), c = Dfg::node_of(2), dd = Dfg::node_of(3);
  EXPECT_EQ((d.weights.at({Dfg::start, a})), 100u);
  EXPECT_EQ((d.weights.at({a, b})), 80u);
  EXPECT_EQ((d.weights.at({b, c})), 80u);
  EXPECT_EQ((d.weights.at({c, b})), 20u);
  EXPECT_EQ((d.weights.at({c, dd})), 30u);
  EXPECT_EQ((d.weights.at({dd, Dfg::end})), 50u);
}

TEST(Dfg, FigureLogReport) {
  auto r = dfg_report(build_dfg(figure_log()));
  EXPECT_EQ(*r[dm::size], 6);
  EXPECT_EQ(*r[dm::mismatch], 1);
  EXPECT_NEAR(*r[dm::cross_connectivity], 0.9638, 1e-4);
  EXPECT_EQ(*r[dm::cfc], 7);
  EXPECT_DOUBLE_EQ(*r[dm::separability], 0.75);
  EXPECT_DOUBLE_EQ(*r[dm::acd], 3.4);
  EXPECT_EQ(*r[dm::mcd], 5);
  EXPECT_DOUBLE_EQ(*r[dm::sequentiality], 1.0);
  EXPECT_EQ(*r[dm::depth], 0);
  EXPECT_EQ(*r[dm::diameter], 6);
  EXPECT_DOUBLE_EQ(*r[dm::cyclicity], 0.5);
  EXPECT_DOUBLE_EQ(*r[dm::cnc], 1.5);
  EXPECT_DOUBLE_EQ(*r[dm::density], 0.3);
}

TEST(Dfg, EmptyLogIsRejected) { EXPECT_THROW(build_dfg(EventLog{}), undefined_measure); }

TEST(Dfg, EmptyTraceLinksSentinels) {
  auto d = build_dfg(parse_log("2;\n1;a"));
  EXPECT_TRUE(d.g.has_edge(Dfg::start, Dfg::end));
  EXPECT_EQ((d.weights.at({Dfg::start, Dfg::end})), 2u);
}

TEST(Dfg, ModelLayoutMapping) {
  auto l = figure_log();
  auto dr = dfg_report(build_dfg(l));
  auto mr = measure_model(Miner::dfg, l);
  for (std::size_t i = 0; i < dm::count_; ++i) EXPECT_EQ(mr[dfg_to_model[i]], dr[i]) << dfg_measures[i].key;
  EXPECT_FALSE(mr[mm::token_split]);
  EXPECT_FALSE(mr[mm::duplicate_tasks]);
}

TEST(Dfg, ClosedFormsOnRandomLogs) {
  std::mt19937_64 rng(41);
  for (int i = 0; i < 200; ++i) {
    auto l = test_util::random_log(rng);
    SCOPED_TRACE(serialize_log(l));
    expect_closed_form_holds(measure_model(Miner::dfg, l), closed_form_report(Miner::dfg, l));
    auto dfm = model_report(dfm_miner(l));
    expect_closed_form_holds(dfm, closed_form_report(Miner::dfm, l));
    EXPECT_NEAR(*dfm[mm::density], 1.0 / static_cast<double>(l.variety() + 1), 1e-12);
    auto diam_g = longest_simple_path(build_dfg(l).g, Dfg::start, Dfg::end);
    EXPECT_EQ(*dfm[mm::diameter], static_cast<double>(2 * diam_g - 1));
  }
}

TEST(Dfg, DfmStructure) {
  auto l = figure_log();
  auto d = build_dfg(l);
  auto n = dfm_miner(l);
  EXPECT_EQ(n.place_count(), d.node_count());
  EXPECT_EQ(n.transition_count(), d.edge_count());
  EXPECT_EQ(n.arc_count(), 2 * d.edge_count());
  std::size_t taus = 0;
  for (const auto& node : n.nodes()) taus += node.kind == NodeKind::transition && !node.label;
  EXPECT_EQ(taus, 2u);  // c and d both end traces
  EXPECT_EQ(n.node(*n.source()).id, "p_start");
  EXPECT_EQ(n.node(*n.sink()).id, "p_end");
}

TEST(Dfg, UpperBoundedMeasuresAreMonotone) {
  for (std::uint64_t i = 0; i < 300; ++i) {
    auto [l1, l2] = random_pair(17, i);
    auto a = dfg_report(build_dfg(l1)), b = dfg_report(build_dfg(l2));
    for (auto k : {dm::size, dm::cfc, dm::diameter}) EXPECT_LE(*a[k], *b[k]) << dfg_measures[k].key;
    if (a[dm::mcd]) {
      EXPECT_LE(*a[dm::mcd], *b[dm::mcd]);
    }
  }
}

TEST(Dfg, JsonAndDotAreDeterministic) {
  auto l = figure_log();
  auto j = dfg_to_json(build_dfg(l));
  EXPECT_EQ(j.dump(), dfg_to_json(build_dfg(l)).dump());
  EXPECT_EQ(j["nodes"].size(), 6u);
  EXPECT_EQ(j["edges"].size(), 9u);
  EXPECT_EQ(dfg_to_dot(build_dfg(l)), dfg_to_dot(build_dfg(l)));
}
