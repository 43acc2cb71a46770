#include <gtest/gtest.h>

#include <cmath>
#include <map>

#include "achlioptas/engine.hpp"
#include "achlioptas/serialize.hpp"

using namespace achlioptas;

namespace {

EngineConfig config(std::size_t n, std::size_t k, SamplingModel model, std::uint64_t seed = 1) {
  EngineConfig c;
  c.n = n;
  c.k = k;
  c.model = model;
  c.seed = seed;
  return c;
}

}  // namespace

TEST(Rng, UniformStaysInRange) {
  Rng r(5);
  for (std::uint64_t bound : {1ull, 2ull, 3ull, 7ull, 1000ull, (1ull << 63) + 5}) {
    for (int i = 0; i < 1000; ++i) EXPECT_LT(r.uniform(bound), bound);
  }
}

TEST(Rng, SubstreamsDiffer) {
  Rng a(1, "offers"), b(1, "strategy"), c(1, "offers");
  EXPECT_NE(a.next(), b.next());
  Rng a2(1, "offers");
  EXPECT_EQ(a2.next(), c.next());
}

TEST(Engine, RejectsBadConfig) {
  EXPECT_THROW(Engine(config(1, 1, SamplingModel::ExactMissing)), std::invalid_argument);
  EXPECT_THROW(Engine(config(5, 0, SamplingModel::ExactMissing)), std::invalid_argument);
}

TEST(Engine, TwoVerticesOneOffer) {
  Engine e(config(2, 1, SamplingModel::ExactMissing));
  const RoundOffer o = e.next_offer();
  ASSERT_EQ(o.candidates.size(), 1u);
  EXPECT_EQ(o.candidates[0].normalized(), (Edge{0, 1}));
}

TEST(Engine, ExactMissingNeverOffersPresentEdges) {
  Engine e(config(40, 5, SamplingModel::ExactMissing));
  FirstEdgeStrategy s;
  for (int t = 0; t < 10'000 && e.graph().edge_count() + 5 <= 780; ++t) {
    const RoundOffer o = e.next_offer();
    std::set<std::uint64_t> keys;
    for (const Edge& c : o.candidates) {
      EXPECT_FALSE(c.is_loop());
      EXPECT_FALSE(e.graph().has_edge(c));
      keys.insert(edge_key(c));
    }
    EXPECT_EQ(keys.size(), o.candidates.size());
    e.step(s);
  }
}

TEST(Engine, RelaxedPairsLookUniform) {
  // Bin ordered pairs by (u mod 10, v mod 10): 100 bins of equal probability.
  Engine e(config(1000, 10, SamplingModel::RelaxedPairs));
  std::vector<double> bins(100, 0);
  const int offers = 100'000;
  for (int t = 0; t < offers; ++t) {
    for (const Edge& c : e.next_offer().candidates) bins[(c.u % 10) * 10 + c.v % 10] += 1;
  }
  const double expected = offers * 10.0 / 100.0;
  const double sigma = std::sqrt(expected * (1 - 0.01));
  for (double b : bins) EXPECT_LT(std::abs(b - expected), 5 * sigma);
}

TEST(Engine, SkipLeavesGraphEmpty) {
  Engine e(config(20, 3, SamplingModel::ExactMissing));
  SkipStrategy s;
  for (int t = 0; t < 50; ++t) e.step(s);
  EXPECT_EQ(e.graph().edge_count(), 0u);
  EXPECT_EQ(e.rounds(), 50u);
}

TEST(Engine, PickZeroAtKOneIsTheRandomGraphProcess) {
  Engine e(config(30, 1, SamplingModel::ExactMissing, 4));
  FirstEdgeStrategy s;
  for (int t = 0; t < 100; ++t) {
    const auto r = e.step(s);
    ASSERT_TRUE(r.added);
    EXPECT_EQ(*r.added, r.offer.candidates[0]);
  }
  EXPECT_EQ(e.graph().edge_count(), 100u);
}

TEST(Engine, SameSeedSameLedger) {
  auto c = config(50, 4, SamplingModel::RelaxedPairs, 99);
  c.record_ledger = true;
  FirstEdgeStrategy s1, s2;
  const RunRecord a = run(c, s1, nullptr, 300);
  const RunRecord b = run(c, s2, nullptr, 300);
  ASSERT_EQ(a.ledger.size(), 300u);
  EXPECT_EQ(to_json(a, true).dump(), to_json(b, true).dump());
}

TEST(Engine, StopPredicateEndsRun) {
  FirstEdgeStrategy s;
  const RunRecord r = run(config(20, 2, SamplingModel::ExactMissing), s,
                          [](const Graph& g) { return g.edge_count() >= 5; }, 1000);
  EXPECT_EQ(r.total_rounds, 5u);
  EXPECT_EQ(r.outcome.kind, OutcomeKind::StopConditionMet);
}

TEST(Engine, ZeroBudgetIsExhausted) {
  FirstEdgeStrategy s;
  const RunRecord r = run(config(20, 2, SamplingModel::ExactMissing), s, nullptr, 0);
  EXPECT_EQ(r.total_rounds, 0u);
  EXPECT_EQ(r.outcome.kind, OutcomeKind::BudgetExhausted);
}

TEST(Engine, RelaxedDiscardsLoopsAndDuplicates) {
  auto c = config(4, 1, SamplingModel::RelaxedPairs, 3);
  c.record_ledger = true;
  FirstEdgeStrategy s;
  const RunRecord r = run(c, s, nullptr, 200);
  std::size_t applied = 0;
  for (const auto& e : r.ledger) applied += e.applied ? 1 : 0;
  EXPECT_EQ(applied, r.final_edges);
  EXPECT_EQ(r.final_edges, 6u);
  EXPECT_EQ(r.discarded_rounds, 200u - 6u);
}

TEST(Engine, PickOutOfRangeThrows) {
  struct Bad : Strategy {
    std::string name() const override { return "bad"; }
    std::vector<std::string> phase_names() const override { return {"x"}; }
    std::size_t phase() const override { return 0; }
    Choice on_offer(const RoundOffer&, const Graph&, Rng&) override { return Choice::pick(9); }
    StrategyStatus status() const override { return {}; }
  } bad;
  Engine e(config(10, 2, SamplingModel::RelaxedPairs));
  EXPECT_THROW(e.step(bad), std::out_of_range);
}

TEST(Serialize, LedgerRoundTrip) {
  auto c = config(30, 3, SamplingModel::RelaxedPairs, 8);
  c.record_ledger = true;
  FirstEdgeStrategy s;
  const RunRecord r = run(c, s, nullptr, 50);
  std::stringstream io;
  write_ledger_jsonl(io, r.ledger);
  const auto back = read_ledger_jsonl(io);
  ASSERT_EQ(back.size(), r.ledger.size());
  for (std::size_t i = 0; i < back.size(); ++i) {
    EXPECT_EQ(back[i].candidates, r.ledger[i].candidates);
    EXPECT_EQ(back[i].choice, r.ledger[i].choice);
    EXPECT_EQ(back[i].applied, r.ledger[i].applied);
  }
}

TEST(Serialize, RecordRoundTripAndTimestampIsolation) {
  auto c = config(30, 3, SamplingModel::ExactMissing, 8);
  FirstEdgeStrategy s;
  const RunRecord r = run(c, s, nullptr, 40);
  const auto j = to_json(r, false, std::string("2020-01-01T00:00:00Z"));
  EXPECT_EQ(j.at("metadata").at("timestamp"), "2020-01-01T00:00:00Z");
  auto stripped = j;
  stripped.erase("metadata");
  auto plain = to_json(r);
  plain.erase("metadata");
  EXPECT_EQ(stripped, plain);
  const RunRecord back = run_record_from_json(j);
  EXPECT_EQ(back.total_rounds, r.total_rounds);
  EXPECT_EQ(back.graph_fingerprint, r.graph_fingerprint);
  EXPECT_EQ(back.model, r.model);
}

TEST(Serialize, CycleReaderRejectsJunk) {
  std::stringstream ok("3 1 2 0\n");
  EXPECT_EQ(read_cycle(ok), (std::vector<Vertex>{3, 1, 2, 0}));
  std::stringstream bad("1 2 x\n");
  EXPECT_THROW(read_cycle(bad), std::runtime_error);
}
