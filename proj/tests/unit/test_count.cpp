#include <gtest/gtest.h>

#include "common.hpp"
#include "fourcycle/count.hpp"
#include "fourcycle/generators.hpp"

using namespace fourcycle;
using testing_support::random_edges;

namespace {

SamplingParams count_params(double T, double c) { return SamplingParams{T, 0.5, c, Mode::count}; }

std::vector<Configuration> brute_realized(const Graph& g, const SampleFamily& fam) {
  std::vector<Configuration> out;
  for (const FourCycle& a : enumerate_four_cycles(g))
    for (const Configuration& c : configurations_of(a, fam.index()))
      if (realized(c, fam)) out.push_back(c);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST(RealizedScan, MatchesBruteForceRealization) {
  int nonempty = 0;
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const auto edges = random_edges(13, 0.45, 400 + seed % 8);
    const Graph g(edges);
    const SampleFamily fam(seed, count_params(60, 0.05));
    SpaceMeter meter;
    const EdgeStream stream(edges, seed, true);
    CorePasses core(fam, stream.node_bound(), meter);
    for (const Edge& e : stream.open_pass(1)) core.pass1(e);
    for (const Edge& e : stream.open_pass(2)) core.pass2(e);
    const auto scan = realized_configuration_scan(core);
    ASSERT_EQ(scan, brute_realized(g, fam)) << "seed " << seed;
    nonempty += !scan.empty();
  }
  EXPECT_GT(nonempty, 5);
}

TEST(RunCounting, ReferenceModeAcceptsExactlyRealizedLlm) {
  const Generated gen = gen_overlap(4, 5);
  const Graph g = gen.graph();
  CountParams p;
  p.sampling = count_params(60, 0.02);
  p.shifts = Shifts::unit();
  ReferenceCache cache(g);
  ExactModel& model = cache.get(p.sampling, Shifts::unit());
  const auto llm = model.enumerate_llm();
  const std::set<Configuration> llm_set(llm.begin(), llm.end());
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    p.seed = seed;
    const CountResult r = run_counting(EdgeStream(gen.edges), p, &cache);
    std::size_t expect = 0;
    for (const Configuration& c : r.realized) expect += llm_set.count(c);
    EXPECT_EQ(r.X, expect);
    EXPECT_DOUBLE_EQ(r.estimate, static_cast<double>(r.X) / (r.p * r.p));
    EXPECT_DOUBLE_EQ(r.p, p.sampling.pair_probability());
  }
}

TEST(RunCounting, SaturatedRunSeesEveryConfiguration) {
  const Generated gen = gen_onion(5);
  CountParams p;
  p.sampling = count_params(10, 100);
  p.shifts = Shifts::unit();
  const CountResult r = run_counting(EdgeStream(gen.edges), p);
  EXPECT_TRUE(r.saturated);
  const Graph g = gen.graph();
  ExactModel model(g, p.sampling, Shifts::unit());
  EXPECT_EQ(r.realized.size(), model.cycles().size() * 6 * model.index().size());
  EXPECT_EQ(r.X, model.enumerate_llm().size());
}

TEST(RunCounting, ShiftsAreDeterministicPerSeed) {
  CountParams p;
  p.sampling = count_params(784, 0.1);
  p.seed = 12;
  const Shifts a = shifts_for_run(p), b = shifts_for_run(p);
  EXPECT_EQ(a, b);
  p.seed = 13;
  EXPECT_FALSE(shifts_for_run(p) == a);
  p.shifts = Shifts::unit();
  EXPECT_EQ(shifts_for_run(p), Shifts::unit());
}

TEST(ReferenceCache, ReusesModels) {
  const Graph g(gen_onion(4).edges);
  ReferenceCache cache(g);
  ExactModel& a = cache.get(count_params(6, 1), Shifts::unit());
  ExactModel& b = cache.get(count_params(6, 1), Shifts::unit());
  ExactModel& c = cache.get(count_params(6, 2), Shifts::unit());
  EXPECT_EQ(&a, &b);
  EXPECT_NE(&a, &c);
}

TEST(Median, OfValues) {
  EXPECT_DOUBLE_EQ(median_of({3, 1, 2}), 2);
  EXPECT_DOUBLE_EQ(median_of({4, 1, 3, 2}), 2.5);
  EXPECT_THROW(median_of({}), std::invalid_argument);
}

TEST(Median, EstimateCollectsNonAbortedRuns) {
  const Generated gen = gen_overlap(4, 4);
  CountParams p;
  p.sampling = count_params(36, 0.05);
  p.median_runs = 7;
  p.shifts = Shifts::unit();
  const MedianResult m = median_estimate(EdgeStream(gen.edges), p);
  EXPECT_EQ(m.estimates.size() + static_cast<std::size_t>(m.aborted), 7u);
  EXPECT_EQ(m.peaks.size(), 7u);
  EXPECT_GT(m.cap, 0u);
  if (m.ok) EXPECT_DOUBLE_EQ(m.estimate, median_of(m.estimates));

  p.space_cap_multiplier = 0;
  const MedianResult u = median_estimate(EdgeStream(gen.edges), p);
  EXPECT_EQ(u.aborted, 0);
  EXPECT_TRUE(u.ok);
  EXPECT_THROW(
      [&] {
        CountParams bad = p;
        bad.median_runs = 0;
        median_estimate(EdgeStream(gen.edges), bad);
      }(),
      std::invalid_argument);
}
