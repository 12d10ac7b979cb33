// Acceptance checks 1-13. Prints one PASS/FAIL line per criterion; exits 1 if any fails.
// Optional arguments select a subset, e.g. `acceptance 4 6`.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iomanip>
#include <iostream>
#include <map>
#include <memory>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "common.hpp"
#include "fourcycle/baseline.hpp"
#include "fourcycle/count.hpp"
#include "fourcycle/detect.hpp"
#include "fourcycle/generators.hpp"
#include "fourcycle/harness.hpp"
#include "fourcycle/oracles.hpp"
#include "fourcycle/random.hpp"

using namespace fourcycle;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

template <typename... Args>
std::string fmt(const char* f, Args... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

Count T_of(const Generated& g) { return g.declared_T ? *g.declared_T : exact_four_cycle_count(g.graph()); }

SamplingParams desk(Mode mode, double T) {
  ExperimentConfig cfg;
  cfg.mode = mode;
  cfg.T = T;
  return resolve_params(cfg);
}

// Desk count parameters with the largest core probability pinned at `target`.
SamplingParams count_below_one(double T, double target) {
  DeskTuning t;
  t.target = target;
  t.anchor = DeskAnchor::max_probability;
  return SamplingParams{std::max(1.0, T), t.delta, desk_constant(std::max(1.0, T), Mode::count, t), Mode::count};
}

bool all_below_one(const SamplingParams& p) {
  const IndexSet I = IndexSet::build(p.T);
  for (double k : I.values()) {
    const TierProbabilities t = probabilities(k, p);
    if (t.p1_pre >= 1 || t.p2_pre >= 1) return false;
  }
  return true;
}

// Graphs shared by criteria 7 and 8.
std::vector<Generated> model_corpus(int random_graphs) {
  std::vector<Generated> out;
  std::mt19937_64 rng(7007);
  for (int i = 0; i < random_graphs; ++i) {
    const int n = std::uniform_int_distribution<int>(6, 12)(rng);
    const double p = std::uniform_real_distribution<double>(0.3, 0.7)(rng);
    Generated g;
    g.name = "random#" + std::to_string(i);
    g.edges = testing_support::random_edges(n, p, 7100 + static_cast<std::uint64_t>(i));
    out.push_back(std::move(g));
  }
  for (const char* spec : {"onion:k=6", "overlap:a=4,k=5", "overlap:a=3,k=3,copies=2", "heavy:T=12",
                           "nonmonotone:cycles=30,onions=2,width=10", "gnp:n=14,p=0.5,seed=3", "tree:n=20,seed=1",
                           "oddcycle:n=9", "pg:q=2"})
    out.push_back(generate(spec));
  return out;
}

// 1. Exact counting against brute force.
Outcome criterion1() {
  const auto start = std::chrono::steady_clock::now();
  int checked = 0, mismatches = 0;
  std::mt19937_64 rng(1001);
  for (int i = 0; i < 200; ++i) {
    const int n = std::uniform_int_distribution<int>(4, 14)(rng);
    const double p = std::uniform_real_distribution<double>(0.1, 0.9)(rng);
    const Graph g(testing_support::random_edges(n, p, 1100 + static_cast<std::uint64_t>(i)));
    mismatches += exact_four_cycle_count(g) != testing_support::brute_count(g);
    ++checked;
  }
  std::vector<Generated> fams;
  for (int k = 2; k <= 50; ++k) fams.push_back(gen_onion(k));
  for (int a = 2; a <= 12; ++a)
    for (int k = 2; k <= 12; ++k) fams.push_back(gen_overlap(a, k));
  for (Count t : {1, 2, 3, 10, 50, 100, 250, 500}) fams.push_back(gen_heavy_edge(t));
  int brute_checked = 0;
  for (const Generated& gen : fams) {
    const Graph g = gen.graph();
    const Count exact = exact_four_cycle_count(g);
    bool ok = exact == *gen.declared_T && enumerate_four_cycles(g).size() == exact;
    if (g.num_nodes() <= 40) {
      ok = ok && testing_support::brute_count(g) == exact;
      ++brute_checked;
    }
    mismatches += !ok;
    ++checked;
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return {mismatches == 0 && secs < 30,
          fmt("%d graphs (%d brute-forced generator outputs), %d mismatches, %.1f s", checked, brute_checked,
              mismatches, secs)};
}

// 2. Closed forms for K_{2,k} and K_{a,b}.
Outcome criterion2() {
  auto c2 = [](Count x) { return x * (x - 1) / 2; };
  int checked = 0, bad = 0;
  for (int k = 2; k <= 50; ++k, ++checked) bad += exact_four_cycle_count(gen_onion(k).graph()) != c2(k);
  for (int a = 2; a <= 12; ++a)
    for (int b = 2; b <= 12; ++b, ++checked)
      bad += exact_four_cycle_count(gen_overlap(a, b).graph()) != c2(a) * c2(b);
  return {bad == 0, fmt("%d closed forms, %d mismatches", checked, bad)};
}

// 3. No false positives on four-cycle-free inputs.
Outcome criterion3() {
  std::vector<Generated> graphs;
  for (int i = 0; i < 34; ++i) graphs.push_back(gen_random_tree(20 + 5 * i, 300 + static_cast<std::uint64_t>(i)));
  for (int i = 0; i < 33; ++i) graphs.push_back(gen_odd_cycle(5 + 2 * i));
  const int qs[] = {2, 3, 5, 7, 11};
  for (int i = 0; i < 33; ++i) {
    // Edge subsets of an incidence graph stay four-cycle-free.
    Generated g = gen_projective_incidence(qs[i % 5]);
    std::mt19937_64 rng(3300 + static_cast<std::uint64_t>(i));
    std::bernoulli_distribution drop(0.04 * (i / 5));
    std::vector<Edge> kept;
    for (const Edge& e : g.edges)
      if (!drop(rng)) kept.push_back(e);
    g.edges = std::move(kept);
    graphs.push_back(std::move(g));
  }
  int false_pos = 0, nondet = 0, runs = 0, nonzero_T = 0;
  for (std::size_t gi = 0; gi < graphs.size(); ++gi) {
    const Generated& gen = graphs[gi];
    nonzero_T += exact_four_cycle_count(gen.graph()) != 0;
    const EdgeStream stream(gen.edges);
    for (std::uint64_t s = 0; s < 20; ++s) {
      DetectParams p;
      p.sampling = desk(Mode::detect, 16);
      p.seed = derive_seed(3000, gi, s);
      p.amplification = default_amplification(gen.graph().num_nodes());
      p.calibration_runs = 3;
      const AmplifiedResult r = amplified_detection(stream, p);
      false_pos += r.found;
      ++runs;
      if (s == 0) {
        const AmplifiedResult again = amplified_detection(stream, p);
        nondet += again.found != r.found || again.peaks != r.peaks;
      }
    }
  }
  return {false_pos == 0 && nondet == 0 && nonzero_T == 0,
          fmt("%zu graphs x 20 seeds = %d amplified runs, %d false positives, %d nondeterministic repeats", graphs.size(),
              runs, false_pos, nondet)};
}

// 4. Detection power with all probabilities below one, and at saturation.
Outcome criterion4() {
  bool pass = true;
  std::ostringstream os;
  const char* specs[] = {"onion:k=64", "overlap:a=16,k=16", "heavy:T=1000"};
  for (int f = 0; f < 3; ++f) {
    const Generated gen = generate(specs[f]);
    const EdgeStream stream(gen.edges);
    DetectParams p;
    p.sampling = desk(Mode::detect, static_cast<double>(T_of(gen)));
    p.amplification = default_amplification(gen.graph().num_nodes());
    const bool below = all_below_one(p.sampling);
    p.seed = derive_seed(4000, f);
    p.reference_space = calibrate_space(stream, p, 5);
    int found = 0;
    for (std::uint64_t t = 0; t < 200; ++t) {
      p.seed = derive_seed(4100, f, t);
      found += amplified_detection(stream, p).found;
    }
    DetectParams sat;
    sat.sampling = SamplingParams{static_cast<double>(T_of(gen)), 0.5, 1e6, Mode::detect};
    int sat_found = 0;
    for (std::uint64_t t = 0; t < 200; ++t) {
      sat.seed = derive_seed(4200, f, t);
      const DetectResult r = run_detection(stream, sat);
      sat_found += r.found && r.saturated;
    }
    pass = pass && below && found >= 195 && sat_found == 200;
    os << specs[f] << ": " << found << "/200 with " << p.amplification << " runs (c=" << p.sampling.c
       << (below ? ", p<1" : ", SATURATED") << "), saturated single run " << sat_found << "/200; ";
  }
  return {pass, os.str()};
}

// 5. Unbiasedness of X with the exact reference oracle.
Outcome criterion5() {
  bool pass = true;
  std::ostringstream os;
  const char* specs[] = {"overlap:a=4,k=6", "onion:k=12", "heavy:T=30", "gnp:n=14,p=0.5,seed=1",
                         "nonmonotone:cycles=6,onions=1,width=6"};
  const int seeds = 10000;
  for (int i = 0; i < 5; ++i) {
    const Generated gen = generate(specs[i]);
    const Graph g = gen.graph();
    const SamplingParams sp = count_below_one(static_cast<double>(T_of(gen)), 0.95);
    std::mt19937_64 rng(5000 + static_cast<std::uint64_t>(i));
    const Shifts shifts = draw_oracle_shifts(rng, oracle_budget(sp, OracleTuning{}.node_mult));
    ReferenceCache cache(g);
    const double C = static_cast<double>(cache.get(sp, shifts).enumerate_llm().size());
    const double p = sp.pair_probability();
    CountParams cp;
    cp.sampling = sp;
    cp.shifts = shifts;
    cp.oracle = OracleMode::reference;
    const EdgeStream stream(gen.edges);
    std::vector<double> xs;
    xs.reserve(seeds);
    for (int s = 0; s < seeds; ++s) {
      cp.seed = derive_seed(5100, static_cast<std::uint64_t>(i), static_cast<std::uint64_t>(s));
      xs.push_back(static_cast<double>(run_counting(stream, cp, &cache).X));
    }
    const MeanStd ms = mean_std(xs);
    const double se = ms.stddev / std::sqrt(static_cast<double>(seeds));
    const double expect = C * p * p;
    const bool ok = all_below_one(sp) && C > 0 && std::abs(ms.mean - expect) <= 3 * se;
    pass = pass && ok;
    os << specs[i] << ": |C|=" << C << " mean X=" << ms.mean << " expected=" << expect << " SE=" << se
       << (ok ? "" : " (out)") << "; ";
  }
  return {pass, os.str()};
}

// 6. Median estimator end to end.
Outcome criterion6() {
  bool pass = true;
  std::ostringstream os;
  for (int copies : {1, 4, 16}) {
    const Generated gen = gen_overlap(8, 8, copies);
    const Graph g = gen.graph();
    const double T = static_cast<double>(*gen.declared_T);
    ReferenceCache cache(g);
    const EdgeStream stream(gen.edges);
    int good = 0;
    double worst = 0;
    for (std::uint64_t rep = 0; rep < 20; ++rep) {
      CountParams cp;
      cp.sampling = desk(Mode::count, T);
      cp.median_runs = 25;
      cp.oracle = OracleMode::reference;
      cp.seed = derive_seed(6000, static_cast<std::uint64_t>(copies), rep);
      const MedianResult m = median_estimate(stream, cp, &cache);
      const double err = m.ok ? std::abs(m.estimate - T) / T : 1.0;
      good += err <= 0.15;
      worst = std::max(worst, err);
    }
    pass = pass && good >= 18;
    os << "T=" << T << ": " << good << "/20 within 0.15 (worst " << worst << "); ";
  }
  return {pass, os.str()};
}

// Smallest grid index whose shift value is at least b.
std::uint64_t grid_index_at_least(double grid, double b) {
  std::uint64_t i = static_cast<std::uint64_t>(std::max(0.0, std::floor(std::log(b) / std::log1p(1 / (200 * grid)))));
  while (i > 0 && shift_value(grid, i - 1) >= b) --i;
  while (shift_value(grid, i) < b) ++i;
  return i;
}

// One s1 grid point per interval between wedge breakpoints t/theta, so every reachable wedge lightness
// pattern is visited. Refined node and edge counts only grow with s2, so s2 takes its endpoints and midpoint.
std::pair<std::vector<std::uint64_t>, std::vector<std::uint64_t>> shift_representatives(ExactModel& unit, double g1,
                                                                                        double g2) {
  std::set<std::uint64_t> s1{0};
  const std::uint64_t n1 = shift_grid_size(g1), n2 = shift_grid_size(g2);
  for (const FourCycle& a : unit.cycles())
    for (const Configuration& c : configurations_of(a, unit.index()))
      for (const LabeledSubstructure& s : substructures_of(c)) {
        if (s.kind != SubKind::wedge) continue;
        const double b = static_cast<double>(unit.heaviness(s.substructure())) / unit.threshold(s);
        if (b < 1 || b >= 2) continue;
        const std::uint64_t i = grid_index_at_least(g1, b);
        if (i < n1) s1.insert(i);
        if (i + 1 < n1) s1.insert(i + 1);
      }
  return {{s1.begin(), s1.end()}, {0, (n2 - 1) / 2, n2 - 1}};
}

// 7. Refined heaviness never exceeds true heaviness.
Outcome criterion7() {
  const auto corpus = model_corpus(100);
  std::uint64_t checked = 0, violations = 0, models = 0;
  std::string first;
  for (const Generated& gen : corpus) {
    const Graph g = gen.graph();
    const Count T = exact_four_cycle_count(g);
    if (T == 0) continue;
    const SamplingParams sp = desk(Mode::count, static_cast<double>(T));
    const OracleBudget b = oracle_budget(sp, OracleTuning{}.node_mult);
    const double g1 = std::min(b.Lpp, 1e12), g2 = std::min(b.Lp, 1e12), g3 = std::min(b.L, 1e12);
    ExactModel unit(g, sp, Shifts::unit());
    const auto [s1, s2] = shift_representatives(unit, g1, g2);
    // Refinement never reads s3.
    for (std::uint64_t i1 : s1)
      for (std::uint64_t i2 : s2) {
        ExactModel model(g, sp, Shifts::at(g1, i1, g2, i2, g3, 0));
        ++models;
        for (const FourCycle& a : model.cycles())
          for (const Configuration& c : configurations_of(a, model.index()))
            for (const LabeledSubstructure& s : substructures_of(c)) {
              if (s.kind == SubKind::pair) continue;
              ++checked;
              if (model.refined(s) > model.heaviness(s.substructure())) {
                if (!violations++) first = gen.name + " " + model.dump(c);
              }
            }
      }
  }
  return {violations == 0, fmt("%llu substructure checks over %llu (graph, shift) models, %llu violations",
                               static_cast<unsigned long long>(checked), static_cast<unsigned long long>(models),
                               static_cast<unsigned long long>(violations)) +
                               (first.empty() ? "" : "; first: " + first.substr(0, 300))};
}

// 8. LLM existence, multiplicity bound and the non-monotone pattern.
Outcome criterion8() {
  const auto corpus = model_corpus(60);
  int graphs = 0, missing = 0, over_bound = 0;
  Count with_llm = 0, multiple = 0;
  for (const Generated& gen : corpus) {
    const Graph g = gen.graph();
    const Count T = exact_four_cycle_count(g);
    if (T == 0) continue;
    const SamplingParams sp = desk(Mode::count, static_cast<double>(T));
    std::mt19937_64 rng(8000 + static_cast<std::uint64_t>(graphs));
    for (const Shifts& s : {Shifts::unit(), draw_oracle_shifts(rng, oracle_budget(sp, OracleTuning{}.node_mult))}) {
      ExactModel model(g, sp, s);
      const MultiplicityReport r = llm_multiplicity(model);
      missing += r.light_without_llm != 0;
      over_bound += static_cast<double>(r.cycles_with_multiple) > r.bound;
      with_llm += r.cycles_with_llm;
      multiple += r.cycles_with_multiple;
    }
    ++graphs;
  }
  const NonmonotoneSpec ns;
  const Graph ng = gen_nonmonotone(ns).graph();
  ExactModel nm(ng, SamplingParams{ns.T_param, ns.delta, 1, Mode::count}, Shifts::unit());
  std::string pattern;
  for (std::size_t k = 0; k < nm.index().size(); ++k)
    pattern += nm.heavy(LabeledSubstructure::node(0, SampleLabel::S1, k)) ? 'H' : 'L';
  const bool nonmono = pattern.find("HL") != std::string::npos &&
                       pattern.find('H', pattern.find("HL") + 1) != std::string::npos;
  return {missing == 0 && over_bound == 0 && nonmono,
          fmt("%d graphs x 2 shift vectors: %d with a light cycle lacking an LLM configuration, %d over the "
              "multiplicity bound (%llu of %llu LLM cycles have several); non-monotone node pattern %s",
              graphs, missing, over_bound, static_cast<unsigned long long>(multiple),
              static_cast<unsigned long long>(with_llm), pattern.c_str())};
}

// 9. Threshold ordering and the expected-count bound.
Outcome criterion9() {
  int checks = 0, bad_bound = 0, bad_order = 0;
  const FourCycle a = FourCycle::canonical(0, 1, 2, 3);
  for (Mode m : {Mode::detect, Mode::count})
    for (double T : {16.0, 784.0, 12544.0, 1e6, 1073741824.0})
      for (double d : {0.5, 0.25, default_delta(m, T, 0.5)}) {
        const SamplingParams p{T, d, 1, m};
        const IndexSet I = IndexSet::build(T);
        for (std::size_t k = 0; k < I.size(); ++k) {
          const double kv = I.value(k);
          auto ge = [](double hi, double lo) { return hi >= lo * (1 - 1e-12); };
          bad_order += !ge(threshold(SubKind::node, 1, 0, kv, p), threshold(SubKind::node, 0, 1, kv, p));
          bad_order += !ge(threshold(SubKind::edge, 2, 0, kv, p), threshold(SubKind::edge, 1, 1, kv, p));
          bad_order += !ge(threshold(SubKind::edge, 1, 1, kv, p), threshold(SubKind::edge, 0, 2, kv, p));
          bad_order += !ge(threshold(SubKind::wedge, 2, 1, kv, p), threshold(SubKind::wedge, 1, 2, kv, p));
          for (const Configuration& c : configurations_of(a, I)) {
            if (c.kappa != k) continue;
            for (const LabeledSubstructure& s : substructures_of(c)) {
              if (s.kind == SubKind::pair) continue;
              ++checks;
              const double bound = T * substructure_probability(s, p, I).pre / p.c;
              bad_bound += threshold(s, p, I) > bound * (1 + 1e-12);
            }
          }
        }
      }
  return {bad_bound == 0 && bad_order == 0,
          fmt("%d bound checks (%d violations), %d ordering violations", checks, bad_bound, bad_order)};
}

// Streaming passes with oracles attached, as run_counting does, keeping the oracle object for inspection.
struct OraclePipeline {
  SampleFamily fam;
  SpaceMeter meter;
  std::unique_ptr<CorePasses> core;
  std::unique_ptr<StreamingOracles> orc;

  OraclePipeline(const std::vector<Edge>& edges, const SamplingParams& sp, std::uint64_t seed,
                 const OracleTuning& tuning, const Shifts& shifts)
      : fam(seed, sp) {
    configure_oracle_samples(fam, tuning);
    const EdgeStream stream(edges);
    core = std::make_unique<CorePasses>(fam, stream.node_bound(), meter);
    orc = std::make_unique<StreamingOracles>(fam, *core, stream.node_bound(), meter, shifts,
                                             oracle_budget(sp, tuning.node_mult));
    for (const Edge& e : stream.open_pass(1)) {
      core->pass1(e);
      orc->pass1(e);
    }
    for (const Edge& e : stream.open_pass(2)) {
      core->pass2(e);
      orc->pass2(e);
    }
    const auto realized = realized_configuration_scan(*core);
    orc->plan(realized);
    for (const Edge& e : stream.open_pass(3)) orc->pass3(e);
    for (const Configuration& c : realized) is_llm_with(c, *orc, sp, fam.index());
  }
};

// 10. Oracle agreement away from the threshold, and the shift-grid audit.
Outcome criterion10() {
  const double eps = 0.5;
  const char* specs[] = {"overlap:a=6,k=10", "heavy:T=60", "nonmonotone:cycles=20,onions=2,width=8"};
  const char* kinds[] = {"wedge", "edge", "node"};
  int runs_with[3] = {0, 0, 0}, runs_ok[3] = {0, 0, 0};
  std::uint64_t compared[3] = {0, 0, 0}, disagreed[3] = {0, 0, 0};
  int audits = 0, audits_ok = 0;
  const OracleTuning tuning;
  for (int i = 0; i < 3; ++i) {
    const Generated gen = generate(specs[i]);
    const Graph g = gen.graph();
    const SamplingParams sp = count_below_one(static_cast<double>(T_of(gen)), 0.9);
    const OracleBudget budget = oracle_budget(sp, tuning.node_mult);
    for (std::uint64_t s = 0; s < 200; ++s) {
      std::mt19937_64 rng(derive_seed(10000, static_cast<std::uint64_t>(i), s));
      const Shifts shifts = draw_oracle_shifts(rng, budget);
      OraclePipeline pl(gen.edges, sp, derive_seed(10100, static_cast<std::uint64_t>(i), s), tuning, shifts);
      ExactModel model(g, sp, shifts);
      int n_cmp[3] = {0, 0, 0}, n_bad[3] = {0, 0, 0};
      for (const LabeledSubstructure& ls : pl.orc->queried()) {
        const int kind = ls.kind == SubKind::wedge ? 0 : ls.kind == SubKind::edge ? 1 : ls.kind == SubKind::node ? 2 : -1;
        if (kind < 0) continue;
        const double st = model.shifted_threshold(ls);
        if (std::abs(static_cast<double>(model.refined(ls)) - st) <= eps * st) continue;
        ++n_cmp[kind];
        n_bad[kind] += pl.orc->heavy(ls) != model.heavy(ls);
      }
      for (int k = 0; k < 3; ++k) {
        compared[k] += static_cast<std::uint64_t>(n_cmp[k]);
        disagreed[k] += static_cast<std::uint64_t>(n_bad[k]);
        if (n_cmp[k] == 0) continue;
        ++runs_with[k];
        runs_ok[k] += n_bad[k] == 0;
      }
      if (s < 5) {
        ++audits;
        audits_ok += shift_margin_audit(model, MarginWidths::from(budget)).disjoint();
      }
    }
  }
  bool pass = audits_ok == audits;
  std::ostringstream os;
  for (int k = 0; k < 3; ++k) {
    const double rate = runs_with[k] ? static_cast<double>(runs_ok[k]) / runs_with[k] : 0;
    pass = pass && runs_with[k] > 0 && rate >= 0.95;
    os << kinds[k] << " " << runs_ok[k] << "/" << runs_with[k] << " runs agree (" << disagreed[k] << " of "
       << compared[k] << " queries differ); ";
  }
  os << "margin audit disjoint " << audits_ok << "/" << audits;
  return {pass, os.str()};
}

// K_{a,a} padded with a path so that every instance has about `m` edges.
Generated padded_biclique(int a, int m) {
  const Generated k = gen_overlap(a, a);
  return disjoint_union(k, gen_path(std::max(0, m - a * a)));
}

// 11. Space scaling at fixed m.
Outcome criterion11() {
  std::vector<double> Ts, peaks;
  std::ostringstream os;
  const int trials = 30;
  for (int a : {8, 11, 16, 23, 32, 45, 64}) {
    const Generated gen = padded_biclique(a, 8192);
    const double T = static_cast<double>(*gen.declared_T);
    const EdgeStream stream(gen.edges);
    DetectParams p;
    p.sampling = SamplingParams{T, 0.5, 0.15, Mode::detect};
    double sum = 0;
    for (int t = 0; t < trials; ++t) {
      p.seed = derive_seed(11000, static_cast<std::uint64_t>(a), static_cast<std::uint64_t>(t));
      sum += static_cast<double>(run_detection(stream, p).meter.peak());
    }
    Ts.push_back(T);
    peaks.push_back(sum / trials);
    os << "a=" << a << " T=" << T << " peak=" << sum / trials << "; ";
  }
  const Regression r = loglog_regression(Ts, peaks);
  os << "slope " << r.slope << " (95% CI " << r.ci_low << ", " << r.ci_high << ")";
  return {std::abs(r.slope + 0.5) <= 0.15, os.str()};
}

// 12. Stream-order invariance.
Outcome criterion12() {
  std::vector<Generated> graphs;
  for (int i = 0; i < 12; ++i) graphs.push_back(gen_gnp(30 + 2 * i, 0.2, 1200 + static_cast<std::uint64_t>(i)));
  for (const char* spec : {"onion:k=20", "overlap:a=6,k=7", "overlap:a=4,k=4,copies=3", "heavy:T=50",
                           "nonmonotone:cycles=30,onions=2,width=10", "tree:n=60,seed=5", "pg:q=5", "oddcycle:n=41"})
    graphs.push_back(generate(spec));
  int differing = 0, comparisons = 0;
  for (std::size_t gi = 0; gi < graphs.size(); ++gi) {
    const Generated& gen = graphs[gi];
    const Count T = T_of(gen);
    DetectParams p;
    p.sampling = desk(Mode::detect, T ? static_cast<double>(T) : 16.0);
    p.seed = 1200 + gi;
    const DetectResult base = run_detection(EdgeStream(gen.edges), p);
    for (std::uint64_t perm = 1; perm <= 10; ++perm) {
      std::vector<Edge> shuffled = gen.edges;
      std::mt19937_64 rng(derive_seed(1300, gi, perm));
      std::shuffle(shuffled.begin(), shuffled.end(), rng);
      const DetectResult r = run_detection(EdgeStream(shuffled, perm, true), p);
      ++comparisons;
      differing += r.found != base.found || r.collected != base.collected || r.witness != base.witness;
    }
  }
  return {differing == 0,
          fmt("%zu graphs x 10 per-pass permutations: %d of %d runs differ", graphs.size(), differing, comparisons)};
}

// 13. Baseline unbiasedness and space ordering.
Outcome criterion13() {
  const Generated k88 = gen_overlap(8, 8);
  const EdgeStream stream(k88.edges);
  const int seeds = 10000;
  std::vector<double> est;
  est.reserve(seeds);
  for (int s = 0; s < seeds; ++s)
    est.push_back(edge_sampling_estimate(stream, 784, derive_seed(13000, static_cast<std::uint64_t>(s))).estimate);
  const MeanStd ms = mean_std(est);
  const double se = ms.stddev / std::sqrt(static_cast<double>(seeds));
  bool pass = std::abs(ms.mean - 784) <= 3 * se;
  std::ostringstream os;
  os << "K_{8,8} mean " << ms.mean << " (SE " << se << "); ";
  // Detection at the fixed constants of criterion 11; the T-adaptive desk constant is reported alongside.
  for (int a : {32, 45, 64}) {
    const Generated gen = padded_biclique(a, 8192);
    const double T = static_cast<double>(*gen.declared_T);
    const EdgeStream s(gen.edges);
    double base = 0, fixed = 0, adaptive = 0;
    const int trials = 20;
    for (int t = 0; t < trials; ++t) {
      const std::uint64_t seed = derive_seed(13100, static_cast<std::uint64_t>(a), static_cast<std::uint64_t>(t));
      base += static_cast<double>(edge_sampling_estimate(s, T, seed).meter.peak());
      DetectParams p;
      p.seed = seed;
      p.sampling = SamplingParams{T, 0.5, 0.15, Mode::detect};
      fixed += static_cast<double>(run_detection(s, p).meter.peak());
      p.sampling = desk(Mode::detect, T);
      adaptive += static_cast<double>(run_detection(s, p).meter.peak());
    }
    pass = pass && base > fixed;
    os << "a=" << a << " T=" << T << " baseline peak " << base / trials << " vs detection " << fixed / trials
       << " (adaptive c: " << adaptive / trials << "); ";
  }
  return {pass, os.str()};
}

}  // namespace

int main(int argc, char** argv) {
  const std::vector<std::function<Outcome()>> all{criterion1, criterion2, criterion3,  criterion4,  criterion5,
                                                  criterion6, criterion7, criterion8,  criterion9,  criterion10,
                                                  criterion11, criterion12, criterion13};
  std::set<int> pick;
  for (int i = 1; i < argc; ++i) pick.insert(std::atoi(argv[i]));
  int failed = 0;
  for (std::size_t i = 0; i < all.size(); ++i) {
    const int id = static_cast<int>(i) + 1;
    if (!pick.empty() && !pick.count(id)) continue;
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = all[i]();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    failed += !o.pass;
    std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << id << ": " << o.detail << " [" << std::fixed
              << std::setprecision(1) << secs << " s]" << std::defaultfloat << std::setprecision(6) << std::endl;
  }
  return failed ? 1 : 0;
}
