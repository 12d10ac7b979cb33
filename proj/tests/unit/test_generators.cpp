#include <gtest/gtest.h>

#include "common.hpp"
#include "fourcycle/config_model.hpp"
#include "fourcycle/generators.hpp"

using namespace fourcycle;

TEST(Generators, DeclaredCountsMatchExactCount) {
  for (const std::string spec :
       {"onion:k=7", "overlap:a=4,k=6", "overlap:a=3,k=3,copies=3", "heavy:T=25", "nonmonotone:cycles=5,onions=2,width=4",
        "gnp:n=9,p=1", "gnp:n=30,p=0", "tree:n=40,seed=2", "oddcycle:n=21", "pg:q=2", "pg:q=3", "path:m=12"}) {
    const Generated g = generate(spec);
    ASSERT_TRUE(g.declared_T.has_value()) << spec;
    EXPECT_EQ(exact_four_cycle_count(g.graph()), *g.declared_T) << spec;
  }
  const Generated u = disjoint_union(gen_onion(4), gen_overlap(3, 4));
  EXPECT_EQ(exact_four_cycle_count(u.graph()), *u.declared_T);
  EXPECT_EQ(*u.declared_T, 6u + 18u);
}

TEST(Generators, SmallClosedForms) {
  const Generated o = gen_onion(3);
  EXPECT_EQ(*o.declared_T, 3u);
  EXPECT_EQ(o.edges.size(), 6u);
  EXPECT_EQ(*gen_overlap(3, 3).declared_T, 9u);
  const Generated k = generate("gnp:n=6,p=1");
  EXPECT_EQ(k.edges.size(), 15u);
  EXPECT_EQ(*k.declared_T, 45u);
  EXPECT_TRUE(generate("gnp:n=6,p=0").edges.empty());
}

TEST(Generators, HeavyEdgeCarriesEveryCycle) {
  const Generated h = gen_heavy_edge(12);
  const Graph g = h.graph();
  EXPECT_EQ(true_heaviness(g, Substructure{Edge::make(0, 1)}), 12u);
  for (const Edge& e : g.edges())
    if (!(e == Edge::make(0, 1))) EXPECT_EQ(true_heaviness(g, Substructure{e}), 1u);
  std::vector<Edge> rest;
  for (const Edge& e : h.edges)
    if (!(e == Edge::make(0, 1))) rest.push_back(e);
  EXPECT_EQ(exact_four_cycle_count(Graph(rest)), 0u);
}

TEST(Generators, NonmonotoneNodeIsHeavyLightHeavy) {
  const NonmonotoneSpec s;
  const Generated gen = gen_nonmonotone(s);
  const Graph g = gen.graph();
  ExactModel model(g, SamplingParams{s.T_param, s.delta, 1, Mode::count}, Shifts::unit());
  ASSERT_GE(model.index().size(), 3u);
  std::vector<bool> heavy;
  for (std::size_t k = 0; k < 3; ++k) heavy.push_back(model.heavy(LabeledSubstructure::node(0, SampleLabel::S1, k)));
  EXPECT_EQ(heavy, (std::vector<bool>{true, false, true}));

  NonmonotoneSpec flat = s;
  flat.onions = 0;
  const Graph f = gen_nonmonotone(flat).graph();
  ExactModel fm(f, SamplingParams{s.T_param, s.delta, 1, Mode::count}, Shifts::unit());
  bool seen_light = false, monotone = true;
  for (std::size_t k = 0; k < fm.index().size(); ++k) {
    const bool h = fm.heavy(LabeledSubstructure::node(0, SampleLabel::S1, k));
    if (!h) seen_light = true;
    else if (seen_light) monotone = false;
  }
  EXPECT_TRUE(monotone);
}

TEST(Generators, RandomFamiliesAreReproducible) {
  EXPECT_EQ(gen_gnp(40, 0.2, 5).edges, gen_gnp(40, 0.2, 5).edges);
  EXPECT_NE(gen_gnp(40, 0.2, 5).edges, gen_gnp(40, 0.2, 6).edges);
  EXPECT_EQ(gen_random_tree(50, 3).edges, gen_random_tree(50, 3).edges);
  EXPECT_EQ(gen_random_tree(50, 3).edges.size(), 49u);
}

TEST(Generators, ProjectivePlaneShape) {
  for (int q : {2, 3, 5}) {
    const Graph g = gen_projective_incidence(q).graph();
    const std::size_t pts = static_cast<std::size_t>(q * q + q + 1);
    EXPECT_EQ(g.num_nodes(), 2 * pts);
    EXPECT_EQ(g.num_edges(), pts * static_cast<std::size_t>(q + 1));
  }
  EXPECT_THROW(gen_projective_incidence(4), InputError);
}

TEST(GeneratorSpec, RejectsBadInput) {
  EXPECT_THROW(generate("onion:k=5,extra=1"), InputError);
  EXPECT_THROW(generate("mystery:n=3"), InputError);
  EXPECT_THROW(generate("overlap:a=3"), InputError);
  EXPECT_THROW(generate("onion:k=abc"), InputError);
  EXPECT_THROW(generate("oddcycle:n=8"), InputError);
  EXPECT_THROW(generate("file:/nonexistent/edges.txt"), InputError);
}
