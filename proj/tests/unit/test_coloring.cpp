#include <gtest/gtest.h>

#include "brute.hpp"
#include "filterless/coloring.hpp"
#include "filterless/error.hpp"

using namespace filterless;

namespace {

std::vector<int> of_class(const RootedTree& view, const Instance& inst,
                          PathClass cls) {
  std::vector<int> ids;
  for (int i = 0; i < inst.num_requests(); ++i)
    if (classify(view, inst.requests()[i]).cls == cls) ids.push_back(i);
  return ids;
}

int induced_omega(const Instance& inst, const std::vector<int>& ids) {
  return brute::omega(brute::interference(inst.subset(ids)));
}

bool proper_on(const brute::Graph& g, const std::vector<int>& ids,
               const Coloring& c) {
  if (c.colour.size() != ids.size()) return false;
  for (size_t a = 0; a < ids.size(); ++a)
    for (size_t b = a + 1; b < ids.size(); ++b)
      if (g.adj(ids[a], ids[b]) && c.colour[a] == c.colour[b]) return false;
  return true;
}

// Root 0 star with the given leaf count.
Tree star(int leaves) {
  std::vector<Edge> edges;
  for (int v = 1; v <= leaves; ++v) edges.emplace_back(0, v);
  return Tree::build(leaves + 1, edges);
}

}  // namespace

TEST(ColorClass, Examples) {
  Instance conv(star(3), {{1, 0}, {2, 0}, {3, 0}});
  RootedTree view(conv.tree(), 0);
  Coloring c = color_converging(view, conv.requests(), {0, 1, 2});
  EXPECT_EQ(c.colour, (std::vector<int>{1, 1, 1}));

  Instance dup(star(2), {{1, 0}, {1, 0}, {1, 0}});
  c = color_converging(view, dup.requests(), {0, 1, 2});
  EXPECT_EQ(c.num_colours, 3);

  Instance div(star(3), {{0, 1}, {0, 2}, {0, 3}, {0, 3}});
  c = color_diverging(view, div.requests(), {0, 1, 2, 3});
  EXPECT_EQ(c.num_colours, 2);

  Instance uni(star(3), {{1, 2}, {2, 1}});
  c = color_unimodal(view, uni.requests(), {0, 1});
  EXPECT_EQ(c.num_colours, 1);
  Instance uni_dup(star(3), {{1, 2}, {1, 2}, {1, 3}, {1, 3}});
  c = color_unimodal(view, uni_dup.requests(), {0, 1, 2, 3});
  EXPECT_EQ(c.num_colours, 4);

  EXPECT_THROW(color_converging(view, div.requests(), {0}), Error);
  EXPECT_THROW(color_diverging(view, conv.requests(), {0}), Error);
  EXPECT_THROW(color_unimodal(view, conv.requests(), {0}), Error);
}

TEST(ColorClass, OptimalOnRandom) {
  for (std::uint64_t seed = 1; seed <= 200; ++seed) {
    Instance inst = brute::random_instance(seed, 20, 14);
    brute::Graph g = brute::interference(inst);
    for (Vertex z : {0, inst.num_vertices() - 1}) {
      RootedTree view(inst.tree(), z);
      auto conv = of_class(view, inst, PathClass::kConverging);
      auto div = of_class(view, inst, PathClass::kDiverging);
      auto uni = of_class(view, inst, PathClass::kUnimodal);
      Coloring a = color_converging(view, inst.requests(), conv);
      Coloring b = color_diverging(view, inst.requests(), div);
      Coloring u = color_unimodal(view, inst.requests(), uni);
      ASSERT_TRUE(proper_on(g, conv, a) && proper_on(g, div, b) &&
                  proper_on(g, uni, u))
          << seed;
      ASSERT_EQ(a.num_colours, induced_omega(inst, conv)) << seed;
      ASSERT_EQ(b.num_colours, induced_omega(inst, div)) << seed;
      ASSERT_EQ(u.num_colours, induced_omega(inst, uni)) << seed;
    }
  }
}

TEST(Color2Approx, Fig1) {
  Instance fig = generate("fig1", {}, 0);
  Coloring c = color_2approx(fig, 0);
  EXPECT_EQ(c.num_colours, 3);
  EXPECT_TRUE(brute::proper(brute::interference(fig), c));
  EXPECT_EQ(c.tags, (std::vector<ColourType>{ColourType::kMainlyConverging,
                                             ColourType::kMainlyDiverging,
                                             ColourType::kMainlyDiverging}));
}

TEST(Color2Approx, RandomBound) {
  for (std::uint64_t seed = 1; seed <= 200; ++seed) {
    Instance inst = brute::random_instance(seed, 20, 12);
    brute::Graph g = brute::interference(inst);
    int chi = brute::chi(g);
    RootedTree view(inst.tree(), 0);
    int sum = induced_omega(inst, of_class(view, inst, PathClass::kConverging)) +
              induced_omega(inst, of_class(view, inst, PathClass::kDiverging)) +
              induced_omega(inst, of_class(view, inst, PathClass::kUnimodal));
    Coloring c = color_2approx(inst, 0);
    ASSERT_TRUE(brute::proper(g, c)) << seed;
    ASSERT_EQ(c.num_colours, sum) << seed;
    ASSERT_LE(sum, 2 * chi) << seed;
    ASSERT_LE(chi, sum) << seed;
  }
}

TEST(Color2Approx, AllConverging) {
  Instance inst(star(4), {{1, 0}, {2, 0}, {1, 0}, {3, 0}});
  EXPECT_EQ(color_2approx(inst, 0).num_colours,
            brute::chi(brute::interference(inst)));
}

TEST(ChiBound, Certificate) {
  Instance single(star(2), {{1, 2}});
  RootBound rb = chi_bound_certificate(single);
  EXPECT_LE(rb.bound, rb.omega);

  EXPECT_THROW(chi_bound_root(generate("fig1", {}, 0)), Error);
  Instance nice = subdivide_nice(generate("fig1", {}, 0)).first;
  rb = chi_bound_certificate(nice);
  EXPECT_EQ(rb.omega, 2);
  EXPECT_LE(straight_clique_sum(nice, rb.root), 2);
}

TEST(ChiBound, RandomNice) {
  for (std::uint64_t seed = 1; seed <= 300; ++seed) {
    Instance nice = subdivide_nice(brute::random_instance(seed, 12, 12)).first;
    RootBound rb = chi_bound_certificate(nice);
    int omega = brute::omega(brute::interference(nice));
    RootedTree view(nice.tree(), rb.root);
    int sum = induced_omega(nice, of_class(view, nice, PathClass::kConverging)) +
              induced_omega(nice, of_class(view, nice, PathClass::kDiverging));
    ASSERT_EQ(rb.omega, omega) << seed;
    ASSERT_EQ(rb.bound, sum) << seed;
    ASSERT_LE(sum, omega) << seed;
  }
}

TEST(Color2Omega, Examples) {
  Instance c5 = generate("c5kt", {1, 1, 2}, 0);
  Coloring c = color_2omega(c5);
  EXPECT_TRUE(brute::proper(brute::interference(c5), c));
  EXPECT_LE(c.num_colours, 8);

  Instance dup(star(2), {{1, 2}, {1, 2}, {1, 2}, {1, 2}});
  EXPECT_EQ(color_2omega(dup).num_colours, 4);
}

TEST(Color2Omega, Random) {
  for (std::uint64_t seed = 1; seed <= 200; ++seed) {
    Instance inst = brute::random_instance(seed, 20, 12);
    brute::Graph g = brute::interference(inst);
    Coloring c = color_2omega(inst);
    ASSERT_TRUE(brute::proper(g, c)) << seed;
    ASSERT_LE(c.num_colours, 2 * brute::omega(g)) << seed;
  }
}

TEST(GreedyMis, Fig1) {
  Coloring c = greedy_mis_color(generate("fig1", {}, 0));
  EXPECT_EQ(c.num_colours, 3);
  EXPECT_EQ(c.colour, (std::vector<int>{2, 3, 1, 1, 1, 1}));
  Coloring none = greedy_mis_color(Instance(star(2), {}));
  EXPECT_EQ(none.num_colours, 0);
}

TEST(GreedyMis, Random) {
  for (std::uint64_t seed = 1; seed <= 150; ++seed) {
    Instance inst = brute::random_instance(seed, 20, 12);
    brute::Graph g = brute::interference(inst);
    Coloring c = greedy_mis_color(inst);
    ASSERT_TRUE(brute::proper(g, c)) << seed;
    ASSERT_GE(c.num_colours, brute::chi(g)) << seed;
  }
}

TEST(IsProper, Rejects) {
  InterferenceDigraph g(2, {{0, 1}});
  EXPECT_TRUE(is_proper(g, {{1, 2}, 2, {}}));
  EXPECT_FALSE(is_proper(g, {{1, 1}, 1, {}}));
  EXPECT_FALSE(is_proper(g, {{1, 3}, 3, {}}));
  EXPECT_FALSE(is_proper(g, {{1}, 1, {}}));
}
