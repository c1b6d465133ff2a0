#include <gtest/gtest.h>

#include <random>

#include "brute.hpp"
#include "filterless/error.hpp"
#include "filterless/independence.hpp"

using namespace filterless;

TEST(Independence, Fig1) {
  Instance fig = generate("fig1", {}, 0);
  IndependentSet s = max_independent_set(fig);
  EXPECT_EQ(s.members, (std::vector<RequestId>{2, 3, 4, 5}));
}

TEST(Independence, Small) {
  Tree star = Tree::build(4, std::vector<Edge>{{0, 1}, {0, 2}, {0, 3}});
  EXPECT_EQ(max_independent_set(Instance(star, {{1, 2}})).members.size(), 1u);
  auto pair = find_independent_pair(Instance(star, {{1, 0}, {2, 0}}));
  ASSERT_TRUE(pair.has_value());
  EXPECT_EQ(*pair, std::make_pair(0, 1));
  EXPECT_FALSE(find_independent_pair(Instance(star, {{1, 0}, {0, 2}})));
  EXPECT_THROW(max_independent_set(Instance(star, {})), Error);
}

TEST(Independence, C5Pair) {
  Instance c5 = generate("c5kt", {1, 1, 1}, 0);
  auto pair = find_independent_pair(c5);
  ASSERT_TRUE(pair.has_value());
  brute::Graph g = brute::interference(c5);
  EXPECT_FALSE(g.adj(pair->first, pair->second));
  EXPECT_EQ(max_independent_set(c5).members.size(), 2u);
}

TEST(Independence, MatchesBrute) {
  for (std::uint64_t seed = 1; seed <= 300; ++seed) {
    Instance inst = brute::random_instance(seed, 25, 14);
    brute::Graph g = brute::interference(inst);
    int alpha = brute::alpha(g);
    IndependentSet s = max_independent_set(inst);
    ASSERT_EQ(static_cast<int>(s.members.size()), alpha) << seed;
    ASSERT_TRUE(brute::independent(g, s.members)) << seed;
    ASSERT_TRUE(std::is_sorted(s.members.begin(), s.members.end()));
    auto pair = find_independent_pair(inst);
    ASSERT_EQ(pair.has_value(), alpha >= 2) << seed;
    if (pair) ASSERT_FALSE(g.adj(pair->first, pair->second));
  }
}

TEST(Independence, DetailAnyRoot) {
  for (std::uint64_t seed = 1; seed <= 60; ++seed) {
    Instance inst = brute::random_instance(seed, 20, 12);
    int alpha = brute::alpha(brute::interference(inst));
    for (Vertex z = 0; z < inst.num_vertices(); ++z) {
      RootedTree view(inst.tree(), z);
      auto geo = classify_all(view, inst.requests());
      ASSERT_EQ(static_cast<int>(detail::max_independent_set(view, geo).members.size()),
                alpha)
          << seed << " " << z;
    }
  }
}

namespace {

// Diverging requests under root 0 with their geometry.
struct Diverging {
  RootedTree view;
  std::vector<RequestGeometry> geo;
  std::vector<int> ids;
};

Diverging diverging_of(const Instance& inst) {
  RootedTree view(inst.tree(), 0);
  auto geo = classify_all(view, inst.requests());
  std::vector<int> ids;
  for (int i = 0; i < inst.num_requests(); ++i)
    if (geo[i].cls == PathClass::kDiverging) ids.push_back(i);
  return {view, geo, ids};
}

std::vector<int> random_independent(const brute::Graph& g, std::vector<int> pool,
                                    std::mt19937& rng) {
  std::shuffle(pool.begin(), pool.end(), rng);
  std::vector<int> set;
  for (int i : pool) {
    set.push_back(i);
    if (!brute::independent(g, set)) set.pop_back();
  }
  return set;
}

}  // namespace

TEST(Independence, SwapDeeperStart) {
  std::mt19937 rng(3);
  int checked = 0;
  for (std::uint64_t seed = 1; seed <= 300; ++seed) {
    Instance inst = brute::random_instance(seed, 20, 16);
    brute::Graph g = brute::interference(inst);
    Diverging d = diverging_of(inst);
    auto set = random_independent(g, d.ids, rng);
    for (int r : set)
      for (int r2 : d.ids) {
        if (std::count(set.begin(), set.end(), r2)) continue;
        if (!d.view.is_ancestor(d.geo[r].source_next, d.geo[r2].source_next))
          continue;
        auto swapped = set;
        std::replace(swapped.begin(), swapped.end(), r, r2);
        ASSERT_TRUE(brute::independent(g, swapped)) << seed;
        ++checked;
      }
  }
  EXPECT_GT(checked, 50);
}

TEST(Independence, ExtensionBelowLca) {
  std::mt19937 rng(5);
  int checked = 0;
  for (std::uint64_t seed = 1; seed <= 300; ++seed) {
    Instance inst = brute::random_instance(seed, 20, 16);
    brute::Graph g = brute::interference(inst);
    Diverging d = diverging_of(inst);
    auto set = random_independent(g, d.ids, rng);
    if (set.size() < 2) continue;
    Vertex l = d.geo[set[0]].target;
    for (int q : set) l = d.view.lca(l, d.geo[q].target);
    for (int r = 0; r < g.m; ++r) {
      if (d.geo[r].cls == PathClass::kDiverging) continue;
      auto bigger = set;
      bigger.push_back(r);
      ASSERT_EQ(brute::independent(g, bigger),
                d.view.is_ancestor(d.geo[r].source, l))
          << seed << " " << r;
      ++checked;
    }
  }
  EXPECT_GT(checked, 50);
}
