#include <gtest/gtest.h>

#include <random>

#include "brute.hpp"
#include "filterless/clique.hpp"
#include "filterless/error.hpp"
#include "filterless/matching.hpp"

using namespace filterless;

namespace {

int brute_matching(int left, const std::vector<std::vector<int>>& adj, int l,
                   std::uint32_t used) {
  if (l == left) return 0;
  int best = brute_matching(left, adj, l + 1, used);
  for (int r : adj[l])
    if (!(used >> r & 1))
      best = std::max(best, 1 + brute_matching(left, adj, l + 1, used | 1u << r));
  return best;
}

}  // namespace

TEST(Matching, Examples) {
  std::vector<std::pair<int, int>> none;
  EXPECT_EQ(BipartiteMatcher(3, 3, none).size(), 0);
  std::vector<std::pair<int, int>> k33;
  for (int l = 0; l < 3; ++l)
    for (int r = 0; r < 3; ++r) k33.emplace_back(l, r);
  EXPECT_EQ(BipartiteMatcher(3, 3, k33).size(), 3);

  std::vector<int> left{10, 11}, right{20, 21};
  std::vector<std::pair<int, int>> e{{10, 20}, {11, 20}, {11, 21}};
  EXPECT_EQ(bipartite_max_matching(left, right, e).size(), 2u);
}

TEST(Matching, RandomAgainstBrute) {
  std::mt19937 rng(11);
  for (int round = 0; round < 200; ++round) {
    int nl = 1 + rng() % 10, nr = 1 + rng() % 10;
    std::vector<std::pair<int, int>> edges;
    std::vector<std::vector<int>> adj(nl);
    for (int l = 0; l < nl; ++l)
      for (int r = 0; r < nr; ++r)
        if (rng() % 100 < 30) {
          edges.emplace_back(l, r);
          adj[l].push_back(r);
        }
    BipartiteMatcher m(nl, nr, edges);
    ASSERT_EQ(m.size(), brute_matching(nl, adj, 0, 0));
    auto [lf, rf] = m.max_independent_set();
    int count = 0;
    for (char c : lf) count += c;
    for (char c : rf) count += c;
    ASSERT_EQ(count, nl + nr - m.size());
    for (auto [l, r] : edges) ASSERT_FALSE(lf[l] && rf[r]);
  }
}

TEST(Clique, Named) {
  for (int t = 1; t <= 3; ++t)
    EXPECT_EQ(max_clique(generate("c5kt", {1, 1, t}, 0)).members.size(),
              static_cast<size_t>(2 * t));
  Clique c = max_clique(generate("fig1", {}, 0));
  EXPECT_EQ(c.members, (std::vector<RequestId>{0, 1}));
  EXPECT_THROW(max_clique(Instance(Tree::build(2, std::vector<Edge>{{0, 1}}), {})),
               Error);
}

TEST(Clique, MatchesBrute) {
  for (std::uint64_t seed = 1; seed <= 300; ++seed) {
    Instance inst = brute::random_instance(seed, 25, 14);
    brute::Graph g = brute::interference(inst);
    Clique c = max_clique(inst);
    ASSERT_EQ(static_cast<int>(c.members.size()), brute::omega(g)) << seed;
    ASSERT_TRUE(brute::clique(g, c.members)) << seed;
  }
}

TEST(Cobipartite, Examples) {
  InterferenceDigraph empty(0, {});
  EXPECT_TRUE(cobipartite_clique(empty, {}).empty());

  std::vector<std::pair<int, int>> arcs;
  for (int i = 0; i < 5; ++i)
    for (int j = i + 1; j < 5; ++j) arcs.emplace_back(i, j);
  InterferenceDigraph k5(5, arcs);
  auto all = cobipartite_clique(k5, {{0, 3}, {1, 2, 4}});
  EXPECT_EQ(all.size(), 5u);

  InterferenceDigraph path(3, {{0, 1}, {1, 2}});
  EXPECT_THROW(cobipartite_clique(path, {{0, 2}, {1}}, true), Error);
}

TEST(Cobipartite, RandomAgainstBrute) {
  std::mt19937 rng(17);
  for (int round = 0; round < 200; ++round) {
    int na = rng() % 9, nb = rng() % 8;
    int m = na + nb;
    std::vector<std::pair<int, int>> arcs;
    brute::Graph g;
    g.m = m;
    g.arc.assign(m, std::vector<char>(m, 0));
    auto add = [&](int i, int j) {
      arcs.emplace_back(i, j);
      g.arc[i][j] = 1;
    };
    for (int i = 0; i < m; ++i)
      for (int j = i + 1; j < m; ++j)
        if ((i < na) == (j < na) || rng() % 2) add(i, j);
    CobipartitePartition part;
    for (int i = 0; i < m; ++i) (i < na ? part.part_a : part.part_b).push_back(i);
    auto c = cobipartite_clique(InterferenceDigraph(m, arcs), part, true);
    ASSERT_EQ(static_cast<int>(c.size()), brute::omega(g));
    ASSERT_TRUE(brute::clique(g, c));
  }
}

TEST(Clique, BoughSplitParts) {
  for (std::uint64_t seed = 1; seed <= 120; ++seed) {
    Instance inst = brute::random_instance(seed, 16, 14);
    auto [red, map] = reduce_instance(inst);
    brute::Graph g = brute::interference(red);
    auto ls = leaves(red.tree());
    Vertex root = 0;
    for (Vertex v = 0; v < red.num_vertices(); ++v)
      if (red.tree().degree(v) >= 2) {
        root = v;
        break;
      }
    for (size_t a = 0; a < ls.size(); ++a)
      for (size_t b = a; b < ls.size(); ++b) {
        if (ls[a] == root || ls[b] == root) continue;
        BoughSplit s = split_by_bough(red, root, ls[a], ls[b]);
        ASSERT_TRUE(brute::clique(g, s.forward)) << seed;
        ASSERT_TRUE(brute::clique(g, s.backward)) << seed;
        ASSERT_TRUE(brute::clique(g, s.unimodal_a)) << seed;
        ASSERT_TRUE(brute::clique(g, s.unimodal_b)) << seed;
      }
  }
}
