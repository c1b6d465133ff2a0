#include <gtest/gtest.h>

#include <random>

#include "brute.hpp"
#include "filterless/decision.hpp"
#include "filterless/error.hpp"

using namespace filterless;

namespace {

bool brute_list(const brute::Graph& g, const ListAssignment& lists,
                std::vector<int>& col, int v) {
  if (v == g.m) return true;
  for (int c : lists[v]) {
    bool ok = true;
    for (int u = 0; u < v && ok; ++u) ok = !(g.adj(u, v) && col[u] == c);
    if (!ok) continue;
    col[v] = c;
    if (brute_list(g, lists, col, v + 1)) return true;
  }
  return false;
}

brute::Graph to_brute(const InterferenceDigraph& d) {
  brute::Graph g;
  g.m = d.size();
  g.arc.assign(g.m, std::vector<char>(g.m, 0));
  for (auto [i, j] : d.arcs()) g.arc[i][j] = 1;
  return g;
}

void expect_within(const brute::Graph& g, const std::optional<Coloring>& c,
                   int k) {
  ASSERT_TRUE(c.has_value());
  EXPECT_TRUE(brute::proper(g, *c));
  EXPECT_LE(c->num_colours, k);
}

}  // namespace

TEST(TwoList, Examples) {
  InterferenceDigraph none(3, {});
  auto col = two_list_color(none, {{1, 2}, {1, 2}, {1, 2}});
  ASSERT_TRUE(col.has_value());
  EXPECT_EQ(*col, (std::vector<int>{1, 1, 1}));
  InterferenceDigraph edge(2, {{0, 1}});
  EXPECT_FALSE(two_list_color(edge, {{1}, {1}}));
  EXPECT_FALSE(two_list_color(edge, {{}, {1}}));
  EXPECT_THROW(two_list_color(edge, {{1, 2, 3}, {1}}), Error);
}

TEST(TwoList, RandomAgainstBrute) {
  std::mt19937 rng(23);
  for (int round = 0; round < 400; ++round) {
    int m = 1 + rng() % 14;
    std::vector<std::pair<int, int>> arcs;
    for (int i = 0; i < m; ++i)
      for (int j = i + 1; j < m; ++j)
        if (rng() % 100 < 25) arcs.emplace_back(i, j);
    InterferenceDigraph d(m, arcs);
    ListAssignment lists(m);
    for (auto& l : lists) {
      int size = 1 + rng() % 2;
      while (static_cast<int>(l.size()) < size) {
        int c = 1 + rng() % 3;
        if (std::find(l.begin(), l.end(), c) == l.end()) l.push_back(c);
      }
    }
    brute::Graph g = to_brute(d);
    std::vector<int> col(m);
    bool want = brute_list(g, lists, col, 0);
    auto got = two_list_color(d, lists);
    ASSERT_EQ(got.has_value(), want) << round;
    if (got) {
      for (int v = 0; v < m; ++v) {
        ASSERT_TRUE(std::count(lists[v].begin(), lists[v].end(), (*got)[v]));
        for (int u : d.neighbours(v)) ASSERT_NE((*got)[u], (*got)[v]);
      }
    }
  }
}

TEST(Domination, Star) {
  Instance star = generate("star_kmn", {2, 3, 1}, 0);
  DominationResult r = dominating_or_comparability(star);
  ASSERT_FALSE(r.dominating.empty());
  EXPECT_LE(r.dominating.size(), 3u);
  InterferenceDigraph d = build_digraph(star);
  for (int v = 0; v < d.size(); ++v) {
    bool hit = std::count(r.dominating.begin(), r.dominating.end(), v) > 0;
    for (int s : r.dominating) hit = hit || d.adjacent(v, s);
    EXPECT_TRUE(hit) << v;
  }
}

TEST(Domination, AllConverging) {
  Tree t = Tree::build(4, std::vector<Edge>{{0, 1}, {0, 2}, {0, 3}});
  Instance inst(t, {{1, 0}, {2, 0}, {3, 0}});
  DominationResult r = dominating_or_comparability(inst);
  ASSERT_TRUE(r.dominating.empty());
  RootedTree view(t, r.comparability_root);
  for (const Request& q : inst.requests())
    EXPECT_EQ(classify(view, q).cls, r.uniform_class);
}

TEST(Domination, Random) {
  for (std::uint64_t seed = 1; seed <= 300; ++seed) {
    Instance inst = reduce_instance(brute::random_instance(seed, 25, 14)).first;
    brute::Graph g = brute::interference(inst);
    DominationResult r = dominating_or_comparability(inst);
    if (r.dominating.empty()) {
      RootedTree view(inst.tree(), r.comparability_root);
      for (const Request& q : inst.requests())
        ASSERT_EQ(classify(view, q).cls, r.uniform_class) << seed;
    } else {
      ASSERT_LE(r.dominating.size(), 3u);
      for (int v = 0; v < g.m; ++v) {
        bool hit = false;
        for (int s : r.dominating) hit = hit || s == v || g.adj(v, s);
        ASSERT_TRUE(hit) << seed;
      }
    }
  }
  EXPECT_THROW(dominating_or_comparability(generate("random", {3, 12, 1}, 4)),
               Error);
}

TEST(Decide3, Named) {
  Instance c1 = generate("c5kt", {1, 1, 1}, 0);
  expect_within(brute::interference(c1), decide_3col(c1), 3);
  EXPECT_FALSE(decide_3col(generate("c5kt", {1, 1, 2}, 0)));
}

TEST(Decide3, Random) {
  for (std::uint64_t seed = 1; seed <= 300; ++seed) {
    Instance inst = brute::random_instance(seed, 25, 12);
    brute::Graph g = brute::interference(inst);
    auto c = decide_3col(inst);
    ASSERT_EQ(c.has_value(), brute::chi(g) <= 3) << seed;
    if (c) {
      ASSERT_TRUE(brute::proper(g, *c));
      ASSERT_LE(c->num_colours, 3);
    }
  }
}

TEST(DecideK, Named) {
  Instance fig = generate("fig1", {}, 0);
  expect_within(brute::interference(fig), decide_kcol(fig, 4), 4);
  EXPECT_FALSE(decide_kcol(generate("c5kt", {1, 1, 2}, 0), 4));
  EXPECT_THROW(decide_kcol(fig, 3), Error);
  EXPECT_THROW(decide_kcol(fig, 4, 99), Error);
}

TEST(DecideK, Random) {
  for (std::uint64_t seed = 1; seed <= 120; ++seed) {
    Instance inst = brute::random_instance(seed, 20, 10);
    brute::Graph g = brute::interference(inst);
    int chi = brute::chi(g);
    for (int k : {4, 5}) {
      ExceptionalChoice choice;
      auto c = decide_kcol(inst, k, 0, &choice);
      ASSERT_EQ(c.has_value(), chi <= k) << seed << " " << k;
      if (!c) continue;
      ASSERT_TRUE(brute::proper(g, *c));
      ASSERT_LE(c->num_colours, k);
      ASSERT_TRUE(brute::clique(g, choice.q_minus)) << seed;
      ASSERT_TRUE(brute::clique(g, choice.q_plus)) << seed;
      for (auto [a, b] : choice.matching) ASSERT_FALSE(g.adj(a, b));
      // every colour class is one of the three types
      RootedTree view(inst.tree(), 0);
      for (int colour = 1; colour <= c->num_colours; ++colour) {
        int uni = 0, up = 0, down = 0;
        for (int i = 0; i < g.m; ++i) {
          if (c->colour[i] != colour) continue;
          PathClass cls = classify(view, inst.requests()[i]).cls;
          uni += cls == PathClass::kUnimodal;
          up += cls != PathClass::kConverging;
          down += cls != PathClass::kDiverging;
        }
        ASSERT_TRUE(uni == 2 || up <= 1 || down <= 1) << seed;
      }
    }
  }
}

TEST(Decide, SmallBudgets) {
  Tree t = Tree::build(3, std::vector<Edge>{{0, 1}, {1, 2}});
  Instance empty(t, {});
  EXPECT_TRUE(decide(empty, 0));
  Instance one(t, {{0, 1}});
  EXPECT_FALSE(decide(one, 0));
  EXPECT_TRUE(decide(one, 1));
  Instance chain(t, {{0, 1}, {1, 2}});
  EXPECT_FALSE(decide(chain, 1));
  EXPECT_TRUE(decide(chain, 2));
  Instance c1 = generate("c5kt", {1, 1, 1}, 0);
  EXPECT_FALSE(decide(c1, 2));
  EXPECT_TRUE(decide(c1, 3));
  EXPECT_FALSE(decide(generate("c5kt", {1, 1, 2}, 0), 4));
  EXPECT_TRUE(decide(generate("c5kt", {1, 1, 2}, 0), 5));
}
