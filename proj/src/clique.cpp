#include "filterless/clique.hpp"

#include <algorithm>
#include <array>
#include <optional>
#include <string>

#include "filterless/error.hpp"
#include "filterless/matching.hpp"

namespace filterless {

std::vector<RequestId> cobipartite_clique(const InterferenceDigraph& digraph,
                                          const CobipartitePartition& partition,
                                          bool validate) {
  const auto& a = partition.part_a;
  const auto& b = partition.part_b;
  if (validate) {
    for (const auto* part : {&a, &b}) {
      for (std::size_t i = 0; i < part->size(); ++i) {
        for (std::size_t j = i + 1; j < part->size(); ++j) {
          if (!digraph.adjacent((*part)[i], (*part)[j])) {
            throw Error(ErrorKind::kPartitionNotCliques,
                        "requests " + std::to_string((*part)[i]) + " and " +
                            std::to_string((*part)[j]) +
                            " share a part but do not interfere");
          }
        }
      }
    }
  }
  std::vector<std::pair<int, int>> missing;
  for (int i = 0; i < static_cast<int>(a.size()); ++i) {
    for (int j = 0; j < static_cast<int>(b.size()); ++j) {
      if (!digraph.adjacent(a[i], b[j])) missing.emplace_back(i, j);
    }
  }
  BipartiteMatcher matcher(static_cast<int>(a.size()),
                           static_cast<int>(b.size()), missing);
  auto [left_in, right_in] = matcher.max_independent_set();
  std::vector<RequestId> out;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (left_in[i]) out.push_back(a[i]);
  }
  for (std::size_t j = 0; j < b.size(); ++j) {
    if (right_in[j]) out.push_back(b[j]);
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

// Endpoints of the common subpath of the tree paths a-b and c-d, or
// nothing if they share no vertex.
std::optional<std::pair<Vertex, Vertex>> common_subpath(const RootedTree& view,
                                                        Vertex a, Vertex b,
                                                        Vertex c, Vertex d) {
  std::array<Vertex, 4> cand{view.lca(a, c), view.lca(a, d), view.lca(b, c),
                             view.lca(b, d)};
  std::vector<Vertex> on_both;
  for (Vertex v : cand) {
    if (view.on_path(a, b, v) && view.on_path(c, d, v)) on_both.push_back(v);
  }
  if (on_both.empty()) return std::nullopt;
  std::pair<Vertex, Vertex> best{on_both[0], on_both[0]};
  int best_len = 0;
  for (Vertex u : on_both) {
    for (Vertex v : on_both) {
      if (view.distance(u, v) > best_len) {
        best = {u, v};
        best_len = view.distance(u, v);
      }
    }
  }
  return best;
}

// Vertex of the path s-t closest to x.
Vertex closest_on_path(const RootedTree& view, Vertex s, Vertex t, Vertex x) {
  std::array<Vertex, 3> cand{view.lca(s, t), view.lca(s, x), view.lca(t, x)};
  return *std::max_element(cand.begin(), cand.end(), [&](Vertex u, Vertex v) {
    return view.depth(u) < view.depth(v);
  });
}

}  // namespace

BoughSplit split_by_bough(const Instance& inst, Vertex root, Vertex y_a,
                          Vertex y_b) {
  RootedTree view(inst.tree(), root);
  BoughSplit out;
  Vertex q0 = y_a == y_b ? root : y_a;
  Vertex q1 = y_a == y_b ? y_a : y_b;
  out.pivot = view.lca(y_a, y_b);
  const auto& requests = inst.requests();
  for (RequestId id = 0; id < inst.num_requests(); ++id) {
    const Vertex s = requests[id].source;
    const Vertex t = requests[id].target;
    auto common = common_subpath(view, s, t, q0, q1);
    if (common && common->first != common->second) {
      auto [u, v] = *common;
      if (view.distance(s, u) > view.distance(s, v)) std::swap(u, v);
      bool forward = view.distance(q0, u) < view.distance(q0, v);
      (forward ? out.forward : out.backward).push_back(id);
      continue;
    }
    Vertex m = closest_on_path(view, s, t, out.pivot);
    if (m == s || m == t) continue;
    Vertex before = view.step_toward(m, s);
    Vertex after = view.step_toward(m, t);
    (before < after ? out.unimodal_a : out.unimodal_b).push_back(id);
  }
  return out;
}

Clique max_clique(const Instance& inst) {
  if (inst.num_requests() == 0) {
    throw Error(ErrorKind::kEmptyInstance,
                "maximum clique of an empty request list");
  }
  auto [reduced, mapping] = reduce_instance(inst);
  InterferenceDigraph digraph = build_digraph(reduced);
  const Tree& tree = reduced.tree();
  const int n = tree.num_vertices();

  Vertex root = 0;
  for (Vertex v = 0; v < n; ++v) {
    if (tree.degree(v) >= 2) {
      root = v;
      break;
    }
  }
  RootedTree view(tree, root);
  std::vector<Vertex> leaf;
  for (Vertex v = 0; v < n; ++v) {
    if (v != root && view.children(v).empty()) leaf.push_back(v);
  }

  Clique best;
  for (std::size_t i = 0; i < leaf.size(); ++i) {
    for (std::size_t j = i; j < leaf.size(); ++j) {
      BoughSplit split = split_by_bough(reduced, root, leaf[i], leaf[j]);
      std::vector<RequestId> members =
          cobipartite_clique(digraph, {split.forward, split.backward});
      std::vector<RequestId> outer =
          cobipartite_clique(digraph, {split.unimodal_a, split.unimodal_b});
      members.insert(members.end(), outer.begin(), outer.end());
      if (members.size() > best.members.size()) {
        std::sort(members.begin(), members.end());
        best = {std::move(members), leaf[i], leaf[j], split.pivot};
      }
    }
  }

  std::vector<Vertex> representative(n, kNoVertex);
  for (Vertex v = static_cast<Vertex>(mapping.forward.size()) - 1; v >= 0;
       --v) {
    representative[mapping.forward[v]] = v;
  }
  best.leaf_a = representative[best.leaf_a];
  best.leaf_b = representative[best.leaf_b];
  best.pivot = representative[best.pivot];
  return best;
}

}  // namespace filterless
