#include "filterless/tree.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "filterless/error.hpp"

namespace filterless {

namespace {

std::string edge_name(const Edge& e) {
  return "(" + std::to_string(e.first) + "," + std::to_string(e.second) + ")";
}

}  // namespace

Tree Tree::build(int n, std::span<const Edge> edges) {
  if (n < 1) {
    throw Error(ErrorKind::kWrongEdgeCount,
                "a tree needs at least one vertex, got n=" + std::to_string(n));
  }
  if (static_cast<int>(edges.size()) != n - 1) {
    throw Error(ErrorKind::kWrongEdgeCount,
                "expected " + std::to_string(n - 1) + " edges, got " +
                    std::to_string(edges.size()));
  }
  Tree tree;
  tree.adjacency_.assign(n, {});
  for (const Edge& e : edges) {
    auto [u, v] = e;
    if (u < 0 || u >= n || v < 0 || v >= n) {
      throw Error(ErrorKind::kVertexOutOfRange,
                  "edge " + edge_name(e) + " has an endpoint outside [0," +
                      std::to_string(n) + ")");
    }
    if (u == v) {
      throw Error(ErrorKind::kSelfLoop, "edge " + edge_name(e));
    }
    tree.adjacency_[u].push_back(v);
    tree.adjacency_[v].push_back(u);
  }
  for (Vertex v = 0; v < n; ++v) {
    auto& adj = tree.adjacency_[v];
    std::sort(adj.begin(), adj.end());
    auto dup = std::adjacent_find(adj.begin(), adj.end());
    if (dup != adj.end()) {
      throw Error(ErrorKind::kDuplicateEdge,
                  "edge " + edge_name({std::min(v, *dup), std::max(v, *dup)}) +
                      " appears more than once");
    }
  }
  // n-1 distinct edges: connected iff acyclic iff everything is reachable.
  std::vector<char> seen(n, 0);
  std::vector<Vertex> stack{0};
  seen[0] = 1;
  int reached = 1;
  while (!stack.empty()) {
    Vertex u = stack.back();
    stack.pop_back();
    for (Vertex w : tree.adjacency_[u]) {
      if (!seen[w]) {
        seen[w] = 1;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  if (reached != n) {
    Vertex missing = static_cast<Vertex>(
        std::find(seen.begin(), seen.end(), 0) - seen.begin());
    throw Error(ErrorKind::kDisconnectedTree,
                "vertex " + std::to_string(missing) +
                    " is not reachable from vertex 0");
  }
  return tree;
}

bool Tree::adjacent(Vertex u, Vertex v) const {
  const auto& adj = adjacency_[u];
  return std::binary_search(adj.begin(), adj.end(), v);
}

std::vector<Edge> Tree::edges() const {
  std::vector<Edge> out;
  out.reserve(adjacency_.size());
  for (Vertex u = 0; u < num_vertices(); ++u) {
    for (Vertex v : adjacency_[u]) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

std::vector<Vertex> leaves(const Tree& tree) {
  if (tree.num_vertices() == 1) return {0};
  std::vector<Vertex> out;
  for (Vertex v = 0; v < tree.num_vertices(); ++v) {
    if (tree.degree(v) == 1) out.push_back(v);
  }
  return out;
}

std::vector<Vertex> directed_path(const Tree& tree, Vertex x, Vertex y) {
  if (!tree.contains(x) || !tree.contains(y)) {
    throw Error(ErrorKind::kVertexOutOfRange, "path endpoint out of range");
  }
  std::vector<Vertex> pred(tree.num_vertices(), kNoVertex);
  std::vector<Vertex> queue{x};
  pred[x] = x;
  for (std::size_t head = 0; head < queue.size() && pred[y] == kNoVertex;
       ++head) {
    Vertex u = queue[head];
    for (Vertex w : tree.neighbours(u)) {
      if (pred[w] == kNoVertex) {
        pred[w] = u;
        queue.push_back(w);
      }
    }
  }
  std::vector<Vertex> path{y};
  while (path.back() != x) path.push_back(pred[path.back()]);
  std::reverse(path.begin(), path.end());
  return path;
}

RootedTree::RootedTree(const Tree& tree, Vertex root) : root_(root) {
  const int n = tree.num_vertices();
  if (root < 0 || root >= n) {
    throw Error(ErrorKind::kVertexOutOfRange,
                "root " + std::to_string(root) + " outside [0," +
                    std::to_string(n) + ")");
  }
  parent_.assign(n, kNoVertex);
  depth_.assign(n, 0);
  children_.assign(n, {});
  tin_.assign(n, 0);
  tout_.assign(n, 0);
  preorder_pos_.assign(n, 0);
  euler_.reserve(2 * n - 1);
  preorder_.reserve(n);

  // Iterative DFS; frame = (vertex, index of next neighbour to try).
  std::vector<std::pair<Vertex, std::size_t>> stack;
  stack.emplace_back(root, 0);
  tin_[root] = 0;
  euler_.push_back(root);
  preorder_.push_back(root);
  while (!stack.empty()) {
    auto& [u, next] = stack.back();
    const auto& adj = tree.neighbours(u);
    while (next < adj.size() && adj[next] == parent_[u]) ++next;
    if (next == adj.size()) {
      tout_[u] = static_cast<int>(euler_.size()) - 1;
      stack.pop_back();
      if (!stack.empty()) euler_.push_back(stack.back().first);
      continue;
    }
    Vertex w = adj[next++];
    parent_[w] = u;
    depth_[w] = depth_[u] + 1;
    children_[u].push_back(w);
    tin_[w] = static_cast<int>(euler_.size());
    euler_.push_back(w);
    preorder_pos_[w] = static_cast<int>(preorder_.size());
    preorder_.push_back(w);
    stack.emplace_back(w, 0);
  }

  // Sparse table over the preorder for O(1) LCA.
  const int levels = std::bit_width(static_cast<unsigned>(n));
  sparse_.assign(levels, {});
  sparse_[0] = preorder_;
  for (int k = 1; k < levels; ++k) {
    const int span = 1 << k;
    const int half = span >> 1;
    auto& row = sparse_[k];
    const auto& prev = sparse_[k - 1];
    row.resize(n - span + 1);
    for (int i = 0; i + span <= n; ++i) {
      Vertex a = prev[i];
      Vertex b = prev[i + half];
      row[i] = depth_[a] <= depth_[b] ? a : b;
    }
  }
}

Vertex RootedTree::lca(Vertex x, Vertex y) const {
  if (x == y) return x;
  int a = preorder_pos_[x];
  int b = preorder_pos_[y];
  if (a > b) std::swap(a, b);
  // The shallowest vertex in preorder (a, b] is a child of the LCA.
  ++a;
  const int k = std::bit_width(static_cast<unsigned>(b - a + 1)) - 1;
  Vertex u = sparse_[k][a];
  Vertex v = sparse_[k][b - (1 << k) + 1];
  Vertex shallow = depth_[u] <= depth_[v] ? u : v;
  return parent_[shallow];
}

Vertex RootedTree::child_toward(Vertex x, Vertex y) const {
  const auto& kids = children_[x];
  // Children are in ascending tin order; pick the last one starting at or
  // before tin[y].
  auto it = std::upper_bound(
      kids.begin(), kids.end(), tin_[y],
      [this](int t, Vertex c) { return t < tin_[c]; });
  return *std::prev(it);
}

Vertex RootedTree::step_toward(Vertex x, Vertex y) const {
  if (is_ancestor(x, y)) return child_toward(x, y);
  return parent_[x];
}

std::vector<Vertex> RootedTree::path(Vertex x, Vertex y) const {
  Vertex m = lca(x, y);
  std::vector<Vertex> up;
  for (Vertex v = x; v != m; v = parent_[v]) up.push_back(v);
  up.push_back(m);
  std::vector<Vertex> down;
  for (Vertex v = y; v != m; v = parent_[v]) down.push_back(v);
  up.insert(up.end(), down.rbegin(), down.rend());
  return up;
}

}  // namespace filterless
