#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace filterless {

// Vertices are 0-based everywhere inside the library; file formats are
// 1-based and convert at the I/O boundary.
using Vertex = int;
inline constexpr Vertex kNoVertex = -1;

struct Arc {
  Vertex tail = kNoVertex;
  Vertex head = kNoVertex;

  friend bool operator==(const Arc&, const Arc&) = default;
  friend auto operator<=>(const Arc&, const Arc&) = default;
};

using Edge = std::pair<Vertex, Vertex>;

// An undirected tree standing for the bidirected tree obtained by replacing
// every edge {u, v} with the two arcs (u, v) and (v, u).
class Tree {
 public:
  // Validates n >= 1, exactly n-1 edges, no self-loops, no parallel edges,
  // connectivity. Throws filterless::Error naming the offending item.
  static Tree build(int n, std::span<const Edge> edges);

  int num_vertices() const { return static_cast<int>(adjacency_.size()); }
  const std::vector<Vertex>& neighbours(Vertex v) const {
    return adjacency_[v];
  }
  int degree(Vertex v) const {
    return static_cast<int>(adjacency_[v].size());
  }
  bool contains(Vertex v) const { return v >= 0 && v < num_vertices(); }
  bool adjacent(Vertex u, Vertex v) const;

  // Edges as (u, v) with u < v, sorted ascending.
  std::vector<Edge> edges() const;

  friend bool operator==(const Tree&, const Tree&) = default;

 private:
  std::vector<std::vector<Vertex>> adjacency_;
};

// Ascending degree-1 vertices; the single vertex of a 1-vertex tree.
std::vector<Vertex> leaves(const Tree& tree);

// Vertex sequence of the unique tree path from x to y (just (x) if x == y).
std::vector<Vertex> directed_path(const Tree& tree, Vertex x, Vertex y);

// The tree rooted at some vertex z, with an Euler tour that answers
// ancestor queries in O(1) and a sparse table for O(1) LCA queries.
// Children are visited in ascending vertex order.
class RootedTree {
 public:
  RootedTree(const Tree& tree, Vertex root);

  Vertex root() const { return root_; }
  int num_vertices() const { return static_cast<int>(parent_.size()); }

  Vertex parent(Vertex v) const { return parent_[v]; }
  int depth(Vertex v) const { return depth_[v]; }
  const std::vector<Vertex>& children(Vertex v) const { return children_[v]; }

  // Euler tour of length 2n-1 starting and ending at the root.
  const std::vector<Vertex>& euler() const { return euler_; }
  int tin(Vertex v) const { return tin_[v]; }
  int tout(Vertex v) const { return tout_[v]; }
  // Vertices in prefix DFS order.
  const std::vector<Vertex>& preorder() const { return preorder_; }

  // x is an ancestor of y (reflexive).
  bool is_ancestor(Vertex x, Vertex y) const {
    return tin_[x] <= tin_[y] && tin_[y] <= tout_[x];
  }
  bool related(Vertex x, Vertex y) const {
    return is_ancestor(x, y) || is_ancestor(y, x);
  }
  Vertex lca(Vertex x, Vertex y) const;
  int distance(Vertex x, Vertex y) const {
    return depth_[x] + depth_[y] - 2 * depth_[lca(x, y)];
  }
  // Child of x on the way to its strict descendant y.
  Vertex child_toward(Vertex x, Vertex y) const;
  // Neighbour of x on the tree path from x to y (x != y).
  Vertex step_toward(Vertex x, Vertex y) const;
  // True iff v lies on the tree path between a and b.
  bool on_path(Vertex a, Vertex b, Vertex v) const {
    return distance(a, v) + distance(v, b) == distance(a, b);
  }
  // Path x -> y through the LCA, O(path length).
  std::vector<Vertex> path(Vertex x, Vertex y) const;

 private:
  Vertex root_;
  std::vector<Vertex> parent_;
  std::vector<int> depth_;
  std::vector<std::vector<Vertex>> children_;
  std::vector<Vertex> euler_;
  std::vector<int> tin_;
  std::vector<int> tout_;
  std::vector<Vertex> preorder_;
  std::vector<int> preorder_pos_;
  // sparse_[k][i]: shallowest vertex among preorder_[i .. i + 2^k).
  std::vector<std::vector<Vertex>> sparse_;
};

}  // namespace filterless
