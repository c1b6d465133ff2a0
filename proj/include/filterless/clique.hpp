#pragma once

#include <vector>

#include "filterless/interference.hpp"

namespace filterless {

struct Clique {
  std::vector<RequestId> members;  // sorted
  // Bough (leaf_a = leaf_b for a branch) and pivot that produced the clique,
  // in the caller's vertex labels.
  Vertex leaf_a = kNoVertex;
  Vertex leaf_b = kNoVertex;
  Vertex pivot = kNoVertex;
};

// Two vertex sets, each a clique of the interference graph.
struct CobipartitePartition {
  std::vector<RequestId> part_a;
  std::vector<RequestId> part_b;
};

// Maximum clique of a cobipartite induced subgraph from a maximum matching
// of the bipartite complement. With `validate`, throws kPartitionNotCliques
// if a part is not a clique.
std::vector<RequestId> cobipartite_clique(const InterferenceDigraph& digraph,
                                          const CobipartitePartition& partition,
                                          bool validate = false);

// Requests around one bough y_a .. y_b of the tree rooted at `root`.
struct BoughSplit {
  Vertex pivot = kNoVertex;           // lca(y_a, y_b)
  std::vector<RequestId> forward;     // share an arc directed y_a -> y_b
  std::vector<RequestId> backward;    // share an arc directed y_b -> y_a
  std::vector<RequestId> unimodal_a;  // unimodal at pivot, arc-disjoint,
  std::vector<RequestId> unimodal_b;  //   split by child order at the middle
};

// For y_a == y_b the bough is the branch root .. y_a.
BoughSplit split_by_bough(const Instance& inst, Vertex root, Vertex y_a,
                          Vertex y_b);

// Maximum clique over all boughs of the reduced tree. The instance is reduced
// internally; the witness uses representative (smallest) original vertices.
// Throws kEmptyInstance on an empty request list.
Clique max_clique(const Instance& inst);

}  // namespace filterless
