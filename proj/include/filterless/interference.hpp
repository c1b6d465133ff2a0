#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "filterless/instance.hpp"

namespace filterless {

// Arc (i, j) means request i interferes on request j. Vertices of the
// underlying undirected graph are request indices.
class InterferenceDigraph {
 public:
  // Above this many requests the dense adjacency matrix is not kept.
  static constexpr int kDenseThreshold = 4096;

  InterferenceDigraph() = default;
  // `arcs` may be unsorted and contain duplicates; self-loops are dropped.
  InterferenceDigraph(int num_requests, std::vector<std::pair<int, int>> arcs);

  int size() const { return static_cast<int>(out_.size()); }
  int num_arcs() const { return num_arcs_; }
  const std::vector<int>& out_neighbours(int i) const { return out_[i]; }
  // Undirected neighbours, sorted.
  const std::vector<int>& neighbours(int i) const { return und_[i]; }

  bool has_arc(int i, int j) const;
  bool adjacent(int i, int j) const { return has_arc(i, j) || has_arc(j, i); }

  // Sorted (i, j) pairs.
  std::vector<std::pair<int, int>> arcs() const;
  // Induced on `ids`; vertex k of the result is ids[k].
  InterferenceDigraph induced(const std::vector<int>& ids) const;

  friend bool operator==(const InterferenceDigraph& a,
                         const InterferenceDigraph& b) {
    return a.out_ == b.out_;
  }

 private:
  std::vector<std::vector<int>> out_;
  std::vector<std::vector<int>> und_;
  std::vector<std::uint64_t> dense_;  // row-major bit matrix of arcs
  int words_per_row_ = 0;
  int num_arcs_ = 0;
};

// Definitional check: the tree path from r's source to r2's target starts
// with r's emission arc and ends with r2's reception arc. O(|T|).
bool interferes_on(const Tree& tree, const Request& r, const Request& r2);

// Both directions (r on r2, r2 on r) in O(1) from ancestor tests, dispatched
// on the class pair. Geometries must come from the same rooted view.
std::pair<bool, bool> interferes_fast(const RootedTree& view,
                                      const RequestGeometry& g,
                                      const RequestGeometry& g2);

// Symmetric relation via the six class-pair characterisations, used as an
// independent cross-check of interferes_fast.
bool interfere_by_cases(const RootedTree& view, const RequestGeometry& g,
                        const RequestGeometry& g2);

// One traversal per request of the tree minus its emission edge.
// O(|R| (|T| + |R|)).
InterferenceDigraph build_digraph(const Instance& inst);

}  // namespace filterless
