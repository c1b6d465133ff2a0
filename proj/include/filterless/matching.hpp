#pragma once

#include <span>
#include <utility>
#include <vector>

namespace filterless {

// Maximum-cardinality bipartite matching by augmenting paths, plus the
// Kőnig-derived maximum independent set.
class BipartiteMatcher {
 public:
  // Edges are (left index, right index) with indices local to each side.
  BipartiteMatcher(int num_left, int num_right,
                   std::span<const std::pair<int, int>> edges);

  int size() const { return size_; }
  // mate of left vertex l, or -1.
  int left_mate(int l) const { return left_mate_[l]; }
  int right_mate(int r) const { return right_mate_[r]; }
  std::vector<std::pair<int, int>> pairs() const;

  // Maximum independent set of the bipartite graph (complement of a minimum
  // vertex cover): flags per left / right vertex.
  std::pair<std::vector<char>, std::vector<char>> max_independent_set() const;

 private:
  bool augment(int root);

  std::vector<std::vector<int>> adj_;
  std::vector<int> left_mate_;
  std::vector<int> right_mate_;
  std::vector<int> visit_;
  int epoch_ = 0;
  int size_ = 0;
};

// Deterministic given input order. Edges use labels drawn from `left` and
// `right`; the result pairs (left label, right label).
std::vector<std::pair<int, int>> bipartite_max_matching(
    std::span<const int> left, std::span<const int> right,
    std::span<const std::pair<int, int>> edges);

}  // namespace filterless
