#include "filterless/matching.hpp"

#include <algorithm>
#include <map>

namespace filterless {

BipartiteMatcher::BipartiteMatcher(int num_left, int num_right,
                                   std::span<const std::pair<int, int>> edges)
    : adj_(num_left),
      left_mate_(num_left, -1),
      right_mate_(num_right, -1),
      visit_(num_right, -1) {
  for (auto [l, r] : edges) adj_[l].push_back(r);
  // Cheap greedy start, then augment from every unmatched left vertex.
  for (int l = 0; l < num_left; ++l) {
    for (int r : adj_[l]) {
      if (right_mate_[r] < 0) {
        left_mate_[l] = r;
        right_mate_[r] = l;
        ++size_;
        break;
      }
    }
  }
  for (int l = 0; l < num_left; ++l) {
    if (left_mate_[l] < 0 && augment(l)) ++size_;
  }
}

bool BipartiteMatcher::augment(int root) {
  ++epoch_;
  // Iterative DFS over alternating paths; frames hold (left vertex, next
  // edge index) and the right vertex we came through.
  struct Frame {
    int left;
    std::size_t next;
    int via_right;
  };
  std::vector<Frame> stack{{root, 0, -1}};
  while (!stack.empty()) {
    Frame& f = stack.back();
    if (f.next == adj_[f.left].size()) {
      stack.pop_back();
      continue;
    }
    int r = adj_[f.left][f.next++];
    if (visit_[r] == epoch_) continue;
    visit_[r] = epoch_;
    if (right_mate_[r] < 0) {
      // Flip the path: each frame's left takes the right vertex chosen
      // from it.
      int free_right = r;
      for (auto it = stack.rbegin(); it != stack.rend(); ++it) {
        int l = it->left;
        int previous = left_mate_[l];
        left_mate_[l] = free_right;
        right_mate_[free_right] = l;
        free_right = previous;
      }
      return true;
    }
    stack.push_back({right_mate_[r], 0, r});
  }
  return false;
}

std::vector<std::pair<int, int>> BipartiteMatcher::pairs() const {
  std::vector<std::pair<int, int>> out;
  for (int l = 0; l < static_cast<int>(left_mate_.size()); ++l) {
    if (left_mate_[l] >= 0) out.emplace_back(l, left_mate_[l]);
  }
  return out;
}

std::pair<std::vector<char>, std::vector<char>>
BipartiteMatcher::max_independent_set() const {
  const int nl = static_cast<int>(left_mate_.size());
  const int nr = static_cast<int>(right_mate_.size());
  // Z: reachable from unmatched left vertices by alternating paths.
  std::vector<char> left_z(nl, 0);
  std::vector<char> right_z(nr, 0);
  std::vector<int> stack;
  for (int l = 0; l < nl; ++l) {
    if (left_mate_[l] < 0) {
      left_z[l] = 1;
      stack.push_back(l);
    }
  }
  while (!stack.empty()) {
    int l = stack.back();
    stack.pop_back();
    for (int r : adj_[l]) {
      if (right_z[r]) continue;
      right_z[r] = 1;
      int next = right_mate_[r];
      if (next >= 0 && !left_z[next]) {
        left_z[next] = 1;
        stack.push_back(next);
      }
    }
  }
  // Cover = (L \ Z) + (R n Z); independent set is its complement.
  std::vector<char> right_in(nr);
  for (int r = 0; r < nr; ++r) right_in[r] = !right_z[r];
  return {left_z, right_in};
}

std::vector<std::pair<int, int>> bipartite_max_matching(
    std::span<const int> left, std::span<const int> right,
    std::span<const std::pair<int, int>> edges) {
  std::map<int, int> left_index;
  std::map<int, int> right_index;
  for (int l : left) left_index.emplace(l, static_cast<int>(left_index.size()));
  for (int r : right) {
    right_index.emplace(r, static_cast<int>(right_index.size()));
  }
  std::vector<std::pair<int, int>> local;
  local.reserve(edges.size());
  for (auto [l, r] : edges) local.emplace_back(left_index.at(l), right_index.at(r));

  BipartiteMatcher matcher(static_cast<int>(left_index.size()),
                           static_cast<int>(right_index.size()), local);
  std::vector<int> left_label(left_index.size());
  std::vector<int> right_label(right_index.size());
  for (auto [label, i] : left_index) left_label[i] = label;
  for (auto [label, i] : right_index) right_label[i] = label;

  std::vector<std::pair<int, int>> out;
  for (auto [l, r] : matcher.pairs()) {
    out.emplace_back(left_label[l], right_label[r]);
  }
  return out;
}

}  // namespace filterless
