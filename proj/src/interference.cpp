#include "filterless/interference.hpp"

#include <algorithm>

namespace filterless {

InterferenceDigraph::InterferenceDigraph(int num_requests,
                                         std::vector<std::pair<int, int>> arcs)
    : out_(num_requests), und_(num_requests) {
  std::sort(arcs.begin(), arcs.end());
  arcs.erase(std::unique(arcs.begin(), arcs.end()), arcs.end());
  for (auto [i, j] : arcs) {
    if (i == j) continue;
    out_[i].push_back(j);
    und_[i].push_back(j);
    und_[j].push_back(i);
    ++num_arcs_;
  }
  for (auto& list : und_) {
    std::sort(list.begin(), list.end());
    list.erase(std::unique(list.begin(), list.end()), list.end());
  }
  if (num_requests <= kDenseThreshold) {
    words_per_row_ = (num_requests + 63) / 64;
    dense_.assign(static_cast<std::size_t>(words_per_row_) * num_requests, 0);
    for (int i = 0; i < num_requests; ++i) {
      for (int j : out_[i]) {
        dense_[static_cast<std::size_t>(i) * words_per_row_ + j / 64] |=
            std::uint64_t{1} << (j % 64);
      }
    }
  }
}

bool InterferenceDigraph::has_arc(int i, int j) const {
  if (!dense_.empty()) {
    return (dense_[static_cast<std::size_t>(i) * words_per_row_ + j / 64] >>
            (j % 64)) & 1;
  }
  const auto& list = out_[i];
  return std::binary_search(list.begin(), list.end(), j);
}

std::vector<std::pair<int, int>> InterferenceDigraph::arcs() const {
  std::vector<std::pair<int, int>> out;
  out.reserve(num_arcs_);
  for (int i = 0; i < size(); ++i) {
    for (int j : out_[i]) out.emplace_back(i, j);
  }
  return out;
}

InterferenceDigraph InterferenceDigraph::induced(
    const std::vector<int>& ids) const {
  std::vector<int> local(size(), -1);
  for (std::size_t k = 0; k < ids.size(); ++k) {
    local[ids[k]] = static_cast<int>(k);
  }
  std::vector<std::pair<int, int>> sub;
  for (std::size_t k = 0; k < ids.size(); ++k) {
    for (int j : out_[ids[k]]) {
      if (local[j] >= 0) sub.emplace_back(static_cast<int>(k), local[j]);
    }
  }
  return InterferenceDigraph(static_cast<int>(ids.size()), std::move(sub));
}

bool interferes_on(const Tree& tree, const Request& r, const Request& r2) {
  if (r.source == r2.target) return false;
  std::vector<Vertex> own = directed_path(tree, r.source, r.target);
  std::vector<Vertex> other = directed_path(tree, r2.source, r2.target);
  std::vector<Vertex> between = directed_path(tree, r.source, r2.target);
  const std::size_t len = between.size();
  return between[1] == own[1] && between[len - 2] == other[other.size() - 2];
}

std::pair<bool, bool> interferes_fast(const RootedTree& view,
                                      const RequestGeometry& g,
                                      const RequestGeometry& g2) {
  using enum PathClass;
  auto anc = [&](Vertex x, Vertex y) { return view.is_ancestor(x, y); };
  auto rel = [&](Vertex x, Vertex y) { return view.related(x, y); };

  // on(a, b): a interferes on b, specialised to the class pair of (a, b).
  auto on = [&](const RequestGeometry& a, const RequestGeometry& b) -> bool {
    switch (a.cls) {
      case kConverging:
        switch (b.cls) {
          case kConverging:
            return anc(b.target_prev, a.source);
          case kDiverging:
          case kUnimodal:
            return !rel(a.source, b.target);
        }
        break;
      case kDiverging:
        switch (b.cls) {
          case kConverging:
            // A diverging first arc cannot be followed by a converging last
            // arc on one directed path.
            return false;
          case kDiverging:
            return anc(a.source_next, b.target);
          case kUnimodal:
            return anc(a.source_next, b.target) && !anc(b.target, a.source);
        }
        break;
      case kUnimodal:
        switch (b.cls) {
          case kConverging:
            return anc(b.target_prev, a.source) && !anc(a.source, b.target);
          case kDiverging:
          case kUnimodal:
            return !rel(a.source, b.target);
        }
        break;
    }
    return false;
  };
  return {on(g, g2), on(g2, g)};
}

bool interfere_by_cases(const RootedTree& view, const RequestGeometry& g,
                        const RequestGeometry& g2) {
  using enum PathClass;
  auto anc = [&](Vertex x, Vertex y) { return view.is_ancestor(x, y); };
  auto rel = [&](Vertex x, Vertex y) { return view.related(x, y); };
  const RequestGeometry* a = &g;
  const RequestGeometry* b = &g2;
  // Order the pair unimodal, converging, diverging.
  auto rank = [](PathClass c) {
    return c == kUnimodal ? 0 : c == kConverging ? 1 : 2;
  };
  if (rank(a->cls) > rank(b->cls)) std::swap(a, b);

  if (a->cls == kConverging && b->cls == kConverging) {
    return rel(a->target_prev, b->target_prev);
  }
  if (a->cls == kDiverging && b->cls == kDiverging) {
    return rel(a->source_next, b->source_next);
  }
  if (a->cls == kConverging && b->cls == kDiverging) {
    return !rel(a->source, b->target);
  }
  if (a->cls == kUnimodal && b->cls == kUnimodal) {
    bool apart = a->middle == b->middle && rel(a->source, b->target) &&
                 rel(b->source, a->target);
    return !apart;
  }
  if (a->cls == kUnimodal && b->cls == kConverging) {
    bool apart = anc(a->middle, b->target) && rel(a->target, b->source);
    return !apart;
  }
  // unimodal / diverging
  bool apart = anc(a->middle, b->source) && rel(a->source, b->target);
  return !apart;
}

InterferenceDigraph build_digraph(const Instance& inst) {
  const int n = inst.num_vertices();
  const int m = inst.num_requests();
  if (m == 0) return InterferenceDigraph(0, {});
  RootedTree view(inst.tree(), 0);
  std::vector<RequestGeometry> geo = classify_all(view, inst.requests());

  std::vector<std::vector<int>> by_target(n);
  for (int j = 0; j < m; ++j) by_target[geo[j].target].push_back(j);

  const Tree& tree = inst.tree();
  std::vector<Vertex> pred(n, kNoVertex);
  std::vector<Vertex> queue;
  queue.reserve(n);
  std::vector<std::pair<int, int>> arcs;

  for (int i = 0; i < m; ++i) {
    const Vertex s = geo[i].source;
    const Vertex first = geo[i].source_next;
    // Out-tree reachable from the second vertex once the emission edge is
    // removed.
    queue.clear();
    queue.push_back(first);
    pred[first] = s;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      Vertex u = queue[head];
      for (int j : by_target[u]) {
        if (j != i && pred[u] == geo[j].target_prev) arcs.emplace_back(i, j);
      }
      for (Vertex w : tree.neighbours(u)) {
        if (w == pred[u] || w == s) continue;
        pred[w] = u;
        queue.push_back(w);
      }
    }
  }
  return InterferenceDigraph(m, std::move(arcs));
}

}  // namespace filterless
