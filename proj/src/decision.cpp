#include "filterless/decision.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>

#include "filterless/error.hpp"
#include "filterless/matching.hpp"

namespace filterless {

namespace {

// Relabels the used colours to 1..c preserving order; returns c.
int compact(std::vector<int>& colour) {
  std::vector<int> used(colour.begin(), colour.end());
  std::sort(used.begin(), used.end());
  used.erase(std::unique(used.begin(), used.end()), used.end());
  for (int& c : colour) {
    c = static_cast<int>(std::lower_bound(used.begin(), used.end(), c) -
                         used.begin()) +
        1;
  }
  return static_cast<int>(used.size());
}

Coloring make_coloring(std::vector<int> colour) {
  Coloring out;
  out.num_colours = compact(colour);
  out.colour = std::move(colour);
  return out;
}

// Strongly connected components of the implication graph, Tarjan's order
// (components numbered sinks first).
std::vector<int> scc(const std::vector<std::vector<int>>& adj) {
  const int n = static_cast<int>(adj.size());
  std::vector<int> index(n, -1);
  std::vector<int> low(n, 0);
  std::vector<int> comp(n, -1);
  std::vector<char> on_stack(n, 0);
  std::vector<int> stack;
  std::vector<std::pair<int, std::size_t>> call;
  int counter = 0;
  int num_comps = 0;
  for (int start = 0; start < n; ++start) {
    if (index[start] >= 0) continue;
    call.emplace_back(start, 0);
    while (!call.empty()) {
      auto& [v, next] = call.back();
      if (next == 0 && index[v] < 0) {
        index[v] = low[v] = counter++;
        stack.push_back(v);
        on_stack[v] = 1;
      }
      if (next < adj[v].size()) {
        int w = adj[v][next++];
        if (index[w] < 0) {
          call.emplace_back(w, 0);
        } else if (on_stack[w]) {
          low[v] = std::min(low[v], index[w]);
        }
        continue;
      }
      if (low[v] == index[v]) {
        int w;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[w] = 0;
          comp[w] = num_comps;
        } while (w != v);
        ++num_comps;
      }
      int done = v;
      call.pop_back();
      if (!call.empty()) {
        int parent = call.back().first;
        low[parent] = std::min(low[parent], low[done]);
      }
    }
  }
  return comp;
}

}  // namespace

std::optional<std::vector<int>> two_list_color(const InterferenceDigraph& g,
                                               const ListAssignment& lists) {
  const int n = g.size();
  if (static_cast<int>(lists.size()) != n) {
    throw Error(ErrorKind::kBadParams, "one list per vertex expected");
  }
  for (int v = 0; v < n; ++v) {
    if (lists[v].size() > 2) {
      throw Error(ErrorKind::kBadParams,
                  "list of vertex " + std::to_string(v) + " has " +
                      std::to_string(lists[v].size()) + " colours");
    }
    if (lists[v].empty()) return std::nullopt;
  }
  // Literal 2v: v takes lists[v][0]; literal 2v+1: v takes lists[v][1].
  std::vector<std::vector<int>> adj(2 * n);
  auto clause = [&](int a, int b) {  // a or b
    adj[a ^ 1].push_back(b);
    adj[b ^ 1].push_back(a);
  };
  for (int v = 0; v < n; ++v) {
    if (lists[v].size() == 1) clause(2 * v, 2 * v);
  }
  for (int u = 0; u < n; ++u) {
    for (int v : g.neighbours(u)) {
      if (v < u) continue;
      for (std::size_t a = 0; a < lists[u].size(); ++a) {
        for (std::size_t b = 0; b < lists[v].size(); ++b) {
          if (lists[u][a] != lists[v][b]) continue;
          clause((2 * u + static_cast<int>(a)) ^ 1,
                 (2 * v + static_cast<int>(b)) ^ 1);
        }
      }
    }
  }
  std::vector<int> comp = scc(adj);
  std::vector<int> out(n);
  for (int v = 0; v < n; ++v) {
    if (comp[2 * v] == comp[2 * v + 1]) return std::nullopt;
    out[v] = comp[2 * v] < comp[2 * v + 1] ? lists[v][0] : lists[v][1];
  }
  return out;
}

DominationResult dominating_or_comparability(const Instance& inst) {
  if (inst.num_requests() == 0) {
    throw Error(ErrorKind::kEmptyInstance, "no requests");
  }
  if (!is_reduced(inst)) {
    throw Error(ErrorKind::kReductionRequired,
                "some edge carries no emission or reception arc");
  }
  const Tree& tree = inst.tree();
  const Vertex s1 = leaves(tree).front();
  RequestId r1 = -1;
  for (RequestId id = 0; id < inst.num_requests() && r1 < 0; ++id) {
    const Request& r = inst.requests()[id];
    if (r.source == s1 || r.target == s1) r1 = id;
  }
  const bool use_converse = inst.requests()[r1].target == s1;
  const Instance work = use_converse ? inst.converse() : inst;

  RootedTree view(tree, s1);
  std::vector<RequestGeometry> geo = classify_all(view, work.requests());
  // Deepest head of an arc directed away from s1; such arcs end at targets.
  Vertex t2 = kNoVertex;
  for (const RequestGeometry& g : geo) {
    if (g.cls == PathClass::kConverging) continue;
    if (t2 == kNoVertex || view.depth(g.target) > view.depth(t2) ||
        (view.depth(g.target) == view.depth(t2) && g.target < t2)) {
      t2 = g.target;
    }
  }
  RequestId r2 = -1;
  for (RequestId id = 0; id < work.num_requests() && r2 < 0; ++id) {
    if (geo[id].cls != PathClass::kConverging && geo[id].target == t2) r2 = id;
  }

  auto dominating = [&](RequestId r) -> DominationResult {
    std::vector<RequestId> set{r1, r2, r};
    std::sort(set.begin(), set.end());
    set.erase(std::unique(set.begin(), set.end()), set.end());
    InterferenceDigraph g = build_digraph(inst);
    for (RequestId v = 0; v < inst.num_requests(); ++v) {
      bool covered = std::any_of(set.begin(), set.end(), [&](RequestId u) {
        return u == v || g.adjacent(u, v);
      });
      if (!covered) {
        throw Error(ErrorKind::kInternalContradiction,
                    "request " + std::to_string(v) +
                        " is not dominated by the constructed set");
      }
    }
    return {set, kNoVertex, PathClass::kConverging};
  };

  // A request using an arc of the path t2 -> s1.
  for (RequestId id = 0; id < work.num_requests(); ++id) {
    Vertex w = view.lca(geo[id].source, t2);
    if (w != s1 && !view.is_ancestor(w, geo[id].target)) return dominating(id);
  }
  RootedTree at_t2(tree, t2);
  std::vector<RequestGeometry> geo2 = classify_all(at_t2, work.requests());
  for (RequestId id = 0; id < work.num_requests(); ++id) {
    if (geo2[id].cls != PathClass::kConverging) return dominating(id);
  }
  return {{},
          t2,
          use_converse ? PathClass::kDiverging : PathClass::kConverging};
}

std::optional<Coloring> decide_3col(const Instance& inst) {
  if (inst.num_requests() == 0) return Coloring{};
  auto [reduced, mapping] = reduce_instance(inst);
  DominationResult dom = dominating_or_comparability(reduced);

  if (dom.dominating.empty()) {
    RootedTree view(reduced.tree(), dom.comparability_root);
    std::vector<RequestId> all(reduced.num_requests());
    for (RequestId id = 0; id < reduced.num_requests(); ++id) all[id] = id;
    Coloring c = dom.uniform_class == PathClass::kConverging
                     ? color_converging(view, reduced.requests(), all)
                     : color_diverging(view, reduced.requests(), all);
    if (c.num_colours > 3) return std::nullopt;
    return c;
  }

  InterferenceDigraph g = build_digraph(reduced);
  const std::vector<RequestId>& s = dom.dominating;
  const int m = reduced.num_requests();
  std::vector<int> pre(s.size(), 1);
  while (true) {
    bool proper = true;
    for (std::size_t a = 0; a < s.size(); ++a) {
      for (std::size_t b = a + 1; b < s.size(); ++b) {
        if (pre[a] == pre[b] && g.adjacent(s[a], s[b])) proper = false;
      }
    }
    if (proper) {
      ListAssignment lists(m, {1, 2, 3});
      for (std::size_t a = 0; a < s.size(); ++a) {
        lists[s[a]] = {pre[a]};
        for (int v : g.neighbours(s[a])) {
          auto& list = lists[v];
          if (std::find(s.begin(), s.end(), v) != s.end()) continue;
          list.erase(std::remove(list.begin(), list.end(), pre[a]),
                     list.end());
        }
      }
      if (auto colour = two_list_color(g, lists)) {
        return make_coloring(std::move(*colour));
      }
    }
    // Next assignment in lexicographic order.
    std::size_t pos = s.size();
    while (pos > 0 && pre[pos - 1] == 3) pre[--pos] = 1;
    if (pos == 0) break;
    ++pre[pos - 1];
  }
  return std::nullopt;
}

namespace {

class KColSearch {
 public:
  KColSearch(const Instance& inst, int k, Vertex root)
      : inst_(inst),
        k_(k),
        view_(inst.tree(), root),
        geo_(classify_all(view_, inst.requests())),
        g_(build_digraph(inst)) {}

  std::optional<Coloring> run(ExceptionalChoice* choice);

 private:
  bool preprocess();
  std::vector<std::vector<RequestId>> branch_subsets(bool converging) const;
  bool is_clique(const std::vector<RequestId>& ids) const;
  std::optional<Coloring> extend(const std::vector<RequestId>& q_minus,
                                 const std::vector<RequestId>& q_plus,
                                 const std::vector<std::pair<int, int>>& pairs);

  const Instance& inst_;
  const int k_;
  RootedTree view_;
  std::vector<RequestGeometry> geo_;
  InterferenceDigraph g_;
  std::vector<RequestId> conv_;  // prefix order of t-
  std::vector<RequestId> div_;   // prefix order of s+
  std::vector<RequestId> uni_;
  std::vector<Vertex> leaves_;
  std::vector<std::vector<RequestId>> ancestor_;
};

bool KColSearch::preprocess() {
  const int m = inst_.num_requests();
  for (RequestId id = 0; id < m; ++id) {
    switch (geo_[id].cls) {
      case PathClass::kConverging: conv_.push_back(id); break;
      case PathClass::kDiverging: div_.push_back(id); break;
      case PathClass::kUnimodal: uni_.push_back(id); break;
    }
  }
  if (static_cast<int>(uni_.size()) > 2 * k_) return false;

  for (Vertex v = 0; v < view_.num_vertices(); ++v) {
    if (v != view_.root() && view_.children(v).empty()) leaves_.push_back(v);
  }
  for (Vertex leaf : leaves_) {
    int in = 0;
    int out = 0;
    for (const RequestGeometry& g : geo_) {
      int mid = view_.depth(g.middle);
      in += view_.depth(view_.lca(g.source, leaf)) > mid;
      out += view_.depth(view_.lca(g.target, leaf)) > mid;
    }
    if (in > k_ || out > k_) return false;
  }

  auto by_tin = [&](auto key) {
    return [this, key](RequestId a, RequestId b) {
      return std::pair{view_.tin(key(a)), a} < std::pair{view_.tin(key(b)), b};
    };
  };
  std::sort(conv_.begin(), conv_.end(),
            by_tin([&](RequestId i) { return geo_[i].target_prev; }));
  std::sort(div_.begin(), div_.end(),
            by_tin([&](RequestId i) { return geo_[i].source_next; }));
  ancestor_.assign(m, {});
  for (const auto* order : {&conv_, &div_}) {
    for (std::size_t i = 0; i < order->size(); ++i) {
      for (std::size_t j = 0; j < i; ++j) {
        if (g_.adjacent((*order)[i], (*order)[j])) {
          ancestor_[(*order)[i]].push_back((*order)[j]);
        }
      }
    }
  }
  return true;
}

// Subsets of straight requests whose reception (converging) or emission
// (diverging) arc lies on one branch, branches by leaf, subsets in
// binary-counter order, duplicates dropped.
std::vector<std::vector<RequestId>> KColSearch::branch_subsets(
    bool converging) const {
  std::vector<std::vector<RequestId>> out;
  std::set<std::vector<RequestId>> seen;
  const auto& pool = converging ? conv_ : div_;
  for (Vertex leaf : leaves_) {
    std::vector<RequestId> on_branch;
    for (RequestId id : pool) {
      Vertex key = converging ? geo_[id].target_prev : geo_[id].source_next;
      if (view_.is_ancestor(key, leaf)) on_branch.push_back(id);
    }
    std::sort(on_branch.begin(), on_branch.end());
    const std::size_t size = on_branch.size();
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << size); ++mask) {
      std::vector<RequestId> subset;
      for (std::size_t b = 0; b < size; ++b) {
        if (mask >> b & 1) subset.push_back(on_branch[b]);
      }
      if (seen.insert(subset).second) out.push_back(std::move(subset));
    }
  }
  if (out.empty()) out.push_back({});
  return out;
}

bool KColSearch::is_clique(const std::vector<RequestId>& ids) const {
  for (std::size_t a = 0; a < ids.size(); ++a) {
    for (std::size_t b = a + 1; b < ids.size(); ++b) {
      if (!g_.adjacent(ids[a], ids[b])) return false;
    }
  }
  return true;
}

std::optional<Coloring> KColSearch::extend(
    const std::vector<RequestId>& q_minus, const std::vector<RequestId>& q_plus,
    const std::vector<std::pair<int, int>>& pairs) {
  const int m = inst_.num_requests();
  std::vector<int> colour(m, 0);
  std::vector<char> exceptional(m, 0);
  const int t = static_cast<int>(q_minus.size());
  const int t2 = static_cast<int>(q_plus.size());

  auto postorder = [&](std::vector<RequestId> ids, bool by_source) {
    std::sort(ids.begin(), ids.end(), [&](RequestId a, RequestId b) {
      Vertex va = by_source ? geo_[a].source : geo_[a].target;
      Vertex vb = by_source ? geo_[b].source : geo_[b].target;
      return std::pair{view_.tout(va), a} < std::pair{view_.tout(vb), b};
    });
    return ids;
  };
  std::vector<RequestId> minus = postorder(q_minus, true);
  std::vector<RequestId> plus = postorder(q_plus, false);
  for (int i = 0; i < t; ++i) {
    colour[minus[i]] = i + 1;
    exceptional[minus[i]] = 1;
  }
  for (int i = 0; i < t2; ++i) {
    colour[plus[i]] = t + i + 1;
    exceptional[plus[i]] = 1;
  }
  int next = t + t2;
  for (auto [a, b] : pairs) {
    colour[a] = colour[b] = ++next;
  }

  auto first_free = [&](RequestId r, int lo, int hi) {
    std::vector<char> taken(hi - lo + 1, 0);
    for (int v : g_.neighbours(r)) {
      if (colour[v] >= lo && colour[v] <= hi) taken[colour[v] - lo] = 1;
    }
    for (int c = lo; c <= hi; ++c) {
      if (!taken[c - lo]) return c;
    }
    return 0;
  };
  for (RequestId r : div_) {
    if (!exceptional[r] && t > 0) colour[r] = first_free(r, 1, t);
  }
  for (RequestId r : conv_) {
    if (!exceptional[r] && t2 > 0) colour[r] = first_free(r, t + 1, t + t2);
  }

  // Remaining straight requests: a fresh block each, greedy in prefix order
  // against earlier interfering requests of the same class.
  for (const auto* order : {&div_, &conv_}) {
    const int base = next;
    for (RequestId r : *order) {
      if (colour[r] != 0) continue;
      std::vector<char> taken(k_ + 2, 0);
      for (RequestId a : ancestor_[r]) {
        int c = colour[a] - base;
        if (c >= 1 && c <= k_ + 1) taken[c] = 1;
      }
      int c = 1;
      while (taken[c]) ++c;
      colour[r] = base + c;
      next = std::max(next, base + c);
      if (next > k_) return std::nullopt;
    }
  }
  if (next > k_) return std::nullopt;

  Coloring out;
  out.colour = std::move(colour);
  out.num_colours = next;
  out.tags.assign(next, ColourType::kMainlyConverging);
  for (int c = 1; c <= next; ++c) {
    ColourType type;
    if (c <= t) {
      type = ColourType::kMainlyDiverging;
    } else if (c <= t + t2) {
      type = ColourType::kMainlyConverging;
    } else if (c <= t + t2 + static_cast<int>(pairs.size())) {
      type = ColourType::kUnimodal;
    } else {
      // Fresh blocks: look at any request of the colour.
      type = ColourType::kMainlyConverging;
      for (RequestId r : div_) {
        if (out.colour[r] == c) type = ColourType::kMainlyDiverging;
      }
    }
    out.tags[c - 1] = type;
  }
  return out;
}

std::optional<Coloring> KColSearch::run(ExceptionalChoice* choice) {
  if (!preprocess()) return std::nullopt;
  const auto conv_options = branch_subsets(true);
  const auto div_options = branch_subsets(false);

  const std::size_t u = uni_.size();
  std::vector<int> where(u, 0);  // 0 neither, 1 Q-, 2 Q+
  while (true) {
    std::vector<RequestId> uni_minus;
    std::vector<RequestId> uni_plus;
    std::vector<RequestId> a_side;
    std::vector<RequestId> b_side;
    for (std::size_t i = 0; i < u; ++i) {
      RequestId r = uni_[i];
      if (where[i] == 1) {
        uni_minus.push_back(r);
      } else if (where[i] == 2) {
        uni_plus.push_back(r);
      } else {
        (*geo_[r].middle_prev < *geo_[r].middle_next ? a_side : b_side)
            .push_back(r);
      }
    }
    const int rest = static_cast<int>(a_side.size() + b_side.size());
    const int base_count =
        static_cast<int>(uni_minus.size() + uni_plus.size()) + rest / 2;
    if (rest % 2 == 0 && base_count <= k_ && is_clique(uni_minus) &&
        is_clique(uni_plus)) {
      std::vector<std::pair<int, int>> apart;
      for (int i = 0; i < static_cast<int>(a_side.size()); ++i) {
        for (int j = 0; j < static_cast<int>(b_side.size()); ++j) {
          if (!g_.adjacent(a_side[i], b_side[j])) apart.emplace_back(i, j);
        }
      }
      BipartiteMatcher matcher(static_cast<int>(a_side.size()),
                               static_cast<int>(b_side.size()), apart);
      if (2 * matcher.size() == rest) {
        std::vector<std::pair<int, int>> pairs;
        for (auto [i, j] : matcher.pairs()) {
          pairs.emplace_back(a_side[i], b_side[j]);
        }
        for (const auto& conv : conv_options) {
          if (base_count + static_cast<int>(conv.size()) > k_) continue;
          std::vector<RequestId> q_minus = uni_minus;
          q_minus.insert(q_minus.end(), conv.begin(), conv.end());
          if (!is_clique(q_minus)) continue;
          for (const auto& div : div_options) {
            if (base_count + static_cast<int>(conv.size() + div.size()) > k_) {
              continue;
            }
            std::vector<RequestId> q_plus = uni_plus;
            q_plus.insert(q_plus.end(), div.begin(), div.end());
            if (!is_clique(q_plus)) continue;
            if (auto found = extend(q_minus, q_plus, pairs)) {
              if (!is_proper(g_, *found)) {
                throw Error(ErrorKind::kInternalContradiction,
                            "k-colouring extension is not proper");
              }
              if (choice) {
                std::sort(q_minus.begin(), q_minus.end());
                std::sort(q_plus.begin(), q_plus.end());
                *choice = {q_minus, q_plus, pairs};
              }
              return found;
            }
          }
        }
      }
    }
    std::size_t pos = 0;
    while (pos < u && where[pos] == 2) where[pos++] = 0;
    if (pos == u) break;
    ++where[pos];
  }
  return std::nullopt;
}

}  // namespace

std::optional<Coloring> decide_kcol(const Instance& inst, int k, Vertex root,
                                    ExceptionalChoice* choice) {
  if (k < 4) {
    throw Error(ErrorKind::kBudgetTooSmall,
                "k = " + std::to_string(k) + "; use decide_3col below 4");
  }
  if (inst.num_requests() == 0) return Coloring{};
  if (!inst.tree().contains(root)) {
    throw Error(ErrorKind::kVertexOutOfRange,
                "root " + std::to_string(root) + " not in the tree");
  }
  KColSearch search(inst, k, root);
  return search.run(choice);
}

std::optional<Coloring> decide(const Instance& inst, int k, Vertex root) {
  const int m = inst.num_requests();
  if (m == 0) return Coloring{};
  if (k <= 0) return std::nullopt;
  if (k >= 4) return decide_kcol(inst, k, root);
  if (k == 3) return decide_3col(inst);

  InterferenceDigraph g = build_digraph(inst);
  if (k == 1) {
    if (g.num_arcs() > 0) return std::nullopt;
    return make_coloring(std::vector<int>(m, 1));
  }
  std::vector<int> colour(m, 0);
  std::vector<int> queue;
  for (int start = 0; start < m; ++start) {
    if (colour[start] != 0) continue;
    colour[start] = 1;
    queue.assign(1, start);
    for (std::size_t head = 0; head < queue.size(); ++head) {
      int v = queue[head];
      for (int w : g.neighbours(v)) {
        if (colour[w] == 0) {
          colour[w] = 3 - colour[v];
          queue.push_back(w);
        } else if (colour[w] == colour[v]) {
          return std::nullopt;
        }
      }
    }
  }
  return make_coloring(std::move(colour));
}

}  // namespace filterless
