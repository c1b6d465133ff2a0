#include "filterless/coloring.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "filterless/clique.hpp"
#include "filterless/error.hpp"
#include "filterless/independence.hpp"
#include "filterless/matching.hpp"

namespace filterless {

std::string_view colour_type_name(ColourType t) {
  switch (t) {
    case ColourType::kMainlyConverging: return "converging";
    case ColourType::kMainlyDiverging: return "diverging";
    case ColourType::kUnimodal: return "unimodal";
  }
  return "?";
}

bool is_proper(const InterferenceDigraph& digraph, const Coloring& coloring) {
  if (static_cast<int>(coloring.colour.size()) != digraph.size()) return false;
  std::vector<char> seen(coloring.num_colours + 1, 0);
  for (int c : coloring.colour) {
    if (c < 1 || c > coloring.num_colours) return false;
    seen[c] = 1;
  }
  for (int c = 1; c <= coloring.num_colours; ++c) {
    if (!seen[c]) return false;
  }
  for (auto [i, j] : digraph.arcs()) {
    if (coloring.colour[i] == coloring.colour[j]) return false;
  }
  return true;
}

namespace {

std::string describe(RequestId id) { return "request " + std::to_string(id); }

// Chain-height colouring: requests keyed at v take the colours right after
// everything keyed at proper ancestors of v.
Coloring color_by_key(const RootedTree& view,
                      const std::vector<RequestId>& subset,
                      const std::vector<Vertex>& key) {
  const int n = view.num_vertices();
  std::vector<int> count(n, 0);
  for (Vertex k : key) ++count[k];
  std::vector<int> base(n, 0);
  for (Vertex v : view.preorder()) {
    if (v == view.root()) continue;
    Vertex p = view.parent(v);
    base[v] = base[p] + count[p];
  }
  Coloring out;
  out.colour.resize(subset.size());
  std::vector<int> used(n, 0);
  for (std::size_t k = 0; k < subset.size(); ++k) {
    Vertex v = key[k];
    out.colour[k] = base[v] + ++used[v];
    out.num_colours = std::max(out.num_colours, out.colour[k]);
  }
  return out;
}

Coloring color_straight(const RootedTree& view,
                        const std::vector<Request>& requests,
                        const std::vector<RequestId>& subset, PathClass cls) {
  std::vector<Vertex> key;
  key.reserve(subset.size());
  for (RequestId id : subset) {
    RequestGeometry g = classify(view, requests[id]);
    if (g.cls != cls) {
      bool conv = cls == PathClass::kConverging;
      throw Error(conv ? ErrorKind::kNotConverging : ErrorKind::kNotDiverging,
                  describe(id) + " is " + std::string(path_class_name(g.cls)));
    }
    key.push_back(cls == PathClass::kConverging ? g.target_prev
                                                : g.source_next);
  }
  return color_by_key(view, subset, key);
}

}  // namespace

Coloring color_converging(const RootedTree& view,
                          const std::vector<Request>& requests,
                          const std::vector<RequestId>& subset) {
  return color_straight(view, requests, subset, PathClass::kConverging);
}

Coloring color_diverging(const RootedTree& view,
                         const std::vector<Request>& requests,
                         const std::vector<RequestId>& subset) {
  return color_straight(view, requests, subset, PathClass::kDiverging);
}

Coloring color_unimodal(const RootedTree& view,
                        const std::vector<Request>& requests,
                        const std::vector<RequestId>& subset) {
  std::vector<RequestGeometry> geo;
  geo.reserve(subset.size());
  for (RequestId id : subset) {
    geo.push_back(classify(view, requests[id]));
    if (geo.back().cls != PathClass::kUnimodal) {
      throw Error(ErrorKind::kNotUnimodal,
                  describe(id) + " is " +
                      std::string(path_class_name(geo.back().cls)));
    }
  }
  // Positions into subset, grouped by middle.
  std::map<Vertex, std::vector<int>> by_middle;
  for (int k = 0; k < static_cast<int>(subset.size()); ++k) {
    by_middle[geo[k].middle].push_back(k);
  }

  Coloring out;
  out.colour.assign(subset.size(), 0);
  for (const auto& [middle, members] : by_middle) {
    std::vector<int> a;
    std::vector<int> b;
    for (int k : members) {
      (*geo[k].middle_prev < *geo[k].middle_next ? a : b).push_back(k);
    }
    // Non-interfering cross pairs: each endpoint related to the other's
    // opposite endpoint.
    std::vector<std::pair<int, int>> apart;
    for (int i = 0; i < static_cast<int>(a.size()); ++i) {
      for (int j = 0; j < static_cast<int>(b.size()); ++j) {
        const RequestGeometry& ga = geo[a[i]];
        const RequestGeometry& gb = geo[b[j]];
        if (view.related(ga.source, gb.target) &&
            view.related(gb.source, ga.target)) {
          apart.emplace_back(i, j);
        }
      }
    }
    BipartiteMatcher matcher(static_cast<int>(a.size()),
                             static_cast<int>(b.size()), apart);
    std::vector<int> mate(subset.size(), -1);
    for (auto [i, j] : matcher.pairs()) {
      mate[a[i]] = b[j];
      mate[b[j]] = a[i];
    }
    for (int k : members) {
      if (out.colour[k] != 0) continue;
      out.colour[k] = ++out.num_colours;
      if (mate[k] >= 0) out.colour[mate[k]] = out.num_colours;
    }
  }
  return out;
}

Coloring color_2approx(const Instance& inst, Vertex root) {
  RootedTree view(inst.tree(), root);
  std::vector<RequestGeometry> geo = classify_all(view, inst.requests());
  std::vector<RequestId> conv;
  std::vector<RequestId> div;
  std::vector<RequestId> uni;
  for (RequestId id = 0; id < inst.num_requests(); ++id) {
    switch (geo[id].cls) {
      case PathClass::kConverging: conv.push_back(id); break;
      case PathClass::kDiverging: div.push_back(id); break;
      case PathClass::kUnimodal: uni.push_back(id); break;
    }
  }
  Coloring out;
  out.colour.assign(inst.num_requests(), 0);
  auto append = [&](const std::vector<RequestId>& ids, const Coloring& block,
                    ColourType type) {
    for (std::size_t k = 0; k < ids.size(); ++k) {
      out.colour[ids[k]] = out.num_colours + block.colour[k];
    }
    out.num_colours += block.num_colours;
    out.tags.insert(out.tags.end(), block.num_colours, type);
  };
  append(conv, color_converging(view, inst.requests(), conv),
         ColourType::kMainlyConverging);
  append(div, color_diverging(view, inst.requests(), div),
         ColourType::kMainlyDiverging);
  append(uni, color_unimodal(view, inst.requests(), uni),
         ColourType::kUnimodal);
  return out;
}

namespace {

// Arcs of a vertex path, indexed by position.
std::map<Arc, int> arc_positions(const std::vector<Vertex>& path) {
  std::map<Arc, int> out;
  for (std::size_t k = 0; k + 1 < path.size(); ++k) {
    out.emplace(Arc{path[k], path[k + 1]}, static_cast<int>(k));
  }
  return out;
}

// Smallest position of an emission or reception arc of the request on the
// path, or -1 if the path does not meet it.
int first_meeting(const std::map<Arc, int>& positions,
                  const RequestGeometry& g) {
  int best = -1;
  for (const Arc& arc : {g.emission(), g.reception()}) {
    auto it = positions.find(arc);
    if (it != positions.end() && (best < 0 || it->second < best)) {
      best = it->second;
    }
  }
  return best;
}

int count_met(const std::vector<Vertex>& path,
              const std::vector<RequestGeometry>& geo) {
  auto positions = arc_positions(path);
  int met = 0;
  for (const RequestGeometry& g : geo) met += first_meeting(positions, g) >= 0;
  return met;
}

}  // namespace

int straight_clique_sum(const Instance& inst, Vertex root) {
  RootedTree view(inst.tree(), root);
  std::vector<RequestGeometry> geo = classify_all(view, inst.requests());
  std::vector<RequestId> conv;
  std::vector<RequestId> div;
  for (RequestId id = 0; id < inst.num_requests(); ++id) {
    if (geo[id].cls == PathClass::kConverging) conv.push_back(id);
    if (geo[id].cls == PathClass::kDiverging) div.push_back(id);
  }
  return color_converging(view, inst.requests(), conv).num_colours +
         color_diverging(view, inst.requests(), div).num_colours;
}

RootBound chi_bound_certificate(const Instance& inst) {
  if (inst.num_requests() == 0) {
    throw Error(ErrorKind::kEmptyInstance, "no requests to bound");
  }
  const Tree& tree = inst.tree();
  RootedTree view0(tree, 0);
  for (RequestId id = 0; id < inst.num_requests(); ++id) {
    if (request_length(view0, inst.requests()[id]) < 2) {
      throw Error(ErrorKind::kNotNicePair,
                  describe(id) + " has length 1; subdivide first");
    }
  }
  std::vector<RequestGeometry> geo = classify_all(view0, inst.requests());
  const std::vector<Vertex> leaf = leaves(tree);

  // Q: a leaf-to-leaf directed path meeting the most requests.
  std::vector<Vertex> q;
  int m = -1;
  for (Vertex a : leaf) {
    for (Vertex b : leaf) {
      if (a == b) continue;
      std::vector<Vertex> path = view0.path(a, b);
      int met = count_met(path, geo);
      if (met > m) {
        m = met;
        q = std::move(path);
      }
    }
  }
  // Q': a path into q0 meeting the most requests, listed from q0 outwards.
  const Vertex q0 = q.front();
  std::vector<Vertex> q2;
  int p = -1;
  for (Vertex a : leaf) {
    if (a == q0) continue;
    std::vector<Vertex> path = view0.path(a, q0);
    int met = count_met(path, geo);
    if (met > p) {
      p = met;
      q2 = std::move(path);
    }
  }
  std::vector<Vertex> q2_out(q2.rbegin(), q2.rend());
  std::size_t common = 0;
  while (common + 1 < q.size() && common + 1 < q2_out.size() &&
         q[common + 1] == q2_out[common + 1]) {
    ++common;
  }

  const int omega = static_cast<int>(max_clique(inst).members.size());
  // m+_j: met only by Q[q_j, q_l], i.e. every meeting arc at position >= j.
  // p-_j: met only by Q'[q'_l', q_j], i.e. every meeting arc of the reversed
  // path at position >= j.
  auto q_pos = arc_positions(q);
  std::map<Arc, int> q2_pos;
  for (std::size_t k = 0; k + 1 < q2_out.size(); ++k) {
    q2_pos.emplace(Arc{q2_out[k + 1], q2_out[k]}, static_cast<int>(k));
  }
  std::vector<int> q_first;
  std::vector<int> q2_first;
  for (const RequestGeometry& g : geo) {
    q_first.push_back(first_meeting(q_pos, g));
    q2_first.push_back(first_meeting(q2_pos, g));
  }
  RootBound out;
  out.omega = omega;
  for (std::size_t j = 0; j <= common; ++j) {
    int m_plus = 0;
    int p_minus = 0;
    for (std::size_t id = 0; id < geo.size(); ++id) {
      m_plus += q_first[id] >= static_cast<int>(j);
      p_minus += q2_first[id] >= static_cast<int>(j);
    }
    if (m_plus + p_minus <= omega) {
      out.root = q[j];
      break;
    }
  }
  if (out.root == kNoVertex) {
    // A request leaving Q' onto Q is tallied on both sides, so the bound can
    // miss at every index; the end of the common prefix is tried instead.
    out.root = q[common];
    out.source = RootBoundSource::kCommonEnd;
  }
  out.bound = straight_clique_sum(inst, out.root);
  if (out.bound <= omega) return out;
  for (Vertex x = 0; x < tree.num_vertices(); ++x) {
    int bound = straight_clique_sum(inst, x);
    if (bound <= omega) {
      out.root = x;
      out.bound = bound;
      out.source = RootBoundSource::kScan;
      return out;
    }
  }
  throw Error(ErrorKind::kInternalContradiction,
              "no root gives omega+ + omega- <= omega = " +
                  std::to_string(omega));
}

Vertex chi_bound_root(const Instance& inst) {
  return chi_bound_certificate(inst).root;
}

Coloring color_2omega(const Instance& inst) {
  if (inst.num_requests() == 0) return {};
  auto [nice, mapping] = subdivide_nice(inst);
  return color_2approx(nice, chi_bound_root(nice));
}

Coloring greedy_mis_color(const Instance& inst) {
  Coloring out;
  out.colour.assign(inst.num_requests(), 0);
  std::vector<RequestId> residual(inst.num_requests());
  for (RequestId id = 0; id < inst.num_requests(); ++id) residual[id] = id;
  while (!residual.empty()) {
    IndependentSet set = max_independent_set(inst.subset(residual));
    ++out.num_colours;
    for (RequestId local : set.members) {
      out.colour[residual[local]] = out.num_colours;
    }
    std::vector<RequestId> rest;
    for (RequestId id : residual) {
      if (out.colour[id] == 0) rest.push_back(id);
    }
    residual = std::move(rest);
  }
  return out;
}

}  // namespace filterless
