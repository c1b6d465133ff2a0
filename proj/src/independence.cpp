#include "filterless/independence.hpp"

#include <algorithm>
#include <map>

#include "filterless/detail/range_query.hpp"
#include "filterless/error.hpp"

namespace filterless {

std::string_view independent_set_source_name(IndependentSetSource s) {
  switch (s) {
    case IndependentSetSource::kDiverging: return "diverging";
    case IndependentSetSource::kDivergingExtended: return "diverging+1";
    case IndependentSetSource::kConverging: return "converging";
    case IndependentSetSource::kConvergingExtended: return "converging+1";
    case IndependentSetSource::kPair: return "pair";
    case IndependentSetSource::kSingle: return "single";
  }
  return "?";
}

namespace {

using detail::KeyedInterval;
using detail::Point2;
using detail::RangedPoint;
using detail::RangeTree2D;

using IdPair = std::pair<RequestId, RequestId>;

IdPair ordered(int a, int b) { return {std::min(a, b), std::max(a, b)}; }

// For requests whose key vertices are given, returns one request (the lowest
// index) per key vertex that has no other key vertex strictly below it.
// These keys are pairwise unrelated and there are as many as the largest
// antichain of keys.
std::vector<RequestId> descendant_free(const RootedTree& view,
                                       const std::vector<RequestId>& ids,
                                       const std::vector<Vertex>& key) {
  const int n = view.num_vertices();
  std::vector<RequestId> first(n, -1);
  for (RequestId id : ids) {
    Vertex k = key[id];
    if (first[k] < 0 || id < first[k]) first[k] = id;
  }
  std::vector<char> below(n, 0);
  const auto& pre = view.preorder();
  for (auto it = pre.rbegin(); it != pre.rend(); ++it) {
    Vertex v = *it;
    if (v == view.root()) continue;
    if (first[v] >= 0 || below[v]) below[view.parent(v)] = 1;
  }
  std::vector<RequestId> out;
  for (Vertex v = 0; v < n; ++v) {
    if (first[v] >= 0 && !below[v]) out.push_back(first[v]);
  }
  std::sort(out.begin(), out.end());
  return out;
}

struct Partition {
  std::vector<RequestId> converging;
  std::vector<RequestId> diverging;
  std::vector<RequestId> unimodal;
  std::vector<Vertex> source_next;
  std::vector<Vertex> target_prev;
};

Partition partition(const std::vector<RequestGeometry>& geo) {
  Partition p;
  p.source_next.reserve(geo.size());
  p.target_prev.reserve(geo.size());
  for (RequestId i = 0; i < static_cast<RequestId>(geo.size()); ++i) {
    switch (geo[i].cls) {
      case PathClass::kConverging: p.converging.push_back(i); break;
      case PathClass::kDiverging: p.diverging.push_back(i); break;
      case PathClass::kUnimodal: p.unimodal.push_back(i); break;
    }
    p.source_next.push_back(geo[i].source_next);
    p.target_prev.push_back(geo[i].target_prev);
  }
  return p;
}

// Non-interfering converging/diverging pair: s of the converging request and
// t of the diverging one are related.
std::optional<IdPair> converging_diverging_pair(
    const RootedTree& view, const std::vector<RequestGeometry>& geo,
    const Partition& p) {
  if (p.converging.empty() || p.diverging.empty()) return std::nullopt;
  auto sorted_points = [&](const std::vector<RequestId>& ids, auto vertex_of) {
    std::vector<std::pair<int, int>> pts;
    pts.reserve(ids.size());
    for (RequestId id : ids) pts.emplace_back(view.tin(vertex_of(id)), id);
    std::sort(pts.begin(), pts.end());
    return pts;
  };
  auto first_in = [](const std::vector<std::pair<int, int>>& pts, int lo,
                     int hi) -> std::optional<int> {
    auto it = std::lower_bound(pts.begin(), pts.end(), std::pair{lo, -1});
    if (it != pts.end() && it->first <= hi) return it->second;
    return std::nullopt;
  };
  auto conv_sources =
      sorted_points(p.converging, [&](RequestId i) { return geo[i].source; });
  for (RequestId d : p.diverging) {
    Vertex t = geo[d].target;
    if (auto c = first_in(conv_sources, view.tin(t), view.tout(t))) {
      return ordered(*c, d);
    }
  }
  auto div_targets =
      sorted_points(p.diverging, [&](RequestId i) { return geo[i].target; });
  for (RequestId c : p.converging) {
    Vertex s = geo[c].source;
    if (auto d = first_in(div_targets, view.tin(s), view.tout(s))) {
      return ordered(c, *d);
    }
  }
  return std::nullopt;
}

// Two unimodal requests with the same middle whose endpoints are crosswise
// related.
std::optional<IdPair> unimodal_pair(const RootedTree& view,
                                    const std::vector<RequestGeometry>& geo,
                                    const std::vector<RequestId>& cls) {
  auto tin = [&](Vertex v) { return view.tin(v); };
  auto tout = [&](Vertex v) { return view.tout(v); };

  // s_r <= t_r' and t_r <= s_r' (and, by swapping roles, the converse).
  std::vector<Point2> points;
  for (RequestId id : cls) {
    points.push_back({tin(geo[id].target), tin(geo[id].source), id});
  }
  RangeTree2D containment(std::move(points));
  for (RequestId r : cls) {
    Vertex s = geo[r].source;
    Vertex t = geo[r].target;
    if (auto other = containment.find(tin(s), tout(s), tin(t), tout(t), r)) {
      return ordered(r, *other);
    }
  }

  // s_r <= t_r' and s_r' <= t_r: sweep with r active over the subtree of s_r
  // keyed by tin[t_r].
  std::vector<KeyedInterval> intervals;
  std::vector<RangedPoint> queries;
  for (RequestId id : cls) {
    Vertex s = geo[id].source;
    Vertex t = geo[id].target;
    intervals.push_back({tin(s), tout(s), tin(t), id});
    queries.push_back({tin(t), tin(s), tout(s), id});
  }
  if (auto hit = detail::find_stabbing_pair(intervals, queries)) {
    return ordered(hit->first, hit->second);
  }

  // t_r <= s_r' and t_r' <= s_r: the same with sources and targets swapped.
  intervals.clear();
  queries.clear();
  for (RequestId id : cls) {
    Vertex s = geo[id].source;
    Vertex t = geo[id].target;
    intervals.push_back({tin(t), tout(t), tin(s), id});
    queries.push_back({tin(s), tin(t), tout(t), id});
  }
  if (auto hit = detail::find_stabbing_pair(intervals, queries)) {
    return ordered(hit->first, hit->second);
  }
  return std::nullopt;
}

// Unimodal r and diverging r' are independent iff m_r <= s_r' and s_r, t_r'
// are related. With `converging` set, the directional dual: m_r <= t_r' and
// t_r, s_r' related.
std::optional<IdPair> unimodal_straight_pair(
    const RootedTree& view, const std::vector<RequestGeometry>& geo,
    const std::vector<RequestId>& unimodal,
    const std::vector<RequestId>& straight, bool converging) {
  if (unimodal.empty() || straight.empty()) return std::nullopt;
  auto tin = [&](Vertex v) { return view.tin(v); };
  auto tout = [&](Vertex v) { return view.tout(v); };
  // near: the endpoint of the straight request that must lie below m_r;
  // far: its other endpoint. own: the unimodal endpoint compared with far.
  auto near = [&](RequestId id) {
    return converging ? geo[id].target : geo[id].source;
  };
  auto far = [&](RequestId id) {
    return converging ? geo[id].source : geo[id].target;
  };
  auto own = [&](RequestId id) {
    return converging ? geo[id].target : geo[id].source;
  };

  // own_r <= far_r'
  std::vector<Point2> points;
  for (RequestId id : straight) points.push_back({tin(near(id)), tin(far(id)), id});
  RangeTree2D tree(std::move(points));
  for (RequestId r : unimodal) {
    Vertex m = geo[r].middle;
    Vertex o = own(r);
    if (auto hit = tree.find(tin(m), tout(m), tin(o), tout(o))) {
      return ordered(r, *hit);
    }
  }

  // far_r' <= own_r
  std::vector<KeyedInterval> intervals;
  for (RequestId id : straight) {
    Vertex f = far(id);
    intervals.push_back({tin(f), tout(f), tin(near(id)), id});
  }
  std::vector<RangedPoint> queries;
  for (RequestId r : unimodal) {
    Vertex m = geo[r].middle;
    queries.push_back({tin(own(r)), tin(m), tout(m), r});
  }
  if (auto hit = detail::find_stabbing_pair(intervals, queries)) {
    return ordered(hit->first, hit->second);
  }
  return std::nullopt;
}

}  // namespace

namespace detail {

std::optional<IdPair> find_independent_pair(
    const RootedTree& view, const std::vector<RequestGeometry>& geo) {
  Partition p = partition(geo);

  auto conv = descendant_free(view, p.converging, p.target_prev);
  if (conv.size() >= 2) return ordered(conv[0], conv[1]);
  auto div = descendant_free(view, p.diverging, p.source_next);
  if (div.size() >= 2) return ordered(div[0], div[1]);

  if (auto hit = converging_diverging_pair(view, geo, p)) return hit;

  std::map<Vertex, std::vector<RequestId>> by_middle;
  for (RequestId id : p.unimodal) by_middle[geo[id].middle].push_back(id);
  for (const auto& [middle, cls] : by_middle) {
    if (cls.size() < 2) continue;
    if (auto hit = unimodal_pair(view, geo, cls)) return hit;
  }

  if (auto hit = unimodal_straight_pair(view, geo, p.unimodal, p.diverging,
                                        /*converging=*/false)) {
    return hit;
  }
  return unimodal_straight_pair(view, geo, p.unimodal, p.converging,
                                /*converging=*/true);
}

IndependentSet max_independent_set(const RootedTree& view,
                                   const std::vector<RequestGeometry>& geo) {
  if (geo.empty()) {
    throw Error(ErrorKind::kEmptyInstance,
                "maximum independent set of an empty request list");
  }
  Partition p = partition(geo);

  IndependentSet plus{descendant_free(view, p.diverging, p.source_next),
                      view.root(), IndependentSetSource::kDiverging};
  if (plus.members.size() >= 2) {
    Vertex x0 = geo[plus.members[0]].target;
    for (RequestId id : plus.members) x0 = view.lca(x0, geo[id].target);
    for (RequestId id = 0; id < static_cast<RequestId>(geo.size()); ++id) {
      if (geo[id].cls != PathClass::kDiverging &&
          view.is_ancestor(geo[id].source, x0)) {
        plus.members.push_back(id);
        plus.source = IndependentSetSource::kDivergingExtended;
        break;
      }
    }
  }

  IndependentSet minus{descendant_free(view, p.converging, p.target_prev),
                       view.root(), IndependentSetSource::kConverging};
  if (minus.members.size() >= 2) {
    Vertex x0 = geo[minus.members[0]].source;
    for (RequestId id : minus.members) x0 = view.lca(x0, geo[id].source);
    for (RequestId id = 0; id < static_cast<RequestId>(geo.size()); ++id) {
      if (geo[id].cls != PathClass::kConverging &&
          view.is_ancestor(geo[id].target, x0)) {
        minus.members.push_back(id);
        minus.source = IndependentSetSource::kConvergingExtended;
        break;
      }
    }
  }

  IndependentSet best =
      minus.members.size() > plus.members.size() ? minus : plus;
  std::sort(best.members.begin(), best.members.end());
  if (best.members.size() >= 2) return best;

  if (auto pair = find_independent_pair(view, geo)) {
    return {{pair->first, pair->second}, view.root(),
            IndependentSetSource::kPair};
  }
  return {{0}, view.root(), IndependentSetSource::kSingle};
}

}  // namespace detail

IndependentSet max_independent_set(const Instance& inst) {
  if (inst.num_requests() == 0) {
    throw Error(ErrorKind::kEmptyInstance,
                "maximum independent set of an empty request list");
  }
  RootedTree view(inst.tree(), 0);
  return detail::max_independent_set(view,
                                     classify_all(view, inst.requests()));
}

std::optional<std::pair<RequestId, RequestId>> find_independent_pair(
    const Instance& inst) {
  if (inst.num_requests() < 2) return std::nullopt;
  RootedTree view(inst.tree(), 0);
  return detail::find_independent_pair(view,
                                       classify_all(view, inst.requests()));
}

}  // namespace filterless
