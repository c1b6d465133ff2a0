#include "filterless/instance.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "filterless/error.hpp"

namespace filterless {

std::string_view path_class_name(PathClass c) {
  switch (c) {
    case PathClass::kConverging: return "converging";
    case PathClass::kDiverging: return "diverging";
    case PathClass::kUnimodal: return "unimodal";
  }
  return "?";
}

RequestGeometry classify(const RootedTree& view, const Request& r) {
  const Vertex s = r.source;
  const Vertex t = r.target;
  if (s < 0 || t < 0 || s >= view.num_vertices() || t >= view.num_vertices()) {
    throw Error(ErrorKind::kInvalidRequest,
                "endpoint outside the tree in request (" + std::to_string(s) +
                    "," + std::to_string(t) + ")");
  }
  if (s == t) {
    throw Error(ErrorKind::kInvalidRequest,
                "request (" + std::to_string(s) + "," + std::to_string(t) +
                    ") has length 0");
  }
  RequestGeometry g;
  g.source = s;
  g.target = t;
  g.middle = view.lca(s, t);
  if (g.middle == t) {
    g.cls = PathClass::kConverging;
    g.source_next = view.parent(s);
    g.target_prev = view.child_toward(t, s);
    g.middle_prev = g.target_prev;
  } else if (g.middle == s) {
    g.cls = PathClass::kDiverging;
    g.source_next = view.child_toward(s, t);
    g.target_prev = view.parent(t);
    g.middle_next = g.source_next;
  } else {
    g.cls = PathClass::kUnimodal;
    g.source_next = view.parent(s);
    g.target_prev = view.parent(t);
    g.middle_prev = view.child_toward(g.middle, s);
    g.middle_next = view.child_toward(g.middle, t);
  }
  return g;
}

std::vector<RequestGeometry> classify_all(
    const RootedTree& view, const std::vector<Request>& requests) {
  std::vector<RequestGeometry> out;
  out.reserve(requests.size());
  for (const Request& r : requests) out.push_back(classify(view, r));
  return out;
}

int request_length(const RootedTree& view, const Request& r) {
  return view.distance(r.source, r.target);
}

Instance::Instance(Tree tree, std::vector<Request> requests)
    : tree_(std::move(tree)), requests_(std::move(requests)) {
  const int n = tree_.num_vertices();
  for (std::size_t i = 0; i < requests_.size(); ++i) {
    const Request& r = requests_[i];
    if (!tree_.contains(r.source) || !tree_.contains(r.target)) {
      throw Error(ErrorKind::kInvalidRequest,
                  "request " + std::to_string(i) +
                      " has an endpoint outside [0," + std::to_string(n) +
                      ")");
    }
    if (r.source == r.target) {
      throw Error(ErrorKind::kInvalidRequest,
                  "request " + std::to_string(i) + " has source == target");
    }
  }
}

Instance Instance::subset(const std::vector<RequestId>& ids) const {
  std::vector<Request> picked;
  picked.reserve(ids.size());
  for (RequestId id : ids) picked.push_back(requests_.at(id));
  return Instance(tree_, std::move(picked));
}

Instance Instance::converse() const {
  std::vector<Request> reversed;
  reversed.reserve(requests_.size());
  for (const Request& r : requests_) reversed.push_back({r.target, r.source});
  return Instance(tree_, std::move(reversed));
}

namespace {

// used[v] for v != root: the edge {v, parent(v)} carries an emission or
// reception arc.
std::vector<char> used_edges(const RootedTree& view,
                             const std::vector<Request>& requests) {
  std::vector<char> used(view.num_vertices(), 0);
  auto mark = [&](Arc a) {
    used[view.parent(a.tail) == a.head ? a.tail : a.head] = 1;
  };
  for (const Request& r : requests) {
    RequestGeometry g = classify(view, r);
    mark(g.emission());
    mark(g.reception());
  }
  return used;
}

}  // namespace

bool is_reduced(const Instance& inst) {
  RootedTree view(inst.tree(), 0);
  std::vector<char> used = used_edges(view, inst.requests());
  for (Vertex v = 0; v < inst.num_vertices(); ++v) {
    if (v != view.root() && !used[v]) return false;
  }
  return true;
}

std::pair<Instance, VertexMapping> reduce_instance(const Instance& inst) {
  if (inst.num_requests() == 0) {
    throw Error(ErrorKind::kEmptyRequestSet,
                "reducing a request-free instance collapses the tree to a "
                "single vertex");
  }
  const int n = inst.num_vertices();
  RootedTree view(inst.tree(), 0);
  std::vector<char> used = used_edges(view, inst.requests());

  // Contracted groups: a vertex joins its parent's group unless the edge to
  // the parent is kept.
  std::vector<int> group(n, 0);
  int num_groups = 1;
  for (Vertex v : view.preorder()) {
    if (v == view.root()) continue;
    group[v] = used[v] ? num_groups++ : group[view.parent(v)];
  }
  std::vector<Vertex> smallest(num_groups, n);
  for (Vertex v = 0; v < n; ++v) {
    smallest[group[v]] = std::min(smallest[group[v]], v);
  }
  std::vector<int> order(num_groups);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return smallest[a] < smallest[b]; });
  std::vector<Vertex> label(num_groups);
  for (int i = 0; i < num_groups; ++i) label[order[i]] = i;

  VertexMapping mapping;
  mapping.forward.resize(n);
  for (Vertex v = 0; v < n; ++v) mapping.forward[v] = label[group[v]];

  std::vector<Edge> kept;
  for (const Edge& e : inst.tree().edges()) {
    Vertex child = view.parent(e.first) == e.second ? e.first : e.second;
    if (used[child]) {
      Vertex a = mapping.forward[e.first];
      Vertex b = mapping.forward[e.second];
      kept.emplace_back(std::min(a, b), std::max(a, b));
    } else {
      mapping.edges.push_back(e);
    }
  }
  std::sort(kept.begin(), kept.end());

  std::vector<Request> requests;
  requests.reserve(inst.num_requests());
  for (const Request& r : inst.requests()) {
    requests.push_back({mapping.forward[r.source], mapping.forward[r.target]});
  }
  return {Instance(Tree::build(num_groups, kept), std::move(requests)),
          std::move(mapping)};
}

std::pair<Instance, VertexMapping> subdivide_nice(const Instance& inst) {
  const int n = inst.num_vertices();
  VertexMapping mapping;
  mapping.forward.resize(n);
  std::iota(mapping.forward.begin(), mapping.forward.end(), 0);
  mapping.edges = inst.tree().edges();

  std::vector<Edge> edges;
  edges.reserve(2 * mapping.edges.size());
  Vertex next = n;
  for (const auto& [u, v] : mapping.edges) {
    edges.emplace_back(u, next);
    edges.emplace_back(v, next);
    ++next;
  }
  return {Instance(Tree::build(next, edges), inst.requests()),
          std::move(mapping)};
}

}  // namespace filterless
