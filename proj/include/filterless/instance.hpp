#pragma once

#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "filterless/tree.hpp"

namespace filterless {

using RequestId = int;

// A directed subpath of the tree, identified by its endpoints. The path
// itself is unique in a tree and derived on demand.
struct Request {
  Vertex source = kNoVertex;
  Vertex target = kNoVertex;

  friend bool operator==(const Request&, const Request&) = default;
};

enum class PathClass { kConverging, kDiverging, kUnimodal };

std::string_view path_class_name(PathClass c);

// Shape of a request relative to a root. `middle` is the vertex of the path
// closest to the root.
struct RequestGeometry {
  PathClass cls = PathClass::kConverging;
  Vertex source = kNoVertex;
  Vertex target = kNoVertex;
  Vertex source_next = kNoVertex;  // second vertex
  Vertex target_prev = kNoVertex;  // penultimate vertex
  Vertex middle = kNoVertex;
  std::optional<Vertex> middle_prev;  // predecessor of middle along the path
  std::optional<Vertex> middle_next;  // successor of middle along the path

  Arc emission() const { return {source, source_next}; }
  Arc reception() const { return {target_prev, target}; }
};

RequestGeometry classify(const RootedTree& view, const Request& r);
std::vector<RequestGeometry> classify_all(const RootedTree& view,
                                          const std::vector<Request>& requests);

// A tree plus an ordered multiset of requests; request i keeps index i
// through every transformation below.
class Instance {
 public:
  Instance(Tree tree, std::vector<Request> requests);

  const Tree& tree() const { return tree_; }
  const std::vector<Request>& requests() const { return requests_; }
  int num_requests() const { return static_cast<int>(requests_.size()); }
  int num_vertices() const { return tree_.num_vertices(); }

  // Same tree, requests restricted to `ids` (in that order).
  Instance subset(const std::vector<RequestId>& ids) const;
  // Every request reversed; its interference digraph is the converse.
  Instance converse() const;

  friend bool operator==(const Instance&, const Instance&) = default;

 private:
  Tree tree_;
  std::vector<Request> requests_;
};

struct VertexMapping {
  // forward[old vertex] = new vertex.
  std::vector<Vertex> forward;
  // Contracted edges (reduction) or subdivided edges (subdivision), in old
  // labels, ascending.
  std::vector<Edge> edges;
};

// Contracts every edge none of whose two arcs is an emission or reception
// arc. The interference digraph is unchanged and |V| <= 2|R| + 2 afterwards.
// New labels follow the smallest old vertex of each contracted group.
std::pair<Instance, VertexMapping> reduce_instance(const Instance& inst);

// True iff every edge carries an emission or reception arc of some request.
bool is_reduced(const Instance& inst);

// Subdivides every edge (u, v), u < v, with a new vertex labelled n, n+1, ...
// in ascending edge order. Every request then has length >= 2.
std::pair<Instance, VertexMapping> subdivide_nice(const Instance& inst);

// Number of arcs of the request path.
int request_length(const RootedTree& view, const Request& r);

}  // namespace filterless
