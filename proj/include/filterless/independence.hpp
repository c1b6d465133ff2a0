#pragma once

#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "filterless/instance.hpp"

namespace filterless {

// Which step of the construction produced the set.
enum class IndependentSetSource {
  kDiverging,           // descendant-free diverging requests
  kDivergingExtended,   // ... plus one compatible converging/unimodal request
  kConverging,          // descendant-free converging requests
  kConvergingExtended,  // ... plus one compatible diverging/unimodal request
  kPair,                // pair search
  kSingle,              // alpha = 1
};

std::string_view independent_set_source_name(IndependentSetSource s);

struct IndependentSet {
  std::vector<RequestId> members;  // sorted
  Vertex root = 0;
  IndependentSetSource source = IndependentSetSource::kSingle;
};

// Maximum independent set of the interference graph in
// O(|R| log^2 |R| + |T|). Throws kEmptyInstance on an empty request list.
IndependentSet max_independent_set(const Instance& inst);

// Some non-interfering pair (i < j), or nothing when the interference graph
// is complete.
std::optional<std::pair<RequestId, RequestId>> find_independent_pair(
    const Instance& inst);

namespace detail {

// Working forms over a prepared rooted view and geometries.
IndependentSet max_independent_set(const RootedTree& view,
                                   const std::vector<RequestGeometry>& geo);
std::optional<std::pair<RequestId, RequestId>> find_independent_pair(
    const RootedTree& view, const std::vector<RequestGeometry>& geo);

}  // namespace detail

}  // namespace filterless
