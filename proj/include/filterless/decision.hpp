#pragma once

#include <optional>
#include <vector>

#include "filterless/coloring.hpp"

namespace filterless {

// Allowed colours per vertex.
using ListAssignment = std::vector<std::vector<int>>;

// The exceptional requests and unimodal matching behind an accepted
// k-colouring.
struct ExceptionalChoice {
  std::vector<RequestId> q_minus;  // non-diverging, colours 1..t
  std::vector<RequestId> q_plus;   // non-converging, colours t+1..t+t'
  std::vector<std::pair<RequestId, RequestId>> matching;
};

// Either a dominating set of at most three requests or a root under which
// every request has the same straight class, so the interference graph is a
// comparability graph.
struct DominationResult {
  std::vector<RequestId> dominating;  // sorted; empty for the second outcome
  Vertex comparability_root = kNoVertex;
  PathClass uniform_class = PathClass::kConverging;
};

// Colours respecting lists with lists of size <= 2 (kBadParams otherwise),
// via 2-SAT. Vertices whose two options are both free take the first.
std::optional<std::vector<int>> two_list_color(const InterferenceDigraph& g,
                                               const ListAssignment& lists);

// Requires a reduced instance (kReductionRequired). Both outcomes are
// checked before returning; a failed check raises kInternalContradiction.
DominationResult dominating_or_comparability(const Instance& inst);

// A proper colouring with at most 3 colours, or nothing.
std::optional<Coloring> decide_3col(const Instance& inst);

// A proper colouring with at most k colours, or nothing, by enumerating the
// exceptional requests under `root`. Requires k >= 4 (kBudgetTooSmall).
// The accepted choice is stored in `choice` when given.
std::optional<Coloring> decide_kcol(const Instance& inst, int k,
                                    Vertex root = 0,
                                    ExceptionalChoice* choice = nullptr);

// Any budget: k <= 2 by direct graph tests, 3 and above as above.
std::optional<Coloring> decide(const Instance& inst, int k, Vertex root = 0);

}  // namespace filterless
