#pragma once

#include <string_view>
#include <vector>

#include "filterless/interference.hpp"

namespace filterless {

enum class ColourType { kMainlyConverging, kMainlyDiverging, kUnimodal };

std::string_view colour_type_name(ColourType t);

struct Coloring {
  // colour[i] in 1..num_colours for the i-th coloured request.
  std::vector<int> colour;
  int num_colours = 0;
  // Per colour (index c-1), when the producing pipeline knows it.
  std::vector<ColourType> tags;
};

// No arc joins two requests of equal colour, and colours are 1..num_colours
// without gaps.
bool is_proper(const InterferenceDigraph& digraph, const Coloring& coloring);

// Optimal colourings of a single class under `view`. The result is aligned
// with `subset`: colour[k] belongs to request subset[k]. Throw
// kNotConverging / kNotDiverging / kNotUnimodal on a misclassified request.
Coloring color_converging(const RootedTree& view,
                          const std::vector<Request>& requests,
                          const std::vector<RequestId>& subset);
Coloring color_diverging(const RootedTree& view,
                         const std::vector<Request>& requests,
                         const std::vector<RequestId>& subset);
Coloring color_unimodal(const RootedTree& view,
                        const std::vector<Request>& requests,
                        const std::vector<RequestId>& subset);

// Converging, diverging and unimodal requests under `root` coloured in three
// disjoint blocks, in that order. Uses omega- + omega+ + omegaV colours.
Coloring color_2approx(const Instance& inst, Vertex root);

// omega(R-, T[root]) + omega(R+, T[root]).
int straight_clique_sum(const Instance& inst, Vertex root);

enum class RootBoundSource {
  kTally,      // smallest prefix index with m+ + p- <= omega
  kCommonEnd,  // no index qualified; end of the common prefix of Q and Q'
  kScan,       // the above failed the check; first vertex that passes
};

struct RootBound {
  Vertex root = kNoVertex;
  int omega = 0;
  int bound = 0;  // straight_clique_sum at root, checked <= omega
  RootBoundSource source = RootBoundSource::kTally;
};

// A root x with omega(R+, T[x]) + omega(R-, T[x]) <= omega(R, T), built from
// a path meeting the most requests and a second path into its start.
// Requires every request to have length >= 2 (kNotNicePair otherwise);
// kInternalContradiction if no vertex passes.
RootBound chi_bound_certificate(const Instance& inst);
Vertex chi_bound_root(const Instance& inst);

// At most 2 omega colours: subdivide, pick chi_bound_root, colour by class.
Coloring color_2omega(const Instance& inst);

// Repeatedly removes a maximum independent set as the next colour class.
Coloring greedy_mis_color(const Instance& inst);

}  // namespace filterless
