#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "filterless/instance.hpp"

namespace filterless {

// Line format, 1-based vertices:
//   c <comment>
//   p tree <n> <m>
//   e <u> <v>      (n-1 lines)
//   r <s> <t>      (m lines, in request order)
Instance parse_instance(std::string_view text);
std::string serialize_instance(const Instance& inst);

struct GenParams {
  int m = 1;      // star_kmn: converging requests; random: request count
  int n = 1;      // star_kmn: diverging requests; random: vertex count
  int t = 1;      // c5kt
};

// kind: "star_kmn", "c5kt", "fig1" or "random". Throws kBadParams.
Instance generate(std::string_view kind, const GenParams& params,
                  std::uint64_t seed);

}  // namespace filterless
