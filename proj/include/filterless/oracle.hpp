#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "filterless/coloring.hpp"

namespace filterless {

// Exhaustive reference answers for small instances. None of this shares code
// with the fast algorithms beyond the basic data types.

struct OracleSet {
  int size = 0;
  std::vector<RequestId> members;  // sorted
};

inline constexpr int kOracleMaxSet = 24;
inline constexpr int kOracleMaxChi = 16;
inline constexpr int kOracleMaxList = 14;

bool oracle_interferes(const Tree& tree, const Request& r, const Request& r2);

// Symmetric adjacency from oracle_interferes, one bitmask row per request.
std::vector<std::uint32_t> oracle_adjacency(const Instance& inst);

// Throw kTooLarge above kOracleMaxSet requests.
OracleSet oracle_alpha(const Instance& inst);
OracleSet oracle_omega(const Instance& inst);

// Throws kTooLarge above kOracleMaxChi requests.
Coloring oracle_chi(const Instance& inst);

// Throws kTooLarge above kOracleMaxList vertices.
std::optional<std::vector<int>> oracle_list_color(
    const InterferenceDigraph& g, const std::vector<std::vector<int>>& lists);

}  // namespace filterless
