#include "filterless/oracle.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <numeric>
#include <string>

#include "filterless/error.hpp"

namespace filterless {

namespace {

// parent[v] = next vertex from v toward `target` (BFS from target).
std::vector<Vertex> toward(const Tree& tree, Vertex target) {
  std::vector<Vertex> parent(tree.num_vertices(), kNoVertex);
  std::vector<Vertex> queue{target};
  parent[target] = target;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    for (Vertex w : tree.neighbours(queue[head])) {
      if (parent[w] == kNoVertex) {
        parent[w] = queue[head];
        queue.push_back(w);
      }
    }
  }
  return parent;
}

Vertex last_before(const std::vector<Vertex>& parent, Vertex from,
                   Vertex target) {
  while (parent[from] != target) from = parent[from];
  return from;
}

void guard(int size, int limit, const char* what) {
  if (size > limit) {
    throw Error(ErrorKind::kTooLarge, std::string(what) + " oracle limited to " +
                                          std::to_string(limit) + ", got " +
                                          std::to_string(size));
  }
}

OracleSet max_set(const std::vector<std::uint32_t>& conflict) {
  const int m = static_cast<int>(conflict.size());
  OracleSet best;
  std::uint32_t best_mask = 0;
  std::function<void(std::uint32_t, std::uint32_t, int)> search =
      [&](std::uint32_t cand, std::uint32_t chosen, int size) {
        if (size + std::popcount(cand) <= best.size) return;
        if (cand == 0) {
          best.size = size;
          best_mask = chosen;
          return;
        }
        int v = std::countr_zero(cand);
        std::uint32_t bit = std::uint32_t{1} << v;
        search(cand & ~conflict[v] & ~bit, chosen | bit, size + 1);
        search(cand & ~bit, chosen, size);
      };
  std::uint32_t all = m == 32 ? ~std::uint32_t{0} : (std::uint32_t{1} << m) - 1;
  search(all, 0, 0);
  for (int v = 0; v < m; ++v) {
    if (best_mask >> v & 1) best.members.push_back(v);
  }
  return best;
}

}  // namespace

bool oracle_interferes(const Tree& tree, const Request& r, const Request& r2) {
  if (r.source == r2.target) return false;
  std::vector<Vertex> to_t2 = toward(tree, r2.target);
  std::vector<Vertex> to_t = toward(tree, r.target);
  bool first = to_t2[r.source] == to_t[r.source];
  bool last = last_before(to_t2, r.source, r2.target) ==
              last_before(to_t2, r2.source, r2.target);
  return first && last;
}

std::vector<std::uint32_t> oracle_adjacency(const Instance& inst) {
  const int m = inst.num_requests();
  guard(m, 32, "adjacency");
  std::vector<std::uint32_t> adj(m, 0);
  const auto& req = inst.requests();
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      if (i != j && oracle_interferes(inst.tree(), req[i], req[j])) {
        adj[i] |= std::uint32_t{1} << j;
        adj[j] |= std::uint32_t{1} << i;
      }
    }
  }
  return adj;
}

OracleSet oracle_alpha(const Instance& inst) {
  guard(inst.num_requests(), kOracleMaxSet, "alpha");
  return max_set(oracle_adjacency(inst));
}

OracleSet oracle_omega(const Instance& inst) {
  const int m = inst.num_requests();
  guard(m, kOracleMaxSet, "omega");
  std::vector<std::uint32_t> adj = oracle_adjacency(inst);
  std::uint32_t all = (std::uint32_t{1} << m) - 1;
  for (int v = 0; v < m; ++v) adj[v] = all & ~adj[v] & ~(std::uint32_t{1} << v);
  return max_set(adj);
}

Coloring oracle_chi(const Instance& inst) {
  const int m = inst.num_requests();
  guard(m, kOracleMaxChi, "chi");
  Coloring out;
  if (m == 0) return out;
  std::vector<std::uint32_t> adj = oracle_adjacency(inst);
  std::vector<int> order(m);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return std::popcount(adj[a]) > std::popcount(adj[b]);
  });
  std::vector<int> colour(m, 0);
  std::function<bool(int, int, int)> fill = [&](int pos, int used,
                                                int budget) -> bool {
    if (pos == m) return true;
    int v = order[pos];
    for (int c = 1; c <= std::min(budget, used + 1); ++c) {
      bool ok = true;
      for (int w = 0; w < m && ok; ++w) {
        if ((adj[v] >> w & 1) && colour[w] == c) ok = false;
      }
      if (!ok) continue;
      colour[v] = c;
      if (fill(pos + 1, std::max(used, c), budget)) return true;
      colour[v] = 0;
    }
    return false;
  };
  for (int budget = std::max(1, oracle_omega(inst).size);; ++budget) {
    std::fill(colour.begin(), colour.end(), 0);
    if (fill(0, 0, budget)) {
      out.colour = colour;
      out.num_colours = budget;
      return out;
    }
  }
}

std::optional<std::vector<int>> oracle_list_color(
    const InterferenceDigraph& g, const std::vector<std::vector<int>>& lists) {
  const int n = g.size();
  guard(n, kOracleMaxList, "list colouring");
  std::vector<int> colour(n, 0);
  std::function<bool(int)> fill = [&](int v) -> bool {
    if (v == n) return true;
    for (int c : lists[v]) {
      bool ok = true;
      for (int w : g.neighbours(v)) {
        if (w < v && colour[w] == c) ok = false;
      }
      if (!ok) continue;
      colour[v] = c;
      if (fill(v + 1)) return true;
    }
    colour[v] = 0;
    return false;
  };
  if (!fill(0)) return std::nullopt;
  return colour;
}

}  // namespace filterless
