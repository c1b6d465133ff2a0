#pragma once

#include <optional>
#include <utility>
#include <vector>

namespace filterless::detail {

struct Point2 {
  int x;
  int y;
  int id;
};

// Static 2-D orthogonal range emptiness with a witness: a merge-sort tree,
// O(n log n) build and O(log^2 n) per query.
class RangeTree2D {
 public:
  explicit RangeTree2D(std::vector<Point2> points);

  // Some point with x in [x_lo, x_hi], y in [y_lo, y_hi] and id != exclude.
  std::optional<int> find(int x_lo, int x_hi, int y_lo, int y_hi,
                          int exclude = -1) const;

 private:
  std::optional<int> find_in_node(int node, int y_lo, int y_hi,
                                  int exclude) const;

  int size_ = 0;
  std::vector<int> xs_;                                // sorted x
  std::vector<std::vector<std::pair<int, int>>> by_y_;  // (y, id) per node
};

// An interval [lo, hi] carrying a key.
struct KeyedInterval {
  int lo;
  int hi;
  int key;
  int id;
};

// A point carrying a key range.
struct RangedPoint {
  int point;
  int key_lo;
  int key_hi;
  int id;
};

// Offline sweep: finds (interval id, point id) with lo <= point <= hi and
// key_lo <= key <= key_hi, ids distinct. O((|I| + |P|) log |I|).
std::optional<std::pair<int, int>> find_stabbing_pair(
    std::vector<KeyedInterval> intervals, std::vector<RangedPoint> points);

}  // namespace filterless::detail
