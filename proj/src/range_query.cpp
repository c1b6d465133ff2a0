#include "filterless/detail/range_query.hpp"

#include <algorithm>
#include <queue>
#include <set>
#include <tuple>

namespace filterless::detail {

RangeTree2D::RangeTree2D(std::vector<Point2> points)
    : size_(static_cast<int>(points.size())) {
  std::sort(points.begin(), points.end(), [](const Point2& a, const Point2& b) {
    return std::tie(a.x, a.y, a.id) < std::tie(b.x, b.y, b.id);
  });
  xs_.reserve(size_);
  for (const Point2& p : points) xs_.push_back(p.x);
  if (size_ == 0) return;
  by_y_.assign(2 * size_, {});
  // Bottom-up segment tree over positions [0, size_).
  for (int i = 0; i < size_; ++i) {
    by_y_[size_ + i] = {{points[i].y, points[i].id}};
  }
  for (int node = size_ - 1; node >= 1; --node) {
    const auto& a = by_y_[2 * node];
    const auto& b = by_y_[2 * node + 1];
    auto& out = by_y_[node];
    out.resize(a.size() + b.size());
    std::merge(a.begin(), a.end(), b.begin(), b.end(), out.begin());
  }
}

std::optional<int> RangeTree2D::find_in_node(int node, int y_lo, int y_hi,
                                             int exclude) const {
  const auto& list = by_y_[node];
  auto it = std::lower_bound(list.begin(), list.end(),
                             std::pair<int, int>{y_lo, -1});
  for (; it != list.end() && it->first <= y_hi; ++it) {
    if (it->second != exclude) return it->second;
  }
  return std::nullopt;
}

std::optional<int> RangeTree2D::find(int x_lo, int x_hi, int y_lo, int y_hi,
                                     int exclude) const {
  if (size_ == 0 || x_lo > x_hi || y_lo > y_hi) return std::nullopt;
  int lo = static_cast<int>(
      std::lower_bound(xs_.begin(), xs_.end(), x_lo) - xs_.begin());
  int hi = static_cast<int>(
      std::upper_bound(xs_.begin(), xs_.end(), x_hi) - xs_.begin());
  std::optional<int> found;
  for (lo += size_, hi += size_; lo < hi && !found; lo >>= 1, hi >>= 1) {
    if (lo & 1) found = find_in_node(lo++, y_lo, y_hi, exclude);
    if (!found && (hi & 1)) found = find_in_node(--hi, y_lo, y_hi, exclude);
  }
  return found;
}

std::optional<std::pair<int, int>> find_stabbing_pair(
    std::vector<KeyedInterval> intervals, std::vector<RangedPoint> points) {
  std::sort(intervals.begin(), intervals.end(),
            [](const KeyedInterval& a, const KeyedInterval& b) {
              return std::tie(a.lo, a.id) < std::tie(b.lo, b.id);
            });
  std::sort(points.begin(), points.end(),
            [](const RangedPoint& a, const RangedPoint& b) {
              return std::tie(a.point, a.id) < std::tie(b.point, b.id);
            });
  // Active intervals keyed by (key, id); expiry queue ordered by hi.
  std::set<std::pair<int, int>> active;
  using Expiry = std::pair<int, std::pair<int, int>>;
  std::priority_queue<Expiry, std::vector<Expiry>, std::greater<>> expiry;
  std::size_t next = 0;
  for (const RangedPoint& p : points) {
    while (next < intervals.size() && intervals[next].lo <= p.point) {
      const KeyedInterval& iv = intervals[next++];
      active.insert({iv.key, iv.id});
      expiry.push({iv.hi, {iv.key, iv.id}});
    }
    while (!expiry.empty() && expiry.top().first < p.point) {
      active.erase(expiry.top().second);
      expiry.pop();
    }
    for (auto it = active.lower_bound({p.key_lo, -1});
         it != active.end() && it->first <= p.key_hi; ++it) {
      if (it->second != p.id) return std::pair{it->second, p.id};
    }
  }
  return std::nullopt;
}

}  // namespace filterless::detail
