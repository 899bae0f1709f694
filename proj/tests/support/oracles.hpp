#pragma once

// Test-side oracles, independent of the library's solver paths.

#include <algorithm>
#include <cstdint>
#include <vector>

#include "minsat/geometry.hpp"

namespace minsat::testing {

// Exact optimum by branching on an uncovered pair: any feasible solution
// must put a point inside the rectangle of an unsatisfied pair, so depth-
// bounded DFS over rectangle candidates is complete. Handles instances
// beyond the subset-enumeration oracle's reach (m <= ~10).
class ExactOptSearch {
 public:
  explicit ExactOptSearch(const PointSet& x) : x_(x) {
    for (std::int64_t y : x.row_coords())
      for (std::int64_t cx : x.column_coords()) {
        const Point p{cx, y};
        if (!x.contains(p)) candidates_.push_back(p);
      }
    std::sort(candidates_.begin(), candidates_.end());
  }

  std::int64_t optimum() {
    for (std::int64_t k = 0;; ++k) {
      std::vector<Point> chosen;
      if (search(chosen, k)) return k;
    }
  }

 private:
  bool search(std::vector<Point>& chosen, std::int64_t budget) {
    std::vector<Point> all(x_.points().begin(), x_.points().end());
    all.insert(all.end(), chosen.begin(), chosen.end());
    const PointSet z(std::move(all), Kind::set_union);
    const auto bad = unsatisfied_pairs(z);
    if (bad.empty()) return true;
    if (budget == 0) return false;
    // Branch on the pair with the fewest candidate witnesses.
    std::vector<Point> best_opts;
    for (const auto& [a, b] : bad) {
      const Rect r = Rect::spanning(a, b);
      std::vector<Point> opts;
      for (const Point& c : candidates_)
        if (r.contains(c) && !z.contains(c)) opts.push_back(c);
      if (best_opts.empty() || opts.size() < best_opts.size()) best_opts = opts;
      if (best_opts.empty()) break;
    }
    for (const Point& c : best_opts) {
      chosen.push_back(c);
      if (search(chosen, budget - 1)) return true;
      chosen.pop_back();
    }
    return false;
  }

  PointSet x_;
  std::vector<Point> candidates_;
};

inline std::int64_t exact_opt(const PointSet& x) { return ExactOptSearch(x).optimum(); }

// Exhaustive guillotine-tree maximum for tiny permutations: recursively
// try every vertical and horizontal cut with nonempty sides.
inline std::int64_t gb_enumerate(std::vector<std::pair<std::int64_t, std::int64_t>> pts) {
  if (pts.size() <= 1) return 0;
  std::int64_t best = 0;
  std::vector<std::int64_t> xs, ys;
  for (auto [cx, cy] : pts) {
    xs.push_back(cx);
    ys.push_back(cy);
  }
  std::sort(xs.begin(), xs.end());
  std::sort(ys.begin(), ys.end());
  auto by_y = pts;
  std::sort(by_y.begin(), by_y.end(),
            [](auto a, auto b) { return a.second < b.second; });
  auto by_x = pts;
  std::sort(by_x.begin(), by_x.end(), [](auto a, auto b) { return a.first < b.first; });
  for (std::size_t i = 0; i + 1 < xs.size(); ++i) {
    const std::int64_t g = xs[i];
    std::int64_t cost = 0;
    std::vector<std::pair<std::int64_t, std::int64_t>> l, r;
    for (std::size_t j = 0; j + 1 < by_y.size(); ++j)
      if ((by_y[j].first <= g) != (by_y[j + 1].first <= g)) ++cost;
    for (auto p : pts) ((p.first <= g) ? l : r).push_back(p);
    best = std::max(best, cost + gb_enumerate(l) + gb_enumerate(r));
  }
  for (std::size_t i = 0; i + 1 < ys.size(); ++i) {
    const std::int64_t g = ys[i];
    std::int64_t cost = 0;
    std::vector<std::pair<std::int64_t, std::int64_t>> lo, hi;
    for (std::size_t j = 0; j + 1 < by_x.size(); ++j)
      if ((by_x[j].second <= g) != (by_x[j + 1].second <= g)) ++cost;
    for (auto p : pts) ((p.second <= g) ? lo : hi).push_back(p);
    best = std::max(best, cost + gb_enumerate(lo) + gb_enumerate(hi));
  }
  return best;
}

inline std::int64_t gb_enumerate(const PointSet& x) {
  std::vector<std::pair<std::int64_t, std::int64_t>> pts;
  for (const Point& p : x.points()) pts.push_back({p.x, p.y});
  return gb_enumerate(std::move(pts));
}

}  // namespace minsat::testing
