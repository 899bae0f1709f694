#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "minsat/common.hpp"

namespace minsat {

/// A plane point with integer coordinates. Instances live in a doubled
/// x-space: active columns sit on even x (2, 4, ..., 2c) and the vertical
/// lines between or beside them on odd x (1, 3, ..., 2c+1), so every
/// construction stays integral.
struct Point {
  std::int64_t x = 0;
  std::int64_t y = 0;

  friend bool operator==(const Point&, const Point&) = default;
  // Lexicographic by (y, x): row-major iteration order everywhere.
  friend bool operator<(const Point& a, const Point& b) {
    return a.y != b.y ? a.y < b.y : a.x < b.x;
  }
};

enum class Kind { instance, solution, set_union };

/// Closed axis-aligned rectangle.
struct Rect {
  std::int64_t x_lo, x_hi, y_lo, y_hi;

  static Rect spanning(const Point& p, const Point& q) {
    return Rect{p.x < q.x ? p.x : q.x, p.x < q.x ? q.x : p.x,
                p.y < q.y ? p.y : q.y, p.y < q.y ? q.y : p.y};
  }
  bool contains(const Point& p) const {
    return x_lo <= p.x && p.x <= x_hi && y_lo <= p.y && p.y <= y_hi;
  }
};

inline bool collinear(const Point& p, const Point& q) { return p.x == q.x || p.y == q.y; }

/// A finite set of points, stored sorted by (y, x) and deduplicated.
class PointSet {
 public:
  PointSet() = default;
  explicit PointSet(std::vector<Point> pts, Kind kind = Kind::instance);

  const std::vector<Point>& points() const { return pts_; }
  Kind kind() const { return kind_; }
  void set_kind(Kind k) { kind_ = k; }
  std::size_t size() const { return pts_.size(); }
  bool empty() const { return pts_.empty(); }
  bool contains(const Point& p) const;

  /// Number of distinct x / y coordinates carrying at least one point.
  std::int64_t active_columns() const;
  std::int64_t active_rows() const;
  std::vector<std::int64_t> column_coords() const;  // sorted distinct x
  std::vector<std::int64_t> row_coords() const;     // sorted distinct y

  bool is_semi_permutation() const;  // one point per active row
  bool is_permutation() const;       // semi-permutation + one per column
  void require_semi_permutation(const char* who) const;

  friend bool operator==(const PointSet&, const PointSet&) = default;

 private:
  std::vector<Point> pts_;
  Kind kind_ = Kind::instance;
};

PointSet set_union_of(const PointSet& a, const PointSet& b, Kind kind = Kind::set_union);
PointSet set_difference(const PointSet& a, const PointSet& b, Kind kind = Kind::solution);
bool is_subset(const PointSet& a, const PointSet& b);

/// True iff every non-collinear pair of points has a third point of the set
/// in its closed spanning rectangle. Sweep implementation; agrees with
/// is_satisfied_pairscan, the quadratic reference oracle below.
bool is_satisfied(const PointSet& p);

/// Reference implementation: scan all pairs, test rectangle emptiness
/// directly. Kept as the correctness oracle for the sweep.
bool is_satisfied_pairscan(const PointSet& p);

/// All non-collinear pairs whose closed rectangle holds no third point,
/// each reported once with the lower point first. Empty iff is_satisfied.
std::vector<std::pair<Point, Point>> unsatisfied_pairs(const PointSet& p);

/// True iff X together with candidate solution Y is satisfied.
/// X must be a semi-permutation and disjoint from Y.
bool is_feasible(const PointSet& x, const PointSet& y);

/// Remap every point whose x lies in [x_lo, x_hi] onto the smallest active
/// column in that range, keeping y. Errors if the range is empty of columns.
PointSet collapse_columns(const PointSet& p, std::int64_t x_lo, std::int64_t x_hi);
PointSet collapse_rows(const PointSet& p, std::int64_t y_lo, std::int64_t y_hi);

/// Swap the two coordinates of every point.
PointSet transpose(const PointSet& p);

/// Shrink a feasible solution Y so that every point lies on an active row
/// and an active column of X, without increasing its size.
PointSet to_canonical(const PointSet& x, const PointSet& y);

/// Expand a canonical solution into one whose points all sit on odd-x
/// lines (strip boundaries), two flanking copies per point of X union Y.
/// Requires the doubled coordinate space.
PointSet to_special(const PointSet& x, const PointSet& y);

/// Repeatedly drop points whose two row-neighbours share their column,
/// until none remain.
PointSet reduce(const PointSet& x);

bool is_reduced(const PointSet& x);

/// Shift raw column coordinates circularly inside the universe [1, N].
PointSet cyclic_shift(const PointSet& x, std::int64_t s, std::int64_t n_universe);

/// Order-preserving remap of coordinates into the doubled space: columns
/// to 2, 4, ..., 2c and rows to 1..r. All bounds and the optimum are
/// invariant under this map.
PointSet normalize(const PointSet& p);

bool is_doubled_space(const PointSet& p);  // all x even, all y >= 1

/// Replace each row i of a semi-permutation by two rows 2i-1 and 2i
/// carrying copies of its point (rows are re-indexed to 1..2m).
PointSet double_rows(const PointSet& x);

}  // namespace minsat
