#pragma once

#include <cstdint>
#include <vector>

#include "minsat/geometry.hpp"
#include "minsat/partition.hpp"

namespace minsat {

/// Funnel of p: the points below p whose spanning rectangle with p holds
/// no other point, listed bottom to top. alt counts the strict left/right
/// side switches along the funnel; points on p's own column sit on
/// neither side.
struct FunnelRecord {
  Point p;
  std::vector<Point> funnel;  // ascending y
  std::int64_t alt = 0;
};

std::vector<FunnelRecord> funnels(const PointSet& x);

/// Funnel bound: |X| plus the funnel alternation total.
std::int64_t wb2_funnel(const PointSet& x);

/// A cut line in the mixed (vertical + horizontal) order.
struct MixedCut {
  bool horizontal = false;
  std::int64_t gap = 0;  // between ranks gap and gap+1 on its axis
};

using MixedCutOrder = std::vector<MixedCut>;

/// Crossing total of one mixed order: each processed line simultaneously
/// splits every region it intersects, and each split region contributes
/// its own crossing count. X must be a permutation.
std::int64_t cgb_order(const PointSet& x, const MixedCutOrder& order);

/// Maximum of cgb_order over all mixed orders; factorial enumeration,
/// guarded at (c-1)+(r-1) <= 7.
std::int64_t cgb_exact(const PointSet& x);

/// Guillotine bound: per-region free choice of vertical or horizontal
/// cuts, maximized by memoized recursion on rank rectangles. X must be a
/// permutation; guarded at c*r <= max_cells.
std::int64_t gb_exact(const PointSet& x, std::int64_t max_cells = 64 * 64);

}  // namespace minsat
