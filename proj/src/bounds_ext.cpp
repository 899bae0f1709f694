#include "minsat/bounds_ext.hpp"

#include <algorithm>
#include <limits>
#include <unordered_map>

namespace minsat {

namespace {
constexpr std::int64_t kNegInf = std::numeric_limits<std::int64_t>::min();
constexpr std::int64_t kPosInf = std::numeric_limits<std::int64_t>::max();
}  // namespace

std::vector<FunnelRecord> funnels(const PointSet& x) {
  x.require_semi_permutation("funnels");
  const std::vector<Point>& pts = x.points();  // ascending y, one per row
  std::vector<FunnelRecord> out;
  out.reserve(pts.size());
  for (std::size_t i = 0; i < pts.size(); ++i) {
    FunnelRecord rec;
    rec.p = pts[i];
    std::int64_t lo = kNegInf, hi = kPosInf;
    for (std::size_t j = i; j-- > 0;) {  // descending y below p
      const Point q = pts[j];
      bool in_funnel;
      if (q.x == pts[i].x)
        in_funnel = lo != pts[i].x && hi != pts[i].x;
      else if (q.x < pts[i].x)
        in_funnel = q.x > lo;
      else
        in_funnel = q.x < hi;
      if (in_funnel) rec.funnel.push_back(q);
      if (q.x <= pts[i].x) lo = std::max(lo, q.x);
      if (q.x >= pts[i].x) hi = std::min(hi, q.x);
      if (lo == pts[i].x && hi == pts[i].x) break;
    }
    std::reverse(rec.funnel.begin(), rec.funnel.end());
    for (std::size_t k = 0; k + 1 < rec.funnel.size(); ++k) {
      const Point a = rec.funnel[k], b = rec.funnel[k + 1];
      const bool lr = a.x < pts[i].x && b.x > pts[i].x;
      const bool rl = a.x > pts[i].x && b.x < pts[i].x;
      if (lr || rl) ++rec.alt;
    }
    out.push_back(std::move(rec));
  }
  return out;
}

std::int64_t wb2_funnel(const PointSet& x) {
  std::int64_t total = (std::int64_t)x.size();
  for (const FunnelRecord& rec : funnels(x)) total += rec.alt;
  return total;
}

namespace {

struct PermGrid {
  std::int64_t n = 0;
  std::vector<std::int64_t> row_of;  // row rank of the point on column rank i (1-based)
};

PermGrid perm_grid(const PointSet& x) {
  require(x.is_permutation(), "guillotine bounds are defined for permutations");
  const std::vector<std::int64_t> cols = x.column_coords();
  const std::vector<std::int64_t> rows = x.row_coords();
  PermGrid g;
  g.n = (std::int64_t)cols.size();
  g.row_of.assign(g.n + 1, 0);
  for (const Point& p : x.points()) {
    const std::int64_t ci = std::lower_bound(cols.begin(), cols.end(), p.x) - cols.begin() + 1;
    const std::int64_t ri = std::lower_bound(rows.begin(), rows.end(), p.y) - rows.begin() + 1;
    g.row_of[ci] = ri;
  }
  return g;
}

struct GbSolver {
  const PermGrid& g;
  std::unordered_map<std::uint64_t, std::int64_t> memo;

  explicit GbSolver(const PermGrid& grid) : g(grid) {}

  static std::uint64_t key(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d) {
    return (std::uint64_t)a << 48 | (std::uint64_t)b << 32 | (std::uint64_t)c << 16 |
           (std::uint64_t)d;
  }

  // Points of the region as (col, row) rank pairs.
  std::vector<std::pair<std::int64_t, std::int64_t>> collect(std::int64_t x1, std::int64_t x2,
                                                             std::int64_t y1,
                                                             std::int64_t y2) const {
    std::vector<std::pair<std::int64_t, std::int64_t>> pts;
    for (std::int64_t c = x1; c <= x2; ++c)
      if (g.row_of[c] >= y1 && g.row_of[c] <= y2) pts.push_back({c, g.row_of[c]});
    return pts;
  }

  std::int64_t solve(std::int64_t x1, std::int64_t x2, std::int64_t y1, std::int64_t y2) {
    auto pts = collect(x1, x2, y1, y2);
    if (pts.size() <= 1) return 0;
    // Shrink to the bounding ranks of the contained points; the value only
    // depends on the point set.
    std::int64_t nx1 = kPosInf, nx2 = kNegInf, ny1 = kPosInf, ny2 = kNegInf;
    for (auto [c, r] : pts) {
      nx1 = std::min(nx1, c);
      nx2 = std::max(nx2, c);
      ny1 = std::min(ny1, r);
      ny2 = std::max(ny2, r);
    }
    const std::uint64_t k = key(nx1, nx2, ny1, ny2);
    if (auto it = memo.find(k); it != memo.end()) return it->second;

    std::int64_t best = 0;
    // Vertical cuts between consecutive occupied columns.
    {
      std::vector<std::int64_t> xs;
      for (auto [c, r] : pts) xs.push_back(c);
      std::sort(xs.begin(), xs.end());
      auto by_row = pts;
      std::sort(by_row.begin(), by_row.end(),
                [](auto a, auto b) { return a.second < b.second; });
      for (std::size_t i = 0; i + 1 < xs.size(); ++i) {
        const std::int64_t gap = xs[i];  // canonical cut in (xs[i], xs[i+1])
        std::int64_t cost = 0;
        for (std::size_t j = 0; j + 1 < by_row.size(); ++j)
          if ((by_row[j].first <= gap) != (by_row[j + 1].first <= gap)) ++cost;
        best = std::max(best, cost + solve(nx1, gap, ny1, ny2) + solve(gap + 1, nx2, ny1, ny2));
      }
    }
    // Horizontal cuts between consecutive occupied rows.
    {
      std::vector<std::int64_t> ys;
      for (auto [c, r] : pts) ys.push_back(r);
      std::sort(ys.begin(), ys.end());
      auto by_col = pts;
      std::sort(by_col.begin(), by_col.end(), [](auto a, auto b) { return a.first < b.first; });
      for (std::size_t i = 0; i + 1 < ys.size(); ++i) {
        const std::int64_t gap = ys[i];
        std::int64_t cost = 0;
        for (std::size_t j = 0; j + 1 < by_col.size(); ++j)
          if ((by_col[j].second <= gap) != (by_col[j + 1].second <= gap)) ++cost;
        best = std::max(best, cost + solve(nx1, nx2, ny1, gap) + solve(nx1, nx2, gap + 1, ny2));
      }
    }
    memo[k] = best;
    return best;
  }
};

}  // namespace

std::int64_t gb_exact(const PointSet& x, std::int64_t max_cells) {
  const PermGrid grid = perm_grid(x);
  if (grid.n * grid.n > max_cells)
    throw size_guard_error("gb_exact: instance exceeds the rank-rectangle table guard");
  GbSolver solver(grid);
  return solver.solve(1, grid.n, 1, grid.n);
}

namespace {

struct Region {
  std::int64_t x1, x2, y1, y2;                          // rank ranges
  std::vector<std::pair<std::int64_t, std::int64_t>> pts;  // (col, row) ranks
};

}  // namespace

std::int64_t cgb_order(const PointSet& x, const MixedCutOrder& order) {
  const PermGrid grid = perm_grid(x);
  const std::int64_t n = grid.n;
  {
    std::vector<char> seen_v(n, 0), seen_h(n, 0);
    require((std::int64_t)order.size() == 2 * (n - 1),
            "cgb_order: order must list every vertical and horizontal gap");
    for (const MixedCut& cut : order) {
      require(cut.gap >= 1 && cut.gap <= n - 1, "cgb_order: gap out of range");
      std::vector<char>& seen = cut.horizontal ? seen_h : seen_v;
      require(!seen[cut.gap], "cgb_order: duplicate gap in order");
      seen[cut.gap] = 1;
    }
  }
  std::vector<Region> regions;
  {
    Region all{1, n, 1, n, {}};
    for (std::int64_t c = 1; c <= n; ++c) all.pts.push_back({c, grid.row_of[c]});
    regions.push_back(std::move(all));
  }
  std::int64_t total = 0;
  for (const MixedCut& cut : order) {
    std::vector<Region> next;
    next.reserve(regions.size() + 4);
    for (Region& reg : regions) {
      const bool hit = cut.horizontal ? (reg.y1 <= cut.gap && cut.gap < reg.y2)
                                      : (reg.x1 <= cut.gap && cut.gap < reg.x2);
      if (!hit) {
        next.push_back(std::move(reg));
        continue;
      }
      auto pts = reg.pts;
      if (cut.horizontal) {
        std::sort(pts.begin(), pts.end(), [](auto a, auto b) { return a.first < b.first; });
        for (std::size_t j = 0; j + 1 < pts.size(); ++j)
          if ((pts[j].second <= cut.gap) != (pts[j + 1].second <= cut.gap)) ++total;
      } else {
        std::sort(pts.begin(), pts.end(), [](auto a, auto b) { return a.second < b.second; });
        for (std::size_t j = 0; j + 1 < pts.size(); ++j)
          if ((pts[j].first <= cut.gap) != (pts[j + 1].first <= cut.gap)) ++total;
      }
      Region a, b;
      if (cut.horizontal) {
        a = Region{reg.x1, reg.x2, reg.y1, cut.gap, {}};
        b = Region{reg.x1, reg.x2, cut.gap + 1, reg.y2, {}};
        for (auto p : reg.pts) (p.second <= cut.gap ? a : b).pts.push_back(p);
      } else {
        a = Region{reg.x1, cut.gap, reg.y1, reg.y2, {}};
        b = Region{cut.gap + 1, reg.x2, reg.y1, reg.y2, {}};
        for (auto p : reg.pts) (p.first <= cut.gap ? a : b).pts.push_back(p);
      }
      // Regions that can never again contribute crossings are dropped.
      if (a.pts.size() > 1) next.push_back(std::move(a));
      if (b.pts.size() > 1) next.push_back(std::move(b));
    }
    regions = std::move(next);
  }
  return total;
}

std::int64_t cgb_exact(const PointSet& x) {
  const PermGrid grid = perm_grid(x);
  const std::int64_t n = grid.n;
  const std::int64_t lines = 2 * (n - 1);
  if (lines > 7)
    throw size_guard_error(
        "cgb_exact: factorial enumeration limited to 7 lines; sample cgb_order instead");
  MixedCutOrder order;
  for (std::int64_t g = 1; g < n; ++g) order.push_back({false, g});
  for (std::int64_t g = 1; g < n; ++g) order.push_back({true, g});
  auto cmp = [](const MixedCut& a, const MixedCut& b) {
    return std::pair(a.horizontal, a.gap) < std::pair(b.horizontal, b.gap);
  };
  std::sort(order.begin(), order.end(), cmp);
  std::int64_t best = 0;
  do {
    best = std::max(best, cgb_order(x, order));
  } while (std::next_permutation(order.begin(), order.end(), cmp));
  return best;
}

}  // namespace minsat
