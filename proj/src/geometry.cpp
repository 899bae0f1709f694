#include "minsat/geometry.hpp"

#include <algorithm>
#include <limits>
#include <map>

namespace minsat {

namespace {
constexpr std::int64_t kNegInf = std::numeric_limits<std::int64_t>::min();
constexpr std::int64_t kPosInf = std::numeric_limits<std::int64_t>::max();
}  // namespace

PointSet::PointSet(std::vector<Point> pts, Kind kind) : pts_(std::move(pts)), kind_(kind) {
  std::sort(pts_.begin(), pts_.end());
  pts_.erase(std::unique(pts_.begin(), pts_.end()), pts_.end());
}

bool PointSet::contains(const Point& p) const {
  return std::binary_search(pts_.begin(), pts_.end(), p);
}

std::vector<std::int64_t> PointSet::column_coords() const {
  std::vector<std::int64_t> xs;
  xs.reserve(pts_.size());
  for (const Point& p : pts_) xs.push_back(p.x);
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  return xs;
}

std::vector<std::int64_t> PointSet::row_coords() const {
  std::vector<std::int64_t> ys;
  ys.reserve(pts_.size());
  for (const Point& p : pts_) ys.push_back(p.y);  // already y-sorted
  ys.erase(std::unique(ys.begin(), ys.end()), ys.end());
  return ys;
}

std::int64_t PointSet::active_columns() const { return (std::int64_t)column_coords().size(); }
std::int64_t PointSet::active_rows() const { return (std::int64_t)row_coords().size(); }

bool PointSet::is_semi_permutation() const {
  for (std::size_t i = 1; i < pts_.size(); ++i)
    if (pts_[i].y == pts_[i - 1].y) return false;
  return true;
}

bool PointSet::is_permutation() const {
  return is_semi_permutation() && active_columns() == (std::int64_t)pts_.size();
}

void PointSet::require_semi_permutation(const char* who) const {
  if (!is_semi_permutation())
    throw std::invalid_argument(std::string(who) + ": input is not a semi-permutation");
}

PointSet set_union_of(const PointSet& a, const PointSet& b, Kind kind) {
  std::vector<Point> merged;
  merged.reserve(a.size() + b.size());
  std::merge(a.points().begin(), a.points().end(), b.points().begin(), b.points().end(),
             std::back_inserter(merged));
  return PointSet(std::move(merged), kind);
}

PointSet set_difference(const PointSet& a, const PointSet& b, Kind kind) {
  std::vector<Point> out;
  std::set_difference(a.points().begin(), a.points().end(), b.points().begin(),
                      b.points().end(), std::back_inserter(out));
  return PointSet(std::move(out), kind);
}

bool is_subset(const PointSet& a, const PointSet& b) {
  return std::includes(b.points().begin(), b.points().end(), a.points().begin(),
                       a.points().end());
}

namespace {

// Row-sweep over the points above p. The corridor (lo, hi) tracks the
// nearest blockers left/right of p's column among rows already scanned;
// a candidate q on the current row violates iff it falls strictly inside
// the corridor. A blocker on p's own column closes the corridor for good.
// emit returns false to stop early (used by is_satisfied).
template <typename Emit>
void scan_violations(const PointSet& ps, Emit emit) {
  const std::vector<Point>& pts = ps.points();
  const std::size_t n = pts.size();
  // Row boundaries in the (y, x)-sorted array.
  std::vector<std::size_t> row_begin;
  for (std::size_t i = 0; i < n; ++i)
    if (i == 0 || pts[i].y != pts[i - 1].y) row_begin.push_back(i);
  row_begin.push_back(n);
  const std::size_t rows = row_begin.size() - 1;

  for (std::size_t ri = 0; ri < rows; ++ri) {
    for (std::size_t pi = row_begin[ri]; pi < row_begin[ri + 1]; ++pi) {
      const Point p = pts[pi];
      std::int64_t lo = pi > row_begin[ri] ? pts[pi - 1].x : kNegInf;
      std::int64_t hi = pi + 1 < row_begin[ri + 1] ? pts[pi + 1].x : kPosInf;
      for (std::size_t rj = ri + 1; rj < rows; ++rj) {
        const std::size_t b = row_begin[rj], e = row_begin[rj + 1];
        // First point on row rj with x >= p.x.
        std::size_t mid = std::lower_bound(pts.begin() + b, pts.begin() + e, p.x,
                                           [](const Point& q, std::int64_t v) { return q.x < v; }) -
                          pts.begin();
        bool closed = false;
        if (mid < e && pts[mid].x == p.x) {
          closed = true;  // point straight above p blocks all higher rows
        } else {
          if (mid > b) {
            const Point ql = pts[mid - 1];  // nearest strictly left
            if (ql.x > lo && !emit(p, ql)) return;
            lo = std::max(lo, ql.x);
          }
          if (mid < e) {
            const Point qr = pts[mid];  // nearest strictly right
            if (qr.x < hi && !emit(p, qr)) return;
            hi = std::min(hi, qr.x);
          }
        }
        if (closed) break;
      }
    }
  }
}

}  // namespace

bool is_satisfied(const PointSet& p) {
  bool ok = true;
  scan_violations(p, [&](const Point&, const Point&) {
    ok = false;
    return false;
  });
  return ok;
}

bool is_satisfied_pairscan(const PointSet& ps) {
  const std::vector<Point>& pts = ps.points();
  for (std::size_t i = 0; i < pts.size(); ++i) {
    for (std::size_t j = i + 1; j < pts.size(); ++j) {
      if (collinear(pts[i], pts[j])) continue;
      const Rect r = Rect::spanning(pts[i], pts[j]);
      bool witnessed = false;
      for (std::size_t k = 0; k < pts.size() && !witnessed; ++k)
        witnessed = k != i && k != j && r.contains(pts[k]);
      if (!witnessed) return false;
    }
  }
  return true;
}

std::vector<std::pair<Point, Point>> unsatisfied_pairs(const PointSet& p) {
  std::vector<std::pair<Point, Point>> out;
  scan_violations(p, [&](const Point& a, const Point& b) {
    out.emplace_back(a, b);
    return true;
  });
  std::sort(out.begin(), out.end());
  return out;
}

bool is_feasible(const PointSet& x, const PointSet& y) {
  x.require_semi_permutation("is_feasible");
  for (const Point& p : y.points())
    if (x.contains(p)) throw std::invalid_argument("is_feasible: duplicate point in X and Y");
  return is_satisfied(set_union_of(x, y));
}

PointSet collapse_columns(const PointSet& p, std::int64_t x_lo, std::int64_t x_hi) {
  require(x_lo <= x_hi, "collapse_columns: empty range");
  std::int64_t target = kPosInf;
  for (const Point& q : p.points())
    if (q.x >= x_lo && q.x <= x_hi) target = std::min(target, q.x);
  require(target != kPosInf, "collapse_columns: range contains no active column");
  std::vector<Point> out;
  out.reserve(p.size());
  for (const Point& q : p.points())
    out.push_back(q.x >= x_lo && q.x <= x_hi ? Point{target, q.y} : q);
  return PointSet(std::move(out), p.kind());
}

PointSet transpose(const PointSet& p) {
  std::vector<Point> out;
  out.reserve(p.size());
  for (const Point& q : p.points()) out.push_back({q.y, q.x});
  return PointSet(std::move(out), p.kind());
}

PointSet collapse_rows(const PointSet& p, std::int64_t y_lo, std::int64_t y_hi) {
  return transpose(collapse_columns(transpose(p), y_lo, y_hi));
}

namespace {

// Largest value in sorted `vals` that is <= v, else the smallest value.
std::int64_t snap(const std::vector<std::int64_t>& vals, std::int64_t v) {
  auto it = std::upper_bound(vals.begin(), vals.end(), v);
  return it == vals.begin() ? vals.front() : *(it - 1);
}

}  // namespace

PointSet to_canonical(const PointSet& x, const PointSet& y) {
  if (!is_feasible(x, y)) throw std::invalid_argument("to_canonical: Y is not feasible for X");
  const std::vector<std::int64_t> cols = x.column_coords();
  const std::vector<std::int64_t> rows = x.row_coords();
  std::vector<Point> moved;
  moved.reserve(y.size());
  for (const Point& q : y.points()) moved.push_back({snap(cols, q.x), snap(rows, q.y)});
  PointSet canon(std::move(moved), Kind::solution);
  return set_difference(canon, x);
}

PointSet to_special(const PointSet& x, const PointSet& y) {
  require(is_doubled_space(x), "to_special: X must live in the doubled coordinate space");
  // Canonical check: every solution point on an active row and column of X.
  {
    const std::vector<std::int64_t> cols = x.column_coords();
    const std::vector<std::int64_t> rows = x.row_coords();
    for (const Point& q : y.points()) {
      const bool on_col = std::binary_search(cols.begin(), cols.end(), q.x);
      const bool on_row = std::binary_search(rows.begin(), rows.end(), q.y);
      require(on_col && on_row, "to_special: Y is not canonical for X");
    }
  }
  std::vector<Point> out;
  out.reserve(2 * (x.size() + y.size()));
  for (const PointSet* s : {&x, &y})
    for (const Point& p : s->points()) {
      out.push_back({p.x - 1, p.y});
      out.push_back({p.x + 1, p.y});
    }
  return PointSet(std::move(out), Kind::solution);
}

PointSet reduce(const PointSet& x) {
  x.require_semi_permutation("reduce");
  std::vector<Point> stack;
  stack.reserve(x.size());
  for (const Point& p : x.points()) {  // ascending y
    while (stack.size() >= 2 && stack.back().x == p.x && stack[stack.size() - 2].x == p.x)
      stack.pop_back();
    stack.push_back(p);
  }
  return PointSet(std::move(stack), x.kind());
}

bool is_reduced(const PointSet& x) {
  const std::vector<Point>& pts = x.points();
  for (std::size_t i = 2; i < pts.size(); ++i)
    if (pts[i].x == pts[i - 1].x && pts[i].x == pts[i - 2].x) return false;
  return true;
}

PointSet cyclic_shift(const PointSet& x, std::int64_t s, std::int64_t n_universe) {
  require(s >= 0 && s < n_universe, "cyclic_shift: shift out of range");
  std::vector<Point> out;
  out.reserve(x.size());
  for (const Point& p : x.points()) {
    require(p.x >= 1 && p.x <= n_universe, "cyclic_shift: point outside column universe");
    out.push_back({(p.x - 1 + s) % n_universe + 1, p.y});
  }
  return PointSet(std::move(out), x.kind());
}

PointSet normalize(const PointSet& p) {
  const std::vector<std::int64_t> cols = p.column_coords();
  const std::vector<std::int64_t> rows = p.row_coords();
  std::map<std::int64_t, std::int64_t> cmap, rmap;
  for (std::size_t i = 0; i < cols.size(); ++i) cmap[cols[i]] = 2 * (std::int64_t)(i + 1);
  for (std::size_t i = 0; i < rows.size(); ++i) rmap[rows[i]] = (std::int64_t)(i + 1);
  std::vector<Point> out;
  out.reserve(p.size());
  for (const Point& q : p.points()) out.push_back({cmap[q.x], rmap[q.y]});
  return PointSet(std::move(out), p.kind());
}

bool is_doubled_space(const PointSet& p) {
  for (const Point& q : p.points())
    if (q.x % 2 != 0 || q.x <= 0 || q.y < 1) return false;
  return true;
}

PointSet double_rows(const PointSet& x) {
  x.require_semi_permutation("double_rows");
  std::vector<Point> out;
  out.reserve(2 * x.size());
  std::int64_t i = 1;
  for (const Point& p : x.points()) {  // ascending y
    out.push_back({p.x, 2 * i - 1});
    out.push_back({p.x, 2 * i});
    ++i;
  }
  return PointSet(std::move(out), Kind::instance);
}

}  // namespace minsat
