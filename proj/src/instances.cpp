#include "minsat/instances.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace minsat {

namespace {

std::int64_t pow2(std::int64_t e) { return (std::int64_t)1 << e; }

bool is_pow2(std::int64_t v) { return v >= 1 && (v & (v - 1)) == 0; }

std::int64_t log2_exact(std::int64_t v) {
  require(is_pow2(v), "expected a power of two");
  std::int64_t e = 0;
  while (pow2(e) < v) ++e;
  return e;
}

}  // namespace

Generated gen_monotone(std::int64_t m) {
  require(m >= 1, "gen_monotone: m >= 1");
  std::vector<Point> pts;
  pts.reserve(m);
  for (std::int64_t i = 1; i <= m; ++i) pts.push_back({i, i});
  return {PointSet(std::move(pts), Kind::instance),
          GenSpec{"monotone", 0, 0, 0, m, -1, -1, m}};
}

PointSet gen_brs_on(int level, const std::vector<std::int64_t>& rows,
                    const std::vector<std::int64_t>& cols) {
  require(level >= 0, "gen_brs_on: level >= 0");
  const std::int64_t sz = pow2(level);
  require((std::int64_t)rows.size() == sz && (std::int64_t)cols.size() == sz,
          "gen_brs_on: row/column set sizes must equal 2^level");
  if (level == 0) return PointSet({{cols[0], rows[0]}}, Kind::instance);
  std::vector<std::int64_t> rows_odd, rows_even, cols_left, cols_right;
  std::vector<std::int64_t> rs = rows, cs = cols;
  std::sort(rs.begin(), rs.end());
  std::sort(cs.begin(), cs.end());
  for (std::int64_t i = 0; i < sz; ++i) {
    (i % 2 == 0 ? rows_odd : rows_even).push_back(rs[i]);
    (i < sz / 2 ? cols_left : cols_right).push_back(cs[i]);
  }
  return set_union_of(gen_brs_on(level - 1, rows_odd, cols_left),
                      gen_brs_on(level - 1, rows_even, cols_right), Kind::instance);
}

Generated gen_brs(std::int64_t n) {
  const std::int64_t level = log2_exact(n);
  std::vector<std::int64_t> idx(n);
  std::iota(idx.begin(), idx.end(), 1);
  return {gen_brs_on((int)level, idx, idx), GenSpec{"brs", level, n, 0, n, -1, -1, n}};
}

Generated gen_esbrs(std::int64_t ell, const std::vector<std::int64_t>& rows) {
  require(ell >= 0, "gen_esbrs: ell >= 0");
  const std::int64_t n = pow2(ell);
  const std::int64_t universe = pow2(n);
  std::vector<std::int64_t> rs = rows;
  if (rs.empty()) {
    rs.resize(n);
    std::iota(rs.begin(), rs.end(), 1);
  }
  std::vector<std::int64_t> cols;
  for (std::int64_t j = 0; j < n; ++j) cols.push_back(pow2(j));
  return {gen_brs_on((int)ell, rs, cols), GenSpec{"esbrs", ell, n, universe, n, -1, -1, n}};
}

HardOneD gen_hard_semiperm(std::int64_t ell, GenGuard guard) {
  require(ell >= 1, "gen_hard_semiperm: ell >= 1");
  if (ell > 3 && !guard.allow_large)
    throw size_guard_error("gen_hard_semiperm: ell > 3 needs the size-guard override");
  const std::int64_t n = pow2(ell);
  const std::int64_t universe = pow2(n);
  HardOneD out;
  std::vector<Point> all;
  all.reserve(universe * n);
  for (std::int64_t s = 0; s < universe; ++s) {
    std::vector<std::int64_t> rows(n);
    std::iota(rows.begin(), rows.end(), s * n + 1);
    PointSet shifted = cyclic_shift(gen_esbrs(ell, rows).points, s, universe);
    for (const Point& p : shifted.points()) all.push_back(p);
    out.shifted.push_back(std::move(shifted));
  }
  out.whole.points = PointSet(std::move(all), Kind::instance);
  out.whole.spec =
      GenSpec{"hard1d", ell, n, universe, universe * n, -1, -1, ell};
  return out;
}

Generated gen_hard_perm(std::int64_t ell, GenGuard guard) {
  HardOneD hard = gen_hard_semiperm(ell, guard);
  const std::int64_t n = hard.whole.spec.n;
  // Replace column x by the block of columns (x-1)*n+1 .. x*n; the points
  // of a column walk that block left to right in row order.
  std::map<std::int64_t, std::int64_t> next_slot;
  std::vector<Point> pts;
  pts.reserve(hard.whole.points.size());
  for (const Point& p : hard.whole.points.points()) {  // ascending y
    const std::int64_t slot = next_slot[p.x]++;
    pts.push_back({(p.x - 1) * n + 1 + slot, p.y});
  }
  Generated out;
  out.points = PointSet(std::move(pts), Kind::instance);
  out.spec = hard.whole.spec;
  out.spec.family = "hard1d-perm";
  return out;
}

Generated gen_esbrs2d(std::int64_t ell) {
  require(ell >= 0, "gen_esbrs2d: ell >= 0");
  const std::int64_t n = pow2(ell);
  const std::int64_t universe = pow2(n);
  std::vector<std::int64_t> coords;
  for (std::int64_t j = 1; j <= n; ++j) coords.push_back(pow2(j));
  return {gen_brs_on((int)ell, coords, coords),
          GenSpec{"esbrs2d", ell, n, universe, n, -1, -1, n}};
}

Generated gen_shift2d(std::int64_t ell, std::int64_t s, std::int64_t s2) {
  Generated base = gen_esbrs2d(ell);
  const std::int64_t universe = base.spec.universe;
  PointSet shifted = cyclic_shift(base.points, s, universe);
  shifted = transpose(cyclic_shift(transpose(shifted), s2, universe));
  base.points = std::move(shifted);
  base.spec.family = "shift2d";
  base.spec.shift = s;
  base.spec.shift2 = s2;
  return base;
}

Generated gen_hard2d_semiperm(std::int64_t ell, GenGuard guard) {
  require(ell >= 1, "gen_hard2d_semiperm: ell >= 1");
  if (ell > 2 && !guard.allow_large)
    throw size_guard_error("gen_hard2d_semiperm: ell > 2 needs the size-guard override");
  const std::int64_t n = pow2(ell);
  const std::int64_t universe = pow2(n);
  std::vector<Point> all;
  all.reserve(universe * universe * n);
  // Box (i, j): row block i, column block j; horizontal shift i-1,
  // vertical shift j-1.
  for (std::int64_t i = 1; i <= universe; ++i)
    for (std::int64_t j = 1; j <= universe; ++j) {
      const Generated cell = gen_shift2d(ell, i - 1, j - 1);
      for (const Point& p : cell.points.points())
        all.push_back({p.x + (j - 1) * universe, p.y + (i - 1) * universe});
    }
  return {PointSet(std::move(all), Kind::instance),
          GenSpec{"hard2d", ell, n, universe, universe * universe * n, -1, -1, ell}};
}

Generated gen_hard2d_perm(std::int64_t ell, GenGuard guard) {
  Generated base = gen_hard2d_semiperm(ell, guard);
  const std::int64_t n = base.spec.n;
  // Column-block expansion, then row-block expansion.
  std::vector<Point> pts(base.points.points().begin(), base.points.points().end());
  {
    std::map<std::int64_t, std::int64_t> slot;
    std::sort(pts.begin(), pts.end());  // ascending y
    for (Point& p : pts) p.x = (p.x - 1) * n + 1 + slot[p.x]++;
  }
  {
    std::map<std::int64_t, std::int64_t> slot;
    std::sort(pts.begin(), pts.end(), [](const Point& a, const Point& b) {
      return a.x != b.x ? a.x < b.x : a.y < b.y;
    });
    for (Point& p : pts) p.y = (p.y - 1) * n + 1 + slot[p.y]++;
  }
  base.points = PointSet(std::move(pts), Kind::instance);
  base.spec.family = "hard2d-perm";
  return base;
}

Generated gen_iacono(std::int64_t k) {
  require(is_pow2(k), "gen_iacono: k must be a power of two");
  const std::int64_t ell = log2_exact(k);
  const std::int64_t universe = pow2(k);
  // Sibling strips of the leftmost root-leaf path of the balanced tree
  // over the universe: after halving down to [1, 2^(k-d)], the sibling
  // covers (2^(k-d-1), 2^(k-d)]. Its smallest column hosts the points.
  std::vector<std::int64_t> cols;
  for (std::int64_t width = universe; width >= 2; width /= 2) cols.push_back(width / 2 + 1);
  std::sort(cols.begin(), cols.end());
  require((std::int64_t)cols.size() == k, "gen_iacono: internal strip count mismatch");
  std::vector<std::int64_t> rows(k);
  std::iota(rows.begin(), rows.end(), 1);
  return {gen_brs_on((int)ell, rows, cols),
          GenSpec{"iacono", ell, k, universe, k, -1, -1, k}};
}

PointSet gen_random_semiperm(std::int64_t c, std::int64_t m, Rng& rng) {
  require(c >= 1 && m >= c, "gen_random_semiperm: need m >= c >= 1");
  std::vector<std::int64_t> col(m);
  for (std::int64_t i = 0; i < m; ++i) col[i] = i < c ? i + 1 : (std::int64_t)rng.below(c) + 1;
  // Shuffle so the forced first-c hits land on random rows.
  for (std::int64_t i = m - 1; i > 0; --i)
    std::swap(col[i], col[rng.below(i + 1)]);
  std::vector<Point> pts;
  pts.reserve(m);
  for (std::int64_t i = 0; i < m; ++i) pts.push_back({col[i], i + 1});
  return PointSet(std::move(pts), Kind::instance);
}

PointSet gen_random_perm(std::int64_t m, Rng& rng) {
  require(m >= 1, "gen_random_perm: m >= 1");
  std::vector<std::int64_t> col(m);
  std::iota(col.begin(), col.end(), 1);
  for (std::int64_t i = m - 1; i > 0; --i)
    std::swap(col[i], col[rng.below(i + 1)]);
  std::vector<Point> pts;
  pts.reserve(m);
  for (std::int64_t i = 0; i < m; ++i) pts.push_back({col[i], i + 1});
  return PointSet(std::move(pts), Kind::instance);
}

}  // namespace minsat
