#include "minsat/solvers.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

namespace minsat {

namespace {

std::vector<Point> grid_candidates(const PointSet& x) {
  std::vector<Point> cand;
  for (std::int64_t y : x.row_coords())
    for (std::int64_t cx : x.column_coords()) {
      const Point p{cx, y};
      if (!x.contains(p)) cand.push_back(p);
    }
  std::sort(cand.begin(), cand.end());
  return cand;
}

}  // namespace

PointSet opt_bruteforce(const PointSet& x, std::int64_t max_grid) {
  x.require_semi_permutation("opt_bruteforce");
  if (x.size() <= 1) return PointSet({}, Kind::solution);
  const std::vector<Point> cand = grid_candidates(x);
  if ((std::int64_t)cand.size() > max_grid)
    throw size_guard_error("opt_bruteforce: candidate grid exceeds the enumeration guard");
  if (is_satisfied(x)) return PointSet({}, Kind::solution);
  const std::size_t n = cand.size();
  for (std::size_t k = 1; k <= n; ++k) {
    // k-combinations in lexicographic order; the first feasible subset is
    // the lexicographically smallest optimum.
    std::vector<std::size_t> idx(k);
    std::iota(idx.begin(), idx.end(), 0);
    while (true) {
      std::vector<Point> pick;
      pick.reserve(k);
      for (std::size_t i : idx) pick.push_back(cand[i]);
      PointSet y(std::move(pick), Kind::solution);
      if (is_satisfied(set_union_of(x, y))) return y;
      // Advance the combination.
      std::size_t pos = k;
      while (pos > 0 && idx[pos - 1] == n - k + pos - 1) --pos;
      if (pos == 0) break;
      ++idx[pos - 1];
      for (std::size_t i = pos; i < k; ++i) idx[i] = idx[i - 1] + 1;
    }
  }
  throw std::logic_error("opt_bruteforce: grid exhausted without a feasible solution");
}

// ---------------------------------------------------------------------------
// Exact DP over top profiles.
//
// A state at row t is the bottom-to-top sequence of per-column top points
// of a satisfied superset of the first t input points; only the order of
// the tops matters for the conflicts any future row can create. A step
// picks the set S of columns receiving points on the next row (the input
// column forced), checks S against the current tops, and re-tops S.
// ---------------------------------------------------------------------------

namespace {

struct DpInput {
  int n = 0;                        // columns
  std::vector<int> pcol;            // 0-based column of the point on row t
  std::vector<std::int64_t> col_x;  // column coordinate by index
  std::vector<std::int64_t> row_y;  // row coordinate by index
};

DpInput dp_input(const PointSet& x) {
  DpInput in;
  const std::vector<std::int64_t> cols = x.column_coords();
  in.n = (int)cols.size();
  in.col_x = cols;
  for (const Point& p : x.points()) {  // ascending y
    in.pcol.push_back((int)(std::lower_bound(cols.begin(), cols.end(), p.x) - cols.begin()));
    in.row_y.push_back(p.y);
  }
  return in;
}

// A profile is an ordered partition of a column subset into row groups,
// bottom group first; columns of one group hold their tops on a shared
// row. Keys give each column a 4-bit group id (0 = absent).
using Groups = std::vector<std::uint32_t>;

std::uint64_t pack_groups(const Groups& groups) {
  std::uint64_t key = 0;
  for (std::size_t g = 0; g < groups.size(); ++g)
    for (std::uint32_t rest = groups[g]; rest;) {
      const int c = std::countr_zero(rest);
      rest &= rest - 1;
      key |= (std::uint64_t)(g + 1) << (4 * c);
    }
  return key;
}

Groups unpack_groups(std::uint64_t key) {
  Groups groups;
  for (int c = 0; c < 12; ++c) {
    const int g = (int)(key >> (4 * c) & 15);
    if (g == 0) continue;
    if ((int)groups.size() < g) groups.resize(g, 0);
    groups[g - 1] |= std::uint32_t(1) << c;
  }
  return groups;
}

// Would placing points on columns S (one row above everything) leave an
// unsatisfiable pair against the profiled tops? A witness for the pair
// (p in S, top q) is another new point, or a top on q's row or higher,
// inside the spanning column range.
bool tops_conflict(std::uint32_t s_mask, const Groups& groups,
                   const std::vector<std::vector<std::uint32_t>>& span) {
  std::uint32_t at_or_above = 0;
  for (std::size_t g = groups.size(); g-- > 0;) {
    at_or_above |= groups[g];
    for (std::uint32_t qrest = groups[g]; qrest;) {
      const int cq = std::countr_zero(qrest);
      qrest &= qrest - 1;
      for (std::uint32_t rest = s_mask; rest;) {
        const int cp = std::countr_zero(rest);
        rest &= rest - 1;
        if (cp == cq) continue;
        const std::uint32_t witnesses =
            ((s_mask & ~(std::uint32_t(1) << cp)) |
             (at_or_above & ~(std::uint32_t(1) << cq))) &
            span[cp][cq];
        if (witnesses == 0) return true;
      }
    }
  }
  return false;
}

std::vector<std::vector<std::uint32_t>> span_masks(int n) {
  std::vector<std::vector<std::uint32_t>> span(n, std::vector<std::uint32_t>(n, 0));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = std::min(a, b); c <= std::max(a, b); ++c)
        span[a][b] |= std::uint32_t(1) << c;
  return span;
}

struct DpState {
  std::int64_t size = 0;
  std::uint64_t prev_key = 0;
  std::uint32_t added = 0;  // column set placed on this row
};

PointSet dp_reconstruct(const DpInput& in,
                        const std::vector<std::map<std::uint64_t, DpState>>& layers,
                        std::uint64_t final_key, const PointSet& x) {
  std::vector<Point> z;
  std::uint64_t key = final_key;
  for (std::size_t t = in.pcol.size(); t >= 1; --t) {
    const DpState& st = layers[t].at(key);
    for (std::uint32_t rest = st.added; rest;) {
      const int c = std::countr_zero(rest);
      rest &= rest - 1;
      z.push_back({in.col_x[c], in.row_y[t - 1]});
    }
    key = st.prev_key;
  }
  return set_difference(PointSet(std::move(z), Kind::solution), x);
}

PointSet dp_reachable(const PointSet& x, const DpInput& in) {
  const int n = in.n;
  const std::size_t m = in.pcol.size();
  const auto span = span_masks(n);
  std::vector<std::map<std::uint64_t, DpState>> layers(m + 1);

  const auto relax = [](std::map<std::uint64_t, DpState>& layer, std::uint64_t key,
                        const DpState& st) {
    auto [it, fresh] = layer.try_emplace(key, st);
    if (fresh) return;
    DpState& old = it->second;
    if (st.size < old.size ||
        (st.size == old.size &&
         std::pair(st.prev_key, st.added) < std::pair(old.prev_key, old.added)))
      old = st;
  };

  const std::uint32_t full = (std::uint32_t(1) << n) - 1;
  for (std::uint32_t s = 0; s <= full; ++s) {
    if (!(s >> in.pcol[0] & 1)) continue;
    relax(layers[1], pack_groups({s}), DpState{std::popcount(s), 0, s});
  }
  for (std::size_t t = 1; t < m; ++t) {
    const int cx = in.pcol[t];
    for (const auto& [key, st] : layers[t]) {
      const Groups groups = unpack_groups(key);
      for (std::uint32_t s = 0; s <= full; ++s) {
        if (!(s >> cx & 1)) continue;
        if (tops_conflict(s, groups, span)) continue;
        Groups next;
        next.reserve(groups.size() + 1);
        for (std::uint32_t g : groups)
          if (g & ~s) next.push_back(g & ~s);
        next.push_back(s);
        relax(layers[t + 1], pack_groups(next),
              DpState{st.size + std::popcount(s), key, s});
      }
    }
  }
  std::uint64_t best_key = 0;
  std::int64_t best = -1;
  for (const auto& [key, st] : layers[m])
    if (best < 0 || st.size < best) {
      best = st.size;
      best_key = key;
    }
  return dp_reconstruct(in, layers, best_key, x);
}

// Literal profile-table filling, kept as a self-check of the reachable
// search: profiles map each column to a group 1..d or stay absent, and a
// candidate predecessor must agree outside the freshly topped group.
PointSet dp_full_enumeration(const PointSet& x, const DpInput& in) {
  const int n = in.n;
  require(n <= 4, "opt_exact_dp: full enumeration mode is limited to 4 columns");
  const std::size_t m = in.pcol.size();
  const auto span = span_masks(n);

  // All canonical group assignments: values[c] in 0..d with every value
  // 1..d present.
  std::vector<std::vector<int>> profiles;
  std::vector<int> values(n, 0);
  const auto canonical = [&](const std::vector<int>& v) {
    int d = *std::max_element(v.begin(), v.end());
    std::vector<char> seen(d + 1, 0);
    for (int g : v) seen[g] = 1;
    for (int g = 1; g <= d; ++g)
      if (!seen[g]) return false;
    return d >= 1;
  };
  const std::int64_t total = [&] {
    std::int64_t t = 1;
    for (int i = 0; i < n; ++i) t *= n + 1;
    return t;
  }();
  for (std::int64_t code = 0; code < total; ++code) {
    std::int64_t rest = code;
    for (int c = 0; c < n; ++c) {
      values[c] = (int)(rest % (n + 1));
      rest /= n + 1;
    }
    if (canonical(values)) profiles.push_back(values);
  }

  const auto depth = [](const std::vector<int>& v) {
    return *std::max_element(v.begin(), v.end());
  };
  const auto to_groups = [](const std::vector<int>& v) {
    Groups groups;
    const int d = *std::max_element(v.begin(), v.end());
    groups.assign(d, 0);
    for (int c = 0; c < (int)v.size(); ++c)
      if (v[c] > 0) groups[v[c] - 1] |= std::uint32_t(1) << c;
    return groups;
  };
  const auto residual_groups = [](const Groups& groups, std::uint32_t drop) {
    Groups out;
    for (std::uint32_t g : groups)
      if (g & ~drop) out.push_back(g & ~drop);
    return out;
  };

  struct Cell {
    std::int64_t size = -1;
    int prev = -1;
  };
  std::vector<std::vector<Cell>> table(m + 1, std::vector<Cell>(profiles.size()));

  for (std::size_t pi = 0; pi < profiles.size(); ++pi) {
    const auto& v = profiles[pi];
    if (depth(v) != 1 || v[in.pcol[0]] != 1) continue;
    table[1][pi].size = std::count(v.begin(), v.end(), 1);
  }
  for (std::size_t t = 1; t < m; ++t) {
    for (std::size_t pi = 0; pi < profiles.size(); ++pi) {
      const auto& v = profiles[pi];
      const int d = depth(v);
      if ((std::size_t)d > t + 1 || v[in.pcol[t]] != d) continue;  // legality
      std::uint32_t c1 = 0;
      for (int c = 0; c < n; ++c)
        if (v[c] == d) c1 |= std::uint32_t(1) << c;
      const Groups residual = residual_groups(to_groups(v), c1);
      for (std::size_t qi = 0; qi < profiles.size(); ++qi) {
        if (table[t][qi].size < 0) continue;
        const auto& w = profiles[qi];
        if ((std::size_t)depth(w) > t || w[in.pcol[t - 1]] != depth(w)) continue;
        bool ok = true;
        for (int c = 0; c < n && ok; ++c)
          if (w[c] == 0 && v[c] != 0 && !(c1 >> c & 1)) ok = false;
        if (!ok) continue;
        if (residual_groups(to_groups(w), c1) != residual) continue;
        if (tops_conflict(c1, to_groups(w), span)) continue;
        const std::int64_t cand = table[t][qi].size + std::popcount(c1);
        Cell& cell = table[t + 1][pi];
        if (cell.size < 0 || cand < cell.size) cell = Cell{cand, (int)qi};
      }
    }
  }
  std::int64_t best = -1;
  int best_pi = -1;
  for (std::size_t pi = 0; pi < profiles.size(); ++pi) {
    const Cell& cell = table[m][pi];
    if (cell.size >= 0 && (best < 0 || cell.size < best)) {
      best = cell.size;
      best_pi = (int)pi;
    }
  }
  require(best >= 0, "opt_exact_dp: empty profile table");
  std::vector<Point> z;
  int pi = best_pi;
  for (std::size_t t = m; t >= 1; --t) {
    const auto& v = profiles[pi];
    const int d = depth(v);
    for (int c = 0; c < n; ++c)
      if (v[c] == d) z.push_back({in.col_x[c], in.row_y[t - 1]});
    pi = table[t][pi].prev;
  }
  return set_difference(PointSet(std::move(z), Kind::solution), x);
}

}  // namespace

PointSet opt_exact_dp(const PointSet& x, std::int64_t max_columns, DpMode mode) {
  x.require_semi_permutation("opt_exact_dp");
  require(is_reduced(x), "opt_exact_dp: input must be in reduced form");
  if (x.size() <= 1) return PointSet({}, Kind::solution);
  const DpInput in = dp_input(x);
  if (in.n > max_columns)
    throw size_guard_error("opt_exact_dp: too many columns for the profile table");
  require(in.n <= 12, "opt_exact_dp: profile keys support at most 12 columns");
  return mode == DpMode::reachable ? dp_reachable(x, in) : dp_full_enumeration(x, in);
}

namespace {

// Column coordinates must be exactly 2, 4, ..., 2c so strip boundaries
// land on odd lines 1, 3, ..., 2c+1.
void require_normalized_columns(const PointSet& x, const char* who) {
  const std::vector<std::int64_t> cols = x.column_coords();
  for (std::size_t i = 0; i < cols.size(); ++i)
    if (cols[i] != 2 * (std::int64_t)(i + 1))
      throw std::invalid_argument(std::string(who) +
                                  ": expected normalized doubled columns (2, 4, ..., 2c)");
}

std::int64_t rank_of(const Point& p) { return p.x / 2; }

}  // namespace

PointSet static_solution(const PointSet& x, const PartitionTree& t) {
  x.require_semi_permutation("static_solution");
  if (x.empty()) return PointSet({}, Kind::solution);
  require_normalized_columns(x, "static_solution");
  require(t.columns() == x.active_columns(), "static_solution: tree does not match instance");
  std::vector<Point> out;
  for (const Point& p : x.points()) {
    const std::int64_t r = rank_of(p);
    int v = t.root();
    while (true) {
      const auto& n = t.node(v);
      out.push_back({2 * n.lo - 1, p.y});
      out.push_back({2 * n.hi + 1, p.y});
      if (t.is_leaf(v)) break;
      v = r <= t.node(n.left).hi ? n.left : n.right;
    }
  }
  return PointSet(std::move(out), Kind::solution);
}

namespace {

struct RecCtx {
  int rho;
  LeafMode mode;
  std::int64_t dp_limit;
  std::map<int, RecursionLevel> levels;
  int max_level = 0;

  RecursionLevel& level(int i) {
    RecursionLevel& l = levels[i];
    l.level = i;
    return l;
  }
};

PointSet rec_solve(const PointSet& x, const PartitionTree& t, int lvl, RecCtx& ctx) {
  if (x.empty()) return PointSet({}, Kind::solution);
  ctx.max_level = std::max(ctx.max_level, lvl);
  const PointSet xr = reduce(x);
  RecursionLevel& lrec = ctx.level(lvl);
  ++lrec.instances;
  lrec.points += (std::int64_t)xr.size();
  if (xr.active_columns() <= 1) return PointSet({}, Kind::solution);
  if (t.height() <= ctx.rho) {
    PointSet y = ctx.mode == LeafMode::dp
                     ? to_special(xr, opt_exact_dp(xr, ctx.dp_limit))
                     : static_solution(xr, t);
    lrec.leaf_added += (std::int64_t)y.size();
    return y;
  }
  const std::vector<int> u = middle_layer(t);
  std::vector<Point> combined;
  std::vector<std::int64_t> strip_his;
  for (int v : u) {
    const std::int64_t lo = t.node(v).lo, hi = t.node(v).hi;
    strip_his.push_back(hi);
    std::vector<Point> strip_local;
    for (const Point& p : xr.points())
      if (rank_of(p) >= lo && rank_of(p) <= hi)
        strip_local.push_back({p.x - 2 * (lo - 1), p.y});
    const PointSet strip(std::move(strip_local), Kind::instance);
    // Boundary copies of every strip point.
    for (const Point& p : strip.points()) {
      combined.push_back({2 * lo - 1, p.y});
      combined.push_back({2 * hi + 1, p.y});
      lrec.added += 2;
    }
    const PointSet y_local = rec_solve(strip, t.subtree_at(v), lvl + 1, ctx);
    for (const Point& q : y_local.points()) combined.push_back({q.x + 2 * (lo - 1), q.y});
  }
  // Compressed instance: strip i becomes column 2i.
  {
    std::vector<Point> comp;
    for (const Point& p : xr.points()) {
      const std::int64_t r = rank_of(p);
      const std::int64_t i =
          std::lower_bound(strip_his.begin(), strip_his.end(), r) - strip_his.begin() + 1;
      comp.push_back({2 * i, p.y});
    }
    const PointSet compressed(std::move(comp), Kind::instance);
    const PointSet y_local = rec_solve(compressed, t.top_tree(u), lvl + 1, ctx);
    for (const Point& q : y_local.points()) {
      const std::int64_t j = (q.x - 1) / 2;  // boundary index 0..|U|
      const std::int64_t gx = j == 0 ? 1 : 2 * strip_his[j - 1] + 1;
      combined.push_back({gx, q.y});
    }
  }
  const PointSet y(std::move(combined), Kind::solution);
  return y;
}

}  // namespace

RecursiveResult recursive_bst(const PointSet& x, const PartitionTree& t, int rho,
                              LeafMode leaf_mode, std::int64_t dp_max_columns) {
  require(rho >= 1, "recursive_bst: rho must be at least 1");
  x.require_semi_permutation("recursive_bst");
  if (!x.empty()) {
    require_normalized_columns(x, "recursive_bst");
    require(t.columns() == x.active_columns(), "recursive_bst: tree does not match instance");
  }
  RecCtx ctx{rho, leaf_mode, dp_max_columns, {}, 0};
  RecursiveResult res;
  res.solution = rec_solve(x, t, 0, ctx);
  for (const auto& [lvl, rec] : ctx.levels) res.trace.levels.push_back(rec);
  res.trace.depth = ctx.max_level;
  return res;
}

RecursiveResult recursive_bst(const PointSet& x, int rho, LeafMode leaf_mode,
                              std::int64_t dp_max_columns) {
  return recursive_bst(x, PartitionTree::balanced(std::max<std::int64_t>(x.active_columns(), 1)),
                       rho, leaf_mode, dp_max_columns);
}

std::vector<std::vector<FamilyTree>> unfold_families(const PartitionTree& t) {
  std::vector<std::vector<FamilyTree>> families;
  FamilyTree root{t, {}, 0};
  for (std::int64_t i = 1; i <= t.columns(); ++i) root.leaf_strips.push_back({i, i});
  families.push_back({std::move(root)});
  while (true) {
    bool any_tall = false;
    for (const FamilyTree& ft : families.back())
      any_tall = any_tall || ft.tree.height() > 1;
    if (!any_tall) break;
    std::vector<FamilyTree> next;
    const int fam = (int)families.size();
    for (const FamilyTree& ft : families.back()) {
      if (ft.tree.height() <= 1) {
        FamilyTree carried = ft;
        carried.family = fam;
        next.push_back(std::move(carried));
        continue;
      }
      const std::vector<int> u = middle_layer(ft.tree);
      for (int v : u) {
        FamilyTree bottom{ft.tree.subtree_at(v), {}, fam};
        const auto& n = ft.tree.node(v);
        bottom.leaf_strips.assign(ft.leaf_strips.begin() + (n.lo - 1),
                                  ft.leaf_strips.begin() + n.hi);
        next.push_back(std::move(bottom));
      }
      FamilyTree top{ft.tree.top_tree(u), {}, fam};
      for (int v : u) top.leaf_strips.push_back(ft.node_strip(v));
      next.push_back(std::move(top));
    }
    families.push_back(std::move(next));
  }
  return families;
}

namespace {

void require_doubled_rows(const PointSet& x, const char* who) {
  const std::vector<Point>& pts = x.points();
  require(pts.size() % 2 == 0, (std::string(who) + ": expected a doubled-row instance").c_str());
  for (std::size_t i = 0; i < pts.size(); ++i) {
    const bool ok = pts[i].y == (std::int64_t)i + 1 &&
                    (i % 2 == 0 || pts[i].x == pts[i - 1].x);
    if (!ok) throw std::invalid_argument(std::string(who) + ": expected a doubled-row instance");
  }
}

// First/last points of every box of one family tree, projected to the
// boundaries of the covering middle-layer strip.
void project_boxes(const PointSet& x, const FamilyTree& ft, std::vector<Point>& out) {
  if (ft.tree.height() < 1) return;
  const auto [glo, ghi] = ft.root_strip();
  std::vector<std::int64_t> leaf_his;
  for (auto [a, b] : ft.leaf_strips) leaf_his.push_back(b);
  const std::vector<int> mids = middle_layer(ft.tree);
  std::vector<std::int64_t> mid_his;
  std::vector<std::pair<std::int64_t, std::int64_t>> mid_strips;
  for (int v : mids) {
    mid_strips.push_back(ft.node_strip(v));
    mid_his.push_back(mid_strips.back().second);
  }
  const auto project = [&](const Point& p) {
    const std::int64_t r = rank_of(p);
    const std::size_t mi =
        std::lower_bound(mid_his.begin(), mid_his.end(), r) - mid_his.begin();
    out.push_back({2 * mid_strips[mi].first - 1, p.y});
    out.push_back({2 * mid_strips[mi].second + 1, p.y});
  };
  bool have_prev = false;
  Point prev{};
  std::int64_t prev_leaf = -1;
  for (const Point& p : x.points()) {
    const std::int64_t r = rank_of(p);
    if (r < glo || r > ghi) continue;
    const std::int64_t leaf =
        std::lower_bound(leaf_his.begin(), leaf_his.end(), r) - leaf_his.begin();
    if (!have_prev || leaf != prev_leaf) {
      if (have_prev) project(prev);  // previous point closed its box
      project(p);                    // current point opens a box
    }
    prev = p;
    prev_leaf = leaf;
    have_prev = true;
  }
  if (have_prev) project(prev);
}

}  // namespace

PointSet box_solution(const PointSet& x, const PartitionTree& t) {
  require_doubled_rows(x, "box_solution");
  for (const Point& p : x.points())
    require(p.x % 2 == 0 && rank_of(p) >= 1 && rank_of(p) <= t.columns(),
            "box_solution: point outside the tree's column universe");
  std::vector<Point> out;
  for (const auto& family : unfold_families(t))
    for (const FamilyTree& ft : family) project_boxes(x, ft, out);
  return PointSet(std::move(out), Kind::solution);
}

PointSet modified_solution(const PointSet& x_doubled, const PartitionTree& t) {
  const PointSet y = box_solution(x_doubled, t);
  std::vector<Point> out;
  std::vector<char> even_row_hit(x_doubled.size() / 2 + 2, 0);
  for (const Point& q : y.points()) {
    if (q.y % 2 == 0) {
      out.push_back({q.x, q.y + 1});
      even_row_hit[q.y / 2] = 1;
    } else {
      out.push_back(q);
    }
  }
  // Collapsing row 2i into 2i+1 drags the input point's upper copy along;
  // that copy lands in the solution one row above its origin.
  const std::vector<Point>& pts = x_doubled.points();
  for (std::size_t i = 1; i <= pts.size() / 2; ++i)
    if (even_row_hit[i]) out.push_back({pts[2 * i - 1].x, (std::int64_t)(2 * i + 1)});
  return PointSet(std::move(out), Kind::solution);
}

OnlineSolver::OnlineSolver(std::int64_t universe_columns) : universe_(universe_columns) {
  require(universe_ >= 1, "OnlineSolver: need at least one column");
  const PartitionTree t = PartitionTree::balanced(universe_);
  for (const auto& family : unfold_families(t)) {
    for (const FamilyTree& ft : family) {
      if (ft.tree.height() < 1) continue;
      TreeState ts;
      ts.strip = ft.root_strip();
      const std::int64_t width = ts.strip.second - ts.strip.first + 1;
      ts.leaf_of.assign(width, 0);
      ts.proj_lines.assign(width, {0, 0});
      std::vector<std::int64_t> leaf_his;
      for (auto [a, b] : ft.leaf_strips) leaf_his.push_back(b);
      const std::vector<int> mids = middle_layer(ft.tree);
      std::vector<std::int64_t> mid_his;
      std::vector<std::pair<std::int64_t, std::int64_t>> mid_strips;
      for (int v : mids) {
        mid_strips.push_back(ft.node_strip(v));
        mid_his.push_back(mid_strips.back().second);
      }
      for (std::int64_t r = ts.strip.first; r <= ts.strip.second; ++r) {
        const std::int64_t off = r - ts.strip.first;
        ts.leaf_of[off] =
            std::lower_bound(leaf_his.begin(), leaf_his.end(), r) - leaf_his.begin();
        const std::size_t mi =
            std::lower_bound(mid_his.begin(), mid_his.end(), r) - mid_his.begin();
        ts.proj_lines[off] = {2 * mid_strips[mi].first - 1, 2 * mid_strips[mi].second + 1};
      }
      trees_.push_back(std::move(ts));
    }
  }
}

void OnlineSolver::emit_last_projections(TreeState& ts, std::vector<Point>& out) {
  const std::int64_t j = ts.pending_step;
  const std::int64_t key = keys_[j - 1];
  const auto [l, r] = ts.proj_lines[key - ts.strip.first];
  out.push_back({l, 2 * j + 1});
  out.push_back({r, 2 * j + 1});
  if (!copy_emitted_[j]) {
    copy_emitted_[j] = 1;
    out.push_back({2 * key, 2 * j + 1});
  }
}

std::vector<Point> OnlineSolver::step(std::int64_t key) {
  require(key >= 1 && key <= universe_, "OnlineSolver: key outside the column universe");
  ++step_count_;
  keys_.push_back(key);
  copy_emitted_.resize(step_count_ + 1, 0);
  std::vector<Point> out;
  for (TreeState& ts : trees_) {
    if (key < ts.strip.first || key > ts.strip.second) continue;
    const std::int64_t leaf = ts.leaf_of[key - ts.strip.first];
    const bool box_starts = ts.pending_step < 0 || ts.pending_leaf != leaf;
    if (ts.pending_step >= 0 && box_starts) emit_last_projections(ts, out);
    if (box_starts) {
      const auto [l, r] = ts.proj_lines[key - ts.strip.first];
      out.push_back({l, 2 * step_count_ - 1});
      out.push_back({r, 2 * step_count_ - 1});
    }
    ts.pending_step = step_count_;
    ts.pending_leaf = leaf;
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  totals_.steps = step_count_;
  totals_.emitted += (std::int64_t)out.size();
  return out;
}

std::vector<Point> OnlineSolver::finish() {
  std::vector<Point> out;
  for (TreeState& ts : trees_) {
    if (ts.pending_step < 0) continue;
    emit_last_projections(ts, out);
    ts.pending_step = -1;
    ts.pending_leaf = -1;
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  totals_.emitted += (std::int64_t)out.size();
  return out;
}

}  // namespace minsat
