#include "minsat/partition.hpp"

#include <algorithm>
#include <numeric>

namespace minsat {

RankedInstance RankedInstance::from_instance(const PointSet& x) {
  x.require_semi_permutation("RankedInstance");
  const std::vector<std::int64_t> cols = x.column_coords();
  RankedInstance r;
  r.c = (std::int64_t)cols.size();
  r.seq.reserve(x.size());
  for (const Point& p : x.points()) {
    const std::int64_t rank =
        std::lower_bound(cols.begin(), cols.end(), p.x) - cols.begin() + 1;
    r.seq.push_back(rank);
  }
  return r;
}

RankedInstance RankedInstance::from_universe(const PointSet& x, std::int64_t universe) {
  x.require_semi_permutation("RankedInstance");
  RankedInstance r;
  r.c = universe;
  r.seq.reserve(x.size());
  for (const Point& p : x.points()) {
    require(p.x >= 1 && p.x <= universe, "RankedInstance: point outside column universe");
    r.seq.push_back(p.x);
  }
  return r;
}

PartitionTree PartitionTree::from_order(std::int64_t columns, const CutOrder& order) {
  require(columns >= 1, "PartitionTree: need at least one column");
  require((std::int64_t)order.size() == columns - 1, "PartitionTree: order must list every gap");
  std::vector<char> seen(columns, 0);
  for (std::int64_t g : order) {
    require(g >= 1 && g <= columns - 1, "PartitionTree: gap index out of range");
    require(!seen[g], "PartitionTree: duplicate gap in order");
    seen[g] = 1;
  }
  PartitionTree t;
  t.columns_ = columns;
  t.nodes_.push_back(Node{1, columns, -1, -1, -1, -1, 0});
  for (std::int64_t g : order) {
    // Find the unique current leaf strip strictly containing gap g.
    int v = 0;
    while (t.nodes_[v].left >= 0)
      v = g <= t.nodes_[t.nodes_[v].left].hi ? t.nodes_[v].left : t.nodes_[v].right;
    const std::int64_t lo = t.nodes_[v].lo, hi = t.nodes_[v].hi;
    const int d = t.nodes_[v].depth + 1;
    t.nodes_[v].gap = g;
    t.nodes_[v].left = (int)t.nodes_.size();
    t.nodes_[v].right = t.nodes_[v].left + 1;
    t.nodes_.push_back(Node{lo, g, -1, -1, -1, v, d});
    t.nodes_.push_back(Node{g + 1, hi, -1, -1, -1, v, d});
  }
  return t;
}

PartitionTree PartitionTree::balanced(std::int64_t columns) {
  require(columns >= 1, "PartitionTree: need at least one column");
  PartitionTree t;
  t.columns_ = columns;
  t.nodes_.push_back(Node{1, columns, -1, -1, -1, -1, 0});
  // Iterative top-down split, left child takes ceil(k/2) columns.
  for (std::size_t v = 0; v < t.nodes_.size(); ++v) {
    const std::int64_t lo = t.nodes_[v].lo, hi = t.nodes_[v].hi;
    if (lo == hi) continue;
    const std::int64_t k = hi - lo + 1;
    const std::int64_t g = lo + (k + 1) / 2 - 1;
    t.nodes_[v].gap = g;
    const int d = t.nodes_[v].depth + 1;
    t.nodes_[v].left = (int)t.nodes_.size();
    t.nodes_.push_back(Node{lo, g, -1, -1, -1, (int)v, d});
    t.nodes_[v].right = (int)t.nodes_.size();
    t.nodes_.push_back(Node{g + 1, hi, -1, -1, -1, (int)v, d});
  }
  return t;
}

int PartitionTree::height() const {
  int h = 0;
  for (const Node& n : nodes_) h = std::max(h, n.depth);
  return h;
}

CutOrder PartitionTree::to_order() const {
  CutOrder order;
  std::vector<int> stack{root()};
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    const Node& n = nodes_[v];
    if (n.left < 0) continue;
    order.push_back(n.gap);
    stack.push_back(n.right);
    stack.push_back(n.left);
  }
  return order;
}

PartitionTree PartitionTree::subtree_at(int v) const {
  const std::int64_t off = nodes_[v].lo - 1;
  PartitionTree out;
  out.columns_ = nodes_[v].hi - nodes_[v].lo + 1;
  const int base_depth = nodes_[v].depth;
  // Pre-order copy with relabelled ranks.
  std::vector<std::pair<int, int>> stack{{v, -1}};  // (old id, new parent)
  while (!stack.empty()) {
    auto [o, np] = stack.back();
    stack.pop_back();
    const Node& n = nodes_[o];
    Node c{n.lo - off, n.hi - off, n.gap < 0 ? -1 : n.gap - off, -1, -1, np,
           n.depth - base_depth};
    const int id = (int)out.nodes_.size();
    out.nodes_.push_back(c);
    if (np >= 0) {
      if (out.nodes_[np].left < 0)
        out.nodes_[np].left = id;
      else
        out.nodes_[np].right = id;
    }
    if (n.left >= 0) {
      // Push right first so the left child is created first (keeps
      // left/right assignment above correct).
      stack.push_back({n.right, id});
      stack.push_back({n.left, id});
    }
  }
  return out;
}

PartitionTree PartitionTree::top_tree(const std::vector<int>& u) const {
  require(is_antichain_cover(*this, u), "top_tree: not an antichain cover");
  std::vector<int> us = u;
  std::sort(us.begin(), us.end(),
            [&](int a, int b) { return nodes_[a].lo < nodes_[b].lo; });
  // hi rank of each cover strip, for gap relabelling.
  std::vector<std::int64_t> his;
  his.reserve(us.size());
  for (int v : us) his.push_back(nodes_[v].hi);
  std::vector<char> in_u(nodes_.size(), 0);
  for (int v : us) in_u[v] = 1;

  const auto local_col = [&](std::int64_t rank) {
    return (std::int64_t)(std::lower_bound(his.begin(), his.end(), rank) - his.begin()) + 1;
  };
  PartitionTree out;
  out.columns_ = (std::int64_t)us.size();
  std::vector<std::pair<int, int>> stack{{root(), -1}};
  while (!stack.empty()) {
    auto [o, np] = stack.back();
    stack.pop_back();
    const Node& n = nodes_[o];
    const bool leaf = in_u[o] || n.left < 0;
    Node c{local_col(n.lo), local_col(n.hi),
           leaf ? -1 : (std::int64_t)(std::lower_bound(his.begin(), his.end(), n.gap) -
                                      his.begin() + 1),
           -1, -1, np, n.depth};
    const int id = (int)out.nodes_.size();
    out.nodes_.push_back(c);
    if (np >= 0) {
      if (out.nodes_[np].left < 0)
        out.nodes_[np].left = id;
      else
        out.nodes_[np].right = id;
    }
    if (!leaf) {
      stack.push_back({n.right, id});
      stack.push_back({n.left, id});
    }
  }
  return out;
}

std::vector<int> middle_layer(const PartitionTree& t) {
  const int h = t.height();
  require(h >= 1, "middle_layer: tree has height 0");
  const int d = (h + 1) / 2;
  std::vector<int> u;
  for (int v = 0; v < (int)t.nodes().size(); ++v) {
    const auto& n = t.node(v);
    if (n.depth == d || (t.is_leaf(v) && n.depth < d)) u.push_back(v);
  }
  std::sort(u.begin(), u.end(), [&](int a, int b) { return t.node(a).lo < t.node(b).lo; });
  return u;
}

bool is_antichain_cover(const PartitionTree& t, const std::vector<int>& u) {
  if (u.empty()) return false;
  std::vector<std::pair<std::int64_t, std::int64_t>> strips;
  for (int v : u) {
    if (v < 0 || v >= (int)t.nodes().size()) return false;
    strips.push_back({t.node(v).lo, t.node(v).hi});
  }
  std::sort(strips.begin(), strips.end());
  std::int64_t expect = 1;
  for (auto [lo, hi] : strips) {
    if (lo != expect) return false;
    expect = hi + 1;
  }
  return expect == t.columns() + 1;
}

std::int64_t node_cost(const RankedInstance& x, std::int64_t lo, std::int64_t hi,
                       std::int64_t gap,
                       std::vector<std::pair<std::size_t, std::size_t>>* pairs) {
  require(gap >= lo && gap < hi, "node_cost: gap not strictly inside strip");
  std::int64_t cost = 0;
  int prev_side = -1;
  std::size_t prev_idx = 0;
  for (std::size_t i = 0; i < x.seq.size(); ++i) {
    const std::int64_t r = x.seq[i];
    if (r < lo || r > hi) continue;
    const int side = r <= gap ? 0 : 1;
    if (prev_side >= 0 && side != prev_side) {
      ++cost;
      if (pairs) pairs->push_back({prev_idx, i});
    }
    prev_side = side;
    prev_idx = i;
  }
  return cost;
}

std::int64_t wb_weak(const RankedInstance& x, const PartitionTree& t) {
  std::int64_t total = 0;
  for (const auto& n : t.nodes())
    if (n.left >= 0) total += node_cost(x, n.lo, n.hi, n.gap);
  return total;
}

std::int64_t wb_weak(const PointSet& x, const PartitionTree& t) {
  const RankedInstance r = RankedInstance::from_instance(x);
  require(t.columns() == r.c, "wb_weak: tree does not match instance column count");
  return wb_weak(r, t);
}

StrongWbResult wb_strong_exact(const RankedInstance& x, std::int64_t max_columns) {
  const std::int64_t c = x.c;
  if (c > max_columns)
    throw size_guard_error(
        "wb_strong_exact: too many columns for the interval table; "
        "sample wb_weak over random orders instead");
  StrongWbResult res;
  if (c <= 1) {
    res.tree = PartitionTree::balanced(std::max<std::int64_t>(c, 1));
    return res;
  }
  // W[i][j] = best crossing total achievable inside columns i..j.
  std::vector<std::vector<std::int64_t>> w(c + 2, std::vector<std::int64_t>(c + 1, 0));
  std::vector<std::vector<std::int64_t>> choice(c + 2, std::vector<std::int64_t>(c + 1, -1));
  // seq_from[i]: subsequence of ranks >= i, in row order.
  std::vector<std::vector<std::int64_t>> seq_from(c + 2);
  for (std::int64_t i = c; i >= 1; --i) {
    seq_from[i].reserve(x.seq.size());
    for (std::int64_t r : x.seq)
      if (r >= i) seq_from[i].push_back(r);
  }
  std::vector<std::int64_t> delta(c + 2, 0);
  for (std::int64_t i = c - 1; i >= 1; --i) {
    for (std::int64_t j = i + 1; j <= c; ++j) {
      std::fill(delta.begin() + i, delta.begin() + j + 1, 0);
      std::int64_t prev = -1;
      for (std::int64_t r : seq_from[i]) {
        if (r > j) continue;
        if (prev >= 0 && prev != r) {
          ++delta[std::min(prev, r)];
          --delta[std::max(prev, r)];
        }
        prev = r;
      }
      std::int64_t best = -1, best_gap = -1, run = 0;
      for (std::int64_t g = i; g < j; ++g) {
        run += delta[g];
        const std::int64_t v = run + w[i][g] + w[g + 1][j];
        if (v > best) {
          best = v;
          best_gap = g;
        }
      }
      w[i][j] = best;
      choice[i][j] = best_gap;
    }
  }
  res.value = w[1][c];
  // Rebuild the argmax tree from the choice table.
  PartitionTree t;
  t.set_columns(c);
  t.add_node(PartitionTree::Node{1, c, -1, -1, -1, -1, 0});
  for (int v = 0; v < (int)t.nodes().size(); ++v) {
    const std::int64_t lo = t.node(v).lo, hi = t.node(v).hi;
    if (lo == hi) continue;
    const std::int64_t g = choice[lo][hi];
    const int d = t.node(v).depth + 1;
    t.mutable_node(v).gap = g;
    t.mutable_node(v).left = (int)t.nodes().size();
    t.mutable_node(v).right = t.node(v).left + 1;
    t.add_node(PartitionTree::Node{lo, g, -1, -1, -1, v, d});
    t.add_node(PartitionTree::Node{g + 1, hi, -1, -1, -1, v, d});
  }
  res.tree = std::move(t);
  return res;
}

std::int64_t wb_strong(const PointSet& x, std::int64_t max_columns) {
  return wb_strong_exact(RankedInstance::from_instance(x), max_columns).value;
}

std::int64_t wb_strong_enumerate(const RankedInstance& x) {
  require(x.c <= 7, "wb_strong_enumerate: factorial oracle limited to 7 columns");
  if (x.c <= 1) return 0;
  CutOrder order(x.c - 1);
  std::iota(order.begin(), order.end(), 1);
  std::int64_t best = 0;
  do {
    best = std::max(best, wb_weak(x, PartitionTree::from_order(x.c, order)));
  } while (std::next_permutation(order.begin(), order.end()));
  return best;
}

std::vector<char> ForbiddenSet::mask(std::size_t n) const {
  std::vector<char> m(n, 0);
  for (std::size_t i : point_idx) {
    require(i < n, "ForbiddenSet: point index outside instance");
    m[i] = 1;
  }
  return m;
}

std::int64_t wb_forbidden(const RankedInstance& x, const PartitionTree& t,
                          const ForbiddenSet& f) {
  const std::vector<char> forbidden = f.mask(x.seq.size());
  std::int64_t total = 0;
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (const auto& n : t.nodes()) {
    if (n.left < 0) continue;
    pairs.clear();
    node_cost(x, n.lo, n.hi, n.gap, &pairs);
    for (auto [a, b] : pairs)
      if (!forbidden[a] && !forbidden[b]) ++total;
  }
  return total;
}

std::int64_t wb_forbidden(const PointSet& x, const PartitionTree& t, const ForbiddenSet& f) {
  return wb_forbidden(RankedInstance::from_instance(x), t, f);
}

ForbiddenSet sample_forbidden(const RankedInstance& x, const Blocks& blocks,
                              const CutOrder& order, std::uint64_t seed) {
  // Blocks must tile 1..c left to right.
  std::int64_t expect = 1;
  for (auto [lo, hi] : blocks) {
    require(lo == expect && hi >= lo, "sample_forbidden: blocks must tile the columns");
    expect = hi + 1;
  }
  require(expect == x.c + 1, "sample_forbidden: blocks must tile the columns");
  std::vector<std::int64_t> pos(x.c + 1, -1);  // gap -> position in order
  for (std::size_t i = 0; i < order.size(); ++i) pos[order[i]] = (std::int64_t)i;

  ForbiddenSet f;
  Rng rng(seed);
  for (auto [lo, hi] : blocks) {
    // Lines touching the block: the gaps on its boundary or inside it.
    std::int64_t first_gap = -1, first_pos = -1;
    for (std::int64_t g = std::max<std::int64_t>(lo - 1, 1);
         g <= std::min<std::int64_t>(hi, x.c - 1); ++g) {
      require(pos[g] >= 0, "sample_forbidden: order is missing a gap");
      if (first_gap < 0 || pos[g] < first_pos) {
        first_gap = g;
        first_pos = pos[g];
      }
    }
    const int bit = (int)rng.below(2);
    f.bits.push_back(bit);
    if (first_gap < 0) continue;  // single-column universe
    for (std::size_t i = 0; i < x.seq.size(); ++i) {
      const std::int64_t r = x.seq[i];
      if (r < lo || r > hi) continue;
      const bool left = r <= first_gap;
      if ((bit == 0 && left) || (bit == 1 && !left)) f.point_idx.push_back(i);
    }
  }
  std::sort(f.point_idx.begin(), f.point_idx.end());
  return f;
}

namespace {

SplitResult split_strips(const PointSet& x,
                         const std::vector<std::pair<std::int64_t, std::int64_t>>& ranges) {
  const std::vector<std::int64_t> cols = x.column_coords();
  SplitResult res;
  PointSet compressed = x;
  for (auto [lo, hi] : ranges) {
    StripPart part;
    part.lo = lo;
    part.hi = hi;
    std::vector<Point> pts;
    const std::int64_t x_lo = cols[lo - 1], x_hi = cols[hi - 1];
    for (const Point& p : x.points())
      if (p.x >= x_lo && p.x <= x_hi) pts.push_back(p);
    part.points = PointSet(std::move(pts), Kind::instance);
    res.strips.push_back(std::move(part));
    compressed = collapse_columns(compressed, x_lo, x_hi);
  }
  res.compressed = std::move(compressed);
  return res;
}

}  // namespace

SplitResult split_at(const PointSet& x, const PartitionTree& t, const std::vector<int>& u) {
  x.require_semi_permutation("split_at");
  require(t.columns() == x.active_columns(), "split_at: tree does not match instance");
  require(is_antichain_cover(t, u), "split_at: U is not an antichain cover");
  std::vector<int> us = u;
  std::sort(us.begin(), us.end(), [&](int a, int b) { return t.node(a).lo < t.node(b).lo; });
  std::vector<std::pair<std::int64_t, std::int64_t>> ranges;
  for (int v : us) ranges.push_back({t.node(v).lo, t.node(v).hi});
  SplitResult res = split_strips(x, ranges);
  res.has_trees = true;
  res.compressed_tree = t.top_tree(us);
  for (int v : us) res.strip_trees.push_back(t.subtree_at(v));
  return res;
}

SplitResult split_by_lines(const PointSet& x, const std::vector<std::int64_t>& gaps) {
  x.require_semi_permutation("split_by_lines");
  const std::int64_t c = x.active_columns();
  std::vector<std::int64_t> gs = gaps;
  std::sort(gs.begin(), gs.end());
  gs.erase(std::unique(gs.begin(), gs.end()), gs.end());
  for (std::int64_t g : gs) require(g >= 1 && g < c, "split_by_lines: gap out of range");
  std::vector<std::pair<std::int64_t, std::int64_t>> ranges;
  std::int64_t lo = 1;
  for (std::int64_t g : gs) {
    ranges.push_back({lo, g});
    lo = g + 1;
  }
  ranges.push_back({lo, c});
  return split_strips(x, ranges);
}

}  // namespace minsat
