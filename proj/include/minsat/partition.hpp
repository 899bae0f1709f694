#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "minsat/geometry.hpp"

namespace minsat {

/// An instance reduced to column ranks: seq[i] is the column rank (1..c)
/// of the i-th point in bottom-to-top row order. This is the working form
/// for every crossing computation; the doubled x-coordinates map to ranks
/// via the sorted list of active columns.
struct RankedInstance {
  std::int64_t c = 0;             // number of columns (ranks 1..c)
  std::vector<std::int64_t> seq;  // column rank per point, ascending y

  /// Ranks are the positions of the active columns of a semi-permutation.
  static RankedInstance from_instance(const PointSet& x);
  /// Ranks are raw x-coordinates inside a universe of `universe` columns,
  /// inactive columns included.
  static RankedInstance from_universe(const PointSet& x, std::int64_t universe);

  std::size_t size() const { return seq.size(); }
};

/// Ordering of the gaps 1..c-1; gap g separates column ranks g and g+1.
using CutOrder = std::vector<std::int64_t>;

/// Binary tree of vertical strips over column ranks. Inner nodes own the
/// gap that splits their strip; leaves span a single column.
class PartitionTree {
 public:
  struct Node {
    std::int64_t lo = 0, hi = 0;  // strip of column ranks, inclusive
    std::int64_t gap = -1;        // owned gap, -1 for leaves
    int left = -1, right = -1, parent = -1;
    int depth = 0;
  };

  static PartitionTree from_order(std::int64_t columns, const CutOrder& order);
  static PartitionTree balanced(std::int64_t columns);

  const std::vector<Node>& nodes() const { return nodes_; }
  const Node& node(int id) const { return nodes_[id]; }
  int root() const { return 0; }
  std::int64_t columns() const { return columns_; }
  int height() const;
  bool is_leaf(int id) const { return nodes_[id].left < 0; }

  /// A cut order that regenerates this tree (pre-order of owned gaps).
  CutOrder to_order() const;

  /// Subtree rooted at `v`, relabelled to local ranks 1..width(v).
  PartitionTree subtree_at(int v) const;

  /// The tree above an antichain cover `u`: each strip of `u` becomes a
  /// single column, nodes below `u` are dropped.
  PartitionTree top_tree(const std::vector<int>& u) const;

  int add_node(const Node& n) {
    nodes_.push_back(n);
    return (int)nodes_.size() - 1;
  }
  Node& mutable_node(int id) { return nodes_[id]; }
  void set_columns(std::int64_t c) { columns_ = c; }

 private:
  std::vector<Node> nodes_;
  std::int64_t columns_ = 0;
};

/// Nodes at depth ceil(height/2) plus any leaf above that depth; always an
/// antichain cover. Requires height >= 1.
std::vector<int> middle_layer(const PartitionTree& t);

bool is_antichain_cover(const PartitionTree& t, const std::vector<int>& u);

/// Number of row-consecutive pairs of the strip's points that lie on
/// opposite sides of `gap`. Optionally reports the crossing pairs as
/// indices into the instance's row order.
std::int64_t node_cost(const RankedInstance& x, std::int64_t lo, std::int64_t hi,
                       std::int64_t gap,
                       std::vector<std::pair<std::size_t, std::size_t>>* pairs = nullptr);

/// Total crossing count of a fixed tree.
std::int64_t wb_weak(const RankedInstance& x, const PartitionTree& t);
std::int64_t wb_weak(const PointSet& x, const PartitionTree& t);

struct StrongWbResult {
  std::int64_t value = 0;
  PartitionTree tree;  // argmax tree, ties broken toward smaller gaps
};

/// Maximum of wb_weak over all trees, by dynamic programming over column
/// intervals. `max_columns` guards the quadratic table.
StrongWbResult wb_strong_exact(const RankedInstance& x, std::int64_t max_columns = 512);
std::int64_t wb_strong(const PointSet& x, std::int64_t max_columns = 512);

/// Factorial-enumeration oracle for the interval DP; c <= 7.
std::int64_t wb_strong_enumerate(const RankedInstance& x);

/// Subset of instance points excluded from crossing counts, with the
/// random bits that produced it when sampled.
struct ForbiddenSet {
  std::vector<std::size_t> point_idx;  // indices into row order, sorted
  std::vector<int> bits;               // per block, when sampled

  std::vector<char> mask(std::size_t n) const;
};

/// wb_weak with every crossing touching a forbidden point discarded.
std::int64_t wb_forbidden(const RankedInstance& x, const PartitionTree& t,
                          const ForbiddenSet& f);
std::int64_t wb_forbidden(const PointSet& x, const PartitionTree& t, const ForbiddenSet& f);
inline std::int64_t wb_forbidden(const RankedInstance& x, const CutOrder& order,
                                 const ForbiddenSet& f) {
  return wb_forbidden(x, PartitionTree::from_order(x.c, order), f);
}

/// Consecutive runs of column ranks, covering 1..c.
using Blocks = std::vector<std::pair<std::int64_t, std::int64_t>>;

/// Draw one bit per block; block points on the chosen side of the block's
/// earliest line in `order` become forbidden. Deterministic under seed.
ForbiddenSet sample_forbidden(const RankedInstance& x, const Blocks& blocks,
                              const CutOrder& order, std::uint64_t seed);

struct StripPart {
  std::int64_t lo = 0, hi = 0;  // column ranks in the parent instance
  PointSet points;
};

struct SplitResult {
  PointSet compressed;
  std::vector<StripPart> strips;
  bool has_trees = false;
  PartitionTree compressed_tree;
  std::vector<PartitionTree> strip_trees;  // aligned with strips
};

/// Split (X, T) at an antichain cover: strip instances keep their points
/// and coordinates, the compressed instance collapses each strip to its
/// leftmost active column. Subtrees are extracted alongside.
SplitResult split_at(const PointSet& x, const PartitionTree& t, const std::vector<int>& u);

/// Split X by a subset of its gaps (no tree required).
SplitResult split_by_lines(const PointSet& x, const std::vector<std::int64_t>& gaps);

}  // namespace minsat
