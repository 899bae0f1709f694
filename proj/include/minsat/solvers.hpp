#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "minsat/geometry.hpp"
#include "minsat/partition.hpp"

namespace minsat {

/// Minimum feasible solution by subset enumeration in increasing size over
/// the active-row x active-column grid. The independent oracle for every
/// other solver; guarded by the candidate-grid size.
PointSet opt_bruteforce(const PointSet& x, std::int64_t max_grid = 24);

/// Transition search mode of the exact dynamic program. `reachable`
/// extends stored states forward; `full_enumeration` fills the table by
/// scanning every profile per row (self-check, columns <= 4).
enum class DpMode { reachable, full_enumeration };

/// Optimal canonical solution of a reduced semi-permutation by dynamic
/// programming over per-column top profiles. Requires reduced input and
/// at most `max_columns` columns.
PointSet opt_exact_dp(const PointSet& x, std::int64_t max_columns = 7,
                      DpMode mode = DpMode::reachable);

/// Project every point to both boundaries of every strip on its root-leaf
/// path. Feasible, special-compatible, at most 2|X|(height+1) points.
PointSet static_solution(const PointSet& x, const PartitionTree& t);

enum class LeafMode { dp, fixed };  // exact leaf DP vs static projection

struct RecursionLevel {
  int level = 0;
  std::int64_t instances = 0;
  std::int64_t points = 0;      // reduced instance sizes, summed
  std::int64_t added = 0;       // boundary copies added by splits
  std::int64_t leaf_added = 0;  // points added by leaf solvers
};

struct RecursionTrace {
  std::vector<RecursionLevel> levels;
  int depth = 0;  // number of split levels before leaf solving
};

struct RecursiveResult {
  PointSet solution;
  RecursionTrace trace;
};

/// Split at the middle layer, recurse on strip and compressed instances,
/// and stitch the solutions with boundary copies of the strip points.
/// Leaf instances (tree height <= rho) go to the exact DP or the static
/// projection. Output is feasible and special-compatible for X.
RecursiveResult recursive_bst(const PointSet& x, const PartitionTree& t, int rho,
                              LeafMode leaf_mode, std::int64_t dp_max_columns = 7);

/// Convenience: balanced tree over the active columns of X.
RecursiveResult recursive_bst(const PointSet& x, int rho, LeafMode leaf_mode,
                              std::int64_t dp_max_columns = 7);

/// One tree of the unfolded recursion: a connected piece of the master
/// tree between a root and an antichain of leaves, each leaf covering a
/// strip of master column ranks.
struct FamilyTree {
  PartitionTree tree;  // local ranks 1..k
  std::vector<std::pair<std::int64_t, std::int64_t>> leaf_strips;  // global ranks
  int family = 0;

  std::pair<std::int64_t, std::int64_t> node_strip(int id) const {
    const auto& n = tree.node(id);
    return {leaf_strips[n.lo - 1].first, leaf_strips[n.hi - 1].second};
  }
  std::pair<std::int64_t, std::int64_t> root_strip() const {
    return node_strip(tree.root());
  }
};

/// Families 0..D of the recursion's subtrees: family 0 is {T}; each next
/// family splits every tree of height > 1 at its middle layer and carries
/// the rest.
std::vector<std::vector<FamilyTree>> unfold_families(const PartitionTree& t);

/// The recursion's solution computed directly from boxes: for every
/// family tree, the first and last point of each box project to the
/// boundaries of the middle-layer strip containing them. X must be the
/// doubled-row instance; the tree may span a larger column universe.
PointSet box_solution(const PointSet& x, const PartitionTree& t);

/// Offline reference of the online driver: box solution on the doubled
/// instance with every occupied even row pushed one row up and a copy of
/// the input point left in its place.
PointSet modified_solution(const PointSet& x_doubled, const PartitionTree& t);

/// Streaming driver over a fixed column universe. Feeding key k at step i
/// stands for the doubled points (2k, 2i-1) and (2k, 2i); emissions are
/// the points of the modified solution as their membership becomes
/// decidable. Single-owner object, not safe for concurrent mutation.
class OnlineSolver {
 public:
  explicit OnlineSolver(std::int64_t universe_columns);

  std::vector<Point> step(std::int64_t key);
  std::vector<Point> finish();

  struct Totals {
    std::int64_t steps = 0;
    std::int64_t emitted = 0;
  };
  Totals totals() const { return totals_; }

 private:
  struct TreeState {
    std::pair<std::int64_t, std::int64_t> strip;
    // Per universe column inside the strip: leaf strip index and the two
    // projection lines of the middle-layer node covering it.
    std::vector<std::int64_t> leaf_of;
    std::vector<std::pair<std::int64_t, std::int64_t>> proj_lines;
    std::int64_t pending_step = -1;  // last in-strip arrival, undecided
    std::int64_t pending_leaf = -1;
  };

  std::int64_t universe_;
  std::vector<TreeState> trees_;
  std::int64_t step_count_ = 0;
  std::vector<char> copy_emitted_;  // per step, lazily grown
  std::vector<std::int64_t> keys_;
  Totals totals_;

  void emit_last_projections(TreeState& ts, std::vector<Point>& out);
};

}  // namespace minsat
