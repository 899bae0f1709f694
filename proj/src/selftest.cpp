#include "minsat/selftest.hpp"

#include <functional>
#include <string>
#include <vector>

#include "minsat/bounds_ext.hpp"
#include "minsat/geometry.hpp"
#include "minsat/instances.hpp"
#include "minsat/partition.hpp"
#include "minsat/solvers.hpp"

namespace minsat {

namespace {

// Every semi-permutation with the given row count over at most max_c
// columns, one per column-assignment vector.
std::vector<PointSet> all_semiperms(int rows, int max_c) {
  std::vector<PointSet> out;
  std::vector<int> assign(rows, 1);
  while (true) {
    std::vector<Point> pts;
    for (int i = 0; i < rows; ++i) pts.push_back({assign[i], i + 1});
    out.push_back(normalize(PointSet(std::move(pts), Kind::instance)));
    int pos = rows - 1;
    while (pos >= 0 && assign[pos] == max_c) {
      assign[pos] = 1;
      --pos;
    }
    if (pos < 0) break;
    ++assign[pos];
  }
  return out;
}

CutOrder random_order(std::int64_t c, Rng& rng) {
  CutOrder order(c - 1);
  for (std::int64_t i = 0; i < c - 1; ++i) order[i] = i + 1;
  for (std::int64_t i = c - 2; i > 0; --i) std::swap(order[i], order[rng.below(i + 1)]);
  return order;
}

}  // namespace

int run_selftest(std::ostream& log) {
  int failures = 0;
  const auto check = [&](const std::string& name, bool ok) {
    log << (ok ? "ok   " : "FAIL ") << name << "\n";
    if (!ok) ++failures;
  };

  // Satisfaction sweep agrees with the pair-scan oracle.
  {
    Rng rng(7);
    bool ok = true;
    for (int it = 0; it < 300 && ok; ++it) {
      std::vector<Point> pts;
      const int k = 2 + (int)rng.below(12);
      for (int i = 0; i < k; ++i)
        pts.push_back({(std::int64_t)rng.below(6) + 1, (std::int64_t)rng.below(6) + 1});
      const PointSet p(std::move(pts), Kind::set_union);
      ok = is_satisfied(p) == is_satisfied_pairscan(p);
      ok = ok && (unsatisfied_pairs(p).empty() == is_satisfied(p));
    }
    check("satisfaction sweep matches pair scan", ok);
  }

  // Collapsing preserves satisfaction.
  {
    Rng rng(11);
    bool ok = true;
    for (int it = 0; it < 100 && ok; ++it) {
      PointSet x = gen_random_semiperm(3, 4, rng);
      x = normalize(x);
      const PointSet y = opt_bruteforce(x);
      const PointSet z = set_union_of(x, y);
      const auto cols = z.column_coords();
      if (cols.size() >= 2) {
        const PointSet c = collapse_columns(z, cols.front(), cols[1]);
        ok = is_satisfied(c);
      }
    }
    check("column collapse keeps satisfied sets satisfied", ok);
  }

  // Exact DP equals brute force on an exhaustive small sweep.
  {
    bool ok = true;
    for (int rows = 1; rows <= 4 && ok; ++rows)
      for (const PointSet& x : all_semiperms(rows, 3)) {
        const PointSet xr = reduce(x);
        if (opt_exact_dp(xr).size() != opt_bruteforce(xr).size()) {
          ok = false;
          break;
        }
      }
    check("profile DP matches brute force (exhaustive small sweep)", ok);
  }

  // Weak bound never exceeds twice the optimum; split identity holds.
  {
    Rng rng(23);
    bool ok_bound = true, ok_split = true;
    for (int it = 0; it < 120; ++it) {
      const PointSet x = normalize(gen_random_semiperm(2 + rng.below(3), 4 + rng.below(3), rng));
      const std::int64_t c = x.active_columns();
      const PartitionTree t =
          c >= 2 ? PartitionTree::from_order(c, random_order(c, rng)) : PartitionTree::balanced(1);
      const std::int64_t opt = (std::int64_t)opt_bruteforce(x).size();
      if (wb_weak(x, t) > 2 * opt) ok_bound = false;
      if (t.height() >= 1) {
        const SplitResult split = split_at(x, t, middle_layer(t));
        std::int64_t sum = wb_weak(normalize(split.compressed), split.compressed_tree);
        for (std::size_t i = 0; i < split.strips.size(); ++i)
          sum += wb_weak(normalize(split.strips[i].points), split.strip_trees[i]);
        if (sum != wb_weak(x, t)) ok_split = false;
      }
    }
    check("weak bound at most twice the optimum", ok_bound);
    check("weak bound split identity", ok_split);
  }

  // Interval DP agrees with factorial enumeration.
  {
    Rng rng(31);
    bool ok = true;
    for (int it = 0; it < 40 && ok; ++it) {
      const PointSet x = normalize(gen_random_semiperm(2 + rng.below(4), 5 + rng.below(3), rng));
      const RankedInstance r = RankedInstance::from_instance(x);
      ok = wb_strong_exact(r).value == wb_strong_enumerate(r);
    }
    check("interval table matches factorial enumeration", ok);
  }

  // Bound ordering on tiny permutations.
  {
    Rng rng(43);
    bool ok = true;
    for (int it = 0; it < 25 && ok; ++it) {
      const PointSet x = normalize(gen_random_perm(2 + rng.below(3), rng));
      const std::int64_t wb = wb_strong(x);
      const std::int64_t cgb = cgb_exact(x);
      const std::int64_t gb = gb_exact(x);
      const std::int64_t opt = (std::int64_t)opt_bruteforce(x).size();
      ok = wb <= cgb && cgb <= gb && gb <= 2 * opt &&
           wb2_funnel(x) <= (std::int64_t)x.size() + opt;
    }
    check("bound ordering wb <= cgb <= gb <= 2 opt", ok);
  }

  // Solver outputs stay feasible.
  {
    Rng rng(57);
    bool ok = true;
    for (int it = 0; it < 25 && ok; ++it) {
      const PointSet x = normalize(gen_random_semiperm(2 + rng.below(7), 8 + rng.below(9), rng));
      const PartitionTree t = PartitionTree::balanced(x.active_columns());
      ok = is_feasible(x, static_solution(x, t));
      if (ok) ok = is_feasible(x, recursive_bst(x, t, 1, LeafMode::fixed).solution);
      if (ok) ok = is_feasible(x, recursive_bst(x, t, 2, LeafMode::dp).solution);
    }
    check("solver outputs are feasible", ok);
  }

  // Online emissions replay the offline modified solution.
  {
    Rng rng(71);
    bool ok = true;
    for (int it = 0; it < 15 && ok; ++it) {
      const std::int64_t c = 2 + rng.below(7);
      const std::int64_t m = 4 + rng.below(12);
      std::vector<std::int64_t> keys;
      for (std::int64_t i = 0; i < m; ++i) keys.push_back(rng.below(c) + 1);
      std::vector<Point> raw;
      for (std::int64_t i = 0; i < m; ++i) raw.push_back({2 * keys[i], i + 1});
      const PointSet doubled = double_rows(PointSet(std::move(raw), Kind::instance));
      const PartitionTree t = PartitionTree::balanced(c);
      const PointSet offline = modified_solution(doubled, t);
      OnlineSolver solver(c);
      std::vector<Point> got;
      for (std::int64_t k : keys)
        for (const Point& p : solver.step(k)) got.push_back(p);
      for (const Point& p : solver.finish()) got.push_back(p);
      ok = PointSet(std::move(got), Kind::solution) == offline &&
           is_feasible(doubled, offline);
    }
    check("online driver replays the offline solution", ok);
  }

  return failures;
}

}  // namespace minsat
