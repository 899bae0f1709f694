#include <doctest.h>

#include <map>

#include "minsat/instances.hpp"
#include "minsat/partition.hpp"
#include "minsat/solvers.hpp"

using namespace minsat;

TEST_CASE("staircases") {
  CHECK(gen_monotone(1).points == PointSet({{1, 1}}, Kind::instance));
  CHECK(gen_monotone(3).points == PointSet({{1, 1}, {2, 2}, {3, 3}}, Kind::instance));
  for (std::int64_t m = 2; m <= 5; ++m)
    CHECK(opt_bruteforce(normalize(gen_monotone(m).points)).size() <= (std::size_t)(m - 1));
}

TEST_CASE("bit-reversal family") {
  CHECK(gen_brs(2).points == PointSet({{1, 1}, {2, 2}}, Kind::instance));
  const auto xseq = [](const PointSet& p) {
    std::vector<std::int64_t> xs;
    for (const Point& q : p.points()) xs.push_back(q.x);
    return xs;
  };
  CHECK(xseq(gen_brs(4).points) == std::vector<std::int64_t>{1, 3, 2, 4});
  CHECK(xseq(gen_brs(8).points) == std::vector<std::int64_t>{1, 5, 3, 7, 2, 6, 4, 8});
  for (std::int64_t n : {2, 4, 8, 16}) CHECK(gen_brs(n).points.is_permutation());
}

TEST_CASE("exponentially spaced columns") {
  CHECK(gen_esbrs(1).points.column_coords() == std::vector<std::int64_t>{1, 2});
  const Generated e2 = gen_esbrs(2);
  CHECK(e2.points.column_coords() == std::vector<std::int64_t>{1, 2, 4, 8});
  CHECK(e2.spec.universe == 16);
  for (std::int64_t ell : {1, 2, 3})
    CHECK(normalize(gen_esbrs(ell).points) ==
          normalize(gen_brs((std::int64_t)1 << ell).points));
}

TEST_CASE("stacked shifted instances") {
  const HardOneD hard = gen_hard_semiperm(2);
  const PointSet& x = hard.whole.points;
  CHECK(x.size() == 64);
  CHECK(x.active_columns() == 16);
  CHECK(x.active_rows() == 64);
  CHECK(x.is_semi_permutation());
  SUBCASE("per-column occupancy is uniform") {
    std::map<std::int64_t, int> hist;
    for (const Point& p : x.points()) ++hist[p.x];
    for (const auto& [col, count] : hist) CHECK(count == 4);
  }
  SUBCASE("the bottom block is the unshifted instance") {
    CHECK(hard.shifted[0] == gen_esbrs(2).points);
  }
  SUBCASE("block s is the level instance shifted by s") {
    for (std::int64_t s : {1, 2, 5}) {
      std::vector<std::int64_t> rows{s * 4 + 1, s * 4 + 2, s * 4 + 3, s * 4 + 4};
      CHECK(hard.shifted[s] == cyclic_shift(gen_esbrs(2, rows).points, s, 16));
    }
  }
  SUBCASE("the guard refuses large levels without the override") {
    CHECK_THROWS_AS(gen_hard_semiperm(4), size_guard_error);
    CHECK_THROWS_AS(gen_hard_perm(4), size_guard_error);
  }
}

TEST_CASE("permutation expansion") {
  const Generated star = gen_hard_perm(2);
  const PointSet& x = star.points;
  CHECK(x.size() == 64);
  CHECK(x.is_permutation());
  CHECK(x.active_rows() == 64);
  CHECK(x.active_columns() == 64);
  SUBCASE("collapsing the blocks recovers the stacked instance") {
    PointSet collapsed = x;
    for (std::int64_t block = 0; block < 16; ++block) {
      const std::int64_t lo = block * 4 + 1, hi = block * 4 + 4;
      bool active = false;
      for (const Point& p : collapsed.points()) active = active || (p.x >= lo && p.x <= hi);
      if (active) collapsed = collapse_columns(collapsed, lo, hi);
    }
    CHECK(normalize(collapsed) == normalize(gen_hard_semiperm(2).whole.points));
  }
  SUBCASE("each block walks up and to the right") {
    std::map<std::int64_t, Point> prev;  // block -> previous point
    for (const Point& p : x.points()) {
      const std::int64_t block = (p.x - 1) / 4;
      if (auto it = prev.find(block); it != prev.end()) {
        CHECK(it->second.x < p.x);
        CHECK(it->second.y < p.y);
      }
      prev[block] = p;
    }
  }
}

TEST_CASE("two-dimensional family") {
  SUBCASE("level one coordinates") {
    const Generated g = gen_esbrs2d(1);
    CHECK(g.points == PointSet({{2, 2}, {4, 4}}, Kind::instance));
    CHECK(normalize(g.points) == normalize(gen_brs(2).points));
  }
  SUBCASE("identity shift") {
    CHECK(gen_shift2d(2, 0, 0).points == gen_esbrs2d(2).points);
  }
  SUBCASE("assembled counts") {
    const Generated g = gen_hard2d_semiperm(2);
    CHECK(g.points.size() == 1024);
    CHECK(g.points.active_rows() == 256);
    CHECK(g.points.active_columns() == 256);
    std::map<std::int64_t, int> row_hist, col_hist;
    for (const Point& p : g.points.points()) {
      ++row_hist[p.y];
      ++col_hist[p.x];
    }
    for (const auto& [y, c] : row_hist) CHECK(c == 4);
    for (const auto& [x2, c] : col_hist) CHECK(c == 4);
    CHECK_THROWS_AS(gen_hard2d_semiperm(3), size_guard_error);
  }
  SUBCASE("expanded permutation") {
    const Generated g = gen_hard2d_perm(2);
    CHECK(g.points.size() == 1024);
    CHECK(g.points.is_permutation());
  }
}

TEST_CASE("planted low-crossing instance") {
  const Generated g = gen_iacono(4);
  CHECK(g.points.size() == 4);
  CHECK(g.points.active_columns() == 4);
  CHECK(g.spec.universe == 16);
  const RankedInstance raw = RankedInstance::from_universe(g.points, g.spec.universe);
  CHECK(wb_weak(raw, PartitionTree::balanced(g.spec.universe)) <=
        2 * (std::int64_t)g.points.size());
  CHECK(wb_strong(normalize(g.points)) >= 4 * (2 - 2) + 1);
  SUBCASE("larger level") {
    const Generated g8 = gen_iacono(8);
    const RankedInstance raw8 = RankedInstance::from_universe(g8.points, g8.spec.universe);
    CHECK(wb_weak(raw8, PartitionTree::balanced(g8.spec.universe)) <=
          2 * (std::int64_t)g8.points.size());
    CHECK(wb_strong(normalize(g8.points)) >= 8 * (3 - 2) + 1);
  }
  CHECK_THROWS_AS(gen_iacono(3), std::invalid_argument);
}

TEST_CASE("random families satisfy their kind checks") {
  Rng rng(1);
  for (int it = 0; it < 50; ++it) {
    const std::int64_t c = 1 + rng.below(8);
    const std::int64_t m = c + rng.below(8);
    CHECK(gen_random_semiperm(c, m, rng).is_semi_permutation());
    CHECK(gen_random_perm(1 + rng.below(8), rng).is_permutation());
  }
}
