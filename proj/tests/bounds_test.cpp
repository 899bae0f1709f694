#include <doctest.h>

#include "minsat/bounds_ext.hpp"
#include "minsat/instances.hpp"
#include "minsat/solvers.hpp"
#include "support/oracles.hpp"

using namespace minsat;

TEST_CASE("funnel bound") {
  CHECK(wb2_funnel(PointSet({{2, 1}}, Kind::instance)) == 1);
  CHECK(wb2_funnel(normalize(gen_monotone(2).points)) == 2);
  SUBCASE("bit-reversal on four points") {
    const PointSet brs4 = normalize(gen_brs(4).points);
    const auto recs = funnels(brs4);
    REQUIRE(recs.size() == 4);
    CHECK(recs[0].funnel.empty());
    CHECK(recs[1].funnel.size() == 1);  // {(1,1)} in rank space
    CHECK(recs[1].alt == 0);
    CHECK(recs[2].funnel.size() == 2);  // {(1,1),(3,2)}
    CHECK(recs[2].alt == 1);
    CHECK(recs[3].funnel.size() == 2);  // {(3,2),(2,3)}
    CHECK(recs[3].alt == 0);
    CHECK(wb2_funnel(brs4) == 5);
  }
  SUBCASE("funnel members pairwise see empty rectangles") {
    Rng rng(33);
    for (int it = 0; it < 50; ++it) {
      const std::int64_t c = 2 + rng.below(5);
      const PointSet x = normalize(gen_random_semiperm(c, c + rng.below(5), rng));
      for (const FunnelRecord& rec : funnels(x)) {
        for (const Point& q : rec.funnel) {
          bool blocked = false;
          const Rect r = Rect::spanning(rec.p, q);
          for (const Point& w : x.points())
            blocked = blocked || (!(w == rec.p) && !(w == q) && r.contains(w));
          REQUIRE_FALSE(blocked);
        }
        REQUIRE(rec.alt <= std::max<std::int64_t>((std::int64_t)rec.funnel.size() - 1, 0));
      }
    }
  }
  SUBCASE("subsequences never gain funnel value") {
    Rng rng(35);
    for (int it = 0; it < 40; ++it) {
      const PointSet x = gen_random_semiperm(3 + rng.below(4), 6 + rng.below(4), rng);
      std::vector<Point> sub;
      for (const Point& p : x.points())
        if (rng.below(4) != 0) sub.push_back(p);
      if (sub.empty()) continue;
      const PointSet z(std::move(sub), Kind::instance);
      REQUIRE(wb2_funnel(normalize(z)) <= wb2_funnel(normalize(x)));
    }
  }
  SUBCASE("never exceeds the total optimal cost") {
    // The funnel bound counts every access, so it compares against
    // |X| + opt rather than the added-point count alone.
    Rng rng(37);
    for (int it = 0; it < 60; ++it) {
      const PointSet x =
          normalize(gen_random_semiperm(2 + rng.below(4), 5 + rng.below(3), rng));
      const std::int64_t opt = (std::int64_t)opt_bruteforce(x, 30).size();
      REQUIRE(wb2_funnel(x) <= (std::int64_t)x.size() + opt);
    }
  }
}

TEST_CASE("guillotine bound") {
  CHECK(gb_exact(PointSet({{1, 1}}, Kind::instance)) == 0);
  CHECK_THROWS_AS(gb_exact(PointSet({{1, 1}, {1, 2}}, Kind::instance)),
                  std::invalid_argument);
  SUBCASE("matches exhaustive guillotine enumeration on four points") {
    const PointSet brs4 = normalize(gen_brs(4).points);
    CHECK(gb_exact(brs4) == testing::gb_enumerate(brs4));
    Rng rng(41);
    for (int it = 0; it < 40; ++it) {
      const PointSet x = normalize(gen_random_perm(2 + rng.below(4), rng));
      REQUIRE(gb_exact(x) == testing::gb_enumerate(x));
    }
  }
  SUBCASE("dominates the strong vertical bound") {
    Rng rng(43);
    for (int it = 0; it < 40; ++it) {
      const PointSet x = normalize(gen_random_perm(2 + rng.below(7), rng));
      REQUIRE(gb_exact(x) >= wb_strong(x));
    }
  }
}

TEST_CASE("consistent guillotine bound") {
  SUBCASE("single point is free under any order") {
    CHECK(cgb_order(PointSet({{1, 1}}, Kind::instance), {}) == 0);
    CHECK(cgb_exact(PointSet({{1, 1}}, Kind::instance)) == 0);
  }
  SUBCASE("two-point anti-diagonal hand trace") {
    const PointSet x = normalize(PointSet({{1, 2}, {2, 1}}, Kind::instance));
    CHECK(cgb_order(x, {{false, 1}, {true, 1}}) == 1);
    CHECK(cgb_order(x, {{true, 1}, {false, 1}}) == 1);
  }
  SUBCASE("two-point staircase maximum") {
    CHECK(cgb_exact(normalize(gen_monotone(2).points)) == 1);
  }
  SUBCASE("mixed orders stay within the two axis bounds") {
    Rng rng(47);
    for (int it = 0; it < 40; ++it) {
      const PointSet x = normalize(gen_random_perm(2 + rng.below(5), rng));
      const std::int64_t n = x.active_columns();
      const std::int64_t wb_v = wb_strong(x);
      const std::int64_t wb_h = wb_strong(normalize(transpose(x)));
      MixedCutOrder order;
      for (std::int64_t g = 1; g < n; ++g) order.push_back({false, g});
      for (std::int64_t g = 1; g < n; ++g) order.push_back({true, g});
      for (std::size_t i = order.size(); i > 1; --i)
        std::swap(order[i - 1], order[rng.below(i)]);
      REQUIRE(cgb_order(x, order) <= wb_v + wb_h);
    }
  }
  SUBCASE("sits between the vertical bound and the guillotine bound") {
    Rng rng(49);
    for (int it = 0; it < 25; ++it) {
      const PointSet x = normalize(gen_random_perm(2 + rng.below(3), rng));
      const std::int64_t cgb = cgb_exact(x);
      REQUIRE(wb_strong(x) <= cgb);
      REQUIRE(cgb <= gb_exact(x));
    }
  }
  SUBCASE("guards") {
    Rng rng(51);
    CHECK_THROWS_AS(cgb_exact(normalize(gen_random_perm(6, rng))), size_guard_error);
  }
}
