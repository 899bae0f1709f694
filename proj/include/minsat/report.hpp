#pragma once

#include <cstdint>
#include <string>

#include "minsat/instances.hpp"

namespace minsat {

/// One row of the stacked-shift experiment: bounds of the stacked
/// instance, the optimum bracket derived from its per-shift blocks and
/// the recursive solver, and the reported side quantities.
struct GapRow {
  std::int64_t ell = 0;
  std::int64_t m = 0;
  std::int64_t c = 0;
  std::int64_t wb_weak_bal = 0;
  std::int64_t wb_strong = 0;
  std::int64_t wb2 = 0;
  std::int64_t lb_opt = 0;     // half the summed per-shift strong bounds
  std::int64_t ub_opt = 0;     // recursive solution size (feasible)
  std::int64_t xstar_ub = 0;   // recursive solution size on the expansion
  double corner_ratio = 0;     // strong bound over its split decomposition
  std::string alg = "recursive:rho=1:static";
};

GapRow gap_row(std::int64_t ell, GenGuard guard = {});

/// Every proven ordering among the row's fields.
bool gap_row_consistent(const GapRow& row);

/// The fixed CSV schema; undefined fields stay empty.
std::string gap_csv_header();
std::string gap_csv_line(const GapRow& row, double seconds);

}  // namespace minsat
