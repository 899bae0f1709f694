#include "minsat/report.hpp"

#include <sstream>

#include "minsat/bounds_ext.hpp"
#include "minsat/partition.hpp"
#include "minsat/solvers.hpp"

namespace minsat {

GapRow gap_row(std::int64_t ell, GenGuard guard) {
  const HardOneD hard = gen_hard_semiperm(ell, guard);
  const PointSet x = normalize(hard.whole.points);
  const RankedInstance ranked = RankedInstance::from_instance(x);
  GapRow row;
  row.ell = ell;
  row.m = (std::int64_t)x.size();
  row.c = ranked.c;
  row.wb_weak_bal = wb_weak(ranked, PartitionTree::balanced(ranked.c));
  row.wb_strong = wb_strong_exact(ranked).value;
  row.wb2 = wb2_funnel(x);
  std::int64_t sum_strips = 0;
  for (const PointSet& sub : hard.shifted) sum_strips += wb_strong(normalize(sub));
  row.lb_opt = (sum_strips + 1) / 2;
  row.ub_opt = (std::int64_t)recursive_bst(x, 1, LeafMode::fixed).solution.size();
  row.xstar_ub = (std::int64_t)recursive_bst(normalize(gen_hard_perm(ell, guard).points), 1,
                                             LeafMode::fixed)
                     .solution.size();
  // Split decomposition ratio, reported for the record; the constants of
  // the underlying inequality are not asserted.
  {
    const PartitionTree t = PartitionTree::balanced(ranked.c);
    const SplitResult s = split_at(x, t, middle_layer(t));
    std::int64_t rhs = 4 * wb_strong(normalize(s.compressed)) + (std::int64_t)x.size();
    for (const StripPart& part : s.strips) rhs += 8 * wb_strong(normalize(part.points));
    row.corner_ratio = (double)row.wb_strong / (double)rhs;
  }
  return row;
}

bool gap_row_consistent(const GapRow& row) {
  return row.wb_weak_bal <= row.wb_strong && row.lb_opt <= row.ub_opt &&
         row.wb_strong <= 2 * row.ub_opt && row.wb2 <= row.m + row.ub_opt &&
         row.lb_opt <= row.xstar_ub;
}

std::string gap_csv_header() {
  return "family,ell,m,c,wb_weak_bal,wb_strong,wb2,gb,cgb_max,opt,lb_opt,ub_opt,alg,"
         "alg_size,seconds\n";
}

std::string gap_csv_line(const GapRow& row, double seconds) {
  std::ostringstream os;
  os.setf(std::ios::fixed);
  os.precision(3);
  os << "hard1d," << row.ell << ',' << row.m << ',' << row.c << ',' << row.wb_weak_bal << ','
     << row.wb_strong << ',' << row.wb2 << ",,,," << row.lb_opt << ',' << row.ub_opt << ','
     << row.alg << ',' << row.ub_opt << ',' << seconds << "\n";
  return os.str();
}

}  // namespace minsat
