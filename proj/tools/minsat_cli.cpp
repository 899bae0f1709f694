#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "minsat/bounds_ext.hpp"
#include "minsat/geometry.hpp"
#include "minsat/instances.hpp"
#include "minsat/io.hpp"
#include "minsat/report.hpp"
#include "minsat/partition.hpp"
#include "minsat/selftest.hpp"
#include "minsat/solvers.hpp"

namespace {

using namespace minsat;

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

std::string fmt_seconds(double s) {
  std::ostringstream os;
  os.setf(std::ios::fixed);
  os.precision(3);
  os << s;
  return os.str();
}

bool guard_override() { return std::getenv("MINSAT_SIZE_GUARD") != nullptr; }

void emit_points(const std::string& out, const PointSet& p,
                 const std::optional<GenSpec>& gen = std::nullopt) {
  if (out.empty() || out == "-")
    std::cout << encode_json(p, gen);
  else
    write_point_file(out, p, gen);
}

std::string read_text(const std::string& path) {
  std::ifstream in(path);
  require(in.good(), "cannot open input file");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

struct GenArgs {
  std::string family;
  std::int64_t m = 3, n = 4, ell = 2, k = 4, c = 4;
  std::int64_t s = 0, s2 = 0;
  std::uint64_t seed = 0;
  std::string out;
};

int run_gen(const GenArgs& a) {
  const GenGuard guard{guard_override()};
  Rng rng(a.seed);
  if (a.family == "monotone") {
    const Generated g = gen_monotone(a.m);
    emit_points(a.out, g.points, g.spec);
  } else if (a.family == "brs") {
    const Generated g = gen_brs(a.n);
    emit_points(a.out, g.points, g.spec);
  } else if (a.family == "esbrs") {
    const Generated g = gen_esbrs(a.ell);
    emit_points(a.out, g.points, g.spec);
  } else if (a.family == "hard1d") {
    const HardOneD g = gen_hard_semiperm(a.ell, guard);
    emit_points(a.out, g.whole.points, g.whole.spec);
  } else if (a.family == "hard1d-perm") {
    const Generated g = gen_hard_perm(a.ell, guard);
    emit_points(a.out, g.points, g.spec);
  } else if (a.family == "esbrs2d") {
    const Generated g = gen_esbrs2d(a.ell);
    emit_points(a.out, g.points, g.spec);
  } else if (a.family == "shift2d") {
    const Generated g = gen_shift2d(a.ell, a.s, a.s2);
    emit_points(a.out, g.points, g.spec);
  } else if (a.family == "hard2d") {
    const Generated g = gen_hard2d_semiperm(a.ell, guard);
    emit_points(a.out, g.points, g.spec);
  } else if (a.family == "hard2d-perm") {
    const Generated g = gen_hard2d_perm(a.ell, guard);
    emit_points(a.out, g.points, g.spec);
  } else if (a.family == "iacono") {
    const Generated g = gen_iacono(a.k);
    emit_points(a.out, g.points, g.spec);
  } else if (a.family == "random-semiperm") {
    emit_points(a.out, gen_random_semiperm(a.c, a.m, rng));
  } else if (a.family == "random-perm") {
    emit_points(a.out, gen_random_perm(a.m, rng));
  } else {
    throw std::invalid_argument("unknown family: " + a.family);
  }
  return 0;
}

int run_verify(const std::string& instance_path, const std::string& solution_path) {
  const PointSet x = normalize(read_point_file(instance_path, Kind::instance));
  const PointSet y = read_point_file(solution_path, Kind::solution);
  const PointSet z = set_union_of(x, y);
  const auto bad = unsatisfied_pairs(z);
  if (bad.empty()) {
    std::cout << "ok: " << y.size() << " solution points satisfy " << x.size()
              << " instance points\n";
    return 0;
  }
  std::cout << "infeasible: " << bad.size() << " unsatisfied pair(s)\n";
  for (const auto& [a, b] : bad)
    std::cout << "  (" << a.x << "," << a.y << ") - (" << b.x << "," << b.y << ")\n";
  return 1;
}

struct BoundArgs {
  std::string instance;
  std::string which = "all";
  std::string order_path;
  std::string tree_out;
  std::uint64_t seed = 0;
  std::int64_t samples = 64;
  std::int64_t max_columns = 512;
};

int run_bound(const BoundArgs& a) {
  const PointSet x = normalize(read_point_file(a.instance, Kind::instance));
  x.require_semi_permutation("bound");
  const RankedInstance ranked = RankedInstance::from_instance(x);
  BoundReport report;
  const bool all = a.which == "all";

  if (all || a.which == "wb-weak") {
    PartitionTree t = PartitionTree::balanced(ranked.c);
    std::string method = "balanced";
    if (!a.order_path.empty()) {
      t = PartitionTree::from_order(ranked.c, decode_order(read_text(a.order_path)));
      method = "order";
    }
    report.wb_weak = BoundReport::Entry{wb_weak(ranked, t), method};
  }
  if (all || a.which == "wb-strong") {
    const StrongWbResult res = wb_strong_exact(ranked, a.max_columns);
    report.wb_strong = BoundReport::Entry{res.value, "interval-dp"};
    if (!a.tree_out.empty()) {
      std::ofstream out(a.tree_out);
      out << encode_tree(res.tree);
    }
  }
  if (all || a.which == "wb2")
    report.wb2 = BoundReport::Entry{wb2_funnel(x), "funnel"};
  if (all || a.which == "gb") {
    if (x.is_permutation())
      report.gb = BoundReport::Entry{gb_exact(x), "rectangle-dp"};
    else if (!all)
      throw std::invalid_argument("gb is defined for permutations only");
  }
  if (all || a.which == "cgb") {
    if (x.is_permutation()) {
      const std::int64_t n = ranked.c;
      if (2 * (n - 1) <= 7) {
        report.cgb = BoundReport::Entry{cgb_exact(x), "enumeration"};
      } else {
        Rng rng(a.seed);
        std::int64_t best = 0;
        MixedCutOrder order;
        for (std::int64_t g = 1; g < n; ++g) order.push_back({false, g});
        for (std::int64_t g = 1; g < n; ++g) order.push_back({true, g});
        for (std::int64_t it = 0; it < a.samples; ++it) {
          for (std::size_t i = order.size(); i > 1; --i)
            std::swap(order[i - 1], order[rng.below(i)]);
          best = std::max(best, cgb_order(x, order));
        }
        report.cgb = BoundReport::Entry{best, "sampled-max"};
      }
    } else if (!all) {
      throw std::invalid_argument("cgb is defined for permutations only");
    }
  }
  if (all || a.which == "opt") {
    const std::int64_t grid = x.active_rows() * x.active_columns() - (std::int64_t)x.size();
    if (grid <= 24)
      report.opt = BoundReport::Entry{(std::int64_t)opt_bruteforce(x).size(),
                                      "subset-enumeration"};
    else if (ranked.c <= 7)
      report.opt =
          BoundReport::Entry{(std::int64_t)opt_exact_dp(reduce(x)).size(), "profile-dp"};
    else if (!all)
      throw size_guard_error("opt: instance too large for the exact solvers");
  }
  std::cout << encode_bound_report(report);
  return 0;
}

struct SolveArgs {
  std::string instance;
  std::string algo = "recursive";
  std::string leaf = "static";
  int rho = 1;
  std::string out;
  std::string doubled_out;
  std::int64_t dp_columns = 7;
};

int run_solve(const SolveArgs& a) {
  const auto start = std::chrono::steady_clock::now();
  const PointSet x = normalize(read_point_file(a.instance, Kind::instance));
  x.require_semi_permutation("solve");
  PointSet y(std::vector<Point>{}, Kind::solution);
  PointSet check_against = x;
  std::string trace_json;
  if (a.algo == "brute") {
    y = opt_bruteforce(x);
  } else if (a.algo == "dp") {
    y = opt_exact_dp(reduce(x), a.dp_columns);
  } else if (a.algo == "static") {
    y = static_solution(x, PartitionTree::balanced(x.active_columns()));
  } else if (a.algo == "recursive") {
    const LeafMode mode = a.leaf == "dp" ? LeafMode::dp : LeafMode::fixed;
    const RecursiveResult res = recursive_bst(x, a.rho, mode, a.dp_columns);
    y = res.solution;
    std::ostringstream tr;
    for (const RecursionLevel& lvl : res.trace.levels)
      tr << "{\"level\":" << lvl.level << ",\"instances\":" << lvl.instances
         << ",\"points\":" << lvl.points << ",\"added\":" << lvl.added + lvl.leaf_added
         << "}\n";
    trace_json = tr.str();
  } else if (a.algo == "online") {
    const std::int64_t universe = x.active_columns();
    OnlineSolver solver(universe);
    std::vector<Point> got;
    for (const Point& p : x.points())
      for (const Point& q : solver.step(p.x / 2)) got.push_back(q);
    for (const Point& q : solver.finish()) got.push_back(q);
    y = PointSet(std::move(got), Kind::solution);
    check_against = double_rows(x);
    if (!a.doubled_out.empty()) write_point_file(a.doubled_out, check_against);
  } else {
    throw std::invalid_argument("unknown algorithm: " + a.algo);
  }
  const bool feasible = is_satisfied(set_union_of(check_against, y));
  emit_points(a.out, y);
  std::cerr << "{\"algo\":\"" << a.algo << "\",\"size\":" << y.size()
            << ",\"feasible\":" << (feasible ? "true" : "false")
            << ",\"seconds\":" << fmt_seconds(seconds_since(start)) << "}\n";
  if (!trace_json.empty()) std::cerr << trace_json;
  return feasible ? 0 : 1;
}

struct GapArgs {
  std::string family = "hard1d";
  std::int64_t ell_min = 2, ell_max = 3;
  std::string out;
};

int run_gap(const GapArgs& a) {
  require(a.family == "hard1d", "gap: only the hard1d family is supported");
  std::ostringstream csv;
  csv << gap_csv_header();
  bool all_consistent = true;
  for (std::int64_t ell = a.ell_min; ell <= a.ell_max; ++ell) {
    const auto start = std::chrono::steady_clock::now();
    const GapRow row = gap_row(ell, GenGuard{guard_override()});
    csv << gap_csv_line(row, seconds_since(start));
    const bool consistent = gap_row_consistent(row);
    all_consistent = all_consistent && consistent;
    std::cout << "ell=" << ell << " wb_strong=" << row.wb_strong << " lb_opt=" << row.lb_opt
              << " ub_opt=" << row.ub_opt << " gap=["
              << (double)row.lb_opt / (double)row.wb_strong << ", "
              << (double)row.ub_opt / (double)row.wb_strong
              << "] corner-strip-ratio=" << row.corner_ratio << " xstar_ub=" << row.xstar_ub
              << (consistent ? "" : "  ORDERING VIOLATION") << "\n";
  }
  if (a.out.empty() || a.out == "-") {
    std::cout << csv.str();
  } else {
    std::ofstream out(a.out);
    require(out.good(), "cannot open output file");
    out << csv.str();
  }
  return all_consistent ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Geometric minimum-satisfaction toolkit: generators, bounds, solvers"};
  app.require_subcommand(1);

  GenArgs gen_args;
  CLI::App* gen = app.add_subcommand("gen", "generate an instance");
  gen->add_option("family", gen_args.family,
                  "monotone|brs|esbrs|hard1d|hard1d-perm|esbrs2d|shift2d|hard2d|"
                  "hard2d-perm|iacono|random-semiperm|random-perm")
      ->required();
  gen->add_option("--m", gen_args.m, "rows (monotone, random families)");
  gen->add_option("--n", gen_args.n, "points (brs), a power of two");
  gen->add_option("--ell", gen_args.ell, "level parameter");
  gen->add_option("--k", gen_args.k, "points (iacono), a power of two");
  gen->add_option("--c", gen_args.c, "columns (random-semiperm)");
  gen->add_option("--s", gen_args.s, "horizontal shift (shift2d)");
  gen->add_option("--s2", gen_args.s2, "vertical shift (shift2d)");
  gen->add_option("--seed", gen_args.seed, "random seed");
  gen->add_option("-o,--out", gen_args.out, "output file (.tsv for TSV, else JSON)");

  std::string verify_instance, verify_solution;
  CLI::App* verify = app.add_subcommand("verify", "check a solution file");
  verify->add_option("instance", verify_instance)->required();
  verify->add_option("solution", verify_solution)->required();

  BoundArgs bound_args;
  CLI::App* bound = app.add_subcommand("bound", "compute lower bounds");
  bound->add_option("instance", bound_args.instance)->required();
  bound->add_option("--which", bound_args.which, "wb-weak|wb-strong|wb2|gb|cgb|opt|all");
  bound->add_option("--order", bound_args.order_path, "cut order JSON for wb-weak");
  bound->add_option("--tree-out", bound_args.tree_out, "write the maximizing tree");
  bound->add_option("--seed", bound_args.seed, "seed for sampled cgb orders");
  bound->add_option("--samples", bound_args.samples, "sampled cgb orders");
  bound->add_option("--max-columns", bound_args.max_columns, "interval table guard");

  SolveArgs solve_args;
  CLI::App* solve = app.add_subcommand("solve", "run a solver");
  solve->add_option("instance", solve_args.instance)->required();
  solve->add_option("--algo", solve_args.algo, "brute|dp|static|recursive|online");
  solve->add_option("--leaf", solve_args.leaf, "dp|static (recursive leaf mode)");
  solve->add_option("--rho", solve_args.rho, "leaf height threshold");
  solve->add_option("--dp-columns", solve_args.dp_columns, "profile table guard");
  solve->add_option("-o,--out", solve_args.out, "solution output file");
  solve->add_option("--doubled-out", solve_args.doubled_out,
                    "write the doubled instance (online)");

  GapArgs gap_args;
  CLI::App* gap = app.add_subcommand("gap", "bound-vs-solver report for the hard family");
  gap->add_option("--family", gap_args.family);
  gap->add_option("--ell-min", gap_args.ell_min);
  gap->add_option("--ell-max", gap_args.ell_max);
  gap->add_option("-o,--out", gap_args.out, "CSV output file");

  app.add_subcommand("selftest", "run the built-in verification gate");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return e.get_exit_code() == 0 ? 0 : 2;
  }

  try {
    if (gen->parsed()) return run_gen(gen_args);
    if (verify->parsed()) return run_verify(verify_instance, verify_solution);
    if (bound->parsed()) return run_bound(bound_args);
    if (solve->parsed()) return run_solve(solve_args);
    if (gap->parsed()) return run_gap(gap_args);
    return run_selftest(std::cout) == 0 ? 0 : 1;
  } catch (const minsat::size_guard_error& e) {
    std::cerr << "size guard: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
