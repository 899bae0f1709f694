#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "minsat/geometry.hpp"

namespace minsat {

/// Provenance of a generated instance; written into the JSON header.
struct GenSpec {
  std::string family;
  std::int64_t ell = 0;      // level parameter where applicable
  std::int64_t n = 0;        // 2^ell
  std::int64_t universe = 0; // N = 2^n (column universe, raw space)
  std::int64_t nstar = 0;    // total points of the assembled instance
  std::int64_t shift = -1;   // horizontal shift, when meaningful
  std::int64_t shift2 = -1;  // vertical shift, when meaningful
  std::int64_t param = 0;    // m for monotone, n for brs, k for iacono
};

struct Generated {
  PointSet points;
  GenSpec spec;
};

/// Size guard: generators refuse levels above their default unless
/// `allow_large` (or the MINSAT_SIZE_GUARD environment override read by
/// the CLI) is set.
struct GenGuard {
  bool allow_large = false;
};

/// Staircase (i, i) for i = 1..m.
Generated gen_monotone(std::int64_t m);

/// Bit-reversal permutation on the given row/column coordinate sets
/// (sizes must equal 2^level).
PointSet gen_brs_on(int level, const std::vector<std::int64_t>& rows,
                    const std::vector<std::int64_t>& cols);

/// Bit-reversal permutation on rows and columns 1..n (n a power of two).
Generated gen_brs(std::int64_t n);

/// BRS on 2^ell points whose columns are 1, 2, 4, ..., N/2 inside the
/// universe of N = 2^(2^ell) columns.
Generated gen_esbrs(std::int64_t ell,
                    const std::vector<std::int64_t>& rows = {});

/// Union over s = 0..N-1 of the ESBRS instance shifted by s, stacked in
/// row blocks of n; a semi-permutation with N columns of log N points.
/// Also exposes the per-shift subinstances.
struct HardOneD {
  Generated whole;
  std::vector<PointSet> shifted;  // subinstance X^s per shift s
};
HardOneD gen_hard_semiperm(std::int64_t ell, GenGuard guard = {});

/// The column-block expansion of gen_hard_semiperm into a permutation.
Generated gen_hard_perm(std::int64_t ell, GenGuard guard = {});

/// BRS with both coordinate axes exponentially spaced: rows and columns
/// at 2^j for j = 1..n.
Generated gen_esbrs2d(std::int64_t ell);

/// gen_esbrs2d shifted cyclically by s columns and then s2 rows.
Generated gen_shift2d(std::int64_t ell, std::int64_t s, std::int64_t s2);

/// N x N grid of boxes, box (i, j) holding the 2D instance with
/// horizontal shift i-1 and vertical shift j-1.
Generated gen_hard2d_semiperm(std::int64_t ell, GenGuard guard = {});

/// Row- and column-block expansion of gen_hard2d_semiperm into a
/// permutation.
Generated gen_hard2d_perm(std::int64_t ell, GenGuard guard = {});

/// BRS on k points planted on one column per sibling strip of the
/// leftmost root-leaf path of the balanced tree over 2^k columns: the
/// balanced tree sees O(k) crossings while the best tree sees
/// k log k scale. k must be a power of two.
Generated gen_iacono(std::int64_t k);

/// Uniform random semi-permutation: m rows, columns drawn from 1..c with
/// every column hit at least once (requires m >= c).
PointSet gen_random_semiperm(std::int64_t c, std::int64_t m, Rng& rng);

/// Uniform random permutation on 1..m.
PointSet gen_random_perm(std::int64_t m, Rng& rng);

}  // namespace minsat
