#pragma once

#include <optional>
#include <string>

#include "minsat/geometry.hpp"
#include "minsat/instances.hpp"
#include "minsat/partition.hpp"

namespace minsat {

/// JSON layout: {"format":"minsat-v1","kind":"instance"|"solution",
/// "points":[[x,y],...]}, with an optional "gen" provenance block.
/// Encoding is canonical (sorted points, fixed key order) so encode and
/// decode round-trip byte for byte.
std::string encode_json(const PointSet& p, const std::optional<GenSpec>& gen = std::nullopt);
PointSet decode_json(const std::string& text, std::optional<GenSpec>* gen = nullptr);

/// TSV layout: one "x<TAB>y" per line; '#' starts a comment.
std::string encode_tsv(const PointSet& p);
PointSet decode_tsv(const std::string& text, Kind kind = Kind::instance);

/// Reads either format, deciding by the first non-space byte.
PointSet read_point_file(const std::string& path, Kind tsv_kind = Kind::instance);
void write_point_file(const std::string& path, const PointSet& p,
                      const std::optional<GenSpec>& gen = std::nullopt);

/// Nested {"strip":[lo,hi],"gap":g,"left":...,"right":...} objects.
std::string encode_tree(const PartitionTree& t);
PartitionTree decode_tree(const std::string& text);

/// Cut orders serialize as a JSON array of gap indices.
std::string encode_order(const CutOrder& order);
CutOrder decode_order(const std::string& text);

/// Named bound values with per-field method tags; absent bounds are null.
struct BoundReport {
  struct Entry {
    std::int64_t value = 0;
    std::string method;
  };
  std::optional<Entry> wb_weak, wb_strong, wb2, gb, cgb, opt;
};

std::string encode_bound_report(const BoundReport& r);

}  // namespace minsat
