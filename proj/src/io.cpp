#include "minsat/io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace minsat {

namespace {

using ordered_json = nlohmann::ordered_json;

const char* kind_name(Kind k) {
  switch (k) {
    case Kind::instance: return "instance";
    case Kind::solution: return "solution";
    default: return "union";
  }
}

Kind kind_from_name(const std::string& s) {
  if (s == "instance") return Kind::instance;
  if (s == "solution") return Kind::solution;
  if (s == "union") return Kind::set_union;
  throw std::invalid_argument("unknown point-set kind: " + s);
}

}  // namespace

std::string encode_json(const PointSet& p, const std::optional<GenSpec>& gen) {
  ordered_json j;
  j["format"] = "minsat-v1";
  j["kind"] = kind_name(p.kind());
  if (gen) {
    ordered_json g;
    g["family"] = gen->family;
    g["ell"] = gen->ell;
    g["n"] = gen->n;
    g["N"] = gen->universe;
    g["Nstar"] = gen->nstar;
    if (gen->shift >= 0) g["shift"] = gen->shift;
    if (gen->shift2 >= 0) g["shift2"] = gen->shift2;
    g["param"] = gen->param;
    j["gen"] = std::move(g);
  }
  ordered_json pts = ordered_json::array();
  for (const Point& q : p.points()) pts.push_back({q.x, q.y});
  j["points"] = std::move(pts);
  return j.dump() + "\n";
}

PointSet decode_json(const std::string& text, std::optional<GenSpec>* gen) {
  const ordered_json j = ordered_json::parse(text);
  require(j.value("format", "") == std::string("minsat-v1"),
          "decode_json: unknown or missing format tag");
  const Kind kind = kind_from_name(j.at("kind").get<std::string>());
  if (gen) {
    *gen = std::nullopt;
    if (j.contains("gen")) {
      const auto& g = j.at("gen");
      GenSpec spec;
      spec.family = g.value("family", "");
      spec.ell = g.value("ell", (std::int64_t)0);
      spec.n = g.value("n", (std::int64_t)0);
      spec.universe = g.value("N", (std::int64_t)0);
      spec.nstar = g.value("Nstar", (std::int64_t)0);
      spec.shift = g.value("shift", (std::int64_t)-1);
      spec.shift2 = g.value("shift2", (std::int64_t)-1);
      spec.param = g.value("param", (std::int64_t)0);
      *gen = spec;
    }
  }
  std::vector<Point> pts;
  for (const auto& e : j.at("points"))
    pts.push_back({e.at(0).get<std::int64_t>(), e.at(1).get<std::int64_t>()});
  return PointSet(std::move(pts), kind);
}

std::string encode_tsv(const PointSet& p) {
  std::ostringstream os;
  for (const Point& q : p.points()) os << q.x << '\t' << q.y << '\n';
  return os.str();
}

PointSet decode_tsv(const std::string& text, Kind kind) {
  std::vector<Point> pts;
  std::istringstream is(text);
  std::string line;
  while (std::getline(is, line)) {
    const std::size_t hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    std::istringstream ls(line);
    std::int64_t x, y;
    if (ls >> x >> y) pts.push_back({x, y});
  }
  return PointSet(std::move(pts), kind);
}

PointSet read_point_file(const std::string& path, Kind tsv_kind) {
  std::ifstream in(path);
  require(in.good(), "cannot open input file");
  std::ostringstream buf;
  buf << in.rdbuf();
  const std::string text = buf.str();
  const std::size_t first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') return decode_json(text);
  return decode_tsv(text, tsv_kind);
}

void write_point_file(const std::string& path, const PointSet& p,
                      const std::optional<GenSpec>& gen) {
  std::ofstream out(path);
  require(out.good(), "cannot open output file");
  if (path.size() >= 4 && path.substr(path.size() - 4) == ".tsv")
    out << encode_tsv(p);
  else
    out << encode_json(p, gen);
}

namespace {

ordered_json tree_to_json(const PartitionTree& t, int v) {
  const auto& n = t.node(v);
  ordered_json j;
  j["strip"] = {n.lo, n.hi};
  if (n.left >= 0) {
    j["gap"] = n.gap;
    j["left"] = tree_to_json(t, n.left);
    j["right"] = tree_to_json(t, n.right);
  }
  return j;
}

int tree_from_json(const ordered_json& j, PartitionTree& t, int parent, int depth) {
  PartitionTree::Node n;
  n.lo = j.at("strip").at(0).get<std::int64_t>();
  n.hi = j.at("strip").at(1).get<std::int64_t>();
  n.parent = parent;
  n.depth = depth;
  const int id = t.add_node(n);
  if (j.contains("gap")) {
    t.mutable_node(id).gap = j.at("gap").get<std::int64_t>();
    t.mutable_node(id).left = tree_from_json(j.at("left"), t, id, depth + 1);
    t.mutable_node(id).right = tree_from_json(j.at("right"), t, id, depth + 1);
  }
  return id;
}

}  // namespace

std::string encode_tree(const PartitionTree& t) {
  return tree_to_json(t, t.root()).dump() + "\n";
}

PartitionTree decode_tree(const std::string& text) {
  const ordered_json j = ordered_json::parse(text);
  PartitionTree t;
  tree_from_json(j, t, -1, 0);
  t.set_columns(t.node(t.root()).hi - t.node(t.root()).lo + 1);
  return t;
}

std::string encode_order(const CutOrder& order) {
  ordered_json j = ordered_json::array();
  for (std::int64_t g : order) j.push_back(g);
  return j.dump() + "\n";
}

CutOrder decode_order(const std::string& text) {
  const ordered_json j = ordered_json::parse(text);
  CutOrder order;
  for (const auto& e : j) order.push_back(e.get<std::int64_t>());
  return order;
}

std::string encode_bound_report(const BoundReport& r) {
  ordered_json j;
  j["format"] = "minsat-bounds-v1";
  const auto put = [&](const char* name, const std::optional<BoundReport::Entry>& e) {
    if (e) {
      ordered_json o;
      o["value"] = e->value;
      o["method"] = e->method;
      j[name] = std::move(o);
    } else {
      j[name] = nullptr;
    }
  };
  put("wb_weak", r.wb_weak);
  put("wb_strong", r.wb_strong);
  put("wb2", r.wb2);
  put("gb", r.gb);
  put("cgb", r.cgb);
  put("opt", r.opt);
  return j.dump() + "\n";
}

}  // namespace minsat
