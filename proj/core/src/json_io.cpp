#include "tgglines/json_io.hpp"

#include <cmath>
#include <nlohmann/json.hpp>

#include "tgglines/error.hpp"

namespace tgglines::json {

using Json = nlohmann::ordered_json;

double round3(double value) {
  const double r = std::round(value * 1000.0) / 1000.0;
  return r == 0.0 ? 0.0 : r;  // no "-0.0"
}

namespace {

Json pixel(Pixel p) { return Json::array({p.row, p.col}); }

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

Json parse_document(std::string_view text) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const Json::parse_error& e) {
    throw Error(ErrorCode::schema, std::string("malformed JSON: ") + e.what());
  }
}

const Json& require(const Json& obj, const char* key, const std::string& where) {
  if (!obj.is_object()) throw Error(ErrorCode::schema, where + ": expected an object");
  const auto it = obj.find(key);
  if (it == obj.end()) throw Error(ErrorCode::schema, where + "." + key + ": missing field");
  return *it;
}

std::int32_t read_int(const Json& v, const std::string& where) {
  if (v.is_number_integer()) return v.get<std::int32_t>();
  if (v.is_number_float()) {
    const double d = v.get<double>();
    if (std::floor(d) == d && std::abs(d) < 2e9) return static_cast<std::int32_t>(d);
  }
  throw Error(ErrorCode::schema, where + ": expected an integer");
}

Pixel read_pixel(const Json& v, const std::string& where) {
  if (!v.is_array() || v.size() != 2) {
    throw Error(ErrorCode::schema, where + ": expected a [row, col] pair");
  }
  return {read_int(v[0], where + "[0]"), read_int(v[1], where + "[1]")};
}

std::string read_string(const Json& obj, const char* key, const std::string& where) {
  const auto it = obj.find(key);
  if (it == obj.end()) return {};
  if (!it->is_string()) throw Error(ErrorCode::schema, where + "." + key + ": expected a string");
  return it->get<std::string>();
}

const Json& require_array(const Json& obj, const char* key, const std::string& where) {
  const auto& v = require(obj, key, where);
  if (!v.is_array()) throw Error(ErrorCode::schema, where + "." + key + ": expected an array");
  return v;
}

Json edges_json(std::span<const LscgEdge> edges) {
  Json out = Json::array();
  for (const auto& e : edges) out.push_back({{"a", e.a}, {"b", e.b}, {"via", pixel(e.via)}});
  return out;
}

Json simplified_paths_json(const SimplifiedLscg& s) {
  Json paths = Json::array();
  for (const auto& p : s.paths) {
    Json vertices = Json::array();
    for (const auto& v : p.vertices) vertices.push_back(pixel(v));
    paths.push_back({{"id", p.source_path_id},
                     {"closed", p.closed},
                     {"epsilon", round3(p.epsilon_used)},
                     {"vertices", std::move(vertices)}});
  }
  return paths;
}

Json segments_json(std::span<const TaggedSegment> segments) {
  Json out = Json::array();
  for (const auto& s : segments) {
    out.push_back({{"path", s.path}, {"p1", pixel(s.segment.p1)}, {"p2", pixel(s.segment.p2)}});
  }
  return out;
}

}  // namespace

std::string skeleton_graph(const SkeletonGraph& g) {
  Json nodes = Json::array();
  Json edges = Json::array();
  for (const auto& n : g.nodes()) {
    nodes.push_back(Json::array({n.id, n.pixel.row, n.pixel.col, n.degree}));
    for (const NodeId m : g.links(n.id)) {
      if (n.id < m) edges.push_back(Json::array({n.id, m}));
    }
  }
  return dump({{"width", g.width()}, {"height", g.height()}, {"nodes", nodes}, {"edges", edges}});
}

std::string lscg(const Lscg& l) {
  Json paths = Json::array();
  for (const auto& p : l.paths) {
    Json nodes = Json::array();
    for (const auto& n : p.nodes) nodes.push_back(pixel(n));
    paths.push_back({{"id", p.id}, {"closed", p.closed}, {"nodes", std::move(nodes)}});
  }
  return dump({{"paths", std::move(paths)}, {"edges", edges_json(l.edges)}});
}

std::string simplified_lscg(const SimplifiedLscg& s) {
  return dump({{"paths", simplified_paths_json(s)}, {"edges", edges_json(s.edges)}});
}

std::string segments(std::span<const TaggedSegment> segs) {
  return dump({{"segments", segments_json(segs)}});
}

std::string detection(const DetectionResult& r, std::string_view image_name) {
  const auto& st = r.stats;
  Json stats = {{"skeleton_pixels", st.skeleton_pixels}, {"paths", st.paths},
                {"closed_paths", st.closed_paths},       {"junctions", st.junctions},
                {"ends", st.ends},                       {"segments", st.segments}};
  return dump({{"image", std::string(image_name)},
               {"width", r.width},
               {"height", r.height},
               {"paths", simplified_paths_json(r.lscg)},
               {"edges", edges_json(r.lscg.edges)},
               {"segments", segments_json(r.segments)},
               {"stats", std::move(stats)}});
}

std::vector<LineSegment> DetectionDocument::plain_segments() const {
  std::vector<LineSegment> out;
  for (const auto& s : segments) out.push_back(s.segment);
  return out;
}

DetectionDocument parse_detection(std::string_view text) {
  const Json doc = parse_document(text);
  if (!doc.is_object()) throw Error(ErrorCode::schema, "detection: expected an object");
  DetectionDocument out;
  if (doc.contains("width")) out.width = static_cast<std::size_t>(read_int(doc["width"], "width"));
  if (doc.contains("height")) {
    out.height = static_cast<std::size_t>(read_int(doc["height"], "height"));
  }
  const auto& segs = require_array(doc, "segments", "detection");
  for (std::size_t i = 0; i < segs.size(); ++i) {
    const std::string where = "segments[" + std::to_string(i) + "]";
    const auto& s = segs[i];
    TaggedSegment t;
    t.path = s.contains("path") ? static_cast<PathId>(read_int(s["path"], where + ".path")) : 0;
    t.segment.p1 = read_pixel(require(s, "p1", where), where + ".p1");
    t.segment.p2 = read_pixel(require(s, "p2", where), where + ".p2");
    t.index = out.segments.empty() || out.segments.back().path != t.path
                  ? 0
                  : out.segments.back().index + 1;
    out.segments.push_back(t);
  }
  return out;
}

std::string ground_truth(const GroundTruth& gt) {
  Json segs = Json::array();
  for (const auto& s : gt.segments) segs.push_back({{"p1", pixel(s.p1)}, {"p2", pixel(s.p2)}});
  return dump({{"image", gt.image},
               {"annotator", gt.annotator},
               {"created", gt.created},
               {"segments", std::move(segs)}});
}

GroundTruth parse_ground_truth(std::string_view text) {
  const Json doc = parse_document(text);
  if (!doc.is_object()) throw Error(ErrorCode::schema, "ground truth: expected an object");
  GroundTruth gt;
  gt.image = read_string(doc, "image", "ground truth");
  gt.annotator = read_string(doc, "annotator", "ground truth");
  gt.created = read_string(doc, "created", "ground truth");
  const auto& segs = require_array(doc, "segments", "ground truth");
  for (std::size_t i = 0; i < segs.size(); ++i) {
    const std::string where = "segments[" + std::to_string(i) + "]";
    gt.segments.push_back({read_pixel(require(segs[i], "p1", where), where + ".p1"),
                           read_pixel(require(segs[i], "p2", where), where + ".p2")});
  }
  return gt;
}

std::string report(const MatchReport& r) {
  const auto& c = r.config;
  Json config = {{"angle_tol", round3(c.angle_tol_deg)},
                 {"dist_tol", round3(c.dist_tol)},
                 {"full_threshold", round3(c.full_threshold)},
                 {"fragment_limit", c.fragment_limit},
                 {"double_line", c.double_line}};
  Json per_gt = Json::array();
  for (const auto& s : r.per_gt) {
    Json entry = {{"index", s.index},
                  {"weight", round3(s.weight)},
                  {"matched", s.matched},
                  {"tag", s.tag},
                  {"coverage", round3(s.coverage)}};
    if (s.rail >= 0) entry["rail"] = s.rail;
    per_gt.push_back(std::move(entry));
  }
  return dump({{"config", std::move(config)},
               {"n_t", r.n_t},
               {"n_c", round3(r.n_c)},
               {"accuracy", round3(r.accuracy)},
               {"per_gt", std::move(per_gt)}});
}

}  // namespace tgglines::json
