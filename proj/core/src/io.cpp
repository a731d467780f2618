#include "wdg/io.hpp"

#include <fstream>
#include <sstream>
#include <utility>
#include <vector>

#include <json.hpp>

#include "wdg/error.hpp"

namespace wdg::io {

using json = nlohmann::ordered_json;

namespace {

json parse_json(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::ParseError, std::string("malformed document: ") + e.what());
  }
}

const json& field(const json& object, const char* key) {
  if (!object.is_object() || !object.contains(key)) {
    throw Error(ErrorCode::ParseError, std::string("missing field '") + key + "'");
  }
  return object.at(key);
}

std::size_t unsigned_field(const json& object, const char* key) {
  const json& value = field(object, key);
  if (!value.is_number_unsigned()) {
    throw Error(ErrorCode::ParseError, std::string("field '") + key + "' must be a non-negative integer");
  }
  return value.get<std::size_t>();
}

Rational rational_field(const json& object, const char* key) {
  const json& value = field(object, key);
  if (value.is_string()) return Rational::parse(value.get<std::string>());
  if (value.is_number_integer()) return Rational(value.get<long>());
  throw Error(ErrorCode::ParseError, std::string("field '") + key + "' must be a rational string");
}

void require_version(const json& doc) {
  const json& version = field(doc, "format_version");
  if (!version.is_number_integer() || version.get<long>() != kFormatVersion) {
    throw Error(ErrorCode::ParseError, "unsupported format_version");
  }
}

std::vector<TargetPoint> parse_points(const json& doc) {
  const json& points = field(doc, "points");
  if (!points.is_array()) throw Error(ErrorCode::ParseError, "'points' must be an array");
  std::vector<TargetPoint> out;
  out.reserve(points.size());
  for (const json& p : points) {
    const json& input = field(p, "input");
    const json& value = field(p, "value");
    if (!input.is_string()) throw Error(ErrorCode::ParseError, "'input' must be a +/- string");
    if (!value.is_number_integer()) throw Error(ErrorCode::ParseError, "'value' must be 0 or 1");
    out.push_back(TargetPoint{Assignment::parse(input.get<std::string>()), value.get<int>()});
  }
  return out;
}

std::string dump(const json& doc) { return doc.dump(2) + "\n"; }

json extremum_json(const std::optional<hypercube::Extremum>& e) {
  if (!e) return nullptr;
  json out;
  out["value"] = e->value.to_string();
  out["witness"] = e->witness.to_string();
  return out;
}

json optional_rational(const std::optional<Rational>& value) {
  if (!value) return nullptr;
  return value->to_string();
}

void plain_line(std::ostringstream& out, std::string_view key, const std::string& value) {
  out << key << '=' << value << '\n';
}

}  // namespace

std::string serialize_wdg(const Wdg& wdg) {
  json doc;
  doc["format_version"] = kFormatVersion;
  doc["dimension"] = wdg.dimension();
  doc["shift"] = wdg.shift().to_string();
  json edges = json::array();
  for (const Edge& e : wdg.edges()) {
    json edge;
    edge["u"] = e.u;
    edge["v"] = e.v;
    edge["w"] = e.weight.to_string();
    edges.push_back(std::move(edge));
  }
  doc["edges"] = std::move(edges);
  return dump(doc);
}

Wdg parse_wdg(std::string_view text) {
  const json doc = parse_json(text);
  require_version(doc);
  const std::size_t dimension = unsigned_field(doc, "dimension");
  const Rational shift = doc.contains("shift") ? rational_field(doc, "shift") : Rational(0);
  const json& edges = field(doc, "edges");
  if (!edges.is_array()) throw Error(ErrorCode::ParseError, "'edges' must be an array");
  std::vector<EdgeSpec> specs;
  specs.reserve(edges.size());
  for (const json& e : edges) {
    specs.push_back(EdgeSpec{unsigned_field(e, "u"), unsigned_field(e, "v"), rational_field(e, "w")});
  }
  return build_wdg(dimension, std::move(specs), shift);
}

std::string serialize_target(const PartialFunctionSpec& spec) {
  json doc;
  doc["dimension"] = spec.dimension();
  doc["epsilon"] = spec.epsilon().to_string();
  json points = json::array();
  for (const TargetPoint& p : spec.points()) {
    json point;
    point["input"] = p.input.to_string();
    point["value"] = p.value;
    points.push_back(std::move(point));
  }
  doc["points"] = std::move(points);
  return dump(doc);
}

PartialFunctionSpec parse_target(std::string_view text) {
  const json doc = parse_json(text);
  const std::size_t dimension = unsigned_field(doc, "dimension");
  const Rational epsilon = doc.contains("epsilon") ? rational_field(doc, "epsilon") : Rational(0);
  return PartialFunctionSpec(dimension, parse_points(doc), epsilon);
}

std::string serialize_function(const boolean::PartialBooleanFunction& f) {
  json doc;
  doc["format_version"] = kFormatVersion;
  doc["arity"] = f.arity();
  json points = json::array();
  for (const auto& [input, value] : f.table()) {
    json point;
    point["input"] = input.to_string();
    point["value"] = value;
    points.push_back(std::move(point));
  }
  doc["points"] = std::move(points);
  return dump(doc);
}

boolean::PartialBooleanFunction parse_function(std::string_view text) {
  const json doc = parse_json(text);
  require_version(doc);
  boolean::PartialBooleanFunction f(unsigned_field(doc, "arity"));
  for (const TargetPoint& p : parse_points(doc)) f.set(p.input, p.value);
  return f;
}

Report make_report(const Wdg& wdg, const hypercube::ScanOptions& options) {
  const hypercube::ExtremaReport ext = hypercube::extrema(wdg, options);
  Report r;
  r.l1_norm = l1_norm(wdg);
  r.l1_with_shift = l1_norm_with_shift(wdg);
  r.exact = ext.exact();
  r.delta = ext.delta;
  r.delta_lower_bound = ext.lower_bound;
  r.delta_upper_bound = ext.upper_bound;
  r.epsilon_bound = hypercube::vertex_weight_bound(wdg);
  r.advantage_indicator = hypercube::advantage_indicator(wdg);
  r.argmax = ext.max;
  r.argmin = ext.min;
  return r;
}

std::string report_json(const Report& r) {
  json doc;
  doc["l1_norm"] = r.l1_norm.to_string();
  doc["l1_with_shift"] = r.l1_with_shift.to_string();
  doc["exact"] = r.exact;
  doc["delta"] = optional_rational(r.delta);
  doc["delta_lower_bound"] = r.delta_lower_bound.to_string();
  doc["delta_upper_bound"] = r.delta_upper_bound.to_string();
  doc["epsilon_bound"] = r.epsilon_bound.to_string();
  doc["advantage_indicator"] = r.advantage_indicator.to_string();
  doc["argmax"] = extremum_json(r.argmax);
  doc["argmin"] = extremum_json(r.argmin);
  return dump(doc);
}

std::string report_plain(const Report& r) {
  std::ostringstream out;
  plain_line(out, "l1_norm", r.l1_norm.to_string());
  plain_line(out, "l1_with_shift", r.l1_with_shift.to_string());
  plain_line(out, "exact", r.exact ? "true" : "false");
  plain_line(out, "delta", r.delta ? r.delta->to_string() : "null");
  plain_line(out, "delta_lower_bound", r.delta_lower_bound.to_string());
  plain_line(out, "delta_upper_bound", r.delta_upper_bound.to_string());
  plain_line(out, "epsilon_bound", r.epsilon_bound.to_string());
  plain_line(out, "advantage_indicator", r.advantage_indicator.to_string());
  if (r.argmax) {
    plain_line(out, "argmax.value", r.argmax->value.to_string());
    plain_line(out, "argmax.witness", r.argmax->witness.to_string());
  }
  if (r.argmin) {
    plain_line(out, "argmin.value", r.argmin->value.to_string());
    plain_line(out, "argmin.witness", r.argmin->witness.to_string());
  }
  return out.str();
}

std::string optimization_json(const opt::OptimizationResult& result, std::string_view objective) {
  json doc;
  doc["objective_kind"] = std::string(objective);
  doc["objective"] = result.objective.to_string();
  doc["c"] = result.c.to_string();
  doc["feasible"] = result.feasible;
  doc["verified"] = result.verified;
  doc["iterations"] = result.iterations;
  doc["wdg"] = json::parse(serialize_wdg(result.wdg));
  return dump(doc);
}

std::string optimization_plain(const opt::OptimizationResult& result, std::string_view objective) {
  std::ostringstream out;
  plain_line(out, "objective_kind", std::string(objective));
  plain_line(out, "objective", result.objective.to_string());
  plain_line(out, "c", result.c.to_string());
  plain_line(out, "feasible", result.feasible ? "true" : "false");
  plain_line(out, "verified", result.verified ? "true" : "false");
  plain_line(out, "iterations", std::to_string(result.iterations));
  plain_line(out, "dimension", std::to_string(result.wdg.dimension()));
  for (const Edge& e : result.wdg.edges()) {
    plain_line(out, "edge", std::to_string(e.u) + "," + std::to_string(e.v) + "," + e.weight.to_string());
  }
  return out.str();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::ParseError, "cannot read '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_file(const std::string& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::ParseError, "cannot write '" + path + "'");
  out << contents;
}

}  // namespace wdg::io
