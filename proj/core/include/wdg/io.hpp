#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>

#include "wdg/boolean_analysis.hpp"
#include "wdg/hypercube.hpp"
#include "wdg/optimizer.hpp"
#include "wdg/target.hpp"
#include "wdg/wdg.hpp"

namespace wdg::io {

inline constexpr int kFormatVersion = 1;

/// {"format_version":1,"dimension":d,"shift":"p/q","edges":[{"u":..,"v":..,"w":"p/q"}]}
/// Rationals are always strings. Output ends with a newline and is canonical,
/// so parse followed by serialize reproduces it byte for byte.
std::string serialize_wdg(const Wdg& wdg);

/// Throws ParseError on malformed text, a missing field or a version other
/// than 1; the build_wdg errors otherwise.
Wdg parse_wdg(std::string_view text);

/// {"dimension":d,"epsilon":"p/q","points":[{"input":"+-..","value":0|1}]}.
/// `dimension` counts the ancilla, so inputs have dimension-1 characters.
std::string serialize_target(const PartialFunctionSpec& spec);
PartialFunctionSpec parse_target(std::string_view text);

/// {"format_version":1,"arity":n,"points":[{"input":"+-..","value":0|1}]}
std::string serialize_function(const boolean::PartialBooleanFunction& f);
boolean::PartialBooleanFunction parse_function(std::string_view text);

/// Everything the report command prints about one WDG.
struct Report {
  Rational l1_norm;
  Rational l1_with_shift;
  bool exact = false;
  std::optional<Rational> delta;
  Rational delta_lower_bound;
  Rational delta_upper_bound;
  Rational epsilon_bound;
  Rational advantage_indicator;
  std::optional<hypercube::Extremum> argmax;
  std::optional<hypercube::Extremum> argmin;
};

Report make_report(const Wdg& wdg, const hypercube::ScanOptions& options = {});

/// Structured form with keys in a fixed order.
std::string report_json(const Report& report);
/// One key=value per line, same order.
std::string report_plain(const Report& report);

/// Summary of an optimizer run, followed by the found WDG document.
std::string optimization_json(const opt::OptimizationResult& result, std::string_view objective);
std::string optimization_plain(const opt::OptimizationResult& result, std::string_view objective);

std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view contents);

}  // namespace wdg::io
