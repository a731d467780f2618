// wdg_lab: command-line front end for the wdg library.

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "wdg/boolean_analysis.hpp"
#include "wdg/composition.hpp"
#include "wdg/error.hpp"
#include "wdg/hypercube.hpp"
#include "wdg/io.hpp"
#include "wdg/measurement.hpp"
#include "wdg/optimizer.hpp"
#include "wdg/wdg.hpp"

namespace {

using json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitInvalid = 2;
constexpr int kExitInfeasible = 3;

struct Globals {
  bool plain = false;
  unsigned threads = 1;
};

int exit_code_for(wdg::ErrorCode code) {
  switch (code) {
    case wdg::ErrorCode::Infeasible:
    case wdg::ErrorCode::SizeBudgetExceeded:
    case wdg::ErrorCode::LimitExceeded:
      return kExitInfeasible;
    default:
      return kExitInvalid;
  }
}

// Prints a flat object either as indented structured text or key=value lines.
void emit(const Globals& g, const json& doc) {
  if (!g.plain) {
    std::cout << doc.dump(2) << '\n';
    return;
  }
  for (const auto& [key, value] : doc.items()) {
    std::cout << key << '=' << (value.is_string() ? value.get<std::string>() : value.dump()) << '\n';
  }
}

wdg::Wdg load_wdg(const std::string& path) { return wdg::io::parse_wdg(wdg::io::read_file(path)); }

wdg::hypercube::ScanOptions scan_options(const Globals& g) {
  wdg::hypercube::ScanOptions options;
  options.threads = g.threads;
  return options;
}

std::vector<std::size_t> parse_dims(const std::string& text) {
  std::vector<std::size_t> dims;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (item.empty() || item.find_first_not_of("0123456789") != std::string::npos) {
      throw wdg::Error(wdg::ErrorCode::ParseError, "bad dimension list '" + text + "'");
    }
    dims.push_back(std::stoul(item));
  }
  if (dims.empty()) throw wdg::Error(wdg::ErrorCode::ParseError, "empty dimension list");
  return dims;
}

int cmd_eval(const Globals& g, const std::string& file, const std::string& input) {
  const wdg::Wdg d = load_wdg(file);
  const wdg::Assignment x = wdg::Assignment::parse(input);
  json doc;
  doc["g"] = wdg::evaluate(d, x).to_string();
  doc["f"] = wdg::f_value(d, x).to_string();
  emit(g, doc);
  return kExitOk;
}

int cmd_report(const Globals& g, const std::string& file) {
  const wdg::io::Report report = wdg::io::make_report(load_wdg(file), scan_options(g));
  std::cout << (g.plain ? wdg::io::report_plain(report) : wdg::io::report_json(report));
  return kExitOk;
}

int cmd_matrix(const Globals& g, const std::string& file) {
  const wdg::AssociatedMatrix m = wdg::matrix_of(load_wdg(file));
  const wdg::RationalMatrix& a = m.entries();
  if (g.plain) {
    for (std::size_t i = 0; i < a.rows(); ++i) {
      for (std::size_t j = 0; j < a.cols(); ++j) std::cout << (j == 0 ? "" : " ") << a(i, j).to_string();
      std::cout << '\n';
    }
    return kExitOk;
  }
  json rows = json::array();
  for (std::size_t i = 0; i < a.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < a.cols(); ++j) row.push_back(a(i, j).to_string());
    rows.push_back(std::move(row));
  }
  json doc;
  doc["dimension"] = a.rows();
  doc["matrix"] = std::move(rows);
  std::cout << doc.dump(2) << '\n';
  return kExitOk;
}

int cmd_compose(const Globals& g, const std::string& mode_text, const std::string& file_a, const std::string& file_b,
                const std::string& out, std::size_t budget) {
  const wdg::compose::Mode mode = wdg::compose::parse_mode(mode_text);
  const wdg::compose::ComposedResult result = wdg::compose::compose(mode, load_wdg(file_a), load_wdg(file_b), budget);
  if (!out.empty()) wdg::io::write_file(out, wdg::io::serialize_wdg(result.wdg));
  const wdg::Rational actual = wdg::l1_norm(result.wdg);
  json doc;
  doc["mode"] = std::string(wdg::compose::to_string(mode));
  doc["dimension"] = result.wdg.dimension();
  doc["shift"] = result.shift().to_string();
  doc["predicted_l1"] = result.predicted_l1.to_string();
  doc["l1_norm"] = actual.to_string();
  doc["match"] = actual == result.predicted_l1;
  emit(g, doc);
  return actual == result.predicted_l1 ? kExitOk : kExitInfeasible;
}

int cmd_iterate(const Globals& g, const std::string& mode_text, const std::string& file, std::size_t depth,
                const std::string& out_dir, std::size_t budget) {
  const wdg::compose::Mode mode = wdg::compose::parse_mode(mode_text);
  const std::vector<wdg::compose::ComposedResult> stages =
      wdg::compose::iterate_compose(load_wdg(file), depth, mode, budget);
  if (!out_dir.empty()) std::filesystem::create_directories(out_dir);
  bool all_match = true;
  json table = json::array();
  for (std::size_t i = 0; i < stages.size(); ++i) {
    const wdg::compose::ComposedResult& s = stages[i];
    const wdg::Rational l1 = wdg::l1_norm(s.wdg);
    all_match = all_match && l1 == s.predicted_l1;
    if (!out_dir.empty()) {
      const auto path = std::filesystem::path(out_dir) / ("stage_" + std::to_string(i + 1) + ".json");
      wdg::io::write_file(path.string(), wdg::io::serialize_wdg(s.wdg));
    }
    json row;
    row["stage"] = i + 1;
    row["dimension"] = s.wdg.dimension();
    row["shift"] = s.shift().to_string();
    row["l1_norm"] = l1.to_string();
    row["l1_with_shift"] = wdg::l1_norm_with_shift(s.wdg).to_string();
    row["predicted_l1"] = s.predicted_l1.to_string();
    table.push_back(std::move(row));
  }
  if (g.plain) {
    std::cout << "stage dimension shift l1_norm l1_with_shift predicted_l1\n";
    for (const json& row : table) {
      std::cout << row["stage"].get<std::size_t>() << ' ' << row["dimension"].get<std::size_t>() << ' '
                << row["shift"].get<std::string>() << ' ' << row["l1_norm"].get<std::string>() << ' '
                << row["l1_with_shift"].get<std::string>() << ' ' << row["predicted_l1"].get<std::string>() << '\n';
    }
  } else {
    json doc;
    doc["mode"] = std::string(wdg::compose::to_string(mode));
    doc["stages"] = std::move(table);
    std::cout << doc.dump(2) << '\n';
  }
  return all_match ? kExitOk : kExitInfeasible;
}

struct OptimizeArgs {
  std::string objective = "max";
  std::string target;
  std::string epsilon;
  std::size_t budget = wdg::opt::SearchOptions{}.budget;
  std::uint64_t seed = wdg::opt::SearchOptions{}.seed;
  std::size_t chains = wdg::opt::SearchOptions{}.chains;
  std::string out;
};

int cmd_optimize(const Globals& g, const OptimizeArgs& args) {
  wdg::PartialFunctionSpec spec = wdg::io::parse_target(wdg::io::read_file(args.target));
  if (!args.epsilon.empty()) {
    spec = wdg::PartialFunctionSpec(spec.dimension(), spec.points(), wdg::Rational::parse(args.epsilon));
  }
  wdg::opt::SearchOptions options;
  options.budget = args.budget;
  options.seed = args.seed;
  options.chains = args.chains;
  options.threads = g.threads;
  const bool maximize = args.objective == "max";
  if (!maximize && args.objective != "min") {
    throw wdg::Error(wdg::ErrorCode::InvalidArgument, "objective must be 'max' or 'min'");
  }
  const wdg::opt::OptimizationResult result = maximize ? wdg::opt::maximize_l1(spec, std::nullopt, options)
                                                       : wdg::opt::minimize_delta(spec, std::nullopt, options);
  if (!args.out.empty()) wdg::io::write_file(args.out, wdg::io::serialize_wdg(result.wdg));
  const std::string kind = maximize ? "max_l1" : "min_delta";
  std::cout << (g.plain ? wdg::io::optimization_plain(result, kind) : wdg::io::optimization_json(result, kind));
  return result.feasible && result.verified ? kExitOk : kExitInfeasible;
}

int cmd_certificate(const Globals& g, const std::string& file, std::size_t family_k) {
  const wdg::boolean::PartialBooleanFunction f =
      family_k > 0 ? wdg::boolean::F_table(family_k) : wdg::io::parse_function(wdg::io::read_file(file));
  const wdg::boolean::CertificateComplexity c = wdg::boolean::certificate_complexity(f);
  const wdg::boolean::LowerBoundReport bound = wdg::boolean::randomized_lower_bound(c.c);
  json doc;
  doc["arity"] = f.arity();
  doc["c0"] = c.c0;
  doc["c1"] = c.c1;
  doc["c"] = c.c;
  doc["sqrt_c"] = bound.scale;
  doc["note"] = bound.note;
  emit(g, doc);
  return kExitOk;
}

int cmd_ffamily(const Globals& g, std::size_t k, const std::string& out, const std::string& table_out) {
  const wdg::Wdg d = wdg::boolean::wdg_for_F(k);
  if (!out.empty()) wdg::io::write_file(out, wdg::io::serialize_wdg(d));
  if (!table_out.empty()) wdg::io::write_file(table_out, wdg::io::serialize_function(wdg::boolean::F_table(k)));
  json doc;
  doc["k"] = k;
  doc["dimension"] = d.dimension();
  doc["shift"] = d.shift().to_string();
  doc["l1_norm"] = wdg::l1_norm(d).to_string();
  emit(g, doc);
  return kExitOk;
}

int cmd_csop_order(const Globals& g, const std::string& dims, std::size_t total) {
  const wdg::measure::CsopProfile profile{total, parse_dims(dims)};
  if (g.plain) {
    std::cout << wdg::measure::csop_order(profile) << '\n';
    return kExitOk;
  }
  json doc;
  doc["total"] = total;
  doc["order"] = wdg::measure::csop_order(profile);
  std::cout << doc.dump(2) << '\n';
  return kExitOk;
}

// "-++-+" would otherwise be read as a flag cluster. Assignment tokens are
// moved behind a "--" separator; the assignment is always the last positional.
std::vector<std::string> protect_assignments(int argc, char** argv) {
  std::vector<std::string> front, tail;
  for (int i = 1; i < argc; ++i) {
    const std::string arg = argv[i];
    const bool sign_only = arg.size() >= 2 && arg.find_first_not_of("+-") == std::string::npos;
    if (arg == "--") {
      for (++i; i < argc; ++i) tail.emplace_back(argv[i]);
    } else if (sign_only && arg[0] == '-') {
      tail.push_back(arg);
    } else {
      front.push_back(arg);
    }
  }
  if (!tail.empty()) {
    front.emplace_back("--");
    front.insert(front.end(), tail.begin(), tail.end());
  }
  std::reverse(front.begin(), front.end());
  return front;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"wdg_lab: exact analysis of weighted dynamical graphs.\n"
               "Assignments are '+'/'-' strings over x_1..x_{d-1}; the ancilla x_0 = +1 is never written."};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_flag("--plain", g.plain, "Line-oriented key=value output");
  app.add_option("--threads", g.threads, "Worker threads for enumeration and search")
      ->envname("WDG_LAB_THREADS")
      ->check(CLI::Range(1U, 1024U));

  std::function<int()> run;

  std::string file, file_b, input, mode, out, table_out, dims;
  std::size_t depth = 1, total = 0, family_k = 0;
  std::size_t budget = wdg::compose::kDefaultSizeBudget;
  OptimizeArgs opt_args;

  auto* eval = app.add_subcommand("eval", "Print g_D(x) and f(x)");
  eval->add_option("file", file, "WDG document")->required();
  eval->add_option("input", input, "Assignment, e.g. -++-+")->required();
  eval->callback([&] { run = [&] { return cmd_eval(g, file, input); }; });

  auto* report = app.add_subcommand("report", "Norms, extrema and bounds of a WDG");
  report->add_option("file", file, "WDG document")->required();
  report->callback([&] { run = [&] { return cmd_report(g, file); }; });

  auto* matrix = app.add_subcommand("matrix", "Print the associated matrix");
  matrix->add_option("file", file, "WDG document")->required();
  matrix->callback([&] { run = [&] { return cmd_matrix(g, file); }; });

  auto* compose = app.add_subcommand("compose", "AND/OR composition of two WDGs");
  compose->add_option("mode", mode, "and | or")->required();
  compose->add_option("file_a", file, "First WDG document")->required();
  compose->add_option("file_b", file_b, "Second WDG document")->required();
  compose->add_option("out", out, "Output WDG document");
  compose->add_option("--budget", budget, "Largest entry count of the composed matrix");
  compose->callback([&] { run = [&] { return cmd_compose(g, mode, file, file_b, out, budget); }; });

  auto* iterate = app.add_subcommand("iterate", "Repeated self-composition with an L1 table");
  iterate->add_option("mode", mode, "and | or")->required();
  iterate->add_option("file", file, "Base WDG document")->required();
  iterate->add_option("depth", depth, "Number of stages")->required();
  iterate->add_option("out_dir", out, "Directory for stage_<i>.json documents");
  iterate->add_option("--budget", budget, "Largest entry count of any stage matrix");
  iterate->callback([&] { run = [&] { return cmd_iterate(g, mode, file, depth, out, budget); }; });

  auto* optimize = app.add_subcommand("optimize", "Heuristic norm optimization against a target document");
  optimize->add_option("objective", opt_args.objective, "max (L1 at delta = 1) | min (delta at L1 = 1)")
      ->required()
      ->check(CLI::IsMember({"max", "min"}));
  optimize->add_option("target", opt_args.target, "Target document")->required();
  optimize->add_option("--epsilon", opt_args.epsilon, "Override the document's epsilon");
  optimize->add_option("--budget", opt_args.budget, "Annealing iterations per chain");
  optimize->add_option("--seed", opt_args.seed, "Random seed");
  optimize->add_option("--chains", opt_args.chains, "Independent chains")->check(CLI::PositiveNumber);
  optimize->add_option("--out", opt_args.out, "Write the found WDG document here");
  optimize->callback([&] { run = [&] { return cmd_optimize(g, opt_args); }; });

  auto* certificate = app.add_subcommand("certificate", "Certificate complexity (c0, c1, c) of a function table");
  auto* cert_file = certificate->add_option("file", file, "Function document");
  auto* cert_family = certificate->add_option("--family", family_k, "Use the F_k table on tensor inputs instead");
  cert_file->excludes(cert_family);
  certificate->callback([&] {
    if (file.empty() && family_k == 0) throw CLI::RequiredError("file or --family");
    run = [&] { return cmd_certificate(g, file, family_k); };
  });

  auto* ffamily = app.add_subcommand("ffamily", "WDG of the F_k family member");
  ffamily->add_option("k", family_k, "Order k (2^k vertices)")->required();
  ffamily->add_option("--out", out, "Write the WDG document here");
  ffamily->add_option("--table", table_out, "Write the F_k tensor-input table here");
  ffamily->callback([&] { run = [&] { return cmd_ffamily(g, family_k, out, table_out); }; });

  auto* csop = app.add_subcommand("csop-order", "Order of a projector dimension profile");
  csop->add_option("--dims", dims, "Comma-separated projector dimensions")->required();
  csop->add_option("--total", total, "Total dimension n")->required();
  csop->callback([&] { run = [&] { return cmd_csop_order(g, dims, total); }; });

  try {
    std::vector<std::string> args = protect_assignments(argc, argv);
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInvalid;
  }

  try {
    return run();
  } catch (const wdg::Error& e) {
    std::cerr << "wdg_lab: " << e.what() << '\n';
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    std::cerr << "wdg_lab: " << e.what() << '\n';
    return kExitInvalid;
  }
}
