#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <string>

#include "meander/oracles.hpp"
#include "meander/reduction.hpp"
#include "meander/search.hpp"
#include "meander/segments.hpp"
#include "meander/svg.hpp"

using ordered_json = nlohmann::ordered_json;

namespace {

int g_exit_code = 0;

void run_index(const std::string& type_string, bool pretty) {
  const meander::MeanderType t = meander::parse_type(type_string);
  const meander::MeanderGraph g = meander::build_meander(t);
  const meander::ComponentSummary s = meander::analyze_components(g);
  const int index = 2 * s.cycles + s.paths - 1;
  const bool frobenius = s.paths == 1 && s.cycles == 0;
  if (pretty) {
    std::cout << "type       " << meander::format_type(t) << '\n'
              << "n          " << g.n << '\n'
              << "paths      " << s.paths << '\n'
              << "cycles     " << s.cycles << '\n'
              << "index      " << index << '\n'
              << "frobenius  " << (frobenius ? "yes" : "no") << '\n';
    return;
  }
  ordered_json j;
  j["n"] = g.n;
  j["paths"] = s.paths;
  j["cycles"] = s.cycles;
  j["index"] = index;
  j["frobenius"] = frobenius;
  std::cout << j.dump() << '\n';
}

void run_reduce(const std::string& type_string, int max_steps) {
  const meander::MeanderType t = meander::parse_type(type_string);
  const std::vector<meander::MeanderType> chain = meander::normalize_chain(t);
  const size_t stop = max_steps < 0
                          ? chain.size()
                          : std::min(chain.size(), static_cast<size_t>(max_steps) + 1);
  for (size_t i = 0; i < stop; ++i) std::cout << meander::format_type(chain[i]) << '\n';
}

void run_render(const std::string& type_string, const std::string& out_path) {
  meander::write_svg_file(meander::parse_type(type_string), out_path);
}

void run_census(int n_max, int parts, const std::string& format) {
  if (format == "jsonl")
    meander::write_census_jsonl(std::cout, n_max, parts);
  else
    meander::write_census_csv(std::cout, n_max, parts);
}

void run_falsify(int bound, int parts, int n_max, int jobs, bool pretty) {
  const meander::FalsifyReport report =
      meander::falsify_conditions(bound, parts, n_max, jobs);
  if (!pretty) {
    std::cout << meander::falsify_report_json(report) << '\n';
    return;
  }
  std::cout << "bound " << report.bound << ", parts " << report.parts << ", n <= "
            << report.n_max << '\n'
            << "condition classes checked: " << report.conditions_checked << '\n';
  if (report.survivors.empty()) {
    std::cout << "survivors: none (every candidate condition was falsified)\n";
    return;
  }
  std::cout << "survivors: " << report.survivors.size()
            << " (not yet falsified at this census size)\n";
  for (const meander::GcdCondition& c : report.survivors) {
    std::cout << "  alpha=(";
    for (size_t i = 0; i < c.alpha.size(); ++i) std::cout << (i ? "," : "") << c.alpha[i];
    std::cout << ") beta=(";
    for (size_t i = 0; i < c.beta.size(); ++i) std::cout << (i ? "," : "") << c.beta[i];
    std::cout << ")\n";
  }
}

void run_verify(int n_max, bool pretty) {
  const meander::VerifyReport report = meander::verify_theorem_suite(n_max);
  if (pretty) {
    for (const meander::TheoremCheck& c : report.checks) {
      std::cout << (c.passed ? "[ok]   " : "[FAIL] ") << c.name << " (" << c.instances
                << " instances)";
      if (!c.passed) std::cout << " counterexample: " << c.counterexample;
      std::cout << '\n';
    }
  } else {
    std::cout << meander::verify_report_json(report) << '\n';
  }
  if (!report.all_passed()) g_exit_code = 1;
}

void run_segments(const std::string& type_string, int trace_from) {
  const meander::MeanderType t = meander::parse_type(type_string);
  const meander::MeanderGraph g = meander::build_meander(t);
  if (trace_from == 0) {
    ordered_json j;
    j["type"] = meander::format_type(t);
    j["n"] = g.n;
    j["top_end_segments"] = meander::top_end_segments(g);
    j["has_cycle"] = meander::has_cycle_via_segments(g);
    std::cout << j.dump() << '\n';
    return;
  }
  const meander::EscapeTrace trace = meander::escape_trace(g, trace_from);
  for (const meander::SegmentState& s : trace.states) {
    if (s.is_exterior())
      std::cout << "EXTERIOR\n";
    else
      std::cout << "segment " << s.label << '\n';
  }
  if (trace.end == meander::TraceEnd::cycle)
    std::cout << "CYCLE\n";
  else if (trace.end == meander::TraceEnd::end_segment)
    std::cout << "END(" << (trace.end_side == meander::Side::top ? "top" : "bottom")
              << ")\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"meander graphs: components, index, reductions, segment flow, census "
               "and gcd-criterion search"};
  app.require_subcommand(1);

  std::string type_string;
  std::string out_path;
  std::string format = "csv";
  bool pretty = false;
  int max_steps = -1;
  int n_max = 0, parts = 0, bound = 0, jobs = 1, trace_from = 0;
  unsigned long long seed = 0;  // reserved; enumeration is deterministic

  auto* index_cmd = app.add_subcommand("index", "components, index and Frobenius status");
  index_cmd->add_option("type", type_string, "meander type, e.g. 1|2|3/2|4")->required();
  index_cmd->add_flag("--pretty", pretty, "human-readable table instead of JSON");
  index_cmd->callback([&] { run_index(type_string, pretty); });

  auto* reduce_cmd = app.add_subcommand("reduce", "index-preserving contraction chain");
  reduce_cmd->add_option("type", type_string, "single-bottom meander type")->required();
  reduce_cmd->add_option("--steps", max_steps, "stop after this many reduction steps");
  reduce_cmd->callback([&] { run_reduce(type_string, max_steps); });

  auto* render_cmd = app.add_subcommand("render", "draw the meander as an SVG file");
  render_cmd->add_option("type", type_string, "meander type")->required();
  render_cmd->add_option("--out", out_path, "output SVG path")->required();
  render_cmd->callback([&] { run_render(type_string, out_path); });

  auto* census_cmd = app.add_subcommand("census", "enumerate meanders with index data");
  census_cmd->add_option("--nmax", n_max, "largest total n")->required();
  census_cmd->add_option("--parts", parts, "number of top parts")->required();
  census_cmd->add_option("--format", format, "csv or jsonl")
      ->check(CLI::IsMember({"csv", "jsonl"}));
  census_cmd->add_option("--seed", seed, "reserved; enumeration is deterministic");
  census_cmd->callback([&] { run_census(n_max, parts, format); });

  auto* falsify_cmd =
      app.add_subcommand("falsify", "test gcd conditions against the census");
  falsify_cmd->add_option("--bound", bound, "max |coefficient|")->required();
  falsify_cmd->add_option("--parts", parts, "number of top parts")->required();
  falsify_cmd->add_option("--nmax", n_max, "largest census total n")->required();
  falsify_cmd->add_option("--jobs", jobs, "worker threads");
  falsify_cmd->add_option("--seed", seed, "reserved; enumeration is deterministic");
  falsify_cmd->add_flag("--pretty", pretty, "human-readable summary instead of JSON");
  falsify_cmd->callback([&] { run_falsify(bound, parts, n_max, jobs, pretty); });

  auto* verify_cmd =
      app.add_subcommand("verify", "replay the closed-form results against the graph");
  verify_cmd->add_option("--nmax", n_max, "largest total n")->required();
  verify_cmd->add_flag("--pretty", pretty, "human-readable report instead of JSON");
  verify_cmd->callback([&] { run_verify(n_max, pretty); });

  auto* segments_cmd =
      app.add_subcommand("segments", "top-end-segments, cycle flood, escape traces");
  segments_cmd->add_option("type", type_string, "meander type")->required();
  segments_cmd->add_option("--trace", trace_from, "print the escape trace from this segment");
  segments_cmd->callback([&] { run_segments(type_string, trace_from); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  } catch (const meander::ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const meander::NotApplicable& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return g_exit_code;
}
