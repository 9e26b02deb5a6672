// Copyright 2026 The richdist Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "richdist/cli.hpp"

#include <fmt/format.h>

#include <CLI11.hpp>
#include <filesystem>
#include <fstream>
#include <optional>

#include "richdist/errors.hpp"
#include "richdist/oracle.hpp"
#include "richdist/points_file.hpp"
#include "richdist/spectrum.hpp"
#include "richdist/svg.hpp"

namespace richdist {

namespace {

std::string describe_plan(const ConstructionPlan& plan) {
  std::string turns;
  for (const auto& t : plan.turns) turns += (turns.empty() ? "" : ",") + t.to_string();
  std::string edges;
  for (const auto& e : plan.edges) {
    edges += fmt::format("{}copy{}:({},{})", edges.empty() ? "" : ",", e.source_copy, e.a, e.b);
  }
  return fmt::format("theorem={} n={} m={} k={} r={} sides={} turns=[{}] edges=[{}]", plan.theorem,
                     plan.n, plan.m, plan.k, plan.r, plan.sides, turns, edges);
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream file(path, std::ios::binary);
  if (!file) throw Error("cannot write '" + path + "'");
  file << text;
  if (!file) throw Error("failed writing '" + path + "'");
}

void print_verdict(std::ostream& out, const Verdict& v) {
  out << fmt::format("claim: {} class(es) with multiplicity >= {}\n", v.required_classes,
                     v.required_multiplicity);
  out << fmt::format("achieved: {} class(es) with multiplicity >= {}\n", v.achieved_classes,
                     v.required_multiplicity);
  for (const auto& w : v.witnesses) {
    out << fmt::format("  class {}: multiplicity {}, squared distance {}\n", w.class_index,
                       w.multiplicity, w.value.to_string());
  }
  if (!v.pass) {
    out << fmt::format("best: the top {} class(es) reach multiplicity {}\n", v.required_classes,
                       v.best_multiplicity);
  }
  if (v.cross_copy_pairs > 0) {
    out << fmt::format("note: {} witness pair(s) come from cross-copy coincidences\n",
                       v.cross_copy_pairs);
  }
  out << (v.pass ? "PASS\n" : "FAIL\n");
}

}  // namespace

const std::array<FigureClaim, 4>& figure_claims() {
  static const std::array<FigureClaim, 4> claims{{
      {1, 1, 9, 0, 2, 10},
      {2, 1, 11, 0, 2, 12},
      {3, 1, 10, 0, 2, 11},
      {4, 2, 8, 3, 1, 11},
  }};
  return claims;
}

std::vector<FigureResult> reproduce_figures() {
  std::vector<FigureResult> results;
  for (const auto& claim : figure_claims()) {
    Construction built = claim.theorem == 1 ? build_theorem1(claim.n) : build_theorem2(claim.n, claim.m);
    const auto spectrum = distance_spectrum(built.points);
    Verdict verdict = verify_claim(spectrum, claim.classes, claim.multiplicity);
    annotate_cross_copy(built.points, spectrum, verdict);
    const bool pass = verdict.pass && built.points.size() == static_cast<std::size_t>(claim.n);
    SvgOptions options;
    options.highlight = claim.classes;
    std::string svg = render_svg(built.points, options, &spectrum);
    results.push_back(FigureResult{claim, std::move(built), std::move(verdict), pass, std::move(svg)});
  }
  return results;
}

int cli_dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv{"richdist"};
  for (const auto& a : args) argv.push_back(a.c_str());
  return cli_dispatch(static_cast<int>(argv.size()), argv.data(), out, err);
}

int cli_dispatch(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact rich-distance constructions and verification", "richdist"};
  app.require_subcommand(1);

  int theorem = 1;
  long n = 0;
  long m = 1;
  std::string output;
  auto* generate = app.add_subcommand("generate", "Build a configuration and write a points file");
  generate->add_option("--theorem", theorem, "1 (n+1 construction) or 2 (n+m construction)")
      ->required()
      ->check(CLI::IsMember({1, 2}));
  generate->add_option("--n", n, "Number of points")->required();
  generate->add_option("--m", m, "Richness surplus for theorem 2")->check(CLI::PositiveNumber);
  generate->add_option("-o,--output", output, "Output file (default: stdout)");

  std::string input;
  std::size_t classes = 0;
  std::size_t multiplicity = 0;
  auto* verify = app.add_subcommand("verify", "Check that enough distances are rich enough");
  verify->add_option("file", input, "Points file")->required();
  verify->add_option("--classes", classes, "Required number of classes")->required();
  verify->add_option("--multiplicity", multiplicity, "Required multiplicity")->required();

  bool histogram = false;
  bool key_value = false;
  auto* spectrum_cmd = app.add_subcommand("spectrum", "Print the exact distance spectrum");
  spectrum_cmd->add_option("file", input, "Points file")->required();
  spectrum_cmd->add_flag("--histogram", histogram, "Include the multiplicity histogram");
  spectrum_cmd->add_flag("--kv", key_value, "Machine-readable key=value output");

  std::size_t highlight = 0;
  bool labels = false;
  int canvas = 640;
  auto* svg_cmd = app.add_subcommand("svg", "Render a points file as SVG");
  svg_cmd->add_option("file", input, "Points file")->required();
  svg_cmd->add_option("-o,--output", output, "Output SVG file")->required();
  svg_cmd->add_option("--highlight", highlight, "Draw the K richest distance classes");
  svg_cmd->add_flag("--labels", labels, "Label points with their indices");
  svg_cmd->add_option("--size", canvas, "Canvas size in pixels")->check(CLI::PositiveNumber);

  double tolerance = kDefaultTolerance;
  auto* oracle_cmd = app.add_subcommand("oracle", "Cross-check the exact spectrum numerically");
  oracle_cmd->add_option("file", input, "Points file")->required();
  oracle_cmd->add_option("--tol", tolerance, "Clustering tolerance")->check(CLI::PositiveNumber);

  std::string outdir = "figures";
  auto* figures = app.add_subcommand("reproduce-figures", "Rebuild and verify the four figures");
  figures->add_option("--outdir", outdir, "Directory for the SVG files");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitPass : kExitUsage;
  }

  try {
    if (*generate) {
      Construction built = theorem == 1 ? build_theorem1(n) : build_theorem2(n, m);
      const std::string text = serialize_points(built.points);
      if (output.empty()) {
        out << text;
      } else {
        write_text(output, text);
        out << fmt::format("wrote {} points to {}\n", built.points.size(), output);
      }
      err << "plan: " << describe_plan(built.plan) << "\n";
      return kExitPass;
    }
    if (*verify) {
      const PointSet ps = read_points_file(input);
      const Verdict v = verify_claim(ps, classes, multiplicity);
      out << fmt::format("points: {}\n", ps.size());
      print_verdict(out, v);
      return v.pass ? kExitPass : kExitVerificationFailed;
    }
    if (*spectrum_cmd) {
      const PointSet ps = read_points_file(input);
      out << format_report(distance_spectrum(ps),
                           key_value ? ReportFormat::key_value : ReportFormat::text, histogram);
      return kExitPass;
    }
    if (*svg_cmd) {
      const PointSet ps = read_points_file(input);
      SvgOptions options;
      options.highlight = highlight;
      options.labels = labels;
      options.canvas = canvas;
      write_text(output, render_svg(ps, options));
      out << fmt::format("wrote {}\n", output);
      return kExitPass;
    }
    if (*oracle_cmd) {
      const PointSet ps = read_points_file(input);
      try {
        const CrossCheckResult r = cross_check(ps, tolerance);
        out << fmt::format("exact classes: {}\napprox clusters: {}\ncertified min gap: {:.3e}\n",
                           r.exact_classes, r.approx_clusters, r.certified_min_gap);
        out << (r.status == CrossCheckStatus::match ? "match\n" : "inconclusive at this tolerance\n");
        return kExitPass;
      } catch (const OracleMismatchError& e) {
        out << "mismatch: " << e.what() << "\n";
        return kExitVerificationFailed;
      }
    }
    if (*figures) {
      std::filesystem::create_directories(outdir);
      bool all = true;
      out << fmt::format("{:<7} {:>6}  {:<14} {:<14} {}\n", "figure", "points", "claim", "achieved",
                         "result");
      for (const auto& r : reproduce_figures()) {
        const std::string path =
            (std::filesystem::path(outdir) / fmt::format("figure{}.svg", r.claim.figure)).string();
        write_text(path, r.svg);
        all = all && r.pass;
        out << fmt::format("{:<7} {:>6}  {:<14} {:<14} {}\n", r.claim.figure,
                           r.construction.points.size(),
                           fmt::format("{} x >= {}", r.claim.classes, r.claim.multiplicity),
                           fmt::format("{} x >= {}", r.verdict.achieved_classes, r.claim.multiplicity),
                           r.pass ? "pass" : "FAIL");
      }
      out << (all ? "all figure claims verified\n" : "some figure claims FAILED\n");
      return all ? kExitPass : kExitVerificationFailed;
    }
  } catch (const BelowThresholdError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ParseError& e) {
    err << "error: " << input << ": " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace richdist
