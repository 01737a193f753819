#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "benson/json_io.hpp"
#include "benson/metrics.hpp"
#include "benson/validation.hpp"

namespace {

using benson::Json;

int log_level() {
  static const int level = [] {
    const char* env = std::getenv("BENSON_LOG_LEVEL");
    if (!env) return 0;
    std::string s(env);
    if (s == "debug") return 2;
    if (s == "info") return 1;
    return 0;
  }();
  return level;
}

void log_info(const std::string& msg) {
  if (log_level() >= 1) std::cerr << "[info] " << msg << "\n";
}

void log_debug(const std::string& msg) {
  if (log_level() >= 2) std::cerr << "[debug] " << msg << "\n";
}

void emit(const Json& j, const std::string& output) {
  if (output.empty())
    std::cout << j.dump(2) << "\n";
  else
    benson::save_json_file(output, j);
}

benson::Selection parse_selection(const std::string& s) {
  return s == "lexmin" ? benson::Selection::Lexmin : benson::Selection::Fifo;
}

std::string fmt12(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

int cmd_approx(const std::string& algorithm, double eps, const std::string& input,
               const std::string& output, const std::string& selection,
               const std::string& logpath) {
  Json j = benson::load_json_file(input);
  benson::ProblemInstance inst = benson::instance_from_json(j);
  log_info("loaded " + input + " (n=" + std::to_string(inst.n) +
           ", q=" + std::to_string(inst.q) + ")");

  benson::ApproxOptions opts;
  opts.selection = parse_selection(selection);
  if (j.contains("expectations") && j["expectations"].contains("wbar")) {
    benson::Vec wbar;
    for (const Json& x : j["expectations"]["wbar"]) wbar.push_back(x.get<double>());
    opts.wbar = std::move(wbar);
  }

  bool dual = algorithm == "dual";
  benson::ApproxResult res = benson::approximate_body(
      inst, eps, dual ? benson::Algorithm::Dual : benson::Algorithm::Primal, opts);
  log_info("finished: " + std::to_string(res.cuts) + " cuts, " +
           std::to_string(res.solves) + " scalarization solves");

  if (!logpath.empty())
    benson::save_json_file(logpath, benson::trace_to_json(res.trace, dual));
  emit(benson::result_to_json(res), output);

  std::cerr << "certified bound: " << fmt12(res.certified_bound) << "\n";
  if (j.contains("expectations")) {
    const Json& e = j["expectations"];
    if (res.y_level && e.contains("reference_y_vertices")) {
      benson::VRep ref;
      for (const Json& v : e["reference_y_vertices"]) {
        benson::Vec p;
        for (const Json& x : v) p.push_back(x.get<double>());
        ref.vertices.push_back(std::move(p));
      }
      double dh = res.kind == benson::Kind::Outer
                      ? benson::hausdorff_nested(ref, res.y_level->vrep()).d_h
                      : benson::hausdorff_nested(res.y_level->vrep(), ref).d_h;
      std::cerr << "measured d_H against reference: " << fmt12(dh) << "\n";
    } else if (!res.y_level && e.contains("reference_p_hrep")) {
      std::vector<benson::Halfspace> hs;
      for (const Json& one : e["reference_p_hrep"]) {
        benson::Vec a;
        for (const Json& x : one["a"]) a.push_back(x.get<double>());
        hs.emplace_back(std::move(a), one["b"].get<double>());
      }
      benson::Polyhedron ref =
          benson::Polyhedron::from_hrep(res.p_level.dim(), std::move(hs)).with_vrep();
      double dh = res.kind == benson::Kind::Outer
                      ? benson::hausdorff_plevel(ref, res.p_level)
                      : benson::hausdorff_plevel(res.p_level, ref);
      std::cerr << "measured d_H against reference: " << fmt12(dh) << "\n";
    }
  }
  return 0;
}

int cmd_hausdorff(const std::string& inner_path, const std::string& outer_path,
                  const std::string& output, int samples, std::uint64_t seed) {
  benson::Polyhedron inner =
      benson::polyhedron_from_json(benson::load_json_file(inner_path)).with_vrep();
  benson::Polyhedron outer =
      benson::polyhedron_from_json(benson::load_json_file(outer_path)).with_vrep();
  benson::DistanceReport report = benson::hausdorff_nested(inner.vrep(), outer.vrep());
  Json j = benson::distance_report_to_json(report);
  if (samples > 0) {
    double lower = benson::hausdorff_sampled(inner.vrep(), outer.vrep(), samples, seed);
    j["d_h_sampled"] = benson::round12(lower);
  }
  emit(j, output);
  return 0;
}

int cmd_example(const std::string& name, int q, double eps, const std::string& output) {
  benson::GeneratedInstance gen;
  if (name == "primal-mocp")
    gen = benson::gen_primal_tight_mocp(q);
  else if (name == "primal-cpp")
    gen = benson::gen_primal_tight_cpp(q);
  else if (name == "dual-cpp")
    gen = benson::gen_dual_tight_cpp(q);
  else if (name == "dual-mocp")
    gen = benson::gen_dual_tight_mocp(q, eps);
  else
    throw benson::ParseError("unknown example name: " + name);
  emit(benson::generated_to_json(gen), output);
  return 0;
}

int cmd_verify(int q, const std::string& selection) {
  std::vector<int> qs = q > 0 ? std::vector<int>{q} : std::vector<int>{2, 3};
  log_debug("verification dimensions: " + std::to_string(qs.size()));
  std::vector<benson::VerifyRow> rows =
      benson::run_paper_verification(qs, parse_selection(selection));
  bool all = true;
  std::printf("%-28s %-6s %s\n", "check", "status", "detail");
  for (const benson::VerifyRow& row : rows) {
    std::printf("%-28s %-6s %s\n", row.name.c_str(), row.pass ? "PASS" : "FAIL",
                row.detail.c_str());
    all = all && row.pass;
  }
  std::printf("%s\n", all ? "all checks passed" : "FAILURES present");
  return all ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"inner and outer polyhedral approximation of convex bodies"};
  app.require_subcommand(1);

  std::string algorithm, input, output, selection = "fifo", logpath;
  double eps = 0.0;
  auto* approx = app.add_subcommand("approx", "run an approximation algorithm");
  approx->add_option("--algorithm", algorithm, "primal or dual")
      ->required()
      ->check(CLI::IsMember({"primal", "dual"}));
  approx->add_option("--eps", eps, "stopping tolerance")
      ->required()
      ->check(CLI::PositiveNumber);
  approx->add_option("--input", input, "instance JSON file")->required();
  approx->add_option("--output", output, "result JSON file (default stdout)");
  approx->add_option("--selection", selection, "vertex selection policy")
      ->check(CLI::IsMember({"fifo", "lexmin"}));
  approx->add_option("--log", logpath, "trace JSON file");
  std::uint64_t seed = 0;
  approx->add_option("--seed", seed, "random seed (reserved)");

  std::string inner_path, outer_path, h_output;
  int samples = 0;
  std::uint64_t h_seed = 0;
  auto* hausdorff = app.add_subcommand("hausdorff", "distance between nested polytopes");
  hausdorff->add_option("inner", inner_path, "inner polyhedron JSON")->required();
  hausdorff->add_option("outer", outer_path, "outer polyhedron JSON")->required();
  hausdorff->add_option("--output", h_output, "report JSON file (default stdout)");
  hausdorff->add_option("--samples", samples, "also report a sampled lower bound");
  hausdorff->add_option("--seed", h_seed, "sampling seed");

  std::string ex_name, ex_output;
  int ex_q = 2;
  double ex_eps = 1e-3;
  auto* example = app.add_subcommand("example", "emit a named example instance");
  example->add_option("--name", ex_name, "generator name")
      ->required()
      ->check(CLI::IsMember({"primal-mocp", "primal-cpp", "dual-cpp", "dual-mocp"}));
  example->add_option("--q", ex_q, "body dimension")->check(CLI::PositiveNumber);
  example->add_option("--eps", ex_eps, "tolerance (dual-mocp only)")
      ->check(CLI::PositiveNumber);
  example->add_option("--output", ex_output, "instance JSON file (default stdout)");

  int v_q = 0;
  std::string v_selection = "lexmin";
  auto* verify = app.add_subcommand("verify", "reproduce the worked examples");
  verify->add_option("--q", v_q, "single body dimension (default: 2 and 3)");
  verify->add_option("--selection", v_selection, "vertex selection policy")
      ->check(CLI::IsMember({"fifo", "lexmin"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*approx) return cmd_approx(algorithm, eps, input, output, selection, logpath);
    if (*hausdorff) return cmd_hausdorff(inner_path, outer_path, h_output, samples, h_seed);
    if (*example) return cmd_example(ex_name, ex_q, ex_eps, ex_output);
    if (*verify) return cmd_verify(v_q, v_selection);
  } catch (const benson::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const benson::NotNested& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  } catch (const benson::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  return 0;
}
