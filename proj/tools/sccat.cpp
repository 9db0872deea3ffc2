#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "sccat/complexfold.hpp"
#include "sccat/hypgeom.hpp"
#include "sccat/linkcert.hpp"
#include "sccat/pieces.hpp"
#include "sccat/randomgroups.hpp"
#include "sccat/report.hpp"
#include "sccat/svg.hpp"

using namespace sccat;

namespace {

enum Exit { kPass = 0, kRefused = 1, kInputError = 2, kInternal = 3 };

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Presentation parse_file(const std::string& path, const std::string& bytes) {
  const bool json = path.size() >= 5 && path.compare(path.size() - 5, 5, ".json") == 0;
  return json ? parse_presentation_json(bytes) : parse_presentation(bytes);
}

void write_output(const std::string& path, const std::string& text) {
  if (path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write " + path);
  out << text;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

void print_conditions(const Presentation& p, const SmallCancellationReport& c) {
  std::cout << "generators: " << p.generator_count() << ", relators: " << p.relators().size() << ", g = " << c.g
            << "\n";
  for (const auto& line : p.normalization_log()) std::cout << "  note: " << line << "\n";
  for (std::size_t i = 0; i < p.relators().size(); ++i) {
    const auto& q = c.per_relator_max_ratio[i];
    std::cout << "  relator " << i + 1 << " (length " << p.relators()[i].size() << "): longest piece "
              << c.per_relator_max_piece[i] << ", ratio " << q.num << "/" << q.den
              << (c.proper_power_flags[i] ? ", proper power" : "") << "\n";
  }
  std::cout << "C'(1/6): " << (c.passes_c16 ? "pass" : "fail") << "\n";
  std::cout << "uniform C'(1/6): " << (c.passes_uniform ? "pass" : "fail") << "\n";
  if (!c.passes_uniform) std::cout << "reason: " << refusal_reason(c) << "\n";
}

int cmd_check(const std::string& file, const std::string& json_out) {
  const auto t0 = std::chrono::steady_clock::now();
  const std::string bytes = read_file(file);
  const Presentation p = parse_file(file, bytes);
  Report r = make_report(p, bytes, "check");
  r.timings["check"] = seconds_since(t0);
  print_conditions(p, r.conditions);
  if (!json_out.empty()) write_output(json_out, to_json(r).dump(2) + "\n");
  return r.conditions.passes_uniform ? kPass : kRefused;
}

int cmd_certify(const std::string& file, double rho, double tol, const std::string& json_out) {
  if (!(rho > 0 && rho < 1)) throw InputError("--radius-factor must lie in (0, 1)");
  if (!(tol >= 0)) throw InputError("--tolerance must be >= 0");
  const auto t0 = std::chrono::steady_clock::now();
  const std::string bytes = read_file(file);
  const Presentation p = parse_file(file, bytes);
  Report r = make_report(p, bytes, "certify");
  const auto t1 = std::chrono::steady_clock::now();
  r.certificate = certify(p, {rho, tol});
  r.timings["certify"] = seconds_since(t1);
  r.timings["total"] = seconds_since(t0);
  const Certificate& c = *r.certificate;
  print_conditions(p, r.conditions);
  std::cout << std::setprecision(9);
  if (c.metric) {
    const MetricParams& m = *c.metric;
    std::cout << "metric: n_eff = " << m.n_eff << ", r_max = " << m.r_max << ", r = " << m.r << ", theta = "
              << m.theta << ", lambda = " << m.lambda << "\n";
    std::cout << "pieces: " << c.pieces << ", folds: " << c.folds << "\n";
    std::cout << "type-1 girth: " << c.type1_girth << " (margin " << c.type1_margin << ")\n";
    std::cout << "  shortest loop:";
    for (const auto& w : c.type1_witness) std::cout << " " << w.vertex << " -(" << w.arc << ")-";
    std::cout << "\n  shortest central path: " << c.min_central_path << "\n";
    std::cout << "type-2 point classes: " << c.type2.size();
    if (!c.type2.empty()) std::cout << ", min girth margin " << c.type2_margin;
    std::cout << "\n";
    std::cout << "centre links: min margin " << c.center_margin << "\n";
    if (c.area)
      std::cout << "area: approx " << c.area->approx_area << ", with r_max(" << c.area->formula_n << ") "
                << c.area->formula_area << "\n";
  }
  std::cout << "verdict: " << to_string(c.verdict) << (c.marginal ? " (marginal)" : "") << "\n";
  if (!c.reason.empty()) std::cout << "reason: " << c.reason << "\n";
  if (!json_out.empty()) write_output(json_out, to_json(r).dump(2) + "\n");
  return c.verdict == Verdict::certified ? kPass : kRefused;
}

int cmd_params(int n) {
  if (n < 1) throw InputError("--n must be >= 1");
  std::cout << std::setw(6) << "n" << std::setw(14) << "r_max" << std::setw(14) << "theta" << std::setw(14)
            << "lambda" << "\n";
  std::cout << std::fixed << std::setprecision(8);
  for (int k = 1; k <= n; ++k) {
    const double rm = hyp::r_max<double>(k);
    const double r = 0.9 * rm;
    std::cout << std::setw(6) << k << std::setw(14) << rm << std::setw(14) << hyp::base_angle_theta(r, 6 * k + 1)
              << std::setw(14) << hyp::edge_length_lambda(r, 6 * k + 1) << "\n";
  }
  return kPass;
}

int cmd_random(const DensityParams& dp, bool run_certify, const std::string& out, const std::string& json_out) {
  try {
    validate(dp);
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
  const StatsTable t = experiment(dp, run_certify);
  std::ostringstream csv;
  write_csv(csv, t);
  write_output(out.empty() ? "-" : out, csv.str());
  if (!json_out.empty()) write_output(json_out, to_json(t).dump(2) + "\n");
  for (const StatsRow& r : t)
    if (r.refused_after_gate)
      std::cerr << "sccat: warning: " << r.refused_after_gate << " presentations passed the gate but were refused\n";
  return kPass;
}

int cmd_svg(const std::string& file, const std::string& out, const std::string& what, const std::vector<int>& demo) {
  if (!demo.empty()) {
    if (demo.size() != 2 || demo[0] < 3 || demo[1] < 1) throw InputError("--demo takes N K with N >= 3, K >= 1");
    write_output(out, svg::render_demo(demo[0], demo[1]));
    return kPass;
  }
  if (file.empty()) throw InputError("svg needs a presentation file or --demo");
  const std::string bytes = read_file(file);
  const Presentation p = parse_file(file, bytes);
  const auto rep = check_conditions(p);
  if (!rep.passes_uniform) {
    std::cerr << "sccat: cannot draw: " << refusal_reason(rep) << "\n";
    return kRefused;
  }
  const MetricParams mp = choose_radius(rep);
  const auto discs = build_discs(p, mp);
  const auto fs = segments_from_pieces(discs, enumerate_pieces(p));
  if (what == "links")
    write_output(out, svg::render_links(build_type1_link(p, fs, mp)));
  else
    write_output(out, svg::render_discs(p, mp, fs, what == "folds"));
  return kPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"sccat: small cancellation checks and CAT(-1) certificates"};
  app.require_subcommand(1);

  std::string file, json_out, out, what = "discs";
  double rho = 0.9, tol = 1e-9;
  int n = 10;
  DensityParams dp;
  bool run_certify = false;
  std::vector<int> demo;

  auto* check = app.add_subcommand("check", "check C'(1/6) and uniform C'(1/6)");
  check->add_option("file", file, "presentation file")->required();
  check->add_option("--json", json_out, "write the JSON report here (- for stdout)");

  auto* cert = app.add_subcommand("certify", "run the full certification pipeline");
  cert->add_option("file", file, "presentation file")->required();
  cert->add_option("--radius-factor", rho, "r as a fraction of r_max")->envname("SC_RADIUS_FACTOR");
  cert->add_option("--tolerance", tol, "slack below 2pi allowed for type-2 links")->envname("SC_TOLERANCE");
  cert->add_option("--json", json_out, "write the JSON report here (- for stdout)");

  auto* params = app.add_subcommand("params", "table of r_max(n), theta and lambda");
  params->add_option("--n", n, "largest n");

  auto* random = app.add_subcommand("random", "density-model experiment");
  random->add_option("-m", dp.m, "generators");
  random->add_option("-l", dp.l, "relator length");
  random->add_option("-d", dp.d, "density");
  random->add_option("--samples", dp.samples, "number of samples");
  random->add_option("--seed", dp.seed, "random seed");
  random->add_flag("--certify", run_certify, "certify every sample that passes the gate");
  random->add_option("-o", out, "CSV output (default stdout)");
  random->add_option("--json", json_out, "also write the table as JSON");

  auto* svg = app.add_subcommand("svg", "draw discs, folds or links");
  svg->add_option("file", file, "presentation file");
  svg->add_option("-o", out, "output SVG")->required();
  svg->add_option("--what", what, "discs | links | folds")->check(CLI::IsMember({"discs", "links", "folds"}));
  svg->add_option("--demo", demo, "regular N-gon with diagonals up to length K")->expected(2);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kPass : kInputError;
  }

  try {
    if (*check) return cmd_check(file, json_out);
    if (*cert) return cmd_certify(file, rho, tol, json_out);
    if (*params) return cmd_params(n);
    if (*random) return cmd_random(dp, run_certify, out, json_out);
    if (*svg) return cmd_svg(file, out, what, demo);
  } catch (const ParseError& e) {
    std::cerr << "sccat: " << e.what() << "\n";
    return kInputError;
  } catch (const TrivialRelatorError& e) {
    std::cerr << "sccat: " << e.what() << "\n";
    return kInputError;
  } catch (const InputError& e) {
    std::cerr << "sccat: " << e.what() << "\n";
    return kInputError;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "sccat: malformed JSON: " << e.what() << "\n";
    return kInputError;
  } catch (const InternalError& e) {
    std::cerr << "sccat: internal error: " << e.what() << "\n";
    return kInternal;
  } catch (const std::exception& e) {
    std::cerr << "sccat: internal error: " << e.what() << "\n";
    return kInternal;
  }
  return kInternal;
}
