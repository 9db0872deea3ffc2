#include "sccat/report.hpp"

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <limits>

namespace sccat {

using nlohmann::json;

namespace {

json num(double x) { return std::isfinite(x) ? json(x) : json(nullptr); }

double num_from(const json& j) { return j.is_null() ? std::numeric_limits<double>::infinity() : j.get<double>(); }

json conditions_json(const SmallCancellationReport& c) {
  json ratios = json::array();
  for (const Ratio& r : c.per_relator_max_ratio) ratios.push_back({r.num, r.den});
  return {{"g", c.g},
          {"max_piece_length", c.max_piece_length},
          {"per_relator_max_piece", c.per_relator_max_piece},
          {"per_relator_max_ratio", ratios},
          {"proper_power", c.proper_power_flags},
          {"passes_c16", c.passes_c16},
          {"passes_uniform", c.passes_uniform},
          {"short_relators", c.short_relators}};
}

SmallCancellationReport conditions_from(const json& j) {
  SmallCancellationReport c;
  c.g = j.at("g").get<std::size_t>();
  c.max_piece_length = j.at("max_piece_length").get<std::size_t>();
  c.per_relator_max_piece = j.at("per_relator_max_piece").get<std::vector<std::size_t>>();
  for (const json& r : j.at("per_relator_max_ratio")) c.per_relator_max_ratio.push_back({r[0], r[1]});
  c.proper_power_flags = j.at("proper_power").get<std::vector<bool>>();
  c.passes_c16 = j.at("passes_c16").get<bool>();
  c.passes_uniform = j.at("passes_uniform").get<bool>();
  c.short_relators = j.at("short_relators").get<bool>();
  return c;
}

json witness_json(const std::vector<WitnessStep>& w) {
  json out = json::array();
  for (const WitnessStep& s : w) out.push_back({{"vertex", s.vertex}, {"arc", s.arc}});
  return out;
}

std::vector<WitnessStep> witness_from(const json& j) {
  std::vector<WitnessStep> w;
  for (const json& s : j) w.push_back({s.at("vertex").get<std::string>(), s.at("arc").get<double>()});
  return w;
}

json metric_json(const MetricParams& m) {
  return {{"g", m.g},         {"n_eff", m.n_eff}, {"radius_factor", m.radius_factor}, {"r_max", m.r_max},
          {"r", m.r},         {"lambda", m.lambda}, {"theta", m.theta}};
}

MetricParams metric_from(const json& j) {
  MetricParams m;
  m.g = j.at("g");
  m.n_eff = j.at("n_eff");
  m.radius_factor = j.at("radius_factor");
  m.r_max = j.at("r_max");
  m.r = j.at("r");
  m.lambda = j.at("lambda");
  m.theta = j.at("theta");
  return m;
}

json certificate_json(const Certificate& c) {
  json t2 = json::array();
  for (const Type2Result& r : c.type2)
    t2.push_back({{"disc", r.disc},
                  {"anchor", r.anchor},
                  {"point", {r.x, r.y}},
                  {"crossing", r.crossing},
                  {"circles", r.circles},
                  {"circle_groups", r.circle_groups},
                  {"girth", num(r.girth)},
                  {"alpha", r.alpha},
                  {"beta", r.beta},
                  {"witness", witness_json(r.witness)}});
  json j = {{"verdict", to_string(c.verdict)},
            {"reason", c.reason},
            {"marginal", c.marginal},
            {"generators", c.generators},
            {"relator_lengths", c.relator_lengths},
            {"conditions", conditions_json(c.conditions)},
            {"metric", c.metric ? metric_json(*c.metric) : json(nullptr)},
            {"area", c.area ? json{{"approx_area", c.area->approx_area},
                                   {"formula_area", c.area->formula_area},
                                   {"formula_n", c.area->formula_n}}
                            : json(nullptr)},
            {"pieces", c.pieces},
            {"folds", c.folds},
            {"type1_girth", num(c.type1_girth)},
            {"type1_witness", witness_json(c.type1_witness)},
            {"min_central_path", num(c.min_central_path)},
            {"type2", t2},
            {"center_link_lengths", c.center_link_lengths},
            {"margins", {{"type1", num(c.type1_margin)}, {"type2", num(c.type2_margin)}, {"center", num(c.center_margin)}}},
            {"tolerance", c.tolerance}};
  return j;
}

Certificate certificate_from(const json& j) {
  Certificate c;
  c.verdict = j.at("verdict") == "certified" ? Verdict::certified : Verdict::refused;
  c.reason = j.at("reason");
  c.marginal = j.at("marginal");
  c.generators = j.at("generators");
  c.relator_lengths = j.at("relator_lengths").get<std::vector<std::size_t>>();
  c.conditions = conditions_from(j.at("conditions"));
  if (!j.at("metric").is_null()) c.metric = metric_from(j.at("metric"));
  if (!j.at("area").is_null()) {
    const json& a = j.at("area");
    c.area = AreaEstimate{a.at("approx_area"), a.at("formula_area"), a.at("formula_n")};
  }
  c.pieces = j.at("pieces");
  c.folds = j.at("folds");
  c.type1_girth = num_from(j.at("type1_girth"));
  c.type1_witness = witness_from(j.at("type1_witness"));
  c.min_central_path = num_from(j.at("min_central_path"));
  for (const json& r : j.at("type2")) {
    Type2Result t;
    t.disc = r.at("disc");
    t.anchor = r.at("anchor");
    t.x = r.at("point")[0];
    t.y = r.at("point")[1];
    t.crossing = r.at("crossing");
    t.circles = r.at("circles");
    t.circle_groups = r.at("circle_groups");
    t.girth = num_from(r.at("girth"));
    t.alpha = r.at("alpha");
    t.beta = r.at("beta");
    t.witness = witness_from(r.at("witness"));
    c.type2.push_back(std::move(t));
  }
  c.center_link_lengths = j.at("center_link_lengths").get<std::vector<double>>();
  c.type1_margin = num_from(j.at("margins").at("type1"));
  c.type2_margin = num_from(j.at("margins").at("type2"));
  c.center_margin = num_from(j.at("margins").at("center"));
  c.tolerance = j.at("tolerance");
  return c;
}

}  // namespace

std::string fnv1a_hex(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char ch : bytes) {
    h ^= ch;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

Report make_report(const Presentation& p, std::string_view input_bytes, std::string command) {
  Report r;
  r.command = std::move(command);
  r.input_digest = fnv1a_hex(input_bytes);
  r.generators = p.generator_names();
  for (const CyclicWord& w : p.relators()) r.relators.push_back(p.format_word(w.letters()));
  r.normalization_log = p.normalization_log();
  r.conditions = check_conditions(p);
  return r;
}

json to_json(const Report& r) {
  return {{"schema_version", r.schema_version},
          {"tool_version", r.tool_version},
          {"command", r.command},
          {"input_digest", r.input_digest},
          {"generators", r.generators},
          {"relators", r.relators},
          {"normalization_log", r.normalization_log},
          {"conditions", conditions_json(r.conditions)},
          {"certificate", r.certificate ? certificate_json(*r.certificate) : json(nullptr)},
          {"timings", r.timings}};
}

Report report_from_json(const json& j) {
  Report r;
  r.schema_version = j.at("schema_version");
  if (r.schema_version != kSchemaVersion)
    throw std::invalid_argument("report schema version " + std::to_string(r.schema_version) + " not supported");
  r.tool_version = j.at("tool_version");
  r.command = j.at("command");
  r.input_digest = j.at("input_digest");
  r.generators = j.at("generators").get<std::vector<std::string>>();
  r.relators = j.at("relators").get<std::vector<std::string>>();
  r.normalization_log = j.at("normalization_log").get<std::vector<std::string>>();
  r.conditions = conditions_from(j.at("conditions"));
  if (!j.at("certificate").is_null()) r.certificate = certificate_from(j.at("certificate"));
  r.timings = j.at("timings").get<std::map<std::string, double>>();
  return r;
}

json to_json(const StatsTable& t) {
  json rows = json::array();
  for (const StatsRow& r : t) {
    json hist = json::object();
    for (const auto& [len, count] : r.max_piece_histogram) hist[std::to_string(len)] = count;
    rows.push_back({{"m", r.m},
                    {"l", r.l},
                    {"d", r.d},
                    {"samples", r.samples},
                    {"pass_c16", r.rate(r.passed_c16)},
                    {"pass_uniform", r.rate(r.passed_uniform)},
                    {"certified", r.rate(r.certified)},
                    {"refused_after_gate", r.refused_after_gate},
                    {"mean_margin", r.mean_margin},
                    {"max_piece_mean", r.max_piece_mean},
                    {"max_piece_histogram", hist}});
  }
  return {{"note", "d < 1/12 is an asymptotic bound; finite-l rates show trends only"}, {"rows", rows}};
}

}  // namespace sccat
