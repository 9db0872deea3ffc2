#include <doctest.h>

#include <fstream>
#include <sstream>

#include "sccat/report.hpp"

using namespace sccat;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Report genus2_report() {
  const std::string bytes = slurp(SCCAT_DATA "/genus2.txt");
  auto p = parse_presentation(bytes);
  Report r = make_report(p, bytes, "certify");
  r.certificate = certify(p);
  return r;
}

}  // namespace

TEST_CASE("fnv1a") {
  CHECK(fnv1a_hex("") == "cbf29ce484222325");
  CHECK(fnv1a_hex("a") == "af63dc4c8601ec8c");
  CHECK(fnv1a_hex("foobar") == "85944171f73967e8");
}

TEST_CASE("round trip") {
  Report r = genus2_report();
  r.timings["total"] = 0.25;
  const auto j = to_json(r);
  CHECK(j["schema_version"] == kSchemaVersion);
  CHECK(report_from_json(j) == r);
  CHECK(report_from_json(nlohmann::json::parse(j.dump())) == r);

  auto bad = j;
  bad["schema_version"] = 99;
  CHECK_THROWS(report_from_json(bad));
}

TEST_CASE("infinite girths survive") {
  const std::string text = "generators: a b c d e f g\nrelator: a b c d e f g";
  auto p = parse_presentation(text);
  Report r = make_report(p, text, "certify");
  r.certificate = certify(p);
  REQUIRE(std::isinf(r.certificate->type1_girth));
  const auto j = nlohmann::json::parse(to_json(r).dump());
  CHECK(j["certificate"]["type1_girth"].is_null());
  CHECK(std::isinf(report_from_json(j).certificate->type1_girth));
}

TEST_CASE("golden genus-2 report") {
  const auto got = to_json(genus2_report());
  const std::string path = SCCAT_GOLDEN "/genus2_report.json";
  const std::string expected = slurp(path);
  REQUIRE_MESSAGE(!expected.empty(), "missing " << path);
  const auto want = nlohmann::json::parse(expected);
  // numbers are compared loosely, everything else exactly
  std::function<void(const nlohmann::json&, const nlohmann::json&, const std::string&)> same =
      [&](const nlohmann::json& a, const nlohmann::json& b, const std::string& at) {
        INFO(at);
        if (a.is_number() && b.is_number()) {
          CHECK(a.get<double>() == doctest::Approx(b.get<double>()).epsilon(1e-12));
          return;
        }
        REQUIRE(a.type() == b.type());
        if (a.is_object()) {
          REQUIRE(a.size() == b.size());
          for (auto it = a.begin(); it != a.end(); ++it) {
            REQUIRE(b.contains(it.key()));
            same(it.value(), b[it.key()], at + "/" + it.key());
          }
        } else if (a.is_array()) {
          REQUIRE(a.size() == b.size());
          for (std::size_t i = 0; i < a.size(); ++i) same(a[i], b[i], at + "/" + std::to_string(i));
        } else {
          CHECK(a == b);
        }
      };
  same(got, want, "");
}

TEST_CASE("stats table as json") {
  StatsRow row;
  row.m = 2;
  row.l = 12;
  row.samples = 4;
  row.passed_uniform = 1;
  row.max_piece_histogram = {{2, 3}, {3, 1}};
  const auto j = to_json(StatsTable{row});
  REQUIRE(j["rows"].is_array());
  CHECK(j["rows"][0]["samples"] == 4);
  CHECK(j["rows"][0]["pass_uniform"] == 0.25);
  CHECK(j["rows"][0]["max_piece_histogram"]["3"] == 1);
}
