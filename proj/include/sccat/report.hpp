#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "sccat/linkcert.hpp"
#include "sccat/randomgroups.hpp"

namespace sccat {

inline constexpr int kSchemaVersion = 1;
inline constexpr const char* kToolVersion = "0.1.0";

struct Report {
  int schema_version = kSchemaVersion;
  std::string tool_version = kToolVersion;
  std::string command;
  std::string input_digest;  // FNV-1a 64 of the input bytes, hex
  std::vector<std::string> generators;
  std::vector<std::string> relators;  // normalized, in input syntax
  std::vector<std::string> normalization_log;
  SmallCancellationReport conditions;
  std::optional<Certificate> certificate;
  std::map<std::string, double> timings;  // seconds

  friend bool operator==(const Report&, const Report&) = default;
};

std::string fnv1a_hex(std::string_view bytes);

Report make_report(const Presentation& p, std::string_view input_bytes, std::string command);

/// Non-finite doubles are written as null and read back as +∞.
nlohmann::json to_json(const Report& r);
Report report_from_json(const nlohmann::json& j);

nlohmann::json to_json(const StatsTable& t);

}  // namespace sccat
