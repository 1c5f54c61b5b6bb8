#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "parallelo/experiments.hpp"
#include "parallelo/rational.hpp"

namespace parallelo::cli {

using Json = nlohmann::ordered_json;

inline constexpr const char* kSchemaVersion = "1";

struct CheckLine {
  std::string name;
  bool passed;
  std::string detail;
};

/// JSON output shape shared by every subcommand.
struct OutputEnvelope {
  explicit OutputEnvelope(std::string cmd) : command(std::move(cmd)) {}

  std::string command;
  Json parameters = Json::object();
  Json records = Json::array();
  std::vector<CheckLine> checks;
  std::optional<Json> summary;

  Json to_json() const;
};

/// {"num": n, "den": d, "decimal": x}
Json rational_json(const Rational& r);
/// Same shape; num/den become digit strings when they exceed int64.
Json rational_json(const BigRational& r);

/// %.12g, the float convenience format for every table.
std::string format_float(double x);

/// Quotes a CSV field when it contains a comma, quote or newline.
std::string csv_field(const std::string& s);

Json witness_json(const RatioWitness& w);
Json profile_record_json(const ProfileRecord& r);

}  // namespace parallelo::cli
