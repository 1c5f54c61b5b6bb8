#include "output.hpp"

#include <cstdio>

namespace parallelo::cli {

Json OutputEnvelope::to_json() const {
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["command"] = command;
  j["parameters"] = parameters;
  j["records"] = records;
  Json checks_json = Json::array();
  for (const auto& c : checks) {
    checks_json.push_back({{"name", c.name}, {"pass", c.passed}, {"detail", c.detail}});
  }
  j["checks"] = checks_json;
  if (summary) j["summary"] = *summary;
  return j;
}

Json rational_json(const Rational& r) {
  return {{"num", r.num()}, {"den", r.den()}, {"decimal", r.to_double()}};
}

Json rational_json(const BigRational& r) {
  if (r.fits_int64()) return rational_json(r.to_rational());
  return {{"num", r.num().get_str()}, {"den", r.den().get_str()}, {"decimal", r.to_double()}};
}

std::string format_float(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  out += '"';
  return out;
}

Json witness_json(const RatioWitness& w) { return {{"a", w.a}, {"n", w.n}, {"ratio", rational_json(w.ratio)}}; }

Json profile_record_json(const ProfileRecord& r) {
  return {{"n", r.n}, {"a", r.a}, {"V", r.v}, {"ratio", rational_json(r.ratio)}};
}

}  // namespace parallelo::cli
