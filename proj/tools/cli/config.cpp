#include "config.hpp"

#include <fstream>

#include "parallelo/error.hpp"

namespace parallelo::cli {

namespace {

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::int64_t parse_count(const std::string& key, const std::string& value) {
  try {
    std::size_t used = 0;
    long long v = std::stoll(value, &used);
    if (used != value.size() || v < 0) throw InvalidArgument("");
    return v;
  } catch (const std::exception&) {
    throw InvalidArgument("config key '" + key + "' expects a nonnegative integer, got '" + value + "'");
  }
}

}  // namespace

Method parse_method(const std::string& text) {
  if (text == "direct") return Method::Direct;
  if (text == "formula") return Method::Formula;
  if (text == "auto") return Method::Auto;
  throw InvalidArgument("method must be direct, formula or auto");
}

OutFormat parse_format(const std::string& text) {
  if (text == "csv") return OutFormat::Csv;
  if (text == "json") return OutFormat::Json;
  throw InvalidArgument("format must be csv or json");
}

std::string to_string(Method m) {
  switch (m) {
    case Method::Direct: return "direct";
    case Method::Formula: return "formula";
    case Method::Auto: return "auto";
  }
  return "direct";
}

std::string to_string(OutFormat f) { return f == OutFormat::Csv ? "csv" : "json"; }

std::map<std::string, std::string> read_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidArgument("cannot open config file '" + path + "'");
  std::map<std::string, std::string> out;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw InvalidArgument(path + ":" + std::to_string(lineno) + ": expected key=value");
    }
    std::string key = trim(line.substr(0, eq));
    // Flags spell multi-word keys with '-', files may use either.
    for (auto& ch : key) {
      if (ch == '-') ch = '_';
    }
    out[key] = trim(line.substr(eq + 1));
  }
  return out;
}

void apply_settings(RunConfig& cfg, const std::map<std::string, std::string>& settings) {
  for (const auto& [key, value] : settings) {
    if (key == "method") {
      cfg.method = parse_method(value);
    } else if (key == "sieve_max") {
      cfg.sieve_max = parse_count(key, value);
      if (cfg.sieve_max < 1) throw InvalidArgument("sieve_max must be positive");
    } else if (key == "threads") {
      cfg.threads = static_cast<unsigned>(parse_count(key, value));
    } else if (key == "format" || key == "out_format") {
      cfg.out_format = parse_format(value);
    } else if (key == "out" || key == "out_path") {
      cfg.out_path = value;
    } else {
      throw InvalidArgument("unknown config key '" + key + "'");
    }
  }
}

}  // namespace parallelo::cli
