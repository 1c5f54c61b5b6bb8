#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>

#include "parallelo/sieve.hpp"

namespace parallelo::cli {

enum class Method { Direct, Formula, Auto };
enum class OutFormat { Csv, Json };

struct RunConfig {
  Method method = Method::Direct;
  std::int64_t sieve_max = kDefaultSieveMax;
  unsigned threads = 0;  // 0 = all hardware threads
  OutFormat out_format = OutFormat::Csv;
  std::optional<std::string> out_path;
};

Method parse_method(const std::string& text);
OutFormat parse_format(const std::string& text);
std::string to_string(Method m);
std::string to_string(OutFormat f);

/// key=value lines; '#' starts a comment. Throws InvalidArgument on malformed
/// lines or unknown keys.
std::map<std::string, std::string> read_config_file(const std::string& path);

/// Applies recognized keys (method, sieve_max, threads, format, out) onto cfg.
void apply_settings(RunConfig& cfg, const std::map<std::string, std::string>& settings);

}  // namespace parallelo::cli
