#pragma once

#include <map>
#include <optional>
#include <string>

#include "monstrous/harness/checks.hpp"

namespace monstrous::harness {

enum class ReportFormat { kJson, kText };

/// JSON: {version, seed, checks: [...], summary: {pass, fail, skipped}, out_of_scope}.
/// runtime_ms is written only when `timings` is set, so that reports from
/// repeated runs compare byte for byte.
std::string emit_json(const Report& r, bool timings = false);
std::string emit_text(const Report& r, bool timings = false);
std::string emit(const Report& r, ReportFormat f, bool timings = false);
Report parse_json(const std::string& text);

/// Writes the report to `path`, or to stdout when path is empty or "-".
/// Throws std::runtime_error if the file cannot be written.
void emit_report(const Report& r, ReportFormat f, const std::string& path, bool timings = false);

/// key = value lines; '#' starts a comment; blank lines are ignored.
/// Throws std::invalid_argument on a malformed line.
std::map<std::string, std::string> parse_config(const std::string& text);
std::map<std::string, std::string> load_config(const std::string& path);

}  // namespace monstrous::harness
