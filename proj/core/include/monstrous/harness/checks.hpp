#pragma once

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace monstrous::harness {

enum class Status { kPass, kFail, kSkipped };
enum class ValueKind { kInteger, kRational, kString };

std::string to_string(Status s);
std::string to_string(ValueKind k);
Status status_from_string(const std::string& s);
ValueKind kind_from_string(const std::string& s);

/// One verified quantity. Values are kept as exact decimal or fraction strings.
struct CheckResult {
  std::string id;
  std::string paper_ref;
  std::string expected;
  std::string computed;
  ValueKind kind = ValueKind::kInteger;
  Status status = Status::kSkipped;
  std::string detail;
  std::int64_t runtime_ms = 0;

  friend bool operator==(const CheckResult&, const CheckResult&) = default;
};

class CheckContext;

struct CheckOutcome {
  std::string expected;
  std::string computed;
  ValueKind kind = ValueKind::kInteger;
  std::string detail;
};

struct CheckSpec {
  std::string id;
  std::string paper_ref;
  std::function<CheckOutcome(CheckContext&)> run;
};

/// All registered checks, in report order.
const std::vector<CheckSpec>& registry();

/// Glob match with '*' and '?'; a comma-separated pattern matches if any part does.
bool glob_match(const std::string& pattern, const std::string& text);

class UnknownCheck : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct RunOptions {
  std::string filter = "*";
  std::uint64_t seed = 1;
  unsigned threads = 1;
};

struct Summary {
  std::uint64_t pass = 0;
  std::uint64_t fail = 0;
  std::uint64_t skipped = 0;

  friend bool operator==(const Summary&, const Summary&) = default;
};

struct Report {
  int version = 1;
  std::uint64_t seed = 1;
  std::vector<CheckResult> checks;
  std::vector<std::string> out_of_scope;

  Summary summary() const;
  friend bool operator==(const Report&, const Report&) = default;
};

/// Claims with no computational content at this level; listed in every report.
const std::vector<std::string>& out_of_scope_claims();

/// Runs the checks whose ids match `filter`, up to `threads` at a time. A
/// check that throws is recorded as a failure with the message as detail.
/// Throws UnknownCheck when the filter matches nothing.
Report run_checks(const RunOptions& opts);

/// Seed handed to one check: a fixed mix of the run seed and the check id,
/// so that adding or filtering checks does not disturb the others.
std::uint64_t check_seed(std::uint64_t seed, const std::string& id);

}  // namespace monstrous::harness
