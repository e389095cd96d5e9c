#include "monstrous/harness/report.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace monstrous::harness {

using nlohmann::ordered_json;

std::string emit_json(const Report& r, bool timings) {
  ordered_json checks = ordered_json::array();
  for (const CheckResult& c : r.checks) {
    ordered_json j = {{"id", c.id},
                      {"paper_ref", c.paper_ref},
                      {"expected", c.expected},
                      {"computed", c.computed},
                      {"kind", to_string(c.kind)},
                      {"status", to_string(c.status)}};
    if (!c.detail.empty()) j["detail"] = c.detail;
    if (timings) j["runtime_ms"] = c.runtime_ms;
    checks.push_back(std::move(j));
  }
  const Summary s = r.summary();
  const ordered_json doc = {{"version", r.version},
                            {"seed", r.seed},
                            {"checks", std::move(checks)},
                            {"summary", {{"pass", s.pass}, {"fail", s.fail}, {"skipped", s.skipped}}},
                            {"out_of_scope", r.out_of_scope}};
  return doc.dump(2) + "\n";
}

std::string emit_text(const Report& r, bool timings) {
  std::size_t id_w = 2;
  for (const CheckResult& c : r.checks) id_w = std::max(id_w, c.id.size());
  std::ostringstream os;
  os << "seed " << r.seed << "\n\n";
  for (const CheckResult& c : r.checks) {
    os << std::left << std::setw(8) << to_string(c.status) << std::setw(static_cast<int>(id_w) + 2) << c.id;
    if (c.status == Status::kPass) os << c.computed;
    else os << "expected " << c.expected << ", computed " << c.computed;
    if (timings) os << "  [" << c.runtime_ms << " ms]";
    os << '\n';
    if (!c.detail.empty()) os << std::string(8 + id_w + 2, ' ') << c.detail << '\n';
  }
  const Summary s = r.summary();
  os << "\n" << s.pass << " passed, " << s.fail << " failed, " << s.skipped << " skipped\n";
  os << "\nout of scope:\n";
  for (const std::string& o : r.out_of_scope) os << "  - " << o << '\n';
  return os.str();
}

std::string emit(const Report& r, ReportFormat f, bool timings) {
  return f == ReportFormat::kJson ? emit_json(r, timings) : emit_text(r, timings);
}

Report parse_json(const std::string& text) {
  const auto j = nlohmann::json::parse(text);
  Report r;
  r.version = j.at("version").get<int>();
  r.seed = j.at("seed").get<std::uint64_t>();
  for (const auto& c : j.at("checks")) {
    CheckResult res;
    res.id = c.at("id").get<std::string>();
    res.paper_ref = c.at("paper_ref").get<std::string>();
    res.expected = c.at("expected").get<std::string>();
    res.computed = c.at("computed").get<std::string>();
    res.kind = kind_from_string(c.at("kind").get<std::string>());
    res.status = status_from_string(c.at("status").get<std::string>());
    res.detail = c.value("detail", std::string{});
    res.runtime_ms = c.value("runtime_ms", std::int64_t{0});
    r.checks.push_back(std::move(res));
  }
  r.out_of_scope = j.at("out_of_scope").get<std::vector<std::string>>();
  const Summary s = r.summary();
  const auto& js = j.at("summary");
  if (js.at("pass").get<std::uint64_t>() != s.pass || js.at("fail").get<std::uint64_t>() != s.fail ||
      js.at("skipped").get<std::uint64_t>() != s.skipped)
    throw std::invalid_argument("parse_json: summary does not match the checks");
  return r;
}

void emit_report(const Report& r, ReportFormat f, const std::string& path, bool timings) {
  const std::string body = emit(r, f, timings);
  if (path.empty() || path == "-") {
    std::cout << body;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  out << body;
  if (!out.flush()) throw std::runtime_error("failed writing " + path);
}

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

}  // namespace

std::map<std::string, std::string> parse_config(const std::string& text) {
  std::map<std::string, std::string> out;
  std::istringstream in(text);
  std::string line;
  for (int n = 1; std::getline(in, line); ++n) {
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    const std::string key = eq == std::string::npos ? std::string{} : trim(line.substr(0, eq));
    if (key.empty()) throw std::invalid_argument("config line " + std::to_string(n) + ": expected key = value");
    out[key] = trim(line.substr(eq + 1));
  }
  return out;
}

std::map<std::string, std::string> load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot read config file " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_config(ss.str());
}

}  // namespace monstrous::harness
