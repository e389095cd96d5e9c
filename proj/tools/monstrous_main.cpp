// Command-line front end for the verification checks.

#include <iostream>
#include <map>
#include <string>

#include <CLI11.hpp>

#include "monstrous/harness/checks.hpp"
#include "monstrous/harness/report.hpp"
#include "monstrous/lattice/lattice.hpp"

namespace {

using namespace monstrous;

struct Settings {
  std::uint64_t seed = 1;
  unsigned threads = 1;
  std::string format = "text";
  std::string out;
  std::string filter;
  bool timings = false;
};

// Values from the config file fill in anything not given on the command line.
void apply_config(Settings& s, const std::map<std::string, std::string>& cfg, const CLI::App& app) {
  for (const auto& [key, value] : cfg) {
    if (app.count("--" + key) > 0) continue;
    if (key == "seed") s.seed = std::stoull(value);
    else if (key == "threads") s.threads = static_cast<unsigned>(std::stoul(value));
    else if (key == "format") s.format = value;
    else if (key == "out") s.out = value;
    else if (key == "filter") s.filter = value;
    else if (key == "timings") s.timings = value == "1" || value == "true" || value == "yes";
    else throw CLI::ValidationError("config", "unknown key '" + key + "'");
  }
}

int dump_basis(const std::string& name) {
  const lattice::IntegerLattice l = name == "e8"     ? lattice::build_E8()
                                    : name == "ee8"  ? lattice::build_EE8()
                                    : name == "bw16" ? lattice::build_BW16()
                                                     : lattice::build_Leech();
  std::cout << lattice::basis_text(l);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact checks for the finite objects behind a VOA construction of the Monster"};
  app.require_subcommand(1);
  app.fallthrough();

  Settings s;
  std::string config;
  app.add_option("--seed", s.seed, "Seed for sampled checks");
  app.add_option("--threads", s.threads, "Worker threads")->check(CLI::Range(1u, 64u));
  app.add_option("--format", s.format, "Report format")->check(CLI::IsMember({"json", "text"}));
  app.add_option("--out", s.out, "Write the report here instead of stdout");
  app.add_option("--filter", s.filter, "Comma-separated glob over check ids");
  app.add_option("--config", config, "key = value file with defaults for the options above");
  app.add_flag("--timings", s.timings, "Include per-check runtimes in the report");

  const std::map<std::string, std::string> groups = {
      {"quadspace", "Quadratic spaces over F2 and their isometry groups"},
      {"fusion", "Singular space census: graded dimensions, traces, signs"},
      {"lattice", "E8, EE8, BW16 and Leech lattice checks"},
      {"cvcc", "Conformal vector Gram values and the extraspecial group"},
      {"orders", "Group order arithmetic"},
      {"all", "Every check"},
  };
  std::map<std::string, CLI::App*> subs;
  for (const auto& [name, desc] : groups) subs[name] = app.add_subcommand(name, desc);
  std::string dump;
  subs["lattice"]
      ->add_option("--dump-basis", dump, "Print a lattice basis and exit")
      ->check(CLI::IsMember({"e8", "ee8", "bw16", "leech"}));

  try {
    app.parse(argc, argv);
    if (!config.empty()) apply_config(s, harness::load_config(config), app);
    if (s.format != "json" && s.format != "text") throw CLI::ValidationError("--format", "must be json or text");
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }

  if (!dump.empty()) return dump_basis(dump);

  std::string group;
  for (const auto& [name, sub] : subs)
    if (sub->parsed()) group = name;

  harness::RunOptions opts;
  opts.seed = s.seed;
  opts.threads = s.threads;
  opts.filter = s.filter.empty() ? "*" : s.filter;
  if (group != "all") {
    // Within a group, --filter narrows further.
    std::string ids;
    for (const harness::CheckSpec& c : harness::registry())
      if (c.id.rfind(group + ".", 0) == 0 && harness::glob_match(opts.filter, c.id)) ids += (ids.empty() ? "" : ",") + c.id;
    if (ids.empty()) {
      std::cerr << "error: no " << group << " check matches \"" << opts.filter << "\"\n";
      return 2;
    }
    opts.filter = ids;
  }
  harness::Report report;
  try {
    report = harness::run_checks(opts);
  } catch (const harness::UnknownCheck& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }

  try {
    harness::emit_report(report, s.format == "json" ? harness::ReportFormat::kJson : harness::ReportFormat::kText,
                         s.out, s.timings);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return report.summary().fail == 0 ? 0 : 1;
}
