#include "io.hpp"

#include "prc/audit.hpp"
#include "prc/evolution.hpp"
#include "prc/oracle.hpp"
#include "prc/scoring.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <iostream>
#include <memory>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitParse = 2;
constexpr int kExitPolicy = 3;
constexpr int kExitViolations = 4;

struct PolicyFlags {
  std::string rule = "strict-less";
  std::string ties = "lowest";
  std::string scheme = "6pr";
  int precision = 4;
  bool ties_given = false;
};

void add_policy_flags(CLI::App& cmd, PolicyFlags& flags) {
  cmd.add_option("--rule", flags.rule,
                 "Counting rule: strict-less, inclusive, plus-0.9, fractional")
      ->capture_default_str();
  cmd.add_option("--ties", flags.ties,
                 "Tie policy: lowest, highest, average-rank, average-weight")
      ->capture_default_str();
  cmd.add_option("--scheme", flags.scheme,
                 "Class scheme: 6pr or a JSON scheme file")
      ->capture_default_str();
  cmd.add_option("--precision", flags.precision,
                 "Decimal digits for rendered rationals")
      ->capture_default_str();
}

prc::ScoringPolicy resolve_policy(const CLI::App& cmd, PolicyFlags& flags) {
  flags.ties_given = cmd.count("--ties") > 0;
  return prc::io::make_policy(flags.rule, flags.ties, flags.ties_given);
}

// Writes to the -o path when given, stdout otherwise.
class OutputTarget {
 public:
  explicit OutputTarget(const std::string& path) {
    if (!path.empty()) {
      file_ = std::make_unique<std::ofstream>(path, std::ios::binary);
      if (!*file_) {
        throw prc::io::ParseError("cannot open output file '" + path + "'");
      }
    }
  }
  std::ostream& stream() { return file_ ? *file_ : std::cout; }

 private:
  std::unique_ptr<std::ofstream> file_;
};

int run(int argc, char** argv) {
  CLI::App app{
      "Percentile-rank-class citation impact indicators (I3, R): "
      "computation, scenario replay, and ranking-consistency audits"};
  app.require_subcommand(1);
  int exit_code = kExitOk;

  // compute
  auto* compute = app.add_subcommand(
      "compute", "Compute I3 and R for one dataset file");
  std::string compute_input;
  std::string compute_output;
  std::string compute_format = "table";
  bool by_owner = false;
  PolicyFlags compute_flags;
  compute->add_option("input", compute_input, "Dataset file (JSON or CSV)")
      ->required();
  compute->add_flag("--by-owner", by_owner, "Include per-owner contributions");
  compute->add_option("--format", compute_format, "Output: table, csv, json")
      ->capture_default_str();
  compute->add_option("-o,--output", compute_output, "Write to file");
  add_policy_flags(*compute, compute_flags);
  compute->callback([&] {
    const prc::ScoringPolicy policy = resolve_policy(*compute, compute_flags);
    const prc::io::Format format = prc::io::parse_format(compute_format);
    const prc::ClassScheme scheme = prc::io::load_scheme(compute_flags.scheme);
    const prc::Dataset dataset = prc::io::read_dataset_file(compute_input);
    const prc::IndicatorReport report =
        prc::per_owner_report(dataset, scheme, policy);
    OutputTarget out(compute_output);
    prc::io::emit_report(out.stream(), report, format, by_owner,
                         compute_flags.precision);
  });

  // scenario
  auto* scenario_cmd = app.add_subcommand(
      "scenario", "Replay a scenario file and emit the per-case series");
  std::string scenario_input;
  std::string scenario_output;
  std::string scenario_format = "csv";
  PolicyFlags scenario_flags;
  scenario_cmd->add_option("input", scenario_input, "Scenario file (JSON)")
      ->required();
  scenario_cmd
      ->add_option("--format", scenario_format, "Output: table, csv, json")
      ->capture_default_str();
  scenario_cmd->add_option("-o,--output", scenario_output, "Write to file");
  add_policy_flags(*scenario_cmd, scenario_flags);
  scenario_cmd->callback([&] {
    const prc::ScoringPolicy policy =
        resolve_policy(*scenario_cmd, scenario_flags);
    const prc::io::Format format = prc::io::parse_format(scenario_format);
    const prc::ClassScheme scheme =
        prc::io::load_scheme(scenario_flags.scheme);
    const prc::Scenario scenario =
        prc::io::read_scenario_file(scenario_input);
    std::vector<prc::IndicatorReport> reports;
    for (const prc::Dataset& snapshot : prc::replay(scenario)) {
      reports.push_back(prc::per_owner_report(snapshot, scheme, policy));
    }
    OutputTarget out(scenario_output);
    prc::io::emit_series(out.stream(), reports, format,
                         scenario_flags.precision);
  });

  // audit
  auto* audit_cmd = app.add_subcommand(
      "audit", "Check a scenario for ranking-consistency violations");
  std::string audit_input;
  std::string audit_output;
  std::string audit_format = "table";
  std::string check = "strict-independence";
  bool fail_on_violation = false;
  PolicyFlags audit_flags;
  audit_cmd->add_option("input", audit_input, "Scenario file (JSON)")
      ->required();
  audit_cmd
      ->add_option("--check", check,
                   "strict-independence or same-improvement")
      ->capture_default_str();
  audit_cmd->add_flag("--fail-on-violation", fail_on_violation,
                      "Exit 4 when any violation is found");
  audit_cmd->add_option("--format", audit_format, "Output: table, csv, json")
      ->capture_default_str();
  audit_cmd->add_option("-o,--output", audit_output, "Write to file");
  add_policy_flags(*audit_cmd, audit_flags);
  audit_cmd->callback([&] {
    const prc::ScoringPolicy policy = resolve_policy(*audit_cmd, audit_flags);
    const prc::io::Format format = prc::io::parse_format(audit_format);
    const prc::ClassScheme scheme = prc::io::load_scheme(audit_flags.scheme);
    const prc::Scenario scenario = prc::io::read_scenario_file(audit_input);
    prc::AuditResult result;
    if (check == "strict-independence") {
      result = prc::strict_independence_violations(scenario, scheme, policy);
    } else if (check == "same-improvement") {
      result = prc::same_improvement_violations(scenario, scheme, policy);
    } else {
      throw prc::io::PolicyError(
          "unknown check '" + check +
          "' (strict-independence, same-improvement)");
    }
    if (result.warning) std::cerr << "warning: " << result.warning_message << "\n";
    OutputTarget out(audit_output);
    prc::io::emit_audit(out.stream(), result, format, audit_flags.precision);
    if (fail_on_violation && !result.violations.empty()) {
      exit_code = kExitViolations;
    }
  });

  // example
  auto* example_cmd = app.add_subcommand(
      "example", "Write a builtin dataset or scenario file");
  std::string name;
  std::string example_output;
  std::string example_format = "json";
  example_cmd->add_option("--name", name, "A, B1, B73, or b-like")->required();
  example_cmd
      ->add_option("--format", example_format,
                   "Dataset output: json or csv (scenarios are always JSON)")
      ->capture_default_str();
  example_cmd->add_option("-o,--output", example_output, "Write to file");
  example_cmd->callback([&] {
    OutputTarget out(example_output);
    if (name == "A") {
      prc::io::write_scenario_json(out.stream(), prc::example_a());
    } else if (name == "b-like") {
      prc::io::write_scenario_json(out.stream(), prc::b_like_scenario());
    } else if (name == "B1" || name == "B73") {
      const prc::ExampleBEndpoints endpoints = prc::example_b_endpoints();
      const prc::Dataset& dataset =
          name == "B1" ? endpoints.b1 : endpoints.b73;
      if (example_format == "csv") {
        prc::io::write_dataset_csv(out.stream(), dataset);
      } else if (example_format == "json") {
        prc::io::write_dataset_json(out.stream(), dataset);
      } else {
        throw prc::io::PolicyError("unknown format '" + example_format +
                                   "' (json, csv)");
      }
    } else {
      throw prc::io::ParseError("unknown example '" + name +
                                "' (available: A, B1, B73, b-like)");
    }
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  } catch (const prc::io::PolicyError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitPolicy;
  } catch (const prc::io::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParse;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParse;
  }
  return exit_code;
}

}  // namespace

int main(int argc, char** argv) { return run(argc, argv); }
