#pragma once

#include "prc/audit.hpp"
#include "prc/evolution.hpp"
#include "prc/scoring.hpp"

#include <nlohmann/json_fwd.hpp>

#include <filesystem>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

namespace prc::io {

// Malformed input files and values. Mapped to exit code 2.
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Invalid rule/tie/scheme/format combinations. Mapped to exit code 3.
struct PolicyError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class Format { Table, Csv, Json };

Format parse_format(const std::string& name);

// Rendering: exact rationals everywhere, decimals are presentation only.
std::string render(const Rational& value, int precision);
nlohmann::json rational_json(const Rational& value, int precision);

// Dataset files: JSON object {"label", "papers": [{"id","owner","citations"}]}
// or CSV with header `id,owner,citations`. Sniffed by the first non-space
// character.
Dataset read_dataset_file(const std::filesystem::path& path);
Dataset parse_dataset_csv(std::istream& in, const std::string& label);
void write_dataset_json(std::ostream& out, const Dataset& dataset);
void write_dataset_csv(std::ostream& out, const Dataset& dataset);

// Scenario files: JSON {"name", "initial": <dataset or {"path": ...}>,
// "steps": [{"case","op","owner","from_count"?}]}.
Scenario read_scenario_file(const std::filesystem::path& path);
Scenario parse_scenario_json(const nlohmann::json& j,
                             const std::filesystem::path& base_dir);
void write_scenario_json(std::ostream& out, const Scenario& scenario);

// "6pr" or a path to a JSON file {"boundaries": [...], "weights": [...]}
// with integer or {"num","den"} entries.
ClassScheme load_scheme(const std::string& spec);

// rule: strict-less | inclusive | plus-0.9 | fractional
// ties: lowest | highest | average-rank | average-weight
// `ties_given` flags an explicit --ties, which the fractional rule rejects.
ScoringPolicy make_policy(const std::string& rule, const std::string& ties,
                          bool ties_given);

void emit_report(std::ostream& out, const IndicatorReport& report,
                 Format format, bool by_owner, int precision);
void emit_series(std::ostream& out,
                 const std::vector<IndicatorReport>& reports, Format format,
                 int precision);
void emit_audit(std::ostream& out, const AuditResult& result, Format format,
                int precision);

}  // namespace prc::io
