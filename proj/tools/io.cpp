#include "io.hpp"

#include <nlohmann/json.hpp>

#include <charconv>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <set>
#include <sstream>

namespace prc::io {

namespace {

using nlohmann::json;

std::string trim(std::string s) {
  while (!s.empty() && (s.back() == '\r' || s.back() == ' ')) s.pop_back();
  std::size_t start = 0;
  while (start < s.size() && s[start] == ' ') ++start;
  return s.substr(start);
}

std::int64_t parse_int(const std::string& text, const std::string& what) {
  std::int64_t value = 0;
  const char* begin = text.data();
  const char* end = begin + text.size();
  auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc() || ptr != end) {
    throw ParseError("invalid " + what + ": '" + text + "'");
  }
  return value;
}

void reject_unknown_fields(const json& j, const std::set<std::string>& known,
                           const std::string& context) {
  for (const auto& [key, value] : j.items()) {
    if (!known.contains(key)) {
      throw ParseError("unknown field '" + key + "' in " + context);
    }
  }
}

Dataset parse_dataset_json(const json& j, const std::string& fallback_label) {
  if (!j.is_object()) throw ParseError("dataset must be a JSON object");
  reject_unknown_fields(j, {"label", "papers"}, "dataset");
  Dataset dataset;
  dataset.label = j.value("label", fallback_label);
  if (!j.contains("papers") || !j["papers"].is_array()) {
    throw ParseError("dataset needs a 'papers' array");
  }
  for (const json& entry : j["papers"]) {
    if (!entry.is_object()) throw ParseError("paper entries must be objects");
    reject_unknown_fields(entry, {"id", "owner", "citations"}, "paper");
    if (!entry.contains("id") || !entry["id"].is_number_integer()) {
      throw ParseError("paper needs an integer 'id'");
    }
    if (!entry.contains("citations") ||
        !entry["citations"].is_number_integer()) {
      throw ParseError("paper needs an integer 'citations'");
    }
    Paper paper;
    paper.id = entry["id"].get<std::int64_t>();
    paper.citations = entry["citations"].get<std::int64_t>();
    paper.owner = entry.value("owner", std::string(kUnattributed));
    if (paper.citations < 0) {
      throw ParseError("paper " + std::to_string(paper.id) +
                       ": citations must be non-negative");
    }
    dataset.papers.push_back(std::move(paper));
  }
  try {
    dataset.validate();
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
  return dataset;
}

json parse_json_stream(std::istream& in, const std::string& context) {
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw ParseError(context + ": " + e.what());
  }
}

Rational rational_from_json(const json& j, const std::string& what) {
  if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
  if (j.is_object() && j.contains("num") && j.contains("den")) {
    reject_unknown_fields(j, {"num", "den"}, what);
    const std::int64_t den = j["den"].get<std::int64_t>();
    if (den <= 0) throw ParseError(what + ": denominator must be positive");
    return Rational(j["num"].get<std::int64_t>(), den);
  }
  throw ParseError(what + " must be an integer or {num, den}");
}

json owner_json(const OwnerStats& stats, int precision) {
  return json{{"papers", stats.paper_count},
              {"citations", stats.citation_count},
              {"i3", rational_json(stats.i3, precision)},
              {"r", rational_json(stats.r, precision)},
              {"rank", rational_json(stats.rank, precision)}};
}

const char* kind_name(ViolationKind kind) {
  return kind == ViolationKind::SameImprovement ? "same-improvement"
                                                : "strict-independence";
}

}  // namespace

Format parse_format(const std::string& name) {
  if (name == "table") return Format::Table;
  if (name == "csv") return Format::Csv;
  if (name == "json") return Format::Json;
  throw PolicyError("unknown format '" + name + "' (table, csv, json)");
}

std::string render(const Rational& value, int precision) {
  return compact_string(value, precision);
}

nlohmann::json rational_json(const Rational& value, int precision) {
  return json{{"num", value.numerator()},
              {"den", value.denominator()},
              {"decimal", decimal_string(value, precision)}};
}

Dataset parse_dataset_csv(std::istream& in, const std::string& label) {
  std::string line;
  if (!std::getline(in, line)) throw ParseError("empty dataset file");
  if (trim(line) != "id,owner,citations") {
    throw ParseError("CSV header must be 'id,owner,citations'");
  }
  Dataset dataset;
  dataset.label = label;
  std::size_t row = 1;
  while (std::getline(in, line)) {
    ++row;
    line = trim(line);
    if (line.empty()) continue;
    std::vector<std::string> cells;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) cells.push_back(cell);
    if (cells.size() != 3) {
      throw ParseError("row " + std::to_string(row) +
                       ": expected 3 fields (id,owner,citations)");
    }
    Paper paper;
    paper.id = parse_int(cells[0], "id");
    paper.owner = cells[1];
    paper.citations = parse_int(cells[2], "citations");
    if (paper.citations < 0) {
      throw ParseError("row " + std::to_string(row) +
                       ": citations must be non-negative");
    }
    dataset.papers.push_back(std::move(paper));
  }
  try {
    dataset.validate();
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
  return dataset;
}

Dataset read_dataset_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path.string() + "'");
  char first = 0;
  while (in.get(first) && std::isspace(static_cast<unsigned char>(first))) {
  }
  if (!in) throw ParseError("empty dataset file '" + path.string() + "'");
  in.unget();
  if (first == '{') {
    return parse_dataset_json(parse_json_stream(in, path.string()),
                              path.stem().string());
  }
  return parse_dataset_csv(in, path.stem().string());
}

void write_dataset_json(std::ostream& out, const Dataset& dataset) {
  json papers = json::array();
  for (const Paper& p : dataset.papers) {
    papers.push_back(
        json{{"id", p.id}, {"owner", p.owner}, {"citations", p.citations}});
  }
  out << json{{"label", dataset.label}, {"papers", papers}}.dump(2) << "\n";
}

void write_dataset_csv(std::ostream& out, const Dataset& dataset) {
  out << "id,owner,citations\n";
  for (const Paper& p : dataset.papers) {
    out << p.id << ',' << p.owner << ',' << p.citations << "\n";
  }
}

Scenario parse_scenario_json(const json& j,
                             const std::filesystem::path& base_dir) {
  if (!j.is_object()) throw ParseError("scenario must be a JSON object");
  reject_unknown_fields(j, {"name", "initial", "steps"}, "scenario");
  Scenario scenario;
  scenario.name = j.value("name", "scenario");
  if (!j.contains("initial")) throw ParseError("scenario needs 'initial'");
  const json& initial = j["initial"];
  if (initial.is_object() && initial.contains("path")) {
    reject_unknown_fields(initial, {"path"}, "initial");
    scenario.initial =
        read_dataset_file(base_dir / initial["path"].get<std::string>());
  } else {
    scenario.initial = parse_dataset_json(initial, scenario.name + "-initial");
  }
  if (!j.contains("steps") || !j["steps"].is_array()) {
    throw ParseError("scenario needs a 'steps' array");
  }
  // case labels identify snapshots, so the initial label is taken too
  std::set<std::string> seen_cases{scenario.initial.label};
  for (const json& entry : j["steps"]) {
    if (!entry.is_object()) throw ParseError("steps must be objects");
    reject_unknown_fields(entry, {"case", "op", "owner", "from_count"},
                          "step");
    for (const char* field : {"case", "op", "owner"}) {
      if (!entry.contains(field)) {
        throw ParseError(std::string("step needs '") + field + "'");
      }
    }
    ScenarioStep step;
    step.case_label = entry["case"].get<std::string>();
    if (!seen_cases.insert(step.case_label).second) {
      throw ParseError("duplicate case label '" + step.case_label + "'");
    }
    const std::string op = entry["op"].get<std::string>();
    const std::string owner = entry["owner"].get<std::string>();
    if (op == "add_paper") {
      if (entry.contains("from_count")) {
        throw ParseError("step " + step.case_label +
                         ": from_count is only valid for add_citation");
      }
      step.delta = Delta::add_paper(owner);
    } else if (op == "add_citation") {
      if (!entry.contains("from_count")) {
        throw ParseError("step " + step.case_label +
                         ": add_citation needs from_count");
      }
      step.delta =
          Delta::add_citation(owner, entry["from_count"].get<std::int64_t>());
    } else {
      throw ParseError("step " + step.case_label + ": unknown op '" + op +
                       "'");
    }
    scenario.steps.push_back(std::move(step));
  }
  return scenario;
}

Scenario read_scenario_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path.string() + "'");
  return parse_scenario_json(parse_json_stream(in, path.string()),
                             path.parent_path());
}

void write_scenario_json(std::ostream& out, const Scenario& scenario) {
  json papers = json::array();
  for (const Paper& p : scenario.initial.papers) {
    papers.push_back(
        json{{"id", p.id}, {"owner", p.owner}, {"citations", p.citations}});
  }
  json steps = json::array();
  for (const ScenarioStep& step : scenario.steps) {
    json entry{{"case", step.case_label}, {"owner", step.delta.owner}};
    if (step.delta.kind == Delta::Kind::AddPaper) {
      entry["op"] = "add_paper";
    } else {
      entry["op"] = "add_citation";
      entry["from_count"] = step.delta.from_count;
    }
    steps.push_back(std::move(entry));
  }
  out << json{{"name", scenario.name},
              {"initial",
               json{{"label", scenario.initial.label}, {"papers", papers}}},
              {"steps", steps}}
             .dump(2)
      << "\n";
}

ClassScheme load_scheme(const std::string& spec) {
  if (spec == "6pr") return ClassScheme::six_pr();
  std::ifstream in(spec);
  if (!in) {
    throw PolicyError("unknown scheme '" + spec +
                      "' (use 6pr or a scheme file path)");
  }
  const json j = parse_json_stream(in, spec);
  if (!j.is_object()) throw ParseError("scheme must be a JSON object");
  reject_unknown_fields(j, {"boundaries", "weights"}, "scheme");
  ClassScheme scheme;
  for (const char* field : {"boundaries", "weights"}) {
    if (!j.contains(field) || !j[field].is_array()) {
      throw ParseError(std::string("scheme needs a '") + field + "' array");
    }
  }
  for (const json& b : j["boundaries"]) {
    scheme.boundaries.push_back(rational_from_json(b, "boundary"));
  }
  for (const json& w : j["weights"]) {
    scheme.weights.push_back(rational_from_json(w, "weight"));
  }
  try {
    scheme.validate();
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
  return scheme;
}

ScoringPolicy make_policy(const std::string& rule, const std::string& ties,
                          bool ties_given) {
  TiePolicy tie_policy;
  if (ties == "lowest") {
    tie_policy = TiePolicy::LowestRank;
  } else if (ties == "highest") {
    tie_policy = TiePolicy::HighestRank;
  } else if (ties == "average-rank") {
    tie_policy = TiePolicy::AverageRank;
  } else if (ties == "average-weight") {
    tie_policy = TiePolicy::AverageWeight;
  } else {
    throw PolicyError("unknown tie policy '" + ties +
                      "' (lowest, highest, average-rank, average-weight)");
  }

  if (rule == "fractional") {
    if (ties_given) {
      throw PolicyError("--ties is meaningless with --rule fractional");
    }
    return ScoringPolicy::fractional();
  }
  CountingRule counting;
  if (rule == "strict-less") {
    counting = CountingRule::StrictLess;
  } else if (rule == "inclusive") {
    counting = CountingRule::InclusiveRank;
  } else if (rule == "plus-0.9") {
    counting = CountingRule::PlusPointNine;
  } else {
    throw PolicyError("unknown counting rule '" + rule +
                      "' (strict-less, inclusive, plus-0.9, fractional)");
  }
  return ScoringPolicy::discrete(counting, tie_policy);
}

void emit_report(std::ostream& out, const IndicatorReport& report,
                 Format format, bool by_owner, int precision) {
  switch (format) {
    case Format::Json: {
      json j{{"label", report.label},
             {"papers", report.paper_count},
             {"citations", report.citation_count},
             {"i3", rational_json(report.total_i3, precision)},
             {"r", rational_json(report.total_r, precision)}};
      if (by_owner) {
        json owners = json::object();
        for (const auto& [owner, stats] : report.per_owner) {
          owners[owner] = owner_json(stats, precision);
        }
        j["owners"] = std::move(owners);
      }
      out << j.dump(2) << "\n";
      return;
    }
    case Format::Csv: {
      out << "label,papers,citations,i3,r\n";
      out << report.label << ',' << report.paper_count << ','
          << report.citation_count << ',' << render(report.total_i3, precision)
          << ',' << render(report.total_r, precision) << "\n";
      if (by_owner) {
        out << "owner,papers,citations,i3,r,rank\n";
        for (const auto& [owner, stats] : report.per_owner) {
          out << owner << ',' << stats.paper_count << ','
              << stats.citation_count << ',' << render(stats.i3, precision)
              << ',' << render(stats.r, precision) << ','
              << render(stats.rank, precision) << "\n";
        }
      }
      return;
    }
    case Format::Table: {
      out << "case " << report.label << ": " << report.paper_count
          << " papers, " << report.citation_count << " citations\n";
      out << "I3 = " << render(report.total_i3, precision)
          << "  R = " << decimal_string(report.total_r, precision) << "\n";
      if (by_owner) {
        out << '\n'
            << std::left << std::setw(10) << "owner" << std::right
            << std::setw(8) << "papers" << std::setw(11) << "citations"
            << std::setw(10) << "i3" << std::setw(10) << "r" << std::setw(8)
            << "rank" << "\n";
        for (const auto& [owner, stats] : report.per_owner) {
          out << std::left << std::setw(10) << owner << std::right
              << std::setw(8) << stats.paper_count << std::setw(11)
              << stats.citation_count << std::setw(10)
              << render(stats.i3, precision) << std::setw(10)
              << render(stats.r, precision) << std::setw(8)
              << render(stats.rank, precision) << "\n";
        }
      }
      return;
    }
  }
}

void emit_series(std::ostream& out,
                 const std::vector<IndicatorReport>& reports, Format format,
                 int precision) {
  std::set<std::string> owners;
  for (const IndicatorReport& report : reports) {
    for (const auto& [owner, stats] : report.per_owner) owners.insert(owner);
  }

  if (format == Format::Json) {
    json cases = json::array();
    for (const IndicatorReport& report : reports) {
      json entry{{"case", report.label},
                 {"papers", report.paper_count},
                 {"citations", report.citation_count},
                 {"i3", rational_json(report.total_i3, precision)},
                 {"r", rational_json(report.total_r, precision)}};
      json owner_obj = json::object();
      for (const auto& [owner, stats] : report.per_owner) {
        owner_obj[owner] = owner_json(stats, precision);
      }
      entry["owners"] = std::move(owner_obj);
      cases.push_back(std::move(entry));
    }
    out << json{{"cases", cases}}.dump(2) << "\n";
    return;
  }

  const char sep = format == Format::Csv ? ',' : '\t';
  out << "case" << sep << "n_papers" << sep << "n_citations" << sep << "i3"
      << sep << "r";
  for (const std::string& owner : owners) {
    out << sep << "i3:" << owner << sep << "r:" << owner << sep
        << "rank:" << owner;
  }
  out << "\n";
  for (const IndicatorReport& report : reports) {
    out << report.label << sep << report.paper_count << sep
        << report.citation_count << sep << render(report.total_i3, precision)
        << sep << render(report.total_r, precision);
    for (const std::string& owner : owners) {
      auto it = report.per_owner.find(owner);
      if (it == report.per_owner.end()) {
        out << sep << sep << sep;
      } else {
        out << sep << render(it->second.i3, precision) << sep
            << render(it->second.r, precision) << sep
            << render(it->second.rank, precision);
      }
    }
    out << "\n";
  }
}

void emit_audit(std::ostream& out, const AuditResult& result, Format format,
                int precision) {
  if (format == Format::Json) {
    json violations = json::array();
    for (const Violation& v : result.violations) {
      violations.push_back(json{
          {"kind", kind_name(v.kind)},
          {"from_case", v.from_case},
          {"to_case", v.to_case},
          {"owner_x", v.owner_x},
          {"owner_y", v.owner_y},
          {"r_x_before", rational_json(v.r_x_before, precision)},
          {"r_y_before", rational_json(v.r_y_before, precision)},
          {"r_x_after", rational_json(v.r_x_after, precision)},
          {"r_y_after", rational_json(v.r_y_after, precision)},
          {"rank_x_before", rational_json(v.rank_x_before, precision)},
          {"rank_y_before", rational_json(v.rank_y_before, precision)},
          {"rank_x_after", rational_json(v.rank_x_after, precision)},
          {"rank_y_after", rational_json(v.rank_y_after, precision)},
      });
    }
    json j{{"violations", violations},
           {"count", result.violations.size()},
           {"warning", result.warning}};
    if (result.warning) j["warning_message"] = result.warning_message;
    out << j.dump(2) << "\n";
    return;
  }

  const char sep = format == Format::Csv ? ',' : '\t';
  out << "kind" << sep << "from" << sep << "to" << sep << "pair" << sep
      << "r_before" << sep << "r_after" << sep << "rank_before" << sep
      << "rank_after\n";
  for (const Violation& v : result.violations) {
    out << kind_name(v.kind) << sep << v.from_case << sep << v.to_case << sep
        << v.owner_x << '/' << v.owner_y << sep
        << render(v.r_x_before, precision) << '|'
        << render(v.r_y_before, precision) << sep
        << render(v.r_x_after, precision) << '|'
        << render(v.r_y_after, precision) << sep
        << render(v.rank_x_before, precision) << '|'
        << render(v.rank_y_before, precision) << sep
        << render(v.rank_x_after, precision) << '|'
        << render(v.rank_y_after, precision) << "\n";
  }
  if (format == Format::Table) {
    out << result.violations.size() << " violation(s)\n";
  }
}

}  // namespace prc::io
