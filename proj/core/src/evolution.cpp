#include "prc/evolution.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

namespace prc {

namespace {

std::int64_t next_id(const Dataset& dataset) {
  std::int64_t max_id = 0;
  for (const Paper& p : dataset.papers) max_id = std::max(max_id, p.id);
  return max_id + 1;
}

void apply_delta(Dataset& dataset, const ScenarioStep& step) {
  const Delta& delta = step.delta;
  if (delta.kind == Delta::Kind::AddPaper) {
    dataset.papers.push_back(Paper{next_id(dataset), delta.owner, 0});
    return;
  }
  Paper* target = nullptr;
  for (Paper& p : dataset.papers) {
    if (p.owner == delta.owner && p.citations == delta.from_count &&
        (target == nullptr || p.id < target->id)) {
      target = &p;
    }
  }
  if (target == nullptr) {
    throw std::invalid_argument(
        "step " + step.case_label + ": no paper of owner '" + delta.owner +
        "' with " + std::to_string(delta.from_count) + " citations");
  }
  ++target->citations;
}

void append_papers(Dataset& dataset, const std::string& owner,
                   std::int64_t citations, int count) {
  for (int i = 0; i < count; ++i) {
    dataset.papers.push_back(Paper{next_id(dataset), owner, citations});
  }
}

}  // namespace

std::vector<Dataset> replay(const Scenario& scenario) {
  std::vector<Dataset> snapshots;
  snapshots.reserve(scenario.steps.size() + 1);
  Dataset current = scenario.initial;
  snapshots.push_back(current);
  for (const ScenarioStep& step : scenario.steps) {
    apply_delta(current, step);
    current.label = step.case_label;
    snapshots.push_back(current);
  }
  return snapshots;
}

Scenario example_a() {
  Scenario scenario;
  scenario.name = "example-a";
  scenario.initial.label = "A1";
  append_papers(scenario.initial, kUnattributed, 0, 20);
  append_papers(scenario.initial, kUnattributed, 1, 10);
  append_papers(scenario.initial, kUnattributed, 3, 6);
  append_papers(scenario.initial, kUnattributed, 5, 2);
  append_papers(scenario.initial, kUnattributed, 7, 2);
  // One designated paper (id 1, the lowest uncited id) advances
  // 0 -> 1 -> ... -> 8 across cases A2..A9. Since id 1 is always the lowest
  // id at its citation count, the lowest-id targeting rule keeps hitting it.
  for (std::int64_t step = 0; step < 8; ++step) {
    scenario.steps.push_back(ScenarioStep{
        "A" + std::to_string(step + 2),
        Delta::add_citation(kUnattributed, step)});
  }
  return scenario;
}

ExampleBEndpoints example_b_endpoints() {
  ExampleBEndpoints endpoints;
  endpoints.b1.label = "B1";
  append_papers(endpoints.b1, "L", 1, 7);
  append_papers(endpoints.b1, "M", 2, 4);
  append_papers(endpoints.b1, "H", 3, 4);

  endpoints.b73 = endpoints.b1;
  endpoints.b73.label = "B73";
  append_papers(endpoints.b73, "N", 0, 29);
  append_papers(endpoints.b73, "N", 1, 8);
  append_papers(endpoints.b73, "N", 2, 5);
  append_papers(endpoints.b73, "N", 3, 3);

  endpoints.owner_roles = {
      {"H", "highly cited"},
      {"M", "moderately cited"},
      {"L", "lowly cited"},
      {"N", "newcomer; owns every added paper and citation"},
  };
  return endpoints;
}

Scenario b_like_scenario() {
  Scenario scenario;
  scenario.name = "b-like";
  scenario.initial = example_b_endpoints().b1;

  int next_case = 2;
  auto push = [&](Delta delta) {
    scenario.steps.push_back(
        ScenarioStep{"B" + std::to_string(next_case++), std::move(delta)});
  };

  // Cases B2..B16: fifteen uncited papers for N in a row, pushing every
  // existing tie group upward.
  for (int i = 0; i < 15; ++i) push(Delta::add_paper("N"));
  // B17: the first citation, compensating the B16 jump.
  push(Delta::add_citation("N", 0));

  // 26 alternating paper/citation pairs, then four trailing papers. The
  // citation schedule 15 x (0->1), 8 x (1->2), 3 x (2->3) ends N's record at
  // 29 x c0, 8 x c1, 5 x c2, 3 x c3, matching the B73 histogram.
  std::vector<std::int64_t> citation_sources;
  citation_sources.insert(citation_sources.end(), 15, 0);
  citation_sources.insert(citation_sources.end(), 8, 1);
  citation_sources.insert(citation_sources.end(), 3, 2);
  for (std::int64_t source : citation_sources) {
    push(Delta::add_paper("N"));
    push(Delta::add_citation("N", source));
  }
  for (int i = 0; i < 4; ++i) push(Delta::add_paper("N"));
  return scenario;
}

Scenario tied_group_crossing_scenario() {
  Scenario scenario;
  scenario.name = "tied-group-crossing";
  scenario.initial.label = "S1";
  append_papers(scenario.initial, "M", 0, 5);
  append_papers(scenario.initial, "H", 0, 4);
  append_papers(scenario.initial, "L", 1, 8);
  append_papers(scenario.initial, "N", 5, 2);
  // n_tot 19: L's singly cited group sits at 900/19 < 50; after two more
  // uncited papers it sits at 1100/21 >= 50 and gains a class.
  scenario.steps.push_back(ScenarioStep{"S2", Delta::add_paper("H")});
  scenario.steps.push_back(ScenarioStep{"S3", Delta::add_paper("L")});
  return scenario;
}

Scenario synth_scenario(std::uint64_t seed, const SynthConfig& config) {
  if (config.owners < 1 || config.steps < 0 || config.initial_papers < 1 ||
      config.max_citations < 0) {
    throw std::invalid_argument("unsatisfiable scenario config");
  }
  std::mt19937_64 rng(seed);
  std::vector<std::string> owners;
  for (int i = 0; i < config.owners; ++i) {
    owners.push_back("S" + std::to_string(i + 1));
  }
  std::uniform_int_distribution<std::size_t> owner_pick(0, owners.size() - 1);

  Scenario scenario;
  scenario.name = "synth-" + std::to_string(seed);
  scenario.initial.label = "T0";
  std::uniform_int_distribution<std::int64_t> initial_citations(
      0, std::min<std::int64_t>(2, config.max_citations));
  for (int i = 0; i < config.initial_papers; ++i) {
    scenario.initial.papers.push_back(Paper{
        i + 1, owners[owner_pick(rng)], initial_citations(rng)});
  }

  // Track the live state so every AddCitation has a target when replayed.
  Dataset state = scenario.initial;
  std::bernoulli_distribution add_paper_coin(0.5);
  for (int step = 0; step < config.steps; ++step) {
    const std::string label = "T" + std::to_string(step + 1);
    Delta delta;
    std::vector<std::size_t> citable;
    for (std::size_t i = 0; i < state.papers.size(); ++i) {
      if (state.papers[i].citations < config.max_citations) {
        citable.push_back(i);
      }
    }
    if (citable.empty() || add_paper_coin(rng)) {
      delta = Delta::add_paper(owners[owner_pick(rng)]);
    } else {
      std::uniform_int_distribution<std::size_t> pick(0, citable.size() - 1);
      const Paper& target = state.papers[citable[pick(rng)]];
      delta = Delta::add_citation(target.owner, target.citations);
    }
    const ScenarioStep scenario_step{label, delta};
    apply_delta(state, scenario_step);
    scenario.steps.push_back(scenario_step);
  }
  return scenario;
}

}  // namespace prc
