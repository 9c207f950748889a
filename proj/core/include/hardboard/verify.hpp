#ifndef HARDBOARD_VERIFY_HPP_
#define HARDBOARD_VERIFY_HPP_

#include <string>
#include <vector>

#include "hardboard/gadget_template.hpp"
#include "hardboard/layout.hpp"
#include "hardboard/search.hpp"

namespace hardboard {

SearchResult run_scenario(const GadgetTemplate& t, const Scenario& s,
                          const SearchLimits& limits = {});

struct ScenarioOutcome {
  std::string scenario;
  bool pass = false;
  SearchOutcome outcome = SearchOutcome::NotAchievable;
  uint64_t nodes = 0;
  std::vector<Move> line;
};

struct TemplateReport {
  std::string kind;
  Game game = Game::Janggi;
  std::vector<ScenarioOutcome> scenarios;
  bool frozen_audit_ran = false;
  bool frozen_audit_pass = true;
  bool all_pass() const;
};

// Runs every scenario plus the designated frozen-audit rerun.
TemplateReport verify_template(const GadgetTemplate& t,
                               const SearchLimits& limits = {});

std::string format_report(const TemplateReport& r);

// Whole-board audit; empty result means a clean board.
std::vector<std::string> static_checks(const BoardPosition& b,
                                       const PlacementManifest* manifest);

}  // namespace hardboard

#endif  // HARDBOARD_VERIFY_HPP_
