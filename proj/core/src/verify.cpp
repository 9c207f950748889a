#include "hardboard/verify.hpp"

#include <sstream>

#include "hardboard/rules.hpp"

namespace hardboard {

SearchResult run_scenario(const GadgetTemplate& t, const Scenario& s,
                          const SearchLimits& limits) {
  BoardPosition board = t.scenario_board(s);
  FrozenMask frozen = t.frozen_mask();
  if (s.objective == Objective::PreventReach) {
    // the mover defends; achievability means the opponent never reaches
    SearchResult reach = search_objective(board, other(s.mover),
                                          Objective::Reach, s.target,
                                          s.ply_budget, &frozen, limits);
    if (reach.outcome == SearchOutcome::BudgetExhausted) return reach;
    SearchResult out;
    out.nodes = reach.nodes;
    out.outcome = reach.outcome == SearchOutcome::Achievable
                      ? SearchOutcome::NotAchievable
                      : SearchOutcome::Achievable;
    out.principal_line = reach.principal_line;
    return out;
  }
  return search_objective(board, s.mover, s.objective, s.target, s.ply_budget,
                          &frozen, limits);
}

bool TemplateReport::all_pass() const {
  for (const auto& s : scenarios)
    if (!s.pass) return false;
  return !frozen_audit_ran || frozen_audit_pass;
}

TemplateReport verify_template(const GadgetTemplate& t,
                               const SearchLimits& limits) {
  TemplateReport report;
  report.kind = t.kind;
  report.game = t.game;
  for (const Scenario& s : t.scenarios) {
    SearchResult r = run_scenario(t, s, limits);
    ScenarioOutcome o;
    o.scenario = s.name;
    o.outcome = r.outcome;
    o.nodes = r.nodes;
    o.line = r.principal_line;
    o.pass = (r.outcome == SearchOutcome::Achievable) == s.expect_achievable &&
             r.outcome != SearchOutcome::BudgetExhausted;
    report.scenarios.push_back(std::move(o));
  }

  // frozen audit: the designated scenario rerun with nothing frozen and a
  // little extra budget must not change outcome
  const Scenario* audit = nullptr;
  for (const Scenario& s : t.scenarios)
    if (s.audit) audit = &s;
  if (!audit && !t.scenarios.empty()) audit = &t.scenarios.front();
  if (audit) {
    report.frozen_audit_ran = true;
    BoardPosition board = t.scenario_board(*audit);
    Color attacker = audit->objective == Objective::PreventReach
                         ? other(audit->mover)
                         : audit->mover;
    Objective obj = audit->objective == Objective::PreventReach
                        ? Objective::Reach
                        : audit->objective;
    SearchResult unfrozen = search_objective(
        board, attacker, obj, audit->target, audit->ply_budget + 4, nullptr,
        limits);
    bool achieved = unfrozen.outcome == SearchOutcome::Achievable;
    bool expected_reach = audit->objective == Objective::PreventReach
                              ? !audit->expect_achievable
                              : audit->expect_achievable;
    report.frozen_audit_pass =
        unfrozen.outcome != SearchOutcome::BudgetExhausted &&
        achieved == expected_reach;
  }
  return report;
}

std::string format_report(const TemplateReport& r) {
  std::ostringstream out;
  std::string id = std::string(to_string(r.game)) + "/" + r.kind;
  for (const auto& s : r.scenarios) {
    out << "template " << id << " scenario " << s.scenario << ' '
        << (s.outcome == SearchOutcome::BudgetExhausted
                ? "budget-exhausted"
                : (s.pass ? "pass" : "fail"))
        << " nodes " << s.nodes;
    if (!s.line.empty()) {
      out << " line";
      for (const auto& m : s.line) out << ' ' << move_name(m);
    }
    out << '\n';
  }
  if (r.frozen_audit_ran)
    out << "template " << id << " scenario frozen-audit "
        << (r.frozen_audit_pass ? "pass" : "fail") << " nodes 0\n";
  return out.str();
}

std::vector<std::string> static_checks(const BoardPosition& b,
                                       const PlacementManifest* manifest) {
  std::vector<std::string> violations;
  auto complain = [&](std::string msg) {
    violations.push_back(std::move(msg));
  };

  for (const Coord& p : b.palaces) {
    if (p.x < 0 || p.y < 0 || p.x + 3 > b.width || p.y + 3 > b.height)
      complain("palace out of bounds at " + coord_name(p));
  }

  for (Color c : {Color::Red, Color::Black}) {
    int generals = 0;
    for (const auto& [coord, piece] : b.pieces())
      if (piece.color == c && piece.kind == PieceKind::General) ++generals;
    if (generals != 1)
      complain(std::string(to_string(c)) + " has " +
               std::to_string(generals) + " generals");
  }

  if (b.game == Game::Xiangqi && generals_facing(b))
    complain("generals mutually exposed");

  if (b.game == Game::Xiangqi && b.south_rows > 0) {
    for (const auto& [coord, piece] : b.pieces()) {
      if (piece.kind != PieceKind::Elephant) continue;
      bool south = coord.y < b.south_rows;
      if ((piece.color == Color::Red) != south)
        complain(std::string(to_string(piece.color)) + " elephant across the river at " +
                 coord_name(coord));
    }
  }

  if (manifest) {
    std::vector<std::pair<std::string, ManifestRegion>> regions;
    for (const auto& g : manifest->gadgets)
      regions.emplace_back("gadget " + std::to_string(g.node_id), g.region);
    for (const auto& w : manifest->wires)
      for (const Coord& o : w.tile_origins)
        regions.emplace_back(
            "wire " + std::to_string(w.edge_id),
            ManifestRegion{o, {o.x + w.tile_w - 1, o.y + w.tile_h - 1}});
    for (size_t i = 0; i < regions.size(); ++i)
      for (size_t j = i + 1; j < regions.size(); ++j)
        if (regions[i].second.overlaps(regions[j].second))
          complain(regions[i].first + " overlaps " + regions[j].first);

    for (const auto& p : manifest->ports) {
      auto piece = b.at(p.at);
      if (piece && !(piece->kind == PieceKind::Cannon && piece->color == p.color))
        complain("port square " + coord_name(p.at) +
                 " holds an unexpected piece");
    }
  }
  return violations;
}

}  // namespace hardboard
