#ifndef HARDBOARD_GADGET_TEMPLATE_HPP_
#define HARDBOARD_GADGET_TEMPLATE_HPP_

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "hardboard/board.hpp"

namespace hardboard {

enum class Heading { North, South, East, West };
const char* to_string(Heading h);
std::optional<Heading> parse_heading(std::string_view s);
Heading flip_ns(Heading h);

enum class PortRole { Plain, Open, Traverse, Close, Rapid };
const char* to_string(PortRole r);
std::optional<PortRole> parse_port_role(std::string_view s);

struct TemplatePort {
  std::string name;
  Coord at;
  Heading heading;  // travel direction through the port when used forward
  PortRole role = PortRole::Plain;
  Color color = Color::Red;
  bool is_entrance = false;
};

enum class DoorState { Open, Closed };

enum class Objective { Reach, Capture, PreventReach };

struct ScenarioOverride {
  enum Kind { Add, Remove, MoveTo } kind;
  Coord at;
  Coord to{};       // MoveTo only
  Piece piece{};    // Add only
};

// A bounded adversarial reachability claim over the template's sub-board.
struct Scenario {
  std::string name;
  std::vector<ScenarioOverride> overrides;
  Color mover = Color::Red;
  Objective objective = Objective::Reach;
  Coord target{};
  int ply_budget = 1;
  bool expect_achievable = true;
  bool audit = false;  // designated frozen-audit scenario
};

struct GadgetTemplate {
  std::string kind;  // template kind string, e.g. "door_rrr"
  Game game = Game::Janggi;
  BoardPosition board;  // closed-state arrangement for doors
  std::vector<TemplatePort> ports;
  std::map<DoorState, Coord> door_markers;  // doors only
  std::set<Coord> frozen;
  std::vector<Scenario> scenarios;

  const TemplatePort* port(const std::string& name) const;
  FrozenMask frozen_mask() const;
  // Scenario board: overrides applied, side_to_move = scenario mover.
  BoardPosition scenario_board(const Scenario& s) const;
};

GadgetTemplate parse_template(std::istream& in);
GadgetTemplate parse_template(const std::string& text);
std::string emit_template(const GadgetTemplate& t);

// Color-swapped, north-south-reflected counterpart; door spec letters and
// port colors are remapped (door_rrr <-> door_bbb and so on).
GadgetTemplate mirror_color(const GadgetTemplate& t);

// Placed template: pieces and ports shifted by an origin offset.
struct PlacedTemplate {
  std::vector<std::pair<Coord, Piece>> pieces;
  std::vector<TemplatePort> ports;
  std::map<DoorState, Coord> door_markers;
  Coord origin{};
  int width = 0, height = 0;
};
PlacedTemplate instantiate(const GadgetTemplate& t, Coord origin,
                           int board_w, int board_h);

class TemplateLibrary {
 public:
  // Loads every *.tmpl under dir for both games, then derives missing
  // color mirrors. Throws on parse errors or duplicate (kind, game).
  static TemplateLibrary load(const std::string& dir);
  static TemplateLibrary from_templates(std::vector<GadgetTemplate> templates);

  const GadgetTemplate* find(const std::string& kind, Game game) const;
  const GadgetTemplate& get(const std::string& kind, Game game) const;
  std::vector<const GadgetTemplate*> all() const;
  std::vector<std::string> missing(Game game) const;  // vs required inventory

  static const std::vector<std::string>& required_kinds(Game game);

 private:
  std::map<std::pair<std::string, Game>, GadgetTemplate> templates_;
  void derive_mirrors();
};

}  // namespace hardboard

#endif  // HARDBOARD_GADGET_TEMPLATE_HPP_
