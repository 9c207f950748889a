#include "hardboard/gadget_template.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "hardboard/formula.hpp"  // ParseError

namespace hardboard {

const char* to_string(Heading h) {
  switch (h) {
    case Heading::North: return "north";
    case Heading::South: return "south";
    case Heading::East: return "east";
    case Heading::West: return "west";
  }
  return "?";
}

std::optional<Heading> parse_heading(std::string_view s) {
  if (s == "north") return Heading::North;
  if (s == "south") return Heading::South;
  if (s == "east") return Heading::East;
  if (s == "west") return Heading::West;
  return std::nullopt;
}

Heading flip_ns(Heading h) {
  if (h == Heading::North) return Heading::South;
  if (h == Heading::South) return Heading::North;
  return h;
}

const char* to_string(PortRole r) {
  switch (r) {
    case PortRole::Plain: return "plain";
    case PortRole::Open: return "open";
    case PortRole::Traverse: return "traverse";
    case PortRole::Close: return "close";
    case PortRole::Rapid: return "rapid";
  }
  return "?";
}

std::optional<PortRole> parse_port_role(std::string_view s) {
  if (s == "plain") return PortRole::Plain;
  if (s == "open") return PortRole::Open;
  if (s == "traverse") return PortRole::Traverse;
  if (s == "close") return PortRole::Close;
  if (s == "rapid") return PortRole::Rapid;
  return std::nullopt;
}

const TemplatePort* GadgetTemplate::port(const std::string& name) const {
  for (const auto& p : ports)
    if (p.name == name) return &p;
  return nullptr;
}

FrozenMask GadgetTemplate::frozen_mask() const {
  FrozenMask mask(static_cast<size_t>(board.width) * board.height, 0);
  for (const Coord& c : frozen)
    mask[static_cast<size_t>(c.y) * board.width + c.x] = 1;
  return mask;
}

BoardPosition GadgetTemplate::scenario_board(const Scenario& s) const {
  BoardPosition b = board;
  for (const auto& o : s.overrides) {
    switch (o.kind) {
      case ScenarioOverride::Add:
        if (!b.in_bounds(o.at))
          throw std::out_of_range("override add out of bounds");
        b.set(o.at, o.piece);
        break;
      case ScenarioOverride::Remove:
        b.set(o.at, std::nullopt);
        break;
      case ScenarioOverride::MoveTo: {
        auto p = b.at(o.at);
        if (!p)
          throw std::out_of_range("override move from empty square " +
                                  coord_name(o.at));
        b.set(o.at, std::nullopt);
        b.set(o.to, p);
        break;
      }
    }
  }
  b.side_to_move = s.mover;
  return b;
}

namespace {

Coord need_coord(std::istringstream& iss, int line_no) {
  std::string w;
  if (!(iss >> w)) throw ParseError("missing coordinate", line_no);
  auto c = parse_coord(w);
  if (!c) throw ParseError("bad coordinate '" + w + "'", line_no);
  return *c;
}

Color need_color(std::istringstream& iss, int line_no) {
  std::string w;
  iss >> w;
  if (w == "red") return Color::Red;
  if (w == "black") return Color::Black;
  throw ParseError("expected red or black", line_no);
}

}  // namespace

GadgetTemplate parse_template(std::istream& in) {
  GadgetTemplate t;
  std::ostringstream position_lines;
  std::string line;
  int line_no = 0;
  Scenario* open_scenario = nullptr;
  std::vector<Scenario> scenarios;
  bool saw_kind = false;

  while (std::getline(in, line)) {
    ++line_no;
    size_t hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    std::istringstream iss(line);
    std::string word;
    if (!(iss >> word)) continue;

    if (open_scenario) {
      Scenario& s = *open_scenario;
      if (word == "mover") {
        s.mover = need_color(iss, line_no);
      } else if (word == "objective") {
        std::string kind;
        iss >> kind;
        if (kind == "reach")
          s.objective = Objective::Reach;
        else if (kind == "capture")
          s.objective = Objective::Capture;
        else if (kind == "prevent_reach")
          s.objective = Objective::PreventReach;
        else
          throw ParseError("unknown objective '" + kind + "'", line_no);
        s.target = need_coord(iss, line_no);
      } else if (word == "budget") {
        if (!(iss >> s.ply_budget) || s.ply_budget < 1)
          throw ParseError("budget must be >= 1", line_no);
      } else if (word == "expect") {
        std::string e;
        iss >> e;
        if (e == "achievable")
          s.expect_achievable = true;
        else if (e == "not-achievable")
          s.expect_achievable = false;
        else
          throw ParseError("expect must be achievable or not-achievable",
                           line_no);
      } else if (word == "override") {
        std::string k;
        iss >> k;
        ScenarioOverride o{};
        if (k == "add") {
          std::string code;
          iss >> code;
          auto p = parse_piece_code(code);
          if (!p) throw ParseError("bad piece code '" + code + "'", line_no);
          o.kind = ScenarioOverride::Add;
          o.piece = *p;
          o.at = need_coord(iss, line_no);
        } else if (k == "remove") {
          o.kind = ScenarioOverride::Remove;
          o.at = need_coord(iss, line_no);
        } else if (k == "move") {
          o.kind = ScenarioOverride::MoveTo;
          o.at = need_coord(iss, line_no);
          o.to = need_coord(iss, line_no);
        } else {
          throw ParseError("unknown override '" + k + "'", line_no);
        }
        s.overrides.push_back(o);
      } else if (word == "audit") {
        s.audit = true;
      } else if (word == "end") {
        open_scenario = nullptr;
      } else {
        throw ParseError("unknown scenario line '" + word + "'", line_no);
      }
      continue;
    }

    if (word == "kind") {
      iss >> t.kind;
      saw_kind = true;
    } else if (word == "port") {
      TemplatePort p;
      iss >> p.name;
      p.at = need_coord(iss, line_no);
      std::string h, r;
      iss >> h;
      auto heading = parse_heading(h);
      if (!heading) throw ParseError("bad heading '" + h + "'", line_no);
      p.heading = *heading;
      iss >> r;
      auto role = parse_port_role(r);
      if (!role) throw ParseError("bad port role '" + r + "'", line_no);
      p.role = *role;
      p.color = need_color(iss, line_no);
      p.is_entrance = p.name == "in" || p.name.starts_with("in_") ||
                      (p.name.size() > 3 &&
                       p.name.compare(p.name.size() - 3, 3, "_in") == 0);
      t.ports.push_back(p);
    } else if (word == "marker") {
      std::string state;
      iss >> state;
      Coord c = need_coord(iss, line_no);
      if (state == "open")
        t.door_markers[DoorState::Open] = c;
      else if (state == "closed")
        t.door_markers[DoorState::Closed] = c;
      else
        throw ParseError("marker state must be open or closed", line_no);
    } else if (word == "frozen") {
      std::string w;
      while (iss >> w) {
        auto c = parse_coord(w);
        if (!c) throw ParseError("bad coordinate '" + w + "'", line_no);
        t.frozen.insert(*c);
      }
    } else if (word == "scenario") {
      Scenario s;
      if (!(iss >> s.name)) throw ParseError("scenario needs a name", line_no);
      scenarios.push_back(s);
      open_scenario = &scenarios.back();
    } else {
      position_lines << line << '\n';
    }
  }
  if (open_scenario) throw ParseError("unterminated scenario block", line_no);
  if (!saw_kind) throw ParseError("template needs a kind line", line_no);

  t.board = parse_position(position_lines.str());
  t.scenarios = std::move(scenarios);

  for (const auto& p : t.ports)
    if (!t.board.in_bounds(p.at))
      throw ParseError("port " + p.name + " out of bounds", line_no);
  for (const auto& [state, c] : t.door_markers)
    if (!t.board.in_bounds(c))
      throw ParseError("marker out of bounds", line_no);
  t.game = t.board.game;
  return t;
}

GadgetTemplate parse_template(const std::string& text) {
  std::istringstream in(text);
  return parse_template(in);
}

std::string emit_template(const GadgetTemplate& t) {
  std::ostringstream out;
  out << "kind " << t.kind << '\n';
  out << emit_position(t.board);
  for (const auto& p : t.ports)
    out << "port " << p.name << ' ' << coord_name(p.at) << ' '
        << to_string(p.heading) << ' ' << to_string(p.role) << ' '
        << to_string(p.color) << '\n';
  if (auto it = t.door_markers.find(DoorState::Closed);
      it != t.door_markers.end())
    out << "marker closed " << coord_name(it->second) << '\n';
  if (auto it = t.door_markers.find(DoorState::Open);
      it != t.door_markers.end())
    out << "marker open " << coord_name(it->second) << '\n';
  if (!t.frozen.empty()) {
    out << "frozen";
    for (const Coord& c : t.frozen) out << ' ' << coord_name(c);
    out << '\n';
  }
  for (const Scenario& s : t.scenarios) {
    out << "scenario " << s.name << '\n';
    out << "  mover " << to_string(s.mover) << '\n';
    out << "  objective "
        << (s.objective == Objective::Reach
                ? "reach"
                : s.objective == Objective::Capture ? "capture"
                                                    : "prevent_reach")
        << ' ' << coord_name(s.target) << '\n';
    out << "  budget " << s.ply_budget << '\n';
    out << "  expect " << (s.expect_achievable ? "achievable" : "not-achievable")
        << '\n';
    for (const auto& o : s.overrides) {
      if (o.kind == ScenarioOverride::Add)
        out << "  override add " << piece_code(o.piece) << ' '
            << coord_name(o.at) << '\n';
      else if (o.kind == ScenarioOverride::Remove)
        out << "  override remove " << coord_name(o.at) << '\n';
      else
        out << "  override move " << coord_name(o.at) << ' '
            << coord_name(o.to) << '\n';
    }
    if (s.audit) out << "  audit\n";
    out << "end\n";
  }
  return out.str();
}

PlacedTemplate instantiate(const GadgetTemplate& t, Coord origin, int board_w,
                           int board_h) {
  if (origin.x < 0 || origin.y < 0 ||
      origin.x + t.board.width > board_w ||
      origin.y + t.board.height > board_h)
    throw std::out_of_range("template footprint out of board bounds");
  PlacedTemplate placed;
  placed.origin = origin;
  placed.width = t.board.width;
  placed.height = t.board.height;
  for (const auto& [c, p] : t.board.pieces())
    placed.pieces.emplace_back(Coord{c.x + origin.x, c.y + origin.y}, p);
  placed.ports = t.ports;
  for (auto& p : placed.ports) {
    p.at.x += origin.x;
    p.at.y += origin.y;
  }
  for (const auto& [state, c] : t.door_markers)
    placed.door_markers[state] = {c.x + origin.x, c.y + origin.y};
  return placed;
}

TemplateLibrary TemplateLibrary::load(const std::string& dir) {
  namespace fs = std::filesystem;
  std::vector<GadgetTemplate> found;
  std::vector<fs::path> files;
  if (fs::exists(dir)) {
    for (const auto& entry : fs::recursive_directory_iterator(dir))
      if (entry.is_regular_file() && entry.path().extension() == ".tmpl")
        files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end());
  for (const auto& path : files) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path.string());
    try {
      found.push_back(parse_template(in));
    } catch (const ParseError& e) {
      throw std::runtime_error(path.string() + ": " + e.what());
    }
  }
  return from_templates(std::move(found));
}

TemplateLibrary TemplateLibrary::from_templates(
    std::vector<GadgetTemplate> templates) {
  TemplateLibrary lib;
  for (auto& t : templates) {
    auto key = std::make_pair(t.kind, t.game);
    if (lib.templates_.count(key))
      throw std::runtime_error("duplicate template " + t.kind + "/" +
                               to_string(t.game));
    lib.templates_.emplace(std::move(key), std::move(t));
  }
  lib.derive_mirrors();
  return lib;
}

void TemplateLibrary::derive_mirrors() {
  // source kind -> mirrored kind
  static const std::vector<std::pair<std::string, std::string>> kMirrors = {
      {"start", "start_black"},
      {"finish", "finish_black"},
      {"turn", "turn_black"},
      {"switch", "switch_black"},
      {"one_way", "one_way_black"},
      {"door_rrr", "door_bbb"},
      {"door_rbr", "door_brb"},
      {"door_bbr", "door_rrb"},
      {"wire_straight", "wire_straight_black"},
      {"wire_corner", "wire_corner_black"},
  };
  for (Game game : {Game::Janggi, Game::Xiangqi}) {
    for (const auto& [src, dst] : kMirrors) {
      auto skey = std::make_pair(src, game);
      auto dkey = std::make_pair(dst, game);
      if (templates_.count(dkey) || !templates_.count(skey)) continue;
      GadgetTemplate m = mirror_color(templates_.at(skey));
      m.kind = dst;
      templates_.emplace(dkey, std::move(m));
    }
    // Janggi's crossover serves all three color pairs.
    if (game == Game::Janggi) {
      auto base = std::make_pair(std::string("crossover"), game);
      if (templates_.count(base)) {
        for (const char* alias : {"crossover_rb", "crossover_bb"}) {
          auto akey = std::make_pair(std::string(alias), game);
          if (templates_.count(akey)) continue;
          GadgetTemplate copy = templates_.at(base);
          copy.kind = alias;
          templates_.emplace(akey, std::move(copy));
        }
      }
    } else {
      auto base = std::make_pair(std::string("crossover"), game);
      auto bkey = std::make_pair(std::string("crossover_bb"), game);
      if (templates_.count(base) && !templates_.count(bkey)) {
        GadgetTemplate m = mirror_color(templates_.at(base));
        m.kind = "crossover_bb";
        templates_.emplace(bkey, std::move(m));
      }
    }
  }
}

const GadgetTemplate* TemplateLibrary::find(const std::string& kind,
                                            Game game) const {
  auto it = templates_.find(std::make_pair(kind, game));
  return it == templates_.end() ? nullptr : &it->second;
}

const GadgetTemplate& TemplateLibrary::get(const std::string& kind,
                                           Game game) const {
  const GadgetTemplate* t = find(kind, game);
  if (!t)
    throw std::runtime_error("missing template " + kind + "/" +
                             to_string(game));
  return *t;
}

std::vector<const GadgetTemplate*> TemplateLibrary::all() const {
  std::vector<const GadgetTemplate*> out;
  for (const auto& [key, t] : templates_) out.push_back(&t);
  return out;
}

const std::vector<std::string>& TemplateLibrary::required_kinds(Game game) {
  static const std::vector<std::string> janggi = {
      "start",        "finish",        "turn",         "switch",
      "one_way",      "crossover",     "door_simple",  "door_rrr",
      "door_rbr",     "door_bbr",      "wire_straight", "wire_corner",
      "border_corridor", "border_wall", "general_box",
      // derived at load time
      "start_black",  "finish_black",  "turn_black",   "switch_black",
      "one_way_black", "door_bbb",     "door_brb",     "door_rrb",
      "wire_straight_black", "wire_corner_black", "crossover_rb",
      "crossover_bb"};
  static const std::vector<std::string> xiangqi = {
      "start",        "finish",        "turn",         "switch",
      "one_way",      "crossover",     "crossover_rb", "door_simple",
      "door_rrr",     "door_rbr",      "door_bbr",     "wire_straight",
      "wire_corner",  "border_corridor", "border_wall", "general_box",
      "start_black",  "finish_black",  "turn_black",   "switch_black",
      "one_way_black", "door_bbb",     "door_brb",     "door_rrb",
      "wire_straight_black", "wire_corner_black", "crossover_bb"};
  return game == Game::Janggi ? janggi : xiangqi;
}

std::vector<std::string> TemplateLibrary::missing(Game game) const {
  std::vector<std::string> out;
  for (const auto& kind : required_kinds(game))
    if (!find(kind, game)) out.push_back(kind);
  return out;
}

}  // namespace hardboard
