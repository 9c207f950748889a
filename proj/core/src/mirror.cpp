#include "hardboard/gadget_template.hpp"

namespace hardboard {

namespace {

Piece swap_color(Piece p) {
  p.color = other(p.color);
  return p;
}

}  // namespace

GadgetTemplate mirror_color(const GadgetTemplate& t) {
  if (t.kind == "crossover_rb")
    throw std::runtime_error(
        "crossover_rb is self-symmetric and has no mirrored counterpart");

  GadgetTemplate m;
  m.kind = t.kind;
  m.game = t.game;
  const int h = t.board.height;
  auto flip = [h](Coord c) { return Coord{c.x, h - 1 - c.y}; };

  m.board.game = t.board.game;
  m.board.resize(t.board.width, h);
  m.board.side_to_move = other(t.board.side_to_move);
  m.board.south_rows = t.board.south_rows > 0 ? h - t.board.south_rows : 0;
  for (const Coord& p : t.board.palaces)
    m.board.palaces.push_back({p.x, h - 1 - (p.y + 2)});
  for (const auto& [c, p] : t.board.pieces())
    m.board.set(flip(c), swap_color(p));

  m.ports = t.ports;
  for (auto& p : m.ports) {
    p.at = flip(p.at);
    p.heading = flip_ns(p.heading);
    p.color = other(p.color);
  }
  for (const auto& [state, c] : t.door_markers)
    m.door_markers[state] = flip(c);
  for (const Coord& c : t.frozen) m.frozen.insert(flip(c));

  m.scenarios = t.scenarios;
  for (auto& s : m.scenarios) {
    s.mover = other(s.mover);
    s.target = flip(s.target);
    for (auto& o : s.overrides) {
      o.at = flip(o.at);
      if (o.kind == ScenarioOverride::MoveTo) o.to = flip(o.to);
      if (o.kind == ScenarioOverride::Add) o.piece = swap_color(o.piece);
    }
  }
  return m;
}

}  // namespace hardboard
