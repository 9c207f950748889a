#include "hardboard/rules.hpp"

#include <array>
#include <stdexcept>

namespace hardboard {

namespace {

constexpr std::array<Coord, 4> kOrth = {Coord{1, 0}, Coord{-1, 0}, Coord{0, 1},
                                        Coord{0, -1}};
constexpr std::array<Coord, 4> kDiag = {Coord{1, 1}, Coord{1, -1},
                                        Coord{-1, 1}, Coord{-1, -1}};

Coord add(Coord a, Coord b) { return {a.x + b.x, a.y + b.y}; }

int forward(Color c) { return c == Color::Red ? 1 : -1; }

bool is_center(Coord palace, Coord c) {
  return c.x == palace.x + 1 && c.y == palace.y + 1;
}

// Diagonal palace lines run corner-center-corner, so a unit diagonal step
// is on a line iff one endpoint is the palace center.
bool diagonal_on_lines(const BoardPosition& b, Coord from, Coord to) {
  auto pf = b.palace_at(from);
  auto pt = b.palace_at(to);
  if (!pf || !pt || *pf != *pt) return false;
  return is_center(*pf, from) || is_center(*pf, to);
}

bool elephant_side_ok(const BoardPosition& b, Color c, Coord to) {
  if (b.game != Game::Xiangqi || b.south_rows <= 0) return true;
  return c == Color::Red ? to.y < b.south_rows : to.y >= b.south_rows;
}

bool soldier_crossed(const BoardPosition& b, Color c, Coord at) {
  if (b.game != Game::Xiangqi || b.south_rows <= 0) return false;
  return c == Color::Red ? at.y >= b.south_rows : at.y < b.south_rows;
}

// Janggi elephant path: one orthogonal step, then two diagonal steps
// continuing outward. Yields (mid1, mid2, destination).
struct ElephantPath {
  Coord mid1, mid2, dest;
};

void janggi_elephant_paths(Coord from, std::vector<ElephantPath>& out) {
  out.clear();
  for (const Coord& o : kOrth) {
    Coord m1 = add(from, o);
    for (const Coord& d : kDiag) {
      // the diagonal must continue the orthogonal direction
      if (o.x != 0 && d.x != o.x) continue;
      if (o.y != 0 && d.y != o.y) continue;
      Coord m2 = add(m1, d);
      Coord dest = add(m2, d);
      out.push_back({m1, m2, dest});
    }
  }
}

struct HorsePath {
  Coord leg, dest;
};

void horse_paths(Coord from, std::vector<HorsePath>& out) {
  out.clear();
  for (const Coord& o : kOrth) {
    Coord leg = add(from, o);
    for (int side = -1; side <= 1; side += 2) {
      Coord d = o.x != 0 ? Coord{o.x, side} : Coord{side, o.y};
      out.push_back({leg, add(leg, d)});
    }
  }
}

}  // namespace

std::string move_name(const Move& m) {
  if (m.is_pass) return "pass";
  return coord_name(m.from) + coord_name(m.to);
}

bool square_attacked(const BoardPosition& b, Coord target, Color by) {
  const bool janggi = b.game == Game::Janggi;
  auto target_piece = b.at(target);

  // Rook and cannon along orthogonal rays from the target.
  for (const Coord& dir : kOrth) {
    Coord c = add(target, dir);
    bool passed_screen = false;
    Coord screen{};
    while (b.in_bounds(c)) {
      auto p = b.at(c);
      if (p) {
        if (!passed_screen) {
          if (p->color == by && p->kind == PieceKind::Rook) return true;
          passed_screen = true;
          screen = c;
        } else {
          if (p->color == by && p->kind == PieceKind::Cannon) {
            bool screen_ok = !janggi || b.at(screen)->kind != PieceKind::Cannon;
            bool target_ok =
                !janggi ||
                (target_piece && target_piece->kind == PieceKind::Cannon
                     ? false
                     : true);
            if (screen_ok && target_ok) return true;
          }
          break;
        }
      }
      c = add(c, dir);
    }
  }

  // Horse attacks: the leg is the horse's first orthogonal step.
  for (const Coord& o : kOrth) {
    for (int side = -1; side <= 1; side += 2) {
      Coord d = o.x != 0 ? Coord{o.x, side} : Coord{side, o.y};
      Coord from = add(add(target, o), d);  // candidate horse square
      if (!b.in_bounds(from)) continue;
      auto p = b.at(from);
      if (!p || p->color != by || p->kind != PieceKind::Horse) continue;
      Coord step = {target.x - from.x, target.y - from.y};
      Coord leg = std::abs(step.x) == 2 ? Coord{from.x + step.x / 2, from.y}
                                        : Coord{from.x, from.y + step.y / 2};
      if (b.in_bounds(leg) && b.empty_at(leg)) return true;
    }
  }

  // Elephant attacks.
  if (janggi) {
    static thread_local std::vector<ElephantPath> paths;
    for (int dx = -3; dx <= 3; ++dx) {
      for (int dy = -3; dy <= 3; ++dy) {
        if (!((std::abs(dx) == 2 && std::abs(dy) == 3) ||
              (std::abs(dx) == 3 && std::abs(dy) == 2)))
          continue;
        Coord from = {target.x + dx, target.y + dy};
        if (!b.in_bounds(from)) continue;
        auto p = b.at(from);
        if (!p || p->color != by || p->kind != PieceKind::Elephant) continue;
        janggi_elephant_paths(from, paths);
        for (const auto& ep : paths) {
          if (ep.dest == target && b.in_bounds(ep.mid1) &&
              b.in_bounds(ep.mid2) && b.empty_at(ep.mid1) &&
              b.empty_at(ep.mid2))
            return true;
        }
      }
    }
  } else {
    for (const Coord& d : kDiag) {
      Coord from = {target.x + 2 * d.x, target.y + 2 * d.y};
      if (!b.in_bounds(from)) continue;
      auto p = b.at(from);
      if (!p || p->color != by || p->kind != PieceKind::Elephant) continue;
      Coord mid = add(from, {-d.x, -d.y});
      if (b.empty_at(mid) && elephant_side_ok(b, by, target)) return true;
    }
  }

  // Soldier attacks.
  {
    Coord from = {target.x, target.y - forward(by)};
    if (b.in_bounds(from)) {
      auto p = b.at(from);
      if (p && p->color == by && p->kind == PieceKind::Soldier) return true;
    }
    for (int side = -1; side <= 1; side += 2) {
      Coord sfrom = {target.x + side, target.y};
      if (!b.in_bounds(sfrom)) continue;
      auto p = b.at(sfrom);
      if (!p || p->color != by || p->kind != PieceKind::Soldier) continue;
      bool sideways_ok =
          janggi || soldier_crossed(b, by, sfrom);
      if (sideways_ok) return true;
    }
    if (janggi) {
      // forward diagonal inside a palace
      for (int side = -1; side <= 1; side += 2) {
        Coord from2 = {target.x + side, target.y - forward(by)};
        if (!b.in_bounds(from2)) continue;
        auto p = b.at(from2);
        if (!p || p->color != by || p->kind != PieceKind::Soldier) continue;
        if (diagonal_on_lines(b, from2, target)) return true;
      }
    }
  }

  // General and advisor attacks within their palace.
  for (const Coord& d : kOrth) {
    Coord from = add(target, d);
    if (!b.in_bounds(from)) continue;
    auto p = b.at(from);
    if (!p || p->color != by) continue;
    bool confined = p->kind == PieceKind::General ||
                    (janggi && p->kind == PieceKind::Advisor);
    if (!confined) continue;
    if (b.game == Game::Xiangqi && p->kind == PieceKind::Advisor) continue;
    auto pf = b.palace_at(from);
    auto pt = b.palace_at(target);
    if (pf && pt && *pf == *pt) return true;
  }
  for (const Coord& d : kDiag) {
    Coord from = add(target, d);
    if (!b.in_bounds(from)) continue;
    auto p = b.at(from);
    if (!p || p->color != by) continue;
    bool diagonal_mover =
        (b.game == Game::Xiangqi && p->kind == PieceKind::Advisor) ||
        (janggi && (p->kind == PieceKind::General ||
                    p->kind == PieceKind::Advisor));
    if (!diagonal_mover) continue;
    if (diagonal_on_lines(b, from, target)) return true;
  }

  // Janggi rook/cannon along palace diagonals.
  if (janggi) {
    for (const Coord& origin : b.palaces) {
      Coord center = {origin.x + 1, origin.y + 1};
      auto tp = b.palace_at(target);
      if (!tp || *tp != origin) continue;
      bool target_center = target == center;
      bool target_corner =
          (target.x == origin.x || target.x == origin.x + 2) &&
          (target.y == origin.y || target.y == origin.y + 2);
      if (!target_center && !target_corner) continue;
      // scan the two diagonals of this palace
      for (const Coord& d : kDiag) {
        Coord corner = {center.x + d.x, center.y + d.y};
        // rook: corner->center, center->corner, corner->corner via center
        // cannon: corner->opposite corner over the center screen
        auto check_line = [&](Coord a, Coord mid, Coord c2) {
          // piece at a attacking along a-mid-c2
          auto p = b.at(a);
          if (!p || p->color != by) return false;
          if (p->kind == PieceKind::Rook) {
            if (target == mid) return true;
            if (target == c2 && b.empty_at(mid)) return true;
          }
          if (p->kind == PieceKind::Cannon && target == c2) {
            auto s = b.at(mid);
            if (s && s->kind != PieceKind::Cannon &&
                !(target_piece && target_piece->kind == PieceKind::Cannon))
              return true;
          }
          return false;
        };
        Coord opposite = {center.x - d.x, center.y - d.y};
        if (check_line(corner, center, opposite)) return true;
        // rook sitting at the center attacking a corner
        auto pc = b.at(center);
        if (pc && pc->color == by && pc->kind == PieceKind::Rook &&
            target_corner)
          return true;
      }
    }
  }

  return false;
}

bool in_check(const BoardPosition& b, Color c) {
  auto g = b.find_general(c);
  if (!g) return false;
  return square_attacked(b, *g, other(c));
}

bool generals_facing(const BoardPosition& b) {
  if (b.game != Game::Xiangqi) return false;
  auto rg = b.find_general(Color::Red);
  auto bg = b.find_general(Color::Black);
  if (!rg || !bg || rg->x != bg->x) return false;
  int lo = std::min(rg->y, bg->y), hi = std::max(rg->y, bg->y);
  for (int y = lo + 1; y < hi; ++y)
    if (!b.empty_at({rg->x, y})) return false;
  return true;
}

namespace {

class MoveGen {
 public:
  MoveGen(const BoardPosition& b, const FrozenMask* frozen)
      : b_(b), frozen_(frozen) {}

  std::vector<Move> pseudo() {
    std::vector<Move> out;
    for (int y = 0; y < b_.height; ++y) {
      for (int x = 0; x < b_.width; ++x) {
        Coord c{x, y};
        auto p = b_.at(c);
        if (!p || p->color != b_.side_to_move) continue;
        if (frozen_ &&
            (*frozen_)[static_cast<size_t>(y) * b_.width + x])
          continue;
        gen_piece(c, *p, out);
      }
    }
    return out;
  }

 private:
  void push(Coord from, Coord to, Color mover, std::vector<Move>& out) {
    if (!b_.in_bounds(to)) return;
    auto t = b_.at(to);
    if (t && t->color == mover) return;
    out.push_back({from, to, false});
  }

  void gen_piece(Coord c, Piece p, std::vector<Move>& out) {
    switch (p.kind) {
      case PieceKind::General:
      case PieceKind::Advisor:
        gen_palace_piece(c, p, out);
        break;
      case PieceKind::Elephant:
        gen_elephant(c, p, out);
        break;
      case PieceKind::Horse:
        gen_horse(c, p, out);
        break;
      case PieceKind::Rook:
        gen_rook(c, p, out);
        break;
      case PieceKind::Cannon:
        gen_cannon(c, p, out);
        break;
      case PieceKind::Soldier:
        gen_soldier(c, p, out);
        break;
    }
  }

  void gen_palace_piece(Coord c, Piece p, std::vector<Move>& out) {
    auto palace = b_.palace_at(c);
    if (!palace) return;  // confined pieces outside a palace cannot move
    bool orth_ok = p.kind == PieceKind::General || b_.game == Game::Janggi;
    bool diag_ok = p.kind == PieceKind::Advisor || b_.game == Game::Janggi;
    if (orth_ok) {
      for (const Coord& d : kOrth) {
        Coord to = add(c, d);
        auto pt = b_.palace_at(to);
        if (pt && *pt == *palace) push(c, to, p.color, out);
      }
    }
    if (diag_ok) {
      for (const Coord& d : kDiag) {
        Coord to = add(c, d);
        if (b_.in_bounds(to) && diagonal_on_lines(b_, c, to))
          push(c, to, p.color, out);
      }
    }
  }

  void gen_elephant(Coord c, Piece p, std::vector<Move>& out) {
    if (b_.game == Game::Janggi) {
      static thread_local std::vector<ElephantPath> paths;
      janggi_elephant_paths(c, paths);
      for (const auto& ep : paths) {
        if (!b_.in_bounds(ep.dest)) continue;
        if (!b_.in_bounds(ep.mid1) || !b_.in_bounds(ep.mid2)) continue;
        if (!b_.empty_at(ep.mid1) || !b_.empty_at(ep.mid2)) continue;
        push(c, ep.dest, p.color, out);
      }
    } else {
      for (const Coord& d : kDiag) {
        Coord mid = add(c, d);
        Coord to = add(mid, d);
        if (!b_.in_bounds(to) || !b_.in_bounds(mid)) continue;
        if (!b_.empty_at(mid)) continue;
        if (!elephant_side_ok(b_, p.color, to)) continue;
        push(c, to, p.color, out);
      }
    }
  }

  void gen_horse(Coord c, Piece p, std::vector<Move>& out) {
    static thread_local std::vector<HorsePath> paths;
    horse_paths(c, paths);
    for (const auto& hp : paths) {
      if (!b_.in_bounds(hp.dest) || !b_.in_bounds(hp.leg)) continue;
      if (!b_.empty_at(hp.leg)) continue;
      push(c, hp.dest, p.color, out);
    }
  }

  void gen_rook(Coord c, Piece p, std::vector<Move>& out) {
    for (const Coord& d : kOrth) {
      Coord to = add(c, d);
      while (b_.in_bounds(to)) {
        auto t = b_.at(to);
        push(c, to, p.color, out);
        if (t) break;
        to = add(to, d);
      }
    }
    if (b_.game == Game::Janggi) gen_palace_diagonal_rook(c, p, out);
  }

  void gen_palace_diagonal_rook(Coord c, Piece p, std::vector<Move>& out) {
    auto palace = b_.palace_at(c);
    if (!palace) return;
    Coord center = {palace->x + 1, palace->y + 1};
    if (c == center) {
      for (const Coord& d : kDiag) push(c, add(c, d), p.color, out);
      return;
    }
    bool corner = (c.x == palace->x || c.x == palace->x + 2) &&
                  (c.y == palace->y || c.y == palace->y + 2);
    if (!corner) return;
    push(c, center, p.color, out);
    if (b_.empty_at(center)) {
      Coord opposite = {2 * center.x - c.x, 2 * center.y - c.y};
      push(c, opposite, p.color, out);
    }
  }

  void gen_cannon(Coord c, Piece p, std::vector<Move>& out) {
    const bool janggi = b_.game == Game::Janggi;
    for (const Coord& d : kOrth) {
      Coord to = add(c, d);
      // quiet slides (Xiangqi only); stop at the first piece
      while (b_.in_bounds(to) && b_.empty_at(to)) {
        if (!janggi) out.push_back({c, to, false});
        to = add(to, d);
      }
      if (!b_.in_bounds(to)) continue;
      // `to` holds the screen
      if (janggi && b_.at(to)->kind == PieceKind::Cannon) continue;
      Coord beyond = add(to, d);
      while (b_.in_bounds(beyond)) {
        auto t = b_.at(beyond);
        if (t) {
          bool capture_ok = t->color != p.color &&
                            (!janggi || t->kind != PieceKind::Cannon);
          if (capture_ok) out.push_back({c, beyond, false});
          break;
        }
        if (janggi) out.push_back({c, beyond, false});
        beyond = add(beyond, d);
      }
    }
    if (janggi) gen_palace_diagonal_cannon(c, p, out);
  }

  void gen_palace_diagonal_cannon(Coord c, Piece p, std::vector<Move>& out) {
    auto palace = b_.palace_at(c);
    if (!palace) return;
    Coord center = {palace->x + 1, palace->y + 1};
    bool corner = (c.x == palace->x || c.x == palace->x + 2) &&
                  (c.y == palace->y || c.y == palace->y + 2);
    if (!corner) return;
    auto screen = b_.at(center);
    if (!screen || screen->kind == PieceKind::Cannon) return;
    Coord opposite = {2 * center.x - c.x, 2 * center.y - c.y};
    auto t = b_.at(opposite);
    if (t && (t->color == p.color || t->kind == PieceKind::Cannon)) return;
    out.push_back({c, opposite, false});
  }

  void gen_soldier(Coord c, Piece p, std::vector<Move>& out) {
    Coord fwd = {c.x, c.y + forward(p.color)};
    push(c, fwd, p.color, out);
    bool sideways = b_.game == Game::Janggi || soldier_crossed(b_, p.color, c);
    if (sideways) {
      push(c, {c.x - 1, c.y}, p.color, out);
      push(c, {c.x + 1, c.y}, p.color, out);
    }
    if (b_.game == Game::Janggi) {
      for (int side = -1; side <= 1; side += 2) {
        Coord to = {c.x + side, c.y + forward(p.color)};
        if (b_.in_bounds(to) && diagonal_on_lines(b_, c, to))
          push(c, to, p.color, out);
      }
    }
  }

  const BoardPosition& b_;
  const FrozenMask* frozen_;
};

}  // namespace

UndoRecord make_move(BoardPosition& b, const Move& m) {
  UndoRecord u{m, 0};
  if (!m.is_pass) {
    u.captured = b.raw(m.to);
    uint8_t moving = b.raw(m.from);
    b.squares[static_cast<size_t>(m.to.y) * b.width + m.to.x] = moving;
    b.squares[static_cast<size_t>(m.from.y) * b.width + m.from.x] = 0;
  }
  b.side_to_move = other(b.side_to_move);
  return u;
}

void unmake_move(BoardPosition& b, const UndoRecord& u) {
  b.side_to_move = other(b.side_to_move);
  if (!u.move.is_pass) {
    uint8_t moving = b.raw(u.move.to);
    b.squares[static_cast<size_t>(u.move.from.y) * b.width + u.move.from.x] =
        moving;
    b.squares[static_cast<size_t>(u.move.to.y) * b.width + u.move.to.x] =
        u.captured;
  }
}

std::vector<Move> legal_moves_inplace(BoardPosition& b,
                                      const FrozenMask* frozen) {
  Color mover = b.side_to_move;
  bool checked = in_check(b, mover);
  std::vector<Move> out;
  MoveGen gen(b, frozen);
  for (const Move& m : gen.pseudo()) {
    UndoRecord u = make_move(b, m);
    bool ok = !in_check(b, mover) && !generals_facing(b);
    unmake_move(b, u);
    if (ok) out.push_back(m);
  }
  if (b.game == Game::Janggi && !checked) out.push_back({{}, {}, true});
  return out;
}

std::vector<Move> legal_moves(const BoardPosition& b, const FrozenMask* frozen) {
  BoardPosition scratch = b;
  return legal_moves_inplace(scratch, frozen);
}

BoardPosition apply_move(const BoardPosition& b, const Move& m) {
  auto legal = legal_moves(b);
  bool found = false;
  for (const Move& lm : legal)
    if (lm == m) {
      found = true;
      break;
    }
  if (!found)
    throw std::invalid_argument("illegal move " + move_name(m));
  BoardPosition next = b;
  make_move(next, m);
  return next;
}

Status position_status(const BoardPosition& b) {
  auto moves = legal_moves(b);
  if (moves.empty())
    return in_check(b, b.side_to_move) ? Status::Checkmate
                                       : Status::StalemateLoss;
  if (moves.size() == 1 && moves[0].is_pass) return Status::PassForced;
  return Status::Ongoing;
}

const char* to_string(Status s) {
  switch (s) {
    case Status::Ongoing: return "ongoing";
    case Status::Checkmate: return "checkmate";
    case Status::StalemateLoss: return "stalemate-loss";
    case Status::PassForced: return "pass-forced";
  }
  return "?";
}

namespace {

uint64_t perft_rec(BoardPosition& b, int depth, const FrozenMask* frozen) {
  if (depth == 0) return 1;
  uint64_t total = 0;
  for (const Move& m : legal_moves_inplace(b, frozen)) {
    UndoRecord u = make_move(b, m);
    total += perft_rec(b, depth - 1, frozen);
    unmake_move(b, u);
  }
  return total;
}

}  // namespace

uint64_t perft(const BoardPosition& b, int depth, const FrozenMask* frozen) {
  BoardPosition scratch = b;
  return perft_rec(scratch, depth, frozen);
}

}  // namespace hardboard
