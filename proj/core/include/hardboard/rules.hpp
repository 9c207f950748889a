#ifndef HARDBOARD_RULES_HPP_
#define HARDBOARD_RULES_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "hardboard/board.hpp"

namespace hardboard {

struct Move {
  Coord from{};
  Coord to{};
  bool is_pass = false;
  bool operator==(const Move&) const = default;
};

std::string move_name(const Move& m);  // "f6i4" or "pass"

// Per-square mask of pieces excluded from move generation. Scenario
// searches use this for wall pieces; board-level play never does.
using FrozenMask = std::vector<uint8_t>;

bool square_attacked(const BoardPosition& b, Coord target, Color by);
bool in_check(const BoardPosition& b, Color c);

// Xiangqi only: generals on the same file with nothing between.
bool generals_facing(const BoardPosition& b);

// All legal moves for side_to_move: self-check and (Xiangqi) general
// exposure excluded; Janggi pass included whenever the mover is not in
// check. frozen pieces generate no moves but remain capturable.
std::vector<Move> legal_moves(const BoardPosition& b,
                              const FrozenMask* frozen = nullptr);

// Same result, but uses make/unmake on b (restoring it) instead of
// copying; the variant searches call per node.
std::vector<Move> legal_moves_inplace(BoardPosition& b,
                                      const FrozenMask* frozen = nullptr);

// Applies a legal move and flips the side to move; throws
// std::invalid_argument when the move is not legal.
BoardPosition apply_move(const BoardPosition& b, const Move& m);

enum class Status { Ongoing, Checkmate, StalemateLoss, PassForced };
Status position_status(const BoardPosition& b);
const char* to_string(Status s);

uint64_t perft(const BoardPosition& b, int depth,
               const FrozenMask* frozen = nullptr);

// In-place make/unmake for searches. Callers must pass moves that are
// pseudo-legal for the current side; legality filtering stays with
// legal_moves.
struct UndoRecord {
  Move move;
  uint8_t captured = 0;
};
UndoRecord make_move(BoardPosition& b, const Move& m);
void unmake_move(BoardPosition& b, const UndoRecord& u);

}  // namespace hardboard

#endif  // HARDBOARD_RULES_HPP_
