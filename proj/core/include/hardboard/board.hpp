#ifndef HARDBOARD_BOARD_HPP_
#define HARDBOARD_BOARD_HPP_

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace hardboard {

enum class Game : uint8_t { Xiangqi, Janggi };

enum class Color : uint8_t { Red, Black };

constexpr Color other(Color c) {
  return c == Color::Red ? Color::Black : Color::Red;
}

enum class PieceKind : uint8_t {
  General,
  Advisor,
  Elephant,
  Horse,
  Rook,
  Cannon,
  Soldier
};

// x is the 0-based column, y the 0-based row; row 0 is the south edge.
// Text form is column letters (a..z, aa..az, ba..) plus the 1-based row,
// so {5,5} prints as "f6".
struct Coord {
  int x = 0;
  int y = 0;
  auto operator<=>(const Coord&) const = default;
};

std::string coord_name(Coord c);
std::optional<Coord> parse_coord(std::string_view text);

struct Piece {
  Color color = Color::Red;
  PieceKind kind = PieceKind::General;
  bool operator==(const Piece&) const = default;
};

// Two-letter code: R/B plus G,A,E,H,R,C,S.
std::string piece_code(Piece p);
std::optional<Piece> parse_piece_code(std::string_view code);

// A generalized W x H position. Palaces are 3x3 regions (stored by their
// southwest corner) with the usual diagonal lines; they exist only where a
// board places them. south_rows > 0 marks a Xiangqi river: rows
// 0..south_rows-1 are the red side.
struct BoardPosition {
  Game game = Game::Janggi;
  int width = 0;
  int height = 0;
  int south_rows = 0;  // 0 = no river
  std::vector<Coord> palaces;
  Color side_to_move = Color::Red;
  std::vector<uint8_t> squares;  // 0 = empty, else encoded Piece

  void resize(int w, int h);
  bool in_bounds(Coord c) const {
    return c.x >= 0 && c.x < width && c.y >= 0 && c.y < height;
  }
  std::optional<Piece> at(Coord c) const;
  void set(Coord c, std::optional<Piece> p);
  bool empty_at(Coord c) const { return raw(c) == 0; }
  uint8_t raw(Coord c) const {
    return squares[static_cast<size_t>(c.y) * width + c.x];
  }

  // Pieces in (row, column) order; the emission order of the text format.
  std::vector<std::pair<Coord, Piece>> pieces() const;
  int piece_count() const;
  std::optional<Coord> find_general(Color c) const;

  // The palace containing c, if any.
  std::optional<Coord> palace_at(Coord c) const;

  bool operator==(const BoardPosition&) const = default;
};

uint8_t encode_piece(Piece p);
std::optional<Piece> decode_piece(uint8_t raw);

BoardPosition parse_position(std::istream& in);
BoardPosition parse_position(const std::string& text);
std::string emit_position(const BoardPosition& b);

const char* to_string(Game g);
const char* to_string(Color c);

}  // namespace hardboard

#endif  // HARDBOARD_BOARD_HPP_
