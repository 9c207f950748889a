#include "hardboard/board.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "hardboard/formula.hpp"  // ParseError

namespace hardboard {

std::string coord_name(Coord c) {
  std::string col;
  if (c.x < 26) {
    col += static_cast<char>('a' + c.x);
  } else {
    col += static_cast<char>('a' + c.x / 26 - 1);
    col += static_cast<char>('a' + c.x % 26);
  }
  return col + std::to_string(c.y + 1);
}

std::optional<Coord> parse_coord(std::string_view text) {
  size_t i = 0;
  while (i < text.size() && std::islower(static_cast<unsigned char>(text[i])))
    ++i;
  if (i == 0 || i > 2 || i == text.size()) return std::nullopt;
  int x = 0;
  if (i == 1) {
    x = text[0] - 'a';
  } else {
    x = (text[0] - 'a' + 1) * 26 + (text[1] - 'a');
  }
  int y = 0;
  for (size_t j = i; j < text.size(); ++j) {
    if (!std::isdigit(static_cast<unsigned char>(text[j]))) return std::nullopt;
    y = y * 10 + (text[j] - '0');
  }
  if (y == 0) return std::nullopt;
  return Coord{x, y - 1};
}

namespace {
constexpr char kKindLetters[] = {'G', 'A', 'E', 'H', 'R', 'C', 'S'};
}

std::string piece_code(Piece p) {
  std::string s;
  s += p.color == Color::Red ? 'R' : 'B';
  s += kKindLetters[static_cast<int>(p.kind)];
  return s;
}

std::optional<Piece> parse_piece_code(std::string_view code) {
  if (code.size() != 2) return std::nullopt;
  Piece p;
  if (code[0] == 'R')
    p.color = Color::Red;
  else if (code[0] == 'B')
    p.color = Color::Black;
  else
    return std::nullopt;
  for (int k = 0; k < 7; ++k) {
    if (kKindLetters[k] == code[1]) {
      p.kind = static_cast<PieceKind>(k);
      return p;
    }
  }
  return std::nullopt;
}

uint8_t encode_piece(Piece p) {
  return static_cast<uint8_t>(1 + static_cast<int>(p.kind) +
                              (p.color == Color::Black ? 8 : 0));
}

std::optional<Piece> decode_piece(uint8_t raw) {
  if (raw == 0) return std::nullopt;
  Piece p;
  p.color = raw > 8 ? Color::Black : Color::Red;
  p.kind = static_cast<PieceKind>((raw - 1) & 7);
  return p;
}

void BoardPosition::resize(int w, int h) {
  width = w;
  height = h;
  squares.assign(static_cast<size_t>(w) * h, 0);
}

std::optional<Piece> BoardPosition::at(Coord c) const {
  return decode_piece(raw(c));
}

void BoardPosition::set(Coord c, std::optional<Piece> p) {
  squares[static_cast<size_t>(c.y) * width + c.x] =
      p ? encode_piece(*p) : uint8_t{0};
}

std::vector<std::pair<Coord, Piece>> BoardPosition::pieces() const {
  std::vector<std::pair<Coord, Piece>> out;
  for (int y = 0; y < height; ++y)
    for (int x = 0; x < width; ++x)
      if (auto p = at({x, y})) out.emplace_back(Coord{x, y}, *p);
  return out;
}

int BoardPosition::piece_count() const {
  int n = 0;
  for (uint8_t s : squares) n += s != 0;
  return n;
}

std::optional<Coord> BoardPosition::find_general(Color c) const {
  for (int y = 0; y < height; ++y)
    for (int x = 0; x < width; ++x) {
      auto p = at({x, y});
      if (p && p->color == c && p->kind == PieceKind::General)
        return Coord{x, y};
    }
  return std::nullopt;
}

std::optional<Coord> BoardPosition::palace_at(Coord c) const {
  for (const Coord& o : palaces) {
    if (c.x >= o.x && c.x < o.x + 3 && c.y >= o.y && c.y < o.y + 3) return o;
  }
  return std::nullopt;
}

BoardPosition parse_position(std::istream& in) {
  BoardPosition b;
  bool saw_game = false, saw_size = false;
  std::string line;
  int line_no = 0;
  std::vector<std::pair<Coord, Piece>> pieces;

  while (std::getline(in, line)) {
    ++line_no;
    size_t hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    std::istringstream iss(line);
    std::string word;
    if (!(iss >> word)) continue;

    if (word == "game") {
      std::string g;
      iss >> g;
      if (g == "xiangqi")
        b.game = Game::Xiangqi;
      else if (g == "janggi")
        b.game = Game::Janggi;
      else
        throw ParseError("unknown game '" + g + "'", line_no);
      saw_game = true;
    } else if (word == "size") {
      int w = 0, h = 0;
      if (!(iss >> w >> h) || w <= 0 || h <= 0)
        throw ParseError("bad size", line_no);
      b.resize(w, h);
      saw_size = true;
    } else if (word == "river") {
      std::string r;
      iss >> r;
      if (r == "none")
        b.south_rows = 0;
      else
        b.south_rows = std::stoi(r);
    } else if (word == "palace") {
      int x = 0, y = 0;
      if (!(iss >> x >> y)) throw ParseError("bad palace", line_no);
      b.palaces.push_back({x - 1, y - 1});
    } else if (word == "turn") {
      std::string t;
      iss >> t;
      if (t == "red")
        b.side_to_move = Color::Red;
      else if (t == "black")
        b.side_to_move = Color::Black;
      else
        throw ParseError("turn must be red or black", line_no);
    } else if (auto piece = parse_piece_code(word)) {
      std::string at;
      if (!(iss >> at)) throw ParseError("missing coordinate", line_no);
      auto coord = parse_coord(at);
      if (!coord) throw ParseError("bad coordinate '" + at + "'", line_no);
      pieces.emplace_back(*coord, *piece);
    } else {
      throw ParseError("unknown line '" + word + "'", line_no);
    }
  }

  if (!saw_game || !saw_size)
    throw ParseError("position needs game and size lines", line_no);
  for (auto& [c, p] : pieces) {
    if (!b.in_bounds(c))
      throw ParseError("piece out of bounds at " + coord_name(c), line_no);
    if (!b.empty_at(c))
      throw ParseError("two pieces at " + coord_name(c), line_no);
    b.set(c, p);
  }
  return b;
}

BoardPosition parse_position(const std::string& text) {
  std::istringstream in(text);
  return parse_position(in);
}

std::string emit_position(const BoardPosition& b) {
  std::ostringstream out;
  out << "game " << to_string(b.game) << '\n';
  out << "size " << b.width << ' ' << b.height << '\n';
  if (b.south_rows > 0)
    out << "river " << b.south_rows << '\n';
  else
    out << "river none\n";
  auto palaces = b.palaces;
  std::sort(palaces.begin(), palaces.end());
  for (const Coord& p : palaces)
    out << "palace " << p.x + 1 << ' ' << p.y + 1 << '\n';
  out << "turn " << to_string(b.side_to_move) << '\n';
  for (const auto& [c, p] : b.pieces())
    out << piece_code(p) << ' ' << coord_name(c) << '\n';
  return out.str();
}

const char* to_string(Game g) {
  return g == Game::Xiangqi ? "xiangqi" : "janggi";
}

const char* to_string(Color c) { return c == Color::Red ? "red" : "black"; }

}  // namespace hardboard
