#ifndef HARDBOARD_FORMULA_HPP_
#define HARDBOARD_FORMULA_HPP_

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace hardboard {

// Raised by the text-format parsers. line is 1-based within the input.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, int line)
      : std::runtime_error("line " + std::to_string(line) + ": " + message),
        line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

// CNF over 1-based variable indices; a negative literal is a negation.
// parse_cnf guarantees 3-CNF (wide clauses are split with fresh variables).
struct CnfFormula {
  int num_vars = 0;
  std::vector<std::vector<int>> clauses;

  bool operator==(const CnfFormula&) const = default;
};

enum class Quantifier { Forall, Exists };

struct Qbf {
  std::vector<std::pair<Quantifier, int>> prefix;
  CnfFormula matrix;

  bool operator==(const Qbf&) const = default;
};

enum class G2Player { I, II };

// DNF over 1-based indices into the combined variable table (X then Y).
using Dnf = std::vector<std::vector<int>>;

// A position of the two-player formula game: whose turn it is, the two
// win formulas, and the current assignment. Moves flip at most one own
// variable; a move is legal only while the opponent's formula is false.
struct G2Instance {
  G2Player turn = G2Player::I;
  std::vector<std::string> x_vars;
  std::vector<std::string> y_vars;
  Dnf i_win;
  Dnf ii_win;
  std::vector<bool> alpha;  // indexed by combined variable - 1

  bool operator==(const G2Instance&) const = default;

  int var_count() const {
    return static_cast<int>(x_vars.size() + y_vars.size());
  }
  const std::string& var_name(int index) const;
  bool owned_by_i(int index) const {
    return index >= 1 && index <= static_cast<int>(x_vars.size());
  }
};

CnfFormula parse_cnf(std::istream& in);
CnfFormula parse_cnf(const std::string& text);
Qbf parse_qbf(std::istream& in);
Qbf parse_qbf(const std::string& text);
G2Instance parse_g2(std::istream& in);
G2Instance parse_g2(const std::string& text);

std::string emit_cnf(const CnfFormula& f);
std::string emit_qbf(const Qbf& q);
std::string emit_g2(const G2Instance& g);

bool eval_cnf(const CnfFormula& f, const std::vector<bool>& assignment);
bool eval_dnf(const Dnf& f, const std::vector<bool>& assignment);

struct SatResult {
  bool satisfiable = false;
  std::vector<bool> assignment;  // empty when unsatisfiable
};

// Exhaustive enumeration oracle, at most 20 variables.
SatResult solve_sat(const CnfFormula& f);

// Game-semantics evaluation by exhaustive recursion, at most 20 variables.
bool solve_qbf(const Qbf& q);

enum class G2Value { IWins, IIWins, Draw };

// Least-fixpoint backward induction over (turn, assignment) states,
// at most 12 variables. Positions from which neither player can force a
// win (including blocked positions where the mover has no legal move)
// are draws.
G2Value solve_g2(const G2Instance& g);

// Full converged labeling, one entry per (turn, assignment) state;
// state index = (turn == II) * 2^n + assignment bits. Exposed so tests
// can check the fixpoint is stable under re-running.
std::vector<G2Value> solve_g2_labels(const G2Instance& g);

const char* to_string(G2Value v);

}  // namespace hardboard

#endif  // HARDBOARD_FORMULA_HPP_
