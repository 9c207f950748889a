#include "hardboard/formula.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <sstream>

namespace hardboard {

namespace {

constexpr int kMaxOracleVars = 20;
constexpr int kMaxG2Vars = 12;
constexpr int kMaxTermLiterals = 12;

// Splits a clause wider than 3 into an equisatisfiable 3-CNF chain using
// fresh variables numbered from next_var upward.
void pad_clause(const std::vector<int>& clause, int& next_var,
                std::vector<std::vector<int>>& out) {
  if (clause.size() <= 3) {
    out.push_back(clause);
    return;
  }
  int carry = next_var++;
  out.push_back({clause[0], clause[1], carry});
  size_t i = 2;
  while (i + 2 < clause.size()) {
    int next = next_var++;
    out.push_back({-carry, clause[i], next});
    carry = next;
    ++i;
  }
  out.push_back({-carry, clause[i], clause[i + 1]});
}

}  // namespace

const std::string& G2Instance::var_name(int index) const {
  assert(index >= 1 && index <= var_count());
  size_t i = static_cast<size_t>(index - 1);
  return i < x_vars.size() ? x_vars[i] : y_vars[i - x_vars.size()];
}

CnfFormula parse_cnf(std::istream& in) {
  std::string line;
  int line_no = 0;
  int declared_vars = -1, declared_clauses = -1;
  std::vector<std::vector<int>> raw;
  std::vector<int> current;
  int open_clause_line = 0;

  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line[0] == 'c' || line[0] == '%') continue;
    std::istringstream iss(line);
    if (line[0] == 'p') {
      std::string p, fmt;
      if (!(iss >> p >> fmt >> declared_vars >> declared_clauses) ||
          fmt != "cnf" || declared_vars < 0 || declared_clauses < 0) {
        throw ParseError("malformed header, expected 'p cnf <vars> <clauses>'",
                         line_no);
      }
      continue;
    }
    if (declared_vars < 0)
      throw ParseError("clause before 'p cnf' header", line_no);
    int lit;
    while (iss >> lit) {
      if (lit == 0) {
        if (current.empty())
          throw ParseError("empty clause", line_no);
        raw.push_back(current);
        current.clear();
        continue;
      }
      if (std::abs(lit) > declared_vars)
        throw ParseError("literal " + std::to_string(lit) + " out of range",
                         line_no);
      if (current.empty()) open_clause_line = line_no;
      current.push_back(lit);
    }
  }
  if (declared_vars < 0) throw ParseError("missing 'p cnf' header", line_no);
  if (!current.empty())
    throw ParseError("unterminated clause", open_clause_line);
  if (static_cast<int>(raw.size()) != declared_clauses)
    throw ParseError("header declares " + std::to_string(declared_clauses) +
                         " clauses, found " + std::to_string(raw.size()),
                     line_no);

  CnfFormula f;
  f.num_vars = declared_vars;
  int next_var = declared_vars + 1;
  for (const auto& clause : raw) pad_clause(clause, next_var, f.clauses);
  f.num_vars = next_var - 1;
  return f;
}

CnfFormula parse_cnf(const std::string& text) {
  std::istringstream in(text);
  return parse_cnf(in);
}

Qbf parse_qbf(std::istream& in) {
  std::string line;
  int line_no = 0;
  int declared_vars = -1, declared_clauses = -1;
  std::vector<std::pair<Quantifier, int>> prefix;
  std::vector<bool> bound;
  std::vector<std::vector<int>> raw;
  std::vector<int> current;
  int open_clause_line = 0;
  bool matrix_started = false;

  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line[0] == 'c' || line[0] == '%') continue;
    std::istringstream iss(line);
    if (line[0] == 'p') {
      std::string p, fmt;
      if (!(iss >> p >> fmt >> declared_vars >> declared_clauses) ||
          fmt != "cnf" || declared_vars < 0 || declared_clauses < 0) {
        throw ParseError("malformed header, expected 'p cnf <vars> <clauses>'",
                         line_no);
      }
      bound.assign(static_cast<size_t>(declared_vars) + 1, false);
      continue;
    }
    if (declared_vars < 0)
      throw ParseError("content before 'p cnf' header", line_no);
    if (line[0] == 'a' || line[0] == 'e') {
      if (matrix_started)
        throw ParseError("quantifier block after matrix clauses", line_no);
      Quantifier q = line[0] == 'a' ? Quantifier::Forall : Quantifier::Exists;
      char tag;
      iss >> tag;
      int var;
      bool terminated = false;
      while (iss >> var) {
        if (var == 0) {
          terminated = true;
          break;
        }
        if (var < 0 || var > declared_vars)
          throw ParseError("quantified variable out of range", line_no);
        if (bound[static_cast<size_t>(var)])
          throw ParseError("variable " + std::to_string(var) +
                               " quantified twice",
                           line_no);
        bound[static_cast<size_t>(var)] = true;
        prefix.emplace_back(q, var);
      }
      if (!terminated)
        throw ParseError("quantifier line not terminated by 0", line_no);
      continue;
    }
    matrix_started = true;
    int lit;
    while (iss >> lit) {
      if (lit == 0) {
        if (current.empty()) throw ParseError("empty clause", line_no);
        raw.push_back(current);
        current.clear();
        continue;
      }
      if (std::abs(lit) > declared_vars)
        throw ParseError("literal " + std::to_string(lit) + " out of range",
                         line_no);
      if (!bound[static_cast<size_t>(std::abs(lit))])
        throw ParseError("unbound variable " + std::to_string(std::abs(lit)),
                         line_no);
      if (current.empty()) open_clause_line = line_no;
      current.push_back(lit);
    }
  }
  if (declared_vars < 0) throw ParseError("missing 'p cnf' header", line_no);
  if (!current.empty())
    throw ParseError("unterminated clause", open_clause_line);
  if (static_cast<int>(raw.size()) != declared_clauses)
    throw ParseError("header declares " + std::to_string(declared_clauses) +
                         " clauses, found " + std::to_string(raw.size()),
                     line_no);

  Qbf q;
  q.matrix.num_vars = declared_vars;
  q.matrix.clauses = std::move(raw);
  q.prefix = std::move(prefix);
  return q;
}

Qbf parse_qbf(const std::string& text) {
  std::istringstream in(text);
  return parse_qbf(in);
}

namespace {

// Parses a DNF body "lit&lit;lit&..."; empty body means zero terms.
Dnf parse_dnf_body(std::istringstream& iss,
                   const std::map<std::string, int>& var_index, int line_no) {
  Dnf dnf;
  std::string token;
  while (iss >> token) {
    std::vector<int> term;
    std::istringstream terms(token);
    std::string part;
    // tokens are ';'-separated terms; each term is '&'-separated literals
    size_t start = 0;
    auto flush_term = [&](const std::string& t) {
      if (t.empty()) throw ParseError("empty term", line_no);
      std::vector<int> lits;
      size_t p = 0;
      while (p < t.size()) {
        size_t amp = t.find('&', p);
        std::string lit =
            t.substr(p, amp == std::string::npos ? std::string::npos : amp - p);
        p = amp == std::string::npos ? t.size() : amp + 1;
        if (lit.empty()) throw ParseError("empty literal", line_no);
        bool neg = lit[0] == '!';
        std::string name = neg ? lit.substr(1) : lit;
        auto it = var_index.find(name);
        if (it == var_index.end())
          throw ParseError("undeclared variable '" + name + "'", line_no);
        lits.push_back(neg ? -it->second : it->second);
      }
      if (static_cast<int>(lits.size()) > kMaxTermLiterals)
        throw ParseError("term with " + std::to_string(lits.size()) +
                             " literals exceeds the 12-literal limit",
                         line_no);
      dnf.push_back(std::move(lits));
    };
    while (start <= token.size()) {
      size_t semi = token.find(';', start);
      if (semi == std::string::npos) {
        flush_term(token.substr(start));
        break;
      }
      flush_term(token.substr(start, semi - start));
      start = semi + 1;
    }
  }
  return dnf;
}

}  // namespace

G2Instance parse_g2(std::istream& in) {
  G2Instance g;
  std::map<std::string, int> var_index;
  std::map<std::string, bool> assigned;
  bool saw_turn = false, saw_iwin = false, saw_iiwin = false;
  bool vars_closed = false;
  std::string line;
  int line_no = 0;

  // First pass collects everything; formulas need the full variable table,
  // so directives must declare variables before formulas reference them.
  while (std::getline(in, line)) {
    ++line_no;
    size_t hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    std::istringstream iss(line);
    std::string directive;
    if (!(iss >> directive)) continue;

    if (directive == "turn") {
      std::string who;
      if (!(iss >> who) || (who != "I" && who != "II"))
        throw ParseError("turn must be I or II", line_no);
      g.turn = who == "I" ? G2Player::I : G2Player::II;
      saw_turn = true;
    } else if (directive == "xvars" || directive == "yvars") {
      if (vars_closed)
        throw ParseError("variable declarations must precede formulas",
                         line_no);
      std::string name;
      auto& dest = directive == "xvars" ? g.x_vars : g.y_vars;
      while (iss >> name) dest.push_back(name);
    } else if (directive == "iwin" || directive == "iiwin") {
      if (!vars_closed) {
        // build the combined index once, checking X/Y disjointness
        int idx = 1;
        for (const auto& n : g.x_vars) {
          if (!var_index.emplace(n, idx++).second)
            throw ParseError("variable '" + n + "' declared twice", line_no);
        }
        for (const auto& n : g.y_vars) {
          if (!var_index.emplace(n, idx++).second)
            throw ParseError("variable '" + n + "' in both X and Y", line_no);
        }
        vars_closed = true;
      }
      Dnf dnf = parse_dnf_body(iss, var_index, line_no);
      if (directive == "iwin") {
        g.i_win = std::move(dnf);
        saw_iwin = true;
      } else {
        g.ii_win = std::move(dnf);
        saw_iiwin = true;
      }
    } else if (directive == "assign") {
      std::string pair;
      while (iss >> pair) {
        size_t eq = pair.find('=');
        if (eq == std::string::npos || eq + 2 != pair.size() ||
            (pair[eq + 1] != '0' && pair[eq + 1] != '1'))
          throw ParseError("assignment must be name=0 or name=1", line_no);
        std::string name = pair.substr(0, eq);
        if (!assigned.emplace(name, pair[eq + 1] == '1').second)
          throw ParseError("variable '" + name + "' assigned twice", line_no);
      }
    } else {
      throw ParseError("unknown directive '" + directive + "'", line_no);
    }
  }

  if (!saw_turn) throw ParseError("missing turn", line_no);
  if (!saw_iwin) throw ParseError("missing iwin", line_no);
  if (!saw_iiwin) throw ParseError("missing iiwin", line_no);

  g.alpha.resize(static_cast<size_t>(g.var_count()));
  for (int i = 1; i <= g.var_count(); ++i) {
    auto it = assigned.find(g.var_name(i));
    if (it == assigned.end())
      throw ParseError("missing assignment for '" + g.var_name(i) + "'",
                       line_no);
    g.alpha[static_cast<size_t>(i - 1)] = it->second;
    assigned.erase(it);
  }
  if (!assigned.empty())
    throw ParseError("assignment for undeclared variable '" +
                         assigned.begin()->first + "'",
                     line_no);
  return g;
}

G2Instance parse_g2(const std::string& text) {
  std::istringstream in(text);
  return parse_g2(in);
}

std::string emit_cnf(const CnfFormula& f) {
  std::ostringstream out;
  out << "p cnf " << f.num_vars << ' ' << f.clauses.size() << '\n';
  for (const auto& clause : f.clauses) {
    for (int lit : clause) out << lit << ' ';
    out << "0\n";
  }
  return out.str();
}

std::string emit_qbf(const Qbf& q) {
  std::ostringstream out;
  out << "p cnf " << q.matrix.num_vars << ' ' << q.matrix.clauses.size()
      << '\n';
  size_t i = 0;
  while (i < q.prefix.size()) {
    Quantifier quant = q.prefix[i].first;
    out << (quant == Quantifier::Forall ? 'a' : 'e');
    while (i < q.prefix.size() && q.prefix[i].first == quant)
      out << ' ' << q.prefix[i++].second;
    out << " 0\n";
  }
  for (const auto& clause : q.matrix.clauses) {
    for (int lit : clause) out << lit << ' ';
    out << "0\n";
  }
  return out.str();
}

std::string emit_g2(const G2Instance& g) {
  std::ostringstream out;
  out << "turn " << (g.turn == G2Player::I ? "I" : "II") << '\n';
  out << "xvars";
  for (const auto& n : g.x_vars) out << ' ' << n;
  out << '\n';
  out << "yvars";
  for (const auto& n : g.y_vars) out << ' ' << n;
  out << '\n';
  auto emit_dnf = [&](const char* tag, const Dnf& dnf) {
    out << tag;
    if (!dnf.empty()) out << ' ';
    for (size_t t = 0; t < dnf.size(); ++t) {
      if (t) out << ';';
      for (size_t l = 0; l < dnf[t].size(); ++l) {
        if (l) out << '&';
        int lit = dnf[t][l];
        if (lit < 0) out << '!';
        out << g.var_name(std::abs(lit));
      }
    }
    out << '\n';
  };
  emit_dnf("iwin", g.i_win);
  emit_dnf("iiwin", g.ii_win);
  out << "assign";
  for (int i = 1; i <= g.var_count(); ++i)
    out << ' ' << g.var_name(i) << '='
        << (g.alpha[static_cast<size_t>(i - 1)] ? '1' : '0');
  out << '\n';
  return out.str();
}

bool eval_cnf(const CnfFormula& f, const std::vector<bool>& assignment) {
  for (const auto& clause : f.clauses) {
    bool sat = false;
    for (int lit : clause) {
      size_t v = static_cast<size_t>(std::abs(lit)) - 1;
      if (v >= assignment.size())
        throw std::runtime_error("unassigned variable " +
                                 std::to_string(std::abs(lit)));
      if (assignment[v] == (lit > 0)) {
        sat = true;
        break;
      }
    }
    if (!sat) return false;
  }
  return true;
}

bool eval_dnf(const Dnf& f, const std::vector<bool>& assignment) {
  for (const auto& term : f) {
    bool holds = true;
    for (int lit : term) {
      size_t v = static_cast<size_t>(std::abs(lit)) - 1;
      if (v >= assignment.size())
        throw std::runtime_error("unassigned variable " +
                                 std::to_string(std::abs(lit)));
      if (assignment[v] != (lit > 0)) {
        holds = false;
        break;
      }
    }
    if (holds) return true;
  }
  return false;
}

SatResult solve_sat(const CnfFormula& f) {
  if (f.num_vars > kMaxOracleVars)
    throw std::runtime_error("solve_sat limited to " +
                             std::to_string(kMaxOracleVars) + " variables");
  std::vector<bool> assignment(static_cast<size_t>(f.num_vars));
  for (uint32_t bits = 0; bits < (1u << f.num_vars); ++bits) {
    for (int v = 0; v < f.num_vars; ++v)
      assignment[static_cast<size_t>(v)] = (bits >> v) & 1;
    if (eval_cnf(f, assignment)) return {true, assignment};
  }
  return {false, {}};
}

namespace {

bool qbf_rec(const Qbf& q, size_t depth, std::vector<bool>& assignment) {
  if (depth == q.prefix.size()) return eval_cnf(q.matrix, assignment);
  auto [quant, var] = q.prefix[depth];
  size_t v = static_cast<size_t>(var) - 1;
  assignment[v] = false;
  bool lo = qbf_rec(q, depth + 1, assignment);
  if (quant == Quantifier::Exists && lo) return true;
  if (quant == Quantifier::Forall && !lo) return false;
  assignment[v] = true;
  return qbf_rec(q, depth + 1, assignment);
}

}  // namespace

bool solve_qbf(const Qbf& q) {
  if (q.matrix.num_vars > kMaxOracleVars)
    throw std::runtime_error("solve_qbf limited to " +
                             std::to_string(kMaxOracleVars) + " variables");
  std::vector<bool> assignment(static_cast<size_t>(q.matrix.num_vars));
  return qbf_rec(q, 0, assignment);
}

std::vector<G2Value> solve_g2_labels(const G2Instance& g) {
  int n = g.var_count();
  if (n > kMaxG2Vars)
    throw std::runtime_error("solve_g2 limited to " +
                             std::to_string(kMaxG2Vars) + " variables");
  size_t states = size_t{2} << n;  // (turn, assignment bits)
  std::vector<G2Value> label(states, G2Value::Draw);

  auto bits_to_assignment = [&](uint32_t bits) {
    std::vector<bool> a(static_cast<size_t>(n));
    for (int v = 0; v < n; ++v) a[static_cast<size_t>(v)] = (bits >> v) & 1;
    return a;
  };

  // Precompute formula truth per assignment.
  size_t masks = size_t{1} << n;
  std::vector<bool> iwin_true(masks), iiwin_true(masks);
  for (uint32_t bits = 0; bits < masks; ++bits) {
    auto a = bits_to_assignment(bits);
    iwin_true[bits] = eval_dnf(g.i_win, a);
    iiwin_true[bits] = eval_dnf(g.ii_win, a);
  }

  auto state_index = [&](G2Player turn, uint32_t bits) {
    return (turn == G2Player::II ? masks : 0) + bits;
  };

  // A mover's candidate successors: flip at most one own variable. The
  // move is legal only while the opponent's formula is false; the mover
  // wins immediately when its own formula holds after the move.
  auto for_each_move = [&](G2Player turn, uint32_t bits, auto&& fn) {
    bool blocked = turn == G2Player::I ? iiwin_true[bits] : iwin_true[bits];
    if (blocked) return;
    fn(bits);  // pass
    for (int v = 0; v < n; ++v) {
      bool is_x = v < static_cast<int>(g.x_vars.size());
      if ((turn == G2Player::I) != is_x) continue;
      fn(bits ^ (1u << v));
    }
  };

  // Least fixpoint: only forced wins get labels, everything else stays draw.
  bool changed = true;
  while (changed) {
    changed = false;
    for (int t = 0; t < 2; ++t) {
      G2Player turn = t == 0 ? G2Player::I : G2Player::II;
      G2Player opp = t == 0 ? G2Player::II : G2Player::I;
      G2Value my_win = t == 0 ? G2Value::IWins : G2Value::IIWins;
      G2Value opp_win = t == 0 ? G2Value::IIWins : G2Value::IWins;
      for (uint32_t bits = 0; bits < masks; ++bits) {
        size_t s = state_index(turn, bits);
        if (label[s] != G2Value::Draw) continue;
        bool any_move = false, can_win = false, all_lose = true;
        for_each_move(turn, bits, [&](uint32_t next) {
          any_move = true;
          bool immediate =
              turn == G2Player::I ? iwin_true[next] : iiwin_true[next];
          size_t ns = state_index(opp, next);
          if (immediate || label[ns] == my_win) can_win = true;
          if (!immediate && label[ns] != opp_win) all_lose = false;
        });
        if (!any_move) continue;  // blocked: stays a draw
        if (can_win) {
          label[s] = my_win;
          changed = true;
        } else if (all_lose) {
          label[s] = opp_win;
          changed = true;
        }
      }
    }
  }
  return label;
}

G2Value solve_g2(const G2Instance& g) {
  auto labels = solve_g2_labels(g);
  int n = g.var_count();
  uint32_t bits = 0;
  for (int v = 0; v < n; ++v)
    if (g.alpha[static_cast<size_t>(v)]) bits |= 1u << v;
  size_t idx = (g.turn == G2Player::II ? (size_t{1} << n) : 0) + bits;
  return labels[idx];
}

const char* to_string(G2Value v) {
  switch (v) {
    case G2Value::IWins: return "I-wins";
    case G2Value::IIWins: return "II-wins";
    case G2Value::Draw: return "draw";
  }
  return "?";
}

}  // namespace hardboard
