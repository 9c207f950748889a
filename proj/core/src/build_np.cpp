#include <algorithm>
#include <array>

#include "builder_internal.hpp"

namespace hardboard {

namespace {

struct Occurrence {
  int clause;
  int lit_index;
};

// occurrences[v-1][0] holds positive occurrences of variable v,
// occurrences[v-1][1] the negative ones, in (clause, position) order.
std::vector<std::array<std::vector<Occurrence>, 2>> occurrence_table(
    const CnfFormula& f) {
  std::vector<std::array<std::vector<Occurrence>, 2>> occ(
      static_cast<size_t>(f.num_vars));
  for (size_t c = 0; c < f.clauses.size(); ++c)
    for (size_t i = 0; i < f.clauses[c].size(); ++i) {
      int lit = f.clauses[c][i];
      occ[static_cast<size_t>(std::abs(lit)) - 1][lit > 0 ? 0 : 1].push_back(
          {static_cast<int>(c), static_cast<int>(i)});
    }
  return occ;
}

}  // namespace

GadgetGraph build_np(const CnfFormula& f) {
  GadgetGraph g;
  auto occ = occurrence_table(f);

  // A clause block sits right after the last variable block it mentions,
  // which keeps the literal wiring local for band-structured formulas.
  std::vector<std::vector<int>> clauses_after(
      static_cast<size_t>(f.num_vars) + 1);
  for (size_t c = 0; c < f.clauses.size(); ++c) {
    int last = 0;
    for (int lit : f.clauses[c]) last = std::max(last, std::abs(lit));
    clauses_after[static_cast<size_t>(last)].push_back(static_cast<int>(c));
  }

  int col = 0;
  int start = g.add_node({NodeKind::Start, Color::Red}, "start", col++, 1);
  ChainCursor chain{&g, {start, "out"}};

  std::vector<std::vector<int>> door_of(f.clauses.size());
  for (size_t c = 0; c < f.clauses.size(); ++c)
    door_of[c].assign(f.clauses[c].size(), -1);

  auto clause_block = [&](int c) {
    const auto& clause = f.clauses[static_cast<size_t>(c)];
    int w = static_cast<int>(clause.size());
    std::string cname = "clause " + std::to_string(c + 1);
    if (w == 1) {
      int d = door_of[static_cast<size_t>(c)][0];
      chain.through(d, "traverse_in", "traverse_out");
      col += 1;
      return;
    }
    GadgetKind sw{NodeKind::Switch, Color::Red, Color::Black, w};
    GadgetKind mg{NodeKind::Merge, Color::Red, Color::Black, w};
    int s = g.add_node(sw, cname + " check", col, 1);
    int m = g.add_node(mg, cname + " done", col + 1, 1);
    chain.into({s, "in"});
    for (int i = 0; i < w; ++i) {
      int d = door_of[static_cast<size_t>(c)][static_cast<size_t>(i)];
      g.connect({s, "out_" + std::to_string(i)}, {d, "traverse_in"});
      g.connect({d, "traverse_out"}, {m, "in_" + std::to_string(i)});
    }
    chain.tail = {m, "out"};
    col += 2;
  };

  for (int v = 1; v <= f.num_vars; ++v) {
    std::string vname = "x" + std::to_string(v);
    GadgetKind sw{NodeKind::Switch, Color::Red, Color::Black, 2};
    GadgetKind mg{NodeKind::Merge, Color::Red, Color::Black, 2};
    GadgetKind ow{NodeKind::OneWay, Color::Red};
    int s = g.add_node(sw, vname + " switch", col, 1);
    chain.into({s, "in"});

    size_t longest = std::max(occ[v - 1][0].size(), occ[v - 1][1].size());
    int merge_col = col + 3 + static_cast<int>(longest);
    int m = g.add_node(mg, vname + " merge", merge_col, 1);

    for (int branch = 0; branch < 2; ++branch) {
      int row = branch == 0 ? 0 : 2;
      const char* val = branch == 0 ? "true" : "false";
      int head = g.add_node(ow, vname + ":=" + val, col + 1, row);
      g.connect({s, "out_" + std::to_string(branch)}, {head, "in"});
      ChainCursor branch_chain{&g, {head, "out"}};
      int k = 0;
      for (const Occurrence& o : occ[v - 1][static_cast<size_t>(branch)]) {
        GadgetKind door{NodeKind::Door, Color::Red, Color::Black, 0,
                        DoorSpec::RR};
        int d = g.add_node(door,
                           (branch == 0 ? vname : "!" + vname) + " in clause " +
                               std::to_string(o.clause + 1),
                           col + 2 + k, row);
        door_of[static_cast<size_t>(o.clause)]
               [static_cast<size_t>(o.lit_index)] = d;
        g.initial_door_states[d] = DoorState::Closed;
        branch_chain.through(d, "open_in", "open_out");
        ++k;
      }
      int tail = g.add_node(ow, vname + " committed",
                            col + 2 + static_cast<int>(longest), row);
      branch_chain.through(tail, "in", "out");
      branch_chain.into({m, "in_" + std::to_string(branch)});
    }
    chain.tail = {m, "out"};
    col = merge_col + 1;

    for (int c : clauses_after[static_cast<size_t>(v)]) clause_block(c);
  }
  // clauses without variables cannot exist (parser rejects empty clauses)

  int finish = g.add_node({NodeKind::Finish, Color::Red}, "finish", col, 1);
  chain.into({finish, "in"});

  insert_crossovers(g);
  return g;
}

}  // namespace hardboard
