#include <algorithm>
#include <array>

#include "builder_internal.hpp"

namespace hardboard {

namespace {

struct Occurrence {
  int clause;
  int lit_index;
};

}  // namespace

// Quantifier sweep: existential variables are switch/merge choices,
// universal variables alternation gadgets. Every literal occurrence gets
// an open-close door; an assignment branch opens its literal's doors and
// closes the opposite literal's. The return path re-enters universal
// variables innermost-first until both exits of every alternation have
// been used, then reaches the finish.
GadgetGraph build_pspace(const Qbf& q) {
  GadgetGraph g;
  const CnfFormula& f = q.matrix;

  std::vector<std::array<std::vector<Occurrence>, 2>> occ(
      static_cast<size_t>(f.num_vars));
  for (size_t c = 0; c < f.clauses.size(); ++c)
    for (size_t i = 0; i < f.clauses[c].size(); ++i) {
      int lit = f.clauses[c][i];
      occ[static_cast<size_t>(std::abs(lit)) - 1][lit > 0 ? 0 : 1].push_back(
          {static_cast<int>(c), static_cast<int>(i)});
    }

  int col = 0;
  int start = g.add_node({NodeKind::Start, Color::Red}, "start", col++, 1);
  ChainCursor chain{&g, {start, "out"}};

  std::vector<std::vector<int>> door_of(f.clauses.size());
  for (size_t c = 0; c < f.clauses.size(); ++c)
    door_of[c].assign(f.clauses[c].size(), -1);

  // head merge of each universal variable, for the return loops
  std::vector<int> universal_head_merge;   // merge node ids
  std::vector<int> universal_vars;         // variable indices, prefix order

  GadgetKind ow{NodeKind::OneWay, Color::Red};

  for (const auto& [quant, v] : q.prefix) {
    std::string vname = "x" + std::to_string(v);
    int chooser;  // node whose out_0/out_1 are the value branches
    std::string exit_a = "out_0", exit_b = "out_1";
    if (quant == Quantifier::Exists) {
      chooser = g.add_node({NodeKind::Switch, Color::Red, Color::Black, 2},
                           vname + " switch", col, 1);
      chain.into({chooser, "in"});
    } else {
      int head = g.add_node({NodeKind::Merge, Color::Red, Color::Black, 2},
                            vname + " re-entry", col, 1);
      chain.into({head, "in_0"});
      chooser = g.add_node({NodeKind::Alternation, Color::Red},
                           vname + " alternation", col + 1, 1);
      g.connect({head, "out"}, {chooser, "in"});
      universal_head_merge.push_back(head);
      universal_vars.push_back(v);
      exit_a = "out_a";
      exit_b = "out_b";
      ++col;
    }

    size_t longest = 2 * std::max(occ[static_cast<size_t>(v) - 1][0].size(),
                                  occ[static_cast<size_t>(v) - 1][1].size());
    int merge_col = col + 3 + static_cast<int>(longest);
    int m = g.add_node({NodeKind::Merge, Color::Red, Color::Black, 2},
                       vname + " merge", merge_col, 1);

    for (int branch = 0; branch < 2; ++branch) {
      int row = branch == 0 ? 0 : 2;
      const char* val = branch == 0 ? "true" : "false";
      int head_ow = g.add_node(ow, vname + ":=" + val, col + 1, row);
      g.connect({chooser, branch == 0 ? exit_a : exit_b}, {head_ow, "in"});
      ChainCursor bchain{&g, {head_ow, "out"}};
      int k = 0;
      // open this value's literal doors, then close the opposite ones
      for (int phase = 0; phase < 2; ++phase) {
        int side = phase == 0 ? branch : 1 - branch;
        for (const Occurrence& o :
             occ[static_cast<size_t>(v) - 1][static_cast<size_t>(side)]) {
          int& slot = door_of[static_cast<size_t>(o.clause)]
                             [static_cast<size_t>(o.lit_index)];
          if (slot < 0) {
            GadgetKind door{NodeKind::Door, Color::Red, Color::Black, 0,
                            DoorSpec::RRR};
            slot = g.add_node(door,
                              std::string(side == 0 ? "" : "!") + vname +
                                  " in clause " + std::to_string(o.clause + 1),
                              col + 2 + k, row);
            g.initial_door_states[slot] = DoorState::Closed;
          }
          if (phase == 0)
            bchain.through(slot, "open_in", "open_out");
          else
            bchain.through(slot, "close_in", "close_out");
          ++k;
        }
      }
      int tail_ow = g.add_node(ow, vname + " committed",
                               col + 2 + static_cast<int>(longest), row);
      bchain.through(tail_ow, "in", "out");
      bchain.into({m, "in_" + std::to_string(branch)});
    }
    chain.tail = {m, "out"};
    col = merge_col + 1;
  }

  // clause checks in clause order
  for (size_t c = 0; c < f.clauses.size(); ++c) {
    const auto& clause = f.clauses[c];
    int w = static_cast<int>(clause.size());
    std::string cname = "clause " + std::to_string(c + 1);
    if (w == 1) {
      chain.through(door_of[c][0], "traverse_in", "traverse_out");
      col += 1;
      continue;
    }
    int s = g.add_node({NodeKind::Switch, Color::Red, Color::Black, w},
                       cname + " check", col, 1);
    int m = g.add_node({NodeKind::Merge, Color::Red, Color::Black, w},
                       cname + " done", col + 1, 1);
    chain.into({s, "in"});
    for (int i = 0; i < w; ++i) {
      int d = door_of[c][static_cast<size_t>(i)];
      g.connect({s, "out_" + std::to_string(i)}, {d, "traverse_in"});
      g.connect({d, "traverse_out"}, {m, "in_" + std::to_string(i)});
    }
    chain.tail = {m, "out"};
    col += 2;
  }

  // return path: innermost universal first
  for (size_t i = universal_vars.size(); i-- > 0;) {
    std::string vname = "x" + std::to_string(universal_vars[i]);
    int r = g.add_node({NodeKind::Alternation, Color::Red},
                       vname + " return", col, 1);
    chain.into({r, "in"});
    int back_ow = g.add_node(ow, vname + " sweep again", col + 1, 0);
    g.connect({r, "out_a"}, {back_ow, "in"});
    g.connect({back_ow, "out"}, {universal_head_merge[i], "in_1"});
    int fwd_ow = g.add_node(ow, vname + " exhausted", col + 1, 2);
    g.connect({r, "out_b"}, {fwd_ow, "in"});
    chain.tail = {fwd_ow, "out"};
    col += 2;
  }

  int finish = g.add_node({NodeKind::Finish, Color::Red}, "finish", col, 1);
  chain.into({finish, "in"});

  insert_crossovers(g);
  return g;
}

}  // namespace hardboard
