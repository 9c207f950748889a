#include <algorithm>
#include <array>

#include "builder_internal.hpp"

namespace hardboard {

namespace {

struct DoorRef {
  int node = -1;
};

// Door table indexed by (formula 0=I-WIN 1=II-WIN, term, literal position).
using DoorTable = std::vector<std::vector<std::vector<DoorRef>>>;

DoorSpec literal_door_spec(bool owner_is_red, bool formula_is_i_win) {
  // setter color = owner, traverse color = the checking player
  if (owner_is_red) return formula_is_i_win ? DoorSpec::RRR : DoorSpec::RBR;
  return formula_is_i_win ? DoorSpec::BRB : DoorSpec::BBB;
}

}  // namespace

// Two avatars around a synchronization gadget. Each round a player leaves
// the gadget, takes one variable branch (or the pass branch), then either
// enters its check progress or returns. Literal doors encode the current
// assignment: a door is open exactly when its literal holds.
GadgetGraph build_exptime(const G2Instance& g2) {
  GadgetGraph g;
  int nx = static_cast<int>(g2.x_vars.size());

  int sync = g.add_node({NodeKind::Sync, Color::Red}, "synchronization", 0, 4);

  // create all literal doors up front: doors[f][t][p]
  DoorTable doors(2);
  const Dnf* formulas[2] = {&g2.i_win, &g2.ii_win};
  // per variable, the (formula, term, pos) occurrences
  std::vector<std::vector<std::array<int, 3>>> var_occurrences(
      static_cast<size_t>(g2.var_count()) + 1);
  for (int fi = 0; fi < 2; ++fi) {
    const Dnf& dnf = *formulas[fi];
    doors[static_cast<size_t>(fi)].resize(dnf.size());
    for (size_t t = 0; t < dnf.size(); ++t) {
      doors[static_cast<size_t>(fi)][t].resize(dnf[t].size());
      for (size_t p = 0; p < dnf[t].size(); ++p)
        var_occurrences[static_cast<size_t>(std::abs(dnf[t][p]))].push_back(
            {fi, static_cast<int>(t), static_cast<int>(p)});
    }
  }

  struct SideLayout {
    Color color;
    int row_branches, row_spine;
    int finish = -1, finish_merge = -1, sync_entry = -1;
    std::vector<PortRef> rapid_feeds;
  };
  SideLayout sides[2] = {{Color::Red, 0, 2, -1, -1, -1, {}},
                         {Color::Black, 8, 6, -1, -1, -1, {}}};

  int col = 1;
  for (SideLayout& side : sides) {
    bool red = side.color == Color::Red;
    const char* who = red ? "red" : "black";
    GadgetKind ow{NodeKind::OneWay, side.color};

    int start = g.add_node({NodeKind::Start, side.color},
                           std::string(who) + " start", col, side.row_spine);
    // variables this player may flip
    std::vector<int> own;
    for (int v = 1; v <= g2.var_count(); ++v)
      if (g2.owned_by_i(v) == red) own.push_back(v);

    int fan = 2 * static_cast<int>(own.size()) + 1;  // value branches + pass
    int chooser = -1, rejoin = -1;
    int branch_col = col + 1;
    if (fan >= 2) {
      chooser = g.add_node({NodeKind::Switch, side.color, side.color, fan},
                           std::string(who) + " assignment", col + 1,
                           side.row_spine);
      branch_col = col + 2;
    }

    // branch bodies
    int longest = 0;
    for (int v : own)
      longest = std::max(
          longest, static_cast<int>(var_occurrences[static_cast<size_t>(v)]
                                        .size()));
    int rejoin_col = branch_col + longest + 2;
    if (fan >= 2)
      rejoin = g.add_node({NodeKind::Merge, side.color, side.color, fan},
                          std::string(who) + " assigned", rejoin_col,
                          side.row_spine);

    auto branch_exit = [&](int i) {
      return PortRef{chooser, "out_" + std::to_string(i)};
    };
    auto branch_entry = [&](int i) {
      return PortRef{rejoin, "in_" + std::to_string(i)};
    };

    int branch_index = 0;
    for (int v : own) {
      std::string vname = g2.var_name(v);
      for (int val = 0; val < 2; ++val) {
        int row = side.row_branches + (branch_index % 2 == 0 ? 0 : 1);
        int head = g.add_node(
            ow, vname + ":=" + (val == 0 ? "true" : "false"),
            branch_col + (branch_index % 3), row);
        g.connect(branch_exit(branch_index), {head, "in"});
        ChainCursor bchain{&g, {head, "out"}};
        int k = 1;
        // open the doors of the chosen literal, close the opposite ones
        for (int phase = 0; phase < 2; ++phase) {
          for (const auto& [fi, t, p] :
               var_occurrences[static_cast<size_t>(v)]) {
            int lit = (*formulas[fi])[static_cast<size_t>(t)]
                                     [static_cast<size_t>(p)];
            bool lit_positive = lit > 0;
            bool opening = phase == 0;
            // phase 0 handles doors whose literal now holds
            if ((lit_positive == (val == 0)) != opening) continue;
            DoorRef& slot =
                doors[static_cast<size_t>(fi)][static_cast<size_t>(t)]
                     [static_cast<size_t>(p)];
            if (slot.node < 0) {
              DoorSpec spec = literal_door_spec(red, fi == 0);
              GadgetKind door{NodeKind::Door, side.color, side.color, 0, spec};
              slot.node = g.add_node(
                  door,
                  std::string(lit_positive ? "" : "!") + vname + " in " +
                      (fi == 0 ? "I-WIN" : "II-WIN") + " term " +
                      std::to_string(t + 1),
                  branch_col + k, row);
              bool lit_holds =
                  g2.alpha[static_cast<size_t>(std::abs(lit)) - 1] ==
                  lit_positive;
              g.initial_door_states[slot.node] =
                  lit_holds ? DoorState::Open : DoorState::Closed;
              // rapid paths serve the door's operating colors
              DoorSpec s = g.node(slot.node)->kind.door;
              g.add_rapid_port(slot.node, door_open_color(s));
              if (door_has_close(s) &&
                  door_close_color(s) != door_open_color(s))
                g.add_rapid_port(slot.node, door_close_color(s));
            }
            if (opening)
              bchain.through(slot.node, "open_in", "open_out");
            else
              bchain.through(slot.node, "close_in", "close_out");
            ++k;
          }
        }
        int tail = g.add_node(ow, vname + " committed",
                              branch_col + longest + 1, row);
        bchain.through(tail, "in", "out");
        bchain.into(branch_entry(branch_index));
        ++branch_index;
      }
    }
    // the start wire and the round return both feed the sync entrance;
    // the avatar begins parked at the gadget
    int entry = g.add_node({NodeKind::Merge, side.color, side.color, 2},
                           std::string(who) + " gadget entry", col,
                           side.row_spine + 1);
    g.connect({start, "out"}, {entry, "in_0"});
    g.connect({entry, "out"}, {sync, red ? "red_in" : "black_in"});
    side.sync_entry = entry;

    // pass branch; the sync exit feeds the chooser
    {
      int row = side.row_branches + 1;
      int head = g.add_node(ow, std::string(who) + " pass",
                            branch_col, row);
      if (fan >= 2) {
        g.connect({sync, red ? "red_out" : "black_out"}, {chooser, "in"});
        g.connect(branch_exit(branch_index), {head, "in"});
        g.connect({head, "out"}, branch_entry(branch_index));
      } else {
        g.connect({sync, red ? "red_out" : "black_out"}, {head, "in"});
      }
      ++branch_index;
    }
    side.finish_merge = rejoin;  // reused below as the end-of-round tail
    col = rejoin_col + 1;
  }

  // end-of-round choice, check progress, finishes
  for (SideLayout& side : sides) {
    bool red = side.color == Color::Red;
    const char* who = red ? "red" : "black";
    const Dnf& dnf = red ? g2.i_win : g2.ii_win;
    int terms = static_cast<int>(dnf.size());

    PortRef round_tail;
    if (side.finish_merge >= 0) {
      round_tail = {side.finish_merge, "out"};
    } else {
      // lone pass branch: its one-way output
      for (const auto& n : g.nodes)
        if (n.kind.node == NodeKind::OneWay &&
            n.label == std::string(who) + " pass")
          round_tail = {n.id, "out"};
    }

    int finish = g.add_node({NodeKind::Finish, side.color},
                            std::string(who) + " finish", col + 6,
                            side.row_spine);
    side.finish = finish;

    // rapid feeds from this color's doors and the synchronization gadget
    std::vector<PortRef> rapid_feeds;
    for (const auto& n : g.nodes)
      if (n.kind.node == NodeKind::Door)
        for (const auto& p : n.ports)
          if (p.role == PortRole::Rapid && p.color == side.color)
            rapid_feeds.push_back({n.id, p.name});
    rapid_feeds.push_back({sync, red ? "rapid_red" : "rapid_black"});

    PortRef check_tail{-1, ""};
    if (terms > 0) {
      int end_choice =
          g.add_node({NodeKind::Switch, side.color, side.color, 2},
                     std::string(who) + " check or return", col,
                     side.row_spine);
      g.connect(round_tail, {end_choice, "in"});
      g.connect({end_choice, "out_1"}, {sync, red ? "red_in" : "black_in"});

      // term chains
      int term_switch = -1, term_merge = -1;
      PortRef term_in;
      if (terms >= 2) {
        term_switch =
            g.add_node({NodeKind::Switch, side.color, side.color, terms},
                       std::string(who) + " win terms", col + 1,
                       side.row_spine);
        term_merge =
            g.add_node({NodeKind::Merge, side.color, side.color, terms},
                       std::string(who) + " win", col + 4, side.row_spine);
        g.connect({end_choice, "out_0"}, {term_switch, "in"});
        check_tail = {term_merge, "out"};
      }
      for (int t = 0; t < terms; ++t) {
        ChainCursor tchain{&g, terms >= 2
                                   ? PortRef{term_switch,
                                             "out_" + std::to_string(t)}
                                   : PortRef{end_choice, "out_0"}};
        for (size_t p = 0; p < dnf[static_cast<size_t>(t)].size(); ++p) {
          int d = doors[red ? 0 : 1][static_cast<size_t>(t)][p].node;
          tchain.through(d, "traverse_in", "traverse_out");
        }
        if (terms >= 2)
          tchain.into({term_merge, "in_" + std::to_string(t)});
        else
          check_tail = tchain.tail;
      }
    } else {
      // no win formula: the round always returns to the gadget
      g.connect(round_tail, {sync, red ? "red_in" : "black_in"});
    }

    // merge the check path and every rapid feed into the finish
    std::vector<PortRef> feeds = rapid_feeds;
    if (check_tail.node >= 0) feeds.insert(feeds.begin(), check_tail);
    if (feeds.size() == 1) {
      g.connect(feeds[0], {finish, "in"});
    } else {
      int m = g.add_node({NodeKind::Merge, side.color, side.color,
                          static_cast<int>(feeds.size())},
                         std::string(who) + " finish merge", col + 5,
                         side.row_spine);
      for (size_t i = 0; i < feeds.size(); ++i)
        g.connect(feeds[i], {m, "in_" + std::to_string(i)});
      g.connect({m, "out"}, {finish, "in"});
    }
    col += 8;
  }

  insert_crossovers(g);
  return g;
}

}  // namespace hardboard
