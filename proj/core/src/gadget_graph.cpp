#include "hardboard/gadget_graph.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace hardboard {

namespace {

struct SpecLetters {
  char open, traverse, close;  // close == 0 for two-path doors
};

SpecLetters letters(DoorSpec s) {
  switch (s) {
    case DoorSpec::RR: return {'R', 'R', 0};
    case DoorSpec::BB: return {'B', 'B', 0};
    case DoorSpec::RRR: return {'R', 'R', 'R'};
    case DoorSpec::BBB: return {'B', 'B', 'B'};
    case DoorSpec::RBR: return {'R', 'B', 'R'};
    case DoorSpec::BRB: return {'B', 'R', 'B'};
    case DoorSpec::BBR: return {'B', 'B', 'R'};
    case DoorSpec::RRB: return {'R', 'R', 'B'};
  }
  return {'R', 'R', 0};
}

Color color_of(char c) { return c == 'R' ? Color::Red : Color::Black; }

}  // namespace

Color door_open_color(DoorSpec s) { return color_of(letters(s).open); }
Color door_traverse_color(DoorSpec s) {
  return color_of(letters(s).traverse);
}
bool door_has_close(DoorSpec s) { return letters(s).close != 0; }
Color door_close_color(DoorSpec s) { return color_of(letters(s).close); }

bool door_open_mandatory(DoorSpec s) {
  return s == DoorSpec::RBR || s == DoorSpec::BRB;
}

bool door_close_mandatory(DoorSpec s) {
  return s == DoorSpec::RRR || s == DoorSpec::BBB;
}

const char* to_string(DoorSpec s) {
  switch (s) {
    case DoorSpec::RR: return "rr";
    case DoorSpec::BB: return "bb";
    case DoorSpec::RRR: return "rrr";
    case DoorSpec::BBB: return "bbb";
    case DoorSpec::RBR: return "rbr";
    case DoorSpec::BRB: return "brb";
    case DoorSpec::BBR: return "bbr";
    case DoorSpec::RRB: return "rrb";
  }
  return "?";
}

std::vector<PortSpec> canonical_ports(const GadgetKind& kind) {
  std::vector<PortSpec> ports;
  auto in = [&](std::string name, Color c,
                PortRole role = PortRole::Plain) {
    ports.push_back({std::move(name), true, role, c});
  };
  auto out = [&](std::string name, Color c,
                 PortRole role = PortRole::Plain) {
    ports.push_back({std::move(name), false, role, c});
  };
  switch (kind.node) {
    case NodeKind::Start:
      out("out", kind.color_a);
      break;
    case NodeKind::Finish:
      in("in", kind.color_a);
      break;
    case NodeKind::Turn:
    case NodeKind::OneWay:
      in("in", kind.color_a);
      out("out", kind.color_a);
      break;
    case NodeKind::Switch:
      in("in", kind.color_a);
      for (int i = 0; i < kind.fan; ++i)
        out("out_" + std::to_string(i), kind.color_a);
      break;
    case NodeKind::Merge:
      for (int i = 0; i < kind.fan; ++i)
        in("in_" + std::to_string(i), kind.color_a);
      out("out", kind.color_a);
      break;
    case NodeKind::Crossover:
      in("a_in", kind.color_a);
      out("a_out", kind.color_a);
      in("b_in", kind.color_b);
      out("b_out", kind.color_b);
      break;
    case NodeKind::Door: {
      DoorSpec s = kind.door;
      in("open_in", door_open_color(s), PortRole::Open);
      out("open_out", door_open_color(s), PortRole::Open);
      in("traverse_in", door_traverse_color(s), PortRole::Traverse);
      out("traverse_out", door_traverse_color(s), PortRole::Traverse);
      if (door_has_close(s)) {
        in("close_in", door_close_color(s), PortRole::Close);
        out("close_out", door_close_color(s), PortRole::Close);
      }
      break;
    }
    case NodeKind::Alternation:
      in("in", kind.color_a);
      out("out_a", kind.color_a);
      out("out_b", kind.color_a);
      break;
    case NodeKind::Sync:
      out("red_out", Color::Red);
      in("red_in", Color::Red);
      out("black_out", Color::Black);
      in("black_in", Color::Black);
      out("rapid_red", Color::Red, PortRole::Rapid);
      out("rapid_black", Color::Black, PortRole::Rapid);
      break;
  }
  return ports;
}

int GadgetGraph::add_node(GadgetKind kind, std::string label, int col,
                          int row) {
  GadgetNode n;
  n.id = next_node_id_++;
  n.kind = kind;
  n.label = std::move(label);
  n.ports = canonical_ports(kind);
  n.col = col;
  n.row = row;
  nodes.push_back(std::move(n));
  return nodes.back().id;
}

int GadgetGraph::connect(PortRef from, PortRef to) {
  const PortSpec* f = port(from);
  const PortSpec* t = port(to);
  if (!f || !t)
    throw std::runtime_error("connect: no such port " +
                             (f ? to.port : from.port));
  GadgetEdge e;
  e.id = next_edge_id_++;
  e.from = std::move(from);
  e.to = std::move(to);
  e.color = f->color;
  edges.push_back(std::move(e));
  return edges.back().id;
}

void GadgetGraph::set_id_floor(int node_floor, int edge_floor) {
  next_node_id_ = std::max(next_node_id_, node_floor);
  next_edge_id_ = std::max(next_edge_id_, edge_floor);
}

void GadgetGraph::add_rapid_port(int door_id, Color color) {
  GadgetNode* n = node(door_id);
  if (!n || n->kind.node != NodeKind::Door)
    throw std::runtime_error("rapid ports only exist on doors");
  std::string name =
      color == Color::Red ? "rapid_red" : "rapid_black";
  n->ports.push_back({name, false, PortRole::Rapid, color});
}

const GadgetNode* GadgetGraph::node(int id) const {
  for (const auto& n : nodes)
    if (n.id == id) return &n;
  return nullptr;
}

GadgetNode* GadgetGraph::node(int id) {
  for (auto& n : nodes)
    if (n.id == id) return &n;
  return nullptr;
}

const PortSpec* GadgetGraph::port(const PortRef& ref) const {
  const GadgetNode* n = node(ref.node);
  if (!n) return nullptr;
  for (const auto& p : n->ports)
    if (p.name == ref.port) return &p;
  return nullptr;
}

const GadgetEdge* GadgetGraph::edge_at(const PortRef& ref) const {
  for (const auto& e : edges)
    if (e.from == ref || e.to == ref) return &e;
  return nullptr;
}

std::vector<const GadgetEdge*> GadgetGraph::edges_at_node(int id) const {
  std::vector<const GadgetEdge*> out;
  for (const auto& e : edges)
    if (e.from.node == id || e.to.node == id) out.push_back(&e);
  return out;
}

int GadgetGraph::count_kind(NodeKind k) const {
  int n = 0;
  for (const auto& node : nodes) n += node.kind.node == k;
  return n;
}

int GadgetGraph::count_doors(DoorSpec s) const {
  int n = 0;
  for (const auto& node : nodes)
    n += node.kind.node == NodeKind::Door && node.kind.door == s;
  return n;
}

std::vector<int> GadgetGraph::door_ids() const {
  std::vector<int> out;
  for (const auto& n : nodes)
    if (n.kind.node == NodeKind::Door) out.push_back(n.id);
  return out;
}

std::vector<std::string> validate_graph(const GadgetGraph& g) {
  std::vector<std::string> report;
  auto complain = [&](std::string msg) { report.push_back(std::move(msg)); };

  std::map<PortRef, int> port_use;
  for (const auto& e : g.edges) {
    const PortSpec* f = g.port(e.from);
    const PortSpec* t = g.port(e.to);
    if (!f || !t) {
      complain("edge " + std::to_string(e.id) + " references a missing port");
      continue;
    }
    if (f->entrance)
      complain("edge " + std::to_string(e.id) + " leaves an entrance port");
    if (t->entrance == false)
      complain("edge " + std::to_string(e.id) + " enters an exit port");
    if (f->color != t->color)
      complain("edge " + std::to_string(e.id) + " connects " +
               std::string(to_string(f->color)) + " exit to " +
               to_string(t->color) + " entrance");
    ++port_use[e.from];
    ++port_use[e.to];
  }
  for (const auto& [ref, uses] : port_use) {
    if (uses > 1)
      complain("port " + std::to_string(ref.node) + "." + ref.port +
               " used by " + std::to_string(uses) + " edges");
  }
  for (const auto& n : g.nodes) {
    for (const auto& p : n.ports) {
      if (!port_use.count({n.id, p.name}))
        complain("dangling port " + std::to_string(n.id) + "." + p.name);
    }
  }

  // one start and finish per participating color
  std::set<Color> colors;
  for (const auto& e : g.edges) {
    const PortSpec* f = g.port(e.from);
    if (f) colors.insert(f->color);
  }
  if (colors.empty()) colors.insert(Color::Red);
  for (Color c : colors) {
    int starts = 0, finishes = 0;
    for (const auto& n : g.nodes) {
      if (n.kind.node == NodeKind::Start && n.kind.color_a == c) ++starts;
      if (n.kind.node == NodeKind::Finish && n.kind.color_a == c) ++finishes;
    }
    if (starts != 1)
      complain(std::string(to_string(c)) + " has " + std::to_string(starts) +
               " start gadgets");
    if (finishes != 1)
      complain(std::string(to_string(c)) + " has " +
               std::to_string(finishes) + " finish gadgets");
  }

  for (const auto& [id, state] : g.initial_door_states) {
    const GadgetNode* n = g.node(id);
    if (!n || n->kind.node != NodeKind::Door)
      complain("initial state for non-door node " + std::to_string(id));
  }
  for (const auto& n : g.nodes) {
    if (n.kind.node == NodeKind::Door && !g.initial_door_states.count(n.id))
      complain("door " + std::to_string(n.id) + " has no initial state");
    if ((n.kind.node == NodeKind::Switch || n.kind.node == NodeKind::Merge) &&
        n.kind.fan < 2)
      complain("node " + std::to_string(n.id) + " has fan " +
               std::to_string(n.kind.fan));
  }
  return report;
}

std::string kind_string(const GadgetKind& kind) {
  std::ostringstream out;
  switch (kind.node) {
    case NodeKind::Start: out << "start " << to_string(kind.color_a); break;
    case NodeKind::Finish: out << "finish " << to_string(kind.color_a); break;
    case NodeKind::Turn: out << "turn"; break;
    case NodeKind::Switch: out << "switch " << kind.fan; break;
    case NodeKind::Merge: out << "merge " << kind.fan; break;
    case NodeKind::OneWay: out << "one_way " << to_string(kind.color_a); break;
    case NodeKind::Crossover:
      out << "crossover " << to_string(kind.color_a) << ' '
          << to_string(kind.color_b);
      break;
    case NodeKind::Door: out << "door " << to_string(kind.door); break;
    case NodeKind::Alternation: out << "alternation"; break;
    case NodeKind::Sync: out << "sync"; break;
  }
  return out.str();
}

std::string template_kind_for(const GadgetKind& kind) {
  auto black_suffix = [&](const char* base) {
    return kind.color_a == Color::Black ? std::string(base) + "_black"
                                        : std::string(base);
  };
  switch (kind.node) {
    case NodeKind::Start: return black_suffix("start");
    case NodeKind::Finish: return black_suffix("finish");
    case NodeKind::Turn: return black_suffix("turn");
    case NodeKind::Switch:
    case NodeKind::Merge: return black_suffix("switch");
    case NodeKind::OneWay: return black_suffix("one_way");
    case NodeKind::Crossover:
      if (kind.color_a != kind.color_b) return "crossover_rb";
      return kind.color_a == Color::Red ? "crossover" : "crossover_bb";
    case NodeKind::Door:
      switch (kind.door) {
        case DoorSpec::RR: return "door_simple";
        case DoorSpec::BB: return "door_simple_black";
        case DoorSpec::RRR: return "door_rrr";
        case DoorSpec::BBB: return "door_bbb";
        case DoorSpec::RBR: return "door_rbr";
        case DoorSpec::BRB: return "door_brb";
        case DoorSpec::BBR: return "door_bbr";
        case DoorSpec::RRB: return "door_rrb";
      }
      return "door_simple";
    case NodeKind::Alternation: return "alternation";  // expanded before placing
    case NodeKind::Sync: return "sync";                // expanded before placing
  }
  return "?";
}

namespace {

GadgetKind parse_kind_tokens(std::istringstream& iss) {
  std::string head;
  iss >> head;
  GadgetKind k;
  auto color_arg = [&]() {
    std::string c;
    iss >> c;
    return c == "black" ? Color::Black : Color::Red;
  };
  if (head == "start") {
    k.node = NodeKind::Start;
    k.color_a = color_arg();
  } else if (head == "finish") {
    k.node = NodeKind::Finish;
    k.color_a = color_arg();
  } else if (head == "turn") {
    k.node = NodeKind::Turn;
  } else if (head == "switch") {
    k.node = NodeKind::Switch;
    iss >> k.fan;
  } else if (head == "merge") {
    k.node = NodeKind::Merge;
    iss >> k.fan;
  } else if (head == "one_way") {
    k.node = NodeKind::OneWay;
    k.color_a = color_arg();
  } else if (head == "crossover") {
    k.node = NodeKind::Crossover;
    k.color_a = color_arg();
    k.color_b = color_arg();
  } else if (head == "door") {
    k.node = NodeKind::Door;
    std::string spec;
    iss >> spec;
    for (DoorSpec s :
         {DoorSpec::RR, DoorSpec::BB, DoorSpec::RRR, DoorSpec::BBB,
          DoorSpec::RBR, DoorSpec::BRB, DoorSpec::BBR, DoorSpec::RRB}) {
      if (spec == to_string(s)) {
        k.door = s;
        break;
      }
    }
  } else if (head == "alternation") {
    k.node = NodeKind::Alternation;
  } else if (head == "sync") {
    k.node = NodeKind::Sync;
  } else {
    throw std::runtime_error("unknown node kind '" + head + "'");
  }
  return k;
}

}  // namespace

std::string dump_graph(const GadgetGraph& g) {
  std::ostringstream out;
  auto nodes = g.nodes;
  std::sort(nodes.begin(), nodes.end(),
            [](const GadgetNode& a, const GadgetNode& b) { return a.id < b.id; });
  for (const auto& n : nodes) {
    out << "node " << n.id << ' ' << kind_string(n.kind);
    if (!n.label.empty()) out << ' ' << n.label;
    out << '\n';
  }
  auto edges = g.edges;
  std::sort(edges.begin(), edges.end(),
            [](const GadgetEdge& a, const GadgetEdge& b) { return a.id < b.id; });
  for (const auto& e : edges)
    out << "edge " << e.from.node << '.' << e.from.port << " -> "
        << e.to.node << '.' << e.to.port << '\n';
  for (const auto& [id, state] : g.initial_door_states)
    out << "state " << id << ' '
        << (state == DoorState::Open ? "open" : "closed") << '\n';
  return out.str();
}

GadgetGraph parse_graph(const std::string& text) {
  GadgetGraph g;
  std::istringstream in(text);
  std::string line;
  int max_id = -1;
  while (std::getline(in, line)) {
    std::istringstream iss(line);
    std::string word;
    if (!(iss >> word)) continue;
    if (word == "node") {
      int id;
      iss >> id;
      GadgetKind kind = parse_kind_tokens(iss);
      std::string label;
      std::getline(iss, label);
      if (!label.empty() && label[0] == ' ') label.erase(0, 1);
      GadgetNode n;
      n.id = id;
      n.kind = kind;
      n.label = label;
      n.ports = canonical_ports(kind);
      g.nodes.push_back(std::move(n));
      max_id = std::max(max_id, id);
    } else if (word == "edge") {
      std::string from, arrow, to;
      iss >> from >> arrow >> to;
      auto split = [](const std::string& s) {
        size_t dot = s.find('.');
        return PortRef{std::stoi(s.substr(0, dot)), s.substr(dot + 1)};
      };
      PortRef f = split(from), t = split(to);
      // rapid ports only exist where edges reference them
      for (PortRef* ref : {&f, &t}) {
        GadgetNode* n = nullptr;
        for (auto& cand : g.nodes)
          if (cand.id == ref->node) n = &cand;
        if (n && ref->port.rfind("rapid_", 0) == 0) {
          bool have = false;
          for (const auto& p : n->ports) have |= p.name == ref->port;
          if (!have)
            n->ports.push_back({ref->port, false, PortRole::Rapid,
                                ref->port == "rapid_red" ? Color::Red
                                                         : Color::Black});
        }
      }
      g.connect(f, t);
    } else if (word == "state") {
      int id;
      std::string state;
      iss >> id >> state;
      g.initial_door_states[id] =
          state == "open" ? DoorState::Open : DoorState::Closed;
    }
  }
  g.set_id_floor(max_id + 1, static_cast<int>(g.edges.size()));
  return g;
}

}  // namespace hardboard
