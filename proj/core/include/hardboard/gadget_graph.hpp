#ifndef HARDBOARD_GADGET_GRAPH_HPP_
#define HARDBOARD_GADGET_GRAPH_HPP_

#include <map>
#include <string>
#include <vector>

#include "hardboard/formula.hpp"
#include "hardboard/gadget_template.hpp"

namespace hardboard {

enum class NodeKind {
  Start,
  Finish,
  Turn,
  Switch,
  Merge,
  OneWay,
  Crossover,
  Door,
  Alternation,
  Sync
};

// Door path colors as (open, traverse, close) letters. RR and BB are the
// two-path doors of the NP framework: an open path and a traverse path
// but no close path.
enum class DoorSpec { RR, BB, RRR, BBB, RBR, BRB, BBR, RRB };

Color door_open_color(DoorSpec s);
Color door_traverse_color(DoorSpec s);
bool door_has_close(DoorSpec s);
Color door_close_color(DoorSpec s);
// Opening on open-path transit: mandatory for RBR/BRB, optional otherwise.
bool door_open_mandatory(DoorSpec s);
// Closing on close-path transit: mandatory for RRR/BBB, optional for the rest.
bool door_close_mandatory(DoorSpec s);
const char* to_string(DoorSpec s);

struct GadgetKind {
  NodeKind node = NodeKind::Turn;
  Color color_a = Color::Red;  // primary color; crossover path A
  Color color_b = Color::Black;  // crossover path B
  int fan = 0;                 // switch fanout / merge fanin, >= 2
  DoorSpec door = DoorSpec::RR;

  bool operator==(const GadgetKind&) const = default;
};

struct PortSpec {
  std::string name;
  bool entrance = false;
  PortRole role = PortRole::Plain;
  Color color = Color::Red;
};

// The canonical port set of a kind; Door nodes may additionally carry
// rapid exit ports appended by the builders.
std::vector<PortSpec> canonical_ports(const GadgetKind& kind);

struct GadgetNode {
  int id = 0;
  GadgetKind kind;
  std::string label;
  std::vector<PortSpec> ports;
  // planarization coordinates used while building; not serialized
  int col = 0;
  int row = 0;
};

struct PortRef {
  int node = 0;
  std::string port;
  auto operator<=>(const PortRef&) const = default;
};

struct GadgetEdge {
  int id = 0;
  PortRef from;  // an exit port
  PortRef to;    // an entrance port
  Color color = Color::Red;
};

// Round-scheduler annotation for a synchronization gadget; preserved by
// expand_composites so the abstract scheduler keeps working on the
// expanded graph (the board-level step race has no abstract analogue).
struct SyncGroup {
  PortRef red_out, red_in, black_out, black_in;
  std::vector<int> members;  // node ids of the expanded assembly
};

struct GadgetGraph {
  std::vector<GadgetNode> nodes;
  std::vector<GadgetEdge> edges;
  std::map<int, DoorState> initial_door_states;
  std::vector<SyncGroup> sync_groups;

  int add_node(GadgetKind kind, std::string label, int col = 0, int row = 0);
  // Connects an exit to an entrance; the colors must match.
  int connect(PortRef from, PortRef to);
  void add_rapid_port(int door_id, Color color);
  void set_id_floor(int node_floor, int edge_floor);

  const GadgetNode* node(int id) const;
  GadgetNode* node(int id);
  const PortSpec* port(const PortRef& ref) const;
  const GadgetEdge* edge_at(const PortRef& ref) const;  // either endpoint
  std::vector<const GadgetEdge*> edges_at_node(int id) const;

  int count_kind(NodeKind k) const;
  int count_doors(DoorSpec s) const;
  std::vector<int> door_ids() const;

 private:
  int next_node_id_ = 0;
  int next_edge_id_ = 0;
};

GadgetGraph build_np(const CnfFormula& f);
GadgetGraph build_pspace(const Qbf& q);
GadgetGraph build_exptime(const G2Instance& g);

// Rewrites Alternation and Sync nodes into primitive gadgets; idempotent.
GadgetGraph expand_composites(const GadgetGraph& g);

// Report-only structural validation; empty result means a clean graph.
std::vector<std::string> validate_graph(const GadgetGraph& g);

std::string dump_graph(const GadgetGraph& g);
GadgetGraph parse_graph(const std::string& text);

std::string kind_string(const GadgetKind& kind);  // e.g. "door rbr"
// Template kind used to realize this node on a board, e.g. "door_rbr".
std::string template_kind_for(const GadgetKind& kind);

}  // namespace hardboard

#endif  // HARDBOARD_GADGET_GRAPH_HPP_
