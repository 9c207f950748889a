#ifndef HARDBOARD_BUILDER_INTERNAL_HPP_
#define HARDBOARD_BUILDER_INTERNAL_HPP_

#include <set>

#include "hardboard/gadget_graph.hpp"

namespace hardboard {

// Routes every edge as an axis-aligned polyline over the builders' logical
// (col,row) grid and inserts a Crossover node at each wire intersection,
// sweeping intersections left to right, top to bottom. Crossover nodes are
// placed mid-channel so the layout can realize them as crossover tiles.
// only_edges restricts the pass to a subset (used when expanding
// composites, whose fresh wiring lives in columns of its own);
// bus_above keeps the subset's long-haul lanes clear of earlier ones.
void insert_crossovers(GadgetGraph& g,
                       const std::set<int>* only_edges = nullptr,
                       bool bus_above = false);

// Shared builder helpers.
struct ChainCursor {
  GadgetGraph* graph;
  PortRef tail;  // current exit port awaiting connection

  // Connects tail -> node.in_port and moves tail to node.out_port.
  void through(int node, const std::string& in_port,
               const std::string& out_port) {
    graph->connect(tail, {node, in_port});
    tail = {node, out_port};
  }
  void into(PortRef entrance) { graph->connect(tail, entrance); }
};

}  // namespace hardboard

#endif  // HARDBOARD_BUILDER_INTERNAL_HPP_
