#ifndef HARDBOARD_LAYOUT_HPP_
#define HARDBOARD_LAYOUT_HPP_

#include <map>
#include <string>
#include <vector>

#include "hardboard/gadget_graph.hpp"
#include "hardboard/gadget_template.hpp"

namespace hardboard {

struct ManifestRegion {
  Coord lo, hi;  // inclusive corners
  bool overlaps(const ManifestRegion& o) const {
    return lo.x <= o.hi.x && o.lo.x <= hi.x && lo.y <= o.hi.y && o.lo.y <= hi.y;
  }
};

struct ManifestGadget {
  int node_id = 0;
  std::string template_kind;
  Coord origin{};
  ManifestRegion region{};
};

struct ManifestWire {
  int edge_id = 0;
  Color color = Color::Red;
  int tile_w = 0, tile_h = 0;
  std::vector<Coord> tile_origins;
  std::vector<std::string> tile_kinds;  // parallel to tile_origins
};

struct PlacedPort {
  int node_id = 0;
  std::string name;
  Coord at{};
  Color color = Color::Red;
};

struct PlacementManifest {
  std::vector<ManifestGadget> gadgets;
  std::vector<ManifestWire> wires;
  std::vector<PlacedPort> ports;
};

struct Placement {
  GadgetGraph graph;  // composite-free
  Game game = Game::Janggi;
  int board_width = 0;
  int board_height = 0;
  int south_rows = 0;
  PlacementManifest manifest;
};

struct LayoutOptions {
  bool boundary_ring = false;
};

// Deterministic grid placement and wire routing. The graph must already
// be composite-free (expand_composites applied).
Placement place(const GadgetGraph& g, const TemplateLibrary& lib, Game game,
                const LayoutOptions& options = {});

struct EmitResult {
  BoardPosition board;
  std::string manifest_text;
};

EmitResult emit_board(const Placement& p, const TemplateLibrary& lib,
                      const LayoutOptions& options = {});

struct SizeReport {
  int width = 0;
  int height = 0;
  int piece_count = 0;
  std::map<std::string, int> per_template;  // template kind -> instances
  std::map<std::string, int> pieces_per_template;
  int wire_tiles = 0;
  int wire_pieces = 0;
};

SizeReport size_report(const Placement& p, const TemplateLibrary& lib);
std::string format_size_report(const SizeReport& r);

std::string manifest_to_text(const PlacementManifest& m);

}  // namespace hardboard

#endif  // HARDBOARD_LAYOUT_HPP_
