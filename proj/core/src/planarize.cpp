#include <algorithm>
#include <cstdint>
#include <map>

#include "builder_internal.hpp"

namespace hardboard {

namespace {

// Scaled integer geometry: logical grid cell (col,row) sits at
// (col*kScale, row*kScale). Ports and channel lanes get small fractional
// offsets so no two distinct wires share a line.
constexpr int64_t kScale = 1 << 16;

struct Seg {
  bool vertical;
  int64_t fixed;     // x for vertical, y for horizontal
  int64_t lo, hi;    // varying coordinate, lo < hi
  int64_t from;      // varying coordinate at the segment's path start
};

struct Polyline {
  std::vector<Seg> segs;
};

struct Crossing {
  int64_t x, y;
  size_t edge_v, edge_h;  // indices into the edge array
  // position along each edge for split ordering
  std::pair<size_t, int64_t> pos_v, pos_h;
};

int64_t port_offset(const GadgetGraph& g, const PortRef& ref) {
  const GadgetNode* n = g.node(ref.node);
  for (size_t i = 0; i < n->ports.size(); ++i)
    if (n->ports[i].name == ref.port) return static_cast<int64_t>(i) + 1;
  return 1;
}

Seg make_seg(int64_t x1, int64_t y1, int64_t x2, int64_t y2) {
  Seg s;
  if (x1 == x2) {
    s.vertical = true;
    s.fixed = x1;
    s.lo = std::min(y1, y2);
    s.hi = std::max(y1, y2);
    s.from = y1;
  } else {
    s.vertical = false;
    s.fixed = y1;
    s.lo = std::min(x1, x2);
    s.hi = std::max(x1, x2);
    s.from = x1;
  }
  return s;
}

}  // namespace

void insert_crossovers(GadgetGraph& g, const std::set<int>* only_edges,
                       bool bus_above) {
  if (g.edges.empty()) return;

  int max_row = 0, max_col = 0;
  for (const auto& n : g.nodes) {
    max_row = std::max(max_row, n.row);
    max_col = std::max(max_col, n.col);
  }
  int min_row = 0;
  for (const auto& n : g.nodes) min_row = std::min(min_row, n.row);

  // channel lane allocation: per source column, in edge order
  std::map<int, int> channel_lanes;
  int bus_lanes = 0;

  std::vector<size_t> active;
  for (size_t i = 0; i < g.edges.size(); ++i)
    if (!only_edges || only_edges->count(g.edges[i].id)) active.push_back(i);

  std::vector<Polyline> lines(g.edges.size());
  for (size_t i : active) {
    const GadgetEdge& e = g.edges[i];
    const GadgetNode* a = g.node(e.from.node);
    const GadgetNode* b = g.node(e.to.node);
    int64_t sx = a->col * kScale + port_offset(g, e.from);
    int64_t sy = a->row * kScale;
    int64_t tx = b->col * kScale - port_offset(g, e.to);
    int64_t ty = b->row * kScale;

    Polyline& line = lines[i];
    if (b->col == a->col + 1 || b->col == a->col) {
      // short edge: through the channel right of the source column
      int lane = channel_lanes[a->col]++;
      int64_t lx = a->col * kScale + kScale / 2 + 8 * (lane + 1);
      line.segs.push_back(make_seg(sx, sy, lx, sy));
      if (sy != ty) line.segs.push_back(make_seg(lx, sy, lx, ty));
      line.segs.push_back(make_seg(lx, ty, tx, ty));
    } else {
      // long edge: down to a bus row below the grid, across, back up
      int src_lane = channel_lanes[a->col]++;
      int dst_lane = channel_lanes[b->col - 1]++;
      int64_t lx1 = a->col * kScale + kScale / 2 + 8 * (src_lane + 1);
      int64_t lx2 = (b->col - 1) * kScale + kScale / 2 + 8 * (dst_lane + 1);
      int64_t by = bus_above ? (min_row - 1) * kScale - 8 * (++bus_lanes)
                             : (max_row + 1) * kScale + 8 * (++bus_lanes);
      line.segs.push_back(make_seg(sx, sy, lx1, sy));
      line.segs.push_back(make_seg(lx1, sy, lx1, by));
      line.segs.push_back(make_seg(lx1, by, lx2, by));
      line.segs.push_back(make_seg(lx2, by, lx2, ty));
      line.segs.push_back(make_seg(lx2, ty, tx, ty));
    }
  }

  // pairwise proper intersections between vertical and horizontal segments
  std::vector<Crossing> crossings;
  for (size_t i : active) {
    for (size_t j : active) {
      if (i == j) continue;
      for (size_t si = 0; si < lines[i].segs.size(); ++si) {
        const Seg& v = lines[i].segs[si];
        if (!v.vertical) continue;
        for (size_t sj = 0; sj < lines[j].segs.size(); ++sj) {
          const Seg& h = lines[j].segs[sj];
          if (h.vertical) continue;
          if (v.fixed <= h.lo || v.fixed >= h.hi) continue;
          if (h.fixed <= v.lo || h.fixed >= v.hi) continue;
          Crossing c;
          c.x = v.fixed;
          c.y = h.fixed;
          c.edge_v = i;
          c.edge_h = j;
          c.pos_v = {si, std::abs(h.fixed - v.from)};
          c.pos_h = {sj, std::abs(v.fixed - h.from)};
          crossings.push_back(c);
        }
      }
    }
  }
  if (crossings.empty()) return;

  // left-to-right, top-to-bottom sweep; "top" is the high row end
  std::sort(crossings.begin(), crossings.end(),
            [](const Crossing& a, const Crossing& b) {
              if (a.x != b.x) return a.x < b.x;
              if (a.y != b.y) return a.y > b.y;
              return std::make_pair(a.edge_v, a.edge_h) <
                     std::make_pair(b.edge_v, b.edge_h);
            });

  // create crossover nodes; path a = the vertical wire
  struct Split {
    std::pair<size_t, int64_t> pos;
    int xover_id;
    bool as_path_a;
  };
  std::vector<std::vector<Split>> splits(g.edges.size());
  for (const Crossing& c : crossings) {
    GadgetKind kind;
    kind.node = NodeKind::Crossover;
    kind.color_a = g.edges[c.edge_v].color;
    kind.color_b = g.edges[c.edge_h].color;
    int col = static_cast<int>(c.x / kScale);
    int row = static_cast<int>(std::min<int64_t>(c.y / kScale, max_row));
    int id = g.add_node(kind, "crossing", col, row);
    splits[c.edge_v].push_back({c.pos_v, id, true});
    splits[c.edge_h].push_back({c.pos_h, id, false});
  }

  // rebuild the crossed edges as chains through their crossovers
  std::vector<GadgetEdge> old_edges = g.edges;
  g.edges.clear();
  g.set_id_floor(0, 0);
  int edge_id = 0;
  for (size_t i = 0; i < old_edges.size(); ++i) {
    auto& list = splits[i];
    std::sort(list.begin(), list.end(), [](const Split& a, const Split& b) {
      return a.pos < b.pos;
    });
    PortRef cursor = old_edges[i].from;
    for (const Split& s : list) {
      GadgetEdge e;
      e.id = edge_id++;
      e.from = cursor;
      e.to = {s.xover_id, s.as_path_a ? "a_in" : "b_in"};
      e.color = old_edges[i].color;
      g.edges.push_back(e);
      cursor = {s.xover_id, s.as_path_a ? "a_out" : "b_out"};
    }
    GadgetEdge e;
    e.id = edge_id++;
    e.from = cursor;
    e.to = old_edges[i].to;
    e.color = old_edges[i].color;
    g.edges.push_back(e);
  }
  g.set_id_floor(0, edge_id);
}

}  // namespace hardboard
