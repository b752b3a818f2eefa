#include "strebel/surface.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace strebel {

const char* side_name(Side s) {
  switch (s) {
    case Side::Bottom: return "bottom";
    case Side::Right: return "right";
    case Side::Top: return "top";
    case Side::Left: return "left";
  }
  return "?";
}

Side side_parse(const std::string& name) {
  if (name == "bottom") return Side::Bottom;
  if (name == "right") return Side::Right;
  if (name == "top") return Side::Top;
  if (name == "left") return Side::Left;
  throw surface_error("unknown side '" + name + "'");
}

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) {
    for (int i = 0; i < n; ++i) parent[i] = i;
  }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

bool legal_orientation(Side a, Side b, Orientation o) {
  if (o == Orientation::HalfTurn) return a == b;
  if (is_horizontal(a) && is_horizontal(b)) return a != b;  // Bottom <-> Top
  if (is_vertical(a) && is_vertical(b)) return a != b;      // Left <-> Right
  return false;
}

}  // namespace

Surface Surface::validate(const RectangleComplex& input) {
  Surface s;
  s.spec_ = input;

  if (input.field_d != 0 && !is_squarefree(input.field_d))
    throw surface_error("field_d must be 0 or a squarefree positive integer");

  if (input.rectangles.empty()) throw surface_error("no rectangles");
  std::set<std::string> ids;
  for (const auto& r : input.rectangles) {
    if (r.id.empty()) throw surface_error("rectangle with empty id");
    if (!ids.insert(r.id).second) throw surface_error("duplicate rectangle id '" + r.id + "'");
    if (r.width.sign() <= 0 || r.height.sign() <= 0)
      throw surface_error("rectangle '" + r.id + "' must have positive width and height");
  }

  auto check_field = [&](const Scalar& v, const char* what) {
    if (!v.is_rational() && v.field_d() != input.field_d)
      throw surface_error(std::string(what) + " lies in sqrt(" + std::to_string(v.field_d()) +
                          ") but field_d is " + std::to_string(input.field_d));
  };
  for (const auto& r : input.rectangles) {
    check_field(r.width, "rectangle width");
    check_field(r.height, "rectangle height");
  }

  int nr = static_cast<int>(input.rectangles.size());
  auto side_extent = [&](int rect, Side sd) -> const Scalar& {
    return is_horizontal(sd) ? input.rectangles[rect].width : input.rectangles[rect].height;
  };

  // Collect the segments claimed on each side and verify an exact tiling.
  struct Claim {
    Scalar offset, length;
    int gluing;
    bool is_from;
  };
  std::vector<std::array<std::vector<Claim>, 4>> claims(nr);
  int gi = 0;
  for (const auto& g : input.gluings) {
    check_field(g.from.offset, "gluing offset");
    check_field(g.to.offset, "gluing offset");
    check_field(g.length, "gluing length");
    if (g.length.sign() <= 0) throw surface_error("gluing with non-positive length");
    for (const SegmentEnd* e : {&g.from, &g.to}) {
      if (e->rect < 0 || e->rect >= nr) throw surface_error("gluing references unknown rectangle");
      if (e->offset.sign() < 0 || e->offset + g.length > side_extent(e->rect, e->side))
        throw surface_error("gluing segment outside side extents");
    }
    if (!legal_orientation(g.from.side, g.to.side, g.orientation))
      throw surface_error(std::string("illegal gluing: ") + side_name(g.from.side) + " to " +
                          side_name(g.to.side) + (g.orientation == Orientation::HalfTurn
                                                      ? " by half-turn"
                                                      : " by translation"));
    if (g.from.rect == g.to.rect && g.from.side == g.to.side && g.from.offset == g.to.offset)
      throw surface_error("segment glued to itself; subdivide to encode a fold");
    claims[g.from.rect][static_cast<int>(g.from.side)].push_back({g.from.offset, g.length, gi, true});
    claims[g.to.rect][static_cast<int>(g.to.side)].push_back({g.to.offset, g.length, gi, false});
    ++gi;
  }

  s.sides_.assign(nr, {});
  for (int r = 0; r < nr; ++r) {
    for (int sd = 0; sd < 4; ++sd) {
      auto& cl = claims[r][sd];
      std::sort(cl.begin(), cl.end(),
                [](const Claim& a, const Claim& b) { return a.offset < b.offset; });
      const Scalar& extent = side_extent(r, static_cast<Side>(sd));
      Scalar cursor(0);
      SideInfo info;
      info.cuts.push_back(Scalar(0));
      for (const auto& c : cl) {
        if (c.offset != cursor)
          throw surface_error("side " + input.rectangles[r].id + "." +
                              side_name(static_cast<Side>(sd)) +
                              " is not exactly tiled by gluing segments (gap or overlap at offset " +
                              cursor.str() + ")");
        cursor += c.length;
        info.cuts.push_back(cursor);
      }
      if (cl.empty() || cursor != extent)
        throw surface_error("side " + input.rectangles[r].id + "." +
                            side_name(static_cast<Side>(sd)) + " is not fully glued");
      info.seg_edge.assign(cl.size(), -1);
      s.sides_[r][sd] = std::move(info);
    }
  }

  // Directed edges: one per (gluing end); twin wiring.
  for (int r = 0; r < nr; ++r) {
    for (int sd = 0; sd < 4; ++sd) {
      auto& cl = claims[r][sd];
      for (size_t k = 0; k < cl.size(); ++k) {
        DirEdge e;
        e.rect = r;
        e.side = static_cast<Side>(sd);
        e.seg_index = static_cast<int>(k);
        e.gluing = cl[k].gluing;
        s.sides_[r][sd].seg_edge[k] = static_cast<int>(s.edges_.size());
        s.edges_.push_back(e);
      }
    }
  }
  // Resolve twins: for each gluing find its two directed edges.
  {
    std::vector<std::array<int, 2>> ends(input.gluings.size(), {-1, -1});
    for (int idx = 0; idx < static_cast<int>(s.edges_.size()); ++idx) {
      int g = s.edges_[idx].gluing;
      if (ends[g][0] < 0)
        ends[g][0] = idx;
      else
        ends[g][1] = idx;
    }
    for (auto& pr : ends) {
      if (pr[0] < 0 || pr[1] < 0) throw surface_error("internal: unmatched gluing end");
      s.edges_[pr[0]].twin = DirEdgeId{pr[1]};
      s.edges_[pr[1]].twin = DirEdgeId{pr[0]};
    }
  }

  // Connectivity over rectangles.
  UnionFind uf(nr);
  for (const auto& g : input.gluings) uf.unite(g.from.rect, g.to.rect);
  for (int r = 1; r < nr; ++r)
    if (uf.find(r) != uf.find(0)) throw surface_error("surface is not connected");

  if (s.area().sign() <= 0) throw surface_error("total area must be positive");

  s.compute_vertices();

  // Resolve puncture marks.
  for (const auto& p : input.punctures) {
    if (p.rect < 0 || p.rect >= nr) throw surface_error("puncture references unknown rectangle");
    const auto& info = s.sides_[p.rect][static_cast<int>(p.side)];
    auto it = std::find(info.cuts.begin(), info.cuts.end(), p.offset);
    if (it == info.cuts.end())
      throw surface_error("puncture at " + input.rectangles[p.rect].id + "." + side_name(p.side) +
                          " offset " + p.offset.str() +
                          " does not land on a corner or segment endpoint");
    NodeId n{p.rect, static_cast<int>(p.side), static_cast<int>(it - info.cuts.begin())};
    // canonicalization happens inside vertex lookup
    int v = s.vertex_of_node_raw(n);
    s.vertices_[v].is_puncture = true;
  }

  s.singularities_.clear();
  for (const auto& v : s.vertices_)
    if (v.cone_k != 2 || v.is_puncture)
      s.singularities_.push_back({v.id, v.cone_k, v.is_puncture});

  // Gauss-Bonnet: sum over vertex classes of (2 - k) equals 2*chi.
  long gb = 0;
  for (const auto& v : s.vertices_) gb += 2 - v.cone_k;
  if (gb != 2 * s.euler_characteristic())
    throw surface_error("internal: cone-angle sum violates Gauss-Bonnet");

  return s;
}

Scalar Surface::area() const {
  Scalar a(0);
  for (const auto& r : spec_.rectangles) a += r.width * r.height;
  return a;
}

Scalar Surface::max_height() const {
  Scalar m = spec_.rectangles.front().height;
  for (const auto& r : spec_.rectangles) m = strebel::max(m, r.height);
  return m;
}

Surface Surface::geodesic_flow(const Scalar& lambda) const {
  if (lambda.sign() <= 0) throw surface_error("flow parameter lambda must be positive");
  RectangleComplex out = spec_;
  for (auto& r : out.rectangles) r.width = r.width * lambda;
  for (auto& g : out.gluings) {
    if (is_horizontal(g.from.side)) {
      // horizontal sides glue to horizontal sides only, so both ends scale
      g.from.offset = g.from.offset * lambda;
      g.to.offset = g.to.offset * lambda;
      g.length = g.length * lambda;
    }
  }
  for (auto& p : out.punctures)
    if (is_horizontal(p.side)) p.offset = p.offset * lambda;
  return validate(out);
}

Surface Surface::rotate90() const {
  RectangleComplex out;
  out.field_d = spec_.field_d;
  for (const auto& r : spec_.rectangles) out.rectangles.push_back({r.id, r.height, r.width});
  // ccw rotation: Bottom->Right (keep offsets), Right->Top (reverse),
  // Top->Left (keep), Left->Bottom (reverse).
  auto map_end = [&](const SegmentEnd& e, const Scalar& len) -> SegmentEnd {
    SegmentEnd m;
    m.rect = e.rect;
    switch (e.side) {
      case Side::Bottom:
        m.side = Side::Right;
        m.offset = e.offset;
        break;
      case Side::Right:
        m.side = Side::Top;
        m.offset = spec_.rectangles[e.rect].height - e.offset - len;
        break;
      case Side::Top:
        m.side = Side::Left;
        m.offset = e.offset;
        break;
      case Side::Left:
        m.side = Side::Bottom;
        m.offset = spec_.rectangles[e.rect].height - e.offset - len;
        break;
    }
    return m;
  };
  for (const auto& g : spec_.gluings) {
    Gluing m;
    m.length = g.length;
    m.orientation = g.orientation;
    m.from = map_end(g.from, g.length);
    m.to = map_end(g.to, g.length);
    out.gluings.push_back(m);
  }
  for (const auto& p : spec_.punctures) {
    SegmentEnd e{p.rect, p.side, p.offset};
    SegmentEnd m = map_end(e, Scalar(0));
    out.punctures.push_back({m.rect, m.side, m.offset});
  }
  return validate(out);
}

// ccw segment order: Bottom ascending, Right ascending, Top descending,
// Left descending.
DirEdgeId Surface::next_in_rect(DirEdgeId eid) const {
  const DirEdge& e = edges_[eid.value];
  int r = e.rect;
  auto seg_count = [&](Side sd) {
    return static_cast<int>(sides_[r][static_cast<int>(sd)].seg_edge.size());
  };
  auto edge_at = [&](Side sd, int k) {
    return DirEdgeId{sides_[r][static_cast<int>(sd)].seg_edge[k]};
  };
  switch (e.side) {
    case Side::Bottom:
      if (e.seg_index + 1 < seg_count(Side::Bottom)) return edge_at(Side::Bottom, e.seg_index + 1);
      return edge_at(Side::Right, 0);
    case Side::Right:
      if (e.seg_index + 1 < seg_count(Side::Right)) return edge_at(Side::Right, e.seg_index + 1);
      return edge_at(Side::Top, seg_count(Side::Top) - 1);
    case Side::Top:
      if (e.seg_index > 0) return edge_at(Side::Top, e.seg_index - 1);
      return edge_at(Side::Left, seg_count(Side::Left) - 1);
    case Side::Left:
      if (e.seg_index > 0) return edge_at(Side::Left, e.seg_index - 1);
      return edge_at(Side::Bottom, 0);
  }
  throw surface_error("unreachable");
}

DirEdgeId Surface::prev_in_rect(DirEdgeId eid) const {
  const DirEdge& e = edges_[eid.value];
  int r = e.rect;
  auto seg_count = [&](Side sd) {
    return static_cast<int>(sides_[r][static_cast<int>(sd)].seg_edge.size());
  };
  auto edge_at = [&](Side sd, int k) {
    return DirEdgeId{sides_[r][static_cast<int>(sd)].seg_edge[k]};
  };
  switch (e.side) {
    case Side::Bottom:
      if (e.seg_index > 0) return edge_at(Side::Bottom, e.seg_index - 1);
      return edge_at(Side::Left, 0);
    case Side::Right:
      if (e.seg_index > 0) return edge_at(Side::Right, e.seg_index - 1);
      return edge_at(Side::Bottom, seg_count(Side::Bottom) - 1);
    case Side::Top:
      if (e.seg_index + 1 < seg_count(Side::Top)) return edge_at(Side::Top, e.seg_index + 1);
      return edge_at(Side::Right, seg_count(Side::Right) - 1);
    case Side::Left:
      if (e.seg_index + 1 < seg_count(Side::Left)) return edge_at(Side::Left, e.seg_index + 1);
      return edge_at(Side::Top, 0);
  }
  throw surface_error("unreachable");
}

// Node canonicalization: corners are owned by the horizontal sides.
// (rect, Bottom, 0)=(0,0), (rect, Bottom, last)=(w,0),
// (rect, Top, 0)=(0,h), (rect, Top, last)=(w,h).
NodeId Surface::canonical_node(NodeId n) const {
  const auto& cuts = sides_[n.rect][n.side].cuts;
  int last = static_cast<int>(cuts.size()) - 1;
  Side sd = static_cast<Side>(n.side);
  if (sd == Side::Left) {
    if (n.index == 0) return {n.rect, static_cast<int>(Side::Bottom), 0};
    if (n.index == last) return {n.rect, static_cast<int>(Side::Top), 0};
  } else if (sd == Side::Right) {
    if (n.index == 0)
      return {n.rect, static_cast<int>(Side::Bottom),
              static_cast<int>(sides_[n.rect][static_cast<int>(Side::Bottom)].cuts.size()) - 1};
    if (n.index == last)
      return {n.rect, static_cast<int>(Side::Top),
              static_cast<int>(sides_[n.rect][static_cast<int>(Side::Top)].cuts.size()) - 1};
  }
  return n;
}

std::pair<Scalar, Scalar> Surface::edge_span_ccw(DirEdgeId eid) const {
  const DirEdge& e = edges_[eid.value];
  const auto& cuts = sides_[e.rect][static_cast<int>(e.side)].cuts;
  Scalar lo = cuts[e.seg_index], hi = cuts[e.seg_index + 1];
  if (e.side == Side::Bottom || e.side == Side::Right) return {lo, hi};
  return {hi, lo};  // Top and Left are traversed against increasing offset
}

NodeId Surface::edge_start(DirEdgeId eid) const {
  const DirEdge& e = edges_[eid.value];
  int idx = (e.side == Side::Bottom || e.side == Side::Right) ? e.seg_index : e.seg_index + 1;
  return canonical_node({e.rect, static_cast<int>(e.side), idx});
}

NodeId Surface::edge_end(DirEdgeId eid) const {
  const DirEdge& e = edges_[eid.value];
  int idx = (e.side == Side::Bottom || e.side == Side::Right) ? e.seg_index + 1 : e.seg_index;
  return canonical_node({e.rect, static_cast<int>(e.side), idx});
}

Scalar Surface::map_offset_across(DirEdgeId eid, const Scalar& offset) const {
  const DirEdge& e = edges_[eid.value];
  const DirEdge& t = edges_[e.twin.value];
  const auto& cuts = sides_[e.rect][static_cast<int>(e.side)].cuts;
  const auto& tcuts = sides_[t.rect][static_cast<int>(t.side)].cuts;
  Scalar o1 = cuts[e.seg_index];
  Scalar len = cuts[e.seg_index + 1] - o1;
  Scalar o2 = tcuts[t.seg_index];
  Scalar s = offset - o1;
  const Gluing& g = spec_.gluings[e.gluing];
  if (g.orientation == Orientation::Translation) return o2 + s;
  return o2 + (len - s);
}

void Surface::compute_vertices() {
  vertices_.clear();
  vertices_cycle_.clear();
  node_vertex_.clear();

  std::vector<char> seen(edges_.size(), 0);
  for (int start = 0; start < static_cast<int>(edges_.size()); ++start) {
    if (seen[start]) continue;
    VertexClass vc;
    vc.id = static_cast<int>(vertices_.size());
    std::vector<DirEdgeId> cycle;
    int quarter_units = 0;  // angle in units of pi/2
    DirEdgeId cur{start};
    do {
      seen[cur.value] = 1;
      cycle.push_back(cur);
      NodeId n = edge_start(cur);
      vc.members.push_back(n);
      // corner angle: pi/2 at a rectangle corner, pi at a side-interior node
      const DirEdge& e = edges_[cur.value];
      bool first_in_side = (e.side == Side::Bottom || e.side == Side::Right)
                               ? e.seg_index == 0
                               : e.seg_index + 1 ==
                                     static_cast<int>(sides_[e.rect][static_cast<int>(e.side)]
                                                          .seg_edge.size());
      quarter_units += first_in_side ? 1 : 2;
      cur = next_in_rect(edges_[cur.value].twin);
    } while (cur.value != start);

    if (quarter_units % 2 != 0)
      throw surface_error("internal: cone angle is not a multiple of pi");
    vc.cone_k = quarter_units / 2;
    for (const NodeId& n : vc.members) {
      auto [it, inserted] = node_vertex_.emplace(n, vc.id);
      if (!inserted && it->second != vc.id)
        throw surface_error("internal: node assigned to two vertex classes");
    }
    vertices_.push_back(std::move(vc));
    vertices_cycle_.push_back(std::move(cycle));
  }
}

int Surface::vertex_of_node_raw(NodeId n) const {
  auto it = node_vertex_.find(canonical_node(n));
  if (it == node_vertex_.end()) throw surface_error("internal: unknown boundary node");
  return it->second;
}

bool Surface::is_singular_vertex(int v) const {
  return vertices_[v].cone_k != 2 || vertices_[v].is_puncture;
}

int Surface::euler_characteristic() const {
  return static_cast<int>(vertices_.size()) - static_cast<int>(spec_.gluings.size()) +
         static_cast<int>(spec_.rectangles.size());
}

int Surface::genus() const {
  int chi = euler_characteristic();
  if ((2 - chi) % 2 != 0) throw surface_error("internal: odd Euler defect");
  return (2 - chi) / 2;
}

std::string Surface::canonical_key() const {
  std::ostringstream os;
  os << "d=" << spec_.field_d << ";";
  for (const auto& r : spec_.rectangles)
    os << "R(" << r.id << "," << r.width.str() << "," << r.height.str() << ");";
  std::vector<std::string> gl;
  for (const auto& g : spec_.gluings) {
    auto end_str = [&](const SegmentEnd& e) {
      return spec_.rectangles[e.rect].id + "." + side_name(e.side) + "@" + e.offset.str();
    };
    std::string a = end_str(g.from), b = end_str(g.to);
    if (b < a) std::swap(a, b);
    gl.push_back(a + "|" + b + "|" + g.length.str() + "|" +
                 (g.orientation == Orientation::HalfTurn ? "h" : "t"));
  }
  std::sort(gl.begin(), gl.end());
  for (const auto& x : gl) os << "G(" << x << ");";
  std::vector<std::string> pn;
  for (const auto& p : spec_.punctures)
    pn.push_back(spec_.rectangles[p.rect].id + "." + side_name(p.side) + "@" + p.offset.str());
  std::sort(pn.begin(), pn.end());
  for (const auto& x : pn) os << "P(" << x << ");";
  return os.str();
}

}  // namespace strebel
