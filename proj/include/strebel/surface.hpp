#ifndef STREBEL_SURFACE_HPP
#define STREBEL_SURFACE_HPP

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "strebel/numeric.hpp"

namespace strebel {

struct surface_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class Side : uint8_t { Bottom = 0, Right = 1, Top = 2, Left = 3 };

inline bool is_horizontal(Side s) { return s == Side::Bottom || s == Side::Top; }
inline bool is_vertical(Side s) { return !is_horizontal(s); }
const char* side_name(Side s);
Side side_parse(const std::string& name);

enum class Orientation : uint8_t { Translation, HalfTurn };

// One end of a gluing: a sub-segment [offset, offset+length] of a rectangle
// side. Offsets run left-to-right on horizontal sides and bottom-to-top on
// vertical sides.
struct SegmentEnd {
  int rect = 0;
  Side side = Side::Bottom;
  Scalar offset;
};

struct Gluing {
  SegmentEnd from, to;
  Scalar length;
  Orientation orientation = Orientation::Translation;
};

// A point on a rectangle boundary, used for puncture marks. Must land on a
// corner or a gluing-segment endpoint.
struct BoundaryPointRef {
  int rect = 0;
  Side side = Side::Bottom;
  Scalar offset;
};

struct RectangleSpec {
  std::string id;
  Scalar width, height;
};

struct RectangleComplex {
  long field_d = 0;  // 0 = pure rationals
  std::vector<RectangleSpec> rectangles;
  std::vector<Gluing> gluings;
  std::vector<BoundaryPointRef> punctures;
};

// --- Derived combinatorial structure -------------------------------------

// Boundary nodes are the corners plus all gluing-segment endpoints, stored
// per side in increasing offset order. A directed edge is a gluing segment
// traversed counterclockwise around its rectangle.
struct NodeId {
  int rect;
  int side;   // Side as int
  int index;  // position in the sorted cut list of that side
  auto operator<=>(const NodeId&) const = default;
};

struct DirEdgeId {
  int value = -1;  // index into Surface::edges_
  bool operator==(const DirEdgeId&) const = default;
};

struct VertexClass {
  int id = 0;
  int cone_k = 0;  // cone angle = k * pi
  bool is_puncture = false;
  std::vector<NodeId> members;
};

struct Singularity {
  int vertex = 0;
  int cone_k = 0;
  bool is_puncture = false;
};

class Surface {
 public:
  // Checks every invariant; computes vertex classes, cone angles and the
  // ribbon data needed by the foliation machinery.
  static Surface validate(const RectangleComplex& input);

  const RectangleComplex& spec() const { return spec_; }
  long field_d() const { return spec_.field_d; }
  int num_rectangles() const { return static_cast<int>(spec_.rectangles.size()); }
  const Scalar& width(int r) const { return spec_.rectangles[r].width; }
  const Scalar& height(int r) const { return spec_.rectangles[r].height; }

  Scalar area() const;
  Scalar max_height() const;

  // Teichmuller geodesic flow with lambda = e^{2t}: widths and horizontal
  // offsets scale by lambda, vertical data untouched.
  Surface geodesic_flow(const Scalar& lambda) const;

  // Rotate the complex 90 degrees counterclockwise; vertical analysis of the
  // result is horizontal analysis of the original.
  Surface rotate90() const;

  // -- node/edge structure --
  struct SideInfo {
    std::vector<Scalar> cuts;    // sorted node offsets, cuts.front()=0, back()=extent
    std::vector<int> seg_edge;   // per gap i: directed-edge index covering [cuts[i], cuts[i+1]]
  };
  struct DirEdge {
    int rect;
    Side side;
    int seg_index;   // gap index on that side
    int gluing;      // index into spec().gluings
    DirEdgeId twin;  // glued directed edge (traversed oppositely)
  };

  const SideInfo& side_info(int rect, Side s) const { return sides_[rect][static_cast<int>(s)]; }
  const DirEdge& edge(DirEdgeId e) const { return edges_[e.value]; }
  int num_edges() const { return static_cast<int>(edges_.size()); }

  // ccw successor / predecessor of a directed edge around its rectangle
  DirEdgeId next_in_rect(DirEdgeId e) const;
  DirEdgeId prev_in_rect(DirEdgeId e) const;

  // Node at the ccw start / end of a directed edge (canonicalized).
  NodeId edge_start(DirEdgeId e) const;
  NodeId edge_end(DirEdgeId e) const;

  // Corner nodes are owned by the horizontal sides; this maps any
  // (rect, side, cut-index) to its canonical representative.
  NodeId canonical_node(NodeId n) const;

  // Geometric endpoints of a directed edge in its side's offset coordinate,
  // in ccw traversal order (start may exceed end on Top/Left sides).
  std::pair<Scalar, Scalar> edge_span_ccw(DirEdgeId e) const;

  // Image data of a point under the gluing of edge e: returns the partner
  // edge and the offset on the partner side.
  Scalar map_offset_across(DirEdgeId e, const Scalar& offset) const;

  int vertex_of_node_raw(NodeId n) const;  // canonicalizes, then looks up
  const std::vector<VertexClass>& vertex_classes() const { return vertices_; }
  const std::vector<Singularity>& singularities() const { return singularities_; }
  bool is_singular_vertex(int v) const;

  // Corner-walk cycle of a vertex, as the ccw-ordered list of directed edges
  // leaving the vertex (one per corner sector). Angular germ data for the
  // foliation is derived from this.
  const std::vector<DirEdgeId>& vertex_outgoing_cycle(int v) const {
    return vertices_cycle_[v];
  }

  int euler_characteristic() const;  // V - E + F of closed-up cell structure
  int genus() const;

  std::string canonical_key() const;  // stable content key for equality tests

 private:
  Surface() = default;
  void compute_vertices();

  RectangleComplex spec_;
  std::vector<std::array<SideInfo, 4>> sides_;
  std::vector<DirEdge> edges_;
  std::map<NodeId, int> node_vertex_;
  std::vector<VertexClass> vertices_;
  std::vector<std::vector<DirEdgeId>> vertices_cycle_;
  std::vector<Singularity> singularities_;
};

}  // namespace strebel

#endif
