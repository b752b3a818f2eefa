#ifndef STREBEL_FOLIATION_HPP
#define STREBEL_FOLIATION_HPP

#include <map>
#include <optional>
#include <vector>

#include "strebel/iet.hpp"
#include "strebel/surface.hpp"

namespace strebel {

struct foliation_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A vertical direction at a vertex: either along a boundary edge (the
// outgoing directed edge identifies it uniquely) or into a rectangle
// interior from a flat corner on a horizontal side.
struct Germ {
  bool interior = false;
  DirEdgeId out_edge;  // edge germ
  int rect = -1;       // interior germ
  Scalar x;
  bool up = false;
  NodeId node{-1, -1, -1};
};

// Angular (ccw) germ lists per vertex, for all vertices.
std::vector<std::vector<Germ>> vertical_germs(const Surface& s);

struct ConnectionPiece {
  bool interior = false;
  int rect = -1;
  Scalar x;            // interior: the vertical line x = const in rect
  DirEdgeId edge;      // side piece: canonical directed edge
  bool up = false;     // traversal direction along the trace
  Scalar length;
};

struct SaddleConnection {
  int v_from = -1, v_to = -1;  // vertex ids
  int germ_from = -1, germ_to = -1;
  Scalar length;
  std::vector<ConnectionPiece> pieces;
};

struct InfiniteRay {
  int vertex = -1;
  int germ = -1;
  Scalar traced_length;  // budget exhausted beyond this
};

struct CriticalGraph {
  std::vector<int> singular_vertices;          // vertex ids, ascending
  std::vector<std::vector<Germ>> germs;        // per vertex id (all vertices)
  std::vector<SaddleConnection> connections;
  std::vector<InfiniteRay> rays;
  std::vector<int> component_of;               // per singular vertex (by position)
  int num_components = 0;
  bool has_budget_rays = false;

  int singular_index(int vertex) const;        // position in singular_vertices
  int component_of_vertex(int vertex) const;
};

struct TraceBudget {
  // default: 64 * max height * nrects^2, scaled by STREBEL_BUDGET_SCALE
  std::optional<Scalar> l_max;
};

CriticalGraph trace_separatrices(const Surface& s, const TraceBudget& budget = {});

// -- decomposition ----------------------------------------------------------

struct StripRef {
  int rect = -1;
  Scalar x_lo, x_hi;
};

struct TransversalRef {
  int rect = -1;
  Scalar x_lo, x_hi;  // sub-interval of the bottom edge
  Scalar length() const { return x_hi - x_lo; }
};

// One visit of a cylinder's leaf cycle to a strip.
struct CylinderStripVisit {
  int strip = -1;        // index into FoliationDecomposition::strips
  Scalar v_base;         // cumulative vertical position of the strip's entry
  bool x_increasing;     // chart orientation of this visit relative to the transversal
  bool entered_from_bottom;
};

enum class ComponentKind { Cylinder, Minimal };

struct SuspensionRectangle {
  Scalar width, height;
  bool split = false;  // halved because both vertical edges met singularities
};

struct FoliationComponent {
  ComponentKind kind = ComponentKind::Cylinder;
  Scalar area;
  std::vector<int> strips;                       // indices into decomposition strips
  std::vector<int> adjacent_graph_components;

  // cylinder: modulus = width / core_length (the paper's height over
  // circumference of the annulus around the core curve)
  Scalar width;        // transverse measure across the cylinder
  Scalar core_length;  // length of the closed vertical leaves
  std::vector<CylinderStripVisit> cycle;         // chart of the leaf cycle

  // minimal
  TransversalRef transversal;
  IET first_return;
  UEStatus ue_status = UEStatus::Unknown;
  UECertificate certificate;
  std::vector<SuspensionRectangle> rectangles;   // first-return suspension data
};

struct FoliationDecomposition {
  std::vector<StripRef> strips;
  std::vector<int> strip_component;              // per strip
  std::vector<FoliationComponent> components;

  // interior critical lines per rectangle: x -> (connection, piece)
  std::map<int, std::vector<std::pair<Scalar, std::pair<int, int>>>> interior_cuts;
  // severed vertical boundary: canonical edge -> (connection, piece)
  std::map<int, std::pair<int, int>> severed_edges;

  int strip_at(int rect, const Scalar& x) const;  // strip whose open interval contains x
};

struct DecomposeOptions {
  int rauzy_max_steps = 10000;
  long machine_step_budget = 2000000;
};

FoliationDecomposition decompose_vertical(const Surface& s, const CriticalGraph& graph,
                                          const DecomposeOptions& opts = {});

// -- ribbon topology --------------------------------------------------------

struct ComponentTopology {
  int graph_component = -1;
  int vertices = 0, edges = 0, rays = 0;
  int genus = 0;
  int punctures = 0;                    // n_i = boundary cycles
  std::vector<int> cycle_ray_counts;    // per boundary cycle
  std::vector<int> marked_punctures;    // puncture-vertex ids on the component
};

std::vector<ComponentTopology> ribbon_topology(const CriticalGraph& graph);

// true iff every component of the finite critical graph is a tree
bool masur_case(const CriticalGraph& graph);

// Distance from a point on a saddle connection to its two endpoint
// singularities, measured along the connection. `along_up` is the distance
// walking in the piece's `up` direction.
struct ConnectionPointGaps {
  Scalar toward_start, toward_end;
};
ConnectionPointGaps connection_gaps(const Surface& s, const SaddleConnection& conn,
                                    int piece_index, const Scalar& offset_in_piece);

// First return of the vertical flow to a horizontal transversal on the
// bottom edge of a rectangle. Exposed for tests and the iet CLI; decompose
// uses the same machinery internally.
IET first_return(const Surface& s, const CriticalGraph& graph, const TransversalRef& tau,
                 long step_budget = 2000000);

double budget_scale();  // STREBEL_BUDGET_SCALE, default 1

}  // namespace strebel

#endif
