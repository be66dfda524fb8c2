#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ttk/arcdiagram.hpp"
#include "ttk/bounds.hpp"

namespace ttk {

/// Normal curves resolved inside each dual triangle with the switch in the central region.
struct NormalBasis {
  TrainTrack track;
  DualTriangulation tri;
  std::vector<NormalCurve> curves;
  std::vector<long> total;                   // summed coordinates per edge
  std::vector<std::array<long, 3>> corner;   // corner arcs per triangle, corner k between sides k and k+1
  std::vector<std::vector<long>> tau_crossings;  // [curve][branch]
  long length = 0;                           // ℓ(γ)
  long tau_total = 0;                        // #(γ ∩ τ)
};

NormalBasis normalize_basis(const TrainTrack& t, const std::vector<NormalCurve>& curves);

struct PieceRef {
  int tri = -1, corner = 0, level = 0;
  int dir = 1;  // +1 when crossed from side corner to side corner+1
};

struct GraphEdge {
  int v0 = -1, side0 = 0, v1 = -1, side1 = 0;  // end switches and triangle sides
  std::vector<PieceRef> pieces;                 // from end 0 to end 1
  bool removed = false;
};

struct GraphFace {
  std::vector<int> walk;      // half-edges 2·edge + (0 from v0, 1 from v1)
  std::vector<int> corners;   // switch at the start of each half-edge
  int type = 0;               // bit 1: touches a vertex of the triangulation, bit 2: touches γ
  int sides() const { return int(walk.size()); }
};

struct ReducedGraph {
  int num_vertices = 0;
  std::vector<GraphEdge> edges;
  std::vector<GraphFace> faces;
  int initial_faces = 0;
  std::vector<std::string> log;
  int live_edges() const;
};

ReducedGraph dual_graph(const NormalBasis& b);
/// Face -> switch on its boundary, injective. Throws HallViolation.
std::vector<int> sigma_prime(const ReducedGraph& g);
/// Faces of the current graph, using rotation (side 0, 1, 2) at every switch.
std::vector<GraphFace> trace_faces(const ReducedGraph& g, const NormalBasis& b);

struct BorderedSuturedDiagram {
  int g = 0, s = 0, l = 0, m = 0;
  std::vector<std::string> alpha_names, beta_names;
  int alpha_arcs = 0;          // all α objects are arcs
  int beta_circles = 0;        // the first beta_circles β objects are circles
  IntMatrix intersections;     // [α][β] crossing counts
  int alpha_a1 = 0, alpha_a2 = 0, beta_a1 = 0, beta_a2 = 0;
  long beta_c_alpha_total = 0;
  long length = 0;
  std::string str() const;
};

BorderedSuturedDiagram build_diagram(const NormalBasis& b, const SpecialMark& sigma, const ReducedGraph& g,
                                     const std::vector<int>& sigma_p);
BorderedSuturedDiagram build_diagram(const TrainTrack& t, const std::vector<NormalCurve>& curves);

struct GeneratorSet {
  Z count;
  std::vector<std::vector<int>> generators;  // per β object the chosen point, or -1
  Z candidates;                              // size of the per-β choice space
  std::vector<Z> by_size;                    // count by number of occupied α objects
};

GeneratorSet count_generators(const BorderedSuturedDiagram& d, bool enumerate);
/// Independent count over all per-β choices; only for small candidate spaces.
Z brute_force_generators(const BorderedSuturedDiagram& d);

constexpr int TC_FIRST_KIND = 2;
constexpr int TC_ALPHA_CIRCLE_HITS = 2;
constexpr int TC_BETA1_HITS = 5;

struct TubeCut {
  Z count;
  Z factor_bound;  // (20(g+s−m)−18)^s
};
TubeCut attach_tube_cutting(const BorderedSuturedDiagram& d, const GeneratorSet& gens);

struct BoundCheck {
  bool pass = false;
  Z count, bound;
  long length = 0;
  Z M_psi;
  std::string witness;
};
BoundCheck verify_bound(const BorderedSuturedDiagram& d, const TubeCut& tc, const BoundReport& r);

std::vector<NormalCurve> parse_basis(const std::string& text, const TrainTrack& t);

}  // namespace ttk
