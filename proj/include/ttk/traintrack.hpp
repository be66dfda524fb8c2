#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "ttk/numberfield.hpp"

namespace ttk {

struct BranchEnd {
  int branch = -1;
  int end = 0;
  bool operator==(const BranchEnd&) const = default;
};

/// Slot s at switch w: 0 is the large slot, 1..k are the small slots from left to right.
/// For a generic switch slot 1 is small_left and slot 2 is small_right.
struct Dart {
  int sw = -1;
  int slot = 0;
  bool operator==(const Dart&) const = default;
};

/// Cusp between small slots idx+1 and idx+2 of switch sw.
struct CuspRef {
  int sw = -1;
  int idx = 0;
  bool operator==(const CuspRef&) const = default;
};

struct TrainTrack {
  int genus = 0;
  int punctures = 0;
  std::vector<std::string> branch_names;
  std::vector<std::string> switch_names;
  std::vector<std::vector<BranchEnd>> sw;
  std::vector<CuspRef> puncture_cusps;

  int num_switches() const { return int(sw.size()); }
  int num_branches() const { return int(branch_names.size()); }
  bool generic() const;

  BranchEnd large(int w) const { return sw[w][0]; }
  BranchEnd small_left(int w) const { return sw[w][1]; }
  BranchEnd small_right(int w) const { return sw[w][2]; }

  /// locate()[b][e] is the dart holding end e of branch b.
  std::vector<std::array<Dart, 2>> locate() const;
  bool is_large_branch(int b) const;
  bool is_mixed_branch(int b) const;

  /// Next slot counterclockwise: large, rightmost small, ..., leftmost small.
  int ccw(int w, int slot) const;
  Dart other_end(const Dart& d) const;
};

struct Measure {
  NumberField field;
  std::vector<NFElement> w;
};

struct Region {
  std::vector<Dart> boundary;            // face orbit of darts
  std::vector<CuspRef> cusps;            // cyclic order of cusps met along the boundary
  std::vector<int> cusp_after;           // boundary index after which each cusp occurs
  std::vector<std::vector<Dart>> edges;  // maximal smooth arcs, edges[i] ends at cusps[i]
  bool punctured = false;
  int cusp_count() const { return int(cusps.size()); }
};

struct RegionData {
  std::vector<Region> regions;
  std::vector<std::vector<int>> region_of_dart;  // [switch][slot]
  int region_of_cusp(const CuspRef& c) const;
  std::vector<std::vector<int>> cusp_region;  // [switch][idx]
  std::vector<std::vector<int>> cusp_index;   // position of cusp within its region
};

RegionData regions(const TrainTrack& t);
bool connected(const TrainTrack& t);
int computed_genus(const TrainTrack& t, int num_regions);

struct ValidationReport {
  bool generic = false, connected = false, filling = false;
  bool switch_conditions = true, positive = true, recurrent = false;
  bool has_measure = false;
  int genus = 0, s = 0, l = 0, kappa = 0;
  std::vector<std::string> notes;
  bool ok() const { return generic && connected && filling && switch_conditions && positive && recurrent; }
  std::string str() const;
};

ValidationReport validate(const TrainTrack& t, const std::optional<Measure>& m);
bool is_filling(const TrainTrack& t);
/// True iff the switch conditions hold and all weights are nonnegative. Throws FieldMismatch.
bool check_measure(const TrainTrack& t, const Measure& m);
bool switch_conditions_hold(const TrainTrack& t, const Measure& m);
/// A strictly positive rational measure if one exists.
std::optional<std::vector<Q>> positive_rational_measure(const TrainTrack& t);

struct ParsedTrack {
  TrainTrack track;
  std::optional<Measure> measure;
};
ParsedTrack parse_track(const std::string& text);
std::string write_track(const TrainTrack& t, const std::optional<Measure>& m);

struct DualTriangulation {
  int num_vertices = 0;
  int num_edges = 0;
  std::vector<std::array<int, 3>> tri;           // edge ids counterclockwise
  std::vector<std::array<int, 3>> corner_vertex;  // corner between side k and side k+1
  int euler_characteristic() const { return num_vertices - num_edges + int(tri.size()); }
};

/// Triangle w has sides (large, small_right, small_left). Throws NotFilling.
DualTriangulation dual_triangulation(const TrainTrack& t);
/// Whitehead move on the edge shared by two distinct triangles; the edge keeps its id.
DualTriangulation whitehead_flip(const DualTriangulation& d, int edge);
bool isomorphic(const DualTriangulation& a, const DualTriangulation& b);

struct Diagonal {
  int region = -1;
  int i = 0, j = 0;  // cusp positions within the region, i < j
  bool operator==(const Diagonal&) const = default;
};
struct DiagonalExtension {
  std::vector<Diagonal> diags;
};

std::vector<DiagonalExtension> diagonal_extensions(const TrainTrack& t);
/// Product over regions of Catalan(k − 2).
Z extension_count(const TrainTrack& t);
bool is_maximal_extension(const TrainTrack& t, const DiagonalExtension& e);

/// Ribbon-graph canonical labeling. Each labeling maps old ids to canonical ids.
struct Labeling {
  std::vector<int> sw, br;
  std::vector<int> first_end;  // end of the old branch met first, which becomes end 0
};
struct CanonicalForm {
  std::vector<int> code;
  std::vector<Labeling> labelings;  // all starts attaining the minimal code
};
CanonicalForm canonical_form(const TrainTrack& t);
/// Applies a labeling, producing the relabeled track.
TrainTrack relabel(const TrainTrack& t, const Labeling& L);

}  // namespace ttk
