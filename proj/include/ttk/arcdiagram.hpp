#pragma once

#include <string>
#include <vector>

#include "ttk/splitting.hpp"

namespace ttk {

/// Points are listed bottom to top on each interval. Track points use id 2·branch + end;
/// the extra handle at switch w uses 2l + 2w and 2l + 2w + 1.
struct ArcDiagram {
  std::vector<std::vector<int>> intervals;
  std::vector<int> match;  // indexed by point id, -1 for unused ids

  int num_points() const;
  int num_handles() const { return num_points() / 2; }
  bool contains(int p) const;
  std::pair<int, int> position(int p) const;  // (interval, index)
  int global_index(int p) const;
  /// Same interval sizes and the same matching when points are identified by position.
  bool structurally_equal(const ArcDiagram& o) const;
  std::string str() const;
};

/// region id -> starred switch.
struct SpecialMark {
  std::vector<int> star;
  bool operator==(const SpecialMark&) const = default;
};

struct Arcslide {
  int slid = -1;  // a′
  int over = -1;  // a
};

struct ArcslideSequence {
  ArcDiagram start, end;
  std::vector<Arcslide> slides;
  std::vector<int> closing;  // interval of end -> interval of start; empty when the ends are not identified
  std::string str() const;
};

ArcDiagram arc_diagram_from_track(const TrainTrack& t);
bool valid_mark(const TrainTrack& t, const SpecialMark& m);
SpecialMark default_mark(const TrainTrack& t);
/// Lines 'sigma <switch> ...'; no names gives the default mark.
SpecialMark parse_mark(const std::string& text, const TrainTrack& t);
std::string write_mark(const SpecialMark& m, const TrainTrack& t);
ArcDiagram special_arc_diagram(const TrainTrack& t, const SpecialMark& m);
/// Boundary components of F(Z): for each, the number of S₊ arcs it meets.
std::vector<int> boundary_s_plus_counts(const ArcDiagram& d);
bool is_special(const ArcDiagram& d);

ArcDiagram arcslide(const ArcDiagram& d, int slid, int over);
std::pair<Arcslide, Arcslide> split_to_arcslides(const TrainTrack& t, const SplitEvent& ev);
SpecialMark sigma_transport(const TrainTrack& before, const SplitEvent& ev, const SpecialMark& m);
ArcslideSequence boundary_adjustment(const SpecialMark& s1, const SpecialMark& s2, const TrainTrack& t);
/// Same route starting from a diagram structurally equal to the one of s1.
ArcslideSequence boundary_adjustment(const ArcDiagram& start, const SpecialMark& s1, const SpecialMark& s2,
                                     const TrainTrack& t);
/// ψ⁻¹(σ) read off from the cycle isomorphism.
SpecialMark pull_back_mark(const AgolCycle& c, const SpecialMark& m);
ArcslideSequence factorize(const AgolCycle& c, const SpecialMark& m);

struct H1Action {
  IntMatrix full, capped;
};
H1Action h1_action(const ArcslideSequence& seq);

}  // namespace ttk
