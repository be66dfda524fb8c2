#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ttk/traintrack.hpp"

namespace ttk {

enum class SplitCase { Left, Right, Central };
const char* case_name(SplitCase c);

struct SplitEvent {
  int branch = -1;
  SplitCase kase = SplitCase::Left;
  bool operator==(const SplitEvent&) const = default;
};

/// Carrying of the source track by the target track: target weights = m · source weights.
struct CarryingMatrix {
  IntMatrix m;
  int source = -1, target = -1;  // optional track tags, -1 when untracked
};
/// Throws ChainMismatch.
CarryingMatrix incidence_compose(const CarryingMatrix& a, const CarryingMatrix& b);

struct MoveResult {
  TrainTrack track;
  std::optional<Measure> measure;
  IntMatrix elem;                // old weights = elem · new weights
  SplitEvent event;
  std::vector<int> branch_map;   // old branch id -> new id, -1 if removed
  std::vector<int> switch_map;   // old switch id -> new id, -1 if removed
};

/// Left if μ(a) > μ(c), Right if μ(a) < μ(c), Central on equality.
SplitCase split_case(const TrainTrack& t, const Measure& m, int branch);
/// Throws NotLargeBranch, InvalidMeasure.
MoveResult split(const TrainTrack& t, const Measure& m, int branch);
/// Split with a prescribed outcome, no weights.
MoveResult split_combinatorial(const TrainTrack& t, int branch, SplitCase c);

/// Throws NotShiftable.
MoveResult shift(const TrainTrack& t, int branch);
MoveResult shift(const TrainTrack& t, const Measure& m, int branch);

struct Folded {
  TrainTrack track;
  Measure measure;
};
/// Inverse of a Left or Right split. Throws NotFoldable.
Folded fold(const TrainTrack& t, const Measure& m, const SplitEvent& ev);

struct MaximalSplit {
  TrainTrack track;
  Measure measure;
  IntMatrix elem;
  std::vector<SplitEvent> events;  // branch ids refer to the track current at each split
  std::vector<int> branch_map;
};
/// Throws NoLargeBranch.
MaximalSplit maximal_split(const TrainTrack& t, const Measure& m);

struct AgolCycle {
  int n = 0, m = 0;
  TrainTrack input;
  Measure input_measure;
  TrainTrack start, end;  // τ_n and τ_{n+m}
  Measure start_measure, end_measure;
  std::vector<int> iso_sw, iso_br;  // τ_{n+m} -> τ_n
  std::vector<int> iso_flip;        // 1 when end 0 of b goes to end 1 of iso_br[b]
  NFElement lambda;                 // μ_n(ι b) / μ_{n+m}(b)
  NumberField lambda_field;         // λ as a root of its own minimal polynomial
  IntMatrix period_matrix;          // μ_n = P μ_{n+m}
  IntMatrix cycle_matrix;           // C μ_n = λ μ_n
  std::vector<std::vector<SplitEvent>> events;  // one list per maximal split, steps 0..n+m-1
};

/// Throws NoCycleWithinBudget, FieldMismatch.
AgolCycle find_agol_cycle(const TrainTrack& t, const Measure& m, int max_iters);

/// Cycle file: human readable report plus the data needed to replay the period.
std::string write_cycle(const AgolCycle& c);
AgolCycle parse_cycle(const std::string& text);

/// Replays the period combinatorially from τ_n; returns the tracks τ_n, ..., τ_{n+m} after
/// each maximal split together with the elementary moves.
struct ReplayStep {
  TrainTrack before;
  SplitEvent event;
  MoveResult result;
};
std::vector<ReplayStep> replay_period(const AgolCycle& c);

/// Measure in canonical coordinates projectivized by its first entry.
std::string projective_key(const Measure& m, const Labeling& L);

}  // namespace ttk
