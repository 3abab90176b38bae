#ifndef DFCOST_REUSE_HPP_
#define DFCOST_REUSE_HPP_

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "dfcost/cluster.hpp"
#include "dfcost/windows.hpp"

namespace dfcost {

// ---------------------------------------------------------------------------
// Iteration structure of one cluster level.
//
// Every directive contributes a step axis: a TemporalMap steps through its
// tile positions, a SpatialMap steps through folds of num_subclusters
// positions. The movement order nests these axes; the innermost axis with
// more than one step is the prime changing dimension.
// ---------------------------------------------------------------------------

// Position of a step index within its axis. A single-step axis is Only;
// otherwise the first, interior, and final positions are distinguished
// (interior steps are interchangeable for counting purposes).
enum class StepPhase { Only, First, Mid, Last };

struct DimAxis {
  Dim dim = Dim::N;
  bool spatial = false;
  WindowSeq positions;       // tile windows over the dimension extent
  std::int64_t steps = 1;    // temporal: positions; spatial: folds
  std::int64_t nsc = 1;      // positions per fold (1 for temporal)

  bool single() const { return steps == 1; }
  std::int64_t phase_count(StepPhase p) const;
  // Representative step index of a phase (interior quantities are
  // translation invariant, so any interior index is exact).
  std::int64_t representative(StepPhase p) const;
};

struct LevelIteration {
  std::vector<DimAxis> axes;  // movement order, outermost first
  std::int64_t num_subclusters = 1;
  std::int64_t active_subclusters = 1;  // 0 spatial dims -> 1
  std::optional<int> spatial_axis;      // index into axes
  std::int64_t total_steps = 1;

  const DimAxis* axis_of(Dim d) const;
};

LevelIteration build_iteration(const ClusterLevel& lvl);

// Innermost dimension that advances between adjacent unit time steps;
// nullopt when the whole level is a single step.
std::optional<Dim> prime_changing_dimension(const ClusterLevel& lvl);

// ---------------------------------------------------------------------------
// Spec-facing iteration cases (Init / Steady / Edge per dimension).
// ---------------------------------------------------------------------------

enum class IterationState { Init, Steady, Edge };
std::string to_string(IterationState s);

struct IterationCase {
  std::array<IterationState, kNumCanonicalDims> states{};
  std::int64_t occurrences = 0;
};

// Cross product of per-dimension states restricted to nonzero occurrence.
// Edge exists only when the final tile maps fewer indices than the mapping
// size; an untruncated final tile counts as Steady.
std::vector<IterationCase> enumerate_cases(const ClusterLevel& lvl);

// ---------------------------------------------------------------------------
// Reuse profile across adjacent steps / across sub-clusters.
// ---------------------------------------------------------------------------

struct ReuseProfile {
  struct PerTensor {
    std::int64_t unique_elements_per_step = 0;
    std::int64_t temporally_reused_elements = 0;
    std::int64_t spatial_multicast_factor = 1;
    std::int64_t spatial_reduction_factor = 1;
  };
  std::array<PerTensor, 3> tensors{};
  bool temporal_reduction = false;

  PerTensor& of(Tensor t) { return tensors[static_cast<int>(t)]; }
  const PerTensor& of(Tensor t) const { return tensors[static_cast<int>(t)]; }
};

// Per-tensor (unique, reused) element counts of one sub-cluster between
// adjacent steps of the given case.
ReuseProfile temporal_reuse(const ClusterLevel& lvl, const LayerSpec& view,
                            const CouplingTable& coupling,
                            const IterationCase& c);

// Fills the spatial fields: full multicast for tensors decoupled from the
// spatially mapped dimension, spatial reduction for outputs when the
// spatial dimension couples only input-side tensors, and the temporal
// reduction flag from the prime changing dimension.
ReuseProfile spatial_reuse(const ClusterLevel& lvl, const LayerSpec& view,
                           const CouplingTable& coupling,
                           const IterationCase& c);

}  // namespace dfcost

#endif  // DFCOST_REUSE_HPP_
