#ifndef DFCOST_CLUSTER_HPP_
#define DFCOST_CLUSTER_HPP_

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "dfcost/tensor.hpp"
#include "dfcost/types.hpp"

namespace dfcost {

// One map directive of a cluster level, post split. `from_output_centric`
// marks Y/X directives produced by Yp/Xp conversion.
struct LevelDirective {
  Dim dim = Dim::N;
  bool spatial = false;
  std::int64_t size = 1;
  std::int64_t offset = 1;
  bool auto_inserted = false;
  bool from_output_centric = false;
  // Converted Yp/Xp directives tile output positions; the window walk stops
  // with the last owned output rather than the last input index.
  std::int64_t positions_override = 0;  // 0 = natural position count
};

struct ClusterLevel {
  int level_index = 0;  // 0 = innermost (its sub-clusters are PEs)
  std::vector<LevelDirective> directives;  // movement order, outermost first
  std::int64_t num_subclusters = 1;
  DimSizes dim_sizes;  // inherited extents of this level
  std::array<std::int64_t, kNumCanonicalDims> folding{1, 1, 1, 1, 1, 1, 1};
  bool augmented = false;

  std::optional<int> spatial_directive() const;  // index into directives
  const LevelDirective* find(Dim d) const;
};

struct ClusterHierarchy {
  std::vector<ClusterLevel> levels;  // outermost first
  LayerSpec view;                    // analysis view of the layer
  CouplingTable coupling;
  std::int64_t num_pes = 1;
  std::int64_t used_pes = 1;  // product of per-level sub-cluster counts
  std::int64_t inactive_pes = 0;

  const ClusterLevel& innermost() const { return levels.back(); }
  const ClusterLevel& top() const { return levels.front(); }
};

// Splits the directive sequence at Cluster directives, computes sub-cluster
// counts and folding per level, and inherits per-level dimension extents.
// Sizes are clamped to their dimension extent (lenient semantics; strict
// legality is validate_dataflow's job).
// Throws std::invalid_argument when num_pes cannot host the cluster shape.
ClusterHierarchy build_hierarchy(const LayerSpec& layer, const Dataflow& df,
                                 const HardwareConfig& hw);

// Inserts fully-unrolled TemporalMap directives for missing dimensions
// (innermost position) and converts Yp/Xp directives to input-centric Y/X
// with size*stride + kernel - stride windows. Idempotent.
ClusterHierarchy augment_directives(const LayerSpec& layer,
                                    ClusterHierarchy hierarchy);

ClusterHierarchy build_augmented_hierarchy(const LayerSpec& layer,
                                           const Dataflow& df,
                                           const HardwareConfig& hw);

// Debug printer in the dsl directive grammar, one level per block.
std::string print_hierarchy(const ClusterHierarchy& h);

// Output-centric extents of a level: number of output rows/columns whose
// full kernel window fits in the level's Y/X extents (stride-aligned).
std::int64_t level_yp_extent(const ClusterLevel& lvl, const LayerSpec& view);
std::int64_t level_xp_extent(const ClusterLevel& lvl, const LayerSpec& view);
std::int64_t owned_count(std::int64_t win_begin, std::int64_t win_end,
                         std::int64_t kernel, std::int64_t stride);

}  // namespace dfcost

#endif  // DFCOST_CLUSTER_HPP_
