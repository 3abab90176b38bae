#ifndef DFCOST_ANALYSIS_HPP_
#define DFCOST_ANALYSIS_HPP_

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "dfcost/cluster.hpp"
#include "dfcost/reuse.hpp"
#include "dfcost/types.hpp"

namespace dfcost {

enum class Bottleneck { Compute, InComm, OutComm };
std::string to_string(Bottleneck b);

// Pipe NoC model: ceil(elements/bandwidth) + average latency per burst,
// zero for an empty transfer.
std::int64_t noc_delay(std::int64_t elements, const HardwareConfig& hw);

struct CaseDelay {
  std::int64_t delay = 0;
  Bottleneck bottleneck = Bottleneck::Compute;
};

// Outstanding delay of one unit step: max(compute, in, out) with double
// buffering (in and out ride separate channels unless shared_noc), plain
// sum without it.
CaseDelay case_delay(std::int64_t compute, std::int64_t in_elements,
                     std::int64_t out_elements, const HardwareConfig& hw);

// Per-tensor traffic of one cluster level, dense element counts.
struct LevelCounts {
  // Reads from the parent-side buffer (multicast-shared data once).
  std::array<std::int64_t, 3> fetch{};
  // Elements delivered into sub-cluster storage (one per destination).
  std::array<std::int64_t, 3> deliver{};
  std::int64_t emit = 0;      // Output elements written upward
  std::int64_t collect = 0;   // Output partials read out of sub-clusters
  std::int64_t refetch = 0;   // Output partials re-read from the parent
  // Innermost level only: operand/partial traffic under the MAC convention.
  std::array<std::int64_t, 3> mac_reads{};
  std::int64_t mac_writes = 0;

  LevelCounts& operator+=(const LevelCounts& o);
  void scale_occurrences(std::int64_t n);
};

struct CaseDetail {
  std::string label;
  std::int64_t occurrences = 0;
  std::int64_t compute = 0;
  std::int64_t in_elements = 0;
  std::int64_t out_elements = 0;
  std::int64_t delay = 0;
  Bottleneck bottleneck = Bottleneck::Compute;
};

struct LevelReport {
  int level_index = 0;  // 0 = innermost
  std::int64_t num_subclusters = 1;
  std::int64_t steps = 1;  // unit steps of one local schedule
  LevelCounts counts;      // totals across the whole layer run
  std::vector<CaseDetail> cases;  // full-extent schedule of this level
};

struct AnalysisResult {
  std::string layer_name;
  std::int64_t runtime_cycles = 0;
  double mac_count = 0;  // density-scaled
  // Density-scaled per-tensor access counts at the PE scratchpad (L1) and
  // the global buffer (L2).
  std::array<double, 3> l1_reads{};
  std::array<double, 3> l1_writes{};
  std::array<double, 3> l2_reads{};
  std::array<double, 3> l2_writes{};
  std::int64_t l1_requirement_bytes = 0;  // per PE
  std::int64_t l2_requirement_bytes = 0;
  bool buffers_feasible = true;
  double peak_noc_bw_demand = 0;  // elements/cycle
  double energy = 0;
  Bottleneck bottleneck = Bottleneck::Compute;
  double pe_utilization = 0;
  std::int64_t active_pes = 1;
  std::int64_t case_count = 0;  // observed iteration cases across levels
  std::vector<LevelReport> levels;  // outermost first

  double l1_reads_total() const;
  double l1_writes_total() const;
  double l2_reads_total() const;
  double l2_writes_total() const;
};

// Energy from activity counts; shared by the analytical engine and the
// oracle so a mismatch always points at counts, not at the formula.
double energy_from_counts(const AnalysisResult& r, const EnergyTable& table);

// Full performance/cost analysis of one layer under one dataflow.
// Requires a dataflow that builds a hierarchy (throws std::invalid_argument
// otherwise); legality beyond that is validate_dataflow's contract.
AnalysisResult analyze_layer(const LayerSpec& layer, const Dataflow& df,
                             const HardwareConfig& hw,
                             const EnergyTable& energy);

struct NetworkResult {
  std::vector<AnalysisResult> layers;
  std::int64_t runtime_cycles = 0;
  double mac_count = 0;
  double energy = 0;
  bool buffers_feasible = true;
  std::int64_t l1_requirement_bytes = 0;  // max over layers
  std::int64_t l2_requirement_bytes = 0;
};

// Layers execute sequentially; totals are sums, requirements are maxima.
NetworkResult analyze_network(
    const std::vector<std::pair<LayerSpec, Dataflow>>& layers,
    const HardwareConfig& hw, const EnergyTable& energy);

// True when partial sums accumulate across steps at the top level (the
// prime changing dimension is not output-coupled); drives the L2
// partial-sum reservation.
bool top_level_temporal_reduction(const ClusterHierarchy& h);

}  // namespace dfcost

#endif  // DFCOST_ANALYSIS_HPP_
