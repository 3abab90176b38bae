#ifndef DFCOST_ORACLE_HPP_
#define DFCOST_ORACLE_HPP_

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "dfcost/analysis.hpp"
#include "dfcost/cluster.hpp"

namespace dfcost {

// Brute-force reference simulator. Interprets the directive semantics by
// explicitly enumerating the concrete index set of every tensor on every
// sub-cluster at every unit time step, with set arithmetic for reuse. It
// shares only noc_delay, case_delay, and the derived bookkeeping formulas
// (energy, utilization) with the analytical engine.

struct OracleOptions {
  std::int64_t mac_budget = 1'000'000;  // dense MACs; desk scale only
  bool keep_trace = false;
};

struct TraceRow {
  int level = 0;
  std::int64_t pe = 0;  // sub-cluster path flattened to a PE ordinal
  std::int64_t t = 0;   // global unit step
  Tensor tensor = Tensor::Input;
  std::vector<std::int64_t> index;  // coupled-dimension index tuple
};

struct OracleResult {
  AnalysisResult analysis;  // same observable fields
  std::vector<TraceRow> trace;
  // Output contribution multiplicities over the whole run.
  std::int64_t min_output_multiplicity = 0;
  std::int64_t max_output_multiplicity = 0;
  std::int64_t expected_multiplicity = 0;  // product of reduced dims
  bool coverage_exact = false;  // every output exactly expected-fold
};

// Per-tensor index sets mapped on one sub-cluster of one level at local
// step t of the level's schedule (full-extent instance, absolute indices;
// Output tuples use output-centric rows/columns).
struct MappedIndices {
  std::array<std::vector<std::vector<std::int64_t>>, 3> tensors;
  std::vector<Dim> dims_of(Tensor t) const;  // tuple layout

 private:
  friend MappedIndices mapped_indices(const ClusterHierarchy&, int,
                                      std::int64_t, std::int64_t);
  CouplingTable coupling_;
};

MappedIndices mapped_indices(const ClusterHierarchy& h, int level,
                             std::int64_t subcluster, std::int64_t t);

OracleResult simulate(const LayerSpec& layer, const Dataflow& df,
                      const HardwareConfig& hw, const EnergyTable& energy,
                      const OracleOptions& opts = {});

// Field-by-field diff; empty means exact agreement.
std::vector<std::string> compare(const AnalysisResult& a,
                                 const OracleResult& b);

std::string trace_to_text(const OracleResult& r);

}  // namespace dfcost

#endif  // DFCOST_ORACLE_HPP_
