#ifndef DFCOST_TYPES_HPP_
#define DFCOST_TYPES_HPP_

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace dfcost {

// Data dimensions of a (convolution-shaped) layer. Yp/Xp are the
// output-centric row/column dimensions Y'/X'; they are resolved to Y/X
// during dataflow augmentation and never reach the analysis engines.
enum class Dim : int { N = 0, K, C, Y, X, R, S, Yp, Xp };

constexpr int kNumCanonicalDims = 7;  // N,K,C,Y,X,R,S
constexpr std::array<Dim, kNumCanonicalDims> kCanonicalDims = {
    Dim::N, Dim::K, Dim::C, Dim::Y, Dim::X, Dim::R, Dim::S};

std::string to_string(Dim d);
std::optional<Dim> dim_from_string(const std::string& s);
bool is_output_centric(Dim d);

enum class Tensor : int { Input = 0, Weight, Output };
constexpr std::array<Tensor, 3> kAllTensors = {Tensor::Input, Tensor::Weight,
                                               Tensor::Output};
std::string to_string(Tensor t);

enum class OpType {
  CONV2D,
  DWCONV,
  PWCONV,
  FC,
  TRCONV,
  LSTM,  // LSTM hidden layer: X = hidden input width, C = gates
  POOL,
};
std::string to_string(OpType t);
std::optional<OpType> op_type_from_string(const std::string& s);

// Small fixed table keyed by canonical dimension.
struct DimSizes {
  std::array<std::int64_t, kNumCanonicalDims> v{1, 1, 1, 1, 1, 1, 1};

  std::int64_t& operator[](Dim d) { return v[static_cast<int>(d)]; }
  std::int64_t operator[](Dim d) const { return v[static_cast<int>(d)]; }
  bool operator==(const DimSizes&) const = default;
};

struct LayerSpec {
  std::string name;
  OpType op_type = OpType::CONV2D;
  DimSizes dims;                 // N,K,C,Y,X,R,S
  std::int64_t stride_y = 1;
  std::int64_t stride_x = 1;
  std::array<double, 3> density{1.0, 1.0, 1.0};  // per Tensor, in (0,1]

  double density_of(Tensor t) const { return density[static_cast<int>(t)]; }
};

enum class DirectiveKind { SpatialMap, TemporalMap, Cluster };

struct Directive {
  DirectiveKind kind = DirectiveKind::TemporalMap;
  std::int64_t size = 1;    // Cluster: group size
  std::int64_t offset = 1;  // unused for Cluster
  Dim dim = Dim::N;         // unused for Cluster
  int line = 0;             // source position, 0 if synthesized
  int col = 0;

  bool is_map() const { return kind != DirectiveKind::Cluster; }
};
std::string to_string(const Directive& d);

struct Dataflow {
  std::vector<Directive> directives;
};

struct HardwareConfig {
  std::int64_t num_pes = 1;
  std::int64_t l1_bytes = 0;  // 0 = unconstrained, report requirement only
  std::int64_t l2_bytes = 0;
  std::int64_t noc_bandwidth = 1;    // elements per cycle
  std::int64_t noc_avg_latency = 0;  // cycles
  std::int64_t vector_width = 1;
  bool double_buffering = true;
  std::int64_t element_bytes = 1;
  // NoC/reuse capability switches (all reuse-enabled by default).
  bool spatial_multicast = true;
  bool spatial_reduction = true;
  bool shared_noc = false;  // serialize in/out transfers on one channel
};

struct EnergyTable {
  double mac_op = 1.0;
  double l1_read = 2.0;
  double l1_write = 2.0;
  double l2_read = 20.0;
  double l2_write = 20.0;
  double noc_hop = 0.0;
};

enum class Severity { Error, Warning };

enum class LegalityCondition { Structure, Bound, Coverage, Redundancy };
std::string to_string(LegalityCondition c);

struct ValidationFinding {
  LegalityCondition condition = LegalityCondition::Structure;
  Directive directive;  // offending directive (synthesized if none)
  std::string message;
};

struct ValidationReport {
  std::vector<ValidationFinding> errors;
  std::vector<ValidationFinding> warnings;

  bool ok() const { return errors.empty(); }
  // No errors and no coverage warnings: the schedule maps every index
  // exactly once per operand pair.
  bool clean() const;
  std::string str() const;
};

struct ParseError : std::runtime_error {
  ParseError(int line, int col, const std::string& what);
  int line;
  int col;
};

}  // namespace dfcost

#endif  // DFCOST_TYPES_HPP_
