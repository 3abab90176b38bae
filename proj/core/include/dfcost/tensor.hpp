#ifndef DFCOST_TENSOR_HPP_
#define DFCOST_TENSOR_HPP_

#include <array>
#include <cstdint>

#include "dfcost/types.hpp"

namespace dfcost {

// Which canonical dimensions address each tensor. Output coupling is
// expressed through Y/X here; output extents use the owned-window counts
// (see analysis) rather than the raw input windows.
struct CouplingTable {
  // couples[tensor][dim]
  std::array<std::array<bool, kNumCanonicalDims>, 3> couples{};

  bool is_coupled(Tensor t, Dim d) const {
    return couples[static_cast<int>(t)][static_cast<int>(d)];
  }
  void set(Tensor t, Dim d, bool v = true) {
    couples[static_cast<int>(t)][static_cast<int>(d)] = v;
  }
};

// Dimension coupling per operator type. DWCONV couples Output to C instead
// of K; FC/LSTM are handled as CONV2D shapes with R=Y and S=X.
CouplingTable infer_coupling(OpType op);

// Output spatial extents. CONV2D-style: floor((in - kernel)/stride) + 1;
// TRCONV inverts the arithmetic: stride*(in-1) + kernel.
// Throws std::invalid_argument on a non-positive result.
std::pair<std::int64_t, std::int64_t> output_dims(const LayerSpec& layer);

// Product of coupled dimension sizes (Yp/Xp extents for Output).
std::int64_t tensor_volume(const LayerSpec& layer, Tensor t);

// Dense MAC count: N*K*C*Yp*Xp*R*S with op-specific coupling (no K factor
// for DWCONV).
std::int64_t dense_mac_count(const LayerSpec& layer);

// Layer as seen by the analysis engines: FC/LSTM folded to CONV2D shape,
// PWCONV kernel forced to 1x1, TRCONV re-expressed as a stride-1
// convolution over the zero-inserted input space.
LayerSpec analysis_view(const LayerSpec& layer);

}  // namespace dfcost

#endif  // DFCOST_TENSOR_HPP_
