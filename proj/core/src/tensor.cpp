#include "dfcost/tensor.hpp"

#include <stdexcept>

namespace dfcost {

CouplingTable infer_coupling(OpType op) {
  CouplingTable t;
  auto couple = [&t](Tensor tn, std::initializer_list<Dim> dims) {
    for (Dim d : dims) t.set(tn, d);
  };
  switch (op) {
    case OpType::CONV2D:
    case OpType::PWCONV:
    case OpType::FC:
    case OpType::LSTM:
    case OpType::TRCONV:
      couple(Tensor::Weight, {Dim::K, Dim::C, Dim::R, Dim::S});
      couple(Tensor::Input, {Dim::N, Dim::C, Dim::Y, Dim::X});
      couple(Tensor::Output, {Dim::N, Dim::K, Dim::Y, Dim::X});
      break;
    case OpType::DWCONV:
    case OpType::POOL:
      // Per-channel window operators: the output follows the input channel,
      // K couples nothing and is dropped from the analysis view.
      couple(Tensor::Weight, {Dim::C, Dim::R, Dim::S});
      couple(Tensor::Input, {Dim::N, Dim::C, Dim::Y, Dim::X});
      couple(Tensor::Output, {Dim::N, Dim::C, Dim::Y, Dim::X});
      break;
  }
  return t;
}

namespace {
// Kernel-shape normalization shared by output_dims and tensor_volume:
// FC/LSTM fold the kernel over the whole input, PWCONV pins it to 1x1.
LayerSpec shape_view(const LayerSpec& layer) {
  LayerSpec v = layer;
  if (layer.op_type == OpType::PWCONV) {
    v.dims[Dim::R] = v.dims[Dim::S] = 1;
  } else if (layer.op_type == OpType::FC || layer.op_type == OpType::LSTM) {
    v.dims[Dim::R] = v.dims[Dim::Y];
    v.dims[Dim::S] = v.dims[Dim::X];
  }
  return v;
}
}  // namespace

std::pair<std::int64_t, std::int64_t> output_dims(const LayerSpec& layer) {
  std::int64_t yp, xp;
  if (layer.op_type == OpType::TRCONV) {
    yp = layer.stride_y * (layer.dims[Dim::Y] - 1) + layer.dims[Dim::R];
    xp = layer.stride_x * (layer.dims[Dim::X] - 1) + layer.dims[Dim::S];
  } else {
    LayerSpec v = shape_view(layer);
    yp = (v.dims[Dim::Y] - v.dims[Dim::R]) / layer.stride_y + 1;
    xp = (v.dims[Dim::X] - v.dims[Dim::S]) / layer.stride_x + 1;
  }
  if (yp < 1 || xp < 1) {
    throw std::invalid_argument("layer '" + layer.name +
                                "' has a non-positive output extent");
  }
  return {yp, xp};
}

std::int64_t tensor_volume(const LayerSpec& layer, Tensor t) {
  CouplingTable coupling = infer_coupling(layer.op_type);
  auto [yp, xp] = output_dims(layer);
  LayerSpec v = shape_view(layer);
  std::int64_t vol = 1;
  for (Dim d : kCanonicalDims) {
    if (!coupling.is_coupled(t, d)) continue;
    if (t == Tensor::Output && d == Dim::Y) {
      vol *= yp;
    } else if (t == Tensor::Output && d == Dim::X) {
      vol *= xp;
    } else {
      vol *= v.dims[d];
    }
  }
  return vol;
}

std::int64_t dense_mac_count(const LayerSpec& layer) {
  LayerSpec v = analysis_view(layer);
  auto [yp, xp] = output_dims(v);
  return v.dims[Dim::N] * v.dims[Dim::K] * v.dims[Dim::C] * yp * xp *
         v.dims[Dim::R] * v.dims[Dim::S];
}

LayerSpec analysis_view(const LayerSpec& layer) {
  LayerSpec v = layer;
  switch (layer.op_type) {
    case OpType::CONV2D:
      break;
    case OpType::PWCONV:
      v.dims[Dim::R] = v.dims[Dim::S] = 1;
      break;
    case OpType::FC:
    case OpType::LSTM:
      v.dims[Dim::R] = v.dims[Dim::Y];
      v.dims[Dim::S] = v.dims[Dim::X];
      v.stride_y = v.stride_x = 1;
      break;
    case OpType::DWCONV:
    case OpType::POOL:
      v.dims[Dim::K] = 1;
      break;
    case OpType::TRCONV: {
      // Analyzed over the zero-inserted input space as a stride-1
      // convolution whose valid output matches the transposed extent.
      auto [yp, xp] = output_dims(layer);
      v.dims[Dim::Y] = yp + layer.dims[Dim::R] - 1;
      v.dims[Dim::X] = xp + layer.dims[Dim::S] - 1;
      v.stride_y = v.stride_x = 1;
      v.op_type = OpType::CONV2D;
      break;
    }
  }
  return v;
}

}  // namespace dfcost
