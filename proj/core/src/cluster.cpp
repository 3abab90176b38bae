#include "dfcost/cluster.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "dfcost/windows.hpp"

namespace dfcost {

std::optional<int> ClusterLevel::spatial_directive() const {
  for (int i = 0; i < static_cast<int>(directives.size()); ++i) {
    if (directives[i].spatial) return i;
  }
  return std::nullopt;
}

const LevelDirective* ClusterLevel::find(Dim d) const {
  for (const auto& dir : directives) {
    if (dir.dim == d) return &dir;
  }
  return nullptr;
}

std::int64_t owned_count(std::int64_t win_begin, std::int64_t win_end,
                         std::int64_t kernel, std::int64_t stride) {
  // Output positions on the stride grid whose full kernel window fits in
  // [win_begin, win_end). Windows are stride-aligned by construction.
  if (win_end - win_begin < kernel) return 0;
  std::int64_t first = (win_begin + stride - 1) / stride;
  std::int64_t last = (win_end - kernel) / stride;  // floor; win_end>=kernel
  if (win_begin == 0) first = 0;
  return last >= first ? last - first + 1 : 0;
}

std::int64_t level_yp_extent(const ClusterLevel& lvl, const LayerSpec& view) {
  return owned_count(0, lvl.dim_sizes[Dim::Y], lvl.dim_sizes[Dim::R],
                     view.stride_y);
}

std::int64_t level_xp_extent(const ClusterLevel& lvl, const LayerSpec& view) {
  return owned_count(0, lvl.dim_sizes[Dim::X], lvl.dim_sizes[Dim::S],
                     view.stride_x);
}

namespace {

struct RawLevel {
  std::vector<Directive> maps;
  std::int64_t cluster_size_below = 0;  // Cluster directive ending the level
};

std::vector<RawLevel> split_levels(const Dataflow& df) {
  std::vector<RawLevel> levels(1);
  for (const auto& d : df.directives) {
    if (d.kind == DirectiveKind::Cluster) {
      levels.back().cluster_size_below = d.size;
      levels.emplace_back();
    } else {
      levels.back().maps.push_back(d);
    }
  }
  return levels;
}

// Extent of the dimension a raw directive maps, given the level extents.
std::int64_t raw_dim_extent(const Directive& d, const ClusterLevel& lvl,
                            const LayerSpec& view) {
  if (d.dim == Dim::Yp) return level_yp_extent(lvl, view);
  if (d.dim == Dim::Xp) return level_xp_extent(lvl, view);
  return lvl.dim_sizes[d.dim];
}

LevelDirective convert_directive(const Directive& d, const ClusterLevel& lvl,
                                 const LayerSpec& view) {
  LevelDirective out;
  out.spatial = d.kind == DirectiveKind::SpatialMap;
  std::int64_t extent = raw_dim_extent(d, lvl, view);
  std::int64_t size = std::min<std::int64_t>(d.size, std::max<std::int64_t>(extent, 1));
  if (d.dim == Dim::Yp || d.dim == Dim::Xp) {
    // Output-centric -> input-centric window arithmetic.
    std::int64_t stride = d.dim == Dim::Yp ? view.stride_y : view.stride_x;
    std::int64_t kernel =
        d.dim == Dim::Yp ? lvl.dim_sizes[Dim::R] : lvl.dim_sizes[Dim::S];
    out.dim = d.dim == Dim::Yp ? Dim::Y : Dim::X;
    out.size = size * stride + kernel - stride;
    out.offset = d.offset * stride;
    out.from_output_centric = true;
    out.size = std::min(out.size, lvl.dim_sizes[out.dim]);
  } else {
    out.dim = d.dim;
    out.size = size;
    out.offset = d.offset;
  }
  return out;
}

void augment_level(ClusterLevel& lvl, const LayerSpec& view) {
  if (lvl.augmented) return;
  std::vector<LevelDirective> out;
  std::array<bool, kNumCanonicalDims> present{};
  for (const auto& dir : lvl.directives) {
    out.push_back(dir);
    present[static_cast<int>(dir.dim)] = true;
  }
  // Missing dimensions become fully-unrolled temporal maps at the innermost
  // position; they contribute a single step and never perturb the prime
  // changing dimension.
  for (Dim d : kCanonicalDims) {
    if (present[static_cast<int>(d)]) continue;
    LevelDirective ins;
    ins.dim = d;
    ins.spatial = false;
    ins.size = lvl.dim_sizes[d];
    ins.offset = lvl.dim_sizes[d];
    ins.auto_inserted = true;
    out.push_back(ins);
  }
  lvl.directives = std::move(out);
  lvl.augmented = true;
}

void compute_folding(ClusterLevel& lvl) {
  lvl.folding.fill(1);
  for (const auto& dir : lvl.directives) {
    if (!dir.spatial) continue;
    WindowSeq seq(std::max<std::int64_t>(lvl.dim_sizes[dir.dim], 1), dir.size,
                  dir.offset);
    std::int64_t folds =
        (seq.num_positions() + lvl.num_subclusters - 1) / lvl.num_subclusters;
    lvl.folding[static_cast<int>(dir.dim)] = std::max<std::int64_t>(folds, 1);
  }
}

}  // namespace

ClusterHierarchy build_hierarchy(const LayerSpec& layer, const Dataflow& df,
                                 const HardwareConfig& hw) {
  ClusterHierarchy h;
  h.view = analysis_view(layer);
  h.coupling = infer_coupling(layer.op_type);
  h.num_pes = hw.num_pes;

  auto raw = split_levels(df);
  std::int64_t cluster_product = 1;
  for (const auto& lv : raw) {
    if (lv.cluster_size_below > 0) cluster_product *= lv.cluster_size_below;
  }
  if (cluster_product > hw.num_pes) {
    throw std::invalid_argument(
        "num_pes (" + std::to_string(hw.num_pes) +
        ") is smaller than the PE demand of the Cluster directives (" +
        std::to_string(cluster_product) + ")");
  }

  int n = static_cast<int>(raw.size());
  h.levels.resize(n);
  h.used_pes = 1;
  for (int i = 0; i < n; ++i) {
    ClusterLevel& lvl = h.levels[i];
    lvl.level_index = n - 1 - i;
    // Sub-cluster count: the top level splits the PEs left over after the
    // explicit Cluster groupings; every other level is sized by the
    // Cluster directive above its block.
    if (i == 0) {
      lvl.num_subclusters = hw.num_pes / cluster_product;
    } else {
      lvl.num_subclusters = raw[i - 1].cluster_size_below;
    }
    h.used_pes *= lvl.num_subclusters;

    // Extents: layer dimensions at the top, mapping sizes one level up
    // otherwise (augmentation has already run on the upper level).
    if (i == 0) {
      lvl.dim_sizes = h.view.dims;
    } else {
      const ClusterLevel& up = h.levels[i - 1];
      for (Dim d : kCanonicalDims) {
        const LevelDirective* dir = up.find(d);
        lvl.dim_sizes[d] = dir ? dir->size : up.dim_sizes[d];
      }
    }

    for (const auto& d : raw[i].maps) {
      lvl.directives.push_back(convert_directive(d, lvl, h.view));
    }
    augment_level(lvl, h.view);
    compute_folding(lvl);
  }
  h.inactive_pes = hw.num_pes - h.used_pes;
  return h;
}

ClusterHierarchy augment_directives(const LayerSpec& layer,
                                    ClusterHierarchy hierarchy) {
  LayerSpec view = analysis_view(layer);
  for (auto& lvl : hierarchy.levels) augment_level(lvl, view);
  return hierarchy;
}

ClusterHierarchy build_augmented_hierarchy(const LayerSpec& layer,
                                           const Dataflow& df,
                                           const HardwareConfig& hw) {
  return augment_directives(layer, build_hierarchy(layer, df, hw));
}

std::string print_hierarchy(const ClusterHierarchy& h) {
  std::ostringstream os;
  for (std::size_t i = 0; i < h.levels.size(); ++i) {
    const ClusterLevel& lvl = h.levels[i];
    if (i > 0) os << "Cluster(" << lvl.num_subclusters << ");\n";
    os << "// level " << lvl.level_index << ": " << lvl.num_subclusters
       << " sub-clusters, extents";
    for (Dim d : kCanonicalDims) {
      os << " " << to_string(d) << "=" << lvl.dim_sizes[d];
    }
    os << "\n";
    for (const auto& dir : lvl.directives) {
      os << (dir.spatial ? "SpatialMap(" : "TemporalMap(") << dir.size << ","
         << dir.offset << ") " << to_string(dir.dim) << ";";
      if (dir.auto_inserted) os << " // inserted";
      if (dir.from_output_centric) os << " // from output-centric";
      os << "\n";
    }
  }
  return os.str();
}

}  // namespace dfcost
