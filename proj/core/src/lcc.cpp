#include "rootex/lcc.hpp"

namespace rootex {

VolumeU8 extract_lcc(const VolumeF& seg, const PathField& field,
                     const ExtractionConfig& cfg) {
  if (seg.nx() != field.nx || seg.ny() != field.ny || seg.nz() != field.nz)
    throw InputError("extract_lcc: dimension mismatch");

  VolumeU8 out(seg.nx(), seg.ny(), seg.nz(), 0);
  bool any_ext = false;
  // Mark the predecessor chain of every ext voxel; stop as soon as an
  // already-marked voxel is hit so each voxel is walked at most once.
  for (std::size_t i = 0; i < seg.size(); ++i) {
    if (!(field.cost[i] < kInfD) || double(seg[i]) < cfg.gamma) continue;
    any_ext = true;
    std::size_t idx = i;
    while (!out[idx]) {
      out[idx] = 1;
      const std::int32_t prev = field.pred[idx];
      if (prev < 0) break;
      idx = std::size_t(prev);
    }
  }
  if (!any_ext)
    throw InputError("empty LCC: no reachable voxel at or above gamma");
  return out;
}

}  // namespace rootex
