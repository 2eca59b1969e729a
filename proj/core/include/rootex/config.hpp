#pragma once

#include <optional>

namespace rootex {

enum class Axis { X = 0, Y = 1, Z = 2 };

/// All scalar parameters of the extraction pipeline. Defaults are the
/// working configuration used throughout the tests; gamma/omega/gap_len
/// are input-dependent and usually set per scan.
struct ExtractionConfig {
  double gamma = 0.5;     // minimum intensity for root voxels, in [0,1]
  double omega = 1000.0;  // maximum path cost, > 0 (may be +inf)
  int gap_len = 10;       // max bridged gap length in voxels; 0 disables gap closing
  double w_rad = 0.5;     // radius vs. intensity weight, in [0,1]
  double epsilon = 1e-6;  // cost floor keeping every voxel cost positive
  double beta = 1.2;      // control-volume dilation multiplier, in [1.1, 2.0]
  double delta = 0.5;     // simplification tolerance; 0 disables
  std::optional<int> cut_z;  // ignore quench points below this slice
  Axis cut_axis = Axis::Z;
  double fill_ratio_seg = 0.75;
  double fill_ratio_lcc = 0.9;
  int quench_threshold = 20;  // strict neighbor-dominance count
  double gap_penalty = 10.0;  // cost multiplier on sub-gamma voxels
  int threads = 0;            // worker cap for parallel stages; 0 = hardware
};

/// Throws InputError when a field is outside its documented range.
void validate(const ExtractionConfig& cfg);

}  // namespace rootex
