#include "rootex/config.hpp"

#include <cmath>
#include <string>

#include "rootex/errors.hpp"

namespace rootex {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw InputError("config: " + what);
}

}  // namespace

void validate(const ExtractionConfig& cfg) {
  require(cfg.gamma >= 0.0 && cfg.gamma <= 1.0, "gamma must be in [0,1]");
  require(cfg.omega > 0.0, "omega must be positive");
  require(cfg.gap_len >= 0, "gap-len must be nonnegative");
  require(cfg.w_rad >= 0.0 && cfg.w_rad <= 1.0, "w-rad must be in [0,1]");
  require(cfg.epsilon > 0.0 && std::isfinite(cfg.epsilon), "epsilon must be positive");
  require(cfg.beta >= 1.1 && cfg.beta <= 2.0, "beta must be in [1.1,2.0]");
  require(cfg.delta >= 0.0, "delta must be nonnegative");
  require(cfg.fill_ratio_seg > 0.0 && cfg.fill_ratio_seg <= 1.0,
          "fill-seg must be in (0,1]");
  require(cfg.fill_ratio_lcc > 0.0 && cfg.fill_ratio_lcc <= 1.0,
          "fill-lcc must be in (0,1]");
  require(cfg.quench_threshold >= 0 && cfg.quench_threshold <= 26,
          "quench-threshold must be in [0,26]");
  require(cfg.gap_penalty >= 1.0, "gap-penalty must be >= 1");
  require(cfg.threads >= 0, "threads must be nonnegative");
}

}  // namespace rootex
