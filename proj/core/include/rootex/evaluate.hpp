#pragma once

#include <cstdint>
#include <vector>

#include "rootex/root_graph.hpp"

namespace rootex {

/// One resampled graph point: position, unit direction from the parent side
/// toward the point, and the previous sample on the same edge. The root
/// sample has no direction and no previous point.
struct DirectedSample {
  Vec3d pos;
  Vec3d dir;
  bool has_dir = false;
  Vec3d prev;
  bool has_prev = false;
};

struct EvalReport {
  std::int64_t tp = 0, fp = 0, fn = 0;
  double precision = 0.0, recall = 0.0, f1 = 0.0;
};

/// Densifies the graph: every parent->child edge longer than `spacing`
/// receives intermediate points at exact spacing from the parent (any
/// remainder sits at the child end). Inserted points inherit the edge
/// direction. Samples are emitted in deterministic graph order (depth-first
/// from the root, children in stored order).
std::vector<DirectedSample> resample(const RootGraph& g, double spacing);

/// Distance-tolerant correspondence between sample lists. Every target
/// sample, in list order, greedily takes the closest unmarked candidate
/// whose direction disagrees by less than 90 degrees (undefined directions
/// always pass) and whose point distance — or distance from the target to
/// the segment joining the candidate to its previous sample — is at most
/// `tolerance`. Matches are one-to-one. tp counts matched candidates,
/// fp unmatched candidates, fn unmatched targets; 0/0 ratios are 0.
/// When `match_out` is given it receives, per target index, the matched
/// candidate index or -1.
EvalReport score_samples(const std::vector<DirectedSample>& candidates,
                         const std::vector<DirectedSample>& targets,
                         double tolerance,
                         std::vector<int>* match_out = nullptr);

/// Resamples both graphs at `spacing` and scores extracted against target.
EvalReport score(const RootGraph& extracted, const RootGraph& target,
                 double spacing, double tolerance);

}  // namespace rootex
