#pragma once

#include <vector>

#include "rootex/errors.hpp"
#include "rootex/geometry.hpp"

namespace rootex {

/// One skeleton node: position (voxel coordinates; fractional after
/// simplification of resampled references), local radius estimate in voxel
/// units, and the id of the extraction branch that created it. Branch id 0
/// is reserved for the root node.
struct RootNode {
  Vec3d pos;
  double radius = 0.0;
  int branch_id = 0;
  int parent = -1;  // node index; -1 for the root
  std::vector<int> children;
};

/// Tree of root nodes. The root is always node index 0. branch_count is the
/// running branch id after extraction (root branch included).
struct RootGraph {
  std::vector<RootNode> nodes;
  int branch_count = 0;

  int node_count() const { return int(nodes.size()); }

  const RootNode& root() const {
    if (nodes.empty()) throw InputError("RootGraph: empty graph");
    return nodes.front();
  }

  /// Indices in depth-first preorder from the root, children in stored order.
  std::vector<int> preorder() const;

  /// Verifies parent/child consistency, single root, acyclicity and full
  /// connectivity. Throws InputError on violation.
  void validate() const;
};

}  // namespace rootex
