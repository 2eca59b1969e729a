#pragma once

#include <vector>

#include "rootex/root_graph.hpp"

namespace rootex {

/// Douglas-Peucker reduction of every maximal chain between fixed points
/// (root, leaves, nodes with two or more children). Retained nodes keep
/// their position, radius and branch id; the tree structure is preserved.
/// Deviation is perpendicular point-to-segment distance; when two interior
/// points tie for the maximum the lower chain index is kept.
RootGraph simplify_graph(const RootGraph& g, double delta);

/// Maximum over points of `original` absent from `simplified` of their
/// distance to the simplified polyline. Both chains must share endpoints.
double max_deviation(const std::vector<Vec3d>& original,
                     const std::vector<Vec3d>& simplified);

}  // namespace rootex
