#pragma once

#include <string>

#include "rootex/root_graph.hpp"

namespace rootex {

// RGRAPH1 interchange format. Header line "RGRAPH1 <node_count>", then one
// record per node:
//     id parent_id x y z radius branch_id
// Ids are depth-first preorder starting at 0; parent_id is -1 for the root.
// Positions and radii are decimal floating point and round-trip exactly.
// '#' starts a comment line.

std::string graph_to_string(const RootGraph& g);
RootGraph graph_from_string(const std::string& text);

void write_graph(const RootGraph& g, const std::string& path);
RootGraph read_graph(const std::string& path);

}  // namespace rootex
