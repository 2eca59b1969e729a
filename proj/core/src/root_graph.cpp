#include "rootex/root_graph.hpp"

#include <string>

namespace rootex {

std::vector<int> RootGraph::preorder() const {
  std::vector<int> order;
  if (nodes.empty()) return order;
  order.reserve(nodes.size());
  std::vector<int> stack{0};
  while (!stack.empty()) {
    const int i = stack.back();
    stack.pop_back();
    order.push_back(i);
    const auto& kids = nodes[std::size_t(i)].children;
    for (auto it = kids.rbegin(); it != kids.rend(); ++it) stack.push_back(*it);
  }
  return order;
}

void RootGraph::validate() const {
  if (nodes.empty()) throw InputError("RootGraph: empty graph");
  if (nodes[0].parent != -1) throw InputError("RootGraph: node 0 must be the root");
  const int n = node_count();
  for (int i = 0; i < n; ++i) {
    const RootNode& node = nodes[std::size_t(i)];
    if (i != 0 && (node.parent < 0 || node.parent >= n))
      throw InputError("RootGraph: node " + std::to_string(i) + " has no valid parent");
    for (int c : node.children) {
      if (c < 0 || c >= n || nodes[std::size_t(c)].parent != i)
        throw InputError("RootGraph: inconsistent child link at node " +
                         std::to_string(i));
    }
  }
  const std::vector<int> order = preorder();
  if (int(order.size()) != n)
    throw InputError("RootGraph: graph is not a single connected tree");
  std::vector<char> seen(std::size_t(n), 0);
  for (int i : order) {
    if (seen[std::size_t(i)]) throw InputError("RootGraph: cycle detected");
    seen[std::size_t(i)] = 1;
  }
}

}  // namespace rootex
