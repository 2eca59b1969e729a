#include "rootex/graph_io.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>

namespace rootex {

namespace {

void append_number(std::string& out, double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  out += buf;
}

}  // namespace

std::string graph_to_string(const RootGraph& g) {
  g.validate();
  const std::vector<int> order = g.preorder();
  std::vector<int> file_id(g.nodes.size(), -1);
  for (std::size_t k = 0; k < order.size(); ++k) file_id[std::size_t(order[k])] = int(k);

  std::string out = "RGRAPH1 " + std::to_string(g.node_count()) + "\n";
  for (int idx : order) {
    const RootNode& n = g.nodes[std::size_t(idx)];
    out += std::to_string(file_id[std::size_t(idx)]);
    out += ' ';
    out += std::to_string(n.parent < 0 ? -1 : file_id[std::size_t(n.parent)]);
    out += ' ';
    append_number(out, n.pos.x);
    out += ' ';
    append_number(out, n.pos.y);
    out += ' ';
    append_number(out, n.pos.z);
    out += ' ';
    append_number(out, n.radius);
    out += ' ';
    out += std::to_string(n.branch_id);
    out += '\n';
  }
  return out;
}

RootGraph graph_from_string(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line)) throw InputError("RGRAPH: empty input");
  std::istringstream hs(line);
  std::string magic;
  long long count = -1;
  if (!(hs >> magic >> count) || magic != "RGRAPH1" || count < 0)
    throw InputError("RGRAPH: malformed header");

  struct Record {
    long long id, parent;
    Vec3d pos;
    double radius;
    int branch;
  };
  std::vector<Record> records;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ls(line);
    Record r{};
    if (!(ls >> r.id >> r.parent >> r.pos.x >> r.pos.y >> r.pos.z >> r.radius >>
          r.branch))
      throw InputError("RGRAPH: malformed record: " + line);
    records.push_back(r);
  }
  if (static_cast<long long>(records.size()) != count)
    throw InputError("RGRAPH: node count mismatch");
  if (records.empty()) throw InputError("RGRAPH: graph has no nodes");

  std::map<long long, int> by_id;
  for (std::size_t i = 0; i < records.size(); ++i)
    if (!by_id.emplace(records[i].id, int(i)).second)
      throw InputError("RGRAPH: duplicate node id " + std::to_string(records[i].id));

  int root = -1;
  for (std::size_t i = 0; i < records.size(); ++i) {
    if (records[i].parent >= 0) continue;
    if (root >= 0) throw InputError("RGRAPH: multiple roots");
    root = int(i);
  }
  if (root < 0) throw InputError("RGRAPH: no root record");

  // Order nodes root-first so the graph root lands at index 0; children
  // keep file order.
  std::vector<int> slot(records.size(), -1);
  slot[std::size_t(root)] = 0;
  int next = 1;
  for (std::size_t i = 0; i < records.size(); ++i)
    if (int(i) != root) slot[i] = next++;

  RootGraph g;
  g.nodes.resize(records.size());
  int max_branch = 0;
  for (std::size_t i = 0; i < records.size(); ++i) {
    const Record& r = records[i];
    RootNode& n = g.nodes[std::size_t(slot[i])];
    n.pos = r.pos;
    n.radius = r.radius;
    n.branch_id = r.branch;
    max_branch = std::max(max_branch, r.branch);
    if (r.parent < 0) {
      n.parent = -1;
    } else {
      const auto it = by_id.find(r.parent);
      if (it == by_id.end())
        throw InputError("RGRAPH: record " + std::to_string(r.id) +
                         " references missing parent " + std::to_string(r.parent));
      n.parent = slot[std::size_t(it->second)];
    }
  }
  for (std::size_t i = 0; i < records.size(); ++i) {
    const int s = slot[i];
    const int p = g.nodes[std::size_t(s)].parent;
    if (p >= 0) g.nodes[std::size_t(p)].children.push_back(s);
  }
  g.branch_count = max_branch + 1;
  g.validate();  // rejects cycles and disconnected records
  return g;
}

void write_graph(const RootGraph& g, const std::string& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw InputError("cannot write file: " + path);
  out << graph_to_string(g);
  if (!out) throw InputError("write failed: " + path);
}

RootGraph read_graph(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  try {
    return graph_from_string(ss.str());
  } catch (const InputError& e) {
    throw InputError(std::string(e.what()) + " (" + path + ")");
  }
}

}  // namespace rootex
