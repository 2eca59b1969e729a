#include "rootex/phantom.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

namespace rootex {

PhantomSpec parse_phantom_spec(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line) || line.substr(0, 8) != "PHANTOM1")
    throw InputError("phantom spec: missing PHANTOM1 header");

  PhantomSpec spec;
  int line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ls(line);
    std::string kind;
    ls >> kind;
    const std::string where = " (line " + std::to_string(line_no) + ")";
    if (kind == "dims") {
      if (!(ls >> spec.nx >> spec.ny >> spec.nz) || spec.nx <= 0 || spec.ny <= 0 ||
          spec.nz <= 0)
        throw InputError("phantom spec: bad dims" + where);
    } else if (kind == "path") {
      PhantomPath p;
      int nv = 0;
      if (!(ls >> p.parent >> nv) || nv < 2)
        throw InputError("phantom spec: bad path" + where);
      p.vertices.resize(std::size_t(nv));
      for (auto& v : p.vertices)
        if (!(ls >> v.x >> v.y >> v.z))
          throw InputError("phantom spec: bad path vertex" + where);
      std::string marker;
      if (!(ls >> marker) || marker != "radii")
        throw InputError("phantom spec: expected 'radii'" + where);
      p.seg_radii.resize(std::size_t(nv - 1));
      for (auto& r : p.seg_radii)
        if (!(ls >> r) || r < 0.0)
          throw InputError("phantom spec: bad segment radius" + where);
      spec.paths.push_back(std::move(p));
    } else if (kind == "gap") {
      PhantomGap gap;
      if (!(ls >> gap.path >> gap.t0 >> gap.t1) || gap.t1 < gap.t0)
        throw InputError("phantom spec: bad gap" + where);
      spec.gaps.push_back(gap);
    } else if (kind == "blob") {
      PhantomBlob b;
      if (!(ls >> b.center.x >> b.center.y >> b.center.z >> b.radius >> b.intensity))
        throw InputError("phantom spec: bad blob" + where);
      spec.blobs.push_back(b);
    } else {
      throw InputError("phantom spec: unknown directive '" + kind + "'" + where);
    }
  }
  if (spec.nx == 0) throw InputError("phantom spec: missing dims");
  if (spec.paths.empty()) throw InputError("phantom spec: no paths");
  return spec;
}

PhantomSpec read_phantom_spec(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_phantom_spec(ss.str());
}

namespace {

bool in_volume(const PhantomSpec& spec, Vec3d v) {
  return v.x >= 0 && v.x <= spec.nx - 1 && v.y >= 0 && v.y <= spec.ny - 1 &&
         v.z >= 0 && v.z <= spec.nz - 1;
}

struct PathStamp {
  const PhantomPath* path;
  std::vector<double> cum_len;  // arc length at each vertex
  double max_radius;
};

void stamp_path(VolumeF& vol, const PhantomSpec& spec, int path_idx,
                const PathStamp& ps, std::vector<float>& best_d,
                std::vector<float>& best_t) {
  const auto& verts = ps.path->vertices;
  std::fill(best_d.begin(), best_d.end(), kInf);
  std::fill(best_t.begin(), best_t.end(), 0.0f);

  // Every segment box is inflated by the largest path radius so each voxel
  // that could be stamped sees all segments at least as close as its winner.
  const double margin = ps.max_radius + 1.0;
  const int nx = vol.nx(), ny = vol.ny(), nz = vol.nz();
  std::vector<std::int32_t> best_seg(best_d.size(), -1);

  for (std::size_t s = 0; s + 1 < verts.size(); ++s) {
    const Vec3d a = verts[s];
    const Vec3d b = verts[s + 1];
    const double seg_len = dist(a, b);
    const int x0 = std::max(0, int(std::floor(std::min(a.x, b.x) - margin)));
    const int x1 = std::min(nx - 1, int(std::ceil(std::max(a.x, b.x) + margin)));
    const int y0 = std::max(0, int(std::floor(std::min(a.y, b.y) - margin)));
    const int y1 = std::min(ny - 1, int(std::ceil(std::max(a.y, b.y) + margin)));
    const int z0 = std::max(0, int(std::floor(std::min(a.z, b.z) - margin)));
    const int z1 = std::min(nz - 1, int(std::ceil(std::max(a.z, b.z) + margin)));
    for (int z = z0; z <= z1; ++z)
      for (int y = y0; y <= y1; ++y)
        for (int x = x0; x <= x1; ++x) {
          const Vec3d p{double(x), double(y), double(z)};
          const SegmentHit hit = project_point_segment(p, a, b);
          const std::size_t i = vol.index(x, y, z);
          if (float(hit.distance) < best_d[i]) {  // ties keep earlier segments
            best_d[i] = float(hit.distance);
            best_t[i] = float(ps.cum_len[s] + hit.t * seg_len);
            best_seg[i] = std::int32_t(s);
          }
        }
  }

  for (std::size_t i = 0; i < best_d.size(); ++i) {
    const std::int32_t s = best_seg[i];
    if (s < 0) continue;
    if (double(best_d[i]) > ps.path->seg_radii[std::size_t(s)]) continue;
    bool gapped = false;
    for (const PhantomGap& gap : spec.gaps) {
      if (gap.path != path_idx) continue;
      if (double(best_t[i]) >= gap.t0 && double(best_t[i]) < gap.t1) {
        gapped = true;
        break;
      }
    }
    if (!gapped) vol[i] = 1.0f;
  }
}

}  // namespace

Phantom generate(const PhantomSpec& spec, std::uint64_t seed) {
  (void)seed;  // reserved for randomized phantom variants
  if (spec.nx <= 0 || spec.ny <= 0 || spec.nz <= 0)
    throw InputError("phantom: dims must be positive");

  // Ground-truth graph: one node per polyline vertex, child paths attach at
  // a coinciding vertex of their parent path.
  RootGraph graph;
  std::vector<std::vector<int>> path_nodes(spec.paths.size());
  for (std::size_t pi = 0; pi < spec.paths.size(); ++pi) {
    const PhantomPath& path = spec.paths[pi];
    if (path.vertices.size() < 2 ||
        path.seg_radii.size() != path.vertices.size() - 1)
      throw InputError("phantom: path needs n vertices and n-1 radii");
    for (const Vec3d& v : path.vertices)
      if (!in_volume(spec, v))
        throw InputError("phantom: centerline outside volume bounds");

    const int branch = int(pi) + 1;
    std::size_t first_vertex = 0;
    int parent_node = -1;
    if (pi == 0) {
      if (path.parent >= 0) throw InputError("phantom: path 0 must have parent -1");
      graph.nodes.push_back(
          RootNode{path.vertices[0], path.seg_radii[0], 0, -1, {}});
      path_nodes[pi].push_back(0);
      first_vertex = 1;
      parent_node = 0;
    } else {
      if (path.parent < 0 || path.parent >= int(pi))
        throw InputError("phantom: path parent must reference an earlier path");
      for (std::size_t vi = 0; vi < spec.paths[std::size_t(path.parent)].vertices.size(); ++vi) {
        if (spec.paths[std::size_t(path.parent)].vertices[vi] == path.vertices[0]) {
          parent_node = path_nodes[std::size_t(path.parent)][vi];
          break;
        }
      }
      if (parent_node < 0)
        throw InputError("phantom: child path must start on a parent vertex");
      path_nodes[pi].push_back(parent_node);
      first_vertex = 1;
    }
    for (std::size_t vi = first_vertex; vi < path.vertices.size(); ++vi) {
      const int idx = int(graph.nodes.size());
      graph.nodes.push_back(RootNode{path.vertices[vi], path.seg_radii[vi - 1],
                                     branch, parent_node, {}});
      graph.nodes[std::size_t(parent_node)].children.push_back(idx);
      path_nodes[pi].push_back(idx);
      parent_node = idx;
    }
  }
  graph.branch_count = int(spec.paths.size()) + 1;
  graph.validate();

  VolumeF vol(spec.nx, spec.ny, spec.nz, 0.0f);
  std::vector<float> best_d(vol.size());
  std::vector<float> best_t(vol.size());
  for (std::size_t pi = 0; pi < spec.paths.size(); ++pi) {
    PathStamp ps;
    ps.path = &spec.paths[pi];
    ps.cum_len.assign(1, 0.0);
    for (std::size_t s = 0; s + 1 < ps.path->vertices.size(); ++s)
      ps.cum_len.push_back(ps.cum_len.back() +
                           dist(ps.path->vertices[s], ps.path->vertices[s + 1]));
    ps.max_radius =
        *std::max_element(ps.path->seg_radii.begin(), ps.path->seg_radii.end());
    stamp_path(vol, spec, int(pi), ps, best_d, best_t);
  }

  for (const PhantomBlob& blob : spec.blobs) {
    if (!in_volume(spec, blob.center))
      throw InputError("phantom: blob center outside volume bounds");
    const double margin = blob.radius + 1.0;
    const int x0 = std::max(0, int(std::floor(blob.center.x - margin)));
    const int x1 = std::min(spec.nx - 1, int(std::ceil(blob.center.x + margin)));
    const int y0 = std::max(0, int(std::floor(blob.center.y - margin)));
    const int y1 = std::min(spec.ny - 1, int(std::ceil(blob.center.y + margin)));
    const int z0 = std::max(0, int(std::floor(blob.center.z - margin)));
    const int z1 = std::min(spec.nz - 1, int(std::ceil(blob.center.z + margin)));
    for (int z = z0; z <= z1; ++z)
      for (int y = y0; y <= y1; ++y)
        for (int x = x0; x <= x1; ++x) {
          const Vec3d p{double(x), double(y), double(z)};
          if (dist(p, blob.center) <= blob.radius)
            vol(x, y, z) = std::max(vol(x, y, z), float(blob.intensity));
        }
  }

  return Phantom{std::move(vol), std::move(graph)};
}

}  // namespace rootex
