#include <doctest.h>

#include <cmath>

#include "helpers.hpp"
#include "oracles.hpp"
#include "rootex/simplify.hpp"

using namespace rootex;

namespace {

RootGraph chain_graph(const std::vector<Vec3d>& pts) {
  RootGraph g;
  g.branch_count = 2;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    g.nodes.push_back({pts[i], 1.0, i == 0 ? 0 : 1, int(i) - 1, {}});
    if (i > 0) g.nodes[i - 1].children.push_back(int(i));
  }
  return g;
}

std::vector<Vec3d> chain_positions(const RootGraph& g) {
  std::vector<Vec3d> out;
  for (int i : g.preorder()) out.push_back(g.nodes[std::size_t(i)].pos);
  return out;
}

std::vector<Vec3d> random_chain(int n, std::mt19937_64& rng) {
  std::vector<Vec3d> pts{{50, 50, 50}};
  std::uniform_real_distribution<double> step(-3.0, 3.0);
  for (int i = 1; i < n; ++i)
    pts.push_back(pts.back() + Vec3d{step(rng), step(rng), step(rng)});
  return pts;
}

}  // namespace

TEST_CASE("collinear interior nodes vanish") {
  const RootGraph g = chain_graph({{0, 0, 0}, {0, 0, 1}, {0, 0, 2}});
  const RootGraph s = simplify_graph(g, 0.5);
  CHECK(s.node_count() == 2);
  CHECK(s.nodes[0].pos == Vec3d{0, 0, 0});
  CHECK(s.nodes[1].pos == Vec3d{0, 0, 2});
  CHECK(s.nodes[1].branch_id == 1);
}

TEST_CASE("delta 0 keeps every non-collinear interior node") {
  const RootGraph g =
      chain_graph({{0, 0, 0}, {1, 0, 1}, {0, 1, 2}, {1, 1, 3}, {0, 0, 4}});
  const RootGraph s = simplify_graph(g, 0.0);
  CHECK(s.node_count() == g.node_count());
}

TEST_CASE("zigzag chain matches the recursive reference implementation") {
  // deviations alternate up to 1.4 from the end-to-end chord
  std::vector<Vec3d> pts;
  for (int i = 0; i < 9; ++i) {
    const double off = (i % 2 == 0) ? 0.0 : ((i % 4 == 1) ? 1.4 : -0.7);
    pts.push_back({double(i), off, 0.3 * i});
  }
  const RootGraph g = chain_graph(pts);
  const RootGraph s = simplify_graph(g, 1.0);

  const std::vector<int> kept = oracles::douglas_peucker(pts, 1.0);
  const std::vector<Vec3d> got = chain_positions(s);
  REQUIRE(got.size() == kept.size());
  for (std::size_t i = 0; i < kept.size(); ++i)
    CHECK(got[i] == pts[std::size_t(kept[i])]);

  CHECK(max_deviation(pts, got) <= 1.0);
}

TEST_CASE("simplification agrees with the reference on random chains") {
  std::mt19937_64 rng(73);
  std::uniform_real_distribution<double> delta_dist(0.1, 5.0);
  for (int trial = 0; trial < 50; ++trial) {
    const auto pts = random_chain(3 + int(rng() % 30), rng);
    const double delta = delta_dist(rng);
    const RootGraph s = simplify_graph(chain_graph(pts), delta);
    const auto kept = oracles::douglas_peucker(pts, delta);
    const auto got = chain_positions(s);
    REQUIRE(got.size() == kept.size());
    for (std::size_t i = 0; i < kept.size(); ++i)
      CHECK(got[i] == pts[std::size_t(kept[i])]);
    CHECK(max_deviation(pts, got) <= delta + 1e-12);
  }
}

TEST_CASE("fixed points survive: root, leaves and junction nodes") {
  // Y-shaped graph with long collinear runs
  RootGraph g;
  g.branch_count = 3;
  g.nodes.push_back({{0, 0, 0}, 1, 0, -1, {}});
  int parent = 0;
  for (int i = 1; i <= 4; ++i) {  // trunk along z
    g.nodes.push_back({{0, 0, double(i)}, 1, 1, parent, {}});
    g.nodes[std::size_t(parent)].children.push_back(int(g.nodes.size()) - 1);
    parent = int(g.nodes.size()) - 1;
  }
  const int junction = parent;
  for (int arm = 0; arm < 2; ++arm) {
    parent = junction;
    for (int i = 1; i <= 4; ++i) {
      const double x = arm == 0 ? double(i) : -double(i);
      g.nodes.push_back({{x, 0, 4.0 + i}, 1, 2 + arm, parent, {}});
      g.nodes[std::size_t(parent)].children.push_back(int(g.nodes.size()) - 1);
      parent = int(g.nodes.size()) - 1;
    }
  }
  g.validate();

  const RootGraph s = simplify_graph(g, 0.75);
  s.validate();
  // root + junction + 2 leaves survive; interior collinear nodes vanish
  CHECK(s.node_count() == 4);
  bool has_junction = false;
  for (const auto& n : s.nodes)
    if (n.pos == Vec3d{0, 0, 4}) has_junction = n.children.size() == 2;
  CHECK(has_junction);
}

TEST_CASE("simplification is idempotent") {
  std::mt19937_64 rng(79);
  for (int trial = 0; trial < 20; ++trial) {
    const auto pts = random_chain(3 + int(rng() % 20), rng);
    const double delta = 0.5 + double(rng() % 100) / 50.0;
    const RootGraph once = simplify_graph(chain_graph(pts), delta);
    const RootGraph twice = simplify_graph(once, delta);
    REQUIRE(once.node_count() == twice.node_count());
    for (int i = 0; i < once.node_count(); ++i)
      CHECK(once.nodes[std::size_t(i)].pos == twice.nodes[std::size_t(i)].pos);
  }
}

TEST_CASE("retained nodes keep position, radius and branch id") {
  std::vector<Vec3d> pts{{0, 0, 0}, {1, 2, 0}, {2, 0, 0}};
  RootGraph g = chain_graph(pts);
  g.nodes[1].radius = 7.5;
  const RootGraph s = simplify_graph(g, 0.5);  // middle deviates by 2, kept
  REQUIRE(s.node_count() == 3);
  CHECK(s.nodes[1].radius == 7.5);
  CHECK(s.nodes[1].branch_id == 1);
}

TEST_CASE("max_deviation basics") {
  const std::vector<Vec3d> chain{{0, 0, 0}, {0, 0, 1}, {0, 0, 2}};
  CHECK(max_deviation(chain, chain) == 0.0);
  CHECK(max_deviation(chain, {{0, 0, 0}, {0, 0, 2}}) == 0.0);
  CHECK_THROWS_AS(max_deviation(chain, {{0, 0, 0}, {0, 0, 3}}), InputError);

  const std::vector<Vec3d> bent{{0, 0, 0}, {1, 1, 0}, {2, 0, 0}};
  CHECK(max_deviation(bent, {{0, 0, 0}, {2, 0, 0}}) == doctest::Approx(1.0));
}
