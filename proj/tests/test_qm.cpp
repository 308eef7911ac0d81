#include <doctest.h>

#include <queue>

#include "enumerate.hpp"
#include "oracles.hpp"
#include "raagsplit/errors.hpp"
#include "raagsplit/qm.hpp"

using namespace raagsplit;

namespace {

const SimpleGraph kEdge({"a", "b"}, {{"a", "b"}});
const SimpleGraph kTwo({"a", "b"}, {});

WeightedGraph with_orders(const SimpleGraph& g, long nu) {
  return WeightedGraph(g, std::vector<long>(g.size(), nu));
}

std::vector<int> core(const QMBall& b) {
  std::vector<int> out;
  for (int i = 0; i < b.size(); ++i)
    if (b.length[i] <= b.core_radius()) out.push_back(i);
  return out;
}

int separating(const HyperplaneSystem& hs, int x, int y) {
  int n = 0;
  for (const auto& h : hs.hyperplanes) n += h.sector_of[x] != h.sector_of[y];
  return n;
}

std::vector<long> weighted_distances(const QMBall& b, int source) {
  std::vector<long> d(b.size(), -1);
  using Item = std::pair<long, int>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> pq;
  pq.push({0, source});
  while (!pq.empty()) {
    auto [dist, x] = pq.top();
    pq.pop();
    if (d[x] >= 0) continue;
    d[x] = dist;
    for (auto [y, e] : b.adj[x])
      if (d[y] < 0) pq.push({dist + b.edges[e].weight, y});
  }
  return d;
}

testing::AdjacencyLists induced_adjacency(const QMBall& b, const std::vector<int>& keep) {
  std::map<int, int> at;
  for (int x : keep) at.emplace(x, static_cast<int>(at.size()));
  testing::AdjacencyLists out(keep.size());
  for (int x : keep)
    for (auto [y, e] : b.adj[x])
      if (at.count(y)) out[at[x]].push_back(at[y]);
  return out;
}

testing::AdjacencyLists adjacency(const QMBall& b) {
  std::vector<int> all(b.size());
  for (int i = 0; i < b.size(); ++i) all[i] = i;
  return induced_adjacency(b, all);
}

SectorSelection base_plus_one(const QMBall& b, const HyperplaneSystem& hs) {
  const int id = b.index_of({});
  SectorSelection sel;
  for (const auto& h : hs.hyperplanes) {
    const int home = h.sector_of[id];
    sel[h.id] = {home, home == 0 ? 1 : 0};
  }
  return sel;
}

}  // namespace

TEST_CASE("ball examples") {
  auto sq = build_ball(with_orders(kEdge, 2), 2);
  CHECK(sq.size() == 4);
  CHECK(sq.edges.size() == 4);
  for (const auto& v : sq.vertices) {
    int deg = 0;
    for (const auto& e : sq.edges) deg += e.a == sq.index_of(v) || e.b == sq.index_of(v);
    CHECK(deg == 2);
  }

  auto tri = build_ball(with_orders(kEdge, 3), 2);
  CHECK(tri.size() == 9);
  CHECK(tri.edges.size() == 18);

  for (int r = 0; r <= 5; ++r) {
    auto line = build_ball(with_orders(kTwo, 2), r);
    CHECK(line.size() == 2 * r + 1);
    CHECK(line.edges.size() == static_cast<std::size_t>(2 * r));
  }
  CHECK_THROWS_AS(build_ball(WeightedGraph::raag(kEdge), 2), InputError);
}

TEST_CASE("hyperplane examples") {
  auto sq = build_ball(with_orders(kEdge, 2), 2);
  auto hs = hyperplanes(sq);
  REQUIRE(hs.hyperplanes.size() == 2);
  for (const auto& h : hs.hyperplanes) CHECK(h.sector_count == 2);

  auto tri = build_ball(with_orders(kEdge, 3), 2);
  auto ht = hyperplanes(tri);
  REQUIRE(ht.hyperplanes.size() == 2);
  for (const auto& h : ht.hyperplanes) {
    CHECK(h.sector_count == 3);
    CHECK(h.edges.size() == 9);
  }

  auto line = build_ball(with_orders(kTwo, 2), 4);
  auto hl = hyperplanes(line);
  CHECK(hl.hyperplanes.size() == line.edges.size());
}

TEST_CASE("separation and delta examples") {
  auto sq = build_ball(with_orders(kEdge, 2), 4);
  auto hs = hyperplanes(sq);
  const int one = sq.index_of({});
  const int ab = sq.index_of({{0, 1}, {1, 1}});
  CHECK(separating_hyperplane_distance(sq, hs, one, ab) == 2);
  CHECK(separating_hyperplane_distance(sq, hs, ab, ab) == 0);

  auto tri = build_ball(with_orders(kEdge, 3), 4);
  auto ht = hyperplanes(tri);
  const int a1b1 = tri.index_of({{0, 1}, {1, 1}});
  const int a2b2 = tri.index_of({{0, 2}, {1, 2}});
  CHECK(separating_hyperplane_distance(tri, ht, a1b1, a2b2) == 2);
  CHECK(delta_distance(tri, ht, tri.index_of({}), a1b1).weighted_path == 2);

  auto five = build_ball(with_orders(kEdge, 5), 2);
  auto hf = hyperplanes(five);
  auto d = delta_distance(five, hf, five.index_of({}), five.index_of({{0, 4}}));
  CHECK(d.weighted_path == 1);
  CHECK(d.hyperplane_sum == 1);
  CHECK(d.word_metric == 1);

  // a^1 b^2 sits at syllable length 2, outside the radius-1 core
  CHECK_THROWS_AS(separating_hyperplane_distance(five, hf, 0, five.index_of({{0, 1}, {1, 2}})), PreconditionError);
}

TEST_CASE("hyperplanes count distances on small balls") {
  for (const auto& g : testing::all_graphs(3, false)) {
    for (long nu : {2L, 3L}) {
      for (int r = 1; r <= 4; ++r) {
        const auto ball = build_ball(with_orders(g, nu), r);
        const auto hs = hyperplanes(ball);
        for (const auto& h : hs.hyperplanes)
          for (int e : h.edges) CHECK(ball.edges[e].label == h.label);
        const auto c = core(ball);
        for (int x : c) {
          const auto bfs = bfs_distances(ball, x);
          const auto wd = weighted_distances(ball, x);
          for (int y : c) {
            CHECK(separating(hs, x, y) == bfs[y]);
            const auto dd = delta_distance(ball, hs, x, y);
            CHECK(dd.weighted_path == wd[y]);
            CHECK(dd.hyperplane_sum == wd[y]);
            const Word diff = multiply(ball.presentation, inverse(ball.presentation, ball.vertices[x]), ball.vertices[y]);
            CHECK(dd.word_metric == word_metric_length(ball.presentation, diff));
          }
        }
      }
    }
  }
}

TEST_CASE("triangles in the core lie in one factor") {
  for (const auto& g : testing::all_graphs(3, false)) {
    const auto ball = build_ball(with_orders(g, 3), 3);
    for (const auto& e : ball.edges) {
      if (ball.length[e.a] > ball.core_radius() || ball.length[e.b] > ball.core_radius()) continue;
      for (auto [z, f] : ball.adj[e.a]) {
        const int back = ball.edge_between(z, e.b);
        if (back < 0) continue;
        CHECK(ball.edges[f].label == e.label);
        CHECK(ball.edges[back].label == e.label);
      }
    }
  }
}

TEST_CASE("invasive subgraphs") {
  auto tri = build_ball(with_orders(kEdge, 3), 2);
  auto ht = hyperplanes(tri);
  auto sq = construct_invasive(tri, ht, base_plus_one(tri, ht));
  CHECK(sq.vertices.size() == 4);
  for (auto [id, t] : sq.thickness) CHECK(t == 2);

  SectorSelection all;
  for (const auto& h : ht.hyperplanes) all[h.id] = {0, 1, 2};
  CHECK(construct_invasive(tri, ht, all).vertices.size() == 9);

  auto whole = identify_invasive(tri, ht, construct_invasive(tri, ht, all).vertices);
  CHECK(whole.weighted == with_orders(kEdge, 3));
  auto small = identify_invasive(tri, ht, sq.vertices);
  CHECK(small.weighted == with_orders(kEdge, 2));

  auto square = build_ball(with_orders(kEdge, 2), 2);
  auto hsq = hyperplanes(square);
  SectorSelection both;
  for (const auto& h : hsq.hyperplanes) both[h.id] = {0, 1};
  CHECK(construct_invasive(square, hsq, both).vertices.size() == 4);
  SectorSelection one;
  one[0] = {0};
  CHECK_THROWS_AS(construct_invasive(square, hsq, one), InputError);
}

TEST_CASE("invasive round trip on the four-cycle matches a searched isomorphism") {
  const SimpleGraph c4 = testing::load_fixture("c4.json");
  for (int r : {2, 3}) {
    const auto ball = build_ball(with_orders(c4, 3), r);
    const auto hs = hyperplanes(ball);
    const auto inv = construct_invasive(ball, hs, base_plus_one(ball, hs));
    const auto id = identify_invasive(ball, hs, inv.vertices);
    CHECK(id.dropped.empty());
    CHECK(id.weighted == with_orders(c4, 2));

    const auto target = build_ball(id.weighted, id.radius);
    std::vector<int> near;
    for (auto [x, w] : id.phi) near.push_back(x);
    std::sort(near.begin(), near.end());
    CHECK(testing::isomorphic(induced_adjacency(ball, near), adjacency(target)));
  }
}

TEST_CASE("non-regular subgraphs are reported") {
  // keep 2 sectors on one a-hyperplane and all 3 on another
  auto tri = build_ball(with_orders(kTwo, 3), 4);
  auto ht = hyperplanes(tri);
  const int id = tri.index_of({});
  SectorSelection sel;
  bool trimmed = false;
  for (const auto& h : ht.hyperplanes) {
    if (h.label != 0 || trimmed) continue;
    bool through_identity = false;
    for (int e : h.edges) through_identity = through_identity || tri.edges[e].a == id || tri.edges[e].b == id;
    if (!through_identity) continue;
    const int home = h.sector_of[id];
    sel[h.id] = {home, home == 0 ? 1 : 0};
    trimmed = true;
  }
  REQUIRE(trimmed);
  const auto z = construct_invasive(tri, ht, sel);
  CHECK_THROWS_AS(identify_invasive(tri, ht, z.vertices), RegularityError);
  // without the check the label map itself breaks
  CHECK_THROWS_AS(identify_invasive(tri, ht, z.vertices, false), InvariantViolation);
}

TEST_CASE("ball cap") {
  const SimpleGraph four({"a", "b", "c", "d"}, {});
  try {
    build_ball(with_orders(four, 3), 10, 100);
    FAIL("expected a resource error");
  } catch (const ResourceError& e) {
    CHECK(e.estimate() > 100);
  }
  CHECK(estimate_ball_size(with_orders(kEdge, 3), 2) == doctest::Approx(9));
}
