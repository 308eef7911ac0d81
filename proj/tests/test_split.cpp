#include <doctest.h>

#include <algorithm>

#include "enumerate.hpp"
#include "oracles.hpp"
#include "raagsplit/errors.hpp"
#include "raagsplit/split.hpp"

using namespace raagsplit;

namespace {

SimpleGraph cycle(int n) {
  std::vector<std::string> names;
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (int i = 0; i < n; ++i) {
    names.push_back("v" + std::to_string(i));
    edges.emplace_back(i, (i + 1) % n);
  }
  return SimpleGraph::from_indices(names, edges);
}

const SimpleGraph kPath({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}});
const SimpleGraph kTriangle({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}, {"a", "c"}});

std::vector<VertexSet> pieces_of(const CutTree& t) {
  std::vector<VertexSet> out;
  for (const auto& n : t.nodes) out.push_back(n.piece);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("unpinched examples") {
  CHECK(is_unpinched(cycle(4)));
  CHECK_FALSE(is_unpinched(kPath));
  CHECK(is_unpinched(testing::load_fixture("two-pentagon.json")));
  CHECK_FALSE(is_unpinched(kTriangle));
  CHECK_FALSE(is_unpinched(SimpleGraph({"a", "b"}, {})));
}

TEST_CASE("classification examples") {
  auto p = classify_splitting(kPath);
  CHECK(p.verdict == SplitVerdict::splits_over_abelian);
  REQUIRE(p.witness);
  CHECK(*p.witness == VertexSet{1});
  CHECK(check_split_certificate(kPath, p));
  CHECK(classify_splitting(cycle(5)).verdict == SplitVerdict::no_abelian_splitting);
  CHECK(classify_splitting(kTriangle).verdict == SplitVerdict::complete);
  CHECK_THROWS_AS(classify_splitting(SimpleGraph()), InputError);

  auto free = classify_splitting(SimpleGraph({"a", "b"}, {}));
  CHECK(free.verdict == SplitVerdict::splits_over_abelian);
  CHECK(free.witness == VertexSet{});
}

TEST_CASE("tampered certificates are rejected") {
  auto c = classify_splitting(kPath);
  c.witness = VertexSet{0};
  CHECK_FALSE(check_split_certificate(kPath, c));
  SplitCertificate lie;
  lie.verdict = SplitVerdict::no_abelian_splitting;
  CHECK_FALSE(check_split_certificate(kPath, lie));
}

TEST_CASE("classification agrees with subset enumeration up to 7 vertices") {
  int checked = 0;
  for (const auto& g : testing::all_graphs(7, true)) {
    const auto small = testing::to_small(g);
    const auto cert = classify_splitting(g);
    CHECK(cert.verdict == testing::brute_force_verdict(small));
    if (cert.verdict == SplitVerdict::splits_over_abelian)
      CHECK(cert.witness == testing::brute_force_separating_clique(small));
    CHECK(check_split_certificate(g, cert));
    ++checked;
  }
  CHECK(checked == 1 + 1 + 2 + 6 + 21 + 112 + 853);
}

TEST_CASE("cut tree examples") {
  auto c5 = complete_cut_decomposition(cycle(5));
  REQUIRE(c5.nodes.size() == 1);
  CHECK(c5.nodes[0].piece == VertexSet{0, 1, 2, 3, 4});
  CHECK(c5.edges.empty());

  auto p = complete_cut_decomposition(kPath);
  CHECK(pieces_of(p) == std::vector<VertexSet>{{0, 1}, {1, 2}});
  CHECK(p.edges.size() == 1);
  CHECK_FALSE(validate_cut_tree(kPath, p));

  const SimpleGraph oct = testing::load_fixture("octagon-triangle.json");
  auto t = complete_cut_decomposition(oct);
  REQUIRE(t.nodes.size() == 2);
  const VertexSet octagon = oct.indices_of({"o0", "o1", "o2", "o3", "o4", "o5", "o6", "o7"});
  const VertexSet triangle = oct.indices_of({"o0", "o1", "t"});
  CHECK(pieces_of(t) == std::vector<VertexSet>{normalized(octagon), normalized(triangle)});
  CHECK_FALSE(validate_cut_tree(oct, t));

  CHECK_THROWS_AS(complete_cut_decomposition(SimpleGraph({"a", "b"}, {})), InputError);
}

TEST_CASE("cut tree validator catches broken trees") {
  auto t = complete_cut_decomposition(kPath);
  auto missing = t;
  missing.nodes.pop_back();
  missing.edges.clear();
  CHECK(validate_cut_tree(kPath, missing));

  const SimpleGraph c4 = cycle(4);
  CutTree split;
  split.nodes = {{0, {0, 1, 2}}, {1, {0, 2, 3}}};
  split.edges = {{0, 1}};
  // {0, 2} is not complete in C4
  CHECK(validate_cut_tree(c4, split));
}

TEST_CASE("decomposition examples") {
  auto c7 = unpinched_decomposition(cycle(7));
  CHECK(c7.kind == DecompositionCase::cycle);
  CHECK_FALSE(validate_unpinched_decomposition(cycle(7), c7));

  const SimpleGraph two = testing::load_fixture("two-pentagon.json");
  auto d = unpinched_decomposition(two);
  CHECK(d.kind == DecompositionCase::separator);
  REQUIRE(d.separator);
  CHECK(*d.separator == normalized(two.indices_of({"x", "y", "z"})));
  REQUIRE(d.parts.size() == 2);
  for (const auto& part : d.parts) {
    const SimpleGraph piece = induced_subgraph(two, set_union(part, *d.separator));
    CHECK(piece.size() == 5);
    CHECK(is_cycle_graph(piece));
    CHECK(is_unpinched(piece));
  }
  CHECK_FALSE(validate_unpinched_decomposition(two, d));

  const SimpleGraph attached = testing::load_fixture("c5-attached.json");
  auto v = unpinched_decomposition(attached);
  CHECK(v.kind == DecompositionCase::vertex_removal);
  REQUIRE(v.vertex);
  CHECK(attached.name(*v.vertex) == "c");
  CHECK_FALSE(validate_unpinched_decomposition(attached, v));

  CHECK_THROWS_AS(unpinched_decomposition(kTriangle), InputError);
  CHECK_THROWS_AS(unpinched_decomposition(kPath), InputError);
}

TEST_CASE("decompositions validate on all triangle-free unpinched graphs up to 7 vertices") {
  int count = 0;
  for (const auto& g : testing::all_graphs(7, true, true)) {
    if (!is_unpinched(g)) continue;
    auto d = unpinched_decomposition(g);
    auto err = validate_unpinched_decomposition(g, d);
    CHECK_MESSAGE(!err, (err ? *err : ""));
    ++count;
  }
  CHECK(count > 0);
}

TEST_CASE("attachments") {
  // C4 a-b-c-d with a path a-p-q-c between opposite corners
  const SimpleGraph host({"a", "b", "c", "d", "p", "q", "r"},
                         {{"a", "b"}, {"b", "c"}, {"c", "d"}, {"d", "a"}, {"a", "p"}, {"p", "q"}, {"q", "c"}, {"r", "a"}});
  const VertexSet core = host.indices_of({"a", "b", "c", "d"});
  CHECK(attach_preserves_unpinched(host, core, {host.index("a"), host.index("p"), host.index("q"), host.index("c")}));
  CHECK_FALSE(attach_preserves_unpinched(host, core, {host.index("r")}));

  // C5 plus a vertex on two non-adjacent cycle vertices
  std::vector<std::string> names = {"v0", "v1", "v2", "v3", "v4", "w"};
  const SimpleGraph c5w = SimpleGraph::from_indices(names, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {5, 0}, {5, 2}});
  CHECK(attach_preserves_unpinched(c5w, {0, 1, 2, 3, 4}, {5}));
  CHECK(is_unpinched(c5w));

  CHECK_THROWS_AS(attach_preserves_unpinched(host, host.indices_of({"a", "b", "c"}), {host.index("r")}), InputError);
}

TEST_CASE("triangle reduction on every unpinched graph with triangles up to 6 vertices") {
  int steps = 0;
  for (const auto& g : testing::all_graphs(6, true)) {
    if (!is_unpinched(g) || triangle_count(g) == 0) continue;
    for (Vertex v = 0; v < g.size(); ++v) {
      if (!in_triangle(g, v)) {
        CHECK_THROWS_AS(triangle_reduction_step(g, v), InputError);
        continue;
      }
      const auto out = triangle_reduction_step(g, v);
      CHECK_FALSE(out.empty());
      for (const auto& h : out) {
        CHECK(is_unpinched(h));
        CHECK(triangle_count(h) < triangle_count(g));
      }
      ++steps;
    }
  }
  CHECK(steps > 0);
}

TEST_CASE("iterated triangle reduction reaches a triangle-free graph") {
  // hexagon plus a vertex on three of its vertices: one triangle, unpinched
  const SimpleGraph g = SimpleGraph::from_indices(
      {"v0", "v1", "v2", "v3", "v4", "v5", "w"},
      {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 0}, {6, 0}, {6, 1}, {6, 3}});
  REQUIRE(is_unpinched(g));
  REQUIRE(triangle_count(g) == 1);
  SimpleGraph cur = g;
  for (int round = 0; round < 10 && triangle_count(cur) > 0; ++round) {
    Vertex v = 0;
    while (!in_triangle(cur, v)) ++v;
    const auto out = triangle_reduction_step(cur, v);
    REQUIRE_FALSE(out.empty());
    CHECK(triangle_count(out.front()) < triangle_count(cur));
    cur = out.front();
  }
  CHECK(triangle_count(cur) == 0);
  CHECK(is_unpinched(cur));

  CHECK_THROWS_AS(triangle_reduction_step(kTriangle, 0), InputError);
}

TEST_CASE("obstruction examples") {
  const SimpleGraph oct = testing::load_fixture("octagon-triangle.json");
  const SimpleGraph octahedron = testing::load_fixture("octahedron.json");
  REQUIRE(is_unpinched(octahedron));
  REQUIRE(clique_number(octahedron) == 3);
  auto r = embedding_obstruction(octahedron, oct);
  CHECK(r.obstructed());
  REQUIRE(r.admissible.size() == 1);
  CHECK(r.admissible[0].admissible_targets.empty());

  // C4 into C5 and K3 sharing a vertex
  const SimpleGraph target = SimpleGraph::from_indices(
      {"v0", "v1", "v2", "v3", "v4", "t1", "t2"},
      {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {0, 5}, {0, 6}, {5, 6}});
  auto c4 = embedding_obstruction(cycle(4), target);
  CHECK_FALSE(c4.obstructed());
  REQUIRE(c4.admissible.size() == 1);
  REQUIRE(c4.admissible[0].admissible_targets.size() == 1);
  const int node = c4.admissible[0].admissible_targets[0];
  for (const auto& n : c4.target_tree.nodes)
    if (n.id == node) CHECK(n.piece == VertexSet{0, 1, 2, 3, 4});

  for (const auto& g : {cycle(5), oct, octahedron, testing::load_fixture("two-pentagon.json")}) {
    auto self = embedding_obstruction(g, g);
    CHECK_FALSE(self.obstructed());
    for (const auto& a : self.admissible) {
      const bool itself = std::find(a.admissible_targets.begin(), a.admissible_targets.end(), a.source_node) !=
                          a.admissible_targets.end();
      CHECK(itself);
    }
  }
}
