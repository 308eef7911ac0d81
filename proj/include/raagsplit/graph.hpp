#pragma once

#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace raagsplit {

using Vertex = int;
// Sorted, duplicate-free list of vertex indices of some host graph.
using VertexSet = std::vector<Vertex>;

// Finite simple graph. Vertices are indexed 0..n-1 in declaration order and
// carry string names; the index order is the tie-break order everywhere.
class SimpleGraph {
 public:
  SimpleGraph() = default;
  SimpleGraph(std::vector<std::string> names,
              const std::vector<std::pair<std::string, std::string>>& edges);

  static SimpleGraph from_indices(std::vector<std::string> names,
                                  const std::vector<std::pair<Vertex, Vertex>>& edges);

  int size() const { return static_cast<int>(names_.size()); }
  bool empty() const { return names_.empty(); }
  const std::string& name(Vertex v) const { return names_.at(v); }
  const std::vector<std::string>& names() const { return names_; }
  Vertex index(const std::string& name) const;
  std::optional<Vertex> find(const std::string& name) const;

  bool adjacent(Vertex u, Vertex v) const { return adj_[u][v] != 0; }
  const std::vector<Vertex>& neighbours(Vertex v) const { return nbrs_.at(v); }
  int degree(Vertex v) const { return static_cast<int>(nbrs_.at(v).size()); }
  std::vector<std::pair<Vertex, Vertex>> edges() const;
  std::size_t edge_count() const { return edge_count_; }

  std::vector<std::string> names_of(const VertexSet& s) const;
  VertexSet indices_of(const std::vector<std::string>& names) const;

  bool operator==(const SimpleGraph& o) const;
  bool operator!=(const SimpleGraph& o) const { return !(*this == o); }

 private:
  void add_edge(Vertex u, Vertex v);

  std::vector<std::string> names_;
  std::unordered_map<std::string, Vertex> index_;
  std::vector<std::vector<char>> adj_;
  std::vector<std::vector<Vertex>> nbrs_;
  std::size_t edge_count_ = 0;
};

// Vertex orders of a graph product of cyclic groups. order[v] == 0 means the
// factor at v is infinite cyclic; otherwise it is Z/order[v], order >= 2.
struct WeightedGraph {
  SimpleGraph graph;
  std::vector<long> order;

  WeightedGraph() = default;
  WeightedGraph(SimpleGraph g, std::vector<long> ord);
  static WeightedGraph raag(SimpleGraph g);

  int size() const { return graph.size(); }
  bool finite(Vertex v) const { return order[v] != 0; }
  bool all_finite() const;
  bool operator==(const WeightedGraph& o) const {
    return graph == o.graph && order == o.order;
  }
  bool operator!=(const WeightedGraph& o) const { return !(*this == o); }
};

struct StructuralPredicates {
  bool is_complete = false;
  bool is_join = false;
  bool is_triangle_free = false;
  bool is_connected = false;
};

// The returned graph lists s in host order, so vertex i of the result is s[i].
SimpleGraph induced_subgraph(const SimpleGraph& g, const VertexSet& s);
VertexSet link(const SimpleGraph& g, Vertex v);
VertexSet star(const SimpleGraph& g, Vertex v);
StructuralPredicates structural_predicates(const SimpleGraph& g);
std::optional<std::vector<Vertex>> find_induced_cycle(const SimpleGraph& g);

// Independent checker: consecutive members adjacent, length >= 3, and no
// chords between non-consecutive members.
bool is_induced_cycle(const SimpleGraph& g, const std::vector<Vertex>& cycle);

bool is_complete(const SimpleGraph& g);
bool is_complete_set(const SimpleGraph& g, const VertexSet& s);
bool is_connected(const SimpleGraph& g);
bool is_join(const SimpleGraph& g);
bool is_cycle_graph(const SimpleGraph& g);
long triangle_count(const SimpleGraph& g);
int clique_number(const SimpleGraph& g);
bool in_triangle(const SimpleGraph& g, Vertex v);

// Components of g restricted to the vertices not in `removed`, each sorted,
// ordered by least vertex.
std::vector<VertexSet> components_avoiding(const SimpleGraph& g, const VertexSet& removed);
std::vector<VertexSet> components_within(const SimpleGraph& g, const VertexSet& allowed);

// Shortest path from any vertex of `from` to any vertex of `to` using only
// vertices of `allowed` (which must contain the endpoints). Ties go to the
// smallest indices.
std::optional<std::vector<Vertex>> shortest_path_within(const SimpleGraph& g,
                                                        const VertexSet& allowed,
                                                        const VertexSet& from,
                                                        const VertexSet& to);

// All complete subsets of size k, lexicographic.
std::vector<VertexSet> complete_subsets_of_size(const SimpleGraph& g, int k);

// Induced cycles of length >= 4, each rotated to start at its least vertex and
// oriented towards the smaller neighbour. Exponential; meant for small graphs.
std::vector<std::vector<Vertex>> induced_cycles(const SimpleGraph& g, int min_length = 4);

VertexSet set_union(const VertexSet& a, const VertexSet& b);
VertexSet set_difference(const VertexSet& a, const VertexSet& b);
VertexSet set_intersection(const VertexSet& a, const VertexSet& b);
bool set_contains(const VertexSet& s, Vertex v);
bool set_includes(const VertexSet& outer, const VertexSet& inner);
VertexSet all_vertices(const SimpleGraph& g);
VertexSet normalized(VertexSet s);

}  // namespace raagsplit
