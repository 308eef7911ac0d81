#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "raagsplit/graph.hpp"
#include "raagsplit/words.hpp"

namespace raagsplit {

constexpr double kDefaultBallCap = 2e5;

struct QMEdge {
  int a = 0, b = 0;  // a < b
  Vertex label = 0;
  long weight = 1;  // factor word length of the connecting element
};

// Ball of radius R about the identity in the Cayley graph of a graph product
// of finite cyclic groups, generated by all nontrivial factor elements.
struct QMBall {
  WeightedGraph presentation;
  int radius = 0;
  std::vector<Word> vertices;  // normal forms, by (syllable length, lex)
  std::vector<int> length;
  std::vector<QMEdge> edges;
  // step[x][offset[u] + k - 1] = index of x * u^k, or -1 outside the ball
  std::vector<int> offset;
  std::vector<std::vector<int>> step;
  // (neighbour, edge index), sorted by neighbour
  std::vector<std::vector<std::pair<int, int>>> adj;

  int size() const { return static_cast<int>(vertices.size()); }
  int core_radius() const { return radius / 2; }
  int index_of(const Word& w) const;
  int neighbour(int x, Vertex u, long k) const;
  int edge_between(int x, int y) const;  // -1 if not adjacent

 private:
  friend QMBall build_ball(const WeightedGraph&, int, double);
  std::map<Word, int> index_;
};

// Number of elements of syllable length <= R, from the growth series of the
// graph product.
double estimate_ball_size(const WeightedGraph& p, int radius);

QMBall build_ball(const WeightedGraph& p, int radius, double cap = kDefaultBallCap);

struct Hyperplane {
  int id = 0;
  Vertex label = 0;
  std::vector<int> edges;
  int sector_count = 0;
  std::vector<int> sector_of;  // per ball vertex
  VertexSet carrier;           // endpoints of the edges
  std::vector<VertexSet> fibres;

  std::vector<VertexSet> sectors() const;
};

struct HyperplaneSystem {
  std::vector<Hyperplane> hyperplanes;
  std::vector<int> of_edge;  // edge -> hyperplane id
};

HyperplaneSystem hyperplanes(const QMBall& ball);

int separating_hyperplane_distance(const QMBall& ball, const HyperplaneSystem& hs, int x, int y);

struct DeltaDistance {
  long weighted_path = 0;
  long hyperplane_sum = 0;
  long word_metric = 0;
};
DeltaDistance delta_distance(const QMBall& ball, const HyperplaneSystem& hs, int x, int y);

std::vector<int> bfs_distances(const QMBall& ball, int source);

// hyperplane id -> chosen sector ids; hyperplanes left out keep all sectors
using SectorSelection = std::map<int, std::vector<int>>;

struct InvasiveSubgraph {
  VertexSet vertices;  // ball indices
  std::map<int, int> thickness;  // hyperplanes crossing the core part
};

InvasiveSubgraph construct_invasive(const QMBall& ball, const HyperplaneSystem& hs,
                                    const SectorSelection& sel);

struct InvasiveIdentification {
  WeightedGraph weighted;           // induced on the crossing labels
  std::vector<Vertex> labels;       // host vertex of each weighted-graph vertex
  std::vector<Vertex> dropped;      // labels with no crossing hyperplane
  int base = 0;                     // vertex of z nearest the identity, least index on ties
  int radius = 0;                   // identified radius about the base
  std::vector<std::pair<int, Word>> phi;
};

// Raised when two equally-labelled crossing hyperplanes have different
// thickness.
class RegularityError : public std::runtime_error {
 public:
  RegularityError(const std::string& what, int first, int second)
      : std::runtime_error(what), pair_(first, second) {}
  std::pair<int, int> offending() const { return pair_; }

 private:
  std::pair<int, int> pair_;
};

// With regular_colour_check off, a non-regular z is caught later by the
// label map's own postconditions (InvariantViolation).
InvasiveIdentification identify_invasive(const QMBall& ball, const HyperplaneSystem& hs,
                                         const VertexSet& z, bool regular_colour_check = true);

}  // namespace raagsplit
