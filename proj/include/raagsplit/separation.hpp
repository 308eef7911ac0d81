#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "raagsplit/graph.hpp"
#include "raagsplit/words.hpp"

namespace raagsplit {

// Finite graph with positive integer edge lengths (1 by default). Distances
// come from BFS, or Dijkstra once some edge is longer than 1. Unreachable
// vertices get kUnreachable.
class MetricGraph {
 public:
  static constexpr long kUnreachable = -1;

  MetricGraph() = default;
  explicit MetricGraph(int n);
  MetricGraph(std::vector<std::string> names);
  static MetricGraph from_graph(const SimpleGraph& g);

  void add_edge(int u, int v, long length = 1);
  int size() const { return static_cast<int>(adj_.size()); }
  const std::vector<std::pair<int, long>>& neighbours(int v) const { return adj_.at(v); }
  const std::string& name(int v) const { return names_.at(v); }
  const std::vector<std::string>& names() const { return names_; }
  bool weighted() const { return weighted_; }
  std::size_t edge_count() const { return edges_; }

  // Distance from the nearest source to every vertex; stops expanding past
  // `limit` when one is given.
  std::vector<long> distances_from(const std::vector<int>& sources,
                                   std::optional<long> limit = std::nullopt) const;
  long distance(int a, int b) const;
  bool connected() const;

 private:
  std::vector<std::vector<std::pair<int, long>>> adj_;
  std::vector<std::string> names_;
  bool weighted_ = false;
  std::size_t edges_ = 0;
};

MetricGraph path_graph(int n);
// The square grid [-r, r]^2; vertex (i, j) has index (i + r) * (2r + 1) + (j + r).
MetricGraph grid_graph(int r);
// Ball of radius `depth` about the root of the `degree`-regular tree, in BFS order.
MetricGraph regular_tree_ball(int degree, int depth);

// Ball of radius R about 1 in the Cayley graph of a graph product with
// respect to the standard generators u^{+-1}. Elements are normal forms in
// BFS order, named by format_word.
struct CayleyBall {
  WeightedGraph presentation;
  int radius = 0;
  std::vector<Word> elements;
  std::map<Word, int> index;
  MetricGraph graph;

  std::optional<int> find(const Word& w) const;
};

CayleyBall standard_cayley_ball(const WeightedGraph& p, int radius, std::size_t cap = 200000);

// Finite-scale relative growth. The classification is advisory: it compares
// an exponential fit against a power-law fit over the largest half of the
// sampled radii and cannot certify the limsup in the definition.
struct GrowthProfile {
  std::vector<long> radii;
  std::vector<long> values;
  bool exponential = false;
  double slope = 0;  // of log V against R
  double exponential_residual = 0;
  double power_residual = 0;
};

constexpr double kExponentialSlope = 0.1;

GrowthProfile relative_growth(const MetricGraph& x, const std::vector<VertexSet>& family,
                              const std::vector<long>& radii);

// sigma_S(l) = #{s in S : d(base, s) = l} for l = 0..max_level.
std::vector<long> spherical_growth(const MetricGraph& x, int base, const VertexSet& s, long max_level);

// Z^{+L}: every vertex within L of z.
VertexSet thickening(const MetricGraph& x, const VertexSet& z, long l);

// Union of the balls B(z, R(d(base, z))); R is supplied by the caller and
// should be increasing, unbounded and slowly growing.
VertexSet variable_thickening(const MetricGraph& x, int base, const VertexSet& z,
                              const std::function<long(long)>& radius);

// Classes of ambient \ Z^{+L} under the transitive closure of "distance in x
// at most k". The metric is that of x, not of the leftover set. Sorted,
// ordered by least vertex.
std::vector<VertexSet> coarse_components(const MetricGraph& x, const VertexSet& ambient, const VertexSet& z,
                                         long k, long l);

struct SeparationWitness {
  VertexSet z;
  long k = 0, l = 0, d = 0;
  std::vector<VertexSet> components;
  std::vector<VertexSet> deep_points;  // deep_points[i] lies in components[i]
};

// By default deep points are measured to Z; the flag measures to Z^{+L}.
bool check_witness(const MetricGraph& x, const SeparationWitness& w, const VertexSet& ambient,
                   bool measure_from_thickened = false);

// Keeps the components that reach distance d from Z, each with its deepest
// point (least index among ties). nullopt when fewer than two survive.
std::optional<SeparationWitness> find_witness(const MetricGraph& x, const VertexSet& ambient, const VertexSet& z,
                                              long k, long l, long d, bool measure_from_thickened = false);

// Rooted binary tree of the given depth with heap numbering: the root is 1
// and node i has children 2i, 2i+1, so level(i) = floor(log2 i).
int tree_level(std::int64_t node);

// Leftmost root-to-leaf path that meets S only at levels <= r0.
std::optional<std::vector<std::int64_t>> tree_ray_finder(int depth, const std::vector<std::int64_t>& s, int r0);

// sum over k >= r0 of sigma_S(k) / 2^k.
double spectral_margin(int depth, const std::vector<std::int64_t>& s, int r0);

// A ray is guaranteed once the margin is below 1. The threshold 1 itself
// is attained by a full level, which blocks every ray, so callers should use
// the strict one.
constexpr double kStatedMarginThreshold = 1.0;
constexpr double kSafeMarginThreshold = 0.5;

bool is_valid_ray(int depth, const std::vector<std::int64_t>& s, int r0, const std::vector<std::int64_t>& ray);

// 1 + 6a + 3b + 9 a m, for (a, b)-quasi-geodesics with Morse gauge value m.
double morse_hausdorff_bound(double a, double b, double m_ab);

// C(1, 2C1) + C(3, 2C1) + 2C1 with C(a, b) = morse_hausdorff_bound(a, b,
// gauge(a, b)) and C1 = C(1, 0).
double morse_intersection_bound(const std::function<double(double, double)>& gauge);

}  // namespace raagsplit
