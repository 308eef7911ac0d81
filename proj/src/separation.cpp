#include "raagsplit/separation.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <limits>
#include <queue>
#include <set>
#include <unordered_set>

#include "raagsplit/errors.hpp"
#include "union_find.hpp"

namespace raagsplit {

MetricGraph::MetricGraph(int n) : adj_(n) {
  names_.reserve(n);
  for (int i = 0; i < n; ++i) names_.push_back(std::to_string(i));
}

MetricGraph::MetricGraph(std::vector<std::string> names) : adj_(names.size()), names_(std::move(names)) {}

MetricGraph MetricGraph::from_graph(const SimpleGraph& g) {
  MetricGraph x(g.names());
  for (auto [u, v] : g.edges()) x.add_edge(u, v);
  return x;
}

void MetricGraph::add_edge(int u, int v, long length) {
  if (u < 0 || v < 0 || u >= size() || v >= size()) throw InputError("edge endpoint out of range");
  if (u == v) throw InputError("loops are not allowed");
  if (length < 1) throw InputError("edge lengths must be positive");
  adj_[u].emplace_back(v, length);
  adj_[v].emplace_back(u, length);
  if (length != 1) weighted_ = true;
  ++edges_;
}

std::vector<long> MetricGraph::distances_from(const std::vector<int>& sources, std::optional<long> limit) const {
  std::vector<long> dist(size(), kUnreachable);
  for (int s : sources) {
    if (s < 0 || s >= size()) throw InputError("source vertex out of range");
    dist[s] = 0;
  }
  if (!weighted_) {
    std::deque<int> queue(sources.begin(), sources.end());
    while (!queue.empty()) {
      int u = queue.front();
      queue.pop_front();
      if (limit && dist[u] >= *limit) continue;
      for (auto [v, len] : adj_[u])
        if (dist[v] == kUnreachable) {
          dist[v] = dist[u] + 1;
          queue.push_back(v);
        }
    }
    return dist;
  }
  using Item = std::pair<long, int>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
  for (int s : sources) heap.emplace(0, s);
  while (!heap.empty()) {
    auto [d, u] = heap.top();
    heap.pop();
    if (d != dist[u]) continue;
    for (auto [v, len] : adj_[u]) {
      long nd = d + len;
      if (limit && nd > *limit) continue;
      if (dist[v] == kUnreachable || nd < dist[v]) {
        dist[v] = nd;
        heap.emplace(nd, v);
      }
    }
  }
  return dist;
}

long MetricGraph::distance(int a, int b) const { return distances_from({a})[b]; }

bool MetricGraph::connected() const {
  if (size() == 0) return true;
  auto d = distances_from({0});
  return std::none_of(d.begin(), d.end(), [](long x) { return x == kUnreachable; });
}

MetricGraph path_graph(int n) {
  MetricGraph x(n);
  for (int i = 0; i + 1 < n; ++i) x.add_edge(i, i + 1);
  return x;
}

MetricGraph grid_graph(int r) {
  const int side = 2 * r + 1;
  std::vector<std::string> names;
  for (int i = -r; i <= r; ++i)
    for (int j = -r; j <= r; ++j) names.push_back("(" + std::to_string(i) + "," + std::to_string(j) + ")");
  MetricGraph x(std::move(names));
  for (int i = 0; i < side; ++i)
    for (int j = 0; j < side; ++j) {
      if (i + 1 < side) x.add_edge(i * side + j, (i + 1) * side + j);
      if (j + 1 < side) x.add_edge(i * side + j, i * side + j + 1);
    }
  return x;
}

MetricGraph regular_tree_ball(int degree, int depth) {
  if (degree < 1 || depth < 0) throw InputError("tree ball needs degree >= 1 and depth >= 0");
  std::vector<std::pair<int, int>> edges;
  std::vector<int> layer{0};
  int n = 1;
  for (int l = 0; l < depth; ++l) {
    std::vector<int> next;
    for (int u : layer) {
      const int children = l == 0 ? degree : degree - 1;
      for (int c = 0; c < children; ++c) {
        edges.emplace_back(u, n);
        next.push_back(n++);
      }
    }
    layer = std::move(next);
  }
  MetricGraph x(n);
  for (auto [u, v] : edges) x.add_edge(u, v);
  return x;
}

std::optional<int> CayleyBall::find(const Word& w) const {
  auto it = index.find(w);
  if (it == index.end()) return std::nullopt;
  return it->second;
}

namespace {

// Growth series of the standard-generator ball, from
// 1/W = sum over cliques C of prod_{u in C} (1/W_u - 1).
double estimate_standard_ball(const WeightedGraph& p, int radius) {
  const int n = radius + 1;
  using Series = std::vector<long double>;
  auto mul = [n](const Series& a, const Series& b) {
    Series c(n, 0.0L);
    for (int i = 0; i < n; ++i)
      if (a[i] != 0.0L)
        for (int j = 0; i + j < n; ++j) c[i + j] += a[i] * b[j];
    return c;
  };
  auto invert = [n](const Series& a) {
    Series w(n, 0.0L);
    w[0] = 1.0L / a[0];
    for (int i = 1; i < n; ++i) {
      long double s = 0.0L;
      for (int j = 1; j <= i; ++j) s += a[j] * w[i - j];
      w[i] = -s / a[0];
    }
    return w;
  };
  std::vector<Series> factor(p.size());
  for (Vertex u = 0; u < p.size(); ++u) {
    Series sphere(n, 0.0L);
    sphere[0] = 1.0L;
    for (int k = 1; k < n; ++k) {
      if (!p.finite(u)) sphere[k] = 2;
      else if (2 * k < p.order[u]) sphere[k] = 2;
      else if (2 * k == p.order[u]) sphere[k] = 1;
    }
    factor[u] = invert(sphere);
    factor[u][0] -= 1.0L;
  }
  Series inv(n, 0.0L);
  for (int k = 0; k <= p.size(); ++k) {
    auto cliques = complete_subsets_of_size(p.graph, k);
    if (cliques.empty()) break;
    for (const auto& c : cliques) {
      Series term(n, 0.0L);
      term[0] = 1.0L;
      for (Vertex u : c) term = mul(term, factor[u]);
      for (int i = 0; i < n; ++i) inv[i] += term[i];
    }
  }
  long double total = 0.0L;
  for (auto x : invert(inv)) total += x;
  return static_cast<double>(total);
}

}  // namespace

CayleyBall standard_cayley_ball(const WeightedGraph& p, int radius, std::size_t cap) {
  if (radius < 0) throw InputError("radius must be non-negative");
  const double est = estimate_standard_ball(p, radius);
  if (est > static_cast<double>(cap))
    throw ResourceError("Cayley ball of radius " + std::to_string(radius) + " would have about " +
                            std::to_string(static_cast<long long>(est)) + " vertices (cap " +
                            std::to_string(cap) + ")",
                        est);
  CayleyBall b;
  b.presentation = p;
  b.radius = radius;
  Word gens;
  for (Vertex u = 0; u < p.size(); ++u) {
    gens.push_back({u, 1});
    if (p.order[u] != 2) gens.push_back({u, -1});
  }
  b.elements.push_back({});
  b.index.emplace(Word{}, 0);
  std::vector<int> dist{0};
  for (std::size_t i = 0; i < b.elements.size(); ++i) {
    if (dist[i] == radius) continue;
    for (const auto& s : gens) {
      Word y = multiply(p, b.elements[i], {s});
      if (b.index.count(y)) continue;
      b.index.emplace(y, static_cast<int>(b.elements.size()));
      b.elements.push_back(std::move(y));
      dist.push_back(dist[i] + 1);
    }
  }
  std::vector<std::string> names;
  for (const auto& w : b.elements) names.push_back(format_word(p.graph, w));
  b.graph = MetricGraph(std::move(names));
  for (std::size_t i = 0; i < b.elements.size(); ++i)
    for (const auto& s : gens) {
      auto j = b.find(multiply(p, b.elements[i], {s}));
      if (j && *j > static_cast<int>(i)) b.graph.add_edge(static_cast<int>(i), *j);
    }
  return b;
}

namespace {

void check_set(const MetricGraph& x, const VertexSet& s, const char* what) {
  for (int v : s)
    if (v < 0 || v >= x.size()) throw InputError(std::string(what) + " has a vertex outside the graph");
}

bool reached(long d, long r) { return d != MetricGraph::kUnreachable && d <= r; }

// Least-squares line through (t, y); returns slope and residual sum of squares.
std::pair<double, double> fit(const std::vector<double>& t, const std::vector<double>& y) {
  const double n = static_cast<double>(t.size());
  double st = 0, sy = 0, stt = 0, sty = 0;
  for (std::size_t i = 0; i < t.size(); ++i) {
    st += t[i];
    sy += y[i];
    stt += t[i] * t[i];
    sty += t[i] * y[i];
  }
  const double den = n * stt - st * st;
  const double slope = den == 0 ? 0 : (n * sty - st * sy) / den;
  const double icpt = (sy - slope * st) / n;
  double rss = 0;
  for (std::size_t i = 0; i < t.size(); ++i) rss += std::pow(y[i] - icpt - slope * t[i], 2);
  return {slope, rss};
}

}  // namespace

GrowthProfile relative_growth(const MetricGraph& x, const std::vector<VertexSet>& family,
                              const std::vector<long>& radii) {
  if (family.empty()) throw InputError("relative growth needs a nonempty family");
  for (std::size_t i = 0; i < radii.size(); ++i) {
    if (radii[i] < 0) throw InputError("radii must be non-negative");
    if (i && radii[i] <= radii[i - 1]) throw InputError("radii must be strictly increasing");
  }
  for (const auto& s : family) {
    if (s.empty()) throw InputError("family members must be nonempty");
    check_set(x, s, "family member");
  }
  GrowthProfile g;
  g.radii = radii;
  g.values.assign(radii.size(), 0);
  if (radii.empty()) return g;
  const long top = radii.back();
  for (const auto& raw : family) {
    const VertexSet s = normalized(raw);
    for (int c : s) {
      auto d = x.distances_from({c}, top);
      for (std::size_t i = 0; i < radii.size(); ++i) {
        long count = 0;
        for (int v : s) count += reached(d[v], radii[i]);
        g.values[i] = std::max(g.values[i], count);
      }
    }
  }

  const std::size_t half = radii.size() / 2;
  std::vector<double> r, lr, lv;
  for (std::size_t i = half; i < radii.size(); ++i) {
    if (radii[i] == 0) continue;
    r.push_back(static_cast<double>(radii[i]));
    lr.push_back(std::log(static_cast<double>(radii[i])));
    lv.push_back(std::log(static_cast<double>(g.values[i])));
  }
  if (r.size() >= 2) {
    auto [slope, rss_exp] = fit(r, lv);
    auto [power, rss_pow] = fit(lr, lv);
    g.slope = slope;
    g.exponential_residual = rss_exp;
    g.power_residual = rss_pow;
    g.exponential = slope > kExponentialSlope && rss_exp < rss_pow;
  }
  return g;
}

std::vector<long> spherical_growth(const MetricGraph& x, int base, const VertexSet& s, long max_level) {
  check_set(x, s, "set");
  auto d = x.distances_from({base}, max_level);
  std::vector<long> sigma(max_level + 1, 0);
  for (int v : normalized(s))
    if (reached(d[v], max_level)) ++sigma[d[v]];
  return sigma;
}

VertexSet thickening(const MetricGraph& x, const VertexSet& z, long l) {
  check_set(x, z, "separator");
  if (z.empty()) return {};
  auto d = x.distances_from(z, l);
  VertexSet out;
  for (int v = 0; v < x.size(); ++v)
    if (reached(d[v], l)) out.push_back(v);
  return out;
}

VertexSet variable_thickening(const MetricGraph& x, int base, const VertexSet& z,
                              const std::function<long(long)>& radius) {
  check_set(x, z, "separator");
  auto from_base = x.distances_from({base});
  std::vector<char> in(x.size(), 0);
  for (int c : z) {
    if (from_base[c] == MetricGraph::kUnreachable) throw InputError("separator vertex unreachable from the base");
    const long r = radius(from_base[c]);
    if (r < 0) throw InputError("thickening radius must be non-negative");
    auto d = x.distances_from({c}, r);
    for (int v = 0; v < x.size(); ++v)
      if (reached(d[v], r)) in[v] = 1;
  }
  VertexSet out;
  for (int v = 0; v < x.size(); ++v)
    if (in[v]) out.push_back(v);
  return out;
}

std::vector<VertexSet> coarse_components(const MetricGraph& x, const VertexSet& ambient, const VertexSet& z,
                                         long k, long l) {
  if (k < 0 || l < 0) throw InputError("k and L must be non-negative");
  check_set(x, ambient, "ambient set");
  const VertexSet rest = set_difference(normalized(ambient), thickening(x, normalized(z), l));
  std::vector<int> slot(x.size(), -1);
  for (std::size_t i = 0; i < rest.size(); ++i) slot[rest[i]] = static_cast<int>(i);
  detail::UnionFind uf(static_cast<int>(rest.size()));
  for (std::size_t i = 0; i < rest.size(); ++i) {
    auto d = x.distances_from({rest[i]}, k);
    for (int v = 0; v < x.size(); ++v)
      if (slot[v] >= 0 && reached(d[v], k)) uf.unite(static_cast<int>(i), slot[v]);
  }
  std::map<int, VertexSet> classes;
  for (std::size_t i = 0; i < rest.size(); ++i) classes[uf.find(static_cast<int>(i))].push_back(rest[i]);
  std::vector<VertexSet> out;
  for (auto& [root, members] : classes) out.push_back(std::move(members));
  std::sort(out.begin(), out.end(), [](const VertexSet& a, const VertexSet& b) { return a.front() < b.front(); });
  return out;
}

namespace {

std::vector<long> depth_of(const MetricGraph& x, const VertexSet& z, long l, bool from_thickened) {
  if (z.empty()) return std::vector<long>(x.size(), MetricGraph::kUnreachable);
  return x.distances_from(from_thickened ? thickening(x, z, l) : z);
}

bool deep_enough(long dist, long d) { return dist == MetricGraph::kUnreachable || dist >= d; }

}  // namespace

bool check_witness(const MetricGraph& x, const SeparationWitness& w, const VertexSet& ambient,
                   bool measure_from_thickened) {
  if (w.k < 0 || w.l < 0 || w.d < 0) throw InputError("witness parameters must be non-negative");
  if (w.components.size() != w.deep_points.size())
    throw InputError("witness needs one deep-point list per component");
  check_set(x, w.z, "separator");
  check_set(x, ambient, "ambient set");
  for (std::size_t i = 0; i < w.components.size(); ++i) {
    check_set(x, w.components[i], "component");
    if (w.deep_points[i].empty()) throw InputError("every component needs a deep point");
    for (int p : w.deep_points[i])
      if (!set_contains(normalized(w.components[i]), p)) throw InputError("deep point outside its component");
  }
  if (w.components.size() < 2) return false;
  const auto actual = coarse_components(x, ambient, w.z, w.k, w.l);
  std::set<VertexSet> listed;
  for (const auto& c : w.components) {
    VertexSet n = normalized(c);
    if (!listed.insert(n).second) return false;
    if (std::find(actual.begin(), actual.end(), n) == actual.end()) return false;
  }
  const auto depth = depth_of(x, normalized(w.z), w.l, measure_from_thickened);
  for (const auto& pts : w.deep_points)
    for (int p : pts)
      if (!deep_enough(depth[p], w.d)) return false;
  return true;
}

std::optional<SeparationWitness> find_witness(const MetricGraph& x, const VertexSet& ambient, const VertexSet& z,
                                              long k, long l, long d, bool measure_from_thickened) {
  if (d < 0) throw InputError("D must be non-negative");
  SeparationWitness w;
  w.z = normalized(z);
  w.k = k;
  w.l = l;
  w.d = d;
  const auto depth = depth_of(x, w.z, l, measure_from_thickened);
  // unreachable counts as infinitely deep
  auto key = [&](int v) { return depth[v] == MetricGraph::kUnreachable ? std::numeric_limits<long>::max() : depth[v]; };
  for (auto& c : coarse_components(x, ambient, w.z, k, l)) {
    int best = c.front();
    for (int v : c)
      if (key(v) > key(best)) best = v;
    if (!deep_enough(depth[best], d)) continue;
    w.components.push_back(std::move(c));
    w.deep_points.push_back({best});
  }
  if (w.components.size() < 2) return std::nullopt;
  return w;
}

int tree_level(std::int64_t node) {
  if (node < 1) throw InputError("tree nodes are numbered from 1");
  int l = 0;
  while (node > 1) {
    node >>= 1;
    ++l;
  }
  return l;
}

namespace {

void check_tree(int depth, const std::vector<std::int64_t>& s, int r0) {
  if (depth < 0 || depth > 60) throw InputError("tree depth must lie in 0..60");
  if (r0 < 0) throw InputError("r0 must be non-negative");
  const std::int64_t last = (std::int64_t{2} << depth) - 1;
  for (auto v : s)
    if (v < 1 || v > last) throw InputError("obstruction node outside the tree");
}

}  // namespace

std::optional<std::vector<std::int64_t>> tree_ray_finder(int depth, const std::vector<std::int64_t>& s, int r0) {
  check_tree(depth, s, r0);
  std::unordered_set<std::int64_t> blocked;
  for (auto v : s)
    if (tree_level(v) > r0) blocked.insert(v);
  // explicit stack; a node is expanded once, left child first
  std::vector<std::int64_t> path{1};
  std::vector<int> tried{0};
  if (blocked.count(1)) return std::nullopt;
  while (!path.empty()) {
    if (static_cast<int>(path.size()) == depth + 1) return path;
    if (tried.back() == 2) {
      path.pop_back();
      tried.pop_back();
      continue;
    }
    const std::int64_t child = 2 * path.back() + tried.back()++;
    if (blocked.count(child)) continue;
    path.push_back(child);
    tried.push_back(0);
  }
  return std::nullopt;
}

double spectral_margin(int depth, const std::vector<std::int64_t>& s, int r0) {
  check_tree(depth, s, r0);
  std::vector<std::int64_t> sorted(s);
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  double m = 0;
  for (auto v : sorted) {
    const int l = tree_level(v);
    if (l >= r0) m += std::ldexp(1.0, -l);
  }
  return m;
}

bool is_valid_ray(int depth, const std::vector<std::int64_t>& s, int r0, const std::vector<std::int64_t>& ray) {
  if (static_cast<int>(ray.size()) != depth + 1 || ray.front() != 1) return false;
  for (std::size_t i = 1; i < ray.size(); ++i)
    if (ray[i] / 2 != ray[i - 1]) return false;
  const std::unordered_set<std::int64_t> in(s.begin(), s.end());
  for (auto v : ray)
    if (in.count(v) && tree_level(v) > r0) return false;
  return true;
}

double morse_hausdorff_bound(double a, double b, double m_ab) {
  if (a < 1 || b < 0 || m_ab < 0) throw InputError("Morse bound needs a >= 1, b >= 0, m >= 0");
  return 1 + 6 * a + 3 * b + 9 * a * m_ab;
}

double morse_intersection_bound(const std::function<double(double, double)>& gauge) {
  auto c = [&](double a, double b) { return morse_hausdorff_bound(a, b, gauge(a, b)); };
  const double c1 = c(1, 0);
  return c(1, 2 * c1) + c(3, 2 * c1) + 2 * c1;
}

}  // namespace raagsplit
