#include "raagsplit/qm.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <limits>
#include <queue>

#include "raagsplit/errors.hpp"
#include "union_find.hpp"

namespace raagsplit {

int QMBall::index_of(const Word& w) const {
  auto it = index_.find(w);
  return it == index_.end() ? -1 : it->second;
}

int QMBall::neighbour(int x, Vertex u, long k) const {
  k = normalize_exponent(presentation, u, k);
  if (k == 0) return x;
  return step[x][offset[u] + k - 1];
}

int QMBall::edge_between(int x, int y) const {
  const auto& row = adj[x];
  auto it = std::lower_bound(row.begin(), row.end(), std::make_pair(y, -1));
  return it != row.end() && it->first == y ? it->second : -1;
}

double estimate_ball_size(const WeightedGraph& p, int radius) {
  if (!p.all_finite()) throw InputError("quasi-median balls need finite vertex groups");
  const int n = radius + 1;
  using Series = std::vector<long double>;
  auto mul = [n](const Series& a, const Series& b) {
    Series c(n, 0.0L);
    for (int i = 0; i < n; ++i)
      if (a[i] != 0.0L)
        for (int j = 0; i + j < n; ++j) c[i + j] += a[i] * b[j];
    return c;
  };
  // 1/W = sum over cliques C of prod_{u in C} (1/W_u - 1), W_u = 1 + (nu-1)t
  Series inv(n, 0.0L);
  for (int k = 0; k <= p.size(); ++k) {
    auto cliques = complete_subsets_of_size(p.graph, k);
    if (cliques.empty()) break;
    for (const auto& c : cliques) {
      Series term(n, 0.0L);
      term[0] = 1.0L;
      for (Vertex u : c) {
        Series g(n, 0.0L);
        const long double a = static_cast<long double>(p.order[u] - 1);
        long double pw = 1.0L;
        for (int i = 1; i < n; ++i) {
          pw *= -a;
          g[i] = pw;
        }
        term = mul(term, g);
      }
      for (int i = 0; i < n; ++i) inv[i] += term[i];
    }
  }
  Series w(n, 0.0L);
  w[0] = 1.0L / inv[0];
  for (int i = 1; i < n; ++i) {
    long double s = 0.0L;
    for (int j = 1; j <= i; ++j) s += inv[j] * w[i - j];
    w[i] = -s / inv[0];
  }
  long double total = 0.0L;
  for (auto x : w) total += x;
  return static_cast<double>(total);
}

QMBall build_ball(const WeightedGraph& p, int radius, double cap) {
  if (!p.all_finite()) throw InputError("quasi-median balls need finite vertex groups");
  if (radius < 0) throw InputError("radius must be >= 0");
  const double est = estimate_ball_size(p, radius);
  if (est > cap)
    throw ResourceError("ball of radius " + std::to_string(radius) + " would have about " +
                            std::to_string(static_cast<long long>(est)) + " vertices (cap " +
                            std::to_string(static_cast<long long>(cap)) + ")",
                        est);

  QMBall b;
  b.presentation = p;
  b.radius = radius;
  b.offset.assign(p.size(), 0);
  int gens = 0;
  for (Vertex u = 0; u < p.size(); ++u) {
    b.offset[u] = gens;
    gens += static_cast<int>(p.order[u] - 1);
  }

  std::vector<Word> layer{Word{}};
  std::map<Word, int> seen{{Word{}, 0}};
  std::vector<Word> all{Word{}};
  for (int l = 0; l < radius; ++l) {
    std::vector<Word> next;
    for (const auto& w : layer)
      for (Vertex u = 0; u < p.size(); ++u)
        for (long k = 1; k < p.order[u]; ++k) {
          Word x = w;
          x.push_back({u, k});
          x = normal_form(p, x);
          if (static_cast<int>(x.size()) != l + 1 || seen.count(x)) continue;
          seen.emplace(x, 0);
          next.push_back(x);
        }
    for (const auto& w : next) all.push_back(w);
    layer = std::move(next);
  }
  std::sort(all.begin(), all.end(), [](const Word& a, const Word& c) {
    if (a.size() != c.size()) return a.size() < c.size();
    return a < c;
  });
  b.vertices = std::move(all);
  for (int i = 0; i < b.size(); ++i) {
    b.index_[b.vertices[i]] = i;
    b.length.push_back(static_cast<int>(b.vertices[i].size()));
  }

  b.step.assign(b.size(), std::vector<int>(gens, -1));
  b.adj.assign(b.size(), {});
  for (int x = 0; x < b.size(); ++x)
    for (Vertex u = 0; u < p.size(); ++u)
      for (long k = 1; k < p.order[u]; ++k) {
        Word w = b.vertices[x];
        w.push_back({u, k});
        int y = b.index_of(normal_form(p, w));
        b.step[x][b.offset[u] + k - 1] = y;
        if (y > x) {
          const long n = p.order[u];
          b.edges.push_back(QMEdge{x, y, u, std::min(k, n - k)});
        }
      }
  for (int e = 0; e < static_cast<int>(b.edges.size()); ++e) {
    b.adj[b.edges[e].a].emplace_back(b.edges[e].b, e);
    b.adj[b.edges[e].b].emplace_back(b.edges[e].a, e);
  }
  for (auto& row : b.adj) std::sort(row.begin(), row.end());
  return b;
}

std::vector<VertexSet> Hyperplane::sectors() const {
  std::vector<VertexSet> out(sector_count);
  for (int x = 0; x < static_cast<int>(sector_of.size()); ++x) out[sector_of[x]].push_back(x);
  return out;
}

std::vector<int> bfs_distances(const QMBall& ball, int source) {
  std::vector<int> d(ball.size(), -1);
  std::deque<int> q{source};
  d[source] = 0;
  while (!q.empty()) {
    int x = q.front();
    q.pop_front();
    for (auto [y, e] : ball.adj[x])
      if (d[y] < 0) {
        d[y] = d[x] + 1;
        q.push_back(y);
      }
  }
  return d;
}

namespace {

// components of the ball after deleting the edges flagged in `cut`
int components_without(const QMBall& ball, const std::vector<char>& cut, std::vector<int>& comp) {
  comp.assign(ball.size(), -1);
  int count = 0;
  std::vector<int> stack;
  for (int s = 0; s < ball.size(); ++s) {
    if (comp[s] >= 0) continue;
    comp[s] = count;
    stack.push_back(s);
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      for (auto [y, e] : ball.adj[x])
        if (!cut[e] && comp[y] < 0) {
          comp[y] = count;
          stack.push_back(y);
        }
    }
    ++count;
  }
  return count;
}

}  // namespace

HyperplaneSystem hyperplanes(const QMBall& ball) {
  const auto& p = ball.presentation;
  const int ne = static_cast<int>(ball.edges.size());
  detail::UnionFind uf(ne);

  // edges of one clique x G_u all meet x or a neighbour of x inside it
  for (int x = 0; x < ball.size(); ++x)
    for (Vertex u = 0; u < p.size(); ++u) {
      int first = -1;
      for (long k = 1; k < p.order[u]; ++k) {
        int y = ball.neighbour(x, u, k);
        if (y < 0) continue;
        int e = ball.edge_between(x, y);
        if (first < 0)
          first = e;
        else
          uf.unite(first, e);
      }
    }
  // opposite sides of squares x, xa^i, xb^j, xa^ib^j
  for (auto [a, c] : p.graph.edges())
    for (int x = 0; x < ball.size(); ++x)
      for (long i = 1; i < p.order[a]; ++i) {
        int x1 = ball.neighbour(x, a, i);
        if (x1 < 0) continue;
        for (long j = 1; j < p.order[c]; ++j) {
          int x2 = ball.neighbour(x, c, j);
          int x3 = ball.neighbour(x1, c, j);
          if (x2 < 0 || x3 < 0) continue;
          uf.unite(ball.edge_between(x, x1), ball.edge_between(x2, x3));
          uf.unite(ball.edge_between(x, x2), ball.edge_between(x1, x3));
        }
      }

  HyperplaneSystem hs;
  hs.of_edge.assign(ne, -1);
  std::vector<int> id_of_root(ne, -1);
  for (int e = 0; e < ne; ++e) {
    int r = uf.find(e);
    if (id_of_root[r] < 0) {
      id_of_root[r] = static_cast<int>(hs.hyperplanes.size());
      Hyperplane h;
      h.id = id_of_root[r];
      h.label = ball.edges[e].label;
      hs.hyperplanes.push_back(std::move(h));
    }
    Hyperplane& h = hs.hyperplanes[id_of_root[r]];
    if (h.label != ball.edges[e].label)
      throw InvariantViolation("hyperplane " + std::to_string(h.id) + " carries two labels");
    h.edges.push_back(e);
    hs.of_edge[e] = h.id;
  }

  std::vector<char> cut(ne, 0);
  for (auto& h : hs.hyperplanes) {
    for (int e : h.edges) {
      cut[e] = 1;
      h.carrier.push_back(ball.edges[e].a);
      h.carrier.push_back(ball.edges[e].b);
    }
    h.sector_count = components_without(ball, cut, h.sector_of);
    h.carrier = normalized(h.carrier);
    // fibres: components of the carrier once the hyperplane's edges are gone
    std::vector<char> in_carrier(ball.size(), 0);
    for (int x : h.carrier) in_carrier[x] = 1;
    std::vector<char> done(ball.size(), 0);
    for (int s : h.carrier) {
      if (done[s]) continue;
      VertexSet fibre;
      std::vector<int> stack{s};
      done[s] = 1;
      while (!stack.empty()) {
        int x = stack.back();
        stack.pop_back();
        fibre.push_back(x);
        for (auto [y, e] : ball.adj[x])
          if (!cut[e] && in_carrier[y] && !done[y]) {
            done[y] = 1;
            stack.push_back(y);
          }
      }
      h.fibres.push_back(normalized(fibre));
    }
    for (int e : h.edges) cut[e] = 0;
  }
  return hs;
}

namespace {

void require_core(const QMBall& ball, int x) {
  if (x < 0 || x >= ball.size()) throw InputError("vertex index out of range");
  if (ball.length[x] > ball.core_radius())
    throw PreconditionError("vertex " + format_word(ball.presentation.graph, ball.vertices[x]) +
                            " lies outside the radius " + std::to_string(ball.core_radius()) +
                            " core");
}

}  // namespace

int separating_hyperplane_distance(const QMBall& ball, const HyperplaneSystem& hs, int x, int y) {
  require_core(ball, x);
  require_core(ball, y);
  int count = 0;
  for (const auto& h : hs.hyperplanes)
    if (h.sector_of[x] != h.sector_of[y]) ++count;
  int d = bfs_distances(ball, x)[y];
  if (d != count)
    throw InvariantViolation("separating hyperplanes " + std::to_string(count) + " != distance " +
                             std::to_string(d));
  return count;
}

DeltaDistance delta_distance(const QMBall& ball, const HyperplaneSystem& hs, int x, int y) {
  require_core(ball, x);
  require_core(ball, y);
  const auto& p = ball.presentation;
  DeltaDistance out;

  std::vector<long> dist(ball.size(), std::numeric_limits<long>::max());
  using Item = std::pair<long, int>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> pq;
  dist[x] = 0;
  pq.emplace(0, x);
  while (!pq.empty()) {
    auto [d, v] = pq.top();
    pq.pop();
    if (d != dist[v]) continue;
    for (auto [w, e] : ball.adj[v]) {
      long nd = d + ball.edges[e].weight;
      if (nd < dist[w]) {
        dist[w] = nd;
        pq.emplace(nd, w);
      }
    }
  }
  out.weighted_path = dist[y];

  for (const auto& h : hs.hyperplanes) {
    if (h.sector_of[x] == h.sector_of[y]) continue;
    // the clique at either end of any edge of h lies entirely in the ball;
    // its members pick out the sectors in cyclic order
    const int g = ball.edges[h.edges.front()].a;
    const long n = p.order[h.label];
    auto position = [&](int v) -> long {
      for (long m = 0; m < n; ++m) {
        int member = ball.neighbour(g, h.label, m);
        if (member < 0) throw InvariantViolation("hyperplane clique leaves the ball");
        if (h.sector_of[member] == h.sector_of[v]) return m;
      }
      throw InvariantViolation("sector of hyperplane " + std::to_string(h.id) + " misses its clique");
    };
    long diff = std::labs(position(x) - position(y));
    out.hyperplane_sum += std::min(diff, n - diff);
  }
  out.word_metric = word_metric_length(p, multiply(p, inverse(p, ball.vertices[x]), ball.vertices[y]));
  if (out.weighted_path != out.hyperplane_sum || out.weighted_path != out.word_metric)
    throw InvariantViolation("delta mismatch: path " + std::to_string(out.weighted_path) + ", hyperplanes " +
                             std::to_string(out.hyperplane_sum) + ", word " +
                             std::to_string(out.word_metric));
  return out;
}

namespace {

std::vector<int> sectors_met(const Hyperplane& h, const VertexSet& z) {
  std::vector<int> s;
  for (int x : z) s.push_back(h.sector_of[x]);
  return normalized(s);
}

// hyperplanes with an edge whose endpoints both lie in `part`
std::vector<int> crossing(const QMBall& ball, const HyperplaneSystem& hs, const VertexSet& part) {
  std::vector<char> in(ball.size(), 0);
  for (int x : part) in[x] = 1;
  std::vector<int> ids;
  for (int e = 0; e < static_cast<int>(ball.edges.size()); ++e)
    if (in[ball.edges[e].a] && in[ball.edges[e].b]) ids.push_back(hs.of_edge[e]);
  return normalized(ids);
}

}  // namespace

InvasiveSubgraph construct_invasive(const QMBall& ball, const HyperplaneSystem& hs,
                                    const SectorSelection& sel) {
  const int nh = static_cast<int>(hs.hyperplanes.size());
  for (const auto& [id, chosen] : sel) {
    if (id < 0 || id >= nh) throw InputError("unknown hyperplane " + std::to_string(id));
    auto c = normalized(chosen);
    if (c.size() != chosen.size()) throw InputError("repeated sector in selection");
    if (c.size() < 2) throw InputError("hyperplane " + std::to_string(id) + " needs >= 2 sectors");
    for (int s : c)
      if (s < 0 || s >= hs.hyperplanes[id].sector_count)
        throw InputError("hyperplane " + std::to_string(id) + " has no sector " + std::to_string(s));
  }

  InvasiveSubgraph out;
  for (int x = 0; x < ball.size(); ++x) {
    bool keep = true;
    for (const auto& [id, chosen] : sel)
      if (std::find(chosen.begin(), chosen.end(), hs.hyperplanes[id].sector_of[x]) == chosen.end()) {
        keep = false;
        break;
      }
    if (keep) out.vertices.push_back(x);
  }
  if (out.vertices.empty()) return out;

  const auto& p = ball.presentation;
  std::vector<char> in(ball.size(), 0);
  for (int x : out.vertices) in[x] = 1;
  VertexSet zc;
  for (int x : out.vertices)
    if (ball.length[x] <= ball.core_radius()) zc.push_back(x);

  // convexity between core points: every ball vertex on a geodesic stays in z
  std::vector<std::vector<int>> dist;
  for (int x : zc) dist.push_back(bfs_distances(ball, x));
  for (std::size_t i = 0; i < zc.size(); ++i)
    for (std::size_t j = i + 1; j < zc.size(); ++j)
      for (int v = 0; v < ball.size(); ++v)
        if (dist[i][v] + dist[j][v] == dist[i][zc[j]] && !in[v])
          throw InvariantViolation("subgraph is not convex: " + format_word(p.graph, ball.vertices[v]) +
                                   " lies between two of its vertices");

  // every clique meeting the core meets z in 0 or >= 2 vertices
  for (int x = 0; x < ball.size(); ++x) {
    if (ball.length[x] > ball.core_radius()) continue;
    for (Vertex u = 0; u < p.size(); ++u) {
      int hits = 0;
      for (long k = 0; k < p.order[u]; ++k) hits += in[ball.neighbour(x, u, k)];
      if (hits == 1)
        throw InvariantViolation("clique at " + format_word(p.graph, ball.vertices[x]) +
                                 " meets the subgraph once");
    }
  }

  for (int id : crossing(ball, hs, zc)) {
    int t = static_cast<int>(sectors_met(hs.hyperplanes[id], out.vertices).size());
    out.thickness[id] = t;
    auto it = sel.find(id);
    if (it != sel.end() && t != static_cast<int>(it->second.size()))
      throw InvariantViolation("hyperplane " + std::to_string(id) + " has thickness " + std::to_string(t) +
                               " but " + std::to_string(it->second.size()) + " sectors were selected");
  }
  return out;
}

InvasiveIdentification identify_invasive(const QMBall& ball, const HyperplaneSystem& hs,
                                         const VertexSet& z_in, bool regular_colour_check) {
  const auto& p = ball.presentation;
  const VertexSet z = normalized(z_in);
  for (int x : z)
    if (x < 0 || x >= ball.size()) throw InputError("subgraph lists an unknown ball vertex");
  if (z.empty()) throw PreconditionError("empty subgraph");
  const int c = ball.core_radius();

  InvasiveIdentification out;
  // nearest vertex to the identity, least index on ties
  int best = z.front();
  for (int x : z)
    if (ball.length[x] < ball.length[best]) best = x;
  if (ball.length[best] > c) throw PreconditionError("subgraph misses the core");
  out.base = best;
  out.radius = c - ball.length[best];

  VertexSet zc;
  for (int x : z)
    if (ball.length[x] <= c) zc.push_back(x);
  std::map<Vertex, std::pair<int, int>> tau;  // label -> (thickness, first hyperplane)
  std::map<int, std::vector<int>> sigma;        // hyperplane -> sector ids, base sector first
  for (int id : crossing(ball, hs, zc)) {
    const auto& h = hs.hyperplanes[id];
    auto met = sectors_met(h, z);
    const int t = static_cast<int>(met.size());
    auto [it, fresh] = tau.emplace(h.label, std::make_pair(t, id));
    if (!fresh && it->second.first != t && regular_colour_check)
      throw RegularityError("hyperplanes " + std::to_string(it->second.second) + " and " + std::to_string(id) +
                                " are both labelled " + p.graph.name(h.label) + " but have thickness " +
                                std::to_string(it->second.first) + " and " + std::to_string(t),
                            it->second.second, id);
    std::vector<int> order{h.sector_of[best]};
    for (int s : met)
      if (s != h.sector_of[best]) order.push_back(s);
    sigma[id] = order;
  }

  std::vector<long> weights;
  std::vector<int> relabel(p.size(), -1);
  for (Vertex u = 0; u < p.size(); ++u) {
    auto it = tau.find(u);
    if (it == tau.end()) {
      out.dropped.push_back(u);
      continue;
    }
    relabel[u] = static_cast<int>(out.labels.size());
    out.labels.push_back(u);
    weights.push_back(it->second.first);
  }
  out.weighted = WeightedGraph(induced_subgraph(p.graph, out.labels), weights);

  // BFS inside z from the base; Phi reads the sector transitions off the tree path
  std::vector<char> in(ball.size(), 0);
  for (int x : z) in[x] = 1;
  std::vector<int> dz(ball.size(), -1), parent(ball.size(), -1);
  std::deque<int> q{best};
  dz[best] = 0;
  while (!q.empty()) {
    int x = q.front();
    q.pop_front();
    if (dz[x] == out.radius) continue;
    for (auto [y, e] : ball.adj[x])
      if (in[y] && dz[y] < 0) {
        dz[y] = dz[x] + 1;
        parent[y] = x;
        q.push_back(y);
      }
  }
  QMBall target = build_ball(out.weighted, out.radius);
  std::vector<int> image(ball.size(), -1);
  std::vector<char> used(target.size(), 0);
  int mapped = 0;
  for (int y : z) {
    if (dz[y] < 0) continue;
    Word w;
    for (int v = y; v != best; v = parent[v]) {
      int e = ball.edge_between(parent[v], v);
      const auto& h = hs.hyperplanes[hs.of_edge[e]];
      auto sit = sigma.find(h.id);
      if (sit == sigma.end()) throw InvariantViolation("path edge on a non-crossing hyperplane");
      const auto& ord = sit->second;
      auto pos = [&](int vertex) {
        return static_cast<long>(std::find(ord.begin(), ord.end(), h.sector_of[vertex]) - ord.begin());
      };
      w.push_back({relabel[h.label], pos(v) - pos(parent[v])});
    }
    std::reverse(w.begin(), w.end());
    w = normal_form(out.weighted, w);
    int t = target.index_of(w);
    if (t < 0) throw InvariantViolation("label of " + format_word(p.graph, ball.vertices[y]) + " falls outside the target ball");
    if (used[t]) throw InvariantViolation("label map is not injective");
    used[t] = 1;
    image[y] = t;
    ++mapped;
    out.phi.emplace_back(y, w);
  }
  if (mapped != target.size())
    throw InvariantViolation("label map hits " + std::to_string(mapped) + " of " + std::to_string(target.size()) +
                             " target vertices");
  std::size_t edges_here = 0;
  for (const auto& e : ball.edges) {
    if (image[e.a] < 0 || image[e.b] < 0) continue;
    ++edges_here;
    if (target.edge_between(image[e.a], image[e.b]) < 0)
      throw InvariantViolation("label map breaks adjacency at " + format_word(p.graph, ball.vertices[e.a]));
  }
  if (edges_here != target.edges.size()) throw InvariantViolation("label map misses target edges");
  return out;
}

}  // namespace raagsplit
