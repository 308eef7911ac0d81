#include "oracles.hpp"

#include <algorithm>
#include <deque>
#include <fstream>
#include <functional>
#include <map>

#include "raagsplit/io.hpp"

#ifndef RAAGSPLIT_FIXTURES
#error "RAAGSPLIT_FIXTURES must name the fixtures directory"
#endif

namespace raagsplit::testing {

namespace {

bool connected_mask(const SmallGraph& g, std::uint32_t alive) {
  if (!alive) return true;
  std::uint32_t seen = alive & (~alive + 1), frontier = seen;
  while (frontier) {
    std::uint32_t next = 0;
    for (int v = 0; v < g.n; ++v)
      if (frontier >> v & 1) next |= g.rows[v];
    next &= alive & ~seen;
    seen |= next;
    frontier = next;
  }
  return seen == alive;
}

bool complete_mask(const SmallGraph& g, std::uint32_t s) {
  for (int v = 0; v < g.n; ++v)
    if ((s >> v & 1) && (g.rows[v] & s) != (s & ~(1u << v))) return false;
  return true;
}

VertexSet members(std::uint32_t s) {
  VertexSet out;
  for (int v = 0; s; ++v, s >>= 1)
    if (s & 1) out.push_back(v);
  return out;
}

}  // namespace

SmallGraph to_small(const SimpleGraph& g) {
  SmallGraph s;
  s.n = g.size();
  s.rows.assign(s.n, 0);
  for (auto [u, v] : g.edges()) {
    s.rows[u] |= 1u << v;
    s.rows[v] |= 1u << u;
  }
  return s;
}

std::optional<VertexSet> brute_force_separating_clique(const SmallGraph& g) {
  const std::uint32_t all = g.n == 32 ? ~0u : (1u << g.n) - 1;
  std::optional<VertexSet> best;
  for (std::uint32_t s = 0; s <= all; ++s) {
    if (!complete_mask(g, s)) continue;
    const std::uint32_t rest = all & ~s;
    if (__builtin_popcount(rest) < 2 || connected_mask(g, rest)) continue;
    VertexSet m = members(s);
    if (!best || m.size() < best->size() || (m.size() == best->size() && m < *best)) best = m;
  }
  return best;
}

SplitVerdict brute_force_verdict(const SmallGraph& g) {
  const std::uint32_t all = (1u << g.n) - 1;
  if (complete_mask(g, all)) return SplitVerdict::complete;
  return brute_force_separating_clique(g) ? SplitVerdict::splits_over_abelian : SplitVerdict::no_abelian_splitting;
}

namespace {

// Factor element representative: exponent mod the order, 0 for trivial.
long rep_exp(const WeightedGraph& p, Vertex v, long k) {
  if (!p.finite(v)) return k;
  long m = k % p.order[v];
  return m < 0 ? m + p.order[v] : m;
}

Word tidy(const WeightedGraph& p, const Word& w) {
  Word out;
  for (auto s : w) {
    s.exp = rep_exp(p, s.v, s.exp);
    if (s.exp != 0) out.push_back(s);
  }
  return out;
}

}  // namespace

std::set<Word> move_closure_minima(const WeightedGraph& p, const Word& w) {
  const Word start = tidy(p, w);
  std::set<Word> seen{start};
  std::deque<Word> queue{start};
  std::size_t best = start.size();
  while (!queue.empty()) {
    Word u = std::move(queue.front());
    queue.pop_front();
    best = std::min(best, u.size());
    for (std::size_t i = 0; i + 1 < u.size(); ++i) {
      Word next;
      if (u[i].v == u[i + 1].v) {
        next = u;
        next[i].exp = rep_exp(p, u[i].v, u[i].exp + u[i + 1].exp);
        next.erase(next.begin() + static_cast<long>(i) + 1);
        if (next[i].exp == 0) next.erase(next.begin() + static_cast<long>(i));
      } else if (p.graph.adjacent(u[i].v, u[i + 1].v)) {
        next = u;
        std::swap(next[i], next[i + 1]);
      } else {
        continue;
      }
      if (seen.insert(next).second) queue.push_back(std::move(next));
    }
  }
  std::set<Word> minima;
  for (const auto& u : seen)
    if (u.size() == best) minima.insert(u);
  return minima;
}

bool closure_equal(const WeightedGraph& p, const Word& a, const Word& b) {
  const auto ma = move_closure_minima(p, a);
  const auto mb = move_closure_minima(p, b);
  return ma.count(*mb.begin()) > 0;
}

bool brute_force_in_coset_neighbourhood(const WeightedGraph& p, const Word& rep, const VertexSet& parabolic,
                                        const Word& w, int r) {
  Word inv_rep;
  for (auto it = rep.rbegin(); it != rep.rend(); ++it) inv_rep.push_back({it->v, -it->exp});
  Word base = inv_rep;
  base.insert(base.end(), w.begin(), w.end());
  // all words of at most r letters, as u^-1 appended to base
  std::vector<Word> layer{Word{}};
  for (int len = 0; len <= r; ++len) {
    std::vector<Word> next;
    for (const auto& u : layer) {
      Word t = base;
      t.insert(t.end(), u.begin(), u.end());
      const Word m = *move_closure_minima(p, t).begin();
      if (std::all_of(m.begin(), m.end(), [&](const Syllable& s) { return set_contains(parabolic, s.v); }))
        return true;
      if (len < r)
        for (Vertex v = 0; v < p.size(); ++v)
          for (long e : {1L, -1L}) {
            Word longer = u;
            longer.push_back({v, e});
            next.push_back(std::move(longer));
          }
    }
    layer = std::move(next);
  }
  return false;
}

std::vector<VertexSet> closure_coarse_components(const MetricGraph& x, const VertexSet& ambient,
                                                 const VertexSet& z, long k, long l) {
  std::vector<long> dz(x.size(), -1);
  if (!z.empty()) dz = x.distances_from(z);
  VertexSet rest;
  for (int v : ambient)
    if (dz[v] < 0 || dz[v] > l) rest.push_back(v);
  std::vector<std::vector<long>> d;
  for (int v : rest) d.push_back(x.distances_from({v}));
  std::vector<int> label(rest.size());
  for (std::size_t i = 0; i < rest.size(); ++i) label[i] = static_cast<int>(i);
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t i = 0; i < rest.size(); ++i)
      for (std::size_t j = 0; j < rest.size(); ++j) {
        const long dij = d[i][rest[j]];
        if (dij >= 0 && dij <= k && label[j] < label[i]) {
          label[i] = label[j];
          changed = true;
        }
      }
  }
  std::map<int, VertexSet> groups;
  for (std::size_t i = 0; i < rest.size(); ++i) groups[label[i]].push_back(rest[i]);
  std::vector<VertexSet> out;
  for (auto& [lab, g] : groups) out.push_back(normalized(g));
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

// Joint colour refinement so that colours are comparable across a and b.
std::pair<std::vector<int>, std::vector<int>> refine(const AdjacencyLists& a, const AdjacencyLists& b) {
  std::vector<int> ca(a.size(), 0), cb(b.size(), 0);
  std::size_t classes = 1;
  for (;;) {
    std::map<std::pair<int, std::vector<int>>, int> ids;
    auto signature = [](const AdjacencyLists& g, const std::vector<int>& c, int v) {
      std::vector<int> s;
      for (int u : g[v]) s.push_back(c[u]);
      std::sort(s.begin(), s.end());
      return std::make_pair(c[v], s);
    };
    std::vector<std::pair<int, std::vector<int>>> sa, sb;
    for (std::size_t v = 0; v < a.size(); ++v) sa.push_back(signature(a, ca, static_cast<int>(v)));
    for (std::size_t v = 0; v < b.size(); ++v) sb.push_back(signature(b, cb, static_cast<int>(v)));
    for (const auto& s : sa) ids.emplace(s, 0);
    for (const auto& s : sb) ids.emplace(s, 0);
    int next = 0;
    for (auto& [k, id] : ids) id = next++;
    for (std::size_t v = 0; v < a.size(); ++v) ca[v] = ids[sa[v]];
    for (std::size_t v = 0; v < b.size(); ++v) cb[v] = ids[sb[v]];
    if (ids.size() == classes) return {ca, cb};
    classes = ids.size();
  }
}

}  // namespace

bool isomorphic(const AdjacencyLists& a, const AdjacencyLists& b) {
  const int n = static_cast<int>(a.size());
  if (b.size() != a.size()) return false;
  auto [ca, cb] = refine(a, b);
  std::vector<int> ha(ca), hb(cb);
  std::sort(ha.begin(), ha.end());
  std::sort(hb.begin(), hb.end());
  if (ha != hb) return false;
  if (n == 0) return true;

  // BFS order of a keeps every new vertex attached to mapped ones
  std::vector<int> order, seen(n, 0);
  for (int s = 0; s < n; ++s) {
    if (seen[s]) continue;
    seen[s] = 1;
    order.push_back(s);
    for (std::size_t i = order.size() - 1; i < order.size(); ++i)
      for (int u : a[order[i]])
        if (!seen[u]) {
          seen[u] = 1;
          order.push_back(u);
        }
  }
  std::vector<std::set<int>> setb(n);
  for (int v = 0; v < n; ++v) setb[v] = std::set<int>(b[v].begin(), b[v].end());
  std::vector<int> map(n, -1), used(n, 0);
  std::function<bool(int)> extend = [&](int i) {
    if (i == n) return true;
    const int v = order[i];
    for (int w = 0; w < n; ++w) {
      if (used[w] || cb[w] != ca[v]) continue;
      bool ok = true;
      for (int j = 0; j < i && ok; ++j) {
        const int u = order[j];
        const bool adj_a = std::find(a[v].begin(), a[v].end(), u) != a[v].end();
        ok = adj_a == (setb[w].count(map[u]) > 0);
      }
      if (!ok) continue;
      map[v] = w;
      used[w] = 1;
      if (extend(i + 1)) return true;
      used[w] = 0;
      map[v] = -1;
    }
    return false;
  };
  return extend(0);
}

WeightedGraph load_weighted_fixture(const std::string& name) {
  const std::string path = std::string(RAAGSPLIT_FIXTURES) + "/" + name;
  return graph_from_json(read_json_file(path), path);
}

SimpleGraph load_fixture(const std::string& name) { return load_weighted_fixture(name).graph; }

Word random_word(std::mt19937_64& rng, const WeightedGraph& p, int max_syllables, long max_exp) {
  std::uniform_int_distribution<int> len(0, max_syllables), vert(0, p.size() - 1);
  std::uniform_int_distribution<long> ex(-max_exp, max_exp);
  Word w;
  for (int i = len(rng); i > 0; --i) w.push_back({vert(rng), ex(rng)});
  return w;
}

}  // namespace raagsplit::testing
