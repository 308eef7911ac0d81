#include "raagsplit/graph.hpp"

#include <algorithm>
#include <deque>
#include <functional>

#include "raagsplit/errors.hpp"

namespace raagsplit {

SimpleGraph::SimpleGraph(std::vector<std::string> names,
                         const std::vector<std::pair<std::string, std::string>>& edges)
    : names_(std::move(names)) {
  const int n = size();
  adj_.assign(n, std::vector<char>(n, 0));
  nbrs_.assign(n, {});
  for (int i = 0; i < n; ++i) {
    if (!index_.emplace(names_[i], i).second)
      throw InputError("duplicate vertex '" + names_[i] + "'");
  }
  for (const auto& [a, b] : edges) {
    auto ia = find(a), ib = find(b);
    if (!ia) throw InputError("edge endpoint '" + a + "' is not a declared vertex");
    if (!ib) throw InputError("edge endpoint '" + b + "' is not a declared vertex");
    add_edge(*ia, *ib);
  }
  for (auto& nb : nbrs_) std::sort(nb.begin(), nb.end());
}

SimpleGraph SimpleGraph::from_indices(std::vector<std::string> names,
                                      const std::vector<std::pair<Vertex, Vertex>>& edges) {
  SimpleGraph g(std::move(names), {});
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= g.size() || v >= g.size())
      throw InputError("edge endpoint index out of range");
    g.add_edge(u, v);
  }
  for (auto& nb : g.nbrs_) std::sort(nb.begin(), nb.end());
  return g;
}

void SimpleGraph::add_edge(Vertex u, Vertex v) {
  if (u == v) throw InputError("loop at vertex '" + names_[u] + "'");
  if (adj_[u][v]) throw InputError("repeated edge " + names_[u] + "-" + names_[v]);
  adj_[u][v] = adj_[v][u] = 1;
  nbrs_[u].push_back(v);
  nbrs_[v].push_back(u);
  ++edge_count_;
}

Vertex SimpleGraph::index(const std::string& name) const {
  auto it = index_.find(name);
  if (it == index_.end()) throw InputError("unknown vertex '" + name + "'");
  return it->second;
}

std::optional<Vertex> SimpleGraph::find(const std::string& name) const {
  auto it = index_.find(name);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::vector<std::pair<Vertex, Vertex>> SimpleGraph::edges() const {
  std::vector<std::pair<Vertex, Vertex>> out;
  out.reserve(edge_count_);
  for (int u = 0; u < size(); ++u)
    for (Vertex v : nbrs_[u])
      if (u < v) out.emplace_back(u, v);
  return out;
}

std::vector<std::string> SimpleGraph::names_of(const VertexSet& s) const {
  std::vector<std::string> out;
  out.reserve(s.size());
  for (Vertex v : s) out.push_back(name(v));
  return out;
}

VertexSet SimpleGraph::indices_of(const std::vector<std::string>& names) const {
  VertexSet out;
  for (const auto& n : names) out.push_back(index(n));
  std::sort(out.begin(), out.end());
  if (std::adjacent_find(out.begin(), out.end()) != out.end())
    throw InputError("vertex listed twice");
  return out;
}

bool SimpleGraph::operator==(const SimpleGraph& o) const {
  return names_ == o.names_ && adj_ == o.adj_;
}

WeightedGraph::WeightedGraph(SimpleGraph g, std::vector<long> ord)
    : graph(std::move(g)), order(std::move(ord)) {
  if (static_cast<int>(order.size()) != graph.size())
    throw InputError("weight list length " + std::to_string(order.size()) +
                     " does not match vertex count " + std::to_string(graph.size()));
  for (int v = 0; v < graph.size(); ++v)
    if (order[v] != 0 && order[v] < 2)
      throw InputError("weight of '" + graph.name(v) + "' must be >= 2");
}

WeightedGraph WeightedGraph::raag(SimpleGraph g) {
  std::vector<long> ord(g.size(), 0);
  return WeightedGraph(std::move(g), std::move(ord));
}

bool WeightedGraph::all_finite() const {
  return std::all_of(order.begin(), order.end(), [](long o) { return o != 0; });
}

VertexSet normalized(VertexSet s) {
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  return s;
}

VertexSet all_vertices(const SimpleGraph& g) {
  VertexSet s(g.size());
  for (int i = 0; i < g.size(); ++i) s[i] = i;
  return s;
}

VertexSet set_union(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

VertexSet set_difference(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

VertexSet set_intersection(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

bool set_contains(const VertexSet& s, Vertex v) {
  return std::binary_search(s.begin(), s.end(), v);
}

bool set_includes(const VertexSet& outer, const VertexSet& inner) {
  return std::includes(outer.begin(), outer.end(), inner.begin(), inner.end());
}

SimpleGraph induced_subgraph(const SimpleGraph& g, const VertexSet& s) {
  for (Vertex v : s)
    if (v < 0 || v >= g.size()) throw InputError("unknown vertex index " + std::to_string(v));
  VertexSet t = normalized(s);
  if (t.size() != s.size()) throw InputError("vertex set lists a vertex twice");
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (std::size_t i = 0; i < t.size(); ++i)
    for (std::size_t j = i + 1; j < t.size(); ++j)
      if (g.adjacent(t[i], t[j])) edges.emplace_back(i, j);
  return SimpleGraph::from_indices(g.names_of(t), edges);
}

VertexSet link(const SimpleGraph& g, Vertex v) {
  if (v < 0 || v >= g.size()) throw InputError("unknown vertex index " + std::to_string(v));
  return g.neighbours(v);
}

VertexSet star(const SimpleGraph& g, Vertex v) {
  VertexSet s = link(g, v);
  s.insert(std::lower_bound(s.begin(), s.end(), v), v);
  return s;
}

bool is_complete(const SimpleGraph& g) {
  const long n = g.size();
  return static_cast<long>(g.edge_count()) == n * (n - 1) / 2;
}

bool is_complete_set(const SimpleGraph& g, const VertexSet& s) {
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = i + 1; j < s.size(); ++j)
      if (!g.adjacent(s[i], s[j])) return false;
  return true;
}

std::vector<VertexSet> components_within(const SimpleGraph& g, const VertexSet& allowed) {
  std::vector<char> ok(g.size(), 0), seen(g.size(), 0);
  for (Vertex v : allowed) ok[v] = 1;
  std::vector<VertexSet> comps;
  for (Vertex s : allowed) {
    if (seen[s]) continue;
    VertexSet comp;
    std::vector<Vertex> stack{s};
    seen[s] = 1;
    while (!stack.empty()) {
      Vertex u = stack.back();
      stack.pop_back();
      comp.push_back(u);
      for (Vertex w : g.neighbours(u))
        if (ok[w] && !seen[w]) {
          seen[w] = 1;
          stack.push_back(w);
        }
    }
    std::sort(comp.begin(), comp.end());
    comps.push_back(std::move(comp));
  }
  // allowed is sorted, so components already come out ordered by least vertex
  return comps;
}

std::vector<VertexSet> components_avoiding(const SimpleGraph& g, const VertexSet& removed) {
  return components_within(g, set_difference(all_vertices(g), normalized(removed)));
}

bool is_connected(const SimpleGraph& g) {
  return components_within(g, all_vertices(g)).size() <= 1;
}

bool is_join(const SimpleGraph& g) {
  const int n = g.size();
  if (n < 2) return false;
  // g is a join iff its complement is disconnected
  std::vector<char> seen(n, 0);
  std::vector<Vertex> stack{0};
  seen[0] = 1;
  int reached = 0;
  while (!stack.empty()) {
    Vertex u = stack.back();
    stack.pop_back();
    ++reached;
    for (Vertex w = 0; w < n; ++w)
      if (w != u && !g.adjacent(u, w) && !seen[w]) {
        seen[w] = 1;
        stack.push_back(w);
      }
  }
  return reached < n;
}

bool in_triangle(const SimpleGraph& g, Vertex v) {
  const auto& nb = g.neighbours(v);
  for (std::size_t i = 0; i < nb.size(); ++i)
    for (std::size_t j = i + 1; j < nb.size(); ++j)
      if (g.adjacent(nb[i], nb[j])) return true;
  return false;
}

long triangle_count(const SimpleGraph& g) {
  long t = 0;
  for (auto [u, v] : g.edges())
    for (Vertex w : g.neighbours(v))
      if (w > v && g.adjacent(u, w)) ++t;
  return t;
}

StructuralPredicates structural_predicates(const SimpleGraph& g) {
  StructuralPredicates p;
  p.is_complete = is_complete(g);
  p.is_join = is_join(g);
  p.is_triangle_free = triangle_count(g) == 0;
  p.is_connected = is_connected(g);
  return p;
}

bool is_cycle_graph(const SimpleGraph& g) {
  if (g.size() < 3) return false;
  for (int v = 0; v < g.size(); ++v)
    if (g.degree(v) != 2) return false;
  return is_connected(g);
}

std::optional<std::vector<Vertex>> shortest_path_within(const SimpleGraph& g,
                                                        const VertexSet& allowed,
                                                        const VertexSet& from,
                                                        const VertexSet& to) {
  const int n = g.size();
  std::vector<char> ok(n, 0), target(n, 0);
  for (Vertex v : allowed) ok[v] = 1;
  for (Vertex v : to)
    if (ok[v]) target[v] = 1;
  std::vector<Vertex> parent(n, -2);
  std::deque<Vertex> queue;
  for (Vertex s : normalized(from)) {
    if (!ok[s] || parent[s] != -2) continue;
    parent[s] = -1;
    queue.push_back(s);
  }
  while (!queue.empty()) {
    Vertex u = queue.front();
    queue.pop_front();
    if (target[u]) {
      std::vector<Vertex> path;
      for (Vertex x = u; x != -1; x = parent[x]) path.push_back(x);
      std::reverse(path.begin(), path.end());
      return path;
    }
    for (Vertex w : g.neighbours(u))
      if (ok[w] && parent[w] == -2) {
        parent[w] = u;
        queue.push_back(w);
      }
  }
  return std::nullopt;
}

std::optional<std::vector<Vertex>> find_induced_cycle(const SimpleGraph& g) {
  // a shortest cycle has no chord, so it is induced
  std::optional<std::vector<Vertex>> best;
  for (auto [u, v] : g.edges()) {
    // BFS from u to v avoiding the edge uv itself
    const int n = g.size();
    std::vector<Vertex> parent(n, -2);
    std::deque<Vertex> queue{u};
    parent[u] = -1;
    bool found = false;
    while (!queue.empty() && !found) {
      Vertex x = queue.front();
      queue.pop_front();
      for (Vertex w : g.neighbours(x)) {
        if (x == u && w == v) continue;
        if (parent[w] != -2) continue;
        parent[w] = x;
        if (w == v) {
          found = true;
          break;
        }
        queue.push_back(w);
      }
    }
    if (!found) continue;
    std::vector<Vertex> cyc;
    for (Vertex x = v; x != -1; x = parent[x]) cyc.push_back(x);
    std::reverse(cyc.begin(), cyc.end());
    if (!best || cyc.size() < best->size()) best = std::move(cyc);
    if (best->size() == 3) break;
  }
  return best;
}

bool is_induced_cycle(const SimpleGraph& g, const std::vector<Vertex>& cycle) {
  const std::size_t k = cycle.size();
  if (k < 3) return false;
  VertexSet s = normalized(cycle);
  if (s.size() != k) return false;
  for (Vertex v : cycle)
    if (v < 0 || v >= g.size()) return false;
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j) {
      bool consecutive = (j == i + 1) || (i == 0 && j == k - 1);
      if (g.adjacent(cycle[i], cycle[j]) != consecutive) return false;
    }
  return true;
}

std::vector<VertexSet> complete_subsets_of_size(const SimpleGraph& g, int k) {
  std::vector<VertexSet> out;
  VertexSet cur;
  std::function<void(Vertex)> rec = [&](Vertex start) {
    if (static_cast<int>(cur.size()) == k) {
      out.push_back(cur);
      return;
    }
    for (Vertex v = start; v < g.size(); ++v) {
      bool ok = true;
      for (Vertex u : cur)
        if (!g.adjacent(u, v)) {
          ok = false;
          break;
        }
      if (!ok) continue;
      cur.push_back(v);
      rec(v + 1);
      cur.pop_back();
    }
  };
  rec(0);
  return out;
}

int clique_number(const SimpleGraph& g) {
  int k = 0;
  while (!complete_subsets_of_size(g, k + 1).empty()) ++k;
  return k;
}

std::vector<std::vector<Vertex>> induced_cycles(const SimpleGraph& g, int min_length) {
  std::vector<std::vector<Vertex>> out;
  const int n = g.size();
  for (Vertex s = 0; s < n; ++s) {
    std::vector<Vertex> path{s};
    std::function<void()> extend = [&]() {
      Vertex last = path.back();
      for (Vertex w : g.neighbours(last)) {
        if (w <= s) continue;
        if (std::find(path.begin(), path.end(), w) != path.end()) continue;
        bool chord = false;
        for (std::size_t i = 1; i + 1 < path.size(); ++i)
          if (g.adjacent(path[i], w)) {
            chord = true;
            break;
          }
        if (chord) continue;
        bool closes = path.size() >= 2 && g.adjacent(s, w);
        path.push_back(w);
        if (closes) {
          if (static_cast<int>(path.size()) >= min_length && path[1] < w) out.push_back(path);
        } else {
          extend();
        }
        path.pop_back();
      }
    };
    extend();
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace raagsplit
