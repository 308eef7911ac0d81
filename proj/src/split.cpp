#include "raagsplit/split.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "raagsplit/errors.hpp"

namespace raagsplit {

std::string to_string(SplitVerdict v) {
  switch (v) {
    case SplitVerdict::complete: return "complete";
    case SplitVerdict::splits_over_abelian: return "splits-over-abelian";
    case SplitVerdict::no_abelian_splitting: return "no-abelian-splitting";
  }
  return "?";
}

SplitVerdict split_verdict_from_string(const std::string& s) {
  if (s == "complete") return SplitVerdict::complete;
  if (s == "splits-over-abelian") return SplitVerdict::splits_over_abelian;
  if (s == "no-abelian-splitting") return SplitVerdict::no_abelian_splitting;
  throw InputError("unknown verdict '" + s + "'");
}

std::string to_string(DecompositionCase c) {
  switch (c) {
    case DecompositionCase::vertex_removal: return "vertex-removal";
    case DecompositionCase::separator: return "separator";
    case DecompositionCase::cycle: return "cycle";
  }
  return "?";
}

DecompositionCase decomposition_case_from_string(const std::string& s) {
  if (s == "vertex-removal") return DecompositionCase::vertex_removal;
  if (s == "separator") return DecompositionCase::separator;
  if (s == "cycle") return DecompositionCase::cycle;
  throw InputError("unknown decomposition case '" + s + "'");
}

namespace {

VertexSet lift(const VertexSet& local, const VertexSet& host_of) {
  VertexSet out;
  out.reserve(local.size());
  for (Vertex v : local) out.push_back(host_of[v]);
  return out;
}

bool separates(const SimpleGraph& g, const VertexSet& s) {
  return components_avoiding(g, s).size() >= 2;
}

bool unpinched_on(const SimpleGraph& g, const VertexSet& s) {
  return is_unpinched(induced_subgraph(g, s));
}

}  // namespace

std::optional<VertexSet> minimum_separating_clique(const SimpleGraph& g) {
  for (int k = 0; k < g.size(); ++k) {
    auto cands = complete_subsets_of_size(g, k);
    if (cands.empty()) break;
    for (auto& c : cands)
      if (separates(g, c)) return c;
  }
  return std::nullopt;
}

bool is_unpinched(const SimpleGraph& g) {
  if (is_complete(g)) return false;
  return !minimum_separating_clique(g).has_value();
}

SplitCertificate classify_splitting(const SimpleGraph& g) {
  if (g.empty()) throw InputError("classify_splitting needs a nonempty graph");
  SplitCertificate c;
  if (is_complete(g)) {
    c.verdict = SplitVerdict::complete;
    return c;
  }
  auto sep = minimum_separating_clique(g);
  if (!sep) {
    c.verdict = SplitVerdict::no_abelian_splitting;
    return c;
  }
  c.verdict = SplitVerdict::splits_over_abelian;
  c.components = components_avoiding(g, *sep);
  c.witness = std::move(sep);
  return c;
}

bool check_split_certificate(const SimpleGraph& g, const SplitCertificate& c) {
  if (g.empty()) return false;
  switch (c.verdict) {
    case SplitVerdict::complete:
      return is_complete(g) && !c.witness;
    case SplitVerdict::no_abelian_splitting:
      return is_unpinched(g) && !c.witness;
    case SplitVerdict::splits_over_abelian: {
      if (!c.witness || !c.components || is_complete(g)) return false;
      for (Vertex v : *c.witness)
        if (v < 0 || v >= g.size()) return false;
      if (normalized(*c.witness) != *c.witness) return false;
      if (!is_complete_set(g, *c.witness)) return false;
      auto comps = components_avoiding(g, *c.witness);
      return comps.size() >= 2 && comps == *c.components;
    }
  }
  return false;
}

CutTree complete_cut_decomposition(const SimpleGraph& g) {
  if (g.empty()) throw InputError("complete_cut_decomposition needs a nonempty graph");
  if (!is_connected(g))
    throw InputError("complete_cut_decomposition needs a connected graph; decompose components first");

  struct Sub {
    std::vector<VertexSet> pieces;
    std::vector<std::pair<int, int>> edges;
  };
  std::function<Sub(const VertexSet&)> rec = [&](const VertexSet& s) -> Sub {
    SimpleGraph h = induced_subgraph(g, s);
    auto sep = minimum_separating_clique(h);
    if (!sep) return Sub{{s}, {}};
    VertexSet c = lift(*sep, s);
    auto comps = components_avoiding(h, *sep);
    Sub out;
    int anchor = -1;
    for (const auto& comp : comps) {
      Sub sub = rec(set_union(lift(comp, s), c));
      const int offset = static_cast<int>(out.pieces.size());
      // the separator is a clique, so some piece of the subtree contains it
      int t = -1;
      for (int i = 0; i < static_cast<int>(sub.pieces.size()); ++i) {
        if (!set_includes(sub.pieces[i], c)) continue;
        if (t < 0 || (sub.pieces[t] == c && sub.pieces[i] != c)) t = i;
      }
      if (t < 0) throw InvariantViolation("separator not contained in any piece");
      for (auto& p : sub.pieces) out.pieces.push_back(std::move(p));
      for (auto [a, b] : sub.edges) out.edges.emplace_back(a + offset, b + offset);
      if (anchor < 0)
        anchor = offset + t;
      else
        out.edges.emplace_back(anchor, offset + t);
    }
    return out;
  };

  Sub all = rec(all_vertices(g));
  CutTree t;
  for (int i = 0; i < static_cast<int>(all.pieces.size()); ++i)
    t.nodes.push_back(CutTreeNode{i, all.pieces[i]});
  for (auto [a, b] : all.edges) t.edges.emplace_back(std::min(a, b), std::max(a, b));
  return t;
}

std::optional<std::string> validate_cut_tree(const SimpleGraph& g, const CutTree& t) {
  const int k = static_cast<int>(t.nodes.size());
  if (k == 0) return "tree has no nodes";
  for (int i = 0; i < k; ++i) {
    if (t.nodes[i].id != i) return "node ids must be 0..k-1 in order";
    const auto& p = t.nodes[i].piece;
    if (p.empty()) return "node " + std::to_string(i) + " has an empty piece";
    if (normalized(p) != p) return "node " + std::to_string(i) + " piece not sorted";
    for (Vertex v : p)
      if (v < 0 || v >= g.size()) return "node " + std::to_string(i) + " lists an unknown vertex";
  }
  if (static_cast<int>(t.edges.size()) != k - 1) return "edge count is not nodes - 1";
  std::vector<std::vector<int>> adj(k);
  for (auto [a, b] : t.edges) {
    if (a < 0 || b < 0 || a >= k || b >= k || a == b) return "bad tree edge";
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  std::vector<char> seen(k, 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int reached = 0;
  while (!stack.empty()) {
    int x = stack.back();
    stack.pop_back();
    ++reached;
    for (int y : adj[x])
      if (!seen[y]) {
        seen[y] = 1;
        stack.push_back(y);
      }
  }
  if (reached != k) return "tree is not connected";

  std::vector<char> covered(g.size(), 0);
  for (const auto& n : t.nodes)
    for (Vertex v : n.piece) covered[v] = 1;
  for (int v = 0; v < g.size(); ++v)
    if (!covered[v]) return "vertex " + g.name(v) + " lies in no piece";
  for (auto [u, v] : g.edges()) {
    bool ok = false;
    for (const auto& n : t.nodes)
      if (set_contains(n.piece, u) && set_contains(n.piece, v)) {
        ok = true;
        break;
      }
    if (!ok) return "edge " + g.name(u) + "-" + g.name(v) + " lies in no piece";
  }
  for (const auto& n : t.nodes)
    if (minimum_separating_clique(induced_subgraph(g, n.piece)))
      return "piece of node " + std::to_string(n.id) + " has a complete cut";
  for (auto [a, b] : t.edges) {
    const auto& pa = t.nodes[a].piece;
    const auto& pb = t.nodes[b].piece;
    VertexSet inter = set_intersection(pa, pb);
    std::string e = std::to_string(a) + "-" + std::to_string(b);
    if (!is_complete_set(g, inter)) return "intersection on tree edge " + e + " is not complete";
    if (!separates(g, inter)) return "intersection on tree edge " + e + " is not a cut";
    if (inter == pa || inter == pb)
      return "intersection on tree edge " + e + " is not properly contained";
  }
  return std::nullopt;
}

namespace {

// Grow Q' greedily by induced paths with non-adjacent ends in Q' (a single
// interior vertex is the vertex case), staying a proper subgraph.
bool grow_by_paths(const SimpleGraph& g, VertexSet& core, std::vector<std::string>& log) {
  const int n = g.size();
  for (std::size_t i = 0; i < core.size(); ++i)
    for (std::size_t j = i + 1; j < core.size(); ++j) {
      Vertex q1 = core[i], q2 = core[j];
      if (g.adjacent(q1, q2)) continue;
      VertexSet rest = set_difference(all_vertices(g), core);
      VertexSet a1 = set_difference(g.neighbours(q1), core);
      VertexSet a2 = set_difference(g.neighbours(q2), core);
      if (a1.empty() || a2.empty()) continue;
      auto path = shortest_path_within(g, rest, a1, a2);
      if (!path) continue;
      if (static_cast<int>(core.size() + path->size()) >= n) continue;
      core = set_union(core, normalized(*path));
      std::string msg = "attach path " + g.name(q1);
      for (Vertex x : *path) msg += "-" + g.name(x);
      log.push_back(msg + "-" + g.name(q2));
      return true;
    }
  return false;
}

// Exhaustive check that no proper induced unpinched supergraph of core exists;
// returns one if it does.
std::optional<VertexSet> larger_unpinched(const SimpleGraph& g, const VertexSet& core) {
  VertexSet rest = set_difference(all_vertices(g), core);
  const int m = static_cast<int>(rest.size());
  if (m > 16) return std::nullopt;
  for (unsigned mask = 1; mask + 1 < (1u << m); ++mask) {
    VertexSet s = core;
    for (int b = 0; b < m; ++b)
      if (mask >> b & 1u) s.push_back(rest[b]);
    s = normalized(s);
    if (unpinched_on(g, s)) return s;
  }
  return std::nullopt;
}

}  // namespace

UnpinchedDecomposition unpinched_decomposition(const SimpleGraph& g) {
  if (triangle_count(g) != 0) throw InputError("unpinched_decomposition needs a triangle-free graph");
  if (!is_unpinched(g)) throw InputError("unpinched_decomposition needs an unpinched graph");

  UnpinchedDecomposition d;
  if (is_cycle_graph(g)) {
    d.kind = DecompositionCase::cycle;
    d.transcript.push_back("graph is a cycle of length " + std::to_string(g.size()));
    return d;
  }

  auto q = find_induced_cycle(g);
  if (!q) throw InvariantViolation("unpinched graph without a cycle");
  VertexSet core = normalized(*q);
  {
    std::string msg = "induced cycle";
    for (Vertex x : *q) msg += " " + g.name(x);
    d.transcript.push_back(msg);
  }
  for (;;) {
    while (grow_by_paths(g, core, d.transcript)) {
    }
    auto bigger = larger_unpinched(g, core);
    if (!bigger) break;
    d.transcript.push_back("greedy growth stalled; exhaustive search enlarged the core");
    core = *bigger;
  }
  if (!unpinched_on(g, core)) throw InvariantViolation("grown core is not unpinched");
  d.grown_core = core;

  const VertexSet rest = set_difference(all_vertices(g), core);
  auto comps = components_within(g, rest);
  if (comps.size() >= 2) {
    d.kind = DecompositionCase::separator;
    d.separator = core;
    d.parts = comps;
    d.transcript.push_back("maximal core separates the graph");
  } else {
    VertexSet z;
    for (Vertex x : core)
      for (Vertex w : g.neighbours(x))
        if (!set_contains(core, w)) {
          z.push_back(x);
          break;
        }
    std::optional<std::pair<Vertex, Vertex>> qq;
    for (std::size_t i = 0; i < z.size() && !qq; ++i)
      for (std::size_t j = i + 1; j < z.size(); ++j)
        if (!g.adjacent(z[i], z[j])) {
          qq = std::make_pair(z[i], z[j]);
          break;
        }
    if (!qq) throw InvariantViolation("attachment set of the core is complete");
    auto [q1, q2] = *qq;
    VertexSet a1 = set_difference(g.neighbours(q1), core);
    VertexSet a2 = set_difference(g.neighbours(q2), core);
    auto gamma = shortest_path_within(g, rest, a1, a2);
    if (!gamma) throw InvariantViolation("no path between the attachment sets");
    if (normalized(*gamma) != rest) throw InvariantViolation("complement of the core is not a single path");
    d.transcript.push_back("q1=" + g.name(q1) + " q2=" + g.name(q2));

    auto core_neighbours = [&](Vertex x) { return set_intersection(g.neighbours(x), core); };
    if (gamma->size() == 1 && core_neighbours(gamma->front()) != normalized({q1, q2})) {
      // attaching the lone outside vertex yields the whole graph, so
      // maximality says nothing about its neighbours; the core itself is
      // what remains after deleting it
      d.kind = DecompositionCase::vertex_removal;
      d.vertex = gamma->front();
      d.transcript.push_back("single outside vertex " + g.name(gamma->front()) + " with " +
                             std::to_string(core_neighbours(gamma->front()).size()) + " core neighbours");
      if (auto err = validate_unpinched_decomposition(g, d))
        throw InvariantViolation("decomposition failed validation: " + *err);
      return d;
    }
    if (gamma->size() > 1 && (core_neighbours(gamma->front()) != VertexSet{q1} ||
                              core_neighbours(gamma->back()) != VertexSet{q2}))
      throw InvariantViolation("path end has extra neighbours in the core");

    VertexSet touched;
    for (std::size_t i = 1; i + 1 < gamma->size(); ++i)
      for (Vertex w : g.neighbours((*gamma)[i]))
        if (set_contains(core, w)) touched.push_back(w);
    touched = normalized(touched);
    if (touched.size() > 1 || set_contains(touched, q1) || set_contains(touched, q2))
      throw InvariantViolation("path interior has unexpected neighbours in the core");

    if (touched.empty()) {
      auto gp = shortest_path_within(g, core, {q1}, {q2});
      if (!gp) throw InvariantViolation("core is disconnected");
      d.kind = DecompositionCase::separator;
      d.separator = normalized(*gp);
      d.parts = {normalized(*gamma), set_difference(core, *d.separator)};
      d.transcript.push_back("case 1: separator is an induced q1-q2 path in the core");
    } else {
      Vertex p = touched[0];
      VertexSet core_minus_p = set_difference(core, {p});
      auto gp = shortest_path_within(g, core_minus_p, {q1}, {q2});
      if (!gp) throw InvariantViolation("core is separated by a vertex");
      VertexSet k = set_union(normalized(*gp), {p});
      if (k == core) {
        d.kind = DecompositionCase::vertex_removal;
        d.vertex = p;
        d.transcript.push_back("case 2: removing " + g.name(p) + " leaves a cycle");
      } else {
        d.kind = DecompositionCase::separator;
        d.separator = k;
        d.parts = {normalized(*gamma), set_difference(core, k)};
        d.transcript.push_back("case 2: separator is a q1-q2 path plus " + g.name(p));
      }
    }
  }
  if (auto err = validate_unpinched_decomposition(g, d))
    throw InvariantViolation("decomposition failed validation: " + *err);
  return d;
}

std::optional<std::string> validate_unpinched_decomposition(const SimpleGraph& g,
                                                            const UnpinchedDecomposition& d) {
  switch (d.kind) {
    case DecompositionCase::cycle:
      if (!is_cycle_graph(g) || g.size() < 4) return "graph is not a cycle of length >= 4";
      return std::nullopt;
    case DecompositionCase::vertex_removal: {
      if (!d.vertex || *d.vertex < 0 || *d.vertex >= g.size()) return "missing vertex";
      if (!is_unpinched(induced_subgraph(g, set_difference(all_vertices(g), {*d.vertex}))))
        return "graph minus " + g.name(*d.vertex) + " is not unpinched";
      return std::nullopt;
    }
    case DecompositionCase::separator: {
      if (!d.separator || d.separator->empty()) return "missing separator";
      const VertexSet& k = *d.separator;
      if (normalized(k) != k) return "separator not sorted";
      if (d.parts.size() < 2) return "fewer than two parts";
      std::vector<int> owner(g.size(), -1);
      for (Vertex v : k) {
        if (v < 0 || v >= g.size()) return "separator lists an unknown vertex";
        owner[v] = -2;
      }
      for (std::size_t i = 0; i < d.parts.size(); ++i) {
        if (d.parts[i].empty()) return "empty part";
        for (Vertex v : d.parts[i]) {
          if (v < 0 || v >= g.size()) return "part lists an unknown vertex";
          if (owner[v] != -1) return "parts and separator overlap";
          owner[v] = static_cast<int>(i);
        }
      }
      for (int v = 0; v < g.size(); ++v)
        if (owner[v] == -1) return "vertex " + g.name(v) + " not covered";
      for (auto [u, v] : g.edges())
        if (owner[u] >= 0 && owner[v] >= 0 && owner[u] != owner[v])
          return "edge " + g.name(u) + "-" + g.name(v) + " joins two parts";
      if (!separates(g, k)) return "separator does not separate";
      for (const auto& part : d.parts)
        if (!unpinched_on(g, set_union(normalized(part), k))) return "part plus separator is not unpinched";
      return std::nullopt;
    }
  }
  return "unknown case";
}

bool attach_preserves_unpinched(const SimpleGraph& host, const VertexSet& core_in,
                                const Attachment& att) {
  VertexSet core = normalized(core_in);
  for (Vertex v : core)
    if (v < 0 || v >= host.size()) throw InputError("core lists an unknown vertex");
  for (Vertex v : att)
    if (v < 0 || v >= host.size()) throw InputError("attachment lists an unknown vertex");
  if (att.empty()) throw InputError("empty attachment");
  if (!unpinched_on(host, core)) throw InputError("core does not induce an unpinched subgraph");

  bool hyp = false;
  if (att.size() == 1) {
    Vertex v = att[0];
    if (!set_contains(core, v)) hyp = !is_complete_set(host, set_intersection(host.neighbours(v), core));
  } else {
    hyp = normalized(att).size() == att.size();
    const Vertex a = att.front(), b = att.back();
    hyp = hyp && set_contains(core, a) && set_contains(core, b) && !host.adjacent(a, b);
    for (std::size_t i = 1; hyp && i + 1 < att.size(); ++i)
      if (set_contains(core, att[i])) hyp = false;
    for (std::size_t i = 0; hyp && i < att.size(); ++i)
      for (std::size_t j = i + 1; j < att.size(); ++j)
        if (host.adjacent(att[i], att[j]) != (j == i + 1)) {
          hyp = false;
          break;
        }
  }
  if (hyp && !unpinched_on(host, set_union(core, normalized(att))))
    throw InvariantViolation("attachment met the hypotheses but the result is pinched");
  return hyp;
}

std::vector<SimpleGraph> triangle_reduction_step(const SimpleGraph& g, Vertex v) {
  if (v < 0 || v >= g.size()) throw InputError("unknown vertex index " + std::to_string(v));
  if (!is_unpinched(g)) throw InputError("triangle_reduction_step needs an unpinched graph");
  if (!in_triangle(g, v)) throw InputError("vertex " + g.name(v) + " lies in no triangle");

  const VertexSet lk = link(g, v);
  const VertexSet without_v = set_difference(all_vertices(g), {v});
  std::vector<std::vector<Vertex>> alpha;
  for (std::size_t i = 0; i < lk.size(); ++i)
    for (std::size_t j = i + 1; j < lk.size(); ++j) {
      if (g.adjacent(lk[i], lk[j])) continue;
      auto p = shortest_path_within(g, without_v, {lk[i]}, {lk[j]});
      if (!p) throw InvariantViolation("graph minus a vertex is disconnected");
      alpha.push_back(*p);
    }
  if (alpha.empty()) throw InputError("link of " + g.name(v) + " is complete");
  const int n_paths = static_cast<int>(alpha.size());
  const long before = triangle_count(g);

  std::set<std::string> taken(g.names().begin(), g.names().end());
  auto fresh = [&](const std::string& base) {
    std::string s = base;
    while (taken.count(s)) s += "'";
    taken.insert(s);
    return s;
  };

  // copy c < N is Gamma_{c+1}, copy c >= N is Gamma'_{c-N+1}; each output
  // keeps its own copy of the graph and receives the other 2N-1 paths glued
  // at their endpoints
  std::vector<SimpleGraph> out;
  for (int c = 0; c < 2 * n_paths; ++c) {
    std::vector<std::string> names;
    std::vector<std::pair<std::string, std::string>> edges;
    for (Vertex x : without_v) names.push_back(g.name(x));
    for (auto [x, y] : g.edges())
      if (x != v && y != v) edges.emplace_back(g.name(x), g.name(y));
    for (int d = 0; d < 2 * n_paths; ++d) {
      if (d == c) continue;
      const auto& path = alpha[d % n_paths];
      std::string tag = (d < n_paths ? "g" : "h") + std::to_string(d % n_paths + 1);
      std::string prev = g.name(path.front());
      for (std::size_t i = 1; i + 1 < path.size(); ++i) {
        std::string nm = fresh(g.name(path[i]) + "@" + tag);
        names.push_back(nm);
        edges.emplace_back(prev, nm);
        prev = nm;
      }
      edges.emplace_back(prev, g.name(path.back()));
    }
    for (const auto& nm : names) taken.insert(nm);
    SimpleGraph h(names, edges);
    if (!is_unpinched(h)) throw InvariantViolation("reduced graph is not unpinched");
    if (triangle_count(h) >= before) throw InvariantViolation("triangle count did not decrease");
    out.push_back(std::move(h));
  }
  return out;
}

namespace {

CutTree cut_decomposition_any(const SimpleGraph& g) {
  auto comps = components_within(g, all_vertices(g));
  if (comps.size() == 1) return complete_cut_decomposition(g);
  // free product: join the component trees along the empty cut
  CutTree t;
  for (const auto& comp : comps) {
    CutTree sub = complete_cut_decomposition(induced_subgraph(g, comp));
    const int offset = static_cast<int>(t.nodes.size());
    for (auto& n : sub.nodes) t.nodes.push_back(CutTreeNode{n.id + offset, lift(n.piece, comp)});
    for (auto [a, b] : sub.edges) t.edges.emplace_back(a + offset, b + offset);
    if (offset > 0) t.edges.emplace_back(0, offset);
  }
  return t;
}

std::vector<PieceInvariants> piece_invariants(const SimpleGraph& g, const CutTree& t) {
  std::vector<PieceInvariants> out;
  for (const auto& n : t.nodes) {
    SimpleGraph h = induced_subgraph(g, n.piece);
    PieceInvariants p;
    p.node = n.id;
    p.piece = n.piece;
    p.clique_number = clique_number(h);
    p.vertex_count = h.size();
    p.exponential_growth = !is_complete(h);
    out.push_back(std::move(p));
  }
  return out;
}

}  // namespace

ObstructionReport embedding_obstruction(const SimpleGraph& source, const SimpleGraph& target) {
  if (source.empty() || target.empty()) throw InputError("embedding_obstruction needs nonempty graphs");
  ObstructionReport r;
  r.source_tree = cut_decomposition_any(source);
  r.target_tree = cut_decomposition_any(target);
  r.source_pieces = piece_invariants(source, r.source_tree);
  r.target_pieces = piece_invariants(target, r.target_tree);
  for (const auto& s : r.source_pieces) {
    if (!s.exponential_growth) continue;
    PieceAdmissibility a;
    a.source_node = s.node;
    for (const auto& t : r.target_pieces)
      if (s.clique_number <= t.clique_number && t.exponential_growth) a.admissible_targets.push_back(t.node);
    if (a.admissible_targets.empty()) r.no_admissible_piece.push_back(s.node);
    r.admissible.push_back(std::move(a));
  }
  return r;
}

}  // namespace raagsplit
