#include "raagsplit/thickness.hpp"

#include <algorithm>
#include <deque>

#include "raagsplit/errors.hpp"

namespace raagsplit {

std::string to_string(ChainKind k) { return k == ChainKind::raag ? "raag" : "coset"; }

ChainKind chain_kind_from_string(const std::string& s) {
  if (s == "raag") return ChainKind::raag;
  if (s == "coset") return ChainKind::coset;
  throw InputError("unknown chain kind '" + s + "'");
}

Word parabolic_remainder(const WeightedGraph& p, const VertexSet& parabolic, const Word& w) {
  Word rest;
  for (const auto& s : reduce(p, w)) {
    bool front = set_contains(parabolic, s.v);
    for (std::size_t j = 0; front && j < rest.size(); ++j)
      if (!p.graph.adjacent(rest[j].v, s.v)) front = false;
    if (!front) rest.push_back(s);
  }
  return rest;
}

long coset_distance(const WeightedGraph& p, const Word& rep, const VertexSet& parabolic, const Word& w) {
  Word x = multiply(p, inverse(p, rep), w);
  return word_metric_length(p, parabolic_remainder(p, parabolic, x));
}

bool in_piece(const WeightedGraph& p, const CosetPiece& piece, const Word& w) {
  return coset_distance(p, piece.rep, piece.subgraph, w) <= piece.radius;
}

bool junction_in_piece(const WeightedGraph& p, const CosetPiece& junction, const CosetPiece& piece) {
  if (!set_includes(piece.subgraph, junction.subgraph)) return false;
  Word u = parabolic_remainder(p, piece.subgraph, multiply(p, inverse(p, piece.rep), junction.rep));
  for (Vertex k : junction.subgraph)
    for (const auto& s : u)
      if (!p.graph.adjacent(k, s.v)) return false;
  return word_metric_length(p, u) + junction.radius <= piece.radius;
}

ThickChain coset_chain(const WeightedGraph& p, const VertexSet& h_in, const Word& g1, const Word& g2) {
  const VertexSet h = normalized(h_in);
  for (Vertex v : h)
    if (v < 0 || v >= p.size()) throw InputError("subgraph lists an unknown vertex");
  check_word(p, g1);
  check_word(p, g2);

  ThickChain c;
  c.presentation = p;
  c.kind = ChainKind::coset;
  c.start = normal_form(p, g1);
  c.end = normal_form(p, g2);
  Word cur = c.start;
  c.pieces.push_back(CosetPiece{cur, h, 1});
  const Word path = letters(p, multiply(p, inverse(p, c.start), c.end));
  for (std::size_t i = 0; i < path.size(); ++i) {
    const Syllable s = path[i];
    Word next = multiply(p, cur, {s});
    if (set_contains(h, s.v)) {
      cur = std::move(next);
      continue;
    }
    VertexSet k = set_intersection(h, p.graph.neighbours(s.v));
    if (k.empty())
      throw ChainError("step " + std::to_string(i + 1) + ": letter " + p.graph.name(s.v) +
                           " commutes with no vertex of the subgroup, so the junction is trivial",
                       static_cast<int>(i + 1));
    c.junctions.push_back(CosetPiece{cur, k, 0});
    c.pieces.push_back(CosetPiece{next, h, 1});
    c.transcript.push_back("step " + std::to_string(i + 1) + ": cross " + format_word(p.graph, {s}));
    cur = std::move(next);
  }
  return c;
}

std::optional<std::string> chain_failure(const ThickChain& c) {
  const auto& p = c.presentation;
  auto bad_piece = [&](const CosetPiece& x) {
    for (const auto& s : x.rep)
      if (s.v < 0 || s.v >= p.size()) return true;
    for (Vertex v : x.subgraph)
      if (v < 0 || v >= p.size()) return true;
    return x.radius < 0 || normalized(x.subgraph) != x.subgraph;
  };
  if (c.pieces.empty()) return "chain has no pieces";
  if (c.junctions.size() + 1 != c.pieces.size()) return "junction count must be one less than piece count";
  for (const auto& x : c.pieces)
    if (bad_piece(x)) return "malformed piece";
  for (const auto& x : c.junctions)
    if (bad_piece(x)) return "malformed junction";
  try {
    check_word(p, c.start);
    check_word(p, c.end);
  } catch (const InputError&) {
    return "malformed endpoint";
  }
  if (!in_piece(p, c.pieces.front(), c.start)) return "start is not in the first piece";
  if (!in_piece(p, c.pieces.back(), c.end)) return "end is not in the last piece";
  for (std::size_t i = 0; i < c.junctions.size(); ++i) {
    const auto& j = c.junctions[i];
    if (c.kind == ChainKind::raag) {
      if (j.subgraph.size() != 2 || p.graph.adjacent(j.subgraph[0], j.subgraph[1]) || j.radius != 0)
        return "junction " + std::to_string(i) + " is not a coset of a non-adjacent pair";
    } else if (j.subgraph.empty()) {
      return "junction " + std::to_string(i) + " is trivial";
    }
    if (!junction_in_piece(p, j, c.pieces[i]))
      return "junction " + std::to_string(i) + " is not contained in piece " + std::to_string(i);
    if (!junction_in_piece(p, j, c.pieces[i + 1]))
      return "junction " + std::to_string(i) + " is not contained in piece " + std::to_string(i + 1);
  }
  if (c.kind == ChainKind::raag)
    for (std::size_t i = 0; i < c.pieces.size(); ++i) {
      SimpleGraph h = induced_subgraph(p.graph, c.pieces[i].subgraph);
      if (h.size() < 4 || !is_cycle_graph(h)) return "piece " + std::to_string(i) + " is not a cycle parabolic";
    }
  return std::nullopt;
}

bool verify_chain(const ThickChain& c) { return !chain_failure(c).has_value(); }

ThickChain with_uniform_radius(ThickChain c, int r) {
  for (auto& x : c.pieces) x.radius = r;
  return c;
}

ThickChain inflated(ThickChain c, int by) {
  for (auto& x : c.pieces) x.radius += by;
  return c;
}

std::optional<int> minimal_uniform_radius(const ThickChain& c, int limit) {
  for (int r = 0; r <= limit; ++r)
    if (verify_chain(with_uniform_radius(c, r))) return r;
  return std::nullopt;
}

RaagChainBuilder::RaagChainBuilder(SimpleGraph g) : g_(std::move(g)) {
  if (triangle_count(g_) != 0) throw InputError("thick chains need a triangle-free graph");
  if (!is_unpinched(g_)) throw InputError("thick chains need an unpinched graph");
  p_ = WeightedGraph::raag(g_);
  for (const auto& cyc : induced_cycles(g_, 4)) cycles_.push_back(normalized(cyc));
  std::sort(cycles_.begin(), cycles_.end(), [](const VertexSet& a, const VertexSet& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  cycles_.erase(std::unique(cycles_.begin(), cycles_.end()), cycles_.end());
}

void RaagChainBuilder::log(int depth, const std::string& msg) {
  transcript_.push_back(std::string(2 * static_cast<std::size_t>(depth), ' ') + msg);
}

const UnpinchedDecomposition& RaagChainBuilder::decomposition(const VertexSet& s) {
  auto it = decomp_.find(s);
  if (it != decomp_.end()) return it->second;
  UnpinchedDecomposition d = unpinched_decomposition(induced_subgraph(g_, s));
  auto lift = [&](const VertexSet& local) {
    VertexSet out;
    for (Vertex v : local) out.push_back(s[v]);
    return out;
  };
  if (d.vertex) d.vertex = s[*d.vertex];
  if (d.separator) d.separator = lift(*d.separator);
  for (auto& part : d.parts) part = lift(part);
  d.grown_core = lift(d.grown_core);
  return decomp_.emplace(s, std::move(d)).first->second;
}

std::optional<RaagChainBuilder::Pair> RaagChainBuilder::first_nonadjacent_pair(const VertexSet& s) const {
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = i + 1; j < s.size(); ++j)
      if (!g_.adjacent(s[i], s[j])) return Pair{s[i], s[j]};
  return std::nullopt;
}

namespace {

bool pair_in(const std::pair<Vertex, Vertex>& a, const VertexSet& s) {
  return set_contains(s, a.first) && set_contains(s, a.second);
}

VertexSet pair_set(const std::pair<Vertex, Vertex>& a) { return normalized({a.first, a.second}); }

}  // namespace

bool RaagChainBuilder::on_some_cycle(const Pair& a) const {
  return std::any_of(cycles_.begin(), cycles_.end(), [&](const VertexSet& c) { return pair_in(a, c); });
}

RaagChainBuilder::Bridge RaagChainBuilder::bridge(const Pair& anchor, const VertexSet& target) const {
  const int n = static_cast<int>(cycles_.size());
  std::vector<int> parent(n, -2);
  std::deque<int> queue;
  for (int i = 0; i < n; ++i)
    if (pair_in(anchor, cycles_[i])) {
      parent[i] = -1;
      queue.push_back(i);
    }
  while (!queue.empty()) {
    int i = queue.front();
    queue.pop_front();
    if (auto goal = first_nonadjacent_pair(set_intersection(cycles_[i], target))) {
      Bridge b;
      for (int k = i; k >= 0; k = parent[k]) b.cycles.push_back(cycles_[k]);
      std::reverse(b.cycles.begin(), b.cycles.end());
      for (std::size_t k = 0; k + 1 < b.cycles.size(); ++k)
        b.pairs.push_back(*first_nonadjacent_pair(set_intersection(b.cycles[k], b.cycles[k + 1])));
      b.pairs.push_back(*goal);
      return b;
    }
    for (int j = 0; j < n; ++j)
      if (parent[j] == -2 && first_nonadjacent_pair(set_intersection(cycles_[i], cycles_[j]))) {
        parent[j] = i;
        queue.push_back(j);
      }
  }
  throw ChainError("no chain of induced cycles joins the pair " + g_.name(anchor.first) + "," +
                       g_.name(anchor.second) + " to the next subgraph",
                   0);
}

RaagChainBuilder::Partial RaagChainBuilder::enter(const VertexSet& target, const Word& p, const Word& q,
                                                  Anchor alpha, Anchor beta, int depth) {
  Partial out;
  Bridge front, back;
  if (alpha && !pair_in(*alpha, target)) {
    front = bridge(*alpha, target);
    alpha = front.pairs.back();
    log(depth, "bridge at start through " + std::to_string(front.cycles.size()) + " cycle(s)");
  }
  if (beta && !pair_in(*beta, target)) {
    back = bridge(*beta, target);
    beta = back.pairs.back();
    log(depth, "bridge at end through " + std::to_string(back.cycles.size()) + " cycle(s)");
  }
  for (std::size_t i = 0; i < front.cycles.size(); ++i) {
    out.pieces.push_back(CosetPiece{p, front.cycles[i], 0});
    out.junctions.push_back(CosetPiece{p, pair_set(front.pairs[i]), 0});
  }
  Partial sub = build(target, p, q, alpha, beta, depth);
  out.pieces.insert(out.pieces.end(), sub.pieces.begin(), sub.pieces.end());
  out.junctions.insert(out.junctions.end(), sub.junctions.begin(), sub.junctions.end());
  for (std::size_t i = back.cycles.size(); i-- > 0;) {
    out.junctions.push_back(CosetPiece{q, pair_set(back.pairs[i]), 0});
    out.pieces.push_back(CosetPiece{q, back.cycles[i], 0});
  }
  return out;
}

RaagChainBuilder::Partial RaagChainBuilder::build(const VertexSet& s, const Word& p, const Word& q, Anchor alpha,
                                                  Anchor beta, int depth) {
  const UnpinchedDecomposition& d = decomposition(s);
  const Word path = letters(p_, multiply(p_, inverse(p_, p), q));
  Partial out;
  auto splice = [&out](Partial sub) {
    out.pieces.insert(out.pieces.end(), sub.pieces.begin(), sub.pieces.end());
    out.junctions.insert(out.junctions.end(), sub.junctions.begin(), sub.junctions.end());
  };

  switch (d.kind) {
    case DecompositionCase::cycle: {
      log(depth, "cycle " + std::to_string(s.size()) + " at " + format_word(g_, p));
      out.pieces.push_back(CosetPiece{p, s, 0});
      return out;
    }
    case DecompositionCase::vertex_removal: {
      const Vertex v = *d.vertex;
      const VertexSet lambda = set_difference(s, {v});
      // each crossing of v goes through the cycle coset f * A(D), D the first
      // induced cycle of s through v; pi is v's pair of neighbours on D
      const VertexSet* dv = nullptr;
      for (const auto& cyc : cycles_)
        if (set_includes(s, cyc) && set_contains(cyc, v)) {
          dv = &cyc;
          break;
        }
      if (!dv) throw InvariantViolation("removed vertex lies on no induced cycle");
      VertexSet around = set_intersection(*dv, g_.neighbours(v));
      if (around.size() != 2 || g_.adjacent(around[0], around[1]))
        throw InvariantViolation("cycle through the removed vertex is not induced");
      const Pair pi{around[0], around[1]};
      log(depth, "remove " + g_.name(v) + ", crossing pair " + g_.name(pi.first) + "," + g_.name(pi.second));
      std::vector<Word> blocks(1);
      Word crossings;
      for (const auto& l : path) {
        if (l.v == v) {
          crossings.push_back(l);
          blocks.emplace_back();
        } else {
          blocks.back().push_back(l);
        }
      }
      Word e = p;
      for (std::size_t t = 0; t < blocks.size(); ++t) {
        const bool last = t + 1 == blocks.size();
        Word f = multiply(p_, e, blocks[t]);
        if (last && f != q) throw InvariantViolation("block walk does not end at the endpoint");
        splice(enter(lambda, e, f, t == 0 ? alpha : Anchor(pi), last ? beta : Anchor(pi), depth + 1));
        if (!last) {
          e = multiply(p_, f, {crossings[t]});
          out.junctions.push_back(CosetPiece{f, pair_set(pi), 0});
          out.pieces.push_back(CosetPiece{f, *dv, 0});
          out.junctions.push_back(CosetPiece{e, pair_set(pi), 0});
        }
      }
      return out;
    }
    case DecompositionCase::separator: {
      const VertexSet& k = *d.separator;
      std::vector<VertexSet> factors;
      for (const auto& part : d.parts) factors.push_back(set_union(normalized(part), k));
      // prefer a pair that an induced cycle passes through, so bridges exist
      Anchor kappa;
      for (std::size_t i = 0; i < k.size() && !kappa; ++i)
        for (std::size_t j = i + 1; j < k.size() && !kappa; ++j)
          if (!g_.adjacent(k[i], k[j]) && on_some_cycle({k[i], k[j]})) kappa = Pair{k[i], k[j]};
      if (!kappa) kappa = first_nonadjacent_pair(k);
      if (!kappa) throw InvariantViolation("separator is complete");
      log(depth, "amalgam over " + std::to_string(k.size()) + " vertices, junction pair " + g_.name(kappa->first) +
                     "," + g_.name(kappa->second));

      std::vector<Word> runs;
      std::vector<std::vector<int>> options;
      auto holders = [&](Vertex u) {
        std::vector<int> out_f;
        for (int i = 0; i < static_cast<int>(factors.size()); ++i)
          if (set_contains(factors[i], u)) out_f.push_back(i);
        return out_f;
      };
      std::vector<int> all_f(factors.size());
      for (int i = 0; i < static_cast<int>(factors.size()); ++i) all_f[i] = i;
      runs.emplace_back();
      options.push_back(all_f);
      for (const auto& l : path) {
        auto h = holders(l.v);
        std::vector<int> meet;
        std::set_intersection(options.back().begin(), options.back().end(), h.begin(), h.end(),
                              std::back_inserter(meet));
        if (meet.empty()) {
          runs.push_back({l});
          options.push_back(h);
        } else {
          runs.back().push_back(l);
          options.back() = meet;
        }
      }
      Word c = p;
      for (std::size_t j = 0; j < runs.size(); ++j) {
        const bool first = j == 0, last = j + 1 == runs.size();
        int choice = options[j].front();
        auto prefer = [&](const Anchor& a) {
          if (!a) return false;
          for (int f : options[j])
            if (pair_in(*a, factors[f])) {
              choice = f;
              return true;
            }
          return false;
        };
        if (!(first && prefer(alpha)) && last) prefer(beta);
        Word next = multiply(p_, c, runs[j]);
        if (last && next != q) throw InvariantViolation("run walk does not end at the endpoint");
        if (!first) out.junctions.push_back(CosetPiece{c, pair_set(*kappa), 0});
        splice(enter(factors[choice], c, next, first ? alpha : kappa, last ? beta : kappa, depth + 1));
        c = next;
      }
      return out;
    }
  }
  return out;
}

ThickChain RaagChainBuilder::build(const Word& x, const Word& y) {
  check_word(p_, x);
  check_word(p_, y);
  transcript_.clear();
  ThickChain c;
  c.presentation = p_;
  c.kind = ChainKind::raag;
  c.start = normal_form(p_, x);
  c.end = normal_form(p_, y);
  Partial whole = build(all_vertices(g_), c.start, c.end, std::nullopt, std::nullopt, 0);
  int needed = 0;
  for (const auto& piece : whole.pieces) needed = std::max(needed, piece.radius);
  c.pieces = std::move(whole.pieces);
  c.junctions = std::move(whole.junctions);
  if (c.junctions.size() + 1 != c.pieces.size()) throw InvariantViolation("chain pieces and junctions out of step");
  if (auto err = chain_failure(c)) throw InvariantViolation("constructed chain fails: " + *err);
  log(0, "construction radius " + std::to_string(needed));
  const int r = g_.size();
  c.minimal_radius = minimal_uniform_radius(c, r);
  c = with_uniform_radius(std::move(c), r);
  c.transcript = transcript_;
  return c;
}

ThickChain thick_chain_raag(const SimpleGraph& g, const Word& x, const Word& y) {
  return RaagChainBuilder(g).build(x, y);
}

}  // namespace raagsplit
