#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "raagsplit/graph.hpp"
#include "raagsplit/split.hpp"
#include "raagsplit/words.hpp"

namespace raagsplit {

// The coset rep * <subgraph>, thickened by `radius` in the standard word metric.
struct CosetPiece {
  Word rep;
  VertexSet subgraph;
  int radius = 0;
};

enum class ChainKind { coset, raag };
std::string to_string(ChainKind k);
ChainKind chain_kind_from_string(const std::string& s);

struct ThickChain {
  WeightedGraph presentation;
  ChainKind kind = ChainKind::coset;
  std::vector<CosetPiece> pieces;
  std::vector<CosetPiece> junctions;  // junctions[i] sits in pieces[i] and pieces[i+1]
  Word start, end;
  std::vector<std::string> transcript;
  // smallest uniform piece radius at which the chain still verifies
  std::optional<int> minimal_radius;
};

class ChainError : public std::runtime_error {
 public:
  ChainError(const std::string& what, int step) : std::runtime_error(what), step_(step) {}
  int step() const { return step_; }

 private:
  int step_;
};

// The syllables of w that cannot be shuffled to the front into <P>; w must
// be reduced. Its standard length is the distance from w to <P>.
Word parabolic_remainder(const WeightedGraph& p, const VertexSet& parabolic, const Word& w);

// Distance from w to the coset rep * <P>.
long coset_distance(const WeightedGraph& p, const Word& rep, const VertexSet& parabolic, const Word& w);
bool in_piece(const WeightedGraph& p, const CosetPiece& piece, const Word& w);

// Symbolic test that the coset junction.rep * <junction.subgraph>, thickened by
// junction.radius, lies in the piece: the junction subgraph sits in the piece
// subgraph and commutes with the remainder u of rep(piece)^-1 rep(junction),
// and |u| + junction.radius <= piece.radius.
bool junction_in_piece(const WeightedGraph& p, const CosetPiece& junction, const CosetPiece& piece);

ThickChain coset_chain(const WeightedGraph& p, const VertexSet& h_subgraph, const Word& g1,
                       const Word& g2);

// nullopt when the chain verifies, otherwise the first failing check.
std::optional<std::string> chain_failure(const ThickChain& c);
bool verify_chain(const ThickChain& c);

ThickChain with_uniform_radius(ThickChain c, int r);
ThickChain inflated(ThickChain c, int by);
std::optional<int> minimal_uniform_radius(const ThickChain& c, int limit);

// Chains of cycle-parabolic pieces for A(g), g triangle-free and unpinched.
// Decompositions are cached per subgraph, so one builder
// can serve many endpoint pairs.
class RaagChainBuilder {
 public:
  explicit RaagChainBuilder(SimpleGraph g);
  ThickChain build(const Word& x, const Word& y);
  const WeightedGraph& presentation() const { return p_; }

 private:
  using Pair = std::pair<Vertex, Vertex>;
  using Anchor = std::optional<Pair>;
  struct Partial {
    std::vector<CosetPiece> pieces;
    std::vector<CosetPiece> junctions;
  };
  struct Bridge {
    std::vector<VertexSet> cycles;
    std::vector<Pair> pairs;  // pairs[i] joins cycles[i] to the next; the last enters the target
  };

  // Every anchor pair lies on some induced cycle of the whole graph.
  Partial build(const VertexSet& s, const Word& p, const Word& q, Anchor alpha, Anchor beta, int depth);
  // Sub-chain on `target` from p to q, bridged through induced cycles
  // whenever an anchor does not lie in target.
  Partial enter(const VertexSet& target, const Word& p, const Word& q, Anchor alpha, Anchor beta, int depth);
  Bridge bridge(const Pair& anchor, const VertexSet& target) const;
  const UnpinchedDecomposition& decomposition(const VertexSet& s);
  std::optional<Pair> first_nonadjacent_pair(const VertexSet& s) const;
  bool on_some_cycle(const Pair& a) const;
  void log(int depth, const std::string& msg);

  SimpleGraph g_;
  WeightedGraph p_;
  std::vector<VertexSet> cycles_;  // induced cycles, by length then vertex set
  std::map<VertexSet, UnpinchedDecomposition> decomp_;
  std::vector<std::string> transcript_;
};

ThickChain thick_chain_raag(const SimpleGraph& g, const Word& x, const Word& y);

}  // namespace raagsplit
