#pragma once

#include <optional>
#include <random>
#include <string>
#include <set>
#include <vector>

#include "enumerate.hpp"
#include "raagsplit/graph.hpp"
#include "raagsplit/separation.hpp"
#include "raagsplit/split.hpp"
#include "raagsplit/words.hpp"

namespace raagsplit::testing {

// Exhaustive over all 2^n vertex subsets: the least complete separating set
// by (size, sorted list), or nullopt.
std::optional<VertexSet> brute_force_separating_clique(const SmallGraph& g);
SplitVerdict brute_force_verdict(const SmallGraph& g);
SmallGraph to_small(const SimpleGraph& g);

// Every word reachable from w by merging adjacent same-vertex syllables and
// swapping adjacent commuting ones, keeping only those of least length.
std::set<Word> move_closure_minima(const WeightedGraph& p, const Word& w);
bool closure_equal(const WeightedGraph& p, const Word& a, const Word& b);

// Brute force: w lies within r of rep * <P> iff rep^-1 w u^-1 reduces into P
// for some word u of at most r standard letters.
bool brute_force_in_coset_neighbourhood(const WeightedGraph& p, const Word& rep, const VertexSet& parabolic,
                                        const Word& w, int r);

// Pairwise distance matrix plus repeated merging until nothing changes.
std::vector<VertexSet> closure_coarse_components(const MetricGraph& x, const VertexSet& ambient,
                                                 const VertexSet& z, long k, long l);

// Backtracking isomorphism search, pruned by colour refinement. Adjacency
// lists must be symmetric.
using AdjacencyLists = std::vector<std::vector<int>>;
bool isomorphic(const AdjacencyLists& a, const AdjacencyLists& b);

SimpleGraph load_fixture(const std::string& name);
WeightedGraph load_weighted_fixture(const std::string& name);

Word random_word(std::mt19937_64& rng, const WeightedGraph& p, int max_syllables, long max_exp);

}  // namespace raagsplit::testing
