#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "raagsplit/graph.hpp"

namespace raagsplit {

enum class SplitVerdict { complete, splits_over_abelian, no_abelian_splitting };

std::string to_string(SplitVerdict v);
SplitVerdict split_verdict_from_string(const std::string& s);

struct SplitCertificate {
  SplitVerdict verdict = SplitVerdict::complete;
  std::optional<VertexSet> witness;
  std::optional<std::vector<VertexSet>> components;
};

struct CutTreeNode {
  int id = 0;
  VertexSet piece;
};

struct CutTree {
  std::vector<CutTreeNode> nodes;
  std::vector<std::pair<int, int>> edges;
};

enum class DecompositionCase { vertex_removal, separator, cycle };

std::string to_string(DecompositionCase c);
DecompositionCase decomposition_case_from_string(const std::string& s);

struct UnpinchedDecomposition {
  DecompositionCase kind = DecompositionCase::cycle;
  std::optional<Vertex> vertex;
  std::optional<VertexSet> separator;
  std::vector<VertexSet> parts;
  // the maximal proper unpinched subgraph Q' used by the construction, if any
  VertexSet grown_core;
  std::vector<std::string> transcript;
};

struct PieceInvariants {
  int node = 0;
  VertexSet piece;
  int clique_number = 0;
  int vertex_count = 0;
  bool exponential_growth = false;  // iff the piece is not complete
};

struct PieceAdmissibility {
  int source_node = 0;
  std::vector<int> admissible_targets;
};

struct ObstructionReport {
  CutTree source_tree;
  CutTree target_tree;
  std::vector<PieceInvariants> source_pieces;
  std::vector<PieceInvariants> target_pieces;
  std::vector<PieceAdmissibility> admissible;
  // source nodes (non-complete pieces) without any admissible target piece
  std::vector<int> no_admissible_piece;
  bool obstructed() const { return !no_admissible_piece.empty(); }
};

// Smallest complete subset (by size, then lexicographic) whose removal leaves
// a disconnected graph; the empty set counts.
std::optional<VertexSet> minimum_separating_clique(const SimpleGraph& g);

bool is_unpinched(const SimpleGraph& g);
SplitCertificate classify_splitting(const SimpleGraph& g);
bool check_split_certificate(const SimpleGraph& g, const SplitCertificate& c);

CutTree complete_cut_decomposition(const SimpleGraph& g);
// Checks the three structural invariants plus tree shape; returns a
// description of the first failure, or nullopt when valid.
std::optional<std::string> validate_cut_tree(const SimpleGraph& g, const CutTree& t);

UnpinchedDecomposition unpinched_decomposition(const SimpleGraph& g);
std::optional<std::string> validate_unpinched_decomposition(const SimpleGraph& g,
                                                            const UnpinchedDecomposition& d);

// A path attachment lists [a, interior..., b] with a, b in the core; a single
// vertex outside the core is a vertex attachment.
using Attachment = std::vector<Vertex>;
bool attach_preserves_unpinched(const SimpleGraph& host, const VertexSet& core,
                                const Attachment& attachment);

std::vector<SimpleGraph> triangle_reduction_step(const SimpleGraph& g, Vertex v);

ObstructionReport embedding_obstruction(const SimpleGraph& source, const SimpleGraph& target);

}  // namespace raagsplit
