#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "raagsplit/errors.hpp"
#include "raagsplit/graph.hpp"
#include "raagsplit/qm.hpp"
#include "raagsplit/separation.hpp"
#include "raagsplit/split.hpp"
#include "raagsplit/thickness.hpp"
#include "raagsplit/words.hpp"

namespace raagsplit {

using Json = nlohmann::ordered_json;

// Malformed or ill-typed JSON. The message names the source and the
// line:column or the member path.
class JsonError : public InputError {
 public:
  using InputError::InputError;
};

Json parse_json(const std::string& text, const std::string& source);
Json read_json_file(const std::string& path);
std::string read_text_file(const std::string& path);
// Two-space indent and a trailing newline.
std::string dump(const Json& j);

// {"vertices": [..], "edges": [[u, v], ..], "weights": {u: n, ..}}. Vertex
// names may be strings or integers. A weight of 0, null or "inf" means Z;
// vertices without a weight are Z as well.
WeightedGraph graph_from_json(const Json& j, const std::string& where = "graph");
Json graph_to_json(const WeightedGraph& p);
Json graph_to_json(const SimpleGraph& g);
// "3,3" or "3,inf", one entry per vertex in declaration order.
std::vector<long> parse_weights_csv(const SimpleGraph& g, const std::string& csv);

// [["a", 2], ["b", -1]]
Word word_from_json(const SimpleGraph& g, const Json& j, const std::string& where = "word");
Json word_to_json(const SimpleGraph& g, const Word& w);

VertexSet vertex_set_from_json(const SimpleGraph& g, const Json& j, const std::string& where);
Json vertex_set_to_json(const SimpleGraph& g, const VertexSet& s);

Json certificate_to_json(const SimpleGraph& g, const SplitCertificate& c);
SplitCertificate certificate_from_json(const SimpleGraph& g, const Json& j);

Json cut_tree_to_json(const SimpleGraph& g, const CutTree& t);
CutTree cut_tree_from_json(const SimpleGraph& g, const Json& j);

Json decomposition_to_json(const SimpleGraph& g, const UnpinchedDecomposition& d);
UnpinchedDecomposition decomposition_from_json(const SimpleGraph& g, const Json& j);

Json obstruction_to_json(const SimpleGraph& source, const SimpleGraph& target, const ObstructionReport& r);

Json ball_to_json(const QMBall& b, const HyperplaneSystem* hs);

Json chain_to_json(const ThickChain& c);
ThickChain chain_from_json(const Json& j);

// Vertex names are those of x.
Json witness_to_json(const MetricGraph& x, const SeparationWitness& w);
SeparationWitness witness_from_json(const MetricGraph& x, const Json& j);
VertexSet metric_set_from_json(const MetricGraph& x, const Json& j, const std::string& where);
Json metric_set_to_json(const MetricGraph& x, const VertexSet& s);

Json growth_to_json(const GrowthProfile& g);

}  // namespace raagsplit
