#include "raagsplit/io.hpp"

#include <fstream>
#include <sstream>

namespace raagsplit {

namespace {

[[noreturn]] void fail(const std::string& where, const std::string& what) { throw JsonError(where + ": " + what); }

const Json& member(const Json& j, const char* key, const std::string& where) {
  if (!j.is_object()) fail(where, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) fail(where, std::string("missing member \"") + key + "\"");
  return *it;
}

std::string name_of(const Json& j, const std::string& where) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_number_integer()) return std::to_string(j.get<long long>());
  fail(where, "vertex names must be strings or integers");
}

long integer(const Json& j, const std::string& where) {
  if (!j.is_number_integer()) fail(where, "expected an integer");
  return j.get<long>();
}

const Json& array(const Json& j, const std::string& where) {
  if (!j.is_array()) fail(where, "expected an array");
  return j;
}

long order_of(const Json& j, const std::string& where) {
  if (j.is_null()) return 0;
  if (j.is_string()) {
    if (j.get<std::string>() == "inf") return 0;
    fail(where, "weight must be an integer >= 2, 0, null or \"inf\"");
  }
  const long n = integer(j, where);
  if (n != 0 && n < 2) fail(where, "weight must be an integer >= 2, 0, null or \"inf\"");
  return n;
}

Json order_json(long n) { return n == 0 ? Json("inf") : Json(n); }

std::vector<std::string> transcript_from_json(const Json& j, const std::string& where) {
  std::vector<std::string> out;
  for (const auto& line : array(j, where)) {
    if (!line.is_string()) fail(where, "transcript lines must be strings");
    out.push_back(line.get<std::string>());
  }
  return out;
}

}  // namespace

Json parse_json(const std::string& text, const std::string& source) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    // drop the "[json.exception.parse_error.N] " prefix; the rest carries line and column
    std::string msg = e.what();
    if (auto p = msg.find("] "); p != std::string::npos) msg = msg.substr(p + 2);
    throw JsonError(source + ": " + msg);
  }
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Json read_json_file(const std::string& path) { return parse_json(read_text_file(path), path); }

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

WeightedGraph graph_from_json(const Json& j, const std::string& where) {
  std::vector<std::string> names;
  const Json& vs = array(member(j, "vertices", where), where + ".vertices");
  for (std::size_t i = 0; i < vs.size(); ++i) names.push_back(name_of(vs[i], where + ".vertices[" + std::to_string(i) + "]"));
  std::vector<std::pair<std::string, std::string>> edges;
  if (j.contains("edges")) {
    const Json& es = array(j["edges"], where + ".edges");
    for (std::size_t i = 0; i < es.size(); ++i) {
      const std::string at = where + ".edges[" + std::to_string(i) + "]";
      if (!es[i].is_array() || es[i].size() != 2) fail(at, "an edge is a pair [u, v]");
      edges.emplace_back(name_of(es[i][0], at), name_of(es[i][1], at));
    }
  }
  SimpleGraph g;
  try {
    g = SimpleGraph(names, edges);
  } catch (const InputError& e) {
    fail(where, e.what());
  }
  std::vector<long> order(g.size(), 0);
  if (j.contains("weights") && !j["weights"].is_null()) {
    const Json& ws = j["weights"];
    if (!ws.is_object()) fail(where + ".weights", "expected an object");
    for (auto it = ws.begin(); it != ws.end(); ++it) {
      auto v = g.find(it.key());
      if (!v) fail(where + ".weights", "unknown vertex '" + it.key() + "'");
      order[*v] = order_of(it.value(), where + ".weights." + it.key());
    }
  }
  return WeightedGraph(std::move(g), std::move(order));
}

Json graph_to_json(const SimpleGraph& g) {
  Json j;
  j["vertices"] = g.names();
  Json es = Json::array();
  for (auto [u, v] : g.edges()) es.push_back({g.name(u), g.name(v)});
  j["edges"] = es;
  return j;
}

Json graph_to_json(const WeightedGraph& p) {
  Json j = graph_to_json(p.graph);
  if (std::any_of(p.order.begin(), p.order.end(), [](long n) { return n != 0; })) {
    Json ws = Json::object();
    for (Vertex v = 0; v < p.size(); ++v) ws[p.graph.name(v)] = order_json(p.order[v]);
    j["weights"] = ws;
  }
  return j;
}

std::vector<long> parse_weights_csv(const SimpleGraph& g, const std::string& csv) {
  std::vector<long> out;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item == "inf" || item == "0") {
      out.push_back(0);
      continue;
    }
    std::size_t used = 0;
    long n = 0;
    try {
      n = std::stol(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != item.size() || n < 2) throw InputError("bad weight '" + item + "' in --weights");
    out.push_back(n);
  }
  if (static_cast<int>(out.size()) != g.size())
    throw InputError("--weights lists " + std::to_string(out.size()) + " values for " + std::to_string(g.size()) +
                     " vertices");
  return out;
}

Word word_from_json(const SimpleGraph& g, const Json& j, const std::string& where) {
  Word w;
  array(j, where);
  for (std::size_t i = 0; i < j.size(); ++i) {
    const std::string at = where + "[" + std::to_string(i) + "]";
    if (!j[i].is_array() || j[i].size() != 2) fail(at, "a syllable is [vertex, exponent]");
    const std::string name = name_of(j[i][0], at);
    auto v = g.find(name);
    if (!v) fail(at, "unknown vertex '" + name + "'");
    w.push_back({*v, integer(j[i][1], at)});
  }
  return w;
}

Json word_to_json(const SimpleGraph& g, const Word& w) {
  Json j = Json::array();
  for (const auto& s : w) j.push_back({g.name(s.v), s.exp});
  return j;
}

VertexSet vertex_set_from_json(const SimpleGraph& g, const Json& j, const std::string& where) {
  VertexSet s;
  array(j, where);
  for (std::size_t i = 0; i < j.size(); ++i) {
    const std::string name = name_of(j[i], where + "[" + std::to_string(i) + "]");
    auto v = g.find(name);
    if (!v) fail(where, "unknown vertex '" + name + "'");
    s.push_back(*v);
  }
  return normalized(s);
}

Json vertex_set_to_json(const SimpleGraph& g, const VertexSet& s) { return g.names_of(s); }

Json certificate_to_json(const SimpleGraph& g, const SplitCertificate& c) {
  Json j;
  j["verdict"] = to_string(c.verdict);
  j["witness"] = c.witness ? vertex_set_to_json(g, *c.witness) : Json();
  Json comps = Json::array();
  if (c.components)
    for (const auto& comp : *c.components) comps.push_back(vertex_set_to_json(g, comp));
  j["components"] = c.components ? comps : Json();
  return j;
}

SplitCertificate certificate_from_json(const SimpleGraph& g, const Json& j) {
  SplitCertificate c;
  const Json& v = member(j, "verdict", "certificate");
  if (!v.is_string()) fail("certificate.verdict", "expected a string");
  try {
    c.verdict = split_verdict_from_string(v.get<std::string>());
  } catch (const InputError& e) {
    fail("certificate.verdict", e.what());
  }
  if (j.contains("witness") && !j["witness"].is_null())
    c.witness = vertex_set_from_json(g, j["witness"], "certificate.witness");
  if (j.contains("components") && !j["components"].is_null()) {
    std::vector<VertexSet> comps;
    const Json& cs = array(j["components"], "certificate.components");
    for (std::size_t i = 0; i < cs.size(); ++i)
      comps.push_back(vertex_set_from_json(g, cs[i], "certificate.components[" + std::to_string(i) + "]"));
    c.components = comps;
  }
  return c;
}

Json cut_tree_to_json(const SimpleGraph& g, const CutTree& t) {
  Json nodes = Json::array();
  for (const auto& n : t.nodes) nodes.push_back({{"id", n.id}, {"piece", vertex_set_to_json(g, n.piece)}});
  Json edges = Json::array();
  for (auto [a, b] : t.edges) edges.push_back({a, b});
  return {{"nodes", nodes}, {"edges", edges}};
}

CutTree cut_tree_from_json(const SimpleGraph& g, const Json& j) {
  CutTree t;
  const Json& nodes = array(member(j, "nodes", "cut_tree"), "cut_tree.nodes");
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    const std::string at = "cut_tree.nodes[" + std::to_string(i) + "]";
    t.nodes.push_back({static_cast<int>(integer(member(nodes[i], "id", at), at + ".id")),
                       vertex_set_from_json(g, member(nodes[i], "piece", at), at + ".piece")});
  }
  const Json& edges = array(member(j, "edges", "cut_tree"), "cut_tree.edges");
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const std::string at = "cut_tree.edges[" + std::to_string(i) + "]";
    if (!edges[i].is_array() || edges[i].size() != 2) fail(at, "a tree edge is a pair [i, j]");
    t.edges.emplace_back(static_cast<int>(integer(edges[i][0], at)), static_cast<int>(integer(edges[i][1], at)));
  }
  return t;
}

Json decomposition_to_json(const SimpleGraph& g, const UnpinchedDecomposition& d) {
  Json j;
  j["case"] = to_string(d.kind);
  j["vertex"] = d.vertex ? Json(g.name(*d.vertex)) : Json();
  j["separator"] = d.separator ? vertex_set_to_json(g, *d.separator) : Json();
  Json parts = Json::array();
  for (const auto& p : d.parts) parts.push_back(vertex_set_to_json(g, normalized(p)));
  j["parts"] = parts;
  j["grown_core"] = vertex_set_to_json(g, d.grown_core);
  j["transcript"] = d.transcript;
  return j;
}

UnpinchedDecomposition decomposition_from_json(const SimpleGraph& g, const Json& j) {
  UnpinchedDecomposition d;
  const Json& kind = member(j, "case", "decomposition");
  if (!kind.is_string()) fail("decomposition.case", "expected a string");
  try {
    d.kind = decomposition_case_from_string(kind.get<std::string>());
  } catch (const InputError& e) {
    fail("decomposition.case", e.what());
  }
  if (j.contains("vertex") && !j["vertex"].is_null()) {
    const std::string name = name_of(j["vertex"], "decomposition.vertex");
    auto v = g.find(name);
    if (!v) fail("decomposition.vertex", "unknown vertex '" + name + "'");
    d.vertex = *v;
  }
  if (j.contains("separator") && !j["separator"].is_null())
    d.separator = vertex_set_from_json(g, j["separator"], "decomposition.separator");
  if (j.contains("parts")) {
    const Json& ps = array(j["parts"], "decomposition.parts");
    for (std::size_t i = 0; i < ps.size(); ++i)
      d.parts.push_back(vertex_set_from_json(g, ps[i], "decomposition.parts[" + std::to_string(i) + "]"));
  }
  if (j.contains("grown_core")) d.grown_core = vertex_set_from_json(g, j["grown_core"], "decomposition.grown_core");
  if (j.contains("transcript")) d.transcript = transcript_from_json(j["transcript"], "decomposition.transcript");
  return d;
}

namespace {

Json pieces_json(const SimpleGraph& g, const std::vector<PieceInvariants>& ps) {
  Json out = Json::array();
  for (const auto& p : ps)
    out.push_back({{"node", p.node},
                   {"piece", vertex_set_to_json(g, p.piece)},
                   {"clique_number", p.clique_number},
                   {"vertex_count", p.vertex_count},
                   {"exponential_growth", p.exponential_growth}});
  return out;
}

}  // namespace

Json obstruction_to_json(const SimpleGraph& source, const SimpleGraph& target, const ObstructionReport& r) {
  Json j;
  j["verdict"] = r.obstructed() ? "no-coarse-embedding" : "no-obstruction-found";
  j["source_tree"] = cut_tree_to_json(source, r.source_tree);
  j["target_tree"] = cut_tree_to_json(target, r.target_tree);
  j["source_pieces"] = pieces_json(source, r.source_pieces);
  j["target_pieces"] = pieces_json(target, r.target_pieces);
  Json adm = Json::array();
  for (const auto& a : r.admissible) adm.push_back({{"source_node", a.source_node}, {"targets", a.admissible_targets}});
  j["admissible"] = adm;
  j["no_admissible_piece"] = r.no_admissible_piece;
  return j;
}

Json ball_to_json(const QMBall& b, const HyperplaneSystem* hs) {
  const SimpleGraph& g = b.presentation.graph;
  Json j;
  j["radius"] = b.radius;
  Json vs = Json::array();
  for (const auto& w : b.vertices) vs.push_back(word_to_json(g, w));
  j["vertices"] = vs;
  Json es = Json::array();
  for (const auto& e : b.edges) es.push_back({e.a, e.b, g.name(e.label), e.weight});
  j["edges"] = es;
  if (hs) {
    Json hj = Json::array();
    for (const auto& h : hs->hyperplanes) hj.push_back({{"label", g.name(h.label)}, {"edges", h.edges}, {"sectors", h.sectors()}});
    j["hyperplanes"] = hj;
  }
  return j;
}

namespace {

Json pieces_json(const SimpleGraph& g, const std::vector<CosetPiece>& ps) {
  Json out = Json::array();
  for (const auto& p : ps)
    out.push_back({{"rep", word_to_json(g, p.rep)}, {"subgraph", vertex_set_to_json(g, p.subgraph)}, {"radius", p.radius}});
  return out;
}

std::vector<CosetPiece> pieces_from_json(const SimpleGraph& g, const Json& j, const std::string& where) {
  std::vector<CosetPiece> out;
  array(j, where);
  for (std::size_t i = 0; i < j.size(); ++i) {
    const std::string at = where + "[" + std::to_string(i) + "]";
    CosetPiece p;
    p.rep = word_from_json(g, member(j[i], "rep", at), at + ".rep");
    p.subgraph = vertex_set_from_json(g, member(j[i], "subgraph", at), at + ".subgraph");
    p.radius = static_cast<int>(integer(member(j[i], "radius", at), at + ".radius"));
    if (p.radius < 0) fail(at + ".radius", "must be non-negative");
    out.push_back(std::move(p));
  }
  return out;
}

}  // namespace

Json chain_to_json(const ThickChain& c) {
  const SimpleGraph& g = c.presentation.graph;
  Json j;
  j["chain_kind"] = to_string(c.kind);
  j["graph"] = graph_to_json(c.presentation);
  j["start"] = word_to_json(g, c.start);
  j["end"] = word_to_json(g, c.end);
  j["pieces"] = pieces_json(g, c.pieces);
  j["junctions"] = pieces_json(g, c.junctions);
  j["minimal_radius"] = c.minimal_radius ? Json(*c.minimal_radius) : Json();
  j["transcript"] = c.transcript;
  return j;
}

ThickChain chain_from_json(const Json& j) {
  ThickChain c;
  const Json& kind = member(j, "chain_kind", "chain");
  if (!kind.is_string()) fail("chain.chain_kind", "expected a string");
  try {
    c.kind = chain_kind_from_string(kind.get<std::string>());
  } catch (const InputError& e) {
    fail("chain.chain_kind", e.what());
  }
  c.presentation = graph_from_json(member(j, "graph", "chain"), "chain.graph");
  const SimpleGraph& g = c.presentation.graph;
  c.start = word_from_json(g, member(j, "start", "chain"), "chain.start");
  c.end = word_from_json(g, member(j, "end", "chain"), "chain.end");
  c.pieces = pieces_from_json(g, member(j, "pieces", "chain"), "chain.pieces");
  c.junctions = pieces_from_json(g, member(j, "junctions", "chain"), "chain.junctions");
  if (j.contains("minimal_radius") && !j["minimal_radius"].is_null())
    c.minimal_radius = static_cast<int>(integer(j["minimal_radius"], "chain.minimal_radius"));
  if (j.contains("transcript")) c.transcript = transcript_from_json(j["transcript"], "chain.transcript");
  return c;
}

VertexSet metric_set_from_json(const MetricGraph& x, const Json& j, const std::string& where) {
  std::map<std::string, int> index;
  for (int v = 0; v < x.size(); ++v) index.emplace(x.name(v), v);
  VertexSet s;
  array(j, where);
  for (std::size_t i = 0; i < j.size(); ++i) {
    const std::string name = name_of(j[i], where + "[" + std::to_string(i) + "]");
    auto it = index.find(name);
    if (it == index.end()) fail(where, "unknown vertex '" + name + "'");
    s.push_back(it->second);
  }
  return normalized(s);
}

Json metric_set_to_json(const MetricGraph& x, const VertexSet& s) {
  Json j = Json::array();
  for (int v : s) j.push_back(x.name(v));
  return j;
}

Json witness_to_json(const MetricGraph& x, const SeparationWitness& w) {
  Json j;
  j["separator"] = metric_set_to_json(x, w.z);
  j["k"] = w.k;
  j["L"] = w.l;
  j["D"] = w.d;
  Json comps = Json::array(), deep = Json::array();
  for (const auto& c : w.components) comps.push_back(metric_set_to_json(x, c));
  for (const auto& d : w.deep_points) deep.push_back(metric_set_to_json(x, d));
  j["components"] = comps;
  j["deep_points"] = deep;
  return j;
}

SeparationWitness witness_from_json(const MetricGraph& x, const Json& j) {
  SeparationWitness w;
  w.z = metric_set_from_json(x, member(j, "separator", "witness"), "witness.separator");
  w.k = integer(member(j, "k", "witness"), "witness.k");
  w.l = integer(member(j, "L", "witness"), "witness.L");
  w.d = integer(member(j, "D", "witness"), "witness.D");
  const Json& comps = array(member(j, "components", "witness"), "witness.components");
  for (std::size_t i = 0; i < comps.size(); ++i)
    w.components.push_back(metric_set_from_json(x, comps[i], "witness.components[" + std::to_string(i) + "]"));
  const Json& deep = array(member(j, "deep_points", "witness"), "witness.deep_points");
  for (std::size_t i = 0; i < deep.size(); ++i)
    w.deep_points.push_back(metric_set_from_json(x, deep[i], "witness.deep_points[" + std::to_string(i) + "]"));
  return w;
}

Json growth_to_json(const GrowthProfile& g) {
  return {{"radii", g.radii},
          {"values", g.values},
          {"classification", g.exponential ? "exponential" : "subexponential"},
          {"advisory", true},
          {"slope", g.slope},
          {"exponential_residual", g.exponential_residual},
          {"power_residual", g.power_residual}};
}

}  // namespace raagsplit
