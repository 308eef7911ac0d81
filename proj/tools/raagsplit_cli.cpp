// raagsplit: batch front-end over the library.
//
// Exit codes: 0 success, 1 negative verdict (no abelian splitting, no
// separation witness, no ray, obstruction found, certificate rejected),
// 2 input error, 3 resource cap exceeded, 4 internal error.

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "raagsplit/io.hpp"

using namespace raagsplit;
namespace fs = std::filesystem;

namespace {

enum Exit { kOk = 0, kNegative = 1, kInput = 2, kResource = 3, kInternal = 4 };

struct Common {
  std::string out;
  std::string format = "json";
};

void add_common(CLI::App* sub, Common& c) {
  sub->add_option("--out", c.out, "Write the result here instead of stdout");
  sub->add_option("--format", c.format, "json or text")->check(CLI::IsMember({"json", "text"}));
}

std::string scalar_text(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_array()) {
    bool flat = std::all_of(v.begin(), v.end(), [](const Json& e) { return e.is_primitive(); });
    if (flat && v.size() <= 16) {
      std::string s;
      for (const auto& e : v) s += (s.empty() ? "" : " ") + scalar_text(e);
      return "[" + s + "]";
    }
    return std::to_string(v.size()) + " entries";
  }
  if (v.is_object()) return std::to_string(v.size()) + " members";
  return v.dump();
}

// One "key: value" line per top-level member; nested data is summarized.
std::string text_report(const Json& j) {
  std::string s;
  for (auto it = j.begin(); it != j.end(); ++it) {
    if (it.key() == "graph" || it.key() == "transcript") continue;
    s += it.key() + ": " + scalar_text(it.value()) + "\n";
  }
  if (j.contains("transcript"))
    for (const auto& line : j["transcript"]) s += "  " + line.get<std::string>() + "\n";
  return s;
}

void emit(const Common& c, const std::string& text) {
  if (c.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(c.out, std::ios::binary);
  if (!f) throw InputError("cannot write " + c.out);
  f << text;
}

void emit(const Common& c, const Json& j) { emit(c, c.format == "text" ? text_report(j) : dump(j)); }

WeightedGraph load_graph(const std::string& path, const std::string& weights) {
  WeightedGraph p = graph_from_json(read_json_file(path), path);
  if (!weights.empty()) p = WeightedGraph(p.graph, parse_weights_csv(p.graph, weights));
  return p;
}

// "a^2 b^-1 c"; a lone "1" is the identity unless 1 names a vertex.
Word parse_word_text(const SimpleGraph& g, const std::string& text) {
  Word w;
  std::istringstream ss(text);
  std::string tok;
  while (ss >> tok) {
    if (tok == "1" && !g.find("1")) continue;
    std::string name = tok;
    long exp = 1;
    if (auto hat = tok.find('^'); hat != std::string::npos) {
      name = tok.substr(0, hat);
      try {
        std::size_t used = 0;
        exp = std::stol(tok.substr(hat + 1), &used);
        if (used != tok.size() - hat - 1) throw std::invalid_argument(tok);
      } catch (const std::exception&) {
        throw InputError("bad exponent in '" + tok + "'");
      }
    }
    auto v = g.find(name);
    if (!v) throw InputError("unknown vertex '" + name + "' in word");
    w.push_back({*v, exp});
  }
  return w;
}

// Inline JSON list, a word file ({"word": [...]} or a bare list), or text.
Word load_word(const SimpleGraph& g, const std::string& arg) {
  const auto first = arg.find_first_not_of(" \t\n");
  if (first != std::string::npos && arg[first] == '[') return word_from_json(g, parse_json(arg, "word"), "word");
  if (fs::is_regular_file(arg)) {
    Json j = read_json_file(arg);
    return word_from_json(g, j.is_object() ? j.value("word", Json()) : j, arg);
  }
  return parse_word_text(g, arg);
}

Json tagged(const char* kind, const WeightedGraph& p) {
  Json j;
  j["kind"] = kind;
  j["graph"] = graph_to_json(p);
  return j;
}

void merge(Json& into, const Json& from) {
  for (auto it = from.begin(); it != from.end(); ++it) into[it.key()] = it.value();
}

// ---- classify / cut-tree / decompose / obstruct ----

Json classify_json(const WeightedGraph& p) {
  Json j = tagged("classify", p);
  merge(j, certificate_to_json(p.graph, classify_splitting(p.graph)));
  return j;
}

Json cut_tree_json(const WeightedGraph& p) {
  Json j = tagged("cut-tree", p);
  merge(j, cut_tree_to_json(p.graph, complete_cut_decomposition(p.graph)));
  return j;
}

Json decompose_json(const WeightedGraph& p) {
  Json j = tagged("decompose", p);
  merge(j, decomposition_to_json(p.graph, unpinched_decomposition(p.graph)));
  return j;
}

Json obstruct_json(const WeightedGraph& s, const WeightedGraph& t) {
  Json j;
  j["kind"] = "obstruct";
  j["source"] = graph_to_json(s);
  j["target"] = graph_to_json(t);
  merge(j, obstruction_to_json(s.graph, t.graph, embedding_obstruction(s.graph, t.graph)));
  return j;
}

// ---- words ----

Json normal_form_json(const WeightedGraph& p, const Word& w) {
  Json j = tagged("normal-form", p);
  const Word nf = normal_form(p, w);
  j["input"] = word_to_json(p.graph, w);
  j["normal_form"] = word_to_json(p.graph, nf);
  j["text"] = format_word(p.graph, nf);
  j["syllable_length"] = syllable_length(p, nf);
  j["word_length"] = word_metric_length(p, nf);
  return j;
}

// ---- quasi-median balls ----

Json ball_json(const WeightedGraph& p, int radius, double cap, bool with_hyperplanes) {
  QMBall b = build_ball(p, radius, cap);
  Json j = tagged("ball", p);
  j["vertex_count"] = b.size();
  j["edge_count"] = b.edges.size();
  if (with_hyperplanes) {
    HyperplaneSystem hs = hyperplanes(b);
    j["hyperplane_count"] = hs.hyperplanes.size();
    j["with_hyperplanes"] = true;
    merge(j, ball_to_json(b, &hs));
  } else {
    j["with_hyperplanes"] = false;
    merge(j, ball_to_json(b, nullptr));
  }
  return j;
}

Json hyperplanes_json(const WeightedGraph& p, int radius, double cap) {
  QMBall b = build_ball(p, radius, cap);
  HyperplaneSystem hs = hyperplanes(b);
  Json j = tagged("hyperplanes", p);
  j["radius"] = radius;
  j["vertex_count"] = b.size();
  j["hyperplane_count"] = hs.hyperplanes.size();
  Json list = Json::array();
  for (const auto& h : hs.hyperplanes)
    list.push_back({{"id", h.id},
                    {"label", p.graph.name(h.label)},
                    {"edge_count", h.edges.size()},
                    {"sector_count", h.sector_count},
                    {"carrier_size", h.carrier.size()},
                    {"fibre_count", h.fibres.size()}});
  j["hyperplanes"] = list;
  return j;
}

// ---- thickness ----

Json chain_json(const WeightedGraph& p, const Word& x, const Word& y) {
  if (std::any_of(p.order.begin(), p.order.end(), [](long n) { return n != 0; }))
    throw InputError("thick chains are built for right-angled Artin groups; drop the weights");
  Json j;
  j["kind"] = "thick-chain";
  merge(j, chain_to_json(thick_chain_raag(p.graph, x, y)));
  return j;
}

// ---- separation ----

struct Space {
  WeightedGraph presentation;
  std::optional<int> radius;  // set for a Cayley ball of the presentation
  MetricGraph x;
  std::optional<CayleyBall> ball;
};

Space build_space(const WeightedGraph& p, std::optional<int> radius, std::size_t cap) {
  Space s;
  s.presentation = p;
  s.radius = radius;
  if (radius) {
    s.ball = standard_cayley_ball(p, *radius, cap);
    s.x = s.ball->graph;
  } else {
    s.x = MetricGraph::from_graph(p.graph);
  }
  return s;
}

// A list of vertex names, or {"coset": [subgraph names], "rep": word} for the
// part of a parabolic coset inside a Cayley ball.
VertexSet space_set(const Space& s, const Json& j, const std::string& where) {
  if (j.is_object() && j.contains("coset")) {
    if (!s.ball) throw JsonError(where + ": cosets need a Cayley ball (set \"radius\")");
    const SimpleGraph& g = s.presentation.graph;
    const VertexSet sub = vertex_set_from_json(g, j["coset"], where + ".coset");
    const Word rep = j.contains("rep") ? normal_form(s.presentation, word_from_json(g, j["rep"], where + ".rep")) : Word{};
    VertexSet out;
    for (int v = 0; v < s.x.size(); ++v)
      if (coset_distance(s.presentation, rep, sub, s.ball->elements[v]) == 0) out.push_back(v);
    return out;
  }
  return metric_set_from_json(s.x, j, where);
}

VertexSet everything(const MetricGraph& x) {
  VertexSet all(x.size());
  for (int v = 0; v < x.size(); ++v) all[v] = v;
  return all;
}

long manifest_integer(const Json& e, const char* key, const std::string& where) {
  if (!e.contains(key)) throw JsonError(where + ": missing member \"" + key + "\"");
  if (!e[key].is_number_integer() || e[key].get<long>() < 0)
    throw JsonError(where + "." + key + ": expected a non-negative integer");
  return e[key].get<long>();
}

// Runs one experiment; the returned record is self-contained so that
// `verify` can replay it without the manifest.
Json run_experiment(const Json& e, const WeightedGraph& p, const std::string& where, std::size_t cap) {
  std::optional<int> radius;
  if (e.contains("radius") && !e["radius"].is_null()) radius = static_cast<int>(manifest_integer(e, "radius", where));
  Space s = build_space(p, radius, cap);
  const long k = manifest_integer(e, "k", where), l = manifest_integer(e, "L", where),
             d = manifest_integer(e, "D", where);
  const bool thick = e.value("measure_from_thickened", false);
  const VertexSet ambient =
      e.contains("ambient") && !e["ambient"].is_null() ? space_set(s, e["ambient"], where + ".ambient") : everything(s.x);
  if (!e.contains("separator")) throw JsonError(where + ": missing member \"separator\"");
  const VertexSet z = space_set(s, e["separator"], where + ".separator");

  Json r;
  r["kind"] = "separate";
  r["graph"] = graph_to_json(p);
  r["radius"] = radius ? Json(*radius) : Json();
  r["ambient"] = metric_set_to_json(s.x, ambient);
  r["separator"] = metric_set_to_json(s.x, z);
  r["k"] = k;
  r["L"] = l;
  r["D"] = d;
  r["measure_from_thickened"] = thick;
  r["component_count"] = coarse_components(s.x, ambient, z, k, l).size();
  auto w = find_witness(s.x, ambient, z, k, l, d, thick);
  r["verdict"] = w ? "separated" : "not-separated";
  r["witness"] = w ? witness_to_json(s.x, *w) : Json();
  if (e.contains("growth_radii")) {
    std::vector<long> radii;
    for (const auto& v : e["growth_radii"]) {
      if (!v.is_number_integer()) throw JsonError(where + ".growth_radii: expected integers");
      radii.push_back(v.get<long>());
    }
    if (z.empty()) throw JsonError(where + ": growth of an empty separator");
    r["separator_growth"] = growth_to_json(relative_growth(s.x, {z}, radii));
  }
  return r;
}

// ---- rays ----

Json ray_json(int depth, const std::vector<std::int64_t>& nodes, int r0) {
  auto ray = tree_ray_finder(depth, nodes, r0);
  const double margin = spectral_margin(depth, nodes, r0);
  Json j;
  j["kind"] = "ray-find";
  j["depth"] = depth;
  j["r0"] = r0;
  j["set"] = nodes;
  j["ray"] = ray ? Json(*ray) : Json();
  j["spectral_margin"] = margin;
  j["stated_threshold"] = kStatedMarginThreshold;
  j["safe_threshold"] = kSafeMarginThreshold;
  j["within_safe_threshold"] = margin <= kSafeMarginThreshold;
  return j;
}

std::vector<std::int64_t> parse_nodes(const std::string& csv) {
  std::vector<std::int64_t> out;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    try {
      std::size_t used = 0;
      out.push_back(std::stoll(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw InputError("bad tree node '" + item + "'");
    }
  }
  return out;
}

std::vector<std::int64_t> nodes_from_json(const Json& j, const std::string& where) {
  if (!j.is_array()) throw JsonError(where + ": expected an array of node numbers");
  std::vector<std::int64_t> out;
  for (const auto& v : j) {
    if (!v.is_number_integer()) throw JsonError(where + ": node numbers are integers");
    out.push_back(v.get<std::int64_t>());
  }
  return out;
}

// ---- verify ----

std::optional<std::string> verify_one(const Json& c, std::size_t cap) {
  if (!c.is_object() || !c.contains("kind") || !c["kind"].is_string())
    throw JsonError("certificate: missing member \"kind\"");
  const std::string kind = c["kind"].get<std::string>();
  auto graph = [&] { return graph_from_json(c.at("graph"), "certificate.graph"); };
  auto same = [&](const Json& again) -> std::optional<std::string> {
    if (again == c) return std::nullopt;
    return "recomputed " + kind + " result differs";
  };
  if (kind == "classify") {
    const WeightedGraph p = graph();
    if (!check_split_certificate(p.graph, certificate_from_json(p.graph, c))) return "split certificate rejected";
    return std::nullopt;
  }
  if (kind == "cut-tree") {
    const WeightedGraph p = graph();
    return validate_cut_tree(p.graph, cut_tree_from_json(p.graph, c));
  }
  if (kind == "decompose") {
    const WeightedGraph p = graph();
    return validate_unpinched_decomposition(p.graph, decomposition_from_json(p.graph, c));
  }
  if (kind == "normal-form") {
    const WeightedGraph p = graph();
    const Word in = word_from_json(p.graph, c.at("input"), "certificate.input");
    const Word nf = word_from_json(p.graph, c.at("normal_form"), "certificate.normal_form");
    if (!is_graphically_reduced(p, nf)) return "normal form is not graphically reduced";
    if (!words_equal({p, in}, {p, nf})) return "normal form names a different element";
    return same(normal_form_json(p, in));
  }
  if (kind == "ball") {
    const WeightedGraph p = graph();
    return same(ball_json(p, c.at("radius").get<int>(), static_cast<double>(cap), c.value("with_hyperplanes", false)));
  }
  if (kind == "hyperplanes") return same(hyperplanes_json(graph(), c.at("radius").get<int>(), static_cast<double>(cap)));
  if (kind == "thick-chain") return chain_failure(chain_from_json(c));
  if (kind == "obstruct")
    return same(obstruct_json(graph_from_json(c.at("source"), "certificate.source"),
                              graph_from_json(c.at("target"), "certificate.target")));
  if (kind == "ray-find") {
    const int depth = c.at("depth").get<int>(), r0 = c.at("r0").get<int>();
    const auto nodes = nodes_from_json(c.at("set"), "certificate.set");
    if (c.at("ray").is_null()) {
      if (tree_ray_finder(depth, nodes, r0)) return "a ray exists";
      return std::nullopt;
    }
    if (!is_valid_ray(depth, nodes, r0, nodes_from_json(c["ray"], "certificate.ray"))) return "ray meets the set";
    return std::nullopt;
  }
  if (kind == "separate") {
    const WeightedGraph p = graph();
    std::optional<int> radius;
    if (!c.at("radius").is_null()) radius = c["radius"].get<int>();
    Space s = build_space(p, radius, cap);
    const VertexSet ambient = metric_set_from_json(s.x, c.at("ambient"), "certificate.ambient");
    const bool thick = c.value("measure_from_thickened", false);
    if (c.at("witness").is_null()) {
      const VertexSet z = metric_set_from_json(s.x, c.at("separator"), "certificate.separator");
      if (find_witness(s.x, ambient, z, c.at("k").get<long>(), c.at("L").get<long>(), c.at("D").get<long>(), thick))
        return "a separation witness exists";
      return std::nullopt;
    }
    if (!check_witness(s.x, witness_from_json(s.x, c["witness"]), ambient, thick)) return "witness rejected";
    return std::nullopt;
  }
  throw JsonError("certificate.kind: unknown kind '" + kind + "'");
}

int run_verify(const std::string& path, const Common& common, std::size_t cap) {
  const std::string text = read_text_file(path);
  std::vector<Json> certs;
  try {
    certs.push_back(parse_json(text, path));
  } catch (const JsonError&) {
    // JSON-lines output of `separate`
    std::istringstream ss(text);
    std::string line;
    int n = 0;
    while (std::getline(ss, line)) {
      ++n;
      if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
      certs.push_back(parse_json(line, path + " line " + std::to_string(n)));
    }
    if (certs.size() < 2) throw;
  }
  Json report;
  report["kind"] = "verification";
  Json results = Json::array();
  bool ok = true;
  for (const auto& c : certs) {
    auto err = verify_one(c, cap);
    ok = ok && !err;
    results.push_back({{"certificate_kind", c["kind"]}, {"valid", !err}, {"reason", err ? Json(*err) : Json()}});
  }
  report["valid"] = ok;
  report["results"] = results;
  emit(common, report);
  return ok ? kOk : kNegative;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Abelian splittings, quasi-median geometry and thickness chains for graph products"};
  app.require_subcommand(1);

  Common common;
  std::string graph, weights, word, from, to, manifest, source, target, nodes, set_file, certificate;
  int radius = 0, depth = 0, r0 = 0;
  double cap = kDefaultBallCap;
  bool with_hyperplanes = false;

  auto* classify = app.add_subcommand("classify", "Decide whether the group splits over an abelian subgroup");
  auto* cut_tree = app.add_subcommand("cut-tree", "Decompose along complete cuts");
  auto* decompose = app.add_subcommand("decompose", "One step of the unpinched-graph induction");
  auto* nf = app.add_subcommand("normal-form", "Normal form of a word");
  auto* ball = app.add_subcommand("ball", "Quasi-median ball about the identity");
  auto* hyper = app.add_subcommand("hyperplanes", "Hyperplanes of a quasi-median ball");
  auto* separate = app.add_subcommand("separate", "Coarse-separation experiments from a manifest (JSON lines out)");
  auto* chain = app.add_subcommand("thick-chain", "Thickness chain between two elements of a RAAG");
  auto* obstruct = app.add_subcommand("obstruct", "Piece-by-piece obstruction to a coarse embedding");
  auto* ray = app.add_subcommand("ray-find", "Ray avoiding a set in a rooted binary tree");
  auto* verify = app.add_subcommand("verify", "Re-validate an emitted certificate");

  for (auto* sub : {classify, cut_tree, decompose, nf, ball, hyper, chain})
    sub->add_option("--graph", graph, "Graph JSON file")->required()->check(CLI::ExistingFile);
  for (auto* sub : {nf, ball, hyper})
    sub->add_option("--weights", weights, "Vertex group orders, comma separated (inf for Z)");
  for (auto* sub : {ball, hyper}) {
    sub->add_option("--radius", radius, "Ball radius")->required()->check(CLI::NonNegativeNumber);
    sub->add_option("--cap", cap, "Refuse balls estimated above this many vertices");
  }
  for (auto* sub : {separate, verify}) sub->add_option("--cap", cap, "Refuse Cayley balls above this many vertices");
  for (auto* sub : {classify, cut_tree, decompose, nf, ball, hyper, separate, chain, obstruct, ray, verify})
    add_common(sub, common);

  nf->add_option("--word", word, "Word: JSON list, word file, or text like \"a^2 b^-1\"")->required();
  ball->add_flag("--hyperplanes", with_hyperplanes, "Include hyperplanes and their sectors");
  separate->add_option("--manifest", manifest, "Experiment manifest (object or list)")->required()->check(CLI::ExistingFile);
  chain->add_option("--from", from, "Start element")->required();
  chain->add_option("--to", to, "End element")->required();
  obstruct->add_option("--source", source, "Source graph JSON")->required()->check(CLI::ExistingFile);
  obstruct->add_option("--target", target, "Target graph JSON")->required()->check(CLI::ExistingFile);
  ray->add_option("--depth", depth, "Tree depth")->required()->check(CLI::Range(0, 60));
  ray->add_option("--r0", r0, "Radius inside which the set may be met")->required()->check(CLI::NonNegativeNumber);
  auto* nodes_opt = ray->add_option("--nodes", nodes, "Heap-numbered nodes, comma separated");
  ray->add_option("--set", set_file, "JSON file with a list of heap-numbered nodes")
      ->check(CLI::ExistingFile)
      ->excludes(nodes_opt);
  verify->add_option("--certificate", certificate, "Certificate JSON (or JSON lines)")->required()->check(CLI::ExistingFile);

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInput;
  }

  const std::size_t ucap = cap < 0 ? 0 : static_cast<std::size_t>(cap);
  try {
    if (*classify) {
      Json j = classify_json(load_graph(graph, ""));
      emit(common, j);
      return j["verdict"] == "no-abelian-splitting" ? kNegative : kOk;
    }
    if (*cut_tree) {
      emit(common, cut_tree_json(load_graph(graph, "")));
      return kOk;
    }
    if (*decompose) {
      emit(common, decompose_json(load_graph(graph, "")));
      return kOk;
    }
    if (*nf) {
      const WeightedGraph p = load_graph(graph, weights);
      emit(common, normal_form_json(p, load_word(p.graph, word)));
      return kOk;
    }
    if (*ball) {
      emit(common, ball_json(load_graph(graph, weights), radius, cap, with_hyperplanes));
      return kOk;
    }
    if (*hyper) {
      emit(common, hyperplanes_json(load_graph(graph, weights), radius, cap));
      return kOk;
    }
    if (*chain) {
      const WeightedGraph p = load_graph(graph, "");
      emit(common, chain_json(p, load_word(p.graph, from), load_word(p.graph, to)));
      return kOk;
    }
    if (*obstruct) {
      Json j = obstruct_json(load_graph(source, ""), load_graph(target, ""));
      emit(common, j);
      return j["verdict"] == "no-coarse-embedding" ? kNegative : kOk;
    }
    if (*ray) {
      std::vector<std::int64_t> s = set_file.empty() ? parse_nodes(nodes) : nodes_from_json(read_json_file(set_file), set_file);
      Json j = ray_json(depth, s, r0);
      emit(common, j);
      return j["ray"].is_null() ? kNegative : kOk;
    }
    if (*separate) {
      Json m = read_json_file(manifest);
      std::vector<Json> entries;
      if (m.is_array()) entries.assign(m.begin(), m.end());
      else entries.push_back(m);
      const fs::path dir = fs::path(manifest).parent_path();
      std::string lines;
      bool all = true;
      for (std::size_t i = 0; i < entries.size(); ++i) {
        const std::string where = manifest + "[" + std::to_string(i) + "]";
        if (!entries[i].is_object() || !entries[i].contains("graph") || !entries[i]["graph"].is_string())
          throw JsonError(where + ": \"graph\" must name a graph file");
        fs::path gp = entries[i]["graph"].get<std::string>();
        if (gp.is_relative()) gp = dir / gp;
        std::string w;
        if (entries[i].contains("weights")) {
          if (!entries[i]["weights"].is_string()) throw JsonError(where + ".weights: expected a CSV string");
          w = entries[i]["weights"].get<std::string>();
        }
        Json r;
        r["experiment"] = i;
        merge(r, run_experiment(entries[i], load_graph(gp.string(), w), where, ucap));
        all = all && r["verdict"] == "separated";
        lines += common.format == "text" ? text_report(r) + "\n" : r.dump() + "\n";
      }
      emit(common, lines);
      return all ? kOk : kNegative;
    }
    if (*verify) return run_verify(certificate, common, ucap);
  } catch (const ResourceError& e) {
    std::cerr << "resource cap: " << e.what() << " (estimate " << static_cast<long long>(e.estimate()) << ")\n";
    return kResource;
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kInput;
  } catch (const PreconditionError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kInput;
  } catch (const Json::exception& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kInput;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kInternal;
  }
  return kOk;
}
