// Python bindings. Graphs cross the boundary as (vertices, edges) and results
// come back as plain dicts and lists, built from the same JSON the CLI emits.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "raagsplit/io.hpp"

namespace py = pybind11;
using namespace raagsplit;

namespace {

py::object to_python(const Json& j) {
  switch (j.type()) {
    case Json::value_t::null: return py::none();
    case Json::value_t::boolean: return py::bool_(j.get<bool>());
    case Json::value_t::number_integer: return py::int_(j.get<long long>());
    case Json::value_t::number_unsigned: return py::int_(j.get<unsigned long long>());
    case Json::value_t::number_float: return py::float_(j.get<double>());
    case Json::value_t::string: return py::str(j.get<std::string>());
    case Json::value_t::array: {
      py::list out;
      for (const auto& e : j) out.append(to_python(e));
      return std::move(out);
    }
    case Json::value_t::object: {
      py::dict out;
      for (auto it = j.begin(); it != j.end(); ++it) out[py::str(it.key())] = to_python(it.value());
      return std::move(out);
    }
    default: return py::none();
  }
}

using Edges = std::vector<std::pair<std::string, std::string>>;
using Weights = std::optional<std::map<std::string, long>>;

WeightedGraph presentation(const std::vector<std::string>& vertices, const Edges& edges, const Weights& weights) {
  SimpleGraph g(vertices, edges);
  std::vector<long> order(g.size(), 0);
  if (weights)
    for (const auto& [name, n] : *weights) order[g.index(name)] = n;
  return WeightedGraph(std::move(g), std::move(order));
}

Word to_word(const SimpleGraph& g, const std::vector<std::pair<std::string, long>>& w) {
  Word out;
  for (const auto& [name, e] : w) out.push_back({g.index(name), e});
  return out;
}

}  // namespace

PYBIND11_MODULE(_raagsplit, m) {
  m.doc() = "Abelian splittings, quasi-median geometry and thickness chains for graph products";

  py::register_exception<ResourceError>(m, "ResourceError", PyExc_RuntimeError);
  py::register_exception<InvariantViolation>(m, "InvariantViolation", PyExc_RuntimeError);

  m.def(
      "classify",
      [](const std::vector<std::string>& v, const Edges& e) {
        const SimpleGraph g(v, e);
        return to_python(certificate_to_json(g, classify_splitting(g)));
      },
      py::arg("vertices"), py::arg("edges"));

  m.def(
      "is_unpinched", [](const std::vector<std::string>& v, const Edges& e) { return is_unpinched(SimpleGraph(v, e)); },
      py::arg("vertices"), py::arg("edges"));

  m.def(
      "cut_tree",
      [](const std::vector<std::string>& v, const Edges& e) {
        const SimpleGraph g(v, e);
        const CutTree t = complete_cut_decomposition(g);
        if (auto err = validate_cut_tree(g, t)) throw InvariantViolation(*err);
        return to_python(cut_tree_to_json(g, t));
      },
      py::arg("vertices"), py::arg("edges"));

  m.def(
      "decompose",
      [](const std::vector<std::string>& v, const Edges& e) {
        const SimpleGraph g(v, e);
        return to_python(decomposition_to_json(g, unpinched_decomposition(g)));
      },
      py::arg("vertices"), py::arg("edges"));

  m.def(
      "normal_form",
      [](const std::vector<std::string>& v, const Edges& e, const std::vector<std::pair<std::string, long>>& word,
         const Weights& weights) {
        const WeightedGraph p = presentation(v, e, weights);
        return to_python(word_to_json(p.graph, normal_form(p, to_word(p.graph, word))));
      },
      py::arg("vertices"), py::arg("edges"), py::arg("word"), py::arg("weights") = py::none());

  m.def(
      "ball",
      [](const std::vector<std::string>& v, const Edges& e, const std::map<std::string, long>& weights, int radius,
         double cap) {
        const WeightedGraph p = presentation(v, e, weights);
        const QMBall b = build_ball(p, radius, cap);
        const HyperplaneSystem hs = hyperplanes(b);
        return to_python(ball_to_json(b, &hs));
      },
      py::arg("vertices"), py::arg("edges"), py::arg("weights"), py::arg("radius"), py::arg("cap") = kDefaultBallCap);

  m.def(
      "thick_chain",
      [](const std::vector<std::string>& v, const Edges& e, const std::vector<std::pair<std::string, long>>& x,
         const std::vector<std::pair<std::string, long>>& y) {
        const SimpleGraph g(v, e);
        const ThickChain c = thick_chain_raag(g, to_word(g, x), to_word(g, y));
        py::dict out = to_python(chain_to_json(c));
        out["verified"] = verify_chain(c);
        return out;
      },
      py::arg("vertices"), py::arg("edges"), py::arg("start"), py::arg("end"));

  m.def("tree_ray_finder", &tree_ray_finder, py::arg("depth"), py::arg("nodes"), py::arg("r0"));
  m.def("spectral_margin", &spectral_margin, py::arg("depth"), py::arg("nodes"), py::arg("r0"));
  m.def("morse_hausdorff_bound", &morse_hausdorff_bound, py::arg("a"), py::arg("b"), py::arg("m"));
  m.attr("SAFE_MARGIN") = kSafeMarginThreshold;
  m.attr("STATED_MARGIN") = kStatedMarginThreshold;
}
