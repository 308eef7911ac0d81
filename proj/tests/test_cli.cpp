#include <doctest.h>

#include <filesystem>
#include <fstream>

#include <unistd.h>

#include "process.hpp"
#include "raagsplit/io.hpp"

using namespace raagsplit;
using testing::run_command;

namespace fs = std::filesystem;

namespace {

const std::string kCli = RAAGSPLIT_CLI;
const std::string kFix = RAAGSPLIT_FIXTURES;

testing::ProcessResult cli(const std::string& args) { return run_command("'" + kCli + "' " + args); }

std::string fixture(const std::string& name) { return "'" + kFix + "/" + name + "'"; }

fs::path scratch() {
  static const fs::path dir = [] {
    fs::path d = fs::temp_directory_path() / ("raagsplit_cli_test_" + std::to_string(::getpid()));
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

void write(const fs::path& p, const std::string& text) { std::ofstream(p) << text; }

// Writes the certificate, then checks that `verify` accepts it.
void check_round_trip(const std::string& args, const std::string& tag) {
  const fs::path out = scratch() / (tag + ".json");
  auto r = cli(args + " --out '" + out.string() + "'");
  REQUIRE(r.status <= 1);
  auto v = cli("verify --certificate '" + out.string() + "'");
  CHECK_MESSAGE(v.status == 0, tag << ": " << v.out);
}

}  // namespace

TEST_CASE("classify exit codes and output") {
  auto p3 = cli("classify --graph " + fixture("p3.json"));
  CHECK(p3.status == 0);
  const Json j = parse_json(p3.out, "stdout");
  CHECK(j["verdict"] == "splits-over-abelian");
  CHECK(j["witness"] == Json::array({"b"}));

  auto c5 = cli("classify --graph " + fixture("c5.json"));
  CHECK(c5.status == 1);
  CHECK(parse_json(c5.out, "stdout")["verdict"] == "no-abelian-splitting");

  auto text = cli("classify --graph " + fixture("p3.json") + " --format text");
  CHECK(text.status == 0);
  CHECK(text.out.find("splits-over-abelian") != std::string::npos);
}

TEST_CASE("ball with hyperplanes") {
  auto r = cli("ball --graph " + fixture("edge.json") + " --weights 3,3 --radius 2 --hyperplanes");
  REQUIRE(r.status == 0);
  const Json j = parse_json(r.out, "stdout");
  CHECK(j["vertices"].size() == 9);
  CHECK(j["hyperplanes"].size() == 2);
}

TEST_CASE("operational failures") {
  CHECK(cli("classify --graph /nonexistent.json").status == 2);
  write(scratch() / "bad.json", "{\"vertices\": [\"a\",\n");
  CHECK(cli("classify --graph '" + (scratch() / "bad.json").string() + "'").status == 2);
  write(scratch() / "loop.json", R"({"vertices": ["a"], "edges": [["a", "a"]]})");
  CHECK(cli("classify --graph '" + (scratch() / "loop.json").string() + "'").status == 2);
  CHECK(cli("ball --graph " + fixture("edge.json") + " --radius 2").status == 2);  // infinite factors
  CHECK(cli("ball --graph " + fixture("c5.json") + " --weights 5,5,5,5,5 --radius 12 --cap 1000").status == 3);
  CHECK(cli("frobnicate").status == 2);
}

TEST_CASE("other verbs") {
  auto nf = cli("normal-form --graph " + fixture("p3.json") + " --word 'c a b'");
  REQUIRE(nf.status == 0);
  CHECK(parse_json(nf.out, "stdout")["normal_form"] == Json::array({Json::array({"b", 1}), Json::array({"c", 1}), Json::array({"a", 1})}));

  auto dec = cli("decompose --graph " + fixture("two-pentagon.json"));
  REQUIRE(dec.status == 0);
  CHECK(parse_json(dec.out, "stdout")["case"] == "separator");

  auto obs = cli("obstruct --source " + fixture("octahedron.json") + " --target " + fixture("octagon-triangle.json"));
  CHECK(obs.status == 1);
  CHECK(parse_json(obs.out, "stdout")["verdict"] == "no-coarse-embedding");

  auto sep = cli("separate --manifest " + fixture("p3-separation.json"));
  CHECK(sep.status == 0);
  CHECK(parse_json(sep.out.substr(0, sep.out.find('\n')), "stdout")["component_count"] == 4);

  auto ray = cli("ray-find --depth 3 --r0 0 --nodes 2,3");
  CHECK(ray.status == 1);
  auto free_ray = cli("ray-find --depth 3 --r0 0 --nodes 2");
  CHECK(free_ray.status == 0);
  CHECK(parse_json(free_ray.out, "stdout")["ray"] == Json::array({1, 3, 6, 12}));
}

TEST_CASE("every certificate verifies") {
  check_round_trip("classify --graph " + fixture("p3.json"), "classify-p3");
  check_round_trip("classify --graph " + fixture("c5.json"), "classify-c5");
  check_round_trip("cut-tree --graph " + fixture("octagon-triangle.json"), "cut-tree");
  check_round_trip("decompose --graph " + fixture("two-pentagon.json"), "decompose-two");
  check_round_trip("decompose --graph " + fixture("c5-attached.json"), "decompose-attached");
  check_round_trip("normal-form --graph " + fixture("p3.json") + " --word 'c a b a^-1'", "normal-form");
  check_round_trip("ball --graph " + fixture("edge.json") + " --weights 3,3 --radius 2 --hyperplanes", "ball");
  check_round_trip("hyperplanes --graph " + fixture("edge.json") + " --weights 2,3 --radius 3", "hyperplanes");
  check_round_trip("thick-chain --graph " + fixture("two-pentagon.json") + " --from '[]' --to 'p1 q1 p1^-1'", "chain");
  check_round_trip("obstruct --source " + fixture("octahedron.json") + " --target " + fixture("octagon-triangle.json"),
                   "obstruct");
  check_round_trip("separate --manifest " + fixture("p3-separation.json"), "separate");
  check_round_trip("ray-find --depth 5 --r0 1 --nodes 4,5,13", "ray");
}

TEST_CASE("tampered certificates fail verification") {
  const fs::path out = scratch() / "tampered.json";
  REQUIRE(cli("classify --graph " + fixture("p3.json") + " --out '" + out.string() + "'").status == 0);
  Json j = read_json_file(out.string());
  j["witness"] = Json::array({"a"});
  write(out, dump(j));
  CHECK(cli("verify --certificate '" + out.string() + "'").status == 1);
}

TEST_CASE("outputs are byte-identical across runs") {
  for (const std::string args : {"cut-tree --graph " + fixture("octagon-triangle.json"),
                                 "thick-chain --graph " + fixture("c5-attached.json") + " --from 'c^2 a' --to 'g d^-1 c'",
                                 "separate --manifest " + fixture("p3-separation.json")}) {
    auto a = cli(args), b = cli(args);
    CHECK(a.status == b.status);
    CHECK(a.out == b.out);
    CHECK_FALSE(a.out.empty());
  }
}
