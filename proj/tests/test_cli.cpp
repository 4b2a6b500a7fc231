#include <doctest.h>
#include <json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <unistd.h>

#include "pregame/cli.hpp"

namespace fs = std::filesystem;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = pregame::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string corpus(const std::string& name) { return std::string(PREGAME_CORPUS_DIR) + "/" + name; }

class TempDir {
 public:
  TempDir() : path_(fs::temp_directory_path() / ("pregame-cli-" + std::to_string(::getpid()))) {
    fs::create_directories(path_);
  }
  ~TempDir() { fs::remove_all(path_); }

  std::string write(const std::string& name, const std::string& text) const {
    std::ofstream(path_ / name, std::ios::binary) << text;
    return (path_ / name).string();
  }
  std::string file(const std::string& name) const { return (path_ / name).string(); }

 private:
  fs::path path_;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::size_t count(const std::string& text, const std::string& needle) {
  std::size_t n = 0;
  for (auto at = text.find(needle); at != std::string::npos; at = text.find(needle, at + 1)) ++n;
  return n;
}

}  // namespace

TEST_CASE("check lists every game") {
  const auto r = run({"check", corpus("prisoners_dilemma.pregame")});
  CHECK(r.code == 0);
  CHECK(r.out == "pd : 1 ⊗ 1* → 1 ⊗ 1*\n");
  CHECK(r.err.empty());
  const auto seq = run({"check", corpus("two_stage_sequential.pregame")});
  CHECK(seq.code == 0);
  CHECK(seq.out ==
        "observed : Entry ⊗ (U × U)* → Entry × Reply ⊗ (U × U × U × U)*\n"
        "entry : 1 ⊗ 1* → 1 ⊗ 1*\n");
}

TEST_CASE("check reports located errors") {
  TempDir tmp;
  const auto path = tmp.write("bad.pregame",
                              "set X = {a, b}\nset Y = {c}\nset Z = {d}\n"
                              "fun f : X -> Y = { a -> c, b -> c }\n"
                              "fun g : Z -> X = { d -> a }\n"
                              "game h = f ; g\n");
  const auto r = run({"check", path});
  CHECK(r.code == 1);
  CHECK(r.out.empty());
  CHECK(r.err == path + ":6:10: error: cannot compose: left side ends at Y ⊗ 1* but right side "
                        "starts at Z ⊗ 1*\n");

  const auto lex = run({"check", tmp.write("lex.pregame", "set X = {a}\n$")});
  CHECK(lex.code == 1);
  CHECK(lex.err.find(":2:1: error: unexpected character '$'") != std::string::npos);
}

TEST_CASE("check on a missing file is an I/O error") {
  const auto r = run({"check", corpus("does_not_exist.pregame")});
  CHECK(r.code == 2);
  CHECK(r.err.find("cannot read") != std::string::npos);
}

TEST_CASE("equilibria in text") {
  const auto pd = run({"equilibria", corpus("prisoners_dilemma.pregame"), "--game", "pd"});
  CHECK(pd.code == 0);
  CHECK(pd.out == "(D, D)\n");
  const auto mp = run({"equilibria", corpus("matching_pennies.pregame"), "--game", "pennies"});
  CHECK(mp.code == 0);
  CHECK(mp.out.empty());
}

TEST_CASE("equilibria as json") {
  const auto r = run({"equilibria", corpus("prisoners_dilemma.pregame"), "--game", "pd",
                      "--format", "json"});
  REQUIRE(r.code == 0);
  const auto doc = nlohmann::json::parse(r.out);
  CHECK(doc["game"] == "pd");
  CHECK(doc["count"] == 1);
  CHECK(doc["profiles"] == nlohmann::json::parse(R"([["D", "D"]])"));
  CHECK(r.out.find("\"game\"") < r.out.find("\"profiles\""));
  CHECK(r.out.find("\"profiles\"") < r.out.find("\"count\""));

  const auto mp = run({"equilibria", corpus("matching_pennies.pregame"), "--game", "pennies",
                       "--format", "json"});
  const auto empty = nlohmann::json::parse(mp.out);
  CHECK(empty["count"] == 0);
  CHECK(empty["profiles"].empty());

  const auto co = run({"equilibria", corpus("coordination.pregame"), "--game", "meet",
                       "--format", "json"});
  CHECK(nlohmann::json::parse(co.out)["profiles"] ==
        nlohmann::json::parse(R"([["A", "A"], ["B", "B"]])"));
}

TEST_CASE("equilibria of an open game") {
  TempDir tmp;
  const auto path = tmp.write("open.pregame",
                              "set X = {a, b}\nset R = {0, 1}\n"
                              "player P : 1 -> X feedback R argmax\ngame g = P\n");
  const auto r = run({"equilibria", path, "--game", "g"});
  CHECK(r.code == 1);
  CHECK(r.err.find("game is not closed: codomain has contravariant port R") != std::string::npos);
}

TEST_CASE("equilibria usage errors") {
  const std::string pd = corpus("prisoners_dilemma.pregame");
  CHECK(run({"equilibria", pd, "--game", "nope"}).code == 1);
  CHECK(run({"equilibria", pd}).code == 2);
  CHECK(run({"equilibria", pd, "--game", "pd", "--format", "xml"}).code == 2);
  CHECK(run({}).code == 2);
  CHECK(run({"solve"}).code == 2);
  const auto help = run({"--help"});
  CHECK(help.code == 0);
  CHECK(help.out.find("equilibria") != std::string::npos);
}

TEST_CASE("enumeration caps come from the environment") {
  const std::string entry = corpus("two_stage_sequential.pregame");
  ::setenv("PREGAME_CAP", "4", 1);
  const auto small = run({"equilibria", entry, "--game", "entry"});
  ::setenv("PREGAME_CAP", "many", 1);
  const auto bad = run({"equilibria", entry, "--game", "entry"});
  ::unsetenv("PREGAME_CAP");
  CHECK(small.code == 1);
  CHECK(small.err.find("error:") != std::string::npos);
  CHECK(bad.code == 2);
  CHECK(bad.err.find("PREGAME_CAP") != std::string::npos);
  CHECK(run({"equilibria", entry, "--game", "entry"}).code == 0);
}

TEST_CASE("laws") {
  const auto a = run({"laws", "--seed", "7", "--iters", "20"});
  const auto b = run({"laws", "--seed", "7", "--iters", "20"});
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(a.out.rfind("laws: seed 7, 20 iterations\n", 0) == 0);
  CHECK(a.out.find("all laws hold") != std::string::npos);
  const auto d = run({"laws", "--iters", "2"});
  CHECK(d.out.rfind("laws: seed " + std::to_string(pregame::cli::kDefaultSeed), 0) == 0);
  CHECK(run({"laws", "--iters", "0"}).code == 2);
  CHECK(run({"laws", "--iters", "-3"}).code == 2);
  CHECK(run({"laws", "--seed", "x"}).code == 2);
}

TEST_CASE("render writes a stable graph") {
  TempDir tmp;
  const std::string pd = corpus("prisoners_dilemma.pregame");
  const auto out = tmp.file("pd.dot");
  const auto r = run({"render", pd, "--game", "pd", "-o", out});
  CHECK(r.code == 0);
  const std::string dot = slurp(out);
  CHECK(run({"render", pd, "--game", "pd"}).out == dot);
  CHECK(run({"render", pd, "--game", "pd", "-o", "-"}).out == dot);

  CHECK(dot.rfind("digraph \"pd\" {", 0) == 0);
  CHECK(count(dot, "[label=\"P1\", shape=oval]") == 1);
  CHECK(count(dot, "[label=\"P2\", shape=oval]") == 1);
  CHECK(count(dot, "[label=\"q\", shape=oval]") == 1);
  CHECK(count(dot, "[label=\"copy\", shape=point") == 1);
  CHECK(count(dot, "shape=oval") == 3);
  // One cup, carrying both payoff wires back.
  CHECK(count(dot, "[label=\"tau\", shape=point") == 1);
  CHECK(count(dot, "dir=back, constraint=false") == 2);
}

TEST_CASE("render failures") {
  TempDir tmp;
  const std::string pd = corpus("prisoners_dilemma.pregame");
  CHECK(run({"render", pd, "--game", "nope"}).code == 1);
  CHECK(run({"render", corpus("missing.pregame"), "--game", "pd"}).code == 2);
  CHECK(run({"render", pd, "--game", "pd", "-o", tmp.file("no/such/dir/x.dot")}).code == 2);
  const auto bad = tmp.write("bad.pregame", "game g = (");
  CHECK(run({"render", bad, "--game", "g"}).code == 1);
}
