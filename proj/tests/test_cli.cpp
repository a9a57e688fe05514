#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "fixtures.hpp"
#include "toriclogk/cli.hpp"
#include "toriclogk/io.hpp"

using namespace toriclogk;
using io::Json;

namespace {

struct Outcome {
  int code;
  std::string out, err;
};

Outcome invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "toriclogk");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = cli::main(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::filesystem::path write_temp(const std::string& name, const std::string& body) {
  const auto path = std::filesystem::temp_directory_path() / name;
  std::ofstream(path) << body;
  return path;
}

}  // namespace

TEST_CASE("cli: classify on a polytope file") {
  const auto path = write_temp(
      "toriclogk_bl2p2.json",
      R"({"name": "Bl2P2", "dim": 2, "vertices": [[-1,-1],[-1,1],[0,1],[1,0],[1,-1]]})");
  const auto r = invoke({"classify", "--input", path.string(), "--beta", "21/25"});
  REQUIRE(r.code == 0);
  const Json j = Json::parse(r.out);
  CHECK(j["verdict"] == "semistable");
  CHECK(j["witness"] == Json::array({1, 1}));
  CHECK(j["R"] == "21/25");
  CHECK(j["beta"] == "21/25");
  CHECK(j["q_beta"] == Json::array({"1/2", "1/2"}));
  CHECK(j["notes"].is_array());
}

TEST_CASE("cli: r on P^2") {
  auto r = invoke({"r", "--builtin", "p2", "--format", "text"});
  REQUIRE(r.code == 0);
  CHECK(r.out == "1\n");
  r = invoke({"r", "--builtin", "p2"});
  CHECK(Json::parse(r.out)["R"] == "1");
  CHECK(Json::parse(r.out)["Q"].is_null());
}

TEST_CASE("cli: oracle on Bl_p P^2") {
  const auto r = invoke({"oracle", "--builtin", "bl1p2", "--lambda", "-1,-1", "--kmax", "6"});
  REQUIRE(r.code == 0);
  const Json j = Json::parse(r.out);
  CHECK(j["coefficients"]["a0"] == "2/3");
  CHECK(j["coefficients"]["b0"] == "4");
  CHECK(j["checks"]["a0_tilde = (n+1)a0 + W b0"] == "OK");
  for (const auto& [name, value] : j["checks"].items()) CHECK(value == "OK");
  CHECK(j["samples"].size() == 6);
}

TEST_CASE("cli: futaki, sweep, check, p1conic") {
  auto r = invoke({"futaki", "-b", "bl2p2", "-l", "-1,2", "--beta", "1/2"});
  REQUIRE(r.code == 0);
  Json j = Json::parse(r.out);
  CHECK(j["critical_beta"] == "63/65");
  CHECK(j["linear_form"]["beta_coefficient"] == "1/3");
  CHECK(j["linear_form"]["one_minus_beta_coefficient"] == "-21/2");
  CHECK(j["log_futaki"]["value"] == "-61/12");  // 1/6 - 21/4

  r = invoke({"sweep", "-b", "bl1p2"});
  REQUIRE(r.code == 0);
  CHECK(Json::parse(r.out)["R"] == "6/7");

  r = invoke({"check", "-b", "bl1p2"});
  REQUIRE(r.code == 0);
  j = Json::parse(r.out);
  CHECK(j["reflexive"] == true);
  CHECK(j["volume"] == "4");
  CHECK(j["facets"].size() == 4);

  r = invoke({"p1conic", "--alphas", "1/2,1/2,1/2"});
  REQUIRE(r.code == 0);
  j = Json::parse(r.out);
  CHECK(j["exists"] == true);
  CHECK(j["curvature_sign"] == 1);
  CHECK(j["stable_all"] == true);
  CHECK(j["futaki_values"] == Json::array({"1/2", "1/2", "1/2"}));
}

TEST_CASE("cli: domain and validation errors exit 2 with error JSON") {
  struct Case {
    std::vector<std::string> args;
    std::string code;
  };
  const std::vector<Case> cases = {
      {{"r", "-b", "segment"}, "NotReflexive"},
      {{"classify", "-b", "bl2p2", "--beta", "1"}, "BetaOutOfRange"},
      {{"futaki", "-b", "bl2p2", "-l", "0,0"}, "ZeroDirection"},
      {{"classify", "-b", "bl2p2"}, "UsageError"},
      {{"futaki", "-b", "bl2p2"}, "UsageError"},
      {{"r"}, "UsageError"},
      {{"classify", "-b", "bl2p2", "--beta", "0.5"}, "ParseError"},
      {{"p1conic", "--alphas", "1/2,3/2"}, "AlphaOutOfRange"},
      {{"plot", "-b", "segment"}, "UnsupportedDimension"},
      {{"r", "-b", "p2", "-f", "svg"}, "UsageError"},
      {{"bogus"}, "UsageError"},
  };
  for (const auto& c : cases) {
    CAPTURE(c.args.front());
    const auto r = invoke(c.args);
    CHECK(r.code == 2);
    CHECK(r.out.empty());
    const Json e = Json::parse(r.err);
    CHECK(e["error"] == c.code);
    CHECK(e["message"].is_string());
  }
}

TEST_CASE("cli: missing file exits 1") {
  const auto r = invoke({"r", "--input", "/nonexistent/toriclogk.json"});
  CHECK(r.code == 1);
  CHECK(Json::parse(r.err)["error"] == "IoError");
}

TEST_CASE("cli: output file and determinism") {
  const auto path = std::filesystem::temp_directory_path() / "toriclogk_sweep.json";
  const auto r = invoke({"sweep", "-b", "bl2p2", "-o", path.string()});
  REQUIRE(r.code == 0);
  CHECK(r.out.empty());
  std::ifstream in(path);
  std::stringstream buf;
  buf << in.rdbuf();
  CHECK(buf.str() == invoke({"sweep", "-b", "bl2p2"}).out);
  CHECK(invoke({"classify", "-b", "bl1p2", "--beta", "9/10"}).out ==
        invoke({"classify", "-b", "bl1p2", "--beta", "9/10"}).out);
}

TEST_CASE("cli: text format") {
  setenv("TORICLOGK_COLOR", "never", 1);
  const auto r = invoke({"classify", "-b", "bl2p2", "--beta", "9/10", "-f", "text"});
  REQUIRE(r.code == 0);
  CHECK(r.out.find("verdict: unstable\n") != std::string::npos);
  CHECK(r.out.find("witness: (1, 1)\n") != std::string::npos);
  CHECK(r.out.find("\x1b[") == std::string::npos);
}

TEST_CASE("io: polytope JSON round trip and rational strings") {
  for (const auto& name : io::builtin_names()) {
    const auto np = io::builtin_polytope(name);
    const std::string text = io::polytope_json(np.name, np.polytope).dump();
    const auto back = io::parse_polytope_text(text);
    CHECK(back.name == np.name);
    CHECK(back.polytope == np.polytope);
  }
  const auto np = io::parse_polytope_text(R"({"name":"sq","dim":2,
      "vertices":[["-1","-1"],[1,"-1"],["2/2",1],[-1,1]]})");
  CHECK(np.polytope == fixtures::square());
  CHECK_THROWS(io::parse_polytope_text(R"({"dim":2,"vertices":[[1.5,0],[0,1],[0,0]]})"));
  CHECK_THROWS(io::parse_polytope_text(R"({"dim":3,"vertices":[[1,0],[0,1],[0,0]]})"));
  CHECK_THROWS(io::parse_polytope_text("not json"));
  CHECK_THROWS(io::parse_polytope_text(R"({"dim":2,"vertices":[["1/2",0],[0,1],[0,0]]})"));

  // Every rational string in a report parses back to the same value.
  const Json j = io::verdict_json(classify(fixtures::bl2p2(), Rational(5, 6)));
  CHECK(parse_rational(j["R"].get<std::string>()) == Rational(21, 25));
  CHECK(parse_rational(j["beta"].get<std::string>()) == Rational(5, 6));
  const RatVec qb = q_beta(fixtures::bl2p2(), Rational(5, 6));
  for (std::size_t i = 0; i < 2; ++i) {
    CHECK(io::parse_rational_json(j["q_beta"][i]) == qb[i]);
  }
}
