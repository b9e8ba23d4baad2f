#include <doctest.h>

#include <unistd.h>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "cli.hpp"
#include "sectoria/errors.hpp"
#include "sectoria/generators.hpp"
#include "sectoria/inequalities.hpp"
#include "sectoria/matrix_io.hpp"

using namespace sectoria;
namespace fs = std::filesystem;

namespace {

struct RunResult {
  int code;
  std::string out;
  std::string err;
};

RunResult run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

class TempDir {
 public:
  TempDir() : path_(fs::temp_directory_path() / ("sectoria-cli-" + std::to_string(::getpid()) + "-" + std::to_string(counter_++))) {
    fs::create_directories(path_);
  }
  ~TempDir() { fs::remove_all(path_); }
  std::string file(const std::string& name) const { return (path_ / name).string(); }
  std::string write(const std::string& name, const std::string& text) const {
    std::ofstream(path_ / name) << text;
    return file(name);
  }

 private:
  static inline int counter_ = 0;
  fs::path path_;
};

}  // namespace

TEST_CASE("matrix files round-trip bit-exactly") {
  TempDir dir;
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const ComplexMatrix a = gen_sectorial(1 + seed % 6, SectorAngle(1.3), seed);
    write_matrix_file(dir.file("m.json"), a);
    CHECK(read_matrix_file(dir.file("m.json")) == a);
  }
  // Flat arrays are accepted.
  const ComplexMatrix flat = parse_matrix_json(R"({"n":2,"re":[1,2,3,4],"im":[0,0,0,-1]})");
  CHECK(flat == ComplexMatrix{{1, 2}, {3, {4, -1}}});
  CHECK_THROWS_AS(parse_matrix_json(R"({"n":2,"re":[1,2,3],"im":[0,0,0]})"), ParseError);
  CHECK_THROWS_AS(parse_matrix_json("not json"), ParseError);
  CHECK_THROWS_AS(read_matrix_file(dir.file("missing.json")), ParseError);
  CHECK_THROWS_AS(parse_sequence_json(R"({"a":[1,2],"b":[2,2]})"), ParseError);
}

TEST_CASE("angle") {
  TempDir dir;
  const std::string f = dir.write("a.json", R"({"n":2,"re":[[2,1],[1,2]],"im":[[1,1],[-1,1]]})");
  const RunResult r = run({"angle", f});
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  const double expected = std::atan(1.0 / (2.0 - std::sqrt(2.0)));
  CHECK(j["alpha"].get<double>() == doctest::Approx(expected).epsilon(1e-12));
  CHECK(j["alpha_degrees"].get<double>() == doctest::Approx(expected * 180.0 / std::numbers::pi).epsilon(1e-12));
  CHECK(j["thetas"].size() == 2);
  CHECK(std::abs(j["bisection_alpha"].get<double>() - expected) <= 1e-8);

  const std::string bad = dir.write("bad.json", R"({"n":2,"re":[[1,0],[0,-1]],"im":[[0,0],[0,0]]})");
  CHECK(run({"angle", bad}).code == cli::kExitPrecondition);
  CHECK(run({"angle", dir.file("nope.json")}).code == cli::kExitUsage);
}

TEST_CASE("check") {
  TempDir dir;
  const std::string a = dir.write("a.json", R"({"n":2,"re":[[4,2],[2,3]],"im":[[0,0],[0,0]]})");
  const std::string b = dir.write("b.json", R"({"n":2,"re":[[1,0],[0,2]],"im":[[0,0],[0,0]]})");

  const RunResult r = run({"check", "hartfiel", a, b});
  REQUIRE(r.code == cli::kExitOk);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["name"] == "hartfiel");
  CHECK(j["kind"] == "scalar");
  CHECK(j["holds"] == true);
  CHECK(j["slack"].get<double>() == doctest::Approx(1.0 / 21.0));

  const RunResult text = run({"check", "hartfiel", a, b, "--format", "text"});
  CHECK(text.code == 0);
  CHECK(text.out.rfind("hartfiel scalar slack=", 0) == 0);

  CHECK(run({"check", "main1", a}).code == cli::kExitUsage);
  CHECK(run({"check", "no-such-check", a, b}).code == cli::kExitUsage);
  CHECK(run({"check", "main1", a, b, "--partition", "2"}).code == cli::kExitUsage);
  CHECK(run({"check", "det-step", a, b, "--k", "1"}).code == cli::kExitOk);
  CHECK(run({"check", "det-step", a, b, "--k", "5"}).code == cli::kExitUsage);

  const std::string tilted = dir.write("t.json", R"({"n":2,"re":[[1,0],[0,1]],"im":[[1,0],[0,1]]})");
  CHECK(run({"check", "main2", tilted, a, "--alpha", "0.5"}).code == cli::kExitPrecondition);
  CHECK(run({"check", "hartfiel", tilted, a}).code == cli::kExitPrecondition);
  CHECK(run({"check", "corollary-ad", tilted, tilted}).code == cli::kExitOk);

  const auto main2 = nlohmann::json::parse(run({"check", "main2", a, b, "--alpha", "0"}).out);
  CHECK(std::abs(main2["slack"].get<double>() - j["slack"].get<double>()) <= 1e-12);

  const std::string seq = dir.write("s.json", R"({"a":[1,3],"b":[1,5]})");
  const RunResult c2 = run({"check", "claim2", seq});
  CHECK(c2.code == cli::kExitOk);
  CHECK(nlohmann::json::parse(c2.out)["name"] == "claim2");
}

TEST_CASE("check reports a violated inequality with exit 3") {
  TrialConfig cfg{.seed = 0, .n = 4, .alpha = SectorAngle(std::numbers::pi / 3), .trials = 200, .partition = std::nullopt};
  const FalsificationResult found = falsify_schur_wrongsec(cfg);
  REQUIRE(found.counterexample_found);
  RngStream rng(0, found.worst_trial);
  const ComplexMatrix a = gen_sectorial(4, cfg.alpha, rng);

  TempDir dir;
  write_matrix_file(dir.file("a.json"), a);
  const RunResult r = run({"check", "schur-wrongsec", dir.file("a.json")});
  CHECK(r.code == cli::kExitViolated);
  CHECK(nlohmann::json::parse(r.out)["holds"] == false);
}

TEST_CASE("trials output is deterministic") {
  const std::vector<std::string> args = {"trials", "main1", "--seed", "7", "--n", "5", "--alpha", "1.0", "--trials", "50"};
  const RunResult first = run(args);
  REQUIRE(first.code == 0);
  std::vector<std::string> with_workers = args;
  with_workers.insert(with_workers.end(), {"--workers", "3"});
  CHECK(run(with_workers).out == first.out);
  CHECK(run(args).out == first.out);

  const auto j = nlohmann::json::parse(first.out);
  CHECK(j["check"] == "main1");
  CHECK(j["trials"] == 50);
  CHECK(j["failures"] == 0);
  CHECK(j["config"]["partition"] == 2);

  const RunResult wrong = run({"trials", "schur-wrongsec", "--n", "4", "--alpha", "1.0", "--trials", "100"});
  CHECK(wrong.code == 0);
  CHECK(nlohmann::json::parse(wrong.out)["counterexample_found"] == true);

  for (const auto& flags : std::vector<std::vector<std::string>>{
           {"trials", "main2", "--n", "4", "--alpha", "0.785398", "--trials", "500", "--seed", "0"},
           {"trials", "hartfiel", "--n", "5", "--alpha", "0", "--trials", "1000", "--seed", "0"}}) {
    const RunResult r = run(flags);
    CHECK(r.code == 0);
    CHECK(nlohmann::json::parse(r.out)["failures"] == 0);
  }

  CHECK(run({"trials", "main1", "--trials", "0"}).code == cli::kExitUsage);
  CHECK(run({"trials", "main1", "--alpha", "1.57"}).code == cli::kExitUsage);
}

TEST_CASE("boundary") {
  TempDir dir;
  const std::string id = dir.write("i.json", R"({"n":2,"re":[[1,0],[0,1]],"im":[[0,0],[0,0]]})");
  const RunResult r = run({"boundary", id, "--points", "8"});
  REQUIRE(r.code == 0);
  std::istringstream lines(r.out);
  std::string line;
  std::getline(lines, line);
  CHECK(line == "re,im");
  int rows = 0;
  while (std::getline(lines, line)) {
    CHECK(line == "1,0");
    ++rows;
  }
  CHECK(rows == 8);

  CHECK(run({"boundary", id, "--points", "16", "--out", dir.file("b.csv")}).code == 0);
  CHECK(read_text_file(dir.file("b.csv")).rfind("re,im\n", 0) == 0);
  CHECK(run({"boundary", id, "--points", "2"}).code == cli::kExitUsage);
}

TEST_CASE("SECTORIA_TOL sets the default tolerance") {
  ::unsetenv("SECTORIA_TOL");
  CHECK(cli::default_tolerance() == 1e-8);
  ::setenv("SECTORIA_TOL", "1e-4", 1);
  CHECK(cli::default_tolerance() == 1e-4);
  TempDir dir;
  const std::string a = dir.write("a.json", R"({"n":1,"re":[[1]],"im":[[0]]})");
  CHECK(nlohmann::json::parse(run({"check", "lemma-2-4", a}).out)["tol"] == 1e-4);
  ::setenv("SECTORIA_TOL", "garbage", 1);
  CHECK(cli::default_tolerance() == 1e-8);
  ::unsetenv("SECTORIA_TOL");
}

TEST_CASE("list") {
  const RunResult r = run({"list"});
  CHECK(r.code == 0);
  CHECK(r.out.find("main2\n") != std::string::npos);
  CHECK(r.out.find("claim2\n") != std::string::npos);
  CHECK(run({}).code == cli::kExitUsage);
}
