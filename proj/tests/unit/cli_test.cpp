#include <doctest.h>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "symloci/cli.hpp"
#include "symloci/locus.hpp"
#include "symloci/schur.hpp"

using namespace symloci;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> split(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> out;
  for (std::string w; in >> w;) out.push_back(w);
  return out;
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

}  // namespace

TEST_CASE("golden outputs") {
  const std::filesystem::path dir = SYMLOCI_GOLDEN_DIR;
  int seen = 0;
  for (const auto& entry : std::filesystem::directory_iterator(dir)) {
    if (entry.path().extension() != ".args") continue;
    auto base = entry.path();
    base.replace_extension();
    std::string args = slurp(entry.path());
    CAPTURE(args);
    Outcome got = run(split(args));
    auto exit_file = std::filesystem::path(base.string() + ".exit");
    auto err_file = std::filesystem::path(base.string() + ".err");
    int want_code = std::filesystem::exists(exit_file) ? std::stoi(slurp(exit_file)) : 0;
    CHECK(got.code == want_code);
    CHECK(got.out == slurp(base.string() + ".out"));
    if (std::filesystem::exists(err_file)) CHECK(got.err == slurp(err_file));
    ++seen;
  }
  CHECK(seen >= 20);
}

TEST_CASE("identical invocations give identical bytes") {
  std::vector<std::string> args{"expand", "--e", "6", "--f", "3", "--r", "1", "--symmetry", "skew"};
  CHECK(run(args).out == run(args).out);
  std::vector<std::string> verify{"verify", "--suite", "chern", "--max-f", "2", "--max-n", "1"};
  Outcome a = run(verify);
  verify.insert(verify.end(), {"--jobs", "3"});
  Outcome b = run(verify);
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
}

TEST_CASE("usage errors are one line with status 2") {
  for (const auto& args : std::vector<std::vector<std::string>>{{},
                                                                {"class", "--e", "4"},
                                                                {"class", "--e", "4", "--f", "3", "--r", "2", "--symmetry", "herm"},
                                                                {"verify", "--suite", "nosuch"},
                                                                {"verify", "--jobs", "0"},
                                                                {"frobnicate"}}) {
    Outcome o = run(args);
    CHECK(o.code == 2);
    CHECK(o.out.empty());
    CHECK(o.err.rfind("error: ", 0) == 0);
    CHECK(std::count(o.err.begin(), o.err.end(), '\n') == 1);
  }
  CHECK(run({"--help"}).code == 0);
  CHECK(run({"class", "--help"}).out.find("--symmetry") != std::string::npos);
}

TEST_CASE("verify report format") {
  Outcome o = run({"verify", "--suite", "identities", "--max-f", "3", "--max-p", "1", "--max-n", "0"});
  CHECK(o.code == 0);
  CHECK(o.out == "CASE identities.sym f=3 p=1 n=0 : PASS\nCASE identities.skew f=3 p=1 n=0 : PASS\nSUMMARY 2 passed, 0 failed\n");
  cli::CaseResult failing{"x.y", "a=1", false, "why"};
  CHECK(cli::format_case(failing) == "CASE x.y a=1 : FAIL");
  CHECK_THROWS(cli::run_suite("nosuch", {}));
}

TEST_CASE("structured output") {
  using json = nlohmann::json;
  Outcome c = run({"class", "--e", "5", "--f", "4", "--r", "2", "--symmetry", "skew", "--format", "structured"});
  REQUIRE(c.code == 0);
  json doc = json::parse(c.out);
  CHECK(doc["command"] == "class");
  CHECK(doc["parameters"]["e"] == 5);
  CHECK(doc["parameters"]["symmetry"] == "skew");
  CHECK(doc["codim"] == 3);
  CHECK(doc["kind"] == "P");
  REQUIRE(doc["terms"].size() == 3);
  CHECK(doc["terms"][0]["k"] == json::array({2, 1}));
  CHECK(doc["terms"][0]["l"] == json::array());
  CHECK(doc["terms"][2]["l"] == json::array({2}));
  CHECK(doc["terms"][2]["coefficient"] == 1);

  Outcome d = run({"degree", "--symmetry", "skew", "--e-twists", "1,1,1,1", "--f-twists", "1,1", "--r", "1",
                   "--format", "structured"});
  json deg = json::parse(d.out);
  CHECK(deg["degree"] == 8);
  CHECK(deg["codim"] == 2);
  CHECK(deg["parameters"]["e_twists"] == json::array({1, 1, 1, 1}));

  Outcome ch = run({"chern", "--e", "3", "--f", "2", "--format", "structured"});
  CHECK(json::parse(ch.out)["degree"] == 5);
}

TEST_CASE("expansion table round trips to the class polynomial") {
  using json = nlohmann::json;
  Outcome o = run({"expand", "--e", "4", "--f", "3", "--r", "2", "--symmetry", "sym", "--format", "structured"});
  REQUIRE(o.code == 0);
  json doc = json::parse(o.out);
  ModelContext m = ModelContext::independent(4, 3);
  Poly rebuilt(m.context());
  for (const auto& t : doc["terms"]) {
    Partition i(t["f"].get<std::vector<int>>());
    Partition j(t["e"].get<std::vector<int>>());
    rebuilt += (schur_s(i, m.base('F')) * schur_s(j, m.base('E'))).scaled(t["coefficient"].get<std::int64_t>());
  }
  CHECK(rebuilt == expression_to_poly(class_of({4, 3, 2, Symmetry::symmetric}), m));

  Outcome big = run({"expand", "--e", "8", "--f", "4", "--r", "2", "--format", "structured"});
  for (const auto& t : json::parse(big.out)["terms"]) CHECK(t["coefficient"].get<std::int64_t>() % 4 == 0);
}

TEST_CASE("cache directory option") {
  auto dir = std::filesystem::temp_directory_path() / "symloci-cli-cache-test";
  std::filesystem::remove_all(dir);
  std::vector<std::string> args{"--cache-dir", dir.string(), "class", "--e", "6", "--f", "4", "--r", "1",
                                "--format", "polynomial"};
  Outcome first = run(args);
  CHECK(first.code == 0);
  CHECK_FALSE(std::filesystem::is_empty(dir));
  CHECK(run(args).out == first.out);
  set_q_cache_dir({});
  std::filesystem::remove_all(dir);
}
