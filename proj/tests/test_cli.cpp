#include <doctest.h>
#include <zlib.h>

#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include <nlohmann/json.hpp>

#include "topolab/cli.hpp"

namespace fs = std::filesystem;
using topolab::cli::run;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result call(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

class TempDir {
 public:
  TempDir() {
    std::random_device rd;
    path_ = fs::temp_directory_path() / ("topolab-cli-" + std::to_string(rd()));
    fs::create_directories(path_);
  }
  ~TempDir() { fs::remove_all(path_); }
  std::string file(const std::string& name, const std::string& content = {}) const {
    const auto p = (path_ / name).string();
    if (!content.empty()) std::ofstream(p) << content;
    return p;
  }

 private:
  fs::path path_;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

}  // namespace

TEST_CASE("poly prints decimal strings") {
  TempDir d;
  const auto f = d.file("t.json", R"({"n":3,"opens":[0,1,2,3,4,5,6,7]})");
  const auto r = call({"poly", "--in", f});
  CHECK(r.code == 0);
  CHECK(nlohmann::json::parse(r.out) == nlohmann::json::array({"1", "3", "3", "1"}));
  CHECK(call({"poly", "--in", f, "--format", "text"}).out == "1 3 3 1\n");
}

TEST_CASE("check on the (1,1,2,2,1,1) partition topology") {
  TempDir d;
  // blocks {a,b}, {c,d}, {e}
  const auto f = d.file("p.json", R"({"n":5,"opens":[0,3,12,16,15,19,28,31]})");
  const auto r = call({"check", "--in", f, "--props", "unimodal,log-concave,newton,real-rooted"});
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["unimodal"] == true);
  CHECK(j["log-concave"] == false);
  CHECK(j["newton"] == false);
  CHECK(j["real-rooted"] == false);

  const auto all = nlohmann::json::parse(
      call({"check", "--in", f, "--props", "slc,niz,dmax,t0,minimal,partition"}).out);
  CHECK(all["niz"] == true);
  CHECK(all["t0"] == false);
  CHECK(all["minimal"] == nlohmann::json::array({3, 12, 16}));
  CHECK(all["partition"] == nlohmann::json::array({1, 2}));
  CHECK(call({"check", "--in", f, "--props", "unimodal,shiny"}).code == 64);
}

TEST_CASE("validate and error codes") {
  TempDir d;
  CHECK(call({"validate", "--in", d.file("ok.json", R"({"n":2,"opens":[0,1,3]})")}).code == 0);
  const auto bad = call({"validate", "--in", d.file("bad.json", R"({"n":3,"opens":[0,1,2,7]})")});
  CHECK(bad.code == 1);
  CHECK(nlohmann::json::parse(bad.out)["valid"] == false);
  CHECK(call({"validate", "--in", d.file("junk.json", "{not json")}).code == 65);
  CHECK(call({"validate", "--in", d.file("shape.json", R"({"n":2})")}).code == 65);
  CHECK(call({"validate", "--in", d.file("missing.json")}).code == 65);
  CHECK(call({"validate"}).code == 64);
  CHECK(call({}).code == 64);
  CHECK(call({"frobnicate"}).code == 64);
  CHECK(call({"--help"}).code == 0);
}

TEST_CASE("construct output validates") {
  TempDir d;
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"--family", "nm2-a", "--n", "6", "--j", "2"},
           {"--family", "counterexample", "--n", "7"},
           {"--family", "nmi-1", "--n", "8", "--i", "5"},
           {"--family", "nm1-singletons", "--n", "5", "--l", "3"},
           {"--partition", "1,2", "--n", "5"}}) {
    const auto out = d.file("c.json");
    std::vector<std::string> full{"construct"};
    full.insert(full.end(), args.begin(), args.end());
    full.insert(full.end(), {"--out", out, "--pretty"});
    REQUIRE(call(full).code == 0);
    const auto j = nlohmann::json::parse(slurp(out));
    CHECK(j.contains("match_report"));
    CHECK(j["pretty_opens"].size() == j["opens"].size());
    CHECK(call({"validate", "--in", out}).code == 0);
  }
  const auto stdout_run = call({"construct", "--family", "counterexample", "--n", "5"});
  CHECK(nlohmann::json::parse(stdout_run.out)["match_report"]["computed"] ==
        nlohmann::json::array({"1", "3", "3", "1", "2", "1"}));
}

TEST_CASE("construct usage errors") {
  CHECK(call({"construct", "--n", "5"}).code == 64);
  CHECK(call({"construct", "--family", "nm2-a", "--partition", "1,2", "--n", "5"}).code == 64);
  CHECK(call({"construct", "--family", "nm2-a", "--n", "6", "--l", "2"}).code == 64);
  CHECK(call({"construct", "--family", "nm2-a", "--n", "6", "--j", "2", "--i", "5"}).code == 64);
  CHECK(call({"construct", "--partition", "1,x", "--n", "5"}).code == 64);
  CHECK(call({"construct", "--family", "nope", "--n", "6"}).code == 1);
  CHECK(call({"construct", "--family", "nm2-j", "--n", "5"}).code == 1);
  CHECK(call({"construct", "--partition", "1,2", "--n", "6"}).code == 1);
}

TEST_CASE("enumerate streams JSONL and stats") {
  TempDir d;
  const auto r = call({"enumerate", "--n", "3"});
  CHECK(r.code == 0);
  std::istringstream lines(r.out);
  std::string line;
  int count = 0;
  while (std::getline(lines, line)) {
    CHECK(nlohmann::json::parse(line).contains("opens"));
    ++count;
  }
  CHECK(count == 29);
  CHECK(nlohmann::json::parse(r.err)["total"] == 29);

  const auto stats = d.file("stats.json");
  const auto out = d.file("out.jsonl");
  CHECK(call({"enumerate", "--n", "4", "--t0", "--strategy", "both", "--out", out, "--stats", stats}).code == 0);
  CHECK(nlohmann::json::parse(slurp(stats))["total"] == 219);
  CHECK(call({"enumerate", "--n", "4", "--iso", "--threads", "3"}).err.find("\"total\":33") != std::string::npos);
  CHECK(call({"enumerate", "--n", "5", "--strategy", "closure"}).code == 1);
  CHECK(call({"enumerate", "--n", "0"}).code == 64);
  CHECK(call({"enumerate", "--n", "3", "--strategy", "magic"}).code == 64);
  CHECK(call({"enumerate", "--n", "3", "--gzip"}).code == 64);
}

TEST_CASE("enumerate gzip") {
  TempDir d;
  const auto out = d.file("out.jsonl.gz");
  REQUIRE(call({"enumerate", "--n", "3", "--out", out, "--gzip"}).code == 0);
  gzFile gz = gzopen(out.c_str(), "rb");
  REQUIRE(gz);
  char buf[256];
  int lines = 0;
  while (gzgets(gz, buf, sizeof buf)) ++lines;
  gzclose(gz);
  CHECK(lines == 29);
}

TEST_CASE("verify exit codes and report array") {
  TempDir d;
  const auto json = d.file("v.json");
  const auto r = call({"verify", "--all", "--n-max", "4", "--json", json});
  // unimodal-above-6x2n4 has a counterexample with 7 opens at n = 4
  CHECK(r.code == 2);
  const auto arr = nlohmann::json::parse(slurp(json));
  CHECK(arr.is_array());
  CHECK(arr.size() == 15);
  CHECK_FALSE(arr[0].contains("elapsed_ms"));

  const auto ok = call({"verify", "--theorem", "real-roots-iff-discrete", "--n-max", "4", "--timing"});
  CHECK(ok.code == 0);
  const auto one = nlohmann::json::parse(ok.out);
  CHECK(one[0]["checked_count"] == 389);
  CHECK(one[0].contains("elapsed_ms"));
  CHECK(call({"verify", "--theorem", "newton-implies-discrete", "--n-max", "4"}).code == 3);
  CHECK(call({"verify", "--n-max", "4"}).code == 64);
  CHECK(call({"verify", "--all", "--theorem", "dmax-bound", "--n-max", "4"}).code == 64);
  CHECK(call({"verify", "--theorem", "nonsense", "--n-max", "4"}).code == 64);
  CHECK(call({"verify", "--all", "--n-max", "9"}).code == 1);
}
