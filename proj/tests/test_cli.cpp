#include "catch_amalgamated.hpp"

#include <array>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <sys/wait.h>

#include <json.hpp>

namespace {

struct Run {
  int status;
  std::string out;
};

Run isg(const std::string& args) {
  const std::string cmd = std::string(ISG_BINARY) + " " + args + " 2>/dev/null";
  FILE* pipe            = popen(cmd.c_str(), "r");
  REQUIRE(pipe);
  std::string out;
  std::array<char, 4096> buf;
  while (auto n = fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), n);
  const int raw = pclose(pipe);
  return {WIFEXITED(raw) ? WEXITSTATUS(raw) : -1, out};
}

std::string data(const std::string& name) { return std::string(ISG_DATA_DIR) + "/" + name; }

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace

TEST_CASE("validate") {
  auto ok = isg("validate --semigroup " + data("i2.json"));
  CHECK(ok.status == 0);
  CHECK(ok.out.find("7 elements, 4 idempotents") != std::string::npos);

  auto bad = isg("validate --semigroup " + data("bad.json"));
  CHECK(bad.status == 2);
  auto missing = isg("validate --semigroup /nonexistent.json");
  CHECK(missing.status == 2);
  CHECK(isg("validate").status == 2);
  CHECK(isg("validate --semigroup " + data("i2.json") + " --format yaml").status == 2);
  CHECK(isg("validate --semigroup " + data("i2.json") + " --size-cap 3").status == 2);

  auto full = isg("validate --semigroup " + data("i2.json") + " --coverage tight --check-level full");
  CHECK(full.status == 0);
  CHECK(full.out.find("PASS germs") != std::string::npos);
  CHECK(full.out.find("PASS nucleus") != std::string::npos);
}

TEST_CASE("export round trip") {
  for (auto name : {"i2.json", "e4.json"}) {
    auto once = isg("export --semigroup " + data(name));
    CHECK(once.status == 0);
    CHECK(once.out == slurp(data(name)));
  }
  auto fixture = isg("export --semigroup 'symmetric_inverse(3)'");
  REQUIRE(fixture.status == 0);
  const std::string tmp = "isg_cli_roundtrip.json";
  std::ofstream(tmp) << fixture.out;
  CHECK(isg("export --semigroup " + tmp).out == fixture.out);
  std::remove(tmp.c_str());
}

TEST_CASE("groupoid commands") {
  auto tight = isg("tight-groupoid --semigroup " + data("i2.json") + " --format json");
  REQUIRE(tight.status == 0);
  auto j = nlohmann::json::parse(tight.out);
  CHECK(j["command"] == "tight-groupoid");
  CHECK(j["result"]["arrows"].size() == 4);
  CHECK(j["result"]["units"].size() == 2);

  auto universal = isg("universal-groupoid --semigroup " + data("i2.json") + " --format json");
  CHECK(nlohmann::json::parse(universal.out)["result"]["arrows"].size() == 6);
  auto dot = isg("universal-groupoid --semigroup " + data("i2.json") + " --format dot");
  CHECK(dot.out.rfind("digraph groupoid {", 0) == 0);

  auto reduced = isg("reduce --semigroup " + data("i2.json") + " --units e1,e2 --format json");
  CHECK(nlohmann::json::parse(reduced.out)["result"]["arrows"].size() == 4);
  CHECK(isg("reduce --semigroup " + data("i2.json") + " --units t12").status == 2);

  CHECK(isg("tight-groupoid --semigroup 'cyclic_group(2)'").status == 2);
  CHECK(isg("universal-groupoid --semigroup 'cyclic_group(2)'").status == 2);
  CHECK(isg("universal-groupoid --semigroup 'cyclic_group(2)' --adjoin-improper").status == 0);

  auto filters = isg("tight-filters --semigroup " + data("e4.json") + " --format json --check-level full");
  CHECK(filters.status == 0);
  auto f = nlohmann::json::parse(filters.out);
  CHECK(f["result"]["filters"].size() == 2);
  CHECK(f["checks"][0]["ok"] == true);
}

TEST_CASE("pseudogroup, spectrum and embedding") {
  auto p = isg("pseudogroup --semigroup " + data("e4.json") + " --coverage tight --format json");
  REQUIRE(p.status == 0);
  CHECK(nlohmann::json::parse(p.out)["result"]["ideals"].size() == 4);
  CHECK(isg("pseudogroup --semigroup " + data("e4.json") + " --coverage " + data("e4-cover.json")).status == 0);

  auto sp = isg("spectrum --semigroup 'chain_semilattice(3)' --format json");
  auto sj = nlohmann::json::parse(sp.out);
  CHECK(sj["result"]["points"].size() == 2);
  CHECK(sj["result"]["opens"].size() == 3);
  CHECK(isg("spectrum --semigroup " + data("i2.json")).status == 2);

  const std::string nu = "isg_cli_nucleus.json";
  std::ofstream(nu) << R"({"fixed": ["a", "1"]})";
  auto e = isg("embed --semigroup " + data("e4.json") + " --nucleus " + nu);
  CHECK(e.status == 0);
  CHECK(e.out.find("PASS embedding") != std::string::npos);
  // nu(a) nu(b) = 1 is not below nu(ab) = 0
  std::ofstream(nu) << R"({"fixed": ["0", "1"]})";
  CHECK(isg("embed --semigroup " + data("e4.json") + " --nucleus " + nu).status == 2);
  std::remove(nu.c_str());
}
