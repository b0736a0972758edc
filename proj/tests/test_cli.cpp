#include "doctest.h"

#include <filesystem>
#include <sstream>

#include "bihecke/cli.hpp"

using namespace bihecke;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::size_t count(const std::string& s, const std::string& needle) {
  std::size_t n = 0;
  for (auto p = s.find(needle); p != std::string::npos; p = s.find(needle, p + 1)) ++n;
  return n;
}

}  // namespace

TEST_CASE("table1 prints one row per descriptor") {
  auto r = cli({"table1", "A3", "B2"});
  CHECK(r.code == kExitOk);
  CHECK(r.out.find("A3 24 71 477 1^8 2^4 3^4 4^6 5^2 62") != std::string::npos);
  CHECK(r.out.find("B2 8 14 49 1^4 2^2 3^2 14") != std::string::npos);
}

TEST_CASE("decomposition as csv") {
  auto r = cli({"--format", "csv", "decomposition", "A2"});
  REQUIRE(r.code == kExitOk);
  CHECK(r.out.find("label,123,132,213,231,312,321") != std::string::npos);
  CHECK(r.out.find("231,0,0,1,1,0,0") != std::string::npos);
}

TEST_CASE("cutting poset as dot") {
  auto r = cli({"--format", "dot", "cutting-poset", "A3"});
  REQUIRE(r.code == kExitOk);
  CHECK(r.out.rfind("digraph", 0) == 0);
  // one node line per element of S4
  std::size_t nodes = 0;
  std::istringstream in(r.out);
  for (std::string line; std::getline(in, line);)
    if (line.size() > 3 && line.find("->") == std::string::npos && line.back() == ';' && line.find('"') != std::string::npos) ++nodes;
  CHECK(nodes == 24);
}

TEST_CASE("json output is parseable text") {
  auto r = cli({"--format", "json", "monoid", "A2"});
  REQUIRE(r.code == kExitOk);
  CHECK(r.out.find("\"size\"") != std::string::npos);
  CHECK(count(r.out, "{") == count(r.out, "}"));
}

TEST_CASE("usage errors exit with 2") {
  CHECK(cli({}).code == kExitUsage);
  CHECK(cli({"frobnicate"}).code == kExitUsage);
  CHECK(cli({"group", "Q7"}).code == kExitUsage);
  CHECK(cli({"cutting-poset", "A2", "4321"}).code == kExitUsage);
  CHECK(cli({"--format", "dot", "simples", "A2"}).code == kExitUsage);
}

TEST_CASE("size caps exit with 1 and name the flag") {
  auto r = cli({"--max-elements", "100", "monoid", "A4"});
  CHECK(r.code == kExitComputation);
  CHECK(r.err.find("--max-elements") != std::string::npos);
  auto q = cli({"qcartan", "A3"});
  CHECK(q.code == kExitComputation);
  CHECK(q.err.find("--slow") != std::string::npos);
}

TEST_CASE("monoid cache round trip") {
  auto dir = std::filesystem::temp_directory_path() / "bihecke_cli_cache_test";
  std::filesystem::remove_all(dir);
  auto first = cli({"--cache-dir", dir.string(), "--format", "json", "monoid", "A2"});
  REQUIRE(first.code == kExitOk);
  bool cached = false;
  for (const auto& e : std::filesystem::directory_iterator(dir)) cached = cached || e.path().extension() == ".bhm";
  CHECK(cached);
  auto second = cli({"--cache-dir", dir.string(), "--format", "json", "monoid", "A2"});
  CHECK(second.code == kExitOk);
  CHECK(second.out == first.out);
  std::filesystem::remove_all(dir);
}

TEST_CASE("check runs the property suite") {
  auto r = cli({"check", "A2"});
  CHECK(r.code == kExitOk);
  CHECK(r.out.find("0 failed") != std::string::npos);
  auto names = cli({"properties"});
  CHECK(names.out.find("blocks.closure") != std::string::npos);
}
