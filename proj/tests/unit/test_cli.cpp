#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "itergroup/bp_encode.hpp"
#include "itergroup/cycle_transform.hpp"
#include "itergroup/text_format.hpp"

using namespace itergroup;

namespace {

struct Run {
  int code = -1;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "itergroup");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out;
  std::ostringstream err;
  Run r;
  r.code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

std::filesystem::path scratch(const std::string& name) {
  const auto dir = std::filesystem::temp_directory_path() / "itergroup_cli_test";
  std::filesystem::create_directories(dir);
  return dir / name;
}

std::string write_one_node_program() {
  const auto path = scratch("one.bp");
  std::ofstream(path) << "bp 3 1 0 2\n0 1 1 2\n1 sink reject\n2 sink accept\n";
  return path.string();
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("perm calculator") {
  const auto r = run({"perm", "--t", "3", "--op", "compose", "--a", "(1 2)", "--b", "(2 3)"});
  CHECK(r.code == cli::kExitOk);
  CHECK(r.out.find("(1 3 2)") != std::string::npos);
  const auto p = run({"perm", "--t", "4", "--op", "parity", "--a", "(1 2 3 4)"});
  CHECK(p.out.find("odd") != std::string::npos);
}

TEST_CASE("convert writes a script that re-applies") {
  const auto path = scratch("s.script");
  const auto r = run({"convert", "--t", "6", "--from", "(1 2 3)", "--to", "(1 2 3 4 5)", "--out",
                      path.string()});
  REQUIRE(r.code == cli::kExitOk);
  std::ifstream in(path);
  const auto s = read_script(in);
  CHECK(apply_script(parse_permutation("(1 2 3)", 6), s) == parse_permutation("(1 2 3 4 5)", 6));
}

TEST_CASE("compile-bp check agrees with evaluation") {
  const auto bp = write_one_node_program();
  const auto acc = run({"compile-bp", "--bp", bp, "--x", "1", "--check"});
  CHECK(acc.code == cli::kExitOk);
  CHECK(acc.out.find("ACCEPT") != std::string::npos);
  const auto rej = run({"compile-bp", "--bp", bp, "--x", "0", "--check"});
  CHECK(rej.code == cli::kExitOk);
  CHECK(rej.out.find("REJECT") != std::string::npos);
}

TEST_CASE("exact tvd of a coordinate is zero") {
  const auto r = run({"tvd", "--t", "4", "--alpha", "(1 2)(3 4)", "--leak", "coord:1", "--exact"});
  CHECK(r.code == cli::kExitOk);
  CHECK(r.out == "0\n");
}

TEST_CASE("reports record the seed") {
  const auto r = run({"sample", "--t", "5", "--alpha", "(1 2 3)", "--count", "2", "--seed", "17"});
  CHECK(r.code == cli::kExitOk);
  CHECK(r.out.find("seed=17") != std::string::npos);
}

TEST_CASE("reduce-id then reduce-single") {
  const auto bp = write_one_node_program();
  const auto inst = scratch("inst.txt");
  REQUIRE(run({"reduce-id", "--bp", bp, "--x", "1", "--out", inst.string()}).code == cli::kExitOk);
  std::ifstream in(inst);
  std::stringstream text;
  text << in.rdbuf();
  CHECK(text.str().find("# manifest") != std::string::npos);
}

TEST_CASE("sample then reduce-single") {
  const auto vec = scratch("v.txt");
  REQUIRE(run({"sample", "--t", "8", "--alpha", "(1 2 3)", "--count", "1", "--out", vec.string()})
              .code == cli::kExitOk);
  const auto hit = run({"reduce-single", "--t", "8", "--in", vec.string()});
  CHECK(hit.code == cli::kExitOk);
  CHECK(hit.out.find("decision alpha") != std::string::npos);
  CHECK(hit.out.find("witness direct") != std::string::npos);

  REQUIRE(run({"sample", "--t", "8", "--alpha", "()", "--count", "1", "--out", vec.string()}).code ==
          cli::kExitOk);
  const auto miss =
      run({"reduce-single", "--t", "8", "--in", vec.string(), "--mode", "derived", "--budget", "200"});
  CHECK(miss.code == cli::kExitOk);
  CHECK(miss.out.find("decision id") != std::string::npos);
  CHECK(miss.out.find("examined 200 of 103684") != std::string::npos);
}

TEST_CASE("errors exit with the usage code") {
  const auto bad = run({"perm", "--t", "3", "--op", "inverse", "--a", "(1 9)"});
  CHECK(bad.code == cli::kExitUsage);
  CHECK(bad.err.find("error") != std::string::npos);
  CHECK(run({"frobnicate"}).code == cli::kExitUsage);
  CHECK(run({"tvd", "--t", "4", "--alpha", "(1 2)(3 4)", "--leak", "nosuch", "--exact"}).code ==
        cli::kExitUsage);
}

}  // TEST_SUITE
