#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <doctest.h>
#include <json.hpp>

#include "cli.hpp"

using namespace bpb;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> v;
  std::istringstream in(text);
  for (std::string l; std::getline(in, l);) v.push_back(l);
  return v;
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("ranges") {
  CHECK(cli::parse_range("0.1:0.5:0.1") == std::vector<double>{0.1, 0.2, 0.3, 0.4, 0.5});
  CHECK(cli::parse_range("1.25") == std::vector<double>{1.25});
  CHECK(cli::parse_range("0:1:0.25").size() == 5);
  CHECK_THROWS(cli::parse_range("1:0:0.1"));
  CHECK_THROWS(cli::parse_range("a:b"));
  CHECK(cli::parse_list("1,-0.5") == std::vector<double>{1.0, -0.5});
}

TEST_CASE("psi table") {
  const Run r = run({"psi", "--mu", "1", "--theta", "1", "--delta", "0.1:0.5:0.1"});
  CHECK(r.code == cli::kOk);
  const auto rows = lines(r.out);
  REQUIRE(rows.size() == 6);
  CHECK(rows[0] == "delta,psi,upper_bound,lower_bound,lower_exact,status");
  CHECK(rows[5].rfind("0.5,1,", 0) == 0);
}

TEST_CASE("regime rows are flagged, not fatal") {
  const Run mixed = run({"psi", "--mu", "0.5", "--theta", "0.5", "--delta", "0.5:1:0.25"});
  CHECK(mixed.code == cli::kOk);
  CHECK(mixed.out.find("regime_violation") != std::string::npos);
  CHECK(mixed.out.find(",ok") != std::string::npos);
  const Run all_bad = run({"psi", "--mu", "0.1", "--theta", "0.1", "--delta", "0.5"});
  CHECK(all_bad.code == cli::kRegime);
}

TEST_CASE("exit codes") {
  CHECK(run({"distance", "--space", "l9:2", "--x", "1,0", "--f", "1,0"}).code == cli::kUsage);
  CHECK(run({"distance", "--space", "l2:2", "--x", "1,0,0", "--f", "1,0"}).code == cli::kUsage);
  CHECK(run({"nonsense"}).code == cli::kUsage);
  CHECK(run({"--help"}).code == cli::kOk);
  CHECK(run({"modulus", "--space", "l2:2", "--mode", "mut", "--mu", "1", "--theta", "0.5", "--delta", "0.45"}).code ==
        cli::kRegime);
}

TEST_CASE("distance report") {
  const Run r = run({"distance", "--space", "l2:2", "--x", "1,0", "--f", "0,1"});
  REQUIRE(r.code == cli::kOk);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["schema"] == "bpb/1");
  CHECK(j["closed_form"].get<double>() == doctest::Approx(0.7653668647).epsilon(1e-9));
  CHECK(std::abs(j["distance"].get<double>() - 0.7653668647) <= 1e-3);
  CHECK(j.contains("mesh_error"));
}

TEST_CASE("estimates always carry a mesh error") {
  const Run r = run({"modulus", "--space", "hex:2", "--mode", "sphere", "--delta", "0.2:0.4:0.2", "--resolution", "180"});
  REQUIRE(r.code == cli::kOk);
  const auto rows = lines(r.out);
  REQUIRE(rows.size() == 3);
  CHECK(rows[0].find("mesh_error") != std::string::npos);
  const Run j = run({"alpha", "--space", "l1:2", "--resolution", "90"});
  CHECK(nlohmann::json::parse(j.out).contains("mesh_error"));
}

TEST_CASE("seed precedence and output files") {
  const auto dir = std::filesystem::temp_directory_path();
  const std::string a = (dir / "bpb_cli_a.json").string();
  const std::string b = (dir / "bpb_cli_b.json").string();
  ::setenv("BPB_SEED", "99", 1);
  const Run env = run({"convexity", "--space", "lp:3:p=3", "--eps", "1", "--resolution", "64", "-o", a});
  const Run flag = run({"convexity", "--space", "lp:3:p=3", "--eps", "1", "--resolution", "64", "--seed", "99", "-o", b});
  ::unsetenv("BPB_SEED");
  REQUIRE(env.code == cli::kOk);
  REQUIRE(flag.code == cli::kOk);
  std::ifstream fa(a), fb(b);
  const std::string ta((std::istreambuf_iterator<char>(fa)), {}), tb((std::istreambuf_iterator<char>(fb)), {});
  CHECK(!ta.empty());
  CHECK(ta == tb);
  const Run other = run({"convexity", "--space", "lp:3:p=3", "--eps", "1", "--resolution", "64", "--seed", "98"});
  CHECK(other.out != ta);
}

TEST_CASE("witness and describe") {
  const Run w = run({"witness", "--kind", "linf2", "--mu", "1", "--theta", "0.5", "--delta", "1.5", "--check"});
  REQUIRE(w.code == cli::kOk);
  const auto j = nlohmann::json::parse(w.out);
  CHECK(j["predicted"].get<double>() == doctest::Approx(1.5));
  const Run d = run({"describe", "--space", "sum1(r:1,hex:2)"});
  CHECK(d.code == cli::kOk);
  CHECK(d.out.find("\"sum1\"") != std::string::npos);
}

}
