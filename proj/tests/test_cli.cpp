#include <catch_amalgamated.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "ycoupler/catalog.hpp"
#include "ycoupler/cli.hpp"
#include "ycoupler/descriptor.hpp"
#include "ycoupler/spectral.hpp"

using namespace ycoupler;

namespace {

const std::string kFixtures = YCOUPLER_FIXTURES;

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run_cli(std::vector<std::string> args) {
  args.insert(args.begin(), "ycoupler");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::size_t count_lines(const std::string& s) { return static_cast<std::size_t>(std::count(s.begin(), s.end(), '\n')); }

}  // namespace

TEST_CASE("device prints the matrix and its symmetry report") {
  const auto o = run_cli({"device", "--type", "symmetric_y"});
  CHECK(o.code == cli::kExitOk);
  CHECK(o.out ==
        "device symmetric_y (3 ports)\n"
        "0+0i  0.707106781187+0i  0.707106781187+0i\n"
        "0.707106781187+0i  -0.5+0i  0.5+0i\n"
        "0.707106781187+0i  0.5+0i  -0.5+0i\n"
        "unitary=true deviation=0\n"
        "reciprocal=true deviation=0\n"
        "circulant=false deviation=0.5\n"
        "feed_forward=true,false,false\n");
  CHECK(o.err.empty());
}

TEST_CASE("every catalog type is reachable") {
  for (const auto& type : device_types()) {
    if (type == "matrix") continue;
    const auto o = run_cli({"device", "--type", type});
    CHECK(o.code == cli::kExitOk);
    CHECK(o.out.find("unitary=true") != std::string::npos);
  }
  const auto m = run_cli({"device", "--type", "matrix", "-p", "entries=[[0,1],[1,0]]"});
  CHECK(m.code == cli::kExitOk);
  const auto p = run_cli({"device", "--type", "y_pm", "-p", "r=0.3333333333333333"});
  CHECK(p.out.find("0.333333333333+0i  0.666666666667+0i  0.666666666667+0i") != std::string::npos);
  const auto c = run_cli({"device", "--type", "circulator", "-p", "n=4", "-p", "j=1"});
  CHECK(c.out.find("reciprocal=false deviation=1") != std::string::npos);
}

TEST_CASE("serialization is exact") {
  const auto o = run_cli({"device", "--type", "unbiased_y", "-p", "a=0.4", "-p", "x=-0.6", "--serialize"});
  REQUIRE(o.code == 0);
  std::istringstream in(o.out);
  CHECK(max_abs_difference(read_matrix(in), catalog::unbiased_y({0.4, -0.6, 1})) == 0.0);
}

TEST_CASE("compose") {
  const auto g = run_cli({"compose", "--netlist", kFixtures + "/grover4.json"});
  CHECK(g.code == 0);
  CHECK(g.out.find("-0.5+0i  0.5+0i  0.5+0i  0.5+0i\n0.5+0i  -0.5+0i  0.5+0i  0.5+0i\n") != std::string::npos);
  CHECK(g.out.find("condition_estimate=1\n") != std::string::npos);
  CHECK(g.out.find("circulant=true") != std::string::npos);

  const auto m = run_cli({"compose", "--netlist", kFixtures + "/michelson.json"});
  CHECK(m.out.find("0+0i  1+0i\n1+0i  0+0i\n") != std::string::npos);

  const auto l = run_cli({"compose", "--netlist", kFixtures + "/loop_mirror.json"});
  CHECK(l.out.find("effective (1 port: Y.1)\n1+0i\n") != std::string::npos);
  CHECK(l.out.find("dark_state_projected=true") != std::string::npos);

  const auto d = run_cli({"compose", "--netlist", kFixtures + "/dark_state.json"});
  CHECK(d.code == cli::kExitComputation);
  CHECK(d.out.empty());
  CHECK(d.err.find("resonant internal supermode") != std::string::npos);
}

TEST_CASE("sweep") {
  const auto o = run_cli({"sweep", "--arm1", "1.5,1e-3", "--arm2", "1.5,1.2e-3", "--kmin", "1e6", "--kmax", "2e6",
                          "--points", "4"});
  CHECK(o.code == 0);
  std::ostringstream expect;
  spectral::write_csv(expect, spectral::sweep_resonator({1.5, 1e-3}, {1.5, 1.2e-3}, spectral::linear_k_grid(1e6, 2e6, 4)));
  CHECK(o.out == expect.str());

  const auto s = run_cli({"sweep", "--netlist", kFixtures + "/resonator.json", "--arm1", "1.5,1e-3", "--arm2",
                          "1.5,1.2e-3", "--kmin", "1e6", "--kmax", "2e6", "--points", "4"});
  CHECK(s.code == 0);
  CHECK(s.out == o.out);
  const auto builtin = run_cli({"sweep", "--method", "solver", "--arm1", "1.5,1e-3", "--arm2", "1.5,1.2e-3", "--kmin",
                                "1e6", "--kmax", "2e6", "--points", "4"});
  CHECK(builtin.out == s.out);

  CHECK(run_cli({"sweep", "--arm1", "1.5", "--arm2", "1.5,1e-3", "--kmin", "1", "--kmax", "2", "--points", "3"}).code ==
        cli::kExitUsage);
  CHECK(run_cli({"sweep", "--arm1", "1.5,1e-3", "--arm2", "1.5,1e-3", "--kmin", "3", "--kmax", "2", "--points", "3"})
            .code == cli::kExitComputation);
  CHECK(run_cli({"sweep", "--netlist", kFixtures + "/michelson.json", "--arm1", "1,1", "--arm2", "1,1", "--kmin", "1",
                 "--kmax", "2", "--points", "3"})
            .code == cli::kExitComputation);
}

TEST_CASE("hom") {
  const auto o = run_cli({"hom", "--points", "6"});
  CHECK(o.code == 0);
  CHECK(o.out ==
        "r_mag,probability\n"
        "0,1\n0.2,0.8464\n0.4,0.4624\n0.6,0.0784\n0.8,0.0784\n1,1\n");
  CHECK(count_lines(run_cli({"hom"}).out) == 102);
}

TEST_CASE("verify") {
  const auto o = run_cli({"verify"});
  CHECK(o.code == 0);
  CHECK(o.out.find("FAIL") == std::string::npos);
  CHECK(o.out.find(" passed, 0 failed\n") != std::string::npos);
}

TEST_CASE("usage errors and help") {
  CHECK(run_cli({}).code == cli::kExitUsage);
  CHECK(run_cli({"frobnicate"}).code == cli::kExitUsage);
  CHECK(run_cli({"device"}).code == cli::kExitUsage);
  CHECK(run_cli({"device", "--type", "symmetric_y", "--bogus"}).code == cli::kExitUsage);
  CHECK(run_cli({"device", "--type", "y_pm", "-p", "r"}).code == cli::kExitUsage);
  CHECK(run_cli({"device", "--type", "y_pm", "-p", "r=abc"}).code == cli::kExitUsage);
  CHECK(run_cli({"compose", "--netlist", kFixtures + "/nope.json"}).code == cli::kExitUsage);
  CHECK(run_cli({"sweep", "--method", "fast", "--arm1", "1,1", "--arm2", "1,1", "--kmin", "1", "--kmax", "2",
                 "--points", "3"})
            .code == cli::kExitUsage);
  const auto bad = run_cli({"device", "--type", "prism"});
  CHECK(bad.code == cli::kExitComputation);
  CHECK(bad.err.find("unknown device type 'prism'") != std::string::npos);
  CHECK(run_cli({"device", "--type", "y_pm", "-p", "r=1"}).code == cli::kExitComputation);

  const auto h = run_cli({"--help"});
  CHECK(h.code == 0);
  CHECK(h.out.find("compose") != std::string::npos);
  CHECK(run_cli({"sweep", "--help"}).code == 0);
}

TEST_CASE("tolerance from the environment, overridden by --tol") {
  const std::vector<std::string> args{"device", "--type", "y_pm", "-p", "r=0.3"};
  ::setenv(cli::kTolEnv, "1e-30", 1);
  const auto strict = run_cli(args);
  ::setenv(cli::kTolEnv, "garbage", 1);
  const auto garbage = run_cli(args);
  ::setenv(cli::kTolEnv, "1e-30", 1);
  auto loose_args = args;
  loose_args.insert(loose_args.end(), {"--tol", "1e-6"});
  const auto loose = run_cli(loose_args);
  ::unsetenv(cli::kTolEnv);
  const auto dflt = run_cli(args);

  CHECK(strict.out.find("unitary=false") != std::string::npos);
  CHECK(garbage.code == cli::kExitUsage);
  CHECK(loose.out.find("unitary=true") != std::string::npos);
  CHECK(dflt.out.find("unitary=true") != std::string::npos);
  CHECK(run_cli({"device", "--type", "symmetric_y", "--tol", "-1"}).code == cli::kExitUsage);
}

TEST_CASE("output is byte-identical across runs and honours --output") {
  const std::vector<std::vector<std::string>> commands{
      {"device", "--type", "asymmetric_y", "-p", "t=0.6", "-p", "delta=0.4"},
      {"compose", "--netlist", kFixtures + "/resonator.json"},
      {"sweep", "--arm1", "1.5,1e-3", "--arm2", "1.52,1e-3", "--kmin", "1e5", "--kmax", "3e6", "--points", "2001"},
      {"hom", "--points", "51"}};
  for (const auto& c : commands) {
    const auto a = run_cli(c);
    const auto b = run_cli(c);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
  }
  const auto path = std::filesystem::temp_directory_path() / "ycoupler_cli_output.csv";
  const auto o = run_cli({"hom", "--points", "11", "--output", path.string()});
  CHECK(o.code == 0);
  CHECK(o.out.empty());
  std::ifstream in(path);
  std::stringstream buf;
  buf << in.rdbuf();
  CHECK(buf.str() == run_cli({"hom", "--points", "11"}).out);
  std::filesystem::remove(path);
}
