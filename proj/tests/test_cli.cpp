#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <sstream>

#include "golden_cases.hpp"
#include "wittkit/cli.hpp"

using namespace wittkit;

namespace {

struct Run {
  int status;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int status = run_command(args, out, err);
  return {status, out.str(), err.str()};
}

}  // namespace

TEST_CASE("golden outputs") {
  for (const auto& c : golden::cases()) {
    CAPTURE(c.file);
    const auto r = run(c.args);
    CHECK(r.status == 0);
    CHECK(r.out == golden::read_file(std::string(WITTKIT_GOLDEN_DIR) + "/" + c.file));
  }
}

TEST_CASE("witt commands") {
  CHECK(run({"witt", "add", "--prec", "2", "1 - 2*t", "1 - 3*t"}).out == "1 - 5*t + 6*t^2\n");
  CHECK(run({"witt", "mul", "--prec", "1", "1 - 2*t", "1 - 3*t"}).out == "1 - 6*t\n");
  CHECK(run({"witt", "neg", "--prec", "3", "1 - t"}).out == "1 + t + t^2 + t^3\n");
  CHECK(run({"witt", "scalar", "-m", "2", "--ring", "Fp:2", "--prec", "2", "1 + t"}).out == "1 + t^2\n");
  CHECK(run({"witt", "scalar", "-m", "-1", "--prec", "2", "1 - t"}).out == "1 + t + t^2\n");
  CHECK(run({"witt", "frob", "-n", "2", "--prec", "1", "1 - 3*t"}).out == "1 - 9*t\n");
  CHECK(run({"witt", "teich", "--prec", "3", "2"}).out == "1 - 2*t\n");
  CHECK(run({"witt", "ghost", "--prec", "2", "1 - t - t^2 + t^3"}).out == "[1, 3]\n");
  CHECK(run({"witt", "decompose", "--prec", "2", "1 - t - t^2"}).out == "[1, 1]\n");
  CHECK(run({"witt", "reconstruct", "--prec", "3", "[0, 0, 5]"}).out == "1 - 5*t^3\n");
  CHECK(run({"witt", "filtration", "--prec", "5", "1 - t^3"}).out == "3\n");
  CHECK(run({"witt", "filtration", "--prec", "5", "1"}).out == "zero\n");
}

TEST_CASE("rw and endo commands") {
  CHECK(run({"rw", "mul", "1 - 3*t + 2*t^2", "1 - 5*t"}).out == "1 - 15*t + 50*t^2\n");
  CHECK(run({"rw", "frob", "-n", "2", "1 - 3*t + 2*t^2"}).out == "1 - 5*t + 4*t^2\n");
  CHECK(run({"rw", "versch", "-n", "2", "1 - 3*t"}).out == "1 - 3*t^2\n");
  CHECK(run({"rw", "neg", "1 - 3*t"}).out == "(1)/(1 - 3*t)\n");
  CHECK(run({"rw", "expand", "--prec", "3", "(1)/(1 - t)"}).out == "1 + t + t^2 + t^3\n");
  CHECK(run({"rw", "eq", "(1 - t^2)/(1 - t)", "1 + t"}).out == "true\n");
  CHECK(run({"endo", "frob", "-l", "2", "[[1,1],[0,2]]"}).out == "[[1,3],[0,4]]\n");
  CHECK(run({"endo", "tensor", "[[2]]", "[[3]]"}).out == "[[6]]\n");
  CHECK(run({"endo", "dsum", "[[2]]", "[[3]]"}).out == "[[2,0],[0,3]]\n");
  CHECK(run({"endo", "nilindex", "--ring", "Zmod:4", "[[2]]"}).out == "2\n");
  CHECK(run({"endo", "nilindex", "--cutoff", "8", "[[1]]"}).out == "not nilpotent within cutoff\n");
  CHECK(run({"endo", "k0", "[[0,1],[0,0]]"}).out == "(2, 1)\n");
}

TEST_CASE("json output and --out") {
  CHECK(run({"witt", "versch", "-n", "2", "--prec", "4", "--json", "1 - 3*t"}).out ==
        "{\"op\":\"witt versch\",\"ring\":\"Z\",\"result\":\"1 - 3*t^2\"}\n");
  const auto path = std::filesystem::temp_directory_path() / "wittkit_cli_out.json";
  std::filesystem::remove(path);
  const auto r = run({"endo", "char", "[[1,1],[0,2]]", "--out", path.string()});
  CHECK(r.status == 0);
  CHECK(golden::read_file(path.string()).find("\"result\":\"1 - 3*t + 2*t^2\"") != std::string::npos);
  std::filesystem::remove(path);
}

TEST_CASE("exit codes") {
  CHECK(run({"--help"}).status == 0);
  CHECK(run({}).status == 2);
  CHECK(run({"witt", "bogus"}).status == 2);
  CHECK(run({"witt", "add", "--prec", "2", "1 - 2*t"}).status == 2);
  const auto bad = run({"witt", "add", "--prec", "2", "1 - 2*t", "2 - 3*t"});
  CHECK(bad.status == 2);
  CHECK(bad.err.find("offending token '2'") != std::string::npos);
  CHECK(run({"witt", "invert-int", "-l", "2", "--ring", "Z"}).status == 2);
  CHECK(run({"witt", "frob", "-n", "0", "1 - t"}).status == 2);
  CHECK(run({"witt", "add", "--ring", "Fp:4", "1", "1"}).status == 2);
  CHECK(run({"verify", "no-such-suite"}).status == 2);
  CHECK(run({"verify", "verfrob-fp", "--ring", "Z"}).status == 2);
  CHECK(run({"verify", "verfrob-fp", "--ring", "Fp:2", "--trials", "5"}).status == 0);
}

TEST_CASE("verify output is deterministic and independent of threading") {
  const std::vector<std::string> args{"verify", "all", "--ring", "Fp:2", "--prec", "6", "--trials", "20", "--json"};
  const auto a = run(args), b = run(args);
  auto serial_args = args;
  serial_args.push_back("--serial");
  const auto c = run(serial_args);
  CHECK(a.status == 0);
  CHECK(a.out == b.out);
  CHECK(a.out == c.out);
  CHECK(a.out.find("\"seconds\"") == std::string::npos);
  auto timed = args;
  timed.push_back("--timing");
  CHECK(run(timed).out.find("\"seconds\"") != std::string::npos);
}
