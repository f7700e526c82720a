#include <doctest.h>

#include <fstream>
#include <initializer_list>
#include <sstream>
#include <string>
#include <vector>

#include "helpers.hpp"
#include "viswork/cli_app.hpp"

using namespace viswork;

namespace {

struct CliResult {
  int rc = 0;
  std::string out;
  std::string err;
};

CliResult run_cli(std::initializer_list<const char*> args) {
  std::vector<const char*> argv = {"viswork"};
  argv.insert(argv.end(), args.begin(), args.end());
  std::ostringstream out, err;
  int rc = cli_main(static_cast<int>(argv.size()), argv.data(), out, err);
  return {rc, out.str(), err.str()};
}

bool contains(const std::string& hay, const std::string& needle) {
  return hay.find(needle) != std::string::npos;
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("no subcommand prints usage and fails") {
  CliResult r = run_cli({});
  CHECK(r.rc == 2);
  CHECK((contains(r.out, "Usage") || contains(r.err, "Usage") ||
         contains(r.out, "compute") || contains(r.err, "compute")));
}

TEST_CASE("compute on a generated convex instance") {
  CliResult r = run_cli({"compute", "--gen", "convex:n=4,seed=0"});
  CHECK(r.rc == 0);
  CHECK(contains(r.out, "P0 4 2\nV 2\nV 3\nV 0\nV 1\n"));
  CHECK(contains(r.out, "# family,n,r,r_out,algo"));
  CHECK(contains(r.out, "# convex,4,0,0,scan"));
}

TEST_CASE("compute needs exactly one input source") {
  CHECK(run_cli({"compute"}).rc == 2);
  CHECK(run_cli({"compute", "--gen", "comb:m=1", "--input", "x.txt"}).rc == 2);
  CHECK(run_cli({"compute", "--gen", "comb:m=1", "--algo", "bogus"}).rc == 2);
}

TEST_CASE("all algorithms produce the same digest through the CLI") {
  CliResult scan = run_cli({"compute", "--gen", "comb:m=2,seed=1"});
  CHECK(scan.rc == 0);
  CHECK(contains(scan.out, "3ea2527e07aaaa85"));
  CliResult det = run_cli({"compute", "--gen", "comb:m=2,seed=1", "--algo",
                           "dnc-det", "--s", "2"});
  CHECK(det.rc == 0);
  CHECK(contains(det.out, "3ea2527e07aaaa85"));
  CliResult rnd = run_cli({"compute", "--gen", "comb:m=2,seed=1", "--algo",
                           "dnc-rand", "--seed", "7", "--validate"});
  CHECK(rnd.rc == 0);
  CHECK(contains(rnd.out, "3ea2527e07aaaa85"));
}

TEST_CASE("json and svg output formats") {
  CliResult j = run_cli({"compute", "--gen", "convex:n=4,seed=0", "--format",
                         "json"});
  CHECK(j.rc == 0);
  CHECK(contains(j.out, "\"events\""));
  CHECK(contains(j.out, "\"report\""));
  CHECK(contains(j.out, "\"digest\""));

  CliResult s = run_cli({"compute", "--gen", "comb:m=2,seed=1", "--format",
                         "svg"});
  CHECK(s.rc == 0);
  CHECK(contains(s.out, "<svg"));
  CHECK(contains(s.out, "</svg>"));
}

TEST_CASE("degenerate instances fail with their specific error") {
  CliResult a = run_cli({"compute", "--gen", "degenerate:kind=collinear-pair"});
  CHECK(a.rc == 3);
  CHECK(contains(a.err, "DegenerateInput"));
  CliResult b = run_cli({"compute", "--gen", "degenerate:kind=q-on-boundary"});
  CHECK(b.rc == 3);
  CHECK(contains(b.err, "ViewpointOutside"));
  CliResult c = run_cli({"verify", "--spec", "degenerate:kind=vertex-on-p0-ray"});
  CHECK(c.rc == 3);
  CHECK(contains(c.err, "on purpose"));
}

TEST_CASE("file round-trip through gen and compute") {
  CliResult g = run_cli({"gen", "--spec", "comb:m=1,seed=0", "--out",
                         "cli_roundtrip.txt"});
  CHECK(g.rc == 0);
  CliResult c = run_cli({"compute", "--input", "cli_roundtrip.txt"});
  CHECK(c.rc == 0);
  CHECK(contains(c.out, "# file,8,2,1,scan"));

  CHECK(run_cli({"gen"}).rc == 2);  // --spec is required
  CliResult missing = run_cli({"compute", "--input", "no_such_file.txt"});
  CHECK(missing.rc == 3);
}

TEST_CASE("strict mode is on by default for small files and can be disabled") {
  {
    std::ofstream f("cli_lax.txt");
    f << "5\n0 0\n4 0\n4 4\n0 4\n1 1\nq 2 2\n";
  }
  CliResult strict = run_cli({"compute", "--input", "cli_lax.txt"});
  CHECK(strict.rc == 3);
  CHECK(contains(strict.err, "two vertices collinear with the viewpoint"));

  // lax load admits the instance; the scan itself then trips over the
  // collinear corner when classifying its turn direction
  CliResult lax = run_cli({"compute", "--input", "cli_lax.txt", "--no-strict"});
  CHECK(lax.rc == 3);
  CHECK(contains(lax.err, "DegenerateInput"));
  CHECK(contains(lax.err, "vertex neighbor collinear"));
  CHECK_FALSE(contains(lax.err, "two vertices collinear"));
}

TEST_CASE("verify crosses every algorithm against the reference") {
  CliResult ok = run_cli({"verify", "--spec", "comb:m=2,seed=1", "--spec",
                          "convex:n=6,seed=3", "--s-list", "1,2", "--seeds",
                          "0,1"});
  CHECK(ok.rc == 0);
  CHECK(contains(ok.out, "ok comb:m=2,seed=1"));
  CHECK(contains(ok.out, "ok convex:n=6,seed=3"));
  // scan + dnc-det x {1,2} + dnc-rand x {1,2}x{0,1} = 7 runs per instance
  CHECK(contains(ok.out, "(7 runs)"));
  CHECK(contains(ok.out, "verified 2 instances, 14 runs, 0 mismatches"));
}

TEST_CASE("fault injection proves the verifier can fail") {
  CliResult bad = run_cli({"verify", "--spec", "comb:m=2,seed=1",
                           "--inject-fault"});
  CHECK(bad.rc == 1);
  CHECK(contains(bad.out, "MISMATCH"));
}

TEST_CASE("verify mixes generator specs with positional instance files") {
  CHECK(run_cli({"gen", "--spec", "star:n=16,seed=5", "--out",
                 "cli_star.txt"}).rc == 0);
  // --spec must take exactly one value so the file stays positional
  CliResult r = run_cli({"verify", "--spec", "comb:m=2,seed=1",
                         "cli_star.txt", "--s-list", "1"});
  CHECK(r.rc == 0);
  CHECK(contains(r.out, "ok comb:m=2,seed=1"));
  CHECK(contains(r.out, "ok cli_star.txt"));
  CHECK(contains(r.out, "verified 2 instances"));
}

TEST_CASE("bench emits one csv row per instance, config and repetition") {
  CliResult r = run_cli({"bench", "--spec", "comb:m=1,seed=0", "--algos",
                         "scan,dnc-det", "--s-list", "2", "--reps", "2"});
  CHECK(r.rc == 0);
  std::istringstream lines(r.out);
  std::string line;
  std::vector<std::string> rows;
  while (std::getline(lines, line)) rows.push_back(line);
  REQUIRE(rows.size() == 6);  // banner + header + 2 configs x 2 reps
  CHECK(rows[0] == "# viswork-bench v1");
  CHECK(rows[1].substr(0, 9) == "family,n,");
  CHECK(rows[2].substr(0, 16) == "comb:m=1,seed=0,");
  CHECK(contains(rows[4], "dnc-det"));
}

}  // TEST_SUITE
