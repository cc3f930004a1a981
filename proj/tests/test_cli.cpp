#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "padic/cli.hpp"

namespace {

struct Run {
  int status;
  std::string out;
  std::string err;
};

Run cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  int status = padic::run_cli(args, out, err);
  return {status, out.str(), err.str()};
}

}  // namespace

TEST_CASE("beta command prints digits and residue") {
  auto r = cli({"beta", "--precision", "12"});
  CHECK(r.status == 0);
  CHECK(r.out.find("357187") != std::string::npos);
  CHECK(r.out.find("1 1 0 2 2 2 0 1 0 0 0 2") != std::string::npos);
}

TEST_CASE("gamma command") {
  auto r = cli({"gamma", "--precision", "5"});
  CHECK(r.status == 0);
  CHECK(r.out.find("20") != std::string::npos);
}

TEST_CASE("betagamma regression") {
  auto r = cli({"betagamma", "--precision", "11"});
  CHECK(r.status == 0);
  CHECK(r.out.find("62668") != std::string::npos);
}

TEST_CASE("sum exact prints the equality form") {
  auto r = cli({"sum", "--f", "2", "--mod-exp", "9", "--method", "exact"});
  CHECK(r.status == 0);
  CHECK(r.out.find("S(9) = 17577") != std::string::npos);
}

TEST_CASE("sum fast prints a residue") {
  auto r = cli({"sum", "--f", "6", "--mod-exp", "17", "--method", "fast"});
  CHECK(r.status == 0);
  CHECK(r.out.find("(mod 3^17)") != std::string::npos);
}

TEST_CASE("text and records carry identical residues") {
  auto text = cli({"verify", "sum-beta", "--f", "5", "--e", "2"});
  auto records = cli({"--format", "records", "verify", "sum-beta", "--f", "5", "--e", "2"});
  CHECK(text.status == 0);
  CHECK(records.status == 0);
  CHECK(records.out == "CLAIM id=sum-beta params=f=5,e=2 mod=3^3 lhs=1 rhs=1 pass=true\n");
  CHECK(text.out.find("lhs=1") != std::string::npos);
  // identical invocations are bit-identical
  CHECK(cli({"--format", "records", "verify", "sum-beta", "--f", "5", "--e", "2"}).out ==
        records.out);
}

TEST_CASE("verify all quick exits 0") {
  auto r = cli({"verify", "all", "--level", "quick"});
  CHECK(r.status == 0);
}

TEST_CASE("invalid flags exit 2") {
  CHECK(cli({"sum"}).status == 2);                            // missing required --f
  CHECK(cli({"bogus"}).status == 2);                          // unknown subcommand
  CHECK(cli({"verify", "nonsense"}).status == 2);             // unknown claim
  CHECK(cli({"sum", "--f", "2", "--method", "wat"}).status == 2);
  CHECK(cli({"sum", "--f", "3", "--method", "fast"}).status == 2);  // missing --mod-exp
}

TEST_CASE("failing claim exits 1 and prints the report") {
  // f=2 without the relaxed hypothesis is unsatisfiable -> reported as a failure
  auto r = cli({"verify", "sum-beta", "--f", "2"});
  CHECK(r.status == 1);
  CHECK(r.out.find("FAIL") != std::string::npos);
  CHECK(r.out.find("unsatisfiable") != std::string::npos);
}

TEST_CASE("jacobsthal single and sweep forms") {
  auto single = cli({"verify", "jacobsthal", "--p", "7", "--n", "3", "--k", "1"});
  CHECK(single.status == 0);
  auto sweep = cli({"verify", "jacobsthal", "--p", "3", "--n-max", "10"});
  CHECK(sweep.status == 0);
}

TEST_CASE("help exits 0") {
  CHECK(cli({"--help"}).status == 0);
}
