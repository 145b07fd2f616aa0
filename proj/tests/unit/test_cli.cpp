#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <unistd.h>

#include "cli.hpp"
#include "ginprop/ci_demo.hpp"
#include "ginprop/factor_theorem.hpp"
#include "ginprop/json_io.hpp"
#include "helpers.hpp"

using namespace ginprop;
namespace fs = std::filesystem;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run_cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

class TempDir {
 public:
  TempDir() {
    path_ = fs::temp_directory_path() / ("ginprop_cli_" + std::to_string(counter_++) + "_" +
                                         std::to_string(::getpid()));
    fs::create_directories(path_);
  }
  ~TempDir() { fs::remove_all(path_); }
  std::string write(const std::string& name, const std::string& text) const {
    auto p = path_ / name;
    std::ofstream(p) << text;
    return p.string();
  }

 private:
  static inline int counter_ = 0;
  fs::path path_;
};

const char* kQuadrics =
    "s=4 d=2 order=revlex\n"
    "7*x1^2 + 79*x1*x2 - 78*x2^2 + 78*x1*x3 - 54*x2*x3 + 38*x3^2 + 11*x1*x4 - 20*x2*x4\n"
    "64*x1^2 + 34*x1*x2 - 24*x2^2 - 90*x1*x3 + 79*x2*x3 + 74*x3^2 - 93*x1*x4 - 14*x2*x4\n"
    "16*x1^2 + 91*x1*x2 - 91*x2^2 - 90*x1*x3 - 11*x2*x3 + 61*x3^2 + 44*x1*x4 - 54*x2*x4\n";

}  // namespace

TEST_CASE("unknown subcommand is a usage error") {
  auto r = run_cli({"bogus-subcommand"});
  CHECK(r.code == cli::kUsageError);
  CHECK_FALSE(r.err.empty());
  CHECK(run_cli({}).code == cli::kUsageError);
  CHECK(run_cli({"gin"}).code == cli::kUsageError);
}

TEST_CASE("help exits cleanly") {
  auto r = run_cli({"--help"});
  CHECK(r.code == 0);
  CHECK(r.out.find("ci-demo") != std::string::npos);
}

TEST_CASE("load_subspace") {
  TempDir dir;
  std::ostringstream warn;
  cli::RunConfig config;
  auto v = cli::load_subspace(dir.write("q.txt", kQuadrics), config, warn);
  CHECK(v.dim() == 3);
  CHECK(v.num_vars() == 4);
  CHECK(warn.str().empty());

  auto zero = cli::load_subspace(dir.write("e.txt", "s=3 d=2 order=revlex\n"), config, warn);
  CHECK(zero.dim() == 0);
  CHECK(zero.degree() == 2);

  config.vars = 5;
  config.order = MonomialOrder::lex;
  config.order_given = true;
  std::ostringstream warn2;
  auto w = cli::load_subspace(dir.write("q2.txt", kQuadrics), config, warn2);
  CHECK(w.num_vars() == 4);
  CHECK(w.order() == MonomialOrder::revlex);
  CHECK(warn2.str().find("warning") != std::string::npos);

  try {
    cli::load_subspace(dir.write("bad.txt", "s=3\nx1^2\nx1*x2\nx3\n"), cli::RunConfig{}, warn);
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 4);
  }
  CHECK_THROWS(cli::load_subspace(dir.write("none.txt", ""), cli::RunConfig{}, warn));
  CHECK_THROWS(cli::load_subspace("/nonexistent/file.txt", cli::RunConfig{}, warn));
}

TEST_CASE("parse errors map to exit code 3") {
  TempDir dir;
  auto bad = dir.write("bad.txt", "s=2 d=2\nx1^2 +\n");
  auto r = run_cli({"in", bad});
  CHECK(r.code == cli::kUsageError);
  CHECK(r.err.find("line 2") != std::string::npos);
  CHECK(run_cli({"gcd", "--vars", "2", "x1 + x2^2", "x1"}).code == cli::kUsageError);
  CHECK(run_cli({"gcd", "x1", "x1"}).code == cli::kUsageError);
}

TEST_CASE("in and restrict") {
  TempDir dir;
  auto f = dir.write("v.txt", "s=3 d=2 order=revlex\nx1*x3 - x2^2\nx1^2\n");
  auto r = run_cli({"in", f});
  CHECK(r.code == 0);
  CHECK(r.out == "in(V) = x1^2, x2^2\n");
  auto lex = run_cli({"in", dir.write("w.txt", "s=3 d=2 order=lex\nx1*x3 - x2^2\n")});
  CHECK(lex.out == "in(V) = x1*x3\n");
  auto rs = run_cli({"restrict", dir.write("u.txt", "s=4 d=2\nx1*x4\nx2^2\n")});
  CHECK(rs.code == 0);
  CHECK(rs.out == "s=3 d=2 order=revlex\nx2^2\n");
}

TEST_CASE("gcd subcommand") {
  auto r = run_cli({"gcd", "--vars", "2", "x1^2 - x2^2", "x1^2 + 2*x1*x2 + x2^2"});
  CHECK(r.code == 0);
  CHECK(r.out == "x1 + x2\n");
  auto j = run_cli({"gcd", "--vars", "2", "--json", "x1^2*x2", "x1*x2^2"});
  CHECK(Json::parse(j.out)["gcd"] == "x1*x2");
}

TEST_CASE("gin subcommand is deterministic and round trips") {
  TempDir dir;
  auto f = dir.write("q.txt", kQuadrics);
  auto a = run_cli({"gin", "--vars", "4", "--order", "revlex", "--seed", "7", "--json", f});
  auto b = run_cli({"gin", "--vars", "4", "--order", "revlex", "--seed", "7", "--json", f});
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  auto j = Json::parse(a.out);
  CHECK(j["result"] == Json::array({"x1^2", "x1*x2", "x2^2"}));
  CHECK(j["stable"] == true);
  auto report = gin_report_from_json(j, 4, 2);
  CHECK(to_json(report) == j);
  auto v = cli::load_subspace(f, cli::RunConfig{}, std::cerr);
  auto direct = gin_subspace(v, GinOptions{.seed = 7});
  CHECK(report.result == direct.result);
  CHECK(report.seeds == direct.seeds);
}

TEST_CASE("gin-ideal and the mixed order") {
  TempDir dir;
  auto f = dir.write("q.txt", kQuadrics);
  auto r = run_cli({"gin-ideal", "--seed", "2", f});
  CHECK(r.code == 0);
  CHECK(r.out.find("(x1^2, x1*x2, x2^2, x1*x3^2, x2*x3^2, x3^4)") != std::string::npos);
  auto m = run_cli({"gin-ideal", "--order", "mixed", "--seed", "2", "--json", f});
  CHECK(Json::parse(m.out)["result"] == to_json(ideal_j2()));
  auto mixed_degrees = dir.write("g.txt", "s=3 order=revlex\nx1^2\nx2^3\n");
  auto g = run_cli({"gin-ideal", "--dmax", "3", mixed_degrees});
  CHECK(g.code == 0);
}

TEST_CASE("make-instance, factor and verify") {
  TempDir dir;
  auto made = run_cli({"make-instance", "--vars", "4", "--r", "3", "--n", "1", "--m", "1", "--seed", "5"});
  REQUIRE(made.code == 0);
  auto f = dir.write("inst.txt", made.out);
  auto inst = make_instance(4, 3, 1, 1, 5, 100);
  CHECK(cli::load_subspace(f, cli::RunConfig{}, std::cerr) == inst.v);

  auto fac = run_cli({"factor", "--json", f});
  CHECK(Json::parse(fac.out)["p"] == format_form(inst.p));
  CHECK(Json::parse(fac.out)["m"] == 1);

  auto ver = run_cli({"verify", "--seed", "3", "--json", f});
  CHECK(ver.code == 0);
  auto j = Json::parse(ver.out);
  CHECK(j["status"] == "verified");
  auto cert = certificate_from_json(j["certificate"], 4);
  CHECK(cert.checked);
  CHECK(cert.factor_degree == 1);
  CHECK(to_json(cert) == j["certificate"]);
  CHECK(multiply_subspace(cert.cofactor_space, cert.p) == inst.v);

  auto mj = Json::parse(run_cli({"make-instance", "--vars", "3", "--seed", "5", "--json"}).out);
  CHECK(mj["params"]["m"] == 1);
}

TEST_CASE("verify on generic quadrics is not applicable") {
  TempDir dir;
  auto r = run_cli({"verify", "--seed", "3", dir.write("q.txt", kQuadrics)});
  CHECK(r.code == 0);
  CHECK(r.out.find("status: not-applicable") != std::string::npos);
}

TEST_CASE("probe subcommand") {
  TempDir dir;
  auto made = run_cli({"make-instance", "--vars", "4", "--seed", "9"});
  auto r = run_cli({"probe", "--m", "1", "--trials", "5", "--seed", "9", "--json", dir.write("i.txt", made.out)});
  CHECK(r.code == 0);
  auto j = Json::parse(r.out);
  CHECK(j["section_degrees"].size() == 5);
  CHECK(j["anomaly"] == false);
}

TEST_CASE("hilbert, borel and colon") {
  auto h = run_cli({"hilbert", "--vars", "4", "--ideal", "x1^2, x1*x2, x2^2, x1*x3^2, x2*x3^2, x3^4"});
  CHECK(h.out == "h(0) = 1\nh(1) = 4\nh(2) = 7\nh(3) = 8\nh(4) = 8\n");
  auto hj = run_cli({"hilbert", "--vars", "4", "--degree", "2", "--json", "--ideal", "0"});
  CHECK(Json::parse(hj.out)["values"] == Json::array({10}));
  CHECK(run_cli({"borel", "--vars", "2", "--ideal", "x2^2"}).out == "not Borel-fixed\n");
  CHECK(run_cli({"borel", "--vars", "4", "--ideal", "x1^2, x1*x2, x1*x3, x2^3, x2^2*x3, x2*x3^2, x3^4"}).out ==
        "Borel-fixed\n");
  auto c = run_cli({"colon", "--vars", "4", "--ideal", "x1*x4"});
  CHECK(c.out == "J : x4 = (x1)\nnot saturated\n");
  TempDir dir;
  auto file = dir.write("j.txt", "x1^2, x1*x2\nx2^2\n");
  CHECK(run_cli({"borel", "--vars", "3", file}).out == "Borel-fixed\n");
}

TEST_CASE("enumerate subcommand") {
  auto r = run_cli({"enumerate", "--vars", "4", "--hf", "1,4,7,8", "--dmax", "4"});
  CHECK(r.code == 0);
  CHECK(r.out ==
        "(x1^2, x1*x2, x2^2, x1*x3^2, x2*x3^2, x3^4)\n"
        "(x1^2, x1*x2, x1*x3, x2^3, x2^2*x3, x2*x3^2, x3^4)\n");
  CHECK(run_cli({"enumerate", "--vars", "4", "--hf", "1,4,x"}).code == cli::kUsageError);
}

TEST_CASE("ci-demo subcommand") {
  auto a = run_cli({"ci-demo", "--seed", "1"});
  CHECK(a.code == 0);
  const std::string tail = "gin = J1: PASS\n";
  REQUIRE(a.out.size() >= tail.size());
  CHECK(a.out.substr(a.out.size() - tail.size()) == tail);
  auto j1 = run_cli({"ci-demo", "--seed", "1", "--json"});
  auto j2 = run_cli({"ci-demo", "--seed", "1", "--json"});
  CHECK(j1.out == j2.out);
  auto j = Json::parse(j1.out);
  CHECK(j["steps"].size() == 5);
  CHECK(Json::parse(j.dump()) == j);
}
