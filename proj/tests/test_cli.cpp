#include <sys/wait.h>
#include <unistd.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "linres/minimalize.hpp"
#include "linres/pfafflab.hpp"
#include "linres/serialize.hpp"

using namespace linres;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

fs::path scratch_dir() {
  static fs::path dir = [] {
    fs::path p = fs::temp_directory_path() / ("linres_cli_" + std::to_string(::getpid()));
    fs::create_directories(p);
    return p;
  }();
  return dir;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Run cli(const std::string& args) {
  fs::path out = scratch_dir() / "stdout.txt", err = scratch_dir() / "stderr.txt";
  std::string cmd = std::string(LINRES_CLI_PATH) + " " + args + " >" + out.string() + " 2>" + err.string();
  int status = std::system(cmd.c_str());
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, slurp(out), slurp(err)};
}

std::string path(const std::string& name) { return (scratch_dir() / name).string(); }

}  // namespace

TEST_CASE("complex and inverse system JSON round trip") {
  auto g = build_generic_Gprime(3, 2);
  CHECK(complex_from_json(complex_to_json(g)) == g);
  auto s = minimize_complex(specialize(build_generic_G(3, 3, 3), catalan_phi(3)));
  CHECK(complex_from_json(Json::parse(dump_json(complex_to_json(s)))) == s);
  InverseSystem phi{3, 2, {{{1, 1, 0}, Rational(1, 3)}, {{0, 0, 2}, -2}}};
  CHECK(invsys_from_json(invsys_to_json(phi)) == phi);
  CHECK(invsys_to_json(phi)["coeffs"]["1,1,0"] == "1/3");
  CHECK_THROWS_AS(invsys_from_json(Json::parse(R"({"d":3,"n":2,"coeffs":{"1,0,0":"1"}})")), std::invalid_argument);
  CHECK_THROWS_AS(complex_from_json(Json::parse(R"({"meta":{"d":3}})")), std::invalid_argument);
}

TEST_CASE("Pfaffian generators") {
  auto r = cli("pfaffian gens --n 2 --check-direct");
  CHECK(r.code == 0);
  CHECK(r.out == "B1 = y^2\nB2 = x*z\nB3 = x*y + z^2\nB4 = y*z\nB5 = x^2\ndirect Pfaffians agree\n");
  auto h = cli("pfaffian hn --n 1");
  CHECK(h.out == "0\tx\tz\n-x\t0\ty\n-z\t-y\t0\n");
}

TEST_CASE("Catalan inverse system") {
  auto r = cli("invsys catalan --n 3");
  REQUIRE(r.code == 0);
  auto j = Json::parse(r.out);
  CHECK(j["coeffs"] == Json{{"2,2,0", "1"}, {"1,1,2", "-1"}, {"0,0,4", "2"}});
  auto m = cli("invsys catalan --n 3 --mu 0");
  CHECK(Json::parse(m.out)["coeffs"]["0,4,0"] == "2");
}

TEST_CASE("inverse system of an ideal") {
  std::ofstream(path("gens.json")) << R"(["x2^2","x1*x3","x1*x2 + x3^2","x2*x3","x1^2"])";
  auto r = cli("invsys from-ideal --gens " + path("gens.json") + " --n 2");
  REQUIRE(r.code == 0);
  auto phi = invsys_from_json(Json::parse(r.out));
  auto neg = catalan_phi(2);
  for (auto& [e, c] : neg.coeffs) c = -c;
  CHECK((phi == catalan_phi(2) || phi == neg));
}

TEST_CASE("colon ideals") {
  auto r = cli("colon --a 2 --b 1 --upto 4");
  CHECK(r.code == 0);
  CHECK(r.out.find("degree 2:") != std::string::npos);
  CHECK(r.out.find("degree 3:") == std::string::npos);
}

TEST_CASE("coefficient table") {
  auto r = cli("mu table --n 3 --mu 2");
  CHECK(r.code == 0);
  CHECK(r.out.find("x*^0 y*^0 z*^1: -6*alpha*beta*gamma + 2*gamma^3") != std::string::npos);
}

TEST_CASE("build, specialize and verify") {
  REQUIRE(cli("invsys catalan --n 2 --out " + path("phi2.json")).code == 0);
  REQUIRE(cli("generic --d 3 --n 2 --r 2 --out " + path("g.json")).code == 0);
  REQUIRE(cli("specialize --complex " + path("g.json") + " --phi " + path("phi2.json") + " --out " + path("s.json")).code == 0);
  auto v = cli("verify --complex " + path("s.json") + " --phi " + path("phi2.json") + " --max-degree 6");
  CHECK(v.code == 0);
  CHECK(Json::parse(v.out)["pass"] == true);
  REQUIRE(cli("resolve --phi " + path("phi2.json") + " --minimal --out " + path("m.json")).code == 0);
  auto m = complex_from_json(read_json_file(path("m.json")));
  CHECK(m.ranks() == std::vector<int>{1, 5, 5, 1});
  auto t = cli("verify --complex " + path("m.json") + " --phi " + path("phi2.json") + " --exact-rank --format text");
  CHECK(t.code == 0);
  CHECK(t.out.find("PASS overall") != std::string::npos);
  auto cas = cli("export-cas --complex " + path("m.json"));
  CHECK(cas.code == 0);
  CHECK(cas.out.find("d1 = map(R^1, R^5") != std::string::npos);
}

TEST_CASE("verification failure exits with 2") {
  std::ofstream(path("deg.json")) << R"({"d":3,"n":2,"coeffs":{"2,0,0":"1","0,2,0":"1"}})";
  REQUIRE(cli("resolve --phi " + path("deg.json") + " --out " + path("deg_c.json")).code == 0);
  auto r = cli("verify --complex " + path("deg_c.json") + " --phi " + path("deg.json"));
  CHECK(r.code == 2);
  CHECK(Json::parse(r.err)["kind"] == "verification");
}

TEST_CASE("validation errors exit with 1 and JSON") {
  auto r = cli("generic --d 3 --n 2 --r 5");
  CHECK(r.code == 1);
  CHECK(Json::parse(r.err).contains("error"));
  auto u = cli("nosuchcommand");
  CHECK(u.code == 1);
  CHECK(Json::parse(u.err)["kind"] == "usage");
  auto missing = cli("verify --complex " + path("absent.json") + " --phi " + path("absent.json"));
  CHECK(missing.code == 1);
}

TEST_CASE("outputs are byte-identical across runs") {
  REQUIRE(cli("gprime --out " + path("gp1.json")).code == 0);
  REQUIRE(cli("gprime --out " + path("gp2.json")).code == 0);
  CHECK(slurp(path("gp1.json")) == slurp(path("gp2.json")));
  CHECK(slurp(path("gp1.json")) == dump_json(complex_to_json(build_generic_Gprime(3, 2))));
}
