#include <filesystem>
#include <fstream>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "doctest.h"
#include "hotspots/error.hpp"
#include "hotspots/io.hpp"

namespace fs = std::filesystem;
using namespace hotspots;

namespace {

struct Result {
  int code = 0;
  std::string out;
  std::string err;
};

Result run_cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

fs::path scratch_dir(const std::string& name) {
  const fs::path p = fs::temp_directory_path() / ("hotspots_cli_test_" + name);
  fs::remove_all(p);
  fs::create_directories(p);
  return p;
}

std::vector<double> solve_values(const std::string& text) {
  std::vector<double> v;
  std::istringstream is(text);
  std::string line;
  while (std::getline(is, line)) {
    std::istringstream ls(line);
    int i;
    double x;
    if (ls >> i >> x) v.push_back(x);
  }
  return v;
}

}  // namespace

TEST_CASE("solve prints extrapolated rectangle eigenvalues") {
  const fs::path dir = scratch_dir("solve");
  const Result r = run_cli({"solve", "--domain", "rect:2,1", "--bc", "all:N", "--k", "4", "--out", dir.string()});
  REQUIRE(r.code == 0);
  const auto v = solve_values(r.out);
  REQUIRE(v.size() == 4);
  const double pi2 = std::numbers::pi * std::numbers::pi;
  CHECK(std::abs(v[0]) < 1e-8);
  CHECK(v[1] == doctest::Approx(pi2 / 4).epsilon(1e-8));
  CHECK(v[2] == doctest::Approx(pi2).epsilon(1e-6));
  CHECK(v[3] == doctest::Approx(pi2).epsilon(1e-6));
  CHECK(fs::exists(dir / "solve.json"));
  CHECK(fs::exists(dir / "config.json"));
}

TEST_CASE("usage and configuration errors exit with 3") {
  CHECK(run_cli({}).code == 3);
  CHECK(run_cli({"frobnicate"}).code == 3);
  const Result bad = run_cli({"solve", "--domain", "L:1,2"});
  CHECK(bad.code == 3);
  CHECK(bad.err.find("configuration error") != std::string::npos);
  CHECK(run_cli({"solve", "--domain", "L:1,1,-1,1"}).code == 3);
  CHECK(run_cli({"verify", "--claim", "nonsense", "--params", "1,1,1,1"}).code == 3);
}

TEST_CASE("malformed configuration file reports its line") {
  const fs::path dir = scratch_dir("config");
  const fs::path cfg = dir / "bad.json";
  std::ofstream(cfg) << "{\n  \"domain\": {\"type\": \"rect\", \"params\": [1, 1]},\n  \"levels\": ,\n}\n";
  const Result r = run_cli({"solve", "--config", cfg.string(), "--out", dir.string()});
  CHECK(r.code == 3);
  CHECK(r.err.find("bad.json:3") != std::string::npos);

  const fs::path typed = dir / "typed.json";
  std::ofstream(typed) << R"({"domain": {"type": "rect", "params": [1, 1]}, "mesh": {"levels": "three"}})";
  const Result t = run_cli({"solve", "--config", typed.string(), "--out", dir.string()});
  CHECK(t.code == 3);
  CHECK(t.err.find("mesh.levels") != std::string::npos);
}

TEST_CASE("configuration file drives a solve") {
  const fs::path dir = scratch_dir("good");
  const fs::path cfg = dir / "run.json";
  std::ofstream(cfg) << R"({"domain": {"type": "rect", "params": [1, 1], "bc": {"all": "N", "e4": "D"}},
                            "mesh": {"levels": 2}, "solver": {"k": 1}})";
  const Result r = run_cli({"solve", "--config", cfg.string(), "--out", dir.string()});
  REQUIRE(r.code == 0);
  const auto v = solve_values(r.out);
  REQUIRE(v.size() == 1);
  CHECK(v[0] == doctest::Approx(std::numbers::pi * std::numbers::pi / 4).epsilon(1e-4));
}

TEST_CASE("verify writes a report and exits 0 on the unit L") {
  const fs::path dir = scratch_dir("verify");
  const Result r = run_cli({"verify", "--claim", "mainthm", "--params", "1,1,1,1", "--out", dir.string()});
  CHECK(r.code == 0);
  CHECK(r.out.find("overall pass") != std::string::npos);
  CHECK(fs::exists(dir / "mainthm.json"));
  std::ifstream csv(dir / "mainthm_summary.csv");
  std::string header, row;
  std::getline(csv, header);
  std::getline(csv, row);
  CHECK(header == "claim,domain,params,levels,status,margin,value,error");
  CHECK(row.rfind("mainthm,L,\"1,1,1,1\",1281;4961;19521,pass,", 0) == 0);
}

TEST_CASE("domain JSON round trip") {
  const DomainSpec d = with_dirichlet(build_L({1, 2, 3, 4}), {1, 5});
  const DomainSpec back = domain_from_json(domain_to_json(d));
  CHECK(back.kind == DomainKind::L);
  CHECK(back.params == d.params);
  CHECK(back.edge(1).bc.kind == BcKind::dirichlet);
  CHECK(back.edge(5).bc.kind == BcKind::dirichlet);
  CHECK(back.edge(2).bc.kind == BcKind::neumann);
  CHECK(domain_to_json(back) == domain_to_json(d));
}

TEST_CASE("argument parsers") {
  CHECK(parse_number_list("1, 2.5,3") == std::vector<double>{1, 2.5, 3});
  CHECK_THROWS(parse_number_list("1,x"));
  const DomainSpec r = parse_domain_arg("rect:2,1");
  CHECK(r.kind == DomainKind::rectangle);
  CHECK(r.area() == doctest::Approx(2.0));
  CHECK(parse_domain_arg("T:1,1,1,1").kind == DomainKind::T);
  CHECK_THROWS(parse_domain_arg("hexagon:1"));
  const BcAssignment bc = parse_bc_arg("all:N,e1:D");
  REQUIRE(bc.others.has_value());
  CHECK(*bc.others == BcKind::neumann);
  CHECK(bc.edges.at(1) == BcKind::dirichlet);
  CHECK(format_number(1.0 / 3.0) == "0.333333333333");
}
