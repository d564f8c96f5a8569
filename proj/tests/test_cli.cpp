// Runs the command-line tool as a subprocess.
#include <doctest.h>
#include <json.hpp>

#include "dunkl/basestates.hpp"
#include "dunkl/radial_ext.hpp"

#include <sys/wait.h>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

namespace {

struct Run {
  int code = -1;
  std::string out;
  std::string err;
};

Run run(const std::string& args) {
  static int counter = 0;
  const auto errfile = std::filesystem::temp_directory_path() /
                       ("dunkl_cli_err_" + std::to_string(::getpid()) + "_" + std::to_string(counter++));
  const std::string cmd = std::string(DUNKL_CLI_PATH) + " " + args + " 2>" + errfile.string();
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  char buf[4096];
  std::size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0)
    r.out.append(buf, got);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  std::ifstream f(errfile);
  std::stringstream ss;
  ss << f.rdbuf();
  r.err = ss.str();
  std::filesystem::remove(errfile);
  return r;
}

std::vector<std::vector<std::string>> csv(const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    std::vector<std::string> cells;
    std::istringstream ls(line);
    std::string cell;
    while (std::getline(ls, cell, ','))
      cells.push_back(cell);
    rows.push_back(cells);
  }
  return rows;
}

std::vector<double> energies(const std::string& text) {
  std::vector<double> e;
  const auto rows = csv(text);
  for (std::size_t i = 1; i < rows.size(); ++i)
    e.push_back(std::stod(rows[i][5]));
  std::sort(e.begin(), e.end());
  return e;
}

}  // namespace

TEST_CASE("spectrum tables") {
  const auto r = run("spectrum --mu1 0.3 --mu2 0.7 --emax 6");
  REQUIRE(r.code == 0);
  const auto rows = csv(r.out);
  CHECK(rows.front() == std::vector<std::string>{"eps1", "eps2", "n", "k", "msq", "energy", "extension"});
  CHECK(rows.size() == 16);
  CHECK(r.out.back() == '\n');

  // undeformed oscillator: energies 1, 2, 3 with 1, 2, 3 states
  const auto e0 = energies(run("spectrum --mu1 0 --mu2 0 --emax 3.5").out);
  std::map<double, int> deg;
  for (double e : e0)
    ++deg[e];
  CHECK(deg == std::map<double, int>{{1.0, 1}, {2.0, 2}, {3.0, 3}});

  // type I and II extensions keep the levels
  const auto base = energies(r.out);
  const auto ext1 = run("spectrum --mu1 0.3 --mu2 0.7 --emax 6 --ext I:1");
  CHECK(ext1.code == 0);
  CHECK(energies(ext1.out) == base);
  CHECK(csv(ext1.out)[1][6] == "I:1");
  const auto ext2 = run("spectrum --mu1 0.3 --mu2 0.7 --emax 6 --ext II:1");
  CHECK(energies(ext2.out) == base);

  const auto j = nlohmann::json::parse(run("spectrum --emax 4 --format json").out);
  CHECK(j.size() == 6);
  CHECK(j[0]["energy"] == 2.0);
  CHECK(j[1]["n"] == 0.5);
}

TEST_CASE("spectrum errors and notes") {
  const auto r3 = run("spectrum --mu1 0.3 --mu2 0.7 --emax 4 --ext III:2");
  CHECK(r3.code == 0);
  CHECK(r3.err.find("skipped n = 0") != std::string::npos);
  CHECK(energies(r3.out).front() == doctest::Approx(-1.0));

  CHECK(run("spectrum --mu1 0.3 --mu2 0.7 --emax 3 --ext II:3").code == 3);
  CHECK(run("spectrum --ext III:1").code == 3);
  CHECK(run("spectrum --mu1 1.2 --mu2 0.2 --angular-ext").code == 3);
  const auto bad = run("spectrum --mu1 -0.6");
  CHECK(bad.code == 2);
  CHECK(bad.err.find("mu1") != std::string::npos);
  CHECK(run("spectrum --ext X:1").code == 2);
  CHECK(run("spectrum --bogus").code == 2);
  CHECK(run("spectrum --format xml").code == 2);
  CHECK(run("").code == 2);
  CHECK(run("spectrum --ext I:1 --angular-ext").code == 2);
}

TEST_CASE("state samples") {
  const auto g = run("states --mu1 0.3 --mu2 0.7 --grid -1:1:3");
  REQUIRE(g.code == 0);
  auto rows = csv(g.out);
  CHECK(rows.front() == std::vector<std::string>{"x1", "x2", "psi"});
  REQUIRE(rows.size() == 10);
  // rows run x1-major: (x1, x2) and (-x1, x2) are 6 rows apart
  for (int i = 1; i <= 3; ++i)
    CHECK(rows[i][2] == rows[i + 6][2]);

  const auto odd = run("states --eps1 1 --n 0.5 --grid -1:1:3");
  REQUIRE(odd.code == 0);
  rows = csv(odd.out);
  for (int i = 1; i <= 3; ++i)
    CHECK(std::stod(rows[i][2]) == doctest::Approx(-std::stod(rows[i + 6][2])).epsilon(1e-15));
  for (int i = 4; i <= 6; ++i)
    CHECK(std::abs(std::stod(rows[i][2])) <= 1e-15);

  // extended state against the library
  const auto e = run("states --mu1 0.3 --mu2 0.7 --ext II:1 --n 1 --k 2 --grid 0.2:1.7:4");
  REQUIRE(e.code == 0);
  using namespace dunkl;
  const auto p = validate_parameters(0.3, 0.7);
  const auto st = extended_radial_state(ExtensionSpec::parse("II:1"), 2, HalfInt::integer(1), p);
  const auto ang = angular_state(SectorLabel::make(0, 0), HalfInt::integer(1), p);
  rows = csv(e.out);
  REQUIRE(rows.size() == 17);
  for (std::size_t i = 1; i < rows.size(); ++i) {
    const double x1 = std::stod(rows[i][0]), x2 = std::stod(rows[i][1]);
    CHECK(std::stod(rows[i][2]) == eval_product(st.form, ang, x1, x2));
  }

  CHECK(run("states --grid 1:0:3").code == 2);
  CHECK(run("states --grid a:b:c").code == 2);
  CHECK(run("states --n 0.25").code == 2);
  CHECK(run("states --ext I:1 --k 0").code == 3);
  const auto j = nlohmann::json::parse(run("states --grid 0:1:2 --format json").out);
  CHECK(j.size() == 4);
}

TEST_CASE("verification bundles") {
  const auto out = std::filesystem::temp_directory_path() / ("dunkl_cli_bundle_" + std::to_string(::getpid()) + ".json");
  const auto ok = run("verify --mu1 0.3 --mu2 0.7 --out " + out.string());
  CHECK(ok.code == 0);
  std::ifstream f(out);
  const auto j = nlohmann::json::parse(f);
  CHECK(j.size() >= 6);
  for (const auto& r : j)
    CHECK(r["pass"] == true);

  // identical config and seed give identical bytes
  const auto a = run("verify --ext I:1 --seed 7");
  const auto b = run("verify --ext I:1 --seed 7");
  CHECK(a.code == 0);
  CHECK(a.out == b.out);

  const auto tight = run("verify --tol 1e-15 --out " + out.string());
  CHECK(tight.code == 1);
  std::ifstream g(out);
  const auto jt = nlohmann::json::parse(g);
  CHECK(std::any_of(jt.begin(), jt.end(), [](const auto& r) { return r["pass"] == false; }));
  std::filesystem::remove(out);

  CHECK(run("verify --mu1 0.9 --mu2 0.9 --angular-ext").code == 3);
  CHECK(run("verify --ext III:3").code == 3);
}
