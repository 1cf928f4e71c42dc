#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "support/cli.hpp"

using nlohmann::json;
using testsupport::run_cli;

TEST_CASE("solve-volumes: symmetric doublet") {
  auto r = run_cli("solve-volumes --t1 1 --t2 1 --t3 1 --w1 0.5 --w2 0.5");
  REQUIRE(r.exit_code == 0);
  auto doc = json::parse(r.out);
  CHECK(doc["regime"] == "interior");
  CHECK(doc["global"] == "interior");
  REQUIRE(doc["critical_points"].size() == 1);
  const auto& cp = doc["critical_points"][0];
  CHECK(cp["classification"] == "localmin");
  double a1 = cp["state"]["alpha_deg"][0].get<double>();
  double a2 = cp["state"]["alpha_deg"][1].get<double>();
  CHECK(a1 == doctest::Approx(-120.0).epsilon(1e-9));
  CHECK(a2 == doctest::Approx(120.0).epsilon(1e-9));
  CHECK(cp["energy"].get<double>() ==
        doctest::Approx(3.7402256123730018).epsilon(1e-12));
  CHECK(doc["boundary"].size() == 3);
}

TEST_CASE("solve-volumes: dominated tension reports the degenerate point") {
  auto r = run_cli("solve-volumes --t1 3 --t2 1 --t3 1 --w1 0.5 --w2 0.5");
  REQUIRE(r.exit_code == 0);
  auto doc = json::parse(r.out);
  CHECK(doc["regime"] == "internalize-1");
  CHECK(doc["global"] == "u1");
  CHECK(doc["critical_points"].empty());
}

TEST_CASE("solve-pressures: exact reference point and verification") {
  auto r = run_cli(
      "solve-pressures --t1 1 --t2 1 --t3 1 --P1 1 --P2 1 --verify");
  REQUIRE(r.exit_code == 0);
  auto doc = json::parse(r.out);
  const auto& x = doc["point"]["state"]["x"];
  CHECK(x[0].get<double>() == doctest::Approx(-3.0).epsilon(1e-12));
  CHECK(x[1].get<double>() == doctest::Approx(3.0).epsilon(1e-12));
  CHECK(x[2].get<double>() == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(doc["point"]["state"]["h"].get<double>() ==
        doctest::Approx(std::sqrt(3.0)).epsilon(1e-12));
}

TEST_CASE("solve-line: reference configuration") {
  auto r = run_cli(
      "solve-line --t1 5 --t2 6 --t3 4 --kappa 1 --w1 0.75 --w2 0.25 "
      "--verify");
  REQUIRE(r.exit_code == 0);
  auto doc = json::parse(r.out);
  int minima = 0;
  for (const auto& cp : doc["critical_points"])
    minima += cp["classification"] == "localmin";
  CHECK(minima == 1);
  CHECK(doc["critical_points"].size() >= 2);
  CHECK(doc["global"] == "u3");
}

TEST_CASE("exit codes: parse errors and invalid input") {
  CHECK(run_cli("solve-volumes --t1 1 --t2 1 --w1 0.5 --w2 0.5").exit_code ==
        2);  // missing t3
  CHECK(run_cli("nonsense-subcommand").exit_code == 2);
  CHECK(run_cli("solve-volumes --t1 -1 --t2 1 --t3 1 --w1 0.5 --w2 0.5")
            .exit_code == 2);  // invalid tension
  CHECK(run_cli("solve-pressures --t1 1 --t2 1 --t3 5 --P1 1 --P2 1")
            .exit_code == 2);  // triangle violation
  CHECK(run_cli("--help").exit_code == 0);
  CHECK(run_cli("scan --help").exit_code == 0);
}

TEST_CASE("scan: deterministic CSV with the documented header") {
  auto a = run_cli("scan --t3 1 --kappa 0.1 --w1 0.5 --w2 0.5 --n 24");
  auto b = run_cli("scan --t3 1 --kappa 0.1 --w1 0.5 --w2 0.5 --n 24");
  REQUIRE(a.exit_code == 0);
  CHECK(a.out == b.out);
  std::istringstream in(a.out);
  std::string header;
  std::getline(in, header);
  CHECK(header ==
        "alpha1,alpha2,t1,t2,y,z3,trace,det,class,bulge1,bulge2,E,E1,E2,E3,"
        "global");
  size_t rows = 0;
  std::string line;
  while (std::getline(in, line))
    if (!line.empty()) ++rows;
  CHECK(rows > 0);
  CHECK(rows <= 24 * 24);
}

TEST_CASE("scan: local minima hug the diagonal wedge at moderate kappa") {
  auto r = run_cli("scan --t3 1 --kappa 0.1 --w1 0.5 --w2 0.5 --n 64");
  REQUIRE(r.exit_code == 0);
  std::istringstream in(r.out);
  std::string line;
  std::getline(in, line);  // header
  bool any_large = false;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::string f[16];
    for (auto& s : f) std::getline(ls, s, ',');
    if (f[8] != "localmin") continue;
    double t1 = std::stod(f[2]), t2 = std::stod(f[3]);
    CHECK(t1 > 0.0);
    CHECK(t2 > 0.0);
    if (std::max(t1, t2) > 20.0) {
      any_large = true;
      CHECK(t1 / t2 < 3.0);
      CHECK(t2 / t1 < 3.0);
    }
  }
  CHECK(any_large);
}

TEST_CASE("config file merge with flag override") {
  const char* path = "/tmp/doublet_test_config.json";
  {
    std::ofstream f(path);
    f << R"({"t1": 2.0, "t2": 1.0, "t3": 1.0, "w1": 0.5, "w2": 0.5})";
  }
  auto base = run_cli(std::string("solve-volumes --config ") + path);
  REQUIRE(base.exit_code == 0);
  CHECK(json::parse(base.out)["inputs"]["t1"] == 2.0);
  auto over = run_cli(std::string("solve-volumes --t1 1 --config ") + path);
  REQUIRE(over.exit_code == 0);
  auto doc = json::parse(over.out);
  CHECK(doc["inputs"]["t1"] == 1.0);
  CHECK(doc["regime"] == "interior");
  std::remove(path);
}

TEST_CASE("infer: angle laws agree through the CLI") {
  auto r = run_cli("infer --phi1-deg 90 --phi2-deg 126.8698976458 "
                   "--phi3-deg 143.1301023542");
  REQUIRE(r.exit_code == 0);
  auto doc = json::parse(r.out);
  CHECK(doc["max_pairwise_deviation"].get<double>() <= 1e-9);
  // angles of the 3-4-5 force triangle: tensions proportional to (5,4,3)
  auto ts = doc["laws"]["sine"]["tensions"];
  double q1 = ts[0].get<double>() / ts[1].get<double>();
  CHECK(q1 == doctest::Approx(5.0 / 4.0).epsilon(1e-9));

  auto flat = run_cli("infer --r1 2 --r2 1 --c1 -0.5 --c2 0.5");
  REQUIRE(flat.exit_code == 0);
  auto fd = json::parse(flat.out);
  CHECK(fd["t3"].is_null());
  CHECK(fd["t1"].get<double>() / fd["t2"].get<double>() ==
        doctest::Approx(2.0).epsilon(1e-12));
}

TEST_CASE("oracle-check reports a tight gap") {
  auto r = run_cli("oracle-check --t1 2 --t2 1.5 --t3 1 --w1 0.7 --w2 0.9");
  REQUIRE(r.exit_code == 0);
  auto doc = json::parse(r.out);
  CHECK(doc["relative_gap"].get<double>() <= 1e-6);
}

TEST_CASE("svg output lands in a file") {
  const char* path = "/tmp/doublet_test.svg";
  auto r = run_cli(std::string("svg --t1 1 --t2 1 --t3 1 --w1 0.5 --w2 0.5 "
                               "--out ") + path);
  REQUIRE(r.exit_code == 0);
  std::ifstream f(path);
  std::string content((std::istreambuf_iterator<char>(f)),
                      std::istreambuf_iterator<char>());
  CHECK(content.rfind("<svg", 0) == 0);
  CHECK(content.find("</svg>") != std::string::npos);
  std::remove(path);
}

TEST_CASE("bulge-boundary subcommand reproduces the reference t1") {
  auto r = run_cli("bulge-boundary --t2 1.25 --t3 1 --kappa 0.1 --w1 0.5 "
                   "--w2 0.5");
  REQUIRE(r.exit_code == 0);
  auto doc = json::parse(r.out);
  REQUIRE(!doc["solutions"].empty());
  CHECK(doc["solutions"][0]["t1"].get<double>() ==
        doctest::Approx(0.271244499897851).epsilon(1e-9));
}

TEST_CASE("max-bulge-probe reports the documented angle") {
  auto r = run_cli("max-bulge-probe");
  REQUIRE(r.exit_code == 0);
  auto doc = json::parse(r.out);
  CHECK(std::abs(doc["phi1_deg"].get<double>() - 182.590653) <= 1e-3);
  CHECK(doc["point"]["classification"] == "localmin");
}
