#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"
#include "json.hpp"
#include "run_cli.hpp"

TEST_CASE("approximate reproduces the worked example") {
  const auto res = run_cli("approximate --radius 50.7 --descriptor inner --method all");
  REQUIRE(res.exit_code == 0);
  CHECK(res.output.find("perimeter           40    28    20    39.5980") != std::string::npos);
  CHECK(res.output.find("area                40    29    20    41.0122") != std::string::npos);
  CHECK(res.output.find("inscribed           42    30    21    42.4264") != std::string::npos);
  CHECK(res.output.find("covering            38    27    19    38.1838") != std::string::npos);
  CHECK(res.output.find("least_squares       40    29    20    41.0122") != std::string::npos);
  CHECK(res.output.find("least_distance      42    29    21    41.0122") != std::string::npos);
}

TEST_CASE("approximate emits JSON records") {
  const auto res = run_cli("approximate --radius 50.7 --method inscribed --format json");
  REQUIRE(res.exit_code == 0);
  const auto rows = nlohmann::json::parse(res.output);
  REQUIRE(rows.is_array());
  REQUIRE(rows.size() == 1);
  CHECK(rows[0]["k1"] == 30);
  CHECK(rows[0]["k2"] == 21);
  CHECK(rows[0]["descriptor"] == "inner");
  CHECK(rows[0]["a"] == 42.0);
  // round-trip idempotence
  CHECK(nlohmann::json::parse(rows.dump()) == rows);
}

TEST_CASE("approximate flags degenerate tiny radii") {
  const auto res = run_cli("approximate --radius 1e-9 --method perimeter");
  REQUIRE(res.exit_code == 0);
  CHECK(res.output.find("degenerate") != std::string::npos);
}

TEST_CASE("approximate rejects bad radii as usage errors") {
  CHECK(run_cli("approximate --radius -5").exit_code == 1);
  CHECK(run_cli("approximate --radius nonsense").exit_code == 1);
  CHECK(run_cli("approximate").exit_code == 1);
  CHECK(run_cli("approximate --radius 10 --method heptagon").exit_code == 2);
}

TEST_CASE("distance prints both routes and they agree") {
  const auto city = run_cli("distance --from 0,0 --to 3,2 --sequence 1 --tail 1");
  REQUIRE(city.exit_code == 0);
  CHECK(city.output == "closed_form 5\nbfs 5\n");

  const auto chess = run_cli("distance --from 0,0 --to 3,2 --sequence 2 --tail 2");
  REQUIRE(chess.exit_code == 0);
  CHECK(chess.output == "closed_form 3\nbfs 3\n");

  const auto alternating = run_cli("distance --from 0,0 --to 4,3 --sequence 1,2 --periodic");
  REQUIRE(alternating.exit_code == 0);
  CHECK(alternating.output == "closed_form 5\nbfs 5\n");

  CHECK(run_cli("distance --from 0,0 --to 1,1 --sequence 3").exit_code == 2);
  CHECK(run_cli("distance --from 0,0 --to 1,1 --sequence 1 --tail 5").exit_code == 1);
}

TEST_CASE("disc renders a five-point cross") {
  const auto res = run_cli("disc --k1 1 --k2 0 --ascii");
  REQUIRE(res.exit_code == 0);
  CHECK(res.output == "  1\n1 0 1\n  1\n");
}

TEST_CASE("disc accepts an explicit sequence") {
  const auto res = run_cli("disc --sequence 2,2,2,1 --steps 4 --ascii");
  REQUIRE(res.exit_code == 0);
  int labels = 0;
  for (char ch : res.output) labels += ch >= '0' && ch <= '9';
  CHECK(labels == 77);
  CHECK(run_cli("disc --sequence 2,2 --ascii").exit_code == 1);
  CHECK(run_cli("disc --ascii").exit_code == 1);
}

TEST_CASE("disc writes PGM files under the output directory") {
  const std::string dir = "cli_test_out";
  REQUIRE(std::system(("mkdir -p " + dir).c_str()) == 0);
  std::remove((dir + "/disc.pgm").c_str());
  const std::string invocation = "NSDISC_OUT_DIR=" + dir + " " + cli_binary() +
                                 " disc --k1 30 --k2 21 --circle 50.7 --out disc.pgm 2>/dev/null";
  REQUIRE(std::system(invocation.c_str()) == 0);
  std::ifstream file(dir + "/disc.pgm");
  REQUIRE(file.good());
  std::stringstream content;
  content << file.rdbuf();
  CHECK(content.str().rfind("P2\n103 103\n255\n", 0) == 0);
  CHECK(run_cli("disc --k1 1 --k2 1 --out /nonexistent_dir_xyz/a.pgm").exit_code == 2);
}

TEST_CASE("tables regenerate the reference coefficients") {
  const auto t4 = run_cli("tables --which 4");
  REQUIRE(t4.exit_code == 0);
  CHECK(t4.output.find("0.785398") != std::string::npos);
  CHECK(t4.output.find("0.806626") != std::string::npos);
  CHECK(t4.output.find("0.828427") != std::string::npos);
  CHECK(t4.output.find("0.765367") != std::string::npos);
  CHECK(t4.output.find("0.806852") != std::string::npos);
  CHECK(t4.output.find("0.812509") != std::string::npos);

  const auto t5 = run_cli("tables --which 5 --format csv");
  REQUIRE(t5.exit_code == 0);
  CHECK(t5.output.find("inner,perimeter,0.555360,0,0.392699,0") != std::string::npos);
  CHECK(t5.output.find("inner,inscribed,0.585786,0,0.414214,0") != std::string::npos);
  CHECK(t5.output.find("pixel,perimeter,0.785398,1,0.392699,-0.5") != std::string::npos);

  const auto t1 = run_cli("tables --which 1");
  REQUIRE(t1.exit_code == 0);
  CHECK(t1.output.find("2 k2 + 1") != std::string::npos);

  CHECK(run_cli("tables --which 3").exit_code == 1);
  CHECK(run_cli("tables").exit_code == 1);
}

TEST_CASE("sweep emits CSV over the radius grid") {
  const auto res = run_cli("sweep --rmin 50.7 --rmax 50.7 --step 1");
  REQUIRE(res.exit_code == 0);
  CHECK(res.output.find("r,method,descriptor,k1,k2,k\n") == 0);
  CHECK(res.output.find("50.700000,perimeter,inner,28,20,48") != std::string::npos);
  CHECK(run_cli("sweep --rmin 5 --rmax 4 --step 1").exit_code == 1);
  CHECK(run_cli("sweep --rmin 1 --rmax 4 --step 0").exit_code == 1);
}

TEST_CASE("verify runs its quick checks cleanly") {
  const auto res = run_cli("verify");
  REQUIRE(res.exit_code == 0);
  CHECK(res.output.find("FAIL") == std::string::npos);
  CHECK(res.output.find("all checks passed") != std::string::npos);
}

TEST_CASE("identical invocations produce identical bytes") {
  for (const std::string args :
       {std::string("approximate --radius 50.7 --descriptor all --format json"),
        std::string("tables --which 5"), std::string("sweep --rmin 1 --rmax 9 --step 0.7"),
        std::string("disc --k1 3 --k2 1 --ascii")}) {
    const auto first = run_cli(args);
    const auto second = run_cli(args);
    REQUIRE(first.exit_code == 0);
    CHECK(first.output == second.output);
  }
}

TEST_CASE("unknown subcommands are usage errors") {
  CHECK(run_cli("frobnicate").exit_code == 1);
  CHECK(run_cli("").exit_code == 1);
}
