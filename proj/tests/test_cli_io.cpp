#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <cstdlib>
#include <sstream>
#include <string>
#include <vector>

#include "greenfn/csv.hpp"

using namespace greenfn;

namespace {

std::vector<std::string> lines_of(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  std::string line;
  while (std::getline(in, line)) out.push_back(line);
  return out;
}

}  // namespace

TEST_CASE("cycle csv is exact and deterministic") {
  std::ostringstream a, b;
  write_cycle_csv(a, 3, 15);
  write_cycle_csv(b, 3, 15);
  REQUIRE(a.str() == b.str());
  REQUIRE(a.str() ==
          "a,value\n"
          "0,0.444444444444444\n"
          "1,-0.222222222222222\n"
          "2,-0.222222222222222\n");
}

TEST_CASE("significant digits are honored") {
  REQUIRE(format_value(0.125, 3) == "0.125");
  REQUIRE(format_value(4.0 / 9.0, 3) == "0.444");
  REQUIRE(format_value(1234567.0, 3) == "1.23e+06");
  std::ostringstream s;
  write_cycle_csv(s, 3, 3);
  REQUIRE(lines_of(s.str())[1] == "0,0.444");
}

TEST_CASE("emitted values round-trip to the requested precision") {
  for (int digits : {6, 12, 15}) {
    std::ostringstream s;
    write_cycle_csv(s, 11, digits);
    std::vector<std::string> rows = lines_of(s.str());
    double tol = std::pow(10.0, 1 - digits);
    for (int a = 0; a < 11; ++a) {
      const std::string& row = rows[a + 1];
      double parsed = std::strtod(row.substr(row.find(',') + 1).c_str(), nullptr);
      double want = cycle_green(11, a);
      REQUIRE(std::abs(parsed - want) <= tol * std::max(1.0, std::abs(want)));
    }
  }
}

TEST_CASE("torus csv layout") {
  std::ostringstream s;
  write_torus_csv(s, 3, 4, 15);
  std::vector<std::string> rows = lines_of(s.str());
  REQUIRE(rows[0] == "dx,dy,value");
  REQUIRE(rows.size() == 1 + 12);
  REQUIRE(rows[1].rfind("0,0,", 0) == 0);
  REQUIRE(rows[12].rfind("2,3,", 0) == 0);
  double origin = std::strtod(rows[1].c_str() + 4, nullptr);
  REQUIRE(std::abs(origin - torus_green(3, 4, 0, 0)) < 1e-13);
}

TEST_CASE("t-torus csv layout and thread independence") {
  std::ostringstream a, b;
  write_ttorus_csv(a, TorusSpec({3, 3, 3}), 15, 1);
  write_ttorus_csv(b, TorusSpec({3, 3, 3}), 15, 4);
  REQUIRE(a.str() == b.str());
  std::vector<std::string> rows = lines_of(a.str());
  REQUIRE(rows[0] == "d1,d2,d3,value");
  REQUIRE(rows.size() == 1 + 27);
  REQUIRE(rows[1].rfind("0,0,0,", 0) == 0);
}

TEST_CASE("galpha csv matches the closed form") {
  std::ostringstream s;
  write_galpha_csv(s, 4, 1.0, 15);
  std::vector<std::string> rows = lines_of(s.str());
  REQUIRE(rows.size() == 5);
  double v1 = std::strtod(rows[2].substr(2).c_str(), nullptr);
  REQUIRE(std::abs(v1 + 1.0 / 12.0) < 1e-14);
}

TEST_CASE("hitting csv carries the max comment") {
  HittingTable t = hitting_grid(TorusSpec({4, 4}), {0, 0});
  std::ostringstream s;
  write_hitting_csv(s, t, 15);
  std::vector<std::string> rows = lines_of(s.str());
  REQUIRE(rows[0] == "x,y,Q");
  REQUIRE(rows[1].rfind("# max=", 0) == 0);
  REQUIRE(rows.size() == 2 + 16);
  REQUIRE(rows[2] == "0,0,0");
}

TEST_CASE("bench records are json lines") {
  BenchRecord rec;
  rec.n = 10000;
  rec.t = 2;
  rec.mode = "row";
  rec.entries_computed = 2601;
  rec.nanos_total = 5202000;
  std::ostringstream s;
  write_bench_record(s, rec);
  REQUIRE(s.str() ==
          "{\"n\":10000,\"t\":2,\"mode\":\"row\",\"entries_computed\":2601,"
          "\"nanos_total\":5202000,\"nanos_per_entry\":2000}\n");
}
