#include <doctest.h>

#include <unistd.h>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <numeric>
#include <string>

#include <gixgd/dataio.hpp>
#include <gixgd/errors.hpp>

using namespace gixgd;

namespace {

// RAII temp csv under the system temp dir.
struct TempCsv {
  std::string path;
  explicit TempCsv(const std::string& content) {
    static int counter = 0;
    path = std::string(std::getenv("TMPDIR") ? std::getenv("TMPDIR") : "/tmp") +
           "/gixgd_dataio_" + std::to_string(::getpid()) + "_" +
           std::to_string(counter++) + ".csv";
    std::ofstream out(path);
    out << content;
  }
  ~TempCsv() { std::remove(path.c_str()); }
};

}  // namespace

TEST_SUITE("dataio") {

TEST_CASE("embedded survival data invariants") {
  const Dataset d = guinea_pig_data();
  CHECK(d.label() == "guinea-pigs");
  REQUIRE(d.n() == 72);
  CHECK(d.values().front() == 12.0);
  CHECK(d.values().back() == 376.0);
  CHECK(std::accumulate(d.values().begin(), d.values().end(), 0.0) == 7187.0);
  CHECK(std::count_if(d.values().begin(), d.values().end(),
                      [](double v) { return v <= 60.0; }) == 28);
  CHECK(std::is_sorted(d.sorted().begin(), d.sorted().end()));
  CHECK(d.sorted().front() == 12.0);
  CHECK(d.sorted().back() == 376.0);

  double recip = 0.0, logsum = 0.0;
  for (double v : d.values()) {
    recip += 1.0 / v;
    logsum += std::log(v);
  }
  CHECK(recip == doctest::Approx(1.1980530428288900433).epsilon(1e-14));
  CHECK(logsum == doctest::Approx(312.790779507724).epsilon(1e-12));
}

TEST_CASE("dataset rejects non-positive or non-finite observations") {
  CHECK_THROWS_AS(Dataset({1.0, -2.0, 3.0}, "t"), DataError);
  CHECK_THROWS_AS(Dataset({1.0, 0.0}, "t"), DataError);
  CHECK_THROWS_AS(Dataset({std::nan("")}, "t"), DataError);
  CHECK_THROWS_AS(Dataset({1.0, std::numeric_limits<double>::infinity()}, "t"),
                  DataError);
  // the message names the offending observation
  try {
    Dataset({1.0, -2.0}, "t");
    FAIL("expected DataError");
  } catch (const DataError& e) {
    CHECK(std::string(e.what()).find("2") != std::string::npos);
  }
}

TEST_CASE("load_csv headerless single column") {
  TempCsv f("12\n15.5\n22\n");
  const Dataset d = load_csv(f.path);
  REQUIRE(d.n() == 3);
  CHECK(d.values()[0] == 12.0);
  CHECK(d.values()[1] == 15.5);
  CHECK(d.values()[2] == 22.0);
  CHECK(d.label() == f.path);
}

TEST_CASE("load_csv header with named column") {
  TempCsv f("id,time,group\n1,12,a\n2,15,b\n3,22,a\n");
  const Dataset d = load_csv(f.path, "time");
  REQUIRE(d.n() == 3);
  CHECK(d.values()[1] == 15.0);
}

TEST_CASE("load_csv default column is the leftmost numeric") {
  TempCsv f("name,value\nfoo,3.5\nbar,4.5\n");
  const Dataset d = load_csv(f.path);
  REQUIRE(d.n() == 2);
  CHECK(d.values()[0] == 3.5);
  CHECK(d.values()[1] == 4.5);
}

TEST_CASE("load_csv tolerates blank lines, spaces and crlf") {
  TempCsv f("7.5\r\n\r\n 8.25 \n\n9\r\n");
  const Dataset d = load_csv(f.path);
  REQUIRE(d.n() == 3);
  CHECK(d.values()[0] == 7.5);
  CHECK(d.values()[1] == 8.25);
  CHECK(d.values()[2] == 9.0);
}

TEST_CASE("load_csv errors carry the row number") {
  TempCsv bad_cell("time\n12\noops\n");
  try {
    load_csv(bad_cell.path);
    FAIL("expected DataError");
  } catch (const DataError& e) {
    CHECK(std::string(e.what()).find(":3") != std::string::npos);
  }
  TempCsv negative("5\n-1\n");
  CHECK_THROWS_AS(load_csv(negative.path), DataError);
}

TEST_CASE("load_csv structural failures") {
  CHECK_THROWS_AS(load_csv("/nonexistent/gixgd.csv"), DataError);
  TempCsv empty("");
  CHECK_THROWS_AS(load_csv(empty.path), DataError);
  TempCsv f("time,count\n1,2\n");
  CHECK_THROWS_AS(load_csv(f.path, "weight"), DataError);
}

TEST_CASE("empirical cdf is the right-continuous step function") {
  const Dataset d({1.0, 2.0, 2.0, 4.0}, "toy");
  CHECK(empirical_cdf(d, 0.5) == 0.0);
  CHECK(empirical_cdf(d, 1.0) == 0.25);
  CHECK(empirical_cdf(d, 1.5) == 0.25);
  CHECK(empirical_cdf(d, 2.0) == 0.75);
  CHECK(empirical_cdf(d, 3.0) == 0.75);
  CHECK(empirical_cdf(d, 4.0) == 1.0);
  CHECK(empirical_cdf(d, 99.0) == 1.0);
}

}  // TEST_SUITE
