#include "doctest.h"

#include <cmath>
#include <cstdlib>
#include <cstring>
#include <stdexcept>
#include <string>
#include <vector>

#include "pathsig/io.hpp"
#include "pathsig/tensor.hpp"
#include "test_util.hpp"

using pathsig::SampledPath;
using pathsig::TensorDoc;
using pathsig::TruncatedTensor;

TEST_CASE("csv: happy path and time normalisation") {
  const SampledPath p = pathsig::read_csv(std::string("t,x1\n0,0\n1,1\n"));
  CHECK(p.d == 1);
  CHECK(p.times == std::vector<double>{0.0, 1.0});
  CHECK(p.points == std::vector<double>{0.0, 1.0});
  REQUIRE(p.source_range.has_value());
  CHECK(p.source_range->first == 0.0);
  CHECK(p.source_range->second == 1.0);

  const SampledPath q =
      pathsig::read_csv(std::string("t,x1,x2\n5,1,2\n7,3,4\n9,5,6\n"));
  CHECK(q.d == 2);
  CHECK(q.times == std::vector<double>{0.0, 0.5, 1.0});
  CHECK(q.points == std::vector<double>{1, 2, 3, 4, 5, 6});
  CHECK(q.source_range->first == 5.0);
  CHECK(q.source_range->second == 9.0);
}

TEST_CASE("csv: crlf endings, blank lines and padded cells") {
  const SampledPath p =
      pathsig::read_csv(std::string("t,x1\r\n0,0\r\n\r\n1,2\r\n"));
  CHECK(p.size() == 2);
  CHECK(p.points == std::vector<double>{0.0, 2.0});

  const SampledPath q =
      pathsig::read_csv(std::string("t,x1\n 0 , 1 \n 1 , 2 \n"));
  CHECK(q.points == std::vector<double>{1.0, 2.0});

  const SampledPath single = pathsig::read_csv(std::string("t,x1\n3,7\n"));
  CHECK(single.times == std::vector<double>{0.0});
  CHECK(single.points == std::vector<double>{7.0});
  CHECK(single.source_range->first == 3.0);
  CHECK(single.source_range->second == 3.0);
}

TEST_CASE("csv: malformed input names the offending cell") {
  CHECK_THROWS_WITH(pathsig::read_csv(std::string("")), "csv: empty input");
  CHECK_THROWS_WITH(pathsig::read_csv(std::string("x,y\n0,0\n")),
                    "csv: malformed header: expected t,x1,...,xd");
  CHECK_THROWS_WITH(pathsig::read_csv(std::string("t\n0\n")),
                    "csv: malformed header: expected t,x1,...,xd");
  CHECK_THROWS_WITH(pathsig::read_csv(std::string("t,x2\n0,0\n")),
                    "csv: malformed header: expected t,x1,...,xd");
  CHECK_THROWS_WITH(pathsig::read_csv(std::string("t, x1\n0,0\n")),
                    "csv: malformed header: expected t,x1,...,xd");
  CHECK_THROWS_WITH(pathsig::read_csv(std::string("t,x1\n")),
                    "csv: no data rows");
  CHECK_THROWS_WITH(pathsig::read_csv(std::string("t,x1\n0,0\n1,oops\n")),
                    "csv: row 3, column 2: not a number");
  CHECK_THROWS_WITH(pathsig::read_csv(std::string("t,x1\nzero,0\n")),
                    "csv: row 2, column 1: not a number");
  CHECK_THROWS_WITH(pathsig::read_csv(std::string("t,x1\n0,inf\n")),
                    "csv: row 2, column 2: not a number");
  CHECK_THROWS_WITH(pathsig::read_csv(std::string("t,x1,x2\n0,0,0\n1,1\n")),
                    "csv: row 3: expected 3 values, got 2");
  CHECK_THROWS_WITH(pathsig::read_csv(std::string("t,x1\n0,0\n0,1\n")),
                    "csv: row 3: duplicate timestamp");
  CHECK_THROWS_WITH(pathsig::read_csv(std::string("t,x1\n0,0\n1,1\n0.5,2\n")),
                    "csv: row 4: time does not increase");
}

TEST_CASE("csv: normalisation that fuses samples is reported, not silenced") {
  // dividing by the huge span pushes both middle times onto the same
  // subnormal, where the grid is too coarse to keep them apart
  const std::string text =
      "t,x1\n0,0\n1e-310,1\n1.0000000000000464e-310,2\n1e10,3\n";
  CHECK_THROWS_WITH(pathsig::read_csv(text),
                    "csv: time normalisation collapsed adjacent samples");
}

TEST_CASE("doubles are printed with 17 significant digits") {
  CHECK(pathsig::format_double(1.0) == "1");
  CHECK(pathsig::format_double(0.0) == "0");
  CHECK(pathsig::format_double(0.5) == "0.5");
  CHECK(pathsig::format_double(0.1) == "0.10000000000000001");
  CHECK(pathsig::format_double(-0.0) == "-0.0");

  for (double v : {0.1, 1.0 / 3.0, 1e-300, 1e300, -0.0, 4.9e-324,
                   1.7976931348623157e308, 3.141592653589793}) {
    const std::string s = pathsig::format_double(v);
    const double back = std::strtod(s.c_str(), nullptr);
    CHECK(std::memcmp(&back, &v, sizeof v) == 0);
  }
}

TEST_CASE("tensor json writer emits a fixed layout") {
  CHECK(pathsig::write_tensor_json(pathsig::unit(2, 1)) ==
        "{\"d\":2,\"depth\":1,\"interval\":[0,1],\"levels\":[[1],[0,0]]}");
  CHECK(pathsig::write_tensor_json(pathsig::unit(2, 1), {0.0, 1.0},
                                   std::make_pair(0.0, 2.0)) ==
        "{\"d\":2,\"depth\":1,\"interval\":[0,1],\"time_range\":[0,2],"
        "\"levels\":[[1],[0,0]]}");
  const TruncatedTensor z(1, 1);
  CHECK(pathsig::write_tensor_json(z, {0.25, 0.75}) ==
        "{\"d\":1,\"depth\":1,\"interval\":[0.25,0.75],\"levels\":[[0],[0]]}");
}

TEST_CASE("tensor json round-trips bit-exactly") {
  auto g = testutil::rng(151);
  TruncatedTensor x = testutil::random_tensor(g, 2, 3);
  x.level(1)[0] = 0.1;
  x.level(1)[1] = -0.0;
  x.level(2)[0] = 1e-300;
  x.level(2)[1] = 1e300;
  x.level(2)[2] = 1.0 / 3.0;
  x.level(3)[5] = 4.9e-324;

  const std::string text =
      pathsig::write_tensor_json(x, {0.25, 0.75}, std::make_pair(1.5, 3.5));
  const TensorDoc doc = pathsig::read_tensor_json(text);
  REQUIRE(doc.tensor.dim() == 2);
  REQUIRE(doc.tensor.depth() == 3);
  for (std::size_t k = 0; k <= 3; ++k) {
    const std::vector<double>& a = doc.tensor.level(k);
    const std::vector<double>& b = x.level(k);
    REQUIRE(a.size() == b.size());
    CHECK(std::memcmp(a.data(), b.data(), a.size() * sizeof(double)) == 0);
  }
  CHECK(std::signbit(doc.tensor.level(1)[1]));
  CHECK(doc.interval.first == 0.25);
  CHECK(doc.interval.second == 0.75);
  REQUIRE(doc.time_range.has_value());
  CHECK(doc.time_range->first == 1.5);
  CHECK(doc.time_range->second == 3.5);

  // interval defaults to [0,1] and unknown keys are ignored
  const TensorDoc plain = pathsig::read_tensor_json(
      "{\"d\":1,\"depth\":0,\"levels\":[[2]],\"note\":\"hi\"}");
  CHECK(plain.tensor.scalar() == 2.0);
  CHECK(plain.interval.first == 0.0);
  CHECK(plain.interval.second == 1.0);
  CHECK_FALSE(plain.time_range.has_value());
}

TEST_CASE("tensor json rejects malformed documents") {
  CHECK_THROWS_WITH(pathsig::read_tensor_json("{\"d\":2,\"depth\":1}"),
                    "json: expected an object with d, depth, levels");
  CHECK_THROWS_WITH(pathsig::read_tensor_json("[1,2]"),
                    "json: expected an object with d, depth, levels");
  CHECK_THROWS_WITH(
      pathsig::read_tensor_json("{\"d\":-1,\"depth\":1,\"levels\":[[1],[0]]}"),
      "json: d and depth must be nonnegative integers");
  CHECK_THROWS_WITH(
      pathsig::read_tensor_json("{\"d\":2.5,\"depth\":1,\"levels\":[[1],[0]]}"),
      "json: d and depth must be nonnegative integers");
  CHECK_THROWS_WITH(
      pathsig::read_tensor_json("{\"d\":2,\"depth\":1,\"levels\":[[1]]}"),
      "json: levels must hold depth+1 arrays");
  CHECK_THROWS_WITH(
      pathsig::read_tensor_json(
          "{\"d\":2,\"depth\":1,\"levels\":[[1],[0,0,0]]}"),
      "json: level 1 must hold d^k entries");
  CHECK_THROWS_WITH(
      pathsig::read_tensor_json(
          "{\"d\":2,\"depth\":1,\"levels\":[[1],[\"x\",0]]}"),
      "json: non-numeric coefficient at level 1");
  CHECK_THROWS_WITH(
      pathsig::read_tensor_json(
          "{\"d\":2,\"depth\":1,\"levels\":[[1],[0,0]],\"interval\":[1]}"),
      "json: interval must be a pair of numbers");
  CHECK_THROWS_WITH(
      pathsig::read_tensor_json("{\"d\":2,\"depth\":1,\"levels\":[[1],[0,0]],"
                                "\"time_range\":[0,\"b\"]}"),
      "json: time_range must be a pair of numbers");

  // parser errors keep the same prefix
  CHECK_THROWS_AS(pathsig::read_tensor_json("{oops"), std::runtime_error);
  try {
    pathsig::read_tensor_json("{oops");
  } catch (const std::runtime_error& e) {
    CHECK(std::string(e.what()).substr(0, 5) == "json:");
  }
  CHECK_THROWS_AS(
      pathsig::read_tensor_json("{\"d\":1,\"depth\":0,\"levels\":[[1e999]]}"),
      std::runtime_error);

  // the entry cap applies to parsed shapes as well
  CHECK_THROWS_AS(
      pathsig::read_tensor_json(
          "{\"d\":2,\"depth\":3,\"levels\":[[1],[0,0],[0,0,0,0],"
          "[0,0,0,0,0,0,0,0]]}",
          10),
      std::length_error);
}
