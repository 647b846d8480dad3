#include <doctest.h>

#include <cstdio>
#include <fstream>

#include "gaussent/cm_io.hpp"
#include "gaussent/error.hpp"
#include "gaussent/sampler.hpp"

using namespace gaussent;

namespace {

ErrorCode code_of(const char* text) {
  try {
    parse_cm_json(text);
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("parse succeeded");
  return ErrorCode::kIoError;
}

}  // namespace

TEST_CASE("parse a one-mode CM") {
  const CovarianceMatrix cm = parse_cm_json(R"({"n_modes": 1, "matrix": [[2, 0.5], [0.5, 3]]})");
  CHECK(cm.n_modes() == 1);
  CHECK(cm(0, 1) == 0.5);
  CHECK(cm(1, 1) == 3.0);
}

TEST_CASE("malformed documents") {
  CHECK(code_of("{") == ErrorCode::kParseError);
  CHECK(code_of(R"({"matrix": [[1,0],[0,1]]})") == ErrorCode::kParseError);
  CHECK(code_of(R"({"n_modes": 0, "matrix": []})") == ErrorCode::kParseError);
  CHECK(code_of(R"({"n_modes": 1.5, "matrix": [[1,0],[0,1]]})") == ErrorCode::kParseError);
  CHECK(code_of(R"({"n_modes": 2, "matrix": [[1,0],[0,1]]})") == ErrorCode::kParseError);
  CHECK(code_of(R"({"n_modes": 1, "matrix": [[1,0,0],[0,1]]})") == ErrorCode::kParseError);
  CHECK(code_of(R"({"n_modes": 1, "matrix": [[1,"x"],[0,1]]})") == ErrorCode::kParseError);
  CHECK(code_of(R"({"n_modes": 1, "matrix": [[1,0.1],[0,1]]})") == ErrorCode::kInvalidArgument);
}

TEST_CASE("round trip through a file") {
  Sampler rng({.seed = 3});
  const CovarianceMatrix cm = rng.physical_cm(3);
  const std::string path = "cm_io_roundtrip.json";
  {
    std::ofstream out(path);
    out << cm_to_json(cm);
  }
  const CovarianceMatrix back = load_cm_file(path);
  std::remove(path.c_str());
  CHECK((back.entries() - cm.entries()).cwiseAbs().maxCoeff() == 0.0);
  try {
    load_cm_file("does/not/exist.json");
    FAIL("missing file accepted");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kIoError);
  }
}
