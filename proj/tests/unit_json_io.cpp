#include "doctest.h"

#include <cstdio>
#include <fstream>
#include <stdexcept>

#include "matex/json_io.hpp"
#include "matex/patterns.hpp"
#include "oracles.hpp"

using namespace matex;
using oracles::make;

TEST_CASE("serialization round trip") {
  Tensor01 t = make({3, 2}, {{1, 2}, {3, 1}});
  Tensor01 back = tensor_from_json(tensor_to_json(t));
  CHECK(back == t);

  CHECK(tensor_to_json(Tensor01{Shape({2, 2})}) == R"({"dims":[2,2],"ones":[]})");
  CHECK(tensor_to_json(make({2, 2}, {{2, 1}, {1, 2}})) ==
        R"({"dims":[2,2],"ones":[[1,2],[2,1]]})");  // ones sorted lexicographically
}

TEST_CASE("reader rejects malformed input") {
  CHECK_THROWS_AS(tensor_from_json("[]"), std::invalid_argument);
  CHECK_THROWS_AS(tensor_from_json(R"({"dims":[2,2]})"), std::invalid_argument);
  CHECK_THROWS_AS(tensor_from_json(R"({"ones":[]})"), std::invalid_argument);
  CHECK_THROWS_AS(tensor_from_json(R"({"dims":[2,0],"ones":[]})"), std::invalid_argument);
  // out-of-range coordinate
  CHECK_THROWS_AS(tensor_from_json(R"({"dims":[2,2],"ones":[[3,1]]})"),
                  std::invalid_argument);
  // wrong arity
  CHECK_THROWS_AS(tensor_from_json(R"({"dims":[2,2],"ones":[[1]]})"),
                  std::invalid_argument);
  // duplicate
  CHECK_THROWS_AS(tensor_from_json(R"({"dims":[2,2],"ones":[[1,1],[1,1]]})"),
                  std::invalid_argument);
  // non-integers
  CHECK_THROWS_AS(tensor_from_json(R"({"dims":[2,2],"ones":[[1,1.5]]})"),
                  std::invalid_argument);
}

TEST_CASE("file round trip") {
  const std::string path = "io_test_tensor.json";
  Tensor01 t = identity_permutation(3, 2).tensor;
  save_tensor(t, path);
  CHECK(load_tensor(path) == t);
  std::remove(path.c_str());
  CHECK_THROWS(load_tensor("does-not-exist.json"));
}

TEST_CASE("fnv1a64 is the reference function") {
  // reference values for the 64-bit FNV-1a parameters
  CHECK(fnv1a64("") == 0xcbf29ce484222325ULL);
  CHECK(fnv1a64("a") == 0xaf63dc4c8601ec8cULL);
  CHECK(fnv1a64("foobar") == 0x85944171f73967e8ULL);
}
