#include <doctest.h>

#include <cstdio>

#include "anorm/matrix_io.hpp"
#include "anorm/repro.hpp"
#include "anorm/semihilbert.hpp"

using namespace anorm;

TEST_CASE("matrix file: write then parse is the identical matrix") {
  Rng rng(5);
  const ComplexMatrix m = random_gaussian(4, 4, rng);
  const std::string text = write_matrix_file(m);
  const ComplexMatrix back = parse_matrix_file(text);
  REQUIRE(back.rows() == 4);
  CHECK(max_abs_diff(m, back) == 0.0);
  // A second render of the re-parsed matrix must be byte-identical.
  CHECK(write_matrix_file(back) == text);
}

TEST_CASE("matrix file: awkward values survive the round trip") {
  ComplexMatrix m(2, 2);
  m(0, 0) = Complex(0.1, -0.3);
  m(0, 1) = Complex(1e-300, 2e17);
  m(1, 0) = Complex(-0.0, 3.0 / 7.0);
  m(1, 1) = Complex(6.02214076e23, -1.1e-16);
  const ComplexMatrix back = parse_matrix_file(write_matrix_file(m));
  CHECK(max_abs_diff(m, back) == 0.0);
}

TEST_CASE("matrix file: parse errors") {
  CHECK_THROWS_AS(parse_matrix_file("not json"), ParseError);
  CHECK_THROWS_AS(parse_matrix_file("{}"), ParseError);
  CHECK_THROWS_AS(parse_matrix_file(R"({"rows":2,"cols":3,"data":[]})"),
                  ParseError);
  CHECK_THROWS_AS(
      parse_matrix_file(R"({"rows":1,"cols":1,"data":[[1.0]]})"), ParseError);
  CHECK_THROWS_AS(
      parse_matrix_file(R"({"rows":1,"cols":1,"data":[[1.0,2.0],[3.0,4.0]]})"),
      ParseError);
  CHECK_THROWS_AS(
      parse_matrix_file(R"({"rows":1,"cols":1,"data":[["a",0]]})"), ParseError);
  CHECK_THROWS_AS(parse_matrix_file(R"({"rows":-1,"cols":-1,"data":[]})"),
                  ParseError);
}

TEST_CASE("matrix file: save and load through the filesystem") {
  const ComplexMatrix m = example_operator();
  const std::string path = "io_roundtrip_test.json";
  save_matrix(path, m);
  const ComplexMatrix back = load_matrix(path);
  CHECK(max_abs_diff(m, back) == 0.0);
  std::remove(path.c_str());
  CHECK_THROWS_AS(load_matrix("definitely/not/there.json"), IoError);
}
