#include <random>
#include <sstream>

#include <doctest.h>

#include "bmat/error.hpp"
#include "bmat/generators.hpp"
#include "bmat/io.hpp"

using namespace bmat;

namespace {

SquareMatrix Parse(const std::string& text) {
  std::istringstream in(text);
  return read_matrix(in);
}

int FailingLine(const std::string& text) {
  try {
    Parse(text);
  } catch (const ParseError& e) {
    return e.line();
  }
  return -1;
}

}  // namespace

TEST_CASE("whitespace format with comments") {
  const auto m = Parse("# example\n2\n1 -0.5\n\n# second row\n0\t2e-1\n");
  CHECK(m == SquareMatrix::FromRows({{1, -0.5}, {0, 0.2}}));
}

TEST_CASE("CSV format infers the dimension") {
  const auto m = Parse("1.5, 0.5,0.4\n-0.1,1.7,0.7\n0,0,+1\n");
  CHECK(m == SquareMatrix::FromRows({{1.5, 0.5, 0.4}, {-0.1, 1.7, 0.7}, {0, 0, 1}}));
}

TEST_CASE("parse errors name the offending line") {
  CHECK(FailingLine("2\n1 2\n3 x\n") == 3);
  CHECK(FailingLine("# c\n2\n1 2 3\n4 5\n") == 3);
  CHECK(FailingLine("two\n1 2\n") == 1);
  CHECK(FailingLine("2\n1 2\n") == 2);
  CHECK(FailingLine("2\n1 2\n3 4\n5 6\n") == 4);
  CHECK(FailingLine("1,2\n3,4\n5,6\n") == 3);
  CHECK(FailingLine("1,2\n3\n") == 2);
  CHECK(FailingLine("1\nnan\n") == 2);
  CHECK(FailingLine("# only comments\n") == 0);
}

TEST_CASE("write then read reproduces the matrix bit for bit") {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const auto m = make_random_b(2 + seed % 6, seed);
    std::ostringstream out;
    write_matrix(out, m);
    CHECK(Parse(out.str()) == m);
  }
}

TEST_CASE("vectors") {
  std::istringstream in("# q\n-1 -2.5 3\n");
  CHECK(read_vector(in) == Vector{-1, -2.5, 3});
  std::istringstream two("1 2\n3 4\n");
  CHECK_THROWS_AS(read_vector(two), ParseError);
  std::istringstream bad("1 y\n");
  CHECK_THROWS_AS(read_vector(bad), ParseError);
  CHECK_THROWS_AS(read_vector_file("/nonexistent/q.txt"), ParseError);
}
