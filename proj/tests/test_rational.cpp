#include <doctest.h>

#include "toriclogk/error.hpp"
#include "toriclogk/linalg.hpp"
#include "toriclogk/rational.hpp"

using namespace toriclogk;

TEST_CASE("parse_rational accepts p/q, signs and bare integers") {
  CHECK(parse_rational("21/25") == Rational(21, 25));
  CHECK(parse_rational("-2/4") == Rational(-1, 2));
  CHECK(parse_rational(" 7 ") == 7);
  CHECK(parse_rational("0/5") == 0);
  CHECK(to_string(parse_rational("6/14")) == "3/7");
  CHECK(to_string(Rational(-4)) == "-4");
}

TEST_CASE("parse_rational rejects decimals and garbage") {
  for (const char* bad : {"", "-", "1.5", "1e3", "1/0", "+3", "1//2", "a/b", "3/-4"}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(parse_rational(bad), Error);
  }
}

TEST_CASE("vector parsing and arithmetic") {
  const RatVec v = parse_ratvec("-1, 2/3");
  CHECK(v == RatVec{-1, Rational(2, 3)});
  CHECK(dot(v, RatVec{3, 3}) == -1);
  CHECK(to_string(v) == "(-1, 2/3)");
  CHECK(parse_rational_list("").empty());
  CHECK_THROWS_AS(parse_ratvec(""), Error);
  CHECK_THROWS_AS(dot(v, RatVec{1}), Error);
  CHECK(RatVec{0, 0}.is_zero());
  CHECK_FALSE(RatVec{0, Rational(1, 2)}.is_integral());
}

TEST_CASE("linalg basics") {
  linalg::Matrix m = {{2, 1}, {1, 3}};
  CHECK(linalg::determinant(m) == 5);
  CHECK(linalg::rank({{1, 2}, {2, 4}}) == 1);
  auto x = linalg::solve(m, {3, 4});
  REQUIRE(x);
  CHECK((*x)[0] == 1);
  CHECK((*x)[1] == 1);
  CHECK_FALSE(linalg::solve({{1, 2}, {2, 4}}, {1, 1}));
  CHECK(linalg::primitive_integer(RatVec{Rational(2, 3), Rational(-4, 9)}) == RatVec{3, -2});

  const RatVec a{1, 0}, b{0, 1};
  auto normal = linalg::hyperplane_normal({&a, &b}, 2);
  REQUIRE(normal);
  CHECK((*normal == RatVec{1, 1} || *normal == RatVec{-1, -1}));
  CHECK(linalg::affine_rank({}) == 0);
  CHECK(linalg::affine_rank({&a}) == 1);
  CHECK(linalg::affine_rank({&a, &b}) == 2);
}
