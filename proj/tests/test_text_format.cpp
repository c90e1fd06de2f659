#include <doctest.h>

#include <random>

#include "polydecomp/text_format.hpp"
#include "test_support.hpp"

using namespace polydecomp;

TEST_CASE("rational literals") {
  CHECK(parse_scalar<Rational>("6/4") == Rational(3, 2));
  CHECK(parse_scalar<Rational>("6/4").get_den() == 2);
  CHECK(parse_scalar<Rational>("3/-6") == Rational(-1, 2));
  CHECK(parse_scalar<Rational>("3/-6").get_den() > 0);
  CHECK(parse_scalar<Rational>(" -17 ") == -17);
  CHECK(parse_scalar<Rational>("0.125") == Rational(1, 8));
  CHECK(parse_scalar<Rational>("-2.5e-1") == Rational(-1, 4));
  CHECK_THROWS_AS(parse_scalar<Rational>("1/0"), ParseError);
  CHECK_THROWS_AS(parse_scalar<Rational>("abc"), ParseError);
  CHECK_THROWS_AS(parse_scalar<Rational>("1/2/3"), ParseError);
}

TEST_CASE("complex literals") {
  CHECK(parse_scalar<Complex>("1+2i") == Complex(1, 2));
  CHECK(parse_scalar<Complex>("-1.5-0.25i") == Complex(-1.5, -0.25));
  CHECK(parse_scalar<Complex>("3") == Complex(3, 0));
  CHECK(parse_scalar<Complex>("-2i") == Complex(0, -2));
  CHECK(parse_scalar<Complex>("i") == Complex(0, 1));
  CHECK(parse_scalar<Complex>("1e-3+2e+2i") == Complex(1e-3, 200));
  CHECK_THROWS_AS(parse_scalar<Complex>("1+xi"), ParseError);
  CHECK(format_scalar(Complex(1, -2)) == "1-2i");
  CHECK(format_scalar(Complex(0.5, 0)) == "0.5+0i");
}

TEST_CASE("polynomial text") {
  auto p = parse_polynomial<Rational>("1,4,5,2,0");
  CHECK(p.degree() == 4);
  CHECK(p.coeff(1) == 2);
  CHECK(format_polynomial(p) == "1,4,5,2,0");
  CHECK(format_polynomial(parse_polynomial<Rational>("1, -1/2 , 0")) == "1,-1/2,0");
  CHECK(format_polynomial(Polynomial<Rational>{}) == "0");
  CHECK(format_polynomial(parse_polynomial<Real>("1,0.1,0")) == "1,0.1,0");
  CHECK_THROWS_AS(parse_polynomial<Rational>("1,,2"), ParseError);
  CHECK_THROWS_AS(parse_polynomial<Rational>(""), ParseError);
  CHECK_THROWS_AS(parse_polynomial<Rational>("1,2,"), ParseError);
}

TEST_CASE("text round trip is lossless") {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 50; ++trial) {
    auto r = testing::random_series<Rational>(rng, 1 + rng() % 8, testing::random_rational(rng, 1000, 1000));
    CHECK(parse_polynomial<Rational>(format_polynomial(r)) == r);
    auto x = testing::random_series<Real>(rng, 1 + rng() % 8, testing::random_real(rng, -1e6, 1e6));
    CHECK(parse_polynomial<Real>(format_polynomial(x)) == x);
    auto z = testing::random_series<Complex>(rng, 1 + rng() % 8, Complex(testing::random_real(rng), -3.0));
    CHECK(parse_polynomial<Complex>(format_polynomial(z)) == z);
  }
}
