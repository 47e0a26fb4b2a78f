#include <doctest.h>

#include "bezlin/parse.hpp"
#include "util.hpp"

using namespace bezlin;
using namespace bezlin::testutil;

namespace {
const auto Z = DomainDescriptor::integers();
const std::vector<std::string> XY{"X", "Y"};
} // namespace

TEST_CASE("basic grammar") {
  auto f = parse_poly("X^2 + 2*X*Y - 3", XY, Z);
  CHECK(f.coeff({2, 0}) == DomainElem::from_int(Z, 1));
  CHECK(f.coeff({1, 1}) == DomainElem::from_int(Z, 2));
  CHECK(f.coeff({0, 0}) == DomainElem::from_int(Z, -3));
  CHECK(parse_poly("0", XY, Z).is_zero());
  CHECK(parse_poly("-(X - Y)", XY, Z) == parse_poly("Y - X", XY, Z));
  CHECK(parse_poly("(X + 1)^2", XY, Z) ==
        parse_poly("X^2 + 2*X + 1", XY, Z));
}

TEST_CASE("rational literals over Q") {
  auto Q = DomainDescriptor::rationals();
  auto f = parse_poly("1/2*X + 3/4", XY, Q);
  CHECK(f.coeff({1, 0}).value() == Rational(1, 2));
  CHECK(f.coeff({0, 0}).value() == Rational(3, 4));
}

TEST_CASE("errors carry position and variable name") {
  CHECK_THROWS_WITH_AS(parse_poly("X + Z", XY, Z),
                       doctest::Contains("Z"), ParseError);
  try {
    parse_poly("X + ", XY, Z);
    FAIL("expected throw");
  } catch (const ParseError& e) {
    CHECK(e.position == 4);
  }
  CHECK_THROWS_AS(parse_poly("X X", XY, Z), ParseError);
}

TEST_CASE("printer is canonical, highest degree first") {
  CHECK(print_poly(parse_poly("-3 + X^2 + 2*X*Y", XY, Z), XY) ==
        "X^2 + 2*X*Y - 3");
  CHECK(print_poly(MultiPoly::zero(Z, 2), XY) == "0");
  CHECK(print_poly(parse_poly("-X", XY, Z), XY) == "-X");
}

TEST_CASE("parse after print is the identity on random polynomials") {
  Rng rng(0x9e9eu);
  auto Q = DomainDescriptor::rationals();
  for (int it = 0; it < 1000; ++it) {
    auto dom = it % 2 ? Z : Q;
    auto f = rand_poly(rng, dom, 2, 4, -30, 30, 6);
    REQUIRE(parse_poly(print_poly(f, XY), XY, dom) == f);
  }
}
