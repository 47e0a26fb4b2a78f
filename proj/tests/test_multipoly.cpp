#include <doctest.h>

#include <set>

#include "bezlin/multipoly.hpp"
#include "bezlin/parse.hpp"
#include "util.hpp"

using namespace bezlin;
using namespace bezlin::testutil;

namespace {
const auto Z = DomainDescriptor::integers();
const std::vector<std::string> XY{"X", "Y"};

std::set<long> prime_divisors(Integer n) {
  std::set<long> out;
  n = abs(n);
  for (long p = 2; Integer(p) * p <= n; ++p)
    while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
      out.insert(p);
      n /= p;
    }
  if (n > 1)
    out.insert(n.get_si());
  return out;
}
} // namespace

TEST_CASE("grlex order") {
  CHECK(grlex_less({0, 0}, {1, 0}));
  CHECK(grlex_less({1, 0}, {0, 2}));
  // same degree: X^2 before XY before Y^2
  CHECK(grlex_less({2, 0}, {1, 1}));
  CHECK(grlex_less({1, 1}, {0, 2}));
}

TEST_CASE("monomials_upto has binomial length and is sorted") {
  for (unsigned n = 0; n <= 3; ++n)
    for (unsigned d = 0; d <= 4; ++d) {
      auto ms = monomials_upto(n, d);
      Integer expect;
      mpz_bin_uiui(expect.get_mpz_t(), n + d, n);
      CHECK(Integer((long)ms.size()) == expect);
      for (std::size_t i = 1; i < ms.size(); ++i)
        CHECK(grlex_less(ms[i - 1], ms[i]));
    }
}

TEST_CASE("monomials_upto golden order, two variables degree 2") {
  auto ms = monomials_upto(2, 2);
  std::vector<Monomial> expect{{0, 0}, {1, 0}, {0, 1}, {2, 0}, {1, 1}, {0, 2}};
  CHECK(ms == expect);
}

TEST_CASE("degree with minus-infinity zero") {
  MultiPoly z = MultiPoly::zero(Z, 2);
  CHECK_FALSE(z.degree().has_value());
  auto f = parse_poly("X^2 + Y", XY, Z);
  CHECK(f.degree() == PolyDegree(2));
  CHECK_FALSE((z * f).degree().has_value());
}

TEST_CASE("deg(fg) = deg f + deg g with -inf absorbing") {
  Rng rng(0xde6u);
  for (int it = 0; it < 300; ++it) {
    auto f = rand_poly(rng, Z, 2, 3, -9, 9);
    auto g = rand_poly(rng, Z, 2, 3, -9, 9);
    auto dfg = (f * g).degree();
    if (!f.degree() || !g.degree())
      CHECK_FALSE(dfg.has_value());
    else
      CHECK(dfg == PolyDegree(*f.degree() + *g.degree()));
  }
}

TEST_CASE("homogeneous parts") {
  auto f = parse_poly("X^2 + X*Y", XY, Z);
  CHECK(f.is_homogeneous());
  auto g = parse_poly("X^2 + X", XY, Z);
  CHECK_FALSE(g.is_homogeneous());
  CHECK(g.homogeneous_component(1) == parse_poly("X", XY, Z));
}

TEST_CASE("eval is a ring homomorphism") {
  Rng rng(0xe7a1u);
  for (int it = 0; it < 200; ++it) {
    auto f = rand_poly(rng, Z, 2, 3, -9, 9);
    auto g = rand_poly(rng, Z, 2, 3, -9, 9);
    std::vector<DomainElem> pt{rand_elem(rng, Z, -5, 5),
                               rand_elem(rng, Z, -5, 5)};
    CHECK((f + g).eval(pt) == f.eval(pt) + g.eval(pt));
    CHECK((f * g).eval(pt) == f.eval(pt) * g.eval(pt));
  }
}

TEST_CASE("content") {
  CHECK(parse_poly("4*X + 6*Y", XY, Z).content() ==
        DomainElem::from_int(Z, 2));
  CHECK(MultiPoly::zero(Z, 2).content().is_zero());
}

TEST_CASE("radical content is multiplicative (prime-set identity)") {
  Rng rng(0x9a55u);
  int done = 0;
  while (done < 1000) {
    auto f = rand_poly(rng, Z, 2, 4, -20, 20);
    auto g = rand_poly(rng, Z, 2, 4, -20, 20);
    if (f.is_zero() || g.is_zero())
      continue;
    ++done;
    auto pf = prime_divisors(f.content().value().get_num());
    auto pg = prime_divisors(g.content().value().get_num());
    auto pfg = prime_divisors((f * g).content().value().get_num());
    std::set<long> uni = pf;
    uni.insert(pg.begin(), pg.end());
    REQUIRE(pfg == uni);
  }
}

TEST_CASE("change_domain natural maps") {
  auto f = parse_poly("6*X + 10", XY, Z);
  auto F5 = DomainDescriptor::prime_field(5);
  auto fp = f.change_domain(F5);
  CHECK(fp == parse_poly("X", XY, F5));
  CHECK(f.change_domain(DomainDescriptor::rationals()).degree() ==
        PolyDegree(1));
}
