#include <doctest.h>

#include "bezlin/domain.hpp"
#include "util.hpp"

using namespace bezlin;
using namespace bezlin::testutil;

namespace {
const auto Z = DomainDescriptor::integers();
const auto Q = DomainDescriptor::rationals();
DomainElem zi(long v) { return DomainElem::from_int(Z, v); }
} // namespace

TEST_CASE("descriptor parsing round-trips") {
  for (const char* s : {"Z", "Q", "Fp:5", "Zloc:3"}) {
    auto d = DomainDescriptor::parse(s);
    CHECK(d.name() == s);
  }
  CHECK_THROWS_AS(DomainDescriptor::parse("Fp:4"), Error);
  CHECK_THROWS_AS(DomainDescriptor::parse("ring"), Error);
}

TEST_CASE("gcd canonical values") {
  CHECK(gcd(zi(6), zi(4)) == zi(2));
  CHECK(gcd(zi(0), zi(0)) == zi(0));
  CHECK(gcd(zi(-6), zi(4)) == zi(2));
  auto F5 = DomainDescriptor::prime_field(5);
  CHECK(gcd(DomainElem::from_int(F5, 3), DomainElem::zero(F5)) ==
        DomainElem::one(F5));
  auto Z3 = DomainDescriptor::localized(3);
  // 18 = 2*3^2, 12 = 4*3 -> p-power associate 3
  CHECK(gcd(DomainElem::from_int(Z3, 18), DomainElem::from_int(Z3, 12)) ==
        DomainElem::from_int(Z3, 3));
}

TEST_CASE("colon values and convention") {
  CHECK(colon(zi(6), zi(4)) == zi(3));
  CHECK(colon(zi(0), zi(0)) == zi(1));
  CHECK(colon(zi(0), zi(5)) == zi(0));
}

TEST_CASE("rad examples") {
  CHECK(rad(zi(6), zi(4)));
  CHECK_FALSE(rad(zi(2), zi(12)));
  CHECK(rad(zi(0), zi(0)));
  CHECK(rad(zi(7), zi(1)));
  CHECK(rad(zi(7), zi(-1)));
}

TEST_CASE("ideal_gen") {
  CHECK(ideal_gen({zi(4), zi(6), zi(10)}) == zi(2));
  CHECK(ideal_gen({}) == DomainElem::zero(Z));
  CHECK(ideal_gen({zi(0), zi(7), zi(0)}) == zi(7));
}

TEST_CASE("exact_div") {
  CHECK(exact_div(zi(6), zi(3)) == zi(2));
  CHECK(exact_div(zi(0), zi(5)) == zi(0));
  CHECK_THROWS_AS(exact_div(zi(5), zi(2)), DivisionError);
  CHECK_THROWS_AS(exact_div(zi(5), zi(0)), DivisionError);
}

TEST_CASE("bezout_coeffs identity") {
  auto [u, v] = bezout_coeffs(zi(6), zi(4));
  CHECK(u * zi(6) + v * zi(4) == gcd(zi(6), zi(4)));
  auto F7 = DomainDescriptor::prime_field(7);
  auto a = DomainElem::from_int(F7, 3);
  auto [uf, vf] = bezout_coeffs(a, DomainElem::zero(F7));
  CHECK(uf * a == DomainElem::one(F7));
}

TEST_CASE("domain mismatch rejected") {
  CHECK_THROWS_AS(gcd(zi(1), DomainElem::one(Q)), DomainMismatch);
}

TEST_CASE("field and localized normalization invariants") {
  auto F5 = DomainDescriptor::prime_field(5);
  for (long v = -12; v <= 12; ++v) {
    auto e = DomainElem::from_int(F5, v);
    CHECK(e.value().get_den() == 1);
    CHECK(e.value().get_num() >= 0);
    CHECK(e.value().get_num() < 5);
  }
  auto Z5 = DomainDescriptor::localized(5);
  auto e = DomainElem(Z5, Rational(3, 7)); // 7 invertible in Z_(5)
  CHECK(e.value() == Rational(3, 7));
  CHECK_THROWS_AS(DomainElem(Z5, Rational(3, 10)), Error);
}

TEST_CASE("gcd identity suite over Z and Zloc(5)") {
  Rng rng(0xbe21u);
  auto Z5 = DomainDescriptor::localized(5);
  for (int it = 0; it < 10000; ++it) {
    auto dom = it % 2 ? Z5 : Z;
    auto a = rand_elem(rng, dom, -1000, 1000);
    auto b = rand_elem(rng, dom, -1000, 1000);
    auto c = rand_elem(rng, dom, -1000, 1000);
    // symmetry is bit-exact
    REQUIRE(gcd(a, b) == gcd(b, a));
    auto g = gcd(a, b);
    REQUIRE(divides(g, a));
    REQUIRE(divides(g, b));
    auto [u, v] = bezout_coeffs(a, b);
    REQUIRE(u * a + v * b == g);
    // b*(a:b) = a*(b:a)
    REQUIRE(b * colon(a, b) == a * colon(b, a));
    // (a:b)*(bc:ac) = (b:a)*(ac:bc) for c != 0
    if (!c.is_zero())
      REQUIRE(colon(a, b) * colon(b * c, a * c) ==
              colon(b, a) * colon(a * c, b * c));
  }
}

TEST_CASE("rad log2 trick vs brute force") {
  Rng rng(0x51adu);
  for (int it = 0; it < 10000; ++it) {
    long a = rand_int(rng, -10000, 10000);
    long b = rand_int(rng, -10000, 10000);
    REQUIRE(rad(zi(a), zi(b)) == brute_rad(a, b));
  }
}

TEST_CASE("localized gcd is the p-power of minimal valuation") {
  Rng rng(0x10c5u);
  auto Z5 = DomainDescriptor::localized(5);
  for (int it = 0; it < 500; ++it) {
    long a = rand_int(rng, -2000, 2000);
    long b = rand_int(rng, -2000, 2000);
    if (a == 0 || b == 0)
      continue;
    auto g = gcd(DomainElem::from_int(Z5, a), DomainElem::from_int(Z5, b));
    long va = p_valuation(Rational(a), 5), vb = p_valuation(Rational(b), 5);
    Integer expect = 1;
    for (long k = 0; k < std::min(va, vb); ++k)
      expect *= 5;
    CHECK(g.value() == Rational(expect));
  }
}
