#include <doctest.h>

#include "bezlin/bounds.hpp"
#include "bezlin/multipoly.hpp"

using namespace bezlin;

TEST_CASE("beta_field values") {
  CHECK(bounds::beta_field(0, 3) == 0);
  CHECK(bounds::beta_field(1, 1) == 2);
  CHECK(bounds::beta_field(1, 2) == 4);
  CHECK(bounds::beta_field(1, 3) == 6);
  CHECK(bounds::beta_field(2, 2) == 16);
  CHECK(bounds::beta_field(3, 1) == Integer(16)); // (2)^(2^2)
}

TEST_CASE("beta_field overflows 64 bits quickly and stays exact") {
  Integer b = bounds::beta_field(7, 2); // 4^64
  CHECK(mpz_sizeinbase(b.get_mpz_t(), 2) == 129);
}

TEST_CASE("delta_field takes the max of e and beta") {
  CHECK(bounds::delta_field(1, 2, 1) == 8);  // d' = max(1,4) = 4 -> 2*4
  CHECK(bounds::delta_field(1, 2, 10) == 20); // d' = 10
}

TEST_CASE("kollar cap") {
  CHECK(bounds::kollar(1, 2) == 4);
  CHECK(bounds::kollar(2, 3) == 27);
  CHECK(bounds::kollar(0, 5) == 5);
}

TEST_CASE("unroll sizes match monomials_upto lengths") {
  for (unsigned N = 0; N <= 3; ++N)
    for (unsigned beta = 0; beta <= 3; ++beta)
      for (unsigned d = 0; d <= 3; ++d) {
        CHECK(bounds::unroll_rows(N, beta, d) ==
              Integer((long)monomials_upto(N, beta + d).size()));
        CHECK(bounds::unroll_cols(N, beta, 3) ==
              Integer(3 * (long)monomials_upto(N, beta).size()));
      }
}

TEST_CASE("alpha is the identity and gamma = n'") {
  CHECK(bounds::alpha(17) == 17);
  CHECK(bounds::alpha_iter(1000, 42) == 42);
  // gamma(N,d,n) = alpha^{m'}(n') = n' for the semihereditary instances
  CHECK(bounds::gamma(1, 2, 2) == bounds::unroll_cols(1, 4, 2));
}

TEST_CASE("policy initial caps") {
  Policy p;
  CHECK(p.initial_cap(DomainDescriptor::rationals(), 1, 2) == 4);
  CHECK(p.initial_cap(DomainDescriptor::integers(), 1, 2) == 4);
  Policy tight;
  tight.max_cap = 8;
  // field bound beyond the ceiling is a hard error, not a silent clamp
  CHECK_THROWS_AS(tight.initial_cap(DomainDescriptor::rationals(), 2, 2),
                  CapExhausted);
  CHECK(tight.initial_cap(DomainDescriptor::integers(), 2, 2) == 8);
  Policy fixed;
  fixed.cap_override = 3;
  CHECK(fixed.initial_cap(DomainDescriptor::integers(), 2, 2) == 3);
}
