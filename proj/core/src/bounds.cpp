#include "bezlin/bounds.hpp"

#include <algorithm>

namespace bezlin {
namespace bounds {

Integer binom(unsigned long n, unsigned long k) {
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

Integer alpha(const Integer& n) { return n; }

Integer alpha_iter(const Integer& m, const Integer& n) {
  (void)m; // alpha is the identity, so any iterate is too
  return n;
}

Integer beta_field(unsigned N, unsigned d) {
  if (N == 0)
    return 0;
  Integer base = 2 * Integer(d);
  Integer r;
  unsigned long e = 1UL << (N - 1);
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

Integer delta_field(unsigned N, unsigned d, unsigned e) {
  Integer b = beta_field(N, d);
  Integer dp = std::max(Integer(e), b);
  if (N == 0)
    return 0;
  if (!dp.fits_ulong_p())
    throw Error("delta_field argument too large");
  return beta_field(N, (unsigned)dp.get_ui());
}

Integer kollar(unsigned N, unsigned d) {
  Integer r;
  mpz_ui_pow_ui(r.get_mpz_t(), d, N + 1);
  return r;
}

Integer unroll_rows(unsigned N, unsigned long beta, unsigned d) {
  return binom(N + beta + d, N);
}

Integer unroll_cols(unsigned N, unsigned long beta, unsigned n) {
  return Integer(n) * binom(N + beta, N);
}

Integer gamma(unsigned N, unsigned d, unsigned n) {
  Integer beta = beta_field(N, d);
  if (!beta.fits_ulong_p())
    throw Error("gamma: field bound too large");
  Integer mp = unroll_rows(N, beta.get_ui(), d);
  Integer np = unroll_cols(N, beta.get_ui(), n);
  return alpha_iter(mp, np);
}

} // namespace bounds

long Policy::initial_cap(const DomainDescriptor& dom, unsigned N,
                         unsigned d) const {
  if (cap_override)
    return *cap_override;
  Integer beta = bounds::beta_field(N, d);
  if (dom.is_field()) {
    if (!beta.fits_slong_p() || beta.get_si() > max_cap)
      throw CapExhausted("complete field bound " + beta.get_str() +
                         " exceeds max cap " + std::to_string(max_cap));
    return beta.get_si();
  }
  if (!beta.fits_slong_p() || beta.get_si() > max_cap)
    return max_cap;
  return beta.get_si();
}

} // namespace bezlin
