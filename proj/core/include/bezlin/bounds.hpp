#pragma once

#include <optional>
#include <vector>

#include "bezlin/domain.hpp"

namespace bezlin {

/// Degree-bound bookkeeping for the syzygy and membership machinery.
/// All values are exact arbitrary-precision integers.
namespace bounds {

Integer binom(unsigned long n, unsigned long k);

/// Uniformity function for semihereditary instances: alpha(n) = n.
Integer alpha(const Integer& n);

/// m-fold iterate of alpha (identity for the supported instances).
Integer alpha_iter(const Integer& m, const Integer& n);

/// Hermann degree bound over fields: (2d)^(2^(N-1)) for N >= 1; 0 for N = 0.
Integer beta_field(unsigned N, unsigned d);

/// delta(N,d,e) = (2d')^(2^(N-1)) with d' = max(e, beta_field(N,d)).
Integer delta_field(unsigned N, unsigned d, unsigned e);

/// Effective Nullstellensatz cap for unit-ideal cofactors: d^(N+1).
Integer kollar(unsigned N, unsigned d);

/// Row count of the degree-<=beta unrolling: binom(N+beta+d, N).
Integer unroll_rows(unsigned N, unsigned long beta, unsigned d);

/// Column count of the unrolling: n * binom(N+beta, N).
Integer unroll_cols(unsigned N, unsigned long beta, unsigned n);

/// Generator-count bound gamma(N,d,n) = alpha^{m'}(n').
Integer gamma(unsigned N, unsigned d, unsigned n);

} // namespace bounds

/// Escalation policy for rings where the degree-bound constant is not
/// explicit (Z, Z_(p)): start at beta_field, double per round, stop at
/// max_cap. Fields always use the complete bound.
struct Policy {
  long max_cap = 64;
  std::vector<long> primes = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31};
  std::optional<long> cap_override; // fixed starting cap, if set

  /// Starting degree cap for inputs of degree d in N variables.
  /// Throws CapExhausted if the complete field bound does not fit below
  /// max_cap on a field domain.
  long initial_cap(const DomainDescriptor& dom, unsigned N, unsigned d) const;
};

} // namespace bezlin
