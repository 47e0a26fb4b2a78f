#pragma once

#include <map>
#include <optional>
#include <vector>

#include "bezlin/domain.hpp"

namespace bezlin {

/// Exponent vector; length = ambient variable count.
using Monomial = std::vector<unsigned>;

unsigned total_degree(const Monomial& m);

/// Graded lexicographic order: lower total degree first, ties broken so that
/// the lexicographically greater exponent vector comes first (X before Y).
bool grlex_less(const Monomial& a, const Monomial& b);

struct GrlexLess {
  bool operator()(const Monomial& a, const Monomial& b) const {
    return grlex_less(a, b);
  }
};

/// All monomials in N variables of total degree <= D, in grlex order.
/// Length is binom(N+D, N).
std::vector<Monomial> monomials_upto(unsigned nvars, unsigned degree_cap);

/// Total degree; std::nullopt encodes deg(0) = -infinity.
using PolyDegree = std::optional<long>;

/// Sparse multivariate polynomial over a coefficient domain.
/// Invariant: no stored zero coefficients; all coefficients share `domain`.
class MultiPoly {
public:
  using TermMap = std::map<Monomial, DomainElem, GrlexLess>;

  MultiPoly(DomainDescriptor dom, unsigned nvars)
      : dom_(dom), nvars_(nvars) {}

  static MultiPoly zero(DomainDescriptor dom, unsigned nvars) {
    return {dom, nvars};
  }
  static MultiPoly constant(DomainDescriptor dom, unsigned nvars,
                            const DomainElem& c);
  static MultiPoly variable(DomainDescriptor dom, unsigned nvars, unsigned i);
  static MultiPoly monomial_term(DomainDescriptor dom, const Monomial& m,
                                 const DomainElem& c);

  const DomainDescriptor& domain() const { return dom_; }
  unsigned nvars() const { return nvars_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  /// Coefficient at m (zero element if absent).
  DomainElem coeff(const Monomial& m) const;
  void set_coeff(const Monomial& m, const DomainElem& c);

  MultiPoly operator+(const MultiPoly& o) const;
  MultiPoly operator-(const MultiPoly& o) const;
  MultiPoly operator*(const MultiPoly& o) const;
  MultiPoly operator-() const;
  MultiPoly scale(const DomainElem& c) const;
  bool operator==(const MultiPoly& o) const;
  bool operator!=(const MultiPoly& o) const { return !(*this == o); }

  PolyDegree degree() const;

  /// Canonical generator of the ideal generated by the coefficients.
  DomainElem content() const;

  /// Substitution homomorphism at a point of the coefficient domain.
  DomainElem eval(const std::vector<DomainElem>& point) const;

  bool is_homogeneous() const;
  MultiPoly homogeneous_component(long k) const;

  /// Coefficient-wise image under the natural map into `target`
  /// (Z -> Q, Z -> F_p, Z -> Z_(p); identity when target = domain).
  MultiPoly change_domain(DomainDescriptor target) const;

  /// Degree in the trailing `nx` variables only.
  PolyDegree degree_in_tail(unsigned nx) const;

private:
  DomainDescriptor dom_;
  unsigned nvars_;
  TermMap terms_;
};

} // namespace bezlin
