#pragma once

#include <gmpxx.h>

#include <string>
#include <utility>
#include <vector>

#include "bezlin/errors.hpp"

namespace bezlin {

using Integer = mpz_class;
using Rational = mpq_class;

enum class DomainKind {
  Integers,          // Z
  Rationals,         // Q
  PrimeField,        // F_p
  LocalizedIntegers, // Z_(p), integers localized at p (a DVR)
};

/// Descriptor of a Bezout coefficient domain. Cheap to copy.
struct DomainDescriptor {
  DomainKind kind = DomainKind::Integers;
  long p = 0; // prime for PrimeField / LocalizedIntegers, 0 otherwise

  static DomainDescriptor integers() { return {DomainKind::Integers, 0}; }
  static DomainDescriptor rationals() { return {DomainKind::Rationals, 0}; }
  static DomainDescriptor prime_field(long p);
  static DomainDescriptor localized(long p);

  /// Parses "Z", "Q", "Fp:<p>", "Zloc:<p>".
  static DomainDescriptor parse(const std::string& name);
  std::string name() const;

  bool is_field() const {
    return kind == DomainKind::Rationals || kind == DomainKind::PrimeField;
  }
  bool operator==(const DomainDescriptor&) const = default;
};

/// Element of a coefficient domain. Immutable after construction.
///
/// Representation: a canonical rational. Z and F_p values have denominator 1,
/// F_p residues lie in [0,p), Z_(p) denominators are coprime to p.
class DomainElem {
public:
  DomainElem() : dom_(DomainDescriptor::integers()), v_(0) {}
  DomainElem(DomainDescriptor dom, Rational v);

  static DomainElem zero(DomainDescriptor dom) { return {dom, Rational(0)}; }
  static DomainElem one(DomainDescriptor dom) { return {dom, Rational(1)}; }
  static DomainElem from_int(DomainDescriptor dom, long v) {
    return {dom, Rational(v)};
  }
  /// Accepts "<int>" or "<int>/<int>".
  static DomainElem from_string(DomainDescriptor dom, const std::string& s);

  const DomainDescriptor& domain() const { return dom_; }
  const Rational& value() const { return v_; }

  bool is_zero() const { return sgn(v_) == 0; }
  bool is_one() const { return v_ == 1; }
  bool is_unit() const;

  DomainElem operator+(const DomainElem& o) const;
  DomainElem operator-(const DomainElem& o) const;
  DomainElem operator*(const DomainElem& o) const;
  DomainElem operator-() const;
  bool operator==(const DomainElem& o) const;
  bool operator!=(const DomainElem& o) const { return !(*this == o); }

  std::string str() const;

private:
  DomainDescriptor dom_;
  Rational v_;
};

/// Canonical generator of the ideal (a,b): non-negative over Z, 0 or 1 over
/// fields, p^min(v_p(a),v_p(b)) over Z_(p). Satisfies gcd(a,b) = gcd(b,a)
/// bit-exactly.
DomainElem gcd(const DomainElem& a, const DomainElem& b);

/// (a:b) = a/gcd(a,b), with (0:0) = 1. Generates the ideal (a):(b).
DomainElem colon(const DomainElem& a, const DomainElem& b);

/// True iff b divides a^n for some n >= 0 (n = 0 allowed: any unit b works).
bool rad(const DomainElem& a, const DomainElem& b);

/// Canonical generator of the ideal generated by the list; empty list -> 0.
DomainElem ideal_gen(const std::vector<DomainElem>& elems);

/// Quotient q with q*b = a. Throws DivisionError if b = 0 or b does not
/// divide a in the domain.
DomainElem exact_div(const DomainElem& a, const DomainElem& b);

/// (u, v) with u*a + v*b = gcd(a,b).
std::pair<DomainElem, DomainElem> bezout_coeffs(const DomainElem& a,
                                                const DomainElem& b);

/// True iff b divides a in the domain.
bool divides(const DomainElem& b, const DomainElem& a);

/// p-adic valuation of a nonzero rational (>= 0 for elements of Z_(p)).
long p_valuation(const Rational& v, long p);

} // namespace bezlin
