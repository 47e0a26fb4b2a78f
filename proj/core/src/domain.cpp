#include "bezlin/domain.hpp"

#include <cmath>
#include <cstdlib>

namespace bezlin {

namespace {

bool is_prime_small(long p) {
  if (p < 2)
    return false;
  if (p >= (1L << 31))
    throw Error("prime too large (must be < 2^31): " + std::to_string(p));
  for (long d = 2; d * d <= p; ++d)
    if (p % d == 0)
      return false;
  return true;
}

void require_same_domain(const DomainElem& a, const DomainElem& b) {
  if (!(a.domain() == b.domain()))
    throw DomainMismatch("operands belong to different domains: " +
                         a.domain().name() + " vs " + b.domain().name());
}

Integer mod_reduce(const Integer& n, long p) {
  Integer r = n % p;
  if (sgn(r) < 0)
    r += p;
  return r;
}

} // namespace

long p_valuation(const Rational& v, long p) {
  if (sgn(v) == 0)
    throw Error("p-adic valuation of zero");
  Integer num = v.get_num(), den = v.get_den();
  long val = 0;
  while (mpz_divisible_ui_p(num.get_mpz_t(), p)) {
    num /= p;
    ++val;
  }
  while (mpz_divisible_ui_p(den.get_mpz_t(), p)) {
    den /= p;
    --val;
  }
  return val;
}

DomainDescriptor DomainDescriptor::prime_field(long p) {
  if (!is_prime_small(p))
    throw Error("not a prime: " + std::to_string(p));
  return {DomainKind::PrimeField, p};
}

DomainDescriptor DomainDescriptor::localized(long p) {
  if (!is_prime_small(p))
    throw Error("not a prime: " + std::to_string(p));
  return {DomainKind::LocalizedIntegers, p};
}

DomainDescriptor DomainDescriptor::parse(const std::string& name) {
  if (name == "Z")
    return integers();
  if (name == "Q")
    return rationals();
  auto tail = [&](const std::string& prefix) {
    const std::string body = name.substr(prefix.size());
    char* end = nullptr;
    long p = std::strtol(body.c_str(), &end, 10);
    if (body.empty() || *end != '\0')
      throw Error("bad domain name: " + name);
    return p;
  };
  if (name.rfind("Fp:", 0) == 0)
    return prime_field(tail("Fp:"));
  if (name.rfind("Zloc:", 0) == 0)
    return localized(tail("Zloc:"));
  throw Error("unknown domain name: " + name +
              " (expected Z, Q, Fp:<p>, Zloc:<p>)");
}

std::string DomainDescriptor::name() const {
  switch (kind) {
  case DomainKind::Integers:
    return "Z";
  case DomainKind::Rationals:
    return "Q";
  case DomainKind::PrimeField:
    return "Fp:" + std::to_string(p);
  case DomainKind::LocalizedIntegers:
    return "Zloc:" + std::to_string(p);
  }
  return "?";
}

DomainElem::DomainElem(DomainDescriptor dom, Rational v)
    : dom_(dom), v_(std::move(v)) {
  v_.canonicalize();
  switch (dom_.kind) {
  case DomainKind::Integers:
    if (v_.get_den() != 1)
      throw Error("not an integer: " + v_.get_str());
    break;
  case DomainKind::Rationals:
    break;
  case DomainKind::PrimeField: {
    Integer den = v_.get_den();
    if (mpz_divisible_ui_p(den.get_mpz_t(), dom_.p))
      throw Error("denominator divisible by p in F_p: " + v_.get_str());
    Integer num = mod_reduce(v_.get_num(), dom_.p);
    if (den != 1) {
      Integer inv, pz(dom_.p);
      if (!mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), pz.get_mpz_t()))
        throw Error("no inverse mod p");
      num = mod_reduce(num * inv, dom_.p);
    }
    v_ = Rational(num);
    break;
  }
  case DomainKind::LocalizedIntegers: {
    Integer den = v_.get_den();
    if (mpz_divisible_ui_p(den.get_mpz_t(), dom_.p))
      throw Error("denominator divisible by p in Z_(p): " + v_.get_str());
    break;
  }
  }
}

DomainElem DomainElem::from_string(DomainDescriptor dom,
                                   const std::string& s) {
  Rational v;
  if (v.set_str(s, 10) != 0)
    throw Error("bad numeric literal: " + s);
  return {dom, v};
}

bool DomainElem::is_unit() const {
  if (is_zero())
    return false;
  switch (dom_.kind) {
  case DomainKind::Integers:
    return v_ == 1 || v_ == -1;
  case DomainKind::Rationals:
  case DomainKind::PrimeField:
    return true;
  case DomainKind::LocalizedIntegers:
    return p_valuation(v_, dom_.p) == 0;
  }
  return false;
}

DomainElem DomainElem::operator+(const DomainElem& o) const {
  require_same_domain(*this, o);
  return {dom_, v_ + o.v_};
}

DomainElem DomainElem::operator-(const DomainElem& o) const {
  require_same_domain(*this, o);
  return {dom_, v_ - o.v_};
}

DomainElem DomainElem::operator*(const DomainElem& o) const {
  require_same_domain(*this, o);
  return {dom_, v_ * o.v_};
}

DomainElem DomainElem::operator-() const { return {dom_, -v_}; }

bool DomainElem::operator==(const DomainElem& o) const {
  return dom_ == o.dom_ && v_ == o.v_;
}

std::string DomainElem::str() const {
  if (v_.get_den() == 1)
    return v_.get_num().get_str();
  return v_.get_str();
}

DomainElem gcd(const DomainElem& a, const DomainElem& b) {
  require_same_domain(a, b);
  const auto& dom = a.domain();
  switch (dom.kind) {
  case DomainKind::Integers: {
    Integer g;
    mpz_gcd(g.get_mpz_t(), a.value().get_num().get_mpz_t(),
            b.value().get_num().get_mpz_t());
    return {dom, Rational(g)};
  }
  case DomainKind::Rationals:
  case DomainKind::PrimeField:
    if (a.is_zero() && b.is_zero())
      return DomainElem::zero(dom);
    return DomainElem::one(dom);
  case DomainKind::LocalizedIntegers: {
    if (a.is_zero() && b.is_zero())
      return DomainElem::zero(dom);
    long va = a.is_zero() ? -1 : p_valuation(a.value(), dom.p);
    long vb = b.is_zero() ? -1 : p_valuation(b.value(), dom.p);
    long v = (va < 0) ? vb : (vb < 0 ? va : std::min(va, vb));
    Integer pw;
    mpz_ui_pow_ui(pw.get_mpz_t(), (unsigned long)dom.p, (unsigned long)v);
    return {dom, Rational(pw)};
  }
  }
  throw Error("unreachable");
}

DomainElem colon(const DomainElem& a, const DomainElem& b) {
  require_same_domain(a, b);
  if (a.is_zero() && b.is_zero())
    return DomainElem::one(a.domain());
  return exact_div(a, gcd(a, b));
}

bool rad(const DomainElem& a, const DomainElem& b) {
  require_same_domain(a, b);
  if (b.is_unit())
    return true; // n = 0: b | 1
  if (b.is_zero())
    return a.is_zero();
  const auto& dom = a.domain();
  switch (dom.kind) {
  case DomainKind::Integers: {
    // b | a^e with e = max(1, floor(log2 |b|)) decides b | a^n for all n.
    Integer bz = abs(b.value().get_num());
    unsigned long e = mpz_sizeinbase(bz.get_mpz_t(), 2) - 1;
    if (e < 1)
      e = 1;
    Integer pw;
    mpz_pow_ui(pw.get_mpz_t(), a.value().get_num().get_mpz_t(), e);
    return mpz_divisible_p(pw.get_mpz_t(), bz.get_mpz_t());
  }
  case DomainKind::Rationals:
  case DomainKind::PrimeField:
    throw Error("unreachable: nonzero non-unit in a field");
  case DomainKind::LocalizedIntegers:
    // b has valuation >= 1 here; b | a^n iff v_p(a) >= 1.
    return !a.is_zero() && p_valuation(a.value(), dom.p) >= 1;
  }
  throw Error("unreachable");
}

DomainElem ideal_gen(const std::vector<DomainElem>& elems) {
  if (elems.empty())
    return DomainElem::zero(DomainDescriptor::integers());
  DomainElem g = DomainElem::zero(elems.front().domain());
  for (const auto& e : elems)
    g = gcd(g, e);
  return g;
}

bool divides(const DomainElem& b, const DomainElem& a) {
  require_same_domain(a, b);
  if (b.is_zero())
    return a.is_zero();
  Rational q = a.value() / b.value();
  switch (a.domain().kind) {
  case DomainKind::Integers:
    return q.get_den() == 1;
  case DomainKind::Rationals:
  case DomainKind::PrimeField:
    return true;
  case DomainKind::LocalizedIntegers:
    return sgn(q) == 0 || p_valuation(q, a.domain().p) >= 0;
  }
  return false;
}

DomainElem exact_div(const DomainElem& a, const DomainElem& b) {
  require_same_domain(a, b);
  if (b.is_zero())
    throw DivisionError("division by zero");
  if (!divides(b, a))
    throw DivisionError(b.str() + " does not divide " + a.str() + " in " +
                        a.domain().name());
  return {a.domain(), a.value() / b.value()};
}

std::pair<DomainElem, DomainElem> bezout_coeffs(const DomainElem& a,
                                                const DomainElem& b) {
  require_same_domain(a, b);
  const auto& dom = a.domain();
  DomainElem g = gcd(a, b);
  if (g.is_zero())
    return {DomainElem::zero(dom), DomainElem::zero(dom)};
  switch (dom.kind) {
  case DomainKind::Integers: {
    Integer gg, u, v;
    mpz_gcdext(gg.get_mpz_t(), u.get_mpz_t(), v.get_mpz_t(),
               a.value().get_num().get_mpz_t(),
               b.value().get_num().get_mpz_t());
    // gg is non-negative for gmp when inputs are; matches the canonical gcd.
    return {{dom, Rational(u)}, {dom, Rational(v)}};
  }
  case DomainKind::Rationals:
  case DomainKind::PrimeField:
    if (!a.is_zero())
      return {exact_div(g, a), DomainElem::zero(dom)};
    return {DomainElem::zero(dom), exact_div(g, b)};
  case DomainKind::LocalizedIntegers: {
    // g = p^min(v(a), v(b)); divide by whichever attains the minimum.
    if (!a.is_zero() &&
        (b.is_zero() ||
         p_valuation(a.value(), dom.p) <= p_valuation(b.value(), dom.p)))
      return {exact_div(g, a), DomainElem::zero(dom)};
    return {DomainElem::zero(dom), exact_div(g, b)};
  }
  }
  throw Error("unreachable");
}

} // namespace bezlin
