#include "bezlin/multipoly.hpp"

#include <algorithm>

namespace bezlin {

unsigned total_degree(const Monomial& m) {
  unsigned d = 0;
  for (unsigned e : m)
    d += e;
  return d;
}

bool grlex_less(const Monomial& a, const Monomial& b) {
  unsigned da = total_degree(a), db = total_degree(b);
  if (da != db)
    return da < db;
  return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
}

namespace {

void collect_monomials(unsigned nvars, unsigned cap, Monomial& cur,
                       unsigned pos, unsigned used,
                       std::vector<Monomial>& out) {
  if (pos == nvars) {
    out.push_back(cur);
    return;
  }
  for (unsigned e = 0; e <= cap - used; ++e) {
    cur[pos] = e;
    collect_monomials(nvars, cap, cur, pos + 1, used + e, out);
  }
  cur[pos] = 0;
}

} // namespace

std::vector<Monomial> monomials_upto(unsigned nvars, unsigned degree_cap) {
  std::vector<Monomial> out;
  Monomial cur(nvars, 0);
  collect_monomials(nvars, degree_cap, cur, 0, 0, out);
  std::sort(out.begin(), out.end(), grlex_less);
  return out;
}

MultiPoly MultiPoly::constant(DomainDescriptor dom, unsigned nvars,
                              const DomainElem& c) {
  MultiPoly f(dom, nvars);
  f.set_coeff(Monomial(nvars, 0), c);
  return f;
}

MultiPoly MultiPoly::variable(DomainDescriptor dom, unsigned nvars,
                              unsigned i) {
  if (i >= nvars)
    throw ShapeError("variable index out of range");
  Monomial m(nvars, 0);
  m[i] = 1;
  return monomial_term(dom, m, DomainElem::one(dom));
}

MultiPoly MultiPoly::monomial_term(DomainDescriptor dom, const Monomial& m,
                                   const DomainElem& c) {
  MultiPoly f(dom, (unsigned)m.size());
  f.set_coeff(m, c);
  return f;
}

DomainElem MultiPoly::coeff(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? DomainElem::zero(dom_) : it->second;
}

void MultiPoly::set_coeff(const Monomial& m, const DomainElem& c) {
  if (m.size() != nvars_)
    throw ShapeError("monomial length does not match variable count");
  if (!(c.domain() == dom_))
    throw DomainMismatch("coefficient domain mismatch");
  if (c.is_zero())
    terms_.erase(m);
  else
    terms_.insert_or_assign(m, c);
}

MultiPoly MultiPoly::operator+(const MultiPoly& o) const {
  if (!(dom_ == o.dom_) || nvars_ != o.nvars_)
    throw DomainMismatch("polynomial ring mismatch in +");
  MultiPoly r = *this;
  for (const auto& [m, c] : o.terms_)
    r.set_coeff(m, r.coeff(m) + c);
  return r;
}

MultiPoly MultiPoly::operator-(const MultiPoly& o) const {
  return *this + (-o);
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly r(dom_, nvars_);
  for (const auto& [m, c] : terms_)
    r.terms_.insert_or_assign(m, -c);
  return r;
}

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
  if (!(dom_ == o.dom_) || nvars_ != o.nvars_)
    throw DomainMismatch("polynomial ring mismatch in *");
  MultiPoly r(dom_, nvars_);
  for (const auto& [ma, ca] : terms_)
    for (const auto& [mb, cb] : o.terms_) {
      Monomial m(nvars_);
      for (unsigned i = 0; i < nvars_; ++i)
        m[i] = ma[i] + mb[i];
      r.set_coeff(m, r.coeff(m) + ca * cb);
    }
  return r;
}

MultiPoly MultiPoly::scale(const DomainElem& c) const {
  MultiPoly r(dom_, nvars_);
  if (c.is_zero())
    return r;
  for (const auto& [m, cf] : terms_)
    r.terms_.insert_or_assign(m, cf * c);
  return r;
}

bool MultiPoly::operator==(const MultiPoly& o) const {
  return dom_ == o.dom_ && nvars_ == o.nvars_ && terms_ == o.terms_;
}

PolyDegree MultiPoly::degree() const {
  if (terms_.empty())
    return std::nullopt;
  long d = 0;
  for (const auto& [m, c] : terms_)
    d = std::max(d, (long)total_degree(m));
  return d;
}

DomainElem MultiPoly::content() const {
  std::vector<DomainElem> cs;
  cs.reserve(terms_.size());
  for (const auto& [m, c] : terms_)
    cs.push_back(c);
  if (cs.empty())
    return DomainElem::zero(dom_);
  return ideal_gen(cs);
}

DomainElem MultiPoly::eval(const std::vector<DomainElem>& point) const {
  if (point.size() != nvars_)
    throw ShapeError("evaluation point length does not match variable count");
  DomainElem acc = DomainElem::zero(dom_);
  for (const auto& [m, c] : terms_) {
    DomainElem t = c;
    for (unsigned i = 0; i < nvars_; ++i)
      for (unsigned e = 0; e < m[i]; ++e)
        t = t * point[i];
    acc = acc + t;
  }
  return acc;
}

bool MultiPoly::is_homogeneous() const {
  if (terms_.empty())
    return true;
  unsigned d = total_degree(terms_.begin()->first);
  for (const auto& [m, c] : terms_)
    if (total_degree(m) != d)
      return false;
  return true;
}

MultiPoly MultiPoly::homogeneous_component(long k) const {
  MultiPoly r(dom_, nvars_);
  if (k < 0)
    return r;
  for (const auto& [m, c] : terms_)
    if ((long)total_degree(m) == k)
      r.terms_.insert_or_assign(m, c);
  return r;
}

MultiPoly MultiPoly::change_domain(DomainDescriptor target) const {
  MultiPoly r(target, nvars_);
  for (const auto& [m, c] : terms_)
    r.set_coeff(m, DomainElem(target, c.value()));
  return r;
}

PolyDegree MultiPoly::degree_in_tail(unsigned nx) const {
  if (terms_.empty())
    return std::nullopt;
  if (nx > nvars_)
    throw ShapeError("tail variable count exceeds variable count");
  long d = 0;
  for (const auto& [m, c] : terms_) {
    long t = 0;
    for (unsigned i = nvars_ - nx; i < nvars_; ++i)
      t += m[i];
    d = std::max(d, t);
  }
  return d;
}

} // namespace bezlin
