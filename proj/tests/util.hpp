#pragma once

#include <cstdio>
#include <random>
#include <string>

#include "bezlin/linalg.hpp"
#include "bezlin/multipoly.hpp"
#include "bezlin/polysyzygy.hpp"

namespace bezlin::testutil {

using Rng = std::mt19937_64;

inline long rand_int(Rng& rng, long lo, long hi) {
  return std::uniform_int_distribution<long>(lo, hi)(rng);
}

inline DomainElem rand_elem(Rng& rng, DomainDescriptor dom, long lo, long hi) {
  return DomainElem::from_int(dom, rand_int(rng, lo, hi));
}

inline DomainVector rand_vector(Rng& rng, DomainDescriptor dom, std::size_t n,
                                long lo, long hi) {
  DomainVector v;
  for (std::size_t i = 0; i < n; ++i)
    v.push_back(rand_elem(rng, dom, lo, hi));
  return v;
}

inline DomainMatrix rand_matrix(Rng& rng, DomainDescriptor dom, std::size_t m,
                                std::size_t n, long lo, long hi) {
  DomainMatrix A(dom, m, n);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j)
      A.at(i, j) = rand_elem(rng, dom, lo, hi);
  return A;
}

/// Random polynomial with a few integer-coefficient terms.
inline MultiPoly rand_poly(Rng& rng, DomainDescriptor dom, unsigned nvars,
                           unsigned maxdeg, long lo, long hi,
                           unsigned max_terms = 4) {
  MultiPoly f(dom, nvars);
  unsigned t = (unsigned)rand_int(rng, 0, max_terms);
  for (unsigned k = 0; k < t; ++k) {
    Monomial m(nvars, 0);
    unsigned budget = maxdeg;
    for (unsigned i = 0; i < nvars; ++i) {
      unsigned e = (unsigned)rand_int(rng, 0, budget);
      m[i] = e;
      budget -= e;
    }
    f.set_coeff(m, f.coeff(m) + rand_elem(rng, dom, lo, hi));
  }
  return f;
}

/// Reference semantics for rad over Z: does b divide a^n for some n <= 64?
inline bool brute_rad(long a, long b) {
  Integer bb = b >= 0 ? b : -b;
  if (bb == 1)
    return true;
  if (bb == 0)
    return a == 0;
  Integer pw = 1;
  for (int n = 1; n <= 64; ++n) {
    pw *= a;
    if (mpz_divisible_p(pw.get_mpz_t(), bb.get_mpz_t()))
      return true;
  }
  return false;
}

inline MultiPoly dot(const PolyVector& a, const PolyVector& b) {
  MultiPoly acc = MultiPoly::zero(a.front().domain(), a.front().nvars());
  for (std::size_t i = 0; i < a.size(); ++i)
    acc = acc + a[i] * b[i];
  return acc;
}

struct CmdResult {
  std::string output;
  int exit_code = -1;
};

inline CmdResult run_cmd(const std::string& cmd) {
  CmdResult r;
  FILE* p = popen((cmd + " 2>/dev/null").c_str(), "r");
  if (!p)
    return r;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, p)) > 0)
    r.output.append(buf, n);
  int st = pclose(p);
  r.exit_code = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
  return r;
}

inline std::string cli_path() {
  const char* p = std::getenv("BEZLIN_CLI");
  return p ? p : "./bezlin";
}

} // namespace bezlin::testutil
