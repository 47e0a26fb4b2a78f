#include "bezlin/polysyzygy.hpp"

#include <algorithm>
#include <set>

namespace bezlin {

namespace {

long poly_deg_or_zero(const MultiPoly& f) {
  auto d = f.degree();
  return d ? *d : 0;
}

void require_ring(const PolyMatrix& A) {
  if (A.empty() || A.front().empty())
    throw ShapeError("empty polynomial matrix");
  const auto& f = A.front().front();
  for (const auto& row : A) {
    if (row.size() != A.front().size())
      throw ShapeError("ragged polynomial matrix");
    for (const auto& e : row)
      if (!(e.domain() == f.domain()) || e.nvars() != f.nvars())
        throw DomainMismatch("polynomial ring mismatch in matrix");
  }
}

std::optional<Monomial> mono_sub(const Monomial& a, const Monomial& b) {
  Monomial r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] < b[i])
      return std::nullopt;
    r[i] = a[i] - b[i];
  }
  return r;
}

PolyMatrix change_matrix_domain(const PolyMatrix& A, DomainDescriptor target) {
  PolyMatrix R;
  for (const auto& row : A) {
    PolyVector r;
    for (const auto& e : row)
      r.push_back(e.change_domain(target));
    R.push_back(std::move(r));
  }
  return R;
}

PolyVector change_vector_domain(const PolyVector& v, DomainDescriptor target) {
  PolyVector r;
  for (const auto& e : v)
    r.push_back(e.change_domain(target));
  return r;
}

/// Degree-capped particular solution, or nullopt.
std::optional<PolyVector> try_solve_at_cap(const PolyMatrix& A,
                                           const PolyVector& b, long cap,
                                           UnrollShape* shape_out = nullptr) {
  long rhs_deg = 0;
  for (const auto& e : b)
    rhs_deg = std::max(rhs_deg, poly_deg_or_zero(e));
  auto [M, shape] = unroll_matrix(A, cap, rhs_deg);
  DomainVector rhs = unroll_rhs(b, shape);
  if (shape_out)
    *shape_out = shape;
  auto z = solve(M, rhs);
  if (!z)
    return std::nullopt;
  return reroll(*z, shape);
}

/// Greedy minimization: scan by ascending degree, keeping a generator only
/// if it is not already in the module span of the kept ones (cofactors of
/// degree <= cap). Preserves the generated module.
std::vector<PolyVector> prune_generators(std::vector<PolyVector> vecs,
                                         long cap) {
  std::stable_sort(vecs.begin(), vecs.end(),
                   [](const PolyVector& a, const PolyVector& b) {
                     long da = 0, db = 0;
                     for (const auto& e : a)
                       da = std::max(da, poly_deg_or_zero(e));
                     for (const auto& e : b)
                       db = std::max(db, poly_deg_or_zero(e));
                     return da < db;
                   });
  std::vector<PolyVector> kept;
  for (auto& g : vecs) {
    bool zero = std::all_of(g.begin(), g.end(),
                            [](const MultiPoly& e) { return e.is_zero(); });
    if (zero)
      continue;
    if (!kept.empty()) {
      // columns of G are the kept generators
      PolyMatrix G(g.size(), PolyVector());
      for (std::size_t i = 0; i < g.size(); ++i)
        for (const auto& k : kept)
          G[i].push_back(k[i]);
      if (try_solve_at_cap(G, g, cap))
        continue;
    }
    kept.push_back(std::move(g));
  }
  return kept;
}

long max_entry_degree(const PolyMatrix& A) {
  long d = 0;
  for (const auto& row : A)
    for (const auto& e : row)
      d = std::max(d, poly_deg_or_zero(e));
  return d;
}

bool verify_solution(const PolyMatrix& A, const PolyVector& y,
                     const PolyVector& b) {
  for (std::size_t i = 0; i < A.size(); ++i) {
    MultiPoly acc = MultiPoly::zero(A[i][0].domain(), A[i][0].nvars());
    for (std::size_t j = 0; j < A[i].size(); ++j)
      acc = acc + A[i][j] * y[j];
    if (acc != b[i])
      return false;
  }
  return true;
}

/// Complete decision over a field domain. Status is never Unknown.
MembershipVerdict solve_poly_field(const PolyMatrix& A, const PolyVector& b,
                                   const Policy& policy) {
  const auto& f = A.front().front();
  unsigned N = f.nvars();
  long d = max_entry_degree(A);
  for (const auto& e : b)
    d = std::max(d, poly_deg_or_zero(e));
  long cap = policy.initial_cap(f.domain(), N, (unsigned)d);
  MembershipVerdict v;
  v.cap = cap;
  v.ledger_beta = cap;
  UnrollShape shape;
  auto sol = try_solve_at_cap(A, b, cap, &shape);
  v.ledger_rows = shape.rows() * A.size();
  v.ledger_cols = shape.cols();
  v.ledger_gamma = shape.cols();
  if (sol) {
    v.status = MembershipVerdict::Status::Member;
    v.certificate = {*sol};
  } else {
    v.status = MembershipVerdict::Status::NotMember;
  }
  return v;
}

std::vector<long> denominator_primes(const PolyVector& sol) {
  Integer lcm_den = 1;
  for (const auto& f : sol)
    for (const auto& [m, c] : f.terms()) {
      Integer den = c.value().get_den();
      mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), den.get_mpz_t());
    }
  std::vector<long> primes;
  Integer rem = lcm_den;
  for (long p = 2; Integer(p) * p <= rem; ++p) {
    if (mpz_divisible_ui_p(rem.get_mpz_t(), p)) {
      primes.push_back(p);
      while (mpz_divisible_ui_p(rem.get_mpz_t(), p))
        rem /= p;
    }
  }
  if (rem > 1 && rem.fits_slong_p())
    primes.push_back(rem.get_si());
  return primes;
}

} // namespace

std::pair<DomainMatrix, UnrollShape> unroll_matrix(const PolyMatrix& A,
                                                   long cap, long rhs_deg) {
  require_ring(A);
  const auto& f = A.front().front();
  UnrollShape shape;
  shape.dom = f.domain();
  shape.nvars = f.nvars();
  shape.n = (unsigned)A.front().size();
  shape.cap = cap;
  shape.d = max_entry_degree(A);
  shape.rhs_deg = std::max<long>(rhs_deg, 0);
  long row_cap = std::max(cap + shape.d, shape.rhs_deg);
  shape.row_monomials = monomials_upto(shape.nvars, (unsigned)row_cap);
  shape.col_monomials = monomials_upto(shape.nvars, (unsigned)cap);

  std::size_t R = shape.row_monomials.size();
  std::size_t C = shape.col_monomials.size();
  DomainMatrix M(shape.dom, A.size() * R, shape.n * C);
  for (std::size_t bi = 0; bi < A.size(); ++bi)
    for (unsigned j = 0; j < shape.n; ++j)
      for (std::size_t c = 0; c < C; ++c) {
        const MultiPoly& fj = A[bi][j];
        if (fj.is_zero())
          continue;
        for (std::size_t r = 0; r < R; ++r) {
          auto diff = mono_sub(shape.row_monomials[r], shape.col_monomials[c]);
          if (!diff)
            continue;
          DomainElem coef = fj.coeff(*diff);
          if (!coef.is_zero())
            M.at(bi * R + r, j * C + c) = coef;
        }
      }
  return {std::move(M), std::move(shape)};
}

std::pair<DomainMatrix, UnrollShape> unroll(const PolyVector& f, long cap) {
  return unroll_matrix(PolyMatrix{f}, cap);
}

PolyVector reroll(const DomainVector& v, const UnrollShape& shape) {
  if (v.size() != shape.cols())
    throw ShapeError("reroll: coordinate length mismatch");
  std::size_t C = shape.col_monomials.size();
  PolyVector out;
  for (unsigned j = 0; j < shape.n; ++j) {
    MultiPoly f(shape.dom, shape.nvars);
    for (std::size_t c = 0; c < C; ++c)
      f.set_coeff(shape.col_monomials[c], v[j * C + c]);
    out.push_back(std::move(f));
  }
  return out;
}

DomainVector unroll_coords(const PolyVector& y, const UnrollShape& shape) {
  if (y.size() != shape.n)
    throw ShapeError("unroll_coords: vector length mismatch");
  std::size_t C = shape.col_monomials.size();
  DomainVector v(shape.cols(), DomainElem::zero(shape.dom));
  for (unsigned j = 0; j < shape.n; ++j) {
    for (const auto& [m, c] : y[j].terms()) {
      auto it = std::find(shape.col_monomials.begin(),
                          shape.col_monomials.end(), m);
      if (it == shape.col_monomials.end())
        throw ShapeError("unroll_coords: degree exceeds cap");
      v[j * C + (std::size_t)(it - shape.col_monomials.begin())] = c;
    }
  }
  return v;
}

DomainVector unroll_rhs(const PolyVector& b, const UnrollShape& shape) {
  std::size_t R = shape.row_monomials.size();
  DomainVector rhs(b.size() * R, DomainElem::zero(shape.dom));
  for (std::size_t i = 0; i < b.size(); ++i)
    for (const auto& [m, c] : b[i].terms()) {
      auto it = std::find(shape.row_monomials.begin(),
                          shape.row_monomials.end(), m);
      if (it == shape.row_monomials.end())
        throw ShapeError("unroll_rhs: right-hand side degree exceeds rows");
      rhs[i * R + (std::size_t)(it - shape.row_monomials.begin())] = c;
    }
  return rhs;
}

SyzygyBasis syzygies_matrix(const PolyMatrix& A, const Policy& policy) {
  require_ring(A);
  const auto& f = A.front().front();
  const auto dom = f.domain();
  unsigned N = f.nvars();
  unsigned n = (unsigned)A.front().size();
  long d = max_entry_degree(A);

  SyzygyBasis basis;
  basis.dom = dom;
  basis.nvars = N;
  basis.n = n;

  if (d <= 0) {
    // constant matrix: the coefficient-level recursion is already complete
    DomainMatrix M(dom, A.size(), n);
    for (std::size_t i = 0; i < A.size(); ++i)
      for (unsigned j = 0; j < n; ++j) {
        const auto& e = A[i][j];
        M.at(i, j) = e.is_zero() ? DomainElem::zero(dom)
                                 : e.terms().begin()->second;
      }
    GeneratorSet k = kernel_matrix_recursive(M);
    basis.degree_cap = 0;
    basis.complete = true;
    for (const auto& v : k.vectors()) {
      PolyVector y;
      for (const auto& c : v)
        y.push_back(MultiPoly::constant(dom, N, c));
      basis.vectors.push_back(std::move(y));
    }
    return basis;
  }

  long cap = policy.initial_cap(dom, N, (unsigned)d);
  auto [M, shape] = unroll_matrix(A, cap);
  GeneratorSet k = kernel_hnf(M);
  basis.degree_cap = cap;
  basis.complete = dom.is_field();
  for (const auto& v : k.vectors())
    basis.vectors.push_back(reroll(v, shape));
  basis.vectors = prune_generators(std::move(basis.vectors), cap);
  return basis;
}

SyzygyBasis syzygies(const PolyVector& f, const Policy& policy) {
  if (f.empty())
    throw ShapeError("syzygies: empty tuple");
  return syzygies_matrix(PolyMatrix{f}, policy);
}

SyzygyBasis syzygies_matrix_recursive(const PolyMatrix& A,
                                      const Policy& policy) {
  require_ring(A);
  const auto& f0 = A.front().front();
  const auto dom = f0.domain();
  unsigned N = f0.nvars();
  unsigned n = (unsigned)A.front().size();

  SyzygyBasis first = syzygies(A.front(), policy);
  if (A.size() == 1)
    return first;
  SyzygyBasis out;
  out.dom = dom;
  out.nvars = N;
  out.n = n;
  out.complete = first.complete;
  if (first.vectors.empty())
    return out;
  // B = A' * Z, where Z has the first-row generators as columns
  std::size_t g = first.vectors.size();
  PolyMatrix B;
  for (std::size_t i = 1; i < A.size(); ++i) {
    PolyVector row;
    for (std::size_t k = 0; k < g; ++k) {
      MultiPoly acc = MultiPoly::zero(dom, N);
      for (unsigned j = 0; j < n; ++j)
        acc = acc + A[i][j] * first.vectors[k][j];
      row.push_back(std::move(acc));
    }
    B.push_back(std::move(row));
  }
  SyzygyBasis inner = syzygies_matrix_recursive(B, policy);
  out.complete = out.complete && inner.complete;
  long cap = 0;
  for (const auto& u : inner.vectors) {
    PolyVector y(n, MultiPoly::zero(dom, N));
    for (std::size_t k = 0; k < g; ++k)
      for (unsigned j = 0; j < n; ++j)
        y[j] = y[j] + first.vectors[k][j] * u[k];
    for (const auto& e : y)
      cap = std::max(cap, poly_deg_or_zero(e));
    out.vectors.push_back(std::move(y));
  }
  out.degree_cap = cap;
  return out;
}

MembershipVerdict solve_poly(const PolyMatrix& A, const PolyVector& b,
                             const Policy& policy) {
  require_ring(A);
  if (b.size() != A.size())
    throw ShapeError("solve_poly: right-hand side length mismatch");
  const auto& f = A.front().front();
  const auto dom = f.domain();
  unsigned N = f.nvars();

  if (dom.is_field())
    return solve_poly_field(A, b, policy);

  // Complete decision over the fraction field first. A cap override must not
  // leak into it: a NotMember verdict is only sound at the full field bound.
  Policy field_policy = policy;
  field_policy.cap_override.reset();
  auto Q = DomainDescriptor::rationals();
  bool q_decided = true;
  MembershipVerdict over_q;
  try {
    over_q = solve_poly_field(change_matrix_domain(A, Q),
                              change_vector_domain(b, Q), field_policy);
  } catch (const CapExhausted&) {
    q_decided = false; // field bound beyond the ceiling; fall through
  }
  if (q_decided && !over_q.is_member()) {
    MembershipVerdict v;
    v.status = MembershipVerdict::Status::NotMember;
    v.failure = FailureKind::RationalFailure;
    v.cap = over_q.cap;
    v.ledger_beta = over_q.ledger_beta;
    v.ledger_rows = over_q.ledger_rows;
    v.ledger_cols = over_q.ledger_cols;
    v.ledger_gamma = over_q.ledger_gamma;
    return v;
  }

  long d = max_entry_degree(A);
  for (const auto& e : b)
    d = std::max(d, poly_deg_or_zero(e));
  long cap = policy.initial_cap(dom, N, (unsigned)d);
  MembershipVerdict v;
  while (true) {
    UnrollShape shape;
    auto sol = try_solve_at_cap(A, b, cap, &shape);
    v.cap = cap;
    v.ledger_beta = cap;
    v.ledger_rows = shape.rows() * A.size();
    v.ledger_cols = shape.cols();
    v.ledger_gamma = shape.cols();
    if (sol) {
      v.status = MembershipVerdict::Status::Member;
      v.certificate = {*sol};
      return v;
    }
    if (cap >= policy.max_cap)
      break;
    cap = std::min(cap * 2, policy.max_cap);
  }
  v.status = MembershipVerdict::Status::Unknown;
  return v;
}

MembershipVerdict member(const MultiPoly& f0, const PolyVector& gens,
                         const Policy& policy) {
  if (gens.empty())
    throw ShapeError("member: no generators");
  const auto dom = f0.domain();

  bool homogeneous = f0.is_homogeneous();
  for (const auto& g : gens)
    homogeneous = homogeneous && g.is_homogeneous();
  if (homogeneous)
    return member_homogeneous(f0, gens);

  PolyMatrix A{gens};
  PolyVector b{f0};
  if (dom.is_field())
    return solve_poly_field(A, b, policy);

  // Falsification passes run at the full field bound regardless of any cap
  // override; skip them when that bound is beyond the ceiling.
  Policy field_policy = policy;
  field_policy.cap_override.reset();
  auto Q = DomainDescriptor::rationals();
  bool q_decided = true;
  MembershipVerdict over_q;
  try {
    over_q = solve_poly_field(change_matrix_domain(A, Q),
                              change_vector_domain(b, Q), field_policy);
  } catch (const CapExhausted&) {
    q_decided = false;
  }
  if (q_decided && !over_q.is_member()) {
    MembershipVerdict v = over_q;
    v.certificate.clear();
    v.failure = FailureKind::RationalFailure;
    return v;
  }

  // modular falsification
  std::set<long> prime_set;
  if (dom.kind == DomainKind::LocalizedIntegers) {
    prime_set.insert(dom.p);
  } else {
    prime_set.insert(policy.primes.begin(), policy.primes.end());
    if (q_decided)
      for (long p : denominator_primes(over_q.solution()))
        prime_set.insert(p);
  }
  for (long p : prime_set) {
    auto Fp = DomainDescriptor::prime_field(p);
    MembershipVerdict over_p;
    try {
      over_p = solve_poly_field(change_matrix_domain(A, Fp),
                                change_vector_domain(b, Fp), field_policy);
    } catch (const CapExhausted&) {
      break; // same bound for every prime; no modular verdict available
    }
    if (!over_p.is_member()) {
      MembershipVerdict v;
      v.status = MembershipVerdict::Status::NotMember;
      v.failure = FailureKind::ModularFailure;
      v.failure_prime = p;
      v.cap = over_p.cap;
      v.ledger_beta = over_p.ledger_beta;
      v.ledger_rows = over_p.ledger_rows;
      v.ledger_cols = over_p.ledger_cols;
      v.ledger_gamma = over_p.ledger_gamma;
      return v;
    }
  }

  return solve_poly(A, b, policy);
}

MembershipVerdict member_homogeneous(const MultiPoly& f0,
                                     const PolyVector& gens) {
  if (!f0.is_homogeneous())
    throw Error("member_homogeneous: f0 is not homogeneous");
  for (const auto& g : gens)
    if (!g.is_homogeneous())
      throw Error("member_homogeneous: generator is not homogeneous");
  const auto dom = f0.domain();
  unsigned N = f0.nvars();
  MembershipVerdict v;
  if (f0.is_zero()) {
    v.status = MembershipVerdict::Status::Member;
    v.certificate = {PolyVector(gens.size(), MultiPoly::zero(dom, N))};
    return v;
  }
  long D = *f0.degree();
  // cofactor degrees are forced: deg g_j = D - deg f_j, or g_j = 0
  struct Block {
    std::size_t j;
    std::vector<Monomial> monos; // degree exactly D - deg f_j
  };
  std::vector<Block> blocks;
  std::size_t ncols = 0;
  for (std::size_t j = 0; j < gens.size(); ++j) {
    if (gens[j].is_zero())
      continue;
    long e = D - *gens[j].degree();
    if (e < 0)
      continue;
    Block blk{j, {}};
    for (const auto& m : monomials_upto(N, (unsigned)e))
      if ((long)total_degree(m) == e)
        blk.monos.push_back(m);
    ncols += blk.monos.size();
    blocks.push_back(std::move(blk));
  }
  std::vector<Monomial> rows;
  for (const auto& m : monomials_upto(N, (unsigned)D))
    if ((long)total_degree(m) == D)
      rows.push_back(m);
  DomainMatrix M(dom, rows.size(), ncols);
  std::size_t col = 0;
  for (const auto& blk : blocks)
    for (const auto& mu : blk.monos) {
      for (std::size_t r = 0; r < rows.size(); ++r) {
        auto diff = mono_sub(rows[r], mu);
        if (diff)
          M.at(r, col) = gens[blk.j].coeff(*diff);
      }
      ++col;
    }
  DomainVector rhs;
  for (const auto& m : rows)
    rhs.push_back(f0.coeff(m));
  auto z = solve(M, rhs);
  v.cap = D;
  v.ledger_beta = D;
  v.ledger_rows = rows.size();
  v.ledger_cols = ncols;
  v.ledger_gamma = ncols;
  if (!z) {
    v.status = MembershipVerdict::Status::NotMember;
    v.failure = FailureKind::HomogeneousExact;
    return v;
  }
  PolyVector cof(gens.size(), MultiPoly::zero(dom, N));
  col = 0;
  for (const auto& blk : blocks)
    for (const auto& mu : blk.monos) {
      cof[blk.j].set_coeff(mu, (*z)[col]);
      ++col;
    }
  v.status = MembershipVerdict::Status::Member;
  v.certificate = {cof};
  return v;
}

MembershipVerdict unit_member(const PolyVector& gens, const Policy& policy) {
  if (gens.empty())
    throw ShapeError("unit_member: no generators");
  const auto dom = gens.front().domain();
  unsigned N = gens.front().nvars();
  MultiPoly one = MultiPoly::constant(dom, N, DomainElem::one(dom));
  if (!dom.is_field())
    return member(one, gens, policy);
  long d = 0;
  for (const auto& g : gens)
    d = std::max(d, poly_deg_or_zero(g));
  // either bound is complete for 1-membership; take the smaller
  Integer complete = bounds::kollar(N, (unsigned)std::max(1l, d));
  Integer hermann = bounds::beta_field(N, (unsigned)std::max(1l, d));
  if (hermann < complete)
    complete = hermann;
  bool reachable = complete.fits_slong_p() &&
                   complete.get_si() <= policy.max_cap;
  long limit = reachable ? complete.get_si() : policy.max_cap;
  PolyMatrix A{gens};
  PolyVector b{one};
  // search small caps first: unit certificates are usually of tiny degree
  for (long cap = 1;; cap = std::min(cap * 2, limit)) {
    UnrollShape shape;
    auto sol = try_solve_at_cap(A, b, cap, &shape);
    MembershipVerdict v;
    v.cap = cap;
    v.ledger_beta = cap;
    v.ledger_rows = shape.rows();
    v.ledger_cols = shape.cols();
    v.ledger_gamma = shape.cols();
    if (sol) {
      v.status = MembershipVerdict::Status::Member;
      v.certificate = {*sol};
      return v;
    }
    if (cap >= limit) {
      if (!reachable)
        throw CapExhausted("unit membership undecided below the cap ceiling");
      v.status = MembershipVerdict::Status::NotMember;
      return v;
    }
  }
}

bool radical_member_field(const MultiPoly& f0, const PolyVector& gens,
                          const Policy& policy) {
  const auto dom = f0.domain();
  if (!dom.is_field())
    throw Error("radical_member_field: field domain required");
  unsigned N = f0.nvars();
  auto lift = [&](const MultiPoly& f) {
    MultiPoly r(dom, N + 1);
    for (const auto& [m, c] : f.terms()) {
      Monomial mm = m;
      mm.push_back(0);
      r.set_coeff(mm, c);
    }
    return r;
  };
  PolyVector ext;
  for (const auto& g : gens)
    ext.push_back(lift(g));
  MultiPoly t = MultiPoly::variable(dom, N + 1, N);
  MultiPoly one = MultiPoly::constant(dom, N + 1, DomainElem::one(dom));
  ext.push_back(one - t * lift(f0));
  return unit_member(ext, policy).is_member();
}

bool rad_member_constants(const DomainElem& r0,
                          const std::vector<DomainElem>& rs) {
  if (r0.domain().kind != DomainKind::Integers)
    throw Error("rad_member_constants: Z domain required");
  DomainElem a = DomainElem::zero(r0.domain());
  for (const auto& r : rs)
    a = gcd(a, r);
  if (a.is_zero())
    return r0.is_zero();
  return rad(r0, a);
}

MembershipVerdict one_member_binomial(const DomainElem& a,
                                      const DomainElem& b) {
  if (a.domain().kind != DomainKind::Integers)
    throw Error("one_member_binomial: Z domain required");
  const auto dom = a.domain();
  MembershipVerdict v;
  if (!rad(a, b)) {
    v.status = MembershipVerdict::Status::NotMember;
    return v;
  }
  // smallest n >= 1 with b | a^n; rad guarantees one at the log2 exponent
  long n = 1;
  if (b.is_zero()) {
    n = 1; // a = 0 here
  } else {
    DomainElem pw = a;
    while (!divides(b, pw)) {
      pw = pw * a;
      ++n;
    }
  }
  DomainElem c = b.is_zero() ? DomainElem::zero(dom) : [&] {
    DomainElem pw = DomainElem::one(dom);
    for (long i = 0; i < n; ++i)
      pw = pw * a;
    return exact_div(pw, b);
  }();
  // 1 = (1 + aX + ... + a^(n-1) X^(n-1)) (1 - aX) + c X^(n-1) * bX
  MultiPoly g1(dom, 1);
  DomainElem apow = DomainElem::one(dom);
  for (long k = 0; k < n; ++k) {
    g1.set_coeff({(unsigned)k}, apow);
    apow = apow * a;
  }
  MultiPoly g2 = MultiPoly::monomial_term(dom, {(unsigned)(n - 1)}, c);
  if (c.is_zero())
    g2 = MultiPoly::zero(dom, 1);
  MultiPoly x = MultiPoly::variable(dom, 1, 0);
  MultiPoly one = MultiPoly::constant(dom, 1, DomainElem::one(dom));
  MultiPoly lhs = g1 * (one - x.scale(a)) + g2 * x.scale(b);
  if (lhs != one)
    throw Error("one_member_binomial: certificate failed to verify");
  v.status = MembershipVerdict::Status::Member;
  v.certificate = {{g1, g2}};
  v.cap = n;
  return v;
}

MembershipVerdict module_member(const std::vector<PolyVector>& gens,
                                const PolyVector& v, const Policy& policy) {
  if (v.empty())
    throw ShapeError("module_member: empty vector");
  const auto dom = v.front().domain();
  unsigned N = v.front().nvars();
  bool vzero = std::all_of(v.begin(), v.end(),
                           [](const MultiPoly& f) { return f.is_zero(); });
  MembershipVerdict out;
  if (vzero) {
    out.status = MembershipVerdict::Status::Member;
    out.certificate = {PolyVector(gens.size(), MultiPoly::zero(dom, N))};
    return out;
  }
  if (gens.empty()) {
    out.status = MembershipVerdict::Status::NotMember;
    return out;
  }
  PolyMatrix A;
  for (std::size_t i = 0; i < v.size(); ++i) {
    PolyVector row;
    for (const auto& g : gens) {
      if (g.size() != v.size())
        throw ShapeError("module_member: generator length mismatch");
      row.push_back(g[i]);
    }
    A.push_back(std::move(row));
  }
  return solve_poly(A, v, policy);
}

bool same_poly_span(const std::vector<PolyVector>& a,
                    const std::vector<PolyVector>& b, const Policy& policy) {
  for (const auto& v : a)
    if (!module_member(b, v, policy).is_member())
      return false;
  for (const auto& v : b)
    if (!module_member(a, v, policy).is_member())
      return false;
  return true;
}

std::vector<PolyVector> intersect_modules(const PolyMatrix& A,
                                          const PolyMatrix& B,
                                          const Policy& policy) {
  if (A.size() != B.size())
    throw ShapeError("intersect_modules: ambient rank mismatch");
  require_ring(A);
  require_ring(B);
  const auto dom = A.front().front().domain();
  unsigned N = A.front().front().nvars();
  std::size_t n = A.front().size(), np = B.front().size();
  PolyMatrix block;
  for (std::size_t i = 0; i < A.size(); ++i) {
    PolyVector row = A[i];
    for (const auto& e : B[i])
      row.push_back(-e);
    block.push_back(std::move(row));
  }
  SyzygyBasis syz = syzygies_matrix(block, policy);
  std::vector<PolyVector> out;
  for (const auto& w : syz.vectors) {
    PolyVector col(A.size(), MultiPoly::zero(dom, N));
    bool nonzero = false;
    for (std::size_t i = 0; i < A.size(); ++i) {
      for (std::size_t j = 0; j < n; ++j)
        col[i] = col[i] + A[i][j] * w[j];
      nonzero = nonzero || !col[i].is_zero();
    }
    (void)np;
    if (nonzero)
      out.push_back(std::move(col));
  }
  return out;
}

PolyVector colon_modules(const PolyMatrix& Mprime, const PolyMatrix& M,
                         const Policy& policy) {
  require_ring(Mprime);
  require_ring(M);
  if (Mprime.size() != M.size())
    throw ShapeError("colon_modules: ambient rank mismatch");
  const auto dom = M.front().front().domain();
  unsigned N = M.front().front().nvars();
  std::size_t m = M.size();
  MultiPoly one = MultiPoly::constant(dom, N, DomainElem::one(dom));

  std::optional<PolyVector> ideal; // generators of the running intersection
  for (std::size_t j = 0; j < M.front().size(); ++j) {
    PolyVector g;
    bool gzero = true;
    for (std::size_t i = 0; i < m; ++i) {
      g.push_back(M[i][j]);
      gzero = gzero && M[i][j].is_zero();
    }
    if (gzero)
      continue; // (M' : 0) = R[X], the identity for intersection
    // solutions (a, v) of a*g = Mprime*v; first components generate (M' : g)
    PolyMatrix block;
    for (std::size_t i = 0; i < m; ++i) {
      PolyVector row{g[i]};
      for (const auto& e : Mprime[i])
        row.push_back(-e);
      block.push_back(std::move(row));
    }
    SyzygyBasis syz = syzygies_matrix(block, policy);
    PolyVector this_ideal;
    for (const auto& w : syz.vectors)
      if (!w.front().is_zero())
        this_ideal.push_back(w.front());
    if (!ideal) {
      ideal = std::move(this_ideal);
    } else {
      // ideal intersection = module intersection in R[X]^1
      PolyMatrix ia{*ideal}, ib{this_ideal};
      if (ideal->empty() || this_ideal.empty()) {
        ideal = PolyVector{};
        continue;
      }
      auto inter = intersect_modules(ia, ib, policy);
      PolyVector flat;
      for (const auto& col : inter)
        flat.push_back(col.front());
      ideal = std::move(flat);
    }
  }
  if (!ideal)
    return {one}; // zero module: everything multiplies into M'
  return *ideal;
}

} // namespace bezlin
