#include "bezlin/linalg.hpp"

#include <algorithm>

namespace bezlin {

namespace {

DomainElem dot(const DomainVector& a, const DomainVector& b) {
  DomainElem s = DomainElem::zero(a.front().domain());
  for (std::size_t i = 0; i < a.size(); ++i)
    s = s + a[i] * b[i];
  return s;
}

/// Unit u such that e/u is the canonical associate of e. e != 0.
DomainElem canonical_unit(const DomainElem& e) {
  const auto& dom = e.domain();
  switch (dom.kind) {
  case DomainKind::Integers:
    return sgn(e.value()) < 0 ? -DomainElem::one(dom) : DomainElem::one(dom);
  case DomainKind::Rationals:
  case DomainKind::PrimeField:
    return e;
  case DomainKind::LocalizedIntegers: {
    long v = p_valuation(e.value(), dom.p);
    Integer pw;
    mpz_ui_pow_ui(pw.get_mpz_t(), (unsigned long)dom.p, (unsigned long)v);
    return exact_div(e, DomainElem(dom, Rational(pw)));
  }
  }
  throw Error("unreachable");
}

} // namespace

DomainMatrix DomainMatrix::identity(DomainDescriptor dom, std::size_t n) {
  DomainMatrix I(dom, n, n);
  for (std::size_t i = 0; i < n; ++i)
    I.at(i, i) = DomainElem::one(dom);
  return I;
}

DomainMatrix DomainMatrix::from_rows(DomainDescriptor dom,
                                     const std::vector<DomainVector>& rows) {
  std::size_t m = rows.size();
  std::size_t n = m == 0 ? 0 : rows.front().size();
  DomainMatrix A(dom, m, n);
  for (std::size_t i = 0; i < m; ++i) {
    if (rows[i].size() != n)
      throw ShapeError("ragged rows");
    for (std::size_t j = 0; j < n; ++j)
      A.at(i, j) = rows[i][j];
  }
  return A;
}

DomainVector DomainMatrix::row(std::size_t i) const {
  DomainVector r;
  r.reserve(cols_);
  for (std::size_t j = 0; j < cols_; ++j)
    r.push_back(at(i, j));
  return r;
}

DomainVector DomainMatrix::col(std::size_t j) const {
  DomainVector c;
  c.reserve(rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    c.push_back(at(i, j));
  return c;
}

DomainVector DomainMatrix::apply(const DomainVector& v) const {
  if (v.size() != cols_)
    throw ShapeError("matrix-vector dimension mismatch");
  DomainVector r(rows_, DomainElem::zero(dom_));
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      r[i] = r[i] + at(i, j) * v[j];
  return r;
}

DomainMatrix DomainMatrix::operator*(const DomainMatrix& o) const {
  if (cols_ != o.rows_)
    throw ShapeError("matrix-matrix dimension mismatch");
  DomainMatrix r(dom_, rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      if (at(i, k).is_zero())
        continue;
      for (std::size_t j = 0; j < o.cols_; ++j)
        r.at(i, j) = r.at(i, j) + at(i, k) * o.at(k, j);
    }
  return r;
}

GeneratorSet::GeneratorSet(const DomainMatrix& defining,
                           std::vector<DomainVector> vecs, std::string meta)
    : vecs_(std::move(vecs)), dim_(defining.cols()), meta_(std::move(meta)) {
  for (const auto& v : vecs_) {
    if (v.size() != dim_)
      throw ShapeError("generator length mismatch");
    for (const auto& e : defining.apply(v))
      if (!e.is_zero())
        throw Error("generator does not annihilate its matrix");
  }
}

GeneratorSet kernel_row(const DomainVector& a) {
  if (a.empty())
    throw ShapeError("kernel_row: empty row");
  const auto dom = a.front().domain();
  std::size_t n = a.size();
  DomainMatrix A = DomainMatrix::from_rows(dom, {a});
  bool all_zero = std::all_of(a.begin(), a.end(),
                              [](const DomainElem& e) { return e.is_zero(); });
  std::vector<DomainVector> vecs;
  if (all_zero) {
    for (std::size_t i = 0; i < n; ++i) {
      DomainVector e(n, DomainElem::zero(dom));
      e[i] = DomainElem::one(dom);
      vecs.push_back(std::move(e));
    }
    return {A, std::move(vecs), "kernel_row:zero"};
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      DomainVector y(n, DomainElem::zero(dom));
      y[i] = colon(a[j], a[i]);
      y[j] = -colon(a[i], a[j]);
      vecs.push_back(std::move(y));
    }
  return {A, std::move(vecs), "kernel_row:special"};
}

GeneratorSet kernel_row_unit(const DomainVector& a,
                             const DomainVector& lambda) {
  if (a.empty() || a.size() != lambda.size())
    throw ShapeError("kernel_row_unit: length mismatch");
  const auto dom = a.front().domain();
  std::size_t n = a.size();
  DomainElem u = dot(lambda, a);
  if (!u.is_unit())
    throw Error("kernel_row_unit: combination is not a unit");
  DomainMatrix A = DomainMatrix::from_rows(dom, {a});
  std::vector<DomainVector> vecs;
  for (std::size_t i = 0; i < n; ++i) {
    DomainVector y(n, DomainElem::zero(dom));
    DomainElem s = DomainElem::zero(dom);
    for (std::size_t k = 0; k < n; ++k)
      if (k != i) {
        y[k] = lambda[k] * a[i];
        s = s + lambda[k] * a[k];
      }
    y[i] = -s;
    vecs.push_back(std::move(y));
  }
  return {A, std::move(vecs), "kernel_row:unit"};
}

GeneratorSet kernel_matrix_recursive(const DomainMatrix& A) {
  if (A.rows() < 1)
    throw ShapeError("kernel_matrix_recursive: no rows");
  const auto dom = A.domain();
  std::size_t n = A.cols();
  GeneratorSet first = kernel_row(A.row(0));
  if (A.rows() == 1)
    return first;
  std::size_t g = first.size();
  // Z: n x g matrix of first-row kernel generators
  DomainMatrix Z(dom, n, g);
  for (std::size_t j = 0; j < g; ++j)
    for (std::size_t i = 0; i < n; ++i)
      Z.at(i, j) = first.vectors()[j][i];
  DomainMatrix Ap(dom, A.rows() - 1, n);
  for (std::size_t i = 1; i < A.rows(); ++i)
    for (std::size_t j = 0; j < n; ++j)
      Ap.at(i - 1, j) = A.at(i, j);
  if (g == 0)
    return {A, {}, "kernel_matrix:recursive"};
  DomainMatrix B = Ap * Z;
  GeneratorSet inner = kernel_matrix_recursive(B);
  std::vector<DomainVector> vecs;
  for (const auto& u : inner.vectors())
    vecs.push_back(Z.apply(u));
  return {A, std::move(vecs), "kernel_matrix:recursive"};
}

HnfResult hnf(const DomainMatrix& A) {
  const auto dom = A.domain();
  std::size_t m = A.rows(), n = A.cols();
  DomainMatrix H = A;
  DomainMatrix U = DomainMatrix::identity(dom, n);
  std::vector<std::pair<std::size_t, std::size_t>> pivots;

  auto col_op2 = [&](std::size_t j, std::size_t k, const DomainElem& a,
                     const DomainElem& b, const DomainElem& c,
                     const DomainElem& d) {
    // (col_j, col_k) <- (a*col_j + b*col_k, c*col_j + d*col_k)
    for (std::size_t i = 0; i < m; ++i) {
      DomainElem x = H.at(i, j), y = H.at(i, k);
      H.at(i, j) = a * x + b * y;
      H.at(i, k) = c * x + d * y;
    }
    for (std::size_t i = 0; i < n; ++i) {
      DomainElem x = U.at(i, j), y = U.at(i, k);
      U.at(i, j) = a * x + b * y;
      U.at(i, k) = c * x + d * y;
    }
  };
  auto swap_cols = [&](std::size_t j, std::size_t k) {
    for (std::size_t i = 0; i < m; ++i)
      std::swap(H.at(i, j), H.at(i, k));
    for (std::size_t i = 0; i < n; ++i)
      std::swap(U.at(i, j), U.at(i, k));
  };
  auto scale_col = [&](std::size_t j, const DomainElem& u) {
    for (std::size_t i = 0; i < m; ++i)
      H.at(i, j) = H.at(i, j) * u;
    for (std::size_t i = 0; i < n; ++i)
      U.at(i, j) = U.at(i, j) * u;
  };

  std::size_t piv = 0;
  for (std::size_t row = 0; row < m && piv < n; ++row) {
    // smallest-index nonzero entry becomes the pivot column
    std::size_t jnz = piv;
    while (jnz < n && H.at(row, jnz).is_zero())
      ++jnz;
    if (jnz == n)
      continue;
    if (jnz != piv)
      swap_cols(piv, jnz);
    for (std::size_t k = piv + 1; k < n; ++k) {
      if (H.at(row, k).is_zero())
        continue;
      DomainElem a = H.at(row, piv), b = H.at(row, k);
      DomainElem g = gcd(a, b);
      auto [u, v] = bezout_coeffs(a, b);
      DomainElem aq = exact_div(a, g), bq = exact_div(b, g);
      // det = u*aq + v*bq = 1
      col_op2(piv, k, u, v, -bq, aq);
    }
    // normalize the pivot to its canonical associate
    DomainElem cu = canonical_unit(H.at(row, piv));
    if (!cu.is_one()) {
      DomainElem inv = dom.kind == DomainKind::Integers
                           ? cu // +-1, self-inverse
                           : exact_div(DomainElem::one(dom), cu);
      scale_col(piv, inv);
    }
    // reduce earlier pivot columns against this pivot
    DomainElem pivval = H.at(row, piv);
    for (std::size_t k = 0; k < piv; ++k) {
      const DomainElem& e = H.at(row, k);
      if (e.is_zero())
        continue;
      DomainElem q = DomainElem::zero(dom);
      if (dom.kind == DomainKind::Integers) {
        Integer qq;
        mpz_fdiv_q(qq.get_mpz_t(), e.value().get_num().get_mpz_t(),
                   pivval.value().get_num().get_mpz_t());
        q = DomainElem(dom, Rational(qq));
      } else if (divides(pivval, e)) {
        q = exact_div(e, pivval);
      } else {
        continue;
      }
      if (q.is_zero())
        continue;
      // col_k <- col_k - q * col_piv
      for (std::size_t i = 0; i < m; ++i)
        H.at(i, k) = H.at(i, k) - q * H.at(i, piv);
      for (std::size_t i = 0; i < n; ++i)
        U.at(i, k) = U.at(i, k) - q * U.at(i, piv);
    }
    pivots.emplace_back(row, piv);
    ++piv;
  }
  return {std::move(H), std::move(U), std::move(pivots)};
}

GeneratorSet kernel_hnf(const DomainMatrix& A) {
  HnfResult r = hnf(A);
  std::size_t rank = r.pivots.size();
  std::vector<DomainVector> basis;
  for (std::size_t j = rank; j < A.cols(); ++j)
    basis.push_back(r.U.col(j));
  return {A, std::move(basis), "kernel_hnf"};
}

std::optional<DomainVector> solve(const DomainMatrix& A,
                                  const DomainVector& b) {
  if (b.size() != A.rows())
    throw ShapeError("solve: right-hand side length mismatch");
  const auto dom = A.domain();
  HnfResult r = hnf(A);
  DomainVector z(A.cols(), DomainElem::zero(dom));
  std::size_t next_piv = 0;
  for (std::size_t row = 0; row < A.rows(); ++row) {
    DomainElem resid = b[row];
    for (std::size_t k = 0; k < r.pivots.size(); ++k) {
      std::size_t c = r.pivots[k].second;
      if (!z[c].is_zero())
        resid = resid - r.H.at(row, c) * z[c];
    }
    bool is_pivot_row =
        next_piv < r.pivots.size() && r.pivots[next_piv].first == row;
    if (is_pivot_row) {
      std::size_t c = r.pivots[next_piv].second;
      ++next_piv;
      if (resid.is_zero())
        continue;
      if (!divides(r.H.at(row, c), resid))
        return std::nullopt;
      z[c] = exact_div(resid, r.H.at(row, c));
    } else if (!resid.is_zero()) {
      return std::nullopt;
    }
  }
  return r.U.apply(z);
}

DomainElem determinant(const DomainMatrix& A) {
  if (A.rows() != A.cols())
    throw ShapeError("determinant of non-square matrix");
  std::size_t n = A.rows();
  const auto dom = A.domain();
  if (n == 0)
    return DomainElem::one(dom);
  if (n == 1)
    return A.at(0, 0);
  DomainElem acc = DomainElem::zero(dom);
  for (std::size_t j = 0; j < n; ++j) {
    if (A.at(0, j).is_zero())
      continue;
    DomainMatrix minor(dom, n - 1, n - 1);
    for (std::size_t i = 1; i < n; ++i) {
      std::size_t cc = 0;
      for (std::size_t c = 0; c < n; ++c) {
        if (c == j)
          continue;
        minor.at(i - 1, cc++) = A.at(i, c);
      }
    }
    DomainElem term = A.at(0, j) * determinant(minor);
    acc = (j % 2 == 0) ? acc + term : acc - term;
  }
  return acc;
}

bool heger_solvable(const DomainMatrix& A, const DomainVector& b) {
  std::size_t m = A.rows(), n = A.cols();
  if (b.size() != m)
    throw ShapeError("heger_solvable: dimension mismatch");
  const auto dom = A.domain();
  DomainMatrix Ab(dom, m, n + 1);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j)
      Ab.at(i, j) = A.at(i, j);
    Ab.at(i, n) = b[i];
  }
  auto minors = [&](const DomainMatrix& M) {
    std::vector<DomainElem> out;
    // enumerate m-subsets of columns lexicographically
    std::vector<std::size_t> comb(m);
    for (std::size_t i = 0; i < m; ++i)
      comb[i] = i;
    if (M.cols() < m)
      return out;
    while (true) {
      DomainMatrix S(dom, m, m);
      for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j)
          S.at(i, j) = M.at(i, comb[j]);
      out.push_back(determinant(S));
      std::size_t k = m;
      while (k > 0 && comb[k - 1] == M.cols() - m + (k - 1))
        --k;
      if (k == 0)
        break;
      ++comb[k - 1];
      for (std::size_t i = k; i < m; ++i)
        comb[i] = comb[i - 1] + 1;
    }
    return out;
  };
  std::vector<DomainElem> ma = minors(A);
  DomainElem ga = ideal_gen(ma.empty() ? std::vector<DomainElem>{DomainElem::zero(dom)}
                                       : ma);
  // full row rank over the fraction field required
  bool any_nonzero =
      std::any_of(ma.begin(), ma.end(),
                  [](const DomainElem& e) { return !e.is_zero(); });
  if (!any_nonzero)
    throw Error("heger_solvable: matrix does not have full row rank");
  DomainElem gab = ideal_gen(minors(Ab));
  return ga == gab;
}

bool in_span(const std::vector<DomainVector>& gens, const DomainVector& v,
             const DomainDescriptor& dom) {
  bool vzero = std::all_of(v.begin(), v.end(),
                           [](const DomainElem& e) { return e.is_zero(); });
  if (vzero)
    return true;
  if (gens.empty())
    return false;
  std::size_t dim = v.size();
  DomainMatrix G(dom, dim, gens.size());
  for (std::size_t j = 0; j < gens.size(); ++j) {
    if (gens[j].size() != dim)
      throw ShapeError("in_span: dimension mismatch");
    for (std::size_t i = 0; i < dim; ++i)
      G.at(i, j) = gens[j][i];
  }
  return solve(G, v).has_value();
}

bool same_span(const std::vector<DomainVector>& a,
               const std::vector<DomainVector>& b, const DomainDescriptor& dom,
               std::size_t dim) {
  (void)dim;
  for (const auto& v : a)
    if (!in_span(b, v, dom))
      return false;
  for (const auto& v : b)
    if (!in_span(a, v, dom))
      return false;
  return true;
}

} // namespace bezlin
