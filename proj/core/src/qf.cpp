#include "bezlin/qf.hpp"

#include <algorithm>
#include <sstream>
#include <tuple>
#include <unordered_map>

namespace bezlin {

namespace {

using InternKey = std::tuple<int, std::string, unsigned, const void*,
                             const void*>;

struct InternKeyHash {
  std::size_t operator()(const InternKey& k) const {
    std::size_t h = std::hash<int>()(std::get<0>(k));
    h = h * 31 + std::hash<std::string>()(std::get<1>(k));
    h = h * 31 + std::hash<unsigned>()(std::get<2>(k));
    h = h * 31 + std::hash<const void*>()(std::get<3>(k));
    h = h * 31 + std::hash<const void*>()(std::get<4>(k));
    return h;
  }
};

std::unordered_map<InternKey, GcdTerm::Ptr, InternKeyHash>& intern_table() {
  static std::unordered_map<InternKey, GcdTerm::Ptr, InternKeyHash> table;
  return table;
}

} // namespace

GcdTerm::Ptr GcdTerm::intern(Op o, Integer v, unsigned i, Ptr l, Ptr r) {
  InternKey key{(int)o, o == Op::Const ? v.get_str() : std::string(), i,
                l.get(), r.get()};
  auto& table = intern_table();
  auto it = table.find(key);
  if (it != table.end())
    return it->second;
  Ptr t(new GcdTerm(o, std::move(v), i, std::move(l), std::move(r)));
  table.emplace(std::move(key), t);
  return t;
}

GcdTerm::Ptr GcdTerm::constant(const Integer& k) {
  return intern(Op::Const, k, 0, nullptr, nullptr);
}
GcdTerm::Ptr GcdTerm::param(unsigned i) {
  return intern(Op::Param, 0, i, nullptr, nullptr);
}
GcdTerm::Ptr GcdTerm::add(Ptr a, Ptr b) {
  return intern(Op::Add, 0, 0, std::move(a), std::move(b));
}
GcdTerm::Ptr GcdTerm::sub(Ptr a, Ptr b) {
  return intern(Op::Sub, 0, 0, std::move(a), std::move(b));
}
GcdTerm::Ptr GcdTerm::mul(Ptr a, Ptr b) {
  return intern(Op::Mul, 0, 0, std::move(a), std::move(b));
}
GcdTerm::Ptr GcdTerm::colon(Ptr a, Ptr b) {
  return intern(Op::Colon, 0, 0, std::move(a), std::move(b));
}

namespace {

DomainElem eval_term_memo(const GcdTerm::Ptr& t, DomainDescriptor dom,
                          const DomainVector& c,
                          std::unordered_map<const GcdTerm*, DomainElem>& memo) {
  auto it = memo.find(t.get());
  if (it != memo.end())
    return it->second;
  DomainElem r = DomainElem::zero(dom);
  switch (t->op) {
  case GcdTerm::Op::Const:
    r = DomainElem(dom, Rational(t->value));
    break;
  case GcdTerm::Op::Param:
    if (t->index >= c.size())
      throw ShapeError("parameter index out of range");
    r = c[t->index];
    break;
  case GcdTerm::Op::Add:
    r = eval_term_memo(t->lhs, dom, c, memo) +
        eval_term_memo(t->rhs, dom, c, memo);
    break;
  case GcdTerm::Op::Sub:
    r = eval_term_memo(t->lhs, dom, c, memo) -
        eval_term_memo(t->rhs, dom, c, memo);
    break;
  case GcdTerm::Op::Mul:
    r = eval_term_memo(t->lhs, dom, c, memo) *
        eval_term_memo(t->rhs, dom, c, memo);
    break;
  case GcdTerm::Op::Colon:
    r = colon(eval_term_memo(t->lhs, dom, c, memo),
              eval_term_memo(t->rhs, dom, c, memo));
    break;
  }
  memo.emplace(t.get(), r);
  return r;
}

} // namespace

DomainElem eval_term(const GcdTerm::Ptr& t, DomainDescriptor dom,
                     const DomainVector& c) {
  std::unordered_map<const GcdTerm*, DomainElem> memo;
  return eval_term_memo(t, dom, c, memo);
}

namespace {

GcdTerm::Ptr simplify_memo(
    const GcdTerm::Ptr& t,
    std::unordered_map<const GcdTerm*, GcdTerm::Ptr>& memo) {
  auto it = memo.find(t.get());
  if (it != memo.end())
    return it->second;
  GcdTerm::Ptr r = t;
  if (t->op != GcdTerm::Op::Const && t->op != GcdTerm::Op::Param) {
    GcdTerm::Ptr a = simplify_memo(t->lhs, memo);
    GcdTerm::Ptr b = simplify_memo(t->rhs, memo);
    bool ca = a->op == GcdTerm::Op::Const, cb = b->op == GcdTerm::Op::Const;
    switch (t->op) {
    case GcdTerm::Op::Add:
      if (ca && cb)
        r = GcdTerm::constant(a->value + b->value);
      else if (a->is_const(0))
        r = b;
      else if (b->is_const(0))
        r = a;
      else
        r = GcdTerm::add(a, b);
      break;
    case GcdTerm::Op::Sub:
      if (ca && cb)
        r = GcdTerm::constant(a->value - b->value);
      else if (b->is_const(0))
        r = a;
      else if (a == b)
        r = GcdTerm::zero();
      else
        r = GcdTerm::sub(a, b);
      break;
    case GcdTerm::Op::Mul:
      if (ca && cb)
        r = GcdTerm::constant(a->value * b->value);
      else if (a->is_const(0) || b->is_const(0))
        r = GcdTerm::zero();
      else if (a->is_const(1))
        r = b;
      else if (b->is_const(1))
        r = a;
      else
        r = GcdTerm::mul(a, b);
      break;
    case GcdTerm::Op::Colon: {
      if (ca && cb) {
        auto Z = DomainDescriptor::integers();
        DomainElem q = colon(DomainElem(Z, Rational(a->value)),
                             DomainElem(Z, Rational(b->value)));
        r = GcdTerm::constant(q.value().get_num());
      } else {
        r = GcdTerm::colon(a, b);
      }
      break;
    }
    default:
      break;
    }
  }
  memo.emplace(t.get(), r);
  return r;
}

} // namespace

GcdTerm::Ptr simplify(const GcdTerm::Ptr& t) {
  std::unordered_map<const GcdTerm*, GcdTerm::Ptr> memo;
  return simplify_memo(t, memo);
}

GcdTerm::Ptr term_from_poly(const MultiPoly& f) {
  if (f.domain().kind != DomainKind::Integers)
    throw Error("term_from_poly: Z coefficients required");
  GcdTerm::Ptr acc = GcdTerm::zero();
  for (const auto& [m, c] : f.terms()) {
    GcdTerm::Ptr t = GcdTerm::constant(c.value().get_num());
    for (unsigned i = 0; i < m.size(); ++i)
      for (unsigned e = 0; e < m[i]; ++e)
        t = GcdTerm::mul(t, GcdTerm::param(i));
    acc = GcdTerm::add(acc, t);
  }
  return simplify(acc);
}

std::string term_to_string(const GcdTerm::Ptr& t,
                           const std::vector<std::string>& params) {
  switch (t->op) {
  case GcdTerm::Op::Const:
    return t->value.get_str();
  case GcdTerm::Op::Param:
    return t->index < params.size() ? params[t->index]
                                    : "C" + std::to_string(t->index + 1);
  case GcdTerm::Op::Add:
    return "(" + term_to_string(t->lhs, params) + " + " +
           term_to_string(t->rhs, params) + ")";
  case GcdTerm::Op::Sub:
    return "(" + term_to_string(t->lhs, params) + " - " +
           term_to_string(t->rhs, params) + ")";
  case GcdTerm::Op::Mul:
    return term_to_string(t->lhs, params) + "*" +
           term_to_string(t->rhs, params);
  case GcdTerm::Op::Colon:
    return "(" + term_to_string(t->lhs, params) + " : " +
           term_to_string(t->rhs, params) + ")";
  }
  return "?";
}

QfFormula::Ptr QfFormula::truth(bool v) {
  static Ptr t(new QfFormula(Kind::True, nullptr, nullptr, {}));
  static Ptr f(new QfFormula(Kind::False, nullptr, nullptr, {}));
  return v ? t : f;
}

QfFormula::Ptr QfFormula::eq0(GcdTerm::Ptr t) {
  t = simplify(t);
  if (t->op == GcdTerm::Op::Const)
    return truth(t->value == 0);
  return Ptr(new QfFormula(Kind::Eq0, std::move(t), nullptr, {}));
}

QfFormula::Ptr QfFormula::rad_atom(GcdTerm::Ptr s, GcdTerm::Ptr t) {
  return Ptr(
      new QfFormula(Kind::Rad, simplify(std::move(s)), simplify(std::move(t)),
                    {}));
}

QfFormula::Ptr QfFormula::conj(std::vector<Ptr> cs) {
  std::vector<Ptr> kept;
  for (auto& c : cs) {
    if (c->kind == Kind::False)
      return truth(false);
    if (c->kind != Kind::True)
      kept.push_back(std::move(c));
  }
  if (kept.empty())
    return truth(true);
  if (kept.size() == 1)
    return kept.front();
  return Ptr(new QfFormula(Kind::And, nullptr, nullptr, std::move(kept)));
}

QfFormula::Ptr QfFormula::disj(std::vector<Ptr> cs) {
  std::vector<Ptr> kept;
  for (auto& c : cs) {
    if (c->kind == Kind::True)
      return truth(true);
    if (c->kind != Kind::False)
      kept.push_back(std::move(c));
  }
  if (kept.empty())
    return truth(false);
  if (kept.size() == 1)
    return kept.front();
  return Ptr(new QfFormula(Kind::Or, nullptr, nullptr, std::move(kept)));
}

QfFormula::Ptr QfFormula::neg(Ptr f) {
  if (f->kind == Kind::True)
    return truth(false);
  if (f->kind == Kind::False)
    return truth(true);
  if (f->kind == Kind::Not)
    return f->children.front();
  return Ptr(new QfFormula(Kind::Not, nullptr, nullptr, {std::move(f)}));
}

bool eval_formula(const QfFormula::Ptr& f, DomainDescriptor dom,
                  const DomainVector& c) {
  switch (f->kind) {
  case QfFormula::Kind::True:
    return true;
  case QfFormula::Kind::False:
    return false;
  case QfFormula::Kind::Eq0:
    return eval_term(f->a, dom, c).is_zero();
  case QfFormula::Kind::Rad:
    return rad(eval_term(f->a, dom, c), eval_term(f->b, dom, c));
  case QfFormula::Kind::And:
    return std::all_of(f->children.begin(), f->children.end(),
                       [&](const QfFormula::Ptr& g) {
                         return eval_formula(g, dom, c);
                       });
  case QfFormula::Kind::Or:
    return std::any_of(f->children.begin(), f->children.end(),
                       [&](const QfFormula::Ptr& g) {
                         return eval_formula(g, dom, c);
                       });
  case QfFormula::Kind::Not:
    return !eval_formula(f->children.front(), dom, c);
  }
  return false;
}

std::string formula_to_string(const QfFormula::Ptr& f,
                              const std::vector<std::string>& params) {
  auto join = [&](const char* op) {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < f->children.size(); ++i) {
      if (i)
        os << " " << op << " ";
      os << formula_to_string(f->children[i], params);
    }
    os << ")";
    return os.str();
  };
  switch (f->kind) {
  case QfFormula::Kind::True:
    return "true";
  case QfFormula::Kind::False:
    return "false";
  case QfFormula::Kind::Eq0:
    return term_to_string(f->a, params) + " = 0";
  case QfFormula::Kind::Rad:
    return "rad(" + term_to_string(f->a, params) + ", " +
           term_to_string(f->b, params) + ")";
  case QfFormula::Kind::And:
    return join("&");
  case QfFormula::Kind::Or:
    return join("|");
  case QfFormula::Kind::Not:
    return "!" + formula_to_string(f->children.front(), params);
  }
  return "?";
}

PolyTerm PolyTerm::from_term(GcdTerm::Ptr t, unsigned nvars_x) {
  PolyTerm p;
  p.nvars_x = nvars_x;
  if (!t->is_const(0))
    p.coeffs.emplace(Monomial(nvars_x, 0), std::move(t));
  return p;
}

MultiPoly PolyTerm::eval(DomainDescriptor dom, const DomainVector& c) const {
  MultiPoly f(dom, nvars_x);
  for (const auto& [m, t] : coeffs)
    f.set_coeff(m, f.coeff(m) + eval_term(t, dom, c));
  return f;
}

const ParamFamily::Branch& ParamFamily::select(DomainDescriptor dom,
                                               const DomainVector& c) const {
  for (const auto& br : branches)
    if (eval_formula(br.guard, dom, c))
      return br;
  throw Error("no branch formula holds at the given tuple");
}

namespace {

/// Constant-level family over raw term rows; the public PolyTerm wrappers
/// are applied at the boundary.
struct ConstFamily {
  struct Branch {
    QfFormula::Ptr guard;
    std::vector<TermRow> gens;
  };
  std::vector<Branch> branches;
};

ConstFamily build_const_row(const TermRow& a) {
  std::size_t n = a.size();
  if (n == 0)
    throw ShapeError("build_param_kernel_row: empty row");
  ConstFamily fam;
  std::vector<QfFormula::Ptr> zero_atoms;
  for (const auto& t : a)
    zero_atoms.push_back(QfFormula::eq0(t));
  QfFormula::Ptr all_zero = QfFormula::conj(zero_atoms);

  if (all_zero->kind != QfFormula::Kind::False) {
    ConstFamily::Branch zb;
    zb.guard = all_zero;
    for (std::size_t i = 0; i < n; ++i) {
      TermRow e(n, GcdTerm::zero());
      e[i] = GcdTerm::one();
      zb.gens.push_back(std::move(e));
    }
    fam.branches.push_back(std::move(zb));
  }
  QfFormula::Ptr nonzero = QfFormula::neg(all_zero);
  if (nonzero->kind != QfFormula::Kind::False) {
    ConstFamily::Branch nb;
    nb.guard = nonzero;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) {
        TermRow y(n, GcdTerm::zero());
        y[i] = simplify(GcdTerm::colon(a[j], a[i]));
        y[j] = simplify(
            GcdTerm::sub(GcdTerm::zero(), GcdTerm::colon(a[i], a[j])));
        nb.gens.push_back(std::move(y));
      }
    fam.branches.push_back(std::move(nb));
  }
  return fam;
}

ConstFamily build_const_matrix(const TermMatrix& A) {
  if (A.empty())
    throw ShapeError("build_param_kernel_matrix: no rows");
  std::size_t n = A.front().size();
  ConstFamily first = build_const_row(A.front());
  if (A.size() == 1)
    return first;
  ConstFamily out;
  for (const auto& br1 : first.branches) {
    if (br1.gens.empty()) {
      out.branches.push_back(br1);
      continue;
    }
    std::size_t g = br1.gens.size();
    TermMatrix B;
    for (std::size_t i = 1; i < A.size(); ++i) {
      TermRow row;
      for (std::size_t k = 0; k < g; ++k) {
        GcdTerm::Ptr acc = GcdTerm::zero();
        for (std::size_t j = 0; j < n; ++j)
          acc = GcdTerm::add(acc, GcdTerm::mul(A[i][j], br1.gens[k][j]));
        row.push_back(simplify(acc));
      }
      B.push_back(std::move(row));
    }
    ConstFamily inner = build_const_matrix(B);
    for (const auto& br2 : inner.branches) {
      QfFormula::Ptr guard = QfFormula::conj({br1.guard, br2.guard});
      if (guard->kind == QfFormula::Kind::False)
        continue;
      ConstFamily::Branch nb;
      nb.guard = guard;
      for (const auto& u : br2.gens) {
        TermRow y(n, GcdTerm::zero());
        for (std::size_t k = 0; k < g; ++k)
          for (std::size_t j = 0; j < n; ++j)
            y[j] = GcdTerm::add(y[j], GcdTerm::mul(br1.gens[k][j], u[k]));
        for (auto& t : y)
          t = simplify(t);
        nb.gens.push_back(std::move(y));
      }
      out.branches.push_back(std::move(nb));
    }
  }
  return out;
}

ParamFamily wrap_const_family(ConstFamily fam, unsigned nparams,
                              std::size_t n) {
  ParamFamily out;
  out.nparams = nparams;
  out.n = (unsigned)n;
  out.nvars_x = 0;
  for (auto& br : fam.branches) {
    ParamFamily::Branch b;
    b.guard = std::move(br.guard);
    for (auto& row : br.gens) {
      std::vector<PolyTerm> vec;
      for (auto& t : row)
        vec.push_back(PolyTerm::from_term(std::move(t), 0));
      b.gens.push_back(std::move(vec));
    }
    out.branches.push_back(std::move(b));
  }
  return out;
}

TermMatrix terms_from_polys(const PolyMatrix& A) {
  TermMatrix T;
  for (const auto& row : A) {
    TermRow r;
    for (const auto& f : row)
      r.push_back(term_from_poly(f));
    T.push_back(std::move(r));
  }
  return T;
}

/// X-coefficient of f at exponent w, as a polynomial in the parameters.
MultiPoly x_coefficient(const MultiPoly& f, unsigned nparams, unsigned nx,
                        const Monomial& w) {
  MultiPoly out(f.domain(), nparams);
  for (const auto& [m, c] : f.terms()) {
    bool match = true;
    for (unsigned i = 0; i < nx; ++i)
      if (m[nparams + i] != w[i]) {
        match = false;
        break;
      }
    if (!match)
      continue;
    Monomial cm(m.begin(), m.begin() + nparams);
    out.set_coeff(cm, out.coeff(cm) + c);
  }
  return out;
}

/// Instantiates the parameters of f (first nparams variables) at c,
/// leaving a polynomial in the trailing nx variables over c's domain.
MultiPoly instantiate_params(const MultiPoly& f, unsigned nparams, unsigned nx,
                             const DomainVector& c) {
  const auto dom = c.empty() ? DomainDescriptor::integers()
                             : c.front().domain();
  MultiPoly out(dom, nx);
  for (const auto& [m, coef] : f.terms()) {
    DomainElem v(dom, coef.value());
    for (unsigned i = 0; i < nparams; ++i)
      for (unsigned e = 0; e < m[i]; ++e)
        v = v * c[i];
    Monomial xm(m.begin() + nparams, m.end());
    out.set_coeff(xm, out.coeff(xm) + v);
  }
  return out;
}

} // namespace

ParamFamily build_param_kernel_row(const TermRow& a, unsigned nparams) {
  return wrap_const_family(build_const_row(a), nparams, a.size());
}

ParamFamily build_param_kernel_row(const PolyVector& a) {
  if (a.empty())
    throw ShapeError("build_param_kernel_row: empty row");
  TermRow row;
  for (const auto& f : a)
    row.push_back(term_from_poly(f));
  return wrap_const_family(build_const_row(row), a.front().nvars(), a.size());
}

ParamFamily build_param_kernel_matrix(const TermMatrix& A, unsigned nparams) {
  return wrap_const_family(build_const_matrix(A), nparams, A.front().size());
}

ParamFamily build_param_kernel_matrix(const PolyMatrix& A) {
  if (A.empty() || A.front().empty())
    throw ShapeError("build_param_kernel_matrix: empty matrix");
  return wrap_const_family(build_const_matrix(terms_from_polys(A)),
                           A.front().front().nvars(), A.front().size());
}

ParamFamily build_param_syzygies(const PolyMatrix& A, unsigned nparams,
                                 unsigned nx, long cap) {
  if (A.empty() || A.front().empty())
    throw ShapeError("build_param_syzygies: empty matrix");
  if (cap < 0)
    throw Error("build_param_syzygies: negative cap");
  std::size_t m = A.size(), n = A.front().size();
  long d = 0;
  for (const auto& row : A)
    for (const auto& f : row) {
      auto dx = f.degree_in_tail(nx);
      d = std::max(d, dx ? *dx : 0);
    }
  auto col_monos = monomials_upto(nx, (unsigned)cap);
  auto row_monos = monomials_upto(nx, (unsigned)(cap + d));
  std::size_t C = col_monos.size(), R = row_monos.size();

  TermMatrix T(m * R, TermRow(n * C, GcdTerm::zero()));
  for (std::size_t bi = 0; bi < m; ++bi)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t ci = 0; ci < C; ++ci)
        for (std::size_t r = 0; r < R; ++r) {
          Monomial diff(nx);
          bool ok = true;
          for (unsigned i = 0; i < nx; ++i) {
            if (row_monos[r][i] < col_monos[ci][i]) {
              ok = false;
              break;
            }
            diff[i] = row_monos[r][i] - col_monos[ci][i];
          }
          if (!ok)
            continue;
          MultiPoly cf = x_coefficient(A[bi][j], nparams, nx, diff);
          if (!cf.is_zero())
            T[bi * R + r][j * C + ci] = term_from_poly(cf);
        }

  ConstFamily fam = build_const_matrix(T);
  ParamFamily out;
  out.nparams = nparams;
  out.n = (unsigned)n;
  out.nvars_x = nx;
  for (auto& br : fam.branches) {
    ParamFamily::Branch b;
    b.guard = std::move(br.guard);
    for (auto& flat : br.gens) {
      std::vector<PolyTerm> vec;
      for (std::size_t j = 0; j < n; ++j) {
        PolyTerm p;
        p.nvars_x = nx;
        for (std::size_t ci = 0; ci < C; ++ci)
          if (!flat[j * C + ci]->is_const(0))
            p.coeffs.emplace(col_monos[ci], flat[j * C + ci]);
        vec.push_back(std::move(p));
      }
      b.gens.push_back(std::move(vec));
    }
    out.branches.push_back(std::move(b));
  }
  return out;
}

FamilyReport verify_family(const ParamFamily& F, const PolyMatrix& A,
                           unsigned nparams, unsigned nx,
                           const DomainVector& c, const Policy& policy) {
  FamilyReport rep;
  const auto dom = c.empty() ? DomainDescriptor::integers()
                             : c.front().domain();
  const ParamFamily::Branch* branch = nullptr;
  for (const auto& br : F.branches)
    if (eval_formula(br.guard, dom, c)) {
      branch = &br;
      break;
    }
  if (!branch) {
    rep.detail = "no branch formula holds";
    return rep;
  }
  rep.coverage = true;

  PolyMatrix Ainst;
  for (const auto& row : A) {
    PolyVector r;
    for (const auto& f : row)
      r.push_back(instantiate_params(f, nparams, nx, c));
    Ainst.push_back(std::move(r));
  }
  std::vector<PolyVector> gens;
  for (const auto& gv : branch->gens) {
    PolyVector y;
    for (const auto& p : gv)
      y.push_back(p.eval(dom, c));
    gens.push_back(std::move(y));
  }
  for (const auto& y : gens)
    for (const auto& row : Ainst) {
      MultiPoly acc = MultiPoly::zero(dom, nx);
      for (std::size_t j = 0; j < row.size(); ++j)
        acc = acc + row[j] * y[j];
      if (!acc.is_zero()) {
        rep.detail = "instantiated generator is not a solution";
        return rep;
      }
    }
  rep.soundness = true;

  if (nx == 0) {
    DomainMatrix M(dom, Ainst.size(), F.n);
    for (std::size_t i = 0; i < Ainst.size(); ++i)
      for (unsigned j = 0; j < F.n; ++j)
        M.at(i, j) = Ainst[i][j].is_zero()
                         ? DomainElem::zero(dom)
                         : Ainst[i][j].terms().begin()->second;
    GeneratorSet oracle = kernel_hnf(M);
    std::vector<DomainVector> fam_vecs;
    for (const auto& y : gens) {
      DomainVector v;
      for (const auto& f : y)
        v.push_back(f.is_zero() ? DomainElem::zero(dom)
                                : f.terms().begin()->second);
      fam_vecs.push_back(std::move(v));
    }
    rep.completeness = same_span(fam_vecs, oracle.vectors(), dom, F.n);
  } else {
    SyzygyBasis oracle = syzygies_matrix(Ainst, policy);
    rep.completeness = same_poly_span(gens, oracle.vectors, policy);
  }
  if (!rep.completeness)
    rep.detail = "span differs from the independently computed kernel";
  return rep;
}

} // namespace bezlin
