#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "bezlin/linalg.hpp"
#include "bezlin/multipoly.hpp"
#include "bezlin/polysyzygy.hpp"

namespace bezlin {

/// Term over {0, 1, +, -, *, (:)} with parameters. Immutable, hash-consed:
/// structurally equal terms are pointer-equal.
class GcdTerm {
public:
  enum class Op { Const, Param, Add, Sub, Mul, Colon };
  using Ptr = std::shared_ptr<const GcdTerm>;

  Op op;
  Integer value;  // Const payload
  unsigned index; // Param payload
  Ptr lhs, rhs;

  static Ptr constant(const Integer& k);
  static Ptr zero() { return constant(0); }
  static Ptr one() { return constant(1); }
  static Ptr param(unsigned i);
  static Ptr add(Ptr a, Ptr b);
  static Ptr sub(Ptr a, Ptr b);
  static Ptr mul(Ptr a, Ptr b);
  static Ptr colon(Ptr a, Ptr b);

  bool is_const(const Integer& k) const {
    return op == Op::Const && value == k;
  }

private:
  GcdTerm(Op o, Integer v, unsigned i, Ptr l, Ptr r)
      : op(o), value(std::move(v)), index(i), lhs(std::move(l)),
        rhs(std::move(r)) {}
  static Ptr intern(Op o, Integer v, unsigned i, Ptr l, Ptr r);
};

/// Evaluation of a term at a parameter tuple (colon via the domain's
/// canonical operation). Total for every tuple.
DomainElem eval_term(const GcdTerm::Ptr& t, DomainDescriptor dom,
                     const DomainVector& c);

/// Constant folding and 0/1 identities; semantics preserved.
GcdTerm::Ptr simplify(const GcdTerm::Ptr& t);

/// Term for a polynomial of Z[C], parameters as Param nodes.
GcdTerm::Ptr term_from_poly(const MultiPoly& f);

std::string term_to_string(const GcdTerm::Ptr& t,
                           const std::vector<std::string>& params);

/// Quantifier-free formula: boolean combination of {t = 0, rad(s, t)}.
class QfFormula {
public:
  enum class Kind { True, False, Eq0, Rad, And, Or, Not };
  using Ptr = std::shared_ptr<const QfFormula>;

  Kind kind;
  GcdTerm::Ptr a, b;          // Eq0 / Rad payload
  std::vector<Ptr> children;  // And / Or / Not payload

  static Ptr truth(bool v);
  static Ptr eq0(GcdTerm::Ptr t);
  static Ptr rad_atom(GcdTerm::Ptr s, GcdTerm::Ptr t);
  static Ptr conj(std::vector<Ptr> cs);
  static Ptr disj(std::vector<Ptr> cs);
  static Ptr neg(Ptr f);

private:
  QfFormula(Kind k, GcdTerm::Ptr a_, GcdTerm::Ptr b_, std::vector<Ptr> cs)
      : kind(k), a(std::move(a_)), b(std::move(b_)), children(std::move(cs)) {}
};

bool eval_formula(const QfFormula::Ptr& f, DomainDescriptor dom,
                  const DomainVector& c);

std::string formula_to_string(const QfFormula::Ptr& f,
                              const std::vector<std::string>& params);

/// Term vector polynomial in X: monomials in X with GcdTerm coefficients.
struct PolyTerm {
  unsigned nvars_x = 0;
  std::map<Monomial, GcdTerm::Ptr, GrlexLess> coeffs;

  static PolyTerm from_term(GcdTerm::Ptr t, unsigned nvars_x);
  MultiPoly eval(DomainDescriptor dom, const DomainVector& c) const;
};

/// Finite family of guarded generator sets: whenever a branch formula holds
/// at c, its instantiated vectors generate the solution module at c.
struct ParamFamily {
  unsigned nparams = 0;
  unsigned n = 0;       // length of the generator vectors
  unsigned nvars_x = 0; // 0 for the constant-matrix families
  struct Branch {
    QfFormula::Ptr guard;
    std::vector<std::vector<PolyTerm>> gens;
  };
  std::vector<Branch> branches;

  /// First branch whose guard holds at c.
  const Branch& select(DomainDescriptor dom, const DomainVector& c) const;
};

using TermRow = std::vector<GcdTerm::Ptr>;
using TermMatrix = std::vector<TermRow>;

/// Two-branch parametric kernel of a single row: the zero branch (all
/// entries vanish; standard basis) and the nonzero branch (the colon-term
/// special solutions).
ParamFamily build_param_kernel_row(const TermRow& a, unsigned nparams);
ParamFamily build_param_kernel_row(const PolyVector& a);

/// Row-by-row branch product for a matrix of terms; branch count <= 2^m.
ParamFamily build_param_kernel_matrix(const TermMatrix& A, unsigned nparams);
ParamFamily build_param_kernel_matrix(const PolyMatrix& A);

/// Parametric syzygy family for A over Z[C,X]: X-coefficients are unrolled
/// into a term matrix over the parameters, and the resulting constant family
/// is rerolled into vectors polynomial in X. Entries of A use nparams + nx
/// variables, parameters first.
ParamFamily build_param_syzygies(const PolyMatrix& A, unsigned nparams,
                                 unsigned nx, long cap);

struct FamilyReport {
  bool coverage = false;
  bool soundness = false;
  bool completeness = false;
  std::string detail;
  bool ok() const { return coverage && soundness && completeness; }
};

/// Checks a family at one parameter tuple against an independent kernel:
/// coverage (some guard holds), soundness (instantiated generators
/// annihilate the instance), completeness (span equality with the oracle).
FamilyReport verify_family(const ParamFamily& F, const PolyMatrix& A,
                           unsigned nparams, unsigned nx,
                           const DomainVector& c, const Policy& policy = {});

} // namespace bezlin
