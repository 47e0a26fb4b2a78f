#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bezlin/bounds.hpp"
#include "bezlin/linalg.hpp"
#include "bezlin/multipoly.hpp"

namespace bezlin {

using PolyVector = std::vector<MultiPoly>;
using PolyMatrix = std::vector<PolyVector>; // rows of polynomials

/// Indexing data tying the coefficient-level unrolling to polynomial vectors.
struct UnrollShape {
  DomainDescriptor dom;
  unsigned nvars = 0;
  unsigned n = 0;   // number of polynomial unknowns
  long cap = 0;     // degree cap beta on the unknowns
  long d = 0;       // max degree of the coefficients f_j
  long rhs_deg = 0; // extra rows to cover an inhomogeneous right-hand side
  std::vector<Monomial> row_monomials; // degree <= cap + d (and rhs_deg)
  std::vector<Monomial> col_monomials; // degree <= cap

  std::size_t rows() const { return row_monomials.size(); }
  std::size_t cols() const { return n * col_monomials.size(); }
};

/// Constant matrix whose kernel over R is the module of degree-<=cap
/// solutions of sum_j f_j y_j = 0. Column blocks ordered by unknown index,
/// then monomial; rows by monomial, both in grlex order.
std::pair<DomainMatrix, UnrollShape> unroll(const PolyVector& f, long cap);

/// Stacked unrolling of every row of A against one shared column indexing.
std::pair<DomainMatrix, UnrollShape> unroll_matrix(const PolyMatrix& A,
                                                   long cap,
                                                   long rhs_deg = -1);

/// Inverse of the unrolling's column indexing.
PolyVector reroll(const DomainVector& v, const UnrollShape& shape);
DomainVector unroll_coords(const PolyVector& y, const UnrollShape& shape);

/// Coefficient vector of b over the row monomials of `shape`.
DomainVector unroll_rhs(const PolyVector& b, const UnrollShape& shape);

struct SyzygyBasis {
  DomainDescriptor dom;
  unsigned nvars = 0;
  unsigned n = 0;
  long degree_cap = 0;
  bool complete = false; // field bound reached (or constant input)
  std::vector<PolyVector> vectors;
};

enum class FailureKind { RationalFailure, ModularFailure, HomogeneousExact };

struct MembershipVerdict {
  enum class Status { Member, NotMember, Unknown };
  Status status = Status::Unknown;
  std::vector<PolyVector> certificate; // Member: solution column(s)
  std::optional<FailureKind> failure;  // NotMember reason
  long failure_prime = 0;              // for ModularFailure
  long cap = 0;                        // degree cap used / reached
  Integer ledger_beta = 0, ledger_rows = 0, ledger_cols = 0, ledger_gamma = 0;

  bool is_member() const { return status == Status::Member; }
  const PolyVector& solution() const { return certificate.front(); }
};

/// Generators of the syzygies of (f_1,...,f_n). Complete over fields at the
/// Hermann cap; over Z / Z_(p) generators of the degree-<=cap solutions at
/// the policy's cap (complete for constant inputs).
SyzygyBasis syzygies(const PolyVector& f, const Policy& policy = {});

/// Generators of Sol(A) for a polynomial matrix, by joint unrolling.
SyzygyBasis syzygies_matrix(const PolyMatrix& A, const Policy& policy = {});

/// The paper-style row recursion (first-row kernel, then B = A' * Z),
/// kept as an independent cross-check path.
SyzygyBasis syzygies_matrix_recursive(const PolyMatrix& A,
                                      const Policy& policy = {});

/// Particular solution of A y = b over R[X]. Complete over fields; over Z
/// escalates the cap, falls back to a complete rational decision for
/// NotMember, else Unknown.
MembershipVerdict solve_poly(const PolyMatrix& A, const PolyVector& b,
                             const Policy& policy = {});

/// f0 in (gens) R[X]? Fields: complete. Z: homogeneous shortcut, escalating
/// Member search, rational and modular falsification, else Unknown.
MembershipVerdict member(const MultiPoly& f0, const PolyVector& gens,
                         const Policy& policy = {});

/// Complete decision for homogeneous inputs over every supported domain:
/// cofactor degrees are forced, reducing to one constant-level solve.
MembershipVerdict member_homogeneous(const MultiPoly& f0,
                                     const PolyVector& gens);

/// 1 in (gens)? Fields try the Kollar cap first, then the Hermann cap.
MembershipVerdict unit_member(const PolyVector& gens,
                              const Policy& policy = {});

/// f0 in sqrt((gens)) over a field, via the extra-variable trick.
bool radical_member_field(const MultiPoly& f0, const PolyVector& gens,
                          const Policy& policy = {});

/// r0 in sqrt((rs) Z): gcd fold, then the log2-exponent divisibility check.
bool rad_member_constants(const DomainElem& r0,
                          const std::vector<DomainElem>& rs);

/// Decides 1 in (1 - a X, b X) Z[X] via rad(a, b); Member verdicts carry the
/// explicit geometric-series certificate.
MembershipVerdict one_member_binomial(const DomainElem& a,
                                      const DomainElem& b);

/// Generators of the intersection of the column modules of A and B
/// (submodules of R[X]^m).
std::vector<PolyVector> intersect_modules(const PolyMatrix& A,
                                          const PolyMatrix& B,
                                          const Policy& policy = {});

/// Generators of the ideal (Mprime : M), M and Mprime given by columns.
PolyVector colon_modules(const PolyMatrix& Mprime, const PolyMatrix& M,
                         const Policy& policy = {});

/// v in the R[X]-span of the given generator columns?
MembershipVerdict module_member(const std::vector<PolyVector>& gens,
                                const PolyVector& v,
                                const Policy& policy = {});

/// Mutual module membership at the policy caps.
bool same_poly_span(const std::vector<PolyVector>& a,
                    const std::vector<PolyVector>& b,
                    const Policy& policy = {});

} // namespace bezlin
