#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bezlin/domain.hpp"

namespace bezlin {

using DomainVector = std::vector<DomainElem>;

/// Dense matrix over a coefficient domain, row-major.
class DomainMatrix {
public:
  DomainMatrix(DomainDescriptor dom, std::size_t rows, std::size_t cols)
      : dom_(dom), rows_(rows), cols_(cols),
        entries_(rows * cols, DomainElem::zero(dom)) {}

  static DomainMatrix identity(DomainDescriptor dom, std::size_t n);
  static DomainMatrix from_rows(DomainDescriptor dom,
                                const std::vector<DomainVector>& rows);

  const DomainDescriptor& domain() const { return dom_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  const DomainElem& at(std::size_t i, std::size_t j) const {
    return entries_[i * cols_ + j];
  }
  DomainElem& at(std::size_t i, std::size_t j) {
    return entries_[i * cols_ + j];
  }

  DomainVector row(std::size_t i) const;
  DomainVector col(std::size_t j) const;
  DomainVector apply(const DomainVector& v) const; // A * v
  DomainMatrix operator*(const DomainMatrix& o) const;
  bool operator==(const DomainMatrix& o) const = default;

private:
  DomainDescriptor dom_;
  std::size_t rows_, cols_;
  std::vector<DomainElem> entries_;
};

/// A set of vectors generating a solution module. Construction verifies that
/// every vector annihilates the defining matrix exactly.
class GeneratorSet {
public:
  GeneratorSet(const DomainMatrix& defining, std::vector<DomainVector> vecs,
               std::string meta);

  const std::vector<DomainVector>& vectors() const { return vecs_; }
  const std::string& meta() const { return meta_; }
  std::size_t size() const { return vecs_.size(); }
  std::size_t dim() const { return dim_; }

private:
  std::vector<DomainVector> vecs_;
  std::size_t dim_;
  std::string meta_;
};

/// Generators of the kernel of a single row a: the n(n-1)/2 special
/// solutions with (a_j:a_i) in slot i and -(a_i:a_j) in slot j. For a = 0 the
/// standard basis is returned.
GeneratorSet kernel_row(const DomainVector& a);

/// Generators of ker(a) from a unit combination u = sum lambda_i a_i.
/// Throws if u is not a unit.
GeneratorSet kernel_row_unit(const DomainVector& a, const DomainVector& lambda);

/// Row-by-row recursion: kernel of the first row, then recursion on
/// A' * (z_1,...,z_gamma).
GeneratorSet kernel_matrix_recursive(const DomainMatrix& A);

struct HnfResult {
  DomainMatrix H; // column-style Hermite normal form, H = A * U
  DomainMatrix U; // invertible over the domain
  // pivot positions (row, col) in column order
  std::vector<std::pair<std::size_t, std::size_t>> pivots;
};

/// Column-style Hermite normal form via unimodular column operations, with
/// domain-dispatched pivot normalization (non-negative over Z, 1 over fields,
/// p-power over Z_(p)).
HnfResult hnf(const DomainMatrix& A);

/// Basis of Sol(A) read off the zero columns of the HNF.
GeneratorSet kernel_hnf(const DomainMatrix& A);

/// A particular solution of A y = b, or nullopt if none exists.
std::optional<DomainVector> solve(const DomainMatrix& A,
                                  const DomainVector& b);

/// Heger criterion for full-row-rank A: A y = b is solvable iff the ideals
/// generated by the maximal minors of A and of (A|b) coincide.
bool heger_solvable(const DomainMatrix& A, const DomainVector& b);

/// Determinant by exact cofactor expansion (desk scale).
DomainElem determinant(const DomainMatrix& A);

/// True iff v lies in the module spanned by the given vectors.
bool in_span(const std::vector<DomainVector>& gens, const DomainVector& v,
             const DomainDescriptor& dom);

/// Mutual-membership span equality.
bool same_span(const std::vector<DomainVector>& a,
               const std::vector<DomainVector>& b, const DomainDescriptor& dom,
               std::size_t dim);

} // namespace bezlin
