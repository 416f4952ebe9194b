#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "sechh/rational.hpp"
#include "sechh/sparse.hpp"
#include "sechh/subspace.hpp"

namespace sechh {

/// c[i][j][k]: coefficient of e_k in e_i * e_j.
struct StructureConstant {
  std::size_t i;
  std::size_t j;
  std::size_t k;
  Rat value;
};

/// Finite-dimensional algebra over Q given by structure constants and an
/// explicit unit vector. Construction checks index ranges only; the algebra
/// axioms are checked by validate_algebra.
class FinAlgebra {
 public:
  FinAlgebra() = default;
  FinAlgebra(std::size_t dim, const std::vector<StructureConstant>& constants, Vec unit);

  std::size_t dim() const { return dim_; }
  const Vec& unit() const { return unit_; }
  SparseVec unit_sparse() const { return sparse_from_dense(unit_); }
  /// e_i * e_j.
  const SparseVec& product(std::size_t i, std::size_t j) const {
    return products_[i * dim_ + j];
  }
  Rat constant(std::size_t i, std::size_t j, std::size_t k) const;
  /// All nonzero constants, ordered by (i, j, k).
  std::vector<StructureConstant> structure_constants() const;

  SparseVec multiply(const SparseVec& x, const SparseVec& y) const;

  friend bool operator==(const FinAlgebra&, const FinAlgebra&) = default;

 private:
  std::size_t dim_ = 0;
  std::vector<SparseVec> products_;
  Vec unit_;
};

/// Bilinear product; throws DimensionError on length mismatch.
Vec multiply(const FinAlgebra& a, const Vec& x, const Vec& y);

struct AssociativityWitness {
  std::size_t i, j, k;
  Vec discrepancy;  // (e_i e_j) e_k - e_i (e_j e_k)
};

struct UnitWitness {
  std::size_t i;
  bool left;        // true: u * e_i fails, false: e_i * u fails
  Vec discrepancy;  // u e_i - e_i (or e_i u - e_i)
};

struct CommutativityWitness {
  std::size_t i, j;
  Vec discrepancy;  // e_i e_j - e_j e_i
};

struct AlgebraReport {
  bool associative = true;
  bool unital = true;
  bool commutative = true;
  std::optional<AssociativityWitness> associativity_witness;
  std::optional<UnitWitness> unit_witness;
  std::optional<CommutativityWitness> commutativity_witness;

  bool valid() const { return associative && unital; }
};

AlgebraReport validate_algebra(const FinAlgebra& a);

bool is_central(const FinAlgebra& a, const Vec& v);
bool is_central(const FinAlgebra& a, const SparseVec& v);

/// [A, A] = span of e_i e_j - e_j e_i.
Subspace commutator_subspace(const FinAlgebra& a);

/// A ⊗ B with basis e_i ⊗ f_j at index i * dim B + j.
FinAlgebra tensor_algebra(const FinAlgebra& a, const FinAlgebra& b);

/// Linear map between algebras, stored as a target.dim x source.dim matrix.
class AlgMorphism {
 public:
  AlgMorphism() = default;
  /// Throws DimensionError if the matrix shape does not match.
  AlgMorphism(FinAlgebra source, FinAlgebra target, SparseMat matrix);

  const FinAlgebra& source() const { return source_; }
  const FinAlgebra& target() const { return target_; }
  const SparseMat& matrix() const { return matrix_; }
  /// Image of basis element f_j.
  const SparseVec& image(std::size_t j) const { return matrix_.column(j); }
  SparseVec apply(const SparseVec& x) const { return matrix_.apply(x); }

 private:
  FinAlgebra source_;
  FinAlgebra target_;
  SparseMat matrix_;
};

// Standard algebras.

/// Q.
FinAlgebra ground_field();
/// Q[x]/(x^n) with basis 1, x, ..., x^{n-1}.
FinAlgebra truncated_polynomial(std::size_t n);
/// Q^n on its orthogonal idempotents e_1..e_n; unit (1, ..., 1).
FinAlgebra split_product(std::size_t n);
/// n x n matrices on the matrix units E_ij (row-major); unit = sum of E_ii.
FinAlgebra matrix_algebra(std::size_t n);

}  // namespace sechh
