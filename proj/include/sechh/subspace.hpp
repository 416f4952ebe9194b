#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "sechh/sparse.hpp"

namespace sechh {

class Subspace;

/// Incremental reduced row-echelon form over the rationals.
///
/// The row set is kept fully reduced after every insertion: each row has a
/// leading 1 at its pivot and zeros at every other pivot. Reducing a vector
/// against the basis therefore touches only the pivots already present in
/// that vector, which keeps membership tests on sparse boundary columns cheap.
/// Pivots are always leftmost entries, so the final row set is the canonical
/// RREF of the span regardless of insertion order.
class EchelonBuilder {
 public:
  explicit EchelonBuilder(std::size_t ambient_dim);

  std::size_t ambient_dim() const { return ambient_; }
  std::size_t rank() const { return rows_.size(); }

  /// Adds v to the span. Returns true if v was independent of the rows so far.
  bool insert(const SparseVec& v);

  /// v minus its projection onto the span along the pivot coordinates.
  SparseVec reduce(const SparseVec& v) const;
  bool contains(const SparseVec& v) const { return reduce(v).empty(); }

  Subspace finish() &&;

 private:
  static constexpr std::uint32_t kNoRow = UINT32_MAX;

  void check(const SparseVec& v) const;

  std::size_t ambient_;
  std::vector<SparseVec> rows_;
  std::vector<std::size_t> pivot_of_row_;
  std::vector<std::uint32_t> row_of_pivot_;
  // Superset of the rows holding a nonzero in each column; stale entries are
  // filtered when the column becomes a pivot.
  std::vector<std::vector<std::uint32_t>> col_rows_;
};

/// A subspace of Q^d stored as its reduced row-echelon basis (rows sorted by
/// pivot). Two subspaces are equal iff their stored bases are identical.
class Subspace {
 public:
  explicit Subspace(std::size_t ambient_dim = 0);

  static Subspace span(std::size_t ambient_dim, std::span<const SparseVec> generators);
  static Subspace full(std::size_t ambient_dim);

  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return rows_.size(); }
  const std::vector<SparseVec>& basis() const { return rows_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }
  bool is_pivot(std::size_t coord) const;

  /// Throws DimensionError when v does not fit the ambient space.
  bool contains(const SparseVec& v) const;
  bool contains(const Vec& v) const;
  /// Residual of v after eliminating every pivot coordinate; zero iff v is in
  /// the subspace, and always supported on non-pivot coordinates.
  SparseVec reduce(const SparseVec& v) const;

  bool is_subspace_of(const Subspace& other) const;

  friend bool operator==(const Subspace& a, const Subspace& b) = default;

 private:
  friend class EchelonBuilder;
  void check(const SparseVec& v) const;

  std::size_t ambient_ = 0;
  std::vector<SparseVec> rows_;
  std::vector<std::size_t> pivots_;
  std::vector<std::uint32_t> row_of_pivot_;
};

Subspace subspace_sum(const Subspace& u, const Subspace& v);

std::size_t rank(const SparseMat& m);
/// Ker(m) as a subspace of Q^{cols}.
Subspace nullspace(const SparseMat& m);
/// Span of the columns of m as a subspace of Q^{rows}.
Subspace colspace(const SparseMat& m);

/// Explicit coordinates for ambient / R.
///
/// The complement basis is the set of standard basis vectors at the non-pivot
/// coordinates of R, in increasing order; the section sends quotient
/// coordinate q to that standard vector.
class QuotientMap {
 public:
  QuotientMap() = default;
  QuotientMap(std::size_t ambient_dim, Subspace relations);

  std::size_t ambient_dim() const { return relations_.ambient_dim(); }
  std::size_t dim() const { return complement_.size(); }
  const Subspace& relations() const { return relations_; }

  SparseVec project(const SparseVec& v) const;
  SparseVec section(const SparseVec& q) const;
  std::size_t complement_coordinate(std::size_t q) const { return complement_.at(q); }

  /// Matrix of (projection of M) for a map M landing in the ambient space.
  SparseMat project_columns(const SparseMat& m) const;

 private:
  Subspace relations_;
  std::vector<std::size_t> complement_;
  std::vector<std::uint32_t> quotient_index_;
};

QuotientMap quotient_map(std::size_t ambient_dim, const Subspace& relations);

/// Z / R for subspaces R ⊆ Z of a common ambient space, with representatives
/// drawn from the echelon basis of Z and a coordinate solver.
class Subquotient {
 public:
  Subquotient() = default;
  /// Throws InternalError if R is not contained in Z.
  Subquotient(Subspace z, Subspace r);

  std::size_t ambient_dim() const { return z_.ambient_dim(); }
  std::size_t dim() const { return reps_.size(); }
  const Subspace& numerator() const { return z_; }
  const Subspace& relations() const { return quotient_.relations(); }
  const QuotientMap& ambient_quotient() const { return quotient_; }
  /// Elements of Z whose classes form the chosen basis of Z / R.
  const std::vector<SparseVec>& representatives() const { return reps_; }

  /// Coordinates of the class of z in the representative basis, or nullopt
  /// when z is not in Z.
  std::optional<SparseVec> coordinates(const SparseVec& z) const;

 private:
  Subspace z_;
  QuotientMap quotient_;
  std::vector<SparseVec> reps_;
  Subspace solver_;  // RREF of [projected reps | identity]
};

/// Matrix (target coordinates) of the map induced on subquotients by a linear
/// map given on ambient vectors as a sparse matrix. Returns nullopt if the image
/// of some representative leaves the target numerator.
std::optional<SparseMat> induced_map(const SparseMat& map, const Subquotient& source,
                                     const Subquotient& target);

}  // namespace sechh
