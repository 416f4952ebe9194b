#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "sechh/rational.hpp"

namespace sechh {

struct Entry {
  std::size_t index;
  Rat value;

  friend bool operator==(const Entry&, const Entry&) = default;
};

/// Sparse vector: entries strictly increasing in index, no stored zeros.
using SparseVec = std::vector<Entry>;

/// Sorts by index, merges duplicate indices and drops zeros.
void canonicalize(SparseVec& v);
bool is_canonical(const SparseVec& v);

SparseVec sparse_from_dense(const Vec& v);
Vec to_dense(const SparseVec& v, std::size_t dim);
SparseVec unit_sparse(std::size_t i);

/// y + a*x.
SparseVec axpy(const SparseVec& y, const Rat& a, const SparseVec& x);
SparseVec add(const SparseVec& x, const SparseVec& y);
SparseVec sub(const SparseVec& x, const SparseVec& y);
SparseVec scale(const SparseVec& x, const Rat& a);
/// Coefficient at index i (zero when absent).
Rat coefficient(const SparseVec& v, std::size_t i);
/// One past the largest stored index (0 for the zero vector).
std::size_t support_bound(const SparseVec& v);

struct Triplet {
  std::size_t row;
  std::size_t col;
  Rat value;
};

/// Column-compressed sparse matrix over the rationals.
///
/// Every column is a canonical SparseVec with indices below rows(); the
/// matrix never stores an explicit zero and never repeats a coordinate.
class SparseMat {
 public:
  SparseMat() = default;
  SparseMat(std::size_t rows, std::size_t cols);

  /// Throws std::invalid_argument on out-of-range or duplicate coordinates.
  /// Zero-valued triplets are dropped.
  static SparseMat from_triplets(std::size_t rows, std::size_t cols,
                                 std::span<const Triplet> entries);
  /// Columns must already be canonical and in range.
  static SparseMat from_columns(std::size_t rows, std::vector<SparseVec> columns);
  static SparseMat from_dense(const std::vector<Vec>& row_major, std::size_t cols);
  static SparseMat identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return columns_.size(); }
  std::size_t nnz() const;
  bool is_zero() const;

  const SparseVec& column(std::size_t j) const { return columns_.at(j); }
  const std::vector<SparseVec>& columns() const { return columns_; }
  std::vector<Triplet> triplets() const;
  Rat at(std::size_t i, std::size_t j) const;

  SparseVec apply(const SparseVec& x) const;
  SparseMat transpose() const;

  friend SparseMat operator*(const SparseMat& a, const SparseMat& b);
  friend SparseMat operator+(const SparseMat& a, const SparseMat& b);
  friend SparseMat operator-(const SparseMat& a, const SparseMat& b);
  friend SparseMat operator*(const Rat& s, const SparseMat& a);
  friend bool operator==(const SparseMat& a, const SparseMat& b);

 private:
  std::size_t rows_ = 0;
  std::vector<SparseVec> columns_;
};

}  // namespace sechh
