#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <vector>

#include "sechh/sparse.hpp"
#include "sechh/subspace.hpp"
#include "sechh/triple.hpp"

namespace sechh {

/// Upper bound on the dimension of any chain space we agree to index.
inline constexpr std::size_t kMaxChainDim = std::size_t{1} << 26;

/// Basis tensor of C_n = A^{⊗n+1} ⊗ B^{⊗n(n+1)/2}: a-slots a_0..a_n and
/// b-slots b_{r,s} (0 <= r < s <= n) in lexicographic (r, s) order.
struct ChainIndex {
  int degree = 0;
  std::vector<std::size_t> a;
  std::vector<std::size_t> b;

  std::size_t b_at(int r, int s) const;
  std::size_t& b_at(int r, int s);

  friend bool operator==(const ChainIndex&, const ChainIndex&) = default;
};

/// Position of b_{r,s} among the n(n+1)/2 b-slots of degree n.
std::size_t pair_slot(int n, int r, int s);

/// dim C_n; throws ResourceCapError above kMaxChainDim.
std::size_t chain_dim(std::size_t dim_a, std::size_t dim_b, int n);

/// Mixed-radix linearization of the degree-n basis: a-slots most significant
/// (a_0 first), then b-slots in lexicographic order.
class ChainSpace {
 public:
  ChainSpace(std::size_t dim_a, std::size_t dim_b, int degree);

  int degree() const { return degree_; }
  std::size_t dim_a() const { return dim_a_; }
  std::size_t dim_b() const { return dim_b_; }
  std::size_t a_slots() const { return static_cast<std::size_t>(degree_) + 1; }
  std::size_t b_slots() const { return a_slots() * static_cast<std::size_t>(degree_) / 2; }
  std::size_t total_dim() const { return total_; }
  /// Place value of slot s (a-slots 0..n, then b-slots).
  std::size_t stride(std::size_t slot) const { return strides_[slot]; }

  std::size_t linearize(const ChainIndex& idx) const;
  ChainIndex delinearize(std::size_t index) const;

 private:
  int degree_;
  std::size_t dim_a_;
  std::size_t dim_b_;
  std::size_t total_;
  std::vector<std::size_t> strides_;
};

/// Unsigned face i of degree n as a matrix C_n -> C_{n-1}. Faces i < n merge
/// slots i and i+1; face n is the wrap-around face merging a_n into a_0.
SparseMat face_map(const Triple& t, int n, int i);

/// ∂_n = sum_i (-1)^i face_i, built one column at a time.
SparseMat boundary(const Triple& t, int n);

/// Signed cyclic rotation λ on C_n, sign (-1)^n.
SparseMat cyclic_operator(const Triple& t, int n);

/// C_n / Im(1 - λ_n).
struct CyclicQuotient {
  int degree = 0;
  QuotientMap map;
};

/// Builds the quotient and checks that ∂_n sends Im(1 - λ_n) into
/// Im(1 - λ_{n-1}); throws InternalError if it does not.
CyclicQuotient cyclic_quotient(const Triple& t, int n);

/// Im(1 - λ) for a given cyclic operator matrix.
Subspace cyclic_relations(const SparseMat& lambda);

/// Index of the first column of ∂·(1 - λ) that leaves `lower_relations`, if any.
std::optional<std::size_t> cyclic_compatibility_violation(const SparseMat& boundary,
                                                          const SparseMat& lambda,
                                                          const Subspace& lower_relations);

/// Sparse triplet text format:
///   rows cols nnz
///   row col numerator/denominator      (one line per entry, row-major order)
void write_triplets(std::ostream& out, const SparseMat& m);
/// Throws std::invalid_argument on malformed input.
SparseMat read_triplets(std::istream& in);

}  // namespace sechh
