#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "sechh/chain_complex.hpp"
#include "sechh/sparse.hpp"
#include "sechh/subspace.hpp"
#include "sechh/triple.hpp"

namespace sechh {

enum class Flavor { kHH, kHC };

const char* flavor_name(Flavor f);

inline constexpr int kDefaultMaxDegree = 3;

struct HomologyOptions {
  int max_degree = kDefaultMaxDegree;
};

/// H_n as Z / R. For HH the ambient is C_n; for HC it is the cyclic quotient
/// C_n / Im(1 - λ), in the coordinates of `chain_quotient`.
struct HomologyResult {
  std::string triple_id;
  Flavor flavor = Flavor::kHH;
  int degree = 0;
  std::size_t dimension = 0;
  std::vector<SparseVec> representatives;
  Subquotient group;
  std::optional<QuotientMap> chain_quotient;
};

/// Throws ResourceCapError when n exceeds opts.max_degree.
HomologyResult hh(const Triple& t, int n, const HomologyOptions& opts = {});
HomologyResult hc(const Triple& t, int n, const HomologyOptions& opts = {});

/// P_{n-1} ∂_n S_n on cyclic quotient coordinates (zero map for n = 0).
SparseMat cyclic_boundary(const Triple& t, int n, const QuotientMap& lower,
                          const QuotientMap& upper);

/// A -> C_1, a |-> 1⊗a⊗1_B + a⊗1⊗1_B.
SparseMat connes_b_chain(const Triple& t);

struct ConnesSegmentReport {
  std::size_t dim_a = 0;
  std::size_t dim_hh1 = 0;
  std::size_t dim_hc1 = 0;
  std::size_t rank_b = 0;       // dim Im B_*
  std::size_t rank_i = 0;       // dim Im I_*
  std::size_t dim_ker_i = 0;
  bool cycles = false;          // every B(e_i) is a ∂_1-cycle
  bool surjective = false;      // rank I_* = dim HC_1
  bool exact = false;           // Ker I_* = Im B_*
  SparseMat b_star;             // A -> HH_1 coordinates
  SparseMat i_star;             // HH_1 -> HC_1 coordinates
  bool passed() const { return cycles && surjective && exact; }
};

/// Exactness of A -> HH_1 -> HC_1 -> 0. Requires a commutative triple.
ConnesSegmentReport connes_segment_check(const Triple& t);

}  // namespace sechh
