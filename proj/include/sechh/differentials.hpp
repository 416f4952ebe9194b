#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "sechh/sparse.hpp"
#include "sechh/subspace.hpp"
#include "sechh/triple.hpp"

namespace sechh {

enum class RelationKind { kLeibniz, kTwist };

/// One spanning relation of Ω¹, already multiplied by the coefficient e_m.
/// Leibniz: basis = (m, alpha, a, beta, b); twist: basis = (m, alpha).
struct RelationGenerator {
  RelationKind kind;
  std::vector<std::size_t> basis;
  SparseVec vector;
};

/// Ω¹ as the free space on e_i·d(f_j ⊗ e_k) modulo the relation span.
struct OmegaPresentation {
  std::size_t dim_a = 0;
  std::size_t dim_b = 0;
  SparseVec unit_a;
  SparseVec unit_b;
  std::vector<RelationGenerator> generators;
  Subspace relations;
  QuotientMap quotient;

  std::size_t ambient_dim() const { return dim_a * dim_b * dim_a; }
  std::size_t dim() const { return quotient.dim(); }
  /// Ambient index of e_i·d(f_j ⊗ e_k).
  std::size_t symbol_index(std::size_t i, std::size_t j, std::size_t k) const {
    return (i * dim_b + j) * dim_a + k;
  }
};

/// Throws NonCommutativeError for non-commutative triples.
OmegaPresentation omega(const Triple& t);

/// Ambient vector of c·d(alpha ⊗ a), expanded trilinearly.
SparseVec omega_symbol(const OmegaPresentation& p, const SparseVec& c, const SparseVec& alpha,
                       const SparseVec& a);

/// Quotient coordinates of d(alpha ⊗ a). Throws DimensionError on length mismatch.
SparseVec d_symbol(const OmegaPresentation& p, const Vec& alpha, const Vec& a);
SparseVec d_symbol(const OmegaPresentation& p, const SparseVec& alpha, const SparseVec& a);

/// Span of d(1 ⊗ e_k) inside Ω¹ (quotient coordinates).
Subspace d_one_A_subspace(const OmegaPresentation& p);

/// The derived Leibniz-type identities of Ω¹, each instantiated on all basis
/// elements and tested as membership of (lhs - rhs) in the relation span.
struct IdentityFailure {
  std::string identity;
  std::vector<std::size_t> basis;
  SparseVec difference;  // ambient vector outside the relation span
};

struct IdentityReport {
  std::size_t instances = 0;
  std::vector<IdentityFailure> failures;
  bool passed() const { return failures.empty(); }
};

IdentityReport consequence_identities(const Triple& t, const OmegaPresentation& p);

/// Multiplying a generator by any e_m stays in the span.
bool relations_module_closed(const Triple& t, const OmegaPresentation& p);

}  // namespace sechh
