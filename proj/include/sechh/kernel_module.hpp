#pragma once

#include <cstddef>

#include "sechh/algebra.hpp"
#include "sechh/sparse.hpp"
#include "sechh/subspace.hpp"
#include "sechh/triple.hpp"

namespace sechh {

/// Index of e_i ⊗ e_j ⊗ f_k in A ⊗ A ⊗ B (same coordinates as C_1).
inline std::size_t kernel_index(std::size_t dim_a, std::size_t dim_b, std::size_t i,
                                std::size_t j, std::size_t k) {
  return (i * dim_a + j) * dim_b + k;
}

/// J = Ker(m : A⊗A⊗B -> A) and the two candidate quotients.
///
/// `jhat` is the span of the twist elements g(f_alpha); `jhat_module` is the
/// A-bimodule they generate. `quotient` uses the bimodule, `quotient_literal`
/// the bare span.
struct KernelData {
  FinAlgebra ambient;
  SparseMat m_matrix;
  Subspace j;
  Subspace j_squared;
  Subspace jhat;
  Subspace jhat_module;
  Subspace denominator;          // J² + jhat_module
  Subspace denominator_literal;  // J² + jhat
  Subquotient quotient;
  Subquotient quotient_literal;

  bool readings_coincide() const { return denominator == denominator_literal; }
};

/// Throws NonCommutativeError for non-commutative triples.
KernelData kernel_data(const Triple& t);

/// 2(1⊗1⊗alpha) - eps(alpha)⊗1⊗1 - 1⊗eps(alpha)⊗1.
SparseVec jhat_generator(const Triple& t, const SparseVec& alpha);

/// 1⊗a⊗alpha - a eps(alpha)⊗1⊗1. Throws DimensionError on length mismatch.
SparseVec j_generator(const Triple& t, const Vec& alpha, const Vec& a);
SparseVec j_generator(const Triple& t, const SparseVec& alpha, const SparseVec& a);

/// (x ⊗ y ⊗ alpha) in ambient coordinates, expanded trilinearly.
SparseVec kernel_tensor(const Triple& t, const SparseVec& x, const SparseVec& y,
                        const SparseVec& alpha);

/// Left and right A-actions agree on J modulo J² + Ĵ (bimodule reading).
bool symmetry_check(const Triple& t, const KernelData& k);

}  // namespace sechh
