#include "sechh/kernel_module.hpp"

#include <string>

#include "sechh/errors.hpp"

namespace sechh {

SparseVec kernel_tensor(const Triple& t, const SparseVec& x, const SparseVec& y,
                        const SparseVec& alpha) {
  const std::size_t da = t.a().dim(), db = t.b().dim();
  if (support_bound(x) > da || support_bound(y) > da || support_bound(alpha) > db) {
    throw DimensionError("tensor factor does not fit A ⊗ A ⊗ B");
  }
  SparseVec out;
  for (const auto& ex : x) {
    for (const auto& ey : y) {
      for (const auto& ez : alpha) {
        out.push_back({kernel_index(da, db, ex.index, ey.index, ez.index),
                       ex.value * ey.value * ez.value});
      }
    }
  }
  canonicalize(out);
  return out;
}

SparseVec jhat_generator(const Triple& t, const SparseVec& alpha) {
  const SparseVec ua = t.a().unit_sparse(), ub = t.b().unit_sparse();
  const SparseVec e = t.eps().apply(alpha);
  SparseVec g = scale(kernel_tensor(t, ua, ua, alpha), Rat(2));
  g = sub(g, kernel_tensor(t, e, ua, ub));
  return sub(g, kernel_tensor(t, ua, e, ub));
}

SparseVec j_generator(const Triple& t, const SparseVec& alpha, const SparseVec& a) {
  const SparseVec ua = t.a().unit_sparse(), ub = t.b().unit_sparse();
  const SparseVec ae = t.a().multiply(a, t.eps().apply(alpha));
  return sub(kernel_tensor(t, ua, a, alpha), kernel_tensor(t, ae, ua, ub));
}

SparseVec j_generator(const Triple& t, const Vec& alpha, const Vec& a) {
  if (alpha.size() != t.b().dim() || a.size() != t.a().dim()) {
    throw DimensionError("j_generator: argument lengths do not match (dim B, dim A)");
  }
  return j_generator(t, sparse_from_dense(alpha), sparse_from_dense(a));
}

KernelData kernel_data(const Triple& t) {
  require_commutative(t, "kernel_data");
  const FinAlgebra& A = t.a();
  const std::size_t da = A.dim(), db = t.b().dim();
  KernelData k;
  k.ambient = tensor_algebra(tensor_algebra(A, A), t.b());
  const std::size_t n = k.ambient.dim();

  std::vector<SparseVec> cols(n);
  for (std::size_t i = 0; i < da; ++i) {
    for (std::size_t j = 0; j < da; ++j) {
      for (std::size_t f = 0; f < db; ++f) {
        cols[kernel_index(da, db, i, j, f)] = A.multiply(A.product(i, j), t.eps().image(f));
      }
    }
  }
  k.m_matrix = SparseMat::from_columns(da, std::move(cols));
  k.j = nullspace(k.m_matrix);

  const auto& basis = k.j.basis();
  std::vector<SparseVec> products;
  for (std::size_t x = 0; x < basis.size(); ++x) {
    for (std::size_t y = x; y < basis.size(); ++y) products.push_back(k.ambient.multiply(basis[x], basis[y]));
  }
  k.j_squared = Subspace::span(n, products);

  std::vector<SparseVec> g, gm;
  const SparseVec ub = t.b().unit_sparse();
  for (std::size_t f = 0; f < db; ++f) {
    g.push_back(jhat_generator(t, unit_sparse(f)));
    for (std::size_t l = 0; l < da; ++l) {
      for (std::size_t r = 0; r < da; ++r) {
        const SparseVec coeff = kernel_tensor(t, unit_sparse(l), unit_sparse(r), ub);
        gm.push_back(k.ambient.multiply(coeff, g.back()));
      }
    }
  }
  k.jhat = Subspace::span(n, g);
  k.jhat_module = Subspace::span(n, gm);
  k.denominator = subspace_sum(k.j_squared, k.jhat_module);
  k.denominator_literal = subspace_sum(k.j_squared, k.jhat);
  k.quotient = Subquotient(k.j, k.denominator);
  k.quotient_literal = Subquotient(k.j, k.denominator_literal);
  return k;
}

bool symmetry_check(const Triple& t, const KernelData& k) {
  const SparseVec ua = t.a().unit_sparse(), ub = t.b().unit_sparse();
  for (std::size_t m = 0; m < t.a().dim(); ++m) {
    const SparseVec left = kernel_tensor(t, unit_sparse(m), ua, ub);
    const SparseVec right = kernel_tensor(t, ua, unit_sparse(m), ub);
    for (const auto& v : k.j.basis()) {
      const SparseVec diff = sub(k.ambient.multiply(left, v), k.ambient.multiply(right, v));
      if (!k.denominator.contains(diff)) return false;
    }
  }
  return true;
}

}  // namespace sechh
