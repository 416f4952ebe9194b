#pragma once

#include <cstddef>
#include <vector>

#include "sechh/algebra.hpp"
#include "sechh/rational.hpp"
#include "sechh/sparse.hpp"

namespace sechh::oracle {

/// Largest ambient dimension the dense oracles accept.
inline constexpr std::size_t kDenseCap = 5000;

/// Row-major dense matrix.
struct Dense {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<Rat> data;

  Dense() = default;
  Dense(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c) {}
  Rat& operator()(std::size_t i, std::size_t j) { return data[i * cols + j]; }
  const Rat& operator()(std::size_t i, std::size_t j) const { return data[i * cols + j]; }
};

/// Plain Gauss-Jordan, no pivoting heuristics.
std::size_t dense_rank(Dense m);
/// Basis of the right kernel, one vector per free column.
std::vector<Vec> dense_nullspace(Dense m);
Dense dense_product(const Dense& x, const Dense& y);
/// [x | y].
Dense hcat(const Dense& x, const Dense& y);
Dense to_dense(const SparseMat& m);

/// Classical Hochschild complex of A on A^{⊗n+1}, a_0 most significant.
class ClassicalComplex {
 public:
  explicit ClassicalComplex(FinAlgebra a) : a_(std::move(a)) {}

  std::size_t space_dim(int n) const;
  Dense boundary(int n) const;
  Dense cyclic_operator(int n) const;

 private:
  FinAlgebra a_;
};

std::size_t classical_hh(const FinAlgebra& a, int n);
std::size_t classical_hc(const FinAlgebra& a, int n);
/// Classical Ω¹ of a commutative algebra from the Leibniz presentation.
std::size_t classical_kahler_dim(const FinAlgebra& a);
/// I / I² for I = Ker(A⊗A -> A).
std::size_t classical_I_mod_I2_dim(const FinAlgebra& a);

}  // namespace sechh::oracle
