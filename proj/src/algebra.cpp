#include "sechh/algebra.hpp"

#include <string>

#include "sechh/errors.hpp"

namespace sechh {

FinAlgebra::FinAlgebra(std::size_t dim, const std::vector<StructureConstant>& constants,
                       Vec unit)
    : dim_(dim), products_(dim * dim), unit_(std::move(unit)) {
  if (unit_.size() != dim_) {
    throw DimensionError("unit vector has length " + std::to_string(unit_.size()) +
                         ", algebra dimension is " + std::to_string(dim_));
  }
  for (const auto& c : constants) {
    if (c.i >= dim_ || c.j >= dim_ || c.k >= dim_) {
      throw DimensionError("structure constant index out of range");
    }
    products_[c.i * dim_ + c.j].push_back({c.k, c.value});
  }
  for (auto& p : products_) canonicalize(p);
}

Rat FinAlgebra::constant(std::size_t i, std::size_t j, std::size_t k) const {
  return coefficient(product(i, j), k);
}

std::vector<StructureConstant> FinAlgebra::structure_constants() const {
  std::vector<StructureConstant> out;
  for (std::size_t i = 0; i < dim_; ++i) {
    for (std::size_t j = 0; j < dim_; ++j) {
      for (const auto& e : product(i, j)) out.push_back({i, j, e.index, e.value});
    }
  }
  return out;
}

SparseVec FinAlgebra::multiply(const SparseVec& x, const SparseVec& y) const {
  if (support_bound(x) > dim_ || support_bound(y) > dim_) {
    throw DimensionError("algebra element does not fit dimension " + std::to_string(dim_));
  }
  SparseVec acc;
  for (const auto& ex : x) {
    for (const auto& ey : y) {
      const Rat c = ex.value * ey.value;
      for (const auto& p : product(ex.index, ey.index)) acc.push_back({p.index, c * p.value});
    }
  }
  canonicalize(acc);
  return acc;
}

Vec multiply(const FinAlgebra& a, const Vec& x, const Vec& y) {
  if (x.size() != a.dim() || y.size() != a.dim()) {
    throw DimensionError("multiply: operand length does not match algebra dimension");
  }
  return to_dense(a.multiply(sparse_from_dense(x), sparse_from_dense(y)), a.dim());
}

AlgebraReport validate_algebra(const FinAlgebra& a) {
  AlgebraReport report;
  const std::size_t d = a.dim();
  for (std::size_t i = 0; i < d && report.associative; ++i) {
    for (std::size_t j = 0; j < d && report.associative; ++j) {
      for (std::size_t k = 0; k < d; ++k) {
        SparseVec lhs = a.multiply(a.product(i, j), unit_sparse(k));
        SparseVec rhs = a.multiply(unit_sparse(i), a.product(j, k));
        SparseVec diff = sub(lhs, rhs);
        if (!diff.empty()) {
          report.associative = false;
          report.associativity_witness = AssociativityWitness{i, j, k, to_dense(diff, d)};
          break;
        }
      }
    }
  }
  const SparseVec u = a.unit_sparse();
  for (std::size_t i = 0; i < d && report.unital; ++i) {
    for (bool left : {true, false}) {
      SparseVec prod = left ? a.multiply(u, unit_sparse(i)) : a.multiply(unit_sparse(i), u);
      SparseVec diff = sub(prod, unit_sparse(i));
      if (!diff.empty()) {
        report.unital = false;
        report.unit_witness = UnitWitness{i, left, to_dense(diff, d)};
        break;
      }
    }
  }
  if (d == 0) report.unital = false;
  for (std::size_t i = 0; i < d && report.commutative; ++i) {
    for (std::size_t j = i + 1; j < d; ++j) {
      SparseVec diff = sub(a.product(i, j), a.product(j, i));
      if (!diff.empty()) {
        report.commutative = false;
        report.commutativity_witness = CommutativityWitness{i, j, to_dense(diff, d)};
        break;
      }
    }
  }
  return report;
}

bool is_central(const FinAlgebra& a, const SparseVec& v) {
  if (support_bound(v) > a.dim()) throw DimensionError("is_central: element too long");
  for (std::size_t i = 0; i < a.dim(); ++i) {
    if (a.multiply(v, unit_sparse(i)) != a.multiply(unit_sparse(i), v)) return false;
  }
  return true;
}

bool is_central(const FinAlgebra& a, const Vec& v) {
  if (v.size() != a.dim()) throw DimensionError("is_central: length mismatch");
  return is_central(a, sparse_from_dense(v));
}

Subspace commutator_subspace(const FinAlgebra& a) {
  std::vector<SparseVec> gens;
  for (std::size_t i = 0; i < a.dim(); ++i) {
    for (std::size_t j = i + 1; j < a.dim(); ++j) {
      gens.push_back(sub(a.product(i, j), a.product(j, i)));
    }
  }
  return Subspace::span(a.dim(), gens);
}

FinAlgebra tensor_algebra(const FinAlgebra& a, const FinAlgebra& b) {
  const std::size_t da = a.dim(), db = b.dim();
  std::vector<StructureConstant> constants;
  for (std::size_t i1 = 0; i1 < da; ++i1) {
    for (std::size_t j1 = 0; j1 < db; ++j1) {
      for (std::size_t i2 = 0; i2 < da; ++i2) {
        for (std::size_t j2 = 0; j2 < db; ++j2) {
          for (const auto& pa : a.product(i1, i2)) {
            for (const auto& pb : b.product(j1, j2)) {
              constants.push_back({i1 * db + j1, i2 * db + j2, pa.index * db + pb.index,
                                   pa.value * pb.value});
            }
          }
        }
      }
    }
  }
  Vec unit(da * db, Rat(0));
  for (std::size_t i = 0; i < da; ++i) {
    for (std::size_t j = 0; j < db; ++j) unit[i * db + j] = a.unit()[i] * b.unit()[j];
  }
  return FinAlgebra(da * db, constants, std::move(unit));
}

AlgMorphism::AlgMorphism(FinAlgebra source, FinAlgebra target, SparseMat matrix)
    : source_(std::move(source)), target_(std::move(target)), matrix_(std::move(matrix)) {
  if (matrix_.rows() != target_.dim() || matrix_.cols() != source_.dim()) {
    throw DimensionError("morphism matrix must be " + std::to_string(target_.dim()) + " x " +
                         std::to_string(source_.dim()));
  }
}

FinAlgebra ground_field() { return FinAlgebra(1, {{0, 0, 0, Rat(1)}}, Vec{Rat(1)}); }

FinAlgebra truncated_polynomial(std::size_t n) {
  std::vector<StructureConstant> constants;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; i + j < n; ++j) constants.push_back({i, j, i + j, Rat(1)});
  }
  return FinAlgebra(n, constants, unit_vec(n, 0));
}

FinAlgebra split_product(std::size_t n) {
  std::vector<StructureConstant> constants;
  for (std::size_t i = 0; i < n; ++i) constants.push_back({i, i, i, Rat(1)});
  return FinAlgebra(n, constants, Vec(n, Rat(1)));
}

FinAlgebra matrix_algebra(std::size_t n) {
  // E_ij E_kl = [j == k] E_il
  std::vector<StructureConstant> constants;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t l = 0; l < n; ++l) {
        constants.push_back({i * n + j, j * n + l, i * n + l, Rat(1)});
      }
    }
  }
  Vec unit(n * n, Rat(0));
  for (std::size_t i = 0; i < n; ++i) unit[i * n + i] = 1;
  return FinAlgebra(n * n, constants, std::move(unit));
}

}  // namespace sechh
