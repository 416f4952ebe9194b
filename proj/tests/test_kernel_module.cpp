#include <doctest.h>

#include <map>
#include <string>

#include "sechh/differentials.hpp"
#include "sechh/errors.hpp"
#include "sechh/kernel_module.hpp"
#include "sechh/oracles.hpp"

using namespace sechh;

namespace {

struct KernelDims {
  std::size_t j, j_squared, jhat, jhat_module, quotient, quotient_literal;
};

// Frozen from nullspace / product-span / sum rank computations.
const std::map<std::string, KernelDims> kKernel = {
    {"k_k", {0, 0, 0, 0, 0, 0}},
    {"dual_k", {2, 1, 0, 0, 1, 1}},
    {"dual_dual_zero", {6, 3, 1, 4, 1, 2}},
    {"dual_dual_x", {6, 4, 1, 4, 1, 1}},
    {"prod_k", {2, 2, 0, 0, 0, 0}},
    {"trunc3_k", {6, 4, 0, 0, 2, 2}},
    {"dual_over_dual_id", {6, 4, 1, 4, 1, 1}},
    {"k_dual_zero", {1, 0, 1, 1, 0, 0}},
    {"trunc3_dual_x2", {15, 11, 1, 9, 2, 3}},
    {"prod_over_prod_id", {6, 6, 1, 4, 0, 0}},
};

}  // namespace

TEST_CASE("kernel dims") {
  for (const auto& [name, d] : kKernel) {
    CAPTURE(name);
    const Triple t = catalog(name);
    const KernelData k = kernel_data(t);
    const std::size_t da = t.a().dim(), db = t.b().dim();
    CHECK(k.j.dim() == d.j);
    CHECK(k.j.dim() == da * da * db - da);
    CHECK(rank(k.m_matrix) == da);
    CHECK(k.j_squared.dim() == d.j_squared);
    CHECK(k.jhat.dim() == d.jhat);
    CHECK(k.jhat_module.dim() == d.jhat_module);
    CHECK(k.quotient.dim() == d.quotient);
    CHECK(k.quotient_literal.dim() == d.quotient_literal);
    CHECK(k.readings_coincide() == (d.quotient == d.quotient_literal));
    CHECK(k.denominator_literal.is_subspace_of(k.denominator));
    CHECK(k.j_squared.is_subspace_of(k.j));
    CHECK(k.jhat.is_subspace_of(k.j));
    CHECK(k.jhat.is_subspace_of(k.jhat_module));
    CHECK(k.quotient.dim() == k.j.dim() - k.denominator.dim());
    CHECK(k.quotient.dim() == omega(t).dim());
    if (db == 1) CHECK(k.jhat.dim() == 0);
  }
  CHECK_THROWS_AS(kernel_data(catalog("mat2_k")), NonCommutativeError);
}

TEST_CASE("J/J^2 at B = Q matches classical I/I^2") {
  for (const auto& name : {"k_k", "dual_k", "prod_k", "trunc3_k"}) {
    const Triple t = catalog(name);
    CHECK(kernel_data(t).quotient.dim() == oracle::classical_I_mod_I2_dim(t.a()));
  }
}

TEST_CASE("the literal span of the twist elements is not a bimodule") {
  const Triple t = catalog("dual_dual_zero");
  const KernelData k = kernel_data(t);
  CHECK_FALSE(k.readings_coincide());
  // (x⊗1⊗1)·g(y) = 2 x⊗1⊗y, outside J^2 + span g
  const SparseVec g = jhat_generator(t, {{1, 1}});
  const SparseVec xg = k.ambient.multiply(kernel_tensor(t, {{1, 1}}, {{0, 1}}, {{0, 1}}), g);
  CHECK(xg == SparseVec{{kernel_index(2, 2, 1, 0, 1), 2}});
  CHECK_FALSE(k.denominator_literal.contains(xg));
  CHECK(k.denominator.contains(xg));
}

TEST_CASE("generators") {
  const Triple t = catalog("dual_k");
  CHECK(j_generator(t, Vec{1}, Vec{1, 0}).empty());
  // 1⊗x⊗1 - x⊗1⊗1
  CHECK(j_generator(t, Vec{1}, Vec{0, 1}) ==
        SparseVec{{kernel_index(2, 1, 0, 1, 0), 1}, {kernel_index(2, 1, 1, 0, 0), -1}});
  CHECK_THROWS_AS(j_generator(t, Vec{1, 0}, Vec{0, 1}), DimensionError);
  const Triple d = catalog("dual_dual_x");
  const KernelData k = kernel_data(d);
  for (std::size_t al = 0; al < 2; ++al) {
    for (std::size_t a = 0; a < 2; ++a) {
      const SparseVec g = j_generator(d, unit_sparse(al), unit_sparse(a));
      CHECK(k.m_matrix.apply(g).empty());
      CHECK(k.j.contains(g));
    }
    CHECK(k.m_matrix.apply(jhat_generator(d, unit_sparse(al))).empty());
  }
  // g(1) = 2 - 1 - 1 = 0
  CHECK(jhat_generator(d, {{0, 1}}).empty());
}

TEST_CASE("symmetry holds on commutative triples") {
  for (const auto& [name, d] : kKernel) {
    const Triple t = catalog(name);
    CHECK(symmetry_check(t, kernel_data(t)));
  }
}
