#include <doctest.h>

#include <map>
#include <string>
#include <vector>

#include "sechh/algebra.hpp"
#include "sechh/chain_complex.hpp"
#include "sechh/errors.hpp"
#include "sechh/homology.hpp"
#include "sechh/oracles.hpp"

using namespace sechh;

namespace {

struct Dims {
  std::vector<std::size_t> hh;
  std::vector<std::size_t> hc;
};

// Frozen from dense Gauss-Jordan on the boundary and 1 - λ matrices (and the
// classical bar complex when B = Q); degrees 0..2.
const std::map<std::string, Dims>& expected() {
  static const std::map<std::string, Dims> m = {
      {"k_k", {{1, 0, 0}, {1, 0, 1}}},
      {"dual_k", {{2, 1, 1}, {2, 0, 2}}},
      {"dual_dual_zero", {{2, 1, 1}, {2, 0, 2}}},
      {"dual_dual_x", {{2, 1, 1}, {2, 0, 2}}},
      {"prod_k", {{2, 0, 0}, {2, 0, 2}}},
      {"trunc3_k", {{3, 2, 2}, {3, 0, 3}}},
      {"dual_over_dual_id", {{2, 1, 1}, {2, 0, 2}}},
      {"mat2_k", {{1, 0, 0}, {1, 0, 1}}},
      {"k_dual_zero", {{1, 0, 0}, {1, 0, 1}}},
      {"trunc3_dual_x2", {{3, 2, 2}, {3, 0, 3}}},
      {"prod_over_prod_id", {{2, 0, 0}, {2, 0, 2}}},
      {"mat2_dual_zero", {{1, 0, 0}, {1, 0, 1}}},
  };
  return m;
}

}  // namespace

TEST_CASE("frozen HH and HC dims in degrees 0..2") {
  for (const auto& name : catalog_names()) {
    CAPTURE(name);
    const Triple t = catalog(name);
    const Dims& d = expected().at(name);
    for (int n = 0; n <= 2; ++n) {
      CHECK(hh(t, n).dimension == d.hh[n]);
      CHECK(hc(t, n).dimension == d.hc[n]);
    }
  }
}

TEST_CASE("degree 3 on B = Q triples matches the classical oracle") {
  for (const auto& name : {"k_k", "dual_k", "prod_k", "trunc3_k", "mat2_k"}) {
    const Triple t = catalog(name);
    CAPTURE(name);
    CHECK(hh(t, 3).dimension == oracle::classical_hh(t.a(), 3));
    CHECK(hc(t, 3).dimension == oracle::classical_hc(t.a(), 3));
  }
}

TEST_CASE("HH dims agree with dense elimination on small chain spaces") {
  for (const auto& name : catalog_names()) {
    const Triple t = catalog(name);
    for (int n = 0; n <= 2; ++n) {
      if (chain_dim(t.a().dim(), t.b().dim(), n + 1) > 2000) break;
      const std::size_t cur = chain_dim(t.a().dim(), t.b().dim(), n);
      const std::size_t below = n == 0 ? 0 : oracle::dense_rank(oracle::to_dense(boundary(t, n)));
      const std::size_t above = oracle::dense_rank(oracle::to_dense(boundary(t, n + 1)));
      CAPTURE(name);
      CHECK(hh(t, n).dimension == cur - below - above);
    }
  }
}

TEST_CASE("HH_0 = A / [A, A] and HC_0 = HH_0") {
  for (const auto& name : catalog_names()) {
    const Triple t = catalog(name);
    const std::size_t h0 = hh(t, 0).dimension;
    CHECK(h0 == t.a().dim() - commutator_subspace(t.a()).dim());
    CHECK(hc(t, 0).dimension == h0);
    if (t.commutative()) CHECK(h0 == t.a().dim());
  }
  CHECK(hh(catalog("mat2_k"), 0).dimension == 1);
}

TEST_CASE("representatives are cycles that span the homology") {
  for (const auto& name : {"dual_dual_x", "trunc3_k", "mat2_k", "k_dual_zero"}) {
    const Triple t = catalog(name);
    for (int n = 0; n <= 2; ++n) {
      const HomologyResult h = hh(t, n);
      CHECK(h.representatives.size() == h.dimension);
      CHECK(h.flavor == Flavor::kHH);
      CHECK(h.triple_id == name);
      if (n > 0) {
        const SparseMat b = boundary(t, n);
        for (const auto& r : h.representatives) CHECK(b.apply(r).empty());
      }
      for (std::size_t i = 0; i < h.dimension; ++i) {
        CHECK(*h.group.coordinates(h.representatives[i]) == SparseVec{{i, 1}});
      }
      const HomologyResult c = hc(t, n);
      REQUIRE(c.chain_quotient);
      if (n > 0) {
        const QuotientMap lower = cyclic_quotient(t, n - 1).map;
        const SparseMat cb = cyclic_boundary(t, n, lower, *c.chain_quotient);
        for (const auto& r : c.representatives) CHECK(cb.apply(r).empty());
      }
    }
  }
}

TEST_CASE("degree cap") {
  const Triple t = catalog("dual_k");
  CHECK_THROWS_AS(hh(t, 4), ResourceCapError);
  CHECK_THROWS_AS(hc(t, 4), ResourceCapError);
  CHECK(hh(t, 4, HomologyOptions{4}).dimension == 1);
}

TEST_CASE("connes B chain") {
  const Triple t = catalog("dual_dual_x");
  const SparseMat b = connes_b_chain(t);
  CHECK(b.rows() == chain_dim(2, 2, 1));
  CHECK(b.cols() == 2);
  // 1_A -> 2 (1⊗1⊗1)
  CHECK(b.column(0) == SparseVec{{0, 2}});
  // x -> 1⊗x⊗1 + x⊗1⊗1
  CHECK(b.column(1) == SparseVec{{2, 1}, {4, 1}});
  CHECK((boundary(t, 1) * b).is_zero());
}

TEST_CASE("connes segment is exact on commutative catalog triples") {
  for (const auto& name : catalog_names()) {
    const Triple t = catalog(name);
    if (!t.commutative()) {
      CHECK_THROWS_AS(connes_segment_check(t), NonCommutativeError);
      continue;
    }
    CAPTURE(name);
    const ConnesSegmentReport r = connes_segment_check(t);
    CHECK(r.passed());
    CHECK(r.dim_hh1 == hh(t, 1).dimension);
    CHECK(r.dim_hc1 == hc(t, 1).dimension);
    CHECK(r.rank_b == r.dim_ker_i);
    CHECK(r.rank_i == r.dim_hc1);
  }
  const ConnesSegmentReport k = connes_segment_check(catalog("k_k"));
  CHECK(k.dim_a == 1);
  CHECK(k.dim_hh1 == 0);
}
