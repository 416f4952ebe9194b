#include <doctest.h>

#include <random>
#include <sstream>

#include "sechh/chain_complex.hpp"
#include "sechh/errors.hpp"
#include "sechh/oracles.hpp"
#include "support.hpp"

using namespace sechh;

namespace {

std::size_t lin(const Triple& t, int n, std::vector<std::size_t> a, std::vector<std::size_t> b) {
  return ChainSpace(t.a().dim(), t.b().dim(), n).linearize(ChainIndex{n, std::move(a), std::move(b)});
}

}  // namespace

TEST_CASE("chain dims and pair slots") {
  CHECK(chain_dim(2, 2, 0) == 2);
  CHECK(chain_dim(2, 2, 2) == 64);
  CHECK(chain_dim(3, 2, 3) == 81 * 64);
  CHECK_THROWS_AS(chain_dim(4, 2, 6), ResourceCapError);
  CHECK(pair_slot(3, 0, 1) == 0);
  CHECK(pair_slot(3, 0, 3) == 2);
  CHECK(pair_slot(3, 1, 2) == 3);
  CHECK(pair_slot(3, 2, 3) == 5);
}

TEST_CASE("linearize and delinearize are inverse") {
  for (int n = 0; n <= 3; ++n) {
    const ChainSpace s(2, 3, n);
    for (std::size_t i = 0; i < s.total_dim(); ++i) CHECK(s.linearize(s.delinearize(i)) == i);
  }
  const ChainSpace s(2, 3, 2);
  ChainIndex idx{2, {1, 0, 0}, {0, 0, 0}};
  idx.b_at(1, 2) = 2;
  // a_0 is the most significant slot, b_{1,2} the least
  CHECK(s.linearize(idx) == 1 * 4 * 27 + 2);
}

TEST_CASE("face examples") {
  const Triple dual = catalog("dual_k");
  SUBCASE("n=1 i=0 (x, x) goes to zero") {
    const SparseMat f = face_map(dual, 1, 0);
    CHECK(f.column(lin(dual, 1, {1, 1}, {0})).empty());
  }
  SUBCASE("n=1 i=0 (1, 1; y) goes to eps(y) = x") {
    const Triple t = catalog("dual_dual_x");
    const SparseMat f = face_map(t, 1, 0);
    CHECK(f.column(lin(t, 1, {0, 0}, {1})) == SparseVec{{1, 1}});
  }
  SUBCASE("n=2 wrap-around face of (1, x, x)") {
    const SparseMat f = face_map(dual, 2, 2);
    CHECK(f.rows() == chain_dim(2, 1, 1));
    CHECK(f.cols() == chain_dim(2, 1, 2));
    CHECK(f.column(lin(dual, 2, {0, 1, 1}, {0, 0, 0})) == SparseVec{{lin(dual, 1, {1, 1}, {0}), 1}});
  }
  CHECK_THROWS(face_map(dual, 0, 0));
  CHECK_THROWS(face_map(dual, 2, 3));
}

TEST_CASE("wrap-around face multiplies the b-slots that meet") {
  // B = Q[y]/(y^2), eps = 0 on y: face 2 of (1,1,1; b01=y, b02=1, b12=y)
  // merges b12 with b01 into the new b01, giving y*y = 0
  const Triple t = catalog("dual_dual_zero");
  const SparseMat f = face_map(t, 2, 2);
  CHECK(f.column(lin(t, 2, {0, 0, 0}, {1, 0, 1})).empty());
  CHECK(f.column(lin(t, 2, {0, 0, 0}, {1, 0, 0})) == SparseVec{{lin(t, 1, {0, 0}, {1}), 1}});
  // b02 = y goes into eps, which kills it
  CHECK(f.column(lin(t, 2, {0, 0, 0}, {0, 1, 0})).empty());
}

TEST_CASE("boundary examples") {
  CHECK(boundary(catalog("k_k"), 1).is_zero());
  for (const auto& name : {"dual_k", "dual_dual_x", "trunc3_dual_x2", "prod_over_prod_id"}) {
    CHECK(boundary(catalog(name), 1).is_zero());
  }
  const Triple m = catalog("mat2_k");
  // (E12, E21) -> E12 E21 - E21 E12 = E11 - E22
  CHECK(boundary(m, 1).column(lin(m, 1, {1, 2}, {0})) == SparseVec{{0, 1}, {3, -1}});
}

TEST_CASE("cyclic operator examples") {
  const Triple dual = catalog("dual_k");
  CHECK(cyclic_operator(dual, 0) == SparseMat::identity(2));
  // (1, x) -> -(x, 1)
  CHECK(cyclic_operator(dual, 1).column(lin(dual, 1, {0, 1}, {0})) ==
        SparseVec{{lin(dual, 1, {1, 0}, {0}), -1}});
  // b-slots: new b_{0,s} = old b_{s-1,n}, new b_{r,s} = old b_{r-1,s-1}
  const Triple t = catalog("dual_dual_zero");
  const ChainIndex src{2, {0, 0, 1}, {1, 0, 0}};  // b01 = y
  ChainIndex dst{2, {1, 0, 0}, {0, 0, 0}};
  dst.b_at(1, 2) = 1;
  const ChainSpace s(2, 2, 2);
  CHECK(cyclic_operator(t, 2).column(s.linearize(src)) == SparseVec{{s.linearize(dst), 1}});
}

TEST_CASE("cyclic quotient dims") {
  CHECK(cyclic_quotient(catalog("dual_k"), 0).map.dim() == 2);
  CHECK(cyclic_quotient(catalog("k_k"), 1).map.dim() == 0);
  CHECK(cyclic_quotient(catalog("dual_k"), 1).map.dim() == 1);
  CHECK(cyclic_quotient(catalog("k_k"), 2).map.dim() == 1);
  CHECK(cyclic_quotient(catalog("dual_k"), 2).map.dim() == 4);
  CHECK(cyclic_quotient(catalog("dual_dual_x"), 2).map.dim() == 24);
  CHECK(cyclic_quotient(catalog("mat2_k"), 1).map.dim() == 6);
}

TEST_CASE("property: boundary squares to zero and is compatible with lambda") {
  for (const auto& name : catalog_names()) {
    const Triple t = catalog(name);
    CAPTURE(name);
    for (int n = 1; n <= 3; ++n) {
      if (chain_dim(t.a().dim(), t.b().dim(), n + 1) > 5000) break;
      CHECK((boundary(t, n) * boundary(t, n + 1)).is_zero());
      const SparseMat lower = cyclic_operator(t, n - 1);
      CHECK_FALSE(cyclic_compatibility_violation(boundary(t, n), cyclic_operator(t, n),
                                                 cyclic_relations(lower)));
    }
  }
}

TEST_CASE("property: lambda has order n+1") {
  for (const auto& name : {"dual_dual_x", "trunc3_dual_x2", "mat2_k", "k_dual_zero"}) {
    const Triple t = catalog(name);
    for (int n = 0; n <= 3; ++n) {
      if (chain_dim(t.a().dim(), t.b().dim(), n) > 5000) break;
      const SparseMat l = cyclic_operator(t, n);
      SparseMat p = l;
      for (int k = 1; k <= n; ++k) p = p * l;
      CHECK(p == SparseMat::identity(l.rows()));
    }
  }
}

TEST_CASE("faces have the right shape and boundary is their signed sum") {
  const Triple t = catalog("trunc3_dual_x2");
  for (int n = 1; n <= 2; ++n) {
    SparseMat sum(chain_dim(3, 2, n - 1), chain_dim(3, 2, n));
    for (int i = 0; i <= n; ++i) {
      const SparseMat f = face_map(t, n, i);
      CHECK(f.rows() == sum.rows());
      CHECK(f.cols() == sum.cols());
      sum = sum + Rat(i % 2 == 0 ? 1 : -1) * f;
    }
    CHECK(sum == boundary(t, n));
  }
}

TEST_CASE("boundary matches the classical bar complex when B = Q") {
  for (const auto& name : {"k_k", "dual_k", "prod_k", "trunc3_k", "mat2_k"}) {
    const Triple t = catalog(name);
    const oracle::ClassicalComplex c(t.a());
    for (int n = 1; n <= 3; ++n) {
      if (chain_dim(t.a().dim(), 1, n) > 300) break;
      CAPTURE(name);
      CAPTURE(n);
      CHECK(oracle::to_dense(boundary(t, n)).data == c.boundary(n).data);
      CHECK(oracle::to_dense(cyclic_operator(t, n)).data == c.cyclic_operator(n).data);
    }
  }
}

TEST_CASE("compatibility check reports a broken lambda") {
  const Triple t = catalog("dual_k");
  // λ_2 = 2 makes 1 - λ_2 invertible, so ∂_2 itself would have to vanish
  const SparseMat bad = Rat(2) * SparseMat::identity(chain_dim(2, 1, 2));
  const auto v = cyclic_compatibility_violation(boundary(t, 2), bad, Subspace(chain_dim(2, 1, 1)));
  CHECK(v.has_value());
}

TEST_CASE("property: triplet format round-trips") {
  std::mt19937 rng(8);
  for (int trial = 0; trial < 20; ++trial) {
    const SparseMat m = testing::random_matrix(rng, 1 + trial % 7, trial % 5, 0.4);
    std::stringstream ss;
    write_triplets(ss, m);
    CHECK(read_triplets(ss) == m);
  }
  std::stringstream ss;
  write_triplets(ss, boundary(catalog("mat2_k"), 2));
  std::string header;
  std::getline(ss, header);
  CHECK(header == "16 64 " + std::to_string(boundary(catalog("mat2_k"), 2).nnz()));
  std::istringstream bad("2 2 1\n0 0 0.5\n");
  CHECK_THROWS_AS(read_triplets(bad), std::invalid_argument);
  std::istringstream short_body("2 2 2\n0 0 1\n");
  CHECK_THROWS_AS(read_triplets(short_body), std::invalid_argument);
}
