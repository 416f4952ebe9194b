#include <doctest.h>

#include <algorithm>
#include <random>

#include "sechh/errors.hpp"
#include "sechh/rational.hpp"
#include "sechh/sparse.hpp"
#include "sechh/subspace.hpp"
#include "support.hpp"

using namespace sechh;
using sechh::testing::random_matrix;
using sechh::testing::random_subspace;
using sechh::testing::random_vec;

namespace {
SparseMat dense(std::vector<Vec> rows, std::size_t cols) { return SparseMat::from_dense(rows, cols); }
}

TEST_CASE("rationals stay canonical") {
  CHECK(make_rat(2, 4) == make_rat(1, 2));
  CHECK(make_rat(3, -6).get_den() == 2);
  CHECK(make_rat(0, 7).get_den() == 1);
  CHECK_THROWS_AS(make_rat(1, 0), std::invalid_argument);
  CHECK(is_canonical(make_rat(-10, 4)));
  Rat x = make_rat(1, 3) + make_rat(1, 6);
  CHECK(is_canonical(x));
  CHECK(x == make_rat(1, 2));
}

TEST_CASE("parse_rat accepts integers and p/q only") {
  CHECK(*parse_rat("7") == 7);
  CHECK(*parse_rat("-3/6") == make_rat(-1, 2));
  CHECK(*parse_rat("+4/2") == 2);
  CHECK_FALSE(parse_rat("0.5"));
  CHECK_FALSE(parse_rat("1e3"));
  CHECK_FALSE(parse_rat("1/0"));
  CHECK_FALSE(parse_rat(" 1"));
  CHECK_FALSE(parse_rat(""));
  CHECK_FALSE(parse_rat("1/"));
  CHECK(to_string(make_rat(-5, 10)) == "-1/2");
  CHECK(to_string(make_rat(6, 3)) == "2");
}

TEST_CASE("sparse matrices reject bad triplets and drop zeros") {
  std::vector<Triplet> dup = {{0, 0, 1}, {0, 0, 2}};
  CHECK_THROWS(SparseMat::from_triplets(2, 2, dup));
  std::vector<Triplet> out_of_range = {{2, 0, 1}};
  CHECK_THROWS(SparseMat::from_triplets(2, 2, out_of_range));
  std::vector<Triplet> zero = {{0, 1, 0}, {1, 1, 3}};
  const SparseMat m = SparseMat::from_triplets(2, 2, zero);
  CHECK(m.nnz() == 1);
  CHECK(m.at(1, 1) == 3);
}

TEST_CASE("rank examples") {
  CHECK(rank(SparseMat(0, 0)) == 0);
  CHECK(rank(SparseMat::identity(2)) == 2);
  CHECK(rank(dense({{1, 2}, {2, 4}}, 2)) == 1);
}

TEST_CASE("nullspace examples") {
  const Subspace k = nullspace(dense({{1, -1}}, 2));
  CHECK(k.dim() == 1);
  CHECK(k.contains(Vec{1, 1}));
  CHECK(nullspace(SparseMat(3, 3)) == Subspace::full(3));
  CHECK(nullspace(SparseMat::identity(2)).dim() == 0);
}

TEST_CASE("colspace examples") {
  CHECK(colspace(SparseMat::identity(2)) == Subspace::full(2));
  CHECK(colspace(SparseMat(2, 3)).dim() == 0);
  const Subspace s = colspace(dense({{1}, {2}}, 1));
  CHECK(s.dim() == 1);
  CHECK(s.contains(Vec{2, 4}));
  CHECK_FALSE(s.contains(Vec{1, 0}));
}

TEST_CASE("subspace_sum and contains examples") {
  const Subspace e0 = Subspace::span(2, std::vector<SparseVec>{{{0, 1}}});
  const Subspace e1 = Subspace::span(2, std::vector<SparseVec>{{{1, 1}}});
  CHECK(subspace_sum(e0, e1) == Subspace::full(2));
  CHECK(subspace_sum(e0, e0) == e0);
  CHECK(subspace_sum(e0, Subspace(2)) == e0);
  CHECK_THROWS_AS(subspace_sum(e0, Subspace(3)), DimensionError);
  CHECK(e1.contains(Vec{0, 0}));
  CHECK_FALSE(e1.contains(Vec{1, 0}));
  CHECK(Subspace::span(2, std::vector<SparseVec>{{{0, 1}, {1, 1}}}).contains(Vec{2, 2}));
  CHECK_THROWS_AS(e1.contains(Vec{1, 2, 3}), DimensionError);
}

TEST_CASE("quotient_map examples") {
  const Subspace e0 = Subspace::span(3, std::vector<SparseVec>{{{0, 1}}});
  CHECK(quotient_map(3, e0).dim() == 2);
  CHECK(quotient_map(2, Subspace::full(2)).dim() == 0);
  const QuotientMap id = quotient_map(2, Subspace(2));
  CHECK(id.dim() == 2);
  CHECK(id.project({{1, 5}}) == SparseVec{{1, 5}});
  CHECK_THROWS_AS(quotient_map(4, e0), DimensionError);
}

TEST_CASE("echelon form is canonical regardless of generator order") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    const SparseMat m = random_matrix(rng, 6, 5, 0.5);
    std::vector<SparseVec> cols = m.columns();
    const Subspace a = Subspace::span(6, cols);
    std::reverse(cols.begin(), cols.end());
    const Subspace b = Subspace::span(6, cols);
    CHECK(a == b);
    for (std::size_t r = 0; r < a.dim(); ++r) CHECK(a.basis()[r].front().value == 1);
  }
}

TEST_CASE("property: rank + nullity = cols and kernel vectors are killed exactly") {
  std::mt19937 rng(1);
  for (int trial = 0; trial < 60; ++trial) {
    std::uniform_int_distribution<int> size(0, 9);
    const std::size_t r = size(rng), c = size(rng);
    const SparseMat m = random_matrix(rng, r, c, trial % 3 == 0 ? 0.15 : 0.5);
    const Subspace k = nullspace(m);
    CHECK(rank(m) + k.dim() == c);
    for (const auto& v : k.basis()) CHECK(m.apply(v).empty());
    CHECK(rank(m) == rank(m.transpose()));
  }
}

TEST_CASE("property: subspace_sum is a commutative idempotent monoid") {
  std::mt19937 rng(2);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t d = 1 + trial % 8;
    const Subspace u = random_subspace(rng, d, 3), v = random_subspace(rng, d, 2),
                   w = random_subspace(rng, d, 2);
    CHECK(subspace_sum(u, v) == subspace_sum(v, u));
    CHECK(subspace_sum(subspace_sum(u, v), w) == subspace_sum(u, subspace_sum(v, w)));
    CHECK(subspace_sum(u, u) == u);
    CHECK(subspace_sum(u, Subspace(d)) == u);
    CHECK(u.is_subspace_of(subspace_sum(u, v)));
  }
}

TEST_CASE("property: quotient projection kills relations and inverts the section") {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t d = 1 + trial % 8;
    const Subspace rel = random_subspace(rng, d, trial % 4);
    const QuotientMap q(d, rel);
    CHECK(q.dim() + rel.dim() == d);
    const SparseVec v = sparse_from_dense(random_vec(rng, d));
    for (const auto& r : rel.basis()) CHECK(q.project(add(v, scale(r, make_rat(3, 2)))) == q.project(v));
    for (std::size_t i = 0; i < q.dim(); ++i) CHECK(q.project(q.section({{i, 1}})) == SparseVec{{i, 1}});
    for (const auto& e : q.project(v)) CHECK(is_canonical(e.value));
  }
}

TEST_CASE("subquotient coordinates reconstruct classes") {
  std::mt19937 rng(4);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t d = 2 + trial % 6;
    const Subspace z = random_subspace(rng, d, 4);
    std::vector<SparseVec> half;
    for (std::size_t i = 0; i + 1 < z.dim(); i += 2) half.push_back(z.basis()[i]);
    const Subspace r = Subspace::span(d, half);
    const Subquotient h(z, r);
    CHECK(h.dim() == z.dim() - r.dim());
    SparseVec x;
    for (const auto& b : z.basis()) x = axpy(x, testing::small_rat(rng), b);
    const auto c = h.coordinates(x);
    REQUIRE(c);
    SparseVec rebuilt;
    for (const auto& e : *c) rebuilt = axpy(rebuilt, e.value, h.representatives()[e.index]);
    CHECK(r.contains(sub(x, rebuilt)));
  }
}
