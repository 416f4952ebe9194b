#pragma once

#include <random>
#include <vector>

#include "sechh/rational.hpp"
#include "sechh/sparse.hpp"
#include "sechh/subspace.hpp"

namespace sechh::testing {

inline Rat small_rat(std::mt19937& rng) {
  std::uniform_int_distribution<int> num(-4, 4), den(1, 3);
  const long p = num(rng);
  return make_rat(p, den(rng));
}

inline Vec random_vec(std::mt19937& rng, std::size_t n) {
  Vec v(n);
  for (auto& x : v) x = small_rat(rng);
  return v;
}

/// Sparse-ish matrix with small rational entries; density in [0, 1].
inline SparseMat random_matrix(std::mt19937& rng, std::size_t rows, std::size_t cols, double density) {
  std::bernoulli_distribution keep(density);
  std::vector<Triplet> t;
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) {
      if (!keep(rng)) continue;
      const Rat v = small_rat(rng);
      t.push_back({i, j, v});
    }
  }
  return SparseMat::from_triplets(rows, cols, t);
}

inline Subspace random_subspace(std::mt19937& rng, std::size_t d, std::size_t gens) {
  return colspace(random_matrix(rng, d, gens, 0.4));
}

}  // namespace sechh::testing
