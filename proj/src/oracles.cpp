#include "sechh/oracles.hpp"

#include <string>

#include "sechh/errors.hpp"

namespace sechh::oracle {

namespace {

void cap(std::size_t d) {
  if (d > kDenseCap) throw ResourceCapError("dense oracle limited to dimension " + std::to_string(kDenseCap));
}

std::size_t ipow(std::size_t b, int e) {
  std::size_t r = 1;
  for (int i = 0; i < e; ++i) {
    if (r > kDenseCap) break;
    r *= b;
  }
  return r;
}

// Reduces m in place; returns the pivot column of each nonzero row.
std::vector<std::size_t> gauss_jordan(Dense& m) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols && row < m.rows; ++col) {
    std::size_t p = row;
    while (p < m.rows && m(p, col) == 0) ++p;
    if (p == m.rows) continue;
    for (std::size_t j = 0; j < m.cols; ++j) std::swap(m(p, j), m(row, j));
    const Rat inv = 1 / m(row, col);
    for (std::size_t j = 0; j < m.cols; ++j) m(row, j) *= inv;
    for (std::size_t i = 0; i < m.rows; ++i) {
      if (i == row || m(i, col) == 0) continue;
      const Rat f = m(i, col);
      for (std::size_t j = 0; j < m.cols; ++j) m(i, j) -= f * m(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

std::vector<std::size_t> digits(std::size_t index, std::size_t base, int count) {
  std::vector<std::size_t> d(static_cast<std::size_t>(count));
  for (int p = count - 1; p >= 0; --p) {
    d[static_cast<std::size_t>(p)] = index % base;
    index /= base;
  }
  return d;
}

std::size_t undigits(const std::vector<std::size_t>& d, std::size_t base) {
  std::size_t r = 0;
  for (std::size_t x : d) r = r * base + x;
  return r;
}

// Dense product e_x e_y.
Vec mult(const FinAlgebra& a, std::size_t x, std::size_t y) {
  Vec out(a.dim());
  for (std::size_t k = 0; k < a.dim(); ++k) out[k] = a.constant(x, y, k);
  return out;
}

Dense identity_minus(const Dense& t) {
  Dense r(t.rows, t.cols);
  for (std::size_t i = 0; i < t.rows; ++i) {
    for (std::size_t j = 0; j < t.cols; ++j) r(i, j) = (i == j ? Rat(1) : Rat(0)) - t(i, j);
  }
  return r;
}

}  // namespace

std::size_t dense_rank(Dense m) { return gauss_jordan(m).size(); }

std::vector<Vec> dense_nullspace(Dense m) {
  const auto pivots = gauss_jordan(m);
  std::vector<bool> free(m.cols, true);
  for (std::size_t p : pivots) free[p] = false;
  std::vector<Vec> out;
  for (std::size_t f = 0; f < m.cols; ++f) {
    if (!free[f]) continue;
    Vec v(m.cols);
    v[f] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m(r, f);
    out.push_back(std::move(v));
  }
  return out;
}

Dense dense_product(const Dense& x, const Dense& y) {
  if (x.cols != y.rows) throw DimensionError("dense product shape mismatch");
  Dense r(x.rows, y.cols);
  for (std::size_t i = 0; i < x.rows; ++i) {
    for (std::size_t k = 0; k < x.cols; ++k) {
      if (x(i, k) == 0) continue;
      for (std::size_t j = 0; j < y.cols; ++j) r(i, j) += x(i, k) * y(k, j);
    }
  }
  return r;
}

Dense hcat(const Dense& x, const Dense& y) {
  if (x.rows != y.rows) throw DimensionError("hcat row mismatch");
  Dense r(x.rows, x.cols + y.cols);
  for (std::size_t i = 0; i < x.rows; ++i) {
    for (std::size_t j = 0; j < x.cols; ++j) r(i, j) = x(i, j);
    for (std::size_t j = 0; j < y.cols; ++j) r(i, x.cols + j) = y(i, j);
  }
  return r;
}

Dense to_dense(const SparseMat& m) {
  cap(m.rows());
  cap(m.cols());
  Dense r(m.rows(), m.cols());
  for (const auto& t : m.triplets()) r(t.row, t.col) = t.value;
  return r;
}

std::size_t ClassicalComplex::space_dim(int n) const {
  if (n < 0) return 0;
  const std::size_t d = ipow(a_.dim(), n + 1);
  cap(d);
  return d;
}

Dense ClassicalComplex::boundary(int n) const {
  const std::size_t d = a_.dim();
  if (n <= 0) return Dense(0, space_dim(n));
  Dense b(space_dim(n - 1), space_dim(n));
  for (std::size_t c = 0; c < b.cols; ++c) {
    const auto x = digits(c, d, n + 1);
    for (int i = 0; i <= n; ++i) {
      const Rat sign = i % 2 == 0 ? 1 : -1;
      // i < n: merge x_i x_{i+1}; i = n: x_n x_0 placed first
      std::vector<std::size_t> y;
      std::size_t l = 0, r = 0, at = 0;
      if (i < n) {
        l = x[static_cast<std::size_t>(i)];
        r = x[static_cast<std::size_t>(i) + 1];
        at = static_cast<std::size_t>(i);
        y.assign(x.begin(), x.end());
        y.erase(y.begin() + i + 1);
      } else {
        l = x[static_cast<std::size_t>(n)];
        r = x[0];
        at = 0;
        y.assign(x.begin(), x.end() - 1);
      }
      const Vec prod = mult(a_, l, r);
      for (std::size_t k = 0; k < d; ++k) {
        if (prod[k] == 0) continue;
        y[at] = k;
        b(undigits(y, d), c) += sign * prod[k];
      }
    }
  }
  return b;
}

Dense ClassicalComplex::cyclic_operator(int n) const {
  const std::size_t d = a_.dim();
  Dense t(space_dim(n), space_dim(n));
  const Rat sign = n % 2 == 0 ? 1 : -1;
  for (std::size_t c = 0; c < t.cols; ++c) {
    auto x = digits(c, d, n + 1);
    std::vector<std::size_t> y;
    y.push_back(x.back());
    y.insert(y.end(), x.begin(), x.end() - 1);
    t(undigits(y, d), c) = sign;
  }
  return t;
}

std::size_t classical_hh(const FinAlgebra& a, int n) {
  if (n < 0) throw std::invalid_argument("negative degree");
  ClassicalComplex cx(a);
  return cx.space_dim(n) - dense_rank(cx.boundary(n)) - dense_rank(cx.boundary(n + 1));
}

std::size_t classical_hc(const FinAlgebra& a, int n) {
  if (n < 0) throw std::invalid_argument("negative degree");
  ClassicalComplex cx(a);
  auto rel = [&](int k) { return identity_minus(cx.cyclic_operator(k)); };
  // rank of b_k on the quotient: dim(Im b_k + Im(1-t_{k-1})) - dim Im(1-t_{k-1})
  auto induced_rank = [&](int k) -> std::size_t {
    if (k <= 0) return 0;
    const Dense lower = rel(k - 1);
    return dense_rank(hcat(cx.boundary(k), lower)) - dense_rank(lower);
  };
  const std::size_t quotient_dim = cx.space_dim(n) - dense_rank(rel(n));
  return quotient_dim - induced_rank(n) - induced_rank(n + 1);
}

std::size_t classical_kahler_dim(const FinAlgebra& a) {
  const std::size_t d = a.dim();
  cap(d * d);
  // symbols e_i de_j at i*d + j; rows are relations e_m(d(e_x e_y) - e_x de_y - e_y de_x)
  Dense rel(d * d * d * d, d * d);
  std::size_t row = 0;
  for (std::size_t m = 0; m < d; ++m) {
    for (std::size_t x = 0; x < d; ++x) {
      for (std::size_t y = 0; y < d; ++y, ++row) {
        const Vec xy = mult(a, x, y);
        for (std::size_t k = 0; k < d; ++k) rel(row, m * d + k) += xy[k];
        const Vec mx = mult(a, m, x), my = mult(a, m, y);
        for (std::size_t k = 0; k < d; ++k) {
          rel(row, k * d + y) -= mx[k];
          rel(row, k * d + x) -= my[k];
        }
      }
    }
  }
  return d * d - dense_rank(rel);
}

std::size_t classical_I_mod_I2_dim(const FinAlgebra& a) {
  const std::size_t d = a.dim();
  cap(d * d);
  Dense m(d, d * d);
  for (std::size_t x = 0; x < d; ++x) {
    for (std::size_t y = 0; y < d; ++y) {
      const Vec p = mult(a, x, y);
      for (std::size_t k = 0; k < d; ++k) m(k, x * d + y) = p[k];
    }
  }
  const std::vector<Vec> ideal = dense_nullspace(m);
  // (x⊗y)(z⊗w) = xz ⊗ yw
  auto times = [&](const Vec& u, const Vec& v) {
    Vec out(d * d);
    for (std::size_t i = 0; i < d * d; ++i) {
      if (u[i] == 0) continue;
      for (std::size_t j = 0; j < d * d; ++j) {
        if (v[j] == 0) continue;
        const Vec l = mult(a, i / d, j / d), r = mult(a, i % d, j % d);
        for (std::size_t p = 0; p < d; ++p) {
          if (l[p] == 0) continue;
          for (std::size_t q = 0; q < d; ++q) out[p * d + q] += u[i] * v[j] * l[p] * r[q];
        }
      }
    }
    return out;
  };
  std::vector<Vec> squares;
  for (std::size_t i = 0; i < ideal.size(); ++i) {
    for (std::size_t j = i; j < ideal.size(); ++j) squares.push_back(times(ideal[i], ideal[j]));
  }
  Dense sq(squares.size(), d * d);
  for (std::size_t r = 0; r < squares.size(); ++r) {
    for (std::size_t c = 0; c < d * d; ++c) sq(r, c) = squares[r][c];
  }
  return ideal.size() - dense_rank(sq);
}

}  // namespace sechh::oracle
