#include "sechh/sparse.hpp"

#include <algorithm>
#include <stdexcept>

namespace sechh {

void canonicalize(SparseVec& v) {
  std::sort(v.begin(), v.end(),
            [](const Entry& a, const Entry& b) { return a.index < b.index; });
  SparseVec out;
  out.reserve(v.size());
  for (auto& e : v) {
    if (!out.empty() && out.back().index == e.index) {
      out.back().value += e.value;
    } else {
      if (!out.empty() && sgn(out.back().value) == 0) out.pop_back();
      out.push_back(std::move(e));
    }
  }
  if (!out.empty() && sgn(out.back().value) == 0) out.pop_back();
  v = std::move(out);
}

bool is_canonical(const SparseVec& v) {
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (sgn(v[k].value) == 0) return false;
    if (k > 0 && v[k - 1].index >= v[k].index) return false;
  }
  return true;
}

SparseVec sparse_from_dense(const Vec& v) {
  SparseVec out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (sgn(v[i]) != 0) out.push_back({i, v[i]});
  }
  return out;
}

Vec to_dense(const SparseVec& v, std::size_t dim) {
  Vec out(dim, Rat(0));
  for (const auto& e : v) out.at(e.index) = e.value;
  return out;
}

SparseVec unit_sparse(std::size_t i) { return {{i, Rat(1)}}; }

SparseVec axpy(const SparseVec& y, const Rat& a, const SparseVec& x) {
  if (sgn(a) == 0 || x.empty()) return y;
  SparseVec out;
  out.reserve(y.size() + x.size());
  std::size_t i = 0, j = 0;
  while (i < y.size() || j < x.size()) {
    if (j == x.size() || (i < y.size() && y[i].index < x[j].index)) {
      out.push_back(y[i++]);
    } else if (i == y.size() || x[j].index < y[i].index) {
      out.push_back({x[j].index, a * x[j].value});
      ++j;
    } else {
      Rat s = y[i].value + a * x[j].value;
      if (sgn(s) != 0) out.push_back({y[i].index, std::move(s)});
      ++i;
      ++j;
    }
  }
  return out;
}

SparseVec add(const SparseVec& x, const SparseVec& y) { return axpy(x, Rat(1), y); }
SparseVec sub(const SparseVec& x, const SparseVec& y) { return axpy(x, Rat(-1), y); }

SparseVec scale(const SparseVec& x, const Rat& a) {
  if (sgn(a) == 0) return {};
  SparseVec out = x;
  for (auto& e : out) e.value *= a;
  return out;
}

Rat coefficient(const SparseVec& v, std::size_t i) {
  auto it = std::lower_bound(v.begin(), v.end(), i,
                             [](const Entry& e, std::size_t k) { return e.index < k; });
  if (it != v.end() && it->index == i) return it->value;
  return Rat(0);
}

std::size_t support_bound(const SparseVec& v) { return v.empty() ? 0 : v.back().index + 1; }

SparseMat::SparseMat(std::size_t rows, std::size_t cols) : rows_(rows), columns_(cols) {}

SparseMat SparseMat::from_triplets(std::size_t rows, std::size_t cols,
                                   std::span<const Triplet> entries) {
  std::vector<SparseVec> columns(cols);
  for (const auto& t : entries) {
    if (t.row >= rows || t.col >= cols) {
      throw std::invalid_argument("sparse matrix entry out of range");
    }
    columns[t.col].push_back({t.row, t.value});
  }
  for (auto& c : columns) {
    std::sort(c.begin(), c.end(),
              [](const Entry& a, const Entry& b) { return a.index < b.index; });
    for (std::size_t k = 1; k < c.size(); ++k) {
      if (c[k - 1].index == c[k].index) {
        throw std::invalid_argument("duplicate sparse matrix coordinate");
      }
    }
    std::erase_if(c, [](const Entry& e) { return sgn(e.value) == 0; });
  }
  SparseMat m;
  m.rows_ = rows;
  m.columns_ = std::move(columns);
  return m;
}

SparseMat SparseMat::from_columns(std::size_t rows, std::vector<SparseVec> columns) {
  for (const auto& c : columns) {
    if (!is_canonical(c) || support_bound(c) > rows) {
      throw std::invalid_argument("non-canonical or out-of-range sparse column");
    }
  }
  SparseMat m;
  m.rows_ = rows;
  m.columns_ = std::move(columns);
  return m;
}

SparseMat SparseMat::from_dense(const std::vector<Vec>& row_major, std::size_t cols) {
  SparseMat m(row_major.size(), cols);
  for (std::size_t i = 0; i < row_major.size(); ++i) {
    if (row_major[i].size() != cols) throw std::invalid_argument("ragged dense matrix");
    for (std::size_t j = 0; j < cols; ++j) {
      if (sgn(row_major[i][j]) != 0) m.columns_[j].push_back({i, row_major[i][j]});
    }
  }
  return m;
}

SparseMat SparseMat::identity(std::size_t n) {
  SparseMat m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.columns_[i] = unit_sparse(i);
  return m;
}

std::size_t SparseMat::nnz() const {
  std::size_t n = 0;
  for (const auto& c : columns_) n += c.size();
  return n;
}

bool SparseMat::is_zero() const {
  return std::all_of(columns_.begin(), columns_.end(),
                     [](const SparseVec& c) { return c.empty(); });
}

std::vector<Triplet> SparseMat::triplets() const {
  std::vector<Triplet> out;
  out.reserve(nnz());
  for (std::size_t j = 0; j < columns_.size(); ++j) {
    for (const auto& e : columns_[j]) out.push_back({e.index, j, e.value});
  }
  std::sort(out.begin(), out.end(), [](const Triplet& a, const Triplet& b) {
    return a.row != b.row ? a.row < b.row : a.col < b.col;
  });
  return out;
}

Rat SparseMat::at(std::size_t i, std::size_t j) const { return coefficient(columns_.at(j), i); }

SparseVec SparseMat::apply(const SparseVec& x) const {
  if (support_bound(x) > cols()) throw std::invalid_argument("vector longer than matrix width");
  SparseVec acc;
  for (const auto& e : x) {
    for (const auto& c : columns_[e.index]) acc.push_back({c.index, e.value * c.value});
  }
  canonicalize(acc);
  return acc;
}

SparseMat SparseMat::transpose() const {
  SparseMat t(cols(), rows_);
  for (std::size_t j = 0; j < columns_.size(); ++j) {
    for (const auto& e : columns_[j]) t.columns_[e.index].push_back({j, e.value});
  }
  return t;
}

SparseMat operator*(const SparseMat& a, const SparseMat& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("matrix product shape mismatch");
  SparseMat out(a.rows(), b.cols());
  for (std::size_t j = 0; j < b.cols(); ++j) out.columns_[j] = a.apply(b.columns_[j]);
  return out;
}

SparseMat operator+(const SparseMat& a, const SparseMat& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw std::invalid_argument("matrix sum shape mismatch");
  }
  SparseMat out(a.rows(), a.cols());
  for (std::size_t j = 0; j < a.cols(); ++j) out.columns_[j] = add(a.columns_[j], b.columns_[j]);
  return out;
}

SparseMat operator-(const SparseMat& a, const SparseMat& b) { return a + Rat(-1) * b; }

SparseMat operator*(const Rat& s, const SparseMat& a) {
  SparseMat out(a.rows(), a.cols());
  for (std::size_t j = 0; j < a.cols(); ++j) out.columns_[j] = scale(a.columns_[j], s);
  return out;
}

bool operator==(const SparseMat& a, const SparseMat& b) {
  return a.rows_ == b.rows_ && a.columns_ == b.columns_;
}

}  // namespace sechh
