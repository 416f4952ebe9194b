#include "sechh/subspace.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "sechh/errors.hpp"

namespace sechh {

namespace {

// y - a*x, appending to new_cols every index that is zero in y but nonzero
// in the result.
SparseVec axpy_tracking(const SparseVec& y, const Rat& a, const SparseVec& x,
                        std::vector<std::size_t>& new_cols) {
  SparseVec out;
  out.reserve(y.size() + x.size());
  std::size_t i = 0, j = 0;
  while (i < y.size() || j < x.size()) {
    if (j == x.size() || (i < y.size() && y[i].index < x[j].index)) {
      out.push_back(y[i++]);
    } else if (i == y.size() || x[j].index < y[i].index) {
      out.push_back({x[j].index, a * x[j].value});
      new_cols.push_back(x[j].index);
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

// v - sum over pivot coordinates p of v_p * row(p). Rows are fully reduced, so
// the coefficients can be read from v itself.
template <typename RowLookup>
SparseVec reduce_against(const SparseVec& v, const std::vector<std::uint32_t>& row_of_pivot,
                         const std::vector<SparseVec>& rows, RowLookup&& row_index_ok) {
  std::vector<const Entry*> hits;
  for (const auto& e : v) {
    if (row_index_ok(row_of_pivot[e.index])) hits.push_back(&e);
  }
  if (hits.empty()) return v;
  if (hits.size() <= 6) {
    SparseVec out = v;
    for (const Entry* e : hits) out = axpy(out, -e->value, rows[row_of_pivot[e->index]]);
    return out;
  }
  SparseVec acc = v;
  for (const Entry* e : hits) {
    for (const auto& r : rows[row_of_pivot[e->index]]) {
      acc.push_back({r.index, -e->value * r.value});
    }
  }
  canonicalize(acc);
  return acc;
}

}  // namespace

EchelonBuilder::EchelonBuilder(std::size_t ambient_dim)
    : ambient_(ambient_dim), row_of_pivot_(ambient_dim, kNoRow), col_rows_(ambient_dim) {}

void EchelonBuilder::check(const SparseVec& v) const {
  if (support_bound(v) > ambient_) {
    throw DimensionError("vector does not fit ambient dimension " + std::to_string(ambient_));
  }
}

SparseVec EchelonBuilder::reduce(const SparseVec& v) const {
  check(v);
  return reduce_against(v, row_of_pivot_, rows_, [](std::uint32_t r) { return r != kNoRow; });
}

bool EchelonBuilder::insert(const SparseVec& v) {
  SparseVec r = reduce(v);
  if (r.empty()) return false;

  const std::size_t lead = r.front().index;
  if (r.front().value != 1) {
    const Rat inv = 1 / r.front().value;
    for (auto& e : r) e.value *= inv;
  }

  auto& holders = col_rows_[lead];
  std::sort(holders.begin(), holders.end());
  holders.erase(std::unique(holders.begin(), holders.end()), holders.end());
  std::vector<std::size_t> new_cols;
  for (std::uint32_t row : holders) {
    const Rat c = coefficient(rows_[row], lead);
    if (sgn(c) == 0) continue;
    new_cols.clear();
    rows_[row] = axpy_tracking(rows_[row], -c, r, new_cols);
    for (std::size_t col : new_cols) {
      if (col != lead) col_rows_[col].push_back(row);
    }
  }
  std::vector<std::uint32_t>().swap(holders);

  const auto id = static_cast<std::uint32_t>(rows_.size());
  for (std::size_t k = 1; k < r.size(); ++k) col_rows_[r[k].index].push_back(id);
  row_of_pivot_[lead] = id;
  pivot_of_row_.push_back(lead);
  rows_.push_back(std::move(r));
  return true;
}

Subspace EchelonBuilder::finish() && {
  Subspace s(ambient_);
  std::vector<std::size_t> order(rows_.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return pivot_of_row_[a] < pivot_of_row_[b]; });
  s.rows_.reserve(order.size());
  s.pivots_.reserve(order.size());
  for (std::size_t k : order) {
    s.row_of_pivot_[pivot_of_row_[k]] = static_cast<std::uint32_t>(s.rows_.size());
    s.pivots_.push_back(pivot_of_row_[k]);
    s.rows_.push_back(std::move(rows_[k]));
  }
  return s;
}

Subspace::Subspace(std::size_t ambient_dim)
    : ambient_(ambient_dim), row_of_pivot_(ambient_dim, UINT32_MAX) {}

Subspace Subspace::span(std::size_t ambient_dim, std::span<const SparseVec> generators) {
  std::vector<std::size_t> order(generators.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  // Sparse generators first: they create short pivot rows early.
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return generators[a].size() < generators[b].size();
  });
  EchelonBuilder b(ambient_dim);
  for (std::size_t k : order) b.insert(generators[k]);
  return std::move(b).finish();
}

Subspace Subspace::full(std::size_t ambient_dim) {
  EchelonBuilder b(ambient_dim);
  for (std::size_t i = 0; i < ambient_dim; ++i) b.insert(unit_sparse(i));
  return std::move(b).finish();
}

bool Subspace::is_pivot(std::size_t coord) const {
  return coord < ambient_ && row_of_pivot_[coord] != UINT32_MAX;
}

void Subspace::check(const SparseVec& v) const {
  if (support_bound(v) > ambient_) {
    throw DimensionError("vector does not fit ambient dimension " + std::to_string(ambient_));
  }
}

SparseVec Subspace::reduce(const SparseVec& v) const {
  check(v);
  return reduce_against(v, row_of_pivot_, rows_,
                        [](std::uint32_t r) { return r != UINT32_MAX; });
}

bool Subspace::contains(const SparseVec& v) const { return reduce(v).empty(); }

bool Subspace::contains(const Vec& v) const {
  if (v.size() != ambient_) {
    throw DimensionError("vector length " + std::to_string(v.size()) +
                         " does not match ambient dimension " + std::to_string(ambient_));
  }
  return contains(sparse_from_dense(v));
}

bool Subspace::is_subspace_of(const Subspace& other) const {
  if (ambient_ != other.ambient_) throw DimensionError("subspaces in different ambient spaces");
  return std::all_of(rows_.begin(), rows_.end(),
                     [&](const SparseVec& r) { return other.contains(r); });
}

Subspace subspace_sum(const Subspace& u, const Subspace& v) {
  if (u.ambient_dim() != v.ambient_dim()) {
    throw DimensionError("subspace sum of different ambient dimensions " +
                         std::to_string(u.ambient_dim()) + " and " +
                         std::to_string(v.ambient_dim()));
  }
  std::vector<SparseVec> gens = u.basis();
  gens.insert(gens.end(), v.basis().begin(), v.basis().end());
  return Subspace::span(u.ambient_dim(), gens);
}

Subspace colspace(const SparseMat& m) { return Subspace::span(m.rows(), m.columns()); }

std::size_t rank(const SparseMat& m) { return colspace(m).dim(); }

Subspace nullspace(const SparseMat& m) {
  const SparseMat rows = m.transpose();
  const Subspace row_space = Subspace::span(m.cols(), rows.columns());
  // For a free column f: e_f - sum_r R[r][f] e_{pivot(r)}.
  std::vector<SparseVec> kernel(m.cols());
  std::vector<bool> is_free(m.cols(), true);
  for (std::size_t p : row_space.pivots()) is_free[p] = false;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_free[f]) kernel[f].push_back({f, Rat(1)});
  }
  for (std::size_t r = 0; r < row_space.dim(); ++r) {
    const std::size_t p = row_space.pivots()[r];
    for (const auto& e : row_space.basis()[r]) {
      if (e.index != p) kernel[e.index].push_back({p, -e.value});
    }
  }
  std::vector<SparseVec> gens;
  gens.reserve(m.cols() - row_space.dim());
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (!is_free[f]) continue;
    canonicalize(kernel[f]);
    gens.push_back(std::move(kernel[f]));
  }
  return Subspace::span(m.cols(), gens);
}

QuotientMap::QuotientMap(std::size_t ambient_dim, Subspace relations)
    : relations_(std::move(relations)), quotient_index_(ambient_dim, UINT32_MAX) {
  if (relations_.ambient_dim() != ambient_dim) {
    throw DimensionError("relation subspace lives in dimension " +
                         std::to_string(relations_.ambient_dim()) + ", expected " +
                         std::to_string(ambient_dim));
  }
  for (std::size_t i = 0; i < ambient_dim; ++i) {
    if (!relations_.is_pivot(i)) {
      quotient_index_[i] = static_cast<std::uint32_t>(complement_.size());
      complement_.push_back(i);
    }
  }
}

SparseVec QuotientMap::project(const SparseVec& v) const {
  SparseVec out = relations_.reduce(v);
  for (auto& e : out) e.index = quotient_index_[e.index];
  return out;
}

SparseVec QuotientMap::section(const SparseVec& q) const {
  SparseVec out;
  out.reserve(q.size());
  for (const auto& e : q) out.push_back({complement_.at(e.index), e.value});
  return out;
}

SparseMat QuotientMap::project_columns(const SparseMat& m) const {
  if (m.rows() != ambient_dim()) throw DimensionError("map does not land in quotient ambient");
  std::vector<SparseVec> cols;
  cols.reserve(m.cols());
  for (const auto& c : m.columns()) cols.push_back(project(c));
  return SparseMat::from_columns(dim(), std::move(cols));
}

QuotientMap quotient_map(std::size_t ambient_dim, const Subspace& relations) {
  return QuotientMap(ambient_dim, relations);
}

Subquotient::Subquotient(Subspace z, Subspace r) : z_(std::move(z)) {
  if (!r.is_subspace_of(z_)) throw InternalError("subquotient relations not inside numerator");
  quotient_ = QuotientMap(z_.ambient_dim(), std::move(r));
  const std::size_t q = quotient_.dim();
  EchelonBuilder independent(q);
  std::vector<SparseVec> projected;
  for (const auto& row : z_.basis()) {
    SparseVec p = quotient_.project(row);
    if (independent.insert(p)) {
      reps_.push_back(row);
      projected.push_back(std::move(p));
    }
  }
  if (reps_.size() + quotient_.relations().dim() != z_.dim()) {
    throw InternalError("subquotient dimension mismatch");
  }
  EchelonBuilder solver(q + reps_.size());
  for (std::size_t i = 0; i < projected.size(); ++i) {
    SparseVec aug = projected[i];
    aug.push_back({q + i, Rat(1)});
    solver.insert(aug);
  }
  solver_ = std::move(solver).finish();
}

std::optional<SparseVec> Subquotient::coordinates(const SparseVec& z) const {
  if (!z_.contains(z)) return std::nullopt;
  const std::size_t q = quotient_.dim();
  SparseVec residual = solver_.reduce(quotient_.project(z));
  SparseVec coords;
  coords.reserve(residual.size());
  for (auto& e : residual) {
    if (e.index < q) throw InternalError("subquotient coordinate solve left a residual");
    coords.push_back({e.index - q, -e.value});
  }
  return coords;
}

std::optional<SparseMat> induced_map(const SparseMat& map, const Subquotient& source,
                                     const Subquotient& target) {
  if (map.cols() != source.ambient_dim() || map.rows() != target.ambient_dim()) {
    throw DimensionError("induced map shape does not match subquotient ambients");
  }
  std::vector<SparseVec> cols;
  cols.reserve(source.dim());
  for (const auto& rep : source.representatives()) {
    auto c = target.coordinates(map.apply(rep));
    if (!c) return std::nullopt;
    cols.push_back(std::move(*c));
  }
  return SparseMat::from_columns(target.dim(), std::move(cols));
}

}  // namespace sechh
