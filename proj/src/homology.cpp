#include "sechh/homology.hpp"

#include <string>

#include "sechh/errors.hpp"

namespace sechh {

namespace {

void check_degree(int n, const HomologyOptions& opts) {
  if (n < 0) throw std::invalid_argument("negative degree");
  if (n > opts.max_degree) {
    throw ResourceCapError("degree " + std::to_string(n) + " exceeds the configured cap " +
                           std::to_string(opts.max_degree));
  }
}

HomologyResult package(const Triple& t, Flavor flavor, int n, Subspace z, Subspace r) {
  HomologyResult out;
  out.triple_id = t.name();
  out.flavor = flavor;
  out.degree = n;
  out.group = Subquotient(std::move(z), std::move(r));
  out.dimension = out.group.dim();
  out.representatives = out.group.representatives();
  return out;
}

QuotientMap checked_quotient(const Triple& t, int n) { return cyclic_quotient(t, n).map; }

}  // namespace

const char* flavor_name(Flavor f) { return f == Flavor::kHH ? "HH" : "HC"; }

HomologyResult hh(const Triple& t, int n, const HomologyOptions& opts) {
  check_degree(n, opts);
  const std::size_t dim_n = chain_dim(t.a().dim(), t.b().dim(), n);
  Subspace z = n == 0 ? Subspace::full(dim_n) : nullspace(boundary(t, n));
  Subspace r = colspace(boundary(t, n + 1));
  return package(t, Flavor::kHH, n, std::move(z), std::move(r));
}

SparseMat cyclic_boundary(const Triple& t, int n, const QuotientMap& lower,
                          const QuotientMap& upper) {
  if (n == 0) return SparseMat(0, upper.dim());
  const SparseMat d = boundary(t, n);
  std::vector<SparseVec> cols;
  cols.reserve(upper.dim());
  for (std::size_t q = 0; q < upper.dim(); ++q) {
    cols.push_back(lower.project(d.column(upper.complement_coordinate(q))));
  }
  return SparseMat::from_columns(lower.dim(), std::move(cols));
}

HomologyResult hc(const Triple& t, int n, const HomologyOptions& opts) {
  check_degree(n, opts);
  QuotientMap here = checked_quotient(t, n);
  const QuotientMap above = checked_quotient(t, n + 1);
  Subspace z = Subspace::full(here.dim());
  if (n > 0) z = nullspace(cyclic_boundary(t, n, checked_quotient(t, n - 1), here));
  Subspace r = colspace(cyclic_boundary(t, n + 1, here, above));
  HomologyResult out = package(t, Flavor::kHC, n, std::move(z), std::move(r));
  out.chain_quotient = std::move(here);
  return out;
}

SparseMat connes_b_chain(const Triple& t) {
  const std::size_t da = t.a().dim(), db = t.b().dim();
  const ChainSpace c1(da, db, 1);
  const SparseVec u_a = t.a().unit_sparse();
  const SparseVec u_b = t.b().unit_sparse();
  std::vector<SparseVec> cols(da);
  for (std::size_t i = 0; i < da; ++i) {
    // 1⊗e_i⊗1 + e_i⊗1⊗1, each unit expanded in coordinates
    for (const auto& ub : u_b) {
      for (const auto& ua : u_a) {
        const Rat c = ua.value * ub.value;
        cols[i].push_back({c1.linearize({1, {ua.index, i}, {ub.index}}), c});
        cols[i].push_back({c1.linearize({1, {i, ua.index}, {ub.index}}), c});
      }
    }
    canonicalize(cols[i]);
  }
  return SparseMat::from_columns(c1.total_dim(), std::move(cols));
}

ConnesSegmentReport connes_segment_check(const Triple& t) {
  require_commutative(t, "connes_segment_check");
  ConnesSegmentReport rep;
  const HomologyResult h1 = hh(t, 1);
  const HomologyResult c1 = hc(t, 1);
  rep.dim_a = t.a().dim();
  rep.dim_hh1 = h1.dimension;
  rep.dim_hc1 = c1.dimension;

  const SparseMat bchain = connes_b_chain(t);
  std::vector<SparseVec> bcols;
  rep.cycles = true;
  for (const auto& col : bchain.columns()) {
    auto coords = h1.group.coordinates(col);
    if (!coords) {
      rep.cycles = false;
      return rep;
    }
    bcols.push_back(std::move(*coords));
  }
  rep.b_star = SparseMat::from_columns(h1.dimension, std::move(bcols));

  std::vector<SparseVec> icols;
  for (const auto& z : h1.representatives) {
    auto coords = c1.group.coordinates(c1.chain_quotient->project(z));
    if (!coords) throw InternalError("projection of an HH_1 cycle is not a cyclic cycle");
    icols.push_back(std::move(*coords));
  }
  rep.i_star = SparseMat::from_columns(c1.dimension, std::move(icols));

  const Subspace image_b = colspace(rep.b_star);
  const Subspace ker_i = nullspace(rep.i_star);
  rep.rank_b = image_b.dim();
  rep.rank_i = rank(rep.i_star);
  rep.dim_ker_i = ker_i.dim();
  rep.surjective = rep.rank_i == rep.dim_hc1;
  rep.exact = image_b == ker_i;
  return rep;
}

}  // namespace sechh
