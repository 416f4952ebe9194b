#include "sechh/differentials.hpp"

#include <string>

#include "sechh/errors.hpp"

namespace sechh {

namespace {

void check_len(const SparseVec& v, std::size_t dim, const char* what) {
  if (support_bound(v) > dim) {
    throw DimensionError(std::string(what) + " does not fit dimension " + std::to_string(dim));
  }
}

// e_m · (ambient vector): the action only touches the coefficient slot.
SparseVec act(const Triple& t, const OmegaPresentation& p, std::size_t m, const SparseVec& v) {
  SparseVec out;
  const std::size_t inner = p.dim_b * p.dim_a;
  for (const auto& e : v) {
    const std::size_t i = e.index / inner, rest = e.index % inner;
    for (const auto& c : t.a().product(m, i)) out.push_back({c.index * inner + rest, e.value * c.value});
  }
  canonicalize(out);
  return out;
}

}  // namespace

SparseVec omega_symbol(const OmegaPresentation& p, const SparseVec& c, const SparseVec& alpha,
                       const SparseVec& a) {
  check_len(c, p.dim_a, "coefficient");
  check_len(alpha, p.dim_b, "B argument");
  check_len(a, p.dim_a, "A argument");
  SparseVec out;
  for (const auto& x : c) {
    for (const auto& y : alpha) {
      for (const auto& z : a) {
        out.push_back({p.symbol_index(x.index, y.index, z.index), x.value * y.value * z.value});
      }
    }
  }
  canonicalize(out);
  return out;
}

OmegaPresentation omega(const Triple& t) {
  require_commutative(t, "omega");
  const FinAlgebra& A = t.a();
  const FinAlgebra& B = t.b();
  OmegaPresentation p;
  p.dim_a = A.dim();
  p.dim_b = B.dim();
  p.unit_a = A.unit_sparse();
  p.unit_b = B.unit_sparse();
  const std::size_t da = p.dim_a, db = p.dim_b;

  std::vector<SparseVec> ae(da * db);  // e_a eps(f_alpha)
  for (std::size_t a = 0; a < da; ++a) {
    for (std::size_t al = 0; al < db; ++al) ae[a * db + al] = A.multiply(unit_sparse(a), t.eps().image(al));
  }
  for (std::size_t al = 0; al < db; ++al) {
    for (std::size_t a = 0; a < da; ++a) {
      for (std::size_t be = 0; be < db; ++be) {
        for (std::size_t b = 0; b < da; ++b) {
          // d(f_al f_be ⊗ e_a e_b) - e_a eps(f_al) d(f_be ⊗ e_b) - e_b eps(f_be) d(f_al ⊗ e_a)
          SparseVec base = omega_symbol(p, p.unit_a, B.product(al, be), A.product(a, b));
          base = sub(base, omega_symbol(p, ae[a * db + al], unit_sparse(be), unit_sparse(b)));
          base = sub(base, omega_symbol(p, ae[b * db + be], unit_sparse(al), unit_sparse(a)));
          for (std::size_t m = 0; m < da; ++m) {
            p.generators.push_back({RelationKind::kLeibniz, {m, al, a, be, b}, act(t, p, m, base)});
          }
        }
      }
    }
  }
  for (std::size_t al = 0; al < db; ++al) {
    SparseVec base = scale(omega_symbol(p, p.unit_a, unit_sparse(al), p.unit_a), Rat(2));
    base = sub(base, omega_symbol(p, p.unit_a, p.unit_b, t.eps().image(al)));
    for (std::size_t m = 0; m < da; ++m) {
      p.generators.push_back({RelationKind::kTwist, {m, al}, act(t, p, m, base)});
    }
  }
  std::vector<SparseVec> vecs;
  vecs.reserve(p.generators.size());
  for (const auto& g : p.generators) vecs.push_back(g.vector);
  p.relations = Subspace::span(p.ambient_dim(), vecs);
  p.quotient = QuotientMap(p.ambient_dim(), p.relations);
  return p;
}

SparseVec d_symbol(const OmegaPresentation& p, const SparseVec& alpha, const SparseVec& a) {
  return p.quotient.project(omega_symbol(p, p.unit_a, alpha, a));
}

SparseVec d_symbol(const OmegaPresentation& p, const Vec& alpha, const Vec& a) {
  if (alpha.size() != p.dim_b || a.size() != p.dim_a) {
    throw DimensionError("d_symbol: argument lengths (" + std::to_string(alpha.size()) + ", " +
                         std::to_string(a.size()) + ") do not match (" +
                         std::to_string(p.dim_b) + ", " + std::to_string(p.dim_a) + ")");
  }
  return d_symbol(p, sparse_from_dense(alpha), sparse_from_dense(a));
}

Subspace d_one_A_subspace(const OmegaPresentation& p) {
  std::vector<SparseVec> gens;
  for (std::size_t k = 0; k < p.dim_a; ++k) gens.push_back(d_symbol(p, p.unit_b, unit_sparse(k)));
  return Subspace::span(p.dim(), gens);
}

IdentityReport consequence_identities(const Triple& t, const OmegaPresentation& p) {
  const FinAlgebra& A = t.a();
  const FinAlgebra& B = t.b();
  const std::size_t da = p.dim_a, db = p.dim_b;
  IdentityReport rep;
  auto e = [](std::size_t i) { return unit_sparse(i); };
  auto d = [&](const SparseVec& c, const SparseVec& alpha, const SparseVec& a) {
    return omega_symbol(p, c, alpha, a);
  };
  auto test = [&](const char* name, std::vector<std::size_t> basis, const SparseVec& diff) {
    ++rep.instances;
    if (!p.relations.contains(diff)) rep.failures.push_back({name, std::move(basis), diff});
  };
  const SparseVec& ua = p.unit_a;
  const SparseVec& ub = p.unit_b;
  for (std::size_t al = 0; al < db; ++al) {
    for (std::size_t be = 0; be < db; ++be) {
      const SparseVec ea = t.eps().image(al), eb = t.eps().image(be);
      for (std::size_t a = 0; a < da; ++a) {
        for (std::size_t b = 0; b < da; ++b) {
          SparseVec diff = d(ua, B.product(al, be), A.product(a, b));
          diff = sub(diff, d(A.multiply(e(a), ea), e(be), e(b)));
          diff = sub(diff, d(A.multiply(e(b), eb), e(al), e(a)));
          test("d(ab⊗xy) = x eps(a) d(b⊗y) + y eps(b) d(a⊗x)", {al, be, a, b}, diff);
        }
      }
      SparseVec diff = d(ua, B.product(al, be), ua);
      diff = sub(diff, d(ea, e(be), ua));
      diff = sub(diff, d(eb, e(al), ua));
      test("d(ab⊗1) = eps(a) d(b⊗1) + eps(b) d(a⊗1)", {al, be}, diff);
    }
  }
  for (std::size_t a = 0; a < da; ++a) {
    for (std::size_t b = 0; b < da; ++b) {
      SparseVec diff = d(ua, ub, A.product(a, b));
      diff = sub(diff, d(e(a), ub, e(b)));
      diff = sub(diff, d(e(b), ub, e(a)));
      test("d(1⊗xy) = x d(1⊗y) + y d(1⊗x)", {a, b}, diff);
    }
  }
  for (std::size_t al = 0; al < db; ++al) {
    for (std::size_t a = 0; a < da; ++a) {
      SparseVec diff = d(ua, e(al), e(a));
      diff = sub(diff, d(t.eps().image(al), ub, e(a)));
      diff = sub(diff, d(e(a), e(al), ua));
      test("d(a⊗x) = eps(a) d(1⊗x) + x d(a⊗1)", {al, a}, diff);
    }
  }
  return rep;
}

bool relations_module_closed(const Triple& t, const OmegaPresentation& p) {
  for (const auto& g : p.generators) {
    for (std::size_t m = 0; m < p.dim_a; ++m) {
      if (!p.relations.contains(act(t, p, m, g.vector))) return false;
    }
  }
  return true;
}

}  // namespace sechh
