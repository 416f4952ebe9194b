// Acceptance battery: one PASS/FAIL line per criterion, nonzero exit on any failure.
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "sechh/chain_complex.hpp"
#include "sechh/cli.hpp"
#include "sechh/differentials.hpp"
#include "sechh/homology.hpp"
#include "sechh/kernel_module.hpp"
#include "sechh/verify.hpp"

using namespace sechh;

namespace {

constexpr std::size_t kAcceptanceDim = 40000;

struct Outcome {
  bool ok = true;
  std::string detail;
};

std::vector<Triple> all_triples() {
  std::vector<Triple> out;
  for (const auto& n : catalog_names()) out.push_back(catalog(n));
  return out;
}

std::vector<Triple> small_commutative() {
  std::vector<Triple> out;
  for (const auto& t : all_triples()) {
    if (t.commutative() && t.a().dim() <= 3 && t.b().dim() <= 3) out.push_back(t);
  }
  return out;
}

std::size_t cdim(const Triple& t, int n) { return chain_dim(t.a().dim(), t.b().dim(), n); }

Outcome boundary_squares_to_zero() {
  Outcome o;
  std::size_t products = 0;
  for (const auto& t : all_triples()) {
    for (int n = 1; n <= 4; ++n) {
      if (cdim(t, n + 1) > kAcceptanceDim) break;
      ++products;
      if (!(boundary(t, n) * boundary(t, n + 1)).is_zero()) {
        o.ok = false;
        o.detail += " " + t.name() + "@" + std::to_string(n);
      }
    }
  }
  if (o.ok) o.detail = std::to_string(products) + " products checked";
  return o;
}

Outcome cyclic_compatibility() {
  Outcome o;
  std::size_t degrees = 0;
  for (const auto& t : all_triples()) {
    SparseMat lower = cyclic_operator(t, 0);
    for (int n = 1; n <= 5; ++n) {
      if (cdim(t, n) > kAcceptanceDim) break;
      const SparseMat here = cyclic_operator(t, n);
      ++degrees;
      if (cyclic_compatibility_violation(boundary(t, n), here, cyclic_relations(lower))) {
        o.ok = false;
        o.detail += " " + t.name() + "@" + std::to_string(n);
      }
      lower = here;
    }
  }
  if (o.ok) o.detail = std::to_string(degrees) + " degrees checked";
  return o;
}

Outcome reduction() {
  Outcome o;
  const std::vector<std::pair<std::string, FinAlgebra>> algebras = {
      {"Q", ground_field()},
      {"Q[x]/(x^2)", truncated_polynomial(2)},
      {"Q[x]/(x^3)", truncated_polynomial(3)},
      {"QxQ", split_product(2)}};
  for (const auto& [name, a] : algebras) {
    const TheoremReport r = verify_reduction_Bk(a, 3, 3, name);
    if (!r.passed) {
      o.ok = false;
      o.detail += " " + name;
    }
  }
  return o;
}

Outcome hh0_law() {
  Outcome o;
  for (const auto& t : all_triples()) {
    const std::size_t expect = t.a().dim() - commutator_subspace(t.a()).dim();
    if (hh(t, 0).dimension != expect) {
      o.ok = false;
      o.detail += " " + t.name();
    }
  }
  if (hh(catalog("mat2_k"), 0).dimension != 1) {
    o.ok = false;
    o.detail += " mat2_k!=1";
  }
  return o;
}

Outcome hc0_law() {
  Outcome o;
  for (const auto& t : all_triples()) {
    if (hc(t, 0).dimension != hh(t, 0).dimension) {
      o.ok = false;
      o.detail += " " + t.name();
    }
  }
  return o;
}

Outcome theorem_battery(const std::function<TheoremReport(const Triple&)>& f) {
  Outcome o;
  std::size_t n = 0;
  for (const auto& t : small_commutative()) {
    ++n;
    const TheoremReport r = f(t);
    if (!r.passed) {
      o.ok = false;
      o.detail += " " + t.name();
    }
  }
  if (o.ok) o.detail = std::to_string(n) + " triples";
  return o;
}

Outcome connes() {
  Outcome o;
  for (const auto& t : small_commutative()) {
    if (!connes_segment_check(t).passed()) {
      o.ok = false;
      o.detail += " " + t.name();
    }
  }
  return o;
}

Outcome identities() {
  Outcome o;
  std::size_t instances = 0;
  for (const auto& t : all_triples()) {
    if (!t.commutative()) continue;
    const IdentityReport r = consequence_identities(t, omega(t));
    instances += r.instances;
    if (!r.passed()) {
      o.ok = false;
      o.detail += " " + t.name();
    }
  }
  if (o.ok) o.detail = std::to_string(instances) + " instances";
  return o;
}

Outcome determinism() {
  const char* argv[] = {"sechh", "verify", "--catalog", "--all", "--format", "machine"};
  std::ostringstream a, b, err;
  const int ca = cli::run(6, argv, a, err);
  const int cb = cli::run(6, argv, b, err);
  Outcome o;
  o.ok = ca == cli::kOk && cb == cli::kOk && a.str() == b.str() && !a.str().empty();
  o.detail = std::to_string(a.str().size()) + " bytes, exit " + std::to_string(ca) + "/" +
             std::to_string(cb);
  return o;
}

// Recomputes the discrepancy a TripleError claims from the corrupted data.
bool witness_rechecks(const TripleError& e, const FinAlgebra& a, const FinAlgebra& b,
                      const SparseMat& eps) {
  const SparseVec w = sparse_from_dense(e.witness_vector());
  if (w.empty()) return false;
  const auto& ix = e.witness_basis();
  auto assoc = [&](const FinAlgebra& alg) {
    const SparseVec x = unit_sparse(ix[0]), y = unit_sparse(ix[1]), z = unit_sparse(ix[2]);
    return sub(alg.multiply(alg.multiply(x, y), z), alg.multiply(x, alg.multiply(y, z))) == w;
  };
  auto unit = [&](const FinAlgebra& alg) {
    const SparseVec u = alg.unit_sparse(), x = unit_sparse(ix[0]);
    return sub(alg.multiply(u, x), x) == w || sub(alg.multiply(x, u), x) == w;
  };
  switch (e.axiom()) {
    case TripleAxiom::kANotAssociative: return assoc(a);
    case TripleAxiom::kBNotAssociative: return assoc(b);
    case TripleAxiom::kANotUnital: return unit(a);
    case TripleAxiom::kBNotUnital: return unit(b);
    case TripleAxiom::kBNotCommutative:
      return sub(b.product(ix[0], ix[1]), b.product(ix[1], ix[0])) == w;
    case TripleAxiom::kEpsNotUnital: return sub(eps.apply(b.unit_sparse()), a.unit_sparse()) == w;
    case TripleAxiom::kEpsNotMultiplicative:
      return sub(eps.apply(b.product(ix[0], ix[1])),
                 a.multiply(eps.column(ix[0]), eps.column(ix[1]))) == w;
    case TripleAxiom::kImageNotCentral: {
      const SparseVec x = unit_sparse(ix[1]);
      return sub(a.multiply(eps.column(ix[0]), x), a.multiply(x, eps.column(ix[0]))) == w;
    }
    case TripleAxiom::kEpsShape: return false;
  }
  return false;
}

FinAlgebra bump(const FinAlgebra& alg, std::size_t i, std::size_t j, std::size_t k) {
  std::vector<StructureConstant> c = alg.structure_constants();
  bool found = false;
  for (auto& s : c) {
    if (s.i == i && s.j == j && s.k == k) {
      s.value += 1;
      found = true;
    }
  }
  if (!found) c.push_back({i, j, k, Rat(1)});
  std::erase_if(c, [](const StructureConstant& s) { return s.value == 0; });
  return FinAlgebra(alg.dim(), c, alg.unit());
}

Outcome mutation_witnesses() {
  const Triple base = catalog("dual_dual_x");
  Outcome o;
  std::size_t by_validation = 0, by_theorem = 0, mutations = 0;
  for (int side = 0; side < 2; ++side) {
    const FinAlgebra& src = side == 0 ? base.a() : base.b();
    for (std::size_t i = 0; i < src.dim(); ++i) {
      for (std::size_t j = 0; j < src.dim(); ++j) {
        for (std::size_t k = 0; k < src.dim(); ++k) {
          ++mutations;
          const FinAlgebra a = side == 0 ? bump(base.a(), i, j, k) : base.a();
          const FinAlgebra b = side == 1 ? bump(base.b(), i, j, k) : base.b();
          const std::string tag = std::string(side == 0 ? "A" : "B") + "c[" + std::to_string(i) +
                                  "][" + std::to_string(j) + "][" + std::to_string(k) + "]";
          bool caught = false;
          try {
            const Triple t = make_triple(a, b, base.eps().matrix(), tag);
            for (const TheoremReport& r : {verify_main(t), verify_cor_hc1(t)}) {
              for (const Check& c : r.checks) {
                if (c.gating && !c.passed && c.witness &&
                    !c.witness->target.contains(c.witness->vector)) {
                  caught = true;
                }
              }
            }
            if (caught) ++by_theorem;
          } catch (const TripleError& e) {
            caught = witness_rechecks(e, a, b, base.eps().matrix());
            if (caught) ++by_validation;
          }
          if (!caught) {
            o.ok = false;
            o.detail += " " + tag;
          }
        }
      }
    }
  }
  o.detail = std::to_string(mutations) + " mutations, " + std::to_string(by_validation) +
             " rejected by validation, " + std::to_string(by_theorem) + " by a theorem check" +
             (o.ok ? "" : "; uncaught:" + o.detail);
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"boundary squares to zero", boundary_squares_to_zero},
      {"cyclic compatibility", cyclic_compatibility},
      {"reduction to B = Q", reduction},
      {"HH_0 = A/[A,A]", hh0_law},
      {"HC_0 = HH_0", hc0_law},
      {"main theorem battery", [] { return theorem_battery(verify_main); }},
      {"HC_1 quotient battery", [] { return theorem_battery(verify_cor_hc1); }},
      {"Connes segment exactness", connes},
      {"consequence identities", identities},
      {"deterministic verify report", determinism},
      {"mutation witnesses", mutation_witnesses},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    if (!o.ok) ++failed;
    std::cout << (o.ok ? "PASS " : "FAIL ") << i + 1 << ": " << criteria[i].first;
    if (!o.detail.empty()) std::cout << " (" << o.detail << ")";
    std::cout << std::endl;
  }
  return failed == 0 ? 0 : 1;
}
