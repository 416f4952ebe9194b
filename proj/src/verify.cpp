#include "sechh/verify.hpp"

#include <string>

#include "sechh/differentials.hpp"
#include "sechh/errors.hpp"
#include "sechh/homology.hpp"
#include "sechh/kernel_module.hpp"
#include "sechh/oracles.hpp"

namespace sechh {

namespace {

// Passes iff every vector lies in target; the first escapee becomes the witness.
Check containment(std::string name, const std::vector<SparseVec>& vectors, const Subspace& target,
                  const std::string& what) {
  Check c{std::move(name), true, std::nullopt, true};
  for (std::size_t i = 0; i < vectors.size(); ++i) {
    if (!target.contains(vectors[i])) {
      c.passed = false;
      c.witness = Witness{what + " #" + std::to_string(i), vectors[i], target};
      break;
    }
  }
  return c;
}

std::vector<SparseVec> apply_all(const SparseMat& m, const std::vector<SparseVec>& vs) {
  std::vector<SparseVec> out;
  out.reserve(vs.size());
  for (const auto& v : vs) out.push_back(m.apply(v));
  return out;
}

Check flag(std::string name, bool ok) { return Check{std::move(name), ok, std::nullopt, true}; }

// x * y == identity; the witness is the first deviating column of x*y - I.
Check inverse_pair(std::string name, const SparseMat& x, const SparseMat& y) {
  if (x.cols() != y.rows() || x.rows() != y.cols()) return flag(std::move(name), false);
  const SparseMat prod = x * y;
  const SparseMat diff = prod - SparseMat::identity(prod.cols());
  for (std::size_t c = 0; c < diff.cols(); ++c) {
    if (!diff.column(c).empty()) {
      return Check{std::move(name), false,
                   Witness{"column " + std::to_string(c) + " of the composite minus identity",
                           diff.column(c), Subspace(diff.rows())},
                   true};
    }
  }
  return flag(std::move(name), true);
}

void finish(TheoremReport& r) {
  r.passed = true;
  for (const auto& c : r.checks) {
    if (c.gating && !c.passed) r.passed = false;
  }
}

std::vector<SparseVec> generator_vectors(const OmegaPresentation& p, std::optional<RelationKind> kind) {
  std::vector<SparseVec> out;
  for (const auto& g : p.generators) {
    if (!kind || g.kind == *kind) out.push_back(g.vector);
  }
  return out;
}

// C_1 (or A⊗A⊗B) -> Ω ambient: e_i⊗e_j⊗f_k |-> e_i d(f_k ⊗ e_j).
SparseMat symbol_permutation(const OmegaPresentation& p) {
  const std::size_t da = p.dim_a, db = p.dim_b;
  std::vector<SparseVec> cols(p.ambient_dim());
  for (std::size_t i = 0; i < da; ++i) {
    for (std::size_t j = 0; j < da; ++j) {
      for (std::size_t k = 0; k < db; ++k) {
        cols[kernel_index(da, db, i, j, k)] = {{p.symbol_index(i, k, j), Rat(1)}};
      }
    }
  }
  return SparseMat::from_columns(p.ambient_dim(), std::move(cols));
}

struct HH1Omega {
  TheoremReport report;
  SparseMat to_omega;  // HH_1 -> Ω¹
  SparseMat to_hh1;    // Ω¹ -> HH_1
};

struct OmegaJ {
  TheoremReport report;
  SparseMat to_j;      // Ω¹ -> J/(J²+Ĵ)
  SparseMat to_omega;  // J/(J²+Ĵ) -> Ω¹
};

HH1Omega hh1_omega(const Triple& t, const OmegaPresentation& p) {
  HH1Omega out;
  TheoremReport& r = out.report;
  r.triple_id = t.name();
  r.theorem = TheoremId::kHh1Omega;
  const HomologyResult h1 = hh(t, 1);
  const SparseMat phi = symbol_permutation(p);
  const SparseMat psi = phi.transpose();
  const SparseMat d2 = boundary(t, 2);
  const SparseMat d1 = boundary(t, 1);

  r.checks.push_back(containment("boundaries map into relations", apply_all(phi, d2.columns()),
                                 p.relations, "image of boundary column"));
  std::vector<SparseVec> symbol_images;
  for (std::size_t s = 0; s < p.ambient_dim(); ++s) symbol_images.push_back(d1.apply(psi.column(s)));
  r.checks.push_back(containment("symbols map to cycles", symbol_images, Subspace(d1.rows()),
                                 "boundary of symbol preimage"));
  r.checks.push_back(containment("relations map into boundaries",
                                 apply_all(psi, generator_vectors(p, std::nullopt)),
                                 h1.group.relations(), "preimage of relation generator"));

  std::vector<SparseVec> fwd;
  for (const auto& z : h1.representatives) fwd.push_back(p.quotient.project(phi.apply(z)));
  out.to_omega = SparseMat::from_columns(p.dim(), std::move(fwd));
  std::vector<SparseVec> back;
  bool landed = true;
  for (std::size_t q = 0; q < p.dim(); ++q) {
    auto c = h1.group.coordinates(psi.apply(p.quotient.section({{q, Rat(1)}})));
    if (!c) {
      landed = false;
      break;
    }
    back.push_back(std::move(*c));
  }
  if (landed) {
    out.to_hh1 = SparseMat::from_columns(h1.dimension, std::move(back));
    r.checks.push_back(inverse_pair("HH_1 -> Omega -> HH_1 is the identity", out.to_hh1, out.to_omega));
    r.checks.push_back(inverse_pair("Omega -> HH_1 -> Omega is the identity", out.to_omega, out.to_hh1));
  } else {
    r.checks.push_back(flag("reverse map lands in cycles", false));
  }
  r.checks.push_back(flag("dim HH_1 = dim Omega", h1.dimension == p.dim()));
  r.dims = {{"C_1", d1.cols()},
            {"rank d_2", colspace(d2).dim()},
            {"HH_1", h1.dimension},
            {"Omega ambient", p.ambient_dim()},
            {"Omega relations", p.relations.dim()},
            {"Omega", p.dim()}};
  finish(r);
  return out;
}

OmegaJ omega_kernel(const Triple& t, const OmegaPresentation& p, const KernelData& k) {
  OmegaJ out;
  TheoremReport& r = out.report;
  r.triple_id = t.name();
  r.theorem = TheoremId::kOmegaKernel;
  const FinAlgebra& A = t.a();
  const std::size_t da = p.dim_a, db = p.dim_b;
  const SparseVec ua = A.unit_sparse(), ub = t.b().unit_sparse();

  // e_a d(f_al ⊗ e_b) |-> e_a⊗e_b⊗f_al - (e_a eps(f_al) e_b)⊗1⊗1
  std::vector<SparseVec> cols(p.ambient_dim());
  for (std::size_t a = 0; a < da; ++a) {
    for (std::size_t al = 0; al < db; ++al) {
      const SparseVec aeb = A.multiply(unit_sparse(a), t.eps().image(al));
      for (std::size_t b = 0; b < da; ++b) {
        cols[p.symbol_index(a, al, b)] =
            sub(kernel_tensor(t, unit_sparse(a), unit_sparse(b), unit_sparse(al)),
                kernel_tensor(t, A.multiply(aeb, unit_sparse(b)), ua, ub));
      }
    }
  }
  const SparseMat forward = SparseMat::from_columns(k.ambient.dim(), std::move(cols));
  const SparseMat backward = symbol_permutation(p);

  r.checks.push_back(containment("symbols map into J", forward.columns(), k.j, "image of symbol"));
  r.checks.push_back(containment("Leibniz relations map into J^2",
                                 apply_all(forward, generator_vectors(p, RelationKind::kLeibniz)),
                                 k.j_squared, "image of Leibniz generator"));
  r.checks.push_back(containment("twist relations map into J^2 + Jhat",
                                 apply_all(forward, generator_vectors(p, RelationKind::kTwist)),
                                 k.denominator, "image of twist generator"));
  Check literal = containment("twist relations map into J^2 + span(Jhat generators)",
                              apply_all(forward, generator_vectors(p, RelationKind::kTwist)),
                              k.denominator_literal, "image of twist generator");
  literal.gating = false;
  r.checks.push_back(std::move(literal));
  r.checks.push_back(containment("J^2 maps into relations", apply_all(backward, k.j_squared.basis()),
                                 p.relations, "image of J^2 basis vector"));
  r.checks.push_back(containment("Jhat maps into relations", apply_all(backward, k.jhat_module.basis()),
                                 p.relations, "image of Jhat basis vector"));

  std::vector<SparseVec> fwd;
  bool landed = true;
  for (std::size_t q = 0; q < p.dim(); ++q) {
    auto c = k.quotient.coordinates(forward.apply(p.quotient.section({{q, Rat(1)}})));
    if (!c) {
      landed = false;
      break;
    }
    fwd.push_back(std::move(*c));
  }
  std::vector<SparseVec> back;
  for (const auto& z : k.quotient.representatives()) back.push_back(p.quotient.project(backward.apply(z)));
  out.to_omega = SparseMat::from_columns(p.dim(), std::move(back));
  if (landed) {
    out.to_j = SparseMat::from_columns(k.quotient.dim(), std::move(fwd));
    r.checks.push_back(inverse_pair("Omega -> J-quotient -> Omega is the identity", out.to_omega, out.to_j));
    r.checks.push_back(inverse_pair("J-quotient -> Omega -> J-quotient is the identity", out.to_j, out.to_omega));
  } else {
    r.checks.push_back(flag("forward map lands in J", false));
  }
  r.checks.push_back(flag("dim Omega = dim J/(J^2+Jhat)", p.dim() == k.quotient.dim()));
  Check sym = flag("J-quotient is A-symmetric", symmetry_check(t, k));
  r.checks.push_back(std::move(sym));
  r.dims = {{"Omega", p.dim()},
            {"J", k.j.dim()},
            {"J^2", k.j_squared.dim()},
            {"Jhat span", k.jhat.dim()},
            {"Jhat bimodule", k.jhat_module.dim()},
            {"J^2+Jhat span", k.denominator_literal.dim()},
            {"J^2+Jhat bimodule", k.denominator.dim()},
            {"J/(J^2+Jhat)", k.quotient.dim()},
            {"J/(J^2+Jhat span)", k.quotient_literal.dim()}};
  r.notes.push_back(k.readings_coincide()
                        ? "Jhat span and Jhat bimodule give the same denominator"
                        : "Jhat span is not an A-bimodule here; the isomorphism uses the bimodule it generates");
  finish(r);
  return out;
}

void prefix_checks(TheoremReport& into, const TheoremReport& from, const std::string& prefix) {
  for (auto c : from.checks) {
    c.name = prefix + c.name;
    into.checks.push_back(std::move(c));
  }
  for (const auto& n : from.notes) into.notes.push_back(prefix + n);
}

}  // namespace

const char* theorem_name(TheoremId id) {
  switch (id) {
    case TheoremId::kHh1Omega: return "hh1_omega";
    case TheoremId::kHc1Quotient: return "hc1_quotient";
    case TheoremId::kOmegaKernel: return "omega_kernel";
    case TheoremId::kMain: return "main";
    case TheoremId::kReduction: return "reduction";
  }
  return "?";
}

std::optional<TheoremId> parse_theorem(const std::string& name) {
  for (TheoremId id : {TheoremId::kHh1Omega, TheoremId::kHc1Quotient, TheoremId::kOmegaKernel, TheoremId::kMain,
                       TheoremId::kReduction}) {
    if (name == theorem_name(id)) return id;
  }
  return std::nullopt;
}

const Check* TheoremReport::find(const std::string& name) const {
  for (const auto& c : checks) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

TheoremReport verify_prop_hh1_omega(const Triple& t) {
  require_commutative(t, "hh1_omega");
  return hh1_omega(t, omega(t)).report;
}

TheoremReport verify_prop_omega_J(const Triple& t) {
  require_commutative(t, "omega_kernel");
  return omega_kernel(t, omega(t), kernel_data(t)).report;
}

TheoremReport verify_cor_hc1(const Triple& t) {
  require_commutative(t, "hc1_quotient");
  TheoremReport r;
  r.triple_id = t.name();
  r.theorem = TheoremId::kHc1Quotient;
  const OmegaPresentation p = omega(t);
  const HomologyResult c1 = hc(t, 1);
  const Subspace d1a = d_one_A_subspace(p);
  const SparseMat psi = symbol_permutation(p).transpose();

  std::vector<SparseVec> projected;
  for (const auto& g : p.generators) projected.push_back(c1.chain_quotient->project(psi.apply(g.vector)));
  r.checks.push_back(containment("relations map into cyclic boundaries", projected,
                                 c1.group.relations(), "projected relation generator"));

  std::vector<SparseVec> cols;
  bool landed = true;
  for (std::size_t q = 0; q < p.dim(); ++q) {
    const SparseVec chain = c1.chain_quotient->project(psi.apply(p.quotient.section({{q, Rat(1)}})));
    auto c = c1.group.coordinates(chain);
    if (!c) {
      landed = false;
      r.checks.push_back(Check{"symbols map to cyclic cycles", false,
                               Witness{"projected symbol " + std::to_string(q), chain, c1.group.numerator()},
                               true});
      break;
    }
    cols.push_back(std::move(*c));
  }
  if (landed) {
    r.checks.push_back(flag("symbols map to cyclic cycles", true));
    const SparseMat theta = SparseMat::from_columns(c1.dimension, std::move(cols));
    r.checks.push_back(flag("Omega -> HC_1 is surjective", rank(theta) == c1.dimension));
    const Subspace ker = nullspace(theta);
    r.checks.push_back(containment("d(1⊗A) lies in the kernel", d1a.basis(), ker, "d(1⊗e) basis vector"));
    r.checks.push_back(containment("kernel lies in d(1⊗A)", ker.basis(), d1a, "kernel basis vector"));
  }
  r.checks.push_back(flag("dim HC_1 = dim Omega - dim d(1⊗A)", c1.dimension + d1a.dim() == p.dim()));
  r.dims = {{"HC_1", c1.dimension}, {"Omega", p.dim()}, {"d(1⊗A)", d1a.dim()}};
  finish(r);
  return r;
}

TheoremReport verify_main(const Triple& t) {
  require_commutative(t, "main");
  const OmegaPresentation p = omega(t);
  const KernelData k = kernel_data(t);
  const HH1Omega first = hh1_omega(t, p);
  const OmegaJ second = omega_kernel(t, p, k);
  TheoremReport r;
  r.triple_id = t.name();
  r.theorem = TheoremId::kMain;
  prefix_checks(r, first.report, "hh1_omega: ");
  prefix_checks(r, second.report, "omega_kernel: ");
  const bool have_maps = first.to_hh1.cols() == p.dim() && second.to_j.cols() == p.dim();
  if (have_maps) {
    const SparseMat hh_to_j = second.to_j * first.to_omega;
    const SparseMat j_to_hh = first.to_hh1 * second.to_omega;
    r.checks.push_back(inverse_pair("HH_1 -> J-quotient -> HH_1 is the identity", j_to_hh, hh_to_j));
    r.checks.push_back(inverse_pair("J-quotient -> HH_1 -> J-quotient is the identity", hh_to_j, j_to_hh));
  } else {
    r.checks.push_back(flag("composite maps defined", false));
  }
  const std::size_t h = first.to_omega.cols();
  r.checks.push_back(flag("dim HH_1 = dim Omega = dim J/(J^2+Jhat)", h == p.dim() && p.dim() == k.quotient.dim()));
  r.dims = {{"HH_1", h}, {"Omega", p.dim()}, {"J/(J^2+Jhat)", k.quotient.dim()},
            {"J/(J^2+Jhat span)", k.quotient_literal.dim()}};
  finish(r);
  return r;
}

TheoremReport verify_reduction_Bk(const FinAlgebra& a, int n_max, int cap, const std::string& name) {
  if (n_max < 0) throw std::invalid_argument("negative degree");
  if (n_max > cap) {
    throw ResourceCapError("degree " + std::to_string(n_max) + " exceeds the configured cap " +
                           std::to_string(cap));
  }
  const Triple t = make_triple(a, ground_field(), SparseMat::from_columns(a.dim(), {a.unit_sparse()}),
                               name.empty() ? "reduction" : name);
  TheoremReport r;
  r.triple_id = t.name();
  r.theorem = TheoremId::kReduction;
  const HomologyOptions opts{cap};
  for (int n = 0; n <= n_max; ++n) {
    const std::size_t ours = hh(t, n, opts).dimension, ref = oracle::classical_hh(a, n);
    const std::string deg = std::to_string(n);
    r.dims.push_back({"HH_" + deg, ours});
    r.dims.push_back({"HH_" + deg + " classical", ref});
    r.checks.push_back(flag("HH_" + deg + " matches classical", ours == ref));
  }
  for (int n = 0; n <= n_max; ++n) {
    const std::size_t ours = hc(t, n, opts).dimension, ref = oracle::classical_hc(a, n);
    const std::string deg = std::to_string(n);
    r.dims.push_back({"HC_" + deg, ours});
    r.dims.push_back({"HC_" + deg + " classical", ref});
    r.checks.push_back(flag("HC_" + deg + " matches classical", ours == ref));
  }
  if (t.commutative()) {
    const KernelData k = kernel_data(t);
    const std::size_t i2 = oracle::classical_I_mod_I2_dim(a);
    const std::size_t om = omega(t).dim(), kahler = oracle::classical_kahler_dim(a);
    r.dims.push_back({"J/(J^2+Jhat)", k.quotient.dim()});
    r.dims.push_back({"I/I^2 classical", i2});
    r.dims.push_back({"Omega", om});
    r.dims.push_back({"Omega classical", kahler});
    r.checks.push_back(containment("Jhat lies in J^2", k.jhat.basis(), k.j_squared, "Jhat basis vector"));
    r.checks.push_back(flag("J/(J^2+Jhat) matches classical I/I^2", k.quotient.dim() == i2));
    r.checks.push_back(flag("Omega matches classical Kahler differentials", om == kahler));
  } else {
    r.notes.push_back("A is not commutative; kernel and differential comparisons skipped");
  }
  finish(r);
  return r;
}

TheoremReport run_theorem(const Triple& t, TheoremId id) {
  switch (id) {
    case TheoremId::kHh1Omega: return verify_prop_hh1_omega(t);
    case TheoremId::kHc1Quotient: return verify_cor_hc1(t);
    case TheoremId::kOmegaKernel: return verify_prop_omega_J(t);
    case TheoremId::kMain: return verify_main(t);
    case TheoremId::kReduction: return verify_reduction_Bk(t.a(), 3, 3, t.name());
  }
  throw InternalError("unknown theorem id");
}

}  // namespace sechh
