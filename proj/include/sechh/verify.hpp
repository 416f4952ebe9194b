#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sechh/algebra.hpp"
#include "sechh/sparse.hpp"
#include "sechh/subspace.hpp"
#include "sechh/triple.hpp"

namespace sechh {

enum class TheoremId { kHh1Omega, kHc1Quotient, kOmegaKernel, kMain, kReduction };

const char* theorem_name(TheoremId id);
/// Accepts the names produced by theorem_name (case-sensitive).
std::optional<TheoremId> parse_theorem(const std::string& name);

/// A vector that should lie in `target` but does not. `target.contains(vector)`
/// re-checks it.
struct Witness {
  std::string description;
  SparseVec vector;
  Subspace target;
};

struct Check {
  std::string name;
  bool passed = false;
  std::optional<Witness> witness;
  /// Informational checks are reported but do not affect the status.
  bool gating = true;
};

struct TheoremReport {
  std::string triple_id;
  TheoremId theorem = TheoremId::kMain;
  bool passed = false;
  std::vector<std::pair<std::string, std::size_t>> dims;
  std::vector<Check> checks;
  std::vector<std::string> notes;

  const Check* find(const std::string& name) const;
};

/// All of these throw NonCommutativeError on a non-commutative triple.
TheoremReport verify_prop_hh1_omega(const Triple& t);
TheoremReport verify_cor_hc1(const Triple& t);
TheoremReport verify_prop_omega_J(const Triple& t);
TheoremReport verify_main(const Triple& t);

/// Compares the triple (A, Q, unit) against the classical oracles in degrees
/// 0..n_max. Throws ResourceCapError when n_max exceeds `cap`.
TheoremReport verify_reduction_Bk(const FinAlgebra& a, int n_max, int cap = 3,
                                  const std::string& name = {});

TheoremReport run_theorem(const Triple& t, TheoremId id);

}  // namespace sechh
