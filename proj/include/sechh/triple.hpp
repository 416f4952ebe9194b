#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "sechh/algebra.hpp"

namespace sechh {

enum class TripleAxiom {
  kANotAssociative,
  kANotUnital,
  kBNotAssociative,
  kBNotUnital,
  kBNotCommutative,
  kEpsShape,
  kEpsNotUnital,
  kEpsNotMultiplicative,
  kImageNotCentral,
};

std::string_view axiom_name(TripleAxiom axiom);

/// make_triple rejected its input. Carries the violated axiom, the basis
/// indices involved and the nonzero discrepancy vector that proves it.
class TripleError : public std::invalid_argument {
 public:
  TripleError(TripleAxiom axiom, const std::string& message, std::vector<std::size_t> basis,
              Vec witness);

  TripleAxiom axiom() const { return axiom_; }
  const std::vector<std::size_t>& witness_basis() const { return basis_; }
  const Vec& witness_vector() const { return witness_; }

 private:
  TripleAxiom axiom_;
  std::vector<std::size_t> basis_;
  Vec witness_;
};

/// A validated triple (A, B, eps): B commutative, eps a unital algebra map
/// B -> A with central image.
class Triple {
 public:
  const std::string& name() const { return name_; }
  const FinAlgebra& a() const { return eps_.target(); }
  const FinAlgebra& b() const { return eps_.source(); }
  const AlgMorphism& eps() const { return eps_; }
  bool commutative() const { return commutative_; }

 private:
  friend Triple make_triple(FinAlgebra, FinAlgebra, const SparseMat&, std::string);
  Triple(std::string name, AlgMorphism eps, bool commutative)
      : name_(std::move(name)), eps_(std::move(eps)), commutative_(commutative) {}

  std::string name_;
  AlgMorphism eps_;
  bool commutative_;
};

/// Validates every axiom and throws TripleError on the first violation.
/// eps_matrix is dim A x dim B; column j is eps(f_j).
Triple make_triple(FinAlgebra a, FinAlgebra b, const SparseMat& eps_matrix,
                   std::string name = {});

/// Throws NonCommutativeError naming the operation if A is not commutative.
void require_commutative(const Triple& t, std::string_view operation);

/// Names accepted by catalog(), in a fixed order.
const std::vector<std::string>& catalog_names();
/// Throws std::invalid_argument for unknown names.
Triple catalog(std::string_view name);

}  // namespace sechh
