#include "sechh/triple.hpp"

#include "sechh/errors.hpp"

namespace sechh {

std::string_view axiom_name(TripleAxiom axiom) {
  switch (axiom) {
    case TripleAxiom::kANotAssociative: return "A not associative";
    case TripleAxiom::kANotUnital: return "A not unital";
    case TripleAxiom::kBNotAssociative: return "B not associative";
    case TripleAxiom::kBNotUnital: return "B not unital";
    case TripleAxiom::kBNotCommutative: return "B noncommutative";
    case TripleAxiom::kEpsShape: return "eps matrix has wrong shape";
    case TripleAxiom::kEpsNotUnital: return "eps not unital";
    case TripleAxiom::kEpsNotMultiplicative: return "eps not multiplicative";
    case TripleAxiom::kImageNotCentral: return "image not central";
  }
  return "unknown axiom";
}

TripleError::TripleError(TripleAxiom axiom, const std::string& message,
                         std::vector<std::size_t> basis, Vec witness)
    : std::invalid_argument(std::string(axiom_name(axiom)) + ": " + message),
      axiom_(axiom),
      basis_(std::move(basis)),
      witness_(std::move(witness)) {}

namespace {

void check_algebra(const FinAlgebra& alg, char label, TripleAxiom assoc, TripleAxiom unital) {
  const AlgebraReport r = validate_algebra(alg);
  if (const auto& w = r.associativity_witness) {
    throw TripleError(assoc,
                      std::string("(e_i e_j) e_k != e_i (e_j e_k) in ") + label + " at (" +
                          std::to_string(w->i) + "," + std::to_string(w->j) + "," +
                          std::to_string(w->k) + ")",
                      {w->i, w->j, w->k}, w->discrepancy);
  }
  if (!r.unital) {
    if (const auto& w = r.unit_witness) {
      throw TripleError(unital,
                        std::string("unit fails on basis element ") + std::to_string(w->i) +
                            " of " + label,
                        {w->i}, w->discrepancy);
    }
    throw TripleError(unital, std::string("zero-dimensional ") + label, {}, {});
  }
}

}  // namespace

Triple make_triple(FinAlgebra a, FinAlgebra b, const SparseMat& eps_matrix, std::string name) {
  check_algebra(a, 'A', TripleAxiom::kANotAssociative, TripleAxiom::kANotUnital);
  check_algebra(b, 'B', TripleAxiom::kBNotAssociative, TripleAxiom::kBNotUnital);
  const AlgebraReport rb = validate_algebra(b);
  if (const auto& w = rb.commutativity_witness) {
    throw TripleError(TripleAxiom::kBNotCommutative,
                      "f_" + std::to_string(w->i) + " f_" + std::to_string(w->j) +
                          " != f_" + std::to_string(w->j) + " f_" + std::to_string(w->i),
                      {w->i, w->j}, w->discrepancy);
  }
  if (eps_matrix.rows() != a.dim() || eps_matrix.cols() != b.dim()) {
    throw TripleError(TripleAxiom::kEpsShape,
                      "expected " + std::to_string(a.dim()) + " x " + std::to_string(b.dim()),
                      {eps_matrix.rows(), eps_matrix.cols()}, {});
  }
  const bool a_commutative = validate_algebra(a).commutative;
  AlgMorphism eps(std::move(b), std::move(a), eps_matrix);
  const FinAlgebra& A = eps.target();
  const FinAlgebra& B = eps.source();

  SparseVec unit_diff = sub(eps.apply(B.unit_sparse()), A.unit_sparse());
  if (!unit_diff.empty()) {
    throw TripleError(TripleAxiom::kEpsNotUnital, "eps(1_B) != 1_A", {},
                      to_dense(unit_diff, A.dim()));
  }
  for (std::size_t i = 0; i < B.dim(); ++i) {
    for (std::size_t j = 0; j < B.dim(); ++j) {
      SparseVec diff = sub(eps.apply(B.product(i, j)), A.multiply(eps.image(i), eps.image(j)));
      if (!diff.empty()) {
        throw TripleError(TripleAxiom::kEpsNotMultiplicative,
                          "eps(f_" + std::to_string(i) + " f_" + std::to_string(j) +
                              ") != eps(f_" + std::to_string(i) + ") eps(f_" +
                              std::to_string(j) + ")",
                          {i, j}, to_dense(diff, A.dim()));
      }
    }
  }
  for (std::size_t j = 0; j < B.dim(); ++j) {
    for (std::size_t i = 0; i < A.dim(); ++i) {
      SparseVec diff = sub(A.multiply(eps.image(j), unit_sparse(i)),
                           A.multiply(unit_sparse(i), eps.image(j)));
      if (!diff.empty()) {
        throw TripleError(TripleAxiom::kImageNotCentral,
                          "eps(f_" + std::to_string(j) + ") does not commute with e_" +
                              std::to_string(i),
                          {j, i}, to_dense(diff, A.dim()));
      }
    }
  }
  return Triple(std::move(name), std::move(eps), a_commutative);
}

void require_commutative(const Triple& t, std::string_view operation) {
  if (!t.commutative()) {
    throw NonCommutativeError(std::string(operation) + " requires a commutative triple; '" +
                              t.name() + "' has noncommutative A");
  }
}

const std::vector<std::string>& catalog_names() {
  static const std::vector<std::string> names = {
      "k_k",           "dual_k",         "dual_dual_zero",    "dual_dual_x",
      "prod_k",        "trunc3_k",       "dual_over_dual_id", "mat2_k",
      "k_dual_zero",   "trunc3_dual_x2", "prod_over_prod_id", "mat2_dual_zero",
  };
  return names;
}

namespace {

// eps given by the images of the basis of B, as dense columns.
SparseMat columns(std::size_t rows, const std::vector<Vec>& images) {
  std::vector<SparseVec> cols;
  for (const auto& v : images) cols.push_back(sparse_from_dense(v));
  return SparseMat::from_columns(rows, std::move(cols));
}

Triple over_ground_field(FinAlgebra a, std::string name) {
  const Vec unit = a.unit();
  const std::size_t d = a.dim();
  return make_triple(std::move(a), ground_field(), columns(d, {unit}), std::move(name));
}

}  // namespace

Triple catalog(std::string_view name) {
  const std::string n(name);
  const Rat one(1), zero(0);
  if (n == "k_k") return over_ground_field(ground_field(), n);
  if (n == "dual_k") return over_ground_field(truncated_polynomial(2), n);
  if (n == "prod_k") return over_ground_field(split_product(2), n);
  if (n == "trunc3_k") return over_ground_field(truncated_polynomial(3), n);
  if (n == "mat2_k") return over_ground_field(matrix_algebra(2), n);
  if (n == "dual_dual_zero") {
    return make_triple(truncated_polynomial(2), truncated_polynomial(2),
                       columns(2, {{one, zero}, {zero, zero}}), n);
  }
  if (n == "dual_dual_x" || n == "dual_over_dual_id") {
    return make_triple(truncated_polynomial(2), truncated_polynomial(2),
                       columns(2, {{one, zero}, {zero, one}}), n);
  }
  if (n == "k_dual_zero") {
    return make_triple(ground_field(), truncated_polynomial(2), columns(1, {{one}, {zero}}), n);
  }
  if (n == "trunc3_dual_x2") {
    return make_triple(truncated_polynomial(3), truncated_polynomial(2),
                       columns(3, {{one, zero, zero}, {zero, zero, one}}), n);
  }
  if (n == "prod_over_prod_id") {
    return make_triple(split_product(2), split_product(2),
                       columns(2, {{one, zero}, {zero, one}}), n);
  }
  if (n == "mat2_dual_zero") {
    return make_triple(matrix_algebra(2), truncated_polynomial(2),
                       columns(4, {{one, zero, zero, one}, {zero, zero, zero, zero}}), n);
  }
  throw std::invalid_argument("unknown catalog triple '" + n + "'");
}

}  // namespace sechh
