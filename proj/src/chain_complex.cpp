#include "sechh/chain_complex.hpp"

#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "sechh/errors.hpp"

namespace sechh {

namespace {

std::size_t checked_mul(std::size_t x, std::size_t y) {
  if (x != 0 && y > kMaxChainDim / x) {
    throw ResourceCapError("chain space dimension exceeds " + std::to_string(kMaxChainDim));
  }
  return x * y;
}

std::size_t pair_count(int n) {
  return static_cast<std::size_t>(n) * static_cast<std::size_t>(n + 1) / 2;
}

// Per-face bookkeeping: where every target slot takes its data from.
struct FacePlan {
  int n = 0;
  int merged = 0;                  // target a-slot holding the merged product
  std::size_t left = 0, right = 0; // source a-slots multiplied (left first)
  std::size_t consumed = 0;        // source b-slot fed through eps
  std::vector<std::size_t> a_src;  // per target a-slot (ignored at `merged`)
  std::vector<std::vector<std::size_t>> b_src;  // per target b-slot, 1 or 2 sources
};

FacePlan plan_face(int n, int i) {
  FacePlan plan;
  plan.n = n;
  const int m = n - 1;
  auto phi = [&](int p) {
    if (i == n) return p == n ? 0 : p;
    return p <= i ? p : p - 1;
  };
  if (i < n) {
    plan.merged = i;
    plan.left = static_cast<std::size_t>(i);
    plan.right = static_cast<std::size_t>(i + 1);
    plan.consumed = pair_slot(n, i, i + 1);
  } else {
    plan.merged = 0;
    plan.left = static_cast<std::size_t>(n);
    plan.right = 0;
    plan.consumed = pair_slot(n, 0, n);
  }
  plan.a_src.assign(static_cast<std::size_t>(m) + 1, 0);
  for (int p = 0; p <= n; ++p) {
    if (phi(p) != plan.merged) plan.a_src[static_cast<std::size_t>(phi(p))] = static_cast<std::size_t>(p);
  }
  plan.b_src.assign(pair_count(m), {});
  for (int r = 0; r <= n; ++r) {
    for (int s = r + 1; s <= n; ++s) {
      const std::size_t src = pair_slot(n, r, s);
      if (src == plan.consumed) continue;
      int u = phi(r), v = phi(s);
      if (u > v) std::swap(u, v);
      if (u == v) throw InternalError("face collapses a pair other than the merged one");
      plan.b_src[pair_slot(m, u, v)].push_back(src);
    }
  }
  return plan;
}

// Column generator for all faces of one degree, sharing product tables.
class FaceEngine {
 public:
  FaceEngine(const Triple& t, int n)
      : t_(t), source_(t.a().dim(), t.b().dim(), n), target_(t.a().dim(), t.b().dim(), n - 1) {
    const FinAlgebra& a = t.a();
    const FinAlgebra& b = t.b();
    const std::size_t da = a.dim(), db = b.dim();
    for (int i = 0; i <= n; ++i) plans_.push_back(plan_face(n, i));
    aea_.resize(da * db * da);
    for (std::size_t x = 0; x < da; ++x) {
      for (std::size_t y = 0; y < db; ++y) {
        const SparseVec left = a.multiply(unit_sparse(x), t.eps().image(y));
        for (std::size_t z = 0; z < da; ++z) aea_[(x * db + y) * da + z] = a.multiply(left, unit_sparse(z));
      }
    }
    for (std::size_t x = 0; x < da; ++x) a_units_.push_back(unit_sparse(x));
    for (std::size_t y = 0; y < db; ++y) b_units_.push_back(unit_sparse(y));
  }

  const ChainSpace& source() const { return source_; }
  const ChainSpace& target() const { return target_; }

  // Appends sign * face_i(column c) to out (not canonicalized).
  void face_column(int i, std::size_t c, const Rat& sign, SparseVec& out) {
    const FacePlan& plan = plans_[static_cast<std::size_t>(i)];
    const ChainIndex idx = source_.delinearize(c);
    const std::size_t a_slots = target_.a_slots();
    const std::size_t slots = a_slots + target_.b_slots();
    factors_.assign(slots, nullptr);
    const std::size_t db = t_.b().dim(), da = t_.a().dim();
    for (std::size_t q = 0; q < a_slots; ++q) {
      if (q == static_cast<std::size_t>(plan.merged)) {
        const std::size_t x = idx.a[plan.left], z = idx.a[plan.right], y = idx.b[plan.consumed];
        factors_[q] = &aea_[(x * db + y) * da + z];
      } else {
        factors_[q] = &a_units_[idx.a[plan.a_src[q]]];
      }
    }
    for (std::size_t t = 0; t < plan.b_src.size(); ++t) {
      const auto& src = plan.b_src[t];
      if (src.size() == 1) {
        factors_[a_slots + t] = &b_units_[idx.b[src[0]]];
      } else {
        factors_[a_slots + t] = &t_.b().product(idx.b[src[0]], idx.b[src[1]]);
      }
    }
    for (const SparseVec* f : factors_) {
      if (f->empty()) return;
    }
    expand(0, 0, sign, out);
  }

 private:
  void expand(std::size_t slot, std::size_t offset, const Rat& coeff, SparseVec& out) const {
    if (slot == factors_.size()) {
      out.push_back({offset, coeff});
      return;
    }
    const std::size_t stride = target_.stride(slot);
    for (const auto& e : *factors_[slot]) {
      expand(slot + 1, offset + e.index * stride, coeff * e.value, out);
    }
  }

  const Triple& t_;
  ChainSpace source_;
  ChainSpace target_;
  std::vector<FacePlan> plans_;
  std::vector<SparseVec> aea_;  // e_x eps(f_y) e_z
  std::vector<SparseVec> a_units_;
  std::vector<SparseVec> b_units_;
  std::vector<const SparseVec*> factors_;
};

void require_degree(int n, int lowest) {
  if (n < lowest) {
    throw std::invalid_argument(n < 0 ? "negative degree"
                                      : "degree " + std::to_string(n) + " has no faces");
  }
}

}  // namespace

std::size_t ChainIndex::b_at(int r, int s) const { return b.at(pair_slot(degree, r, s)); }
std::size_t& ChainIndex::b_at(int r, int s) { return b.at(pair_slot(degree, r, s)); }

std::size_t pair_slot(int n, int r, int s) {
  if (!(0 <= r && r < s && s <= n)) {
    throw std::out_of_range("pair (" + std::to_string(r) + "," + std::to_string(s) +
                            ") outside degree " + std::to_string(n));
  }
  // pairs (r', s') with r' < r, then (r, s') with r < s' < s
  std::size_t before = 0;
  for (int q = 0; q < r; ++q) before += static_cast<std::size_t>(n - q);
  return before + static_cast<std::size_t>(s - r - 1);
}

std::size_t chain_dim(std::size_t dim_a, std::size_t dim_b, int n) {
  if (n < 0) throw std::invalid_argument("negative degree");
  std::size_t total = 1;
  for (int p = 0; p <= n; ++p) total = checked_mul(total, dim_a);
  for (std::size_t p = 0; p < pair_count(n); ++p) total = checked_mul(total, dim_b);
  return total;
}

ChainSpace::ChainSpace(std::size_t dim_a, std::size_t dim_b, int degree)
    : degree_(degree), dim_a_(dim_a), dim_b_(dim_b), total_(chain_dim(dim_a, dim_b, degree)) {
  const std::size_t slots = a_slots() + b_slots();
  strides_.assign(slots, 1);
  for (std::size_t s = slots; s-- > 0;) {
    if (s + 1 < slots) strides_[s] = strides_[s + 1] * (s + 1 < a_slots() ? dim_a_ : dim_b_);
  }
}

std::size_t ChainSpace::linearize(const ChainIndex& idx) const {
  if (idx.degree != degree_ || idx.a.size() != a_slots() || idx.b.size() != b_slots()) {
    throw DimensionError("chain index does not match degree " + std::to_string(degree_));
  }
  std::size_t out = 0;
  for (std::size_t p = 0; p < idx.a.size(); ++p) {
    if (idx.a[p] >= dim_a_) throw DimensionError("a-slot index out of range");
    out += idx.a[p] * strides_[p];
  }
  for (std::size_t p = 0; p < idx.b.size(); ++p) {
    if (idx.b[p] >= dim_b_) throw DimensionError("b-slot index out of range");
    out += idx.b[p] * strides_[a_slots() + p];
  }
  return out;
}

ChainIndex ChainSpace::delinearize(std::size_t index) const {
  if (index >= total_) throw DimensionError("chain index out of range");
  ChainIndex idx;
  idx.degree = degree_;
  idx.a.resize(a_slots());
  idx.b.resize(b_slots());
  for (std::size_t p = 0; p < a_slots(); ++p) {
    idx.a[p] = index / strides_[p];
    index %= strides_[p];
  }
  for (std::size_t p = 0; p < b_slots(); ++p) {
    idx.b[p] = index / strides_[a_slots() + p];
    index %= strides_[a_slots() + p];
  }
  return idx;
}

SparseMat face_map(const Triple& t, int n, int i) {
  require_degree(n, 1);
  if (i < 0 || i > n) throw std::invalid_argument("face index out of range");
  FaceEngine engine(t, n);
  const Rat one(1);
  std::vector<SparseVec> cols(engine.source().total_dim());
  for (std::size_t c = 0; c < cols.size(); ++c) {
    engine.face_column(i, c, one, cols[c]);
    canonicalize(cols[c]);
  }
  return SparseMat::from_columns(engine.target().total_dim(), std::move(cols));
}

SparseMat boundary(const Triple& t, int n) {
  require_degree(n, 1);
  FaceEngine engine(t, n);
  const Rat plus(1), minus(-1);
  std::vector<SparseVec> cols(engine.source().total_dim());
  for (std::size_t c = 0; c < cols.size(); ++c) {
    for (int i = 0; i <= n; ++i) engine.face_column(i, c, i % 2 == 0 ? plus : minus, cols[c]);
    canonicalize(cols[c]);
  }
  return SparseMat::from_columns(engine.target().total_dim(), std::move(cols));
}

SparseMat cyclic_operator(const Triple& t, int n) {
  require_degree(n, 0);
  const ChainSpace space(t.a().dim(), t.b().dim(), n);
  const Rat sign(n % 2 == 0 ? 1 : -1);
  const std::size_t slots = static_cast<std::size_t>(n) + 1;
  auto sigma = [&](int p) { return static_cast<int>((static_cast<std::size_t>(p) + 1) % slots); };
  std::vector<SparseVec> cols(space.total_dim());
  for (std::size_t c = 0; c < cols.size(); ++c) {
    const ChainIndex src = space.delinearize(c);
    ChainIndex dst = src;
    for (int p = 0; p <= n; ++p) dst.a[static_cast<std::size_t>(sigma(p))] = src.a[static_cast<std::size_t>(p)];
    for (int r = 0; r <= n; ++r) {
      for (int s = r + 1; s <= n; ++s) {
        int u = sigma(r), v = sigma(s);
        if (u > v) std::swap(u, v);
        dst.b_at(u, v) = src.b_at(r, s);
      }
    }
    cols[c].push_back({space.linearize(dst), sign});
  }
  return SparseMat::from_columns(space.total_dim(), std::move(cols));
}

Subspace cyclic_relations(const SparseMat& lambda) {
  return colspace(SparseMat::identity(lambda.cols()) - lambda);
}

std::optional<std::size_t> cyclic_compatibility_violation(const SparseMat& boundary,
                                                          const SparseMat& lambda,
                                                          const Subspace& lower_relations) {
  const SparseMat image = boundary * (SparseMat::identity(lambda.cols()) - lambda);
  for (std::size_t c = 0; c < image.cols(); ++c) {
    if (!lower_relations.contains(image.column(c))) return c;
  }
  return std::nullopt;
}

CyclicQuotient cyclic_quotient(const Triple& t, int n) {
  require_degree(n, 0);
  const SparseMat lambda = cyclic_operator(t, n);
  Subspace relations = cyclic_relations(lambda);
  if (n >= 1) {
    const Subspace lower = cyclic_relations(cyclic_operator(t, n - 1));
    if (auto bad = cyclic_compatibility_violation(boundary(t, n), lambda, lower)) {
      throw InternalError("boundary does not preserve Im(1 - lambda) in degree " +
                          std::to_string(n) + " (column " + std::to_string(*bad) + ")");
    }
  }
  const std::size_t ambient = lambda.cols();
  return CyclicQuotient{n, QuotientMap(ambient, std::move(relations))};
}

void write_triplets(std::ostream& out, const SparseMat& m) {
  const auto entries = m.triplets();
  out << m.rows() << ' ' << m.cols() << ' ' << entries.size() << '\n';
  for (const auto& e : entries) {
    out << e.row << ' ' << e.col << ' ' << e.value.get_num().get_str() << '/'
        << e.value.get_den().get_str() << '\n';
  }
}

SparseMat read_triplets(std::istream& in) {
  std::size_t rows = 0, cols = 0, nnz = 0;
  if (!(in >> rows >> cols >> nnz)) throw std::invalid_argument("triplet header: expected rows cols nnz");
  std::vector<Triplet> entries;
  entries.reserve(nnz);
  for (std::size_t e = 0; e < nnz; ++e) {
    std::size_t r = 0, c = 0;
    std::string value;
    if (!(in >> r >> c >> value)) {
      throw std::invalid_argument("triplet line " + std::to_string(e + 1) + ": expected row col p/q");
    }
    auto parsed = parse_rat(value);
    if (!parsed) throw std::invalid_argument("triplet line " + std::to_string(e + 1) + ": bad value '" + value + "'");
    entries.push_back({r, c, *parsed});
  }
  std::string extra;
  if (in >> extra) throw std::invalid_argument("triplet data has more entries than the header declares");
  return SparseMat::from_triplets(rows, cols, entries);
}

}  // namespace sechh
