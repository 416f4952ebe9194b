#include "sechh/cli.hpp"

#include <CLI11.hpp>

#include <cctype>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "sechh/chain_complex.hpp"
#include "sechh/differentials.hpp"
#include "sechh/errors.hpp"
#include "sechh/kernel_module.hpp"
#include "sechh/oracles.hpp"

namespace sechh::cli {

using nlohmann::ordered_json;

namespace {

// nlohmann turns 0.5 into a double and forgets how it was spelled, so decimal
// literals are caught on the raw text first.
void reject_decimals(std::string_view text) {
  bool in_string = false, escaped = false;
  std::size_t line = 1;
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (c == '\n') ++line;
    if (in_string) {
      if (escaped) escaped = false;
      else if (c == '\\') escaped = true;
      else if (c == '"') in_string = false;
      continue;
    }
    if (c == '"') {
      in_string = true;
      continue;
    }
    if (c != '-' && !std::isdigit(static_cast<unsigned char>(c))) continue;
    std::size_t j = i;
    while (j < text.size() && (std::isalnum(static_cast<unsigned char>(text[j])) || text[j] == '.' ||
                               text[j] == '+' || text[j] == '-')) {
      ++j;
    }
    const std::string_view token = text.substr(i, j - i);
    if (token.find_first_of(".eE") != std::string_view::npos) {
      throw ParseError("decimal number '" + std::string(token) + "' on line " + std::to_string(line) +
                       ": write exact rationals as integers or \"p/q\" strings");
    }
    i = j - 1;
  }
}

Rat read_rat(const ordered_json& v, const std::string& where) {
  if (v.is_number_integer()) return Rat(v.dump());
  if (v.is_string()) {
    const std::string s = v.get<std::string>();
    if (auto r = parse_rat(s)) return *r;
    throw ParseError(where + ": '" + s + "' is not an integer or p/q rational");
  }
  throw ParseError(where + ": expected an integer or \"p/q\" string, got " + v.dump());
}

std::size_t read_count(const ordered_json& v, const std::string& where) {
  if (!v.is_number_unsigned()) throw ParseError(where + ": expected a non-negative integer");
  return v.get<std::size_t>();
}

const ordered_json& field(const ordered_json& obj, const char* key, const std::string& where) {
  if (!obj.is_object() || !obj.contains(key)) throw ParseError(where + ": missing \"" + key + "\"");
  return obj.at(key);
}

FinAlgebra read_algebra(const ordered_json& obj, const std::string& where) {
  const std::size_t dim = read_count(field(obj, "dim", where), where + ".dim");
  if (dim == 0) throw ParseError(where + ".dim: algebra must have positive dimension");
  const ordered_json& unit = field(obj, "unit", where);
  if (!unit.is_array() || unit.size() != dim) {
    throw ParseError(where + ".unit: expected an array of " + std::to_string(dim) + " numbers");
  }
  Vec u;
  for (std::size_t i = 0; i < dim; ++i) u.push_back(read_rat(unit[i], where + ".unit[" + std::to_string(i) + "]"));
  const ordered_json& mult = field(obj, "mult", where);
  if (!mult.is_array()) throw ParseError(where + ".mult: expected an array of [i, j, k, value]");
  std::vector<StructureConstant> constants;
  std::map<std::tuple<std::size_t, std::size_t, std::size_t>, std::size_t> seen;
  for (std::size_t e = 0; e < mult.size(); ++e) {
    const std::string at = where + ".mult[" + std::to_string(e) + "]";
    const ordered_json& row = mult[e];
    if (!row.is_array() || row.size() != 4) throw ParseError(at + ": expected [i, j, k, value]");
    const std::size_t i = read_count(row[0], at), j = read_count(row[1], at), k = read_count(row[2], at);
    if (i >= dim || j >= dim || k >= dim) throw ParseError(at + ": index out of range for dim " + std::to_string(dim));
    if (!seen.emplace(std::make_tuple(i, j, k), e).second) {
      throw ParseError(at + ": duplicate entry for (" + std::to_string(i) + ", " + std::to_string(j) + ", " +
                       std::to_string(k) + ")");
    }
    constants.push_back({i, j, k, read_rat(row[3], at)});
  }
  return FinAlgebra(dim, constants, std::move(u));
}

ordered_json algebra_json(const FinAlgebra& a) {
  ordered_json out;
  out["dim"] = a.dim();
  ordered_json unit = ordered_json::array();
  for (const auto& x : a.unit()) unit.push_back(rat_json(x));
  out["unit"] = unit;
  ordered_json mult = ordered_json::array();
  for (const auto& c : a.structure_constants()) mult.push_back({c.i, c.j, c.k, rat_json(c.value)});
  out["mult"] = mult;
  return out;
}

// --- labels -----------------------------------------------------------------

std::string chain_label(const ChainSpace& s, std::size_t index) {
  const ChainIndex idx = s.delinearize(index);
  std::string out;
  for (std::size_t p = 0; p < idx.a.size(); ++p) out += (p ? "," : "") + std::to_string(idx.a[p]);
  out += "|";
  for (std::size_t p = 0; p < idx.b.size(); ++p) out += (p ? "," : "") + std::to_string(idx.b[p]);
  return out;
}

std::string symbol_label(const OmegaPresentation& p, std::size_t index) {
  const std::size_t k = index % p.dim_a, j = (index / p.dim_a) % p.dim_b, i = index / (p.dim_a * p.dim_b);
  return "e" + std::to_string(i) + " d(f" + std::to_string(j) + "⊗e" + std::to_string(k) + ")";
}

std::string tensor_label(std::size_t dim_a, std::size_t dim_b, std::size_t index) {
  const std::size_t k = index % dim_b, j = (index / dim_b) % dim_a, i = index / (dim_a * dim_b);
  return "e" + std::to_string(i) + "⊗e" + std::to_string(j) + "⊗f" + std::to_string(k);
}

template <class Label>
ordered_json labelled(const SparseVec& v, Label label) {
  ordered_json out = ordered_json::array();
  for (const auto& e : v) out.push_back({{"index", e.index}, {"coef", rat_json(e.value)}, {"basis", label(e.index)}});
  return out;
}

template <class Label>
std::string human_vec(const SparseVec& v, Label label) {
  if (v.empty()) return "0";
  std::string out;
  for (std::size_t n = 0; n < v.size(); ++n) {
    const Rat& c = v[n].value;
    out += n == 0 ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + ");
    const Rat mag = abs(c);
    if (mag != 1) out += to_string(mag) + "*";
    out += "[" + label(v[n].index) + "]";
  }
  return out;
}

// --- reports ----------------------------------------------------------------

ordered_json triple_json(const Triple& t) {
  return {{"name", t.name()},
          {"hash", hash_hex(triple_hash(t))},
          {"dim_A", t.a().dim()},
          {"dim_B", t.b().dim()},
          {"commutative", t.commutative()}};
}

ordered_json header(const char* command) {
  return {{"tool", kToolName}, {"version", kVersion}, {"command", command}};
}

ordered_json witness_json(const Witness& w) {
  return {{"description", w.description},
          {"vector", sparse_json(w.vector)},
          {"ambient_dim", w.target.ambient_dim()},
          {"target_dim", w.target.dim()}};
}

void print_report_human(std::ostream& out, const TheoremReport& r) {
  out << (r.passed ? "PASS " : "FAIL ") << theorem_name(r.theorem) << " on " << r.triple_id << "\n";
  out << "  dims:";
  for (const auto& [k, v] : r.dims) out << " " << k << "=" << v << ";";
  out << "\n";
  for (const auto& c : r.checks) {
    if (c.passed) continue;
    out << "  " << (c.gating ? "failed" : "note") << ": " << c.name << "\n";
    if (c.witness) {
      out << "    witness (" << c.witness->description << "): "
          << human_vec(c.witness->vector, [](std::size_t i) { return std::to_string(i); }) << "\n";
    }
  }
  for (const auto& n : r.notes) out << "  note: " << n << "\n";
}

struct Output {
  std::string format = "human";
  bool timing = false;
  bool machine() const { return format == "machine"; }
};

class Stopwatch {
 public:
  double ms() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

struct Source {
  std::string file;
  std::string catalog_name;
};

TripleSpec resolve(const Source& s) {
  if (!s.catalog_name.empty()) return {catalog(s.catalog_name), kDefaultMaxDegree};
  if (s.file.empty()) throw ParseError("no triple given: pass a file or --catalog NAME");
  return load_spec(s.file);
}

std::pair<int, int> parse_degrees(const std::string& text, int fallback_hi) {
  if (text.empty()) return {0, fallback_hi};
  const auto dash = text.find('-');
  auto num = [&](const std::string& s) {
    if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos) {
      throw ParseError("bad degree '" + text + "': expected N or N-M");
    }
    return std::stoi(s);
  };
  if (dash == std::string::npos) {
    const int n = num(text);
    return {n, n};
  }
  const int lo = num(text.substr(0, dash)), hi = num(text.substr(dash + 1));
  if (lo > hi) throw ParseError("bad degree range '" + text + "'");
  return {lo, hi};
}

// --- commands ---------------------------------------------------------------

int cmd_validate(const Source& src, const Output& o, std::ostream& out) {
  try {
    const TripleSpec spec = resolve(src);
    const Triple& t = spec.triple;
    if (o.machine()) {
      ordered_json j = header("validate");
      j["triple"] = triple_json(t);
      j["valid"] = true;
      out << j.dump(2) << "\n";
    } else {
      out << "valid triple '" << t.name() << "' (hash " << hash_hex(triple_hash(t)) << ")\n"
          << "  dim A = " << t.a().dim() << ", dim B = " << t.b().dim()
          << ", A " << (t.commutative() ? "commutative" : "not commutative") << "\n";
    }
    return kOk;
  } catch (const TripleError& e) {
    if (o.machine()) {
      ordered_json j = header("validate");
      j["valid"] = false;
      j["axiom"] = std::string(axiom_name(e.axiom()));
      j["message"] = e.what();
      ordered_json vec = ordered_json::array();
      for (const auto& x : e.witness_vector()) vec.push_back(rat_json(x));
      j["witness"] = {{"basis", e.witness_basis()}, {"vector", vec}};
      out << j.dump(2) << "\n";
    } else {
      out << "invalid: " << e.what() << "\n  witness basis:";
      for (auto b : e.witness_basis()) out << " " << b;
      out << "\n  witness vector:";
      for (const auto& x : e.witness_vector()) out << " " << to_string(x);
      out << "\n";
    }
    return kValidationError;
  }
}

struct ComputeArgs {
  std::string what;
  std::string degrees;
  int override_cap = -1;
  bool representatives = false;
  bool oracle = false;
};

int cmd_compute(const Source& src, const ComputeArgs& args, const Output& o, std::ostream& out,
                std::ostream& err) {
  const TripleSpec spec = resolve(src);
  const Triple& t = spec.triple;
  ordered_json j = header("compute");
  j["triple"] = triple_json(t);
  j["computation"] = args.what;
  ordered_json table = ordered_json::array();
  ordered_json reps = ordered_json::array();
  std::ostringstream human;
  Stopwatch clock;

  if (args.what == "hh" || args.what == "hc") {
    int cap = kDefaultMaxDegree;
    if (args.override_cap >= 0) {
      cap = args.override_cap;
      if (cap > kDefaultMaxDegree) {
        err << "warning: degree cap raised to " << cap
            << "; chain spaces grow like (dim A)^(n+1) (dim B)^(n(n+1)/2)\n";
      }
    }
    const auto [lo, hi] = parse_degrees(args.degrees, std::min(spec.max_degree, cap));
    if (hi > cap) {
      throw ResourceCapError("degree " + std::to_string(hi) + " exceeds the cap " + std::to_string(cap) +
                             "; pass --max-degree-override to raise it");
    }
    const Flavor flavor = args.what == "hh" ? Flavor::kHH : Flavor::kHC;
    human << "flavor degree dim\n";
    for (int n = lo; n <= hi; ++n) {
      const HomologyResult r = flavor == Flavor::kHH ? hh(t, n, {cap}) : hc(t, n, {cap});
      table.push_back({{"flavor", flavor_name(flavor)}, {"degree", n}, {"dim", r.dimension}});
      human << flavor_name(flavor) << "     " << n << "      " << r.dimension << "\n";
      if (args.oracle && t.b().dim() == 1) {
        const std::size_t ref = flavor == Flavor::kHH ? oracle::classical_hh(t.a(), n) : oracle::classical_hc(t.a(), n);
        table.back()["classical"] = ref;
        human << "  classical " << ref << "\n";
      }
      if (args.representatives) {
        const ChainSpace space(t.a().dim(), t.b().dim(), n);
        // HC representatives are shown through the section into chains
        auto chain = [&](const SparseVec& v) {
          return r.chain_quotient ? r.chain_quotient->section(v) : v;
        };
        auto label = [&](std::size_t i) { return chain_label(space, i); };
        ordered_json list = ordered_json::array();
        for (const auto& v : r.representatives) {
          list.push_back({{"coordinates", sparse_json(v)}, {"chain", labelled(chain(v), label)}});
          human << "  rep: " << human_vec(chain(v), label) << "\n";
        }
        reps.push_back({{"flavor", flavor_name(flavor)}, {"degree", n}, {"representatives", list}});
      }
    }
  } else if (args.what == "omega") {
    const OmegaPresentation p = omega(t);
    const Subspace d1a = d_one_A_subspace(p);
    table.push_back({{"flavor", "Omega ambient"}, {"degree", 1}, {"dim", p.ambient_dim()}});
    table.push_back({{"flavor", "Omega relations"}, {"degree", 1}, {"dim", p.relations.dim()}});
    table.push_back({{"flavor", "Omega"}, {"degree", 1}, {"dim", p.dim()}});
    table.push_back({{"flavor", "d(1⊗A)"}, {"degree", 1}, {"dim", d1a.dim()}});
    for (const auto& row : table) human << row["flavor"].get<std::string>() << ": " << row["dim"] << "\n";
    if (args.representatives) {
      auto label = [&](std::size_t i) { return symbol_label(p, i); };
      ordered_json list = ordered_json::array();
      for (std::size_t q = 0; q < p.dim(); ++q) {
        const SparseVec v = p.quotient.section({{q, Rat(1)}});
        list.push_back({{"coordinates", sparse_json({{q, Rat(1)}})}, {"symbol", labelled(v, label)}});
        human << "  basis: " << human_vec(v, label) << "\n";
      }
      reps.push_back({{"flavor", "Omega"}, {"degree", 1}, {"representatives", list}});
    }
  } else if (args.what == "kernel") {
    const KernelData k = kernel_data(t);
    const std::vector<std::pair<const char*, std::size_t>> rows = {
        {"J", k.j.dim()},
        {"J^2", k.j_squared.dim()},
        {"Jhat span", k.jhat.dim()},
        {"Jhat bimodule", k.jhat_module.dim()},
        {"J/(J^2+Jhat)", k.quotient.dim()},
        {"J/(J^2+Jhat span)", k.quotient_literal.dim()}};
    for (const auto& [name, d] : rows) {
      table.push_back({{"flavor", name}, {"degree", nullptr}, {"dim", d}});
      human << name << ": " << d << "\n";
    }
    j["readings_coincide"] = k.readings_coincide();
    j["symmetric"] = symmetry_check(t, k);
    human << "Jhat readings coincide: " << (k.readings_coincide() ? "yes" : "no") << "\n"
          << "A-symmetric: " << (j["symmetric"].get<bool>() ? "yes" : "no") << "\n";
    if (args.representatives) {
      auto label = [&](std::size_t i) { return tensor_label(t.a().dim(), t.b().dim(), i); };
      ordered_json list = ordered_json::array();
      for (const auto& v : k.quotient.representatives()) {
        list.push_back(labelled(v, label));
        human << "  rep: " << human_vec(v, label) << "\n";
      }
      reps.push_back({{"flavor", "J/(J^2+Jhat)"}, {"degree", nullptr}, {"representatives", list}});
    }
  } else {
    throw ParseError("unknown computation '" + args.what + "' (expected hh, hc, omega or kernel)");
  }

  j["dimensions"] = table;
  if (args.representatives) j["representatives"] = reps;
  if (o.timing) j["elapsed_ms"] = clock.ms();
  if (o.machine()) {
    out << j.dump(2) << "\n";
  } else {
    out << "triple '" << t.name() << "' (hash " << hash_hex(triple_hash(t)) << ")\n" << human.str();
    if (o.timing) out << "elapsed " << clock.ms() << " ms\n";
  }
  return kOk;
}

struct VerifyArgs {
  std::vector<std::string> theorems;
  bool all = false;
  bool catalog_given = false;
};

int cmd_verify(const Source& src, const VerifyArgs& args, const Output& o, std::ostream& out) {
  std::vector<TheoremId> selected;
  for (const auto& name : args.theorems) {
    auto id = parse_theorem(name);
    if (!id) throw ParseError("unknown theorem '" + name + "'");
    selected.push_back(*id);
  }
  const bool battery = args.catalog_given && src.catalog_name.empty();
  const bool everything = args.all || selected.empty();

  std::vector<Triple> triples;
  if (battery) {
    for (const auto& n : catalog_names()) triples.push_back(catalog(n));
  } else {
    triples.push_back(resolve(src).triple);
  }

  ordered_json j = header("verify");
  ordered_json results = ordered_json::array();
  std::size_t passed = 0, failed = 0, skipped = 0;
  Stopwatch total;
  for (const Triple& t : triples) {
    std::vector<TheoremId> ids = selected;
    if (everything) {
      ids = {TheoremId::kHh1Omega, TheoremId::kHc1Quotient, TheoremId::kOmegaKernel, TheoremId::kMain};
      if (t.b().dim() == 1) ids.push_back(TheoremId::kReduction);
    }
    ordered_json entry;
    entry["triple"] = triple_json(t);
    ordered_json reports = ordered_json::array();
    ordered_json skips = ordered_json::array();
    for (TheoremId id : ids) {
      const bool needs_commutative = id != TheoremId::kReduction;
      if (needs_commutative && !t.commutative()) {
        if (!battery) require_commutative(t, theorem_name(id));
        skips.push_back({{"theorem", theorem_name(id)}, {"reason", "requires a commutative triple"}});
        ++skipped;
        if (!o.machine()) out << "SKIP " << theorem_name(id) << " on " << t.name() << " (not commutative)\n";
        continue;
      }
      Stopwatch clock;
      const TheoremReport r = run_theorem(t, id);
      ordered_json rj = report_json(r);
      if (o.timing) rj["elapsed_ms"] = clock.ms();
      reports.push_back(rj);
      (r.passed ? passed : failed) += 1;
      if (!o.machine()) print_report_human(out, r);
    }
    entry["theorems"] = reports;
    entry["skipped"] = skips;
    results.push_back(entry);
  }
  j["results"] = results;
  j["summary"] = {{"passed", passed}, {"failed", failed}, {"skipped", skipped}};
  j["status"] = failed == 0 ? "pass" : "fail";
  if (o.timing) j["elapsed_ms"] = total.ms();
  if (o.machine()) {
    out << j.dump(2) << "\n";
  } else {
    out << passed << " passed, " << failed << " failed, " << skipped << " skipped\n";
  }
  return failed == 0 ? kOk : kVerifyFailed;
}

struct ExportArgs {
  std::string matrix;
  int degree = 1;
  int face = 0;
};

int cmd_export(const Source& src, const ExportArgs& args, std::ostream& out) {
  const TripleSpec spec = resolve(src);
  const Triple& t = spec.triple;
  if (args.matrix.empty()) {
    out << export_text(t, spec.max_degree);
    return kOk;
  }
  chain_dim(t.a().dim(), t.b().dim(), args.degree);
  if (args.matrix == "boundary") write_triplets(out, boundary(t, args.degree));
  else if (args.matrix == "lambda") write_triplets(out, cyclic_operator(t, args.degree));
  else if (args.matrix == "face") write_triplets(out, face_map(t, args.degree, args.face));
  else throw ParseError("unknown matrix '" + args.matrix + "' (expected boundary, lambda or face)");
  return kOk;
}

}  // namespace

// --- public helpers ---------------------------------------------------------

ordered_json rat_json(const Rat& r) {
  if (r.get_den() == 1 && r.get_num().fits_slong_p()) return r.get_num().get_si();
  return to_string(r);
}

ordered_json sparse_json(const SparseVec& v) {
  ordered_json out = ordered_json::array();
  for (const auto& e : v) out.push_back({e.index, rat_json(e.value)});
  return out;
}

ordered_json report_json(const TheoremReport& r) {
  ordered_json j;
  j["triple"] = r.triple_id;
  j["theorem"] = theorem_name(r.theorem);
  j["status"] = r.passed ? "pass" : "fail";
  ordered_json dims = ordered_json::object();
  for (const auto& [k, v] : r.dims) dims[k] = v;
  j["dims"] = dims;
  ordered_json checks = ordered_json::array();
  for (const auto& c : r.checks) {
    ordered_json cj = {{"name", c.name}, {"passed", c.passed}, {"gating", c.gating}};
    if (c.witness) cj["witness"] = witness_json(*c.witness);
    checks.push_back(cj);
  }
  j["checks"] = checks;
  j["notes"] = r.notes;
  return j;
}

TripleSpec parse_spec(std::string_view text) {
  reject_decimals(text);
  ordered_json doc;
  try {
    doc = ordered_json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ParseError("top level must be an object");
  std::string name;
  if (doc.contains("name")) {
    if (!doc["name"].is_string()) throw ParseError("name: expected a string");
    name = doc["name"].get<std::string>();
  }
  int max_degree = kDefaultMaxDegree;
  if (doc.contains("max_degree")) max_degree = static_cast<int>(read_count(doc["max_degree"], "max_degree"));
  FinAlgebra a = read_algebra(field(doc, "A", "triple"), "A");
  FinAlgebra b = read_algebra(field(doc, "B", "triple"), "B");
  const ordered_json& eps = field(doc, "eps", "triple");
  if (!eps.is_array() || eps.size() != a.dim()) {
    throw ParseError("eps: expected " + std::to_string(a.dim()) + " rows (dim A)");
  }
  std::vector<Triplet> entries;
  for (std::size_t i = 0; i < a.dim(); ++i) {
    const std::string at = "eps[" + std::to_string(i) + "]";
    if (!eps[i].is_array() || eps[i].size() != b.dim()) {
      throw ParseError(at + ": expected " + std::to_string(b.dim()) + " entries (dim B)");
    }
    for (std::size_t c = 0; c < b.dim(); ++c) {
      entries.push_back({i, c, read_rat(eps[i][c], at + "[" + std::to_string(c) + "]")});
    }
  }
  const SparseMat m = SparseMat::from_triplets(a.dim(), b.dim(), entries);
  return TripleSpec{make_triple(std::move(a), std::move(b), m, name), max_degree};
}

TripleSpec load_spec(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_spec(buf.str());
}

ordered_json export_spec(const Triple& t, int max_degree) {
  ordered_json j;
  j["name"] = t.name();
  j["max_degree"] = max_degree;
  j["A"] = algebra_json(t.a());
  j["B"] = algebra_json(t.b());
  ordered_json eps = ordered_json::array();
  for (std::size_t i = 0; i < t.a().dim(); ++i) {
    ordered_json row = ordered_json::array();
    for (std::size_t c = 0; c < t.b().dim(); ++c) row.push_back(rat_json(t.eps().matrix().at(i, c)));
    eps.push_back(row);
  }
  j["eps"] = eps;
  return j;
}

std::string export_text(const Triple& t, int max_degree) {
  // one structure constant or eps row per line
  const ordered_json j = export_spec(t, max_degree);
  std::ostringstream out;
  auto algebra = [&](const char* key) {
    const ordered_json& a = j[key];
    out << "  \"" << key << "\": {\n    \"dim\": " << a["dim"].dump() << ",\n    \"unit\": "
        << a["unit"].dump(-1) << ",\n    \"mult\": [";
    for (std::size_t i = 0; i < a["mult"].size(); ++i) {
      out << (i ? "," : "") << "\n      " << a["mult"][i].dump(-1);
    }
    out << (a["mult"].empty() ? "]" : "\n    ]") << "\n  },\n";
  };
  out << "{\n  \"name\": " << j["name"].dump() << ",\n  \"max_degree\": " << j["max_degree"].dump() << ",\n";
  algebra("A");
  algebra("B");
  out << "  \"eps\": [";
  for (std::size_t i = 0; i < j["eps"].size(); ++i) out << (i ? "," : "") << "\n    " << j["eps"][i].dump(-1);
  out << "\n  ]\n}\n";
  return out.str();
}

std::uint64_t triple_hash(const Triple& t) {
  ordered_json j = export_spec(t);
  j.erase("name");
  j.erase("max_degree");
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : j.dump()) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

std::string hash_hex(std::uint64_t h) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Secondary Hochschild and cyclic homology of finite-dimensional triples", kToolName};
  app.require_subcommand(1);
  app.fallthrough();
  Output o;
  app.add_option("--format", o.format, "human or machine")
      ->check(CLI::IsMember({"human", "machine"}))
      ->capture_default_str();
  app.add_flag("--timing", o.timing, "include wall-clock timings (breaks byte-stability)");

  Source src;
  auto add_source = [&](CLI::App* sub) {
    sub->add_option("file", src.file, "triple file (JSON)");
    return sub->add_option("--catalog", src.catalog_name, "use a built-in triple");
  };

  CLI::App* validate = app.add_subcommand("validate", "parse and validate a triple");
  add_source(validate);

  ComputeArgs compute_args;
  CLI::App* compute = app.add_subcommand("compute", "dimension tables for hh, hc, omega or kernel");
  compute->add_option("what", compute_args.what, "hh, hc, omega or kernel")->required();
  add_source(compute);
  compute->add_option("--degree", compute_args.degrees, "N or N-M (default 0..max_degree)");
  compute->add_option("--max-degree-override", compute_args.override_cap, "raise the degree cap");
  compute->add_flag("--representatives", compute_args.representatives, "print representatives");
  compute->add_flag("--oracle", compute_args.oracle)->group("");

  VerifyArgs verify_args;
  CLI::App* verify = app.add_subcommand("verify", "run theorem checks");
  verify->add_option("file", src.file, "triple file (JSON)");
  CLI::Option* cat = verify->add_option("--catalog", src.catalog_name,
                                        "a built-in triple, or the whole catalog when no name is given")
                         ->expected(0, 1);
  verify->add_option("--theorem", verify_args.theorems,
                     "hh1_omega, hc1_quotient, omega_kernel, main or reduction");
  verify->add_flag("--all", verify_args.all, "every applicable theorem");

  ExportArgs export_args;
  CLI::App* exp = app.add_subcommand("export", "write a triple file or a sparse matrix");
  add_source(exp);
  exp->add_option("--matrix", export_args.matrix, "boundary, lambda or face (triplet format)");
  exp->add_option("--degree", export_args.degree, "chain degree for --matrix");
  exp->add_option("--face", export_args.face, "face index for --matrix face");

  try {
    std::vector<std::string> args;
    for (int i = argc - 1; i > 0; --i) args.emplace_back(argv[i]);
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kParseError;
  }

  try {
    if (*validate) return cmd_validate(src, o, out);
    if (*compute) return cmd_compute(src, compute_args, o, out, err);
    if (*verify) {
      verify_args.catalog_given = cat->count() > 0;
      return cmd_verify(src, verify_args, o, out);
    }
    if (*exp) return cmd_export(src, export_args, out);
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kParseError;
  } catch (const TripleError& e) {
    err << "invalid triple: " << e.what() << "\n";
    return kValidationError;
  } catch (const NonCommutativeError& e) {
    err << "precondition: " << e.what() << "\n";
    return kValidationError;
  } catch (const ResourceCapError& e) {
    err << "resource cap: " << e.what() << "\n";
    return kResourceCap;
  } catch (const DimensionError& e) {
    err << "parse error: " << e.what() << "\n";
    return kParseError;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kParseError;
  }
  return kOk;
}

}  // namespace sechh::cli
