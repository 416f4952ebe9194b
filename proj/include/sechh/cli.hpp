#pragma once

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>

#include <json.hpp>

#include "sechh/homology.hpp"
#include "sechh/triple.hpp"
#include "sechh/verify.hpp"

namespace sechh::cli {

inline constexpr const char* kToolName = "sechh";
inline constexpr const char* kVersion = "0.1.0";

enum ExitCode : int {
  kOk = 0,
  kVerifyFailed = 1,
  kParseError = 2,
  kValidationError = 3,
  kResourceCap = 4,
};

/// Malformed triple file (syntax, shape, or a non-exact number).
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct TripleSpec {
  Triple triple;
  int max_degree = kDefaultMaxDegree;
};

/// JSON triple file:
///   {"name": "...", "max_degree": 3,
///    "A": {"dim": d, "unit": [...], "mult": [[i, j, k, c], ...]},
///    "B": {...},
///    "eps": [[...], ...]}          (dim A rows, dim B columns)
/// Numbers are integers or "p/q" strings. Throws ParseError for bad input and
/// TripleError when the data parse but do not form a triple.
TripleSpec parse_spec(std::string_view text);
TripleSpec load_spec(const std::string& path);

nlohmann::ordered_json export_spec(const Triple& t, int max_degree = kDefaultMaxDegree);
std::string export_text(const Triple& t, int max_degree = kDefaultMaxDegree);

/// FNV-1a over the exported algebra data (name and max_degree excluded).
std::uint64_t triple_hash(const Triple& t);
std::string hash_hex(std::uint64_t h);

nlohmann::ordered_json rat_json(const Rat& r);
nlohmann::ordered_json sparse_json(const SparseVec& v);
nlohmann::ordered_json report_json(const TheoremReport& r);

/// Entry point behind the `sechh` binary.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace sechh::cli
