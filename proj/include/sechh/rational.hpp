#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace sechh {

/// Exact rational number. GMP keeps every value in lowest terms with a
/// positive denominator, and zero as 0/1.
using Rat = mpq_class;

/// Dense coordinate vector over the rationals.
using Vec = std::vector<Rat>;

/// p/q in canonical form. Throws std::invalid_argument when q == 0.
Rat make_rat(long p, long q = 1);

/// Parses "p", "-p", "+p" or "p/q" with decimal digits only. Anything else
/// (decimal points, exponents, whitespace, q == 0) yields nullopt.
std::optional<Rat> parse_rat(std::string_view text);

/// "p" for integers, "p/q" otherwise.
std::string to_string(const Rat& r);

/// True if the value is stored in lowest terms with positive denominator.
bool is_canonical(const Rat& r);

Vec zero_vec(std::size_t n);
Vec unit_vec(std::size_t n, std::size_t i);
bool is_zero(const Vec& v);

}  // namespace sechh
