#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace ppcensus {

// Exactness carriers for the whole project. Every count, table entry and
// coordinate is either an arbitrary-precision integer or a reduced rational;
// no floating point enters any counting path.
using bigint = mpz_class;
using rational = mpq_class;

inline std::string to_decimal(const bigint& v) { return v.get_str(); }

// Decimal expansion of a rational, truncated (not rounded) to `digits`
// fractional digits. Deterministic; used for report output only.
std::string to_decimal(const rational& r, std::size_t digits);

bigint pow_uint(std::uint64_t base, std::uint64_t exp);

}  // namespace ppcensus
