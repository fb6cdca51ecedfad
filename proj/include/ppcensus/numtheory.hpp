#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "ppcensus/bigint.hpp"
#include "ppcensus/errors.hpp"

namespace ppcensus::numtheory {

struct prime_power {
  std::uint64_t prime = 0;
  unsigned exponent = 0;
  bool operator==(const prime_power&) const = default;
};

// Canonical prime-power decomposition, primes strictly increasing.
// m == 1 has an empty factor list.
struct factorization {
  std::uint64_t m = 1;
  std::vector<prime_power> factors;

  std::vector<std::uint64_t> distinct_primes() const;
  std::vector<std::uint64_t> distinct_odd_primes() const;
  // Exponent of 2 in m.
  unsigned two_exponent() const;
};

// Trial division with early exit. m stays small (a few hundred in sweeps),
// so nothing faster is warranted. Throws std::domain_error for m == 0.
factorization factorize(std::uint64_t m);

// A total, deterministic map m -> integer on 1..horizon. Values are computed
// eagerly at construction, so instances are immutable and freely shareable
// across threads.
class integer_sequence {
 public:
  integer_sequence() = default;
  integer_sequence(std::string label, std::vector<bigint> values);

  static integer_sequence tabulate(std::string label, std::uint64_t horizon,
                                   const std::function<bigint(std::uint64_t)>& eval);

  // Value at m (1-based). Throws std::domain_error for m == 0 and
  // horizon_too_small beyond the horizon.
  const bigint& at(std::uint64_t m) const;
  const bigint& operator()(std::uint64_t m) const { return at(m); }

  std::uint64_t horizon() const { return values_.size(); }
  const std::string& label() const { return label_; }

  // Copy with the value at m shifted by delta. Test hook for the
  // negative-control checks; the census over a perturbed sequence must
  // trip a divisibility_violation.
  integer_sequence perturbed(std::uint64_t m, const bigint& delta) const;

 private:
  std::string label_;
  std::vector<bigint> values_;
};

// Alternating inclusion-exclusion over all subsets of the distinct primes
// of m: sum of (-1)^|S| seq(m / prod S). phi1(1, seq) = seq(1).
bigint phi1(std::uint64_t m, const integer_sequence& seq);

// Same alternating sum but over the distinct ODD primes only; the power of
// two is never divided out. For m = 2^k (k >= 0, including m = 1) the value
// is seq(m) - 1.
bigint phi2(std::uint64_t m, const integer_sequence& seq);

enum class census_kind { fixed, symmetric };

struct census_result {
  bigint count;   // phi1 (fixed) or phi2 (symmetric) value at m
  bigint orbits;  // count / m, resp. count / (2m); division always exact
};

// Minimal-period census. kind 'fixed' treats seq as a count of solutions of
// f^m(x) = x and divides phi1 by m; 'symmetric' treats seq as a count of
// solutions of f^m(x) = -x and divides phi2 by 2m. Inexact division throws
// divisibility_violation.
census_result census(const integer_sequence& seq, std::uint64_t m, census_kind kind);

// Congruence check for the power family seq(m) = n^m:
// fixed:     phi1(m, n^m) == 0 (mod m)      for n >= 2
// symmetric: phi2(m, n^m) == 0 (mod 2m)     for odd n > 1
// Throws std::domain_error for symmetric with even n.
bool corollary2_check(std::uint64_t m, std::uint64_t n, census_kind kind);

}  // namespace ppcensus::numtheory
