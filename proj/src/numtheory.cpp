#include "ppcensus/numtheory.hpp"

#include <stdexcept>
#include <utility>

namespace ppcensus {

std::string to_decimal(const rational& r, std::size_t digits) {
  rational x = r;
  const bool neg = sgn(x) < 0;
  if (neg) x = -x;
  bigint ip = x.get_num() / x.get_den();  // truncated quotient; x >= 0
  std::string out = neg ? "-" : "";
  out += ip.get_str();
  if (digits > 0) {
    bigint scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits));
    bigint frac_num = x.get_num() - ip * x.get_den();
    bigint scaled = (frac_num * scale) / x.get_den();
    std::string f = scaled.get_str();
    out += '.';
    out += std::string(digits - f.size(), '0');
    out += f;
  }
  return out;
}

bigint pow_uint(std::uint64_t base, std::uint64_t exp) {
  bigint b(static_cast<unsigned long>(base));
  bigint out;
  mpz_pow_ui(out.get_mpz_t(), b.get_mpz_t(), static_cast<unsigned long>(exp));
  return out;
}

}  // namespace ppcensus

namespace ppcensus::numtheory {

std::vector<std::uint64_t> factorization::distinct_primes() const {
  std::vector<std::uint64_t> out;
  out.reserve(factors.size());
  for (const auto& pp : factors) out.push_back(pp.prime);
  return out;
}

std::vector<std::uint64_t> factorization::distinct_odd_primes() const {
  std::vector<std::uint64_t> out;
  for (const auto& pp : factors)
    if (pp.prime != 2) out.push_back(pp.prime);
  return out;
}

unsigned factorization::two_exponent() const {
  for (const auto& pp : factors)
    if (pp.prime == 2) return pp.exponent;
  return 0;
}

factorization factorize(std::uint64_t m) {
  if (m == 0) throw std::domain_error("factorize: m must be positive");
  factorization out;
  out.m = m;
  std::uint64_t rest = m;
  auto strip = [&](std::uint64_t p) {
    unsigned e = 0;
    while (rest % p == 0) {
      rest /= p;
      ++e;
    }
    if (e > 0) out.factors.push_back({p, e});
  };
  strip(2);
  for (std::uint64_t p = 3; p <= rest / p; p += 2) strip(p);
  if (rest > 1) out.factors.push_back({rest, 1});
  return out;
}

integer_sequence::integer_sequence(std::string label, std::vector<bigint> values)
    : label_(std::move(label)), values_(std::move(values)) {}

integer_sequence integer_sequence::tabulate(std::string label, std::uint64_t horizon,
                                            const std::function<bigint(std::uint64_t)>& eval) {
  std::vector<bigint> values;
  values.reserve(horizon);
  for (std::uint64_t m = 1; m <= horizon; ++m) values.push_back(eval(m));
  return integer_sequence(std::move(label), std::move(values));
}

const bigint& integer_sequence::at(std::uint64_t m) const {
  if (m == 0) throw std::domain_error("integer_sequence: m must be positive");
  if (m > values_.size())
    throw horizon_too_small(label_ + "(" + std::to_string(m) + ") beyond horizon " +
                            std::to_string(values_.size()));
  return values_[m - 1];
}

integer_sequence integer_sequence::perturbed(std::uint64_t m, const bigint& delta) const {
  std::vector<bigint> values = values_;
  if (m == 0 || m > values.size())
    throw std::domain_error("perturbed: index outside horizon");
  values[m - 1] += delta;
  return integer_sequence(label_ + "+corrupt@" + std::to_string(m), std::move(values));
}

namespace {

// Alternating subset sum over the given prime list: for every subset S,
// (-1)^|S| seq(m / prod S). Prime products are squarefree divisors of m,
// so the divisions are exact.
bigint alternating_subset_sum(std::uint64_t m, const std::vector<std::uint64_t>& primes,
                              const integer_sequence& seq) {
  const std::uint32_t subsets = std::uint32_t{1} << primes.size();
  bigint total = 0;
  for (std::uint32_t mask = 0; mask < subsets; ++mask) {
    std::uint64_t d = 1;
    int bits = 0;
    for (std::size_t i = 0; i < primes.size(); ++i)
      if (mask & (std::uint32_t{1} << i)) {
        d *= primes[i];
        ++bits;
      }
    if (bits % 2 == 0)
      total += seq.at(m / d);
    else
      total -= seq.at(m / d);
  }
  return total;
}

}  // namespace

bigint phi1(std::uint64_t m, const integer_sequence& seq) {
  if (m == 0) throw std::domain_error("phi1: m must be positive");
  return alternating_subset_sum(m, factorize(m).distinct_primes(), seq);
}

bigint phi2(std::uint64_t m, const integer_sequence& seq) {
  if (m == 0) throw std::domain_error("phi2: m must be positive");
  const auto odd = factorize(m).distinct_odd_primes();
  if (odd.empty()) return seq.at(m) - 1;  // m = 2^k, k >= 0
  return alternating_subset_sum(m, odd, seq);
}

census_result census(const integer_sequence& seq, std::uint64_t m, census_kind kind) {
  bigint count = kind == census_kind::fixed ? phi1(m, seq) : phi2(m, seq);
  const std::uint64_t modulus = kind == census_kind::fixed ? m : 2 * m;
  bigint q, r;
  mpz_tdiv_qr_ui(q.get_mpz_t(), r.get_mpz_t(), count.get_mpz_t(),
                 static_cast<unsigned long>(modulus));
  if (r != 0)
    throw divisibility_violation("census: " + seq.label() + " at m=" + std::to_string(m) +
                                     ": " + count.get_str() + " not divisible by " +
                                     std::to_string(modulus),
                                 m, modulus);
  return {std::move(count), std::move(q)};
}

bool corollary2_check(std::uint64_t m, std::uint64_t n, census_kind kind) {
  if (m == 0) throw std::domain_error("corollary2_check: m must be positive");
  if (n < 2) throw std::domain_error("corollary2_check: n must be >= 2");
  if (kind == census_kind::symmetric && n % 2 == 0)
    throw std::domain_error("corollary2_check: symmetric kind requires odd n");
  auto powers = integer_sequence::tabulate(
      "pow" + std::to_string(n), m, [n](std::uint64_t k) { return pow_uint(n, k); });
  bigint value = kind == census_kind::fixed ? phi1(m, powers) : phi2(m, powers);
  const std::uint64_t modulus = kind == census_kind::fixed ? m : 2 * m;
  return mpz_divisible_ui_p(value.get_mpz_t(), static_cast<unsigned long>(modulus)) != 0;
}

}  // namespace ppcensus::numtheory
