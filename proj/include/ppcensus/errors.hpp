#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace ppcensus {

// A census quotient failed to divide exactly. This is the falsifiable content
// of the orbit-count identities, so it is an error rather than a report value.
class divisibility_violation : public std::runtime_error {
 public:
  divisibility_violation(const std::string& what, std::uint64_t m, std::uint64_t modulus)
      : std::runtime_error(what), m_(m), modulus_(modulus) {}
  std::uint64_t m() const { return m_; }
  std::uint64_t modulus() const { return modulus_; }

 private:
  std::uint64_t m_;
  std::uint64_t modulus_;
};

// A table or sequence was asked for an index beyond its computed horizon.
// The message names the exact missing entry.
class horizon_too_small : public std::out_of_range {
 public:
  explicit horizon_too_small(const std::string& missing_entry)
      : std::out_of_range("horizon too small: missing " + missing_entry),
        missing_entry_(missing_entry) {}
  const std::string& missing_entry() const { return missing_entry_; }

 private:
  std::string missing_entry_;
};

// An exponentially growing computation hit its configured size cap.
class budget_exceeded : public std::runtime_error {
 public:
  budget_exceeded(const std::string& what, std::size_t requested, std::size_t budget)
      : std::runtime_error(what), requested_(requested), budget_(budget) {}
  std::size_t requested() const { return requested_; }
  std::size_t budget() const { return budget_; }

 private:
  std::size_t requested_;
  std::size_t budget_;
};

// Evaluation point outside a map's domain.
class out_of_domain : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// A map's node y-values are not a subset of its node x-values, so the
// symbolic representation calculus does not apply.
class closure_violation : public std::runtime_error {
 public:
  explicit closure_violation(const std::string& what) : std::runtime_error(what) {}
};

// A word contains a directed edge with no rewriting rule.
class missing_rule : public std::runtime_error {
 public:
  missing_rule(int from, int to)
      : std::runtime_error("no rule for edge (" + std::to_string(from) + "," +
                           std::to_string(to) + ")"),
        from_(from),
        to_(to) {}
  int from() const { return from_; }
  int to() const { return to_; }

 private:
  int from_;
  int to_;
};

// A lap coincides identically with the target line y = sign*x.
class infinite_solutions : public std::runtime_error {
 public:
  explicit infinite_solutions(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace ppcensus
