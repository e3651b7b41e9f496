#pragma once

// Exact arithmetic aliases, the error taxonomy, and the enumeration guard
// shared by every module.

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace nullcone {

using Int = mpz_class;  // arbitrary-precision integer
using Rat = mpq_class;  // exact rational, kept canonicalized

// Error kinds map 1:1 onto C API status codes and CLI exit codes.
struct DomainError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct ParamError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct ResourceError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
// An internal invariant failed; never expected on valid input.
struct InternalError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline Rat make_rat(long num, long den = 1) {
  Rat q(num, den);
  q.canonicalize();
  return q;
}

// Canonical text form: "p/q" in lowest terms, "p" when the denominator is 1.
inline std::string rat_str(const Rat& q) { return q.get_str(); }

Rat rat_from_str(const std::string& s);  // accepts "p" and "p/q"

// Work-counting guard for enumerations; throws ResourceError past the limit.
struct Guard {
  std::uint64_t limit = 10'000'000;
  std::uint64_t used = 0;

  void charge(std::uint64_t c = 1) {
    used += c;
    if (used > limit) throw ResourceError("enumeration guard exceeded (limit " + std::to_string(limit) + ")");
  }
};

}  // namespace nullcone
