#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace dualbent {

// Canonical index of a vector: little-endian sum of c_i p^i, factor 1 in the low digits.
using Index = std::uint64_t;

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Input violates a documented precondition (wrong p, shape mismatch, ...).
struct PreconditionError : Error {
  using Error::Error;
};

// A size guard refused the input. Raise with DUALBENT_GUARD_OVERRIDE.
struct GuardError : Error {
  using Error::Error;
};

// Internal cross-check disagreed with itself. Always a bug.
struct InconsistencyError : std::logic_error {
  using std::logic_error::logic_error;
};

enum class Guard {
  NaiveWalsh,           // p^n <= 2^16
  FastWalsh,            // p^n <= 2^21
  PdsBruteforce,        // |V| <= 2^12
  MatrixMaterialize,    // order <= 2^8
  PartitionAssignments, // <= 10^6 assignments
  FieldTable,           // single field order <= 2^24
};

// Base limit before any override.
std::uint64_t guard_base(Guard g);

// Limit after DUALBENT_GUARD_OVERRIDE: the variable holds a number of extra binary
// orders of magnitude (e.g. 2 multiplies every limit by 4).
std::uint64_t guard_limit(Guard g);

unsigned guard_override_bits();

const char* guard_name(Guard g);

// Throws GuardError when value exceeds the current limit.
void enforce_guard(Guard g, std::uint64_t value, const std::string& what);

// Integer power with overflow check.
std::uint64_t ipow(std::uint64_t base, unsigned exp);

}  // namespace dualbent
