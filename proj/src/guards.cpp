#include "dualbent/common.hpp"

#include <cstdlib>
#include <limits>

namespace dualbent {

std::uint64_t guard_base(Guard g) {
  switch (g) {
    case Guard::NaiveWalsh: return 1ull << 16;
    case Guard::FastWalsh: return 1ull << 21;
    case Guard::PdsBruteforce: return 1ull << 12;
    case Guard::MatrixMaterialize: return 1ull << 8;
    case Guard::PartitionAssignments: return 1000000ull;
    case Guard::FieldTable: return 1ull << 24;
  }
  return 0;
}

unsigned guard_override_bits() {
  static const unsigned bits = [] {
    const char* env = std::getenv("DUALBENT_GUARD_OVERRIDE");
    if (!env || !*env) return 0u;
    char* end = nullptr;
    unsigned long v = std::strtoul(env, &end, 10);
    if (*end != '\0' || v > 40) return 0u;
    return static_cast<unsigned>(v);
  }();
  return bits;
}

std::uint64_t guard_limit(Guard g) {
  std::uint64_t base = guard_base(g);
  unsigned bits = guard_override_bits();
  if (bits == 0) return base;
  if (base > (std::numeric_limits<std::uint64_t>::max() >> bits)) {
    return std::numeric_limits<std::uint64_t>::max();
  }
  return base << bits;
}

const char* guard_name(Guard g) {
  switch (g) {
    case Guard::NaiveWalsh: return "naive_walsh";
    case Guard::FastWalsh: return "fast_walsh";
    case Guard::PdsBruteforce: return "pds_bruteforce";
    case Guard::MatrixMaterialize: return "matrix_materialize";
    case Guard::PartitionAssignments: return "partition_assignments";
    case Guard::FieldTable: return "field_table";
  }
  return "?";
}

void enforce_guard(Guard g, std::uint64_t value, const std::string& what) {
  std::uint64_t limit = guard_limit(g);
  if (value > limit) {
    throw GuardError(what + ": size " + std::to_string(value) + " exceeds guard " +
                     guard_name(g) + "=" + std::to_string(limit));
  }
}

std::uint64_t ipow(std::uint64_t base, unsigned exp) {
  std::uint64_t r = 1;
  for (unsigned i = 0; i < exp; ++i) {
    if (base != 0 && r > std::numeric_limits<std::uint64_t>::max() / base) {
      throw GuardError("integer power overflows 64 bits");
    }
    r *= base;
  }
  return r;
}

}  // namespace dualbent
