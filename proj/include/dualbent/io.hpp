#pragma once

#include <string>
#include <string_view>

#include "dualbent/partitions.hpp"

namespace dualbent {

// Malformed input file; line and column are 1-based.
struct ParseError : PreconditionError {
  std::size_t line = 0, column = 0;
  ParseError(std::size_t line, std::size_t column, const std::string& msg);
};

// Line 1 "p=<p> n=<n> m=<m>", line 2 the domain header, an optional line 3 with the
// codomain header (default: standard field of degree m), then p^n lines of m base-p
// digits, least significant first, in canonical index order.
VFunc parse_function(std::string_view text);
std::string format_function(const VFunc& F);

// Same headers, then p^n lines holding the part index (canonical index in V_m) of x.
PartitionSpec parse_partition(std::string_view text);
std::string format_partition(const PartitionSpec& G);

std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view content);

std::string sha256_hex(std::string_view data);

}  // namespace dualbent
