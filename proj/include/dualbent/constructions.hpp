#pragma once

#include <map>
#include <string>

#include "dualbent/vdb.hpp"

namespace dualbent {

// Tag plus string parameters. Field elements are given as exponents of the default
// primitive element ("0" is 1, "z" is zero); lists are comma separated.
struct ConstructionId {
  std::string tag;
  std::map<std::string, std::string> params;

  // "tag" or "tag:key=value;key=value"
  static ConstructionId parse(const std::string& text);
  std::string to_string() const;
};

// Tags: example1..example5, cor5_quadratic, cor6_composite, mm_trace_monomial.
VFunc instantiate(const ConstructionId& id);

struct PropertySheet {
  std::string feasibility;  // verify_full or verify_reduced_only
  std::map<std::string, std::string> expectations;
};

PropertySheet expected_properties(const ConstructionId& id);

// Named constructors for the fixed examples.
ConstructionId example_id(int k);

// cor6_composite at p = 5 with r1 = r2 = m = 2: the shape of example5 at desk scale.
ConstructionId example5_reduced_id();

}  // namespace dualbent
