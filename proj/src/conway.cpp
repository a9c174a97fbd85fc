#include <map>
#include <utility>

#include "dualbent/field.hpp"

namespace dualbent {

namespace {

// Conway polynomials, coefficients constant term first.
const std::map<std::pair<unsigned, unsigned>, Poly>& table() {
  static const std::map<std::pair<unsigned, unsigned>, Poly> t = {
      {{2, 1}, {1, 1}},
      {{2, 2}, {1, 1, 1}},
      {{2, 3}, {1, 1, 0, 1}},
      {{2, 4}, {1, 1, 0, 0, 1}},
      {{2, 5}, {1, 0, 1, 0, 0, 1}},
      {{2, 6}, {1, 1, 0, 1, 1, 0, 1}},
      {{2, 7}, {1, 1, 0, 0, 0, 0, 0, 1}},
      {{2, 8}, {1, 0, 1, 1, 1, 0, 0, 0, 1}},
      {{2, 9}, {1, 0, 0, 0, 1, 0, 0, 0, 0, 1}},
      {{3, 1}, {1, 1}},
      {{3, 2}, {2, 2, 1}},
      {{3, 3}, {1, 2, 0, 1}},
      {{3, 4}, {2, 0, 0, 2, 1}},
      {{3, 5}, {1, 2, 0, 0, 0, 1}},
      {{3, 6}, {2, 2, 1, 0, 2, 0, 1}},
      {{3, 7}, {1, 0, 2, 0, 0, 0, 0, 1}},
      {{3, 8}, {2, 2, 2, 0, 1, 2, 0, 0, 1}},
      {{3, 9}, {1, 1, 2, 2, 0, 0, 0, 0, 0, 1}},
      {{5, 1}, {3, 1}},
      {{5, 2}, {2, 4, 1}},
      {{5, 3}, {3, 3, 0, 1}},
      {{5, 4}, {2, 4, 4, 0, 1}},
      {{5, 5}, {3, 4, 0, 0, 0, 1}},
      {{5, 6}, {2, 0, 1, 4, 1, 0, 1}},
      {{5, 7}, {3, 3, 0, 0, 0, 0, 0, 1}},
      {{5, 8}, {2, 4, 3, 0, 1, 0, 0, 0, 1}},
      {{5, 9}, {3, 1, 0, 2, 0, 0, 0, 0, 0, 1}},
      {{7, 1}, {4, 1}},
      {{7, 2}, {3, 6, 1}},
      {{7, 3}, {4, 0, 6, 1}},
      {{7, 4}, {3, 4, 5, 0, 1}},
  };
  return t;
}

}  // namespace

std::optional<Poly> conway_table(unsigned p, unsigned k) {
  auto it = table().find({p, k});
  if (it == table().end()) return std::nullopt;
  return it->second;
}

}  // namespace dualbent
