#pragma once

#include <vector>

#include "dsorder/rational.hpp"

namespace dsorder {

/// A finite family of functions over a dense element numbering (poset
/// elements or global event indices). functions[l][x] is the value of the
/// l-th function at element x.
struct MultiUtility {
  std::vector<std::vector<Rational>> functions;

  std::size_t size() const { return functions.size(); }
  friend bool operator==(const MultiUtility&, const MultiUtility&) = default;
};

}  // namespace dsorder
