#pragma once

#include <string>
#include <vector>

#include "bits.hpp"
#include "dsorder/poset.hpp"

namespace dsorder {

/// Library-internal construction of StrictPoset from a closed bit matrix.
struct PosetAccess {
  /// `closed` must be transitively closed and irreflexive.
  static StrictPoset from_closed(std::vector<std::string> names, const detail::BitMatrix& closed) {
    StrictPoset p;
    p.names_ = std::move(names);
    const std::size_t n = p.names_.size();
    p.words_ = (n + 63) / 64;
    p.bits_.assign(n * p.words_, 0);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (closed.test(i, j)) p.bits_[i * p.words_ + j / 64] |= std::uint64_t{1} << (j % 64);
      }
    }
    return p;
  }

  static detail::BitMatrix to_matrix(const StrictPoset& p) {
    detail::BitMatrix m(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) {
      for (std::size_t j = 0; j < p.size(); ++j) {
        if (p.less(i, j)) m.set(i, j);
      }
    }
    return m;
  }
};

}  // namespace dsorder
