#include <algorithm>
#include <array>
#include <cstdint>

#include "bits.hpp"
#include "dsorder/error.hpp"
#include "dsorder/poset.hpp"
#include "poset_access.hpp"

namespace dsorder {
namespace {

/// Lexicographically least topological order of a closed relation.
std::vector<std::size_t> linearize(const detail::BitMatrix& closed) {
  const std::size_t n = closed.size();
  std::vector<std::size_t> pending(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (closed.test(i, j)) ++pending[j];
    }
  }
  std::vector<char> used(n, 0);
  std::vector<std::size_t> order;
  order.reserve(n);
  while (order.size() < n) {
    std::size_t pick = n;
    for (std::size_t x = 0; x < n; ++x) {
      if (!used[x] && pending[x] == 0) {
        pick = x;
        break;
      }
    }
    if (pick == n) throw Error("internal: cyclic extension constraints");
    used[pick] = 1;
    order.push_back(pick);
    for (std::size_t y = 0; y < n; ++y) {
      if (closed.test(pick, y)) --pending[y];
    }
  }
  return order;
}

/// Small-poset closure with one 16-bit row per element (n <= 10 fits).
struct SmallClosure {
  std::array<std::uint16_t, kMaxDimensionElements> succ{};

  bool less(std::size_t i, std::size_t j) const { return (succ[i] >> j) & 1U; }

  void add(std::size_t i, std::size_t j, std::size_t n) {
    const std::uint16_t gain = static_cast<std::uint16_t>(succ[j] | (1U << j));
    for (std::size_t u = 0; u < n; ++u) {
      if (u == i || less(u, i)) succ[u] = static_cast<std::uint16_t>(succ[u] | gain);
    }
  }
};

class DimensionSearch {
 public:
  DimensionSearch(const StrictPoset& p, std::vector<ElementPair> pairs, std::uint64_t budget)
      : n_(p.size()), pairs_(std::move(pairs)), budget_(budget) {
    for (std::size_t i = 0; i < n_; ++i) {
      for (std::size_t j = 0; j < n_; ++j) {
        if (p.less(i, j)) base_.succ[i] = static_cast<std::uint16_t>(base_.succ[i] | (1U << j));
      }
    }
  }

  /// Colors critical pairs with at most k extensions; fills `colors` on success.
  bool solve(std::size_t k, std::vector<SmallClosure>& colors) {
    colors.assign(k, base_);
    return assign(0, 0, k, colors);
  }

 private:
  bool assign(std::size_t next, std::size_t used, std::size_t k, std::vector<SmallClosure>& colors) {
    if (next == pairs_.size()) return true;
    if (++steps_ > budget_) throw BudgetExceeded("order dimension search exceeded its step budget");
    const auto [a, b] = pairs_[next];
    // Already reversed somewhere: nothing to decide.
    for (std::size_t c = 0; c < used; ++c) {
      if (colors[c].less(b, a)) return assign(next + 1, used, k, colors);
    }
    // New colors are interchangeable, so only the first unused one is tried.
    const std::size_t limit = std::min(used + 1, k);
    for (std::size_t c = 0; c < limit; ++c) {
      if (colors[c].less(a, b)) continue;
      const SmallClosure saved = colors[c];
      colors[c].add(b, a, n_);
      if (assign(next + 1, std::max(used, c + 1), k, colors)) return true;
      colors[c] = saved;
    }
    return false;
  }

  std::size_t n_;
  std::vector<ElementPair> pairs_;
  std::uint64_t budget_;
  std::uint64_t steps_ = 0;
  SmallClosure base_;
};

detail::BitMatrix to_bits(const SmallClosure& c, std::size_t n) {
  detail::BitMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (c.less(i, j)) m.set(i, j);
    }
  }
  return m;
}

}  // namespace

std::vector<ElementPair> critical_pairs(const StrictPoset& p) {
  const std::size_t n = p.size();
  std::vector<ElementPair> out;
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (!p.incomparable(a, b)) continue;
      bool critical = true;
      for (std::size_t z = 0; z < n && critical; ++z) {
        if (p.less(z, a) && !p.less(z, b)) critical = false;
        if (p.less(b, z) && !p.less(a, z)) critical = false;
      }
      if (critical) out.emplace_back(a, b);
    }
  }
  return out;
}

DimensionResult order_dimension(const StrictPoset& p, std::uint64_t step_budget) {
  const std::size_t n = p.size();
  if (n > kMaxDimensionElements) {
    throw Error("order_dimension is limited to " + std::to_string(kMaxDimensionElements) +
                " elements; use greedy_realizer");
  }
  const auto pairs = critical_pairs(p);
  if (pairs.empty()) {
    // A chain (or a poset with at most one element).
    return {1, Realizer{{linearize(PosetAccess::to_matrix(p))}}};
  }
  DimensionSearch search(p, pairs, step_budget);
  std::vector<SmallClosure> colors;
  for (std::size_t k = 2;; ++k) {
    if (search.solve(k, colors)) {
      Realizer r;
      for (const auto& c : colors) r.extensions.push_back(linearize(to_bits(c, n)));
      if (!is_realizer(p, r)) throw Error("internal: dimension search produced a non-realizer");
      return {k, std::move(r)};
    }
  }
}

Realizer greedy_realizer(const StrictPoset& p) {
  const auto base = PosetAccess::to_matrix(p);
  std::vector<detail::BitMatrix> colors;
  for (const auto& [a, b] : critical_pairs(p)) {
    bool placed = false;
    for (auto& c : colors) {
      if (c.test(b, a)) {
        placed = true;
        break;
      }
    }
    for (auto it = colors.begin(); it != colors.end() && !placed; ++it) {
      if (it->test(a, b)) continue;
      it->add_closed(b, a);
      placed = true;
    }
    if (!placed) {
      colors.push_back(base);
      colors.back().add_closed(b, a);
    }
  }
  if (colors.empty()) colors.push_back(base);
  Realizer r;
  for (const auto& c : colors) r.extensions.push_back(linearize(c));
  if (!is_realizer(p, r)) throw Error("internal: greedy realizer failed the intersection check");
  return r;
}

}  // namespace dsorder
