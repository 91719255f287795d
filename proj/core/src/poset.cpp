#include "dsorder/poset.hpp"

#include <algorithm>
#include <functional>

#include "bits.hpp"
#include "dsorder/error.hpp"
#include "poset_access.hpp"

namespace dsorder {

StrictPoset::StrictPoset(std::vector<std::string> names) : names_(std::move(names)) {
  words_ = (names_.size() + 63) / 64;
  bits_.assign(names_.size() * words_, 0);
}

std::optional<std::size_t> StrictPoset::index_of(const std::string& name) const {
  const auto it = std::find(names_.begin(), names_.end(), name);
  if (it == names_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - names_.begin());
}

std::vector<ElementPair> StrictPoset::pairs() const {
  std::vector<ElementPair> out;
  for (std::size_t i = 0; i < size(); ++i) {
    for (std::size_t j = 0; j < size(); ++j) {
      if (less(i, j)) out.emplace_back(i, j);
    }
  }
  return out;
}

std::size_t StrictPoset::relation_size() const {
  std::size_t c = 0;
  for (auto w : bits_) c += std::popcount(w);
  return c;
}

std::vector<std::size_t> StrictPoset::above(std::size_t i) const {
  std::vector<std::size_t> out;
  for (std::size_t j = 0; j < size(); ++j) {
    if (less(i, j)) out.push_back(j);
  }
  return out;
}

std::vector<std::size_t> StrictPoset::below(std::size_t i) const {
  std::vector<std::size_t> out;
  for (std::size_t j = 0; j < size(); ++j) {
    if (less(j, i)) out.push_back(j);
  }
  return out;
}

ClosureResult transitive_closure(std::vector<std::string> names, std::span<const ElementPair> pairs) {
  const std::size_t n = names.size();
  std::vector<std::vector<std::size_t>> adj(n);
  for (const auto& [a, b] : pairs) {
    if (a >= n || b >= n) throw Error("relation pair refers to an unknown element");
    if (a == b) return CycleWitness{{a, a}};
    adj[a].push_back(b);
  }
  for (auto& row : adj) {
    std::sort(row.begin(), row.end());
    row.erase(std::unique(row.begin(), row.end()), row.end());
  }

  // Iterative DFS; a grey target closes a cycle along the current path.
  enum class Mark : unsigned char { white, grey, black };
  std::vector<Mark> mark(n, Mark::white);
  std::vector<std::size_t> postorder;
  postorder.reserve(n);
  std::vector<std::pair<std::size_t, std::size_t>> stack;  // (vertex, next edge)
  std::vector<std::size_t> path;
  for (std::size_t root = 0; root < n; ++root) {
    if (mark[root] != Mark::white) continue;
    stack.emplace_back(root, 0);
    path.push_back(root);
    mark[root] = Mark::grey;
    while (!stack.empty()) {
      auto& [v, next] = stack.back();
      if (next < adj[v].size()) {
        const std::size_t w = adj[v][next++];
        if (mark[w] == Mark::grey) {
          const auto start = std::find(path.begin(), path.end(), w);
          CycleWitness witness{{start, path.end()}};
          witness.cycle.push_back(w);
          return witness;
        }
        if (mark[w] == Mark::white) {
          mark[w] = Mark::grey;
          stack.emplace_back(w, 0);
          path.push_back(w);
        }
      } else {
        mark[v] = Mark::black;
        postorder.push_back(v);
        stack.pop_back();
        path.pop_back();
      }
    }
  }

  detail::BitMatrix closed(n);
  for (const auto v : postorder) {
    for (const auto w : adj[v]) {
      closed.set(v, w);
      closed.or_row(v, w);
    }
  }
  return PosetAccess::from_closed(std::move(names), closed);
}

StrictPoset close_or_throw(std::vector<std::string> names, std::span<const ElementPair> pairs) {
  const auto copy = names;
  auto result = transitive_closure(std::move(names), pairs);
  if (const auto* cycle = std::get_if<CycleWitness>(&result)) {
    std::string text;
    for (std::size_t k = 0; k < cycle->cycle.size(); ++k) {
      if (k) text += ",";
      text += copy[cycle->cycle[k]];
    }
    throw Error("cycle: " + text);
  }
  return std::get<StrictPoset>(std::move(result));
}

std::vector<ElementPair> transitive_reduction(const StrictPoset& p) {
  std::vector<ElementPair> covers;
  const std::size_t n = p.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (!p.less(i, j)) continue;
      bool cover = true;
      for (std::size_t k = 0; k < n && cover; ++k) {
        if (p.less(i, k) && p.less(k, j)) cover = false;
      }
      if (cover) covers.emplace_back(i, j);
    }
  }
  return covers;
}

namespace {

bool is_cover(const StrictPoset& p, std::size_t i, std::size_t j) {
  if (!p.less(i, j)) return false;
  for (std::size_t k = 0; k < p.size(); ++k) {
    if (p.less(i, k) && p.less(k, j)) return false;
  }
  return true;
}

/// Maximum matching in the comparability bipartite graph (left u -> right v
/// for u < v). Returns match_right[v] = u or npos.
struct Matching {
  std::vector<std::size_t> right_to_left;
  std::vector<std::size_t> left_to_right;
  std::vector<std::vector<std::size_t>> candidates;
  std::size_t size = 0;
};

constexpr std::size_t npos = static_cast<std::size_t>(-1);

Matching max_matching(const StrictPoset& p) {
  const std::size_t n = p.size();
  Matching m;
  m.right_to_left.assign(n, npos);
  m.left_to_right.assign(n, npos);
  m.candidates.resize(n);
  for (std::size_t u = 0; u < n; ++u) {
    auto& c = m.candidates[u];
    for (std::size_t v = 0; v < n; ++v) {
      if (is_cover(p, u, v)) c.push_back(v);
    }
    for (std::size_t v = 0; v < n; ++v) {
      if (p.less(u, v) && !is_cover(p, u, v)) c.push_back(v);
    }
  }

  std::vector<char> visited;
  std::function<bool(std::size_t)> augment = [&](std::size_t u) {
    for (const auto v : m.candidates[u]) {
      if (visited[v]) continue;
      visited[v] = 1;
      if (m.right_to_left[v] == npos || augment(m.right_to_left[v])) {
        m.right_to_left[v] = u;
        m.left_to_right[u] = v;
        return true;
      }
    }
    return false;
  };
  for (std::size_t u = 0; u < n; ++u) {
    visited.assign(n, 0);
    if (augment(u)) ++m.size;
  }
  return m;
}

}  // namespace

std::vector<std::vector<std::size_t>> minimum_chain_cover(const StrictPoset& p) {
  const auto m = max_matching(p);
  std::vector<std::vector<std::size_t>> chains;
  for (std::size_t start = 0; start < p.size(); ++start) {
    if (m.right_to_left[start] != npos) continue;
    std::vector<std::size_t> chain;
    for (std::size_t v = start; v != npos; v = m.left_to_right[v]) chain.push_back(v);
    chains.push_back(std::move(chain));
  }
  return chains;
}

std::vector<std::size_t> maximum_antichain(const StrictPoset& p) {
  const std::size_t n = p.size();
  const auto m = max_matching(p);
  // Alternating reachability from unmatched left vertices.
  std::vector<char> left_seen(n, 0);
  std::vector<char> right_seen(n, 0);
  std::vector<std::size_t> queue;
  for (std::size_t u = 0; u < n; ++u) {
    if (m.left_to_right[u] == npos) {
      left_seen[u] = 1;
      queue.push_back(u);
    }
  }
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const std::size_t u = queue[head];
    for (const auto v : m.candidates[u]) {
      if (right_seen[v] || m.left_to_right[u] == v) continue;
      right_seen[v] = 1;
      const std::size_t w = m.right_to_left[v];
      if (w != npos && !left_seen[w]) {
        left_seen[w] = 1;
        queue.push_back(w);
      }
    }
  }
  std::vector<std::size_t> antichain;
  for (std::size_t x = 0; x < n; ++x) {
    if (left_seen[x] && !right_seen[x]) antichain.push_back(x);
  }
  if (antichain.size() != n - m.size) throw Error("internal: König construction size mismatch");
  return antichain;
}

std::size_t width(const StrictPoset& p) { return p.size() - max_matching(p).size; }

std::vector<std::vector<std::size_t>> linear_extensions(const StrictPoset& p, std::optional<std::size_t> limit) {
  const std::size_t n = p.size();
  if (!limit && n > kExhaustiveExtensionLimit) {
    throw Error("exhaustive linear extension enumeration is limited to " +
                std::to_string(kExhaustiveExtensionLimit) + " elements");
  }
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> pending(n, 0);
  for (std::size_t i = 0; i < n; ++i) pending[i] = p.below(i).size();
  std::vector<char> used(n, 0);
  std::vector<std::size_t> prefix;
  prefix.reserve(n);

  std::function<bool()> extend = [&]() {
    if (prefix.size() == n) {
      out.push_back(prefix);
      return limit && out.size() >= *limit;
    }
    for (std::size_t x = 0; x < n; ++x) {
      if (used[x] || pending[x] != 0) continue;
      used[x] = 1;
      prefix.push_back(x);
      for (std::size_t y = 0; y < n; ++y) {
        if (p.less(x, y)) --pending[y];
      }
      const bool stop = extend();
      for (std::size_t y = 0; y < n; ++y) {
        if (p.less(x, y)) ++pending[y];
      }
      prefix.pop_back();
      used[x] = 0;
      if (stop) return true;
    }
    return false;
  };
  if (!limit || *limit > 0) extend();
  return out;
}

bool is_linear_extension(const StrictPoset& p, std::span<const std::size_t> order) {
  const std::size_t n = p.size();
  if (order.size() != n) return false;
  std::vector<std::size_t> pos(n, npos);
  for (std::size_t k = 0; k < n; ++k) {
    if (order[k] >= n || pos[order[k]] != npos) return false;
    pos[order[k]] = k;
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (p.less(i, j) && pos[i] > pos[j]) return false;
    }
  }
  return true;
}

bool is_realizer(const StrictPoset& p, const Realizer& r) {
  const std::size_t n = p.size();
  if (r.extensions.empty()) return n == 0;
  std::vector<std::vector<std::size_t>> positions;
  for (const auto& ext : r.extensions) {
    if (!is_linear_extension(p, ext)) return false;
    std::vector<std::size_t> pos(n);
    for (std::size_t k = 0; k < n; ++k) pos[ext[k]] = k;
    positions.push_back(std::move(pos));
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      const bool all_before =
          std::all_of(positions.begin(), positions.end(), [&](const auto& pos) { return pos[i] < pos[j]; });
      if (all_before != p.less(i, j)) return false;
    }
  }
  return true;
}

MultiUtility bijective_multiutility(const Realizer& r) {
  MultiUtility out;
  for (const auto& ext : r.extensions) {
    std::vector<Rational> rank(ext.size());
    for (std::size_t k = 0; k < ext.size(); ++k) rank[ext[k]] = Rational(static_cast<std::int64_t>(k + 1));
    out.functions.push_back(std::move(rank));
  }
  return out;
}

}  // namespace dsorder
