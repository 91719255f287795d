#include "brute.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace testkit {

BoolMatrix brute_closure(std::size_t n, const std::vector<dsorder::ElementPair>& pairs) {
  BoolMatrix r(n, std::vector<bool>(n, false));
  for (const auto& [a, b] : pairs) r[a][b] = true;
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      if (!r[i][k]) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (r[k][j]) r[i][j] = true;
      }
    }
  }
  return r;
}

BoolMatrix brute_reach(const dsorder::DistributedSystem& sys) {
  std::vector<dsorder::ElementPair> edges;
  std::vector<std::size_t> base;
  std::size_t n = 0;
  for (const auto& p : sys.processes()) {
    base.push_back(n);
    for (std::size_t k = 0; k + 1 < p.size(); ++k) edges.emplace_back(n + k, n + k + 1);
    n += p.size();
  }
  for (const auto& c : sys.communications()) {
    const auto from = sys.find_process(c.from);
    const auto to = sys.find_process(c.to);
    if (!from || !to) continue;
    for (const auto& m : c.pairs) {
      if (m.sender < sys.process(*from).size() && m.receiver < sys.process(*to).size()) {
        edges.emplace_back(base[*from] + m.sender, base[*to] + m.receiver);
      }
    }
  }
  return brute_closure(n, edges);
}

bool same_order_by_name(const dsorder::StrictPoset& a, const dsorder::StrictPoset& b) {
  if (a.size() != b.size()) return false;
  std::vector<std::size_t> map(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    const auto j = b.index_of(a.name(i));
    if (!j) return false;
    map[i] = *j;
  }
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < a.size(); ++j) {
      if (a.less(i, j) != b.less(map[i], map[j])) return false;
    }
  }
  return true;
}

std::size_t brute_width(const dsorder::StrictPoset& p) {
  const std::size_t n = p.size();
  std::size_t best = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    bool anti = true;
    for (std::size_t i = 0; i < n && anti; ++i) {
      for (std::size_t j = 0; j < n && anti; ++j) {
        if (((mask >> i) & 1U) && ((mask >> j) & 1U) && p.less(i, j)) anti = false;
      }
    }
    if (anti) best = std::max<std::size_t>(best, static_cast<std::size_t>(__builtin_popcountll(mask)));
  }
  return best;
}

std::vector<std::vector<std::size_t>> brute_linear_extensions(const dsorder::StrictPoset& p) {
  std::vector<std::size_t> perm(p.size());
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<std::vector<std::size_t>> out;
  do {
    bool ok = true;
    for (std::size_t i = 0; i < perm.size() && ok; ++i) {
      for (std::size_t j = i + 1; j < perm.size() && ok; ++j) {
        if (p.less(perm[j], perm[i])) ok = false;
      }
    }
    if (ok) out.push_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

bool realizes(const dsorder::StrictPoset& p, const std::vector<std::vector<std::size_t>>& orders) {
  const std::size_t n = p.size();
  std::vector<std::vector<std::size_t>> pos;
  for (const auto& o : orders) {
    if (o.size() != n) return false;
    pos.emplace_back(n);
    for (std::size_t k = 0; k < n; ++k) pos.back()[o[k]] = k;
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      bool all = true;
      for (const auto& ps : pos) all = all && ps[i] < ps[j];
      if (all != p.less(i, j)) return false;
    }
  }
  return true;
}

bool brute_realizer_exists(const dsorder::StrictPoset& p, std::size_t k) {
  const auto all = brute_linear_extensions(p);
  std::vector<std::vector<std::size_t>> chosen;
  std::function<bool(std::size_t)> choose = [&](std::size_t from) {
    if (chosen.size() == k) return realizes(p, chosen);
    for (std::size_t e = from; e < all.size(); ++e) {
      chosen.push_back(all[e]);
      if (choose(e + 1)) return true;
      chosen.pop_back();
    }
    return false;
  };
  return choose(0);
}

}  // namespace testkit
