#include "dsorder/biorder.hpp"

#include <algorithm>
#include <numeric>

#include "bits.hpp"
#include "dsorder/error.hpp"

namespace dsorder {
namespace {

std::vector<std::string> unnamed(std::size_t n, const char* prefix) {
  std::vector<std::string> out;
  for (std::size_t k = 0; k < n; ++k) out.push_back(prefix + std::to_string(k));
  return out;
}

/// Ranks elements by a nested family of sets. `key` orders from lowest class
/// upward; equal keys must mean equal sets, else the family is not nested.
RankedPartition rank_by_sets(const std::vector<std::vector<std::size_t>>& sets, bool larger_is_lower) {
  const std::size_t n = sets.size();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return larger_is_lower ? sets[a].size() > sets[b].size() : sets[a].size() < sets[b].size();
  });
  RankedPartition out;
  out.class_of.assign(n, 0);
  for (std::size_t k = 0; k < n; ++k) {
    const std::size_t x = order[k];
    if (k > 0 && sets[x] == sets[order[k - 1]]) {
      out.classes.back().push_back(x);
    } else {
      if (k > 0) {
        const auto& lo = larger_is_lower ? sets[x] : sets[order[k - 1]];
        const auto& hi = larger_is_lower ? sets[order[k - 1]] : sets[x];
        if (!std::includes(hi.begin(), hi.end(), lo.begin(), lo.end())) {
          throw Error("internal: trace sets are not nested");
        }
      }
      out.classes.push_back({x});
    }
    out.class_of[x] = out.classes.size() - 1;
  }
  for (auto& c : out.classes) std::sort(c.begin(), c.end());
  return out;
}

}  // namespace

Biorder::Biorder(std::vector<std::string> domain, std::vector<std::string> codomain,
                 std::span<const ElementPair> pairs)
    : domain_(std::move(domain)), codomain_(std::move(codomain)), rel_(domain_.size() * codomain_.size(), 0) {
  for (const auto& [a, x] : pairs) {
    if (a >= domain_.size() || x >= codomain_.size()) throw Error("biorder pair out of range");
    rel_[a * codomain_.size() + x] = 1;
  }
}

Biorder::Biorder(std::size_t domain_size, std::size_t codomain_size, std::span<const ElementPair> pairs)
    : Biorder(unnamed(domain_size, "a"), unnamed(codomain_size, "x"), pairs) {}

bool Biorder::empty() const { return std::none_of(rel_.begin(), rel_.end(), [](char c) { return c != 0; }); }

std::vector<ElementPair> Biorder::pairs() const {
  std::vector<ElementPair> out;
  for (std::size_t a = 0; a < domain_size(); ++a) {
    for (std::size_t x = 0; x < codomain_size(); ++x) {
      if (related(a, x)) out.emplace_back(a, x);
    }
  }
  return out;
}

std::vector<std::size_t> Biorder::up_set(std::size_t a) const {
  std::vector<std::size_t> out;
  for (std::size_t x = 0; x < codomain_size(); ++x) {
    if (related(a, x)) out.push_back(x);
  }
  return out;
}

std::vector<std::size_t> Biorder::down_set(std::size_t x) const {
  std::vector<std::size_t> out;
  for (std::size_t a = 0; a < domain_size(); ++a) {
    if (related(a, x)) out.push_back(a);
  }
  return out;
}

Biorder induced_biorder(const DistributedSystem& sys, std::size_t i, std::size_t j) {
  if (i >= sys.process_count() || j >= sys.process_count()) throw Error("unknown process");
  if (i == j) throw Error("induced biorder needs two distinct processes");
  const auto& from = sys.process(i);
  const auto& to = sys.process(j);
  std::vector<ElementPair> pairs;
  for (const auto& m : sys.messages(i, j)) {
    if (m.sender >= from.size() || m.receiver >= to.size()) throw Error("message refers to a missing event");
    for (std::size_t x = 0; x <= m.sender; ++x) {
      for (std::size_t y = m.receiver; y < to.size(); ++y) pairs.emplace_back(x, y);
    }
  }
  std::vector<std::string> dom;
  std::vector<std::string> cod;
  for (std::size_t k = 0; k < from.size(); ++k) dom.push_back(sys.event_name(EventRef{i, k}));
  for (std::size_t k = 0; k < to.size(); ++k) cod.push_back(sys.event_name(EventRef{j, k}));
  return Biorder(std::move(dom), std::move(cod), pairs);
}

Biorder induced_biorder(const DistributedSystem& sys, const std::string& from, const std::string& to) {
  return induced_biorder(sys, sys.process_index(from), sys.process_index(to));
}

bool is_ferrers(const Biorder& rel) {
  // Equivalent to the up-sets forming a chain under inclusion.
  std::vector<std::vector<std::size_t>> ups;
  for (std::size_t a = 0; a < rel.domain_size(); ++a) ups.push_back(rel.up_set(a));
  std::sort(ups.begin(), ups.end(), [](const auto& l, const auto& r) { return l.size() < r.size(); });
  for (std::size_t k = 0; k + 1 < ups.size(); ++k) {
    if (!std::includes(ups[k + 1].begin(), ups[k + 1].end(), ups[k].begin(), ups[k].end())) return false;
  }
  return true;
}

bool is_monotone(const Biorder& rel) {
  for (const auto& [a, x] : rel.pairs()) {
    if (a > 0 && !rel.related(a - 1, x)) return false;
    if (x + 1 < rel.codomain_size() && !rel.related(a, x + 1)) return false;
  }
  return true;
}

bool is_causal_biorder(const StrictPoset& a, const StrictPoset& b, std::span<const ElementPair> pairs) {
  const std::size_t na = a.size();
  const std::size_t n = na + b.size();
  detail::BitMatrix reach(n);
  for (const auto& [i, j] : a.pairs()) reach.set(i, j);
  for (const auto& [i, j] : b.pairs()) reach.set(na + i, na + j);
  for (const auto& [i, j] : pairs) {
    if (i >= na || j >= b.size()) throw Error("causal biorder pair out of range");
    reach.set(i, na + j);
  }
  // Warshall; tolerates cycles, which only matter through reachability.
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t u = 0; u < n; ++u) {
      if (reach.test(u, k)) reach.or_row(u, k);
    }
  }
  const auto reaches = [&](std::size_t u, std::size_t v) { return u == v || reach.test(u, v); };
  for (const auto& [p, q] : pairs) {
    for (const auto& [r, s] : pairs) {
      if (!reaches(p, na + s) && !reaches(r, na + q)) return false;
    }
  }
  return true;
}

TracePair traces(const Biorder& rel) {
  if (!is_ferrers(rel)) throw Error("traces need a Ferrers relation");
  std::vector<std::vector<std::size_t>> ups;
  std::vector<std::vector<std::size_t>> downs;
  for (std::size_t a = 0; a < rel.domain_size(); ++a) ups.push_back(rel.up_set(a));
  for (std::size_t x = 0; x < rel.codomain_size(); ++x) downs.push_back(rel.down_set(x));
  return {rank_by_sets(ups, true), rank_by_sets(downs, false)};
}

QuotientBiorder quotient_biorder(const Biorder& rel) {
  auto t = traces(rel);
  std::vector<ElementPair> pairs;
  for (std::size_t c = 0; c < t.left.size(); ++c) {
    for (std::size_t d = 0; d < t.right.size(); ++d) {
      const bool r = rel.related(t.left.classes[c].front(), t.right.classes[d].front());
      for (const auto a : t.left.classes[c]) {
        for (const auto x : t.right.classes[d]) {
          if (rel.related(a, x) != r) throw Error("internal: quotient biorder is not well defined");
        }
      }
      if (r) pairs.emplace_back(c, d);
    }
  }
  const auto class_names = [](const RankedPartition& part, const std::vector<std::string>& names) {
    std::vector<std::string> out;
    for (const auto& cls : part.classes) {
      std::string label = "{";
      for (std::size_t k = 0; k < cls.size(); ++k) label += (k ? "," : "") + names[cls[k]];
      out.push_back(label + "}");
    }
    return out;
  };
  Biorder q(class_names(t.left, rel.domain()), class_names(t.right, rel.codomain()), pairs);
  return {std::move(q), std::move(t.left), std::move(t.right)};
}

Biorder expand(const QuotientBiorder& q, std::vector<std::string> domain, std::vector<std::string> codomain) {
  if (domain.size() != q.domain_classes.class_of.size() || codomain.size() != q.codomain_classes.class_of.size()) {
    throw Error("expansion names do not match the quotient's element counts");
  }
  std::vector<ElementPair> pairs;
  for (std::size_t a = 0; a < domain.size(); ++a) {
    for (std::size_t x = 0; x < codomain.size(); ++x) {
      if (q.relation.related(q.domain_classes.class_of[a], q.codomain_classes.class_of[x])) pairs.emplace_back(a, x);
    }
  }
  return Biorder(std::move(domain), std::move(codomain), pairs);
}

Biorder compose(const Biorder& first, const Biorder& second) {
  if (first.codomain_size() != second.domain_size()) throw Error("composition needs matching middle chains");
  std::vector<ElementPair> pairs;
  for (std::size_t a = 0; a < first.domain_size(); ++a) {
    for (std::size_t c = 0; c < second.codomain_size(); ++c) {
      for (std::size_t b = 0; b < first.codomain_size(); ++b) {
        if (first.related(a, b) && second.related(b, c)) {
          pairs.emplace_back(a, c);
          break;
        }
      }
    }
  }
  return Biorder(first.domain(), second.codomain(), pairs);
}

}  // namespace dsorder
