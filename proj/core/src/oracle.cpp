#include "dsorder/oracle.hpp"

#include <deque>

namespace dsorder {
namespace {

using Matrix = std::vector<std::vector<bool>>;

/// Global index of (process p, event k), recomputed from the raw chains.
std::size_t flat(const DistributedSystem& sys, std::size_t p, std::size_t k) {
  std::size_t g = 0;
  for (std::size_t q = 0; q < p; ++q) g += sys.process(q).size();
  return g + k;
}

std::vector<std::pair<std::size_t, std::size_t>> all_events(const DistributedSystem& sys) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t p = 0; p < sys.process_count(); ++p) {
    for (std::size_t k = 0; k < sys.process(p).size(); ++k) out.emplace_back(p, k);
  }
  return out;
}

/// reach[x][y]: y is reachable from x by one or more edges.
Matrix reachability(const DistributedSystem& sys) {
  const auto events = all_events(sys);
  const std::size_t n = events.size();
  std::vector<std::vector<std::size_t>> next(n);
  for (std::size_t p = 0; p < sys.process_count(); ++p) {
    for (std::size_t k = 0; k + 1 < sys.process(p).size(); ++k) next[flat(sys, p, k)].push_back(flat(sys, p, k + 1));
  }
  for (const auto& c : sys.communications()) {
    std::size_t from = 0;
    std::size_t to = 0;
    for (std::size_t p = 0; p < sys.process_count(); ++p) {
      if (sys.process(p).id() == c.from) from = p;
      if (sys.process(p).id() == c.to) to = p;
    }
    for (const auto& m : c.pairs) next[flat(sys, from, m.sender)].push_back(flat(sys, to, m.receiver));
  }
  Matrix reach(n, std::vector<bool>(n, false));
  for (std::size_t s = 0; s < n; ++s) {
    std::deque<std::size_t> todo(next[s].begin(), next[s].end());
    while (!todo.empty()) {
      const auto v = todo.front();
      todo.pop_front();
      if (reach[s][v]) continue;
      reach[s][v] = true;
      for (const auto w : next[v]) todo.push_back(w);
    }
  }
  return reach;
}

/// x (on process i) relates to y (on j != i) when some message from i to j
/// is sent at or after x and received at or before y.
bool induced(const DistributedSystem& sys, std::size_t i, std::size_t x, std::size_t j, std::size_t y) {
  for (const auto& c : sys.communications()) {
    if (c.from != sys.process(i).id() || c.to != sys.process(j).id()) continue;
    for (const auto& m : c.pairs) {
      if (x <= m.sender && m.receiver <= y) return true;
    }
  }
  return false;
}

std::string name(const DistributedSystem& sys, std::size_t p, std::size_t k) {
  const auto& label = sys.process(p).label(k);
  return label.empty() ? sys.process(p).id() + ":" + std::to_string(k) : label;
}

CheckResult fail(std::size_t a, std::size_t b, std::string detail) { return {Witness{a, b, std::move(detail)}}; }

std::string values_of(const MultiUtility& family, std::size_t e) {
  std::string out = "(";
  for (std::size_t l = 0; l < family.functions.size(); ++l) out += (l ? "," : "") + family.functions[l][e].str();
  return out + ")";
}

std::string vector_str(const std::vector<std::int64_t>& v) {
  std::string out = "(";
  for (std::size_t k = 0; k < v.size(); ++k) out += (k ? "," : "") + std::to_string(v[k]);
  return out + ")";
}

bool vector_less(const std::vector<std::int64_t>& a, const std::vector<std::int64_t>& b) {
  bool strict = false;
  for (std::size_t k = 0; k < a.size(); ++k) {
    if (a[k] > b[k]) return false;
    if (a[k] < b[k]) strict = true;
  }
  return strict;
}

CheckResult weak_check(const DistributedSystem& sys, const std::vector<Rational>& value, const std::string& tag) {
  const auto events = all_events(sys);
  if (value.size() != events.size()) return fail(0, 0, tag + "assignment covers " + std::to_string(value.size()) +
                                                           " events, system has " + std::to_string(events.size()));
  for (const auto& [p, x] : events) {
    for (const auto& [q, y] : events) {
      const auto gx = flat(sys, p, x);
      const auto gy = flat(sys, q, y);
      const bool must = p == q ? x < y : induced(sys, p, x, q, y);
      if (must && !(value[gx] < value[gy])) {
        return fail(gx, gy,
                    tag + name(sys, p, x) + " precedes " + name(sys, q, y) + " but value " + value[gx].str() +
                        " is not below " + value[gy].str());
      }
    }
  }
  return {};
}

}  // namespace

CheckResult verify_weak_representation(const DistributedSystem& sys, const ClockAssignment& clock) {
  return weak_check(sys, clock.values, "");
}

CheckResult verify_representation(const DistributedSystem& sys, const MultiUtility& family) {
  for (std::size_t l = 0; l < family.functions.size(); ++l) {
    auto r = weak_check(sys, family.functions[l], "member " + std::to_string(l + 1) + ": ");
    if (!r.ok()) return r;
  }
  const auto reach = reachability(sys);
  const auto events = all_events(sys);
  for (const auto& [p, x] : events) {
    for (const auto& [q, y] : events) {
      if (p == q) continue;
      const auto gx = flat(sys, p, x);
      const auto gy = flat(sys, q, y);
      bool all = true;
      for (const auto& f : family.functions) all = all && f[gx] < f[gy];
      if (all != reach[gx][gy]) {
        return fail(gx, gy,
                    name(sys, p, x) + " " + values_of(family, gx) + " vs " + name(sys, q, y) + " " +
                        values_of(family, gy) + ": " + (all ? "every member increases but " : "") + name(sys, p, x) +
                        (reach[gx][gy] ? " happened before " : " did not happen before ") + name(sys, q, y));
      }
    }
  }
  return {};
}

CheckResult verify_vector_representation(const DistributedSystem& sys, const VectorClock& clock) {
  const auto events = all_events(sys);
  if (clock.values.size() != events.size()) return fail(0, 0, "clock does not cover every event");
  for (const auto& v : clock.values) {
    if (v.size() != sys.process_count()) return fail(0, 0, "clock vectors must have one entry per process");
  }
  const auto reach = reachability(sys);
  for (const auto& [p, x] : events) {
    for (const auto& [q, y] : events) {
      const auto gx = flat(sys, p, x);
      const auto gy = flat(sys, q, y);
      if (gx == gy) continue;
      const bool less = vector_less(clock.values[gx], clock.values[gy]);
      const auto show = [&](const char* rel) {
        return name(sys, p, x) + " " + vector_str(clock.values[gx]) + " vs " + name(sys, q, y) + " " +
               vector_str(clock.values[gy]) + ": " + rel;
      };
      if (less != reach[gx][gy]) {
        return fail(gx, gy, show(less ? "vectors increase without causal precedence"
                                      : "causal precedence without increasing vectors"));
      }
    }
  }
  return {};
}

CheckResult verify_rp_multiutility(const StrictPoset& p, const MultiUtility& family) {
  for (const auto& f : family.functions) {
    if (f.size() != p.size()) return fail(0, 0, "function does not cover every element");
  }
  for (std::size_t x = 0; x < p.size(); ++x) {
    for (std::size_t y = 0; y < p.size(); ++y) {
      if (x == y) continue;
      bool all = true;
      for (const auto& f : family.functions) all = all && f[x] < f[y];
      if (all != p.less(x, y)) {
        return fail(x, y,
                    p.name(x) + " " + values_of(family, x) + " vs " + p.name(y) + " " + values_of(family, y) + ": " +
                        (all ? "every function increases but " + p.name(x) + " is not below " + p.name(y)
                             : p.name(x) + " is below " + p.name(y) + " but some function does not increase"));
      }
    }
  }
  return {};
}

CheckResult verify_biorder_representation(const Biorder& rel, const BiorderRep& rep) {
  if (rep.u.size() != rel.domain_size() || rep.v.size() != rel.codomain_size()) {
    return fail(0, 0, "representation does not match the relation's sides");
  }
  for (std::size_t a = 0; a < rel.domain_size(); ++a) {
    for (std::size_t x = 0; x < rel.codomain_size(); ++x) {
      const bool below = rep.mode == RepMode::strict ? rep.u[a] < rep.v[x] : rep.u[a] <= rep.v[x];
      if (below != rel.related(a, x)) {
        return fail(a, x,
                    rel.domain()[a] + " " + rep.u[a].str() + " vs " + rel.codomain()[x] + " " + rep.v[x].str() +
                        (below ? ": values ordered but unrelated" : ": related but values not ordered"));
      }
    }
  }
  return {};
}

CheckResult verify_partial_representation(const DistributedSystem& sys, const PartialRepresentation& rep) {
  const auto events = all_events(sys);
  for (const auto& s : rep.sigma) {
    if (s.size() != events.size()) return fail(0, 0, "partial function does not span the event set");
  }
  const auto reach = reachability(sys);
  for (const auto& [p, x] : events) {
    for (const auto& [q, y] : events) {
      const auto gx = flat(sys, p, x);
      const auto gy = flat(sys, q, y);
      if (gx == gy) continue;
      bool some = false;
      bool every = true;
      std::string shown;
      for (std::size_t k = 0; k < rep.sigma.size(); ++k) {
        const auto& a = rep.sigma[k][gx];
        const auto& b = rep.sigma[k][gy];
        if (!a || !b) continue;
        const bool inc = *a < *b;
        some = some || inc;
        every = every && inc;
        shown += " s" + std::to_string(k + 1) + "=" + a->str() + "/" + b->str();
      }
      const bool claim = some && every;
      if (claim != reach[gx][gy]) {
        return fail(gx, gy,
                    name(sys, p, x) + " vs " + name(sys, q, y) + ":" + shown +
                        (claim ? " claims precedence that does not hold" : " misses a causal precedence"));
      }
    }
  }
  return {};
}

}  // namespace dsorder
