#include "dsorder/represent.hpp"

#include <algorithm>

#include "dsorder/causal.hpp"
#include "dsorder/error.hpp"
#include "dsorder/poset.hpp"

namespace dsorder {
namespace {

void require_range(std::span<const Rational> values, ValueRange range, const char* what) {
  const Rational zero{0};
  const Rational one{1};
  for (const auto& x : values) {
    const bool ok = range == ValueRange::open ? (zero < x && x < one) : (zero <= x && x <= one);
    if (!ok) {
      throw Error(std::string(what) + " value " + x.str() + " outside " +
                  (range == ValueRange::open ? "(0,1)" : "[0,1]"));
    }
  }
}

bool strictly_increasing(std::span<const Rational> values) {
  for (std::size_t k = 1; k < values.size(); ++k) {
    if (!(values[k - 1] < values[k])) return false;
  }
  return true;
}

/// Checks that rep strictly represents rel with strictly increasing
/// components inside (0, 1).
void require_chain_rep(const Biorder& rel, const BiorderRep& rep, const std::string& where) {
  if (rep.mode != RepMode::strict) throw Error(where + ": representation must be strict");
  if (rep.u.size() != rel.domain_size() || rep.v.size() != rel.codomain_size()) {
    throw Error(where + ": representation does not match the chain sizes");
  }
  require_range(rep.u, ValueRange::open, "representation");
  require_range(rep.v, ValueRange::open, "representation");
  if (!strictly_increasing(rep.u) || !strictly_increasing(rep.v)) {
    throw Error(where + ": representation must strictly increase along both chains");
  }
  for (std::size_t a = 0; a < rel.domain_size(); ++a) {
    for (std::size_t x = 0; x < rel.codomain_size(); ++x) {
      if (rel.related(a, x) != (rep.u[a] < rep.v[x])) {
        throw Error(where + ": representation disagrees with the relation at (" + rel.domain()[a] + ", " +
                    rel.codomain()[x] + ")");
      }
    }
  }
}

void require_line(const DistributedSystem& sys) {
  if (!validate_system(sys).empty()) throw Error("system is not a valid communication");
  if (!has_line_communication(sys)) throw Error("system does not have line communication");
}

}  // namespace

std::vector<Rational> chain_utility(std::size_t length) {
  std::vector<Rational> out;
  const auto den = static_cast<std::int64_t>(length) + 1;
  for (std::size_t k = 0; k < length; ++k) out.emplace_back(static_cast<std::int64_t>(k) + 1, den);
  return out;
}

std::vector<Rational> chain_utility(const ProcessChain& chain) { return chain_utility(chain.size()); }

BiorderRep build_biorder_representation(const Biorder& rel) {
  if (!is_ferrers(rel)) throw Error("representation needs a Ferrers relation");
  if (!is_monotone(rel)) throw Error("representation needs a relation closed under both chain orders");
  const auto d = static_cast<std::int64_t>(rel.domain_size()) + 1;
  const auto d2 = static_cast<std::int64_t>(rel.codomain_size()) + 1;
  BiorderRep rep;
  for (std::size_t a = 0; a < rel.domain_size(); ++a) rep.u.emplace_back(static_cast<std::int64_t>(a) + 1, d);
  for (std::size_t y = 0; y < rel.codomain_size(); ++y) {
    const auto lower = static_cast<std::int64_t>(rel.down_set(y).size());
    rep.v.push_back((Rational(lower) + Rational(static_cast<std::int64_t>(y) + 1, d2)) / Rational(d));
  }
  return rep;
}

std::vector<Rational> op_lower(const Biorder& rel, std::span<const Rational> v, ValueRange range) {
  if (v.size() != rel.codomain_size()) throw Error("lower operator input does not match the codomain");
  require_range(v, range, "lower operator input");
  std::vector<Rational> out;
  for (std::size_t x = 0; x < rel.domain_size(); ++x) {
    Rational best{1};
    bool any = false;
    for (std::size_t y = 0; y < rel.codomain_size(); ++y) {
      if (!rel.related(x, y)) continue;
      if (!any || v[y] < best) best = v[y];
      any = true;
    }
    out.push_back(best);
  }
  return out;
}

std::vector<Rational> op_upper(const Biorder& rel, std::span<const Rational> u, ValueRange range) {
  if (u.size() != rel.domain_size()) throw Error("upper operator input does not match the domain");
  require_range(u, range, "upper operator input");
  std::vector<Rational> out;
  for (std::size_t y = 0; y < rel.codomain_size(); ++y) {
    Rational best{0};
    bool any = false;
    for (std::size_t x = 0; x < rel.domain_size(); ++x) {
      if (!rel.related(x, y)) continue;
      if (!any || best < u[x]) best = u[x];
      any = true;
    }
    out.push_back(best);
  }
  return out;
}

ClockAssignment aggregate_line_weak(const DistributedSystem& sys, std::span<const BiorderRep> reps) {
  require_line(sys);
  const std::size_t n = sys.process_count();
  ClockAssignment out{ClockKind::weak, {}};
  if (n == 0) return out;
  if (reps.size() + 1 != n) throw Error("aggregation needs one representation per consecutive process pair");

  std::vector<Biorder> rel;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    rel.push_back(induced_biorder(sys, i, i + 1));
    require_chain_rep(rel[i], reps[i], "representation " + std::to_string(i + 1));
  }

  // w[j] accumulates the summands living on process j.
  std::vector<std::vector<Rational>> w;
  for (std::size_t j = 0; j < n; ++j) w.emplace_back(sys.process(j).size(), Rational{0});
  const auto add = [&](std::size_t j, const std::vector<Rational>& term) {
    for (std::size_t k = 0; k < term.size(); ++k) w[j][k] += term[k];
  };
  if (n == 1) add(0, chain_utility(sys.process(0)));

  for (std::size_t i = 0; i + 1 < n; ++i) {
    add(i, reps[i].u);
    add(i + 1, reps[i].v);
    // v_i pushed upward through the later biorders.
    std::vector<Rational> up = reps[i].v;
    for (std::size_t j = i + 1; j + 1 < n; ++j) {
      up = op_upper(rel[j], up, ValueRange::closed);
      add(j + 1, up);
    }
    // u_i pushed downward through the earlier biorders.
    std::vector<Rational> down = reps[i].u;
    for (std::size_t j = i; j-- > 0;) {
      down = op_lower(rel[j], down, ValueRange::closed);
      add(j, down);
    }
  }

  for (std::size_t j = 0; j < n; ++j) {
    for (const auto& x : w[j]) out.values.push_back(x);
  }
  return out;
}

ClockAssignment aggregate_line_weak(const DistributedSystem& sys) {
  require_line(sys);
  std::vector<BiorderRep> reps;
  for (std::size_t i = 0; i + 1 < sys.process_count(); ++i) {
    reps.push_back(build_biorder_representation(induced_biorder(sys, i, i + 1)));
  }
  return aggregate_line_weak(sys, reps);
}

MultiUtility rp_multiutility_from_quotient(const DistributedSystem& sys, const QuotientSystem& q,
                                           const MultiUtility& class_utilities) {
  if (q.class_of.size() != sys.event_count()) throw Error("quotient does not belong to the system");
  MultiUtility out;
  for (const auto& f : class_utilities.functions) {
    if (f.size() != q.class_count()) throw Error("class utility does not cover every class");
    std::vector<Rational> values;
    for (std::size_t p = 0; p < sys.process_count(); ++p) {
      const auto w = chain_utility(sys.process(p));
      for (std::size_t k = 0; k < w.size(); ++k) values.push_back(f[q.class_of[sys.global_index({p, k})]] + w[k]);
    }
    out.functions.push_back(std::move(values));
  }
  return out;
}

MultiUtility rp_multiutility_from_quotient(const DistributedSystem& sys) {
  if (!validate_system(sys).empty()) throw Error("system is not a valid communication");
  const auto q = quotient_system(sys);
  Realizer realizer;
  bool exact = false;
  if (q.class_count() <= kMaxDimensionElements) {
    try {
      realizer = order_dimension(q.poset).realizer;
      exact = true;
    } catch (const BudgetExceeded&) {
    }
  }
  if (!exact) realizer = greedy_realizer(q.poset);
  return rp_multiutility_from_quotient(sys, q, bijective_multiutility(realizer));
}

MultiUtility glue_family(const DistributedSystem& sys, const ProcessFamily& family) {
  MultiUtility out;
  for (const auto& f : family.functions) {
    if (f.size() != sys.process_count()) throw Error("family member does not cover every process");
    std::vector<Rational> values;
    for (std::size_t p = 0; p < f.size(); ++p) {
      if (f[p].size() != sys.process(p).size()) {
        throw Error("family member does not match the length of process " + sys.process(p).id());
      }
      values.insert(values.end(), f[p].begin(), f[p].end());
    }
    out.functions.push_back(std::move(values));
  }
  return out;
}

ProcessFamily restrict_family(const DistributedSystem& sys, const MultiUtility& global) {
  ProcessFamily out;
  for (const auto& f : global.functions) {
    if (f.size() != sys.event_count()) throw Error("function does not cover every event");
    std::vector<std::vector<Rational>> slices;
    for (std::size_t p = 0; p < sys.process_count(); ++p) {
      const auto first = f.begin() + static_cast<std::ptrdiff_t>(sys.global_index({p, 0}));
      slices.emplace_back(first, first + static_cast<std::ptrdiff_t>(sys.process(p).size()));
    }
    out.functions.push_back(std::move(slices));
  }
  return out;
}

PartialRepresentation partial_representation_line3(const DistributedSystem& sys, const Line3Reps& reps) {
  require_line(sys);
  if (sys.process_count() != 3) throw Error("partial representation needs exactly three processes");
  const auto p12 = induced_biorder(sys, 0, 1);
  const auto p23 = induced_biorder(sys, 1, 2);
  const auto p13 = compose(p12, p23);
  require_chain_rep(p12, reps.r12, "representation 1->2");
  require_chain_rep(p23, reps.r23, "representation 2->3");
  if (reps.r13.u.size() != p13.domain_size() || reps.r13.v.size() != p13.codomain_size()) {
    throw Error("missing representation of the composed relation 1->3");
  }
  require_chain_rep(p13, reps.r13, "representation 1->3");

  const Rational one{1};
  PartialRepresentation out;
  for (auto& s : out.sigma) s.assign(sys.event_count(), std::nullopt);
  const auto at = [&](std::size_t p, std::size_t k) { return sys.global_index({p, k}); };
  for (std::size_t k = 0; k < sys.process(0).size(); ++k) {
    out.sigma[0][at(0, k)] = reps.r12.u[k];
    out.sigma[1][at(0, k)] = reps.r12.u[k];
    out.sigma[2][at(0, k)] = reps.r13.u[k];
  }
  for (std::size_t k = 0; k < sys.process(1).size(); ++k) {
    out.sigma[0][at(1, k)] = reps.r12.v[k];
    out.sigma[1][at(1, k)] = reps.r23.u[k] + one;
  }
  for (std::size_t k = 0; k < sys.process(2).size(); ++k) {
    out.sigma[0][at(2, k)] = reps.r23.v[k] + one;
    out.sigma[1][at(2, k)] = reps.r23.v[k] + one;
    out.sigma[2][at(2, k)] = reps.r13.v[k];
  }
  return out;
}

PartialRepresentation partial_representation_line3(const DistributedSystem& sys) {
  require_line(sys);
  if (sys.process_count() != 3) throw Error("partial representation needs exactly three processes");
  const auto p12 = induced_biorder(sys, 0, 1);
  const auto p23 = induced_biorder(sys, 1, 2);
  const Line3Reps reps{build_biorder_representation(p12), build_biorder_representation(p23),
                       build_biorder_representation(compose(p12, p23))};
  return partial_representation_line3(sys, reps);
}

}  // namespace dsorder
