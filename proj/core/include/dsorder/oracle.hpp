#pragma once

#include <cstddef>
#include <optional>
#include <string>

#include "dsorder/biorder.hpp"
#include "dsorder/multiutility.hpp"
#include "dsorder/poset.hpp"
#include "dsorder/represent.hpp"
#include "dsorder/system.hpp"

// Brute-force checkers. They recompute every relation they need from the
// raw system and share no code with the constructions they check.

namespace dsorder {

/// First failing pair. `first`/`second` are global event indices (or
/// element / domain-codomain indices for poset and biorder checks); `detail`
/// names both and shows their values.
struct Witness {
  std::size_t first = 0;
  std::size_t second = 0;
  std::string detail;
};

struct CheckResult {
  std::optional<Witness> witness;

  bool ok() const { return !witness.has_value(); }
  explicit operator bool() const { return ok(); }
};

/// Strict increase along each chain, and x R y implies value(x) < value(y)
/// for every induced relation R between two processes.
CheckResult verify_weak_representation(const DistributedSystem& sys, const ClockAssignment& clock);

/// Every member is a weak representation, and for events of different
/// processes: x happened before y iff every member strictly increases.
CheckResult verify_representation(const DistributedSystem& sys, const MultiUtility& family);

/// x happened before y iff V(x) < V(y): componentwise <= with one strict
/// entry. Pairs on different processes are read against causal precedence,
/// which covers the induced relations.
CheckResult verify_vector_representation(const DistributedSystem& sys, const VectorClock& clock);

/// x < y iff every function strictly increases, over all ordered pairs.
CheckResult verify_rp_multiutility(const StrictPoset& p, const MultiUtility& family);

/// a R x iff u(a) < v(x) (strict) or u(a) <= v(x) (weak), over all pairs.
CheckResult verify_biorder_representation(const Biorder& rel, const BiorderRep& rep);

/// For all ordered pairs x != y: x happened before y iff some sigma defined
/// on both increases from x to y and every sigma defined on both does.
CheckResult verify_partial_representation(const DistributedSystem& sys, const PartialRepresentation& rep);

}  // namespace dsorder
