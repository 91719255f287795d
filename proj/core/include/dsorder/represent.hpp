#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "dsorder/biorder.hpp"
#include "dsorder/multiutility.hpp"
#include "dsorder/quotient.hpp"
#include "dsorder/rational.hpp"
#include "dsorder/system.hpp"

namespace dsorder {

/// Event k of a chain of length m maps to (k+1)/(m+1).
std::vector<Rational> chain_utility(std::size_t length);
std::vector<Rational> chain_utility(const ProcessChain& chain);

enum class RepMode { strict, weak };

/// Pair of functions on a biorder's domain and codomain.
/// strict: a R x iff u(a) < v(x). weak: a R x iff u(a) <= v(x).
struct BiorderRep {
  std::vector<Rational> u;
  std::vector<Rational> v;
  RepMode mode = RepMode::strict;

  friend bool operator==(const BiorderRep&, const BiorderRep&) = default;
};

/// Strict representation whose components also strictly increase along both
/// chains, with values in (0, 1). Needs a monotone Ferrers relation; throws
/// Error otherwise.
BiorderRep build_biorder_representation(const Biorder& rel);

/// Accepted input range of the operators. Iterated operators see the empty
/// set conventions 0 and 1 among their inputs and need the closed range.
enum class ValueRange { open, closed };

/// Lower operator: x -> min{v(y) : x R y}, or 1 when x relates to nothing.
std::vector<Rational> op_lower(const Biorder& rel, std::span<const Rational> v, ValueRange range = ValueRange::open);
/// Upper operator: y -> max{u(x) : x R y}, or 0 when nothing relates to y.
std::vector<Rational> op_upper(const Biorder& rel, std::span<const Rational> u, ValueRange range = ValueRange::open);

enum class ClockKind { weak, full_member, lamport };

/// One value per event, indexed by global event index.
struct ClockAssignment {
  ClockKind kind = ClockKind::weak;
  std::vector<Rational> values;

  friend bool operator==(const ClockAssignment&, const ClockAssignment&) = default;
};

/// Weak representation of a line system (messages only from process i to
/// i+1) from strict representations reps[i] of the induced biorder between
/// processes i and i+1. Each reps[i] must represent its biorder, strictly
/// increase on both chains and take values in (0, 1); throws Error
/// otherwise, or when the system is not a line.
ClockAssignment aggregate_line_weak(const DistributedSystem& sys, std::span<const BiorderRep> reps);
/// Same, with reps from build_biorder_representation.
ClockAssignment aggregate_line_weak(const DistributedSystem& sys);

/// Classic logical clocks starting at 1. Throws CycleError on a deadlock.
ClockAssignment lamport_clocks(const DistributedSystem& sys);

/// values[e][p] is event e's count of events seen on process p.
struct VectorClock {
  std::vector<std::vector<std::int64_t>> values;

  friend bool operator==(const VectorClock&, const VectorClock&) = default;
};

/// Throws CycleError on a deadlock.
VectorClock vector_clocks(const DistributedSystem& sys);

/// Multi-utility of the causal precedence: v_l(x) = u_l(class of x) + w_p(x)
/// with u_l the rankings of a realizer of the quotient poset and w_p the
/// chain utility of x's process. Uses a minimum realizer when the quotient
/// is small enough, a greedy one otherwise.
MultiUtility rp_multiutility_from_quotient(const DistributedSystem& sys);
/// Same construction with given utilities over the quotient's classes.
MultiUtility rp_multiutility_from_quotient(const DistributedSystem& sys, const QuotientSystem& q,
                                           const MultiUtility& class_utilities);

/// functions[l][p][k] is function l at event k of process p.
struct ProcessFamily {
  std::vector<std::vector<std::vector<Rational>>> functions;

  friend bool operator==(const ProcessFamily&, const ProcessFamily&) = default;
};

/// Glues per-process functions into global ones and back. Both throw Error
/// when the shapes do not match the system.
MultiUtility glue_family(const DistributedSystem& sys, const ProcessFamily& family);
ProcessFamily restrict_family(const DistributedSystem& sys, const MultiUtility& global);

/// Inputs of the three-process partial representation, as strict pairs:
/// r12 = (u1, v1) for 1->2, r23 = (v2, w1) for 2->3 and r13 = (u2, w2) for
/// the composed relation 1->3.
struct Line3Reps {
  BiorderRep r12;
  BiorderRep r23;
  BiorderRep r13;
};

/// sigma[s][e] for global event e; nullopt where sigma s is undefined.
struct PartialRepresentation {
  std::array<std::vector<std::optional<Rational>>, 3> sigma;
};

/// Throws Error unless sys is a three-process line and every rep matches
/// its chains.
PartialRepresentation partial_representation_line3(const DistributedSystem& sys, const Line3Reps& reps);
/// Same, with reps from build_biorder_representation; the 1->3 relation is
/// the composition of the two induced biorders.
PartialRepresentation partial_representation_line3(const DistributedSystem& sys);

}  // namespace dsorder
