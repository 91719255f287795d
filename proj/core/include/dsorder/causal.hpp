#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dsorder/error.hpp"
#include "dsorder/poset.hpp"
#include "dsorder/system.hpp"

namespace dsorder {

enum class ViolationKind {
  duplicate_process,
  unknown_process,
  event_out_of_range,
  self_communication,
  duplicate_sender,
  duplicate_receiver,
};

struct Violation {
  ViolationKind kind;
  std::string message;

  friend bool operator==(const Violation&, const Violation&) = default;
};

/// Structural problems: duplicate process ids, dangling references,
/// self-communications, and senders or receivers that occur in two pairs of
/// one communication. Empty means valid.
std::vector<Violation> validate_system(const DistributedSystem& sys);

/// Raised by operations that need an acyclic causal precedence.
class CycleError : public Error {
 public:
  CycleError(std::string what, CycleWitness witness) : Error(std::move(what)), witness_(std::move(witness)) {}
  const CycleWitness& witness() const { return witness_; }

 private:
  CycleWitness witness_;
};

/// Happened-before over global event indices (names from event_name), i.e.
/// the transitive closure of all chain orders and message pairs, or a cycle
/// witness (a deadlock). Throws Error if the system has dangling references.
ClosureResult causal_closure(const DistributedSystem& sys);

/// causal_closure, throwing CycleError on a deadlock.
StrictPoset require_acyclic(const DistributedSystem& sys);

/// Two messages of one channel direction: `first` was sent before `second`
/// but received after it.
struct OrderingViolation {
  std::size_t from = 0;
  std::size_t to = 0;
  Message first;
  Message second;

  friend bool operator==(const OrderingViolation&, const OrderingViolation&) = default;
};

std::vector<OrderingViolation> check_causal_message_ordering(const DistributedSystem& sys);

/// Unordered incomparable pairs {i, j}, reported with i < j.
std::vector<ElementPair> concurrent_pairs(const StrictPoset& order);
/// Throws CycleError on a deadlock.
std::vector<ElementPair> concurrent_pairs(const DistributedSystem& sys);

struct CausalReport {
  std::optional<StrictPoset> closure;
  std::optional<CycleWitness> cycle;
  std::vector<OrderingViolation> ordering_violations;
  std::vector<Violation> structural_violations;

  bool clean() const {
    return closure && ordering_violations.empty() && structural_violations.empty();
  }
};

/// Every diagnostic at once. The closure is only attempted when references
/// resolve.
CausalReport analyze(const DistributedSystem& sys);

enum class CommunicationVerdictKind {
  closures_differ,
  equal_communications,
  /// Communications differ and one system breaks message ordering or
  /// bijectivity (the escape clauses of the uniqueness result).
  explained_by_violation,
  /// Communications differ with no violation in either system. Only possible
  /// outside the hypothesis of the uniqueness result (more than one channel
  /// direction that is not a line).
  unexplained_difference,
};

struct CommunicationVerdict {
  CommunicationVerdictKind kind;
  std::string detail;
};

/// Compares two systems over identical processes. Throws Error if the
/// process lists differ and CycleError if either system deadlocks.
CommunicationVerdict same_causal_implies_same_comm(const DistributedSystem& sys1, const DistributedSystem& sys2);

/// True when every nonempty communication goes from process i to i+1.
bool has_line_communication(const DistributedSystem& sys);

std::string describe_cycle(const DistributedSystem& sys, const CycleWitness& cycle);
std::string describe(const DistributedSystem& sys, const OrderingViolation& v);

}  // namespace dsorder
