#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "dsorder/poset.hpp"
#include "dsorder/system.hpp"

namespace dsorder {

/// Events of one process grouped into consecutive classes, in chain order.
/// Each class lists event indices.
using ChainPartition = std::vector<std::vector<std::size_t>>;

/// Events of process i are equivalent when they share a trace class in every
/// induced biorder touching i (domain side for outgoing directions, codomain
/// side for incoming ones). Throws CycleError on a deadlock.
ChainPartition class_partition(const DistributedSystem& sys, std::size_t i);
ChainPartition class_partition(const DistributedSystem& sys, const std::string& id);

/// Finite quotient of the causal precedence.
struct QuotientSystem {
  /// classes[p] partitions process p.
  std::vector<ChainPartition> classes;
  /// Classes numbered process by process; names are "<process>#<ordinal>".
  StrictPoset poset;
  /// Global event index -> class index in `poset`.
  std::vector<std::size_t> class_of;
  /// First class index of each process.
  std::vector<std::size_t> offsets;

  std::size_t class_count() const { return poset.size(); }
};

/// Partitions every process and projects the causal precedence onto the
/// classes. Throws CycleError on a deadlock and Error if the projection is
/// not well defined.
QuotientSystem quotient_system(const DistributedSystem& sys);

/// Re-encodes the quotient of sys as a system over the same process ids with
/// one event per class (labelled with the class name) and every message of
/// sys mapped to its endpoint classes.
DistributedSystem to_system(const DistributedSystem& sys, const QuotientSystem& q);

}  // namespace dsorder
