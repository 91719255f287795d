#pragma once

#include <string>

#include "dsorder/poset.hpp"
#include "dsorder/system.hpp"

namespace dsorder {

enum class DotMode { spacetime, hasse };

/// spacetime: one cluster column per process with solid chain edges and
/// dashed message edges. hasse: cover edges of the causal precedence only
/// (throws CycleError on a deadlock).
std::string export_dot(const DistributedSystem& sys, DotMode mode);

/// Posets have no processes; both modes draw the cover edges.
std::string export_dot(const StrictPoset& p, DotMode mode = DotMode::hasse);

}  // namespace dsorder
