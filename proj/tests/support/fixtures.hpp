#pragma once

#include <string>

#include "dsorder/multiutility.hpp"
#include "dsorder/poset.hpp"
#include "dsorder/system.hpp"

namespace testkit {

/// Raw text of tests/fixtures/<name>.jsonl.
std::string fixture_text(const std::string& name);
dsorder::DistributedSystem fixture_system(const std::string& name);
dsorder::StrictPoset fixture_poset(const std::string& name);

/// The two three-element posets of the causal biorder example: a1 above a2
/// and a3, b1 above b2 and b3 (element order 1, 2, 3).
dsorder::StrictPoset vee_poset(const std::string& prefix);

/// The concatenated tuple u = (0, 1), v = (1, 2), w = (1, 2) on the
/// six-event example system, as a one-member family.
dsorder::MultiUtility naive_tuple();

/// Reference rankings of the quotient example, over fquotient2's element order
/// (y1, x1, x2, y3, x3).
dsorder::MultiUtility quotient_rankings();

}  // namespace testkit
