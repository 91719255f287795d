#pragma once

#include <cstddef>
#include <vector>

#include "dsorder/poset.hpp"
#include "dsorder/system.hpp"

// Exhaustive reference computations for tests. Exponential time.

namespace testkit {

using BoolMatrix = std::vector<std::vector<bool>>;

/// Floyd-Warshall over chain edges and messages; ignores dangling references.
BoolMatrix brute_reach(const dsorder::DistributedSystem& sys);

/// Floyd-Warshall over explicit pairs.
BoolMatrix brute_closure(std::size_t n, const std::vector<dsorder::ElementPair>& pairs);

/// Same element names and the same relation between equally named elements.
bool same_order_by_name(const dsorder::StrictPoset& a, const dsorder::StrictPoset& b);

/// Largest antichain, by scanning all subsets.
std::size_t brute_width(const dsorder::StrictPoset& p);

/// All permutations that respect p, in lexicographic order.
std::vector<std::vector<std::size_t>> brute_linear_extensions(const dsorder::StrictPoset& p);

/// Whether some k linear extensions intersect to p.
bool brute_realizer_exists(const dsorder::StrictPoset& p, std::size_t k);

/// Intersection of the given linear orders equals p.
bool realizes(const dsorder::StrictPoset& p, const std::vector<std::vector<std::size_t>>& orders);

}  // namespace testkit
