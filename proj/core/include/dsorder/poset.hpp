#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "dsorder/multiutility.hpp"
#include "dsorder/system.hpp"

namespace dsorder {

using ElementPair = std::pair<std::size_t, std::size_t>;

/// Finite strict partial order over elements 0..n-1, stored transitively
/// closed. Element order (by index) is the tie-breaking order everywhere.
class StrictPoset {
 public:
  StrictPoset() = default;
  /// Antichain over the given names.
  explicit StrictPoset(std::vector<std::string> names);

  std::size_t size() const { return names_.size(); }
  const std::vector<std::string>& names() const { return names_; }
  const std::string& name(std::size_t i) const { return names_.at(i); }
  std::optional<std::size_t> index_of(const std::string& name) const;

  bool less(std::size_t i, std::size_t j) const {
    return (bits_[i * words_ + j / 64] >> (j % 64)) & 1U;
  }
  bool comparable(std::size_t i, std::size_t j) const { return less(i, j) || less(j, i); }
  bool incomparable(std::size_t i, std::size_t j) const { return i != j && !comparable(i, j); }

  /// All i<j pairs, sorted.
  std::vector<ElementPair> pairs() const;
  std::size_t relation_size() const;
  /// Strict up-set {j : i < j} and down-set {j : j < i}, ascending.
  std::vector<std::size_t> above(std::size_t i) const;
  std::vector<std::size_t> below(std::size_t i) const;

  /// Same relation, structurally (names included).
  friend bool operator==(const StrictPoset&, const StrictPoset&) = default;

 private:
  friend struct PosetAccess;
  std::vector<std::string> names_;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> bits_;
};

/// A cycle in a relation: element ids with front() == back().
struct CycleWitness {
  std::vector<std::size_t> cycle;

  friend bool operator==(const CycleWitness&, const CycleWitness&) = default;
};

using ClosureResult = std::variant<StrictPoset, CycleWitness>;

inline bool is_cycle(const ClosureResult& r) { return std::holds_alternative<CycleWitness>(r); }

/// Minimal transitive superset of `pairs` over elements named `names`, or the
/// first cycle found by a depth-first scan in element order. A reflexive
/// input pair (a, a) is reported as the cycle [a, a].
ClosureResult transitive_closure(std::vector<std::string> names, std::span<const ElementPair> pairs);

/// Convenience: closure that throws Error (with the cycle spelled out) instead
/// of returning a witness.
StrictPoset close_or_throw(std::vector<std::string> names, std::span<const ElementPair> pairs);

/// Cover pairs (Hasse edges), sorted.
std::vector<ElementPair> transitive_reduction(const StrictPoset& p);

/// Minimum chain cover (Dilworth) by bipartite matching over comparabilities.
/// Each chain is ascending; chains are ordered by their least element.
/// Matching candidates are tried covers first, then by element index.
std::vector<std::vector<std::size_t>> minimum_chain_cover(const StrictPoset& p);

/// A maximum antichain, ascending, derived from the matching via König.
std::vector<std::size_t> maximum_antichain(const StrictPoset& p);

/// Size of a maximum antichain (0 only for the empty poset).
std::size_t width(const StrictPoset& p);

/// Largest poset linear_extensions enumerates without an explicit limit.
inline constexpr std::size_t kExhaustiveExtensionLimit = 12;

/// Linear extensions in lexicographic order of element ids. With no limit the
/// poset may have at most kExhaustiveExtensionLimit elements.
std::vector<std::vector<std::size_t>> linear_extensions(const StrictPoset& p,
                                                        std::optional<std::size_t> limit = std::nullopt);

bool is_linear_extension(const StrictPoset& p, std::span<const std::size_t> order);

/// A family of linear extensions whose intersection is the poset.
struct Realizer {
  std::vector<std::vector<std::size_t>> extensions;

  std::size_t size() const { return extensions.size(); }
};

/// True iff every member is a linear extension and their intersection is
/// exactly the strict relation of p.
bool is_realizer(const StrictPoset& p, const Realizer& r);

/// Pairs (a, b) with a || b, down(a) within down(b) and up(b) within up(a).
/// A family of linear extensions realizes p iff each such pair is reversed
/// (b before a) by at least one member.
std::vector<ElementPair> critical_pairs(const StrictPoset& p);

struct DimensionResult {
  std::size_t dimension = 0;
  Realizer realizer;
};

inline constexpr std::size_t kMaxDimensionElements = 10;
inline constexpr std::uint64_t kDefaultStepBudget = 50'000'000;

/// Exact order dimension with a witnessing realizer, for posets of at most
/// kMaxDimensionElements elements. Tries k = 1, 2, ... and assigns critical
/// pairs to k extensions by backtracking. Throws Error above the size cap and
/// BudgetExceeded when the search would exceed `step_budget` steps.
DimensionResult order_dimension(const StrictPoset& p, std::uint64_t step_budget = kDefaultStepBudget);

/// First-fit realizer: each critical pair goes into the first extension it
/// is consistent with. Always a realizer; not necessarily minimum.
Realizer greedy_realizer(const StrictPoset& p);

/// Each extension becomes a ranking onto 1..n (position + 1).
MultiUtility bijective_multiutility(const Realizer& r);

/// Turns a chain partition of p into a distributed system: one process per
/// chain (ids P1, P2, ...), event labels from element names, and one message
/// per cover edge that crosses chains.
DistributedSystem system_from_chains(const StrictPoset& p, const std::vector<std::vector<std::size_t>>& chains);

/// A fewest-chains distributed system whose causal precedence is p.
/// Throws Error("no bijective decomposition found within bounds") if no
/// decomposition passes validation.
DistributedSystem synthesize_system(const StrictPoset& p);

/// Every partition of p into chains (up to `limit`), each turned into a
/// system via system_from_chains. Enumeration assigns elements in the order
/// of the first linear extension.
std::vector<DistributedSystem> enumerate_decompositions(const StrictPoset& p, std::size_t limit);

}  // namespace dsorder
