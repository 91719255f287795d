#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "dsorder/poset.hpp"
#include "dsorder/system.hpp"

namespace dsorder {

/// A relation from one finite chain (the domain) to another (the codomain).
/// Element k of either side is the k-th element of its chain.
class Biorder {
 public:
  Biorder() = default;
  Biorder(std::vector<std::string> domain, std::vector<std::string> codomain, std::span<const ElementPair> pairs);
  /// Unnamed sides of the given sizes.
  Biorder(std::size_t domain_size, std::size_t codomain_size, std::span<const ElementPair> pairs);

  std::size_t domain_size() const { return domain_.size(); }
  std::size_t codomain_size() const { return codomain_.size(); }
  const std::vector<std::string>& domain() const { return domain_; }
  const std::vector<std::string>& codomain() const { return codomain_; }

  bool related(std::size_t a, std::size_t x) const { return rel_[a * codomain_.size() + x] != 0; }
  bool empty() const;
  /// Related pairs in (domain, codomain) order.
  std::vector<ElementPair> pairs() const;
  /// Codomain elements related to a, and domain elements related to x.
  std::vector<std::size_t> up_set(std::size_t a) const;
  std::vector<std::size_t> down_set(std::size_t x) const;

  friend bool operator==(const Biorder&, const Biorder&) = default;

 private:
  std::vector<std::string> domain_;
  std::vector<std::string> codomain_;
  std::vector<char> rel_;
};

/// Total preorder stored as ordered indifference classes, lowest first.
struct RankedPartition {
  std::vector<std::vector<std::size_t>> classes;
  std::vector<std::size_t> class_of;

  std::size_t size() const { return classes.size(); }
  bool equivalent(std::size_t a, std::size_t b) const { return class_of.at(a) == class_of.at(b); }
  bool strictly_below(std::size_t a, std::size_t b) const { return class_of.at(a) < class_of.at(b); }
  bool weakly_below(std::size_t a, std::size_t b) const { return class_of.at(a) <= class_of.at(b); }

  friend bool operator==(const RankedPartition&, const RankedPartition&) = default;
};

/// The two traces of a biorder: `left` on the domain (a is weakly below b
/// when every x related to b is related to a) and `right` on the codomain (x
/// is weakly below y when every c related to x is related to y).
struct TracePair {
  RankedPartition left;
  RankedPartition right;
};

/// The relation induced between processes i and j: x relates to y when
/// x <= a, (a, b) is a message from i to j, and b <= y. Throws Error for
/// i == j or unknown processes.
Biorder induced_biorder(const DistributedSystem& sys, std::size_t i, std::size_t j);
Biorder induced_biorder(const DistributedSystem& sys, const std::string& from, const std::string& to);

/// (a R x and b R y) implies (a R y or b R x).
bool is_ferrers(const Biorder& rel);

/// Closed under the chain orders: x <= x', x' R y, y <= y' imply x R y'.
bool is_monotone(const Biorder& rel);

/// For partial orders A, B and pairs from A to B: every two pairs (a, b),
/// (c, d) satisfy a -> d or c -> b, where -> is the causal precedence of
/// A, B and the pairs together.
bool is_causal_biorder(const StrictPoset& a, const StrictPoset& b, std::span<const ElementPair> pairs);

/// Throws Error when rel is not Ferrers.
TracePair traces(const Biorder& rel);

/// Biorder over trace classes, with the classes it was built from.
struct QuotientBiorder {
  Biorder relation;
  RankedPartition domain_classes;
  RankedPartition codomain_classes;
};

/// Throws Error when rel is not Ferrers.
QuotientBiorder quotient_biorder(const Biorder& rel);

/// Inverse of quotient_biorder over the original element names.
Biorder expand(const QuotientBiorder& q, std::vector<std::string> domain, std::vector<std::string> codomain);

/// Relational composition: a (first;second) c iff a first b and b second c
/// for some b. first's codomain must be second's domain.
Biorder compose(const Biorder& first, const Biorder& second);

}  // namespace dsorder
