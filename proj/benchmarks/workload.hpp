#pragma once

#include <cstddef>
#include <random>
#include <string>
#include <vector>

#include "dsorder/poset.hpp"
#include "dsorder/system.hpp"

namespace bench {

/// Acyclic, bijective system: `processes` chains of `events` each, with a
/// message from a random event to a later-stamped event elsewhere.
inline dsorder::DistributedSystem workload_system(std::size_t processes, std::size_t events, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<dsorder::ProcessChain> chains;
  for (std::size_t p = 0; p < processes; ++p) chains.emplace_back("P" + std::to_string(p), events);
  std::vector<dsorder::Communication> comms;
  std::uniform_int_distribution<std::size_t> pick(0, events - 1);
  for (std::size_t p = 0; p < processes; ++p) {
    const std::size_t q = (p + 1) % processes;
    if (q == p) continue;
    dsorder::Communication c{chains[p].id(), chains[q].id(), {}};
    // Send k to receive k+1 keeps stamps increasing along the ring only from
    // p < q; the wrap-around channel stays empty to avoid cycles.
    if (q > p) {
      for (std::size_t k = 0; k + 1 < events; k += 2) {
        if (pick(rng) % 2 == 0) c.pairs.push_back({k, k + 1});
      }
    }
    comms.push_back(std::move(c));
  }
  return dsorder::DistributedSystem(std::move(chains), std::move(comms));
}

inline dsorder::StrictPoset workload_poset(std::size_t n, double p, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution edge(p);
  std::vector<std::string> names;
  for (std::size_t k = 0; k < n; ++k) names.push_back("v" + std::to_string(k));
  std::vector<dsorder::ElementPair> pairs;
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      if (edge(rng)) pairs.emplace_back(a, b);
    }
  }
  return dsorder::close_or_throw(std::move(names), pairs);
}

}  // namespace bench
