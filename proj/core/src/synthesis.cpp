#include <algorithm>
#include <functional>
#include <map>

#include "dsorder/causal.hpp"
#include "dsorder/error.hpp"
#include "dsorder/poset.hpp"

namespace dsorder {

DistributedSystem system_from_chains(const StrictPoset& p, const std::vector<std::vector<std::size_t>>& chains) {
  constexpr std::size_t npos = static_cast<std::size_t>(-1);
  std::vector<std::size_t> chain_of(p.size(), npos);
  std::vector<std::size_t> index_in(p.size(), 0);
  std::vector<ProcessChain> processes;
  for (std::size_t c = 0; c < chains.size(); ++c) {
    std::vector<std::string> labels;
    for (std::size_t k = 0; k < chains[c].size(); ++k) {
      const std::size_t x = chains[c][k];
      if (x >= p.size() || chain_of[x] != npos) throw Error("chains must partition the poset");
      if (k > 0 && !p.less(chains[c][k - 1], x)) throw Error("chain members must be increasing");
      chain_of[x] = c;
      index_in[x] = k;
      labels.push_back(p.name(x));
    }
    processes.emplace_back("P" + std::to_string(c + 1), std::move(labels));
  }
  if (std::find(chain_of.begin(), chain_of.end(), npos) != chain_of.end()) {
    throw Error("chains must partition the poset");
  }

  std::map<std::pair<std::size_t, std::size_t>, Communication> comms;
  for (const auto& [a, b] : transitive_reduction(p)) {
    if (chain_of[a] == chain_of[b]) continue;
    auto& comm = comms[{chain_of[a], chain_of[b]}];
    comm.from = processes[chain_of[a]].id();
    comm.to = processes[chain_of[b]].id();
    comm.pairs.push_back({index_in[a], index_in[b]});
  }
  std::vector<Communication> list;
  for (auto& [key, c] : comms) list.push_back(std::move(c));
  return DistributedSystem(std::move(processes), std::move(list));
}

std::vector<DistributedSystem> enumerate_decompositions(const StrictPoset& p, std::size_t limit) {
  std::vector<DistributedSystem> out;
  if (limit == 0) return out;
  const auto orders = linear_extensions(p, 1);
  if (orders.empty()) return out;
  const auto& order = orders.front();

  // Each element joins an existing chain whose current top lies below it,
  // or opens a new chain. Chains are numbered by creation, so each partition
  // is produced exactly once.
  std::vector<std::vector<std::size_t>> chains;
  std::function<bool(std::size_t)> place = [&](std::size_t k) {
    if (k == order.size()) {
      out.push_back(system_from_chains(p, chains));
      return out.size() >= limit;
    }
    const std::size_t x = order[k];
    for (std::size_t c = 0; c < chains.size(); ++c) {
      if (!p.less(chains[c].back(), x)) continue;
      chains[c].push_back(x);
      const bool stop = place(k + 1);
      chains[c].pop_back();
      if (stop) return true;
    }
    chains.push_back({x});
    const bool stop = place(k + 1);
    chains.pop_back();
    return stop;
  };
  place(0);
  return out;
}

DistributedSystem synthesize_system(const StrictPoset& p) {
  auto sys = system_from_chains(p, minimum_chain_cover(p));
  if (validate_system(sys).empty()) return sys;

  // Cross-chain covers never share an endpoint within one target chain, so
  // the branch below only guards hand-built inputs.
  if (p.size() <= kMaxDimensionElements) {
    const std::size_t fewest = width(p);
    for (auto& candidate : enumerate_decompositions(p, static_cast<std::size_t>(-1))) {
      if (candidate.process_count() == fewest && validate_system(candidate).empty()) return candidate;
    }
    for (auto& candidate : enumerate_decompositions(p, static_cast<std::size_t>(-1))) {
      if (validate_system(candidate).empty()) return candidate;
    }
  }
  throw Error("no bijective decomposition found within bounds");
}

}  // namespace dsorder
