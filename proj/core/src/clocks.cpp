#include <functional>
#include <queue>

#include "dsorder/causal.hpp"
#include "dsorder/represent.hpp"

namespace dsorder {
namespace {

/// Immediate predecessors per global event: the previous event on the chain
/// and the sender of a message received there.
struct EdgeLists {
  std::vector<std::vector<std::size_t>> preds;
  std::vector<std::vector<std::size_t>> succs;
};

EdgeLists edge_lists(const DistributedSystem& sys) {
  if (!sys.references_resolved()) throw Error("system has dangling event references");
  EdgeLists e;
  e.preds.resize(sys.event_count());
  e.succs.resize(sys.event_count());
  const auto link = [&](std::size_t a, std::size_t b) {
    e.preds[b].push_back(a);
    e.succs[a].push_back(b);
  };
  for (std::size_t p = 0; p < sys.process_count(); ++p) {
    for (std::size_t k = 0; k + 1 < sys.process(p).size(); ++k) link(sys.global_index({p, k}), sys.global_index({p, k + 1}));
  }
  for (const auto& c : sys.communications()) {
    const auto from = sys.process_index(c.from);
    const auto to = sys.process_index(c.to);
    for (const auto& m : c.pairs) link(sys.global_index({from, m.sender}), sys.global_index({to, m.receiver}));
  }
  return e;
}

/// Kahn's algorithm, always taking the smallest ready (process, index).
/// Throws CycleError when some events are never ready.
std::vector<std::size_t> topological_order(const DistributedSystem& sys, const EdgeLists& e) {
  std::vector<std::size_t> indegree(sys.event_count(), 0);
  for (std::size_t v = 0; v < indegree.size(); ++v) indegree[v] = e.preds[v].size();
  std::priority_queue<std::size_t, std::vector<std::size_t>, std::greater<>> ready;
  for (std::size_t v = 0; v < indegree.size(); ++v) {
    if (indegree[v] == 0) ready.push(v);
  }
  std::vector<std::size_t> order;
  while (!ready.empty()) {
    const auto v = ready.top();
    ready.pop();
    order.push_back(v);
    for (const auto w : e.succs[v]) {
      if (--indegree[w] == 0) ready.push(w);
    }
  }
  if (order.size() < indegree.size()) require_acyclic(sys);
  return order;
}

}  // namespace

ClockAssignment lamport_clocks(const DistributedSystem& sys) {
  const auto e = edge_lists(sys);
  std::vector<std::int64_t> clock(sys.event_count(), 0);
  for (const auto v : topological_order(sys, e)) {
    std::int64_t base = 0;
    for (const auto u : e.preds[v]) base = std::max(base, clock[u]);
    clock[v] = base + 1;
  }
  ClockAssignment out{ClockKind::lamport, {}};
  for (const auto c : clock) out.values.emplace_back(c);
  return out;
}

VectorClock vector_clocks(const DistributedSystem& sys) {
  const auto e = edge_lists(sys);
  const std::size_t n = sys.process_count();
  VectorClock out;
  out.values.assign(sys.event_count(), std::vector<std::int64_t>(n, 0));
  for (const auto v : topological_order(sys, e)) {
    auto& mine = out.values[v];
    for (const auto u : e.preds[v]) {
      for (std::size_t p = 0; p < n; ++p) mine[p] = std::max(mine[p], out.values[u][p]);
    }
    ++mine[sys.event_at(v).process];
  }
  return out;
}

}  // namespace dsorder
