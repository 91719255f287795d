#include "dsorder/quotient.hpp"

#include "dsorder/biorder.hpp"
#include "dsorder/causal.hpp"
#include "dsorder/error.hpp"

namespace dsorder {
namespace {

void require_intervals(const RankedPartition& part) {
  for (const auto& cls : part.classes) {
    for (std::size_t k = 1; k < cls.size(); ++k) {
      if (cls[k] != cls[k - 1] + 1) throw Error("internal: trace class is not an interval of its chain");
    }
  }
}

ChainPartition partition_unchecked(const DistributedSystem& sys, std::size_t i) {
  const std::size_t m = sys.process(i).size();
  std::vector<char> cut(m > 0 ? m - 1 : 0, 0);
  const auto mark = [&](const RankedPartition& part) {
    require_intervals(part);
    for (std::size_t k = 0; k + 1 < m; ++k) {
      if (!part.equivalent(k, k + 1)) cut[k] = 1;
    }
  };
  for (std::size_t j = 0; j < sys.process_count(); ++j) {
    if (j == i) continue;
    if (!sys.messages(i, j).empty()) mark(traces(induced_biorder(sys, i, j)).left);
    if (!sys.messages(j, i).empty()) mark(traces(induced_biorder(sys, j, i)).right);
  }
  ChainPartition out;
  for (std::size_t k = 0; k < m; ++k) {
    if (k == 0 || cut[k - 1]) out.emplace_back();
    out.back().push_back(k);
  }
  return out;
}

}  // namespace

ChainPartition class_partition(const DistributedSystem& sys, std::size_t i) {
  require_acyclic(sys);
  return partition_unchecked(sys, i);
}

ChainPartition class_partition(const DistributedSystem& sys, const std::string& id) {
  return class_partition(sys, sys.process_index(id));
}

QuotientSystem quotient_system(const DistributedSystem& sys) {
  const auto order = require_acyclic(sys);
  QuotientSystem q;
  q.class_of.assign(sys.event_count(), 0);
  std::vector<std::string> names;
  std::vector<std::vector<std::size_t>> members;  // global event indices per class
  for (std::size_t p = 0; p < sys.process_count(); ++p) {
    q.offsets.push_back(names.size());
    q.classes.push_back(partition_unchecked(sys, p));
    for (std::size_t c = 0; c < q.classes[p].size(); ++c) {
      names.push_back(sys.process(p).id() + "#" + std::to_string(c));
      members.emplace_back();
      for (const auto k : q.classes[p][c]) {
        const auto g = sys.global_index({p, k});
        q.class_of[g] = names.size() - 1;
        members.back().push_back(g);
      }
    }
  }

  std::vector<ElementPair> pairs;
  for (std::size_t c = 0; c < members.size(); ++c) {
    for (std::size_t d = 0; d < members.size(); ++d) {
      if (c == d) continue;
      std::size_t hits = 0;
      for (const auto x : members[c]) {
        for (const auto y : members[d]) hits += order.less(x, y) ? 1 : 0;
      }
      if (hits == 0) continue;
      if (hits != members[c].size() * members[d].size()) {
        throw Error("quotient projection is not well defined between " + names[c] + " and " + names[d]);
      }
      pairs.emplace_back(c, d);
    }
  }
  q.poset = close_or_throw(std::move(names), pairs);
  return q;
}

DistributedSystem to_system(const DistributedSystem& sys, const QuotientSystem& q) {
  std::vector<ProcessChain> processes;
  for (std::size_t p = 0; p < sys.process_count(); ++p) {
    std::vector<std::string> labels;
    for (std::size_t c = 0; c < q.classes.at(p).size(); ++c) labels.push_back(q.poset.name(q.offsets.at(p) + c));
    processes.emplace_back(sys.process(p).id(), std::move(labels));
  }
  std::vector<Communication> comms;
  for (const auto& c : sys.communications()) {
    const auto from = sys.process_index(c.from);
    const auto to = sys.process_index(c.to);
    Communication out{c.from, c.to, {}};
    for (const auto& m : c.pairs) {
      const auto send = q.class_of.at(sys.global_index({from, m.sender})) - q.offsets[from];
      const auto recv = q.class_of.at(sys.global_index({to, m.receiver})) - q.offsets[to];
      out.pairs.push_back({send, recv});
    }
    comms.push_back(std::move(out));
  }
  return DistributedSystem(std::move(processes), std::move(comms));
}

}  // namespace dsorder
