#include "dsorder/causal.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace dsorder {

std::vector<Violation> validate_system(const DistributedSystem& sys) {
  std::vector<Violation> out;
  std::set<std::string> seen;
  for (const auto& p : sys.processes()) {
    if (!seen.insert(p.id()).second) {
      out.push_back({ViolationKind::duplicate_process, "process id " + p.id() + " used twice"});
    }
  }

  for (const auto& c : sys.communications()) {
    const std::string channel = c.from + "->" + c.to;
    const auto from = sys.find_process(c.from);
    const auto to = sys.find_process(c.to);
    if (!from) out.push_back({ViolationKind::unknown_process, "communication " + channel + " names unknown process " + c.from});
    if (!to) out.push_back({ViolationKind::unknown_process, "communication " + channel + " names unknown process " + c.to});
    if (!from || !to) continue;
    if (*from == *to) {
      out.push_back({ViolationKind::self_communication, "communication " + channel + " stays inside one process"});
    }

    bool in_range = true;
    for (const auto& m : c.pairs) {
      if (m.sender >= sys.process(*from).size()) {
        out.push_back({ViolationKind::event_out_of_range,
                       "sender index " + std::to_string(m.sender) + " out of range in " + channel});
        in_range = false;
      }
      if (m.receiver >= sys.process(*to).size()) {
        out.push_back({ViolationKind::event_out_of_range,
                       "receiver index " + std::to_string(m.receiver) + " out of range in " + channel});
        in_range = false;
      }
    }
    if (!in_range) continue;

    std::map<std::size_t, std::size_t> senders;
    std::map<std::size_t, std::size_t> receivers;
    for (const auto& m : c.pairs) {
      ++senders[m.sender];
      ++receivers[m.receiver];
    }
    for (const auto& [sender, count] : senders) {
      if (count > 1) {
        out.push_back({ViolationKind::duplicate_sender,
                       "sender " + sys.event_name(EventRef{*from, sender}) + " duplicated in " + channel});
      }
    }
    for (const auto& [receiver, count] : receivers) {
      if (count > 1) {
        out.push_back({ViolationKind::duplicate_receiver,
                       "receiver " + sys.event_name(EventRef{*to, receiver}) + " duplicated in " + channel});
      }
    }
  }
  return out;
}

ClosureResult causal_closure(const DistributedSystem& sys) {
  if (!sys.references_resolved()) throw Error("system has dangling event references");
  std::vector<ElementPair> edges;
  for (std::size_t p = 0; p < sys.process_count(); ++p) {
    for (std::size_t k = 0; k + 1 < sys.process(p).size(); ++k) {
      edges.emplace_back(sys.global_index({p, k}), sys.global_index({p, k + 1}));
    }
  }
  for (const auto& c : sys.communications()) {
    const auto from = sys.process_index(c.from);
    const auto to = sys.process_index(c.to);
    for (const auto& m : c.pairs) {
      edges.emplace_back(sys.global_index({from, m.sender}), sys.global_index({to, m.receiver}));
    }
  }
  return transitive_closure(sys.event_names(), edges);
}

StrictPoset require_acyclic(const DistributedSystem& sys) {
  auto result = causal_closure(sys);
  if (const auto* cycle = std::get_if<CycleWitness>(&result)) {
    throw CycleError("deadlock: " + describe_cycle(sys, *cycle), *cycle);
  }
  return std::get<StrictPoset>(std::move(result));
}

std::vector<OrderingViolation> check_causal_message_ordering(const DistributedSystem& sys) {
  std::vector<OrderingViolation> out;
  for (std::size_t i = 0; i < sys.process_count(); ++i) {
    for (std::size_t j = 0; j < sys.process_count(); ++j) {
      if (i == j) continue;
      const auto& msgs = sys.messages(i, j);
      for (const auto& m1 : msgs) {
        for (const auto& m2 : msgs) {
          if (m1.sender < m2.sender && m2.receiver < m1.receiver) out.push_back({i, j, m1, m2});
        }
      }
    }
  }
  return out;
}

std::vector<ElementPair> concurrent_pairs(const StrictPoset& order) {
  std::vector<ElementPair> out;
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (std::size_t j = i + 1; j < order.size(); ++j) {
      if (!order.comparable(i, j)) out.emplace_back(i, j);
    }
  }
  return out;
}

std::vector<ElementPair> concurrent_pairs(const DistributedSystem& sys) {
  return concurrent_pairs(require_acyclic(sys));
}

CausalReport analyze(const DistributedSystem& sys) {
  CausalReport report;
  report.structural_violations = validate_system(sys);
  if (!sys.references_resolved()) return report;
  report.ordering_violations = check_causal_message_ordering(sys);
  auto closure = causal_closure(sys);
  if (auto* cycle = std::get_if<CycleWitness>(&closure)) {
    report.cycle = std::move(*cycle);
  } else {
    report.closure = std::get<StrictPoset>(std::move(closure));
  }
  return report;
}

bool has_line_communication(const DistributedSystem& sys) {
  for (std::size_t i = 0; i < sys.process_count(); ++i) {
    for (std::size_t j = 0; j < sys.process_count(); ++j) {
      if (i != j && j != i + 1 && !sys.messages(i, j).empty()) return false;
    }
  }
  return true;
}

CommunicationVerdict same_causal_implies_same_comm(const DistributedSystem& sys1, const DistributedSystem& sys2) {
  if (sys1.processes() != sys2.processes()) {
    throw Error("different process sets: the systems must share identical processes");
  }
  const auto closure1 = require_acyclic(sys1);
  const auto closure2 = require_acyclic(sys2);
  if (closure1 != closure2) return {CommunicationVerdictKind::closures_differ, "causal precedences differ"};
  if (sys1.communications() == sys2.communications()) {
    return {CommunicationVerdictKind::equal_communications, "equal communications"};
  }
  const DistributedSystem* systems[] = {&sys1, &sys2};
  for (int k = 0; k < 2; ++k) {
    const auto& sys = *systems[k];
    const std::string which = k == 0 ? "first" : "second";
    const auto ordering = check_causal_message_ordering(sys);
    if (!ordering.empty()) {
      return {CommunicationVerdictKind::explained_by_violation,
              which + " system breaks causal message ordering: " + describe(sys, ordering.front())};
    }
    const auto structural = validate_system(sys);
    if (!structural.empty()) {
      return {CommunicationVerdictKind::explained_by_violation,
              which + " system is not a communication: " + structural.front().message};
    }
  }
  return {CommunicationVerdictKind::unexplained_difference,
          "communications differ although both systems are valid and causally ordered"};
}

std::string describe_cycle(const DistributedSystem& sys, const CycleWitness& cycle) {
  std::string out;
  for (std::size_t k = 0; k < cycle.cycle.size(); ++k) {
    if (k) out += ",";
    out += sys.event_name(cycle.cycle[k]);
  }
  return out;
}

std::string describe(const DistributedSystem& sys, const OrderingViolation& v) {
  const auto name = [&](std::size_t p, std::size_t idx) { return sys.event_name(EventRef{p, idx}); };
  return name(v.from, v.first.sender) + "->" + name(v.to, v.first.receiver) + " sent before " +
         name(v.from, v.second.sender) + "->" + name(v.to, v.second.receiver) + " but received after it";
}

}  // namespace dsorder
