#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace dsorder {

/// Position of an event: process ordinal within the system plus its index
/// along that process chain.
struct EventRef {
  std::size_t process = 0;
  std::size_t index = 0;

  friend auto operator<=>(const EventRef&, const EventRef&) = default;
};

/// A process: a finite strictly ordered sequence of events. Event k precedes
/// event k+1. Labels are cosmetic; an empty label means "unnamed".
class ProcessChain {
 public:
  ProcessChain() = default;
  ProcessChain(std::string id, std::vector<std::string> labels);
  /// Chain of `length` unnamed events.
  ProcessChain(std::string id, std::size_t length);

  const std::string& id() const { return id_; }
  std::size_t size() const { return labels_.size(); }
  bool empty() const { return labels_.empty(); }
  const std::string& label(std::size_t index) const { return labels_.at(index); }
  const std::vector<std::string>& labels() const { return labels_; }

  friend bool operator==(const ProcessChain&, const ProcessChain&) = default;

 private:
  std::string id_;
  std::vector<std::string> labels_;
};

/// One send/receive pair, as indices into the sending and receiving chains.
struct Message {
  std::size_t sender = 0;
  std::size_t receiver = 0;

  friend auto operator<=>(const Message&, const Message&) = default;
};

/// All messages from one process to another. Pairs are kept sorted and
/// unique; bijectivity is NOT enforced here (validate_system reports it).
struct Communication {
  std::string from;
  std::string to;
  std::vector<Message> pairs;

  friend bool operator==(const Communication&, const Communication&) = default;
};

/// Processes plus per-direction communications. Immutable once built.
///
/// Communications are merged per ordered (from, to) pair and stored in
/// process order. References to unknown processes or out-of-range events are
/// retained as given so that validate_system can report them; every other
/// operation requires them to be absent.
class DistributedSystem {
 public:
  DistributedSystem() = default;
  DistributedSystem(std::vector<ProcessChain> processes, std::vector<Communication> communications);

  std::size_t process_count() const { return processes_.size(); }
  const std::vector<ProcessChain>& processes() const { return processes_; }
  const ProcessChain& process(std::size_t i) const { return processes_.at(i); }
  std::optional<std::size_t> find_process(const std::string& id) const;
  /// Throws Error for an unknown id.
  std::size_t process_index(const std::string& id) const;

  const std::vector<Communication>& communications() const { return communications_; }
  /// Messages from process i to process j; empty when the direction is silent
  /// or either side is unknown.
  const std::vector<Message>& messages(std::size_t from, std::size_t to) const;

  /// Dense numbering of all events: process by process, index by index.
  std::size_t event_count() const { return offsets_.empty() ? 0 : offsets_.back(); }
  std::size_t global_index(EventRef e) const { return offsets_.at(e.process) + e.index; }
  EventRef event_at(std::size_t global) const;
  /// Label if present, else "<process>:<index>".
  std::string event_name(EventRef e) const;
  std::string event_name(std::size_t global) const { return event_name(event_at(global)); }
  std::vector<std::string> event_names() const;

  /// True when every communication names known processes and in-range events.
  bool references_resolved() const;

  friend bool operator==(const DistributedSystem& a, const DistributedSystem& b) {
    return a.processes_ == b.processes_ && a.communications_ == b.communications_;
  }

 private:
  std::vector<ProcessChain> processes_;
  std::vector<Communication> communications_;
  std::vector<std::size_t> offsets_;
};

}  // namespace dsorder
