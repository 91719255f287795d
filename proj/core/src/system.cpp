#include "dsorder/system.hpp"

#include <algorithm>
#include <map>
#include <tuple>

#include "dsorder/error.hpp"

namespace dsorder {

ProcessChain::ProcessChain(std::string id, std::vector<std::string> labels)
    : id_(std::move(id)), labels_(std::move(labels)) {}

ProcessChain::ProcessChain(std::string id, std::size_t length)
    : id_(std::move(id)), labels_(length) {}

DistributedSystem::DistributedSystem(std::vector<ProcessChain> processes,
                                     std::vector<Communication> communications)
    : processes_(std::move(processes)) {
  offsets_.reserve(processes_.size() + 1);
  offsets_.push_back(0);
  for (const auto& p : processes_) offsets_.push_back(offsets_.back() + p.size());

  // Unknown processes sort after all known ones, then by name.
  const auto rank = [this](const std::string& id) {
    const auto idx = find_process(id);
    return idx ? *idx : processes_.size();
  };
  using Key = std::tuple<std::size_t, std::size_t, std::string, std::string>;
  std::map<Key, Communication> merged;
  for (auto& c : communications) {
    Key key{rank(c.from), rank(c.to), c.from, c.to};
    auto [it, inserted] = merged.try_emplace(key, Communication{c.from, c.to, {}});
    auto& pairs = it->second.pairs;
    pairs.insert(pairs.end(), c.pairs.begin(), c.pairs.end());
  }
  for (auto& [key, c] : merged) {
    std::sort(c.pairs.begin(), c.pairs.end());
    c.pairs.erase(std::unique(c.pairs.begin(), c.pairs.end()), c.pairs.end());
    if (!c.pairs.empty()) communications_.push_back(std::move(c));
  }
}

std::optional<std::size_t> DistributedSystem::find_process(const std::string& id) const {
  for (std::size_t i = 0; i < processes_.size(); ++i) {
    if (processes_[i].id() == id) return i;
  }
  return std::nullopt;
}

std::size_t DistributedSystem::process_index(const std::string& id) const {
  if (auto idx = find_process(id)) return *idx;
  throw Error("unknown process '" + id + "'");
}

const std::vector<Message>& DistributedSystem::messages(std::size_t from, std::size_t to) const {
  static const std::vector<Message> kNone;
  if (from >= processes_.size() || to >= processes_.size()) return kNone;
  for (const auto& c : communications_) {
    if (c.from == processes_[from].id() && c.to == processes_[to].id()) return c.pairs;
  }
  return kNone;
}

EventRef DistributedSystem::event_at(std::size_t global) const {
  if (global >= event_count()) throw Error("event index out of range");
  const auto it = std::upper_bound(offsets_.begin(), offsets_.end(), global);
  const auto process = static_cast<std::size_t>(it - offsets_.begin()) - 1;
  return {process, global - offsets_[process]};
}

std::string DistributedSystem::event_name(EventRef e) const {
  const auto& p = processes_.at(e.process);
  const auto& label = p.label(e.index);
  return label.empty() ? p.id() + ":" + std::to_string(e.index) : label;
}

std::vector<std::string> DistributedSystem::event_names() const {
  std::vector<std::string> out;
  out.reserve(event_count());
  for (std::size_t g = 0; g < event_count(); ++g) out.push_back(event_name(g));
  return out;
}

bool DistributedSystem::references_resolved() const {
  for (const auto& c : communications_) {
    const auto from = find_process(c.from);
    const auto to = find_process(c.to);
    if (!from || !to) return false;
    for (const auto& m : c.pairs) {
      if (m.sender >= processes_[*from].size() || m.receiver >= processes_[*to].size()) return false;
    }
  }
  return true;
}

}  // namespace dsorder
