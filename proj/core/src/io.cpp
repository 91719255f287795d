#include "dsorder/io.hpp"

#include <array>
#include <map>
#include <set>

#include "dsorder/causal.hpp"
#include "json.hpp"

namespace dsorder {
namespace {

using nlohmann::json;

struct Record {
  std::size_t line;
  json value;
};

std::vector<Record> records(std::string_view text) {
  std::vector<Record> out;
  std::size_t line = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    ++line;
    const auto raw = text.substr(start, end - start);
    start = end + 1;
    if (raw.find_first_not_of(" \t\r") == std::string_view::npos) continue;
    json value;
    try {
      value = json::parse(raw);
    } catch (const json::parse_error& e) {
      const auto what = std::string(e.what());
      const auto colon = what.rfind(": ");
      throw ParseError(line, e.byte == 0 ? 1 : e.byte, colon == std::string::npos ? what : what.substr(colon + 2));
    }
    if (!value.is_object()) throw ParseError(line, 1, "record must be a JSON object");
    out.push_back({line, std::move(value)});
  }
  return out;
}

void only_keys(const Record& r, std::initializer_list<const char*> allowed) {
  for (const auto& [key, _] : r.value.items()) {
    bool ok = false;
    for (const auto* a : allowed) ok = ok || key == a;
    if (!ok) throw ParseError(r.line, 1, "unknown field \"" + key + "\"");
  }
}

std::string string_field(const Record& r, const json& obj, const char* key) {
  const auto it = obj.find(key);
  if (it == obj.end()) throw ParseError(r.line, 1, std::string("missing field \"") + key + "\"");
  if (!it->is_string()) throw ParseError(r.line, 1, std::string("field \"") + key + "\" must be a string");
  return it->get<std::string>();
}

std::vector<std::string> string_list(const Record& r, const char* key) {
  const auto& v = r.value.at(key);
  if (!v.is_array()) throw ParseError(r.line, 1, std::string("field \"") + key + "\" must be a list of strings");
  std::vector<std::string> out;
  for (const auto& item : v) {
    if (!item.is_string()) throw ParseError(r.line, 1, std::string("field \"") + key + "\" must be a list of strings");
    out.push_back(item.get<std::string>());
  }
  return out;
}

/// Consumes an optional header; returns the index of the first body record.
std::size_t header(const std::vector<Record>& recs, const char* kind) {
  if (recs.empty() || !recs.front().value.contains("kind")) return 0;
  only_keys(recs.front(), {"kind"});
  if (string_field(recs.front(), recs.front().value, "kind") != kind) {
    throw ParseError(recs.front().line, 1, std::string("expected a ") + kind + " document");
  }
  return 1;
}

std::string quoted(const std::string& s) { return json(s).dump(); }

std::string list(const std::vector<std::string>& items) {
  std::string out = "[";
  for (std::size_t k = 0; k < items.size(); ++k) out += (k ? "," : "") + quoted(items[k]);
  return out + "]";
}

}  // namespace

ParseError::ParseError(std::size_t line, std::size_t column, const std::string& reason)
    : Error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + reason),
      line_(line),
      column_(column) {}

DistributedSystem parse_system(std::string_view text) {
  const auto recs = records(text);
  std::vector<ProcessChain> processes;
  std::map<std::string, EventRef> where;
  std::set<std::string> ids;
  struct Pending {
    std::size_t line;
    std::string from;
    std::string to;
  };
  std::vector<Pending> pending;

  for (std::size_t k = header(recs, "system"); k < recs.size(); ++k) {
    const auto& r = recs[k];
    if (r.value.contains("kind")) throw ParseError(r.line, 1, "header must be the first record");
    if (r.value.contains("process")) {
      only_keys(r, {"process", "events"});
      const auto id = string_field(r, r.value, "process");
      if (id.empty()) throw ParseError(r.line, 1, "process id must not be empty");
      if (!ids.insert(id).second) throw ParseError(r.line, 1, "duplicate process \"" + id + "\"");
      std::vector<std::string> labels;
      if (r.value.contains("events")) labels = string_list(r, "events");
      for (std::size_t e = 0; e < labels.size(); ++e) {
        if (labels[e].empty()) throw ParseError(r.line, 1, "event labels must not be empty");
        if (!where.emplace(labels[e], EventRef{processes.size(), e}).second) {
          throw ParseError(r.line, 1, "duplicate event label \"" + labels[e] + "\"");
        }
      }
      processes.emplace_back(id, std::move(labels));
    } else if (r.value.contains("message")) {
      only_keys(r, {"message"});
      const auto& m = r.value.at("message");
      if (!m.is_object()) throw ParseError(r.line, 1, "field \"message\" must be an object");
      for (const auto& [key, _] : m.items()) {
        if (key != "from" && key != "to") throw ParseError(r.line, 1, "unknown field \"message." + key + "\"");
      }
      pending.push_back({r.line, string_field(r, m, "from"), string_field(r, m, "to")});
    } else {
      throw ParseError(r.line, 1, "record is neither a process nor a message");
    }
  }

  std::map<std::pair<std::size_t, std::size_t>, Communication> comms;
  for (const auto& m : pending) {
    const auto from = where.find(m.from);
    if (from == where.end()) throw ParseError(m.line, 1, "message names unknown event \"" + m.from + "\"");
    const auto to = where.find(m.to);
    if (to == where.end()) throw ParseError(m.line, 1, "message names unknown event \"" + m.to + "\"");
    auto& c = comms[{from->second.process, to->second.process}];
    c.from = processes[from->second.process].id();
    c.to = processes[to->second.process].id();
    c.pairs.push_back({from->second.index, to->second.index});
  }
  std::vector<Communication> list;
  for (auto& [_, c] : comms) list.push_back(std::move(c));
  return DistributedSystem(std::move(processes), std::move(list));
}

std::string emit_system(const DistributedSystem& sys) {
  std::string out = "{\"kind\":\"system\"}\n";
  for (std::size_t p = 0; p < sys.process_count(); ++p) {
    std::vector<std::string> labels;
    for (std::size_t k = 0; k < sys.process(p).size(); ++k) labels.push_back(sys.event_name(EventRef{p, k}));
    out += "{\"process\":" + quoted(sys.process(p).id()) + ",\"events\":" + list(labels) + "}\n";
  }
  for (const auto& c : sys.communications()) {
    const auto from = sys.process_index(c.from);
    const auto to = sys.process_index(c.to);
    for (const auto& m : c.pairs) {
      out += "{\"message\":{\"from\":" + quoted(sys.event_name(EventRef{from, m.sender})) +
             ",\"to\":" + quoted(sys.event_name(EventRef{to, m.receiver})) + "}}\n";
    }
  }
  return out;
}

StrictPoset parse_poset(std::string_view text) {
  const auto recs = records(text);
  std::vector<std::string> names;
  std::map<std::string, std::size_t> index;
  std::vector<std::pair<std::size_t, std::array<std::string, 2>>> pending;
  for (std::size_t k = header(recs, "poset"); k < recs.size(); ++k) {
    const auto& r = recs[k];
    if (r.value.contains("kind")) throw ParseError(r.line, 1, "header must be the first record");
    if (r.value.contains("elements")) {
      only_keys(r, {"elements"});
      for (auto& name : string_list(r, "elements")) {
        if (name.empty()) throw ParseError(r.line, 1, "element names must not be empty");
        if (!index.emplace(name, names.size()).second) {
          throw ParseError(r.line, 1, "duplicate element \"" + name + "\"");
        }
        names.push_back(std::move(name));
      }
    } else if (r.value.contains("less")) {
      only_keys(r, {"less"});
      const auto pair = string_list(r, "less");
      if (pair.size() != 2) throw ParseError(r.line, 1, "field \"less\" must name exactly two elements");
      pending.push_back({r.line, {pair[0], pair[1]}});
    } else {
      throw ParseError(r.line, 1, "record is neither an element list nor a pair");
    }
  }
  std::vector<ElementPair> pairs;
  for (const auto& [line, pair] : pending) {
    std::size_t ends[2];
    for (int s = 0; s < 2; ++s) {
      const auto it = index.find(pair[s]);
      if (it == index.end()) throw ParseError(line, 1, "pair names unknown element \"" + pair[s] + "\"");
      ends[s] = it->second;
    }
    pairs.emplace_back(ends[0], ends[1]);
  }
  auto result = transitive_closure(names, pairs);
  if (auto* cycle = std::get_if<CycleWitness>(&result)) {
    std::string spelled;
    for (std::size_t k = 0; k < cycle->cycle.size(); ++k) spelled += (k ? "," : "") + names[cycle->cycle[k]];
    throw CycleError("cycle: " + spelled, *cycle);
  }
  return std::get<StrictPoset>(std::move(result));
}

std::string emit_poset(const StrictPoset& p) {
  std::string out = "{\"kind\":\"poset\"}\n";
  out += "{\"elements\":" + list(p.names()) + "}\n";
  for (const auto& [a, b] : transitive_reduction(p)) out += "{\"less\":" + list({p.name(a), p.name(b)}) + "}\n";
  return out;
}

DocumentKind detect_document_kind(std::string_view text) {
  const auto recs = records(text);
  if (recs.empty()) return DocumentKind::system;
  const auto& first = recs.front().value;
  if (first.contains("kind")) {
    const auto& kind = first.at("kind");
    if (kind == "poset") return DocumentKind::poset;
    if (kind == "system") return DocumentKind::system;
    throw ParseError(recs.front().line, 1, "unknown document kind");
  }
  return first.contains("elements") || first.contains("less") ? DocumentKind::poset : DocumentKind::system;
}

}  // namespace dsorder
