#include "dsorder/dot.hpp"

#include "dsorder/causal.hpp"

namespace dsorder {
namespace {

std::string quote(const std::string& s) {
  std::string out = "\"";
  for (const char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

std::string hasse(const std::vector<std::string>& names, const StrictPoset& p) {
  std::string out = "digraph hasse {\n  rankdir=BT;\n";
  for (const auto& n : names) out += "  " + quote(n) + ";\n";
  for (const auto& [a, b] : transitive_reduction(p)) out += "  " + quote(names[a]) + " -> " + quote(names[b]) + ";\n";
  return out + "}\n";
}

}  // namespace

std::string export_dot(const DistributedSystem& sys, DotMode mode) {
  if (mode == DotMode::hasse) return hasse(sys.event_names(), require_acyclic(sys));

  std::string out = "digraph spacetime {\n  rankdir=BT;\n  newrank=true;\n";
  for (std::size_t p = 0; p < sys.process_count(); ++p) {
    const auto& chain = sys.process(p);
    out += "  subgraph " + quote("cluster_" + chain.id()) + " {\n    label=" + quote(chain.id()) + ";\n";
    for (std::size_t k = 0; k < chain.size(); ++k) out += "    " + quote(sys.event_name(EventRef{p, k})) + ";\n";
    for (std::size_t k = 0; k + 1 < chain.size(); ++k) {
      out += "    " + quote(sys.event_name(EventRef{p, k})) + " -> " + quote(sys.event_name(EventRef{p, k + 1})) +
             " [style=solid];\n";
    }
    out += "  }\n";
  }
  for (const auto& c : sys.communications()) {
    const auto from = sys.find_process(c.from);
    const auto to = sys.find_process(c.to);
    if (!from || !to) continue;
    for (const auto& m : c.pairs) {
      if (m.sender >= sys.process(*from).size() || m.receiver >= sys.process(*to).size()) continue;
      out += "  " + quote(sys.event_name(EventRef{*from, m.sender})) + " -> " +
             quote(sys.event_name(EventRef{*to, m.receiver})) + " [style=dashed, constraint=false];\n";
    }
  }
  return out + "}\n";
}

std::string export_dot(const StrictPoset& p, DotMode) { return hasse(p.names(), p); }

}  // namespace dsorder
