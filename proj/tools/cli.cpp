#include "cli.hpp"

#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "dsorder/causal.hpp"
#include "dsorder/dot.hpp"
#include "dsorder/io.hpp"
#include "dsorder/oracle.hpp"
#include "dsorder/represent.hpp"

namespace dsorder::cli {
namespace {

/// Unreadable input; reported with the usage exit code.
struct InputError : Error {
  using Error::Error;
};

std::string slurp(const std::string& path, std::istream& in) {
  std::ostringstream buf;
  if (path == "-") {
    buf << in.rdbuf();
    return buf.str();
  }
  std::ifstream file(path, std::ios::binary);
  if (!file) throw InputError("cannot read " + path);
  buf << file.rdbuf();
  return buf.str();
}

std::string join(const std::vector<std::string>& items, const char* sep) {
  std::string out;
  for (std::size_t k = 0; k < items.size(); ++k) out += (k ? sep : "") + items[k];
  return out;
}

int report(const CheckResult& r, std::ostream& out, const std::string& ok_line) {
  if (r.ok()) {
    out << ok_line << "\n";
    return kExitClean;
  }
  out << "witness: " << r.witness->detail << "\n";
  return kExitViolation;
}

int cmd_validate(const DistributedSystem& sys, std::ostream& out) {
  const auto report = analyze(sys);
  for (const auto& v : report.structural_violations) out << "violation: " << v.message << "\n";
  for (const auto& v : report.ordering_violations) out << "ordering: " << describe(sys, v) << "\n";
  if (report.cycle) out << "deadlock: " << describe_cycle(sys, *report.cycle) << "\n";
  if (!sys.references_resolved()) out << "closure: skipped, dangling references\n";
  if (report.clean()) {
    out << "ok\n";
    return kExitClean;
  }
  return kExitViolation;
}

int cmd_closure(const DistributedSystem& sys, std::ostream& out) {
  const auto order = require_acyclic(sys);
  for (const auto& [a, b] : order.pairs()) out << order.name(a) << " < " << order.name(b) << "\n";
  return kExitClean;
}

int cmd_quotient(const DistributedSystem& sys, std::ostream& out) {
  const auto q = quotient_system(sys);
  for (std::size_t p = 0; p < sys.process_count(); ++p) {
    for (std::size_t c = 0; c < q.classes[p].size(); ++c) {
      std::vector<std::string> members;
      for (const auto k : q.classes[p][c]) members.push_back(sys.event_name(EventRef{p, k}));
      out << "class " << q.poset.name(q.offsets[p] + c) << " = {" << join(members, ",") << "}\n";
    }
  }
  for (const auto& [a, b] : transitive_reduction(q.poset)) {
    out << "edge " << q.poset.name(a) << " < " << q.poset.name(b) << "\n";
  }
  return kExitClean;
}

int cmd_lamport(const DistributedSystem& sys, bool check, std::ostream& out) {
  const auto clocks = lamport_clocks(sys);
  for (std::size_t e = 0; e < clocks.values.size(); ++e) out << sys.event_name(e) << " " << clocks.values[e].num() << "\n";
  return check ? report(verify_weak_representation(sys, clocks), out, "ok") : kExitClean;
}

int cmd_vector(const DistributedSystem& sys, bool check, std::ostream& out) {
  const auto clocks = vector_clocks(sys);
  for (std::size_t e = 0; e < clocks.values.size(); ++e) {
    std::vector<std::string> parts;
    for (const auto c : clocks.values[e]) parts.push_back(std::to_string(c));
    out << sys.event_name(e) << " [" << join(parts, ",") << "]\n";
  }
  return check ? report(verify_vector_representation(sys, clocks), out, "ok") : kExitClean;
}

int cmd_aggregate(const DistributedSystem& sys, bool check, std::ostream& out) {
  if (!has_line_communication(sys)) {
    out << "error: aggregation needs line communication (messages only from process i to i+1)\n";
    return kExitViolation;
  }
  const auto w = aggregate_line_weak(sys);
  for (std::size_t e = 0; e < w.values.size(); ++e) out << sys.event_name(e) << " " << w.values[e] << "\n";
  return check ? report(verify_weak_representation(sys, w), out, "ok") : kExitClean;
}

int cmd_multiutility(const DistributedSystem& sys, bool check, std::ostream& out) {
  const auto family = rp_multiutility_from_quotient(sys);
  out << "functions: " << family.size() << "\n";
  for (std::size_t e = 0; e < sys.event_count(); ++e) {
    std::vector<std::string> values;
    for (const auto& f : family.functions) values.push_back(f[e].str());
    out << sys.event_name(e) << " " << join(values, " ") << "\n";
  }
  if (!check) return kExitClean;
  return report(verify_representation(sys, family), out, "ok, " + std::to_string(family.size()) + " functions");
}

int cmd_dimension(const StrictPoset& p, std::ostream& out) {
  Realizer realizer;
  try {
    const auto result = order_dimension(p);
    out << result.dimension << "\n";
    realizer = result.realizer;
  } catch (const BudgetExceeded& e) {
    realizer = greedy_realizer(p);
    out << "at most " << realizer.size() << " (" << e.what() << ")\n";
  }
  for (const auto& ext : realizer.extensions) {
    std::vector<std::string> names;
    for (const auto x : ext) names.push_back(p.name(x));
    out << "extension: " << join(names, " ") << "\n";
  }
  return kExitClean;
}

int cmd_width(const StrictPoset& p, std::ostream& out) {
  out << width(p) << "\n";
  std::vector<std::string> anti;
  for (const auto x : maximum_antichain(p)) anti.push_back(p.name(x));
  out << "antichain: " << join(anti, " ") << "\n";
  for (const auto& chain : minimum_chain_cover(p)) {
    std::vector<std::string> names;
    for (const auto x : chain) names.push_back(p.name(x));
    out << "chain: " << join(names, " ") << "\n";
  }
  return kExitClean;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Causality, clocks and order representations of finite distributed systems", "dsorder"};
  app.require_subcommand(1);
  std::string input;
  std::string mode = "spacetime";
  bool check = false;

  std::function<int()> action;
  const auto system_command = [&](const char* name, const char* help, bool checkable,
                                  std::function<int(const DistributedSystem&)> body) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("input", input, "system document, or - for stdin")->required();
    if (checkable) sub->add_flag("--check", check, "verify the result with the brute-force oracle");
    sub->callback([&, body] { action = [&, body] { return body(parse_system(slurp(input, in))); }; });
  };
  const auto poset_command = [&](const char* name, const char* help, std::function<int(const StrictPoset&)> body) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("input", input, "poset or system document, or - for stdin")->required();
    sub->callback([&, body] {
      action = [&, body] {
        const auto text = slurp(input, in);
        if (detect_document_kind(text) == DocumentKind::poset) return body(parse_poset(text));
        return body(require_acyclic(parse_system(text)));
      };
    });
  };

  system_command("validate", "report structural violations, message ordering violations and deadlocks", false,
                 [&](const DistributedSystem& s) { return cmd_validate(s, out); });
  system_command("closure", "print the causal precedence", false,
                 [&](const DistributedSystem& s) { return cmd_closure(s, out); });
  system_command("quotient", "print the finite quotient and its Hasse diagram", false,
                 [&](const DistributedSystem& s) { return cmd_quotient(s, out); });
  system_command("lamport", "print Lamport clocks", true,
                 [&](const DistributedSystem& s) { return cmd_lamport(s, check, out); });
  system_command("vector", "print vector clocks", true,
                 [&](const DistributedSystem& s) { return cmd_vector(s, check, out); });
  system_command("aggregate", "weak representation of a line system", true,
                 [&](const DistributedSystem& s) { return cmd_aggregate(s, check, out); });
  system_command("multiutility", "multi-utility built from the quotient", true,
                 [&](const DistributedSystem& s) { return cmd_multiutility(s, check, out); });
  poset_command("dimension", "order dimension and a minimum realizer",
                [&](const StrictPoset& p) { return cmd_dimension(p, out); });
  poset_command("reduce", "transitive reduction, as a poset document", [&](const StrictPoset& p) {
    out << emit_poset(p);
    return kExitClean;
  });
  poset_command("width", "width, a maximum antichain and a minimum chain cover",
                [&](const StrictPoset& p) { return cmd_width(p, out); });
  poset_command("decompose", "distributed system whose causal precedence is the poset", [&](const StrictPoset& p) {
    out << emit_system(synthesize_system(p));
    return kExitClean;
  });

  auto* dot = app.add_subcommand("dot", "Graphviz export of a system or poset document");
  dot->add_option("input", input, "document, or - for stdin")->required();
  dot->add_option("--mode", mode, "spacetime or hasse")->check(CLI::IsMember({"spacetime", "hasse"}));
  dot->callback([&] {
    action = [&] {
      const auto text = slurp(input, in);
      const auto m = mode == "hasse" ? DotMode::hasse : DotMode::spacetime;
      if (detect_document_kind(text) == DocumentKind::poset) {
        out << export_dot(parse_poset(text), m);
      } else {
        out << export_dot(parse_system(text), m);
      }
      return kExitClean;
    };
  });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitClean : kExitUsage;
  }

  try {
    return action();
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const CycleError& e) {
    out << e.what() << "\n";
    return kExitViolation;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitViolation;
  }
}

}  // namespace dsorder::cli
