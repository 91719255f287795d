#pragma once

#include <cstddef>
#include <string>
#include <string_view>

#include "dsorder/error.hpp"
#include "dsorder/poset.hpp"
#include "dsorder/system.hpp"

namespace dsorder {

/// Malformed document. Line and column are 1-based.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& reason);
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// System documents hold one JSON object per line:
///   {"kind":"system"}                          optional, first record only
///   {"process":"A","events":["a","b"]}
///   {"message":{"from":"a","to":"x"}}
/// Event labels are unique across the document; messages name them.
DistributedSystem parse_system(std::string_view text);
/// Canonical form: header, processes in order, then messages in channel
/// order. Unnamed events are written under their generated names.
std::string emit_system(const DistributedSystem& sys);

/// Poset documents:
///   {"kind":"poset"}
///   {"elements":["a","b","c"]}
///   {"less":["a","b"]}
/// The relation is the transitive closure of the listed pairs; a cycle
/// raises CycleError naming its elements.
StrictPoset parse_poset(std::string_view text);
/// Canonical form lists elements, then the cover pairs.
std::string emit_poset(const StrictPoset& p);

enum class DocumentKind { system, poset };

/// From the header, else from the first record's key; system by default.
DocumentKind detect_document_kind(std::string_view text);

}  // namespace dsorder
