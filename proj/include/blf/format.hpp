#pragma once

#include <string>
#include <string_view>

#include "blf/diagram.hpp"
#include "blf/error.hpp"

namespace blf {

/// Parse failure with a 1-based source location.
class ParseError : public Error {
 public:
  ParseError(ErrorCode code, int line, int column, const std::string& message);

  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }

  /// "LINE:COL: Code: message"
  std::string diagnostic() const;

 private:
  int line_;
  int column_;
};

/// Value syntaxes shared by diagram files and move scripts. Each throws
/// Error(syntax_error) or Error(duplicate_id) on bad input.
FiberDescription parse_fiber(std::string_view text);          // c0:2,c1:0
SurgeryDescriptor parse_surgery(std::string_view text);       // nonsep(c0) | sep(c0,1,2)
std::vector<std::int64_t> parse_cycle(std::string_view text);  // 1,0,-2,3 (may be empty)
std::int64_t parse_integer(std::string_view text, std::int64_t lo, std::int64_t hi);
bool is_identifier(std::string_view text);

/// Reads the line-oriented `.blf` text format. Only ParseError escapes.
BlfDiagram parse_diagram(std::string_view text);

/// Canonical text: fixed section order, records sorted by id, circles always
/// written as `circle` records.
std::string serialize(const BlfDiagram& d);

BlfDiagram load_diagram(const std::string& path);
void save_diagram(const BlfDiagram& d, const std::string& path);

/// Plain-text adjacency description of the arrangement, for external renderers.
std::string export_graph(const BlfDiagram& d);

}  // namespace blf
