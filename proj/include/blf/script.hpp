#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "blf/diagram.hpp"

namespace blf {

/// One line of a move script: `<move> <positional...> <key=value...>`.
struct MoveInvocation {
  std::string move;
  std::vector<std::string> args;
  std::map<std::string, std::string> params;
  int line = 0;
};

using MoveScript = std::vector<MoveInvocation>;

/// Moves understood by apply_script.
const std::vector<std::string>& move_names();

/// Throws ParseError(syntax_error) for unknown moves, wrong arity, unknown or
/// repeated parameters.
MoveScript parse_script(std::string_view text);

struct ScriptStep {
  std::string move;
  int line = 0;
  std::int64_t euler = 0;
};

struct ScriptResult {
  BlfDiagram diagram;
  std::vector<ScriptStep> steps;
};

/// Runs the moves in order. A failing move is rethrown as ParseError carrying
/// its line and the move's error code.
ScriptResult apply_script(const BlfDiagram& d, const MoveScript& script);

}  // namespace blf
