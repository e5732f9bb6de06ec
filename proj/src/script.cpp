#include "blf/script.hpp"

#include <set>

#include "blf/format.hpp"
#include "blf/moves.hpp"

namespace blf {

namespace {

struct Grammar {
  std::size_t min_args;
  std::size_t max_args;
  std::set<std::string> params;
  std::set<std::string> required;
};

const std::map<std::string, Grammar>& grammar() {
  static const std::map<std::string, Grammar> g = {
      {"slide", {2, 2, {"bigon", "crossed", "tip"}, {}}},
      {"r2-remove", {1, 1, {}, {}}},
      {"push", {2, 2, {"component", "cycle"}, {"component", "cycle"}}},
      {"cusp-modify", {1, 1, {"component", "cycle"}, {}}},
      {"flip", {1, 1, {"component", "face"}, {}}},
      {"generic-flip", {1, 1, {"component", "face"}, {}}},
      {"slip", {1, 1000000, {}, {}}},
      {"connect-fibers", {0, 0, {}, {}}},
      {"blow-up", {0, 0, {}, {}}},
      {"blow-down", {0, 0, {}, {}}},
  };
  return g;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = s.find(sep, start);
    out.push_back(s.substr(start, pos == std::string::npos ? std::string::npos : pos - start));
    if (pos == std::string::npos) return out;
    start = pos + 1;
  }
}

// FACE or FACE@CURVE
std::pair<std::string, std::optional<std::string>> face_via(const std::string& s) {
  const auto at = s.find('@');
  if (at == std::string::npos) return {s, std::nullopt};
  return {s.substr(0, at), s.substr(at + 1)};
}

void check_ids(const MoveInvocation& m) {
  auto bad = [&](const std::string& what) {
    throw ParseError(ErrorCode::syntax_error, m.line, 1, m.move + ": invalid " + what);
  };
  if (m.move == "slide") {
    if (!is_identifier(m.args[0])) bad("arc id");
    for (const auto& step : split(m.args[1], ',')) {
      auto [f, via] = face_via(step);
      if (!is_identifier(f) || (via && !is_identifier(*via))) bad("path step `" + step + "`");
    }
    return;
  }
  if (m.move == "slip") {
    if (!is_identifier(m.args[0])) bad("arc id");
    for (std::size_t i = 1; i < m.args.size(); ++i) {
      const auto colon = m.args[i].find(':');
      const std::string kind = m.args[i].substr(0, colon);
      if (colon == std::string::npos || (kind != "across" && kind != "uncross")) {
        bad("slip step `" + m.args[i] + "` (expected across:FACE or uncross:FACE)");
      }
      auto [f, via] = face_via(m.args[i].substr(colon + 1));
      if (!is_identifier(f) || (via && (kind == "uncross" || !is_identifier(*via)))) bad("slip step `" + m.args[i] + "`");
    }
    return;
  }
  for (const auto& a : m.args) {
    if (!is_identifier(a)) bad("identifier `" + a + "`");
  }
}

}  // namespace

const std::vector<std::string>& move_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const auto& [k, _] : grammar()) v.push_back(k);
    return v;
  }();
  return names;
}

MoveScript parse_script(std::string_view text) {
  MoveScript script;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    ++line_no;
    std::string line(text.substr(pos, end - pos));
    pos = end + 1;
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    std::vector<std::pair<std::string, int>> tokens;
    for (std::size_t i = 0; i < line.size();) {
      if (line[i] == ' ' || line[i] == '\t' || line[i] == '\r') {
        ++i;
        continue;
      }
      std::size_t j = i;
      while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
      tokens.emplace_back(line.substr(i, j - i), static_cast<int>(i) + 1);
      i = j;
    }
    if (tokens.empty()) continue;
    auto fail = [&](int col, const std::string& msg) { throw ParseError(ErrorCode::syntax_error, line_no, col, msg); };
    auto git = grammar().find(tokens[0].first);
    if (git == grammar().end()) fail(tokens[0].second, "unknown move `" + tokens[0].first + "`");
    const Grammar& g = git->second;
    MoveInvocation m{tokens[0].first, {}, {}, line_no};
    for (std::size_t i = 1; i < tokens.size(); ++i) {
      const auto& [tok, col] = tokens[i];
      const auto eq = tok.find('=');
      if (eq == std::string::npos) {
        m.args.push_back(tok);
        continue;
      }
      const std::string key = tok.substr(0, eq);
      if (!g.params.count(key)) fail(col, m.move + " takes no parameter `" + key + "`");
      if (!m.params.emplace(key, tok.substr(eq + 1)).second) fail(col, "repeated parameter `" + key + "`");
    }
    if (m.args.size() < g.min_args || m.args.size() > g.max_args) {
      fail(tokens[0].second, m.move + " expects " + std::to_string(g.min_args) +
                                 (g.max_args > g.min_args ? " or more" : "") + " positional arguments");
    }
    for (const auto& r : g.required) {
      if (!m.params.count(r)) fail(tokens[0].second, m.move + " needs `" + r + "=`");
    }
    check_ids(m);
    script.push_back(std::move(m));
  }
  return script;
}

namespace {

BlfDiagram run_one(const BlfDiagram& d, const MoveInvocation& m) {
  auto param = [&](const std::string& k) -> std::optional<std::string> {
    auto it = m.params.find(k);
    if (it == m.params.end()) return std::nullopt;
    return it->second;
  };
  if (m.move == "slide") {
    std::vector<SlideStep> path;
    for (const auto& step : split(m.args[1], ',')) {
      auto [f, via] = face_via(step);
      path.push_back({f, via});
    }
    SlideData data;
    if (auto v = param("bigon")) data.bigon_fiber = parse_fiber(*v);
    if (auto v = param("crossed")) data.crossed_surgery = parse_surgery(*v);
    if (auto v = param("tip")) data.tip_surgery = parse_surgery(*v);
    return slide_arc(d, m.args[0], path, data);
  }
  if (m.move == "r2-remove") return r2_remove(d, m.args[0]);
  if (m.move == "push") {
    return push_lefschetz(d, m.args[0], m.args[1], *param("component"), parse_cycle(*param("cycle")));
  }
  auto placement = [&] {
    CuspPlacement p;
    p.component = param("component");
    if (auto v = param("cycle")) p.cycle = parse_cycle(*v);
    return p;
  };
  if (m.move == "cusp-modify") return cusp_modify(d, m.args[0], placement());
  if (m.move == "flip" || m.move == "generic-flip") {
    FlipParams p;
    p.component = param("component");
    p.loop_face = param("face");
    return m.move == "flip" ? flip(d, m.args[0], p) : generic_flip(d, m.args[0], p);
  }
  if (m.move == "slip") {
    std::vector<SlipStep> path;
    for (std::size_t i = 1; i < m.args.size(); ++i) {
      const auto colon = m.args[i].find(':');
      auto [f, via] = face_via(m.args[i].substr(colon + 1));
      const auto kind = m.args[i].substr(0, colon) == "across" ? SlipStep::Kind::across : SlipStep::Kind::uncross;
      path.push_back({kind, f, via});
    }
    return slip(d, m.args[0], path).diagram;
  }
  if (m.move == "connect-fibers") return connect_fibers(d);
  if (m.move == "blow-up") return blow_up(d);
  return blow_down(d);
}

}  // namespace

ScriptResult apply_script(const BlfDiagram& d, const MoveScript& script) {
  ScriptResult result{d, {}};
  for (const auto& m : script) {
    try {
      result.diagram = run_one(result.diagram, m);
      const auto& x = result.diagram;
      const std::int64_t e = x.basepoints > 0 ? pencil_euler(x) : euler_characteristic(x);
      result.steps.push_back({m.move, m.line, e});
    } catch (const ParseError&) {
      throw;
    } catch (const Error& e) {
      throw ParseError(e.code(), m.line, 1, m.move + ": " + e.what());
    }
  }
  return result;
}

}  // namespace blf
