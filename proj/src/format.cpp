#include "blf/format.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <optional>
#include <set>
#include <sstream>

namespace blf {

ParseError::ParseError(ErrorCode code, int line, int column, const std::string& message)
    : Error(code, message), line_(line), column_(column) {}

std::string ParseError::diagnostic() const {
  return std::to_string(line_) + ":" + std::to_string(column_) + ": " + std::string(to_string(code())) +
         ": " + what();
}

namespace {

constexpr std::int64_t kMaxGenus = 1'000'000;
constexpr std::int64_t kMaxCoordinate = 1'000'000'000;
constexpr std::int64_t kMaxCount = 1'000'000;

bool is_id_char(char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') || c == '_' ||
         c == '.' || c == '-';
}

std::string checked_id(std::string_view text) {
  if (!is_identifier(text)) throw Error(ErrorCode::syntax_error, "invalid identifier `" + std::string(text) + "`");
  return std::string(text);
}

}  // namespace

bool is_identifier(std::string_view text) {
  return !text.empty() && std::all_of(text.begin(), text.end(), is_id_char);
}

std::int64_t parse_integer(std::string_view text, std::int64_t lo, std::int64_t hi) {
  std::int64_t v = 0;
  const char* last = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), last, v);
  if (text.empty() || ec != std::errc() || ptr != last) {
    throw Error(ErrorCode::syntax_error, "expected an integer, got `" + std::string(text) + "`");
  }
  if (v < lo || v > hi) {
    throw Error(ErrorCode::syntax_error, "integer " + std::string(text) + " out of range [" + std::to_string(lo) +
                                             ", " + std::to_string(hi) + "]");
  }
  return v;
}

FiberDescription parse_fiber(std::string_view text) {
  std::vector<FiberComponent> comps;
  std::set<std::string> seen;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t comma = text.find(',', start);
    if (comma == std::string_view::npos) comma = text.size();
    const std::string_view item = text.substr(start, comma - start);
    const auto colon = item.find(':');
    if (colon == std::string_view::npos) throw Error(ErrorCode::syntax_error, "expected COMPONENT:GENUS in fiber");
    FiberComponent c{checked_id(item.substr(0, colon)), parse_integer(item.substr(colon + 1), 0, kMaxGenus)};
    if (!seen.insert(c.id).second) throw Error(ErrorCode::duplicate_id, "duplicate component id " + c.id);
    comps.push_back(std::move(c));
    start = comma + 1;
  }
  return FiberDescription(std::move(comps));
}

SurgeryDescriptor parse_surgery(std::string_view s) {
  const auto open = s.find('(');
  if (s.size() < 2 || s.back() != ')' || open == std::string_view::npos) {
    throw Error(ErrorCode::syntax_error, "expected nonsep(C) or sep(C,G1,G2)");
  }
  const std::string_view kind = s.substr(0, open);
  const std::string_view args = s.substr(open + 1, s.size() - open - 2);
  if (kind == "nonsep") return SurgeryDescriptor::nonseparating(checked_id(args));
  if (kind != "sep") throw Error(ErrorCode::syntax_error, "unknown surgery kind `" + std::string(kind) + "`");
  const auto c1 = args.find(',');
  const auto c2 = c1 == std::string_view::npos ? c1 : args.find(',', c1 + 1);
  if (c2 == std::string_view::npos) throw Error(ErrorCode::syntax_error, "sep needs three arguments");
  return SurgeryDescriptor::separating(checked_id(args.substr(0, c1)),
                                       parse_integer(args.substr(c1 + 1, c2 - c1 - 1), 0, kMaxGenus),
                                       parse_integer(args.substr(c2 + 1), 0, kMaxGenus));
}

std::vector<std::int64_t> parse_cycle(std::string_view text) {
  std::vector<std::int64_t> out;
  if (text.empty()) return out;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t comma = text.find(',', start);
    if (comma == std::string_view::npos) comma = text.size();
    out.push_back(parse_integer(text.substr(start, comma - start), -kMaxCoordinate, kMaxCoordinate));
    if (out.size() > 2 * kMaxGenus) throw Error(ErrorCode::syntax_error, "cycle too long");
    start = comma + 1;
  }
  return out;
}

namespace {

struct Token {
  std::string_view text;
  int column = 1;
};

const char* const kSections[] = {"arrangement", "faces", "folds", "lefschetz", "basepoints"};


struct PendingRef {
  std::string id;
  int line;
  int column;
  std::string what;
};

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  BlfDiagram run() {
    std::size_t pos = 0;
    bool header = false;
    while (pos <= text_.size()) {
      std::size_t end = text_.find('\n', pos);
      if (end == std::string_view::npos) end = text_.size();
      ++line_no_;
      std::string_view line = text_.substr(pos, end - pos);
      pos = end + 1;
      if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
      tokens_ = tokenize(line);
      if (tokens_.empty()) continue;
      if (!header) {
        if (tokens_.size() != 2 || tokens_[0].text != "blf") fail(tokens_[0], "expected header `blf 1`");
        if (tokens_[1].text != "1") fail(tokens_[1], "unsupported format version");
        header = true;
        continue;
      }
      dispatch();
    }
    if (!header) throw ParseError(ErrorCode::syntax_error, 1, 1, "missing header `blf 1`");
    resolve();
    return std::move(d_);
  }

 private:
  [[noreturn]] void fail(const Token& t, const std::string& msg, ErrorCode code = ErrorCode::syntax_error) {
    throw ParseError(code, line_no_, t.column, msg);
  }

  std::vector<Token> tokenize(std::string_view line) const {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < line.size()) {
      const char c = line[i];
      if (c == '#') break;
      if (c == ' ' || c == '\t') {
        ++i;
        continue;
      }
      if (c == '[' || c == ']') {
        out.push_back({line.substr(i, 1), static_cast<int>(i) + 1});
        ++i;
        continue;
      }
      std::size_t j = i;
      while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '#' && line[j] != '[' &&
             line[j] != ']') {
        ++j;
      }
      out.push_back({line.substr(i, j - i), static_cast<int>(i) + 1});
      i = j;
    }
    return out;
  }

  void dispatch() {
    const Token& head = tokens_[0];
    for (int s = 0; s < 5; ++s) {
      if (head.text == kSections[s]) {
        if (tokens_.size() != 1) fail(tokens_[1], "unexpected text after section header");
        if (s <= section_) fail(head, "section `" + std::string(head.text) + "` out of order or repeated");
        section_ = s;
        return;
      }
    }
    switch (section_) {
      case 0:
        if (head.text == "vertex") return vertex();
        if (head.text == "edge") return edge();
        if (head.text == "circle") return circle();
        if (head.text == "nested") return nested();
        break;
      case 1:
        if (head.text == "face") return face();
        break;
      case 2:
        if (head.text == "fold") return fold();
        break;
      case 3:
        if (head.text == "point") return point();
        break;
      case 4:
        if (head.text == "count" || head.text == "sections") return basepoints();
        break;
      default:
        fail(head, "expected a section header");
    }
    fail(head, "unknown record or section `" + std::string(head.text) + "`");
  }

  void expect_count(std::size_t n) {
    if (tokens_.size() < n) {
      throw ParseError(ErrorCode::syntax_error, line_no_, last_column(), "record is missing fields");
    }
    if (tokens_.size() > n) fail(tokens_[n], "unexpected extra field");
  }

  int last_column() const {
    const Token& t = tokens_.back();
    return t.column + static_cast<int>(t.text.size());
  }

  // Runs a shared value parser, attributing its errors to token `t`.
  template <class F>
  auto at(const Token& t, F&& f) -> decltype(f()) {
    try {
      return f();
    } catch (const ParseError&) {
      throw;
    } catch (const Error& e) {
      fail(t, e.what(), e.code());
    }
  }

  std::string id(const Token& t, std::string_view text) {
    if (!is_identifier(text)) fail(t, "invalid identifier `" + std::string(text) + "`");
    return std::string(text);
  }
  std::string id(const Token& t) { return id(t, t.text); }

  std::string_view value(const Token& t, std::string_view key) {
    if (t.text.size() <= key.size() || t.text.substr(0, key.size()) != key || t.text[key.size()] != '=') {
      if (t.text.size() == key.size() + 1 && t.text.substr(0, key.size()) == key && t.text.back() == '=') {
        return {};
      }
      fail(t, "expected `" + std::string(key) + "=`");
    }
    return t.text.substr(key.size() + 1);
  }

  std::int64_t integer(const Token& t, std::string_view text, std::int64_t lo, std::int64_t hi) {
    return at(t, [&] { return parse_integer(text, lo, hi); });
  }

  void ref(const Token& t, const std::string& target, std::string what) {
    refs_.push_back({target, line_no_, t.column, std::move(what)});
  }

  void face_ref(const Token& t, const std::string& face) { face_refs_.push_back({face, line_no_, t.column, "face"}); }

  void claim_curve(const Token& t, const std::string& c) {
    if (!curve_ids_.insert(c).second) fail(t, "duplicate curve id " + c, ErrorCode::duplicate_id);
  }

  void vertex() {
    expect_count(3);
    const std::string v = id(tokens_[1]);
    VertexKind kind;
    if (tokens_[2].text == "double") {
      kind = VertexKind::double_point;
    } else if (tokens_[2].text == "cusp") {
      kind = VertexKind::cusp;
    } else {
      fail(tokens_[2], "vertex kind must be `double` or `cusp`");
    }
    if (!d_.arrangement.vertices.emplace(v, Vertex{v, kind}).second) {
      fail(tokens_[1], "duplicate vertex id " + v, ErrorCode::duplicate_id);
    }
  }

  EdgeEnd edge_end(const Token& t) {
    const auto colon = t.text.find(':');
    if (colon == std::string_view::npos) fail(t, "expected VERTEX:SLOT");
    EdgeEnd end;
    end.vertex = id(t, t.text.substr(0, colon));
    end.slot = static_cast<int>(integer(t, t.text.substr(colon + 1), 0, 3));
    ref(t, end.vertex, "vertex");
    return end;
  }

  void edge() {
    expect_count(6);
    Edge e;
    e.id = id(tokens_[1]);
    claim_curve(tokens_[1], e.id);
    e.ends[0] = edge_end(tokens_[2]);
    e.ends[1] = edge_end(tokens_[3]);
    e.left = id(tokens_[4], value(tokens_[4], "left"));
    e.right = id(tokens_[5], value(tokens_[5], "right"));
    face_ref(tokens_[4], e.left);
    face_ref(tokens_[5], e.right);
    d_.arrangement.edges.emplace(e.id, e);
  }

  void add_circle(const Token& t, const std::string& cid, const std::string& left, const std::string& right) {
    claim_curve(t, cid);
    face_ref(t, left);
    face_ref(t, right);
    d_.arrangement.circles.emplace(cid, Circle{cid, left, right});
  }

  void circle() {
    expect_count(4);
    const std::string c = id(tokens_[1]);
    const std::string left = id(tokens_[2], value(tokens_[2], "left"));
    const std::string right = id(tokens_[3], value(tokens_[3], "right"));
    add_circle(tokens_[1], c, left, right);
  }

  // nested OUTER [CIRCLE INNER [...] ...] [...]
  void nested() {
    if (tokens_.size() < 2) fail(tokens_[0], "nested needs an outer face");
    std::size_t i = 1;
    const std::string outer = id(tokens_[i++]);
    nested_children(i, outer, 0);
    if (i != tokens_.size()) fail(tokens_[i], "unexpected token in nested tree");
  }

  void nested_children(std::size_t& i, const std::string& outside, int depth) {
    if (depth > 1000) fail(tokens_[i - 1], "nesting too deep");
    while (i < tokens_.size() && tokens_[i].text == "[") {
      const Token& open = tokens_[i++];
      if (i + 1 >= tokens_.size()) fail(open, "unterminated nested group");
      const Token& ct = tokens_[i++];
      const std::string c = id(ct);
      const std::string inside = id(tokens_[i++]);
      add_circle(ct, c, inside, outside);
      nested_children(i, inside, depth + 1);
      if (i >= tokens_.size() || tokens_[i].text != "]") {
        throw ParseError(ErrorCode::syntax_error, line_no_, i < tokens_.size() ? tokens_[i].column : last_column(),
                         "expected `]`");
      }
      ++i;
    }
  }

  void face() {
    expect_count(3);
    const std::string f = id(tokens_[1]);
    const std::string_view spec = value(tokens_[2], "fiber");
    auto fiber = at(tokens_[2], [&] { return parse_fiber(spec); });
    if (!d_.fibers.emplace(f, std::move(fiber)).second) {
      fail(tokens_[1], "duplicate face id " + f, ErrorCode::duplicate_id);
    }
  }

  SurgeryDescriptor surgery(const Token& t, std::string_view s) {
    return at(t, [&] { return parse_surgery(s); });
  }

  void fold() {
    expect_count(5);
    const std::string c = id(tokens_[1]);
    Fold f;
    f.high = id(tokens_[2], value(tokens_[2], "high"));
    f.low = id(tokens_[3], value(tokens_[3], "low"));
    f.surgery = surgery(tokens_[4], value(tokens_[4], "surgery"));
    ref(tokens_[1], c, "curve");
    face_ref(tokens_[2], f.high);
    face_ref(tokens_[3], f.low);
    if (!d_.folds.emplace(c, f).second) fail(tokens_[1], "duplicate fold for curve " + c, ErrorCode::duplicate_id);
  }

  void point() {
    expect_count(6);
    LefschetzPoint p;
    p.id = id(tokens_[1]);
    p.face = id(tokens_[2], value(tokens_[2], "face"));
    p.component = id(tokens_[3], value(tokens_[3], "component"));
    p.order = integer(tokens_[4], value(tokens_[4], "order"), 0, kMaxCount);
    const std::string_view cyc = value(tokens_[5], "cycle");
    p.cycle = at(tokens_[5], [&] { return parse_cycle(cyc); });
    face_ref(tokens_[2], p.face);
    if (!d_.lefschetz.emplace(p.id, p).second) fail(tokens_[1], "duplicate point id " + p.id, ErrorCode::duplicate_id);
  }

  void basepoints() {
    expect_count(2);
    const bool is_count = tokens_[0].text == "count";
    bool& seen = is_count ? seen_count_ : seen_sections_;
    if (seen) fail(tokens_[0], "repeated `" + std::string(tokens_[0].text) + "` record", ErrorCode::duplicate_id);
    seen = true;
    (is_count ? d_.basepoints : d_.sections) = integer(tokens_[1], tokens_[1].text, 0, kMaxCount);
  }

  void resolve() {
    for (const auto& r : refs_) {
      const bool ok = r.what == "vertex" ? d_.arrangement.vertices.count(r.id) > 0 : d_.arrangement.has_curve(r.id);
      if (!ok) throw ParseError(ErrorCode::unknown_reference, r.line, r.column, "unknown " + r.what + " " + r.id);
    }
    for (const auto& r : face_refs_) {
      if (!d_.fibers.count(r.id)) throw ParseError(ErrorCode::unknown_reference, r.line, r.column, "unknown face " + r.id);
    }
  }

  std::string_view text_;
  int line_no_ = 0;
  int section_ = -1;
  std::vector<Token> tokens_;
  BlfDiagram d_;
  std::set<std::string> curve_ids_;
  std::vector<PendingRef> refs_;
  std::vector<PendingRef> face_refs_;
  bool seen_count_ = false;
  bool seen_sections_ = false;
};

}  // namespace

BlfDiagram parse_diagram(std::string_view text) {
  try {
    return Parser(text).run();
  } catch (const ParseError&) {
    throw;
  } catch (const Error& e) {
    throw ParseError(e.code(), 0, 0, e.what());
  }
}

std::string serialize(const BlfDiagram& d) {
  std::ostringstream os;
  os << "blf 1\narrangement\n";
  for (const auto& [id, v] : d.arrangement.vertices) os << "vertex " << id << ' ' << to_string(v.kind) << '\n';
  for (const auto& [id, e] : d.arrangement.edges) {
    os << "edge " << id << ' ' << e.ends[0].vertex << ':' << e.ends[0].slot << ' ' << e.ends[1].vertex << ':'
       << e.ends[1].slot << " left=" << e.left << " right=" << e.right << '\n';
  }
  for (const auto& [id, c] : d.arrangement.circles) {
    os << "circle " << id << " left=" << c.left << " right=" << c.right << '\n';
  }
  os << "faces\n";
  for (const auto& [id, f] : d.fibers) os << "face " << id << " fiber=" << to_string(f) << '\n';
  os << "folds\n";
  for (const auto& [id, f] : d.folds) {
    os << "fold " << id << " high=" << f.high << " low=" << f.low << " surgery=" << to_string(f.surgery) << '\n';
  }
  os << "lefschetz\n";
  for (const auto& [id, p] : d.lefschetz) {
    os << "point " << id << " face=" << p.face << " component=" << p.component << " order=" << p.order << " cycle=";
    for (std::size_t i = 0; i < p.cycle.size(); ++i) os << (i ? "," : "") << p.cycle[i];
    os << '\n';
  }
  os << "basepoints\ncount " << d.basepoints << "\nsections " << d.sections << '\n';
  return os.str();
}

BlfDiagram load_diagram(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(ErrorCode::invalid_argument, 0, 0, "cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_diagram(buf.str());
}

void save_diagram(const BlfDiagram& d, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::invalid_argument, "cannot write " + path);
  out << serialize(d);
  if (!out) throw Error(ErrorCode::invalid_argument, "failed writing " + path);
}

std::string export_graph(const BlfDiagram& d) {
  std::ostringstream os;
  const auto faces = faces_of(d);
  os << "graph vertices=" << d.arrangement.vertices.size() << " edges=" << d.arrangement.edges.size()
     << " circles=" << d.arrangement.circles.size() << " faces=" << faces.size() << '\n';
  for (const auto& [id, v] : d.arrangement.vertices) {
    os << "node " << id << ' ' << to_string(v.kind) << " rotation=";
    const auto darts = rotation(d.arrangement, id);
    for (std::size_t s = 0; s < darts.size(); ++s) {
      os << (s ? "," : "") << darts[s].edge << (darts[s].end == 0 ? ":out" : ":in");
    }
    os << '\n';
  }
  auto arrow = [&](const CurveId& c) -> std::string {
    auto it = d.folds.find(c);
    if (it == d.folds.end()) return "";
    return " arrow=" + it->second.high + "->" + it->second.low;
  };
  for (const auto& [id, e] : d.arrangement.edges) {
    os << "arc " << id << ' ' << e.ends[0].vertex << "->" << e.ends[1].vertex << " left=" << e.left
       << " right=" << e.right << arrow(id) << '\n';
  }
  for (const auto& [id, c] : d.arrangement.circles) {
    os << "loop " << id << " inside=" << c.left << " outside=" << c.right << arrow(id) << '\n';
  }
  for (const auto& f : faces) {
    os << "region " << f.label << " euler_c=" << f.euler_c();
    if (auto it = d.fibers.find(f.label); it != d.fibers.end()) os << " fiber=" << to_string(it->second);
    os << " boundary=";
    for (std::size_t i = 0; i < f.circuits.size(); ++i) {
      os << (i ? "|" : "");
      for (std::size_t j = 0; j < f.circuits[i].size(); ++j) {
        os << (j ? "," : "") << f.circuits[i][j].curve << ':' << to_string(f.circuits[i][j].side);
      }
    }
    os << '\n';
  }
  for (const auto& [id, p] : d.lefschetz) {
    os << "point " << id << " region=" << p.face << " order=" << p.order << '\n';
  }
  return os.str();
}

}  // namespace blf
