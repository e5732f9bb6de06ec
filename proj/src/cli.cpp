#include "blf/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <sstream>

#include "blf/format.hpp"
#include "blf/mcg.hpp"
#include "blf/moves.hpp"
#include "blf/script.hpp"

namespace blf {

namespace {

constexpr int kOk = 0;
constexpr int kViolations = 1;
constexpr int kUsage = 2;

struct Io {
  std::ostream& out;
  std::ostream& err;
};

// Parse errors leave through here as exit code 2.
struct Usage {
  std::string message;
};

BlfDiagram load(const std::string& path) {
  try {
    return load_diagram(path);
  } catch (const ParseError& e) {
    throw Usage{path + ":" + e.diagnostic()};
  }
}

std::string read_text(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Usage{path + ": cannot open"};
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void print_issues(const ValidationReport& r, std::ostream& os) {
  for (const auto& i : r.issues) {
    os << i.code << ' ' << i.subject << ": " << i.message << '\n';
  }
}

// Prints violations and returns false when `d` is invalid.
bool require_valid_cli(const BlfDiagram& d, Io io) {
  auto report = validate(d);
  if (report.ok()) return true;
  print_issues(report, io.out);
  return false;
}

std::int64_t euler_of(const BlfDiagram& d) { return d.basepoints > 0 ? pencil_euler(d) : euler_characteristic(d); }

int cmd_validate(const std::string& file, Io io) {
  const auto d = load(file);
  auto report = validate(d);
  print_issues(report, io.out);
  if (!report.ok()) return kViolations;
  io.out << "valid\n";
  return kOk;
}

int cmd_euler(const std::string& file, Io io) {
  const auto d = load(file);
  if (!require_valid_cli(d, io)) return kViolations;
  io.out << euler_of(d) << '\n';
  return kOk;
}

int cmd_report(const std::string& file, Io io) {
  const auto d = load(file);
  if (!require_valid_cli(d, io)) return kViolations;
  const auto n = counts(d);
  const auto conn = connectivity_report(d);
  const bool pencil = d.basepoints > 0;
  io.out << "euler: " << euler_of(d) << (pencil ? " (pencil)" : "") << '\n';
  io.out << "parity: " << (parity_check(pencil ? blow_up(d) : d) ? "ok" : "FAIL") << '\n';
  io.out << "connected fibers: " << (conn.all_connected ? "yes" : "no");
  for (const auto& [face, ok] : conn.face_connected) {
    if (!ok) io.out << ' ' << face;
  }
  io.out << '\n';
  io.out << "faces: " << n.faces << "\nedges: " << n.edges << "\ncircles: " << n.circles
         << "\ndouble points: " << n.double_points << "\ncusps: " << n.cusps << "\nlefschetz: " << n.lefschetz
         << "\nbase points: " << d.basepoints << "\nsections: " << d.sections << '\n';
  for (const auto& w : validate(d).warnings()) io.out << w.code << ' ' << w.subject << ": " << w.message << '\n';
  return kOk;
}

int cmd_monodromy(const std::string& file, const std::string& face, const std::string& cls,
                  std::string component, bool left, Io io) {
  const auto d = load(file);
  if (!require_valid_cli(d, io)) return kViolations;
  auto fit = d.fibers.find(face);
  if (fit == d.fibers.end()) throw Usage{"no face " + face + " in " + file};
  if (component.empty()) component = fit->second.components().front().id;
  const FiberComponent* comp = fit->second.find(component);
  if (comp == nullptr) throw Usage{"no component " + component + " over " + face};
  std::vector<std::int64_t> coords;
  try {
    coords = parse_cycle(cls);
  } catch (const Error& e) {
    throw Usage{std::string("--class: ") + e.what()};
  }
  const auto word = face_monodromy(d, face, component, left ? mcg::Handedness::left : mcg::Handedness::right);
  const mcg::HomologyClass z(word.genus(), coords);
  if (mcg::round_handle_check(word, z)) {
    io.out << "OK (fixed up to sign)\n";
    return kOk;
  }
  const auto image = mcg::compose_word(word) * z.coords();
  io.out << "FAIL: monodromy over " << face << " maps (" << cls << ") to (";
  for (std::size_t i = 0; i < image.size(); ++i) io.out << (i ? "," : "") << image[i];
  io.out << ")\n";
  return kViolations;
}

int cmd_apply(const std::string& file, const std::string& script_path, const std::string& output, Io io) {
  const auto d = load(file);
  if (!require_valid_cli(d, io)) return kViolations;
  MoveScript script;
  try {
    script = parse_script(read_text(script_path));
  } catch (const ParseError& e) {
    throw Usage{script_path + ":" + e.diagnostic()};
  }
  ScriptResult r;
  try {
    r = apply_script(d, script);
  } catch (const ParseError& e) {
    io.out << script_path << ':' << e.diagnostic() << '\n';
    return kViolations;
  }
  for (const auto& s : r.steps) io.out << script_path << ':' << s.line << ": " << s.move << " euler=" << s.euler << '\n';
  save_diagram(r.diagram, output);
  return kOk;
}

int cmd_connect(const std::string& file, const std::string& output, Io io) {
  const auto d = load(file);
  const auto r = connect_fibers(d);
  save_diagram(r, output);
  io.out << "euler " << euler_characteristic(d) << " -> " << euler_characteristic(r) << ", lefschetz "
         << d.lefschetz.size() << " -> " << r.lefschetz.size() << '\n';
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Broken Lefschetz fibration diagrams over the sphere"};
  app.require_subcommand(1);
  std::string file, face, cls, component, script, output, format = "graph";
  bool left = false;

  auto* validate_cmd = app.add_subcommand("validate", "check a diagram, one violation per line");
  validate_cmd->add_option("FILE", file)->required();
  auto* euler_cmd = app.add_subcommand("euler", "print the Euler characteristic of the total space");
  euler_cmd->add_option("FILE", file)->required();
  auto* report_cmd = app.add_subcommand("report", "euler, parity, connectivity and counts");
  report_cmd->add_option("FILE", file)->required();
  auto* mono_cmd = app.add_subcommand("check-monodromy", "round handle check over one face");
  mono_cmd->add_option("FILE", file)->required();
  mono_cmd->add_option("--face", face)->required();
  mono_cmd->add_option("--class", cls, "homology class, comma separated")->required();
  mono_cmd->add_option("--component", component, "fiber component (default: first)");
  mono_cmd->add_flag("--left-handed", left, "Lefschetz twists are left-handed");
  auto* apply_cmd = app.add_subcommand("apply", "run a move script");
  apply_cmd->add_option("FILE", file)->required();
  apply_cmd->add_option("SCRIPT", script)->required();
  apply_cmd->add_option("-o,--output", output)->required();
  auto* connect_cmd = app.add_subcommand("connect-fibers", "flip, flip and slip to connect the fibers");
  connect_cmd->add_option("FILE", file)->required();
  connect_cmd->add_option("-o,--output", output)->required();
  auto* export_cmd = app.add_subcommand("export", "plain-text description of the arrangement");
  export_cmd->add_option("FILE", file)->required();
  export_cmd->add_option("--format", format)->check(CLI::IsMember({"graph"}));

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return e.get_exit_code() == 0 ? (out << app.help(), kOk) : (err << e.what() << '\n', kUsage);
  }

  const Io io{out, err};
  try {
    if (*validate_cmd) return cmd_validate(file, io);
    if (*euler_cmd) return cmd_euler(file, io);
    if (*report_cmd) return cmd_report(file, io);
    if (*mono_cmd) return cmd_monodromy(file, face, cls, component, left, io);
    if (*apply_cmd) return cmd_apply(file, script, output, io);
    if (*connect_cmd) return cmd_connect(file, output, io);
    const auto d = load(file);
    if (!require_valid_cli(d, io)) return kViolations;
    out << export_graph(d);
    return kOk;
  } catch (const Usage& u) {
    err << u.message << '\n';
    return kUsage;
  } catch (const Error& e) {
    out << to_string(e.code()) << ": " << e.what() << '\n';
    return kViolations;
  }
}

}  // namespace blf
