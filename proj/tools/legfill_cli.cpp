// legfill: command-line front end for the library.
// Exit codes: 0 success, 1 computation error, 2 input error.

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "legfill/audit.hpp"
#include "legfill/braid.hpp"
#include "legfill/cobordism.hpp"
#include "legfill/corpus.hpp"
#include "legfill/error.hpp"
#include "legfill/front.hpp"
#include "legfill/homfly.hpp"
#include "legfill/ruling.hpp"

using namespace legfill;
using json = nlohmann::ordered_json;

namespace {

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot read '" + path + "'");
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

std::string extension(const std::string& path) {
  auto dot = path.rfind('.');
  return dot == std::string::npos ? "" : path.substr(dot);
}

bool g_json = false;

void emit(const json& j, const std::string& text) {
  if (g_json) std::cout << j.dump(2) << "\n";
  else std::cout << text;
}

json trace_json(const FillingTrace& t) {
  json steps = json::array();
  for (const auto& s : t.steps) steps.push_back({{"move", format_move(s.move)}, {"chi", s.euler_after}});
  return {{"chi", t.euler},
          {"genus", t.genus ? json(*t.genus) : json()},
          {"steps", steps},
          {"end_front", format_front_inline(t.end().front)}};
}

void cmd_homfly(const std::string& path) {
  std::string ext = extension(path);
  HomflyPoly p;
  if (ext == ".braid") p = homfly(closure_diagram(parse_braid(read_file(path))));
  else if (ext == ".front") p = homfly(front_to_pd(orient(parse_front(read_file(path)))));
  else throw InputError("homfly expects a .braid or .front file");
  int d = max_framing_degree(p);
  int b = homfly_tb_bound(p);
  std::ostringstream t;
  t << "homfly=" << p.to_string() << "\nmax_framing_degree=" << d << "\ntb_bound=" << b << "\n";
  emit({{"homfly", p.to_string()}, {"max_framing_degree", d}, {"tb_bound", b}}, t.str());
}

void cmd_tb(const std::string& path) {
  auto f = orient(parse_front(read_file(path)));
  auto inv = classical_invariants(f);
  int comps = FrontTopology(f.front).component_count();
  std::ostringstream t;
  t << "tb=" << inv.tb << "\nrot=" << inv.rot << "\ncomponents=" << comps << "\n";
  emit({{"tb", inv.tb}, {"rot", inv.rot}, {"components", comps}}, t.str());
}

void cmd_rulings(const std::string& path, bool oriented_only) {
  auto f = orient(parse_front(read_file(path)));
  auto rulings = enumerate_rulings(f, oriented_only);
  std::ostringstream t;
  json list = json::array();
  t << "count=" << rulings.size() << "\n";
  for (const auto& r : rulings) {
    bool o = is_oriented(r, f);
    t << format_ruling(r) << " oriented=" << (o ? "true" : "false") << "\n";
    list.push_back({{"switches", r.switches}, {"oriented", o}});
  }
  emit({{"count", rulings.size()}, {"rulings", list}}, t.str());
}

void cmd_fill(const std::string& path) {
  auto t = construct_filling(orient(parse_front(read_file(path))));
  emit(trace_json(t), format_trace(t));
}

int cmd_replay(const std::string& path) {
  auto t = replay_script(parse_moves(read_file(path)));
  auto rep = verify_trace(t);
  std::ostringstream out;
  out << format_trace(t);
  json checks = json::array();
  for (const auto& c : rep.checks) {
    out << "check=" << c.name << " passed=" << (c.passed ? "true" : "false");
    if (!c.detail.empty()) out << " detail=" << c.detail;
    out << "\n";
    checks.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
  }
  json j = trace_json(t);
  j["tb"] = rep.tb;
  j["checks"] = checks;
  emit(j, out.str());
  return rep.passed() ? 0 : 1;
}

void cmd_chi4(const std::string& path) {
  auto bands = parse_bands(read_file(path));
  int chi = chi4_quasipositive(bands);
  emit({{"chi4", chi}}, "chi4=" + std::to_string(chi) + "\n");
}

void cmd_classify(const std::string& path) {
  std::string ext = extension(path);
  HierarchyLevel level;
  if (ext == ".bands") level = classify_certificate(parse_bands(read_file(path)));
  else if (ext == ".braid") level = classify_certificate(parse_braid(read_file(path)));
  else throw InputError("classify expects a .bands or .braid file");
  emit({{"level", to_string(level)}}, std::string("level=") + to_string(level) + "\n");
}

void cmd_audit(const std::string& bands_path, const std::string& front_path, const std::string& moves_path,
               const std::string& label) {
  AuditOptions opt;
  opt.label = label;
  if (!moves_path.empty()) opt.script = parse_moves(read_file(moves_path));
  auto r = audit(parse_bands(read_file(bands_path)), orient(parse_front(read_file(front_path))), opt);
  if (g_json) std::cout << report_json(r) << "\n";
  else std::cout << format_report(r);
}

void cmd_corpus_list() {
  auto labels = corpus_list();
  std::string text;
  for (const auto& l : labels) text += l + "\n";
  emit({{"labels", labels}}, text);
}

void cmd_corpus_get(const std::string& label, const std::string& part) {
  Fixture f = corpus_get(label);
  std::string braid = format_braid(f.braid), bands = format_bands(f.bands), front = format_front(f.front.front);
  std::string moves = f.script ? format_moves(*f.script) : "";
  if (!part.empty()) {
    if (part == "braid") std::cout << braid;
    else if (part == "bands") std::cout << bands;
    else if (part == "front") std::cout << front;
    else if (part == "moves") {
      if (!f.script) throw InputError("'" + label + "' has no move script");
      std::cout << moves;
    } else throw InputError("unknown part '" + part + "'");
    return;
  }
  json j{{"label", f.label}, {"description", f.description}, {"braid", braid}, {"bands", bands}, {"front", front}};
  j["moves"] = f.script ? json(moves) : json();
  std::string text = "# " + f.label + ": " + f.description + "\n# braid\n" + braid + "# bands\n" + bands +
                     "# front\n" + front;
  if (f.script) text += "# moves\n" + moves;
  emit(j, text);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Legendrian fronts, rulings, HOMFLY bounds and decomposable fillings"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_flag("--json", g_json, "structured output");

  std::string file, bands_path, front_path, moves_path, label = "unnamed", part;
  bool oriented = false;

  auto* homfly_cmd = app.add_subcommand("homfly", "HOMFLY polynomial of a braid closure or front");
  homfly_cmd->add_option("file", file, ".braid or .front")->required();
  auto* tb_cmd = app.add_subcommand("tb", "classical invariants of a front");
  tb_cmd->add_option("file", file, ".front")->required();
  auto* rulings_cmd = app.add_subcommand("rulings", "normal rulings of a front");
  rulings_cmd->add_option("file", file, ".front")->required();
  rulings_cmd->add_flag("--oriented", oriented, "only oriented rulings");
  auto* fill_cmd = app.add_subcommand("fill", "construct a decomposable filling");
  fill_cmd->add_option("file", file, ".front")->required();
  auto* replay_cmd = app.add_subcommand("replay", "replay and verify a move script");
  replay_cmd->add_option("file", file, ".moves")->required();
  auto* chi4_cmd = app.add_subcommand("chi4", "slice Euler characteristic of a band presentation");
  chi4_cmd->add_option("file", file, ".bands")->required();
  auto* classify_cmd = app.add_subcommand("classify", "positivity certificate");
  classify_cmd->add_option("file", file, ".bands or .braid")->required();
  auto* audit_cmd = app.add_subcommand("audit", "fillability audit of one knot");
  audit_cmd->add_option("--bands", bands_path, ".bands")->required();
  audit_cmd->add_option("--front", front_path, ".front")->required();
  audit_cmd->add_option("--moves", moves_path, "filling script to try");
  audit_cmd->add_option("--label", label, "knot label");
  auto* corpus_cmd = app.add_subcommand("corpus", "bundled fixtures");
  corpus_cmd->require_subcommand(1);
  corpus_cmd->fallthrough();
  auto* list_cmd = corpus_cmd->add_subcommand("list", "fixture labels");
  auto* get_cmd = corpus_cmd->add_subcommand("get", "one fixture");
  get_cmd->add_option("label", label)->required();
  get_cmd->add_option("--part", part, "braid, bands, front or moves");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (homfly_cmd->parsed()) cmd_homfly(file);
    else if (tb_cmd->parsed()) cmd_tb(file);
    else if (rulings_cmd->parsed()) cmd_rulings(file, oriented);
    else if (fill_cmd->parsed()) cmd_fill(file);
    else if (replay_cmd->parsed()) return cmd_replay(file);
    else if (chi4_cmd->parsed()) cmd_chi4(file);
    else if (classify_cmd->parsed()) cmd_classify(file);
    else if (audit_cmd->parsed()) cmd_audit(bands_path, front_path, moves_path, label);
    else if (list_cmd->parsed()) cmd_corpus_list();
    else if (get_cmd->parsed()) cmd_corpus_get(label, part);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.is_input_error() ? 2 : 1;
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
