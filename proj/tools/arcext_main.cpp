#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "arcext/oracle.hpp"
#include "arcext/report.hpp"
#include "arcext/sweep.hpp"
#include "json.hpp"

namespace {

using namespace arcext;
using nlohmann::json;

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("io", "cannot read '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

std::vector<EdgeIx> parse_seq(const Surface& S, const std::string& text) {
  std::vector<EdgeIx> seq;
  std::string cur;
  std::istringstream is(text);
  while (std::getline(is, cur, ',')) seq.push_back(S.T.edge(cur));
  return seq;
}

struct Common {
  std::string file;
  std::string format = "text";
  std::string arc1, arc2, seq1, seq2;

  void attach(CLI::App* cmd, bool two_words) {
    cmd->add_option("file", file, "triangulation document (JSON)")->required();
    cmd->add_option("--format", format, "text|json")
        ->check(CLI::IsMember({"text", "json"}));
    cmd->add_option("--arc1", arc1, "first string (ASCII grammar)");
    cmd->add_option("--seq1", seq1, "first crossing sequence (comma separated)");
    if (two_words) {
      cmd->add_option("--arc2", arc2, "second string");
      cmd->add_option("--seq2", seq2, "second crossing sequence");
    }
  }

  Surface load() const { return Surface::load(read_file(file)); }

  StringWord word1(const Surface& S) const {
    if (!arc1.empty()) return parse_word(S, arc1);
    if (!seq1.empty()) return crossing_sequence_to_string(S.Q, parse_seq(S, seq1));
    throw ValidationError("missing-argument", "need --arc1 or --seq1");
  }
  StringWord word2(const Surface& S) const {
    if (!arc2.empty()) return parse_word(S, arc2);
    if (!seq2.empty()) return crossing_sequence_to_string(S.Q, parse_seq(S, seq2));
    throw ValidationError("missing-argument", "need --arc2 or --seq2");
  }
};

void emit(const Common& c, const json& j, const std::string& text) {
  if (c.format == "json")
    std::cout << j.dump(2) << "\n";
  else
    std::cout << text;
}

int run(int argc, char** argv) {
  CLI::App app{"string-module extension calculus over gentle surface algebras"};
  app.require_subcommand(1);

  Common c_quiver, c_validate, c_snake, c_cross, c_smooth, c_ext, c_oracle, c_check;
  int crossing_index = -1;
  int max_len = 4;
  int parallel = 1;

  auto* quiver = app.add_subcommand("quiver", "derived quiver with potential");
  c_quiver.attach(quiver, false);

  auto* validate = app.add_subcommand("validate", "check a string word");
  c_validate.attach(validate, false);

  auto* snake = app.add_subcommand("snake", "snake graph of a string or sequence");
  c_snake.attach(snake, false);

  auto* crossings = app.add_subcommand("crossings", "classified crossings of two strings");
  c_cross.attach(crossings, true);

  auto* smoothc = app.add_subcommand("smooth", "smoothing of one crossing");
  c_smooth.attach(smoothc, true);
  smoothc->add_option("--crossing", crossing_index, "crossing index")->required();

  auto* ext = app.add_subcommand("ext", "Ext^1 bases, dimensions and triangles");
  c_ext.attach(ext, true);

  auto* oracle = app.add_subcommand("oracle-ext", "linear-algebra Ext^1 dimensions");
  c_oracle.attach(oracle, true);

  auto* check = app.add_subcommand("check", "exhaustive combinatorics-vs-oracle sweep");
  c_check.attach(check, false);
  check->add_option("--max-len", max_len, "maximum string length");
  check->add_option("--parallel", parallel, "worker threads");

  CLI11_PARSE(app, argc, argv);

  if (quiver->parsed()) {
    Surface S = c_quiver.load();
    emit(c_quiver, quiver_json(S), quiver_text(S));
    return 0;
  }

  if (validate->parsed()) {
    Surface S = c_validate.load();
    StringWord w = c_validate.word1(S);
    json j = {{"valid", true},
              {"canonical", print_word(S.T, canonicalize(S.T, w))},
              {"total_dim", w.vertex_count()}};
    emit(c_validate, j, "valid: " + print_word(S.T, canonicalize(S.T, w)) + "\n");
    return 0;
  }

  if (snake->parsed()) {
    Surface S = c_snake.load();
    SnakeGraph G;
    if (!c_snake.seq1.empty())
      G = build_snake_graph(S, parse_seq(S, c_snake.seq1));
    else
      G = snake_graph_of_string(S, c_snake.word1(S));
    emit(c_snake, snake_json(S.T, G), render_ascii(S.T, G));
    return 0;
  }

  if (crossings->parsed()) {
    Surface S = c_cross.load();
    auto cr = enumerate_crossings(S, c_cross.word1(S), c_cross.word2(S));
    json j = json::array();
    std::ostringstream os;
    for (size_t i = 0; i < cr.size(); ++i) {
      j.push_back(crossing_json(S, static_cast<int>(i), cr[i]));
      os << crossing_text(S, static_cast<int>(i), cr[i]) << "\n";
    }
    emit(c_cross, j, os.str());
    return 0;
  }

  if (smoothc->parsed()) {
    Surface S = c_smooth.load();
    auto cr = enumerate_crossings(S, c_smooth.word1(S), c_smooth.word2(S));
    if (crossing_index < 0 || crossing_index >= static_cast<int>(cr.size()))
      throw ValidationError("bad-index", "crossing index out of range");
    const Crossing& c = cr[crossing_index];
    SmoothingResult sm = smooth(S, c);
    Resolution res = smooth_graphs(S, c);
    json j = {{"crossing", crossing_json(S, crossing_index, c)},
              {"smoothing", smoothing_json(S, sm)},
              {"graphs",
               {{"G3", snake_json(S.T, res.g3)},
                {"G4", snake_json(S.T, res.g4)},
                {"G5", snake_json(S.T, res.g5)},
                {"G6", snake_json(S.T, res.g6)}}}};
    std::ostringstream os;
    os << crossing_text(S, crossing_index, c) << "\n"
       << "w3 = " << print_arc_value(S.T, sm.w3) << "\n"
       << "w4 = " << print_arc_value(S.T, sm.w4) << "\n"
       << "w5 = " << print_arc_value(S.T, sm.w5) << "\n"
       << "w6 = " << print_arc_value(S.T, sm.w6) << "\n"
       << "G3:\n" << render_ascii(S.T, res.g3)
       << "G4:\n" << render_ascii(S.T, res.g4)
       << "G5:\n" << render_ascii(S.T, res.g5)
       << "G6:\n" << render_ascii(S.T, res.g6);
    emit(c_smooth, j, os.str());
    return 0;
  }

  if (ext->parsed()) {
    Surface S = c_ext.load();
    json j = ext_report_json(S, c_ext.word1(S), c_ext.word2(S));
    std::ostringstream os;
    os << "dim Ext(M1,M2) = " << j["ext"]["dim_MN"].get<int>() << "\n"
       << "dim Ext(M2,M1) = " << j["ext"]["dim_NM"].get<int>() << "\n"
       << "Int = " << j["ext"]["Int"].get<int>() << ", k = " << j["ext"]["k"].get<int>()
       << ", k' = " << j["ext"]["k_prime"].get<int>() << "\n";
    for (const auto& s : j["ses"]) {
      os << "0 -> " << s["sub"].get<std::string>() << " -> ";
      for (size_t i = 0; i < s["middle"].size(); ++i)
        os << (i ? " + " : "") << s["middle"][i].get<std::string>();
      os << " -> " << s["quotient"].get<std::string>() << " -> 0\n";
    }
    auto arcstr = [](const json& v) {
      std::string t = v["type"].get<std::string>();
      if (t == "zero") return std::string("0");
      if (t == "arc") return "arc(" + v["value"].get<std::string>() + ")";
      if (t == "boundary") return "boundary(" + v["value"].get<std::string>() + ")";
      return v["value"].get<std::string>();
    };
    for (const auto& t : j["triangles"]) {
      os << arcstr(t["source"]) << " -> ";
      if (t["middle"].empty()) os << "0";
      for (size_t i = 0; i < t["middle"].size(); ++i)
        os << (i ? " + " : "") << arcstr(t["middle"][i]);
      os << " -> " << arcstr(t["target"]) << " -> " << arcstr(t["source"]) << "[1]\n";
    }
    emit(c_ext, j, os.str());
    return 0;
  }

  if (oracle->parsed()) {
    Surface S = c_oracle.load();
    StringWord w1 = c_oracle.word1(S), w2 = c_oracle.word2(S);
    OracleCache cache(S);
    long mn = cache.ext1(w1, w2);
    long nm = same_module(S.T, w1, w2) ? mn : cache.ext1(w2, w1);
    json j = {{"dim_MN", mn}, {"dim_NM", nm}};
    std::ostringstream os;
    os << "oracle dim Ext(M1,M2) = " << mn << "\noracle dim Ext(M2,M1) = " << nm << "\n";
    emit(c_oracle, j, os.str());
    return 0;
  }

  if (check->parsed()) {
    Surface S = c_check.load();
    SweepResult r = check_surface(S, {max_len, parallel});
    json issues = json::array();
    for (const auto& i : r.issues) issues.push_back({{"kind", i.kind}, {"detail", i.detail}});
    json j = {{"strings", r.strings}, {"pairs", r.pairs},     {"crossings", r.crossings},
              {"seconds", r.seconds}, {"issues", issues},     {"ok", r.ok()}};
    std::ostringstream os;
    os << "strings=" << r.strings << " pairs=" << r.pairs << " crossings=" << r.crossings
       << " seconds=" << r.seconds << "\n";
    for (const auto& i : r.issues) os << "MISMATCH [" << i.kind << "] " << i.detail << "\n";
    os << (r.ok() ? "OK\n" : "FAILED\n");
    emit(c_check, j, os.str());
    return r.ok() ? 0 : 2;
  }

  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const arcext::InternalFault& ex) {
    nlohmann::json j = {{"error", {{"code", ex.code()}, {"message", ex.what()}}}};
    std::cerr << j.dump() << "\n";
    return 2;
  } catch (const arcext::Error& ex) {
    nlohmann::json j = {{"error", {{"code", ex.code()}, {"message", ex.what()}}}};
    std::cerr << j.dump() << "\n";
    return 1;
  } catch (const std::exception& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return 2;
  }
}
