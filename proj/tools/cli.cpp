#include "cli.hpp"

#include <filesystem>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "interlace/error.hpp"
#include "interlace/eulerian.hpp"
#include "interlace/interlace.hpp"
#include "interlace/io.hpp"
#include "interlace/isotropic.hpp"
#include "interlace/verify.hpp"

namespace interlace::cli {

namespace {

enum class OutputFormat { text, json };

// Fully parsed command line.
struct RunConfig {
  std::string subcommand;
  std::string input;
  std::string method;
  OutputFormat output = OutputFormat::text;
  std::uint64_t seed = 1;
  std::optional<std::size_t> max_n;
  std::string a_word;
  std::string b_word;
  std::size_t v = 0;
  std::size_t w = 0;
  bool timings = false;
};

// "-" reads the input stream, an existing path reads the file, and any
// argument containing whitespace is taken as the literal content.
std::string read_input(const std::string& arg, std::istream& in) {
  if (arg == "-") return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  std::error_code ec;
  if (std::filesystem::is_regular_file(arg, ec)) {
    std::ifstream file(arg, std::ios::binary);
    if (!file) throw Error("cannot open '" + arg + "'");
    return {std::istreambuf_iterator<char>(file), std::istreambuf_iterator<char>()};
  }
  if (arg.find_first_of(" \t\n") != std::string::npos) return arg;
  throw Error("cannot read '" + arg + "': no such file");
}

void emit(std::ostream& out, const RunConfig& cfg, const UniPoly& p) {
  out << (cfg.output == OutputFormat::json ? p.to_json() : p.to_string()) << '\n';
}

void emit(std::ostream& out, const RunConfig& cfg, const BiPoly& p) {
  out << (cfg.output == OutputFormat::json ? p.to_json() : p.to_string()) << '\n';
}

void emit(std::ostream& out, const RunConfig& cfg, const SimpleGraph& g) {
  if (cfg.output == OutputFormat::json) {
    out << graph_to_json(g) << '\n';
  } else {
    out << format_graph(g);
  }
}

KVector presentation_word(const std::string& word, std::size_t n, Klein fallback, const char* name) {
  if (word.empty()) return KVector::constant(n, fallback);
  if (word.find('0') != std::string::npos) {
    throw ParseError(std::string(name) + ": presentation vectors take values in {x, y, z}");
  }
  KVector k = KVector::parse(word);
  if (k.n() != n) {
    throw ParseError(std::string(name) + " has length " + std::to_string(k.n()) + "; graph has " +
                     std::to_string(n) + " vertices");
  }
  return k;
}

int run_verify(const RunConfig& cfg, std::ostream& out) {
  VerifyOptions options;
  options.max_n = cfg.max_n;
  options.seed = cfg.seed;
  const bool text = cfg.output == OutputFormat::text;
  const auto results = run_verification(options, [&](const CriterionResult& r) {
    if (text) out << format_result_line(r, cfg.timings) << '\n' << std::flush;
  });
  std::size_t passed = 0;
  for (const auto& r : results) passed += r.passed ? 1 : 0;
  const bool ok = passed == results.size();
  if (text) {
    out << passed << "/" << results.size() << " criteria passed\n";
  } else {
    nlohmann::ordered_json report;
    report["passed"] = ok;
    report["seed"] = cfg.seed;
    report["max_n"] = cfg.max_n ? nlohmann::ordered_json(*cfg.max_n) : nlohmann::ordered_json(nullptr);
    auto& list = report["criteria"] = nlohmann::ordered_json::array();
    for (const auto& r : results) {
      nlohmann::ordered_json item;
      item["id"] = r.id;
      item["name"] = r.name;
      item["passed"] = r.passed;
      item["detail"] = r.detail;
      if (cfg.timings) item["seconds"] = r.seconds;
      list.push_back(std::move(item));
    }
    out << report.dump() << '\n';
  }
  return ok ? kOk : kVerificationFailed;
}

int dispatch(const RunConfig& cfg, std::istream& in, std::ostream& out) {
  const std::string& cmd = cfg.subcommand;
  if (cmd == "verify") return run_verify(cfg, out);

  const std::string content = read_input(cfg.input, in);
  if (cmd == "qn") {
    const auto method = parse_qn_method(cfg.method);
    if (!method) throw ParseError("unknown q_N method '" + cfg.method + "'");
    emit(out, cfg, qn(parse_graph(content), *method));
  } else if (cmd == "q2") {
    const auto method = parse_q2_method(cfg.method);
    if (!method) throw ParseError("unknown q2 method '" + cfg.method + "'");
    emit(out, cfg, q2(parse_graph(content), *method));
  } else if (cmd == "tm") {
    const SimpleGraph g = parse_graph(content);
    if (g.n() > kMaxIsotropicVertices) {
      throw CapacityError("tm: " + std::to_string(g.n()) + " vertices exceeds the cap of " +
                          std::to_string(kMaxIsotropicVertices));
    }
    const KVector a = presentation_word(cfg.a_word, g.n(), Klein::x, "--A");
    const KVector b = presentation_word(cfg.b_word, g.n(), Klein::y, "--B");
    emit(out, cfg, tutte_martin_restricted(graphic_system(g, a, b), a + b));
  } else if (cmd == "cpp") {
    const EulerianDigraph d = parse_digraph(content);
    if (!d.edges.empty()) {
      if (auto v = validate(d); !v) throw Error("cpp: " + v.reason);
    }
    emit(out, cfg, circuit_partition_poly(d));
  } else if (cmd == "martin") {
    const EulerianDigraph d = parse_digraph(content);
    if (auto v = validate(d); !v) throw Error("martin: " + v.reason);
    emit(out, cfg, martin_poly(d));
  } else if (cmd == "circle") {
    ChordDiagram cd;
    try {
      const EulerianDigraph d = parse_digraph(content);
      if (auto v = validate(d); !v) throw Error("circle: " + v.reason);
      cd = chord_diagram_from_circuit(euler_circuit(d));
    } catch (const ParseError&) {
      cd = parse_word(content);
    }
    const SimpleGraph h = circle_graph(cd);
    if (cfg.output == OutputFormat::json) {
      nlohmann::ordered_json j = nlohmann::ordered_json::parse(graph_to_json(h));
      j["labels"] = cd.labels;
      j["word"] = cd.to_string();
      out << j.dump() << '\n';
    } else {
      out << format_graph(h);
    }
  } else if (cmd == "pivot") {
    emit(out, cfg, pivot(parse_graph(content), cfg.v, cfg.w));
  } else if (cmd == "lc") {
    emit(out, cfg, local_complement(parse_graph(content), cfg.v));
  }
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Interlace, Tutte-Martin and circuit partition polynomials", "interlace"};
  app.require_subcommand(1);
  std::string output = "text";
  app.add_option("--output", output, "Output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
  app.fallthrough();

  auto* qn_cmd = app.add_subcommand("qn", "Vertex-nullity interlace polynomial q_N(G;x)");
  qn_cmd->add_option("graph", cfg.input, "Graph file, '-' for stdin, or inline text")->required();
  cfg.method = "closed";
  qn_cmd->add_option("--method", cfg.method, "recursive|closed|bouchet|avdh|isotropic")
      ->check(CLI::IsMember({"recursive", "closed", "bouchet", "avdh", "isotropic"}))
      ->capture_default_str();

  std::string q2_method = "closed";
  auto* q2_cmd = app.add_subcommand("q2", "Two-variable interlace polynomial q(G;x,y)");
  q2_cmd->add_option("graph", cfg.input, "Graph file, '-' for stdin, or inline text")->required();
  q2_cmd->add_option("--method", q2_method, "closed|reduction")
      ->check(CLI::IsMember({"closed", "reduction"}))
      ->capture_default_str();

  auto* tm_cmd = app.add_subcommand("tm", "Restricted Tutte-Martin polynomial m(S, A+B; x)");
  tm_cmd->add_option("graph", cfg.input, "Graph file, '-' for stdin, or inline text")->required();
  tm_cmd->add_option("--A", cfg.a_word, "K-word over {x,y,z}; default all x");
  tm_cmd->add_option("--B", cfg.b_word, "K-word over {x,y,z}; default all y");

  auto* cpp_cmd = app.add_subcommand("cpp", "Circuit partition polynomial f(D;x)");
  cpp_cmd->add_option("digraph", cfg.input, "Digraph file, '-' for stdin, or inline text")->required();
  auto* martin_cmd = app.add_subcommand("martin", "Martin polynomial m(D;x)");
  martin_cmd->add_option("digraph", cfg.input, "Digraph file, '-' for stdin, or inline text")->required();
  auto* circle_cmd = app.add_subcommand("circle", "Circle graph of a digraph's Euler circuit, or of a word");
  circle_cmd->add_option("input", cfg.input, "Digraph or double occurrence word")->required();

  auto* pivot_cmd = app.add_subcommand("pivot", "Pivot G^{vw} on the edge vw");
  pivot_cmd->add_option("graph", cfg.input, "Graph file, '-' for stdin, or inline text")->required();
  pivot_cmd->add_option("v", cfg.v)->required();
  pivot_cmd->add_option("w", cfg.w)->required();
  auto* lc_cmd = app.add_subcommand("lc", "Local complementation G*v");
  lc_cmd->add_option("graph", cfg.input, "Graph file, '-' for stdin, or inline text")->required();
  lc_cmd->add_option("v", cfg.v)->required();

  auto* verify_cmd = app.add_subcommand("verify", "Run the cross-method identity suite");
  std::size_t max_n = 0;
  auto* max_n_opt = verify_cmd->add_option("--max-n", max_n, "Cap every instance size (0-24)")
                        ->check(CLI::Range(std::size_t{0}, kMaxClosedFormVertices));
  verify_cmd->add_option("--seed", cfg.seed, "Seed for the randomized checks")->capture_default_str();
  verify_cmd->add_flag("--timings", cfg.timings, "Report wall time per check");

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInputError;
  }

  cfg.subcommand = app.get_subcommands().front()->get_name();
  cfg.output = output == "json" ? OutputFormat::json : OutputFormat::text;
  if (cfg.subcommand == "q2") cfg.method = q2_method;
  if (*max_n_opt) cfg.max_n = max_n;

  try {
    return dispatch(cfg, in, out);
  } catch (const Error& e) {
    err << "interlace " << cfg.subcommand << ": " << e.what() << '\n';
  } catch (const std::exception& e) {
    err << "interlace " << cfg.subcommand << ": internal error: " << e.what() << '\n';
  }
  return kInputError;
}

}  // namespace interlace::cli
