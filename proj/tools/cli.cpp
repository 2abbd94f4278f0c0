#include "cli.hpp"

#include <charconv>
#include <chrono>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "subcomp/detect.hpp"
#include "subcomp/errors.hpp"
#include "subcomp/generators.hpp"
#include "subcomp/graph_io.hpp"
#include "subcomp/mindeg.hpp"
#include "subcomp/oracle.hpp"
#include "subcomp/stardiamond.hpp"

namespace subcomp::cli {

namespace {

using Json = nlohmann::ordered_json;

struct CommonOptions {
  std::string input = "-";
  std::string format = "auto";
  bool json = false;
  bool certificate = true;
  std::optional<std::uint64_t> budget;
  bool no_timing = false;
  bool batch = false;
};

void add_common(CLI::App* sub, CommonOptions& opts) {
  sub->add_option("--input", opts.input, "Input path, or - for standard input")->capture_default_str();
  sub->add_option("--format", opts.format, "Input format")
      ->check(CLI::IsMember({"auto", "graph6", "edgelist"}))
      ->capture_default_str();
  sub->add_flag("--json", opts.json, "Emit one JSON object per report");
  sub->add_flag("--certificate,!--no-certificate", opts.certificate, "Include the witness set (default on)");
  sub->add_option("--budget", opts.budget, "Work budget (subsets or verifications)")->check(CLI::PositiveNumber);
  sub->add_flag("--no-timing", opts.no_timing, "Omit elapsed_ms so reports are byte-identical across runs");
  sub->add_flag("--batch", opts.batch, "Read one graph6 string per line, emit one report per line");
}

auto read_all(const std::string& path, std::istream& in) -> std::string {
  std::ostringstream buffer;
  if (path == "-") {
    buffer << in.rdbuf();
  } else {
    std::ifstream file(path);
    if (!file) throw ParseError("cannot open input file '" + path + "'");
    buffer << file.rdbuf();
  }
  return buffer.str();
}

// graph6 strings are a single whitespace-free token; edge lists start with "n m".
auto looks_like_edge_list(std::string_view text) -> bool {
  std::istringstream lines{std::string(text)};
  std::string line;
  while (std::getline(lines, line)) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    auto last = line.find_last_not_of(" \t\r");
    return line.substr(first, last - first + 1).find_first_of(" \t") != std::string::npos;
  }
  return true;
}

auto parse_graph(std::string_view text, const std::string& format) -> Graph {
  auto effective = format;
  if (effective == "auto") effective = looks_like_edge_list(text) ? "edgelist" : "graph6";
  if (effective == "edgelist") return parse_edge_list(text);
  auto first = text.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) throw ParseError("graph6: empty input");
  auto last = text.find_last_not_of(" \t\r\n");
  return decode_graph6(text.substr(first, last - first + 1));
}

auto format_graph(const Graph& g, const std::string& format) -> std::string {
  if (format == "graph6") return encode_graph6(g) + "\n";
  return format_edge_list(g);
}

auto labelled(const Graph& g, const VertexSet& s) -> std::vector<Vertex> {
  std::vector<Vertex> out;
  for (auto v : s) out.push_back(g.label(v));
  return out;
}

auto from_verdict(const Graph& g, const Verdict& verdict) -> RunReport {
  RunReport report;
  report.answer = std::string(to_string(verdict.answer));
  if (verdict.witness) report.witness = labelled(g, *verdict.witness);
  report.provenance = std::string(to_string(verdict.provenance));
  return report;
}

auto parse_vertex_list(const std::string& text, std::size_t n) -> VertexSet {
  VertexSet s(n);
  std::string cleaned;
  for (char c : text) cleaned += (c == '[' || c == ']' || c == ',') ? ' ' : c;
  std::istringstream tokens(cleaned);
  std::string token;
  while (tokens >> token) {
    std::size_t v = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
    if (ec != std::errc() || ptr != token.data() + token.size())
      throw ParseError("invalid vertex '" + token + "' in witness list");
    if (v >= n) throw ParseError("witness vertex " + token + " out of range");
    s.insert(v);
  }
  return s;
}

using Task = std::function<RunReport(const Graph&)>;

// Runs `task` over the input (one graph, or one graph6 per line in batch
// mode) and writes the reports in input order.
auto emit_reports(const CommonOptions& opts, const Task& task, std::istream& in, std::ostream& out) -> int {
  auto text = read_all(opts.input, in);

  auto one = [&](const Graph& g) {
    auto start = std::chrono::steady_clock::now();
    auto report = task(g);
    auto stop = std::chrono::steady_clock::now();
    if (!opts.no_timing) report.elapsed_ms = std::chrono::duration<double, std::milli>(stop - start).count();
    if (!opts.certificate) report.witness.reset();
    report.input_digest = graph_digest(g);
    return report;
  };

  if (!opts.batch) {
    auto report = one(parse_graph(text, opts.format));
    out << (opts.json ? report.to_json() + "\n" : report.to_lines());
    return kDecided;
  }

  std::istringstream lines(text);
  std::string line;
  while (std::getline(lines, line)) {
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    auto last = line.find_last_not_of(" \t\r");
    auto report = one(decode_graph6(std::string_view(line).substr(first, last - first + 1)));
    out << (opts.json ? report.to_json() : report.to_single_line()) << "\n";
  }
  return kDecided;
}

auto render_value(const Json& value) -> std::string {
  return value.is_string() ? value.get<std::string>() : value.dump();
}

auto fields(const RunReport& r) -> std::vector<std::pair<std::string, std::string>> {
  std::vector<std::pair<std::string, std::string>> out;
  if (!r.answer.empty()) out.emplace_back("answer", r.answer);
  if (r.witness) out.emplace_back("witness", Json(*r.witness).dump());
  if (!r.provenance.empty()) out.emplace_back("provenance", r.provenance);
  for (const auto& [key, value] : r.extra) out.emplace_back(key, render_value(value));
  if (r.elapsed_ms) {
    std::ostringstream ms;
    ms << std::fixed << std::setprecision(3) << *r.elapsed_ms;
    out.emplace_back("elapsed_ms", ms.str());
  }
  out.emplace_back("input_digest", r.input_digest);
  return out;
}

auto family_graph(std::string_view family, const GenerateParams& params) -> Graph {
  auto need = [&](const std::optional<std::size_t>& value, const char* flag) {
    if (!value) throw std::invalid_argument("family '" + std::string(family) + "' needs " + flag);
    return *value;
  };
  if (family == "path") return gen::path(need(params.n, "--n"));
  if (family == "cycle") return gen::cycle(need(params.n, "--n"));
  if (family == "star") return gen::star(need(params.t, "--t"));
  if (family == "complete") return gen::complete(need(params.n, "--n"));
  if (family == "empty") return gen::empty(need(params.n, "--n"));
  if (family == "diamond") return gen::diamond();
  if (family == "paw") return gen::paw();
  if (family == "petersen") return gen::petersen();
  if (family == "gnp") {
    if (!params.p) throw std::invalid_argument("family 'gnp' needs --p");
    return gen::gnp(need(params.n, "--n"), *params.p, params.seed);
  }
  throw std::invalid_argument("unknown graph family '" + std::string(family) + "'");
}

}  // namespace

auto generate(std::string_view family, const GenerateParams& params) -> Graph {
  if (family != "disjoint-union") return family_graph(family, params);
  if (params.of == "disjoint-union") throw std::invalid_argument("disjoint-union cannot nest");
  auto part = family_graph(params.of, params);
  Graph g;
  for (std::size_t i = 0; i < params.copies; ++i) g = gen::disjoint_union(g, part);
  return g;
}

auto RunReport::to_lines() const -> std::string {
  std::string out;
  for (const auto& [key, value] : fields(*this)) out += key + "=" + value + "\n";
  return out;
}

auto RunReport::to_single_line() const -> std::string {
  std::string out;
  for (const auto& [key, value] : fields(*this)) {
    if (!out.empty()) out += ' ';
    out += key + "=" + value;
  }
  return out;
}

auto RunReport::to_json() const -> std::string {
  Json j = Json::object();
  if (!answer.empty()) j["answer"] = answer;
  if (witness) j["witness"] = *witness;
  if (!provenance.empty()) j["provenance"] = provenance;
  for (const auto& [key, value] : extra) j[key] = value;
  if (elapsed_ms) j["elapsed_ms"] = *elapsed_ms;
  j["input_digest"] = input_digest;
  return j.dump();
}

auto run(std::span<const std::string> args, std::istream& in, std::ostream& out, std::ostream& err) -> int {
  CLI::App app{"Subgraph complementation solver: minimum degree and {K1,t, diamond}-free targets"};
  app.name("subcomp");
  app.require_subcommand(1);

  CommonOptions opts;
  std::size_t k = 0;
  std::size_t t = 0;
  std::string target;
  bool all = false;
  std::optional<std::string> witness_text;
  std::string family;
  GenerateParams gen_params;
  std::string from = "graph6";
  std::string to = "edgelist";

  auto* solve = app.add_subcommand("solve", "Decide a subgraph complementation instance");
  solve->require_subcommand(1);
  auto* solve_min = solve->add_subcommand("min-degree", "Target: minimum degree >= k");
  solve_min->add_option("--k", k, "Target minimum degree")->required()->check(CLI::PositiveNumber);
  add_common(solve_min, opts);
  auto* solve_star = solve->add_subcommand("star-diamond", "Target: {K1,t, diamond}-free");
  solve_star->add_option("--t", t, "Forbidden star size")->required()->check(CLI::Range(3, 64));
  add_common(solve_star, opts);

  auto* kernel = app.add_subcommand("kernelize", "Reduce a minimum-degree instance to its kernel");
  kernel->add_option("--k", k, "Target minimum degree")->required()->check(CLI::PositiveNumber);
  add_common(kernel, opts);

  auto* oracle_cmd = app.add_subcommand("oracle", "Brute-force every vertex subset");
  oracle_cmd->add_option("--target", target, "min-degree:<k> or star-diamond:<t>")->required();
  oracle_cmd->add_flag("--all", all, "List every solution");
  add_common(oracle_cmd, opts);

  auto* recognize = app.add_subcommand("recognize", "Test class membership of G, or of G with --witness complemented");
  recognize->add_option("--target", target, "min-degree:<k> or star-diamond:<t>")->required();
  recognize->add_option("--witness", witness_text, "Vertex list such as 0,2,5 to complement first");
  add_common(recognize, opts);

  auto* gen_cmd = app.add_subcommand("gen", "Generate a graph");
  gen_cmd->add_option("--family", family, "path|cycle|star|complete|empty|diamond|paw|petersen|disjoint-union|gnp")
      ->required();
  gen_cmd->add_option("--n", gen_params.n, "Vertex count");
  gen_cmd->add_option("--p", gen_params.p, "Edge probability (gnp)");
  gen_cmd->add_option("--t", gen_params.t, "Leaf count (star)");
  gen_cmd->add_option("--seed", gen_params.seed, "Seed for gnp (std::mt19937_64)");
  gen_cmd->add_option("--of", gen_params.of, "Component family for disjoint-union");
  gen_cmd->add_option("--copies", gen_params.copies, "Component count for disjoint-union");
  std::string gen_format = "edgelist";
  gen_cmd->add_option("--format", gen_format, "Output format")->check(CLI::IsMember({"graph6", "edgelist"}));

  auto* convert = app.add_subcommand("convert", "Convert between graph6 and edge-list text");
  convert->add_option("--from", from, "Input format")->check(CLI::IsMember({"graph6", "edgelist"}));
  convert->add_option("--to", to, "Output format")->check(CLI::IsMember({"graph6", "edgelist"}));
  convert->add_option("--input", opts.input, "Input path, or - for standard input");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsage;
  }

  try {
    if (*solve_min) {
      auto budget = opts.budget.value_or(mindeg::kDefaultBudget);
      return emit_reports(opts, [&](const Graph& g) {
        auto report = from_verdict(g, mindeg::solve(mindeg::MinDegreeInstance(g, k), budget));
        report.extra.emplace_back("target", "min-degree:" + std::to_string(k));
        return report;
      }, in, out);
    }
    if (*solve_star) {
      auto budget = opts.budget.value_or(stardiamond::kDefaultBudget);
      return emit_reports(opts, [&](const Graph& g) {
        auto report = from_verdict(g, stardiamond::solve(stardiamond::StarDiamondInstance(g, t), budget));
        report.extra.emplace_back("target", "star-diamond:" + std::to_string(t));
        return report;
      }, in, out);
    }
    if (*kernel) {
      return emit_reports(opts, [&](const Graph& g) {
        auto reduced = mindeg::kernelize(mindeg::MinDegreeInstance(g, k));
        RunReport report;
        report.provenance = reduced.graph().order() == g.order() && reduced.graph() == g ? "unchanged" : "kernel-trivial";
        report.extra.emplace_back("kernel", encode_graph6(reduced.graph()));
        report.extra.emplace_back("kernel_n", reduced.graph().order());
        report.extra.emplace_back("k", reduced.k());
        report.extra.emplace_back("bound", mindeg::no_instance_order_bound(k));
        return report;
      }, in, out);
    }
    if (*oracle_cmd) {
      auto cls = oracle::parse_target(target);
      auto budget = opts.budget.value_or(oracle::kDefaultBudget);
      return emit_reports(opts, [&](const Graph& g) {
        auto report = from_verdict(g, oracle::brute_force(g, cls, budget));
        report.extra.emplace_back("target", cls.name);
        if (all) {
          Json solutions = Json::array();
          for (const auto& s : oracle::all_solutions(g, cls, budget)) solutions.push_back(labelled(g, s));
          report.extra.emplace_back("solution_count", solutions.size());
          report.extra.emplace_back("solutions", std::move(solutions));
        }
        return report;
      }, in, out);
    }
    if (*recognize) {
      auto cls = oracle::parse_target(target);
      return emit_reports(opts, [&](const Graph& g) {
        RunReport report;
        auto s = witness_text ? parse_vertex_list(*witness_text, g.order()) : g.empty_set();
        bool member = cls.member(subgraph_complement(g, s));
        report.answer = member ? "YES" : "NO";
        report.provenance = "recognize";
        if (witness_text) report.witness = labelled(g, s);
        report.extra.emplace_back("target", cls.name);
        report.extra.emplace_back("member", member);
        return report;
      }, in, out);
    }
    if (*gen_cmd) {
      out << format_graph(generate(family, gen_params), gen_format);
      return kDecided;
    }
    if (*convert) {
      out << format_graph(parse_graph(read_all(opts.input, in), from), to);
      return kDecided;
    }
  } catch (const BudgetExceeded& e) {
    err << "budget exceeded: " << e.what() << "\n";
    return kBudget;
  } catch (const ImplementationDefect& e) {
    err << "internal error: " << e.what() << "\n";
    return kInternal;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsage;
  }
  err << app.help();
  return kUsage;
}

}  // namespace subcomp::cli
