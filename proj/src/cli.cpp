#include "nonblock/cli.hpp"

#include <filesystem>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "nonblock/compose.hpp"
#include "nonblock/error.hpp"
#include "nonblock/io.hpp"
#include "nonblock/random_gen.hpp"
#include "nonblock/reduce.hpp"
#include "nonblock/report.hpp"
#include "nonblock/unary.hpp"
#include "nonblock/verify.hpp"

namespace nonblock {
namespace {

struct CheckConfig {
  std::string kind;
  std::vector<std::string> inputs;
  SearchLimits limits;
  std::string format = "text";
  std::string dot_path;
  std::string shared_event;
};

struct GenerateConfig {
  std::string kind;
  std::vector<std::string> args;  // input files, then the output directory
  bool dot = false;
};

struct BenchConfig {
  std::string family;
  std::string sizes = "2:4";
  uint32_t count = 5;
  uint32_t states = 10;
  uint64_t seed = 0;
  SearchLimits limits;
};

void write_file(const std::string& path, const std::string& content) {
  std::ofstream stream(path, std::ios::binary);
  if (!stream || !(stream << content)) {
    throw Error(ErrorCode::ParseError, "cannot write '" + path + "'");
  }
}

// Text reports deliberately omit timing so identical runs print identical
// bytes; the JSON reports carry millis per the schema.
void print_stats_text(std::ostream& out, const SearchStats& stats) {
  out << "explored: " << stats.explored << "\n";
  out << "frontier_peak: " << stats.frontier_peak << "\n";
}

void print_witness_text(std::ostream& out, const char* label,
                        const EventString& witness) {
  out << label << ":";
  if (witness.empty()) {
    out << " (empty string)";
  } else {
    for (const std::string& event : witness) out << ' ' << event;
  }
  out << "\n";
}

void print_verdict(std::ostream& out, const Verdict& v,
                   const std::string& format) {
  if (format == "json") {
    out << verdict_to_json(v) << "\n";
    return;
  }
  out << "verdict: " << (v.nonblocking ? "nonblocking" : "blocking") << "\n";
  if (v.witness) print_witness_text(out, "witness", *v.witness);
  print_stats_text(out, v.stats);
}

void print_decision(std::ostream& out, const UnaryDecision& d,
                    const std::string& format) {
  if (format == "json") {
    out << unary_decision_to_json(d) << "\n";
    return;
  }
  out << "verdict: "
      << (d.verdict.nonblocking ? "nonblocking" : "blocking") << "\n";
  if (d.certificate) {
    out << "certificate k: " << d.certificate->k.to_decimal() << "\n";
    out << "certificate ell: "
        << (d.certificate->ell ? d.certificate->ell->to_decimal()
                               : std::string("(walk ends)"))
        << "\n";
  }
  if (d.verdict.witness) {
    print_witness_text(out, "witness", *d.verdict.witness);
  }
  print_stats_text(out, d.verdict.stats);
}

void print_prefix_report(std::ostream& out, const PrefixReport& r,
                         const std::string& format) {
  if (format == "json") {
    out << prefix_report_to_json(r) << "\n";
    return;
  }
  out << "prefix_closed: " << (r.prefix_closed ? "yes" : "no") << "\n";
  if (r.violation) print_witness_text(out, "violation", *r.violation);
  print_stats_text(out, r.stats);
}

int run_check(const CheckConfig& cfg, std::ostream& out, std::ostream& err) {
  bool single_input = cfg.kind == "dfa" || cfg.kind == "nfa" ||
                      cfg.kind == "prefixclosed";
  if (single_input && cfg.inputs.size() != 1) {
    err << "check " << cfg.kind << " takes exactly one input file\n";
    return 2;
  }
  if (!cfg.dot_path.empty() && cfg.inputs.size() != 1) {
    err << "--dot needs a single input file\n";
    return 2;
  }

  std::vector<Automaton> automata;
  for (const std::string& path : cfg.inputs) {
    automata.push_back(Automaton::validate(load_aut(path)));
  }
  if (!cfg.dot_path.empty()) {
    write_file(cfg.dot_path,
               to_dot(automata[0],
                      std::filesystem::path(cfg.inputs[0]).stem().string()));
  }
  if (cfg.format == "dot") {
    for (size_t i = 0; i < automata.size(); ++i) {
      out << to_dot(automata[i],
                    std::filesystem::path(cfg.inputs[i]).stem().string());
    }
  }

  auto as_dfas = [&] {
    std::vector<Dfa> dfas;
    dfas.reserve(automata.size());
    for (const Automaton& a : automata) dfas.push_back(Dfa::validate(a));
    return dfas;
  };
  // With --format dot the graph above is the payload; suppress the report
  // but keep the verdict for the exit code.
  std::string report_format = cfg.format == "dot" ? "none" : cfg.format;
  auto emit = [&](const Verdict& v) {
    if (report_format != "none") print_verdict(out, v, report_format);
    return v.nonblocking ? 0 : 1;
  };

  if (cfg.kind == "dfa") {
    return emit(check_dfa_nonblocking(as_dfas()[0]));
  }
  if (cfg.kind == "nfa") {
    return emit(check_nfa_nonblocking(automata[0], cfg.limits));
  }
  if (cfg.kind == "modular") {
    return emit(check_modular_nonblocking(as_dfas(), cfg.limits));
  }
  if (cfg.kind == "onesharedevent") {
    std::optional<std::string> shared;
    if (!cfg.shared_event.empty()) shared = cfg.shared_event;
    UnaryDecision decision =
        decide_one_shared_event(as_dfas(), shared, cfg.limits);
    if (report_format != "none") print_decision(out, decision, report_format);
    return decision.verdict.nonblocking ? 0 : 1;
  }
  PrefixReport report = check_prefix_closed(automata[0], cfg.limits);
  if (report_format != "none") print_prefix_report(out, report, report_format);
  return report.prefix_closed ? 0 : 1;
}

int run_generate(const GenerateConfig& cfg, std::ostream& out,
                 std::ostream& err) {
  if (cfg.args.size() < 2) {
    err << "generate needs input file(s) and an output directory\n";
    return 2;
  }
  std::vector<std::string> inputs(cfg.args.begin(), cfg.args.end() - 1);
  std::string outdir = cfg.args.back();
  bool single_input = cfg.kind != "dfaint";
  if (single_input && inputs.size() != 1) {
    err << "generate " << cfg.kind << " takes exactly one input file\n";
    return 2;
  }

  std::vector<Automaton> components;
  std::string expected = "unknown";
  // The oracle verdict goes into the manifest when the instance is small
  // enough to decide exhaustively.
  auto oracle = [&](auto&& compute) {
    try {
      expected = compute() ? "nonblocking" : "blocking";
    } catch (const Error& e) {
      if (e.code() != ErrorCode::InstanceTooLarge) throw;
    }
  };

  if (cfg.kind == "graph") {
    Graph g = load_graph(inputs[0]);
    components.push_back(graph_to_dfa(g));
    oracle([&] { return !graph_reachable(g); });
  } else if (cfg.kind == "universality") {
    Automaton b = Automaton::validate(load_aut(inputs[0]));
    components.push_back(universality_to_nonblocking(b));
    oracle([&] { return nfa_universal_small(b); });
  } else if (cfg.kind == "dfaint") {
    std::vector<Dfa> bs;
    for (const std::string& path : inputs) {
      bs.push_back(Dfa::validate(load_aut(path)));
    }
    for (const Dfa& a : dfaint_to_modular(bs)) components.push_back(a);
    oracle([&] { return dfaint_empty_small(bs); });
  } else {
    Cnf3 f = load_cnf3(inputs[0]);
    for (const Dfa& a : cnf3_to_unary(f)) components.push_back(a);
    oracle([&] { return sat3_bruteforce(f); });
  }

  std::filesystem::create_directories(outdir);
  std::vector<std::string> names;
  for (size_t i = 0; i < components.size(); ++i) {
    std::string base = "component_" + std::to_string(i + 1);
    names.push_back(base + ".aut");
    std::filesystem::path path = std::filesystem::path(outdir) / names.back();
    write_file(path.string(), serialize_aut(components[i]));
    if (cfg.dot) {
      std::filesystem::path dot_path =
          std::filesystem::path(outdir) / (base + ".dot");
      write_file(dot_path.string(), to_dot(components[i], base));
    }
  }
  std::string manifest = manifest_to_json(cfg.kind, names, expected);
  write_file((std::filesystem::path(outdir) / "manifest.json").string(),
             manifest + "\n");
  out << manifest << "\n";
  return 0;
}

struct BenchRow {
  SearchStats stats;
  std::string verdict;
};

BenchRow run_within_limits(const std::vector<Dfa>& components,
                           const SearchLimits& limits) {
  try {
    Verdict v = check_modular_nonblocking(components, limits);
    return {v.stats, v.nonblocking ? "nonblocking" : "blocking"};
  } catch (const LimitError& e) {
    return {e.stats(), "limit"};
  }
}

int run_bench(const BenchConfig& cfg, std::ostream& out, std::ostream& err) {
  uint32_t lo = 0, hi = 0;
  {
    std::istringstream sizes(cfg.sizes);
    char colon = 0;
    if (!(sizes >> lo)) {
      err << "bad --sizes, expected LO:HI\n";
      return 2;
    }
    if (sizes >> colon) {
      if (colon != ':' || !(sizes >> hi)) {
        err << "bad --sizes, expected LO:HI\n";
        return 2;
      }
    } else {
      hi = lo;
    }
  }

  out << "instance,explored,millis,verdict,expected\n";
  for (uint32_t size = lo; size <= hi && hi >= lo; ++size) {
    for (uint32_t index = 0; index < cfg.count; ++index) {
      std::string name = cfg.family + "-" + std::to_string(size) + "-" +
                         std::to_string(index);
      RandomStream rs(cfg.seed, "bench." + name);

      BenchRow row;
      std::string expected = "unknown";
      if (cfg.family == "random-modular") {
        std::vector<Dfa> components =
            random_modular_instance(rs, size, cfg.states);
        row = run_within_limits(components, cfg.limits);
        uint64_t bound = 1;
        for (const Dfa& c : components) bound *= c.num_states();
        if (bound <= 200'000) {
          Verdict explicit_verdict =
              check_dfa_nonblocking(parallel_compose(components));
          expected =
              explicit_verdict.nonblocking ? "nonblocking" : "blocking";
        }
      } else if (cfg.family == "dfaint") {
        std::vector<Dfa> bs;
        for (uint32_t i = 0; i < size; ++i) {
          bs.push_back(random_dfa(rs, cfg.states, {"a", "b"}));
        }
        row = run_within_limits(dfaint_to_modular(bs), cfg.limits);
        try {
          expected = dfaint_empty_small(bs) ? "nonblocking" : "blocking";
        } catch (const Error& e) {
          if (e.code() != ErrorCode::InstanceTooLarge) throw;
        }
      } else {  // cnf
        Cnf3 f = random_cnf3(rs, size < 3 ? 3 : size, 2 * size);
        std::vector<Dfa> components = cnf3_to_unary(f);
        try {
          UnaryDecision decision =
              decide_one_shared_event(components, std::nullopt, cfg.limits);
          row = {decision.verdict.stats,
                 decision.verdict.nonblocking ? "nonblocking" : "blocking"};
        } catch (const LimitError& e) {
          row = {e.stats(), "limit"};
        }
        expected = sat3_bruteforce(f) ? "nonblocking" : "blocking";
      }

      out << name << ',' << row.stats.explored << ',' << row.stats.millis
          << ',' << row.verdict << ',' << expected << "\n";
    }
  }
  return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"nonblockingness verification toolkit for finite automata"};
  app.name("nonblock");
  app.require_subcommand(1);

  CheckConfig check;
  CLI::App* check_cmd = app.add_subcommand(
      "check", "decide nonblockingness or prefix-closedness of .aut inputs");
  check_cmd
      ->add_option("kind", check.kind,
                   "dfa | nfa | modular | onesharedevent | prefixclosed")
      ->required()
      ->check(CLI::IsMember(
          {"dfa", "nfa", "modular", "onesharedevent", "prefixclosed"}));
  check_cmd->add_option("inputs", check.inputs, ".aut input files")
      ->required();
  check_cmd->add_option("--max-states", check.limits.max_states,
                        "search state budget");
  check_cmd->add_option("--max-seconds", check.limits.max_seconds,
                        "search time budget");
  check_cmd->add_option("--format", check.format, "report format")
      ->check(CLI::IsMember({"text", "json", "dot"}));
  check_cmd->add_option("--dot", check.dot_path,
                        "write the input automaton as Graphviz DOT here");
  check_cmd->add_option("--shared-event", check.shared_event,
                        "shared event for onesharedevent (derived if omitted)");

  GenerateConfig generate;
  CLI::App* generate_cmd = app.add_subcommand(
      "generate", "build verifier instances from graph/NFA/DFA/CNF inputs");
  generate_cmd
      ->add_option("kind", generate.kind, "graph | universality | dfaint | cnf")
      ->required()
      ->check(CLI::IsMember({"graph", "universality", "dfaint", "cnf"}));
  generate_cmd
      ->add_option("args", generate.args, "input file(s), output directory")
      ->required();
  generate_cmd->add_flag("--dot", generate.dot,
                         "also write Graphviz DOT next to each .aut");

  BenchConfig bench;
  CLI::App* bench_cmd =
      app.add_subcommand("bench", "time a family of random instances as CSV");
  bench_cmd->add_option("family", bench.family, "random-modular | cnf | dfaint")
      ->required()
      ->check(CLI::IsMember({"random-modular", "cnf", "dfaint"}));
  bench_cmd->add_option("--sizes", bench.sizes,
                        "component count range LO:HI (default 2:4)");
  bench_cmd->add_option("--count", bench.count, "instances per size");
  bench_cmd->add_option("--states", bench.states,
                        "states per component where applicable");
  bench_cmd->add_option("--seed", bench.seed, "PRNG seed");
  bench_cmd->add_option("--max-states", bench.limits.max_states,
                        "search state budget");
  bench_cmd->add_option("--max-seconds", bench.limits.max_seconds,
                        "search time budget");

  std::vector<const char*> argv;
  argv.push_back("nonblock");
  for (const std::string& arg : args) argv.push_back(arg.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (app.got_subcommand(check_cmd)) return run_check(check, out, err);
    if (app.got_subcommand(generate_cmd)) {
      return run_generate(generate, out, err);
    }
    return run_bench(bench, out, err);
  } catch (const LimitError& e) {
    err << e.what() << "\n";
    return 3;
  } catch (const Error& e) {
    // what() already carries the "CodeName: " prefix.
    err << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace nonblock
