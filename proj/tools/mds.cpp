// Command-line front end: analyze / simulate / check / export / generate.
//
// Exit codes: 0 success, 1 parse or input error, 2 resource limit,
// 3 classifier/oracle mismatch.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "mds/classify.hpp"
#include "mds/dot.hpp"
#include "mds/dynamics.hpp"
#include "mds/parser.hpp"
#include "mds/report.hpp"
#include "mds/transform.hpp"

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::invalid_argument("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_output(const std::string& out_path, const std::string& content) {
  if (out_path.empty()) {
    std::cout << content;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw std::invalid_argument("cannot write '" + out_path + "'");
  out << content;
}

struct Options {
  std::string path;
  std::string format = "human";
  std::string out;
  std::string what;
  std::string require = "any";
  int max_n = 24;
  int threads = 1;
  bool timings = false;
  int n = 0;
  double density = 0.3;
  double zero_prob = 0.0;
  std::uint64_t seed = 0;
};

int run_report(const Options& opt, bool with_oracle) {
  const mds::MonomialSystem f = mds::parse_system(read_file(opt.path));
  const mds::AnalysisReport report =
      mds::analyze_system(f, with_oracle, opt.max_n, opt.threads);
  write_output(opt.out, opt.format == "structured"
                            ? mds::render_structured(report, opt.timings)
                            : mds::render_human(report));
  return 0;
}

int run_check(const Options& opt) {
  const mds::MonomialSystem f = mds::parse_system(read_file(opt.path));
  const bool classifier = mds::classify(f).is_fixed_point_system;
  const bool oracle = mds::is_fixed_point_system_bruteforce(f, opt.max_n);
  const int code = mds::check_exit_code(classifier, oracle);
  std::cout << "classifier: " << mds::verdict_text(classifier) << "\n"
            << "oracle:     " << mds::verdict_text(oracle) << "\n"
            << (code == 0 ? "verdicts agree\n" : "VERDICT MISMATCH\n");
  return code;
}

int run_export(const Options& opt) {
  const mds::MonomialSystem f = mds::parse_system(read_file(opt.path));
  std::string dot;
  if (opt.what == "depgraph") {
    dot = mds::dependency_graph_dot(mds::build_dependency_graph(f));
  } else {
    if (f.n > 12)
      throw mds::limit_error("dimension " + std::to_string(f.n) +
                             " exceeds the state-space export limit 12");
    dot = mds::state_space_dot(mds::enumerate_state_space(f, 12, opt.threads));
  }
  write_output(opt.out, dot);
  return 0;
}

int run_generate(const Options& opt) {
  constexpr int kMaxAttempts = 1000;
  for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
    const mds::MonomialSystem f =
        mds::random_system(opt.n, opt.density, opt.zero_prob, opt.seed + attempt);
    if (opt.require != "any") {
      const bool fps = mds::classify(f).is_fixed_point_system;
      if ((opt.require == "fps") != fps) continue;
    }
    write_output(opt.out, mds::format_system(f));
    return 0;
  }
  throw mds::limit_error("no system matching --require=" + opt.require + " found in " +
                         std::to_string(kMaxAttempts) + " attempts");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"analyzer for Boolean monomial dynamical systems"};
  app.require_subcommand(1);
  Options opt;

  auto add_format = [&](CLI::App* cmd) {
    cmd->add_option("--format", opt.format, "output format")
        ->check(CLI::IsMember({"human", "structured"}));
    cmd->add_flag("--timings", opt.timings, "include timings in structured output");
    cmd->add_option("--out", opt.out, "output file (default stdout)");
  };

  CLI::App* analyze = app.add_subcommand(
      "analyze", "decide the fixed-point property from the dependency graph");
  analyze->add_option("path", opt.path, "system file")->required();
  add_format(analyze);

  CLI::App* simulate = app.add_subcommand(
      "simulate", "analyze plus an exhaustive state-space census");
  simulate->add_option("path", opt.path, "system file")->required();
  simulate->add_option("--max-n", opt.max_n, "brute-force dimension cap");
  simulate->add_option("--threads", opt.threads, "state enumeration workers");
  add_format(simulate);

  CLI::App* check = app.add_subcommand(
      "check", "cross-validate the classifier against the brute-force census");
  check->add_option("path", opt.path, "system file")->required();
  check->add_option("--max-n", opt.max_n, "brute-force dimension cap");

  CLI::App* exp = app.add_subcommand("export", "write a Graphviz rendering");
  exp->add_option("path", opt.path, "system file")->required();
  exp->add_option("--what", opt.what, "depgraph or statespace")
      ->required()
      ->check(CLI::IsMember({"depgraph", "statespace"}));
  exp->add_option("--out", opt.out, "output file")->required();
  exp->add_option("--threads", opt.threads, "state enumeration workers");

  CLI::App* gen = app.add_subcommand("generate", "emit a random system");
  gen->add_option("--n", opt.n, "dimension")->required();
  gen->add_option("--density", opt.density, "per-variable support probability");
  gen->add_option("--zero-prob", opt.zero_prob, "per-component zero probability");
  gen->add_option("--seed", opt.seed, "random seed");
  gen->add_option("--require", opt.require, "rejection-sample for a verdict")
      ->check(CLI::IsMember({"fps", "non-fps", "any"}));
  gen->add_option("--out", opt.out, "output file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (app.got_subcommand(analyze)) return run_report(opt, false);
    if (app.got_subcommand(simulate)) return run_report(opt, true);
    if (app.got_subcommand(check)) return run_check(opt);
    if (app.got_subcommand(exp)) return run_export(opt);
    if (app.got_subcommand(gen)) return run_generate(opt);
  } catch (const mds::parse_error& e) {
    std::cerr << "error: line " << e.span().line << ", column " << e.span().column
              << ": " << e.what() << "\n";
    return 1;
  } catch (const mds::limit_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
