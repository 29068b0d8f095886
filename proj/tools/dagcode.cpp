// dagcode: command-line front end for the DAG <-> set-sequence bijection.
//
// Exit status: 0 success, 1 malformed input, 2 semantic violation (cycle or
// prefix-union bound), 3 selftest mismatch.

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "dagcode/codec.hpp"
#include "dagcode/counting.hpp"
#include "dagcode/formats.hpp"
#include "dagcode/prufer.hpp"
#include "dagcode/selftest.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kMalformed = 1;
constexpr int kViolation = 2;
constexpr int kMismatch = 3;

constexpr std::size_t kMaxCount = 1000;

struct Options {
  bool quiet = false;
  std::string input = "-";
  std::size_t count_n = 0;
  std::size_t selftest_n = 0;
};

std::string read_input(const std::string& path) {
  if (path == "-") {
    return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

int fail(int code, const std::string& message) {
  std::cerr << "dagcode: " << message << '\n';
  return code;
}

int cmd_encode(const Options& opt) {
  const auto input = dagcode::parse_dag_input(read_input(opt.input));
  try {
    const auto g = dagcode::LabeledDag::make(input.n, input.edges);
    std::cout << dagcode::to_seq_file(dagcode::encode(g));
  } catch (const dagcode::CyclicGraph& e) {
    return fail(kViolation, e.what());
  }
  return kOk;
}

int cmd_decode(const Options& opt) {
  const auto s = dagcode::parse_seq_file(read_input(opt.input));
  if (const auto k = dagcode::first_violation(s)) {
    return fail(kViolation, "invalid sequence at k=" + std::to_string(*k));
  }
  std::cout << dagcode::to_dag_file(dagcode::decode(s));
  return kOk;
}

int cmd_validate(const Options& opt) {
  const auto s = dagcode::parse_seq_file(read_input(opt.input));
  if (const auto k = dagcode::first_violation(s)) {
    if (!opt.quiet) std::cout << "invalid at k=" << *k << '\n';
    return kViolation;
  }
  if (!opt.quiet) std::cout << "valid\n";
  return kOk;
}

int cmd_count(const Options& opt) {
  std::cout << dagcode::robinson_count(opt.count_n) << '\n';
  return kOk;
}

int cmd_selftest(const Options& opt) {
  const auto report = dagcode::run_selftest(opt.selftest_n);
  if (opt.quiet) {
    std::cout << (report.passed() ? "PASS" : "FAIL") << '\n';
  } else {
    std::cout << dagcode::format_report(report);
  }
  return report.passed() ? kOk : kMismatch;
}

int cmd_bridge(const Options& opt) {
  const auto t = dagcode::parse_tree_file(read_input(opt.input));
  const auto oriented = dagcode::orient_tree(t);
  const auto predicted = dagcode::bridge_sequence(t);
  const bool match = dagcode::encode(oriented) == predicted;
  if (!opt.quiet) {
    std::cout << "# oriented DAG\n" << dagcode::to_dag_file(oriented);
    std::cout << "# bridge sequence\n" << dagcode::to_seq_file(predicted);
  }
  std::cout << (match ? "MATCH" : "MISMATCH") << '\n';
  return match ? kOk : kMismatch;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Encode labeled DAGs as set sequences and back"};
  app.require_subcommand(1);

  Options opt;
  app.add_flag("-q,--quiet", opt.quiet, "Print only the essential result");

  auto add_file_command = [&](const std::string& name, const std::string& help) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("file", opt.input, "Input file, or - for standard input")->capture_default_str();
    return sub;
  };

  auto* encode = add_file_command("encode", "DAG file -> sequence file");
  auto* decode = add_file_command("decode", "Sequence file -> DAG file");
  auto* validate = add_file_command("validate", "Check the prefix-union bound of a sequence file");
  auto* bridge = add_file_command("bridge", "Orient a tree by Prufer removal order and compare encodings");

  auto* count = app.add_subcommand("count", "Number of DAGs on n labeled vertices");
  count->add_option("n", opt.count_n, "Vertex count")->required()->check(CLI::Range(std::size_t{0}, kMaxCount));

  auto* selftest = app.add_subcommand("selftest", "Run the exhaustive oracles up to n_max");
  selftest->add_option("n_max", opt.selftest_n, "Largest vertex count")
      ->required()
      ->check(CLI::Range(std::size_t{1}, dagcode::kMaxEnumeration));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kOk : kMalformed;
  }

  try {
    if (encode->parsed()) return cmd_encode(opt);
    if (decode->parsed()) return cmd_decode(opt);
    if (validate->parsed()) return cmd_validate(opt);
    if (count->parsed()) return cmd_count(opt);
    if (selftest->parsed()) return cmd_selftest(opt);
    if (bridge->parsed()) return cmd_bridge(opt);
  } catch (const std::exception& e) {
    return fail(kMalformed, e.what());
  }
  return kMalformed;
}
