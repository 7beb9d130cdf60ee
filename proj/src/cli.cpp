#include "m0n/cli.hpp"

#include <algorithm>
#include <atomic>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "m0n/error.hpp"
#include "m0n/expression.hpp"
#include "m0n/forest.hpp"
#include "m0n/oracle.hpp"
#include "m0n/serialize.hpp"

namespace m0n::cli {

namespace {

enum class Evaluator { Forest, Oracle };

struct Options {
  std::string expression;
  std::string file;
  bool plain = false;
  bool trace = false;
  bool oracle = false;
  bool batch = false;
};

struct Outcome {
  Json report;
  int exit_code = kExitOk;
  std::string value;
  std::string diagnostic;
  std::vector<Json> stages;
};

Json error_json(const Error& e) {
  Json out;
  out["code"] = std::string(to_string(e.code()));
  out["message"] = e.message();
  out["position"] = e.position() ? Json(*e.position()) : Json(nullptr);
  return out;
}

std::string diagnostic(const std::string& input, const Error& e) {
  std::string out = std::string("error: ") + e.what();
  if (e.position()) {
    out += " at position " + std::to_string(*e.position()) + "\n  " + input + "\n  " +
           std::string(*e.position(), ' ') + "^";
  }
  return out;
}

Integer oracle_value(const Monomial& m, Classification c, const TraceSink& sink) {
  if (c == Classification::DegreeMismatch || c == Classification::ZeroByKeel) return 0;
  return oracle::oracle_eval(monomial_to_tree(m), sink);
}

Outcome evaluate(const std::string& input, Evaluator evaluator, const Options& options) {
  Outcome out;
  try {
    const Monomial m = parse_monomial(input);
    const Classification c = classify(m);
    TraceSink sink;
    if (options.trace) sink = [&out](const TraceEvent& e) { out.stages.push_back(to_json(e)); };

    const Integer value =
        evaluator == Evaluator::Forest ? eval(m, sink) : oracle_value(m, c, sink);
    out.value = value.str();
    out.report["input"] = render_monomial(m);
    out.report["classification"] = std::string(to_string(c));
    out.report["value"] = out.value;
    out.report["sign"] = value > 0 ? Json(1) : value < 0 ? Json(-1) : Json(nullptr);
    if (options.oracle && evaluator == Evaluator::Forest) {
      const Integer checked = oracle_value(m, c, {});
      out.report["oracle"] = checked.str();
      if (checked != value) {
        out.exit_code = kExitOracleDisagreement;
        out.diagnostic = "error: oracle value " + checked.str() + " disagrees with " + out.value;
      }
    }
    if (options.trace) out.report["stages"] = out.stages;
  } catch (const Error& e) {
    out.exit_code = kExitInputError;
    out.report = Json();
    out.report["input"] = input;
    out.report["error"] = error_json(e);
    out.diagnostic = diagnostic(input, e);
  }
  return out;
}

std::vector<std::string> read_lines(std::istream& in) {
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    lines.push_back(line);
  }
  return lines;
}

int run_batch(const std::vector<std::string>& lines, Evaluator evaluator,
              const Options& options, std::ostream& out, std::ostream& err) {
  std::vector<Outcome> outcomes(lines.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < lines.size(); i = next++) {
      outcomes[i] = evaluate(lines[i], evaluator, options);
    }
  };
  const std::size_t threads =
      std::clamp<std::size_t>(std::thread::hardware_concurrency(), 1, std::max<std::size_t>(lines.size(), 1));
  std::vector<std::jthread> pool;
  for (std::size_t t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  pool.clear();

  int code = kExitOk;
  for (const auto& o : outcomes) {
    out << o.report.dump() << '\n';
    if (!o.diagnostic.empty()) err << o.diagnostic << '\n';
    code = std::max(code, o.exit_code);
  }
  return code;
}

int run_evaluate(Evaluator evaluator, const Options& options, std::istream& in,
                 std::ostream& out, std::ostream& err) {
  if (options.batch) return run_batch(read_lines(in), evaluator, options, out, err);
  if (!options.file.empty()) {
    std::ifstream file(options.file);
    if (!file) {
      err << "error: cannot open " << options.file << '\n';
      return kExitInputError;
    }
    return run_batch(read_lines(file), evaluator, options, out, err);
  }
  if (options.expression.empty()) {
    err << "error: no expression given (pass one, --stdin or --file)\n";
    return kExitInputError;
  }

  const Outcome o = evaluate(options.expression, evaluator, options);
  if (o.exit_code == kExitInputError) {
    err << o.diagnostic << '\n';
    return o.exit_code;
  }
  if (options.plain) {
    for (const auto& stage : o.stages) err << stage.dump() << '\n';
    out << o.value << '\n';
  } else {
    out << o.report.dump() << '\n';
  }
  if (!o.diagnostic.empty()) err << o.diagnostic << '\n';
  return o.exit_code;
}

int run_tree(const std::string& expression, const std::string& format, std::ostream& out,
             std::ostream& err) {
  try {
    const LoadedTree tree = monomial_to_tree(parse_monomial(expression));
    if (format == "dot") {
      out << to_dot(tree);
    } else {
      out << to_json(tree).dump(2) << '\n';
    }
    return kExitOk;
  } catch (const Error& e) {
    err << diagnostic(expression, e) << '\n';
    return kExitInputError;
  }
}

int run_random(int n, int count, std::uint64_t seed, std::ostream& out, std::ostream& err) {
  if (n < 3) {
    err << "error: n must be at least 3\n";
    return kExitInputError;
  }
  std::mt19937_64 seeds(seed);
  for (int i = 0; i < count; ++i) {
    out << render_monomial(tree_to_monomial(random_proper_tree(n, seeds()))) << '\n';
  }
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Integrals of boundary-divisor monomials on the moduli space of stable "
               "n-pointed genus-zero curves"};
  app.require_subcommand(1);

  Options eval_options;
  auto* eval_cmd = app.add_subcommand("eval", "Evaluate a monomial with the forest algorithm");
  eval_cmd->add_option("expression", eval_options.expression, "e.g. \"n=5; d(1,2|3,4,5)^2\"");
  eval_cmd->add_option("-f,--file", eval_options.file, "Read one expression per line");
  eval_cmd->add_flag("--stdin", eval_options.batch, "Read one expression per line from stdin");
  eval_cmd->add_flag("--plain", eval_options.plain, "Print only the integer value");
  eval_cmd->add_flag("--trace", eval_options.trace, "Include per-stage trace records");
  eval_cmd->add_flag("--oracle", eval_options.oracle, "Cross-check with the cut recursion");

  Options oracle_options;
  auto* oracle_cmd = app.add_subcommand("oracle", "Evaluate a monomial by cut recursion only");
  oracle_cmd->add_option("expression", oracle_options.expression);
  oracle_cmd->add_option("-f,--file", oracle_options.file);
  oracle_cmd->add_flag("--stdin", oracle_options.batch);
  oracle_cmd->add_flag("--plain", oracle_options.plain);
  oracle_cmd->add_flag("--trace", oracle_options.trace);

  std::string tree_expression;
  std::string format = "json";
  auto* tree_cmd = app.add_subcommand("tree", "Print the loaded tree of a tree monomial");
  tree_cmd->add_option("expression", tree_expression)->required();
  tree_cmd->add_option("--format", format)->check(CLI::IsMember({"dot", "json"}));

  int random_n = 0;
  int count = 1;
  std::uint64_t seed = 0;
  auto* random_cmd = app.add_subcommand("random", "Print random proper tree monomials");
  random_cmd->add_option("n", random_n, "Number of labels")->required();
  random_cmd->add_option("--count", count)->check(CLI::NonNegativeNumber);
  random_cmd->add_option("--seed", seed);

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInputError;
  }

  if (eval_cmd->parsed()) return run_evaluate(Evaluator::Forest, eval_options, in, out, err);
  if (oracle_cmd->parsed()) return run_evaluate(Evaluator::Oracle, oracle_options, in, out, err);
  if (tree_cmd->parsed()) return run_tree(tree_expression, format, out, err);
  return run_random(random_n, count, seed, out, err);
}

}  // namespace m0n::cli
