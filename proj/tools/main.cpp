#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "rulebench/dataset.hpp"
#include "rulebench/evalkit.hpp"
#include "rulebench/remote.hpp"
#include "rulebench/rewrite.hpp"
#include "rulebench/text.hpp"

namespace {

// Exit codes: 0 ok, 2 I/O, 3 invalid config, 4 parse error,
// 5 law not applicable, 6 scoring error.
constexpr int kOk = 0;
constexpr int kIoError = 2;
constexpr int kConfigError = 3;
constexpr int kParseError = 4;
constexpr int kNotApplicable = 5;
constexpr int kScoringError = 6;

using namespace rulebench;

std::string default_out_dir() {
  if (const char* env = std::getenv("RULEBENCH_OUT_DIR")) return env;
  return "dataset";
}

int cmd_generate(int groups, int train, std::uint64_t seed,
                 const std::string& out, int verbosity) {
  if (verbosity >= 1) {
    std::cout << "config: groups=" << groups << " train=" << train
              << " seed=" << seed << " out=" << out << '\n';
  }
  if (train < 0 || train >= groups || groups < 1) {
    std::cerr << "error: train split must satisfy 0 <= train < groups\n";
    return kConfigError;
  }
  try {
    const DatasetManifest manifest =
        generate_dataset(groups, train, seed, out);
    int total = 0;
    for (const auto& [split, count] : manifest.question_counts) {
      total += count;
    }
    std::cout << "wrote " << total << " question records to " << out << '\n';
    for (const auto& [split, count] : manifest.question_counts) {
      std::cout << "  " << split << ": " << count << " questions\n";
    }
    return kOk;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kIoError;
  }
}

int cmd_solve(const std::string& input, int verbosity) {
  if (verbosity >= 1) std::cout << "config: input=" << input << '\n';
  std::ifstream in(input);
  if (!in) {
    std::cerr << "error: cannot read " << input << '\n';
    return kIoError;
  }
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) lines.push_back(line);

  try {
    const ParsedInstance instance = parse_instance_lines(lines);
    const Theory& theory = instance.theory;
    std::cout << "facts: " << theory.facts.size()
              << "  rules: " << theory.rules.size()
              << "  questions: " << instance.questions.size() << '\n';

    const bool consistent = is_consistent(theory);
    if (!consistent) {
      std::cout << "[inconsistent theory: conclusions withheld, every "
                   "answer is F]\n";
    }
    int index = 0;
    for (const Question& question : instance.questions) {
      const EntailmentStatus status = entails(theory, question.attribute);
      const char* status_name =
          status == EntailmentStatus::Entailed      ? "entailed"
          : status == EntailmentStatus::NotEntailed ? "not entailed"
                                                    : "inconsistent";
      std::cout << "Q" << ++index << ": " << render_question(question)
                << "  -> " << (answer(theory, question) ? 'T' : 'F') << "  ("
                << status_name << ")\n";
    }

    try {
      const ChainResult chain = forward_chain(theory);
      int branch_index = 0;
      for (const BranchTrace& branch : chain.branches) {
        std::cout << "branch " << ++branch_index << " [assumes";
        for (const auto& [attr, positive] : branch.assumed) {
          std::cout << ' ' << (positive ? "" : "not ") << attr.name;
        }
        std::cout << "]" << (branch.closed ? " closed" : "") << '\n';
        for (const ChainStep& step : branch.steps) {
          std::cout << "  " << step.rule_id << " derives "
                    << (step.positive ? "" : "not ") << step.attribute.name
                    << '\n';
        }
      }
    } catch (const UnsupportedRuleFormError&) {
      std::cout << "(no chaining trace: rules are not in implication form)\n";
    }
    return kOk;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kParseError;
  }
}

int cmd_transform(const std::string& law_text, const std::string& rule_text,
                  int verbosity) {
  if (verbosity >= 1) {
    std::cout << "config: law=" << law_text << " rule=\"" << rule_text
              << "\"\n";
  }
  const auto law = law_from_name(law_text);
  if (!law) {
    std::cerr << "error: unknown law '" << law_text << "'\n";
    return kConfigError;
  }
  try {
    Rule rule = parse_rule(rule_text);
    rule.id = "rule1";
    const auto [rewritten, step] = apply_law(rule, *law);
    std::cout << render_rule(rewritten) << '\n';
    std::cout << "equivalence-verified: "
              << (equivalent(rule.body, rewritten.body) ? "true" : "false")
              << '\n';
    std::cout << "trace: " << law_name(step.law) << " at "
              << (step.site.empty() ? "root" : step.site) << ", "
              << step.before.to_string() << " => " << step.after.to_string()
              << '\n';
    return kOk;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kParseError;
  } catch (const NotApplicableError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kNotApplicable;
  }
}

int cmd_evaluate(const std::string& dataset_dir, const std::string& baseline,
                 std::uint64_t baseline_seed,
                 const std::string& predictions_path,
                 const std::string& endpoint_url, int timeout_ms,
                 bool permissive, const std::string& report_out,
                 int verbosity) {
  if (verbosity >= 1) {
    std::cout << "config: dataset=" << dataset_dir
              << " baseline=" << baseline
              << " predictions=" << predictions_path
              << " endpoint=" << endpoint_url
              << " permissive=" << (permissive ? "true" : "false") << '\n';
  }
  try {
    const Dataset dataset = load_dataset(dataset_dir);
    std::vector<PredictionRecord> predictions;
    std::vector<std::string> unanswered;
    std::string predictor;

    if (!baseline.empty()) {
      predictor = "baseline:" + baseline;
      predictions = run_baseline(dataset, baseline, baseline_seed);
    } else if (!predictions_path.empty()) {
      predictor = "file:" + predictions_path;
      predictions = read_predictions(predictions_path);
    } else {
      predictor = "endpoint:" + endpoint_url;
      const RemoteResult fetched = fetch_remote_predictions(
          dataset, parse_endpoint_url(endpoint_url, timeout_ms));
      predictions = fetched.predictions;
      if (!fetched.failures.empty()) {
        std::cerr << fetched.failures.size() << " records failed:\n";
        for (const RemoteFailure& failure : fetched.failures) {
          std::cerr << "  " << failure.id << ": " << failure.reason << '\n';
        }
        if (!permissive) {
          std::cerr << "error: remote run incomplete (use --permissive to "
                       "score failures as incorrect)\n";
          return kScoringError;
        }
        for (const RemoteFailure& failure : fetched.failures) {
          unanswered.push_back(failure.id);
        }
      }
    }

    const EvalReport report =
        score(dataset, predictions, predictor, unanswered);
    std::cout << render_report(report);
    const std::string out = report_out.empty()
                                ? (dataset_dir + "/report.json")
                                : report_out;
    write_report(report, out);
    if (verbosity >= 1) std::cout << "report written to " << out << '\n';
    return kOk;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kScoringError;
  }
}

int cmd_report(const std::string& input) {
  try {
    std::cout << render_report(read_report(input));
    return kOk;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kIoError;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "rulebench: generate, solve, transform and evaluate rule-chain "
      "reasoning benchmarks"};
  app.require_subcommand(1);
  int verbosity = 0;
  app.add_flag("-v,--verbose", verbosity, "echo effective configuration");

  auto* generate = app.add_subcommand(
      "generate", "generate a dataset with all eleven variant splits");
  int groups = 100;
  int train = 80;
  std::uint64_t seed = 0;
  std::string out_dir = default_out_dir();
  generate->add_option("--groups", groups, "number of base groups");
  generate->add_option("--train", train, "number of training groups");
  generate->add_option("--seed", seed, "dataset seed")->required();
  generate->add_option("--out", out_dir, "output directory");

  auto* solve = app.add_subcommand(
      "solve", "print oracle answers and derivation traces for an instance");
  std::string input;
  solve->add_option("input", input, "instance file, one sentence per line")
      ->required();

  auto* transform =
      app.add_subcommand("transform", "apply one equivalence law to a rule");
  std::string law_text;
  std::string rule_text;
  transform->add_option("--law", law_text, "law name")->required();
  transform->add_option("rule", rule_text, "rule sentence")->required();

  auto* evaluate = app.add_subcommand(
      "evaluate", "score predictions or a baseline against a dataset");
  std::string dataset_dir;
  std::string baseline;
  std::uint64_t baseline_seed = 0;
  std::string predictions_path;
  std::string endpoint_url;
  int timeout_ms = 5000;
  bool permissive = false;
  std::string report_out;
  evaluate->add_option("--dataset", dataset_dir, "dataset directory")
      ->required();
  auto* baseline_opt =
      evaluate->add_option("--baseline", baseline, "baseline predictor name");
  auto* predictions_opt = evaluate->add_option(
      "--predictions", predictions_path, "prediction JSONL file");
  auto* endpoint_opt = evaluate->add_option(
      "--endpoint", endpoint_url, "remote model endpoint (http://...)");
  baseline_opt->excludes(predictions_opt)->excludes(endpoint_opt);
  predictions_opt->excludes(endpoint_opt);
  evaluate->add_option("--baseline-seed", baseline_seed,
                       "seed for the random baseline");
  evaluate->add_option("--timeout-ms", timeout_ms,
                       "per-request timeout for remote endpoints");
  evaluate->add_flag("--permissive", permissive,
                     "score failed remote records as incorrect");
  evaluate->add_option("--report-out", report_out, "report file path");

  auto* report = app.add_subcommand("report", "re-render a stored report");
  std::string report_input;
  report->add_option("input", report_input, "report JSON file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kConfigError;
  }

  if (generate->parsed()) {
    return cmd_generate(groups, train, seed, out_dir, verbosity);
  }
  if (solve->parsed()) return cmd_solve(input, verbosity);
  if (transform->parsed()) {
    return cmd_transform(law_text, rule_text, verbosity);
  }
  if (evaluate->parsed()) {
    if (baseline.empty() && predictions_path.empty() &&
        endpoint_url.empty()) {
      std::cerr << "error: one of --baseline, --predictions or --endpoint "
                   "is required\n";
      return kConfigError;
    }
    return cmd_evaluate(dataset_dir, baseline, baseline_seed,
                        predictions_path, endpoint_url, timeout_ms,
                        permissive, report_out, verbosity);
  }
  if (report->parsed()) return cmd_report(report_input);
  return kConfigError;
}
