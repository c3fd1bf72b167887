#include "rulebench/evalkit.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "json.hpp"
#include "rulebench/rng.hpp"
#include "rulebench/text.hpp"

namespace rulebench {

namespace {

using nlohmann::json;

double round4(double value) { return std::round(value * 10000.0) / 10000.0; }

std::string format4(double value) {
  char buffer[32];
  std::snprintf(buffer, sizeof(buffer), "%.4f", value);
  return buffer;
}

json report_to_json(const EvalReport& report) {
  json rows = json::array();
  for (const ReportRow& row : report.rows) {
    rows.push_back(json{{"split", row.split},
                        {"correct", row.correct},
                        {"total", row.total},
                        {"accuracy", row.accuracy},
                        {"delta", row.delta}});
  }
  return json{{"predictor", report.predictor},
              {"manifest_hash", report.manifest_hash},
              {"rows", rows},
              {"notes", report.notes}};
}

EvalReport report_from_json(const json& j) {
  EvalReport report;
  report.predictor = j.at("predictor").get<std::string>();
  report.manifest_hash = j.at("manifest_hash").get<std::string>();
  for (const json& row : j.at("rows")) {
    report.rows.push_back(ReportRow{row.at("split").get<std::string>(),
                                    row.at("correct").get<int>(),
                                    row.at("total").get<int>(),
                                    row.at("accuracy").get<double>(),
                                    row.at("delta").get<double>()});
  }
  report.notes = j.at("notes").get<std::vector<std::string>>();
  return report;
}

}  // namespace

std::vector<std::string> scored_splits(const Dataset& dataset) {
  std::vector<std::string> splits;
  if (dataset.splits.count("base_test") != 0) splits.push_back("base");
  for (VariantKind kind : kAllVariantKinds) {
    if (kind == VariantKind::Base) continue;
    const std::string name = variant_name(kind);
    if (dataset.splits.count(name) != 0) splits.push_back(name);
  }
  return splits;
}

const std::vector<Record>& split_records(const Dataset& dataset,
                                         const std::string& split) {
  const std::string key = split == "base" ? "base_test" : split;
  auto it = dataset.splits.find(key);
  if (it == dataset.splits.end()) {
    throw ScoringError("dataset has no split '" + split + "'");
  }
  return it->second;
}

std::string prediction_id(const std::string& variant, int group_id,
                          int question_index) {
  return variant + "/" + std::to_string(group_id) + "/" +
         std::to_string(question_index);
}

std::pair<Theory, Question> record_theory(const Record& record) {
  std::vector<std::string> lines = record.facts;
  lines.insert(lines.end(), record.rules.begin(), record.rules.end());
  lines.push_back(record.question);
  ParsedInstance parsed = parse_instance_lines(lines);
  if (parsed.questions.size() != 1) {
    throw Error("record did not parse to exactly one question");
  }
  return {std::move(parsed.theory), parsed.questions.front()};
}

EvalReport score(const Dataset& dataset,
                 const std::vector<PredictionRecord>& predictions,
                 const std::string& predictor,
                 const std::vector<std::string>& unanswered) {
  const std::set<std::string> skipped(unanswered.begin(), unanswered.end());

  std::map<std::string, std::string> by_id;
  for (const PredictionRecord& prediction : predictions) {
    if (prediction.label != "T" && prediction.label != "F") {
      throw ScoringError("prediction label must be T or F, got '" +
                         prediction.label + "'");
    }
    const std::string id = prediction_id(
        prediction.variant, prediction.group_id, prediction.question_index);
    if (!by_id.emplace(id, prediction.label).second) {
      throw ScoringError("duplicate prediction for " + id);
    }
  }

  EvalReport report;
  report.predictor = predictor;
  report.manifest_hash = dataset.manifest_hash;

  std::set<std::string> known_ids;
  double base_accuracy = 0.0;
  for (const std::string& split : scored_splits(dataset)) {
    const std::vector<Record>& records = split_records(dataset, split);
    ReportRow row;
    row.split = split;
    row.total = static_cast<int>(records.size());
    for (const Record& record : records) {
      const std::string id = prediction_id(record.variant, record.group_id,
                                           record.question_index);
      known_ids.insert(id);
      if (skipped.count(id) != 0) continue;  // counted as incorrect
      auto it = by_id.find(id);
      if (it == by_id.end()) {
        throw ScoringError("missing prediction for " + id);
      }
      if (it->second == record.label) ++row.correct;
    }
    row.accuracy =
        row.total == 0 ? 0.0 : round4(static_cast<double>(row.correct) /
                                      static_cast<double>(row.total));
    if (split == "base") base_accuracy = row.accuracy;
    report.rows.push_back(row);
  }

  for (const auto& [id, label] : by_id) {
    if (known_ids.count(id) == 0) {
      throw ScoringError("prediction for unknown id " + id);
    }
  }

  for (ReportRow& row : report.rows) {
    row.delta = row.split == "base" ? 0.0
                                    : round4(row.accuracy - base_accuracy);
  }

  if (!skipped.empty()) {
    report.notes.push_back(std::to_string(skipped.size()) +
                           " unanswered records scored as incorrect");
  }
  return report;
}

std::vector<PredictionRecord> run_baseline(const Dataset& dataset,
                                           const std::string& baseline,
                                           std::uint64_t seed) {
  if (std::find(kBaselineNames.begin(), kBaselineNames.end(), baseline) ==
      kBaselineNames.end()) {
    throw ScoringError("unknown baseline '" + baseline + "'");
  }

  // The chain-template predictor memorizes the base chain: it answers every
  // variant question with the base group's gold label for that position.
  std::map<std::pair<int, int>, std::string> base_gold;
  if (baseline == "chain-template") {
    for (const char* split : {"base_train", "base_test"}) {
      auto it = dataset.splits.find(split);
      if (it == dataset.splits.end()) continue;
      for (const Record& record : it->second) {
        base_gold[{record.group_id, record.question_index}] = record.label;
      }
    }
  }

  SeededRng rng(seed);
  std::vector<PredictionRecord> predictions;
  for (const std::string& split : scored_splits(dataset)) {
    for (const Record& record : split_records(dataset, split)) {
      PredictionRecord prediction{record.group_id, record.variant,
                                  record.question_index, "F"};
      if (baseline == "oracle") {
        auto [theory, question] = record_theory(record);
        prediction.label = answer(theory, question) ? "T" : "F";
      } else if (baseline == "chain-template") {
        auto it = base_gold.find({record.group_id, record.question_index});
        if (it == base_gold.end()) {
          throw ScoringError("no base gold label for group " +
                             std::to_string(record.group_id));
        }
        prediction.label = it->second;
      } else if (baseline == "constant-true") {
        prediction.label = "T";
      } else if (baseline == "constant-false") {
        prediction.label = "F";
      } else {  // random
        prediction.label = rng.coin() ? "T" : "F";
      }
      predictions.push_back(std::move(prediction));
    }
  }
  return predictions;
}

std::string render_report(const EvalReport& report) {
  std::ostringstream out;
  out << "predictor: " << report.predictor << '\n';
  if (!report.manifest_hash.empty()) {
    out << "dataset:   " << report.manifest_hash << '\n';
  }
  out << '\n';
  out << "split                       acc      delta\n";
  for (const ReportRow& row : report.rows) {
    std::string name = row.split;
    name.resize(26, ' ');
    out << name << ' ' << format4(row.accuracy) << "   "
        << format4(row.delta) << '\n';
  }
  for (const std::string& note : report.notes) {
    out << "note: " << note << '\n';
  }
  return out.str();
}

void write_report(const EvalReport& report,
                  const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write " + path.string());
  out << report_to_json(report).dump(2) << '\n';
}

EvalReport read_report(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read " + path.string());
  json j;
  in >> j;
  return report_from_json(j);
}

void write_predictions(const std::vector<PredictionRecord>& predictions,
                       const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write " + path.string());
  for (const PredictionRecord& prediction : predictions) {
    out << json{{"group_id", prediction.group_id},
                {"variant", prediction.variant},
                {"question_index", prediction.question_index},
                {"label", prediction.label}}
               .dump()
        << '\n';
  }
}

std::vector<PredictionRecord> read_predictions(
    const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ScoringError("cannot read predictions " + path.string());
  std::vector<PredictionRecord> predictions;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const json j = json::parse(line);
    predictions.push_back(PredictionRecord{
        j.at("group_id").get<int>(), j.at("variant").get<std::string>(),
        j.at("question_index").get<int>(),
        j.at("label").get<std::string>()});
  }
  return predictions;
}

}  // namespace rulebench
