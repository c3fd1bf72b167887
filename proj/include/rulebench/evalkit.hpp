#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <utility>
#include <vector>

#include "rulebench/dataset.hpp"

namespace rulebench {

struct PredictionRecord {
  int group_id = 0;
  std::string variant;
  int question_index = 0;
  std::string label;  // "T" | "F"
};

struct ReportRow {
  std::string split;
  int correct = 0;
  int total = 0;
  double accuracy = 0.0;  // rounded to 4 decimals
  double delta = 0.0;     // accuracy - base accuracy
};

struct EvalReport {
  std::string predictor;
  std::string manifest_hash;
  std::vector<ReportRow> rows;
  std::vector<std::string> notes;
};

inline const std::vector<std::string> kBaselineNames = {
    "oracle", "chain-template", "constant-true", "constant-false", "random"};

/// Report row order: "base" (test records), then each variant kind present.
std::vector<std::string> scored_splits(const Dataset& dataset);

/// Records behind a scored split name; "base" maps to the base_test file.
const std::vector<Record>& split_records(const Dataset& dataset,
                                         const std::string& split);

/// Stable record key "<variant>/<group_id>/<question_index>".
std::string prediction_id(const std::string& variant, int group_id,
                          int question_index);

/// Rebuilds theory and question from a record's rendered text.
std::pair<Theory, Question> record_theory(const Record& record);

/// Scores predictions against every scored record. Records whose id appears
/// in `unanswered` are counted as incorrect instead of missing (permissive
/// remote mode). Throws ScoringError on missing, duplicate or unknown ids.
EvalReport score(const Dataset& dataset,
                 const std::vector<PredictionRecord>& predictions,
                 const std::string& predictor,
                 const std::vector<std::string>& unanswered = {});

std::vector<PredictionRecord> run_baseline(const Dataset& dataset,
                                           const std::string& baseline,
                                           std::uint64_t seed = 0);

std::string render_report(const EvalReport& report);
void write_report(const EvalReport& report,
                  const std::filesystem::path& path);
EvalReport read_report(const std::filesystem::path& path);

void write_predictions(const std::vector<PredictionRecord>& predictions,
                       const std::filesystem::path& path);
std::vector<PredictionRecord> read_predictions(
    const std::filesystem::path& path);

}  // namespace rulebench
