#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "rulebench/inference.hpp"
#include "rulebench/rewrite.hpp"
#include "rulebench/theory.hpp"

namespace rulebench {

// The eleven standard variant kinds, in report row order.
enum class VariantKind {
  Base,
  Variant1,           // redundant back-edge rule removed
  Variant2,           // essential chain rule removed
  Variant3,           // contradictory fact added
  V4Contrapositive,
  V4DoubleNegation,
  V4Implication,
  V4DeMorgan,
  V4Identity,
  V4Commutativity,
  V4Multi,
};

inline constexpr std::array<VariantKind, 11> kAllVariantKinds = {
    VariantKind::Base,           VariantKind::Variant1,
    VariantKind::Variant2,       VariantKind::Variant3,
    VariantKind::V4Contrapositive, VariantKind::V4DoubleNegation,
    VariantKind::V4Implication,  VariantKind::V4DeMorgan,
    VariantKind::V4Identity,     VariantKind::V4Commutativity,
    VariantKind::V4Multi,
};

std::string variant_name(VariantKind kind);
std::optional<VariantKind> variant_from_name(std::string_view name);

// Vocabulary roles: attributes[0..1] form the dilemma pair, attributes[2..5]
// are the chain attributes queried by the four questions.
struct GroupSpec {
  int group_id = 0;
  Entity entity;
  std::array<Attribute, 6> attributes;
  std::uint64_t seed = 0;
};

struct Group {
  GroupSpec spec;
  Theory theory;
  std::vector<Question> questions;
};

struct VariantInstance {
  std::string name;
  Theory theory;
  std::vector<std::vector<std::string>> laws_applied;  // aligned with rules
  std::vector<RewriteTrace> rule_traces;               // aligned with rules
  std::vector<Question> questions;
  std::string description;
};

/// Builds the dilemma-plus-chain base example for the spec's vocabulary.
Group sample_base_group(const GroupSpec& spec);

/// Derives one variant; gold labels are recomputed from the variant theory.
VariantInstance make_variant(const Group& group, VariantKind kind,
                             std::uint64_t seed);

/// The rule-merge variation with the tail rules dropped: the dilemma pair is
/// replaced by one disjunctive-antecedent rule, yielding labels T,T,T,F.
/// Not part of the standard eleven kinds.
VariantInstance appendix_merge_variant(const Group& group);

struct Record {
  int group_id = 0;
  std::string split;    // "train" | "test"
  std::string variant;  // VariantKind name
  std::vector<std::string> facts;
  std::vector<std::string> rules;
  std::vector<std::vector<std::string>> laws_applied;
  std::string question;
  int question_index = 0;
  std::string label;  // "T" | "F"
  std::string description;
};

struct DatasetManifest {
  std::uint64_t seed = 0;
  int total_groups = 0;
  std::vector<int> train_groups;
  std::vector<int> test_groups;
  std::map<std::string, int> question_counts;        // per split file
  std::map<std::string, std::string> file_hashes;    // per split file
  int vocabulary_pool_size = 0;
  std::string vocabulary_reuse_policy;
};

struct Dataset {
  DatasetManifest manifest;
  std::map<std::string, std::vector<Record>> splits;
  std::string manifest_hash;
};

/// Vocabulary assignment for one group; pool consumption is a function of
/// the dataset seed and group id alone, so generation order does not matter.
GroupSpec draw_group_spec(int group_id, std::uint64_t dataset_seed);

/// Writes base_train/base_test plus one file per variant kind (JSONL) and a
/// manifest with counts and content hashes.
DatasetManifest generate_dataset(int n_groups, int n_train,
                                 std::uint64_t seed,
                                 const std::filesystem::path& out_dir);

Dataset load_dataset(const std::filesystem::path& dir);

std::vector<Record> make_records(const Group& group,
                                 const VariantInstance& instance,
                                 const std::string& split);

const std::vector<std::string>& attribute_pool();
const std::vector<std::string>& entity_pool();

std::uint64_t fnv1a64(std::string_view bytes);
std::string fnv1a64_hex(std::string_view bytes);

}  // namespace rulebench
