#include "rulebench/dataset.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"
#include "rulebench/rng.hpp"
#include "rulebench/text.hpp"

namespace rulebench {

namespace {

using nlohmann::json;

const std::vector<std::string> kAttributePool = {
    "green",   "blue",    "red",     "yellow",  "purple",  "orange",
    "pink",    "brown",   "gray",    "white",   "black",   "cold",
    "hot",     "warm",    "cool",    "rough",   "smooth",  "soft",
    "hard",    "young",   "old",     "nice",    "kind",    "quiet",
    "loud",    "big",     "small",   "tall",    "short",   "round",
    "flat",    "sharp",   "dull",    "bright",  "dark",    "light",
    "heavy",   "fast",    "slow",    "strong",  "weak",    "happy",
    "sad",     "calm",    "angry",   "brave",   "shy",     "proud",
    "humble",  "gentle",  "fierce",  "tidy",    "messy",   "clean",
    "dirty",   "fresh",   "stale",   "sweet",   "sour",    "bitter",
    "salty",   "dry",     "wet",     "damp",    "dusty",   "shiny",
    "rusty",   "fuzzy",   "furry",   "sleek",   "plain",   "fancy",
    "rich",    "poor",    "wise",    "silly",   "funny",   "serious",
    "eager",   "lazy",    "busy",    "idle",    "early",   "late",
    "near",    "far",     "high",    "low",     "wide",    "narrow",
    "thick",   "thin",    "full",    "empty",   "open",    "closed",
    "new",     "ancient", "modern",  "simple",  "complex", "tough",
    "tender",  "crisp",   "mellow",  "vivid",   "pale",    "deep",
    "shallow", "steep",   "level",   "curly",   "straight", "wavy",
    "bumpy",   "silky",   "sturdy",  "fragile", "solid",   "hollow",
};

const std::vector<std::string> kEntityPool = {
    "Anne", "Bob",   "Carol", "Dave",  "Erin",  "Frank", "Gina",  "Harry",
    "Ivy",  "Jack",  "Kate",  "Liam",  "Mona",  "Nina",  "Oscar", "Paula",
    "Quinn", "Rosa", "Sam",   "Tina",  "Uma",   "Vera",  "Wendy", "Zoe",
};

constexpr const char* kReusePolicy =
    "seeded shuffle of the full pool, consumed in 6-word blocks; the pool is "
    "reshuffled and reused once all blocks are consumed";

void fisher_yates(std::vector<std::string>& items, SeededRng& rng) {
  for (std::size_t i = items.size(); i > 1; --i) {
    std::swap(items[i - 1], items[rng.uniform_below(i)]);
  }
}

template <typename T, std::size_t N>
void fisher_yates(std::array<T, N>& items, SeededRng& rng) {
  for (std::size_t i = N; i > 1; --i) {
    std::swap(items[i - 1], items[rng.uniform_below(i)]);
  }
}

std::string file_name_for(const std::string& split) {
  return split + ".jsonl";
}

json record_to_json(const Record& record) {
  return json{{"group_id", record.group_id},
              {"split", record.split},
              {"variant", record.variant},
              {"facts", record.facts},
              {"rules", record.rules},
              {"laws_applied", record.laws_applied},
              {"question", record.question},
              {"question_index", record.question_index},
              {"label", record.label},
              {"description", record.description}};
}

Record record_from_json(const json& j) {
  Record record;
  record.group_id = j.at("group_id").get<int>();
  record.split = j.at("split").get<std::string>();
  record.variant = j.at("variant").get<std::string>();
  record.facts = j.at("facts").get<std::vector<std::string>>();
  record.rules = j.at("rules").get<std::vector<std::string>>();
  record.laws_applied =
      j.at("laws_applied").get<std::vector<std::vector<std::string>>>();
  record.question = j.at("question").get<std::string>();
  record.question_index = j.at("question_index").get<int>();
  record.label = j.at("label").get<std::string>();
  record.description = j.at("description").get<std::string>();
  return record;
}

std::vector<Question> recompute_questions(const Theory& theory,
                                          const std::vector<Question>& base) {
  std::vector<Question> out;
  out.reserve(base.size());
  for (const Question& question : base) {
    Question copy = question;
    copy.gold = answer(theory, copy);
    out.push_back(copy);
  }
  return out;
}

// Applies one law (or the implication + De Morgan composite) to every rule
// where it applies; untouched rules keep an empty law list.
void rewrite_all_rules(VariantInstance& instance,
                       const std::vector<Law>& laws) {
  for (std::size_t i = 0; i < instance.theory.rules.size(); ++i) {
    Rule& rule = instance.theory.rules[i];
    RewriteTrace trace;
    for (Law law : laws) {
      if (!applicable(law, rule)) continue;
      auto [rewritten, step] = apply_law(rule, law);
      rule = std::move(rewritten);
      trace.push_back(std::move(step));
    }
    for (const RewriteStep& step : trace) {
      instance.laws_applied[i].push_back(law_name(step.law));
    }
    instance.rule_traces[i] = std::move(trace);
  }
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

}  // namespace

std::string variant_name(VariantKind kind) {
  switch (kind) {
    case VariantKind::Base:
      return "base";
    case VariantKind::Variant1:
      return "variant1";
    case VariantKind::Variant2:
      return "variant2";
    case VariantKind::Variant3:
      return "variant3";
    case VariantKind::V4Contrapositive:
      return "variant4-contrapositive";
    case VariantKind::V4DoubleNegation:
      return "variant4-double-negation";
    case VariantKind::V4Implication:
      return "variant4-implication";
    case VariantKind::V4DeMorgan:
      return "variant4-de-morgan";
    case VariantKind::V4Identity:
      return "variant4-identity";
    case VariantKind::V4Commutativity:
      return "variant4-commutativity";
    case VariantKind::V4Multi:
      return "variant4-multi";
  }
  return "?";
}

std::optional<VariantKind> variant_from_name(std::string_view name) {
  for (VariantKind kind : kAllVariantKinds) {
    if (variant_name(kind) == name) return kind;
  }
  return std::nullopt;
}

Group sample_base_group(const GroupSpec& spec) {
  for (std::size_t i = 0; i < spec.attributes.size(); ++i) {
    const std::string& name = spec.attributes[i].name;
    if (name.empty() || is_reserved_word(name)) {
      throw VocabularyError("invalid attribute '" + name + "'");
    }
    for (std::size_t j = i + 1; j < spec.attributes.size(); ++j) {
      if (spec.attributes[i] == spec.attributes[j]) {
        throw VocabularyError("duplicate attribute '" + name + "'");
      }
    }
  }

  const Attribute& a0a = spec.attributes[0];
  const Attribute& a0b = spec.attributes[1];
  const Attribute& a1 = spec.attributes[2];
  const Attribute& a2 = spec.attributes[3];
  const Attribute& a3 = spec.attributes[4];
  const Attribute& a4 = spec.attributes[5];

  Group group;
  group.spec = spec;
  group.theory.entity = spec.entity;
  group.theory.vocabulary.assign(spec.attributes.begin(),
                                 spec.attributes.end());
  group.theory.facts.push_back(
      Fact{Formula::disjunction(Formula::atom(a0a, spec.entity),
                                Formula::atom(a0b, spec.entity))});

  auto chain_rule = [](std::string id, const Attribute& from,
                       const Attribute& to) {
    return Rule{std::move(id), Formula::implication(Formula::atom(from),
                                                    Formula::atom(to))};
  };
  group.theory.rules.push_back(chain_rule("rule1", a0a, a1));
  group.theory.rules.push_back(chain_rule("rule2", a0b, a1));
  group.theory.rules.push_back(chain_rule("rule3", a1, a2));
  group.theory.rules.push_back(chain_rule("rule4", a2, a3));
  group.theory.rules.push_back(chain_rule("rule5", a3, a1));  // back-edge
  group.theory.rules.push_back(chain_rule("rule6", a3, a4));

  for (const Attribute& asked : {a1, a2, a3, a4}) {
    Question question{spec.entity, asked, false};
    question.gold = answer(group.theory, question);
    group.questions.push_back(std::move(question));
  }
  return group;
}

VariantInstance make_variant(const Group& group, VariantKind kind,
                             std::uint64_t seed) {
  VariantInstance instance;
  instance.name = variant_name(kind);
  instance.theory = group.theory;

  switch (kind) {
    case VariantKind::Base:
      instance.description =
          "base example: one dilemma fact feeding a four-step rule chain";
      break;
    case VariantKind::Variant1:
      instance.theory = without_rule(instance.theory, "rule5");
      instance.description =
          "removed the redundant back-edge rule rule5; conclusions unchanged";
      break;
    case VariantKind::Variant2:
      instance.theory = without_rule(instance.theory, "rule3");
      instance.description =
          "removed the essential chain rule rule3; downstream conclusions "
          "are no longer derivable";
      break;
    case VariantKind::Variant3: {
      const Attribute& a1 = group.spec.attributes[2];
      const Attribute& a4 = group.spec.attributes[5];
      instance.theory.facts.push_back(Fact{Formula::disjunction(
          Formula::negation(Formula::atom(a1, group.spec.entity)),
          Formula::negation(Formula::atom(a4, group.spec.entity)))});
      instance.description =
          "added a contradictory fact; the theory is inconsistent and every "
          "conclusion is withheld";
      break;
    }
    default:
      break;
  }

  instance.laws_applied.assign(instance.theory.rules.size(), {});
  instance.rule_traces.assign(instance.theory.rules.size(), {});

  switch (kind) {
    case VariantKind::V4Contrapositive:
      rewrite_all_rules(instance, {Law::Contraposition});
      instance.description =
          "rewrote every applicable rule with the contraposition law";
      break;
    case VariantKind::V4DoubleNegation:
      rewrite_all_rules(instance, {Law::DoubleNegation});
      instance.description =
          "rewrote every applicable rule with the double-negation law";
      break;
    case VariantKind::V4Implication:
      rewrite_all_rules(instance, {Law::Implication});
      instance.description =
          "rewrote every applicable rule as a disjunction via the "
          "implication law";
      break;
    case VariantKind::V4DeMorgan:
      rewrite_all_rules(instance, {Law::Implication, Law::DeMorgan});
      instance.description =
          "rewrote every applicable rule with implication-to-disjunction "
          "followed by De Morgan packing; negated conjunctions read 'It is "
          "not the case that ...'";
      break;
    case VariantKind::V4Identity:
      rewrite_all_rules(instance, {Law::Identity});
      instance.description =
          "rewrote every applicable rule with the identity law (idempotent "
          "antecedent duplication)";
      break;
    case VariantKind::V4Commutativity: {
      rewrite_all_rules(instance, {Law::Commutativity});
      bool commuted = false;
      for (Fact& fact : instance.theory.facts) {
        if (fact.body.kind() == Formula::Kind::Or) {
          fact = commute_fact(fact);
          commuted = true;
        }
      }
      instance.description =
          "applied the commutativity law to every applicable rule";
      if (commuted) {
        instance.description += " and swapped the disjuncts of the fact";
      }
      break;
    }
    case VariantKind::V4Multi: {
      for (std::size_t i = 0; i < instance.theory.rules.size(); ++i) {
        SeededRng rule_rng(mix_seed(seed, i));
        const int k = 2 + static_cast<int>(rule_rng.uniform_below(4));
        StackResult stacked =
            stack_laws(instance.theory.rules[i], k, rule_rng.next());
        instance.theory.rules[i] = std::move(stacked.rule);
        for (const RewriteStep& step : stacked.trace) {
          instance.laws_applied[i].push_back(law_name(step.law));
        }
        instance.rule_traces[i] = std::move(stacked.trace);
      }
      instance.description =
          "rewrote each rule with an independently seeded stack of 2-5 "
          "equivalence laws";
      break;
    }
    default:
      break;
  }

  instance.questions = recompute_questions(instance.theory, group.questions);
  return instance;
}

VariantInstance appendix_merge_variant(const Group& group) {
  const GroupSpec& spec = group.spec;
  VariantInstance instance;
  instance.name = "variation2-appendix";
  instance.theory.entity = spec.entity;
  instance.theory.vocabulary = group.theory.vocabulary;
  instance.theory.facts = group.theory.facts;

  const Attribute& a0a = spec.attributes[0];
  const Attribute& a0b = spec.attributes[1];
  const Attribute& a1 = spec.attributes[2];
  const Attribute& a2 = spec.attributes[3];
  const Attribute& a3 = spec.attributes[4];

  instance.theory.rules.push_back(
      Rule{"ruleA",
           Formula::implication(Formula::disjunction(Formula::atom(a0a),
                                                     Formula::atom(a0b)),
                                Formula::atom(a1))});
  instance.theory.rules.push_back(
      Rule{"rule3", Formula::implication(Formula::atom(a1),
                                         Formula::atom(a2))});
  instance.theory.rules.push_back(
      Rule{"rule4", Formula::implication(Formula::atom(a2),
                                         Formula::atom(a3))});

  instance.laws_applied.assign(instance.theory.rules.size(), {});
  instance.rule_traces.assign(instance.theory.rules.size(), {});
  instance.description =
      "merged the dilemma rules into one disjunctive-antecedent rule and "
      "dropped the tail rules; the final conclusion is no longer derivable";
  instance.questions = recompute_questions(instance.theory, group.questions);
  return instance;
}

GroupSpec draw_group_spec(int group_id, std::uint64_t dataset_seed) {
  const auto& pool = attribute_pool();
  const std::size_t block = 6;
  const std::size_t per_cycle = pool.size() / block;
  const std::size_t cycle = static_cast<std::size_t>(group_id) / per_cycle;
  const std::size_t offset =
      (static_cast<std::size_t>(group_id) % per_cycle) * block;

  std::vector<std::string> shuffled = pool;
  SeededRng cycle_rng(mix_seed(dataset_seed, 1000 + cycle));
  fisher_yates(shuffled, cycle_rng);

  GroupSpec spec;
  spec.group_id = group_id;
  spec.seed = dataset_seed ^ static_cast<std::uint64_t>(group_id);
  for (std::size_t i = 0; i < block; ++i) {
    spec.attributes[i] = Attribute{shuffled[offset + i]};
  }

  SeededRng group_rng(spec.seed);
  spec.entity =
      Entity{entity_pool()[group_rng.uniform_below(entity_pool().size())]};
  fisher_yates(spec.attributes, group_rng);
  return spec;
}

std::vector<Record> make_records(const Group& group,
                                 const VariantInstance& instance,
                                 const std::string& split) {
  std::vector<Record> records;
  Record prototype;
  prototype.group_id = group.spec.group_id;
  prototype.split = split;
  prototype.variant = instance.name;
  for (const Fact& fact : instance.theory.facts) {
    prototype.facts.push_back(render_fact(fact));
  }
  for (const Rule& rule : instance.theory.rules) {
    prototype.rules.push_back(render_rule(rule));
  }
  prototype.laws_applied = instance.laws_applied;
  prototype.description = instance.description;

  for (std::size_t i = 0; i < instance.questions.size(); ++i) {
    Record record = prototype;
    record.question = render_question(instance.questions[i]);
    record.question_index = static_cast<int>(i);
    record.label = instance.questions[i].gold ? "T" : "F";
    records.push_back(std::move(record));
  }
  return records;
}

DatasetManifest generate_dataset(int n_groups, int n_train,
                                 std::uint64_t seed,
                                 const std::filesystem::path& out_dir) {
  if (n_groups < 1 || n_train < 0 || n_train >= n_groups) {
    throw Error("train split must satisfy 0 <= train < groups");
  }
  std::filesystem::create_directories(out_dir);

  DatasetManifest manifest;
  manifest.seed = seed;
  manifest.total_groups = n_groups;
  manifest.vocabulary_pool_size = static_cast<int>(attribute_pool().size());
  manifest.vocabulary_reuse_policy = kReusePolicy;

  std::map<std::string, std::vector<Record>> files;
  files["base_train"];
  files["base_test"];
  for (VariantKind kind : kAllVariantKinds) {
    if (kind != VariantKind::Base) files[variant_name(kind)];
  }

  for (int g = 0; g < n_groups; ++g) {
    const GroupSpec spec = draw_group_spec(g, seed);
    const Group group = sample_base_group(spec);
    const bool is_train = g < n_train;
    (is_train ? manifest.train_groups : manifest.test_groups).push_back(g);
    const std::string split = is_train ? "train" : "test";

    for (std::size_t k = 0; k < kAllVariantKinds.size(); ++k) {
      const VariantKind kind = kAllVariantKinds[k];
      const VariantInstance instance =
          make_variant(group, kind, mix_seed(spec.seed, k));
      std::vector<Record> records = make_records(group, instance, split);
      std::string file_key = kind == VariantKind::Base
                                 ? (is_train ? "base_train" : "base_test")
                                 : variant_name(kind);
      auto& bucket = files[file_key];
      for (Record& record : records) bucket.push_back(std::move(record));
    }
  }

  for (const auto& [split, records] : files) {
    std::string payload;
    for (const Record& record : records) {
      payload += record_to_json(record).dump();
      payload += '\n';
    }
    const std::filesystem::path path = out_dir / file_name_for(split);
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot write " + path.string());
    out << payload;
    out.close();
    manifest.question_counts[split] = static_cast<int>(records.size());
    manifest.file_hashes[split] = fnv1a64_hex(payload);
  }

  json mj{{"seed", manifest.seed},
          {"total_groups", manifest.total_groups},
          {"train_groups", manifest.train_groups},
          {"test_groups", manifest.test_groups},
          {"question_counts", manifest.question_counts},
          {"file_hashes", manifest.file_hashes},
          {"vocabulary_pool_size", manifest.vocabulary_pool_size},
          {"vocabulary_reuse_policy", manifest.vocabulary_reuse_policy}};
  std::ofstream out(out_dir / "manifest.json", std::ios::binary);
  if (!out) throw Error("cannot write manifest.json");
  out << mj.dump(2) << '\n';
  return manifest;
}

Dataset load_dataset(const std::filesystem::path& dir) {
  Dataset dataset;
  const std::string manifest_bytes = read_file(dir / "manifest.json");
  dataset.manifest_hash = fnv1a64_hex(manifest_bytes);

  const json mj = json::parse(manifest_bytes);
  DatasetManifest& manifest = dataset.manifest;
  manifest.seed = mj.at("seed").get<std::uint64_t>();
  manifest.total_groups = mj.at("total_groups").get<int>();
  manifest.train_groups = mj.at("train_groups").get<std::vector<int>>();
  manifest.test_groups = mj.at("test_groups").get<std::vector<int>>();
  manifest.question_counts =
      mj.at("question_counts").get<std::map<std::string, int>>();
  manifest.file_hashes =
      mj.at("file_hashes").get<std::map<std::string, std::string>>();
  manifest.vocabulary_pool_size = mj.at("vocabulary_pool_size").get<int>();
  manifest.vocabulary_reuse_policy =
      mj.at("vocabulary_reuse_policy").get<std::string>();

  for (const auto& [split, count] : manifest.question_counts) {
    const std::string payload = read_file(dir / file_name_for(split));
    std::vector<Record>& records = dataset.splits[split];
    std::istringstream lines(payload);
    std::string line;
    while (std::getline(lines, line)) {
      if (line.empty()) continue;
      records.push_back(record_from_json(json::parse(line)));
    }
    if (static_cast<int>(records.size()) != count) {
      throw Error("split " + split + " has " +
                  std::to_string(records.size()) + " records, manifest says " +
                  std::to_string(count));
    }
  }
  return dataset;
}

const std::vector<std::string>& attribute_pool() { return kAttributePool; }

const std::vector<std::string>& entity_pool() { return kEntityPool; }

std::uint64_t fnv1a64(std::string_view bytes) {
  std::uint64_t hash = 0xcbf29ce484222325ULL;
  for (unsigned char byte : bytes) {
    hash ^= byte;
    hash *= 0x100000001b3ULL;
  }
  return hash;
}

std::string fnv1a64_hex(std::string_view bytes) {
  static const char* digits = "0123456789abcdef";
  std::uint64_t hash = fnv1a64(bytes);
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[static_cast<std::size_t>(i)] = digits[hash & 0xf];
    hash >>= 4;
  }
  return out;
}

}  // namespace rulebench
