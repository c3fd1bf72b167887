#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <set>

#include "doctest.h"
#include "rulebench/dataset.hpp"
#include "rulebench/inference.hpp"
#include "rulebench/rewrite.hpp"
#include "support/generators.hpp"

using namespace rulebench;
using testsupport::appendix_spec;
using testsupport::random_implication_theory;

namespace {

Theory appendix_base() { return sample_base_group(appendix_spec()).theory; }

Theory appendix_variation3() {
  Theory theory = appendix_base();
  theory.facts.push_back(Fact{Formula::disjunction(
      Formula::negation(Formula::atom(Attribute{"cold"}, theory.entity)),
      Formula::negation(Formula::atom(Attribute{"nice"}, theory.entity)))});
  return theory;
}

Question ask(const Theory& theory, const char* attribute) {
  return Question{theory.entity, Attribute{attribute}, false};
}

std::set<std::string> entailed_by_enumeration(const Theory& theory) {
  std::set<std::string> out;
  for (const Attribute& attr : theory.vocabulary) {
    if (entails(theory, attr) == EntailmentStatus::Entailed) {
      out.insert(attr.name);
    }
  }
  return out;
}

std::set<std::string> entailed_by_chaining(const ChainResult& chain) {
  std::set<std::string> out;
  for (const Attribute& attr : chain.entailed) out.insert(attr.name);
  return out;
}

}  // namespace

TEST_CASE("consistency of the worked example and its contradiction") {
  CHECK(is_consistent(appendix_base()));
  CHECK_FALSE(is_consistent(appendix_variation3()));

  Theory empty;
  empty.entity = Entity{"Anne"};
  CHECK(is_consistent(empty));
}

TEST_CASE("atom budget is enforced") {
  Theory wide;
  wide.entity = Entity{"Anne"};
  for (int i = 0; i < 17; ++i) {
    wide.vocabulary.push_back(Attribute{"a" + std::to_string(i)});
  }
  CHECK_THROWS_AS(is_consistent(wide), AtomBudgetError);
}

TEST_CASE("entailment over the dilemma chain") {
  const Theory base = appendix_base();
  CHECK(entails(base, Attribute{"cold"}) == EntailmentStatus::Entailed);
  CHECK(entails(base, Attribute{"nice"}) == EntailmentStatus::Entailed);
  CHECK(entails(base, Attribute{"green"}) == EntailmentStatus::NotEntailed);

  // Without the cold->rough link a model keeps rough false.
  const Theory reduced = without_rule(base, "rule3");
  CHECK(entails(reduced, Attribute{"rough"}) ==
        EntailmentStatus::NotEntailed);
  CHECK(entails(reduced, Attribute{"cold"}) == EntailmentStatus::Entailed);

  const Theory contradictory = appendix_variation3();
  for (const Attribute& attr : contradictory.vocabulary) {
    CHECK(entails(contradictory, attr) == EntailmentStatus::Inconsistent);
  }
}

TEST_CASE("answer applies closed-world and conservative semantics") {
  const Theory base = appendix_base();
  CHECK(answer(base, ask(base, "nice")));

  // The merge variation drops the nice-rule, flipping Q4 to F.
  const Group group = sample_base_group(appendix_spec());
  const VariantInstance merged = appendix_merge_variant(group);
  CHECK_FALSE(answer(merged.theory, ask(merged.theory, "nice")));
  CHECK(answer(merged.theory, ask(merged.theory, "young")));

  const Theory contradictory = appendix_variation3();
  CHECK_FALSE(answer(contradictory, ask(contradictory, "cold")));

  CHECK_THROWS_AS(
      answer(base, ask(base, "cold"), AnswerPolicy::PriorityBased), Error);
  CHECK_THROWS_AS(
      answer(base, ask(base, "cold"), AnswerPolicy::Paraconsistent), Error);
}

TEST_CASE("forward_chain runs the dilemma case split") {
  const Theory base = appendix_base();
  const ChainResult chain = forward_chain(base);

  CHECK_FALSE(chain.inconsistent);
  REQUIRE(chain.branches.size() == 2);
  CHECK(entailed_by_chaining(chain) ==
        std::set<std::string>{"cold", "rough", "young", "nice"});

  // Branch order follows disjunct order: green first, then blue.
  CHECK(chain.branches[0].assumed.front().first.name == "green");
  CHECK(chain.branches[1].assumed.front().first.name == "blue");

  // Every step's antecedent must be satisfied by literals already known in
  // its branch; re-derive the bookkeeping from scratch here.
  for (const BranchTrace& branch : chain.branches) {
    std::set<std::pair<std::string, bool>> known;
    for (const auto& [attr, positive] : branch.assumed) {
      known.insert({attr.name, positive});
    }
    for (const ChainStep& step : branch.steps) {
      const auto rule = std::find_if(
          base.rules.begin(), base.rules.end(),
          [&](const Rule& r) { return r.id == step.rule_id; });
      REQUIRE(rule != base.rules.end());
      const Formula antecedent = rule->body.left();
      REQUIRE(antecedent.kind() == Formula::Kind::Atom);
      CHECK(known.count({antecedent.attribute().name, true}) == 1);
      known.insert({step.attribute.name, step.positive});
    }
  }
}

TEST_CASE("forward_chain single-step and contradiction cases") {
  Theory tiny;
  tiny.entity = Entity{"Anne"};
  tiny.vocabulary = {Attribute{"green"}, Attribute{"cold"}};
  tiny.facts.push_back(Fact{Formula::atom(Attribute{"green"}, tiny.entity)});
  tiny.rules.push_back(
      Rule{"rule1", Formula::implication(Formula::atom(Attribute{"green"}),
                                         Formula::atom(Attribute{"cold"}))});
  const ChainResult chain = forward_chain(tiny);
  CHECK_FALSE(chain.inconsistent);
  REQUIRE(chain.branches.size() == 1);
  CHECK(chain.branches[0].steps.size() == 1);
  // The fact atom is entailed too, matching model enumeration.
  CHECK(entailed_by_chaining(chain) ==
        std::set<std::string>{"green", "cold"});

  const ChainResult closed = forward_chain(appendix_variation3());
  CHECK(closed.inconsistent);
  for (const BranchTrace& branch : closed.branches) CHECK(branch.closed);
}

TEST_CASE("forward_chain keeps surviving branches only") {
  // green-or-blue plus not-blue: the blue branch closes immediately and the
  // surviving branch alone decides entailment.
  Theory theory;
  theory.entity = Entity{"Anne"};
  theory.vocabulary = {Attribute{"green"}, Attribute{"blue"}};
  theory.facts.push_back(
      Fact{Formula::disjunction(Formula::atom(Attribute{"green"},
                                              theory.entity),
                                Formula::atom(Attribute{"blue"},
                                              theory.entity))});
  theory.facts.push_back(Fact{
      Formula::negation(Formula::atom(Attribute{"blue"}, theory.entity))});

  const ChainResult chain = forward_chain(theory);
  CHECK_FALSE(chain.inconsistent);
  CHECK(entailed_by_chaining(chain) == std::set<std::string>{"green"});
  CHECK(chain.branches[1].closed);
  CHECK(entails(theory, Attribute{"green"}) == EntailmentStatus::Entailed);
}

TEST_CASE("forward_chain rejects rewritten rule forms") {
  Theory theory = appendix_base();
  theory.rules[0] = apply_law(theory.rules[0], Law::Implication).first;
  CHECK_THROWS_AS(forward_chain(theory), UnsupportedRuleFormError);
}

TEST_CASE("essential_rules partitions the worked example") {
  const Group group = sample_base_group(appendix_spec());
  const RulePartition partition =
      essential_rules(group.theory, group.questions);
  CHECK(partition.redundant == std::vector<std::string>{"rule5"});
  CHECK(partition.essential ==
        std::vector<std::string>{"rule1", "rule2", "rule3", "rule4",
                                 "rule6"});
}

TEST_CASE("a single feeding rule is essential") {
  Theory tiny;
  tiny.entity = Entity{"Anne"};
  tiny.vocabulary = {Attribute{"green"}, Attribute{"cold"}};
  tiny.facts.push_back(Fact{Formula::atom(Attribute{"green"}, tiny.entity)});
  tiny.rules.push_back(
      Rule{"rule1", Formula::implication(Formula::atom(Attribute{"green"}),
                                         Formula::atom(Attribute{"cold"}))});
  const RulePartition partition =
      essential_rules(tiny, {ask(tiny, "cold")});
  CHECK(partition.essential == std::vector<std::string>{"rule1"});
  CHECK(partition.redundant.empty());
}

TEST_CASE("chaining agrees with model enumeration on random theories") {
  SeededRng rng(555);
  for (int i = 0; i < 2000; ++i) {
    const Theory theory = random_implication_theory(rng);
    const ChainResult chain = forward_chain(theory);
    const bool consistent = is_consistent(theory);
    REQUIRE(chain.inconsistent == !consistent);
    if (consistent) {
      REQUIRE(entailed_by_chaining(chain) ==
              entailed_by_enumeration(theory));
    }
  }
}

TEST_CASE("adding a rule never shrinks the entailed set") {
  SeededRng rng(808);
  const auto vocab = testsupport::small_vocabulary();
  for (int i = 0; i < 500; ++i) {
    Theory theory = random_implication_theory(rng);
    if (!is_consistent(theory)) continue;
    const auto before = entailed_by_enumeration(theory);

    Formula antecedent = Formula::atom(vocab[rng.uniform_below(6)]);
    Formula consequent = Formula::atom(vocab[rng.uniform_below(6)]);
    theory.rules.push_back(
        Rule{"extra", Formula::implication(antecedent, consequent)});
    if (!is_consistent(theory)) continue;
    const auto after = entailed_by_enumeration(theory);
    CHECK(std::includes(after.begin(), after.end(), before.begin(),
                        before.end()));
  }
}

TEST_CASE("entailment is invariant under equivalent rule replacement") {
  SeededRng rng(31337);
  for (int i = 0; i < 200; ++i) {
    const Theory theory = random_implication_theory(rng);
    Theory rewritten = theory;
    for (std::size_t r = 0; r < rewritten.rules.size(); ++r) {
      rewritten.rules[r] =
          stack_laws(rewritten.rules[r], 2 + static_cast<int>(r % 4),
                     rng.next())
              .rule;
      REQUIRE(equivalent(theory.rules[r].body, rewritten.rules[r].body));
    }
    for (const Attribute& attr : theory.vocabulary) {
      REQUIRE(entails(theory, attr) == entails(rewritten, attr));
    }
  }
}
