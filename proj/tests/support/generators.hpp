#pragma once

// Test-only helpers: independent oracles and random generators. The oracles
// here deliberately re-derive semantics from scratch (different data
// structures, different traversal) so they stay independent of the library
// code they check.

#include <map>
#include <string>
#include <vector>

#include "rulebench/dataset.hpp"
#include "rulebench/rng.hpp"
#include "rulebench/theory.hpp"

namespace testsupport {

using namespace rulebench;

// Naive recursive interpreter over a plain name->bool map.
inline bool naive_eval(const Formula& f,
                       const std::map<std::string, bool>& env) {
  using K = Formula::Kind;
  if (f.kind() == K::Atom) return env.at(f.attribute().name);
  if (f.kind() == K::Not) return !naive_eval(f.operand(), env);
  if (f.kind() == K::And) {
    return naive_eval(f.left(), env) && naive_eval(f.right(), env);
  }
  if (f.kind() == K::Or) {
    return naive_eval(f.left(), env) || naive_eval(f.right(), env);
  }
  if (f.kind() == K::Implies) {
    return !naive_eval(f.left(), env) || naive_eval(f.right(), env);
  }
  return f.kind() == K::True;
}

// Truth-table comparison done entirely with the naive interpreter.
inline bool naive_equivalent(const Formula& a, const Formula& b,
                             const std::vector<std::string>& atom_names) {
  const std::size_t rows = std::size_t{1} << atom_names.size();
  for (std::size_t row = 0; row < rows; ++row) {
    std::map<std::string, bool> env;
    for (std::size_t i = 0; i < atom_names.size(); ++i) {
      env[atom_names[i]] = ((row >> i) & 1u) != 0;
    }
    if (naive_eval(a, env) != naive_eval(b, env)) return false;
  }
  return true;
}

inline Formula random_formula(SeededRng& rng,
                              const std::vector<Attribute>& atoms,
                              int depth) {
  if (depth <= 0 || rng.uniform_below(4) == 0) {
    const std::size_t roll = rng.uniform_below(atoms.size() + 1);
    if (roll == atoms.size()) {
      return rng.coin() ? Formula::truth() : Formula::falsity();
    }
    return Formula::atom(atoms[roll]);
  }
  switch (rng.uniform_below(4)) {
    case 0:
      return Formula::negation(random_formula(rng, atoms, depth - 1));
    case 1:
      return Formula::conjunction(random_formula(rng, atoms, depth - 1),
                                  random_formula(rng, atoms, depth - 1));
    case 2:
      return Formula::disjunction(random_formula(rng, atoms, depth - 1),
                                  random_formula(rng, atoms, depth - 1));
    default:
      return Formula::implication(random_formula(rng, atoms, depth - 1),
                                  random_formula(rng, atoms, depth - 1));
  }
}

inline std::vector<Attribute> small_vocabulary(std::size_t n = 6) {
  const std::vector<std::string> names = {"green", "blue",  "cold",
                                          "rough", "young", "nice"};
  std::vector<Attribute> out;
  for (std::size_t i = 0; i < n && i < names.size(); ++i) {
    out.push_back(Attribute{names[i]});
  }
  return out;
}

// Random implication-form theory in the family the chaining engine decides
// completely: rule antecedents are positive atoms (single, conjunction or
// disjunction of up to three), consequents and fact literals have either
// polarity, facts hold one or two literals.
inline Theory random_implication_theory(SeededRng& rng) {
  Theory theory;
  theory.entity = Entity{"Anne"};
  theory.vocabulary = small_vocabulary();
  const auto& vocab = theory.vocabulary;

  auto random_ground_literal = [&]() {
    Formula atom =
        Formula::atom(vocab[rng.uniform_below(vocab.size())], theory.entity);
    return rng.coin() ? atom : Formula::negation(atom);
  };

  const std::size_t n_facts = 1 + rng.uniform_below(3);
  for (std::size_t i = 0; i < n_facts; ++i) {
    Formula body = random_ground_literal();
    if (rng.coin()) {
      body = Formula::disjunction(body, random_ground_literal());
    }
    theory.facts.push_back(Fact{body});
  }

  const std::size_t n_rules = 2 + rng.uniform_below(5);
  for (std::size_t i = 0; i < n_rules; ++i) {
    const std::size_t arity = 1 + rng.uniform_below(3);
    Formula antecedent =
        Formula::atom(vocab[rng.uniform_below(vocab.size())]);
    const bool conjunctive = rng.coin();
    for (std::size_t j = 1; j < arity; ++j) {
      Formula next = Formula::atom(vocab[rng.uniform_below(vocab.size())]);
      antecedent = conjunctive
                       ? Formula::conjunction(antecedent, next)
                       : Formula::disjunction(antecedent, next);
    }
    Formula consequent =
        Formula::atom(vocab[rng.uniform_below(vocab.size())]);
    if (rng.uniform_below(4) == 0) {
      consequent = Formula::negation(consequent);
    }
    theory.rules.push_back(
        Rule{"rule" + std::to_string(i + 1),
             Formula::implication(antecedent, consequent)});
  }
  return theory;
}

// Vocabulary and entity of the worked example used throughout the tests:
// Anne, dilemma pair green/blue, chain cold -> rough -> young -> nice.
inline GroupSpec appendix_spec() {
  GroupSpec spec;
  spec.group_id = 0;
  spec.entity = Entity{"Anne"};
  spec.attributes = {Attribute{"green"}, Attribute{"blue"},
                     Attribute{"cold"}, Attribute{"rough"},
                     Attribute{"young"}, Attribute{"nice"}};
  spec.seed = 42;
  return spec;
}

inline std::vector<bool> gold_labels(const std::vector<Question>& questions) {
  std::vector<bool> out;
  for (const Question& question : questions) out.push_back(question.gold);
  return out;
}

}  // namespace testsupport
