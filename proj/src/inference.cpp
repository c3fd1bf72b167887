#include "rulebench/inference.hpp"

#include <algorithm>
#include <functional>
#include <optional>

namespace rulebench {

namespace {

// Calls fn for every assignment over the vocabulary; stops early when fn
// returns false.
void for_each_assignment(const std::vector<Attribute>& vocabulary,
                         const std::function<bool(const Assignment&)>& fn) {
  if (vocabulary.size() > 16) throw AtomBudgetError(vocabulary.size());
  const std::size_t rows = std::size_t{1} << vocabulary.size();
  for (std::size_t row = 0; row < rows; ++row) {
    Assignment assignment;
    for (std::size_t i = 0; i < vocabulary.size(); ++i) {
      assignment.set(vocabulary[i], ((row >> i) & 1u) != 0);
    }
    if (!fn(assignment)) return;
  }
}

bool satisfies(const Theory& theory, const Assignment& assignment) {
  for (const Fact& fact : theory.facts) {
    if (!evaluate(fact.body, assignment)) return false;
  }
  for (const Rule& rule : theory.rules) {
    // Truth only depends on attributes, so the schematic body evaluates
    // exactly like its grounding.
    if (!evaluate(rule.body, assignment)) return false;
  }
  return true;
}

struct Literal {
  Attribute attribute;
  bool positive = true;
};

Literal to_literal(const Formula& formula, const std::string& context) {
  int negations = 0;
  Formula held = formula;
  while (held.kind() == Formula::Kind::Not) {
    held = held.operand();
    ++negations;
  }
  if (held.kind() != Formula::Kind::Atom || negations > 1) {
    throw UnsupportedRuleFormError("expected a plain literal in " + context +
                                   ", got " + formula.to_string());
  }
  return Literal{held.attribute(), negations == 0};
}

enum class JunctionType { Single, Conjunction, Disjunction };

struct CompiledRule {
  std::string id;
  JunctionType antecedent_type = JunctionType::Single;
  std::vector<Literal> antecedent;
  Literal consequent;
};

void flatten_junction(const Formula& formula, Formula::Kind op,
                      std::vector<Formula>& out) {
  if (formula.kind() == op) {
    flatten_junction(formula.left(), op, out);
    flatten_junction(formula.right(), op, out);
  } else {
    out.push_back(formula);
  }
}

CompiledRule compile_rule(const Rule& rule) {
  if (rule.body.kind() != Formula::Kind::Implies) {
    throw UnsupportedRuleFormError(
        "rule " + rule.id + " is not in implication form: " +
        rule.body.to_string());
  }
  CompiledRule compiled;
  compiled.id = rule.id;
  const Formula antecedent = rule.body.left();
  std::vector<Formula> parts;
  if (antecedent.kind() == Formula::Kind::And) {
    compiled.antecedent_type = JunctionType::Conjunction;
    flatten_junction(antecedent, Formula::Kind::And, parts);
  } else if (antecedent.kind() == Formula::Kind::Or) {
    compiled.antecedent_type = JunctionType::Disjunction;
    flatten_junction(antecedent, Formula::Kind::Or, parts);
  } else {
    compiled.antecedent_type = JunctionType::Single;
    parts.push_back(antecedent);
  }
  for (const Formula& part : parts) {
    compiled.antecedent.push_back(
        to_literal(part, "antecedent of rule " + rule.id));
  }
  compiled.consequent =
      to_literal(rule.body.right(), "consequent of rule " + rule.id);
  return compiled;
}

std::vector<Literal> fact_disjuncts(const Fact& fact) {
  std::vector<Literal> out;
  if (fact.body.kind() == Formula::Kind::Or) {
    std::vector<Formula> parts;
    flatten_junction(fact.body, Formula::Kind::Or, parts);
    for (const Formula& part : parts) out.push_back(to_literal(part, "fact"));
  } else {
    out.push_back(to_literal(fact.body, "fact"));
  }
  return out;
}

// Known-literal store for one branch; detects conflicting polarities.
class LiteralSet {
 public:
  // Returns false if the opposite polarity is already known.
  bool add(const Literal& literal) {
    for (const auto& [attr, positive] : known_) {
      if (attr == literal.attribute) return positive == literal.positive;
    }
    known_.emplace_back(literal.attribute, literal.positive);
    return true;
  }

  bool holds(const Literal& literal) const {
    for (const auto& [attr, positive] : known_) {
      if (attr == literal.attribute) return positive == literal.positive;
    }
    return false;
  }

  bool mentions(const Attribute& attribute, bool positive) const {
    return holds(Literal{attribute, positive});
  }

 private:
  std::vector<std::pair<Attribute, bool>> known_;
};

}  // namespace

bool is_consistent(const Theory& theory) {
  bool found = false;
  for_each_assignment(theory.vocabulary, [&](const Assignment& assignment) {
    if (satisfies(theory, assignment)) {
      found = true;
      return false;
    }
    return true;
  });
  return found;
}

EntailmentStatus entails(const Theory& theory, const Attribute& attribute) {
  bool any_model = false;
  bool always_true = true;
  for_each_assignment(theory.vocabulary, [&](const Assignment& assignment) {
    if (!satisfies(theory, assignment)) return true;
    any_model = true;
    if (!assignment.value_of(attribute)) {
      always_true = false;
      return false;
    }
    return true;
  });
  if (!any_model) return EntailmentStatus::Inconsistent;
  return always_true ? EntailmentStatus::Entailed
                     : EntailmentStatus::NotEntailed;
}

bool answer(const Theory& theory, const Question& question,
            AnswerPolicy policy) {
  if (policy != AnswerPolicy::Conservative) {
    throw Error("answer policy not implemented; only the conservative policy "
                "is defined");
  }
  return entails(theory, question.attribute) == EntailmentStatus::Entailed;
}

ChainResult forward_chain(const Theory& theory) {
  std::vector<CompiledRule> rules;
  rules.reserve(theory.rules.size());
  for (const Rule& rule : theory.rules) rules.push_back(compile_rule(rule));

  std::vector<std::vector<Literal>> options;
  options.reserve(theory.facts.size());
  for (const Fact& fact : theory.facts) {
    options.push_back(fact_disjuncts(fact));
  }

  std::size_t branch_count = 1;
  for (const auto& opts : options) branch_count *= opts.size();

  ChainResult result;
  std::optional<std::vector<Attribute>> intersection;

  for (std::size_t branch = 0; branch < branch_count; ++branch) {
    BranchTrace trace;
    LiteralSet known;

    // Decode the branch index with the first fact as the most significant
    // digit, so branches are ordered by disjunct index.
    std::size_t radix = branch_count;
    std::size_t remainder = branch;
    for (const auto& opts : options) {
      radix /= opts.size();
      const Literal& chosen = opts[remainder / radix];
      remainder %= radix;
      trace.assumed.emplace_back(chosen.attribute, chosen.positive);
      if (!known.add(chosen)) trace.closed = true;
    }

    bool changed = !trace.closed;
    std::vector<bool> fired(rules.size(), false);
    while (changed && !trace.closed) {
      changed = false;
      for (std::size_t i = 0; i < rules.size() && !trace.closed; ++i) {
        if (fired[i]) continue;
        const CompiledRule& rule = rules[i];
        bool triggered = false;
        if (rule.antecedent_type == JunctionType::Disjunction) {
          triggered = std::any_of(
              rule.antecedent.begin(), rule.antecedent.end(),
              [&](const Literal& lit) { return known.holds(lit); });
        } else {
          triggered = std::all_of(
              rule.antecedent.begin(), rule.antecedent.end(),
              [&](const Literal& lit) { return known.holds(lit); });
        }
        if (!triggered) continue;
        if (known.holds(rule.consequent)) {
          fired[i] = true;  // nothing new to add
          continue;
        }
        fired[i] = true;
        changed = true;
        trace.steps.push_back(
            ChainStep{rule.id, rule.consequent.attribute,
                      rule.consequent.positive});
        if (!known.add(rule.consequent)) trace.closed = true;
      }
    }

    if (!trace.closed) {
      std::vector<Attribute> positives;
      for (const Attribute& attr : theory.vocabulary) {
        if (known.mentions(attr, true)) positives.push_back(attr);
      }
      if (!intersection.has_value()) {
        intersection = positives;
      } else {
        std::vector<Attribute> merged;
        for (const Attribute& attr : *intersection) {
          if (std::find(positives.begin(), positives.end(), attr) !=
              positives.end()) {
            merged.push_back(attr);
          }
        }
        intersection = std::move(merged);
      }
    }
    result.branches.push_back(std::move(trace));
  }

  result.inconsistent = !intersection.has_value();
  if (intersection.has_value()) result.entailed = std::move(*intersection);
  return result;
}

RulePartition essential_rules(const Theory& theory,
                              const std::vector<Question>& questions) {
  std::vector<bool> baseline;
  baseline.reserve(questions.size());
  for (const Question& question : questions) {
    baseline.push_back(answer(theory, question));
  }

  RulePartition partition;
  for (const Rule& rule : theory.rules) {
    const Theory reduced = without_rule(theory, rule.id);
    bool same = true;
    for (std::size_t i = 0; i < questions.size(); ++i) {
      if (answer(reduced, questions[i]) != baseline[i]) {
        same = false;
        break;
      }
    }
    (same ? partition.redundant : partition.essential).push_back(rule.id);
  }
  return partition;
}

}  // namespace rulebench
