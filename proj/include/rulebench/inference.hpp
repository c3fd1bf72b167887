#pragma once

// Ground-truth engine. Entailment is decided by complete model enumeration
// over the theory vocabulary (64 assignments at the standard 6-attribute
// scale), so rewritten rule forms need no special handling. forward_chain
// is an independent second route: it case-splits on disjunctive facts and
// runs unit forward chaining per branch, which doubles as the source of
// human-readable derivation traces.

#include <string>
#include <vector>

#include "rulebench/theory.hpp"

namespace rulebench {

struct Question {
  Entity subject;
  Attribute attribute;
  bool gold = false;  // recomputed through answer(), never hand-set
};

enum class EntailmentStatus { Entailed, NotEntailed, Inconsistent };

// Hook for the alternative inconsistency-resolution strategies. Only the
// conservative policy (withhold all conclusions) is implemented; the other
// named policies raise until someone defines their semantics.
enum class AnswerPolicy { Conservative, PriorityBased, Paraconsistent };

struct ChainStep {
  std::string rule_id;
  Attribute attribute;
  bool positive = true;
};

struct BranchTrace {
  // Literals assumed from the facts, one disjunct per fact, in fact order.
  std::vector<std::pair<Attribute, bool>> assumed;
  std::vector<ChainStep> steps;
  bool closed = false;  // derived some literal together with its negation
};

struct ChainResult {
  std::vector<Attribute> entailed;  // positive atoms, in vocabulary order
  std::vector<BranchTrace> branches;
  bool inconsistent = false;  // true iff every branch closed
};

struct RulePartition {
  std::vector<std::string> essential;
  std::vector<std::string> redundant;
};

/// True iff some assignment satisfies every fact and every grounded rule.
bool is_consistent(const Theory& theory);

/// Inconsistent if the theory has no model; Entailed if the attribute holds
/// in every model; NotEntailed otherwise.
EntailmentStatus entails(const Theory& theory, const Attribute& attribute);

/// Closed-world boolean label: true only for Entailed. Both NotEntailed and
/// Inconsistent map to false under the conservative policy.
bool answer(const Theory& theory, const Question& question,
            AnswerPolicy policy = AnswerPolicy::Conservative);

/// Case-split unit chaining over implication-form theories. Branches are
/// ordered by disjunct index with the first fact most significant.
ChainResult forward_chain(const Theory& theory);

/// Rule is redundant iff deleting it changes no answer on the questions.
RulePartition essential_rules(const Theory& theory,
                              const std::vector<Question>& questions);

}  // namespace rulebench
