#pragma once

// Equivalence-law term rewriter. Each law rewrites one canonical site
// (outermost eligible, ties broken left-first) and every application is
// checked against the truth-table oracle before it is returned, so a trace
// that made it out of this module is sound by construction.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "rulebench/theory.hpp"

namespace rulebench {

enum class Law {
  Contraposition,
  DoubleNegation,
  Implication,
  DeMorgan,
  Identity,
  Commutativity,
};

inline constexpr Law kAllLaws[] = {
    Law::Contraposition, Law::DoubleNegation, Law::Implication,
    Law::DeMorgan,       Law::Identity,       Law::Commutativity,
};

/// Serialized law names: "contrapositive", "double-negation", "implication",
/// "de-morgan", "identity", "commutativity".
std::string law_name(Law law);
std::optional<Law> law_from_name(std::string_view name);

struct RewriteStep {
  Law law;
  std::string site;  // path of the rewritten node: "" is the root, then L/R/C
  Formula before;
  Formula after;
};

using RewriteTrace = std::vector<RewriteStep>;

struct StackResult {
  Rule rule;
  RewriteTrace trace;
};

/// True iff apply_law(rule, law) would succeed.
bool applicable(Law law, const Rule& rule);

/// Applies one law at its canonical site. Throws NotApplicableError when no
/// eligible site exists.
std::pair<Rule, RewriteStep> apply_law(const Rule& rule, Law law);

/// Applies k laws (2..5) drawn uniformly from the applicable set at each
/// step. Deterministic in (rule, k, seed); the final form is verified
/// equivalent to the original.
StackResult stack_laws(const Rule& rule, int k, std::uint64_t seed);

/// Swaps the operands of a binary-disjunction fact.
Fact commute_fact(const Fact& fact);

/// Reapplies the trace starting from its first before-formula; returns the
/// final formula. Used to check trace coherence.
Formula replay_trace(const RewriteTrace& trace);

}  // namespace rulebench
