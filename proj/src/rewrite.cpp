#include "rulebench/rewrite.hpp"

#include <deque>
#include <utility>

#include "rulebench/rng.hpp"

namespace rulebench {

namespace {

// Law-built negation collapses a top-level Not so that contraposition and
// De Morgan yield "green" from "not green" rather than "not not green".
// Explicit double negations are introduced only by the double-negation law.
Formula negate(const Formula& formula) {
  if (formula.kind() == Formula::Kind::Not) return formula.operand();
  return Formula::negation(formula);
}

bool is_junction(const Formula& formula) {
  return formula.kind() == Formula::Kind::And ||
         formula.kind() == Formula::Kind::Or;
}

Formula child_at(const Formula& formula, char step) {
  if (formula.kind() == Formula::Kind::Not) return formula.operand();
  return step == 'L' ? formula.left() : formula.right();
}

Formula get_at(const Formula& root, const std::string& path) {
  Formula cursor = root;
  for (char step : path) cursor = child_at(cursor, step);
  return cursor;
}

Formula replace_at(const Formula& root, const std::string& path,
                   std::size_t index, const Formula& replacement) {
  if (index == path.size()) return replacement;
  const char step = path[index];
  switch (root.kind()) {
    case Formula::Kind::Not:
      return Formula::negation(
          replace_at(root.operand(), path, index + 1, replacement));
    case Formula::Kind::And:
    case Formula::Kind::Or:
    case Formula::Kind::Implies: {
      Formula left = root.left();
      Formula right = root.right();
      if (step == 'L') {
        left = replace_at(left, path, index + 1, replacement);
      } else {
        right = replace_at(right, path, index + 1, replacement);
      }
      if (root.kind() == Formula::Kind::And) {
        return Formula::conjunction(left, right);
      }
      if (root.kind() == Formula::Kind::Or) {
        return Formula::disjunction(left, right);
      }
      return Formula::implication(left, right);
    }
    default:
      return replacement;  // cannot happen on well-formed paths
  }
}

Formula replace_at(const Formula& root, const std::string& path,
                   const Formula& replacement) {
  return replace_at(root, path, 0, replacement);
}

// Breadth-first search for the outermost node matching the predicate;
// among nodes of equal depth the leftmost wins.
template <typename Pred>
std::optional<std::string> find_site(const Formula& root, Pred pred) {
  std::deque<std::pair<Formula, std::string>> queue;
  queue.emplace_back(root, "");
  while (!queue.empty()) {
    auto [node, path] = queue.front();
    queue.pop_front();
    if (pred(node)) return path;
    switch (node.kind()) {
      case Formula::Kind::Not:
        queue.emplace_back(node.operand(), path + "L");
        break;
      case Formula::Kind::And:
      case Formula::Kind::Or:
      case Formula::Kind::Implies:
        queue.emplace_back(node.left(), path + "L");
        queue.emplace_back(node.right(), path + "R");
        break;
      default:
        break;
    }
  }
  return std::nullopt;
}

// De Morgan sites: a negated junction (unpacked) or a disjunction of two
// literals (packed into a negated conjunction).
bool demorgan_eligible(const Formula& node) {
  if (node.kind() == Formula::Kind::Not && is_junction(node.operand())) {
    return true;
  }
  return node.kind() == Formula::Kind::Or && is_literal_junction(node);
}

// Preorder search for the first maximal literal; literal chains are not
// descended into; so "not not green" is one target, not three.
bool leftmost_literal_path(const Formula& node, std::string& path) {
  if (is_literal(node)) return true;
  switch (node.kind()) {
    case Formula::Kind::Not:
      path.push_back('L');
      if (leftmost_literal_path(node.operand(), path)) return true;
      path.pop_back();
      return false;
    case Formula::Kind::And:
    case Formula::Kind::Or:
    case Formula::Kind::Implies:
      path.push_back('L');
      if (leftmost_literal_path(node.left(), path)) return true;
      path.back() = 'R';
      if (leftmost_literal_path(node.right(), path)) return true;
      path.pop_back();
      return false;
    default:
      return false;
  }
}

// Double negation wraps the leftmost literal of the antecedent when the
// rule is in implication form, otherwise the leftmost literal overall.
std::optional<std::string> double_negation_target(const Formula& body) {
  std::string path;
  if (body.kind() == Formula::Kind::Implies) {
    path.push_back('L');
    if (leftmost_literal_path(body.left(), path)) return path;
    return std::nullopt;
  }
  if (leftmost_literal_path(body, path)) return path;
  return std::nullopt;
}

struct PlannedRewrite {
  Formula after;
  std::string site;
};

std::optional<PlannedRewrite> plan(const Formula& body, Law law) {
  switch (law) {
    case Law::Contraposition: {
      if (body.kind() != Formula::Kind::Implies) return std::nullopt;
      return PlannedRewrite{
          Formula::implication(negate(body.right()), negate(body.left())),
          ""};
    }
    case Law::DoubleNegation: {
      auto path = double_negation_target(body);
      if (!path) return std::nullopt;
      const Formula target = get_at(body, *path);
      return PlannedRewrite{
          replace_at(body, *path,
                     Formula::negation(Formula::negation(target))),
          *path};
    }
    case Law::Implication: {
      if (body.kind() != Formula::Kind::Implies) return std::nullopt;
      return PlannedRewrite{
          Formula::disjunction(negate(body.left()), body.right()), ""};
    }
    case Law::DeMorgan: {
      auto path = find_site(body, demorgan_eligible);
      if (!path) return std::nullopt;
      const Formula site = get_at(body, *path);
      Formula rewritten = site;
      if (site.kind() == Formula::Kind::Not) {
        const Formula inner = site.operand();
        const Formula left = negate(inner.left());
        const Formula right = negate(inner.right());
        rewritten = inner.kind() == Formula::Kind::And
                        ? Formula::disjunction(left, right)
                        : Formula::conjunction(left, right);
      } else {
        rewritten = Formula::negation(Formula::conjunction(
            negate(site.left()), negate(site.right())));
      }
      return PlannedRewrite{replace_at(body, *path, rewritten), *path};
    }
    case Law::Identity: {
      if (body.kind() != Formula::Kind::Implies || !is_literal(body.left())) {
        return std::nullopt;
      }
      return PlannedRewrite{
          Formula::implication(
              Formula::disjunction(body.left(), body.left()), body.right()),
          "L"};
    }
    case Law::Commutativity: {
      auto path = find_site(body, is_junction);
      if (!path) return std::nullopt;
      const Formula site = get_at(body, *path);
      const Formula swapped =
          site.kind() == Formula::Kind::And
              ? Formula::conjunction(site.right(), site.left())
              : Formula::disjunction(site.right(), site.left());
      return PlannedRewrite{replace_at(body, *path, swapped), *path};
    }
  }
  return std::nullopt;
}

}  // namespace

std::string law_name(Law law) {
  switch (law) {
    case Law::Contraposition:
      return "contrapositive";
    case Law::DoubleNegation:
      return "double-negation";
    case Law::Implication:
      return "implication";
    case Law::DeMorgan:
      return "de-morgan";
    case Law::Identity:
      return "identity";
    case Law::Commutativity:
      return "commutativity";
  }
  return "?";
}

std::optional<Law> law_from_name(std::string_view name) {
  for (Law law : kAllLaws) {
    if (law_name(law) == name) return law;
  }
  return std::nullopt;
}

bool applicable(Law law, const Rule& rule) {
  return plan(rule.body, law).has_value();
}

std::pair<Rule, RewriteStep> apply_law(const Rule& rule, Law law) {
  auto planned = plan(rule.body, law);
  if (!planned) {
    throw NotApplicableError(law_name(law) + " is not applicable to " +
                             rule.body.to_string());
  }
  if (!equivalent(rule.body, planned->after)) {
    throw Error("rewrite broke equivalence: " + rule.body.to_string() +
                " vs " + planned->after.to_string());
  }
  RewriteStep step{law, planned->site, rule.body, planned->after};
  return {Rule{rule.id, planned->after}, std::move(step)};
}

StackResult stack_laws(const Rule& rule, int k, std::uint64_t seed) {
  if (k < 2 || k > 5) {
    throw Error("stack size must be between 2 and 5, got " +
                std::to_string(k));
  }
  SeededRng rng(seed);
  Rule current = rule;
  RewriteTrace trace;
  for (int step = 0; step < k; ++step) {
    std::vector<Law> candidates;
    for (Law law : kAllLaws) {
      if (applicable(law, current)) candidates.push_back(law);
    }
    if (candidates.empty()) {
      throw StackingFailedError("no applicable law at stack step " +
                                std::to_string(step + 1) + " for " +
                                current.body.to_string());
    }
    const Law chosen = candidates[rng.uniform_below(candidates.size())];
    auto [next, record] = apply_law(current, chosen);
    trace.push_back(std::move(record));
    current = std::move(next);
  }
  if (!equivalent(rule.body, current.body)) {
    throw Error("law stack broke equivalence for " + rule.body.to_string());
  }
  return StackResult{std::move(current), std::move(trace)};
}

Fact commute_fact(const Fact& fact) {
  if (fact.body.kind() != Formula::Kind::Or) {
    throw NotApplicableError("commutativity needs a disjunctive fact, got " +
                             fact.body.to_string());
  }
  return Fact{Formula::disjunction(fact.body.right(), fact.body.left())};
}

Formula replay_trace(const RewriteTrace& trace) {
  if (trace.empty()) throw Error("cannot replay an empty trace");
  Rule current{"replay", trace.front().before};
  for (const RewriteStep& step : trace) {
    current = apply_law(current, step.law).first;
  }
  return current.body;
}

}  // namespace rulebench
