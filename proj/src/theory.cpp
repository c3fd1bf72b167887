#include "rulebench/theory.hpp"

namespace rulebench {

Formula ground(const Formula& formula, const Entity& entity) {
  switch (formula.kind()) {
    case Formula::Kind::Atom:
      return Formula::atom(formula.attribute(), entity);
    case Formula::Kind::Not:
      return Formula::negation(ground(formula.operand(), entity));
    case Formula::Kind::And:
      return Formula::conjunction(ground(formula.left(), entity),
                                  ground(formula.right(), entity));
    case Formula::Kind::Or:
      return Formula::disjunction(ground(formula.left(), entity),
                                  ground(formula.right(), entity));
    case Formula::Kind::Implies:
      return Formula::implication(ground(formula.left(), entity),
                                  ground(formula.right(), entity));
    case Formula::Kind::True:
    case Formula::Kind::False:
      return formula;
  }
  return formula;
}

Formula ground(const Rule& rule, const Entity& entity) {
  return ground(rule.body, entity);
}

Theory without_rule(const Theory& theory, const std::string& rule_id) {
  Theory out{theory.entity, theory.vocabulary, theory.facts, {}};
  out.rules.reserve(theory.rules.size());
  for (const Rule& rule : theory.rules) {
    if (rule.id != rule_id) out.rules.push_back(rule);
  }
  return out;
}

}  // namespace rulebench
