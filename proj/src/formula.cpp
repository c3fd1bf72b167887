#include "rulebench/formula.hpp"

#include <algorithm>

namespace rulebench {

Formula Formula::atom(Attribute attribute) {
  return Formula(std::make_shared<Node>(
      Node{Kind::Atom, std::move(attribute), std::nullopt, nullptr, nullptr}));
}

Formula Formula::atom(Attribute attribute, Entity entity) {
  return Formula(std::make_shared<Node>(Node{
      Kind::Atom, std::move(attribute), std::move(entity), nullptr, nullptr}));
}

Formula Formula::negation(Formula operand) {
  return Formula(std::make_shared<Node>(
      Node{Kind::Not, {}, std::nullopt, std::move(operand.node_), nullptr}));
}

Formula Formula::conjunction(Formula left, Formula right) {
  return Formula(std::make_shared<Node>(Node{Kind::And, {}, std::nullopt,
                                             std::move(left.node_),
                                             std::move(right.node_)}));
}

Formula Formula::disjunction(Formula left, Formula right) {
  return Formula(std::make_shared<Node>(Node{Kind::Or, {}, std::nullopt,
                                             std::move(left.node_),
                                             std::move(right.node_)}));
}

Formula Formula::implication(Formula antecedent, Formula consequent) {
  return Formula(std::make_shared<Node>(Node{Kind::Implies, {}, std::nullopt,
                                             std::move(antecedent.node_),
                                             std::move(consequent.node_)}));
}

Formula Formula::truth() {
  static const auto node = std::make_shared<Node>(
      Node{Kind::True, {}, std::nullopt, nullptr, nullptr});
  return Formula(node);
}

Formula Formula::falsity() {
  static const auto node = std::make_shared<Node>(
      Node{Kind::False, {}, std::nullopt, nullptr, nullptr});
  return Formula(node);
}

bool Formula::is_binary() const {
  switch (kind()) {
    case Kind::And:
    case Kind::Or:
    case Kind::Implies:
      return true;
    default:
      return false;
  }
}

bool Formula::operator==(const Formula& other) const {
  if (node_ == other.node_) return true;
  if (kind() != other.kind()) return false;
  switch (kind()) {
    case Kind::Atom:
      return attribute() == other.attribute() && entity() == other.entity();
    case Kind::Not:
      return operand() == other.operand();
    case Kind::And:
    case Kind::Or:
    case Kind::Implies:
      return left() == other.left() && right() == other.right();
    case Kind::True:
    case Kind::False:
      return true;
  }
  return false;
}

int Formula::depth() const {
  switch (kind()) {
    case Kind::Atom:
    case Kind::True:
    case Kind::False:
      return 0;
    case Kind::Not:
      return 1 + operand().depth();
    default:
      return 1 + std::max(left().depth(), right().depth());
  }
}

std::string Formula::to_string() const {
  switch (kind()) {
    case Kind::Atom:
      if (entity().has_value()) {
        return attribute().name + "(" + entity()->name + ")";
      }
      return attribute().name;
    case Kind::Not:
      return "!" + operand().to_string();
    case Kind::And:
      return "(" + left().to_string() + " & " + right().to_string() + ")";
    case Kind::Or:
      return "(" + left().to_string() + " | " + right().to_string() + ")";
    case Kind::Implies:
      return "(" + left().to_string() + " -> " + right().to_string() + ")";
    case Kind::True:
      return "T";
    case Kind::False:
      return "F";
  }
  return "?";
}

void Assignment::set(const Attribute& attribute, bool value) {
  for (auto& [attr, held] : entries_) {
    if (attr == attribute) {
      held = value;
      return;
    }
  }
  entries_.emplace_back(attribute, value);
}

bool Assignment::value_of(const Attribute& attribute) const {
  for (const auto& [attr, held] : entries_) {
    if (attr == attribute) return held;
  }
  throw UnknownAtomError(attribute.name);
}

bool Assignment::contains(const Attribute& attribute) const {
  for (const auto& [attr, held] : entries_) {
    if (attr == attribute) return true;
  }
  return false;
}

namespace {

void collect_atoms(const Formula& formula, std::vector<Attribute>& out) {
  switch (formula.kind()) {
    case Formula::Kind::Atom:
      if (std::find(out.begin(), out.end(), formula.attribute()) == out.end()) {
        out.push_back(formula.attribute());
      }
      return;
    case Formula::Kind::Not:
      collect_atoms(formula.operand(), out);
      return;
    case Formula::Kind::And:
    case Formula::Kind::Or:
    case Formula::Kind::Implies:
      collect_atoms(formula.left(), out);
      collect_atoms(formula.right(), out);
      return;
    case Formula::Kind::True:
    case Formula::Kind::False:
      return;
  }
}

}  // namespace

std::vector<Attribute> atoms_of(const Formula& formula) {
  std::vector<Attribute> out;
  collect_atoms(formula, out);
  return out;
}

bool evaluate(const Formula& formula, const Assignment& assignment) {
  switch (formula.kind()) {
    case Formula::Kind::Atom:
      return assignment.value_of(formula.attribute());
    case Formula::Kind::Not:
      return !evaluate(formula.operand(), assignment);
    case Formula::Kind::And:
      return evaluate(formula.left(), assignment) &&
             evaluate(formula.right(), assignment);
    case Formula::Kind::Or:
      return evaluate(formula.left(), assignment) ||
             evaluate(formula.right(), assignment);
    case Formula::Kind::Implies:
      return !evaluate(formula.left(), assignment) ||
             evaluate(formula.right(), assignment);
    case Formula::Kind::True:
      return true;
    case Formula::Kind::False:
      return false;
  }
  return false;
}

bool equivalent(const Formula& a, const Formula& b) {
  std::vector<Attribute> atoms = atoms_of(a);
  for (const Attribute& attr : atoms_of(b)) {
    if (std::find(atoms.begin(), atoms.end(), attr) == atoms.end()) {
      atoms.push_back(attr);
    }
  }
  if (atoms.size() > 16) throw AtomBudgetError(atoms.size());

  const std::size_t rows = std::size_t{1} << atoms.size();
  for (std::size_t row = 0; row < rows; ++row) {
    Assignment assignment;
    for (std::size_t i = 0; i < atoms.size(); ++i) {
      assignment.set(atoms[i], ((row >> i) & 1u) != 0);
    }
    if (evaluate(a, assignment) != evaluate(b, assignment)) return false;
  }
  return true;
}

bool is_literal(const Formula& formula) {
  Formula held = formula;
  while (held.kind() == Formula::Kind::Not) held = held.operand();
  return held.kind() == Formula::Kind::Atom;
}

int negation_count(const Formula& formula) {
  int count = 0;
  Formula held = formula;
  while (held.kind() == Formula::Kind::Not) {
    held = held.operand();
    ++count;
  }
  return count;
}

Formula literal_atom(const Formula& formula) {
  Formula held = formula;
  while (held.kind() == Formula::Kind::Not) held = held.operand();
  return held;
}

bool is_literal_junction(const Formula& formula) {
  if (formula.kind() != Formula::Kind::And &&
      formula.kind() != Formula::Kind::Or) {
    return false;
  }
  return is_literal(formula.left()) && is_literal(formula.right());
}

}  // namespace rulebench
