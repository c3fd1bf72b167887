#pragma once

// Propositional formulas over single-entity attributes.
//
// A Formula is an immutable tree shared through shared_ptr; copies are
// cheap and every operation in this header is a pure function, so values
// can be shared freely across threads. Atoms are either schematic
// ("someone is green", no entity) or ground ("Anne is green"). Truth
// evaluation only looks at the attribute, so schematic and ground forms
// evaluate identically under the same assignment.

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "rulebench/errors.hpp"

namespace rulebench {

struct Attribute {
  std::string name;

  auto operator<=>(const Attribute&) const = default;
};

struct Entity {
  std::string name;

  auto operator<=>(const Entity&) const = default;
};

class Formula {
 public:
  enum class Kind { Atom, Not, And, Or, Implies, True, False };

  static Formula atom(Attribute attribute);
  static Formula atom(Attribute attribute, Entity entity);
  static Formula negation(Formula operand);
  static Formula conjunction(Formula left, Formula right);
  static Formula disjunction(Formula left, Formula right);
  static Formula implication(Formula antecedent, Formula consequent);
  static Formula truth();
  static Formula falsity();

  Kind kind() const { return node_->kind; }
  bool is_binary() const;

  // Atom accessors; undefined behaviour unless kind() == Atom.
  const Attribute& attribute() const { return node_->attribute; }
  const std::optional<Entity>& entity() const { return node_->entity; }

  // Child accessors; operand() for Not, left()/right() for binaries.
  Formula operand() const { return Formula(node_->left); }
  Formula left() const { return Formula(node_->left); }
  Formula right() const { return Formula(node_->right); }

  // Structural equality, entity-sensitive.
  bool operator==(const Formula& other) const;

  int depth() const;

  // Compact symbolic form for diagnostics, e.g. "(green -> cold)".
  std::string to_string() const;

 private:
  struct Node {
    Kind kind;
    Attribute attribute;
    std::optional<Entity> entity;
    std::shared_ptr<const Node> left;
    std::shared_ptr<const Node> right;
  };

  explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

  std::shared_ptr<const Node> node_;
};

// Total truth valuation of each vocabulary attribute for the group entity.
class Assignment {
 public:
  Assignment() = default;

  void set(const Attribute& attribute, bool value);
  bool value_of(const Attribute& attribute) const;  // throws UnknownAtomError
  bool contains(const Attribute& attribute) const;

  const std::vector<std::pair<Attribute, bool>>& entries() const {
    return entries_;
  }

 private:
  std::vector<std::pair<Attribute, bool>> entries_;
};

/// Attributes occurring in the formula, in first-occurrence (preorder) order.
std::vector<Attribute> atoms_of(const Formula& formula);

/// Classical truth value; Implies(P,Q) reads as (not P) or Q.
bool evaluate(const Formula& formula, const Assignment& assignment);

/// Truth-table equality over the union of both atom sets (at most 16 atoms).
bool equivalent(const Formula& a, const Formula& b);

// Shape predicates shared by the rewriter and the text layer.

/// Atom under zero or more negations ("literal" includes "not not green").
bool is_literal(const Formula& formula);

/// Number of leading Not nodes on a literal.
int negation_count(const Formula& formula);

/// The atom at the end of a literal's negation chain.
Formula literal_atom(const Formula& formula);

/// Binary And/Or whose two operands are both literals.
bool is_literal_junction(const Formula& formula);

}  // namespace rulebench
