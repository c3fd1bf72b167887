#pragma once

#include <string>
#include <vector>

#include "rulebench/formula.hpp"

namespace rulebench {

// A rule is implicitly universally quantified over one variable: the body is
// stored schematic (entity-free) and instantiated on demand with ground().
struct Rule {
  std::string id;
  Formula body;
};

// Ground statement about the entity: one literal or a disjunction of two.
struct Fact {
  Formula body;
};

struct Theory {
  Entity entity;
  std::vector<Attribute> vocabulary;
  std::vector<Fact> facts;
  std::vector<Rule> rules;
};

/// Instantiates every atom of the formula with the given entity; the tree
/// structure is otherwise unchanged.
Formula ground(const Formula& formula, const Entity& entity);
Formula ground(const Rule& rule, const Entity& entity);

/// Theory with one rule removed, identified by id. Missing ids are ignored.
Theory without_rule(const Theory& theory, const std::string& rule_id);

}  // namespace rulebench
