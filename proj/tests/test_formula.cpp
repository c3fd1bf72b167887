#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <map>

#include "doctest.h"
#include "rulebench/theory.hpp"
#include "support/generators.hpp"

using namespace rulebench;
using testsupport::naive_eval;
using testsupport::random_formula;

namespace {

Formula atom(const char* name) { return Formula::atom(Attribute{name}); }

std::map<Formula::Kind, int> connective_counts(const Formula& f) {
  std::map<Formula::Kind, int> counts;
  ++counts[f.kind()];
  switch (f.kind()) {
    case Formula::Kind::Not: {
      for (const auto& [kind, n] : connective_counts(f.operand())) {
        counts[kind] += n;
      }
      break;
    }
    case Formula::Kind::And:
    case Formula::Kind::Or:
    case Formula::Kind::Implies: {
      for (const auto& [kind, n] : connective_counts(f.left())) {
        counts[kind] += n;
      }
      for (const auto& [kind, n] : connective_counts(f.right())) {
        counts[kind] += n;
      }
      break;
    }
    default:
      break;
  }
  return counts;
}

}  // namespace

TEST_CASE("ground instantiates every atom with the entity") {
  const Entity anne{"Anne"};

  const Rule rule1{"rule1",
                   Formula::implication(atom("green"), atom("cold"))};
  const Formula grounded = ground(rule1, anne);
  REQUIRE(grounded.kind() == Formula::Kind::Implies);
  CHECK(grounded.left().entity() == anne);
  CHECK(grounded.right().entity() == anne);
  CHECK(grounded.left().attribute().name == "green");

  // Truth constants pass through unchanged.
  const Formula with_const =
      ground(Formula::implication(Formula::truth(), atom("cold")), anne);
  CHECK(with_const.left().kind() == Formula::Kind::True);
  CHECK(with_const.right().entity() == anne);

  // Structural-induction oracle: grounding each node by hand.
  const Formula negated = Formula::implication(
      Formula::negation(atom("cold")), Formula::negation(atom("green")));
  const Formula expected = Formula::implication(
      Formula::negation(Formula::atom(Attribute{"cold"}, anne)),
      Formula::negation(Formula::atom(Attribute{"green"}, anne)));
  CHECK(ground(negated, anne) == expected);
}

TEST_CASE("ground preserves structure") {
  SeededRng rng(7101);
  const auto vocab = testsupport::small_vocabulary();
  const Entity anne{"Anne"};
  for (int i = 0; i < 500; ++i) {
    const Formula f = random_formula(rng, vocab, 5);
    const Formula g = ground(f, anne);
    CHECK(atoms_of(f) == atoms_of(g));
    CHECK(connective_counts(f) == connective_counts(g));
    CHECK(f.depth() == g.depth());
  }
}

TEST_CASE("evaluate matches classical semantics") {
  Assignment a;
  a.set(Attribute{"green"}, true);
  a.set(Attribute{"blue"}, false);
  a.set(Attribute{"cold"}, true);

  CHECK(evaluate(Formula::disjunction(atom("green"), atom("blue")), a));
  CHECK_FALSE(evaluate(Formula::falsity(), a));
  CHECK(evaluate(Formula::truth(), a));
  // !(green & !cold) with green=T, cold=T
  CHECK(evaluate(Formula::negation(Formula::conjunction(
                     atom("green"), Formula::negation(atom("cold")))),
                 a));
  CHECK_THROWS_AS(evaluate(atom("unknown"), a), UnknownAtomError);
}

TEST_CASE("evaluate agrees with the naive interpreter on random formulas") {
  SeededRng rng(20260810);
  const auto vocab = testsupport::small_vocabulary();
  for (int i = 0; i < 10000; ++i) {
    const Formula f = random_formula(rng, vocab, 6);
    Assignment assignment;
    std::map<std::string, bool> env;
    for (const Attribute& attr : vocab) {
      const bool value = rng.coin();
      assignment.set(attr, value);
      env[attr.name] = value;
    }
    REQUIRE(evaluate(f, assignment) == naive_eval(f, env));
  }
}

TEST_CASE("equivalent checks all assignments over the atom union") {
  const Formula contra = Formula::implication(
      Formula::negation(atom("cold")), Formula::negation(atom("green")));
  CHECK(equivalent(Formula::implication(atom("green"), atom("cold")), contra));

  const Formula f = Formula::disjunction(atom("green"), atom("blue"));
  CHECK(equivalent(f, f));

  // Witness green=T, cold=F, blue=F separates these two.
  CHECK_FALSE(equivalent(Formula::implication(atom("green"), atom("cold")),
                         Formula::implication(atom("blue"), atom("cold"))));
}

TEST_CASE("equivalent rejects atom budgets above 16") {
  Formula wide = atom("a0");
  for (int i = 1; i < 17; ++i) {
    wide = Formula::disjunction(
        wide, Formula::atom(Attribute{"a" + std::to_string(i)}));
  }
  CHECK_THROWS_AS(equivalent(wide, Formula::truth()), AtomBudgetError);
}

TEST_CASE("equivalent is an equivalence relation") {
  SeededRng rng(99);
  const auto vocab = testsupport::small_vocabulary(3);
  for (int i = 0; i < 400; ++i) {
    const Formula f1 = random_formula(rng, vocab, 4);
    const Formula f2 = random_formula(rng, vocab, 4);
    const Formula f3 = random_formula(rng, vocab, 4);
    CHECK(equivalent(f1, f1));
    CHECK(equivalent(f1, f2) == equivalent(f2, f1));
    if (equivalent(f1, f2) && equivalent(f2, f3)) {
      CHECK(equivalent(f1, f3));
    }
  }
}

TEST_CASE("material implication holds for random operands") {
  SeededRng rng(1234);
  const auto vocab = testsupport::small_vocabulary(4);
  for (int i = 0; i < 1000; ++i) {
    const Formula p = random_formula(rng, vocab, 4);
    const Formula q = random_formula(rng, vocab, 4);
    CHECK(equivalent(Formula::implication(p, q),
                     Formula::disjunction(Formula::negation(p), q)));
  }
}

TEST_CASE("atoms_of returns first-occurrence order") {
  const Formula f = Formula::disjunction(atom("green"), atom("blue"));
  CHECK(atoms_of(f) ==
        std::vector<Attribute>{Attribute{"green"}, Attribute{"blue"}});
  CHECK(atoms_of(Formula::truth()).empty());

  const Formula nested = Formula::negation(Formula::conjunction(
      atom("green"), Formula::negation(atom("cold"))));
  CHECK(atoms_of(nested) ==
        std::vector<Attribute>{Attribute{"green"}, Attribute{"cold"}});

  // Duplicates collapse to the first occurrence.
  const Formula dup = Formula::conjunction(
      Formula::disjunction(atom("cold"), atom("green")), atom("cold"));
  CHECK(atoms_of(dup) ==
        std::vector<Attribute>{Attribute{"cold"}, Attribute{"green"}});
}

TEST_CASE("literal helpers") {
  CHECK(is_literal(atom("green")));
  CHECK(is_literal(Formula::negation(Formula::negation(atom("green")))));
  CHECK_FALSE(is_literal(Formula::disjunction(atom("a"), atom("b"))));
  CHECK(negation_count(Formula::negation(atom("green"))) == 1);
  CHECK(literal_atom(Formula::negation(atom("green"))).attribute().name ==
        "green");
  CHECK(is_literal_junction(
      Formula::disjunction(Formula::negation(atom("a")), atom("b"))));
  CHECK_FALSE(is_literal_junction(Formula::disjunction(
      Formula::disjunction(atom("a"), atom("b")), atom("c"))));
}
