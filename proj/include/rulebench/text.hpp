#pragma once

// Bidirectional templated-English layer.
//
// Rendering grammar (parse_rule/parse_fact accept exactly this language):
//
//   rule      := "If " clause " then " clause "."
//              | "Someone is " literal " or " literal "."
//              | first-clause ", or " clause "."
//              | "It is not the case that someone is " group "."
//   clause    := subject group
//              | "it is not the case that " subject group
//   subject   := "someone is " | "they are "        (antecedent / consequent)
//   group     := literal | literal " and " literal | literal " or " literal
//   literal   := ("not ")* attribute
//   fact      := entity " is " literal [" or " literal] "."
//   question  := entity " is " attribute ". True/False?"
//
// Groups never exceed two literals and nested groups never occur; every
// formula the generator or rewriter can produce fits this grammar, which is
// what keeps parse(render(x)) == x structurally.

#include <string>
#include <vector>

#include "rulebench/inference.hpp"
#include "rulebench/theory.hpp"

namespace rulebench {

struct RenderedInstance {
  std::vector<std::string> facts_text;
  std::vector<std::string> rules_text;
  std::string question_text;
  std::string prompt;  // facts + rules + question joined by single spaces
};

std::string render_rule(const Rule& rule);
std::string render_fact(const Fact& fact);
std::string render_question(const Question& question);

/// Inverse of render_rule; the returned rule has an empty id.
Rule parse_rule(const std::string& text);
Fact parse_fact(const std::string& text);
Question parse_question(const std::string& text);

std::string serialize_prompt(const std::vector<std::string>& facts,
                             const std::vector<std::string>& rules,
                             const std::string& question);

RenderedInstance render_instance(const Theory& theory,
                                 const Question& question);

// One sentence per line: facts, rules and questions in any order. Rules get
// ids "rule1", "rule2", ... in file order.
struct ParsedInstance {
  Theory theory;
  std::vector<Question> questions;
};

ParsedInstance parse_instance_lines(const std::vector<std::string>& lines);

/// Words with template meaning; attributes may not collide with these.
bool is_reserved_word(const std::string& word);

}  // namespace rulebench
