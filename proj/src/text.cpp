#include "rulebench/text.hpp"

#include <algorithm>
#include <array>
#include <cctype>

namespace rulebench {

namespace {

constexpr std::array<const char*, 16> kReservedWords = {
    "not",  "and",  "or",   "is",   "are",  "someone", "they", "then",
    "if",   "it",   "the",  "case", "that", "true",    "false", "nor",
};

bool is_lower_word(const std::string& word) {
  if (word.empty()) return false;
  return std::all_of(word.begin(), word.end(), [](unsigned char c) {
    return std::islower(c) != 0;
  });
}

bool is_capitalized_word(const std::string& word) {
  if (word.empty() || std::isupper(static_cast<unsigned char>(word[0])) == 0) {
    return false;
  }
  return std::all_of(word.begin() + 1, word.end(), [](unsigned char c) {
    return std::islower(c) != 0;
  });
}

std::string literal_phrase(const Formula& literal) {
  std::string out;
  for (int i = 0; i < negation_count(literal); ++i) out += "not ";
  out += literal_atom(literal).attribute().name;
  return out;
}

const char* junction_word(const Formula& junction) {
  return junction.kind() == Formula::Kind::And ? " and " : " or ";
}

// literal or two-literal junction
std::string group_phrase(const Formula& formula) {
  if (is_literal(formula)) return literal_phrase(formula);
  if (is_literal_junction(formula)) {
    return literal_phrase(formula.left()) + junction_word(formula) +
           literal_phrase(formula.right());
  }
  throw RenderError("no template for group " + formula.to_string());
}

std::string clause_text(const Formula& formula, const std::string& subject) {
  if (formula.kind() == Formula::Kind::Not &&
      is_literal_junction(formula.operand())) {
    return "it is not the case that " + subject + " " +
           group_phrase(formula.operand());
  }
  return subject + " " + group_phrase(formula);
}

std::string capitalize_first(std::string text) {
  if (!text.empty()) {
    text[0] = static_cast<char>(
        std::toupper(static_cast<unsigned char>(text[0])));
  }
  return text;
}

// --- parsing ---------------------------------------------------------------

class Scanner {
 public:
  explicit Scanner(const std::string& text) : text_(text) {}

  std::size_t pos() const { return pos_; }

  void skip_spaces() {
    while (pos_ < text_.size() && text_[pos_] == ' ') ++pos_;
  }

  bool at_end() {
    skip_spaces();
    return pos_ >= text_.size();
  }

  std::string peek_word() {
    skip_spaces();
    std::size_t end = pos_;
    while (end < text_.size() &&
           std::isalpha(static_cast<unsigned char>(text_[end])) != 0) {
      ++end;
    }
    return text_.substr(pos_, end - pos_);
  }

  std::string next_word() {
    const std::string word = peek_word();
    if (word.empty()) {
      throw ParseError("expected a word", pos_);
    }
    pos_ += word.size();
    return word;
  }

  bool try_word(const std::string& expected) {
    if (peek_word() != expected) return false;
    pos_ += expected.size();
    return true;
  }

  void expect_word(const std::string& expected) {
    skip_spaces();
    if (!try_word(expected)) {
      throw ParseError("expected '" + expected + "'", pos_);
    }
  }

  bool try_char(char expected) {
    skip_spaces();
    if (pos_ < text_.size() && text_[pos_] == expected) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect_char(char expected) {
    if (!try_char(expected)) {
      throw ParseError(std::string("expected '") + expected + "'", pos_);
    }
  }

  void expect_end() {
    if (!at_end()) throw ParseError("unexpected trailing text", pos_);
  }

 private:
  const std::string& text_;
  std::size_t pos_ = 0;
};

struct Subject {
  std::string entity_name;  // empty for schematic rules
};

Formula make_atom(const std::string& name, const Subject& subject) {
  if (subject.entity_name.empty()) return Formula::atom(Attribute{name});
  return Formula::atom(Attribute{name}, Entity{subject.entity_name});
}

Formula parse_literal(Scanner& scanner, const Subject& subject,
                      int max_negations) {
  int negations = 0;
  while (scanner.try_word("not")) ++negations;
  if (max_negations >= 0 && negations > max_negations) {
    throw ParseError("too many negations in this position", scanner.pos());
  }
  const std::size_t at = scanner.pos();
  const std::string word = scanner.next_word();
  if (!is_lower_word(word) || is_reserved_word(word)) {
    throw ParseError("expected an attribute, got '" + word + "'", at);
  }
  Formula formula = make_atom(word, subject);
  for (int i = 0; i < negations; ++i) formula = Formula::negation(formula);
  return formula;
}

// literal or two-literal junction; stops before "then", ",", "." etc.
Formula parse_group(Scanner& scanner, const Subject& subject,
                    int max_negations = -1) {
  Formula first = parse_literal(scanner, subject, max_negations);
  Formula::Kind op = Formula::Kind::Atom;
  if (scanner.try_word("or")) {
    op = Formula::Kind::Or;
  } else if (scanner.try_word("and")) {
    op = Formula::Kind::And;
  } else {
    return first;
  }
  Formula second = parse_literal(scanner, subject, max_negations);
  const std::string following = scanner.peek_word();
  if (following == "or" || following == "and") {
    throw ParseError("groups hold at most two literals", scanner.pos());
  }
  return op == Formula::Kind::Or ? Formula::disjunction(first, second)
                                 : Formula::conjunction(first, second);
}

void expect_not_the_case_that(Scanner& scanner) {
  scanner.expect_word("is");
  scanner.expect_word("not");
  scanner.expect_word("the");
  scanner.expect_word("case");
  scanner.expect_word("that");
}

Formula parse_negated_group(Scanner& scanner, const std::string& subject,
                            const std::string& copula) {
  expect_not_the_case_that(scanner);
  scanner.expect_word(subject);
  scanner.expect_word(copula);
  const std::size_t at = scanner.pos();
  Formula group = parse_group(scanner, Subject{});
  if (!is_literal_junction(group)) {
    throw ParseError("negated group needs two literals", at);
  }
  return Formula::negation(group);
}

// clause := subject copula group | "it" is-not-the-case-that subject copula group
Formula parse_clause(Scanner& scanner, const std::string& subject,
                     const std::string& copula) {
  if (scanner.try_word("it")) {
    return parse_negated_group(scanner, subject, copula);
  }
  scanner.expect_word(subject);
  scanner.expect_word(copula);
  return parse_group(scanner, Subject{});
}

}  // namespace

bool is_reserved_word(const std::string& word) {
  return std::any_of(kReservedWords.begin(), kReservedWords.end(),
                     [&](const char* reserved) { return word == reserved; });
}

std::string render_rule(const Rule& rule) {
  const Formula& body = rule.body;
  switch (body.kind()) {
    case Formula::Kind::Implies:
      return "If " + clause_text(body.left(), "someone is") + " then " +
             clause_text(body.right(), "they are") + ".";
    case Formula::Kind::Or:
      if (is_literal(body.left()) && is_literal(body.right())) {
        return "Someone is " + literal_phrase(body.left()) + " or " +
               literal_phrase(body.right()) + ".";
      }
      return capitalize_first(clause_text(body.left(), "someone is")) +
             ", or " + clause_text(body.right(), "they are") + ".";
    case Formula::Kind::Not:
      if (is_literal_junction(body.operand())) {
        return capitalize_first(clause_text(body, "someone is")) + ".";
      }
      throw RenderError("no template for rule " + body.to_string());
    default:
      throw RenderError("no template for rule " + body.to_string());
  }
}

std::string render_fact(const Fact& fact) {
  const Formula& body = fact.body;
  Formula probe = is_literal(body) ? literal_atom(body)
                                   : literal_atom(body.left());
  if (!probe.entity().has_value()) {
    throw RenderError("facts must be ground: " + body.to_string());
  }
  const std::string entity = probe.entity()->name;
  if (is_literal(body)) {
    return entity + " is " + literal_phrase(body) + ".";
  }
  if (body.kind() == Formula::Kind::Or && is_literal_junction(body)) {
    return entity + " is " + literal_phrase(body.left()) + " or " +
           literal_phrase(body.right()) + ".";
  }
  throw RenderError("no template for fact " + body.to_string());
}

std::string render_question(const Question& question) {
  return question.subject.name + " is " + question.attribute.name +
         ". True/False?";
}

Rule parse_rule(const std::string& text) {
  Scanner scanner(text);
  Formula body = Formula::truth();
  if (scanner.try_word("If")) {
    Formula antecedent = parse_clause(scanner, "someone", "is");
    scanner.expect_word("then");
    Formula consequent = parse_clause(scanner, "they", "are");
    scanner.expect_char('.');
    body = Formula::implication(std::move(antecedent), std::move(consequent));
  } else if (scanner.try_word("It")) {
    Formula negated = parse_negated_group(scanner, "someone", "is");
    if (scanner.try_char('.')) {
      body = std::move(negated);
    } else {
      scanner.expect_char(',');
      scanner.expect_word("or");
      Formula second = parse_clause(scanner, "they", "are");
      scanner.expect_char('.');
      body = Formula::disjunction(std::move(negated), std::move(second));
    }
  } else if (scanner.try_word("Someone")) {
    scanner.expect_word("is");
    const std::size_t at = scanner.pos();
    Formula first = parse_group(scanner, Subject{});
    if (scanner.try_char('.')) {
      if (first.kind() != Formula::Kind::Or) {
        throw ParseError("rule disjunction needs two alternatives", at);
      }
      body = std::move(first);
    } else {
      scanner.expect_char(',');
      scanner.expect_word("or");
      Formula second = parse_clause(scanner, "they", "are");
      scanner.expect_char('.');
      body = Formula::disjunction(std::move(first), std::move(second));
    }
  } else {
    throw ParseError("expected a rule sentence", scanner.pos());
  }
  scanner.expect_end();
  return Rule{"", std::move(body)};
}

Fact parse_fact(const std::string& text) {
  Scanner scanner(text);
  const std::size_t at = scanner.pos();
  const std::string entity = scanner.next_word();
  if (!is_capitalized_word(entity)) {
    throw ParseError("expected a capitalized entity, got '" + entity + "'",
                     at);
  }
  scanner.expect_word("is");
  const Subject subject{entity};
  Formula body = parse_literal(scanner, subject, 1);
  if (scanner.try_word("or")) {
    Formula second = parse_literal(scanner, subject, 1);
    body = Formula::disjunction(std::move(body), std::move(second));
  }
  scanner.expect_char('.');
  scanner.expect_end();
  return Fact{std::move(body)};
}

Question parse_question(const std::string& text) {
  Scanner scanner(text);
  const std::size_t at = scanner.pos();
  const std::string entity = scanner.next_word();
  if (!is_capitalized_word(entity)) {
    throw ParseError("expected a capitalized entity, got '" + entity + "'",
                     at);
  }
  scanner.expect_word("is");
  const std::size_t attr_at = scanner.pos();
  const std::string attribute = scanner.next_word();
  if (!is_lower_word(attribute) || is_reserved_word(attribute)) {
    throw ParseError("expected an attribute, got '" + attribute + "'",
                     attr_at);
  }
  scanner.expect_char('.');
  scanner.expect_word("True");
  scanner.expect_char('/');
  scanner.expect_word("False");
  scanner.expect_char('?');
  scanner.expect_end();
  return Question{Entity{entity}, Attribute{attribute}, false};
}

std::string serialize_prompt(const std::vector<std::string>& facts,
                             const std::vector<std::string>& rules,
                             const std::string& question) {
  std::string prompt;
  for (const std::string& sentence : facts) {
    if (!prompt.empty()) prompt += ' ';
    prompt += sentence;
  }
  for (const std::string& sentence : rules) {
    if (!prompt.empty()) prompt += ' ';
    prompt += sentence;
  }
  if (!prompt.empty()) prompt += ' ';
  prompt += question;
  return prompt;
}

RenderedInstance render_instance(const Theory& theory,
                                 const Question& question) {
  RenderedInstance out;
  for (const Fact& fact : theory.facts) {
    out.facts_text.push_back(render_fact(fact));
  }
  for (const Rule& rule : theory.rules) {
    out.rules_text.push_back(render_rule(rule));
  }
  out.question_text = render_question(question);
  out.prompt =
      serialize_prompt(out.facts_text, out.rules_text, out.question_text);
  return out;
}

ParsedInstance parse_instance_lines(const std::vector<std::string>& lines) {
  ParsedInstance instance;
  int rule_counter = 0;
  for (const std::string& raw : lines) {
    std::string line = raw;
    while (!line.empty() && (line.back() == '\n' || line.back() == '\r' ||
                             line.back() == ' ')) {
      line.pop_back();
    }
    if (line.empty()) continue;
    if (line.size() >= 11 && line.substr(line.size() - 11) == "True/False?") {
      instance.questions.push_back(parse_question(line));
    } else if (line.rfind("If ", 0) == 0 || line.rfind("Someone ", 0) == 0 ||
               line.rfind("It ", 0) == 0) {
      Rule rule = parse_rule(line);
      rule.id = "rule" + std::to_string(++rule_counter);
      instance.theory.rules.push_back(std::move(rule));
    } else {
      instance.theory.facts.push_back(parse_fact(line));
    }
  }

  // Entity and vocabulary are reconstructed from the parsed sentences.
  for (const Fact& fact : instance.theory.facts) {
    const Formula probe = is_literal(fact.body)
                              ? literal_atom(fact.body)
                              : literal_atom(fact.body.left());
    instance.theory.entity = *probe.entity();
    break;
  }
  if (instance.theory.facts.empty() && !instance.questions.empty()) {
    instance.theory.entity = instance.questions.front().subject;
  }

  auto add_attrs = [&](const Formula& formula) {
    for (const Attribute& attr : atoms_of(formula)) {
      auto& vocab = instance.theory.vocabulary;
      if (std::find(vocab.begin(), vocab.end(), attr) == vocab.end()) {
        vocab.push_back(attr);
      }
    }
  };
  for (const Fact& fact : instance.theory.facts) add_attrs(fact.body);
  for (const Rule& rule : instance.theory.rules) add_attrs(rule.body);
  for (const Question& question : instance.questions) {
    add_attrs(Formula::atom(question.attribute));
  }
  return instance;
}

}  // namespace rulebench
