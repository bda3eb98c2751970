/* Copyright 2026 The Pavelka Authors. All Rights Reserved.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

#include "pavelka/syntax.h"

#include <cctype>
#include <optional>
#include <sstream>
#include <vector>

namespace pavelka {
namespace {

enum class Tok {
  kIdent,
  kNumber,
  kIff,      // <->
  kArrow,    // ->
  kMinAnd,   // /\ (fuzzy)
  kMaxOr,    // \/ (fuzzy)
  kAmp,      // &
  kBar,      // |
  kStar,     // *
  kTilde,    // ~
  kBang,     // !
  kLParen,
  kRParen,
  kEnd,
};

struct Token {
  Tok kind;
  std::string text;
  SourceSpan span;
};

std::string_view TokName(Tok t) {
  switch (t) {
    case Tok::kIdent:
      return "identifier";
    case Tok::kNumber:
      return "number";
    case Tok::kIff:
      return "'<->'";
    case Tok::kArrow:
      return "'->'";
    case Tok::kMinAnd:
      return "'/\\'";
    case Tok::kMaxOr:
      return "'\\/'";
    case Tok::kAmp:
      return "'&'";
    case Tok::kBar:
      return "'|'";
    case Tok::kStar:
      return "'*'";
    case Tok::kTilde:
      return "'~'";
    case Tok::kBang:
      return "'!'";
    case Tok::kLParen:
      return "'('";
    case Tok::kRParen:
      return "')'";
    case Tok::kEnd:
      return "end of input";
  }
  return "?";
}

bool IsIdentStart(char c) {
  return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
}
bool IsIdentChar(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}
bool IsDigit(char c) { return std::isdigit(static_cast<unsigned char>(c)); }

std::vector<Token> Lex(std::string_view text, const ParseOptions& options) {
  std::vector<Token> out;
  int line = options.origin.line;
  int col = options.origin.column;
  std::size_t i = 0;
  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n; ++k) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
      ++i;
    }
  };
  while (i < text.size()) {
    char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
      continue;
    }
    SourceSpan span{line, col};
    auto starts = [&](std::string_view s) { return text.substr(i, s.size()) == s; };
    if (IsIdentStart(c) || (c == '$' && options.allow_metavariables)) {
      std::size_t j = i + 1;
      while (j < text.size() && IsIdentChar(text[j])) ++j;
      if (c == '$' && j == i + 1) {
        throw ParseError("empty metavariable name", span);
      }
      out.push_back({Tok::kIdent, std::string(text.substr(i, j - i)), span});
      advance(j - i);
      continue;
    }
    if (IsDigit(c) || (c == '.' && i + 1 < text.size() && IsDigit(text[i + 1]))) {
      std::size_t j = i;
      while (j < text.size() && IsDigit(text[j])) ++j;
      if (j < text.size() && text[j] == '.') {
        ++j;
        while (j < text.size() && IsDigit(text[j])) ++j;
      } else if (j + 1 < text.size() && text[j] == '/' && IsDigit(text[j + 1])) {
        ++j;
        while (j < text.size() && IsDigit(text[j])) ++j;
      }
      out.push_back({Tok::kNumber, std::string(text.substr(i, j - i)), span});
      advance(j - i);
      continue;
    }
    struct Op {
      std::string_view text;
      Tok tok;
    };
    static constexpr Op kOps[] = {
        {"<->", Tok::kIff},   {"->", Tok::kArrow}, {"/\\", Tok::kMinAnd},
        {"\\/", Tok::kMaxOr}, {"&", Tok::kAmp},    {"|", Tok::kBar},
        {"*", Tok::kStar},    {"~", Tok::kTilde},  {"!", Tok::kBang},
        {"(", Tok::kLParen},  {")", Tok::kRParen},
    };
    bool matched = false;
    for (const Op& op : kOps) {
      if (starts(op.text)) {
        out.push_back({op.tok, std::string(op.text), span});
        advance(op.text.size());
        matched = true;
        break;
      }
    }
    if (!matched) {
      throw ParseError(std::string("unexpected character '") + c + "'", span);
    }
  }
  out.push_back({Tok::kEnd, "", SourceSpan{line, col}});
  return out;
}

class Parser {
 public:
  Parser(std::vector<Token> tokens, const ParseOptions& options)
      : tokens_(std::move(tokens)), options_(options) {}

  Fuzzy ParseFuzzyTop() {
    Fuzzy f = ParseFuzzy();
    Expect(Tok::kEnd);
    return f;
  }

  Crisp ParseCrispTop() {
    Crisp c = ParseCrispFormula();
    Expect(Tok::kEnd);
    return c;
  }

 private:
  const Token& Peek(std::size_t ahead = 0) const {
    std::size_t k = pos_ + ahead;
    return k < tokens_.size() ? tokens_[k] : tokens_.back();
  }
  Token Take() { return tokens_[pos_++]; }
  bool Accept(Tok t) {
    if (Peek().kind != t) return false;
    ++pos_;
    return true;
  }
  Token Expect(Tok t) {
    if (Peek().kind != t) {
      throw ParseError("expected " + std::string(TokName(t)) + ", found " +
                           Describe(Peek()),
                       Peek().span);
    }
    return Take();
  }
  static std::string Describe(const Token& t) {
    if (t.kind == Tok::kEnd) return "end of input";
    return "'" + t.text + "'";
  }

  // fuzzy := impl ("<->" impl)?
  Fuzzy ParseFuzzy() {
    Fuzzy lhs = ParseImpl();
    if (Accept(Tok::kIff)) {
      Fuzzy rhs = ParseImpl();
      if (Peek().kind == Tok::kIff) {
        throw ParseError("'<->' is not associative; add parentheses",
                         Peek().span);
      }
      return Fuzzy::Equiv(lhs, rhs);
    }
    return lhs;
  }

  // impl := disj ("->" impl)?
  Fuzzy ParseImpl() {
    Fuzzy lhs = ParseDisj();
    if (Accept(Tok::kArrow)) return Fuzzy::Impl(lhs, ParseImpl());
    return lhs;
  }

  Fuzzy ParseDisj() {
    Fuzzy acc = ParseConj();
    std::optional<Tok> op;
    while (Peek().kind == Tok::kMaxOr || Peek().kind == Tok::kBar) {
      const Token& t = Peek();
      if (op && *op != t.kind) {
        throw ParseError(
            "mixing '\\/' and '|' at one level requires parentheses", t.span);
      }
      op = t.kind;
      Take();
      Fuzzy rhs = ParseConj();
      acc = t.kind == Tok::kMaxOr ? Fuzzy::MaxDisj(acc, rhs)
                                  : Fuzzy::StrongDisj(acc, rhs);
    }
    return acc;
  }

  Fuzzy ParseConj() {
    Fuzzy acc = ParseUnary();
    std::optional<Tok> op;
    while (Peek().kind == Tok::kMinAnd || Peek().kind == Tok::kAmp ||
           Peek().kind == Tok::kStar) {
      Token t = Peek();
      if (op && *op != t.kind) {
        throw ParseError(
            "mixing '/\\', '&' and '*' at one level requires parentheses",
            t.span);
      }
      if (t.kind == Tok::kStar && !options_.allow_product) {
        throw ParseError("product conjunction '*' is not allowed in this mode",
                         t.span);
      }
      op = t.kind;
      Take();
      Fuzzy rhs = ParseUnary();
      switch (t.kind) {
        case Tok::kMinAnd:
          acc = Fuzzy::MinConj(acc, rhs);
          break;
        case Tok::kAmp:
          acc = Fuzzy::StrongConj(acc, rhs);
          break;
        default:
          acc = Fuzzy::ProdConj(acc, rhs);
      }
    }
    return acc;
  }

  Fuzzy ParseUnary() {
    if (Accept(Tok::kTilde)) return Fuzzy::Neg(ParseUnary());
    return ParsePrim();
  }

  Fuzzy ParsePrim() {
    const Token& t = Peek();
    switch (t.kind) {
      case Tok::kNumber: {
        auto r = Rational::TryParse(t.text);
        if (!r) throw ParseError("malformed number '" + t.text + "'", t.span);
        if (!r->is_degree()) {
          throw ParseError("truth constant " + t.text + " is outside [0,1]",
                           t.span);
        }
        Take();
        return Fuzzy::Const(*r);
      }
      case Tok::kIdent: {
        if (t.text == "f") {
          Take();
          if (Peek().kind != Tok::kLParen) {
            throw ParseError("expected '(' after 'f'", Peek().span);
          }
          Take();
          Crisp body = ParseCrispFormula();
          Expect(Tok::kRParen);
          return Fuzzy::Atom(body);
        }
        Take();
        return Fuzzy::Var(t.text);
      }
      case Tok::kLParen: {
        Take();
        Fuzzy inner = ParseFuzzy();
        Expect(Tok::kRParen);
        return inner;
      }
      default:
        throw ParseError("expected a formula, found " + Describe(t), t.span);
    }
  }

  // crisp := cimpl ("<->" cimpl)?
  Crisp ParseCrispFormula() {
    Crisp lhs = ParseCrispImpl();
    if (Accept(Tok::kIff)) {
      Crisp rhs = ParseCrispImpl();
      if (Peek().kind == Tok::kIff) {
        throw ParseError("'<->' is not associative; add parentheses",
                         Peek().span);
      }
      return Crisp::Iff(lhs, rhs);
    }
    return lhs;
  }

  Crisp ParseCrispImpl() {
    Crisp lhs = ParseCrispOr();
    if (Accept(Tok::kArrow)) return Crisp::Implies(lhs, ParseCrispImpl());
    return lhs;
  }

  Crisp ParseCrispOr() {
    Crisp acc = ParseCrispAnd();
    while (Accept(Tok::kBar)) acc = Crisp::Or(acc, ParseCrispAnd());
    return acc;
  }

  Crisp ParseCrispAnd() {
    Crisp acc = ParseCrispUnary();
    while (Accept(Tok::kAmp)) acc = Crisp::And(acc, ParseCrispUnary());
    return acc;
  }

  Crisp ParseCrispUnary() {
    if (Accept(Tok::kBang)) return Crisp::Not(ParseCrispUnary());
    const Token& t = Peek();
    switch (t.kind) {
      case Tok::kIdent:
        Take();
        if (t.text == "true") return Crisp::True();
        if (t.text == "false") return Crisp::False();
        return Crisp::Var(t.text);
      case Tok::kLParen: {
        Take();
        Crisp inner = ParseCrispFormula();
        Expect(Tok::kRParen);
        return inner;
      }
      default:
        throw ParseError("expected a crisp formula, found " + Describe(t),
                         t.span);
    }
  }

  std::vector<Token> tokens_;
  const ParseOptions& options_;
  std::size_t pos_ = 0;
};

// Printer precedence levels; higher binds tighter.
int Level(const Fuzzy& f) {
  switch (f.kind()) {
    case Fuzzy::Kind::kEquiv:
      return 0;
    case Fuzzy::Kind::kImpl:
      return 1;
    case Fuzzy::Kind::kMaxDisj:
    case Fuzzy::Kind::kStrongDisj:
      return 2;
    case Fuzzy::Kind::kMinConj:
    case Fuzzy::Kind::kStrongConj:
    case Fuzzy::Kind::kProdConj:
      return 3;
    case Fuzzy::Kind::kNeg:
      return 4;
    default:
      return 5;
  }
}

std::string_view OpText(Fuzzy::Kind k) {
  switch (k) {
    case Fuzzy::Kind::kEquiv:
      return " <-> ";
    case Fuzzy::Kind::kImpl:
      return " -> ";
    case Fuzzy::Kind::kMaxDisj:
      return " \\/ ";
    case Fuzzy::Kind::kStrongDisj:
      return " | ";
    case Fuzzy::Kind::kMinConj:
      return " /\\ ";
    case Fuzzy::Kind::kStrongConj:
      return " & ";
    case Fuzzy::Kind::kProdConj:
      return " * ";
    default:
      return "";
  }
}

void PrintTo(const Crisp& c, std::string& out);

int Level(const Crisp& c) {
  switch (c.kind()) {
    case Crisp::Kind::kIff:
      return 0;
    case Crisp::Kind::kImplies:
      return 1;
    case Crisp::Kind::kOr:
      return 2;
    case Crisp::Kind::kAnd:
      return 3;
    case Crisp::Kind::kNot:
      return 4;
    default:
      return 5;
  }
}

void PrintChild(const Crisp& c, bool parens, std::string& out) {
  if (parens) out += '(';
  PrintTo(c, out);
  if (parens) out += ')';
}

void PrintTo(const Crisp& c, std::string& out) {
  switch (c.kind()) {
    case Crisp::Kind::kVar:
      out += c.name();
      return;
    case Crisp::Kind::kTrue:
      out += "true";
      return;
    case Crisp::Kind::kFalse:
      out += "false";
      return;
    case Crisp::Kind::kNot:
      out += '!';
      PrintChild(c.operand(), Level(c.operand()) < 4, out);
      return;
    default:
      break;
  }
  int level = Level(c);
  const Crisp& a = c.lhs();
  const Crisp& b = c.rhs();
  std::string_view op;
  bool left_parens = false;
  bool right_parens = false;
  switch (c.kind()) {
    case Crisp::Kind::kIff:
      op = " <-> ";
      left_parens = Level(a) <= 0;
      right_parens = Level(b) <= 0;
      break;
    case Crisp::Kind::kImplies:
      op = " -> ";
      left_parens = Level(a) <= 1;
      right_parens = Level(b) < 1;
      break;
    default:
      op = c.kind() == Crisp::Kind::kOr ? " | " : " & ";
      left_parens = Level(a) < level;
      right_parens = Level(b) <= level;
  }
  PrintChild(a, left_parens, out);
  out += op;
  PrintChild(b, right_parens, out);
}

void PrintTo(const Fuzzy& f, std::string& out);

void PrintChild(const Fuzzy& f, bool parens, std::string& out) {
  if (parens) out += '(';
  PrintTo(f, out);
  if (parens) out += ')';
}

void PrintTo(const Fuzzy& f, std::string& out) {
  switch (f.kind()) {
    case Fuzzy::Kind::kVar:
      out += f.name();
      return;
    case Fuzzy::Kind::kAtom:
      out += "f(";
      PrintTo(f.body(), out);
      out += ')';
      return;
    case Fuzzy::Kind::kConst:
      out += f.value().compact_str();
      return;
    case Fuzzy::Kind::kNeg:
      out += '~';
      PrintChild(f.operand(), Level(f.operand()) < 4, out);
      return;
    default:
      break;
  }
  const Fuzzy& a = f.lhs();
  const Fuzzy& b = f.rhs();
  int level = Level(f);
  bool left_parens = false;
  bool right_parens = false;
  switch (f.kind()) {
    case Fuzzy::Kind::kEquiv:
      left_parens = Level(a) <= 0;
      right_parens = Level(b) <= 0;
      break;
    case Fuzzy::Kind::kImpl:
      left_parens = Level(a) <= 1;
      right_parens = Level(b) < 1;
      break;
    default:
      // Left-associative levels: a same-operator left child needs no
      // parentheses; any other operator at the same level does.
      left_parens = Level(a) < level || (Level(a) == level && a.kind() != f.kind());
      right_parens = Level(b) <= level;
  }
  PrintChild(a, left_parens, out);
  out += OpText(f.kind());
  PrintChild(b, right_parens, out);
}

std::string_view Trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
    s.remove_prefix(1);
  }
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
    s.remove_suffix(1);
  }
  return s;
}

// Column (1-based) of `part` inside `line`, assuming it is a substring view.
int ColumnOf(std::string_view line, std::string_view part) {
  return static_cast<int>(part.data() - line.data()) + 1;
}

std::string_view StripComment(std::string_view line) {
  auto hash = line.find('#');
  return hash == std::string_view::npos ? line : line.substr(0, hash);
}

std::vector<std::string_view> SplitLines(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto nl = text.find('\n', start);
    if (nl == std::string_view::npos) {
      lines.push_back(text.substr(start));
      break;
    }
    std::string_view line = text.substr(start, nl - start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    lines.push_back(line);
    start = nl + 1;
  }
  return lines;
}

Rational ParseDegree(std::string_view text, SourceSpan span) {
  auto r = Rational::TryParse(text);
  if (!r) throw ParseError("malformed rational '" + std::string(text) + "'", span);
  if (!r->is_degree()) {
    throw ParseError("degree " + std::string(text) + " is outside [0,1]", span);
  }
  return *r;
}

std::vector<std::string_view> SplitWords(std::string_view s) {
  std::vector<std::string_view> words;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    std::size_t j = i;
    while (j < s.size() && !std::isspace(static_cast<unsigned char>(s[j]))) ++j;
    if (j > i) words.push_back(s.substr(i, j - i));
    i = j;
  }
  return words;
}

std::optional<std::size_t> ParseIndex(std::string_view s) {
  if (s.empty() || s.size() > 9) return std::nullopt;
  std::size_t n = 0;
  for (char c : s) {
    if (!IsDigit(c)) return std::nullopt;
    n = n * 10 + static_cast<std::size_t>(c - '0');
  }
  return n;
}

}  // namespace

Fuzzy ParseFormula(std::string_view text, const ParseOptions& options) {
  Parser parser(Lex(text, options), options);
  return parser.ParseFuzzyTop();
}

Crisp ParseCrisp(std::string_view text, const ParseOptions& options) {
  Parser parser(Lex(text, options), options);
  return parser.ParseCrispTop();
}

std::string Print(const Fuzzy& f) {
  std::string out;
  PrintTo(f, out);
  return out;
}

std::string Print(const Crisp& c) {
  std::string out;
  PrintTo(c, out);
  return out;
}

GradedTheory ParseTheory(std::string_view text) {
  std::optional<GradedTheory> theory;
  int line_no = 0;
  for (std::string_view raw : SplitLines(text)) {
    ++line_no;
    std::string_view line = Trim(StripComment(raw));
    if (line.empty()) continue;
    SourceSpan line_span{line_no, ColumnOf(raw, line)};
    auto words = SplitWords(line);
    if (!theory) {
      if (words.size() != 2 || words[0] != "mode") {
        throw ParseError("theory must start with 'mode <RPL|RPL+|FP|FP+|FPS>'",
                         line_span);
      }
      auto mode = ParseModeName(words[1]);
      if (!mode) {
        throw ParseError("unknown mode '" + std::string(words[1]) + "'",
                         SourceSpan{line_no, ColumnOf(raw, words[1])});
      }
      theory.emplace(*mode);
      continue;
    }
    if (words[0] == "mode") {
      throw ParseError("duplicate mode directive", line_span);
    }
    if (words[0] != "axiom") {
      throw ParseError("expected 'axiom <formula> >= <degree>'", line_span);
    }
    std::string_view rest = line.substr(5);
    auto ge = rest.rfind(">=");
    if (ge == std::string_view::npos) {
      throw ParseError("axiom line lacks '>= <degree>'", line_span);
    }
    std::string_view formula_text = Trim(rest.substr(0, ge));
    std::string_view degree_text = Trim(rest.substr(ge + 2));
    if (formula_text.empty()) throw ParseError("empty axiom formula", line_span);
    ParseOptions options;
    options.allow_product = AllowsProduct(theory->mode());
    options.origin = SourceSpan{line_no, ColumnOf(raw, formula_text)};
    Fuzzy formula = ParseFormula(formula_text, options);
    Rational degree = ParseDegree(
        degree_text, SourceSpan{line_no, ColumnOf(raw, degree_text)});
    theory->Add(formula, degree);
  }
  if (!theory) throw ParseError("missing mode directive", SourceSpan{1, 1});
  return *theory;
}

std::string PrintTheory(const GradedTheory& theory) {
  std::string out = "mode " + std::string(ModeName(theory.mode())) + "\n";
  for (const auto& [formula, degree] : theory.axioms()) {
    out += "axiom " + Print(formula) + " >= " + degree.compact_str() + "\n";
  }
  return out;
}

Proof ParseProof(std::string_view text) {
  Proof proof;
  int line_no = 0;
  for (std::string_view raw : SplitLines(text)) {
    ++line_no;
    std::string_view line = Trim(StripComment(raw));
    if (line.empty()) continue;
    SourceSpan line_span{line_no, ColumnOf(raw, line)};
    const std::size_t expected = proof.steps.size() + 1;

    auto colon = line.find(':');
    if (colon == std::string_view::npos) {
      throw ParseError("expected '<n>: <formula> @ <degree> by <just>'",
                       line_span);
    }
    auto number = ParseIndex(Trim(line.substr(0, colon)));
    if (!number) throw ParseError("malformed step number", line_span);
    if (*number != expected) {
      throw ParseError("step numbered " + std::to_string(*number) +
                           ", expected " + std::to_string(expected),
                       line_span);
    }
    std::string_view rest = line.substr(colon + 1);
    auto by = rest.rfind(" by ");
    if (by == std::string_view::npos) {
      throw ParseError("step lacks 'by <justification>'", line_span);
    }
    std::string_view just_text = Trim(rest.substr(by + 4));
    std::string_view head = rest.substr(0, by);
    auto at = head.rfind('@');
    if (at == std::string_view::npos) {
      throw ParseError("step lacks '@ <degree>'", line_span);
    }
    std::string_view formula_text = Trim(head.substr(0, at));
    std::string_view degree_text = Trim(head.substr(at + 1));
    if (formula_text.empty()) throw ParseError("empty step formula", line_span);

    ParseOptions options;
    options.origin = SourceSpan{line_no, ColumnOf(raw, formula_text)};
    Fuzzy formula = ParseFormula(formula_text, options);
    Rational degree = ParseDegree(
        degree_text, SourceSpan{line_no, ColumnOf(raw, degree_text)});

    SourceSpan just_span{line_no, ColumnOf(raw, just_text)};
    auto words = SplitWords(just_text);
    if (words.empty()) throw ParseError("empty justification", just_span);
    auto ref = [&](std::string_view w) -> std::size_t {
      auto idx = ParseIndex(w);
      if (!idx || *idx == 0) {
        throw ParseError("malformed step reference '" + std::string(w) + "'",
                         just_span);
      }
      if (*idx >= expected) {
        throw ParseError("step " + std::to_string(expected) +
                             " references step " + std::to_string(*idx) +
                             "; only earlier steps may be used",
                         just_span);
      }
      return *idx;
    };
    auto arity = [&](std::size_t n) {
      if (words.size() != n + 1) {
        throw ParseError("'" + std::string(words[0]) + "' takes " +
                             std::to_string(n) + " argument(s)",
                         just_span);
      }
    };
    Justification just;
    if (words[0] == "hyp") {
      arity(0);
      just = TheoryAxiomJust{};
    } else if (words[0] == "taut") {
      arity(0);
      just = TautologyJust{};
    } else if (words[0] == "mp") {
      arity(2);
      just = ModusPonensJust{ref(words[1]), ref(words[2])};
    } else if (words[0] == "tci") {
      arity(2);
      just = TruthConstJust{ref(words[1]), ParseDegree(words[2], just_span)};
    } else if (auto schema = ParseSchemaTag(words[0])) {
      arity(0);
      just = AxiomJust{*schema};
    } else {
      throw ParseError("unknown justification '" + std::string(words[0]) + "'",
                       just_span);
    }
    proof.steps.push_back({formula, degree, just});
  }
  return proof;
}

std::string PrintProof(const Proof& proof) {
  std::ostringstream out;
  for (std::size_t i = 0; i < proof.steps.size(); ++i) {
    const ProofStep& s = proof.steps[i];
    out << (i + 1) << ": " << Print(s.formula) << " @ "
        << s.degree.compact_str() << " by " << JustificationText(s.just)
        << "\n";
  }
  return out.str();
}

}  // namespace pavelka
