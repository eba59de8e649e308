// Copyright 2026 The wnk authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "wnk/parser.hpp"

#include <cctype>
#include <string>
#include <vector>

namespace wnk {

namespace {

enum class Tok : uint8_t {
  End,
  Ident,
  Int,
  LParen,
  RParen,
  LBrace,
  RBrace,
  LBracket,
  RBracket,
  Semi,
  Comma,
  Colon,
  Plus,
  Star,
  At,
  Amp,
  Pipe,
  Bang,
  Eq,
  NotEq,
  AssignOp,  // :=
  DotDot,
};

struct Token {
  Tok kind;
  std::string text;
  int line;
  int col;
};

class Lexer {
 public:
  explicit Lexer(std::string_view src) : src_(src) { advance(); }

  const Token& peek() const { return tok_; }

  Token next() {
    Token t = tok_;
    advance();
    return t;
  }

  [[noreturn]] void fail(const Token& at, const std::string& msg) const {
    throw ParseError(std::to_string(at.line) + ":" + std::to_string(at.col) +
                     ": " + msg);
  }

  /// With the current token being '(', scans the raw literal text up to the
  /// matching ')' without tokenizing it (weight literals use characters like
  /// '-', '.', '%' that are not tokens of the policy grammar).
  std::string raw_literal_in_parens() {
    if (tok_.kind != Tok::LParen) fail(tok_, "expected '(' after weight");
    size_t start = tok_start_ + 1;
    size_t end = src_.find(')', start);
    if (end == std::string_view::npos)
      fail(tok_, "unterminated weight literal");
    std::string raw(src_.substr(start, end - start));
    pos_ = end + 1;  // past ')'
    advance();
    return raw;
  }

 private:
  void skip_ws() {
    while (pos_ < src_.size()) {
      char c = src_[pos_];
      if (c == '\n') {
        ++line_;
        col_ = 1;
        ++pos_;
      } else if (isspace(static_cast<unsigned char>(c))) {
        ++col_;
        ++pos_;
      } else if (c == '/' && pos_ + 1 < src_.size() && src_[pos_ + 1] == '/') {
        while (pos_ < src_.size() && src_[pos_] != '\n') ++pos_;
      } else {
        break;
      }
    }
  }

  void advance() {
    skip_ws();
    tok_start_ = pos_;
    tok_.line = line_;
    tok_.col = col_;
    tok_.text.clear();
    if (pos_ >= src_.size()) {
      tok_.kind = Tok::End;
      return;
    }
    char c = src_[pos_];
    auto take = [&](Tok k, size_t n) {
      tok_.kind = k;
      tok_.text = std::string(src_.substr(pos_, n));
      pos_ += n;
      col_ += static_cast<int>(n);
    };
    if (isalpha(static_cast<unsigned char>(c)) || c == '_') {
      size_t n = 0;
      while (pos_ + n < src_.size() &&
             (isalnum(static_cast<unsigned char>(src_[pos_ + n])) ||
              src_[pos_ + n] == '_'))
        ++n;
      take(Tok::Ident, n);
      return;
    }
    if (isdigit(static_cast<unsigned char>(c))) {
      size_t n = 0;
      while (pos_ + n < src_.size() &&
             isdigit(static_cast<unsigned char>(src_[pos_ + n])))
        ++n;
      take(Tok::Int, n);
      return;
    }
    switch (c) {
      case '(':
        take(Tok::LParen, 1);
        return;
      case ')':
        take(Tok::RParen, 1);
        return;
      case '{':
        take(Tok::LBrace, 1);
        return;
      case '}':
        take(Tok::RBrace, 1);
        return;
      case '[':
        take(Tok::LBracket, 1);
        return;
      case ']':
        take(Tok::RBracket, 1);
        return;
      case ';':
        take(Tok::Semi, 1);
        return;
      case ',':
        take(Tok::Comma, 1);
        return;
      case '+':
        take(Tok::Plus, 1);
        return;
      case '*':
        take(Tok::Star, 1);
        return;
      case '@':
        take(Tok::At, 1);
        return;
      case '&':
        take(Tok::Amp, 1);
        return;
      case '|':
        take(Tok::Pipe, 1);
        return;
      case '=':
        take(Tok::Eq, 1);
        return;
      case '!':
        if (pos_ + 1 < src_.size() && src_[pos_ + 1] == '=') {
          take(Tok::NotEq, 2);
        } else {
          take(Tok::Bang, 1);
        }
        return;
      case ':':
        if (pos_ + 1 < src_.size() && src_[pos_ + 1] == '=') {
          take(Tok::AssignOp, 2);
        } else {
          take(Tok::Colon, 1);
        }
        return;
      case '.':
        if (pos_ + 1 < src_.size() && src_[pos_ + 1] == '.') {
          take(Tok::DotDot, 2);
        } else {
          break;
        }
        return;
      default:
        break;
    }
    // UTF-8 circled plus as a choice operator
    if (static_cast<unsigned char>(c) == 0xE2 && pos_ + 2 < src_.size() &&
        static_cast<unsigned char>(src_[pos_ + 1]) == 0x8A &&
        static_cast<unsigned char>(src_[pos_ + 2]) == 0x95) {
      take(Tok::Plus, 3);
      return;
    }
    tok_.kind = Tok::End;
    throw ParseError(std::to_string(line_) + ":" + std::to_string(col_) +
                     ": unexpected character '" + std::string(1, c) + "'");
  }

  std::string_view src_;
  size_t pos_ = 0;
  size_t tok_start_ = 0;
  int line_ = 1;
  int col_ = 1;
  Token tok_{};
};

class Parser {
 public:
  Parser(std::string_view src, const Semiring& sr, uint64_t packet_cap)
      : lex_(src), sr_(sr), packet_cap_(packet_cap) {}

  ParsedPolicy parse_file(const FieldSchema* schema_override) {
    ParsedPolicy out;
    if (at_ident("syntax")) {
      lex_.next();
      Token v = expect(Tok::Int, "syntax version number");
      out.syntax_version = std::stoi(v.text);
      if (out.syntax_version != 1)
        lex_.fail(v, "unsupported syntax version " + v.text);
      expect(Tok::Semi, "';' after syntax version");
    }
    if (at_ident("fields")) {
      out.schema = parse_fields();
      if (schema_override && !(out.schema == *schema_override))
        throw ValidationError(
            "schema declared in policy file differs from the supplied one");
    } else if (schema_override) {
      out.schema = *schema_override;
    } else {
      throw ValidationError(
          "policy file declares no fields block and no schema was supplied");
    }
    schema_ = &out.schema;
    out.policy = parse_choice();
    expect(Tok::End, "end of input after policy");
    return out;
  }

  PolPtr parse_policy_only(const FieldSchema& schema) {
    schema_ = &schema;
    PolPtr p = parse_choice();
    expect(Tok::End, "end of input after policy");
    return p;
  }

  PredPtr parse_predicate_only(const FieldSchema& schema) {
    schema_ = &schema;
    PredPtr t = parse_pred_or();
    expect(Tok::End, "end of input after predicate");
    return t;
  }

  FieldSchema parse_fields_only() {
    FieldSchema s = parse_fields();
    expect(Tok::End, "end of input after fields block");
    return s;
  }

 private:
  bool at_ident(std::string_view kw) const {
    return lex_.peek().kind == Tok::Ident && lex_.peek().text == kw;
  }

  Token expect(Tok kind, const std::string& what) {
    if (lex_.peek().kind != kind)
      lex_.fail(lex_.peek(), "expected " + what);
    return lex_.next();
  }

  Token expect_ident(const std::string& kw) {
    if (!at_ident(kw)) lex_.fail(lex_.peek(), "expected '" + kw + "'");
    return lex_.next();
  }

  FieldSchema parse_fields() {
    expect_ident("fields");
    expect(Tok::LBrace, "'{'");
    FieldSchema schema;
    while (lex_.peek().kind != Tok::RBrace) {
      Token name = expect(Tok::Ident, "field name");
      expect(Tok::Colon, "':' after field name");
      expect(Tok::LBracket, "'['");
      std::vector<std::string> values;
      for (;;) {
        Token v = lex_.next();
        if (v.kind != Tok::Ident && v.kind != Tok::Int)
          lex_.fail(v, "expected value name");
        if (v.kind == Tok::Int && lex_.peek().kind == Tok::DotDot) {
          lex_.next();
          Token hi = expect(Tok::Int, "range upper bound");
          long lo_v = std::stol(v.text), hi_v = std::stol(hi.text);
          if (hi_v < lo_v) lex_.fail(hi, "empty value range");
          for (long i = lo_v; i <= hi_v; ++i)
            values.push_back(std::to_string(i));
        } else {
          values.push_back(v.text);
        }
        if (lex_.peek().kind == Tok::Comma) {
          lex_.next();
          continue;
        }
        break;
      }
      expect(Tok::RBracket, "']'");
      expect(Tok::Semi, "';' after field declaration");
      schema.add_field(name.text, std::move(values), packet_cap_);
    }
    lex_.next();  // '}'
    return schema;
  }

  // choice := seq (('+'|'⊕') seq)*
  PolPtr parse_choice() {
    PolPtr p = parse_seq();
    while (lex_.peek().kind == Tok::Plus) {
      lex_.next();
      p = choice(p, parse_seq());
    }
    return p;
  }

  // seq := weigh (';' weigh)*
  PolPtr parse_seq() {
    PolPtr p = parse_weigh();
    while (lex_.peek().kind == Tok::Semi) {
      lex_.next();
      p = seq(p, parse_weigh());
    }
    return p;
  }

  // weigh := 'weight' '(' literal ')' '@' weigh | postfix
  PolPtr parse_weigh() {
    if (at_ident("weight")) {
      Token kw = lex_.next();
      std::string raw = lex_.raw_literal_in_parens();
      expect(Tok::At, "'@' after weight(...)");
      Value w;
      try {
        w = sr_.parse(raw);
      } catch (const ParseError& e) {
        lex_.fail(kw, e.what());
      }
      return weigh(w, parse_weigh());
    }
    return parse_postfix();
  }

  PolPtr parse_postfix() {
    PolPtr p = parse_primary();
    while (lex_.peek().kind == Tok::Star) {
      lex_.next();
      p = star(p);
    }
    return p;
  }

  PolPtr parse_primary() {
    const Token& t = lex_.peek();
    switch (t.kind) {
      case Tok::Ident:
        if (t.text == "dup") {
          lex_.next();
          return dup();
        }
        if (t.text == "skip") {
          lex_.next();
          return skip();
        }
        if (t.text == "drop") {
          lex_.next();
          return drop();
        }
        if (t.text == "true" || t.text == "false")
          return filter(parse_pred_or());
        if (t.text == "if") return parse_if();
        if (t.text == "while") return parse_while();
        return parse_ident_start();
      case Tok::Bang:
        return filter(parse_pred_or());
      case Tok::LParen: {
        lex_.next();
        PolPtr p = parse_choice();
        expect(Tok::RParen, "')'");
        // a parenthesized predicate may continue as a conjunction/disjunction
        if (p->kind == PolKind::Filter &&
            (lex_.peek().kind == Tok::Amp || lex_.peek().kind == Tok::Pipe))
          return filter(parse_pred_rest(p->pred));
        return p;
      }
      default:
        lex_.fail(t, "expected a policy");
    }
  }

  // assignment `f := v` or test `f = v` / `f != v` (continuing as predicate)
  PolPtr parse_ident_start() {
    Token name = lex_.next();
    FieldId f = resolve_field(name);
    const Token& op = lex_.peek();
    if (op.kind == Tok::AssignOp) {
      lex_.next();
      return assign(f, parse_value(f));
    }
    if (op.kind == Tok::Eq || op.kind == Tok::NotEq) {
      bool neg = op.kind == Tok::NotEq;
      lex_.next();
      PredPtr test = pred_test(f, parse_value(f));
      if (neg) test = pred_not(test);
      return filter(parse_pred_rest(test));
    }
    lex_.fail(op, "expected ':=', '=' or '!=' after field name");
  }

  PolPtr parse_if() {
    expect_ident("if");
    PredPtr t = parse_pred_or();
    expect_ident("then");
    PolPtr p = parse_weigh();
    expect_ident("else");
    PolPtr q = parse_weigh();
    // if t then p else q  =  t;p + !t;q
    return choice(seq(filter(t), p), seq(filter(pred_not(t)), q));
  }

  PolPtr parse_while() {
    expect_ident("while");
    PredPtr t = parse_pred_or();
    expect_ident("do");
    PolPtr p = parse_weigh();
    // while t do p  =  (t;p)* ; !t
    return seq(star(seq(filter(t), p)), filter(pred_not(t)));
  }

  // continue a predicate expression whose first factor is already parsed
  PredPtr parse_pred_rest(PredPtr left) {
    while (lex_.peek().kind == Tok::Amp) {
      lex_.next();
      left = pred_and(left, parse_pred_unit());
    }
    while (lex_.peek().kind == Tok::Pipe) {
      lex_.next();
      left = pred_or(left, parse_pred_and());
    }
    return left;
  }

  PredPtr parse_pred_or() {
    PredPtr t = parse_pred_and();
    while (lex_.peek().kind == Tok::Pipe) {
      lex_.next();
      t = pred_or(t, parse_pred_and());
    }
    return t;
  }

  PredPtr parse_pred_and() {
    PredPtr t = parse_pred_unit();
    while (lex_.peek().kind == Tok::Amp) {
      lex_.next();
      t = pred_and(t, parse_pred_unit());
    }
    return t;
  }

  PredPtr parse_pred_unit() {
    const Token& t = lex_.peek();
    if (t.kind == Tok::Bang) {
      lex_.next();
      return pred_not(parse_pred_unit());
    }
    if (t.kind == Tok::LParen) {
      lex_.next();
      PredPtr inner = parse_pred_or();
      expect(Tok::RParen, "')'");
      return inner;
    }
    if (t.kind == Tok::Ident) {
      if (t.text == "true") {
        lex_.next();
        return pred_true();
      }
      if (t.text == "false") {
        lex_.next();
        return pred_false();
      }
      Token name = lex_.next();
      FieldId f = resolve_field(name);
      const Token& op = lex_.peek();
      if (op.kind == Tok::Eq) {
        lex_.next();
        return pred_test(f, parse_value(f));
      }
      if (op.kind == Tok::NotEq) {
        lex_.next();
        return pred_not(pred_test(f, parse_value(f)));
      }
      lex_.fail(op, "expected '=' or '!=' in test");
    }
    lex_.fail(t, "expected a predicate");
  }

  FieldId resolve_field(const Token& name) {
    try {
      return schema_->field(name.text);
    } catch (const ValidationError& e) {
      lex_.fail(name, e.what());
    }
  }

  ValueId parse_value(FieldId f) {
    Token v = lex_.next();
    if (v.kind != Tok::Ident && v.kind != Tok::Int)
      lex_.fail(v, "expected a value name");
    try {
      return schema_->value(f, v.text);
    } catch (const ValidationError& e) {
      lex_.fail(v, e.what());
    }
  }

  Lexer lex_;
  const Semiring& sr_;
  uint64_t packet_cap_;
  const FieldSchema* schema_ = nullptr;
};

}  // namespace

ParsedPolicy parse_policy_file(std::string_view text, const Semiring& sr,
                               const FieldSchema* schema_override,
                               uint64_t packet_cap) {
  Parser p(text, sr, packet_cap);
  return p.parse_file(schema_override);
}

PolPtr parse_policy(std::string_view text, const FieldSchema& schema,
                    const Semiring& sr) {
  Parser p(text, sr, FieldSchema::kDefaultPacketCap);
  return p.parse_policy_only(schema);
}

PredPtr parse_predicate(std::string_view text, const FieldSchema& schema) {
  Parser p(text, Semiring::get(SemiringId::Boolean),
           FieldSchema::kDefaultPacketCap);
  return p.parse_predicate_only(schema);
}

FieldSchema parse_fields_block(std::string_view text, uint64_t packet_cap) {
  Parser p(text, Semiring::get(SemiringId::Boolean), packet_cap);
  return p.parse_fields_only();
}

}  // namespace wnk
