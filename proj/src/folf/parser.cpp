/*
Copyright 2026 The folf Authors
Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

                http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
*/

#include "folf/parser.hpp"

#include <algorithm>
#include <cctype>
#include <map>

namespace folf {

namespace {

enum class Tok {
  Ident,
  Var,
  LParen,
  RParen,
  Comma,
  Dot,
  Semi,
  If,       // :-
  And,      // &
  Or,       // |
  Arrow,    // ->
  Iff,      // <->
  Minus,    // -
  Eq,       // =
  Neq,      // !=
  Query,    // #query
  Slash,    // / in predicate variable declarations
  End
};

struct Token {
  Tok kind;
  std::string text;
  int line;
  int col;
};

class Lexer {
 public:
  explicit Lexer(std::string_view src) : src_(src) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    for (;;) {
      skip();
      Token t{Tok::End, "", line_, col_};
      if (pos_ >= src_.size()) {
        out.push_back(t);
        return out;
      }
      char c = src_[pos_];
      if (std::isalpha(static_cast<unsigned char>(c)) || std::isdigit(static_cast<unsigned char>(c)) || c == '_') {
        std::size_t start = pos_;
        while (pos_ < src_.size() &&
               (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_'))
          advance();
        t.text = std::string(src_.substr(start, pos_ - start));
        t.kind = std::isupper(static_cast<unsigned char>(c)) ? Tok::Var : Tok::Ident;
        out.push_back(t);
        continue;
      }
      auto two = [&](const char* s) { return src_.substr(pos_, 2) == s; };
      if (src_.substr(pos_, 3) == "<->") {
        t.kind = Tok::Iff;
        advance(3);
      } else if (src_.substr(pos_, 6) == "#query") {
        t.kind = Tok::Query;
        advance(6);
      } else if (two(":-")) {
        t.kind = Tok::If;
        advance(2);
      } else if (two("->")) {
        t.kind = Tok::Arrow;
        advance(2);
      } else if (two("!=")) {
        t.kind = Tok::Neq;
        advance(2);
      } else {
        switch (c) {
          case '(': t.kind = Tok::LParen; break;
          case ')': t.kind = Tok::RParen; break;
          case ',': t.kind = Tok::Comma; break;
          case '.': t.kind = Tok::Dot; break;
          case ';': t.kind = Tok::Semi; break;
          case '&': t.kind = Tok::And; break;
          case '|': t.kind = Tok::Or; break;
          case '-': t.kind = Tok::Minus; break;
          case '=': t.kind = Tok::Eq; break;
          case '/': t.kind = Tok::Slash; break;
          default:
            throw Error(ErrorKind::Syntax, std::to_string(line_) + ":" + std::to_string(col_) +
                                               ": unexpected character '" + std::string(1, c) + "'");
        }
        advance();
      }
      t.text = std::string(src_.substr(pos_ - 1, 1));
      out.push_back(t);
    }
  }

 private:
  void advance(std::size_t n = 1) {
    for (std::size_t i = 0; i < n && pos_ < src_.size(); ++i, ++pos_) {
      if (src_[pos_] == '\n') {
        ++line_;
        col_ = 1;
      } else {
        ++col_;
      }
    }
  }

  void skip() {
    while (pos_ < src_.size()) {
      char c = src_[pos_];
      if (c == '%') {
        while (pos_ < src_.size() && src_[pos_] != '\n') advance();
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        advance();
      } else {
        break;
      }
    }
  }

  std::string_view src_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int col_ = 1;
};

const char* describe(Tok k) {
  switch (k) {
    case Tok::Ident: return "identifier";
    case Tok::Var: return "variable";
    case Tok::LParen: return "'('";
    case Tok::RParen: return "')'";
    case Tok::Comma: return "','";
    case Tok::Dot: return "'.'";
    case Tok::Semi: return "';'";
    case Tok::If: return "':-'";
    case Tok::And: return "'&'";
    case Tok::Or: return "'|'";
    case Tok::Arrow: return "'->'";
    case Tok::Iff: return "'<->'";
    case Tok::Minus: return "'-'";
    case Tok::Eq: return "'='";
    case Tok::Neq: return "'!='";
    case Tok::Query: return "'#query'";
    case Tok::Slash: return "'/'";
    case Tok::End: return "end of input";
  }
  return "?";
}

class Parser {
 public:
  explicit Parser(std::string_view text) : toks_(Lexer(text).run()) {}

  Program program() {
    Program p;
    while (peek().kind != Tok::End) {
      if (accept(Tok::Query)) {
        Formula q = formula();
        expect(Tok::Dot);
        p.queries.push_back(q);
        continue;
      }
      p.rules.push_back(rule());
    }
    p.signature = signature_of(p);
    return p;
  }

  Formula single_formula() {
    Formula f = formula();
    if (peek().kind == Tok::Dot) next();
    if (peek().kind != Tok::End) fail(peek(), std::string("unexpected ") + describe(peek().kind));
    return f;
  }

 private:
  Rule rule() {
    const Token& start = peek();
    Formula head = Formula::bottom();
    if (peek().kind != Tok::If) {
      std::vector<Formula> ds{formula()};
      while (accept(Tok::Semi)) ds.push_back(formula());
      head = Formula::disj(ds);
    }
    std::vector<Formula> items;
    bool has_body = false;
    if (accept(Tok::If)) {
      has_body = true;
      std::vector<std::vector<Formula>> alternatives{body_conj()};
      while (accept(Tok::Semi)) alternatives.push_back(body_conj());
      if (alternatives.size() == 1) {
        items = alternatives.front();
      } else {
        std::vector<Formula> ds;
        for (const auto& a : alternatives) ds.push_back(Formula::conj(a));
        items = {Formula::disj(ds)};
      }
    }
    expect(Tok::Dot);
    try {
      return make_rule(head, items, has_body);
    } catch (const Error& e) {
      fail(start, e.what(), e.kind());
    }
  }

  std::vector<Formula> body_conj() {
    std::vector<Formula> items{formula()};
    while (accept(Tok::Comma)) items.push_back(formula());
    return items;
  }

  Formula formula() {
    Formula lhs = disjunction();
    if (accept(Tok::Arrow)) return Formula::implies(lhs, formula());
    if (accept(Tok::Iff)) return Formula::iff(lhs, disjunction());
    return lhs;
  }

  Formula disjunction() {
    Formula acc = conjunction();
    while (accept(Tok::Or)) acc = Formula::lor(acc, conjunction());
    return acc;
  }

  Formula conjunction() {
    Formula acc = unary();
    while (accept(Tok::And)) acc = Formula::land(acc, unary());
    return acc;
  }

  Formula unary() {
    const Token& t = peek();
    if (t.kind == Tok::Minus || (t.kind == Tok::Ident && t.text == "not")) {
      next();
      return Formula::neg(unary());
    }
    if (t.kind == Tok::Ident && (t.text == "forall" || t.text == "exists")) {
      bool all = t.text == "forall";
      next();
      std::vector<std::string> vars;
      if (peek().kind != Tok::Var) fail(peek(), "quantifier needs a variable");
      while (peek().kind == Tok::Var) vars.push_back(next().text);
      Formula body = unary();
      return all ? Formula::forall(vars, body) : Formula::exists(vars, body);
    }
    if (t.kind == Tok::Var && (t.text == "FORALL" || t.text == "EXISTS") && peek(1).kind == Tok::Ident &&
        peek(2).kind == Tok::Slash) {
      bool all = t.text == "FORALL";
      next();
      std::vector<PredVarDecl> decls;
      std::map<std::string, int> scope;
      while (peek().kind == Tok::Ident && peek(1).kind == Tok::Slash) {
        Token name = next();
        next();
        if (peek().kind != Tok::Ident || !std::all_of(peek().text.begin(), peek().text.end(), ::isdigit))
          fail(peek(), "expected an arity after '/'");
        int arity = std::stoi(next().text);
        decls.push_back({name.text, arity, ""});
        scope[name.text] = arity;
      }
      pred_vars_.push_back(std::move(scope));
      Formula body = unary();
      pred_vars_.pop_back();
      return all ? Formula::so_forall(decls, body) : Formula::so_exists(decls, body);
    }
    return primary();
  }

  Formula primary() {
    const Token& t = peek();
    if (accept(Tok::LParen)) {
      Formula f = formula();
      expect(Tok::RParen);
      return f;
    }
    if (t.kind == Tok::Ident && t.text == "true") {
      next();
      return Formula::top();
    }
    if (t.kind == Tok::Ident && t.text == "false") {
      next();
      return Formula::bottom();
    }
    if (t.kind == Tok::Var) {
      Term lhs = term();
      return equality(lhs);
    }
    if (t.kind == Tok::Ident) {
      if (is_keyword(t.text)) fail(t, "unexpected keyword '" + t.text + "'");
      Token name = next();
      if (peek().kind == Tok::Eq || peek().kind == Tok::Neq) return equality(Term::constant(name.text));
      Terms args;
      if (accept(Tok::LParen)) {
        args.push_back(term());
        while (accept(Tok::Comma)) args.push_back(term());
        expect(Tok::RParen);
      }
      for (auto sc = pred_vars_.rbegin(); sc != pred_vars_.rend(); ++sc) {
        auto bound = sc->find(name.text);
        if (bound == sc->end()) continue;
        if (bound->second != static_cast<int>(args.size()))
          fail(name, "arity mismatch for predicate variable " + name.text, ErrorKind::Arity);
        return Formula::pred_var(name.text, args);
      }
      auto [it, inserted] = arity_.emplace(name.text, static_cast<int>(args.size()));
      if (!inserted && it->second != static_cast<int>(args.size()))
        fail(name, "arity mismatch for " + name.text + ": expected " + std::to_string(it->second) + ", got " +
                       std::to_string(args.size()),
             ErrorKind::Arity);
      return Formula::pred(name.text, args);
    }
    fail(t, std::string("unexpected ") + describe(t.kind));
  }

  Formula equality(const Term& lhs) {
    if (accept(Tok::Eq)) return Formula::equal(lhs, term());
    if (accept(Tok::Neq)) return Formula::neg(Formula::equal(lhs, term()));
    fail(peek(), "expected '=' or '!=' after term");
  }

  Term term() {
    const Token& t = peek();
    if (t.kind == Tok::Var) return Term::var(next().text);
    if (t.kind == Tok::Ident && !is_keyword(t.text)) return Term::constant(next().text);
    fail(t, "expected a term");
  }

  static bool is_keyword(const std::string& s) {
    return s == "not" || s == "forall" || s == "exists" || s == "true" || s == "false";
  }

  const Token& peek(std::size_t ahead = 0) const { return toks_[std::min(pos_ + ahead, toks_.size() - 1)]; }
  const Token& next() { return toks_[pos_ < toks_.size() - 1 ? pos_++ : pos_]; }
  bool accept(Tok k) {
    if (peek().kind != k) return false;
    next();
    return true;
  }
  void expect(Tok k) {
    if (!accept(k)) fail(peek(), std::string("expected ") + describe(k) + ", found " + describe(peek().kind));
  }

  [[noreturn]] void fail(const Token& t, const std::string& msg, ErrorKind kind = ErrorKind::Syntax) const {
    throw Error(kind, std::to_string(t.line) + ":" + std::to_string(t.col) + ": " + msg);
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  std::vector<std::map<std::string, int>> pred_vars_;  // enclosing second-order binders
  std::map<std::string, int> arity_;
};

}  // namespace

Program parse_program(std::string_view text) { return Parser(text).program(); }

Formula parse_formula(std::string_view text) { return Parser(text).single_formula(); }

}  // namespace folf
