#pragma once

#include <cctype>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "cgt/errors.hpp"

namespace cgt {

// One letter of a word: a generator index, possibly inverted.
struct Letter {
  std::uint32_t gen;
  bool inverse;
  friend bool operator==(const Letter&, const Letter&) = default;
};

using Word = std::vector<Letter>;

// A finite presentation: named generators plus freely reduced relators.
// An equation u = v is stored as the single relator u v^-1.
struct Presentation {
  std::vector<std::string> generators;
  std::vector<Word> relators;

  friend bool operator==(const Presentation&, const Presentation&) = default;
};

inline Word free_reduce(const Word& w) {
  Word out;
  for (const Letter& l : w) {
    if (!out.empty() && out.back().gen == l.gen && out.back().inverse != l.inverse)
      out.pop_back();
    else
      out.push_back(l);
  }
  return out;
}

inline Word inverted(const Word& w) {
  Word out;
  out.reserve(w.size());
  for (auto it = w.rbegin(); it != w.rend(); ++it)
    out.push_back(Letter{it->gen, !it->inverse});
  return out;
}

namespace detail {

struct Token {
  enum Kind {
    LAngle,
    RAngle,
    Pipe,
    Comma,
    Equals,
    Star,
    Caret,
    LParen,
    RParen,
    Int,
    Ident,
    End,
  };
  Kind kind;
  std::string text;
  long long value = 0;
  std::size_t line = 1;
  std::size_t column = 1;
};

inline const char* token_name(Token::Kind k) {
  switch (k) {
    case Token::LAngle: return "'<'";
    case Token::RAngle: return "'>'";
    case Token::Pipe: return "'|'";
    case Token::Comma: return "','";
    case Token::Equals: return "'='";
    case Token::Star: return "'*'";
    case Token::Caret: return "'^'";
    case Token::LParen: return "'('";
    case Token::RParen: return "')'";
    case Token::Int: return "an integer";
    case Token::Ident: return "an identifier";
    case Token::End: return "end of input";
  }
  return "?";
}

class PresentationLexer {
 public:
  explicit PresentationLexer(std::string_view text) : text_(text) { advance(); }

  const Token& peek() const { return current_; }

  Token next() {
    Token t = current_;
    advance();
    return t;
  }

 private:
  void advance() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
      step();
    current_.line = line_;
    current_.column = column_;
    current_.text.clear();
    current_.value = 0;
    if (pos_ >= text_.size()) {
      current_.kind = Token::End;
      return;
    }
    char c = text_[pos_];
    switch (c) {
      case '<': current_.kind = Token::LAngle; take(); return;
      case '>': current_.kind = Token::RAngle; take(); return;
      case '|': current_.kind = Token::Pipe; take(); return;
      case ',': current_.kind = Token::Comma; take(); return;
      case '=': current_.kind = Token::Equals; take(); return;
      case '*': current_.kind = Token::Star; take(); return;
      case '^': current_.kind = Token::Caret; take(); return;
      case '(': current_.kind = Token::LParen; take(); return;
      case ')': current_.kind = Token::RParen; take(); return;
      default: break;
    }
    if (c == '-' || std::isdigit(static_cast<unsigned char>(c))) {
      if (c == '-') {
        take();
        if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
          throw ParseError("expected digits after '-'", current_.line, current_.column);
      }
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
        take();
      current_.kind = Token::Int;
      try {
        current_.value = std::stoll(current_.text);
      } catch (const std::out_of_range&) {
        throw ParseError("integer literal out of range", current_.line, current_.column);
      }
      return;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
        take();
      current_.kind = Token::Ident;
      return;
    }
    throw ParseError(std::string("unexpected character '") + c + "'", line_, column_);
  }

  void take() {
    current_.text.push_back(text_[pos_]);
    step();
  }

  void step() {
    if (text_[pos_] == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    ++pos_;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t column_ = 1;
  Token current_;
};

class PresentationParser {
 public:
  explicit PresentationParser(std::string_view text) : lex_(text) {}

  Presentation parse() {
    expect(Token::LAngle);
    if (lex_.peek().kind == Token::Pipe)
      throw EmptyGeneratorList("presentation declares no generators");
    parse_generator(result_);
    while (lex_.peek().kind == Token::Comma) {
      lex_.next();
      parse_generator(result_);
    }
    expect(Token::Pipe);
    result_.relators.push_back(parse_relation());
    while (lex_.peek().kind == Token::Comma) {
      lex_.next();
      result_.relators.push_back(parse_relation());
    }
    expect(Token::RAngle);
    expect(Token::End);
    return std::move(result_);
  }

 private:
  static constexpr std::size_t kMaxRelatorLetters = 1u << 20;

  void parse_generator(Presentation& p) {
    Token t = expect(Token::Ident);
    for (const auto& g : p.generators)
      if (g == t.text)
        throw ParseError("duplicate generator '" + t.text + "'", t.line, t.column);
    p.generators.push_back(t.text);
  }

  Word parse_relation() {
    Token at = lex_.peek();
    Word u = parse_word();
    if (lex_.peek().kind == Token::Equals) {
      lex_.next();
      Word v = parse_word();
      Word inv = inverted(v);
      u.insert(u.end(), inv.begin(), inv.end());
    }
    Word r = free_reduce(u);
    if (r.size() > kMaxRelatorLetters)
      throw ParseError("relator expands to more than " +
                           std::to_string(kMaxRelatorLetters) + " letters",
                       at.line, at.column);
    return r;
  }

  Word parse_word() {
    if (lex_.peek().kind == Token::Int) {
      Token t = lex_.next();
      if (t.value != 1 || t.text[0] == '-')
        throw ParseError("expected a word ('1' is the only numeric word)", t.line,
                         t.column);
      return {};
    }
    Word w = parse_factor();
    while (lex_.peek().kind == Token::Star) {
      lex_.next();
      Word f = parse_factor();
      w.insert(w.end(), f.begin(), f.end());
    }
    return w;
  }

  Word parse_factor() {
    Token at = lex_.peek();
    Word base = parse_base();
    if (lex_.peek().kind != Token::Caret) return base;
    lex_.next();
    Token t = expect(Token::Int);
    long long k = t.value;
    Word unit = k < 0 ? inverted(base) : base;
    unsigned long long reps = k < 0 ? static_cast<unsigned long long>(-(k + 1)) + 1
                                    : static_cast<unsigned long long>(k);
    if (!unit.empty() && reps > kMaxRelatorLetters / unit.size())
      throw ParseError("exponent expands to more than " +
                           std::to_string(kMaxRelatorLetters) + " letters",
                       at.line, at.column);
    Word w;
    w.reserve(static_cast<std::size_t>(reps) * unit.size());
    for (unsigned long long i = 0; i < reps; ++i)
      w.insert(w.end(), unit.begin(), unit.end());
    return w;
  }

  Word parse_base() {
    Token t = lex_.peek();
    if (t.kind == Token::Ident) {
      lex_.next();
      for (std::size_t i = 0; i < result_.generators.size(); ++i)
        if (result_.generators[i] == t.text)
          return {Letter{static_cast<std::uint32_t>(i), false}};
      throw UnknownGenerator(t.text, t.line, t.column);
    }
    if (t.kind == Token::LParen) {
      lex_.next();
      Word w = parse_word();
      expect(Token::RParen);
      return w;
    }
    throw ParseError(std::string("expected a word, found ") + token_name(t.kind),
                     t.line, t.column);
  }

  Token expect(Token::Kind kind) {
    Token t = lex_.peek();
    if (t.kind != kind)
      throw ParseError(std::string("expected ") + token_name(kind) + ", found " +
                           token_name(t.kind),
                       t.line, t.column);
    return lex_.next();
  }

  PresentationLexer lex_;
  Presentation result_;
};

}  // namespace detail

// Parses the grammar
//   presentation := '<' gen_list '|' rel_list '>'
//   gen_list     := IDENT (',' IDENT)*
//   rel_list     := relation (',' relation)*
//   relation     := word ('=' word)?          (a bare word w means w = 1)
//   word         := '1' | factor ('*' factor)*
//   factor       := base ('^' INT)?
//   base         := IDENT | '(' word ')'
// Whitespace between tokens is ignored. Exponents expand, equations u = v
// become relators u v^-1, and every relator is freely reduced.
inline Presentation parse_presentation(std::string_view text) {
  return detail::PresentationParser(text).parse();
}

// Prints a presentation in the same grammar, folding runs of one letter into
// powers; parsing the output reproduces the presentation exactly.
inline std::string to_string(const Presentation& p) {
  std::string out = "< ";
  for (std::size_t i = 0; i < p.generators.size(); ++i) {
    if (i) out += ", ";
    out += p.generators[i];
  }
  out += " | ";
  for (std::size_t r = 0; r < p.relators.size(); ++r) {
    if (r) out += ", ";
    const Word& w = p.relators[r];
    if (w.empty()) {
      out += "1";
      continue;
    }
    std::size_t i = 0;
    bool first = true;
    while (i < w.size()) {
      std::size_t j = i;
      while (j < w.size() && w[j] == w[i]) ++j;
      if (!first) out += "*";
      first = false;
      out += p.generators[w[i].gen];
      long long e = static_cast<long long>(j - i);
      if (w[i].inverse) e = -e;
      if (e != 1) out += "^" + std::to_string(e);
      i = j;
    }
  }
  out += " >";
  return out;
}

}  // namespace cgt
