// Parser and printer for the generator-word grammar shared by the library
// and the command line:
//
//   word := term (ws term)*
//   term := gen | gen '^' int | '[' word ',' word ']' | 'inv(' word ')'
//   gen  := 'a' | 'b' | 'c' | 'h' | 'd'     (c, d only where defined)
//
// Whitespace-separated juxtaposition is multiplication, left to right.
// Empty input parses to the identity.

#include <cctype>
#include <sstream>
#include <string>
#include <vector>

#include "knotgt/seifert.hpp"

namespace knotgt::seifert {

namespace {

struct Token {
  enum Kind { Gen, Caret, Number, LBracket, RBracket, Comma, Inv, LParen, RParen, End };
  Kind kind;
  char gen = 0;
  Int value;
  std::size_t col = 0;  // 1-based
};

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) { advance(); }

  const Token& peek() const { return current_; }

  Token take() {
    Token t = current_;
    advance();
    return t;
  }

 private:
  void advance() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
    std::size_t col = pos_ + 1;
    if (pos_ >= text_.size()) {
      current_ = Token{Token::End, 0, 0, col};
      return;
    }
    char c = text_[pos_];
    switch (c) {
      case '^': ++pos_; current_ = Token{Token::Caret, 0, 0, col}; return;
      case '[': ++pos_; current_ = Token{Token::LBracket, 0, 0, col}; return;
      case ']': ++pos_; current_ = Token{Token::RBracket, 0, 0, col}; return;
      case ',': ++pos_; current_ = Token{Token::Comma, 0, 0, col}; return;
      case '(': ++pos_; current_ = Token{Token::LParen, 0, 0, col}; return;
      case ')': ++pos_; current_ = Token{Token::RParen, 0, 0, col}; return;
      default: break;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_]))) {
        ++pos_;
      }
      std::string_view name = text_.substr(start, pos_ - start);
      if (name == "inv") {
        current_ = Token{Token::Inv, 0, 0, col};
        return;
      }
      if (name.size() == 1) {
        current_ = Token{Token::Gen, name[0], 0, col};
        return;
      }
      throw ParseError("unknown generator '" + std::string(name) + "'", 1, col);
    }
    if (c == '-' || std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      if (c == '-') {
        ++pos_;
      }
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        ++pos_;
      }
      std::string digits(text_.substr(start, pos_ - start));
      if (digits == "-") {
        throw ParseError("expected digits after '-'", 1, col);
      }
      current_ = Token{Token::Number, 0, Int(digits), col};
      return;
    }
    throw ParseError(std::string("unexpected character '") + c + "'", 1, col);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  Token current_;
};

class Parser {
 public:
  Parser(const GroupSpec& spec, std::string_view text) : spec_(spec), lexer_(text) {}

  Element parse_word_to_end() {
    Element result = parse_word();
    if (lexer_.peek().kind != Token::End) {
      throw ParseError("unexpected trailing input", 1, lexer_.peek().col);
    }
    return result;
  }

 private:
  bool starts_term(Token::Kind k) const {
    return k == Token::Gen || k == Token::LBracket || k == Token::Inv;
  }

  Element parse_word() {
    Element acc = identity(spec_);
    while (starts_term(lexer_.peek().kind)) {
      acc = multiply(acc, parse_term());
    }
    return acc;
  }

  Element parse_term() {
    Token t = lexer_.take();
    switch (t.kind) {
      case Token::Gen: {
        Element g = make_generator(t);
        if (lexer_.peek().kind == Token::Caret) {
          lexer_.take();
          Token e = lexer_.take();
          if (e.kind != Token::Number) {
            throw ParseError("expected an integer exponent after '^'", 1, e.col);
          }
          return power(g, e.value);
        }
        return g;
      }
      case Token::LBracket: {
        // [x, y] = x^-1 y^-1 x y
        Element x = parse_word();
        expect(Token::Comma, "','");
        Element y = parse_word();
        expect(Token::RBracket, "']'");
        return multiply(multiply(invert(x), invert(y)), multiply(x, y));
      }
      case Token::Inv: {
        expect(Token::LParen, "'('");
        Element x = parse_word();
        expect(Token::RParen, "')'");
        return invert(x);
      }
      default:
        throw ParseError("expected a generator, '[' or 'inv('", 1, t.col);
    }
  }

  Element make_generator(const Token& t) {
    bool known = t.gen == 'a' || t.gen == 'b' || t.gen == 'h' ||
                 (spec_.kind() == GroupKind::Cable && (t.gen == 'c' || t.gen == 'd'));
    if (!known) {
      throw ParseError(std::string("generator '") + t.gen + "' is not defined for this group", 1,
                       t.col);
    }
    return generator(spec_, t.gen);
  }

  void expect(Token::Kind k, const char* what) {
    Token t = lexer_.take();
    if (t.kind != k) {
      throw ParseError(std::string("expected ") + what, 1, t.col);
    }
  }

  const GroupSpec& spec_;
  Lexer lexer_;
};

void append_power(std::ostringstream& out, char letter, const Int& e, bool& first) {
  if (!first) {
    out << ' ';
  }
  first = false;
  out << letter;
  if (e != 1) {
    out << '^' << e;
  }
}

}  // namespace

Element parse_element(const GroupSpec& spec, std::string_view text) {
  return Parser(spec, text).parse_word_to_end();
}

std::string word_text(const Element& x) {
  std::ostringstream out;
  bool first = true;
  for (const freeprod::Syllable& s : x.word().syllables()) {
    append_power(out, s.factor == 0 ? 'a' : x.spec().second_letter(), s.exponent, first);
  }
  return out.str();
}

std::string to_text(const Element& x) {
  std::ostringstream out;
  bool first = true;
  if (x.central() != 0) {
    append_power(out, 'h', x.central(), first);
  }
  std::string word = word_text(x);
  if (!word.empty()) {
    if (!first) {
      out << ' ';
    }
    out << word;
  }
  return out.str();
}

}  // namespace knotgt::seifert
