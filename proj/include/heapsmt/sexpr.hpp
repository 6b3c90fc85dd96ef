#ifndef HEAPSMT_SEXPR_HPP
#define HEAPSMT_SEXPR_HPP

#include <string>
#include <vector>

#include "heapsmt/diagnostics.hpp"

namespace heapsmt {

enum class TokenKind { LParen, RParen, Symbol, Numeral, Keyword, String };

struct Token {
  TokenKind kind;
  std::string text;  // symbol/keyword text without quoting, numeral digits
  Span span;
};

// Lexes SMT-LIB text. Covers the whole input except whitespace and
// ;-comments. Quoted symbols |..| are unquoted into plain symbol text.
std::vector<Token> tokenize(const std::string& input);

struct SExpr {
  enum class Kind { Symbol, Numeral, Keyword, String, List };

  Kind kind = Kind::List;
  std::string text;          // atom payload
  std::vector<SExpr> items;  // list payload
  Span span;

  static SExpr symbol(std::string s, Span sp = {}) {
    return SExpr{Kind::Symbol, std::move(s), {}, sp};
  }
  static SExpr numeral(std::string digits, Span sp = {}) {
    return SExpr{Kind::Numeral, std::move(digits), {}, sp};
  }
  static SExpr numeral(long long n) { return numeral(std::to_string(n)); }
  static SExpr keyword(std::string s, Span sp = {}) {
    return SExpr{Kind::Keyword, std::move(s), {}, sp};
  }
  static SExpr list(std::vector<SExpr> xs, Span sp = {}) {
    return SExpr{Kind::List, {}, std::move(xs), sp};
  }

  bool isList() const { return kind == Kind::List; }
  bool isSymbol() const { return kind == Kind::Symbol; }
  bool isSymbol(const std::string& s) const {
    return kind == Kind::Symbol && text == s;
  }
  bool isNumeral() const { return kind == Kind::Numeral; }
  std::size_t size() const { return items.size(); }
  const SExpr& operator[](std::size_t i) const { return items[i]; }

  // structural equality; spans are ignored
  friend bool operator==(const SExpr& a, const SExpr& b) {
    if (a.kind != b.kind) return false;
    if (a.kind != Kind::List) return a.text == b.text;
    if (a.items.size() != b.items.size()) return false;
    for (std::size_t i = 0; i < a.items.size(); ++i)
      if (!(a.items[i] == b.items[i])) return false;
    return true;
  }
  friend bool operator!=(const SExpr& a, const SExpr& b) { return !(a == b); }
};

// Parses a token stream into top-level s-expressions.
std::vector<SExpr> parse_sexprs(const std::vector<Token>& tokens);
std::vector<SExpr> parse_sexprs(const std::string& input);

// Deterministic printer. Short forms go on one line; long forms break with
// two-space indentation. Output re-lexes to the same structure.
std::string print_sexpr(const SExpr& e);
std::string print_atom(const SExpr& e);

// True when `s` needs no |..| quoting.
bool is_simple_symbol(const std::string& s);

// Numeral helper: parses the digit text, fails on overflow.
long long numeral_value(const SExpr& numeral);

}  // namespace heapsmt

#endif
