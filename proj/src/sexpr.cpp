#include "heapsmt/sexpr.hpp"

#include <cctype>
#include <limits>
#include <sstream>

namespace heapsmt {

namespace {

bool is_symbol_char(char c) {
  if (std::isalnum(static_cast<unsigned char>(c))) return true;
  switch (c) {
    case '~': case '!': case '@': case '$': case '%': case '^': case '&':
    case '*': case '_': case '-': case '+': case '=': case '<': case '>':
    case '.': case '?': case '/':
      return true;
    default:
      return false;
  }
}

struct Cursor {
  const std::string& text;
  std::size_t pos = 0;
  unsigned line = 1;
  unsigned col = 1;

  bool done() const { return pos >= text.size(); }
  char peek() const { return text[pos]; }
  char next() {
    char c = text[pos++];
    if (c == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
    return c;
  }
  Span here() const { return Span{line, col, pos, 0}; }
};

}  // namespace

bool is_simple_symbol(const std::string& s) {
  if (s.empty()) return false;
  if (std::isdigit(static_cast<unsigned char>(s[0]))) return false;
  for (char c : s)
    if (!is_symbol_char(c)) return false;
  return true;
}

std::vector<Token> tokenize(const std::string& input) {
  std::vector<Token> out;
  Cursor cur{input};
  while (!cur.done()) {
    char c = cur.peek();
    if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
      cur.next();
      continue;
    }
    if (c == ';') {
      while (!cur.done() && cur.peek() != '\n') cur.next();
      continue;
    }
    Span start = cur.here();
    start.offset = cur.pos;
    auto finish = [&](TokenKind k, std::string text) {
      Span sp = start;
      sp.length = cur.pos - start.offset;
      out.push_back(Token{k, std::move(text), sp});
    };
    if (c == '(') {
      cur.next();
      finish(TokenKind::LParen, "(");
      continue;
    }
    if (c == ')') {
      cur.next();
      finish(TokenKind::RParen, ")");
      continue;
    }
    if (c == '|') {
      cur.next();
      std::string s;
      bool closed = false;
      while (!cur.done()) {
        char d = cur.next();
        if (d == '|') {
          closed = true;
          break;
        }
        s.push_back(d);
      }
      if (!closed)
        fail(ErrorKind::Lexical, "unterminated quoted symbol", start);
      finish(TokenKind::Symbol, std::move(s));
      continue;
    }
    if (c == '"') {
      cur.next();
      std::string s;
      bool closed = false;
      while (!cur.done()) {
        char d = cur.next();
        if (d == '"') {
          if (!cur.done() && cur.peek() == '"') {
            cur.next();
            s.push_back('"');
            continue;
          }
          closed = true;
          break;
        }
        s.push_back(d);
      }
      if (!closed)
        fail(ErrorKind::Lexical, "unterminated string literal", start);
      finish(TokenKind::String, std::move(s));
      continue;
    }
    if (c == ':') {
      cur.next();
      std::string s;
      while (!cur.done() && is_symbol_char(cur.peek())) s.push_back(cur.next());
      if (s.empty()) fail(ErrorKind::Lexical, "empty keyword", start);
      finish(TokenKind::Keyword, std::move(s));
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::string s;
      while (!cur.done() && std::isdigit(static_cast<unsigned char>(cur.peek())))
        s.push_back(cur.next());
      // digits directly followed by symbol characters form a symbol-like
      // token in no valid script; report it rather than splitting
      if (!cur.done() && is_symbol_char(cur.peek()))
        fail(ErrorKind::Lexical, "malformed numeral", start);
      finish(TokenKind::Numeral, std::move(s));
      continue;
    }
    if (is_symbol_char(c)) {
      std::string s;
      while (!cur.done() && is_symbol_char(cur.peek())) s.push_back(cur.next());
      finish(TokenKind::Symbol, std::move(s));
      continue;
    }
    fail(ErrorKind::Lexical, std::string("unexpected character '") + c + "'",
         start);
  }
  return out;
}

std::vector<SExpr> parse_sexprs(const std::vector<Token>& tokens) {
  std::vector<SExpr> top;
  std::vector<SExpr> stack;  // open lists
  for (const Token& t : tokens) {
    SExpr atom;
    switch (t.kind) {
      case TokenKind::LParen:
        stack.push_back(SExpr::list({}, t.span));
        continue;
      case TokenKind::RParen: {
        if (stack.empty())
          fail(ErrorKind::Syntax, "unbalanced ')'", t.span);
        SExpr done = std::move(stack.back());
        stack.pop_back();
        done.span.length = t.span.offset + t.span.length - done.span.offset;
        if (stack.empty())
          top.push_back(std::move(done));
        else
          stack.back().items.push_back(std::move(done));
        continue;
      }
      case TokenKind::Symbol:
        atom = SExpr::symbol(t.text, t.span);
        break;
      case TokenKind::Numeral:
        atom = SExpr::numeral(t.text, t.span);
        break;
      case TokenKind::Keyword:
        atom = SExpr::keyword(t.text, t.span);
        break;
      case TokenKind::String:
        atom = SExpr{SExpr::Kind::String, t.text, {}, t.span};
        break;
    }
    if (stack.empty())
      top.push_back(std::move(atom));
    else
      stack.back().items.push_back(std::move(atom));
  }
  if (!stack.empty())
    fail(ErrorKind::Syntax, "unbalanced '(' at end of input",
         stack.back().span);
  return top;
}

std::vector<SExpr> parse_sexprs(const std::string& input) {
  return parse_sexprs(tokenize(input));
}

std::string print_atom(const SExpr& e) {
  switch (e.kind) {
    case SExpr::Kind::Symbol:
      if (is_simple_symbol(e.text)) return e.text;
      return "|" + e.text + "|";
    case SExpr::Kind::Numeral:
      return e.text;
    case SExpr::Kind::Keyword:
      return ":" + e.text;
    case SExpr::Kind::String: {
      std::string out = "\"";
      for (char c : e.text) {
        out.push_back(c);
        if (c == '"') out.push_back('"');
      }
      out.push_back('"');
      return out;
    }
    case SExpr::Kind::List:
      break;
  }
  fail(ErrorKind::Internal, "print_atom on list");
}

namespace {

constexpr std::size_t kLineWidth = 100;

std::size_t flat_width(const SExpr& e) {
  if (!e.isList()) return print_atom(e).size();
  std::size_t w = 2;  // parens
  for (std::size_t i = 0; i < e.items.size(); ++i)
    w += flat_width(e.items[i]) + (i ? 1 : 0);
  return w;
}

void print_flat(const SExpr& e, std::string& out) {
  if (!e.isList()) {
    out += print_atom(e);
    return;
  }
  out.push_back('(');
  for (std::size_t i = 0; i < e.items.size(); ++i) {
    if (i) out.push_back(' ');
    print_flat(e.items[i], out);
  }
  out.push_back(')');
}

void print_rec(const SExpr& e, std::string& out, std::size_t indent) {
  if (!e.isList()) {
    out += print_atom(e);
    return;
  }
  if (flat_width(e) + indent <= kLineWidth || e.items.empty()) {
    print_flat(e, out);
    return;
  }
  // head stays on the opening line, remaining items each on their own line
  out.push_back('(');
  print_rec(e.items[0], out, indent + 1);
  for (std::size_t i = 1; i < e.items.size(); ++i) {
    out.push_back('\n');
    out.append(indent + 2, ' ');
    print_rec(e.items[i], out, indent + 2);
  }
  out.push_back(')');
}

}  // namespace

std::string print_sexpr(const SExpr& e) {
  std::string out;
  print_rec(e, out, 0);
  return out;
}

long long numeral_value(const SExpr& numeral) {
  if (!numeral.isNumeral())
    fail(ErrorKind::Internal, "numeral_value on non-numeral");
  long long v = 0;
  for (char c : numeral.text) {
    if (v > (std::numeric_limits<long long>::max() - (c - '0')) / 10)
      fail(ErrorKind::Eval, "numeral too large: " + numeral.text,
           numeral.span);
    v = v * 10 + (c - '0');
  }
  return v;
}

}  // namespace heapsmt
