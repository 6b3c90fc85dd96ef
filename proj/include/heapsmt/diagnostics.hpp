#ifndef HEAPSMT_DIAGNOSTICS_HPP
#define HEAPSMT_DIAGNOSTICS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace heapsmt {

// Source position of a token or node, 1-based. `offset`/`length` address the
// raw input text.
struct Span {
  unsigned line = 1;
  unsigned col = 1;
  std::size_t offset = 0;
  std::size_t length = 0;
};

enum class ErrorKind {
  Lexical,
  Syntax,
  Elaboration,
  Sort,
  Fragment,
  Eval,
  Generation,
  Io,
  Internal,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, std::string message, Span span = {})
      : std::runtime_error(std::move(message)), kind(kind), span(span) {}

  ErrorKind kind;
  Span span;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& message,
                              Span span = {}) {
  throw Error(kind, message, span);
}

inline std::string describe(const Error& e) {
  std::string out;
  switch (e.kind) {
    case ErrorKind::Lexical: out = "lexical error"; break;
    case ErrorKind::Syntax: out = "syntax error"; break;
    case ErrorKind::Elaboration: out = "elaboration error"; break;
    case ErrorKind::Sort: out = "sort error"; break;
    case ErrorKind::Fragment: out = "fragment error"; break;
    case ErrorKind::Eval: out = "evaluation error"; break;
    case ErrorKind::Generation: out = "generation error"; break;
    case ErrorKind::Io: out = "io error"; break;
    case ErrorKind::Internal: out = "internal error"; break;
  }
  if (e.span.line != 0 && (e.span.offset != 0 || e.span.length != 0 ||
                           e.span.line != 1 || e.span.col != 1)) {
    out += " at " + std::to_string(e.span.line) + ":" +
           std::to_string(e.span.col);
  }
  out += ": ";
  out += e.what();
  return out;
}

}  // namespace heapsmt

#endif
