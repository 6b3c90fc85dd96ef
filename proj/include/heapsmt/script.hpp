#ifndef HEAPSMT_SCRIPT_HPP
#define HEAPSMT_SCRIPT_HPP

#include <optional>
#include <string>
#include <vector>

#include "heapsmt/sexpr.hpp"

namespace heapsmt {

// Payload of one declare-heap command:
//   (declare-heap <heap> <addr> <object-sort> <default-object>
//                 ((<sort> <arity>)*) (<constructor-dec-list>*))
// The two trailing lists must have equal length; a constructor-dec-list is a
// non-empty list of constructor declarations for the sort at the same
// position.
struct HeapDeclSyntax {
  std::string heapSortName;
  std::string addrSortName;
  SExpr objectSort;
  SExpr defaultObjectTerm;
  std::vector<std::pair<std::string, long long>> sortDecs;
  std::vector<std::vector<SExpr>> constructorDecLists;
  Span span;
};

struct Command {
  enum class Kind {
    SetLogic,
    DeclareSort,
    DeclareDatatype,
    DeclareDatatypes,
    DeclareHeap,
    DeclareFun,
    DefineFun,
    Assert,
    CheckSat,
    GetModel,
    Exit,
    Other,  // outside the supported subset; preserved verbatim
  };

  Kind kind = Kind::Other;
  SExpr form;
  std::optional<HeapDeclSyntax> heapDecl;

  friend bool operator==(const Command& a, const Command& b) {
    return a.kind == b.kind && a.form == b.form;
  }
};

std::vector<Command> parse_script(const std::vector<Token>& tokens);
std::vector<Command> parse_script(const std::string& input);

// Deterministic normalized text; output re-parses to an equal command list.
std::string print_script(const std::vector<Command>& commands);

HeapDeclSyntax parse_heap_decl(const SExpr& form);
SExpr heap_decl_to_sexpr(const HeapDeclSyntax& d);

}  // namespace heapsmt

#endif
