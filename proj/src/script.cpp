#include "heapsmt/script.hpp"

#include <map>

namespace heapsmt {

namespace {

const std::map<std::string, Command::Kind>& command_kinds() {
  static const std::map<std::string, Command::Kind> kinds = {
      {"set-logic", Command::Kind::SetLogic},
      {"declare-sort", Command::Kind::DeclareSort},
      {"declare-datatype", Command::Kind::DeclareDatatype},
      {"declare-datatypes", Command::Kind::DeclareDatatypes},
      {"declare-heap", Command::Kind::DeclareHeap},
      {"declare-fun", Command::Kind::DeclareFun},
      {"define-fun", Command::Kind::DefineFun},
      {"assert", Command::Kind::Assert},
      {"check-sat", Command::Kind::CheckSat},
      {"get-model", Command::Kind::GetModel},
      {"exit", Command::Kind::Exit},
  };
  return kinds;
}

void expect_symbol(const SExpr& e, const char* what) {
  if (!e.isSymbol())
    fail(ErrorKind::Syntax, std::string("expected ") + what, e.span);
}

}  // namespace

HeapDeclSyntax parse_heap_decl(const SExpr& form) {
  static const char* kShape =
      "expected (declare-heap <heap-sort> <addr-sort> <object-sort> "
      "<default-object> ((<sort> <arity>)*) (<constructor-dec-list>*))";
  if (form.size() != 7) fail(ErrorKind::Syntax, kShape, form.span);
  HeapDeclSyntax d;
  d.span = form.span;
  expect_symbol(form[1], "heap sort symbol");
  expect_symbol(form[2], "address sort symbol");
  d.heapSortName = form[1].text;
  d.addrSortName = form[2].text;
  d.objectSort = form[3];
  d.defaultObjectTerm = form[4];
  const SExpr& sortDecs = form[5];
  const SExpr& ctorLists = form[6];
  if (!sortDecs.isList() || !ctorLists.isList())
    fail(ErrorKind::Syntax, kShape, form.span);
  for (const SExpr& sd : sortDecs.items) {
    if (!sd.isList() || sd.size() != 2 || !sd[0].isSymbol() ||
        !sd[1].isNumeral())
      fail(ErrorKind::Syntax, "expected sort declaration (<symbol> <numeral>)",
           sd.span);
    d.sortDecs.emplace_back(sd[0].text, numeral_value(sd[1]));
  }
  if (ctorLists.size() != sortDecs.size())
    fail(ErrorKind::Syntax,
         "declare-heap has " + std::to_string(sortDecs.size()) +
             " sort declaration(s) but " + std::to_string(ctorLists.size()) +
             " constructor list(s); the two lists must correspond one to one",
         form.span);
  for (const SExpr& cl : ctorLists.items) {
    if (!cl.isList() || cl.items.empty())
      fail(ErrorKind::Syntax,
           "expected a non-empty constructor declaration list", cl.span);
    std::vector<SExpr> ctors;
    for (const SExpr& c : cl.items) {
      if (!c.isList() || c.items.empty() || !c[0].isSymbol())
        fail(ErrorKind::Syntax,
             "expected constructor declaration (<symbol> (<selector> "
             "<sort>)*)",
             c.span);
      ctors.push_back(c);
    }
    d.constructorDecLists.push_back(std::move(ctors));
  }
  return d;
}

SExpr heap_decl_to_sexpr(const HeapDeclSyntax& d) {
  std::vector<SExpr> sortDecs;
  for (const auto& [name, arity] : d.sortDecs)
    sortDecs.push_back(
        SExpr::list({SExpr::symbol(name), SExpr::numeral(arity)}));
  std::vector<SExpr> ctorLists;
  for (const auto& cl : d.constructorDecLists)
    ctorLists.push_back(SExpr::list(cl));
  return SExpr::list({SExpr::symbol("declare-heap"),
                      SExpr::symbol(d.heapSortName),
                      SExpr::symbol(d.addrSortName), d.objectSort,
                      d.defaultObjectTerm, SExpr::list(std::move(sortDecs)),
                      SExpr::list(std::move(ctorLists))},
                     d.span);
}

std::vector<Command> parse_script(const std::vector<Token>& tokens) {
  std::vector<Command> out;
  for (SExpr& form : parse_sexprs(tokens)) {
    Command cmd;
    if (form.isList() && !form.items.empty() && form[0].isSymbol()) {
      auto it = command_kinds().find(form[0].text);
      if (it != command_kinds().end()) cmd.kind = it->second;
    }
    switch (cmd.kind) {
      case Command::Kind::DeclareHeap:
        cmd.heapDecl = parse_heap_decl(form);
        break;
      case Command::Kind::Assert:
        if (form.size() != 2)
          fail(ErrorKind::Syntax, "expected (assert <term>)", form.span);
        break;
      case Command::Kind::DeclareFun:
        if (form.size() != 4 || !form[1].isSymbol() || !form[2].isList())
          fail(ErrorKind::Syntax,
               "expected (declare-fun <symbol> (<sort>*) <sort>)", form.span);
        break;
      case Command::Kind::DefineFun:
        if (form.size() != 5 || !form[1].isSymbol() || !form[2].isList())
          fail(ErrorKind::Syntax,
               "expected (define-fun <symbol> ((<symbol> <sort>)*) <sort> "
               "<term>)",
               form.span);
        break;
      case Command::Kind::DeclareSort:
        if (form.size() != 3 || !form[1].isSymbol() || !form[2].isNumeral())
          fail(ErrorKind::Syntax,
               "expected (declare-sort <symbol> <numeral>)", form.span);
        break;
      default:
        break;
    }
    cmd.form = std::move(form);
    out.push_back(std::move(cmd));
  }
  return out;
}

std::vector<Command> parse_script(const std::string& input) {
  return parse_script(tokenize(input));
}

std::string print_script(const std::vector<Command>& commands) {
  std::string out;
  for (const Command& c : commands) {
    out += print_sexpr(c.form);
    out.push_back('\n');
  }
  return out;
}

}  // namespace heapsmt
