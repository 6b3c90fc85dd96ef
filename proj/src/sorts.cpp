#include "heapsmt/sorts.hpp"

#include <algorithm>

namespace heapsmt {

SortTable::SortTable() {
  sorts_.push_back(SortInfo{"Bool", SortKind::Bool});
  sorts_.push_back(SortInfo{"Int", SortKind::Int});
}

SortId SortTable::addSort(const std::string& name, SortKind kind, Span span) {
  if (nameUsed(name))
    fail(ErrorKind::Elaboration, "name '" + name + "' is already in use",
         span);
  sorts_.push_back(SortInfo{name, kind});
  return static_cast<SortId>(sorts_.size() - 1);
}

SortId SortTable::arraySort(SortId index, SortId elem) {
  for (SortId i = 0; i < static_cast<SortId>(sorts_.size()); ++i)
    if (sorts_[i].kind == SortKind::Array && sorts_[i].arrayIndex == index &&
        sorts_[i].arrayElem == elem)
      return i;
  SortInfo info;
  info.kind = SortKind::Array;
  info.arrayIndex = index;
  info.arrayElem = elem;
  info.name =
      "(Array " + sorts_[index].name + " " + sorts_[elem].name + ")";
  sorts_.push_back(std::move(info));
  return static_cast<SortId>(sorts_.size() - 1);
}

std::optional<SortId> SortTable::findSort(const std::string& name) const {
  for (SortId i = 0; i < static_cast<SortId>(sorts_.size()); ++i)
    if (sorts_[i].kind != SortKind::Array && sorts_[i].name == name) return i;
  return std::nullopt;
}

SortId SortTable::resolveSort(const SExpr& e) const {
  if (e.isSymbol()) {
    if (auto id = findSort(e.text)) return *id;
    fail(ErrorKind::Sort, "unknown sort '" + e.text + "'", e.span);
  }
  if (e.isList() && e.size() == 3 && e[0].isSymbol("Array")) {
    SortId idx = resolveSort(e[1]);
    SortId elem = resolveSort(e[2]);
    // arraySort interns; const_cast keeps resolveSort usable on const tables
    return const_cast<SortTable*>(this)->arraySort(idx, elem);
  }
  fail(ErrorKind::Sort, "malformed sort expression", e.span);
}

SExpr SortTable::sortToSexpr(SortId id) const {
  const SortInfo& s = sorts_[id];
  if (s.kind == SortKind::Array)
    return SExpr::list({SExpr::symbol("Array"), sortToSexpr(s.arrayIndex),
                        sortToSexpr(s.arrayElem)});
  return SExpr::symbol(s.name);
}

std::string SortTable::sortName(SortId id) const {
  return id < 0 ? std::string("<none>") : sorts_[id].name;
}

int SortTable::addCtor(AdtCtor ctor, bool overloadSelectors) {
  if (nameUsed(ctor.name))
    fail(ErrorKind::Elaboration,
         "constructor name '" + ctor.name + "' is already in use");
  if (ctor.testerName.empty()) ctor.testerName = "is-" + ctor.name;
  int id = static_cast<int>(ctors_.size());
  FnInfo cf{ctor.name, FnKind::Ctor, {}, ctor.adt, -1, id, -1, -1};
  for (const AdtField& f : ctor.fields) cf.dom.push_back(f.sort);
  ctors_.push_back(ctor);
  addFn(std::move(cf));
  for (std::size_t i = 0; i < ctor.fields.size(); ++i) {
    FnInfo sf{ctor.fields[i].selector,
              FnKind::Selector,
              {ctor.adt},
              ctor.fields[i].sort,
              -1,
              id,
              static_cast<int>(i),
              -1};
    addFn(std::move(sf), overloadSelectors);
  }
  addFn(FnInfo{ctor.testerName, FnKind::Tester, {ctor.adt}, boolSort(), -1,
               id, -1, -1});
  return id;
}

std::optional<int> SortTable::findCtor(const std::string& name) const {
  for (int i = 0; i < static_cast<int>(ctors_.size()); ++i)
    if (ctors_[i].name == name) return i;
  return std::nullopt;
}

std::vector<int> SortTable::ctorsOf(SortId adt) const {
  std::vector<int> out;
  for (int i = 0; i < static_cast<int>(ctors_.size()); ++i)
    if (ctors_[i].adt == adt) out.push_back(i);
  return out;
}

int SortTable::addFn(FnInfo fn, bool allowOverload, Span span) {
  for (const FnInfo& existing : fns_) {
    if (existing.name != fn.name) continue;
    if (!allowOverload)
      fail(ErrorKind::Elaboration,
           "symbol '" + fn.name + "' is already in use", span);
    if (existing.dom == fn.dom)
      fail(ErrorKind::Elaboration,
           "symbol '" + fn.name + "' already has this rank", span);
  }
  if (fn.kind != FnKind::Ctor && fn.kind != FnKind::Selector &&
      fn.kind != FnKind::Tester) {
    // constructor-family names were checked by addCtor already
    if (findSort(fn.name))
      fail(ErrorKind::Elaboration,
           "symbol '" + fn.name + "' is already a sort name", span);
  }
  fns_.push_back(std::move(fn));
  return static_cast<int>(fns_.size() - 1);
}

std::vector<int> SortTable::fnsByName(const std::string& name) const {
  std::vector<int> out;
  for (int i = 0; i < static_cast<int>(fns_.size()); ++i)
    if (fns_[i].name == name) out.push_back(i);
  return out;
}

bool SortTable::nameUsed(const std::string& name) const {
  if (findSort(name)) return true;
  for (const FnInfo& f : fns_)
    if (f.name == name) return true;
  return false;
}

}  // namespace heapsmt
