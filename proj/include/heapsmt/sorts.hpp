#ifndef HEAPSMT_SORTS_HPP
#define HEAPSMT_SORTS_HPP

#include <optional>
#include <string>
#include <vector>

#include "heapsmt/sexpr.hpp"

namespace heapsmt {

using SortId = int;

enum class SortKind {
  Bool,
  Int,
  Adt,
  Heap,
  Address,
  AllocResult,
  Uninterp,
  Array,
};

struct SortInfo {
  std::string name;
  SortKind kind = SortKind::Uninterp;
  int heapSig = -1;  // Heap/Address/AllocResult: owning heap declaration
  SortId arrayIndex = -1;
  SortId arrayElem = -1;
};

struct AdtField {
  std::string selector;
  SortId sort = -1;
};

struct AdtCtor {
  std::string name;
  SortId adt = -1;
  std::vector<AdtField> fields;
  std::string testerName;
};

enum class FnKind {
  Ctor,
  Selector,
  Tester,
  ConstArray,
  HeapRead,
  HeapWrite,
  HeapAllocate,
  HeapValid,
  HeapEmpty,
  HeapNull,
  HeapNth,
  Declared,  // declare-fun
  Defined,   // define-fun
};

struct FnInfo {
  std::string name;
  FnKind kind = FnKind::Declared;
  std::vector<SortId> dom;
  SortId rng = -1;
  int heapSig = -1;
  int ctorId = -1;
  int fieldIndex = -1;
  int defId = -1;
};

// Declared sorts, ADT constructor tables, and the function symbol table.
// Heap operations and the alloc-result projections are the only overloadable
// entries; every other name is unique across sorts, constructors, selectors,
// testers, and functions.
class SortTable {
 public:
  SortTable();

  SortId boolSort() const { return 0; }
  SortId intSort() const { return 1; }

  SortId addSort(const std::string& name, SortKind kind, Span span = {});
  SortId arraySort(SortId index, SortId elem);
  std::optional<SortId> findSort(const std::string& name) const;
  SortId resolveSort(const SExpr& e) const;
  const SortInfo& sort(SortId id) const { return sorts_[id]; }
  SExpr sortToSexpr(SortId id) const;
  std::string sortName(SortId id) const;
  std::size_t sortCount() const { return sorts_.size(); }

  int addCtor(AdtCtor ctor, bool overloadSelectors = false);
  const AdtCtor& ctor(int id) const { return ctors_[id]; }
  std::size_t ctorCount() const { return ctors_.size(); }
  std::optional<int> findCtor(const std::string& name) const;
  std::vector<int> ctorsOf(SortId adt) const;

  int addFn(FnInfo fn, bool allowOverload = false, Span span = {});
  const FnInfo& fn(int id) const { return fns_[id]; }
  std::size_t fnCount() const { return fns_.size(); }
  std::vector<int> fnsByName(const std::string& name) const;

  bool nameUsed(const std::string& name) const;

 private:
  std::vector<SortInfo> sorts_;
  std::vector<AdtCtor> ctors_;
  std::vector<FnInfo> fns_;
};

}  // namespace heapsmt

#endif
