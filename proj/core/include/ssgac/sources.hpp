#pragma once

#include <memory>
#include <span>
#include <string_view>
#include <vector>

#include "ssgac/constraint.hpp"
#include "ssgac/domain_store.hpp"
#include "ssgac/literal.hpp"
#include "ssgac/support_tables.hpp"

namespace ssgac {

// findNewSupport. Results are sorted by variable.
class SupportSource {
public:
  virtual ~SupportSource() = default;
  virtual std::string_view name() const = 0;
  // Precondition: val is in the current domain of scope[var].
  virtual bool find(const DomainStore& d, int var, int val, LiteralSet& out) = 0;
  // Whether every result is a short support under the initial domains.
  virtual bool backtrackStable() const { return true; }
};

// Current domains with the queried variable narrowed to one value.
class ForcedView {
public:
  ForcedView(const DomainStore& d, std::span<const VarId> scope, int var, int val)
      : d_(d), scope_(scope), var_(var), val_(val) {}
  bool contains(int i, int v) const { return i == var_ ? v == val_ : d_.contains(scope_[i], v); }
  int min(int i) const { return i == var_ ? val_ : d_.min(scope_[i]); }
  int max(int i) const { return i == var_ ? val_ : d_.max(scope_[i]); }
  template <class F> void forEach(int i, F&& f) const {
    if (i == var_)
      f(val_);
    else
      d_.forEachValue(scope_[i], f);
  }

private:
  const DomainStore& d_;
  std::span<const VarId> scope_;
  int var_, val_;
};

class ElementSource final : public SupportSource {
public:
  explicit ElementSource(const ConstraintDef& c) : scope_(c.scope) {}
  std::string_view name() const override { return "element"; }
  bool find(const DomainStore& d, int var, int val, LiteralSet& out) override;

private:
  std::vector<VarId> scope_;
};

class LexSource final : public SupportSource {
public:
  explicit LexSource(const ConstraintDef& c) : scope_(c.scope) {}
  std::string_view name() const override { return "lex"; }
  bool find(const DomainStore& d, int var, int val, LiteralSet& out) override;

private:
  std::vector<VarId> scope_;
};

// stable = true never answers with the empty support.
class RectSource final : public SupportSource {
public:
  RectSource(const ConstraintDef& c, bool stable) : scope_(c.scope), si_(c.params[0]), sj_(c.params[1]), stable_(stable) {}
  std::string_view name() const override { return stable_ ? "rect-stable" : "rect"; }
  bool find(const DomainStore& d, int var, int val, LiteralSet& out) override;
  bool backtrackStable() const override { return stable_; }

private:
  std::vector<VarId> scope_;
  int si_, sj_;
  bool stable_;
};

// First listed support whose literals are valid; no state.
class TableScanSource final : public SupportSource {
public:
  explicit TableScanSource(const ConstraintDef& c) : scope_(c.scope), table_(c.table) {}
  std::string_view name() const override { return "table-scan"; }
  bool find(const DomainStore& d, int var, int val, LiteralSet& out) override;

private:
  std::vector<VarId> scope_;
  std::vector<LiteralSet> table_;
};

// Depth-first search for an assignment of one disjunct's variables.
class DisjunctSearchSource final : public SupportSource {
public:
  explicit DisjunctSearchSource(const ConstraintDef& c);
  std::string_view name() const override { return "disjunct-search"; }
  bool find(const DomainStore& d, int var, int val, LiteralSet& out) override;

private:
  bool search(const ForcedView& fv, const Conjunction& atoms, std::size_t k);
  std::vector<VarId> scope_;
  std::vector<Conjunction> disjuncts_;
  std::vector<std::vector<int>> vars_;
  std::vector<std::vector<std::vector<const Atom*>>> checkAt_;
  std::vector<int> vals_;
  std::size_t current_ = 0;
};

// Circular scan over the literal's list with an untrailed position.
class ListSource final : public SupportSource {
public:
  ListSource(const ConstraintDef& c, const DomainStore& d, std::shared_ptr<const SupportListTable> table);
  std::string_view name() const override { return "list"; }
  bool find(const DomainStore& d, int var, int val, LiteralSet& out) override;
  int listPos(int var, int val) const { return listPos_[lits_.encode(var, val)]; }
  void setListPos(int var, int val, int pos) { listPos_[lits_.encode(var, val)] = pos; }

private:
  bool valid(const DomainStore& d, const LiteralSet& s) const;
  std::vector<VarId> scope_;
  std::shared_ptr<const SupportListTable> table_;
  LiteralMap lits_;
  std::vector<int> listPos_;
};

class NDListSource final : public SupportSource {
public:
  NDListSource(const ConstraintDef& c, const DomainStore& d, std::shared_ptr<const NDListTable> table);
  std::string_view name() const override { return "ndlist"; }
  bool find(const DomainStore& d, int var, int val, LiteralSet& out) override;
  int listPos(int var, int val) const { return listPos_[lits_.encode(var, val)]; }
  void setListPos(int var, int val, int pos) { listPos_[lits_.encode(var, val)] = pos; }
  // Supports examined by the last query; exposes the jumps.
  int lastVisited() const { return visited_; }

private:
  std::vector<VarId> scope_;
  std::shared_ptr<const NDListTable> table_;
  LiteralMap lits_;
  std::vector<int> listPos_;
  int visited_ = 0;
};

// Extends another source's answers to full length.
class LongSource final : public SupportSource {
public:
  LongSource(const ConstraintDef& c, std::unique_ptr<SupportSource> inner)
      : scope_(c.scope), inner_(std::move(inner)) {}
  std::string_view name() const override { return "long"; }
  bool find(const DomainStore& d, int var, int val, LiteralSet& out) override;

private:
  std::vector<VarId> scope_;
  std::unique_ptr<SupportSource> inner_;
  LiteralSet tmp_;
};

enum class Instantiation { Specific, List, NDList, Long };
const char* instantiationName(Instantiation i);

// Supports backing the list instantiations, computed under the initial domains.
std::vector<LiteralSet> listSupportsFor(const ConstraintDef& c, const DomainStore& d, std::size_t cap);

std::unique_ptr<SupportSource> makeSpecificSource(const ConstraintDef& c, bool stable);
// d must still hold the initial domains when list tables are built.
std::unique_ptr<SupportSource> makeSource(const ConstraintDef& c, const DomainStore& d, Instantiation inst,
                                          bool stable, std::size_t cap = std::size_t{1} << 20);

} // namespace ssgac
