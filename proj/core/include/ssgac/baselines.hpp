#pragma once

#include <memory>
#include <vector>

#include "ssgac/constraint.hpp"
#include "ssgac/engine.hpp"
#include "ssgac/literal.hpp"
#include "ssgac/sources.hpp"

namespace ssgac {

// Shared plumbing: a scope, static triggers on every literal.
class ScopedPropagator : public Propagator {
public:
  ScopedPropagator(Engine& e, ConstraintDef def);
  const ConstraintDef& definition() const { return def_; }
  const LiteralMap& literals() const { return lits_; }

protected:
  void watchAll();
  VarId varOf(int i) const { return def_.scope[i]; }
  const DomainStore& dom() const { return engine_.domains(); }
  bool valid(LitId l) const { return dom().contains(def_.scope[lits_.var(l)], lits_.val(l)); }
  bool prune(int i, int v) { return engine_.prune(def_.scope[i], v); }

  ConstraintDef def_;
  LiteralMap lits_;
  int slotBase_ = -1;
};

// Current supports, S(tau) lists and eager validity checks; all state trailed.
class GacSchema final : public ScopedPropagator {
public:
  enum class Mode { Functional, List };
  // Functional: tuples come from source (longified here). List: scan of listSupportsFor with trailed listPos.
  GacSchema(Engine& e, ConstraintDef def, std::unique_ptr<SupportSource> source, Mode mode = Mode::Functional,
            std::size_t cap = std::size_t{1} << 20);

  std::string_view name() const override { return "gac-schema"; }
  void initialise() override;
  void onLiteralPruned(LitId lit) override;
  void undo(std::int32_t a, std::int32_t b) override;

  std::int64_t storedSupports() const override { return static_cast<std::int64_t>(tuples_.size()); }
  std::int64_t peakStoredSupports() const override { return peak_; }
  const std::vector<int>& listPositions() const { return listPos_; }
  std::int64_t sourceCalls() const { return sourceCalls_; }
  std::int64_t reanchored() const { return reanchored_; }
  // Empty when current/S(tau) agree and every valid literal has a valid current support.
  std::string audit() const;

private:
  enum Op : std::int32_t { kSC = 0, kCurrent = 1, kListPos = 2, kTuple = 3 };
  void record(Op op, LitId lit, std::int32_t payload) { engine_.trail(id(), (lit << 2) | op, payload); }
  bool tupleValid(int t) const;
  void setCurrent(LitId l, int t);
  bool seek(LitId l);
  bool findTuple(LitId l, std::vector<int>& out);

  std::unique_ptr<SupportSource> source_;
  Mode mode_;
  std::unique_ptr<SupportListTable> table_;
  std::vector<std::vector<int>> tuples_;
  std::vector<std::vector<int>> sc_;
  std::vector<int> current_;
  std::vector<std::vector<LitId>> sOf_;
  std::vector<int> sPos_;
  std::vector<int> listPos_;
  LiteralSet buf_;
  std::vector<int> tupleBuf_;
  std::int64_t peak_ = 0;
  std::int64_t sourceCalls_ = 0;
  std::int64_t reanchored_ = 0;
};

// Per-disjunct trailed views, no entailment rule.
class ConstructiveOr final : public ScopedPropagator {
public:
  ConstructiveOr(Engine& e, ConstraintDef def);

  std::string_view name() const override { return "constructive-or"; }
  void initialise() override;
  void onLiteralPruned(LitId lit) override;
  void propagate() override;
  void undo(std::int32_t a, std::int32_t b) override;

  int liveDisjuncts() const;

private:
  void reviseDisjunct(int k);
  bool firstSolution(int k, std::size_t pos);

  std::vector<Conjunction> disjuncts_;
  std::vector<std::vector<int>> dvars_;
  std::vector<std::vector<std::vector<const Atom*>>> checkAt_;
  std::vector<std::vector<int>> byVar_;
  std::vector<std::vector<std::uint8_t>> view_;
  std::vector<std::uint8_t> dead_;
  std::vector<std::uint8_t> dirty_;
  std::vector<std::uint8_t> seen_;
  std::vector<int> vals_;
  int forcedVar_ = -1;
  int forcedVal_ = 0;
};

// Value-wise support scan: prunes every literal the source cannot support.
class SourceScanGac final : public ScopedPropagator {
public:
  SourceScanGac(Engine& e, ConstraintDef def, std::unique_ptr<SupportSource> source)
      : ScopedPropagator(e, std::move(def)), source_(std::move(source)) {}
  std::string_view name() const override { return "builtin-scan"; }
  void initialise() override;
  void onLiteralPruned(LitId) override { engine_.scheduleCoarse(id()); }
  void propagate() override;

private:
  std::unique_ptr<SupportSource> source_;
  LiteralSet buf_;
};

class ElementGac final : public ScopedPropagator {
public:
  using ScopedPropagator::ScopedPropagator;
  std::string_view name() const override { return "builtin-element"; }
  void initialise() override;
  void onLiteralPruned(LitId) override { engine_.scheduleCoarse(id()); }
  void propagate() override;
};

class LexLeqGac final : public ScopedPropagator {
public:
  using ScopedPropagator::ScopedPropagator;
  std::string_view name() const override { return "builtin-lex"; }
  void initialise() override;
  void onLiteralPruned(LitId) override { engine_.scheduleCoarse(id()); }
  void propagate() override;
};

class AllDifferentGac final : public ScopedPropagator {
public:
  using ScopedPropagator::ScopedPropagator;
  std::string_view name() const override { return "builtin-alldiff"; }
  void initialise() override;
  void onLiteralPruned(LitId) override { engine_.scheduleCoarse(id()); }
  void propagate() override;

private:
  bool augment(int i, int round);

  std::vector<int> adjStart_, adjVals_, matchVar_, matchVal_, stamp_;
  std::vector<int> revStart_, revVars_, fill_, work_;
  std::vector<int> index_, low_, comp_, tstack_;
  std::vector<std::uint8_t> reachFree_, onStack_;
  std::vector<std::pair<int, int>> call_;
};

class BoolSumEqGac final : public ScopedPropagator {
public:
  using ScopedPropagator::ScopedPropagator;
  std::string_view name() const override { return "builtin-boolsum"; }
  void initialise() override;
  void onLiteralPruned(LitId) override { engine_.scheduleCoarse(id()); }
  void propagate() override;
};

class LinearAuxGac final : public ScopedPropagator {
public:
  using ScopedPropagator::ScopedPropagator;
  std::string_view name() const override { return "builtin-linear"; }
  void initialise() override;
  void onLiteralPruned(LitId) override { engine_.scheduleCoarse(id()); }
  void propagate() override;

private:
  std::vector<std::uint8_t> seenAux_, seenP_, seenQ_;
};

// Cartesian enumeration over the current box; for small scopes.
class EnumerationGac final : public ScopedPropagator {
public:
  using ScopedPropagator::ScopedPropagator;
  std::string_view name() const override { return "builtin-enum"; }
  void initialise() override;
  void onLiteralPruned(LitId) override { engine_.scheduleCoarse(id()); }
  void propagate() override;
};

std::unique_ptr<Propagator> makeBuiltin(Engine& e, const ConstraintDef& def);

} // namespace ssgac
