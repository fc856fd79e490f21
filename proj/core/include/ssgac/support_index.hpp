#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "ssgac/literal.hpp"

namespace ssgac {

using SupportId = std::int32_t;
constexpr SupportId kNoSupport = -1;

struct CellRef {
  SupportId support = kNoSupport;
  std::int32_t slot = -1;
  bool valid() const { return support != kNoSupport; }
  friend bool operator==(const CellRef&, const CellRef&) = default;
};

struct SupportCell {
  LitId literal;
  CellRef prev;
  CellRef next;
};

struct ShortSupport {
  std::vector<SupportCell> cells; // capacity; only the first size entries are live
  int size = 0;
  int originalArity = 0;
  int numPrimeSupported = 0;
  bool active = false;
  bool pooled = false;
  bool restored = false;

  int capacity() const { return static_cast<int>(cells.size()); }
  std::span<const SupportCell> live() const { return {cells.data(), static_cast<std::size_t>(size)}; }
};

class TriggerSink {
public:
  virtual void attachLiteral(LitId lit) = 0;
  virtual void detachLiteral(LitId lit) = 0;

protected:
  ~TriggerSink() = default;
};

class DeletionObserver {
public:
  // lit's list just emptied; lacksImplicit is supportsPerVar == numSupports before the deletion.
  virtual void listEmptied(LitId lit, SupportId sup, bool lacksImplicit) = 0;
  virtual void implicitSupportLost(int var, SupportId sup) = 0;

protected:
  ~DeletionObserver() = default;
};

// varsBySupport with its inverse and cell boundaries.
class SupportPartition {
public:
  explicit SupportPartition(int arity = 0);

  int arity() const { return static_cast<int>(perVar_.size()); }
  int count(int x) const { return perVar_[x]; }
  int varAt(int i) const { return order_[i]; }
  int positionOf(int x) const { return inv_[x]; }
  // Smallest position holding a variable with at least c supports, or arity.
  int lowIdx(int c) const { return c < static_cast<int>(low_.size()) ? low_[c] : arity(); }
  int cellCount() const { return static_cast<int>(low_.size()); }
  std::vector<int> cell(int c) const;
  std::span<const int> order() const { return order_; }

  void increment(int x);
  void decrement(int x);
  void swap(int x, int y);
  // Empty when consistent.
  std::string check() const;

private:
  std::vector<int> perVar_;
  std::vector<int> order_;
  std::vector<int> inv_;
  std::vector<int> low_;
};

struct LemmaAuditStats {
  std::int64_t deletions = 0;
  std::int64_t failures = 0;
  std::string firstFailure;
};

struct IndexAuditOptions {
  std::function<bool(LitId)> hasTrigger;
  // Literals allowed to have an empty list without being in zeroLits.
  std::function<bool(LitId)> mayLeaveZeroLits;
};

class SupportIndex {
public:
  SupportIndex(const LiteralMap& lits, TriggerSink* sink, bool fastPath);

  SupportId allocate(std::span<const LitId> lits, int originalArity);
  void reclaim(SupportId s);
  ShortSupport& support(SupportId s) { return arena_[s]; }
  const ShortSupport& support(SupportId s) const { return arena_[s]; }

  void add(SupportId s);
  void remove(SupportId s, DeletionObserver* obs = nullptr);

  int arity() const { return part_.arity(); }
  int numSupports() const { return numSupports_; }
  int supportsPerVar(int x) const { return part_.count(x); }
  const SupportPartition& partition() const { return part_; }
  bool fastPath() const { return fastPath_; }
  bool isFullLength(SupportId s) const { return fastPath_ && arena_[s].originalArity == arity(); }
  bool implicitlySupported(int x) const { return part_.count(x) < numSupports_; }

  bool listEmpty(LitId l) const { return !head_[l].valid(); }
  CellRef listHead(LitId l) const { return head_[l]; }
  SupportId firstSupport(LitId l) const { return head_[l].support; }
  std::vector<SupportId> listSupports(LitId l) const;

  int zeroLitsSize(int x) const { return static_cast<int>(zero_[x].size()); }
  LitId zeroLitAt(int x, int i) const { return zero_[x][i]; }
  bool inZeroLits(LitId l) const { return inZero_[l] != 0; }
  void removeZeroLitAt(int x, int i);
  void pushZeroLit(LitId l);
  // Visits literals of x with an empty list; stale entries are dropped on the way.
  template <class F> void zeroLitsIterate(int x, F&& visit) {
    auto& z = zero_[x];
    for (int i = 0; i < static_cast<int>(z.size());) {
      LitId l = z[i];
      if (!listEmpty(l)) {
        removeZeroLitAt(x, i);
        continue;
      }
      visit(l);
      ++i;
    }
  }

  std::int64_t storedCount() const {
    return static_cast<std::int64_t>(arena_.size() - pool_.size());
  }
  std::int64_t activeCount() const { return activeCount_; }
  int poolSize() const { return static_cast<int>(pool_.size()); }
  int arenaSize() const { return static_cast<int>(arena_.size()); }

  const LiteralMap& literals() const { return lits_; }

  void setLemmaAudit(bool on) { lemmaAudit_ = on; }
  const LemmaAuditStats& lemmaAudit() const { return lemmaStats_; }
  // Region [begin, end) of varsBySupport reported by the most recent counted deletion.
  std::pair<int, int> lastRegion() const { return lastRegion_; }

  // Full recomputation; empty when consistent.
  std::string audit(const IndexAuditOptions& opt = {}) const;

private:
  void link(SupportId s, int slot);
  void unlink(SupportId s, int slot);

  const LiteralMap& lits_;
  TriggerSink* sink_;
  bool fastPath_;

  std::vector<ShortSupport> arena_;
  std::vector<SupportId> pool_;
  std::vector<CellRef> head_;
  SupportPartition part_;
  int numSupports_ = 0;
  std::int64_t activeCount_ = 0;

  std::vector<std::vector<LitId>> zero_;
  std::vector<std::uint8_t> inZero_;

  bool lemmaAudit_ = false;
  LemmaAuditStats lemmaStats_;
  std::pair<int, int> lastRegion_{0, 0};
  std::vector<int> auditBefore_;
};

} // namespace ssgac
