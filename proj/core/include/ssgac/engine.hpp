#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <string_view>
#include <vector>

#include "ssgac/domain_store.hpp"
#include "ssgac/literal.hpp"

namespace ssgac {

class Engine;
using PropId = std::int32_t;

class Propagator {
public:
  virtual ~Propagator() = default;

  virtual std::string_view name() const = 0;

  // Root-node setup; may prune.
  virtual void initialise() = 0;
  // A literal this propagator watched was pruned. lit is scope-local.
  virtual void onLiteralPruned(LitId lit) { (void)lit; }
  // Coarse entry point, runs after scheduleCoarse().
  virtual void propagate() {}
  // Reverses one of this propagator's trail records.
  virtual void undo(std::int32_t a, std::int32_t b) {
    (void)a;
    (void)b;
  }

  virtual bool wantsNodeEvents() const { return false; }
  virtual void nodePushed() {}
  // Called after the engine trail has been unwound to the node marker.
  virtual void nodeBacktracked() {}

  virtual std::int64_t storedSupports() const { return 0; }
  virtual std::int64_t peakStoredSupports() const { return 0; }

  PropId id() const { return id_; }

protected:
  explicit Propagator(Engine& e) : engine_(e) {}
  Engine& engine_;

private:
  friend class Engine;
  PropId id_ = -1;
};

// Owns domains, trail, trigger table and the propagation queues.
class Engine {
public:
  Engine() = default;
  Engine(const Engine&) = delete;
  Engine& operator=(const Engine&) = delete;

  VarId addVariable(int lo, int hi);
  VarId addVariable(std::span<const int> values);

  const DomainStore& domains() const { return dom_; }
  int numVariables() const { return dom_.numVariables(); }

  Propagator& add(std::unique_ptr<Propagator> p);
  template <class P, class... Args> P& emplace(Args&&... args) {
    auto p = std::make_unique<P>(*this, std::forward<Args>(args)...);
    P& ref = *p;
    add(std::move(p));
    return ref;
  }
  std::span<const std::unique_ptr<Propagator>> propagators() const { return props_; }

  // Returns false once the current node has failed.
  bool prune(VarId x, int v);
  bool assign(VarId x, int v);
  bool failed() const { return failed_; }
  void fail() { failed_ = true; }

  // Trigger slots: one per scope literal of a registered propagator.
  int registerScope(PropId p, const LiteralMap& lits, std::span<const VarId> scope);
  void attachTrigger(int slot);
  void removeTrigger(int slot);
  bool hasTrigger(int slot) const { return slotPos_[slot] >= 0; }
  int watcherCount(VarId x, int v) const;

  void scheduleCoarse(PropId p);

  void trail(PropId owner, std::int32_t a, std::int32_t b) {
    trail_.push_back({owner, a, b});
  }
  std::size_t trailSize() const { return trail_.size(); }

  // Runs every propagator's initialise, then propagates to fixpoint.
  bool initialise();
  bool propagate();

  void pushNode();
  void backtrackNode();
  int depth() const { return static_cast<int>(markers_.size()); }

  std::int64_t eventsDelivered() const { return eventsDelivered_; }

private:
  struct TrailEntry {
    PropId owner;
    std::int32_t a;
    std::int32_t b;
  };
  struct Event {
    PropId prop;
    LitId lit;
  };
  struct Slot {
    PropId prop;
    LitId local;
    int global;
  };

  int globalLit(VarId x, int v) const { return litBase_[x] + (v - dom_.initialMin(x)); }
  void freezeVariables();
  void clearQueues();

  DomainStore dom_;
  std::vector<std::unique_ptr<Propagator>> props_;
  std::vector<Propagator*> nodeProps_;

  bool frozen_ = false;
  std::vector<int> litBase_;
  std::vector<std::vector<int>> watchers_;
  std::vector<Slot> slots_;
  std::vector<int> slotPos_;

  std::vector<Event> events_;
  std::size_t eventHead_ = 0;
  std::vector<PropId> coarse_;
  std::size_t coarseHead_ = 0;
  std::vector<std::uint8_t> inCoarse_;

  std::vector<TrailEntry> trail_;
  std::vector<std::size_t> markers_;
  bool failed_ = false;
  std::int64_t eventsDelivered_ = 0;
};

} // namespace ssgac
