#include "ssgac/support_index.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

namespace ssgac {

SupportPartition::SupportPartition(int arity)
    : perVar_(arity, 0), order_(arity), inv_(arity), low_{0, arity} {
  for (int i = 0; i < arity; ++i) order_[i] = inv_[i] = i;
}

std::vector<int> SupportPartition::cell(int c) const {
  std::vector<int> out;
  for (int i = lowIdx(c); i < lowIdx(c + 1); ++i) out.push_back(order_[i]);
  return out;
}

void SupportPartition::swap(int x, int y) {
  int px = inv_[x], py = inv_[y];
  order_[px] = y;
  order_[py] = x;
  inv_[x] = py;
  inv_[y] = px;
}

void SupportPartition::increment(int x) {
  int sx = ++perVar_[x];
  while (static_cast<int>(low_.size()) <= sx + 1) low_.push_back(arity());
  int cellend = low_[sx] - 1;
  swap(x, order_[cellend]);
  --low_[sx];
}

void SupportPartition::decrement(int x) {
  int sx = --perVar_[x];
  assert(sx >= 0);
  int cellend = low_[sx + 1];
  swap(x, order_[cellend]);
  ++low_[sx + 1];
}

std::string SupportPartition::check() const {
  std::ostringstream os;
  const int n = arity();
  for (int i = 0; i < n; ++i) {
    if (inv_[order_[i]] != i) os << "inverse mismatch at " << i << "; ";
    if (i > 0 && perVar_[order_[i - 1]] > perVar_[order_[i]]) os << "order not sorted at " << i << "; ";
  }
  for (int c = 0; c < static_cast<int>(low_.size()); ++c) {
    int expect = n;
    for (int i = 0; i < n; ++i)
      if (perVar_[order_[i]] >= c) {
        expect = i;
        break;
      }
    if (low_[c] != expect) os << "supportNumLowIdx[" << c << "]=" << low_[c] << " expected " << expect << "; ";
  }
  return os.str();
}

SupportIndex::SupportIndex(const LiteralMap& lits, TriggerSink* sink, bool fastPath)
    : lits_(lits),
      sink_(sink),
      fastPath_(fastPath),
      head_(lits.numLiterals()),
      part_(lits.arity()),
      zero_(lits.arity()),
      inZero_(lits.numLiterals(), 1) {
  for (LitId l = 0; l < lits.numLiterals(); ++l) zero_[lits.var(l)].push_back(l);
}

SupportId SupportIndex::allocate(std::span<const LitId> lits, int originalArity) {
  SupportId id;
  if (!pool_.empty()) {
    id = pool_.back();
    pool_.pop_back();
  } else {
    id = static_cast<SupportId>(arena_.size());
    arena_.emplace_back();
  }
  ShortSupport& s = arena_[id];
  if (s.capacity() < static_cast<int>(lits.size())) s.cells.resize(lits.size());
  s.size = static_cast<int>(lits.size());
  for (int i = 0; i < s.size; ++i) s.cells[i] = {lits[i], {}, {}};
  s.originalArity = originalArity;
  s.numPrimeSupported = 0;
  s.active = s.pooled = s.restored = false;
  return id;
}

void SupportIndex::reclaim(SupportId id) {
  ShortSupport& s = arena_[id];
  assert(!s.active && !s.pooled);
  s.pooled = true;
  pool_.push_back(id);
}

void SupportIndex::link(SupportId s, int slot) {
  SupportCell& c = arena_[s].cells[slot];
  CellRef self{s, slot};
  CellRef& h = head_[c.literal];
  c.prev = {};
  c.next = h;
  if (h.valid()) arena_[h.support].cells[h.slot].prev = self;
  h = self;
}

void SupportIndex::unlink(SupportId s, int slot) {
  SupportCell& c = arena_[s].cells[slot];
  if (c.prev.valid())
    arena_[c.prev.support].cells[c.prev.slot].next = c.next;
  else
    head_[c.literal] = c.next;
  if (c.next.valid()) arena_[c.next.support].cells[c.next.slot].prev = c.prev;
  c.prev = c.next = {};
}

void SupportIndex::add(SupportId id) {
  ShortSupport& s = arena_[id];
  assert(!s.active && !s.pooled);
  const bool counted = !isFullLength(id);
  s.active = true;
  ++activeCount_;
  for (int k = 0; k < s.size; ++k) {
    LitId l = s.cells[k].literal;
    bool wasEmpty = listEmpty(l);
    link(id, k);
    if (wasEmpty && sink_) sink_->attachLiteral(l);
    if (counted) part_.increment(lits_.var(l));
  }
  if (counted) ++numSupports_;
}

void SupportIndex::remove(SupportId id, DeletionObserver* obs) {
  ShortSupport& s = arena_[id];
  assert(s.active);
  const bool counted = !isFullLength(id);
  const int before = numSupports_;
  const int oldIndex = part_.lowIdx(numSupports_);
  const bool auditing = lemmaAudit_ && counted;
  if (auditing) {
    auditBefore_.resize(arity());
    for (int x = 0; x < arity(); ++x) auditBefore_[x] = part_.count(x);
  }
  for (int k = 0; k < s.size; ++k) {
    LitId l = s.cells[k].literal;
    int x = lits_.var(l);
    unlink(id, k);
    if (listEmpty(l)) {
      if (sink_) sink_->detachLiteral(l);
      pushZeroLit(l);
      if (obs) obs->listEmptied(l, id, part_.count(x) == numSupports_);
    }
    if (counted) part_.decrement(x);
  }
  s.active = false;
  --activeCount_;
  if (!counted) return;
  --numSupports_;
  const int begin = part_.lowIdx(numSupports_);
  lastRegion_ = {begin, oldIndex};
  if (obs)
    for (int i = begin; i < oldIndex; ++i) obs->implicitSupportLost(part_.varAt(i), id);

  if (auditing) {
    ++lemmaStats_.deletions;
    std::vector<int> expected, region;
    for (int x = 0; x < arity(); ++x)
      if (part_.count(x) == numSupports_ && auditBefore_[x] != before) expected.push_back(x);
    for (int i = begin; i < oldIndex; ++i) region.push_back(part_.varAt(i));
    std::sort(region.begin(), region.end());
    bool ok = region == expected;
    for (int x : region)
      if (auditBefore_[x] != before - 1 || part_.count(x) != before - 1) ok = false;
    if (!ok) {
      ++lemmaStats_.failures;
      if (lemmaStats_.firstFailure.empty()) {
        std::ostringstream os;
        os << "deletion with numSupports " << before << ": region [" << begin << "," << oldIndex
           << ") size " << region.size() << ", recomputed " << expected.size();
        lemmaStats_.firstFailure = os.str();
      }
    }
  }
}

std::vector<SupportId> SupportIndex::listSupports(LitId l) const {
  std::vector<SupportId> out;
  for (CellRef r = head_[l]; r.valid(); r = arena_[r.support].cells[r.slot].next) out.push_back(r.support);
  return out;
}

void SupportIndex::removeZeroLitAt(int x, int i) {
  auto& z = zero_[x];
  inZero_[z[i]] = 0;
  z[i] = z.back();
  z.pop_back();
}

void SupportIndex::pushZeroLit(LitId l) {
  if (inZero_[l]) return;
  inZero_[l] = 1;
  zero_[lits_.var(l)].push_back(l);
}

std::string SupportIndex::audit(const IndexAuditOptions& opt) const {
  std::ostringstream os;
  const int n = arity();
  std::vector<int> perVar(n, 0);
  int counted = 0;
  std::int64_t active = 0, activeCells = 0;
  for (SupportId id = 0; id < arenaSize(); ++id) {
    const ShortSupport& s = arena_[id];
    if (!s.active) continue;
    if (s.pooled) os << "support " << id << " active and pooled; ";
    ++active;
    activeCells += s.size;
    std::vector<int> seen;
    for (const auto& c : s.live()) seen.push_back(lits_.var(c.literal));
    std::sort(seen.begin(), seen.end());
    if (std::adjacent_find(seen.begin(), seen.end()) != seen.end()) os << "support " << id << " repeats a variable; ";
    if (!isFullLength(id)) {
      ++counted;
      for (int x : seen) ++perVar[x];
    }
  }
  if (active != activeCount_) os << "activeCount " << activeCount_ << " recomputed " << active << "; ";
  if (counted != numSupports_) os << "numSupports " << numSupports_ << " recomputed " << counted << "; ";
  for (int x = 0; x < n; ++x)
    if (perVar[x] != part_.count(x)) os << "supportsPerVar[" << x << "]=" << part_.count(x) << " recomputed " << perVar[x] << "; ";
  os << part_.check();

  std::int64_t linked = 0;
  for (LitId l = 0; l < lits_.numLiterals(); ++l) {
    CellRef prev{};
    for (CellRef r = head_[l]; r.valid(); r = arena_[r.support].cells[r.slot].next) {
      const ShortSupport& s = arena_[r.support];
      const SupportCell& c = s.cells[r.slot];
      if (!s.active || r.slot >= s.size) os << "list " << l << " links a dead cell; ";
      if (c.literal != l) os << "list " << l << " holds literal " << c.literal << "; ";
      if (!(c.prev == prev)) os << "list " << l << " broken back link; ";
      prev = r;
      if (++linked > activeCells + 1) break;
    }
    if (opt.hasTrigger && opt.hasTrigger(l) == listEmpty(l)) os << "trigger state wrong for literal " << l << "; ";
    if (listEmpty(l) && !inZero_[l] && !(opt.mayLeaveZeroLits && opt.mayLeaveZeroLits(l)))
      os << "literal " << l << " unsupported but not in zeroLits; ";
  }
  if (linked != activeCells) os << "linked cells " << linked << " expected " << activeCells << "; ";
  for (int x = 0; x < n; ++x) {
    for (LitId l : zero_[x]) {
      if (lits_.var(l) != x) os << "zeroLits[" << x << "] holds foreign literal; ";
      if (!inZero_[l]) os << "inZeroLits flag clear for stacked literal " << l << "; ";
    }
  }
  std::int64_t stacked = 0;
  for (int x = 0; x < n; ++x) stacked += static_cast<std::int64_t>(zero_[x].size());
  std::int64_t flagged = std::count(inZero_.begin(), inZero_.end(), 1);
  if (stacked != flagged) os << "zeroLits size " << stacked << " but " << flagged << " flags; ";
  return os.str();
}

} // namespace ssgac
