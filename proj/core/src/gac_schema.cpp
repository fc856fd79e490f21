#include "ssgac/baselines.hpp"

#include <sstream>

#include "ssgac/support_tables.hpp"

namespace ssgac {

ScopedPropagator::ScopedPropagator(Engine& e, ConstraintDef def)
    : Propagator(e), def_(std::move(def)), lits_(e.domains(), def_.scope) {}

void ScopedPropagator::watchAll() {
  if (slotBase_ >= 0) return;
  slotBase_ = engine_.registerScope(id(), lits_, def_.scope);
  for (LitId l = 0; l < lits_.numLiterals(); ++l) engine_.attachTrigger(slotBase_ + l);
}

GacSchema::GacSchema(Engine& e, ConstraintDef def, std::unique_ptr<SupportSource> source, Mode mode, std::size_t cap)
    : ScopedPropagator(e, std::move(def)), source_(std::move(source)), mode_(mode) {
  const int nl = lits_.numLiterals();
  sc_.resize(nl);
  current_.assign(nl, -1);
  sPos_.assign(nl, -1);
  listPos_.assign(nl, 0);
  if (mode_ == Mode::List)
    table_ = std::make_unique<SupportListTable>(initialScopeDomains(e.domains(), def_.scope),
                                                listSupportsFor(def_, e.domains(), cap));
}

bool GacSchema::tupleValid(int t) const {
  const auto& tup = tuples_[t];
  for (int i = 0; i < static_cast<int>(tup.size()); ++i)
    if (!dom().contains(def_.scope[i], tup[i])) return false;
  return true;
}

void GacSchema::setCurrent(LitId l, int t) {
  int old = current_[l];
  if (old >= 0) {
    auto& s = sOf_[old];
    LitId last = s.back();
    s[sPos_[l]] = last;
    sPos_[last] = sPos_[l];
    s.pop_back();
  }
  current_[l] = t;
  if (t >= 0) {
    sPos_[l] = static_cast<int>(sOf_[t].size());
    sOf_[t].push_back(l);
  }
  record(kCurrent, l, old);
}

bool GacSchema::findTuple(LitId l, std::vector<int>& out) {
  const int var = lits_.var(l), val = lits_.val(l);
  if (mode_ == Mode::Functional) {
    ++sourceCalls_;
    if (!source_->find(dom(), var, val, buf_)) return false;
    LiteralSet full = longify(buf_, dom(), def_.scope, Literal{var, val});
    out.resize(full.size());
    for (const Literal& x : full) out[x.var] = x.val;
    return true;
  }
  const auto& list = table_->list(var, val);
  for (int j = listPos_[l]; j < static_cast<int>(list.size()); ++j) {
    const LiteralSet& s = table_->support(list[j]);
    bool ok = true;
    for (const Literal& x : s)
      if (!dom().contains(def_.scope[x.var], x.val)) {
        ok = false;
        break;
      }
    if (!ok) continue;
    if (j != listPos_[l]) {
      record(kListPos, l, listPos_[l]);
      listPos_[l] = j;
    }
    LiteralSet full = longify(s, dom(), def_.scope, Literal{var, val});
    out.resize(full.size());
    for (const Literal& x : full) out[x.var] = x.val;
    return true;
  }
  return false;
}

bool GacSchema::seek(LitId l) {
  for (int t : sc_[l]) {
    if (t != current_[l] && tupleValid(t)) {
      setCurrent(l, t);
      ++reanchored_;
      return true;
    }
  }
  if (!findTuple(l, tupleBuf_)) {
    prune(lits_.var(l), lits_.val(l));
    return false;
  }
  int t = static_cast<int>(tuples_.size());
  tuples_.push_back(tupleBuf_);
  sOf_.emplace_back();
  record(kTuple, 0, 0);
  for (int i = 0; i < static_cast<int>(tupleBuf_.size()); ++i) {
    LitId li = lits_.encode(i, tupleBuf_[i]);
    sc_[li].push_back(t);
    record(kSC, li, 0);
  }
  if (static_cast<std::int64_t>(tuples_.size()) > peak_) peak_ = static_cast<std::int64_t>(tuples_.size());
  setCurrent(l, t);
  return true;
}

void GacSchema::initialise() {
  watchAll();
  for (LitId l = 0; l < lits_.numLiterals(); ++l) {
    if (!valid(l)) continue;
    if (current_[l] >= 0 && tupleValid(current_[l])) continue;
    seek(l);
    if (engine_.failed()) return;
  }
}

void GacSchema::onLiteralPruned(LitId p) {
  std::vector<LitId> holders;
  for (std::size_t k = 0; k < sc_[p].size(); ++k) {
    int t = sc_[p][k];
    holders = sOf_[t];
    for (LitId l : holders) {
      if (current_[l] != t || !valid(l)) continue;
      seek(l);
      if (engine_.failed()) return;
    }
  }
}

void GacSchema::undo(std::int32_t a, std::int32_t b) {
  const LitId l = a >> 2;
  switch (static_cast<Op>(a & 3)) {
  case kSC: sc_[l].pop_back(); break;
  case kListPos: listPos_[l] = b; break;
  case kTuple:
    tuples_.pop_back();
    sOf_.pop_back();
    break;
  case kCurrent: {
    int t = current_[l];
    if (t >= 0) {
      auto& s = sOf_[t];
      LitId last = s.back();
      s[sPos_[l]] = last;
      sPos_[last] = sPos_[l];
      s.pop_back();
    }
    current_[l] = b;
    if (b >= 0) {
      sPos_[l] = static_cast<int>(sOf_[b].size());
      sOf_[b].push_back(l);
    }
    break;
  }
  }
}

std::string GacSchema::audit() const {
  std::ostringstream os;
  for (LitId l = 0; l < lits_.numLiterals(); ++l) {
    int t = current_[l];
    if (t >= 0) {
      if (sOf_[t][sPos_[l]] != l) os << "S(tau) misses literal " << l << "; ";
      if (tuples_[t][lits_.var(l)] != lits_.val(l)) os << "current support of " << l << " lacks it; ";
    }
    if (valid(l) && (t < 0 || !tupleValid(t))) os << "valid literal " << l << " without valid current support; ";
  }
  for (std::size_t t = 0; t < sOf_.size(); ++t)
    for (LitId l : sOf_[t])
      if (current_[l] != static_cast<int>(t)) os << "stale S(tau) entry; ";
  return os.str();
}

} // namespace ssgac
