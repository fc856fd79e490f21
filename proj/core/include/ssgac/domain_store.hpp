#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace ssgac {

using VarId = std::int32_t;

// Bitmap-backed finite domains. Mutation here is raw; the Engine owns trailing.
class DomainStore {
public:
  VarId addVariable(std::span<const int> values);
  VarId addVariable(int lo, int hi);

  int numVariables() const { return static_cast<int>(vars_.size()); }

  bool contains(VarId x, int v) const {
    const Var& d = vars_[x];
    if (v < d.initLo || v > d.initHi) return false;
    return present_[d.base + (v - d.initLo)] != 0;
  }
  bool inInitial(VarId x, int v) const {
    const Var& d = vars_[x];
    if (v < d.initLo || v > d.initHi) return false;
    return initial_[d.base + (v - d.initLo)] != 0;
  }
  int size(VarId x) const { return vars_[x].size; }
  bool empty(VarId x) const { return vars_[x].size == 0; }
  bool assigned(VarId x) const { return vars_[x].size == 1; }
  int min(VarId x) const { return vars_[x].lo; }
  int max(VarId x) const { return vars_[x].hi; }
  int initialMin(VarId x) const { return vars_[x].initLo; }
  int initialMax(VarId x) const { return vars_[x].initHi; }
  int initialSize(VarId x) const { return vars_[x].initSize; }

  std::vector<int> values(VarId x) const;
  std::vector<int> initialValues(VarId x) const;

  template <class F> void forEachValue(VarId x, F&& f) const {
    const Var& d = vars_[x];
    if (d.size == 0) return;
    for (int v = d.lo; v <= d.hi; ++v)
      if (present_[d.base + (v - d.initLo)]) f(v);
  }

  // Precondition: contains(x, v).
  void erase(VarId x, int v);
  // Precondition: inInitial(x, v) && !contains(x, v).
  void restore(VarId x, int v);

  bool operator==(const DomainStore& o) const;

private:
  struct Var {
    int base;
    int initLo, initHi;
    int initSize;
    int size;
    int lo, hi;
  };
  std::vector<Var> vars_;
  std::vector<std::uint8_t> present_;
  std::vector<std::uint8_t> initial_;
};

} // namespace ssgac
