#include "ssgac/domain_store.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace ssgac {

VarId DomainStore::addVariable(std::span<const int> values) {
  if (values.empty()) throw std::invalid_argument("variable with empty initial domain");
  auto [mn, mx] = std::minmax_element(values.begin(), values.end());
  Var d{};
  d.base = static_cast<int>(present_.size());
  d.initLo = *mn;
  d.initHi = *mx;
  present_.resize(present_.size() + (d.initHi - d.initLo + 1), 0);
  initial_.resize(present_.size(), 0);
  int count = 0;
  for (int v : values) {
    auto& p = present_[d.base + (v - d.initLo)];
    if (!p) {
      p = 1;
      initial_[d.base + (v - d.initLo)] = 1;
      ++count;
    }
  }
  d.initSize = d.size = count;
  d.lo = d.initLo;
  d.hi = d.initHi;
  vars_.push_back(d);
  return static_cast<VarId>(vars_.size() - 1);
}

VarId DomainStore::addVariable(int lo, int hi) {
  if (hi < lo) throw std::invalid_argument("variable with empty initial domain");
  std::vector<int> vals;
  for (int v = lo; v <= hi; ++v) vals.push_back(v);
  return addVariable(vals);
}

std::vector<int> DomainStore::values(VarId x) const {
  std::vector<int> out;
  out.reserve(vars_[x].size);
  forEachValue(x, [&](int v) { out.push_back(v); });
  return out;
}

std::vector<int> DomainStore::initialValues(VarId x) const {
  const Var& d = vars_[x];
  std::vector<int> out;
  for (int v = d.initLo; v <= d.initHi; ++v)
    if (initial_[d.base + (v - d.initLo)]) out.push_back(v);
  return out;
}

void DomainStore::erase(VarId x, int v) {
  assert(contains(x, v));
  Var& d = vars_[x];
  present_[d.base + (v - d.initLo)] = 0;
  if (--d.size == 0) return;
  if (v == d.lo) {
    while (!present_[d.base + (d.lo - d.initLo)]) ++d.lo;
  }
  if (v == d.hi) {
    while (!present_[d.base + (d.hi - d.initLo)]) --d.hi;
  }
}

void DomainStore::restore(VarId x, int v) {
  assert(inInitial(x, v) && !contains(x, v));
  Var& d = vars_[x];
  present_[d.base + (v - d.initLo)] = 1;
  if (d.size == 0) {
    d.lo = d.hi = v;
  } else {
    d.lo = std::min(d.lo, v);
    d.hi = std::max(d.hi, v);
  }
  ++d.size;
}

bool DomainStore::operator==(const DomainStore& o) const {
  if (vars_.size() != o.vars_.size()) return false;
  for (VarId x = 0; x < numVariables(); ++x) {
    if (size(x) != o.size(x)) return false;
    if (values(x) != o.values(x)) return false;
  }
  return true;
}

} // namespace ssgac
