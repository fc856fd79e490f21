#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "ssgac/domain_store.hpp"

namespace ssgac {

using LitId = std::int32_t;

// A scope-local literal: var indexes the constraint scope, not the engine.
struct Literal {
  int var;
  int val;
  friend bool operator==(const Literal&, const Literal&) = default;
  friend auto operator<=>(const Literal&, const Literal&) = default;
};

using LiteralSet = std::vector<Literal>;

// Dense literal ids over the initial value range of each scope variable.
class LiteralMap {
public:
  LiteralMap() = default;
  LiteralMap(const DomainStore& d, std::span<const VarId> scope);

  int arity() const { return static_cast<int>(lo_.size()); }
  int numLiterals() const { return static_cast<int>(litVar_.size()); }

  LitId encode(int var, int val) const { return base_[var] + (val - lo_[var]); }
  LitId encode(Literal l) const { return encode(l.var, l.val); }
  int var(LitId id) const { return litVar_[id]; }
  int val(LitId id) const { return lo_[litVar_[id]] + (id - base_[litVar_[id]]); }
  Literal decode(LitId id) const { return {var(id), val(id)}; }

  bool inRange(int var, int val) const {
    return val >= lo_[var] && val < lo_[var] + width(var);
  }
  LitId first(int var) const { return base_[var]; }
  int width(int var) const { return base_[var + 1] - base_[var]; }

private:
  std::vector<int> base_;
  std::vector<int> lo_;
  std::vector<int> litVar_;
};

// Initial-domain literal count of a scope; the z of the storage bound.
int countInitialLiterals(const DomainStore& d, std::span<const VarId> scope);

} // namespace ssgac
