#include "ssgac/literal.hpp"

namespace ssgac {

LiteralMap::LiteralMap(const DomainStore& d, std::span<const VarId> scope) {
  base_.reserve(scope.size() + 1);
  lo_.reserve(scope.size());
  int next = 0;
  for (std::size_t i = 0; i < scope.size(); ++i) {
    base_.push_back(next);
    lo_.push_back(d.initialMin(scope[i]));
    int w = d.initialMax(scope[i]) - d.initialMin(scope[i]) + 1;
    for (int k = 0; k < w; ++k) litVar_.push_back(static_cast<int>(i));
    next += w;
  }
  base_.push_back(next);
}

int countInitialLiterals(const DomainStore& d, std::span<const VarId> scope) {
  int z = 0;
  for (VarId x : scope) z += d.initialSize(x);
  return z;
}

} // namespace ssgac
