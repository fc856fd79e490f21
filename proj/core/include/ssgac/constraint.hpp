#pragma once

#include <span>
#include <string>
#include <vector>

#include "ssgac/domain_store.hpp"
#include "ssgac/literal.hpp"

namespace ssgac {

enum class ConstraintKind {
  Element,        // scope = x0..x{m-1}, y, z : x[y] = z
  LexLeq,         // scope = x0..x{n-1}, y0..y{n-1} : X <=lex Y
  RectNonOverlap, // scope = xi, xj, yi, yj; params = {si, sj}
  Table,          // satisfied iff some listed short support is contained
  AllDifferent,
  BoolSumEq,      // params = {k}
  LinearAux,      // scope = aux, p, q; params = {c} : aux = c*p + q
  And,            // scope = b, p, q : b = p && q
  Disjunction,    // satisfied iff some disjunct holds
};

const char* kindName(ConstraintKind k);

// Atoms over scope-local variables.
struct Atom {
  enum class Op { EqConst, Eq, LeqOffset };
  Op op;
  int a;
  int b;     // EqConst: unused
  int c = 0; // EqConst: constant; LeqOffset: a + c <= b

  static Atom eqConst(int a, int v) { return {Op::EqConst, a, -1, v}; }
  static Atom eq(int a, int b) { return {Op::Eq, a, b, 0}; }
  static Atom leqOffset(int a, int c, int b) { return {Op::LeqOffset, a, b, c}; }

  bool holds(std::span<const int> vals) const {
    switch (op) {
    case Op::EqConst: return vals[a] == c;
    case Op::Eq: return vals[a] == vals[b];
    case Op::LeqOffset: return vals[a] + c <= vals[b];
    }
    return false;
  }
};

using Conjunction = std::vector<Atom>;

struct ConstraintDef {
  ConstraintKind kind;
  std::vector<VarId> scope;
  std::vector<int> params;
  std::vector<LiteralSet> table;
  std::vector<Conjunction> disjuncts;

  int arity() const { return static_cast<int>(scope.size()); }
  // vals holds one value per scope position.
  bool satisfied(std::span<const int> vals) const;
  std::string describe() const;
};

ConstraintDef makeElement(std::span<const VarId> vec, VarId index, VarId result);
ConstraintDef makeLexLeq(std::span<const VarId> x, std::span<const VarId> y);
ConstraintDef makeRectNonOverlap(VarId xi, VarId xj, VarId yi, VarId yj, int si, int sj);
ConstraintDef makeTable(std::vector<VarId> scope, std::vector<LiteralSet> supports);
ConstraintDef makeAllDifferent(std::vector<VarId> scope);
ConstraintDef makeBoolSumEq(std::vector<VarId> scope, int k);
ConstraintDef makeLinearAux(VarId aux, VarId p, VarId q, int coef);
ConstraintDef makeAnd(VarId b, VarId p, VarId q);
ConstraintDef makeDisjunction(std::vector<VarId> scope, std::vector<Conjunction> disjuncts);

// Per scope position, ascending values.
using ScopeDomains = std::vector<std::vector<int>>;
ScopeDomains scopeDomains(const DomainStore& d, std::span<const VarId> scope);
ScopeDomains initialScopeDomains(const DomainStore& d, std::span<const VarId> scope);

// True for kinds with a disjunctive decomposition (element, lex, rect, table, disjunction).
bool hasDisjuncts(ConstraintKind k);
// Throws std::invalid_argument for kinds without one.
std::vector<Conjunction> disjunctsOf(const ConstraintDef& c);

} // namespace ssgac
