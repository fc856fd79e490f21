#include "ssgac/constraint.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace ssgac {

const char* kindName(ConstraintKind k) {
  switch (k) {
  case ConstraintKind::Element: return "element";
  case ConstraintKind::LexLeq: return "lexleq";
  case ConstraintKind::RectNonOverlap: return "rect";
  case ConstraintKind::Table: return "table";
  case ConstraintKind::AllDifferent: return "alldiff";
  case ConstraintKind::BoolSumEq: return "boolsum";
  case ConstraintKind::LinearAux: return "linear";
  case ConstraintKind::And: return "and";
  case ConstraintKind::Disjunction: return "or";
  }
  return "?";
}

bool ConstraintDef::satisfied(std::span<const int> v) const {
  const int n = arity();
  switch (kind) {
  case ConstraintKind::Element: {
    int m = n - 2;
    int y = v[m];
    return y >= 0 && y < m && v[y] == v[m + 1];
  }
  case ConstraintKind::LexLeq: {
    int h = n / 2;
    for (int i = 0; i < h; ++i) {
      if (v[i] < v[h + i]) return true;
      if (v[i] > v[h + i]) return false;
    }
    return true;
  }
  case ConstraintKind::RectNonOverlap: {
    int si = params[0], sj = params[1];
    return v[0] + si <= v[1] || v[1] + sj <= v[0] || v[2] + si <= v[3] || v[3] + sj <= v[2];
  }
  case ConstraintKind::Table:
    for (const auto& s : table) {
      bool ok = std::all_of(s.begin(), s.end(), [&](const Literal& l) { return v[l.var] == l.val; });
      if (ok) return true;
    }
    return false;
  case ConstraintKind::AllDifferent:
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (v[i] == v[j]) return false;
    return true;
  case ConstraintKind::BoolSumEq: {
    int s = 0;
    for (int i = 0; i < n; ++i) s += v[i];
    return s == params[0];
  }
  case ConstraintKind::LinearAux: return v[0] == params[0] * v[1] + v[2];
  case ConstraintKind::And: return v[0] == ((v[1] != 0 && v[2] != 0) ? 1 : 0);
  case ConstraintKind::Disjunction:
    for (const auto& d : disjuncts) {
      bool ok = std::all_of(d.begin(), d.end(), [&](const Atom& a) { return a.holds(v); });
      if (ok) return true;
    }
    return false;
  }
  return false;
}

std::string ConstraintDef::describe() const {
  std::ostringstream os;
  os << kindName(kind) << "(";
  for (std::size_t i = 0; i < scope.size(); ++i) os << (i ? "," : "") << "v" << scope[i];
  os << ")";
  if (!params.empty()) {
    os << "[";
    for (std::size_t i = 0; i < params.size(); ++i) os << (i ? "," : "") << params[i];
    os << "]";
  }
  return os.str();
}

ConstraintDef makeElement(std::span<const VarId> vec, VarId index, VarId result) {
  ConstraintDef c{ConstraintKind::Element, {vec.begin(), vec.end()}, {}, {}, {}};
  c.scope.push_back(index);
  c.scope.push_back(result);
  return c;
}

ConstraintDef makeLexLeq(std::span<const VarId> x, std::span<const VarId> y) {
  if (x.size() != y.size()) throw std::invalid_argument("lexleq vectors differ in length");
  ConstraintDef c{ConstraintKind::LexLeq, {x.begin(), x.end()}, {}, {}, {}};
  c.scope.insert(c.scope.end(), y.begin(), y.end());
  return c;
}

ConstraintDef makeRectNonOverlap(VarId xi, VarId xj, VarId yi, VarId yj, int si, int sj) {
  return {ConstraintKind::RectNonOverlap, {xi, xj, yi, yj}, {si, sj}, {}, {}};
}

ConstraintDef makeTable(std::vector<VarId> scope, std::vector<LiteralSet> supports) {
  for (auto& s : supports) std::sort(s.begin(), s.end());
  return {ConstraintKind::Table, std::move(scope), {}, std::move(supports), {}};
}

ConstraintDef makeAllDifferent(std::vector<VarId> scope) {
  return {ConstraintKind::AllDifferent, std::move(scope), {}, {}, {}};
}

ConstraintDef makeBoolSumEq(std::vector<VarId> scope, int k) {
  return {ConstraintKind::BoolSumEq, std::move(scope), {k}, {}, {}};
}

ConstraintDef makeLinearAux(VarId aux, VarId p, VarId q, int coef) {
  return {ConstraintKind::LinearAux, {aux, p, q}, {coef}, {}, {}};
}

ConstraintDef makeAnd(VarId b, VarId p, VarId q) {
  return {ConstraintKind::And, {b, p, q}, {}, {}, {}};
}

ConstraintDef makeDisjunction(std::vector<VarId> scope, std::vector<Conjunction> disjuncts) {
  return {ConstraintKind::Disjunction, std::move(scope), {}, {}, std::move(disjuncts)};
}

ScopeDomains scopeDomains(const DomainStore& d, std::span<const VarId> scope) {
  ScopeDomains out;
  out.reserve(scope.size());
  for (VarId x : scope) out.push_back(d.values(x));
  return out;
}

ScopeDomains initialScopeDomains(const DomainStore& d, std::span<const VarId> scope) {
  ScopeDomains out;
  out.reserve(scope.size());
  for (VarId x : scope) out.push_back(d.initialValues(x));
  return out;
}

bool hasDisjuncts(ConstraintKind k) {
  switch (k) {
  case ConstraintKind::Element:
  case ConstraintKind::LexLeq:
  case ConstraintKind::RectNonOverlap:
  case ConstraintKind::Table:
  case ConstraintKind::Disjunction: return true;
  default: return false;
  }
}

std::vector<Conjunction> disjunctsOf(const ConstraintDef& c) {
  std::vector<Conjunction> out;
  const int n = c.arity();
  switch (c.kind) {
  case ConstraintKind::Element: {
    int m = n - 2;
    for (int i = 0; i < m; ++i) out.push_back({Atom::eqConst(m, i), Atom::eq(i, m + 1)});
    break;
  }
  case ConstraintKind::LexLeq: {
    int h = n / 2;
    for (int i = 0; i <= h; ++i) {
      Conjunction d;
      for (int j = 0; j < i; ++j) d.push_back(Atom::eq(j, h + j));
      if (i < h) d.push_back(Atom::leqOffset(i, 1, h + i));
      out.push_back(std::move(d));
    }
    break;
  }
  case ConstraintKind::RectNonOverlap: {
    int si = c.params[0], sj = c.params[1];
    out.push_back({Atom::leqOffset(0, si, 1)});
    out.push_back({Atom::leqOffset(1, sj, 0)});
    out.push_back({Atom::leqOffset(2, si, 3)});
    out.push_back({Atom::leqOffset(3, sj, 2)});
    break;
  }
  case ConstraintKind::Table:
    for (const auto& s : c.table) {
      Conjunction d;
      for (const Literal& l : s) d.push_back(Atom::eqConst(l.var, l.val));
      out.push_back(std::move(d));
    }
    break;
  case ConstraintKind::Disjunction: out = c.disjuncts; break;
  default: throw std::invalid_argument(std::string("no disjunctive form for ") + kindName(c.kind));
  }
  return out;
}

} // namespace ssgac
