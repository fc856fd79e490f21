#include "ssgac/sources.hpp"

#include <algorithm>
#include <stdexcept>

namespace ssgac {

const char* instantiationName(Instantiation i) {
  switch (i) {
  case Instantiation::Specific: return "specific";
  case Instantiation::List: return "list";
  case Instantiation::NDList: return "ndlist";
  case Instantiation::Long: return "long";
  }
  return "?";
}

bool ElementSource::find(const DomainStore& d, int var, int val, LiteralSet& out) {
  out.clear();
  const int m = static_cast<int>(scope_.size()) - 2;
  const int y = m, z = m + 1;
  ForcedView fv(d, scope_, var, val);
  int ylo = std::max(0, fv.min(y)), yhi = std::min(m - 1, fv.max(y));
  for (int i = ylo; i <= yhi; ++i) {
    if (!fv.contains(y, i)) continue;
    for (int j = fv.min(i); j <= fv.max(i); ++j) {
      if (fv.contains(i, j) && fv.contains(z, j)) {
        out = {{i, j}, {y, i}, {z, j}};
        return true;
      }
    }
  }
  return false;
}

bool LexSource::find(const DomainStore& d, int var, int val, LiteralSet& out) {
  out.clear();
  const int h = static_cast<int>(scope_.size()) / 2;
  ForcedView fv(d, scope_, var, val);
  int last = h - 1;
  for (int i = 0; i < h; ++i) {
    int mx = fv.min(i), my = fv.max(h + i);
    if (mx > my) return false;
    if (mx < my) {
      last = i;
      break;
    }
  }
  for (int j = 0; j <= last; ++j) out.push_back({j, fv.min(j)});
  for (int j = 0; j <= last; ++j) out.push_back({h + j, fv.max(h + j)});
  return true;
}

bool RectSource::find(const DomainStore& d, int var, int val, LiteralSet& out) {
  out.clear();
  ForcedView fv(d, scope_, var, val);
  struct Disjunct {
    int a, c, b;
  };
  const Disjunct ds[4] = {{0, si_, 1}, {1, sj_, 0}, {2, si_, 3}, {3, sj_, 2}};
  auto witness = [&](const Disjunct& k) {
    out = {{k.a, fv.min(k.a)}, {k.b, fv.max(k.b)}};
    std::sort(out.begin(), out.end());
  };
  for (const auto& k : ds) {
    if (d.max(scope_[k.a]) + k.c <= d.min(scope_[k.b])) {
      if (stable_) witness(k);
      return true;
    }
  }
  for (const auto& k : ds) {
    if (fv.min(k.a) + k.c <= fv.max(k.b)) {
      witness(k);
      return true;
    }
  }
  return false;
}

bool TableScanSource::find(const DomainStore& d, int var, int val, LiteralSet& out) {
  ForcedView fv(d, scope_, var, val);
  for (const auto& s : table_) {
    if (std::all_of(s.begin(), s.end(), [&](const Literal& l) { return fv.contains(l.var, l.val); })) {
      out = s;
      return true;
    }
  }
  out.clear();
  return false;
}

DisjunctSearchSource::DisjunctSearchSource(const ConstraintDef& c) : scope_(c.scope), disjuncts_(disjunctsOf(c)) {
  vals_.assign(scope_.size(), 0);
  for (const Conjunction& atoms : disjuncts_) {
    std::vector<int> vars;
    for (const Atom& at : atoms) {
      vars.push_back(at.a);
      if (at.op != Atom::Op::EqConst) vars.push_back(at.b);
    }
    std::sort(vars.begin(), vars.end());
    vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
    std::vector<std::vector<const Atom*>> check(vars.size());
    for (const Atom& at : atoms) {
      int last = at.op == Atom::Op::EqConst ? at.a : std::max(at.a, at.b);
      check[std::lower_bound(vars.begin(), vars.end(), last) - vars.begin()].push_back(&at);
    }
    vars_.push_back(std::move(vars));
    checkAt_.push_back(std::move(check));
  }
}

bool DisjunctSearchSource::search(const ForcedView& fv, const Conjunction& atoms, std::size_t k) {
  const auto& vars = vars_[current_];
  if (k == vars.size()) return true;
  int x = vars[k];
  for (int v = fv.min(x); v <= fv.max(x); ++v) {
    if (!fv.contains(x, v)) continue;
    vals_[x] = v;
    const auto& checks = checkAt_[current_][k];
    if (std::all_of(checks.begin(), checks.end(), [&](const Atom* a) { return a->holds(vals_); }) &&
        search(fv, atoms, k + 1))
      return true;
  }
  return false;
}

bool DisjunctSearchSource::find(const DomainStore& d, int var, int val, LiteralSet& out) {
  out.clear();
  ForcedView fv(d, scope_, var, val);
  for (current_ = 0; current_ < disjuncts_.size(); ++current_) {
    if (search(fv, disjuncts_[current_], 0)) {
      for (int x : vars_[current_]) out.push_back({x, vals_[x]});
      return true;
    }
  }
  return false;
}

ListSource::ListSource(const ConstraintDef& c, const DomainStore& d, std::shared_ptr<const SupportListTable> table)
    : scope_(c.scope), table_(std::move(table)), lits_(d, c.scope), listPos_(lits_.numLiterals(), 0) {}

bool ListSource::valid(const DomainStore& d, const LiteralSet& s) const {
  for (const Literal& l : s)
    if (!d.contains(scope_[l.var], l.val)) return false;
  return true;
}

bool ListSource::find(const DomainStore& d, int var, int val, LiteralSet& out) {
  const auto& list = table_->list(var, val);
  int& pos = listPos_[lits_.encode(var, val)];
  const int n = static_cast<int>(list.size());
  for (int j = pos; j < n; ++j) {
    if (valid(d, table_->support(list[j]))) {
      pos = j;
      out = table_->support(list[j]);
      return true;
    }
  }
  for (int j = 0; j < pos && j < n; ++j) {
    if (valid(d, table_->support(list[j]))) {
      pos = j;
      out = table_->support(list[j]);
      return true;
    }
  }
  out.clear();
  return false;
}

NDListSource::NDListSource(const ConstraintDef& c, const DomainStore& d, std::shared_ptr<const NDListTable> table)
    : scope_(c.scope), table_(std::move(table)), lits_(d, c.scope), listPos_(lits_.numLiterals(), 0) {}

bool NDListSource::find(const DomainStore& d, int var, int val, LiteralSet& out) {
  int& pos = listPos_[lits_.encode(var, val)];
  visited_ = 0;
  auto scan = [&](int j, int end) {
    while (j < end) {
      ++visited_;
      const LiteralSet& s = table_->support(j);
      auto nd = table_->next(j);
      bool ok = true;
      for (std::size_t k = 0; k < s.size(); ++k) {
        const Literal& l = s[k];
        if (!d.contains(scope_[l.var], l.val) || (l.var == var && l.val != val)) {
          j = nd[k];
          ok = false;
          break;
        }
      }
      if (ok) return j;
    }
    return -1;
  };
  int j = scan(pos, table_->size());
  if (j < 0) j = scan(0, pos);
  if (j < 0) {
    out.clear();
    return false;
  }
  pos = j;
  out = table_->support(j);
  return true;
}

bool LongSource::find(const DomainStore& d, int var, int val, LiteralSet& out) {
  if (!inner_->find(d, var, val, tmp_)) {
    out.clear();
    return false;
  }
  out = longify(tmp_, d, scope_, Literal{var, val});
  return true;
}

std::vector<LiteralSet> listSupportsFor(const ConstraintDef& c, const DomainStore& d, std::size_t cap) {
  if (c.kind == ConstraintKind::Table) {
    std::vector<LiteralSet> out;
    for (const auto& s : c.table) {
      bool ok = std::all_of(s.begin(), s.end(), [&](const Literal& l) { return d.inInitial(c.scope[l.var], l.val); });
      if (ok) out.push_back(s);
    }
    return out;
  }
  auto ds = disjunctsOf(c);
  return disjunctionSupportSet(ds, initialScopeDomains(d, c.scope), cap);
}

std::unique_ptr<SupportSource> makeSpecificSource(const ConstraintDef& c, bool stable) {
  switch (c.kind) {
  case ConstraintKind::Element: return std::make_unique<ElementSource>(c);
  case ConstraintKind::LexLeq: return std::make_unique<LexSource>(c);
  case ConstraintKind::RectNonOverlap: return std::make_unique<RectSource>(c, stable);
  case ConstraintKind::Table: return std::make_unique<TableScanSource>(c);
  case ConstraintKind::Disjunction: return std::make_unique<DisjunctSearchSource>(c);
  default: throw std::invalid_argument(std::string("no support source for ") + kindName(c.kind));
  }
}

std::unique_ptr<SupportSource> makeSource(const ConstraintDef& c, const DomainStore& d, Instantiation inst,
                                          bool stable, std::size_t cap) {
  switch (inst) {
  case Instantiation::Specific: return makeSpecificSource(c, stable);
  case Instantiation::List: {
    auto table = std::make_shared<SupportListTable>(initialScopeDomains(d, c.scope), listSupportsFor(c, d, cap));
    return std::make_unique<ListSource>(c, d, std::move(table));
  }
  case Instantiation::NDList: {
    auto table = std::make_shared<NDListTable>(listSupportsFor(c, d, cap));
    return std::make_unique<NDListSource>(c, d, std::move(table));
  }
  case Instantiation::Long: return std::make_unique<LongSource>(c, makeSpecificSource(c, stable));
  }
  throw std::invalid_argument("unknown instantiation");
}

} // namespace ssgac
