#include "ssgac/model.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>
#include <stdexcept>

namespace ssgac {

VarId Model::addVariable(std::string name, std::vector<int> domain) {
  if (domain.empty()) throw std::invalid_argument("empty domain for " + name);
  std::sort(domain.begin(), domain.end());
  domain.erase(std::unique(domain.begin(), domain.end()), domain.end());
  if (domain.front() < 0) throw std::invalid_argument("negative value in domain of " + name);
  variables.push_back({std::move(name), std::move(domain)});
  return static_cast<VarId>(variables.size() - 1);
}

VarId Model::addVariable(std::string name, int lo, int hi) {
  if (lo > hi) throw std::invalid_argument("empty domain for " + name);
  std::vector<int> d(hi - lo + 1);
  std::iota(d.begin(), d.end(), lo);
  return addVariable(std::move(name), std::move(d));
}

void Model::addConstraint(ConstraintDef c, bool isTarget) {
  constraints.push_back(std::move(c));
  target.push_back(isTarget ? 1 : 0);
}

std::vector<std::vector<int>> Model::domains() const {
  std::vector<std::vector<int>> out;
  out.reserve(variables.size());
  for (const auto& v : variables) out.push_back(v.domain);
  return out;
}

int Model::countKind(ConstraintKind k) const {
  return static_cast<int>(std::count_if(constraints.begin(), constraints.end(),
                                        [&](const ConstraintDef& c) { return c.kind == k; }));
}

Model buildQG3(int n) {
  if (n < 2) throw std::invalid_argument("qg3 needs n >= 2");
  Model m;
  m.kind = "qg3";
  m.id = "qg3-" + std::to_string(n);
  m.params["n"] = n;
  std::vector<VarId> qq(n * n), aux(n * n), cst(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      qq[i * n + j] = m.addVariable("qq[" + std::to_string(i) + "," + std::to_string(j) + "]", 0, n - 1);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      aux[i * n + j] = m.addVariable("aux[" + std::to_string(i) + "," + std::to_string(j) + "]", 0, n * n - 1);
  for (int i = 0; i < n; ++i) cst[i] = m.addVariable("const" + std::to_string(i), i, i);

  for (int i = 0; i < n; ++i) {
    std::vector<VarId> row, col;
    for (int j = 0; j < n; ++j) {
      row.push_back(qq[i * n + j]);
      col.push_back(qq[j * n + i]);
    }
    m.addConstraint(makeAllDifferent(row), false);
    m.addConstraint(makeAllDifferent(col), false);
  }
  std::vector<VarId> diag;
  for (int i = 0; i < n; ++i) diag.push_back(qq[i * n + i]);
  m.addConstraint(makeAllDifferent(diag), false);

  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m.addConstraint(makeLinearAux(aux[i * n + j], qq[i * n + j], qq[j * n + i], n), false);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m.addConstraint(makeElement(qq, aux[i * n + j], cst[i]), true);

  m.branchOrder = qq;
  m.branchOrder.insert(m.branchOrder.end(), aux.begin(), aux.end());
  return m;
}

Model buildBIBD(int n) {
  if (n < 1) throw std::invalid_argument("bibd needs n >= 1");
  const int v = 4 * n + 3, b = v, r = 2 * n + 1, k = r, lambda = n;
  Model m;
  m.kind = "bibd";
  m.id = "bibd-" + std::to_string(n);
  m.params["n"] = n;
  std::vector<std::vector<VarId>> x(v, std::vector<VarId>(b));
  for (int i = 0; i < v; ++i)
    for (int j = 0; j < b; ++j) x[i][j] = m.addVariable("m[" + std::to_string(i) + "," + std::to_string(j) + "]", 0, 1);
  for (int i = 0; i < v; ++i)
    for (int j = 0; j < b; ++j) m.branchOrder.push_back(x[i][j]);

  for (int i = 0; i < v; ++i) m.addConstraint(makeBoolSumEq(x[i], r), false);
  for (int j = 0; j < b; ++j) {
    std::vector<VarId> col(v);
    for (int i = 0; i < v; ++i) col[i] = x[i][j];
    m.addConstraint(makeBoolSumEq(col, k), false);
  }
  for (int i = 0; i < v; ++i)
    for (int l = i + 1; l < v; ++l) {
      std::vector<VarId> prod(b);
      for (int j = 0; j < b; ++j) {
        prod[j] = m.addVariable("and[" + std::to_string(i) + "," + std::to_string(l) + "," + std::to_string(j) + "]", 0, 1);
        m.addConstraint(makeAnd(prod[j], x[i][j], x[l][j]), false);
        m.branchOrder.push_back(prod[j]);
      }
      m.addConstraint(makeBoolSumEq(prod, lambda), false);
    }
  for (int i = 0; i + 1 < v; ++i) m.addConstraint(makeLexLeq(x[i], x[i + 1]), true);
  for (int j = 0; j + 1 < b; ++j) {
    std::vector<VarId> c0(v), c1(v);
    for (int i = 0; i < v; ++i) {
      c0[i] = x[i][j];
      c1[i] = x[i][j + 1];
    }
    m.addConstraint(makeLexLeq(c0, c1), true);
  }
  return m;
}

Model buildRectPack(int n, int width, int height) {
  if (n < 1 || width < n || height < n) throw std::invalid_argument("rectpack needs width >= n and height >= n");
  Model m;
  m.kind = "rectpack";
  m.id = "rectpack-" + std::to_string(n) + "-" + std::to_string(width) + "-" + std::to_string(height);
  m.params["n"] = n;
  m.params["w"] = width;
  m.params["h"] = height;
  std::vector<VarId> x(n + 1), y(n + 1);
  for (int i = 1; i <= n; ++i) {
    int xmax = width - i, ymax = height - i;
    if (i == n) {
      xmax = (width - n) / 2;
      ymax = (height - n) / 2;
    }
    x[i] = m.addVariable("x" + std::to_string(i), 0, xmax);
    y[i] = m.addVariable("y" + std::to_string(i), 0, ymax);
  }
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) m.addConstraint(makeRectNonOverlap(x[i], x[j], y[i], y[j], i, j), true);
  for (int i = n; i >= 1; --i) {
    m.branchOrder.push_back(x[i]);
    m.branchOrder.push_back(y[i]);
  }
  return m;
}

Model buildTableModel(const TableModelParams& p) {
  if (p.variables < p.arity || p.arity < 1 || p.domainSize < 1 || p.supports < 0)
    throw std::invalid_argument("bad table model parameters");
  Model m;
  m.kind = "table";
  m.id = "table-" + std::to_string(p.variables) + "-" + std::to_string(p.domainSize) + "-" +
         std::to_string(p.constraints) + "-" + std::to_string(p.arity) + "-s" + std::to_string(p.seed);
  m.params["vars"] = p.variables;
  m.params["d"] = p.domainSize;
  m.params["constraints"] = p.constraints;
  m.params["arity"] = p.arity;
  m.params["supports"] = p.supports;
  std::mt19937_64 rng(p.seed);
  for (int i = 0; i < p.variables; ++i) m.addVariable("v" + std::to_string(i), 0, p.domainSize - 1);
  std::vector<VarId> all(p.variables);
  std::iota(all.begin(), all.end(), 0);
  for (int c = 0; c < p.constraints; ++c) {
    std::vector<VarId> pool = all;
    std::shuffle(pool.begin(), pool.end(), rng);
    std::vector<VarId> scope(pool.begin(), pool.begin() + p.arity);
    std::sort(scope.begin(), scope.end());
    std::set<LiteralSet> sups;
    for (int s = 0; s < p.supports; ++s) {
      LiteralSet sup;
      for (int i = 0; i < p.arity; ++i) {
        if (static_cast<int>(rng() % 100) < p.omitPercent) continue;
        sup.push_back({i, static_cast<int>(rng() % p.domainSize)});
      }
      sups.insert(sup);
    }
    m.addConstraint(makeTable(scope, {sups.begin(), sups.end()}), true);
  }
  m.branchOrder = all;
  return m;
}

namespace {
int param(const std::map<std::string, int>& ps, const std::string& key, int fallback, bool required = false) {
  auto it = ps.find(key);
  if (it != ps.end()) return it->second;
  if (required) throw std::invalid_argument("missing parameter " + key);
  return fallback;
}
} // namespace

Model buildModel(const std::string& kind, const std::map<std::string, int>& params, std::uint64_t seed) {
  if (kind == "qg3") return buildQG3(param(params, "n", 0, true));
  if (kind == "bibd") return buildBIBD(param(params, "n", 0, true));
  if (kind == "rectpack") {
    int n = param(params, "n", 0, true);
    return buildRectPack(n, param(params, "w", n), param(params, "h", n));
  }
  if (kind == "table") {
    TableModelParams p;
    p.variables = param(params, "vars", p.variables);
    p.domainSize = param(params, "d", p.domainSize);
    p.constraints = param(params, "constraints", p.constraints);
    p.arity = param(params, "arity", p.arity);
    p.supports = param(params, "supports", p.supports);
    p.omitPercent = param(params, "omit", p.omitPercent);
    p.seed = seed;
    return buildTableModel(p);
  }
  throw std::invalid_argument("unknown model kind " + kind);
}

} // namespace ssgac
